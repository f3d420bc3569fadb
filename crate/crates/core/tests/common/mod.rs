//! Brute-force reference implementations, kept independent of the library:
//! plain `Vec<usize>` tables, triple loops, and relabelling over
//! `itertools` permutations.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;

pub type Table = Vec<usize>;

/// Every table on `n` elements, in lexicographic order.
pub fn all_tables(n: usize) -> Vec<Table> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let mut t = vec![0; cells];
            for slot in t.iter_mut().rev() {
                *slot = code % n;
                code /= n;
            }
            t
        })
        .collect()
}

pub fn at(t: &Table, n: usize, x: usize, y: usize) -> usize {
    t[x * n + y]
}

pub fn associative(t: &Table, n: usize) -> bool {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if at(t, n, at(t, n, x, y), z) != at(t, n, x, at(t, n, y, z)) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn commutative(t: &Table, n: usize) -> bool {
    (0..n).all(|x| (0..n).all(|y| at(t, n, x, y) == at(t, n, y, x)))
}

pub fn idempotent(t: &Table, n: usize) -> bool {
    (0..n).all(|x| at(t, n, x, x) == x)
}

pub fn identity(t: &Table, n: usize) -> Option<usize> {
    (0..n).find(|&e| (0..n).all(|x| at(t, n, e, x) == x && at(t, n, x, e) == x))
}

pub fn distributive(mul: &Table, add: &Table, n: usize) -> bool {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let left = at(mul, n, x, at(add, n, y, z))
                    == at(add, n, at(mul, n, x, y), at(mul, n, x, z));
                let right = at(mul, n, at(add, n, y, z), x)
                    == at(add, n, at(mul, n, y, x), at(mul, n, z, x));
                if !left || !right {
                    return false;
                }
            }
        }
    }
    true
}

pub fn has_zero(add: &Table, mul: &Table, n: usize) -> bool {
    (0..n).any(|z| {
        (0..n).all(|x| at(add, n, z, x) == x && at(add, n, x, z) == x)
            && (0..n).all(|x| at(mul, n, x, z) == z && at(mul, n, z, x) == z)
    })
}

pub fn transpose(t: &Table, n: usize) -> Table {
    (0..n * n).map(|i| at(t, n, i % n, i / n)).collect()
}

/// `r(p[a], p[b]) = p[t(a, b)]`.
pub fn relabel(t: &Table, n: usize, p: &[usize]) -> Table {
    let mut r = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            r[p[a] * n + p[b]] = p[at(t, n, a, b)];
        }
    }
    r
}

pub fn perms(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

pub fn canonical(t: &Table, n: usize, anti: bool) -> Table {
    let mut sources = vec![t.clone()];
    if anti {
        sources.push(transpose(t, n));
    }
    perms(n)
        .iter()
        .flat_map(|p| sources.iter().map(move |s| relabel(s, n, p)))
        .min()
        .unwrap()
}

/// Canonical representatives of the associative tables satisfying `keep`.
pub fn semigroup_classes(n: usize, anti: bool, keep: impl Fn(&Table) -> bool) -> BTreeSet<Table> {
    all_tables(n)
        .into_iter()
        .filter(|t| associative(t, n) && keep(t))
        .map(|t| canonical(&t, n, anti))
        .collect()
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Flags {
    pub with_zero: bool,
    pub with_one: bool,
    pub ai: bool,
    pub commutative_mul: bool,
}

/// All labelled semirings on `n` elements.
pub fn labelled_semirings(n: usize) -> Vec<(Table, Table)> {
    let tables = all_tables(n);
    let sgs: Vec<&Table> = tables.iter().filter(|t| associative(t, n)).collect();
    let adds: Vec<&Table> = sgs.iter().copied().filter(|t| commutative(t, n)).collect();
    let mut out = Vec::new();
    for add in &adds {
        for mul in &sgs {
            if distributive(mul, add, n) {
                out.push(((*add).clone(), (*mul).clone()));
            }
        }
    }
    out
}

pub fn passes(add: &Table, mul: &Table, n: usize, f: Flags) -> bool {
    (!f.ai || idempotent(add, n))
        && (!f.commutative_mul || commutative(mul, n))
        && (!f.with_one || identity(mul, n).is_some())
        && (!f.with_zero || has_zero(add, mul, n))
}

/// Number of classes of the given labelled semirings under simultaneous
/// relabelling (and simultaneous transposition of `mul` when `anti`).
pub fn semiring_classes(pairs: &[(Table, Table)], n: usize, anti: bool, f: Flags) -> usize {
    let ps = perms(n);
    pairs
        .iter()
        .filter(|(a, m)| passes(a, m, n, f))
        .map(|(a, m)| {
            let mut variants = vec![m.clone()];
            if anti {
                variants.push(transpose(m, n));
            }
            ps.iter()
                .flat_map(|p| variants.iter().map(move |v| (relabel(a, n, p), relabel(v, n, p))))
                .min()
                .unwrap()
        })
        .collect::<BTreeSet<_>>()
        .len()
}

pub fn all_flags() -> impl Iterator<Item = Flags> {
    (0u8..16).map(|b| Flags {
        with_zero: b & 1 != 0,
        with_one: b & 2 != 0,
        ai: b & 4 != 0,
        commutative_mul: b & 8 != 0,
    })
}
