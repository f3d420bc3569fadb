//! Semigroups of small order up to isomorphism (or isomorphism and
//! anti-isomorphism), by orderly generation.
//!
//! Tables are filled cell by cell in row-major order. After every placement
//! two things are checked:
//!
//! * associativity, for every triple whose products are all known, and
//! * canonicity: for each relabelling `σ` (and each `σ` applied to the
//!   transpose in anti mode) that is still tied with the partial table, the
//!   relabelled table is compared with the partial table position by
//!   position. A determined smaller entry prunes the node; a determined larger
//!   entry drops `σ` for the whole subtree.
//!
//! Each completed table is therefore the lexicographically least member of its
//! class, and classes come out in increasing order.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{aut_star_group, automorphism_group, PermGroup};
use crate::perm::{check_order, symmetric_group, Permutation};
use crate::table::{Equivalence, OpTable, MAX_ORDER};

const UNKNOWN: u8 = u8::MAX;

/// Restrictions on the semigroups to enumerate; `None` leaves a property free.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemigroupConstraint {
    pub commutative: Option<bool>,
    pub idempotent: Option<bool>,
    pub with_identity: Option<bool>,
}

impl SemigroupConstraint {
    pub fn commutative() -> Self {
        SemigroupConstraint {
            commutative: Some(true),
            ..Default::default()
        }
    }

    pub fn semilattice() -> Self {
        SemigroupConstraint {
            commutative: Some(true),
            idempotent: Some(true),
            ..Default::default()
        }
    }

    pub fn admits(&self, flags: &SemigroupFlags) -> bool {
        let ok = |want: Option<bool>, have: bool| want.is_none_or(|w| w == have);
        ok(self.commutative, flags.commutative)
            && ok(self.idempotent, flags.idempotent)
            && ok(self.with_identity, flags.has_identity)
    }
}

impl fmt::Display for SemigroupConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<bool>| match v {
            None => "any",
            Some(true) => "yes",
            Some(false) => "no",
        };
        write!(
            f,
            "commutative={} idempotent={} with_identity={}",
            show(self.commutative),
            show(self.idempotent),
            show(self.with_identity)
        )
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SemigroupFlags {
    pub commutative: bool,
    pub idempotent: bool,
    pub has_identity: bool,
    /// A multiplicative zero exists.
    pub has_zero: bool,
}

impl SemigroupFlags {
    pub fn of(t: &OpTable) -> Self {
        let n = t.order();
        SemigroupFlags {
            commutative: t.is_commutative(),
            idempotent: t.is_idempotent(),
            has_identity: t.identity_element().is_some(),
            has_zero: (0..n).any(|z| (0..n).all(|x| t.get(x, z) == z && t.get(z, x) == z)),
        }
    }
}

/// One semigroup per class, in canonical form, with its symmetry groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupClass {
    pub table: OpTable,
    pub aut: PermGroup,
    pub aut_star: PermGroup,
    pub flags: SemigroupFlags,
}

impl SemigroupClass {
    pub fn from_canonical(table: OpTable) -> Self {
        SemigroupClass {
            aut: automorphism_group(&table),
            aut_star: aut_star_group(&table),
            flags: SemigroupFlags::of(&table),
            table,
        }
    }
}

/// How far the engine is willing to go before reporting a capability error.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Reach {
    /// Unconstrained censuses to order 6, commutative or idempotent ones to
    /// 7, semilattices to 8.
    #[default]
    Standard,
    /// Unconstrained censuses to order 7 and everything else to 8.
    LongRun,
}

impl Reach {
    pub fn max_order(self, c: &SemigroupConstraint) -> usize {
        let pruned =
            usize::from(c.commutative == Some(true)) + usize::from(c.idempotent == Some(true));
        match (self, pruned) {
            (Reach::Standard, 0) => 6,
            (Reach::Standard, 1) => 7,
            (Reach::LongRun, 0) => 7,
            _ => MAX_ORDER,
        }
    }

    pub fn check(self, n: usize, c: &SemigroupConstraint) -> Result<()> {
        check_order(n)?;
        let max = self.max_order(c);
        if n > max {
            return Err(Error::Unsupported(format!(
                "semigroup census of order {n} ({c}) exceeds the supported order {max}{}",
                if self == Reach::Standard {
                    "; pass the long-run option to attempt it"
                } else {
                    ""
                }
            )));
        }
        Ok(())
    }
}

pub fn enumerate_semigroups(
    n: usize,
    c: &SemigroupConstraint,
    mode: Equivalence,
) -> Result<Vec<SemigroupClass>> {
    enumerate_semigroups_with(n, c, mode, Reach::Standard)
}

pub fn enumerate_semigroups_with(
    n: usize,
    c: &SemigroupConstraint,
    mode: Equivalence,
    reach: Reach,
) -> Result<Vec<SemigroupClass>> {
    Ok(canonical_semigroup_tables(n, c, mode, reach)?
        .into_par_iter()
        .map(SemigroupClass::from_canonical)
        .collect())
}

pub fn count_semigroups(n: usize, c: &SemigroupConstraint, mode: Equivalence) -> Result<usize> {
    Ok(canonical_semigroup_tables(n, c, mode, Reach::Standard)?.len())
}

/// Canonical tables only, sorted ascending.
pub fn canonical_semigroup_tables(
    n: usize,
    c: &SemigroupConstraint,
    mode: Equivalence,
    reach: Reach,
) -> Result<Vec<OpTable>> {
    reach.check(n, c)?;
    let search = Search::new(n, c, mode)?;
    let mut frontier = Vec::new();
    let mut root = search.root();
    let cands = search.initial_candidates();
    search.descend(&mut root, &cands, 0, n.min(n * n), &mut |node| frontier.push(node));

    let mut tables: Vec<OpTable> = frontier
        .into_par_iter()
        .flat_map_iter(|mut node| {
            let mut found = Vec::new();
            let cands = std::mem::take(&mut node.cands);
            search.descend(&mut node.cells, &cands, node.pos, n * n, &mut |leaf| {
                found.push(OpTable::from_cells(n, &leaf.cells[..n * n]))
            });
            found
        })
        .filter(|t| c.admits(&SemigroupFlags::of(t)))
        .collect();
    tables.sort_unstable();
    debug_assert!(tables.windows(2).all(|w| w[0] < w[1]));
    Ok(tables)
}

/// A relabelling still tied with the partial table, and the first position
/// whose comparison is not yet decided.
#[derive(Clone, Copy, Debug)]
struct Candidate {
    perm: u16,
    transposed: bool,
    resume: u8,
}

struct Node {
    cells: [u8; MAX_ORDER * MAX_ORDER],
    cands: Vec<Candidate>,
    pos: usize,
}

enum Scan {
    Smaller,
    Larger,
    Open(u8),
}

struct Search {
    n: usize,
    commutative: bool,
    idempotent: bool,
    mode: Equivalence,
    perms: &'static [Permutation],
    inverses: Vec<Permutation>,
}

impl Search {
    fn new(n: usize, c: &SemigroupConstraint, mode: Equivalence) -> Result<Self> {
        let perms = symmetric_group(n)?;
        Ok(Search {
            n,
            commutative: c.commutative == Some(true),
            idempotent: c.idempotent == Some(true),
            mode,
            perms,
            inverses: perms.iter().map(Permutation::inverse).collect(),
        })
    }

    fn root(&self) -> [u8; MAX_ORDER * MAX_ORDER] {
        let n = self.n;
        let mut cells = [UNKNOWN; MAX_ORDER * MAX_ORDER];
        if self.idempotent {
            for x in 0..n {
                cells[x * n + x] = x as u8;
            }
        }
        cells
    }

    fn initial_candidates(&self) -> Vec<Candidate> {
        let mut out = Vec::new();
        for transposed in [false, true] {
            if transposed && self.mode == Equivalence::Iso {
                break;
            }
            for (i, p) in self.perms.iter().enumerate() {
                if !transposed && p.is_identity() {
                    continue;
                }
                out.push(Candidate {
                    perm: i as u16,
                    transposed,
                    resume: 0,
                });
            }
        }
        out
    }

    /// Depth-first search from `pos`; every node that reaches `limit` with all
    /// earlier cells filled is handed to `sink`.
    fn descend(
        &self,
        cells: &mut [u8; MAX_ORDER * MAX_ORDER],
        cands: &[Candidate],
        mut pos: usize,
        limit: usize,
        sink: &mut dyn FnMut(Node),
    ) {
        let n = self.n;
        let size = n * n;
        while pos < size && cells[pos] != UNKNOWN {
            pos += 1;
        }
        if pos >= limit {
            sink(Node {
                cells: *cells,
                cands: cands.to_vec(),
                pos,
            });
            return;
        }
        let (x, y) = (pos / n, pos % n);
        let mirror = (self.commutative && x != y).then_some(y * n + x);
        let mut next = Vec::with_capacity(cands.len());
        for v in 0..n as u8 {
            cells[pos] = v;
            if let Some(m) = mirror {
                cells[m] = v;
            }
            let consistent = self.associative_at(cells, x, y)
                && (mirror.is_none() || self.associative_at(cells, y, x));
            if consistent && self.refine(cells, cands, &mut next) {
                self.descend(cells, &next, pos + 1, limit, sink);
            }
        }
        cells[pos] = UNKNOWN;
        if let Some(m) = mirror {
            cells[m] = UNKNOWN;
        }
    }

    /// Checks every triple in which cell `(x, y)` takes part and whose
    /// products are otherwise all known.
    fn associative_at(&self, cells: &[u8], x: usize, y: usize) -> bool {
        let n = self.n;
        let get = |a: usize, b: usize| -> Option<usize> {
            let v = cells[a * n + b];
            (v != UNKNOWN).then_some(v as usize)
        };
        let v = cells[x * n + y] as usize;
        // (x y) c  vs  x (y c)
        for c in 0..n {
            if let (Some(l), Some(yc)) = (get(v, c), get(y, c)) {
                if let Some(r) = get(x, yc) {
                    if l != r {
                        return false;
                    }
                }
            }
        }
        // (a x) y  vs  a (x y)
        for a in 0..n {
            if let (Some(ax), Some(r)) = (get(a, x), get(a, v)) {
                if let Some(l) = get(ax, y) {
                    if l != r {
                        return false;
                    }
                }
            }
        }
        // (a b) y with ab = x  vs  a (b y)
        // x (b c) with bc = y  vs  (x b) c
        for a in 0..n {
            for b in 0..n {
                if get(a, b) == Some(x) {
                    if let Some(by) = get(b, y) {
                        if let Some(r) = get(a, by) {
                            if r != v {
                                return false;
                            }
                        }
                    }
                }
                if get(a, b) == Some(y) {
                    if let Some(xa) = get(x, a) {
                        if let Some(l) = get(xa, b) {
                            if l != v {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Re-examines the tied relabellings. Returns `false` if one of them is
    /// already smaller than the partial table; otherwise `next` holds the
    /// relabellings that remain tied.
    fn refine(&self, cells: &[u8], cands: &[Candidate], next: &mut Vec<Candidate>) -> bool {
        next.clear();
        for cand in cands {
            match self.scan(cells, cand) {
                Scan::Smaller => return false,
                Scan::Larger => {}
                Scan::Open(resume) => next.push(Candidate { resume, ..*cand }),
            }
        }
        true
    }

    fn scan(&self, cells: &[u8], cand: &Candidate) -> Scan {
        let n = self.n;
        let size = n * n;
        let sigma = &self.perms[cand.perm as usize];
        let inv = &self.inverses[cand.perm as usize];
        let mut q = cand.resume as usize;
        while q < size {
            let cur = cells[q];
            if cur == UNKNOWN {
                return Scan::Open(q as u8);
            }
            let (a, b) = (inv.apply(q / n), inv.apply(q % n));
            let src = if cand.transposed {
                cells[b * n + a]
            } else {
                cells[a * n + b]
            };
            if src == UNKNOWN {
                return Scan::Open(q as u8);
            }
            let img = sigma.image_u8(src);
            if img < cur {
                return Scan::Smaller;
            }
            if img > cur {
                return Scan::Larger;
            }
            q += 1;
        }
        Scan::Open(size as u8)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let none = SemigroupConstraint::default();
        assert_eq!(count_semigroups(1, &none, Equivalence::Iso).unwrap(), 1);
        assert_eq!(count_semigroups(2, &none, Equivalence::Iso).unwrap(), 5);
        assert_eq!(count_semigroups(2, &none, Equivalence::IsoOrAnti).unwrap(), 4);
        assert_eq!(count_semigroups(3, &none, Equivalence::Iso).unwrap(), 24);
        assert_eq!(count_semigroups(3, &none, Equivalence::IsoOrAnti).unwrap(), 18);
        let comm = SemigroupConstraint::commutative();
        assert_eq!(count_semigroups(2, &comm, Equivalence::Iso).unwrap(), 3);
    }

    #[test]
    fn emitted_tables_are_canonical_and_associative() {
        for mode in [Equivalence::Iso, Equivalence::IsoOrAnti] {
            let classes = enumerate_semigroups(3, &SemigroupConstraint::default(), mode).unwrap();
            for class in &classes {
                assert!(class.table.is_associative());
                assert_eq!(class.table.canonical_form(mode).table, class.table);
                assert_eq!(class.aut, automorphism_group(&class.table));
            }
            assert!(classes.windows(2).all(|w| w[0].table < w[1].table));
        }
    }

    #[test]
    fn negative_constraints_filter() {
        let c = SemigroupConstraint {
            commutative: Some(false),
            ..Default::default()
        };
        let non_comm = count_semigroups(2, &c, Equivalence::Iso).unwrap();
        let comm = count_semigroups(2, &SemigroupConstraint::commutative(), Equivalence::Iso).unwrap();
        assert_eq!(non_comm + comm, 5);
        let monoids = SemigroupConstraint {
            with_identity: Some(true),
            ..Default::default()
        };
        assert_eq!(count_semigroups(2, &monoids, Equivalence::Iso).unwrap(), 2);
    }

    #[test]
    fn capability_limits() {
        let none = SemigroupConstraint::default();
        assert!(matches!(
            count_semigroups(7, &none, Equivalence::Iso),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            count_semigroups(0, &none, Equivalence::Iso),
            Err(Error::OrderOutOfRange(0))
        ));
        assert_eq!(Reach::Standard.max_order(&SemigroupConstraint::semilattice()), 8);
        assert_eq!(Reach::Standard.max_order(&SemigroupConstraint::commutative()), 7);
        assert_eq!(Reach::LongRun.max_order(&none), 7);
    }
}
