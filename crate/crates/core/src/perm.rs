//! Permutations of `{0, …, n-1}` for `n ≤ 8`.
//!
//! Maps are written on the right and composed left to right: `a.then(&b)`
//! applies `a` first, then `b`. This is the convention under which the table
//! action `x ·^σ y = ((x)σ⁻¹ · (y)σ⁻¹)σ` is a right action.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::table::MAX_ORDER;

/// A bijection on `{0, …, n-1}`.
///
/// Points `≥ n` in the backing array are fixed, so the derived ordering is the
/// lexicographic order on images for permutations of equal degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    images: [u8; MAX_ORDER],
}

const FACTORIALS: [usize; MAX_ORDER + 1] = [1, 1, 2, 6, 24, 120, 720, 5040, 40320];

pub fn factorial(n: usize) -> usize {
    FACTORIALS[n]
}

pub(crate) fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange(n))
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "degree {n} exceeds {MAX_ORDER}");
        let mut images = [0u8; MAX_ORDER];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = i as u8;
        }
        Permutation { n: n as u8, images }
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        check_order(n)?;
        let mut p = Permutation::identity(n);
        let mut seen = [false; MAX_ORDER];
        for (i, &img) in images.iter().enumerate() {
            if img >= n || seen[img] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[img] = true;
            p.images[i] = img as u8;
        }
        Ok(p)
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]` maps 0→1→2→0.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        check_order(n)?;
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = [false; MAX_ORDER];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n || moved[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycles {cycles:?} are not disjoint cycles on 0..{n}"
                    )));
                }
                moved[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(&images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    #[inline]
    pub(crate) fn image_u8(&self, x: u8) -> u8 {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[u8] {
        &self.images[..self.n as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images().iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = *self;
        for i in 0..self.degree() {
            inv.images[self.images[i] as usize] = i as u8;
        }
        inv
    }

    /// `self` first, then `other`.
    #[inline]
    pub fn then(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut out = *self;
        for i in 0..self.degree() {
            out.images[i] = other.images[self.images[i] as usize];
        }
        out
    }

    /// Position of `self` in the lexicographic listing of `Sym(n)`.
    pub fn rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0;
        for i in 0..n {
            let smaller_later = (i + 1..n)
                .filter(|&j| self.images[j] < self.images[i])
                .count();
            rank += smaller_later * FACTORIALS[n - 1 - i];
        }
        rank
    }
}

/// `a` then `b`, i.e. `x ↦ b(a(x))`.
pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    if a.n != b.n {
        return Err(Error::OrderMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(a.then(b))
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = [false; MAX_ORDER];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.apply(x);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

fn generate(n: usize) -> Vec<Permutation> {
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::with_capacity(FACTORIALS[n]);
    loop {
        let mut p = Permutation::identity(n);
        p.images[..n].copy_from_slice(&current);
        out.push(p);
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

/// All of `Sym(n)` in lexicographic order, shared across calls.
pub fn symmetric_group(n: usize) -> Result<&'static [Permutation]> {
    static CACHE: [OnceLock<Vec<Permutation>>; MAX_ORDER + 1] =
        [const { OnceLock::new() }; MAX_ORDER + 1];
    check_order(n)?;
    Ok(CACHE[n].get_or_init(|| generate(n)))
}

pub fn all_perms(n: usize) -> Result<Vec<Permutation>> {
    symmetric_group(n).map(<[Permutation]>::to_vec)
}
