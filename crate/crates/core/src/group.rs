//! Explicitly listed subgroups of `Sym(n)`, automorphism groups of operation
//! tables, and double-coset decompositions.
//!
//! Degrees are at most 8, so every group is stored as a sorted element list and
//! membership is a binary search.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::perm::{check_order, factorial, symmetric_group, Permutation};
use crate::table::OpTable;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermGroup {
    n: usize,
    elements: Vec<Permutation>,
}

impl PermGroup {
    /// Validates that `elements` form a group of degree `n`.
    pub fn from_elements(n: usize, mut elements: Vec<Permutation>) -> Result<Self> {
        check_order(n)?;
        if let Some(p) = elements.iter().find(|p| p.degree() != n) {
            return Err(Error::OrderMismatch {
                left: n,
                right: p.degree(),
            });
        }
        elements.sort_unstable();
        elements.dedup();
        let group = PermGroup { n, elements };
        group.validate()?;
        Ok(group)
    }

    pub fn trivial(n: usize) -> Self {
        PermGroup {
            n,
            elements: vec![Permutation::identity(n)],
        }
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        Ok(PermGroup {
            n,
            elements: symmetric_group(n)?.to_vec(),
        })
    }

    fn validate(&self) -> Result<()> {
        let id = Permutation::identity(self.n);
        if !self.contains(&id) {
            return Err(Error::NotAGroup("identity missing".into()));
        }
        if !factorial(self.n).is_multiple_of(self.elements.len()) {
            return Err(Error::NotAGroup(format!(
                "order {} does not divide {}!",
                self.elements.len(),
                self.n
            )));
        }
        let mut member = vec![false; factorial(self.n)];
        for p in &self.elements {
            member[p.rank()] = true;
        }
        for a in &self.elements {
            if !member[a.inverse().rank()] {
                return Err(Error::NotAGroup(format!("inverse of {a} missing")));
            }
            for b in &self.elements {
                if !member[a.then(b).rank()] {
                    return Err(Error::NotAGroup(format!("product of {a} and {b} missing")));
                }
            }
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in lexicographic order of their images.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.n == other.n && self.elements.iter().all(|p| other.contains(p))
    }

    /// `σ⁻¹ · G · σ`, which is `Aut(t^σ)` when `self` is `Aut(t)`.
    pub fn conjugate(&self, sigma: &Permutation) -> PermGroup {
        let inv = sigma.inverse();
        let mut elements: Vec<_> = self.elements.iter().map(|g| inv.then(g).then(sigma)).collect();
        elements.sort_unstable();
        PermGroup { n: self.n, elements }
    }

    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        PermGroup {
            n: self.n,
            elements: self.elements.iter().copied().filter(|p| other.contains(p)).collect(),
        }
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(&self.elements).finish()
    }
}

/// The smallest group of degree `n` containing `gens`.
pub fn group_closure(n: usize, gens: &[Permutation]) -> Result<PermGroup> {
    check_order(n)?;
    if let Some(g) = gens.iter().find(|g| g.degree() != n) {
        return Err(Error::OrderMismatch {
            left: n,
            right: g.degree(),
        });
    }
    let id = Permutation::identity(n);
    let mut seen = vec![false; factorial(n)];
    seen[id.rank()] = true;
    let mut elements = vec![id];
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = p.then(g);
            let r = q.rank();
            if !seen[r] {
                seen[r] = true;
                elements.push(q);
                queue.push_back(q);
            }
        }
    }
    elements.sort_unstable();
    Ok(PermGroup { n, elements })
}

/// `Aut(S, ·)`: the stabiliser of `t` under relabelling.
pub fn automorphism_group(t: &OpTable) -> PermGroup {
    let n = t.order();
    let elements = symmetric_group(n)
        .expect("tables have a valid order")
        .iter()
        .copied()
        .filter(|s| t.fixed_by(s))
        .collect();
    let group = PermGroup { n, elements };
    debug_assert!(group.validate().is_ok());
    group
}

/// `Aut*(S, ·)`: automorphisms together with anti-automorphisms.
pub fn aut_star_group(t: &OpTable) -> PermGroup {
    let n = t.order();
    let elements = symmetric_group(n)
        .expect("tables have a valid order")
        .iter()
        .copied()
        .filter(|s| t.fixed_by(s) || t.reversed_by(s))
        .collect();
    let group = PermGroup { n, elements };
    debug_assert!(group.validate().is_ok());
    group
}

/// One double coset `H g K`, named by its least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoset {
    pub representative: Permutation,
    pub size: usize,
}

/// Representatives of `H \ Sym(n) / K`, each the least element of its double
/// coset, in increasing order. `H` acts on the left and `K` on the right.
pub fn double_coset_reps(h: &PermGroup, k: &PermGroup) -> Result<Vec<Permutation>> {
    Ok(double_cosets(h, k)?
        .into_iter()
        .map(|c| c.representative)
        .collect())
}

pub fn double_cosets(h: &PermGroup, k: &PermGroup) -> Result<Vec<DoubleCoset>> {
    if h.n != k.n {
        return Err(Error::OrderMismatch {
            left: h.n,
            right: k.n,
        });
    }
    let sym = symmetric_group(h.n)?;
    let mut marked = vec![false; sym.len()];
    let mut out = Vec::new();
    for (i, g) in sym.iter().enumerate() {
        if marked[i] {
            continue;
        }
        let mut size = 0;
        for x in &h.elements {
            let xg = x.then(g);
            for y in &k.elements {
                let r = xg.then(y).rank();
                if !marked[r] {
                    marked[r] = true;
                    size += 1;
                }
            }
        }
        out.push(DoubleCoset {
            representative: *g,
            size,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(group_closure(3, &[]).unwrap().order(), 1);
        let s3 = group_closure(3, &[cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(s3, PermGroup::symmetric(3).unwrap());
        let c3 = group_closure(3, &[cyc(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(c3.order(), 3);
        assert!(group_closure(3, &[Permutation::identity(2)]).is_err());
    }

    #[test]
    fn construction_validates_group_axioms() {
        let t = cyc(3, &[&[0, 1, 2]]);
        assert!(matches!(
            PermGroup::from_elements(3, vec![Permutation::identity(3), t]),
            Err(Error::NotAGroup(_))
        ));
        assert!(PermGroup::from_elements(3, vec![t]).is_err());
        let ok = PermGroup::from_elements(3, vec![t, t.inverse(), Permutation::identity(3)]).unwrap();
        assert_eq!(ok.order(), 3);
    }

    #[test]
    fn automorphism_examples() {
        let lz = OpTable::from_fn(3, |x, _| x);
        assert_eq!(automorphism_group(&lz).order(), 6);
        let chain = OpTable::from_fn(3, |x, y| x.max(y));
        assert_eq!(automorphism_group(&chain), PermGroup::trivial(3));
        assert_eq!(automorphism_group(&OpTable::from_fn(1, |_, _| 0)).order(), 1);
    }

    #[test]
    fn aut_star_examples() {
        let chain = OpTable::from_fn(3, |x, y| x.max(y));
        assert_eq!(aut_star_group(&chain), automorphism_group(&chain));
        let lz = OpTable::from_fn(2, |x, _| x);
        assert_eq!(aut_star_group(&lz).order(), 2);
        assert_eq!(aut_star_group(&lz), automorphism_group(&lz));
        // null semigroup with a single nonzero product 1·2 = 3
        let mut cells = vec![0; 16];
        cells[4 + 2] = 3;
        let t = OpTable::new(4, &cells).unwrap();
        assert!(t.is_associative());
        let aut = automorphism_group(&t);
        let star = aut_star_group(&t);
        assert_eq!(aut.order(), 1);
        assert_eq!(star.order(), 2);
        assert!(star.contains(&cyc(4, &[&[1, 2]])));
    }

    #[test]
    fn double_coset_examples() {
        let s4 = PermGroup::symmetric(4).unwrap();
        assert_eq!(double_coset_reps(&s4, &s4).unwrap(), vec![Permutation::identity(4)]);
        let e = PermGroup::trivial(4);
        assert_eq!(double_coset_reps(&e, &e).unwrap().len(), 24);
        let h = group_closure(3, &[cyc(3, &[&[0, 1]])]).unwrap();
        let cosets = double_cosets(&h, &h).unwrap();
        let mut sizes: Vec<_> = cosets.iter().map(|c| c.size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 4]);
        assert!(double_cosets(&h, &PermGroup::trivial(2)).is_err());
    }
}
