//! Cayley tables of binary operations on `{0, …, n-1}` and the axioms a
//! semiring's two operations must satisfy.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{check_order, symmetric_group, Permutation};

pub const MAX_ORDER: usize = 8;
const CELLS: usize = MAX_ORDER * MAX_ORDER;

/// An `n × n` operation table stored row-major; `get(x, y)` is `x · y`.
///
/// Cells past `n²` are kept zero so the derived ordering is the lexicographic
/// order of the flattened table among tables of equal order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpTable {
    n: u8,
    cells: [u8; CELLS],
}

/// Equivalence used when classifying tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Equivalence {
    /// Up to isomorphism.
    Iso,
    /// Up to isomorphism or anti-isomorphism.
    IsoOrAnti,
}

impl fmt::Display for Equivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Equivalence::Iso => "iso",
            Equivalence::IsoOrAnti => "iso_or_anti",
        })
    }
}

impl OpTable {
    /// Builds a table from `n²` row-major entries.
    pub fn new(n: usize, entries: &[usize]) -> Result<Self> {
        check_order(n)?;
        if entries.len() != n * n {
            return Err(Error::InvalidTable(format!(
                "expected {} entries for order {n}, got {}",
                n * n,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|&&e| e >= n) {
            return Err(Error::InvalidTable(format!(
                "entry {bad} is not an element of 0..{n}"
            )));
        }
        let mut cells = [0u8; CELLS];
        for (c, &e) in cells.iter_mut().zip(entries) {
            *c = e as u8;
        }
        Ok(OpTable { n: n as u8, cells })
    }

    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            flat.extend_from_slice(row);
        }
        OpTable::new(n, &flat)
    }

    /// Tabulates `f`; panics if `f` leaves `0..n`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let entries: Vec<usize> = (0..n * n).map(|i| f(i / n, i % n)).collect();
        OpTable::new(n, &entries).expect("from_fn produced an invalid table")
    }

    pub(crate) fn from_cells(n: usize, cells: &[u8]) -> Self {
        debug_assert_eq!(cells.len(), n * n);
        debug_assert!(cells.iter().all(|&c| (c as usize) < n));
        let mut t = OpTable {
            n: n as u8,
            cells: [0; CELLS],
        };
        t.cells[..n * n].copy_from_slice(cells);
        t
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n as usize + y] as usize
    }

    #[inline]
    pub(crate) fn at(&self, x: u8, y: u8) -> u8 {
        self.cells[x as usize * self.n as usize + y as usize]
    }

    /// Row-major entries, `n²` of them.
    pub fn entries(&self) -> &[u8] {
        let n = self.order();
        &self.cells[..n * n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n)
            .map(|x| (0..n).map(|y| self.get(x, y)).collect())
            .collect()
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    /// First `(x, y, z)` with `(xy)z ≠ x(yz)`.
    pub fn associativity_witness(&self) -> Option<[usize; 3]> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.at(x, y);
                for z in 0..n {
                    if self.at(xy, z) != self.at(x, self.at(y, z)) {
                        return Some([x as usize, y as usize, z as usize]);
                    }
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    pub fn commutativity_witness(&self) -> Option<[usize; 2]> {
        let n = self.n;
        for x in 0..n {
            for y in x + 1..n {
                if self.at(x, y) != self.at(y, x) {
                    return Some([x as usize, y as usize]);
                }
            }
        }
        None
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.n).all(|x| self.at(x, x) == x)
    }

    /// The two-sided identity, if any.
    pub fn identity_element(&self) -> Option<usize> {
        let n = self.n;
        let mut found = None;
        for e in 0..n {
            if (0..n).all(|x| self.at(e, x) == x && self.at(x, e) == x) {
                debug_assert!(found.is_none(), "identity elements are unique");
                found = Some(e as usize);
                if !cfg!(debug_assertions) {
                    break;
                }
            }
        }
        found
    }

    /// The opposite operation, `x ·ᵀ y = y · x`.
    pub fn transpose(&self) -> Self {
        let n = self.order();
        let mut out = *self;
        for x in 0..n {
            for y in 0..n {
                out.cells[x * n + y] = self.cells[y * n + x];
            }
        }
        out
    }

    /// The relabelled table `t^σ` with `t^σ(σ(a), σ(b)) = σ(t(a, b))`.
    pub fn apply_perm(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.degree() != self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: sigma.degree(),
            });
        }
        Ok(self.permuted(sigma))
    }

    #[inline]
    pub(crate) fn permuted(&self, sigma: &Permutation) -> Self {
        let n = self.order();
        let mut out = *self;
        for a in 0..n {
            let sa = sigma.apply(a);
            for b in 0..n {
                out.cells[sa * n + sigma.apply(b)] = sigma.image_u8(self.cells[a * n + b]);
            }
        }
        out
    }

    /// Whether `t^σ == t`, without materialising `t^σ`.
    #[inline]
    pub fn fixed_by(&self, sigma: &Permutation) -> bool {
        let n = self.n;
        (0..n).all(|a| {
            let sa = sigma.image_u8(a);
            (0..n).all(|b| self.at(sa, sigma.image_u8(b)) == sigma.image_u8(self.at(a, b)))
        })
    }

    /// Whether `t^σ == tᵀ`.
    #[inline]
    pub fn reversed_by(&self, sigma: &Permutation) -> bool {
        let n = self.n;
        (0..n).all(|a| {
            let sa = sigma.image_u8(a);
            (0..n).all(|b| self.at(sigma.image_u8(b), sa) == sigma.image_u8(self.at(a, b)))
        })
    }

    /// Lexicographically least relabelling of this table (and of its transpose
    /// under [`Equivalence::IsoOrAnti`]), with a relabelling that attains it.
    pub fn canonical_form(&self, mode: Equivalence) -> Canonical {
        let perms = symmetric_group(self.order()).expect("tables have a valid order");
        let mut best = Canonical {
            table: *self,
            perm: perms[0],
            transposed: false,
        };
        let transposed = self.transpose();
        let sources: &[(bool, &OpTable)] = match mode {
            Equivalence::Iso => &[(false, self)],
            Equivalence::IsoOrAnti => &[(false, self), (true, &transposed)],
        };
        for &(is_t, source) in sources {
            for sigma in perms {
                if source.image_cmp(sigma, &best.table) == Ordering::Less {
                    best = Canonical {
                        table: source.permuted(sigma),
                        perm: *sigma,
                        transposed: is_t,
                    };
                }
            }
        }
        best
    }

    /// Compares `self^σ` against `other` lexicographically, stopping at the
    /// first difference.
    fn image_cmp(&self, sigma: &Permutation, other: &OpTable) -> Ordering {
        let n = self.n;
        let inv = sigma.inverse();
        for x in 0..n {
            let ix = inv.image_u8(x);
            for y in 0..n {
                let v = sigma.image_u8(self.at(ix, inv.image_u8(y)));
                match v.cmp(&other.at(x, y)) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for OpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OpTable{:?}", self.rows())
    }
}

/// Rows separated by `|`, e.g. `01|11`.
impl fmt::Display for OpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order();
        for x in 0..n {
            if x > 0 {
                f.write_str("|")?;
            }
            for y in 0..n {
                write!(f, "{}", self.get(x, y))?;
            }
        }
        Ok(())
    }
}

/// Result of [`OpTable::canonical_form`]: `table` equals `source^perm`, where
/// `source` is the transpose of the input when `transposed` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub table: OpTable,
    pub perm: Permutation,
    pub transposed: bool,
}

/// The semiring axioms, in the order they are reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    AddAssociative,
    AddCommutative,
    MulAssociative,
    LeftDistributive,
    RightDistributive,
}

impl Law {
    pub const ALL: [Law; 5] = [
        Law::AddAssociative,
        Law::AddCommutative,
        Law::MulAssociative,
        Law::LeftDistributive,
        Law::RightDistributive,
    ];

    pub fn describe(&self) -> &'static str {
        match self {
            Law::AddAssociative => "(x + y) + z = x + (y + z)",
            Law::AddCommutative => "x + y = y + x",
            Law::MulAssociative => "(x × y) × z = x × (y × z)",
            Law::LeftDistributive => "x × (y + z) = (x × y) + (x × z)",
            Law::RightDistributive => "(y + z) × x = (y × x) + (z × x)",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::AddAssociative => "+ associativity",
            Law::AddCommutative => "+ commutativity",
            Law::MulAssociative => "× associativity",
            Law::LeftDistributive => "left distributivity",
            Law::RightDistributive => "right distributivity",
        })
    }
}

/// A failing instance of one distributive law, as `(x, y, z)` in the
/// notation of [`Law::describe`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistributivityFailure {
    pub law: Law,
    pub witness: [usize; 3],
}

impl fmt::Display for DistributivityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = self.witness;
        write!(f, "{} fails at (x, y, z) = ({x}, {y}, {z}): {}", self.law, self.law.describe())
    }
}

fn same_order(a: &OpTable, b: &OpTable) -> Result<()> {
    if a.order() == b.order() {
        Ok(())
    } else {
        Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        })
    }
}

/// Whether `mul` distributes over `add` on both sides.
pub fn distributes(mul: &OpTable, add: &OpTable) -> Result<bool> {
    same_order(mul, add)?;
    Ok(distributes_unchecked(mul, add))
}

#[inline]
pub(crate) fn distributes_unchecked(mul: &OpTable, add: &OpTable) -> bool {
    let n = mul.n;
    for x in 0..n {
        for y in 0..n {
            let xy = mul.at(x, y);
            let yx = mul.at(y, x);
            for z in 0..n {
                let s = add.at(y, z);
                if mul.at(x, s) != add.at(xy, mul.at(x, z))
                    || mul.at(s, x) != add.at(yx, mul.at(z, x))
                {
                    return false;
                }
            }
        }
    }
    true
}

/// The first failing distributive law and triple, checking the left law
/// before the right one; `None` when both hold.
pub fn distributes_report(
    mul: &OpTable,
    add: &OpTable,
) -> Result<Option<DistributivityFailure>> {
    same_order(mul, add)?;
    let n = mul.n;
    let triples = || {
        (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
    };
    for (x, y, z) in triples() {
        if mul.at(x, add.at(y, z)) != add.at(mul.at(x, y), mul.at(x, z)) {
            return Ok(Some(DistributivityFailure {
                law: Law::LeftDistributive,
                witness: [x as usize, y as usize, z as usize],
            }));
        }
    }
    for (x, y, z) in triples() {
        if mul.at(add.at(y, z), x) != add.at(mul.at(y, x), mul.at(z, x)) {
            return Ok(Some(DistributivityFailure {
                law: Law::RightDistributive,
                witness: [x as usize, y as usize, z as usize],
            }));
        }
    }
    Ok(None)
}

/// An element that is an additive identity and multiplicatively absorbing.
pub fn zero_element(add: &OpTable, mul: &OpTable) -> Result<Option<usize>> {
    same_order(add, mul)?;
    Ok(add.identity_element().filter(|&z| {
        (0..add.order()).all(|x| mul.get(x, z) == z && mul.get(z, x) == z)
    }))
}
