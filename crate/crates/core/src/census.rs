//! Semirings of order `n` up to isomorphism (or isomorphism and
//! anti-isomorphism).
//!
//! Fix a commutative semigroup `(S, +)` and a semigroup `(S, ×)`. The
//! relabelled pairs `(+, ×^σ)` and `(+, ×^τ)` are isomorphic exactly when `σ`
//! and `τ` lie in the same double coset `Aut(S, ×) σ Aut(S, +)` of `Sym(S)`;
//! replacing `Aut(S, ×)` with `Aut*(S, ×)` gives the same statement for
//! isomorphism or anti-isomorphism. So every class is met once by sweeping
//! additive classes, multiplicative classes and one representative per double
//! coset, testing distributivity for each.

use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::SemigroupCache;
use crate::error::{Error, Result};
use crate::group::{double_coset_reps, PermGroup};
use crate::perm::{symmetric_group, Permutation};
use crate::semigroups::{canonical_semigroup_tables, Reach, SemigroupClass, SemigroupConstraint};
use crate::table::{distributes_unchecked, zero_element, Equivalence, Law, OpTable, MAX_ORDER};

/// Extra properties a counted semiring must have.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Filter {
    /// An additive identity that is multiplicatively absorbing.
    pub with_zero: bool,
    /// A multiplicative identity.
    pub with_one: bool,
    /// Additively idempotent.
    pub ai: bool,
    pub commutative_mul: bool,
}

impl Filter {
    pub const NONE: Filter = Filter {
        with_zero: false,
        with_one: false,
        ai: false,
        commutative_mul: false,
    };

    /// All sixteen combinations of the four flags.
    pub fn all() -> impl Iterator<Item = Filter> {
        (0u8..16).map(|bits| Filter {
            with_zero: bits & 1 != 0,
            with_one: bits & 2 != 0,
            ai: bits & 4 != 0,
            commutative_mul: bits & 8 != 0,
        })
    }

    pub fn holds(&self, add: &OpTable, mul: &OpTable) -> bool {
        (!self.ai || add.is_idempotent())
            && (!self.commutative_mul || mul.is_commutative())
            && (!self.with_one || mul.identity_element().is_some())
            && (!self.with_zero || zero_element(add, mul).ok().flatten().is_some())
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = [
            (self.ai, "ai"),
            (self.commutative_mul, "commutative"),
            (self.with_zero, "with 0"),
            (self.with_one, "with 1"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect();
        if names.is_empty() {
            f.write_str("no additional constraints")
        } else {
            f.write_str(&names.join(", "))
        }
    }
}

/// Conjunction of the filter predicates on a pair of tables.
pub fn filter_predicates(add: &OpTable, mul: &OpTable, filter: &Filter) -> Result<bool> {
    if add.order() != mul.order() {
        return Err(Error::OrderMismatch {
            left: add.order(),
            right: mul.order(),
        });
    }
    Ok(filter.holds(add, mul))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CensusQuery {
    pub n: usize,
    pub equiv: Equivalence,
    pub filter: Filter,
}

impl CensusQuery {
    pub fn new(n: usize, equiv: Equivalence, filter: Filter) -> Self {
        CensusQuery { n, equiv, filter }
    }

    /// Additive reducts: commutative, idempotent for ai, monoids when a zero
    /// is required.
    pub fn additive_constraint(&self) -> SemigroupConstraint {
        SemigroupConstraint {
            commutative: Some(true),
            idempotent: self.filter.ai.then_some(true),
            with_identity: self.filter.with_zero.then_some(true),
        }
    }

    pub fn multiplicative_constraint(&self) -> SemigroupConstraint {
        SemigroupConstraint {
            commutative: self.filter.commutative_mul.then_some(true),
            idempotent: None,
            with_identity: self.filter.with_one.then_some(true),
        }
    }
}

impl fmt::Display for CensusQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "order {} up to {} ({})", self.n, self.equiv, self.filter)
    }
}

/// A validated semiring on `{0, …, n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemiringPair {
    add: OpTable,
    mul: OpTable,
}

impl SemiringPair {
    pub fn new(add: OpTable, mul: OpTable) -> Result<Self> {
        let report = verify_semiring(&add, &mul)?;
        match report.first_failure() {
            None => Ok(SemiringPair { add, mul }),
            Some(check) => Err(Error::InvalidTable(format!("not a semiring: {check}"))),
        }
    }

    pub fn add(&self) -> &OpTable {
        &self.add
    }

    pub fn mul(&self) -> &OpTable {
        &self.mul
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }
}

/// Tallies of the work done by one census run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub additive_classes: u64,
    pub multiplicative_classes: u64,
    pub double_cosets_tested: u64,
    pub distributive_hits: u64,
}

impl std::ops::AddAssign for Provenance {
    fn add_assign(&mut self, rhs: Self) {
        self.additive_classes += rhs.additive_classes;
        self.multiplicative_classes += rhs.multiplicative_classes;
        self.double_cosets_tested += rhs.double_cosets_tested;
        self.distributive_hits += rhs.distributive_hits;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusResult {
    pub query: CensusQuery,
    pub count: u64,
    /// Present when the run was asked to emit; ordered by additive table,
    /// then multiplicative class, then double-coset representative.
    pub semirings: Option<Vec<SemiringPair>>,
    pub provenance: Provenance,
}

/// Census settings shared by every query.
#[derive(Clone, Debug, Default)]
pub struct Census {
    reach: Reach,
    cache: Option<SemigroupCache>,
}

impl Census {
    pub fn new() -> Self {
        Census::default()
    }

    pub fn reach(mut self, reach: Reach) -> Self {
        self.reach = reach;
        self
    }

    pub fn cache_dir(mut self, dir: Option<PathBuf>) -> Self {
        self.cache = dir.map(SemigroupCache::new);
        self
    }

    /// Fails with [`Error::Unsupported`] when either semigroup census the query
    /// needs is out of reach.
    pub fn check(&self, q: &CensusQuery) -> Result<()> {
        self.reach.check(q.n, &q.additive_constraint())?;
        self.reach.check(q.n, &q.multiplicative_constraint())
    }

    pub fn semigroups(
        &self,
        n: usize,
        c: &SemigroupConstraint,
        mode: Equivalence,
    ) -> Result<Vec<SemigroupClass>> {
        let tables = match &self.cache {
            Some(cache) => cache.tables(n, c, mode, self.reach)?,
            None => canonical_semigroup_tables(n, c, mode, self.reach)?,
        };
        Ok(tables.into_par_iter().map(SemigroupClass::from_canonical).collect())
    }

    /// The additive and multiplicative classes swept for `q`.
    pub fn reducts(&self, q: &CensusQuery) -> Result<(Vec<SemigroupClass>, Vec<SemigroupClass>)> {
        self.check(q)?;
        let adds = self.semigroups(q.n, &q.additive_constraint(), Equivalence::Iso)?;
        let mut muls = self.semigroups(q.n, &q.multiplicative_constraint(), q.equiv)?;
        if q.filter.with_zero {
            // the zero of the semiring is also a multiplicative zero
            muls.retain(|m| m.flags.has_zero);
        }
        Ok((adds, muls))
    }

    pub fn count(&self, q: &CensusQuery) -> Result<CensusResult> {
        self.run(q, false)
    }

    pub fn enumerate(&self, q: &CensusQuery) -> Result<CensusResult> {
        self.run(q, true)
    }

    pub fn run(&self, q: &CensusQuery, emit: bool) -> Result<CensusResult> {
        let (adds, muls) = self.reducts(q)?;

        let (groups, group_of) = intern_groups(&muls, q.equiv);
        let translations: Vec<Translations> =
            muls.iter().map(|m| Translations::of(&m.table)).collect();
        let parts: Vec<Part> = adds
            .par_iter()
            .map(|a| sweep_additive(a, &muls, &translations, &groups, &group_of, &q.filter, emit))
            .collect();

        let mut provenance = Provenance {
            additive_classes: adds.len() as u64,
            multiplicative_classes: muls.len() as u64,
            ..Default::default()
        };
        let mut count = 0;
        let mut semirings = emit.then(Vec::new);
        for part in parts {
            provenance += part.provenance;
            count += part.count;
            if let Some(all) = semirings.as_mut() {
                all.extend(part.pairs);
            }
        }
        Ok(CensusResult {
            query: *q,
            count,
            semirings,
            provenance,
        })
    }
}

/// The group acting on the left of the double cosets for a multiplicative class.
fn left_group(m: &SemigroupClass, equiv: Equivalence) -> &PermGroup {
    match equiv {
        Equivalence::Iso => &m.aut,
        Equivalence::IsoOrAnti => &m.aut_star,
    }
}

fn intern_groups(muls: &[SemigroupClass], equiv: Equivalence) -> (Vec<&PermGroup>, Vec<usize>) {
    let mut ids: HashMap<&PermGroup, usize> = HashMap::new();
    let mut groups = Vec::new();
    let group_of = muls
        .iter()
        .map(|m| {
            let g = left_group(m, equiv);
            *ids.entry(g).or_insert_with(|| {
                groups.push(g);
                groups.len() - 1
            })
        })
        .collect();
    (groups, group_of)
}

/// The left and right translations `y ↦ x × y` and `y ↦ y × x` of a
/// multiplication, deduplicated. Multiplication distributes over a commutative
/// addition exactly when every translation is an endomorphism of the addition.
struct Translations {
    /// Values of constant translations; `c` is an endomorphism iff `c + c = c`.
    constants: Vec<u8>,
    /// Non-constant, non-identity translations.
    maps: Vec<[u8; MAX_ORDER]>,
    /// Unordered pairs `(y, z)`, `y ≤ z`, in the order they are tested.
    pairs: Vec<(u8, u8)>,
}

impl Translations {
    fn of(mul: &OpTable) -> Self {
        let n = mul.order();
        let mut constants = Vec::new();
        let mut maps = Vec::new();
        for x in 0..n {
            for f in [|m: &OpTable, x, y| m.get(x, y), |m: &OpTable, x, y| m.get(y, x)] {
                let mut map = [0u8; MAX_ORDER];
                for (y, slot) in map.iter_mut().enumerate().take(n) {
                    *slot = f(mul, x, y) as u8;
                }
                let map_ref = &map[..n];
                if map_ref.iter().all(|&v| v == map[0]) {
                    if !constants.contains(&map[0]) {
                        constants.push(map[0]);
                    }
                } else if !map_ref.iter().enumerate().all(|(i, &v)| i == v as usize)
                    && !maps.contains(&map)
                {
                    maps.push(map);
                }
            }
        }
        let pairs = (0..n as u8)
            .flat_map(|y| (y..n as u8).map(move |z| (y, z)))
            .collect();
        Translations {
            constants,
            maps,
            pairs,
        }
    }

    /// Whether `mul` distributes over `add`, assuming `add` is commutative.
    #[inline]
    fn are_endomorphisms_of(&self, add: &OpTable) -> bool {
        if !self.constants.iter().all(|&c| add.at(c, c) == c) {
            return false;
        }
        self.pairs.iter().all(|&(y, z)| {
            let s = add.at(y, z);
            self.maps
                .iter()
                .all(|f| f[s as usize] == add.at(f[y as usize], f[z as usize]))
        })
    }
}

#[derive(Default)]
struct Part {
    count: u64,
    pairs: Vec<SemiringPair>,
    provenance: Provenance,
}

fn sweep_additive(
    a: &SemigroupClass,
    muls: &[SemigroupClass],
    translations: &[Translations],
    groups: &[&PermGroup],
    group_of: &[usize],
    filter: &Filter,
    emit: bool,
) -> Part {
    let add = &a.table;
    let sym = symmetric_group(add.order()).expect("tables have a valid order");
    // ×^σ distributes over + iff × distributes over +^(σ⁻¹), so relabel the
    // additive table once per σ instead of the multiplicative one per test.
    let inverse_images: Vec<OpTable> = sym.iter().map(|s| add.permuted(&s.inverse())).collect();
    let mut reps: Vec<Option<Vec<usize>>> = vec![None; groups.len()];
    let mut part = Part::default();
    for ((m, &gid), maps) in muls.iter().zip(group_of).zip(translations) {
        let reps = reps[gid].get_or_insert_with(|| {
            double_coset_reps(groups[gid], &a.aut)
                .expect("reducts share an order")
                .iter()
                .map(Permutation::rank)
                .collect()
        });
        part.provenance.double_cosets_tested += reps.len() as u64;
        for &r in reps.iter() {
            if !maps.are_endomorphisms_of(&inverse_images[r]) {
                debug_assert!(!distributes_unchecked(&m.table, &inverse_images[r]));
                continue;
            }
            debug_assert!(distributes_unchecked(&m.table, &inverse_images[r]));
            part.provenance.distributive_hits += 1;
            let mul = m.table.permuted(&sym[r]);
            if filter.holds(add, &mul) {
                part.count += 1;
                if emit {
                    part.pairs.push(SemiringPair { add: *add, mul });
                }
            }
        }
    }
    part
}

pub fn count_semirings(q: &CensusQuery) -> Result<CensusResult> {
    Census::new().count(q)
}

pub fn enumerate_semirings(q: &CensusQuery) -> Result<CensusResult> {
    Census::new().enumerate(q)
}

/// Outcome of one axiom in [`verify_semiring`]; `witness` is the first failing
/// pair or triple in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawCheck {
    pub law: Law,
    pub witness: Option<Vec<usize>>,
}

impl LawCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for LawCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}: ok", self.law),
            Some(w) => {
                let names = ["x", "y", "z"];
                let vars = names[..w.len()].join(", ");
                let vals = w.iter().map(usize::to_string).collect::<Vec<_>>().join(", ");
                write!(
                    f,
                    "{} fails at ({vars}) = ({vals}): {}",
                    self.law,
                    self.law.describe()
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<LawCheck>,
}

impl VerificationReport {
    pub fn is_semiring(&self) -> bool {
        self.checks.iter().all(LawCheck::holds)
    }

    pub fn first_failure(&self) -> Option<&LawCheck> {
        self.checks.iter().find(|c| !c.holds())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failures: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.holds())
            .map(LawCheck::to_string)
            .collect();
        if failures.is_empty() {
            f.write_str("semiring")
        } else {
            f.write_str(&failures.join("; "))
        }
    }
}

/// Checks every semiring axiom independently and reports the first failing
/// instance of each.
pub fn verify_semiring(add: &OpTable, mul: &OpTable) -> Result<VerificationReport> {
    if add.order() != mul.order() {
        return Err(Error::OrderMismatch {
            left: add.order(),
            right: mul.order(),
        });
    }
    let n = add.order();
    let find = |f: &dyn Fn(usize, usize, usize) -> bool| -> Option<Vec<usize>> {
        (0..n)
            .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| [x, y, z])))
            .find(|&[x, y, z]| !f(x, y, z))
            .map(|w| w.to_vec())
    };
    let checks = Law::ALL
        .iter()
        .map(|&law| {
            let witness = match law {
                Law::AddAssociative => add.associativity_witness().map(|w| w.to_vec()),
                Law::AddCommutative => add.commutativity_witness().map(|w| w.to_vec()),
                Law::MulAssociative => mul.associativity_witness().map(|w| w.to_vec()),
                Law::LeftDistributive => find(&|x, y, z| {
                    mul.get(x, add.get(y, z)) == add.get(mul.get(x, y), mul.get(x, z))
                }),
                Law::RightDistributive => find(&|x, y, z| {
                    mul.get(add.get(y, z), x) == add.get(mul.get(y, x), mul.get(z, x))
                }),
            };
            LawCheck { law, witness }
        })
        .collect();
    Ok(VerificationReport { checks })
}

/// How [`census_self_check`] draws its cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelfCheck {
    /// Every additive class, multiplicative class, `σ`, `h` and `k`.
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

/// Confirms that distributivity and the filter predicates are constant on
/// double cosets: for `h` in the left group and `k ∈ Aut(S, +)`, the pair
/// `(+, ×^(hσk))` behaves exactly like `(+, ×^σ)`.
pub fn census_self_check(q: &CensusQuery, how: SelfCheck) -> Result<bool> {
    if q.n > 4 {
        return Err(Error::Unsupported(format!(
            "self-check is meant for orders up to 4, not {}",
            q.n
        )));
    }
    let (adds, muls) = Census::new().reducts(q)?;
    if adds.is_empty() || muls.is_empty() {
        return Ok(true);
    }
    let sym = symmetric_group(q.n)?;
    let agrees = |a: &SemigroupClass, m: &SemigroupClass, s: &Permutation, h: &Permutation, k: &Permutation| {
        let base = m.table.permuted(s);
        let moved = m.table.permuted(&h.then(s).then(k));
        distributes_unchecked(&base, &a.table) == distributes_unchecked(&moved, &a.table)
            && q.filter.holds(&a.table, &base) == q.filter.holds(&a.table, &moved)
    };
    match how {
        SelfCheck::Exhaustive => Ok(adds.iter().all(|a| {
            muls.iter().all(|m| {
                let hs = left_group(m, q.equiv).elements();
                sym.iter().all(|s| {
                    hs.iter()
                        .all(|h| a.aut.elements().iter().all(|k| agrees(a, m, s, h, k)))
                })
            })
        })),
        SelfCheck::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok((0..samples).all(|_| {
                let a = &adds[rng.gen_range(0..adds.len())];
                let m = &muls[rng.gen_range(0..muls.len())];
                let hs = left_group(m, q.equiv).elements();
                let ks = a.aut.elements();
                let s = &sym[rng.gen_range(0..sym.len())];
                let h = &hs[rng.gen_range(0..hs.len())];
                let k = &ks[rng.gen_range(0..ks.len())];
                agrees(a, m, s, h, k)
            }))
        }
    }
}
