//! Counts semigroups of each order up to isomorphism and up to isomorphism or
//! anti-isomorphism, plus the commutative ones and the semilattices.
//!
//! ```bash
//! cargo run --release -p semirings --example semigroup_census -- 5
//! ```

use std::time::Instant;

use semirings::{count_semigroups, Equivalence, SemigroupConstraint};

fn main() -> semirings::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("order must be an integer"))
        .unwrap_or(4);
    let kinds = [
        ("all", SemigroupConstraint::default()),
        ("commutative", SemigroupConstraint::commutative()),
        ("semilattices", SemigroupConstraint::semilattice()),
    ];
    println!("{:>2} {:>14} {:>10} {:>10} {:>8}", "n", "kind", "iso", "iso/anti", "secs");
    for n in 1..=max {
        for (name, c) in &kinds {
            let start = Instant::now();
            let iso = count_semigroups(n, c, Equivalence::Iso)?;
            let anti = count_semigroups(n, c, Equivalence::IsoOrAnti)?;
            let secs = start.elapsed().as_secs_f64();
            println!("{n:>2} {name:>14} {iso:>10} {anti:>10} {secs:>8.2}");
        }
    }
    Ok(())
}
