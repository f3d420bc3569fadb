//! Counts the semirings of one order under every combination of the four
//! filters, in both equivalence modes, with the work tallies of each run.
//!
//! ```bash
//! cargo run --release -p semirings --example count_semirings -- 4
//! ```

use std::time::Instant;

use semirings::{Census, CensusQuery, Equivalence, Filter};

fn main() -> semirings::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("order must be an integer"))
        .unwrap_or(3);
    let census = Census::new();
    println!("{:<36} {:>9} {:>9} {:>12} {:>7}", "filter", "iso", "iso/anti", "cosets", "secs");
    for filter in Filter::all() {
        let start = Instant::now();
        let iso = census.count(&CensusQuery::new(n, Equivalence::Iso, filter))?;
        let anti = census.count(&CensusQuery::new(n, Equivalence::IsoOrAnti, filter))?;
        println!(
            "{:<36} {:>9} {:>9} {:>12} {:>7.2}",
            filter.to_string(),
            iso.count,
            anti.count,
            iso.provenance.double_cosets_tested,
            start.elapsed().as_secs_f64()
        );
    }
    Ok(())
}
