//! Recomputes the four reference tables up to a given order and prints them
//! as markdown. Cells that differ from the published value are marked `!`,
//! cells without a published value `*`.
//!
//! ```bash
//! cargo run --release -p semirings --example reproduce_tables -- 5
//! ```

use semirings::report::{Format, TableDocument};
use semirings::Census;

fn main() -> semirings::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("order must be an integer"))
        .unwrap_or(4);
    let census = Census::new();
    for id in 1..=4 {
        let doc = TableDocument::compute(&census, id, max)?;
        println!("{}", doc.render(Format::Markdown));
    }
    Ok(())
}
