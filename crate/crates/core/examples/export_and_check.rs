//! Exports every semiring of order 3 as JSONL, reads the file back and
//! verifies each record, then corrupts one product and checks again.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter};

use semirings::records::{check_jsonl, write_jsonl, LineVerdict};
use semirings::{Census, CensusQuery, Equivalence, Filter};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = CensusQuery::new(3, Equivalence::Iso, Filter::NONE);
    let result = Census::new().enumerate(&q)?;
    let pairs = result.semirings.unwrap_or_default();

    let dir = std::env::temp_dir().join("semirings-export-example");
    fs::create_dir_all(&dir)?;
    let path = dir.join("order3.jsonl");
    write_jsonl(BufWriter::new(File::create(&path)?), &q, &pairs)?;
    println!("wrote {} records to {}", pairs.len(), path.display());

    let summary = check_jsonl(BufReader::new(File::open(&path)?))?;
    println!("{} records, {} invalid", summary.records, summary.invalid);

    // Rewrite the multiplication of the last record as x * y = y + 1 mod 3.
    let text = fs::read_to_string(&path)?;
    let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
    let last = lines.len() - 2;
    let mut record: serde_json::Value = serde_json::from_str(&lines[last])?;
    record["mul"] = serde_json::json!([[1, 2, 0], [1, 2, 0], [1, 2, 0]]);
    lines[last] = record.to_string();
    fs::write(&path, lines.join("\n") + "\n")?;

    let summary = check_jsonl(BufReader::new(File::open(&path)?))?;
    for r in &summary.reports {
        if let LineVerdict::Invalid(report) = &r.verdict {
            println!("line {}: {report}", r.line);
        }
    }
    println!("{} records, {} invalid", summary.records, summary.invalid);
    fs::remove_dir_all(&dir)?;
    Ok(())
}
