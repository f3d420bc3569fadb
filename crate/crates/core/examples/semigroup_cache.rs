//! Stores a semigroup census on disk and reloads it. A census run with a
//! cache directory reads these files instead of regenerating them.

use semirings::cache::SemigroupCache;
use semirings::{Census, CensusQuery, Equivalence, Filter, Reach, SemigroupConstraint};

fn main() -> semirings::Result<()> {
    let dir = std::env::temp_dir().join("semirings-cache-example");
    let cache = SemigroupCache::new(&dir);
    let c = SemigroupConstraint::commutative();

    let tables = cache.tables(5, &c, Equivalence::Iso, Reach::Standard)?;
    let path = cache.path_for(5, &c, Equivalence::Iso);
    println!("{} commutative semigroups of order 5 cached in {}", tables.len(), path.display());
    let header = std::fs::read_to_string(&path)
        .map_err(|e| semirings::Error::Io { path: path.clone(), source: e })?;
    println!("header: {}", header.lines().next().unwrap_or(""));
    assert_eq!(cache.load(5, &c, Equivalence::Iso)?, Some(tables));

    let census = Census::new().cache_dir(Some(dir.clone()));
    let q = CensusQuery::new(4, Equivalence::Iso, Filter::NONE);
    println!("{q}: {}", census.count(&q)?.count);
    let _ = std::fs::remove_dir_all(&dir);
    Ok(())
}
