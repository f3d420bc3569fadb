//! On-disk cache of canonical semigroup tables, one file per
//! `(order, constraint, equivalence)`.
//!
//! The first line is a header recording the query, the engine version, the
//! number of tables, and a SHA-256 of the body. Each following line is one
//! table, its row-major entries written as digits. A file whose header does
//! not match the query or whose checksum fails is ignored and rewritten.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::semigroups::{canonical_semigroup_tables, Reach, SemigroupConstraint};
use crate::table::{Equivalence, OpTable};

pub const CACHE_DIR_ENV: &str = "SEMIRINGS_CACHE_DIR";
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
const MAGIC: &str = "semirings-semigroup-cache v1";

#[derive(Clone, Debug)]
pub struct SemigroupCache {
    dir: PathBuf,
}

fn tri(v: Option<bool>) -> &'static str {
    match v {
        None => "any",
        Some(true) => "yes",
        Some(false) => "no",
    }
}

fn header_fields(n: usize, c: &SemigroupConstraint, mode: Equivalence) -> String {
    format!(
        "engine={ENGINE_VERSION} n={n} commutative={} idempotent={} with_identity={} mode={mode}",
        tri(c.commutative),
        tri(c.idempotent),
        tri(c.with_identity)
    )
}

fn checksum(body: &str) -> String {
    Sha256::digest(body.as_bytes())
        .iter()
        .fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
}

pub fn encode(n: usize, c: &SemigroupConstraint, mode: Equivalence, tables: &[OpTable]) -> String {
    let mut body = String::with_capacity(tables.len() * (n * n + 1));
    for t in tables {
        for &e in t.entries() {
            body.push(char::from(b'0' + e));
        }
        body.push('\n');
    }
    format!(
        "{MAGIC} {} count={} sha256={}\n{body}",
        header_fields(n, c, mode),
        tables.len(),
        checksum(&body)
    )
}

/// Parses a cache file, checking it was written for exactly this query.
pub fn decode(
    text: &str,
    n: usize,
    c: &SemigroupConstraint,
    mode: Equivalence,
) -> std::result::Result<Vec<OpTable>, String> {
    let (header, body) = text.split_once('\n').ok_or("missing header")?;
    let expected = format!("{MAGIC} {} count=", header_fields(n, c, mode));
    let rest = header
        .strip_prefix(&expected)
        .ok_or_else(|| format!("header {header:?} does not match this query"))?;
    let (count, sum) = rest
        .split_once(" sha256=")
        .ok_or("header has no checksum")?;
    let count: usize = count.parse().map_err(|_| "bad count")?;
    if sum != checksum(body) {
        return Err("checksum mismatch".into());
    }
    let tables = body
        .lines()
        .map(|line| {
            let entries: Vec<usize> = line
                .bytes()
                .map(|b| b.wrapping_sub(b'0') as usize)
                .collect();
            OpTable::new(n, &entries).map_err(|e| e.to_string())
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if tables.len() != count {
        return Err(format!("expected {count} tables, found {}", tables.len()));
    }
    Ok(tables)
}

impl SemigroupCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        SemigroupCache { dir: dir.into() }
    }

    /// The cache named by `SEMIRINGS_CACHE_DIR`, if set.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_DIR_ENV)
            .filter(|v| !v.is_empty())
            .map(SemigroupCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, n: usize, c: &SemigroupConstraint, mode: Equivalence) -> PathBuf {
        self.dir.join(format!(
            "semigroups-n{n}-c{}-i{}-e{}-{mode}.txt",
            tri(c.commutative),
            tri(c.idempotent),
            tri(c.with_identity)
        ))
    }

    /// `Ok(None)` when there is no usable file for the query.
    pub fn load(
        &self,
        n: usize,
        c: &SemigroupConstraint,
        mode: Equivalence,
    ) -> Result<Option<Vec<OpTable>>> {
        let path = self.path_for(n, c, mode);
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::io(path, e)),
        };
        decode(&text, n, c, mode)
            .map(Some)
            .map_err(|message| Error::Cache { path, message })
    }

    pub fn store(
        &self,
        n: usize,
        c: &SemigroupConstraint,
        mode: Equivalence,
        tables: &[OpTable],
    ) -> Result<()> {
        fs::create_dir_all(&self.dir).map_err(|e| Error::io(&self.dir, e))?;
        let path = self.path_for(n, c, mode);
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, encode(n, c, mode, tables)).map_err(|e| {
            let _ = fs::remove_file(&tmp);
            Error::io(&tmp, e)
        })?;
        fs::rename(&tmp, &path).map_err(|e| Error::io(&path, e))
    }

    /// Cached tables, regenerating (and rewriting the file) on a miss or a
    /// damaged file.
    pub fn tables(
        &self,
        n: usize,
        c: &SemigroupConstraint,
        mode: Equivalence,
        reach: Reach,
    ) -> Result<Vec<OpTable>> {
        reach.check(n, c)?;
        if let Ok(Some(tables)) = self.load(n, c, mode) {
            return Ok(tables);
        }
        let tables = canonical_semigroup_tables(n, c, mode, reach)?;
        self.store(n, c, mode, &tables)?;
        Ok(tables)
    }
}
