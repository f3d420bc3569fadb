//! Reproductions of the four published count tables: all semirings,
//! commutative ones, additively idempotent ones, and commutative additively
//! idempotent ones.
//!
//! Every cell is computed afresh. Published values are kept alongside so each
//! rendered cell can say whether it agrees with print, fills a gap (`*`), or
//! disagrees (`!`). Cells outside the engine's reach render as `-`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::census::{Census, CensusQuery, Filter};
use crate::error::{Error, Result};
use crate::table::Equivalence;

/// A cell of a published table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Published {
    Value(u64),
    /// Printed as `?`: not known at publication.
    Unknown,
    /// Printed as `-`: not attempted.
    Missing,
}

use Published::{Missing as M, Unknown as U};

const fn v(x: u64) -> Published {
    Published::Value(x)
}

pub const COLUMN_NAMES: [&str; 4] = ["no additional constraints", "with 0", "with 1", "with 0 + 1"];

const TABLE_1: [[Published; 8]; 7] = [
    [v(1), U, v(1), v(1), v(1), U, v(1), v(1)],
    [v(10), U, v(4), v(2), v(9), U, v(4), v(2)],
    [v(132), U, v(22), v(6), v(106), U, v(21), v(6)],
    [v(2341), U, v(169), v(40), v(1713), U, v(155), v(38)],
    [v(57427), U, v(1819), v(295), v(38247), U, v(1561), v(262)],
    [v(7571579), U, v(41104), v(3246), v(4102358), U, v(30112), v(2681)],
    [M, M, U, v(59314), M, M, U, v(43331)],
];

const TABLE_2: [[Published; 4]; 7] = [
    [v(1), v(1), v(1), v(1)],
    [v(8), v(4), v(4), v(4)],
    [v(80), v(18), v(20), v(18)],
    [v(1067), v(169), v(141), v(169)],
    [v(18188), v(1990), v(1276), v(1990)],
    [v(543458), v(32212), v(17621), v(2075)],
    [U, U, U, v(25640)],
];

const TABLE_3: [[Published; 8]; 8] = [
    [v(1), v(1), v(1), v(1), v(1), v(1), v(1), v(1)],
    [v(6), v(2), v(2), v(1), v(5), v(2), v(2), v(1)],
    [v(61), v(12), v(11), v(3), v(45), v(10), v(10), v(3)],
    [v(866), v(129), v(73), v(20), v(581), v(93), v(64), v(18)],
    [v(15751), v(1852), v(703), v(149), v(9750), v(1207), v(574), v(125)],
    [v(354409), v(33391), v(9195), v(1488), v(205744), v(20142), v(6835), v(1150)],
    [v(9908909), U, U, v(18554), v(5470437), U, U, v(13171)],
    [M, U, U, v(295292), U, U, U, v(116274)],
];

const TABLE_4: [[Published; 4]; 8] = [
    [v(1), v(1), v(1), v(1)],
    [v(4), v(2), v(2), v(1)],
    [v(29), v(8), v(9), v(3)],
    [v(289), v(57), v(55), v(16)],
    [v(3589), v(580), v(437), v(100)],
    [v(53661), v(6639), v(4296), v(794)],
    [v(949843), v(96264), v(52043), v(7493)],
    [U, U, U, U],
];

/// Which semirings a table counts and under which equivalences.
#[derive(Clone, Copy, Debug)]
pub struct TableLayout {
    pub id: u8,
    pub title: &'static str,
    pub base: Filter,
    pub modes: &'static [Equivalence],
}

const BOTH: &[Equivalence] = &[Equivalence::Iso, Equivalence::IsoOrAnti];
const ISO: &[Equivalence] = &[Equivalence::Iso];

impl TableLayout {
    pub fn get(id: u8) -> Result<Self> {
        let base = Filter::NONE;
        let (title, base, modes) = match id {
            1 => ("semirings", base, BOTH),
            2 => (
                "commutative semirings",
                Filter {
                    commutative_mul: true,
                    ..base
                },
                ISO,
            ),
            3 => ("ai-semirings", Filter { ai: true, ..base }, BOTH),
            4 => (
                "commutative ai-semirings",
                Filter {
                    ai: true,
                    commutative_mul: true,
                    ..base
                },
                ISO,
            ),
            _ => return Err(Error::Unsupported(format!("there is no table {id}; choose 1 to 4"))),
        };
        Ok(TableLayout {
            id,
            title,
            base,
            modes,
        })
    }

    pub fn columns(&self) -> Vec<Column> {
        self.modes
            .iter()
            .flat_map(|&equiv| {
                COLUMN_NAMES.iter().enumerate().map(move |(i, &name)| Column {
                    name,
                    equiv,
                    filter: Filter {
                        with_zero: i & 1 != 0,
                        with_one: i & 2 != 0,
                        ..self.base
                    },
                })
            })
            .collect()
    }

    /// The published cell, or `Unknown` past the last published row.
    pub fn published(&self, n: usize, column: usize) -> Published {
        let Some(r) = n.checked_sub(1) else {
            return Published::Unknown;
        };
        let cell = match self.id {
            1 => TABLE_1.get(r).map(|row| row[column]),
            2 => TABLE_2.get(r).map(|row| row[column]),
            3 => TABLE_3.get(r).map(|row| row[column]),
            _ => TABLE_4.get(r).map(|row| row[column]),
        };
        cell.unwrap_or(Published::Unknown)
    }

    /// Published cells in row `n` that contradict an inequality every census
    /// obeys: adding a constraint never raises a count, and identifying
    /// anti-isomorphic semirings never raises one either.
    pub fn published_inconsistencies(&self, n: usize) -> Vec<String> {
        let columns = self.columns();
        let value = |i: usize| match self.published(n, i) {
            Published::Value(v) => Some(v),
            _ => None,
        };
        let mut found = Vec::new();
        for (i, big) in columns.iter().enumerate() {
            for (j, small) in columns.iter().enumerate() {
                let stronger = (!big.filter.with_zero || small.filter.with_zero)
                    && (!big.filter.with_one || small.filter.with_one);
                let coarser = big.equiv == small.equiv || small.equiv == Equivalence::IsoOrAnti;
                if i == j || !stronger || !coarser {
                    continue;
                }
                if let (Some(b), Some(s)) = (value(i), value(j)) {
                    if s > b {
                        found.push(format!(
                            "published n = {n}, {} ({s}) exceeds {} ({b})",
                            small.heading(),
                            big.heading()
                        ));
                    }
                }
            }
        }
        found
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Column {
    pub name: &'static str,
    pub equiv: Equivalence,
    pub filter: Filter,
}

impl Column {
    pub fn heading(&self) -> String {
        let mode = match self.equiv {
            Equivalence::Iso => "up to isomorphism",
            Equivalence::IsoOrAnti => "up to isomorphism or anti-isomorphism",
        };
        format!("{mode}: {}", self.name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    /// `None` when the census is out of reach.
    pub computed: Option<u64>,
    pub published: Published,
}

impl Cell {
    pub fn marker(&self) -> &'static str {
        match (self.computed, self.published) {
            (None, _) => "",
            (Some(c), Published::Value(p)) if c == p => "",
            (Some(_), Published::Value(_)) => "!",
            (Some(_), _) => "*",
        }
    }

    pub fn render(&self) -> String {
        match self.computed {
            None => "-".to_string(),
            Some(c) => format!("{c}{}", self.marker()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub cells: Vec<Cell>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Markdown,
    Jsonl,
}

/// A reproduced table, ready to render.
#[derive(Clone, Debug)]
pub struct TableDocument {
    pub layout: TableLayout,
    pub columns: Vec<Column>,
    pub rows: Vec<TableRow>,
}

impl TableDocument {
    /// Computes every cell for orders `1..=max_order`.
    pub fn compute(census: &Census, id: u8, max_order: usize) -> Result<Self> {
        let layout = TableLayout::get(id)?;
        let columns = layout.columns();
        let rows = (1..=max_order)
            .map(|n| {
                let cells = columns
                    .iter()
                    .enumerate()
                    .map(|(i, col)| {
                        let q = CensusQuery::new(n, col.equiv, col.filter);
                        let computed = match census.count(&q) {
                            Ok(r) => Some(r.count),
                            Err(Error::Unsupported(_)) => None,
                            Err(e) => return Err(e),
                        };
                        Ok(Cell {
                            computed,
                            published: layout.published(n, i),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(TableRow { n, cells })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TableDocument {
            layout,
            columns,
            rows,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Markdown => self.to_markdown(),
            Format::Jsonl => self.to_jsonl(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n");
        for c in &self.columns {
            out.push(',');
            out.push_str(&c.heading());
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.n.to_string());
            for cell in &row.cells {
                out.push(',');
                out.push_str(&cell.render());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!(
            "Numbers of {} with n elements (table {})\n\n",
            self.layout.title, self.layout.id
        );
        out.push_str("| n |");
        for c in &self.columns {
            let _ = write!(out, " {} |", c.heading());
        }
        out.push_str("\n|---|");
        out.push_str(&"---:|".repeat(self.columns.len()));
        out.push('\n');
        let mut notes = Vec::new();
        for row in &self.rows {
            let _ = write!(out, "| {} |", row.n);
            for (cell, col) in row.cells.iter().zip(&self.columns) {
                let _ = write!(out, " {} |", cell.render());
                if let (Some(c), Published::Value(p)) = (cell.computed, cell.published) {
                    if c != p {
                        notes.push(format!(
                            "! n = {}, {}: computed {c}, published {p}",
                            row.n,
                            col.heading()
                        ));
                    }
                }
            }
            out.push('\n');
        }
        out.push_str("\n`*` computed here; no published value. `-` not computed.\n");
        for row in &self.rows {
            for note in self.layout.published_inconsistencies(row.n) {
                notes.push(format!("? {note}, which no census allows"));
            }
        }
        for note in notes {
            out.push_str(&note);
            out.push('\n');
        }
        out
    }

    pub fn to_jsonl(&self) -> String {
        #[derive(Serialize)]
        struct Line<'a> {
            table: u8,
            n: usize,
            column: &'a str,
            equiv: Equivalence,
            computed: Option<u64>,
            published: Option<u64>,
            note: &'static str,
        }
        let mut out = String::new();
        for row in &self.rows {
            for (cell, col) in row.cells.iter().zip(&self.columns) {
                let line = Line {
                    table: self.layout.id,
                    n: row.n,
                    column: col.name,
                    equiv: col.equiv,
                    computed: cell.computed,
                    published: match cell.published {
                        Published::Value(p) => Some(p),
                        _ => None,
                    },
                    note: match cell.marker() {
                        "*" => "unpublished",
                        "!" => "differs from published",
                        _ if cell.computed.is_none() => "not computed",
                        _ => "",
                    },
                };
                out.push_str(&serde_json::to_string(&line).expect("serialisable"));
                out.push('\n');
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layouts() {
        assert_eq!(TableLayout::get(1).unwrap().columns().len(), 8);
        assert_eq!(TableLayout::get(2).unwrap().columns().len(), 4);
        assert!(TableLayout::get(5).is_err());
        let t3 = TableLayout::get(3).unwrap();
        assert_eq!(t3.published(4, 0), Published::Value(866));
        assert_eq!(t3.published(8, 0), Published::Missing);
        assert_eq!(t3.published(9, 0), Published::Unknown);
        let cols = t3.columns();
        assert!(cols[3].filter.with_zero && cols[3].filter.with_one && cols[3].filter.ai);
        assert_eq!(cols[4].equiv, Equivalence::IsoOrAnti);
    }

    #[test]
    fn table_one_to_order_three() {
        let doc = TableDocument::compute(&Census::new(), 1, 3).unwrap();
        let row: Vec<String> = doc.rows[2].cells.iter().map(Cell::render).collect();
        assert_eq!(row[0], "132");
        assert!(row[1].ends_with('*'));
        assert_eq!(&row[2..4], &["22", "6"]);
        assert_eq!(row[4], "106");
        assert!(row[5].ends_with('*'));
        assert_eq!(&row[6..], &["21", "6"]);
        let csv = doc.to_csv();
        assert!(csv.starts_with("n,up to isomorphism: no additional constraints,up to isomorphism: with 0,"));
        assert_eq!(csv.lines().count(), 4);
    }

    #[test]
    fn published_tables_are_checked_for_consistency() {
        let t2 = TableLayout::get(2).unwrap();
        assert!(t2.published_inconsistencies(3).is_empty());
        let bad = t2.published_inconsistencies(4);
        assert_eq!(bad.len(), 1);
        assert!(bad[0].contains("with 0 + 1 (169) exceeds up to isomorphism: with 1 (141)"));
        for id in [1, 3, 4] {
            let layout = TableLayout::get(id).unwrap();
            assert!((1..=8).all(|n| layout.published_inconsistencies(n).is_empty()), "{id}");
        }
    }

    #[test]
    fn unreachable_cells_render_as_dashes() {
        let cell = Cell {
            computed: None,
            published: Published::Value(5),
        };
        assert_eq!(cell.render(), "-");
        let differs = Cell {
            computed: Some(4),
            published: Published::Value(5),
        };
        assert_eq!(differs.render(), "4!");
    }
}
