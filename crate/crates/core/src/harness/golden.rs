//! The table of all 24 permutations of order 4 with their `Ic`, `Mc` and `Sc`
//! codes and the `El` sets of each code.
//!
//! The fixture is tab-separated with a header line. Rows are grouped into
//! blocks of equal inverse descent set, separated by one blank line, in the
//! order they were transcribed. Codes and permutations are digit strings,
//! sets are concatenated digits, and `-` marks the empty set. `Sc` is only
//! available as fixture data; every other column is recomputed on load.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use crate::codes::{ic, mc, SubdiagonalWord};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::posset::PositionSet;
use crate::set_stats::el_set;

pub const HEADER: &str = "sigma\tIc\tEl∘Ic\tMc\tEl∘Mc\tSc\tEl∘Sc";

/// The fixture shipped with the crate.
pub const SHIPPED_FIXTURE: &str = include_str!("../../fixtures/table_n4.tsv");

const ORDER: usize = 4;
const ROWS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenRow {
    pub sigma: Permutation,
    pub ic: SubdiagonalWord,
    pub el_ic: PositionSet,
    pub mc: SubdiagonalWord,
    pub el_mc: PositionSet,
    pub sc: SubdiagonalWord,
    pub el_sc: PositionSet,
}

impl GoldenRow {
    /// Recomputes every column except `Sc` from `sigma` and the given `Sc`.
    pub fn compute(sigma: Permutation, sc: SubdiagonalWord) -> Self {
        let ic = ic(&sigma);
        let mc = mc(&sigma);
        GoldenRow {
            el_ic: el_set(&ic),
            el_mc: el_set(&mc),
            el_sc: el_set(&sc),
            sigma,
            ic,
            mc,
            sc,
        }
    }

    fn to_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.sigma.to_compact(),
            self.ic,
            self.el_ic,
            self.mc,
            self.el_mc,
            self.sc,
            self.el_sc
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTable {
    blocks: Vec<Vec<GoldenRow>>,
}

impl GoldenTable {
    pub fn blocks(&self) -> &[Vec<GoldenRow>] {
        &self.blocks
    }

    pub fn rows(&self) -> impl Iterator<Item = &GoldenRow> {
        self.blocks.iter().flatten()
    }

    pub fn shipped() -> Result<Self> {
        parse_golden(SHIPPED_FIXTURE)
    }
}

pub fn load_golden_fixture(path: impl AsRef<Path>) -> Result<GoldenTable> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_golden(&text)
}

/// Parses and validates fixture text.
pub fn parse_golden(text: &str) -> Result<GoldenTable> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == HEADER => {}
        other => {
            return Err(Error::Parse(format!(
                "expected header {HEADER:?}, found {:?}",
                other.unwrap_or("")
            )))
        }
    }

    let mut blocks: Vec<Vec<GoldenRow>> = vec![Vec::new()];
    let mut row_no = 0;
    for line in lines {
        if line.trim().is_empty() {
            if !blocks.last().unwrap().is_empty() {
                blocks.push(Vec::new());
            }
            continue;
        }
        row_no += 1;
        let row = parse_row(row_no, line)?;
        blocks.last_mut().unwrap().push(row);
    }
    if blocks.last().is_some_and(Vec::is_empty) {
        blocks.pop();
    }

    if row_no != ROWS {
        return Err(Error::Parse(format!(
            "expected {ROWS} rows, found {row_no}"
        )));
    }
    let distinct: std::collections::BTreeSet<_> =
        blocks.iter().flatten().map(|r| r.sigma.clone()).collect();
    if distinct.len() != ROWS {
        return Err(Error::Parse(
            "rows do not list every permutation once".into(),
        ));
    }
    let mut row_no = 0;
    for block in &blocks {
        let iligne = block[0].sigma.iligne();
        for row in block {
            row_no += 1;
            if row.sigma.iligne() != iligne {
                return Err(row_error(
                    row_no,
                    &row.sigma,
                    format!("inverse descent set differs from its block ({iligne})"),
                ));
            }
        }
    }
    Ok(GoldenTable { blocks })
}

fn row_error(row: usize, sigma: &Permutation, message: String) -> Error {
    Error::Fixture {
        row,
        sigma: sigma.to_compact(),
        message,
    }
}

fn parse_row(row_no: usize, line: &str) -> Result<GoldenRow> {
    let fields: Vec<&str> = line.split('\t').collect();
    let bad = |message: String| Error::Fixture {
        row: row_no,
        sigma: fields.first().unwrap_or(&"").to_string(),
        message,
    };
    if fields.len() != 7 {
        return Err(bad(format!("expected 7 fields, found {}", fields.len())));
    }
    let sigma: Permutation = fields[0].parse().map_err(|e| bad(format!("{e}")))?;
    if sigma.n() != ORDER {
        return Err(bad(format!("permutation has order {}", sigma.n())));
    }
    let code = |i: usize| -> Result<SubdiagonalWord> {
        let w: SubdiagonalWord = fields[i].parse().map_err(|e| bad(format!("{e}")))?;
        if w.len() != ORDER {
            return Err(bad(format!("code {} has length {}", fields[i], w.len())));
        }
        Ok(w)
    };
    let set = |i: usize| PositionSet::parse(fields[i], ORDER).map_err(|e| bad(format!("{e}")));
    let given = GoldenRow {
        sigma: sigma.clone(),
        ic: code(1)?,
        el_ic: set(2)?,
        mc: code(3)?,
        el_mc: set(4)?,
        sc: code(5)?,
        el_sc: set(6)?,
    };

    let computed = GoldenRow::compute(sigma, given.sc.clone());
    let checks = [
        ("Ic", given.ic.to_string(), computed.ic.to_string()),
        ("El∘Ic", given.el_ic.to_string(), computed.el_ic.to_string()),
        ("Mc", given.mc.to_string(), computed.mc.to_string()),
        ("El∘Mc", given.el_mc.to_string(), computed.el_mc.to_string()),
        ("El∘Sc", given.el_sc.to_string(), computed.el_sc.to_string()),
    ];
    for (column, found, expected) in checks {
        if found != expected {
            return Err(bad(format!(
                "column {column} is {found}, recomputed {expected}"
            )));
        }
    }
    Ok(given)
}

/// Renders the table in fixture format, recomputing every column except
/// `Sc` and keeping the block order of `table`.
pub fn emit_table(table: &GoldenTable) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for (i, block) in table.blocks.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for row in block {
            let fresh = GoldenRow::compute(row.sigma.clone(), row.sc.clone());
            out.push_str(&fresh.to_line());
            out.push('\n');
        }
    }
    out
}

fn shipped_sc() -> &'static BTreeMap<Permutation, SubdiagonalWord> {
    static SC: OnceLock<BTreeMap<Permutation, SubdiagonalWord>> = OnceLock::new();
    SC.get_or_init(|| {
        GoldenTable::shipped()
            .expect("shipped fixture is valid")
            .rows()
            .map(|r| (r.sigma.clone(), r.sc.clone()))
            .collect()
    })
}

/// The tabulated `Sc` code of a permutation of order 4.
pub fn sc_code(sigma: &Permutation) -> Result<SubdiagonalWord> {
    if sigma.n() != ORDER {
        return Err(Error::ScUnavailable(sigma.n()));
    }
    Ok(shipped_sc()[sigma].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_fixture_is_consistent() {
        let table = GoldenTable::shipped().unwrap();
        assert_eq!(table.rows().count(), 24);
        assert_eq!(table.blocks().len(), 8);
        assert_eq!(emit_table(&table), SHIPPED_FIXTURE);
    }

    #[test]
    fn printed_rows() {
        let table = GoldenTable::shipped().unwrap();
        let find = |s: &str| {
            table
                .rows()
                .find(|r| r.sigma.to_compact() == s)
                .unwrap()
                .to_line()
        };
        assert_eq!(find("3412"), "3412\t2200\t13\t0200\t2\t1100\t2");
        assert_eq!(find("1234"), "1234\t0000\t-\t0000\t-\t0000\t-");
        assert_eq!(find("4321"), "4321\t3210\t123\t3210\t123\t3210\t123");
    }

    #[test]
    fn corrupted_mc_digit_names_the_row() {
        let bad = SHIPPED_FIXTURE.replace("3142\t1200\t3\t2200", "3142\t1200\t3\t1200");
        match parse_golden(&bad) {
            Err(Error::Fixture { sigma, message, .. }) => {
                assert_eq!(sigma, "3142");
                assert!(message.contains("Mc"), "{message}");
            }
            other => panic!("expected fixture error, got {other:?}"),
        }
    }

    #[test]
    fn structural_errors() {
        let no_header = SHIPPED_FIXTURE.replacen(HEADER, "sigma", 1);
        assert!(matches!(parse_golden(&no_header), Err(Error::Parse(_))));
        let short: String = SHIPPED_FIXTURE
            .lines()
            .take(10)
            .map(|l| format!("{l}\n"))
            .collect();
        assert!(matches!(parse_golden(&short), Err(Error::Parse(_))));
        let bad_sc = SHIPPED_FIXTURE.replace(
            "3412\t2200\t13\t0200\t2\t1100\t2",
            "3412\t2200\t13\t0200\t2\t1100\t13",
        );
        assert!(matches!(parse_golden(&bad_sc), Err(Error::Fixture { .. })));
        let moved = SHIPPED_FIXTURE.replace(
            "2341\t3000\t3\t3000\t3\t1000\t1\n\n",
            "\n2341\t3000\t3\t3000\t3\t1000\t1\n",
        );
        assert!(parse_golden(&moved).is_err());
    }

    #[test]
    fn sc_lookup() {
        let s: Permutation = "3124".parse().unwrap();
        assert_eq!(sc_code(&s).unwrap().to_string(), "2200");
        assert_eq!(
            sc_code(&Permutation::identity(5)),
            Err(Error::ScUnavailable(5))
        );
    }
}
