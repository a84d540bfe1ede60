//! TSV layouts of the five summary tables.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use super::{ClassReport, MethodSpec, MethodTag};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    /// Zeta invariants on all graphs.
    Zeta,
    /// Spectra, generalized spectra and switching on all graphs.
    Spectral,
    /// The same on md2 graphs.
    SpectralMd2,
    /// Combined spectra.
    Combined,
    /// Cones and complements.
    ConesComplements,
}

impl Table {
    pub const ALL: [Table; 5] = [
        Table::Zeta,
        Table::Spectral,
        Table::SpectralMd2,
        Table::Combined,
        Table::ConesComplements,
    ];

    pub fn file_name(self) -> &'static str {
        match self {
            Table::Zeta => "table1.tsv",
            Table::Spectral => "table2.tsv",
            Table::SpectralMd2 => "table3.tsv",
            Table::Combined => "table4.tsv",
            Table::ConesComplements => "table5.tsv",
        }
    }

    /// Columns after `n` and the graph count.
    pub fn columns(self) -> Vec<MethodSpec> {
        use MethodTag::*;
        let (tags, md2): (&[MethodTag], bool) = match self {
            Table::Zeta => (&[Z, ZZbar, T, TTbar], false),
            Table::Spectral => (&[A, L, Q, PhiAD, PhiADJ, GM, GMstar], false),
            Table::SpectralMd2 => (&[A, L, Q, Z, PhiAD, PhiADJ], true),
            Table::Combined => (&[A, AL, ALQ, ALQZ, PhiAD], false),
            Table::ConesComplements => (&[Astar, AAbar, Qstar, QQbar], false),
        };
        tags.iter()
            .map(|&t| MethodSpec { tag: t, md2_only: md2 })
            .collect()
    }
}

/// One TSV per table, rows for every order present in `reports`.
pub fn emit_tables(reports: &[ClassReport]) -> Result<Vec<(Table, String)>> {
    Table::ALL
        .iter()
        .map(|&t| Ok((t, emit_table(t, reports)?)))
        .collect()
}

pub fn emit_table(table: Table, reports: &[ClassReport]) -> Result<String> {
    let cols = table.columns();
    let orders: BTreeSet<usize> = reports.iter().map(|r| r.n).collect();
    let mut s = String::from("n\tgraphs");
    for c in &cols {
        let _ = write!(s, "\t{}", c.tag);
    }
    s.push('\n');
    for n in orders {
        let find = |c: &MethodSpec| {
            reports
                .iter()
                .find(|r| r.n == n && r.method == *c)
                .ok_or_else(|| Error::MissingReport(format!("{c} at n = {n}")))
        };
        let row: Vec<&ClassReport> = cols.iter().map(find).collect::<Result<_>>()?;
        let _ = write!(s, "{n}\t{}", row[0].total);
        for r in row {
            let _ = write!(s, "\t{}", r.undetermined);
        }
        s.push('\n');
    }
    Ok(s)
}

/// Writes every table whose columns are all present; returns the tables
/// written.
pub fn write_tables(reports: &[ClassReport], outdir: &Path) -> Result<Vec<Table>> {
    let mut written = Vec::new();
    for t in Table::ALL {
        match emit_table(t, reports) {
            Ok(tsv) => {
                std::fs::write(outdir.join(t.file_name()), tsv)?;
                written.push(t);
            }
            Err(Error::MissingReport(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{run_census, CensusConfig};

    #[test]
    fn table_rows() {
        let mut methods = Table::Zeta.columns();
        methods.extend(Table::SpectralMd2.columns());
        let reports = run_census(&CensusConfig::new(6, methods)).unwrap();
        assert_eq!(
            emit_table(Table::Zeta, &reports).unwrap(),
            "n\tgraphs\tZ\tZZbar\tT\tTTbar\n6\t156\t94\t22\t75\t0\n"
        );
        assert!(matches!(
            emit_tables(&reports),
            Err(Error::MissingReport(_))
        ));
        let dir = tempfile::tempdir().unwrap();
        let written = write_tables(&reports, dir.path()).unwrap();
        assert_eq!(written, vec![Table::Zeta, Table::SpectralMd2]);
        let t3 = std::fs::read_to_string(dir.path().join("table3.tsv")).unwrap();
        assert_eq!(t3.lines().nth(1).unwrap(), "6\t62\t0\t0\t4\t0\t0\t0");
    }
}
