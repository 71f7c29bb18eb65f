//! The analysis document and its JSON, CSV and table renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::isolated::{self, ResidueSignature};
use crate::pair::{DlsSolution, PairSemigroup};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub rows: usize,
    pub cols: usize,
    /// Row and column indices in `entries` start at this value.
    pub index_base: usize,
    pub entries: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDoc {
    pub residue: i64,
    pub gaps: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionDoc {
    pub modulus: i64,
    pub blocks: Vec<BlockDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionDoc {
    pub generators: Vec<i64>,
    pub perfect: bool,
}

/// Everything the library computes about one pair `<a, b>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    pub schema: u32,
    pub generators: Vec<i64>,
    pub dls: DlsSolution,
    pub frobenius: i64,
    pub isolated_count: i64,
    pub min_isolated_gap: i64,
    pub isolated_gaps: Vec<i64>,
    pub gap_matrix: MatrixDoc,
    pub partition_mod_a: PartitionDoc,
    pub minimal_isolated_gaps: Vec<i64>,
    pub dual_set: Vec<i64>,
    pub h_residue_signature: ResidueSignature,
    pub smith_extension: ExtensionDoc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Table,
}

impl AnalysisDocument {
    pub fn new(s: &PairSemigroup) -> Result<Self> {
        let profile = isolated::isolated_gaps(s);
        let matrix = isolated::gap_matrix(s);
        let partition = isolated::residue_partition(s, s.a())?;
        let ext = isolated::smith_extension(s)?;
        Ok(Self {
            schema: SCHEMA_VERSION,
            generators: s.generators().to_vec(),
            dls: s.dls(),
            frobenius: s.frobenius(),
            isolated_count: profile.count,
            min_isolated_gap: profile.h,
            isolated_gaps: profile.gaps,
            gap_matrix: MatrixDoc {
                rows: matrix.rows,
                cols: matrix.cols,
                index_base: 0,
                entries: matrix.entries,
            },
            partition_mod_a: PartitionDoc {
                modulus: partition.modulus,
                blocks: partition
                    .blocks
                    .into_iter()
                    .map(|(residue, gaps)| BlockDoc { residue, gaps })
                    .collect(),
            },
            minimal_isolated_gaps: isolated::minimal_isolated_gaps(s),
            dual_set: isolated::dual_set(s).elements,
            h_residue_signature: isolated::h_residue_signature(s),
            smith_extension: ExtensionDoc {
                perfect: isolated::is_perfect(&ext),
                generators: ext.generators().to_vec(),
            },
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Table => self.to_table(),
        }
    }

    /// Pretty JSON with keys in sorted order and a trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("document is always serializable");
        let mut out = serde_json::to_string_pretty(&value).expect("value is always serializable");
        out.push('\n');
        out
    }

    /// One row per isolated gap: `gap,row_index,col_index,residue_mod_a`, 0-based indices.
    pub fn to_csv(&self) -> String {
        let a = self.generators[0];
        let mut cells: Vec<(i64, usize, usize)> = self
            .gap_matrix
            .entries
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &x)| (x, r, c)))
            .collect();
        cells.sort_unstable();

        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["gap", "row_index", "col_index", "residue_mod_a"])
            .expect("writing to memory");
        for (gap, r, c) in cells {
            w.serialize((gap, r, c, gap % a))
                .expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
    }

    pub fn to_table(&self) -> String {
        let join = |xs: &[i64]| xs.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        let (a, b) = (self.generators[0], self.generators[1]);
        let signature = match self.h_residue_signature {
            ResidueSignature::UnitGap => "h = 1".to_string(),
            ResidueSignature::Residues { mod_a, mod_b } => format!("({mod_a}, {mod_b})"),
        };
        let ext = &self.smith_extension;
        let rows = [
            ("semigroup", format!("<{a}, {b}>")),
            ("dls (u, v)", format!("({}, {})", self.dls.u, self.dls.v)),
            ("frobenius", self.frobenius.to_string()),
            ("isolated count", self.isolated_count.to_string()),
            ("min isolated gap", self.min_isolated_gap.to_string()),
            ("isolated gaps", join(&self.isolated_gaps)),
            ("minimal mod a", join(&self.minimal_isolated_gaps)),
            ("dual set", join(&self.dual_set)),
            ("h residues (a, b)", signature),
            (
                "smith extension",
                format!(
                    "<{}> {}",
                    join(&ext.generators).replace(' ', ", "),
                    if ext.perfect {
                        "perfect"
                    } else {
                        "not perfect"
                    }
                ),
            ),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &rows {
            writeln!(out, "{k:<width$}  {v}").unwrap();
        }
        let m = &self.gap_matrix;
        writeln!(out, "\ngap matrix ({} x {})", m.rows, m.cols).unwrap();
        out.push_str(&matrix_table(&m.entries));
        writeln!(out, "\npartition mod {}", self.partition_mod_a.modulus).unwrap();
        for block in &self.partition_mod_a.blocks {
            writeln!(out, "  {}: {}", block.residue, join(&block.gaps)).unwrap();
        }
        out
    }
}

/// Right-aligned matrix rows, two-space indent.
pub fn matrix_table(entries: &[Vec<i64>]) -> String {
    let cell = entries
        .iter()
        .flatten()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in entries {
        let line: Vec<String> = row.iter().map(|x| format!("{x:>cell$}")).collect();
        writeln!(out, "  {}", line.join(" ")).unwrap();
    }
    out
}
