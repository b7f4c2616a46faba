//! OEIS b-files and the mapping from sequence ids to the counts computed here.
//!
//! A b-file is a list of `index value` lines; lines starting with `#` and
//! blank lines are ignored. Triangles are read row by row. How each row is
//! laid out (which columns, starting where) varies between sequences, so it
//! is carried by a [`SequenceSpec`], loaded from fixture metadata or taken
//! from [`SequenceSpec::builtin`].

use std::path::Path;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::dist::{total_inversions, DistTable};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub sequence_id: String,
    pub rows: Vec<(i64, BigInt)>,
}

impl BFile {
    pub fn parse(sequence_id: &str, text: &str) -> Result<BFile> {
        let mut rows: Vec<(i64, BigInt)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected \"index value\", got {line:?}"),
                });
            };
            let idx: i64 = idx.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("bad index {idx:?}"),
            })?;
            let val: BigInt = val.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("bad value {val:?}"),
            })?;
            if let Some(&(prev, _)) = rows.last() {
                if idx <= prev {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("index {idx} does not increase (previous {prev})"),
                    });
                }
            }
            rows.push((idx, val));
        }
        Ok(BFile {
            sequence_id: sequence_id.to_string(),
            rows,
        })
    }

    pub fn read(sequence_id: &str, path: &Path) -> Result<BFile> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid {
            what: "b-file path",
            msg: format!("{}: {e}", path.display()),
        })?;
        BFile::parse(sequence_id, &text)
    }
}

/// The count a sequence lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// `ic(n)`
    IcN,
    /// `ic(n,k)` as a triangle
    IcNk,
    /// `ic_r(n)` as a triangle
    IcRN,
    /// `dc_r(n)` as a triangle
    DcRN,
}

/// Which entries make up row `n` of a triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Columns {
    /// a single value per `n`
    Scalar,
    /// `r = 0 ..= last nonzero`
    ToLastNonzero,
    /// `r = 0 ..= n`
    ZeroThroughN,
    /// `k = 1 ..= n`
    OneThroughN,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceSpec {
    pub id: String,
    pub quantity: Quantity,
    /// b-file index of the first term
    pub offset: i64,
    /// value of `n` for the first term or row
    pub first_n: u32,
    pub columns: Columns,
    /// where the fixture's values came from
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct FixtureMeta {
    pub sequences: Vec<SequenceSpec>,
}

impl FixtureMeta {
    pub fn read(path: &Path) -> Result<FixtureMeta> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid {
            what: "fixture metadata",
            msg: format!("{}: {e}", path.display()),
        })?;
        serde_json::from_str(&text).map_err(|e| Error::Invalid {
            what: "fixture metadata",
            msg: e.to_string(),
        })
    }

    pub fn find(&self, id: &str) -> Option<&SequenceSpec> {
        self.sequences.iter().find(|s| s.id == id)
    }
}

impl SequenceSpec {
    /// Layouts used when no metadata file is supplied.
    pub fn builtin(id: &str) -> Result<SequenceSpec> {
        let (quantity, offset, first_n, columns) = match id {
            "A189052" => (Quantity::IcN, 0, 0, Columns::Scalar),
            "A189073" => (Quantity::IcNk, 1, 1, Columns::OneThroughN),
            "A189074" => (Quantity::IcRN, 0, 0, Columns::ToLastNonzero),
            "A238343" => (Quantity::DcRN, 0, 0, Columns::ZeroThroughN),
            "A238344" => (Quantity::DcRN, 0, 0, Columns::ToLastNonzero),
            other => return Err(Error::UnknownSequence(other.to_string())),
        };
        Ok(SequenceSpec {
            id: id.to_string(),
            quantity,
            offset,
            first_n,
            columns,
            provenance: None,
        })
    }

    /// `(n, value)` for every term with `first_n <= n <= max_n`, in reading
    /// order.
    pub fn terms(&self, max_n: u32) -> Result<Vec<(u32, BigUint)>> {
        let mut out = Vec::new();
        let ns = self.first_n..=max_n;
        match (self.quantity, self.columns) {
            (Quantity::IcN, Columns::Scalar) => {
                let totals = total_inversions(max_n)?;
                out.extend(ns.map(|n| (n, totals.ic(n))));
            }
            (Quantity::IcNk, Columns::OneThroughN) => {
                let totals = total_inversions(max_n)?;
                for n in ns {
                    out.extend((1..=n).map(|k| (n, totals.ic_k(n, k))));
                }
            }
            (Quantity::IcRN | Quantity::DcRN, cols) => {
                let table = if self.quantity == Quantity::IcRN {
                    DistTable::inversions(max_n, None)?
                } else {
                    DistTable::descents(max_n, None)?
                };
                for n in ns {
                    let row = match cols {
                        Columns::ToLastNonzero => table.row(n),
                        Columns::ZeroThroughN => (0..=n).map(|r| table.get(n, r)).collect(),
                        _ => return Err(self.bad_layout()),
                    };
                    out.extend(row.into_iter().map(|v| (n, v)));
                }
            }
            _ => return Err(self.bad_layout()),
        }
        Ok(out)
    }

    fn bad_layout(&self) -> Error {
        Error::Invalid {
            what: "sequence layout",
            msg: format!("{:?} cannot be read as {:?}", self.quantity, self.columns),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub index: i64,
    pub n: u32,
    pub expected: BigUint,
    pub found: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OeisReport {
    pub sequence_id: String,
    pub max_n: u32,
    /// b-file entries whose `n` is within range
    pub compared: usize,
    pub agreed: usize,
    /// b-file entries beyond `max_n`
    pub skipped: usize,
    /// computed terms with no b-file entry
    pub missing: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl OeisReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none() && self.compared > 0 && self.agreed == self.compared
    }
}

/// Compares a b-file against the computed terms up to `max_n`.
pub fn cross_check(spec: &SequenceSpec, bfile: &BFile, max_n: u32) -> Result<OeisReport> {
    let terms = spec.terms(max_n)?;
    let mut report = OeisReport {
        sequence_id: spec.id.clone(),
        max_n,
        compared: 0,
        agreed: 0,
        skipped: 0,
        missing: 0,
        first_mismatch: None,
    };
    let mut seen = vec![false; terms.len()];
    for (index, value) in &bfile.rows {
        let pos = index - spec.offset;
        let Some((n, expected)) = usize::try_from(pos).ok().and_then(|p| terms.get(p)) else {
            report.skipped += 1;
            continue;
        };
        seen[pos as usize] = true;
        report.compared += 1;
        if BigInt::from(expected.clone()) == *value {
            report.agreed += 1;
        } else if report.first_mismatch.is_none() {
            report.first_mismatch = Some(Mismatch {
                index: *index,
                n: *n,
                expected: expected.clone(),
                found: value.clone(),
            });
        }
    }
    report.missing = seen.iter().filter(|s| !**s).count();
    Ok(report)
}
