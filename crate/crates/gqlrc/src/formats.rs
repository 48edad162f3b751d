//! File formats: incidence structures, eggs, code matrices (JSON, CSV, alist)
//! and reports.

use std::fmt::Write as _;
use std::sync::Arc;

use anyhow::{anyhow, bail, ensure, Context, Result};
use gqlrc_core::codes::{LinearCode, MinWeightReport};
use gqlrc_core::egg::Egg;
use gqlrc_core::gf::{Elem, Field};
use gqlrc_core::gq::{IncidenceStructure, LineKind, PointKind};
use gqlrc_core::lrc::{BoundCheck, RepairProfile};
use gqlrc_core::matrix::BinaryMatrix;
use gqlrc_core::pgeom::{ProjectiveSpace, Subspace};
use serde::{Deserialize, Serialize};

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub s: usize,
    pub t: usize,
    pub alpha: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointJson {
    pub id: usize,
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineJson {
    pub id: usize,
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<usize>,
    pub points: Vec<usize>,
}

/// Incidence structure file. Point types are `i`, `ii`, `iii` for `T(E)`
/// and `point` otherwise; line types are `a`, `b` or `line`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureJson {
    pub name: String,
    pub p: u32,
    pub params: Option<ParamsJson>,
    pub points: Vec<PointJson>,
    pub lines: Vec<LineJson>,
}

pub fn structure_to_json(g: &IncidenceStructure) -> String {
    let points = g
        .point_kinds()
        .iter()
        .enumerate()
        .map(|(id, k)| PointJson {
            id,
            kind: k.tag().to_string(),
            element: match k {
                PointKind::Tangent { element } => Some(*element),
                _ => None,
            },
        })
        .collect();
    let lines = g
        .line_kinds()
        .iter()
        .enumerate()
        .map(|(id, k)| LineJson {
            id,
            kind: k.tag().to_string(),
            element: match k {
                LineKind::Affine { element } | LineKind::EggElement { element } => Some(*element),
                LineKind::Plain => None,
            },
            points: g.line(id).to_vec(),
        })
        .collect();
    to_json(&StructureJson {
        name: g.name().to_string(),
        p: g.characteristic(),
        params: g.params().map(|p| ParamsJson {
            s: p.s,
            t: p.t,
            alpha: p.alpha,
        }),
        points,
        lines,
    })
}

pub fn parse_structure(text: &str) -> Result<IncidenceStructure> {
    let file: StructureJson =
        serde_json::from_str(text).context("parsing incidence structure JSON")?;
    for (i, p) in file.points.iter().enumerate() {
        ensure!(p.id == i, "point ids must be 0..{}", file.points.len());
    }
    for (i, l) in file.lines.iter().enumerate() {
        ensure!(l.id == i, "line ids must be 0..{}", file.lines.len());
    }
    let points = file
        .points
        .iter()
        .map(|p| match (p.kind.as_str(), p.element) {
            ("i", None) => Ok(PointKind::Affine),
            ("ii", Some(element)) => Ok(PointKind::Tangent { element }),
            ("iii", None) => Ok(PointKind::Infinity),
            ("point", None) => Ok(PointKind::Plain),
            (k, e) => Err(anyhow!("point {}: bad type {k:?} / element {e:?}", p.id)),
        })
        .collect::<Result<Vec<_>>>()?;
    let lines = file
        .lines
        .iter()
        .map(|l| match (l.kind.as_str(), l.element) {
            ("a", Some(element)) => Ok(LineKind::Affine { element }),
            ("b", Some(element)) => Ok(LineKind::EggElement { element }),
            ("line", None) => Ok(LineKind::Plain),
            (k, e) => Err(anyhow!("line {}: bad type {k:?} / element {e:?}", l.id)),
        })
        .collect::<Result<Vec<_>>>()?;
    let incidence = file.lines.into_iter().map(|l| l.points).collect();
    Ok(IncidenceStructure::new(
        file.name, file.p, points, lines, incidence,
    )?)
}

/// Egg file. Subspaces are lists of basis rows; entries are elements of
/// `F_{p^h}` in the encoding `Σ c_i p^i` with respect to the Conway
/// polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EggJson {
    pub p: u32,
    pub h: u32,
    pub n: usize,
    pub m: usize,
    pub elements: Vec<Vec<Vec<u32>>>,
    pub tangents: Vec<Vec<Vec<u32>>>,
}

fn subspace_rows(s: &Subspace) -> Vec<Vec<u32>> {
    s.basis()
        .iter()
        .map(|r| r.iter().map(|e| e.value()).collect())
        .collect()
}

pub fn egg_to_json(egg: &Egg) -> String {
    let f = egg.field();
    to_json(&EggJson {
        p: f.characteristic(),
        h: f.degree(),
        n: egg.n(),
        m: egg.m(),
        elements: egg.elements().iter().map(subspace_rows).collect(),
        tangents: egg.tangents().iter().map(subspace_rows).collect(),
    })
}

/// Parses an egg file; the axioms are checked when the quadrangle is built.
pub fn parse_egg(text: &str) -> Result<Egg> {
    let file: EggJson = serde_json::from_str(text).context("parsing egg JSON")?;
    ensure!(file.n > 0 && file.m > 0, "egg parameters must be positive");
    let field = Arc::new(Field::new(file.p, file.h)?);
    let space = ProjectiveSpace::new(field.clone(), 2 * file.n + file.m - 1);
    let convert = |rows: Vec<Vec<u32>>| -> Result<Subspace> {
        let rows = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|v| field.elem(v))
                    .collect::<gqlrc_core::Result<Vec<Elem>>>()
            })
            .collect::<gqlrc_core::Result<Vec<_>>>()?;
        Ok(space.subspace(rows)?)
    };
    let elements = file
        .elements
        .into_iter()
        .map(convert)
        .collect::<Result<Vec<_>>>()?;
    let tangents = file
        .tangents
        .into_iter()
        .map(convert)
        .collect::<Result<Vec<_>>>()?;
    Ok(Egg::new(field, file.n, file.m, elements, tangents)?)
}

/// Matrix export formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFormat {
    Json,
    Csv,
    Alist,
}

impl std::str::FromStr for MatrixFormat {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(MatrixFormat::Json),
            "csv" => Ok(MatrixFormat::Csv),
            "alist" => Ok(MatrixFormat::Alist),
            _ => bail!("unknown format `{s}` (json, csv, alist)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub p: u32,
    pub length: usize,
    pub k: usize,
    pub nrows: usize,
    pub rows: Vec<Vec<u8>>,
}

/// Writes `rows` (entries in `[0, p)`) in the chosen format; `k` is the
/// dimension of the code they span.
pub fn write_matrix(format: MatrixFormat, p: u32, k: usize, rows: &[Vec<u8>]) -> Result<String> {
    ensure!(!rows.is_empty(), "empty matrix selection");
    let length = rows[0].len();
    match format {
        MatrixFormat::Json => Ok(to_json(&MatrixJson {
            p,
            length,
            k,
            nrows: rows.len(),
            rows: rows.to_vec(),
        })),
        MatrixFormat::Csv => {
            let mut s = String::new();
            for r in rows {
                let cells: Vec<String> = r.iter().map(u8::to_string).collect();
                s.push_str(&cells.join(","));
                s.push('\n');
            }
            Ok(s)
        }
        MatrixFormat::Alist => {
            let mut supports = Vec::with_capacity(rows.len());
            for (i, r) in rows.iter().enumerate() {
                if let Some(j) = r.iter().position(|&x| x > 1) {
                    bail!(
                        "alist holds 0/1 matrices only; entry ({i}, {j}) is {}",
                        r[j]
                    );
                }
                supports.push((0..length).filter(|&j| r[j] == 1).collect());
            }
            Ok(write_alist(&BinaryMatrix::from_supports(length, supports)))
        }
    }
}

/// MacKay alist: `ncols nrows`, the largest column and row degrees, the
/// column degrees, the row degrees, then the 1-based row indices of each
/// column and the column indices of each row. Every line after the first
/// ends in a space.
pub fn write_alist(m: &BinaryMatrix) -> String {
    let cols = m.columns();
    let col_deg: Vec<usize> = cols.iter().map(Vec::len).collect();
    let row_deg = m.row_weights();
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", m.ncols(), m.nrows());
    let line = |s: &mut String, items: &mut dyn Iterator<Item = usize>| {
        for x in items {
            let _ = write!(s, "{x} ");
        }
        s.push('\n');
    };
    let maxes = [
        col_deg.iter().copied().max().unwrap_or(0),
        row_deg.iter().copied().max().unwrap_or(0),
    ];
    line(&mut s, &mut maxes.into_iter());
    line(&mut s, &mut col_deg.iter().copied());
    line(&mut s, &mut row_deg.iter().copied());
    for c in &cols {
        line(&mut s, &mut c.iter().map(|&r| r + 1));
    }
    for r in m.rows() {
        line(&mut s, &mut r.iter().map(|&c| c + 1));
    }
    s
}

/// Parses an alist file. Zero padding in the index lists is accepted, and
/// the column and row lists must describe the same matrix.
pub fn parse_alist(text: &str) -> Result<BinaryMatrix> {
    let mut lines = text.lines();
    let mut next_numbers = |what: &str| -> Result<Vec<usize>> {
        let l = lines
            .next()
            .ok_or_else(|| anyhow!("alist ends before {what}"))?;
        l.split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .with_context(|| format!("bad number `{t}` in {what}"))
            })
            .collect()
    };
    let dims = next_numbers("the dimensions")?;
    ensure!(dims.len() == 2, "first line must be `ncols nrows`");
    let (ncols, nrows) = (dims[0], dims[1]);
    let maxes = next_numbers("the maximum degrees")?;
    ensure!(
        maxes.len() == 2,
        "second line must hold two maximum degrees"
    );
    let col_deg = next_numbers("the column degrees")?;
    let row_deg = next_numbers("the row degrees")?;
    ensure!(
        col_deg.len() == ncols && row_deg.len() == nrows,
        "degree lists do not match the dimensions"
    );
    ensure!(
        col_deg.iter().copied().max().unwrap_or(0) == maxes[0]
            && row_deg.iter().copied().max().unwrap_or(0) == maxes[1],
        "maximum degrees do not match the degree lists"
    );
    let mut cols = Vec::with_capacity(ncols);
    for (c, &d) in col_deg.iter().enumerate() {
        let idx: Vec<usize> = next_numbers("a column list")?
            .into_iter()
            .filter(|&x| x != 0)
            .collect();
        ensure!(
            idx.len() == d,
            "column {} lists {} rows, degree says {d}",
            c + 1,
            idx.len()
        );
        ensure!(
            idx.iter().all(|&x| x <= nrows),
            "column {} has a row index out of range",
            c + 1
        );
        cols.push(idx);
    }
    let mut rows = Vec::with_capacity(nrows);
    for (r, &d) in row_deg.iter().enumerate() {
        let idx: Vec<usize> = next_numbers("a row list")?
            .into_iter()
            .filter(|&x| x != 0)
            .collect();
        ensure!(
            idx.len() == d,
            "row {} lists {} columns, degree says {d}",
            r + 1,
            idx.len()
        );
        ensure!(
            idx.iter().all(|&x| x <= ncols),
            "row {} has a column index out of range",
            r + 1
        );
        rows.push(idx.into_iter().map(|x| x - 1).collect::<Vec<_>>());
    }
    let m = BinaryMatrix::from_supports(ncols, rows);
    let from_cols: Vec<Vec<usize>> = cols
        .into_iter()
        .map(|c| {
            let mut c: Vec<usize> = c.into_iter().map(|x| x - 1).collect();
            c.sort_unstable();
            c
        })
        .collect();
    ensure!(m.columns() == from_cols, "column and row lists disagree");
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub p: u32,
    pub length: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub method: String,
    pub complete: bool,
    pub words_listed: bool,
    pub searched_up_to: usize,
    pub count: usize,
    /// `[support, values]` per word
    pub words: Vec<(Vec<usize>, Vec<u8>)>,
    pub all_line_multiples: Option<bool>,
}

pub fn report_to_json(code: &LinearCode, r: &MinWeightReport) -> String {
    to_json(&ReportJson {
        p: code.p(),
        length: code.length(),
        k: code.k(),
        d: r.d,
        method: r.method.name().to_string(),
        complete: r.complete,
        words_listed: r.words_listed,
        searched_up_to: r.searched_up_to,
        count: r.words.len(),
        words: r.words.iter().map(|w| (w.support(), w.values())).collect(),
        all_line_multiples: r.all_line_multiples,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GqJson {
    pub kind: String,
    pub p: u32,
    pub s: usize,
    pub t: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolJson {
    pub i: usize,
    pub r_i: usize,
    pub a_i: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileJson {
    pub gq: GqJson,
    pub r: usize,
    pub a: usize,
    pub tight_r: bool,
    pub tight_a: bool,
    pub expected_a: usize,
    pub matches_exact: bool,
    pub per_symbol: Vec<SymbolJson>,
}

pub fn profile_to_json(kind: &str, prof: &RepairProfile, chk: &BoundCheck) -> String {
    to_json(&ProfileJson {
        gq: GqJson {
            kind: kind.to_string(),
            p: prof.p,
            s: chk.s,
            t: chk.t,
        },
        r: prof.r,
        a: prof.a,
        tight_r: chk.tight_r,
        tight_a: chk.tight_a,
        expected_a: chk.expected_a(),
        matches_exact: chk.matches_exact,
        per_symbol: prof
            .per_symbol
            .iter()
            .enumerate()
            .map(|(i, s)| SymbolJson {
                i,
                r_i: s.r,
                a_i: s.a,
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alist_matches_reference_layout() {
        let m = BinaryMatrix::from_supports(4, vec![vec![0, 1], vec![1, 2, 3]]);
        assert_eq!(
            write_alist(&m),
            "4 2\n2 3 \n1 2 1 1 \n2 3 \n1 \n1 2 \n2 \n2 \n1 2 \n2 3 4 \n"
        );
        assert_eq!(parse_alist(&write_alist(&m)).unwrap(), m);
    }

    #[test]
    fn alist_accepts_padding_and_rejects_mismatch() {
        let padded = "2 2\n2 2\n2 1\n1 2\n1 2\n2 0\n1 0\n1 2\n";
        let m = parse_alist(padded).unwrap();
        assert_eq!(m.rows(), &[vec![0], vec![0, 1]]);
        let bad = "2 2\n1 1\n1 1\n1 1\n1\n2\n2\n1\n";
        assert!(parse_alist(bad).is_err());
        assert!(parse_alist("").is_err());
    }

    #[test]
    fn alist_rejects_non_binary() {
        assert!(write_matrix(MatrixFormat::Alist, 3, 1, &[vec![1, 2]]).is_err());
        assert_eq!(
            write_matrix(MatrixFormat::Csv, 3, 1, &[vec![1, 2]]).unwrap(),
            "1,2\n"
        );
        assert!(write_matrix(MatrixFormat::Csv, 3, 0, &[]).is_err());
    }
}
