//! Text matrix files and JSON code records.
//!
//! A matrix file has `key=value` header tokens (`q`, or `p` and `m`; `n`;
//! optional `symplectic=true` and `additive=true`), then one row per line of
//! space-separated element values. `#` starts a comment. With
//! `symplectic=true`, `n` counts qudits and rows have `2n` entries.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::CodeMatrix;
use crate::subsystem::SubsystemCode;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFile {
    pub matrix: CodeMatrix,
    pub symplectic: bool,
    /// Rows generate an additive code; spans are taken over the prime field.
    pub additive: bool,
}

impl MatrixFile {
    pub fn new(matrix: CodeMatrix, symplectic: bool) -> MatrixFile {
        MatrixFile { matrix, symplectic, additive: false }
    }

    pub fn parse(text: &str) -> Result<MatrixFile> {
        let (mut q, mut p, mut m, mut n) = (None, None, None, None);
        let (mut symplectic, mut additive) = (false, false);
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |what: &str| Error::Parse(format!("line {}: {what}", lineno + 1));
            if line.contains('=') {
                for token in line.split_whitespace() {
                    let (key, value) = token.split_once('=').ok_or_else(|| err("expected key=value"))?;
                    let number = || value.parse::<u32>().map_err(|_| err(&format!("bad value for {key}")));
                    let flag = || match value {
                        "true" => Ok(true),
                        "false" => Ok(false),
                        _ => Err(err(&format!("bad value for {key}"))),
                    };
                    match key {
                        "q" => q = Some(number()?),
                        "p" => p = Some(number()?),
                        "m" => m = Some(number()?),
                        "n" => n = Some(number()? as usize),
                        "symplectic" => symplectic = flag()?,
                        "additive" => additive = flag()?,
                        _ => return Err(err(&format!("unknown key {key}"))),
                    }
                }
            } else {
                let row = line
                    .split_whitespace()
                    .map(|t| t.parse::<u32>().map_err(|_| err(&format!("bad entry `{t}`"))))
                    .collect::<Result<Vec<_>>>()?;
                rows.push(row);
            }
        }
        let field = match (q, p, m) {
            (Some(q), None, None) => Field::with_order(q),
            (q, Some(p), m) => {
                let f = Field::new(p, m.unwrap_or(1));
                match (f, q) {
                    (Ok(f), Some(q)) if f.q() != q => return Err(Error::Parse(format!("q={q} does not match p, m"))),
                    (f, _) => f,
                }
            }
            _ => return Err(Error::Parse("missing q= or p= header".into())),
        }
        .map_err(|e| Error::Parse(e.to_string()))?;
        let n = n.ok_or_else(|| Error::Parse("missing n= header".into()))?;
        let len = if symplectic { 2 * n } else { n };
        for row in &rows {
            if row.len() != len {
                return Err(Error::Parse(format!("row has {} entries, expected {len}", row.len())));
            }
        }
        let matrix = CodeMatrix::from_values(&field, len, &rows).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(MatrixFile { matrix, symplectic, additive })
    }

    pub fn to_text(&self) -> String {
        let f = self.matrix.field();
        let n = if self.symplectic { self.matrix.len() / 2 } else { self.matrix.len() };
        let mut out = format!("q={} p={} m={}\nn={n}\n", f.q(), f.p(), f.m());
        if self.symplectic {
            out.push_str("symplectic=true\n");
        }
        if self.additive {
            out.push_str("additive=true\n");
        }
        for row in self.matrix.values() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// JSON form of a [`SubsystemCode`]. Unknown distance and purity are `null`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub q: u32,
    pub p: u32,
    pub m: u32,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub d: Option<usize>,
    pub purity: Option<usize>,
    pub pure: Option<bool>,
    /// `q^k`, decimal.
    #[serde(rename = "K")]
    pub big_k: String,
    /// `q^r`, decimal.
    #[serde(rename = "R")]
    pub big_r: String,
    pub gauge: Vec<Vec<u32>>,
    pub stabilizer: Vec<Vec<u32>>,
}

impl CodeRecord {
    pub fn from_code(code: &SubsystemCode) -> CodeRecord {
        let f = code.field();
        CodeRecord {
            q: f.q(),
            p: f.p(),
            m: f.m(),
            n: code.n(),
            k: code.k(),
            r: code.r(),
            d: code.distance(),
            purity: code.purity(),
            pure: code.is_pure(),
            big_k: code.dim_a().to_string(),
            big_r: code.dim_b().to_string(),
            gauge: code.gauge().values(),
            stabilizer: code.stabilizer().values(),
        }
    }

    /// Rebuilds the code from the gauge rows and checks the stored
    /// parameters against it.
    pub fn to_code(&self) -> Result<SubsystemCode> {
        let field = Field::new(self.p, self.m).map_err(|e| Error::Parse(e.to_string()))?;
        if field.q() != self.q {
            return Err(Error::Parse(format!("q={} does not match p={}, m={}", self.q, self.p, self.m)));
        }
        let gauge = CodeMatrix::from_values(&field, 2 * self.n, &self.gauge).map_err(|e| Error::Parse(e.to_string()))?;
        let code = SubsystemCode::from_gauge_code(gauge)?;
        let stabilizer =
            CodeMatrix::from_values(&field, 2 * self.n, &self.stabilizer).map_err(|e| Error::Parse(e.to_string()))?;
        let q = BigUint::from(self.q);
        let consistent = code.k() == self.k
            && code.r() == self.r
            && stabilizer.same_space(code.stabilizer())
            && self.big_k == q.pow(self.k as u32).to_string()
            && self.big_r == q.pow(self.r as u32).to_string()
            && self.pure == self.d.zip(self.purity).map(|(d, dp)| dp >= d);
        if !consistent {
            return Err(Error::Inconsistent("record fields do not match its gauge code".into()));
        }
        Ok(code.with_known(self.d, self.purity))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }

    pub fn from_json(text: &str) -> Result<CodeRecord> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}
