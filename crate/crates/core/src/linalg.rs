//! Linear codes over GF(q): row reduction, duals, intersections and minimum
//! Hamming weight.

use crate::enumerate::{self, EnumConfig, Weight};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

pub type Vector = Vec<FieldElement>;

/// Generator matrix of a linear code of length `n`. Rows need not be independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeMatrix {
    field: Field,
    n: usize,
    rows: Vec<Vector>,
}

/// `[n, k, d]` parameters of a classical linear code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

/// Reduced row echelon form together with its rank and pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: CodeMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub fn dot(field: &Field, u: &[FieldElement], v: &[FieldElement]) -> FieldElement {
    u.iter()
        .zip(v)
        .fold(FieldElement::ZERO, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
}

pub fn hamming_weight(v: &[FieldElement]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// `v += c * w`
pub fn axpy(field: &Field, v: &mut [FieldElement], c: FieldElement, w: &[FieldElement]) {
    if c.is_zero() {
        return;
    }
    for (a, &b) in v.iter_mut().zip(w) {
        *a = field.add(*a, field.mul(c, b));
    }
}

pub fn scale(field: &Field, c: FieldElement, v: &[FieldElement]) -> Vector {
    v.iter().map(|&x| field.mul(c, x)).collect()
}

impl CodeMatrix {
    pub fn new(field: Field, n: usize, rows: Vec<Vector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch { expected: n, found: bad.len() });
        }
        Ok(CodeMatrix { field, n, rows })
    }

    /// Builds a matrix from integer encodings of field elements.
    pub fn from_values(field: &Field, n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.element(x)).collect::<Result<Vector>>())
            .collect::<Result<Vec<_>>>()?;
        CodeMatrix::new(field.clone(), n, rows)
    }

    pub fn zero(field: &Field, n: usize) -> Self {
        CodeMatrix { field: field.clone(), n, rows: Vec::new() }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![FieldElement::ZERO; n];
                r[i] = FieldElement::ONE;
                r
            })
            .collect();
        CodeMatrix { field: field.clone(), n, rows }
    }

    /// The `[n, 1, n]` repetition code.
    pub fn repetition(field: &Field, n: usize) -> Self {
        CodeMatrix { field: field.clone(), n, rows: vec![vec![FieldElement::ONE; n]] }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Code length.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vector> {
        self.rows
    }

    pub fn values(&self) -> Vec<Vec<u32>> {
        self.rows.iter().map(|r| r.iter().map(|x| x.value()).collect()).collect()
    }

    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.n {
            let Some(pr) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, pr);
            let inv = f.inv(rows[rank][col]).expect("pivot is nonzero");
            rows[rank] = scale(f, inv, &rows[rank]);
            let pivot_row = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && !row[col].is_zero() {
                    let c = f.neg(row[col]);
                    axpy(f, row, c, &pivot_row);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rows.truncate(rank);
        Rref { matrix: CodeMatrix { field: f.clone(), n: self.n, rows }, rank, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Independent generators spanning the same code (the nonzero rref rows).
    pub fn basis(&self) -> CodeMatrix {
        self.rref().matrix
    }

    /// Generators of the Euclidean dual `{y : x·y = 0 for all x in C}`.
    pub fn dual(&self) -> CodeMatrix {
        let f = &self.field;
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![None; self.n];
        for (i, &p) in pivots.iter().enumerate() {
            is_pivot[p] = Some(i);
        }
        let rows = (0..self.n)
            .filter(|&c| is_pivot[c].is_none())
            .map(|free| {
                let mut v = vec![FieldElement::ZERO; self.n];
                v[free] = FieldElement::ONE;
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(matrix.rows[i][free]);
                }
                v
            })
            .collect();
        CodeMatrix { field: f.clone(), n: self.n, rows }
    }

    pub fn contains(&self, v: &[FieldElement]) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: v.len() });
        }
        let r = self.rref();
        Ok(reduce(&self.field, &r, v).iter().all(|x| x.is_zero()))
    }

    fn check_compatible(&self, other: &CodeMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    /// `A + B`.
    pub fn sum(&self, other: &CodeMatrix) -> Result<CodeMatrix> {
        self.check_compatible(other)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(CodeMatrix { field: self.field.clone(), n: self.n, rows }.basis())
    }

    /// `A ∩ B`, computed as `(A^⊥ + B^⊥)^⊥`.
    pub fn intersect(&self, other: &CodeMatrix) -> Result<CodeMatrix> {
        self.check_compatible(other)?;
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// True if both matrices generate the same row space.
    pub fn same_space(&self, other: &CodeMatrix) -> bool {
        self.field == other.field && self.n == other.n && self.rref().matrix.rows == other.rref().matrix.rows
    }

    /// True if every row of `self` lies in `other`.
    pub fn is_subspace_of(&self, other: &CodeMatrix) -> bool {
        let r = other.rref();
        self.rows.iter().all(|v| reduce(&self.field, &r, v).iter().all(|x| x.is_zero()))
    }

    /// Kronecker product: row `(i, j)` is `a_i ⊗ b_j`, left factor outer.
    pub fn kron(a: &CodeMatrix, b: &CodeMatrix) -> Result<CodeMatrix> {
        if a.field != b.field {
            return Err(Error::FieldMismatch);
        }
        let f = &a.field;
        let mut rows = Vec::with_capacity(a.rows.len() * b.rows.len());
        for ra in &a.rows {
            for rb in &b.rows {
                rows.push(ra.iter().flat_map(|&x| rb.iter().map(move |&y| f.mul(x, y))).collect());
            }
        }
        Ok(CodeMatrix { field: f.clone(), n: a.n * b.n, rows })
    }

    /// The code `A × B` of length `2n`: rows `(a|0)` then `(0|b)`.
    pub fn product(a: &CodeMatrix, b: &CodeMatrix) -> Result<CodeMatrix> {
        a.check_compatible(b)?;
        let n = a.n;
        let zero = vec![FieldElement::ZERO; n];
        let mut rows = Vec::with_capacity(a.rows.len() + b.rows.len());
        for r in &a.rows {
            rows.push([r.as_slice(), &zero].concat());
        }
        for r in &b.rows {
            rows.push([zero.as_slice(), r].concat());
        }
        Ok(CodeMatrix { field: a.field.clone(), n: 2 * n, rows })
    }

    /// Rows of `outer` that extend a basis of `self` to a basis of `outer`.
    /// Requires `self ⊆ outer`.
    pub fn complement_in(&self, outer: &CodeMatrix) -> Result<CodeMatrix> {
        self.check_compatible(outer)?;
        let mut acc = self.basis();
        let mut extra = Vec::new();
        for v in outer.basis().rows {
            let r = acc.rref();
            if reduce(&self.field, &r, &v).iter().any(|x| !x.is_zero()) {
                acc.rows.push(v.clone());
                extra.push(v);
            }
        }
        Ok(CodeMatrix { field: self.field.clone(), n: self.n, rows: extra })
    }

    /// Exact minimum Hamming weight over the nonzero codewords.
    pub fn min_weight(&self, cfg: &EnumConfig) -> Result<usize> {
        let basis = self.basis();
        if basis.rows.is_empty() {
            return Err(Error::EmptyCode);
        }
        let found = enumerate::min_weight_outside(&self.field, &[], &basis.rows, Weight::Hamming, cfg)?;
        Ok(found.expect("nonempty code has a nonzero word").weight)
    }

    pub fn params(&self, cfg: &EnumConfig) -> Result<CodeParams> {
        Ok(CodeParams { n: self.n, k: self.rank(), d: self.min_weight(cfg)? })
    }
}

/// Residual of `v` after elimination against an rref basis; zero iff `v` is in the span.
pub(crate) fn reduce(field: &Field, r: &Rref, v: &[FieldElement]) -> Vector {
    let mut w = v.to_vec();
    for (row, &p) in r.matrix.rows.iter().zip(&r.pivots) {
        if !w[p].is_zero() {
            let c = field.neg(w[p]);
            axpy(field, &mut w, c, row);
        }
    }
    w
}
