//! The symplectic geometry of `F_q^{2n}`.
//!
//! A vector `(a|b)` is stored as the concatenation of its X part `a` and Z part
//! `b`. The symplectic product is `<(a|b)|(a'|b')>_s = a'·b − a·b'` everywhere in
//! this crate; the syndrome circuit in [`crate::quditsim`] measures exactly this
//! value.

use std::fmt;

use crate::enumerate::{weight_of, Weight};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::{axpy, dot, scale, CodeMatrix, Vector};

#[derive(Clone, PartialEq, Eq)]
pub struct SymplecticVector {
    field: Field,
    coords: Vector,
}

impl fmt::Debug for SymplecticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[FieldElement]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", show(self.x()), show(self.z()))
    }
}

impl SymplecticVector {
    pub fn new(field: &Field, x: Vector, z: Vector) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::LengthMismatch { expected: x.len(), found: z.len() });
        }
        Ok(SymplecticVector { field: field.clone(), coords: [x, z].concat() })
    }

    pub fn from_concat(field: &Field, coords: Vector) -> Result<Self> {
        if !coords.len().is_multiple_of(2) {
            return Err(Error::OddLength(coords.len()));
        }
        Ok(SymplecticVector { field: field.clone(), coords })
    }

    pub fn from_values(field: &Field, x: &[u32], z: &[u32]) -> Result<Self> {
        let conv = |v: &[u32]| v.iter().map(|&e| field.element(e)).collect::<Result<Vector>>();
        SymplecticVector::new(field, conv(x)?, conv(z)?)
    }

    pub fn zero(field: &Field, n: usize) -> Self {
        SymplecticVector { field: field.clone(), coords: vec![FieldElement::ZERO; 2 * n] }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Number of qudits.
    pub fn n(&self) -> usize {
        self.coords.len() / 2
    }

    pub fn x(&self) -> &[FieldElement] {
        &self.coords[..self.n()]
    }

    pub fn z(&self) -> &[FieldElement] {
        &self.coords[self.n()..]
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn into_coords(self) -> Vector {
        self.coords
    }

    pub fn swt(&self) -> usize {
        swt(&self.coords)
    }

    pub fn scaled(&self, c: FieldElement) -> SymplecticVector {
        SymplecticVector { field: self.field.clone(), coords: scale(&self.field, c, &self.coords) }
    }

    fn check(&self, other: &SymplecticVector) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.coords.len() != other.coords.len() {
            return Err(Error::LengthMismatch { expected: self.coords.len(), found: other.coords.len() });
        }
        Ok(())
    }
}

/// Symplectic weight of a concatenated `(a|b)` vector.
pub fn swt(v: &[FieldElement]) -> usize {
    weight_of(Weight::Symplectic, v)
}

/// `<u|v>_s = a'·b − a·b'` for `u = (a|b)`, `v = (a'|b')`, on raw concatenations.
pub fn symp(field: &Field, u: &[FieldElement], v: &[FieldElement]) -> FieldElement {
    let n = u.len() / 2;
    let (a, b) = u.split_at(n);
    let (a2, b2) = v.split_at(n);
    field.sub(dot(field, a2, b), dot(field, a, b2))
}

pub fn symp_product(u: &SymplecticVector, v: &SymplecticVector) -> Result<FieldElement> {
    u.check(v)?;
    Ok(symp(&u.field, &u.coords, &v.coords))
}

/// `tr_{q/p}(<u|v>_s)`.
pub fn trace_symp_product(u: &SymplecticVector, v: &SymplecticVector) -> Result<FieldElement> {
    Ok(u.field.trace(symp_product(u, v)?))
}

/// Symplectic dual of a code of length `2n`: the Euclidean dual of `C` after
/// mapping each row `(a|b)` to `(−b|a)`.
pub fn symp_dual(c: &CodeMatrix) -> Result<CodeMatrix> {
    let len = c.len();
    if !len.is_multiple_of(2) {
        return Err(Error::OddLength(len));
    }
    let f = c.field();
    let n = len / 2;
    let twisted = c
        .rows()
        .iter()
        .map(|r| r[n..].iter().map(|&x| f.neg(x)).chain(r[..n].iter().copied()).collect())
        .collect();
    Ok(CodeMatrix::new(f.clone(), len, twisted)?.dual())
}

/// Gram matrix `G[i][j] = <v_i|v_j>_s`.
pub fn gram(field: &Field, vectors: &[Vector]) -> Vec<Vec<FieldElement>> {
    vectors.iter().map(|u| vectors.iter().map(|v| symp(field, u, v)).collect()).collect()
}

/// A basis `z_1..z_s, (z_{s+1}, x_{s+1}), .., (z_{s+r}, x_{s+r})` with all
/// products zero except `<x_i|z_i>_s = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbolicBasis {
    field: Field,
    n: usize,
    pub isotropic: Vec<Vector>,
    /// `(z, x)` pairs.
    pub pairs: Vec<(Vector, Vector)>,
}

impl HyperbolicBasis {
    pub fn new(field: &Field, n: usize, isotropic: Vec<Vector>, pairs: Vec<(Vector, Vector)>) -> Self {
        HyperbolicBasis { field: field.clone(), n, isotropic, pairs }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.isotropic.len()
    }

    pub fn r(&self) -> usize {
        self.pairs.len()
    }

    /// Vectors in the order `z_1..z_s, z_{s+1}, x_{s+1}, ...`.
    pub fn vectors(&self) -> Vec<Vector> {
        let mut out = self.isotropic.clone();
        for (z, x) in &self.pairs {
            out.push(z.clone());
            out.push(x.clone());
        }
        out
    }

    pub fn gram(&self) -> Vec<Vec<FieldElement>> {
        gram(&self.field, &self.vectors())
    }

    /// Checks the defining relations and linear independence.
    pub fn is_valid(&self) -> bool {
        let f = &self.field;
        let s = self.s();
        let g = self.gram();
        let total = s + 2 * self.r();
        for i in 0..total {
            for j in 0..total {
                let expected = match (i.checked_sub(s), j.checked_sub(s)) {
                    // <x_a|z_a> = 1 and <z_a|x_a> = -1, where x sits right after its z
                    (Some(a), Some(b)) if a / 2 == b / 2 && a % 2 == 1 && b % 2 == 0 => FieldElement::ONE,
                    (Some(a), Some(b)) if a / 2 == b / 2 && a % 2 == 0 && b % 2 == 1 => f.neg(FieldElement::ONE),
                    _ => FieldElement::ZERO,
                };
                if g[i][j] != expected {
                    return false;
                }
            }
        }
        self.span().rank() == total
    }

    pub fn span(&self) -> CodeMatrix {
        CodeMatrix::new(self.field.clone(), 2 * self.n, self.vectors()).expect("basis vectors have length 2n")
    }
}

/// Extracts a hyperbolic basis of `C`. The isotropic part is a basis of
/// `D = C ∩ C^⊥s`; the pairs come from symplectic Gram-Schmidt on a complement
/// of `D` in `C`, taken in rref order.
pub fn hyperbolic_basis(c: &CodeMatrix) -> Result<HyperbolicBasis> {
    let d = c.intersect(&symp_dual(c)?)?.basis();
    let rest = d.complement_in(c)?.into_rows();
    Ok(complete_basis(c.field(), c.len() / 2, d.into_rows(), rest))
}

/// Symplectic Gram-Schmidt: pairs up `rest` (independent modulo the radical,
/// which must be `isotropic`) into hyperbolic pairs.
pub(crate) fn complete_basis(field: &Field, n: usize, isotropic: Vec<Vector>, mut rest: Vec<Vector>) -> HyperbolicBasis {
    let f = field;
    let mut pairs = Vec::new();
    while !rest.is_empty() {
        let z = rest.remove(0);
        let j = rest
            .iter()
            .position(|u| !symp(f, u, &z).is_zero())
            .expect("complement of the radical is nondegenerate");
        let u = rest.remove(j);
        let c = f.inv(symp(f, &u, &z)).expect("nonzero product");
        let x = scale(f, c, &u);
        for v in rest.iter_mut() {
            let b = f.neg(symp(f, v, &z));
            let a = symp(f, v, &x);
            axpy(f, v, a, &z);
            axpy(f, v, b, &x);
        }
        pairs.push((z, x));
    }
    HyperbolicBasis { field: f.clone(), n, isotropic, pairs }
}
