//! Concrete families: the Euclidean construction from two classical codes,
//! the tensor-lattice construction and Bacon-Shor rectangles.

use crate::enumerate::{min_weight_outside, EnumConfig, Weight};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::CodeMatrix;
use crate::subsystem::SubsystemCode;

/// Closed-form parameters of the Euclidean construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EuclideanParams {
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    /// `dim(X1 ∩ X2^⊥) + dim(X1^⊥ ∩ X2)`
    pub k_prime: usize,
    pub k: usize,
    pub r: usize,
}

fn check_pair(x1: &CodeMatrix, x2: &CodeMatrix) -> Result<()> {
    if x1.field() != x2.field() {
        return Err(Error::FieldMismatch);
    }
    if x1.len() != x2.len() {
        return Err(Error::LengthMismatch { expected: x1.len(), found: x2.len() });
    }
    if x1.rank() == 0 || x2.rank() == 0 {
        return Err(Error::ZeroCode);
    }
    Ok(())
}

pub fn euclidean_params(x1: &CodeMatrix, x2: &CodeMatrix) -> Result<EuclideanParams> {
    check_pair(x1, x2)?;
    let n = x1.len();
    let (k1, k2) = (x1.rank(), x2.rank());
    let k_prime = x1.intersect(&x2.dual())?.rank() + x1.dual().intersect(x2)?.rank();
    let twice_k = 2 * n - (k1 + k2 + k_prime);
    Ok(EuclideanParams { n, k1, k2, k_prime, k: twice_k / 2, r: (k1 + k2 - k_prime) / 2 })
}

/// Subsystem code with gauge code `X1 × X2`. The rank-derived `k`, `r` are
/// checked against the closed forms.
pub fn euclidean(x1: &CodeMatrix, x2: &CodeMatrix) -> Result<SubsystemCode> {
    let expected = euclidean_params(x1, x2)?;
    let code = SubsystemCode::from_gauge_code(CodeMatrix::product(x1, x2)?)?;
    if (code.k(), code.r()) != (expected.k, expected.r) {
        return Err(Error::Inconsistent(format!(
            "euclidean k, r = {}, {} but closed form gives {}, {}",
            code.k(),
            code.r(),
            expected.k,
            expected.r
        )));
    }
    Ok(code)
}

/// Distance from the classical codes alone:
/// `min{wt((X1^⊥ ∩ X2)^⊥ \ X1), wt((X2^⊥ ∩ X1)^⊥ \ X2)}`.
///
/// When both differences are empty the code has `C = D^⊥s` and the distance
/// is the smaller of the two minimum weights.
pub fn euclidean_distance(x1: &CodeMatrix, x2: &CodeMatrix, cfg: &EnumConfig) -> Result<usize> {
    check_pair(x1, x2)?;
    let f = x1.field();
    let outside = |inner: &CodeMatrix, outer: &CodeMatrix| -> Result<Option<usize>> {
        let inner = inner.basis();
        let extra = inner.complement_in(outer)?;
        Ok(min_weight_outside(f, inner.rows(), extra.rows(), Weight::Hamming, cfg)?.map(|w| w.weight))
    };
    let first = outside(x1, &x1.dual().intersect(x2)?.dual())?;
    let second = outside(x2, &x2.dual().intersect(x1)?.dual())?;
    match (first, second) {
        (None, None) => Ok(x1.min_weight(cfg)?.min(x2.min_weight(cfg)?)),
        (a, b) => Ok(a.into_iter().chain(b).min().expect("at least one side is nonempty")),
    }
}

/// Euclidean construction with distance and purity, cross-checking the
/// classical-code distance against the gauge-code enumeration.
pub fn euclidean_analyzed(x1: &CodeMatrix, x2: &CodeMatrix, cfg: &EnumConfig) -> Result<SubsystemCode> {
    let code = euclidean(x1, x2)?.analyze(cfg)?;
    let classical = euclidean_distance(x1, x2, cfg)?;
    if code.distance() != Some(classical) {
        return Err(Error::Inconsistent(format!(
            "euclidean distance {classical} from classical codes, {:?} from enumeration",
            code.distance()
        )));
    }
    Ok(code)
}

fn check_factor(c: &CodeMatrix) -> Result<usize> {
    let k = c.rank();
    if k == 0 || k >= c.len() {
        return Err(Error::TrivialFactor { n: c.len(), k });
    }
    Ok(k)
}

/// The gauge code `(F^{n1} ⊗ C2^⊥) × (C1^⊥ ⊗ F^{n2})`, qudit `(i, j)` at
/// position `i * n2 + j`.
pub fn lattice_gauge(c1: &CodeMatrix, c2: &CodeMatrix) -> Result<CodeMatrix> {
    if c1.field() != c2.field() {
        return Err(Error::FieldMismatch);
    }
    check_factor(c1)?;
    check_factor(c2)?;
    let f = c1.field();
    let x_part = CodeMatrix::kron(&CodeMatrix::identity(f, c1.len()), &c2.dual())?;
    let z_part = CodeMatrix::kron(&c1.dual(), &CodeMatrix::identity(f, c2.len()))?;
    CodeMatrix::product(&x_part, &z_part)
}

/// `[[n1 n2, k1 k2, (n1−k1)(n2−k2), min{d1, d2}]]_q` lattice code. The
/// dimensions are checked against the closed forms.
pub fn lattice(c1: &CodeMatrix, c2: &CodeMatrix) -> Result<SubsystemCode> {
    let code = SubsystemCode::from_gauge_code(lattice_gauge(c1, c2)?)?;
    let (n1, n2, k1, k2) = (c1.len(), c2.len(), c1.rank(), c2.rank());
    let expected = (n1 * n2, k1 * k2, (n1 - k1) * (n2 - k2));
    if (code.n(), code.k(), code.r()) != expected {
        return Err(Error::Inconsistent(format!(
            "lattice code has n, k, r = {:?}, expected {:?}",
            (code.n(), code.k(), code.r()),
            expected
        )));
    }
    Ok(code)
}

/// Classical distances behind a lattice code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeDistances {
    pub d1: usize,
    pub d2: usize,
    pub d1_dual: usize,
    pub d2_dual: usize,
}

impl LatticeDistances {
    pub fn compute(c1: &CodeMatrix, c2: &CodeMatrix, cfg: &EnumConfig) -> Result<Self> {
        Ok(LatticeDistances {
            d1: c1.min_weight(cfg)?,
            d2: c2.min_weight(cfg)?,
            d1_dual: c1.dual().min_weight(cfg)?,
            d2_dual: c2.dual().min_weight(cfg)?,
        })
    }

    /// `min{d1, d2}`.
    pub fn distance(&self) -> usize {
        self.d1.min(self.d2)
    }

    /// Lower bound `min{d1^⊥, d2^⊥}` on the gauge code weight.
    pub fn purity_floor(&self) -> usize {
        self.d1_dual.min(self.d2_dual)
    }
}

/// `(i−1) × i` matrix with rows `e_j − e_{j+1}`, generating the dual of the
/// length-`i` repetition code.
pub fn adjacent_differences(field: &Field, i: usize) -> CodeMatrix {
    let minus_one = field.neg(FieldElement::ONE);
    let rows = (0..i.saturating_sub(1))
        .map(|j| {
            let mut r = vec![FieldElement::ZERO; i];
            r[j] = FieldElement::ONE;
            r[j + 1] = minus_one;
            r
        })
        .collect();
    CodeMatrix::new(field.clone(), i, rows).expect("rows have length i")
}

/// Gauge code `diag(I_{n1} ⊗ H_{n2}, H_{n1} ⊗ I_{n2})`.
pub fn bacon_shor_gauge(n1: usize, n2: usize, field: &Field) -> Result<CodeMatrix> {
    if n1 < 2 {
        return Err(Error::SizeTooSmall(n1));
    }
    if n2 < 2 {
        return Err(Error::SizeTooSmall(n2));
    }
    let x_part = CodeMatrix::kron(&CodeMatrix::identity(field, n1), &adjacent_differences(field, n2))?;
    let z_part = CodeMatrix::kron(&adjacent_differences(field, n1), &CodeMatrix::identity(field, n2))?;
    CodeMatrix::product(&x_part, &z_part)
}

/// `[[n1 n2, 1, (n1−1)(n2−1), min{n1, n2}]]_q` Bacon-Shor code.
pub fn bacon_shor(n1: usize, n2: usize, field: &Field) -> Result<SubsystemCode> {
    SubsystemCode::from_gauge_code(bacon_shor_gauge(n1, n2, field)?)
}

/// Stabilizer generators `X Z Z^-1 X^-1 I` and cyclic shifts: the
/// `[[5,1,3]]_q` code as a gauge code with no gauge qudits.
pub fn five_qudit_code(field: &Field) -> CodeMatrix {
    let one = FieldElement::ONE;
    let minus = field.neg(one);
    let zero = FieldElement::ZERO;
    let rows = (0..4)
        .map(|shift| {
            let mut x = vec![zero; 5];
            let mut z = vec![zero; 5];
            x[shift % 5] = one;
            z[(shift + 1) % 5] = one;
            z[(shift + 2) % 5] = minus;
            x[(shift + 3) % 5] = minus;
            [x, z].concat()
        })
        .collect();
    CodeMatrix::new(field.clone(), 10, rows).expect("rows have length 10")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::hyperbolic_basis;

    fn gf(q: u32) -> Field {
        Field::with_order(q).unwrap()
    }

    #[test]
    fn euclidean_repetition() {
        let f = gf(2);
        let rep = CodeMatrix::repetition(&f, 3);
        let p = euclidean_params(&rep, &rep).unwrap();
        assert_eq!((p.k_prime, p.k, p.r), (0, 2, 1));
        let code = euclidean_analyzed(&rep, &rep, &EnumConfig::default()).unwrap();
        assert_eq!(code.label(), "[[3,2,1,1]]_2");
    }

    #[test]
    fn euclidean_rejects_zero_factor() {
        let f = gf(2);
        let full = CodeMatrix::identity(&f, 3);
        assert_eq!(euclidean(&full, &CodeMatrix::zero(&f, 3)), Err(Error::ZeroCode));
        assert_eq!(
            euclidean(&full, &CodeMatrix::identity(&f, 4)).unwrap_err(),
            Error::LengthMismatch { expected: 3, found: 4 }
        );
        assert_eq!(euclidean(&full, &CodeMatrix::identity(&gf(3), 3)).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn euclidean_rep4_even4() {
        let f = gf(2);
        let rep = CodeMatrix::repetition(&f, 4);
        let even = rep.dual();
        let p = euclidean_params(&rep, &even).unwrap();
        // rep ⊆ even: X1 ∩ X2^⊥ = rep (dim 1), X1^⊥ ∩ X2 = even (dim 3)
        assert_eq!((p.k1, p.k2, p.k_prime), (1, 3, 4));
        assert_eq!((p.k, p.r), (0, 0));
        let code = euclidean_analyzed(&rep, &even, &EnumConfig::default()).unwrap();
        assert_eq!((code.k(), code.r()), (0, 0));
    }

    #[test]
    fn lattice_parameters() {
        let cfg = EnumConfig::default();
        let f = gf(2);
        let (r3, r4) = (CodeMatrix::repetition(&f, 3), CodeMatrix::repetition(&f, 4));
        let c = lattice(&r3, &r3).unwrap().analyze(&cfg).unwrap();
        assert_eq!(c.label(), "[[9,1,4,3]]_2");
        let c = lattice(&r3, &r4).unwrap().analyze(&cfg).unwrap();
        assert_eq!(c.label(), "[[12,1,6,3]]_2");
        let ld = LatticeDistances::compute(&r3, &r4, &cfg).unwrap();
        assert_eq!((ld.distance(), ld.purity_floor()), (3, 2));
        let f3 = gf(3);
        let r = CodeMatrix::repetition(&f3, 3);
        let c = lattice(&r, &r).unwrap().analyze(&cfg).unwrap();
        assert_eq!(c.label(), "[[9,1,4,3]]_3");
    }

    #[test]
    fn lattice_rejects_trivial_factor() {
        let f = gf(2);
        let full = CodeMatrix::identity(&f, 3);
        let rep = CodeMatrix::repetition(&f, 3);
        assert_eq!(lattice(&full, &rep), Err(Error::TrivialFactor { n: 3, k: 3 }));
        assert_eq!(lattice(&rep, &CodeMatrix::zero(&f, 2)), Err(Error::TrivialFactor { n: 2, k: 0 }));
    }

    #[test]
    fn bacon_shor_examples() {
        let cfg = EnumConfig::default();
        let c = bacon_shor(3, 3, &gf(2)).unwrap().analyze(&cfg).unwrap();
        assert_eq!(c.label(), "[[9,1,4,3]]_2");
        let c = bacon_shor(2, 2, &gf(3)).unwrap().analyze(&cfg).unwrap();
        assert_eq!(c.label(), "[[4,1,1,2]]_3");
        assert_eq!(bacon_shor(1, 3, &gf(2)), Err(Error::SizeTooSmall(1)));
    }

    #[test]
    fn bacon_shor_equals_lattice_of_repetition_codes() {
        for q in [2, 3] {
            let f = gf(q);
            for n1 in 2..=4 {
                for n2 in 2..=4 {
                    let bs = bacon_shor_gauge(n1, n2, &f).unwrap();
                    let lat = lattice_gauge(&CodeMatrix::repetition(&f, n1), &CodeMatrix::repetition(&f, n2)).unwrap();
                    assert!(bs.same_space(&lat), "q={q} {n1}x{n2}");
                }
            }
        }
    }

    #[test]
    fn five_qudit_code_is_isotropic() {
        for q in [2, 3, 5] {
            let b = hyperbolic_basis(&five_qudit_code(&gf(q))).unwrap();
            assert_eq!((b.s(), b.r()), (4, 0));
        }
    }
}
