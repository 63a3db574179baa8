//! Subsystem codes from gauge codes `C ⊆ F_q^{2n}`.
//!
//! With `D = C ∩ C^⊥s`, an F_q-linear gauge code gives an `[[n, k, r, d]]_q`
//! code where `k = n − (dim C + dim D)/2`, `r = (dim C − dim D)/2`, and
//! `d = swt(D^⊥s \ C)`, or `swt(D^⊥s \ {0})` when `C = D^⊥s`.

use num_bigint::BigUint;

use crate::enumerate::{min_weight_outside, EnumConfig, MinWord, Weight};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{CodeMatrix, Vector};
use crate::symplectic::{hyperbolic_basis, symp, symp_dual, HyperbolicBasis};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsystemCode {
    field: Field,
    n: usize,
    k: usize,
    r: usize,
    distance: Option<usize>,
    purity: Option<usize>,
    gauge: CodeMatrix,
    stabilizer: CodeMatrix,
    normalizer: CodeMatrix,
    centralizer: CodeMatrix,
    basis: HyperbolicBasis,
}

impl SubsystemCode {
    /// Derives the code defined by an F_q-linear gauge code of length `2n`.
    /// Distance and purity are left unknown.
    pub fn from_gauge_code(gauge: CodeMatrix) -> Result<SubsystemCode> {
        if !gauge.len().is_multiple_of(2) {
            return Err(Error::OddLength(gauge.len()));
        }
        let dim_c = gauge.rank();
        if dim_c == 0 {
            return Err(Error::ZeroCode);
        }
        let n = gauge.len() / 2;
        let centralizer = symp_dual(&gauge)?;
        let stabilizer = gauge.intersect(&centralizer)?;
        let normalizer = symp_dual(&stabilizer)?;
        let basis = hyperbolic_basis(&gauge)?;
        let dim_d = stabilizer.rank();
        debug_assert_eq!((dim_c + dim_d) % 2, 0);
        Ok(SubsystemCode {
            field: gauge.field().clone(),
            n,
            k: n - (dim_c + dim_d) / 2,
            r: (dim_c - dim_d) / 2,
            distance: None,
            purity: None,
            gauge,
            stabilizer,
            normalizer,
            centralizer,
            basis,
        })
    }

    /// Like [`from_gauge_code`](Self::from_gauge_code) for generators of an
    /// additive code; rejects generators whose F_p-span is not closed under
    /// F_q scalars.
    pub fn from_additive(field: &Field, n: usize, generators: Vec<Vector>) -> Result<SubsystemCode> {
        let gauge = CodeMatrix::new(field.clone(), 2 * n, generators)?;
        if prime_rank(&gauge) != field.m() as usize * gauge.rank() {
            return Err(Error::NotLinear);
        }
        SubsystemCode::from_gauge_code(gauge)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn r(&self) -> usize {
        self.r
    }
    pub fn distance(&self) -> Option<usize> {
        self.distance
    }
    /// Exact purity `d' = swt(C \ {0})`, once computed.
    pub fn purity(&self) -> Option<usize> {
        self.purity
    }
    pub fn is_pure(&self) -> Option<bool> {
        Some(self.purity? >= self.distance?)
    }
    pub fn gauge(&self) -> &CodeMatrix {
        &self.gauge
    }
    /// `D = C ∩ C^⊥s`.
    pub fn stabilizer(&self) -> &CodeMatrix {
        &self.stabilizer
    }
    /// `D^⊥s`.
    pub fn normalizer(&self) -> &CodeMatrix {
        &self.normalizer
    }
    /// `C^⊥s`.
    pub fn centralizer(&self) -> &CodeMatrix {
        &self.centralizer
    }
    pub fn basis(&self) -> &HyperbolicBasis {
        &self.basis
    }

    /// `K = q^k`, the dimension of the information subsystem.
    pub fn dim_a(&self) -> BigUint {
        BigUint::from(self.field.q()).pow(self.k as u32)
    }

    /// `R = q^r`, the dimension of the gauge subsystem.
    pub fn dim_b(&self) -> BigUint {
        BigUint::from(self.field.q()).pow(self.r as u32)
    }

    /// `[[n, k, r, d]]_q` with `d` shown as `?` when unknown.
    pub fn label(&self) -> String {
        let d = self.distance.map_or("?".to_string(), |d| d.to_string());
        format!("[[{},{},{},{}]]_{}", self.n, self.k, self.r, d, self.field.q())
    }

    /// True when `C = D^⊥s`, the degenerate distance case.
    pub fn gauge_is_normalizer(&self) -> bool {
        self.gauge.rank() == self.normalizer.rank()
    }

    /// Minimum-weight logical word: the lowest symplectic weight in
    /// `D^⊥s \ C` (or `D^⊥s \ {0}` when `C = D^⊥s`).
    pub fn min_logical(&self, cfg: &EnumConfig) -> Result<MinWord> {
        let found = if self.gauge_is_normalizer() {
            min_weight_outside(&self.field, &[], self.normalizer.basis().rows(), Weight::Symplectic, cfg)?
        } else {
            let inner = self.gauge.basis();
            let extra = inner.complement_in(&self.normalizer)?;
            min_weight_outside(&self.field, inner.rows(), extra.rows(), Weight::Symplectic, cfg)?
        };
        Ok(found.expect("D^⊥s is nonzero"))
    }

    pub fn compute_distance(&self, cfg: &EnumConfig) -> Result<usize> {
        Ok(self.min_logical(cfg)?.weight)
    }

    /// Lowest-weight nonzero gauge word.
    pub fn min_gauge_word(&self, cfg: &EnumConfig) -> Result<MinWord> {
        let found = min_weight_outside(&self.field, &[], self.gauge.basis().rows(), Weight::Symplectic, cfg)?;
        Ok(found.expect("gauge code is nonzero"))
    }

    /// `(d', pure)`; needs the distance.
    pub fn compute_purity(&self, cfg: &EnumConfig) -> Result<(usize, bool)> {
        let d = self
            .distance
            .ok_or_else(|| Error::PreconditionFailed("purity needs the distance".into()))?;
        let dp = self.min_gauge_word(cfg)?.weight;
        Ok((dp, dp >= d))
    }

    /// Fills in distance and purity by enumeration.
    pub fn analyze(mut self, cfg: &EnumConfig) -> Result<SubsystemCode> {
        self.distance = Some(self.compute_distance(cfg)?);
        self.purity = Some(self.compute_purity(cfg)?.0);
        Ok(self)
    }

    /// Sets values read from a record file without recomputing them.
    pub fn with_known(mut self, distance: Option<usize>, purity: Option<usize>) -> SubsystemCode {
        self.distance = distance;
        self.purity = purity;
        self
    }

    /// Checks `D ⊆ C ⊆ D^⊥s`, `D ⊆ C^⊥s ⊆ D^⊥s`, isotropy of `D` and the
    /// dimension identities.
    pub fn check_invariants(&self) -> bool {
        let f = &self.field;
        let d = &self.stabilizer;
        let isotropic = d.rows().iter().all(|u| d.rows().iter().all(|v| symp(f, u, v).is_zero()));
        isotropic
            && d.is_subspace_of(&self.gauge)
            && self.gauge.is_subspace_of(&self.normalizer)
            && d.is_subspace_of(&self.centralizer)
            && self.centralizer.is_subspace_of(&self.normalizer)
            && self.gauge.rank() == self.n - self.k + self.r
            && d.rank() + self.k + self.r == self.n
            && self.basis.s() == d.rank()
            && self.basis.r() == self.r
    }
}

/// Rank of the generators over the prime field, viewing each GF(p^m) entry as
/// its m base-p digits.
fn prime_rank(c: &CodeMatrix) -> usize {
    let f = c.field();
    let p = f.p();
    let m = f.m() as usize;
    let fp = Field::new(p, 1).expect("prime field");
    let rows: Vec<Vector> = c
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .flat_map(|x| (0..m).map(move |i| (x.value() / p.pow(i as u32)) % p))
                .map(|d| fp.element(d).expect("digit < p"))
                .collect()
        })
        .collect();
    CodeMatrix::new(fp, c.len() * m, rows).expect("consistent lengths").rank()
}
