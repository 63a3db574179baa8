//! Exact checks of the subsystem Singleton and Hamming bounds, and of the
//! number of syndrome measurements against an MDS stabilizer code.
//!
//! A violated bound is a result, not an error.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub bound_name: String,
    #[serde(serialize_with = "as_decimal")]
    pub lhs: BigInt,
    #[serde(serialize_with = "as_decimal")]
    pub rhs: BigInt,
    pub satisfied: bool,
    #[serde(serialize_with = "as_decimal")]
    pub slack: BigInt,
}

/// Big integers go into JSON as decimal strings.
fn as_decimal<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl BoundReport {
    pub fn new(bound_name: &str, lhs: BigInt, rhs: BigInt) -> BoundReport {
        BoundReport {
            bound_name: bound_name.to_string(),
            satisfied: lhs <= rhs,
            slack: &rhs - &lhs,
            lhs,
            rhs,
        }
    }

    /// `"28 > 16"`, `"5 <= 5"`.
    pub fn relation(&self) -> String {
        let op = if self.lhs < self.rhs {
            "<"
        } else if self.lhs == self.rhs {
            "="
        } else {
            ">"
        };
        format!("{} {op} {}", self.lhs, self.rhs)
    }
}

/// `k + r <= n − 2d + 2`.
pub fn singleton_check(n: usize, k: usize, r: usize, d: usize, _q: u32) -> BoundReport {
    let lhs = BigInt::from(k) + BigInt::from(r);
    let rhs = BigInt::from(n) - 2 * BigInt::from(d) + 2;
    BoundReport::new("singleton", lhs, rhs)
}

fn binomial(n: usize, j: usize) -> BigUint {
    (0..j).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `Σ_{j ≤ ⌊(d−1)/2⌋} C(n, j) (q² − 1)^j <= q^n / (K R)` for arbitrary
/// positive `K`, `R`.
pub fn hamming_check(n: usize, big_k: &BigUint, big_r: &BigUint, d: usize, q: u32) -> Result<BoundReport> {
    let qn = BigUint::from(q).pow(n as u32);
    let kr = big_k * big_r;
    if kr.is_zero() || !(&qn % &kr).is_zero() {
        return Err(Error::NonIntegerRhs);
    }
    let base = BigUint::from(q) * q - 1u32;
    let t = d.saturating_sub(1) / 2;
    let lhs: BigUint = (0..=t.min(n)).map(|j| binomial(n, j) * base.pow(j as u32)).sum();
    Ok(BoundReport::new("hamming", lhs.into(), (qn / kr).into()))
}

/// [`hamming_check`] with `K = q^k`, `R = q^r`.
pub fn hamming_check_params(n: usize, k: usize, r: usize, d: usize, q: u32) -> Result<BoundReport> {
    let qb = BigUint::from(q);
    hamming_check(n, &qb.pow(k as u32), &qb.pow(r as u32), d, q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MdsClass {
    StrictlyBelow,
    MeetsSingleton,
    Violates,
}

impl MdsClass {
    pub fn as_str(self) -> &'static str {
        match self {
            MdsClass::StrictlyBelow => "strictly-below",
            MdsClass::MeetsSingleton => "meets-singleton",
            MdsClass::Violates => "violates",
        }
    }
}

pub fn mds_classify(n: usize, k: usize, r: usize, d: usize, q: u32) -> MdsClass {
    let report = singleton_check(n, k, r, d, q);
    match report.slack.sign() {
        num_bigint::Sign::Plus => MdsClass::StrictlyBelow,
        num_bigint::Sign::NoSign => MdsClass::MeetsSingleton,
        num_bigint::Sign::Minus => MdsClass::Violates,
    }
}

/// Number of stabilizer generators to measure, `n − k − r`.
pub fn syndrome_count(n: usize, k: usize, r: usize) -> usize {
    n - k - r
}

/// `2d − 2 <= n − k − r`: at least as many measurements as the MDS
/// stabilizer code `[[k + 2d − 2, k, d]]` needs.
pub fn compare_with_mds(n: usize, k: usize, r: usize, d: usize) -> BoundReport {
    let lhs = 2 * BigInt::from(d) - 2;
    let rhs = BigInt::from(n) - BigInt::from(k) - BigInt::from(r);
    BoundReport::new("syndrome-vs-mds", lhs, rhs)
}

/// Every bound for one parameter set. The Hamming entry is absent when
/// `q^n / (K R)` is not an integer.
pub fn all_bounds(n: usize, k: usize, r: usize, d: usize, q: u32) -> Vec<BoundReport> {
    let mut out = vec![singleton_check(n, k, r, d, q)];
    if let Ok(h) = hamming_check_params(n, k, r, d, q) {
        out.push(h);
    }
    out.push(compare_with_mds(n, k, r, d));
    out
}
