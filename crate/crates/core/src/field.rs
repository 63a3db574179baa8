//! Arithmetic in GF(p^m) for q = p^m <= 256 and m <= 4.
//!
//! An element `c_0 + c_1 α + ... + c_{m-1} α^{m-1}` is encoded as the integer
//! `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. The prime subfield is therefore the
//! values `0..p`, and all arithmetic goes through precomputed tables.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_Q: u32 = 256;

/// Built-in moduli, coefficients listed constant term first (monic, degree m).
/// These are the Conway polynomials for each (p, m).
const MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 2, &[2, 12, 1]),
];

/// An element of a finite field, stored in its base-p encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct FieldElement(u8);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub(crate) fn from_raw(v: u8) -> FieldElement {
        FieldElement(v)
    }

    #[inline]
    pub(crate) fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    trace: Vec<u8>,
}

/// A finite field GF(p^m). Cheap to clone; the tables are shared.
#[derive(Clone)]
pub struct Field {
    t: Arc<Tables>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.t, &other.t) || (self.t.p == other.t.p && self.t.m == other.t.m)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.t.p, self.t.m)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.t.q)
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `a` modulo the monic polynomial `b` over GF(p). Coefficients
/// constant term first.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + p * p - lead * bc % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut f: Vec<u32> = (0..d).map(|i| (low / p.pow(i as u32)) % p).collect();
            f.push(1);
            if poly_rem(modulus, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds GF(p^m) with the built-in modulus for `(p, m)`.
    pub fn new(p: u32, m: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if !(1..=4).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let q = p.checked_pow(m).filter(|&q| q <= MAX_Q);
        let q = q.ok_or(Error::NoModulusAvailable { p, m })?;
        let modulus: Vec<u32> = if m == 1 {
            vec![0, 1]
        } else {
            MODULI
                .iter()
                .find(|(pp, mm, _)| *pp == p && *mm == m)
                .map(|(_, _, c)| c.to_vec())
                .ok_or(Error::NoModulusAvailable { p, m })?
        };
        if m > 1 && !is_irreducible(&modulus, p) {
            return Err(Error::NoModulusAvailable { p, m });
        }
        Ok(Field { t: Arc::new(Tables::build(p, m, q, modulus)) })
    }

    /// GF(q) for a prime power q.
    pub fn with_order(q: u32) -> Result<Field> {
        if q < 2 {
            return Err(Error::NonPrime(q));
        }
        let mut p = 2;
        while !q.is_multiple_of(p) {
            p += 1;
        }
        let mut m = 0;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            m += 1;
        }
        if rest != 1 {
            return Err(Error::NonPrime(q));
        }
        Field::new(p, m)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.t.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.t.m
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.t.q
    }

    /// Modulus coefficients, constant term first. For prime fields this is `x`.
    pub fn modulus(&self) -> &[u32] {
        &self.t.modulus
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value < self.t.q {
            Ok(FieldElement(value as u8))
        } else {
            Err(Error::ElementOutOfRange { value, q: self.t.q })
        }
    }

    /// The element α (value p) of an extension field, or 1 in a prime field.
    pub fn generator(&self) -> FieldElement {
        if self.t.m == 1 {
            FieldElement::ONE
        } else {
            FieldElement(self.t.p as u8)
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.t.q).map(|v| FieldElement(v as u8))
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.t.q).map(|v| FieldElement(v as u8))
    }

    #[inline]
    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        FieldElement(self.t.add[x.index() * self.t.q as usize + y.index()])
    }

    #[inline]
    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        FieldElement(self.t.mul[x.index() * self.t.q as usize + y.index()])
    }

    #[inline]
    pub fn neg(&self, x: FieldElement) -> FieldElement {
        FieldElement(self.t.neg[x.index()])
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(FieldElement(self.t.inv[x.index()]))
        }
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(x, self.inv(y)?))
    }

    pub fn pow(&self, x: FieldElement, mut e: u64) -> FieldElement {
        let mut base = x;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// tr_{q/p}(x) = x + x^p + ... + x^{p^{m-1}}, an element of the prime subfield.
    #[inline]
    pub fn trace(&self, x: FieldElement) -> FieldElement {
        FieldElement(self.t.trace[x.index()])
    }

    /// Reads a prime-subfield element as an integer in `0..p`.
    pub fn prime_value(&self, x: FieldElement) -> Option<u32> {
        (x.value() < self.t.p).then_some(x.value())
    }

    #[inline]
    pub(crate) fn add_row(&self) -> &[u8] {
        &self.t.add
    }
}

impl Tables {
    fn build(p: u32, m: u32, q: u32, modulus: Vec<u32>) -> Tables {
        let qs = q as usize;
        let digits = |v: u32| -> Vec<u32> { (0..m).map(|i| (v / p.pow(i)) % p).collect() };
        let encode = |c: &[u32]| -> u32 { c.iter().rev().fold(0, |acc, &d| acc * p + d) };

        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for x in 0..q {
            let dx = digits(x);
            for y in 0..q {
                let dy = digits(y);
                let sum: Vec<u32> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                add[x as usize * qs + y as usize] = encode(&sum) as u8;

                let mut prod = vec![0u32; 2 * m as usize - 1];
                for (i, a) in dx.iter().enumerate() {
                    for (j, b) in dy.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + a * b) % p;
                    }
                }
                let red = if m == 1 { prod } else { poly_rem(&prod, &modulus, p) };
                let mut red = red;
                red.resize(m as usize, 0);
                mul[x as usize * qs + y as usize] = encode(&red) as u8;
            }
        }
        let neg: Vec<u8> = (0..q)
            .map(|x| (0..q).find(|&y| add[x as usize * qs + y as usize] == 0).unwrap() as u8)
            .collect();

        let mulf = |a: u8, b: u8| mul[a as usize * qs + b as usize];
        let powf = |x: u8, mut e: u64| {
            let (mut b, mut acc) = (x, 1u8);
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulf(acc, b);
                }
                b = mulf(b, b);
                e >>= 1;
            }
            acc
        };
        // x^{q-2}
        let inv: Vec<u8> = (0..q).map(|x| if x == 0 { 0 } else { powf(x as u8, q as u64 - 2) }).collect();
        let trace: Vec<u8> = (0..q)
            .map(|x| {
                let mut acc = 0u8;
                let mut frob = x as u8;
                for _ in 0..m {
                    acc = add[acc as usize * qs + frob as usize];
                    frob = powf(frob, p as u64);
                }
                acc
            })
            .collect();

        Tables { p, m, q, modulus, add, mul, neg, inv, trace }
    }
}
