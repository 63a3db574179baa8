//! Reference computations that share no code with the library's linear
//! algebra or enumeration: GF(2) bitmask elimination, brute-force spans over
//! prime fields, and dense Pauli matrices.

#![allow(dead_code)]

use std::collections::HashSet;

use num_complex::Complex64;

/// Binary symplectic vectors as bitmasks: bit `i` is `x_i`, bit `n + i` is `z_i`.
pub mod bits {
    pub fn swt(v: u64, n: usize) -> u32 {
        let mask = (1u64 << n) - 1;
        ((v | (v >> n)) & mask).count_ones()
    }

    pub fn symp(u: u64, v: u64, n: usize) -> u32 {
        let mask = (1u64 << n) - 1;
        let (ux, uz) = (u & mask, u >> n);
        let (vx, vz) = (v & mask, v >> n);
        ((ux & vz).count_ones() + (uz & vx).count_ones()) & 1
    }

    /// Independent rows with distinct leading bits, fully reduced.
    pub fn rref(rows: &[u64]) -> Vec<u64> {
        let mut basis: Vec<u64> = Vec::new();
        for &r in rows {
            let mut v = r;
            for &b in &basis {
                if v & (1 << (63 - b.leading_zeros())) != 0 {
                    v ^= b;
                }
            }
            if v != 0 {
                let lead = 1u64 << (63 - v.leading_zeros());
                for b in basis.iter_mut() {
                    if *b & lead != 0 {
                        *b ^= v;
                    }
                }
                basis.push(v);
            }
        }
        basis
    }

    pub fn reduce(basis: &[u64], v: u64) -> u64 {
        let mut v = v;
        for &b in basis {
            if v & (1 << (63 - b.leading_zeros())) != 0 {
                v ^= b;
            }
        }
        v
    }

    /// All `v` of `len` bits with even overlap with every row.
    pub fn nullspace(rows: &[u64], len: usize) -> Vec<u64> {
        let basis = rref(rows);
        let pivots: Vec<u32> = basis.iter().map(|b| 63 - b.leading_zeros()).collect();
        let mut out = Vec::new();
        for free in 0..len as u32 {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = 1u64 << free;
            for (b, &p) in basis.iter().zip(&pivots) {
                if (b >> free) & 1 == 1 {
                    v |= 1 << p;
                }
            }
            out.push(v);
        }
        out
    }

    fn twist(v: u64, n: usize) -> u64 {
        let mask = (1u64 << n) - 1;
        ((v & mask) << n) | (v >> n)
    }

    pub fn symp_dual(rows: &[u64], n: usize) -> Vec<u64> {
        let twisted: Vec<u64> = rows.iter().map(|&r| twist(r, n)).collect();
        nullspace(&twisted, 2 * n)
    }

    pub fn intersect(a: &[u64], b: &[u64], len: usize) -> Vec<u64> {
        let mut both = nullspace(a, len);
        both.extend(nullspace(b, len));
        nullspace(&both, len)
    }

    /// Minimum swt over `span(gens)` minus the span of `inner_rref`, by Gray
    /// code walk.
    pub fn min_swt_outside(gens: &[u64], inner_rref: &[u64], n: usize) -> u32 {
        let mut best = u32::MAX;
        let mut v = 0u64;
        for i in 1u64..(1 << gens.len()) {
            v ^= gens[i.trailing_zeros() as usize];
            let w = swt(v, n);
            if w < best && reduce(inner_rref, v) != 0 {
                best = w;
            }
        }
        best
    }

    /// Bacon-Shor gauge generators, qudit `(i, j)` at `i * n2 + j`.
    pub fn bacon_shor(n1: usize, n2: usize) -> Vec<u64> {
        let n = n1 * n2;
        let mut rows = Vec::new();
        for i in 0..n1 {
            for j in 0..n2 - 1 {
                rows.push((1 << (i * n2 + j)) | (1 << (i * n2 + j + 1)));
            }
        }
        for i in 0..n1 - 1 {
            for j in 0..n2 {
                rows.push((1 << (n + i * n2 + j)) | (1 << (n + (i + 1) * n2 + j)));
            }
        }
        rows
    }

    /// `(k, r, d, d')` of the subsystem code with binary gauge generators `c`.
    pub fn parameters(c: &[u64], n: usize) -> (usize, usize, u32, u32) {
        let c_basis = rref(c);
        let d_basis = rref(&intersect(&c_basis, &symp_dual(&c_basis, n), 2 * n));
        let normalizer = rref(&symp_dual(&d_basis, n));
        let (dim_c, dim_d) = (c_basis.len(), d_basis.len());
        let k = n - (dim_c + dim_d) / 2;
        let r = (dim_c - dim_d) / 2;
        let d = if normalizer.len() == dim_c {
            min_swt_outside(&normalizer, &[], n)
        } else {
            min_swt_outside(&normalizer, &c_basis, n)
        };
        let purity = min_swt_outside(&c_basis, &[], n);
        (k, r, d, purity)
    }
}

/// Vectors over a prime field as value lists.
pub mod prime {
    use super::*;

    pub fn all_vectors(p: u32, len: usize) -> Vec<Vec<u32>> {
        let total = (p as usize).pow(len as u32);
        (0..total)
            .map(|mut i| {
                (0..len)
                    .map(|_| {
                        let d = (i % p as usize) as u32;
                        i /= p as usize;
                        d
                    })
                    .collect()
            })
            .collect()
    }

    pub fn dot(p: u32, u: &[u32], v: &[u32]) -> u32 {
        u.iter().zip(v).map(|(a, b)| a * b).sum::<u32>() % p
    }

    pub fn weight(v: &[u32]) -> usize {
        v.iter().filter(|&&x| x != 0).count()
    }

    pub fn span(p: u32, gens: &[Vec<u32>], len: usize) -> HashSet<Vec<u32>> {
        let mut set = HashSet::new();
        set.insert(vec![0; len]);
        for g in gens {
            let current: Vec<Vec<u32>> = set.iter().cloned().collect();
            for v in current {
                for c in 1..p {
                    set.insert(v.iter().zip(g).map(|(a, b)| (a + c * b) % p).collect());
                }
            }
        }
        set
    }

    /// Euclidean dual, by checking every vector.
    pub fn dual(p: u32, code: &HashSet<Vec<u32>>, len: usize) -> HashSet<Vec<u32>> {
        all_vectors(p, len)
            .into_iter()
            .filter(|v| code.iter().all(|c| dot(p, c, v) == 0))
            .collect()
    }

    pub fn dim(p: u32, set: &HashSet<Vec<u32>>) -> usize {
        let mut size = set.len();
        let mut d = 0;
        while size > 1 {
            assert_eq!(size % p as usize, 0, "not a subspace");
            size /= p as usize;
            d += 1;
        }
        d
    }
}

/// Dense `q^n × q^n` Pauli operators, wire 0 most significant, over a prime
/// field.
pub mod dense {
    use super::*;

    pub type Matrix = Vec<Vec<Complex64>>;

    pub fn omega(p: u32, j: u32) -> Complex64 {
        Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (j % p) as f64 / p as f64)
    }

    fn zeros(d: usize) -> Matrix {
        vec![vec![Complex64::new(0.0, 0.0); d]; d]
    }

    pub fn x(p: u32, a: u32) -> Matrix {
        let mut m = zeros(p as usize);
        for v in 0..p {
            m[((v + a) % p) as usize][v as usize] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn z(p: u32, b: u32) -> Matrix {
        let mut m = zeros(p as usize);
        for v in 0..p {
            m[v as usize][v as usize] = omega(p, b * v);
        }
        m
    }

    pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
        let d = a.len();
        let mut out = zeros(d);
        for i in 0..d {
            for k in 0..d {
                if a[i][k] == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..d {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
        out
    }

    pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
        let (da, db) = (a.len(), b.len());
        let mut out = zeros(da * db);
        for i in 0..da {
            for j in 0..da {
                for k in 0..db {
                    for l in 0..db {
                        out[i * db + k][j * db + l] = a[i][j] * b[k][l];
                    }
                }
            }
        }
        out
    }

    /// `X(a_1)Z(b_1) ⊗ … ⊗ X(a_n)Z(b_n)`.
    pub fn pauli(p: u32, a: &[u32], b: &[u32]) -> Matrix {
        let mut m = vec![vec![Complex64::new(1.0, 0.0)]];
        for (&ai, &bi) in a.iter().zip(b) {
            m = kron(&m, &mul(&x(p, ai), &z(p, bi)));
        }
        m
    }

    pub fn close(a: &Matrix, b: &Matrix, tol: f64) -> bool {
        a.iter().zip(b).all(|(r, s)| r.iter().zip(s).all(|(x, y)| (x - y).norm() < tol))
    }

    /// The `j` with `G E = ω^j E G`, if any.
    pub fn commutator_exponent(p: u32, g: &Matrix, e: &Matrix) -> Option<u32> {
        let ge = mul(g, e);
        let eg = mul(e, g);
        (0..p).find(|&j| {
            let w = omega(p, j);
            let scaled: Matrix = eg.iter().map(|r| r.iter().map(|v| v * w).collect()).collect();
            close(&ge, &scaled, 1e-9)
        })
    }
}
