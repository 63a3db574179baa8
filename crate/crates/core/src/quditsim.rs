//! Dense state-vector simulation of qudit registers with the gates
//! `X(a)`, `Z(b)`, `M(c)`, `F`, `F†` and the adder, and the ancilla circuit
//! that measures one stabilizer generator.
//!
//! Amplitudes are indexed base `q`, big-endian: wire 0 is the most
//! significant digit. Digit `v` on a wire is the field element with value `v`.
//! `ω = e^{2πi/p}`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::check_size;
use crate::enumerate::EnumConfig;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::{axpy, dot, CodeMatrix, Vector};
use crate::subsystem::SubsystemCode;
use crate::symplectic::{symp_product, SymplecticVector};

/// Largest number of amplitudes a state may hold.
pub const MAX_AMPLITUDES: usize = 1 << 22;

/// Absolute tolerance for norms, probabilities and fidelities.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gate {
    X { wire: usize, a: FieldElement },
    Z { wire: usize, b: FieldElement },
    M { wire: usize, c: FieldElement },
    F { wire: usize },
    FDag { wire: usize },
    /// `|x⟩|y⟩ ↦ |x⟩|x + y⟩`.
    Add { control: usize, target: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuditState {
    field: Field,
    n: usize,
    amps: Vec<Complex64>,
}

fn omega_powers(p: u32) -> Vec<Complex64> {
    (0..p).map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / p as f64)).collect()
}

fn dimension(q: u32, n: usize) -> Result<usize> {
    match (q as usize).checked_pow(n as u32) {
        Some(size) if size <= MAX_AMPLITUDES => Ok(size),
        _ => Err(Error::StateTooLarge(format!("{q}^{n} amplitudes"))),
    }
}

impl QuditState {
    /// `|0…0⟩` on `n` wires.
    pub fn zero(field: &Field, n: usize) -> Result<QuditState> {
        let mut amps = vec![Complex64::new(0.0, 0.0); dimension(field.q(), n)?];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(QuditState { field: field.clone(), n, amps })
    }

    /// The computational basis state with the given digits.
    pub fn basis(field: &Field, digits: &[FieldElement]) -> Result<QuditState> {
        let mut s = QuditState::zero(field, digits.len())?;
        let q = field.q() as usize;
        let idx = digits.iter().fold(0, |acc, d| acc * q + d.value() as usize);
        s.amps[0] = Complex64::new(0.0, 0.0);
        s.amps[idx] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    /// Normalizes the given amplitudes.
    pub fn from_amplitudes(field: &Field, n: usize, amps: Vec<Complex64>) -> Result<QuditState> {
        let len = dimension(field.q(), n)?;
        if amps.len() != len {
            return Err(Error::LengthMismatch { expected: len, found: amps.len() });
        }
        let mut s = QuditState { field: field.clone(), n, amps };
        s.normalize()?;
        Ok(s)
    }

    /// Uniformly random real and imaginary parts in `[-1, 1]`, normalized.
    pub fn random(field: &Field, n: usize, seed: u64) -> Result<QuditState> {
        let len = dimension(field.q(), n)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let amps = (0..len)
            .map(|_| Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)))
            .collect();
        QuditState::from_amplitudes(field, n, amps)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    fn normalize(&mut self) -> Result<()> {
        let norm = self.norm();
        if norm < TOLERANCE {
            return Err(Error::ProjectionVanished);
        }
        for a in &mut self.amps {
            *a /= norm;
        }
        Ok(())
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &QuditState) -> Complex64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    /// `|⟨self|other⟩|`, insensitive to global phase.
    pub fn fidelity(&self, other: &QuditState) -> f64 {
        self.inner(other).norm()
    }

    /// `self ⊗ other`, with `self` on the leading wires.
    pub fn tensor(&self, other: &QuditState) -> Result<QuditState> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        dimension(self.field.q(), self.n + other.n)?;
        let amps = self.amps.iter().flat_map(|a| other.amps.iter().map(move |b| a * b)).collect();
        Ok(QuditState { field: self.field.clone(), n: self.n + other.n, amps })
    }

    fn stride(&self, wire: usize) -> usize {
        (self.field.q() as usize).pow((self.n - 1 - wire) as u32)
    }

    fn check_wire(&self, wire: usize) -> Result<()> {
        if wire < self.n {
            Ok(())
        } else {
            Err(Error::WireOutOfRange { wire, n: self.n })
        }
    }

    fn digit(&self, idx: usize, wire: usize) -> usize {
        idx / self.stride(wire) % self.field.q() as usize
    }

    /// Moves the amplitude at digit `x` to digit `map[x]` on one wire.
    fn permute_wire(&mut self, wire: usize, map: &[usize]) {
        let stride = self.stride(wire);
        let mut out = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        for (idx, a) in self.amps.iter().enumerate() {
            let x = self.digit(idx, wire);
            out[idx + map[x] * stride - x * stride] = *a;
        }
        self.amps = out;
    }

    /// Applies the `q × q` matrix `kernel[y][x]` on one wire.
    fn apply_kernel(&mut self, wire: usize, kernel: &[Vec<Complex64>]) {
        let q = self.field.q() as usize;
        let stride = self.stride(wire);
        let mut out = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        for (idx, o) in out.iter_mut().enumerate() {
            let y = self.digit(idx, wire);
            let base = idx - y * stride;
            *o = (0..q).map(|x| kernel[y][x] * self.amps[base + x * stride]).sum();
        }
        self.amps = out;
    }

    fn fourier_kernel(&self, inverse: bool) -> Vec<Vec<Complex64>> {
        let f = &self.field;
        let w = omega_powers(f.p());
        let scale = 1.0 / (f.q() as f64).sqrt();
        f.elements()
            .map(|y| {
                f.elements()
                    .map(|x| {
                        let t = f.prime_value(f.trace(f.mul(x, y))).unwrap() as usize;
                        let e = if inverse { w[(f.p() as usize - t) % f.p() as usize] } else { w[t] };
                        e * scale
                    })
                    .collect()
            })
            .collect()
    }

    pub fn apply(&mut self, gate: Gate) -> Result<()> {
        let f = self.field.clone();
        match gate {
            Gate::X { wire, a } => {
                self.check_wire(wire)?;
                let map: Vec<usize> = f.elements().map(|x| f.add(x, a).value() as usize).collect();
                self.permute_wire(wire, &map);
            }
            Gate::Z { wire, b } => {
                self.check_wire(wire)?;
                let w = omega_powers(f.p());
                let phase: Vec<Complex64> = f
                    .elements()
                    .map(|x| w[f.prime_value(f.trace(f.mul(b, x))).unwrap() as usize])
                    .collect();
                let stride = self.stride(wire);
                let q = f.q() as usize;
                for (idx, a) in self.amps.iter_mut().enumerate() {
                    *a *= phase[idx / stride % q];
                }
            }
            Gate::M { wire, c } => {
                self.check_wire(wire)?;
                if c.is_zero() {
                    return Err(Error::SingularScale);
                }
                let map: Vec<usize> = f.elements().map(|x| f.mul(c, x).value() as usize).collect();
                self.permute_wire(wire, &map);
            }
            Gate::F { wire } | Gate::FDag { wire } => {
                self.check_wire(wire)?;
                let kernel = self.fourier_kernel(matches!(gate, Gate::FDag { .. }));
                self.apply_kernel(wire, &kernel);
            }
            Gate::Add { control, target } => {
                self.check_wire(control)?;
                self.check_wire(target)?;
                if control == target {
                    return Err(Error::PreconditionFailed("adder needs two distinct wires".into()));
                }
                let st = self.stride(target);
                let mut out = vec![Complex64::new(0.0, 0.0); self.amps.len()];
                for (idx, a) in self.amps.iter().enumerate() {
                    let x = FieldElement::from_raw(self.digit(idx, control) as u8);
                    let y = self.digit(idx, target);
                    let new_y = f.add(x, FieldElement::from_raw(y as u8)).value() as usize;
                    out[idx + new_y * st - y * st] = *a;
                }
                self.amps = out;
            }
        }
        Ok(())
    }

    /// Multiplies by `ω^j`.
    fn global_phase(&mut self, j: u32) {
        let w = omega_powers(self.field.p())[(j % self.field.p()) as usize];
        for a in &mut self.amps {
            *a *= w;
        }
    }

    /// Applies `ω^c X(a_1)Z(b_1) ⊗ … ⊗ X(a_n)Z(b_n)`.
    pub fn apply_pauli(&mut self, e: &PauliLabel) -> Result<()> {
        if e.vector.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if e.vector.n() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: e.vector.n() });
        }
        self.apply_pauli_on(e.vector.x(), e.vector.z(), 0);
        self.global_phase(e.phase_exponent);
        Ok(())
    }

    /// `X(a)Z(b)` on wires `offset..offset + a.len()`.
    fn apply_pauli_on(&mut self, a: &[FieldElement], b: &[FieldElement], offset: usize) {
        for (i, (&ai, &bi)) in a.iter().zip(b).enumerate() {
            if !bi.is_zero() {
                self.apply(Gate::Z { wire: offset + i, b: bi }).expect("wire in range");
            }
            if !ai.is_zero() {
                self.apply(Gate::X { wire: offset + i, a: ai }).expect("wire in range");
            }
        }
    }

    /// Probability of each value of wire 0.
    fn leading_distribution(&self) -> Vec<f64> {
        let q = self.field.q() as usize;
        let block = self.amps.len() / q;
        (0..q)
            .map(|v| self.amps[v * block..(v + 1) * block].iter().map(|a| a.norm_sqr()).sum())
            .collect()
    }
}

/// An error operator `ω^c X(a)Z(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliLabel {
    pub vector: SymplecticVector,
    /// `c` in `0..p`.
    pub phase_exponent: u32,
}

impl PauliLabel {
    pub fn new(vector: SymplecticVector) -> PauliLabel {
        PauliLabel { vector, phase_exponent: 0 }
    }

    pub fn identity(field: &Field, n: usize) -> PauliLabel {
        PauliLabel::new(SymplecticVector::zero(field, n))
    }

    /// Number of wires acted on nontrivially.
    pub fn weight(&self) -> usize {
        self.vector.x().iter().zip(self.vector.z()).filter(|(a, b)| !a.is_zero() || !b.is_zero()).count()
    }

    /// Parses `I`, `X1*Z3`, `X1:2*Z2:1`: letter, 1-based wire, optional
    /// coefficient value (default 1). Factors on one wire accumulate.
    pub fn parse(field: &Field, n: usize, spec: &str) -> Result<PauliLabel> {
        let mut x = vec![FieldElement::ZERO; n];
        let mut z = vec![FieldElement::ZERO; n];
        let spec = spec.trim();
        if spec.is_empty() || spec == "I" {
            return Ok(PauliLabel::identity(field, n));
        }
        for factor in spec.split('*') {
            let factor = factor.trim();
            let bad = || Error::Parse(format!("bad error factor `{factor}`"));
            let mut chars = factor.chars();
            let letter = chars.next().ok_or_else(bad)?;
            let rest = chars.as_str();
            let (wire, coeff) = match rest.split_once(':') {
                Some((w, c)) => (w, c.parse::<u32>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            let wire: usize = wire.parse().map_err(|_| bad())?;
            if wire == 0 || wire > n {
                return Err(Error::Parse(format!("wire {wire} outside 1..={n}")));
            }
            let c = field.element(coeff).map_err(|_| Error::Parse(format!("coefficient {coeff} not below {}", field.q())))?;
            let slot = match letter {
                'X' => &mut x[wire - 1],
                'Z' => &mut z[wire - 1],
                'I' => continue,
                _ => return Err(bad()),
            };
            *slot = field.add(*slot, c);
        }
        Ok(PauliLabel::new(SymplecticVector::new(field, x, z)?))
    }
}

/// The `t` with `X(g_x)Z(g_z) E = ω^{tr(t)} E X(g_x)Z(g_z)` for
/// `E = X(e_x)Z(e_z)`: `t = g_z·e_x − g_x·e_z = <g|e>_s`.
pub fn commutation_phase(g: &SymplecticVector, e: &SymplecticVector) -> Result<FieldElement> {
    symp_product(g, e)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SimConfig {
    /// Apply the controlled Pauli directly instead of the gate-level circuit.
    pub fused: bool,
}

/// Runs the measurement circuit for `g` on a register whose wire 0 is an
/// ancilla in `|0⟩` and whose other wires hold the data. Returns the
/// ancilla outcome and the post-measurement data register.
pub fn syndrome_measure(s: &QuditState, g: &SymplecticVector, cfg: SimConfig) -> Result<(FieldElement, QuditState)> {
    let f = s.field.clone();
    if g.field() != &f {
        return Err(Error::FieldMismatch);
    }
    if g.n() + 1 != s.n {
        return Err(Error::LengthMismatch { expected: s.n - 1, found: g.n() });
    }
    let mut s = s.clone();
    s.apply(Gate::F { wire: 0 })?;
    if cfg.fused {
        let q = f.q() as usize;
        let block = s.amps.len() / q;
        for alpha in f.nonzero() {
            let a: Vector = g.x().iter().map(|&v| f.mul(alpha, v)).collect();
            let b: Vector = g.z().iter().map(|&v| f.mul(alpha, v)).collect();
            let lo = alpha.value() as usize * block;
            let mut part = QuditState { field: f.clone(), n: s.n - 1, amps: s.amps[lo..lo + block].to_vec() };
            part.apply_pauli_on(&a, &b, 0);
            s.amps[lo..lo + block].copy_from_slice(&part.amps);
        }
    } else {
        for (j, &bj) in g.z().iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let wire = j + 1;
            s.apply(Gate::FDag { wire })?;
            s.apply(Gate::M { wire, c: f.inv(bj)? })?;
            s.apply(Gate::Add { control: 0, target: wire })?;
            s.apply(Gate::M { wire, c: bj })?;
            s.apply(Gate::F { wire })?;
        }
        for (j, &aj) in g.x().iter().enumerate() {
            if aj.is_zero() {
                continue;
            }
            let wire = j + 1;
            s.apply(Gate::M { wire, c: f.inv(aj)? })?;
            s.apply(Gate::Add { control: 0, target: wire })?;
            s.apply(Gate::M { wire, c: aj })?;
        }
    }
    s.apply(Gate::FDag { wire: 0 })?;

    let probs = s.leading_distribution();
    let (t, &pt) = probs
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("q >= 2 outcomes");
    if pt < 1.0 - TOLERANCE {
        return Err(Error::NotStabilized(pt));
    }
    let block = s.amps.len() / f.q() as usize;
    let data = QuditState::from_amplitudes(&f, s.n - 1, s.amps[t * block..(t + 1) * block].to_vec())?;
    Ok((FieldElement::from_raw(t as u8), data))
}

/// Attaches a fresh ancilla to `data` and measures `g`.
pub fn measure_generator(data: &QuditState, g: &SymplecticVector, cfg: SimConfig) -> Result<(FieldElement, QuditState)> {
    let register = QuditState::zero(&data.field, 1)?.tensor(data)?;
    syndrome_measure(&register, g, cfg)
}

/// Measures each generator in turn.
pub fn measure_syndrome(data: &QuditState, generators: &[SymplecticVector], cfg: SimConfig) -> Result<(Vec<FieldElement>, QuditState)> {
    let mut state = data.clone();
    let mut out = Vec::with_capacity(generators.len());
    for g in generators {
        let (t, next) = measure_generator(&state, g, cfg)?;
        out.push(t);
        state = next;
    }
    Ok((out, state))
}

fn q_form(field: &Field, v: &[FieldElement]) -> FieldElement {
    let n = v.len() / 2;
    dot(field, &v[..n], &v[n..])
}

/// A basis of the stabilizer whose elements all have `g_x·g_z = 0`. For
/// those, `{X(αg_x)Z(αg_z)}` is a group and the measurement circuit is
/// deterministic on code states. Prefers the reduced row echelon basis.
pub fn syndrome_generators(code: &SubsystemCode) -> Result<Vec<SymplecticVector>> {
    let f = code.field();
    let basis = code.stabilizer().basis().into_rows();
    let wrap = |rows: Vec<Vector>| -> Result<Vec<SymplecticVector>> {
        rows.into_iter().map(|v| SymplecticVector::from_concat(f, v)).collect()
    };
    if basis.iter().all(|v| q_form(f, v).is_zero()) {
        return wrap(basis);
    }
    let s = basis.len();
    let total = check_size(f.q(), s, &EnumConfig::from_env())?;
    let mut chosen = CodeMatrix::zero(f, 2 * code.n());
    let mut picked = Vec::new();
    for index in 1..total {
        let mut v = vec![FieldElement::ZERO; 2 * code.n()];
        let mut rest = index;
        for row in &basis {
            let c = FieldElement::from_raw((rest % f.q() as u64) as u8);
            rest /= f.q() as u64;
            axpy(f, &mut v, c, row);
        }
        if !q_form(f, &v).is_zero() || chosen.contains(&v)? {
            continue;
        }
        let mut rows = chosen.into_rows();
        rows.push(v.clone());
        chosen = CodeMatrix::new(f.clone(), 2 * code.n(), rows)?;
        picked.push(v);
        if picked.len() == s {
            return wrap(picked);
        }
    }
    Err(Error::PreconditionFailed("stabilizer has no basis with g_x·g_z = 0 for every generator".into()))
}

/// Applies `(1/q) Σ_α X(αg_x)Z(αg_z)` for each generator.
pub fn project(state: &QuditState, generators: &[SymplecticVector]) -> QuditState {
    let f = state.field.clone();
    let mut cur = state.clone();
    for g in generators {
        let mut acc = vec![Complex64::new(0.0, 0.0); cur.amps.len()];
        for alpha in f.elements() {
            let a: Vector = g.x().iter().map(|&v| f.mul(alpha, v)).collect();
            let b: Vector = g.z().iter().map(|&v| f.mul(alpha, v)).collect();
            let mut term = cur.clone();
            term.apply_pauli_on(&a, &b, 0);
            for (o, t) in acc.iter_mut().zip(&term.amps) {
                *o += t;
            }
        }
        let scale = 1.0 / f.q() as f64;
        cur.amps = acc.into_iter().map(|a| a * scale).collect();
    }
    cur
}

/// A seeded random state projected onto the code space.
pub fn prepare_codestate(code: &SubsystemCode, seed: u64) -> Result<QuditState> {
    dimension(code.field().q(), code.n() + 1)?;
    let generators = syndrome_generators(code)?;
    let mut state = project(&QuditState::random(code.field(), code.n(), seed)?, &generators);
    state.normalize()?;
    Ok(state)
}

/// `tr P` for the code-space projector, from its diagonal on basis states.
pub fn projector_trace(code: &SubsystemCode) -> Result<f64> {
    let f = code.field();
    let n = code.n();
    let generators = syndrome_generators(code)?;
    let len = dimension(f.q(), n)?;
    let mut total = 0.0;
    for idx in 0..len {
        let mut amps = vec![Complex64::new(0.0, 0.0); len];
        amps[idx] = Complex64::new(1.0, 0.0);
        let basis = QuditState { field: f.clone(), n, amps };
        total += project(&basis, &generators).amps[idx].re;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::five_qudit_code;

    fn gf(q: u32) -> Field {
        Field::with_order(q).unwrap()
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < TOLERANCE
    }

    #[test]
    fn hadamard_at_q2() {
        let f = gf(2);
        let mut s = QuditState::zero(&f, 1).unwrap();
        s.apply(Gate::F { wire: 0 }).unwrap();
        let h = 1.0 / 2f64.sqrt();
        assert!(close(s.amps[0], Complex64::new(h, 0.0)) && close(s.amps[1], Complex64::new(h, 0.0)));
    }

    #[test]
    fn x_on_zero() {
        let f = gf(2);
        let mut s = QuditState::zero(&f, 1).unwrap();
        let e = PauliLabel::parse(&f, 1, "X1").unwrap();
        s.apply_pauli(&e).unwrap();
        assert!(close(s.amps[1], Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn adder_copies() {
        for q in [2, 3, 4, 5] {
            let f = gf(q);
            for x in f.elements() {
                let mut s = QuditState::basis(&f, &[x, FieldElement::ZERO]).unwrap();
                s.apply(Gate::Add { control: 0, target: 1 }).unwrap();
                assert_eq!(s, QuditState::basis(&f, &[x, x]).unwrap());
            }
        }
    }

    #[test]
    fn gate_errors() {
        let f = gf(3);
        let mut s = QuditState::zero(&f, 2).unwrap();
        assert_eq!(s.apply(Gate::F { wire: 2 }), Err(Error::WireOutOfRange { wire: 2, n: 2 }));
        assert_eq!(s.apply(Gate::M { wire: 0, c: FieldElement::ZERO }), Err(Error::SingularScale));
        assert!(matches!(QuditState::zero(&f, 30), Err(Error::StateTooLarge(_))));
    }

    #[test]
    fn parse_error_specs() {
        let f = gf(3);
        let e = PauliLabel::parse(&f, 3, "X1*Z3").unwrap();
        assert_eq!(e.vector, SymplecticVector::from_values(&f, &[1, 0, 0], &[0, 0, 1]).unwrap());
        let e = PauliLabel::parse(&f, 3, "X1:2*Z1").unwrap();
        assert_eq!(e.vector, SymplecticVector::from_values(&f, &[2, 0, 0], &[1, 0, 0]).unwrap());
        assert_eq!(PauliLabel::parse(&f, 3, "I").unwrap().weight(), 0);
        for bad in ["Y1", "X0", "X4", "X1:3", "Xa"] {
            assert!(matches!(PauliLabel::parse(&f, 3, bad), Err(Error::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn phase_examples() {
        let f = gf(2);
        let g = SymplecticVector::from_values(&f, &[1], &[0]).unwrap();
        let e = SymplecticVector::from_values(&f, &[0], &[1]).unwrap();
        assert_eq!(commutation_phase(&g, &e).unwrap(), FieldElement::ONE);
        assert!(commutation_phase(&g, &SymplecticVector::zero(&f, 1)).unwrap().is_zero());
    }

    #[test]
    fn identity_error_gives_zero_syndrome() {
        let f = gf(2);
        let code = SubsystemCode::from_gauge_code(five_qudit_code(&f)).unwrap();
        let psi = prepare_codestate(&code, 7).unwrap();
        let gens = syndrome_generators(&code).unwrap();
        let (syn, post) = measure_syndrome(&psi, &gens, SimConfig::default()).unwrap();
        assert!(syn.iter().all(|t| t.is_zero()));
        assert!((post.fidelity(&psi) - 1.0).abs() < TOLERANCE);
    }

    #[test]
    fn trivial_record_prepares_zero() {
        let f = gf(2);
        let gauge = CodeMatrix::from_values(&f, 2, &[vec![0, 1]]).unwrap();
        let code = SubsystemCode::from_gauge_code(gauge).unwrap();
        let psi = prepare_codestate(&code, 1).unwrap();
        assert!((psi.fidelity(&QuditState::zero(&f, 1).unwrap()) - 1.0).abs() < TOLERANCE);
    }

    #[test]
    fn unstabilized_input_is_reported() {
        let f = gf(2);
        let g = SymplecticVector::from_values(&f, &[1], &[0]).unwrap();
        let data = QuditState::zero(&f, 1).unwrap();
        assert!(matches!(measure_generator(&data, &g, SimConfig::default()), Err(Error::NotStabilized(_))));
    }
}
