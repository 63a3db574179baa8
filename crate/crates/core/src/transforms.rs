//! Puncturing subsystem codes by one qudit, and the chain of punctures that
//! certifies the Singleton bound.
//!
//! Coordinates are first normalized with moves that preserve both the
//! symplectic form and symplectic weight: a transposition applied to both
//! halves, and a determinant-1 linear map on a single `(a_i, b_i)` pair. Every
//! move is recorded in a [`TraceStep`] list, and the Gram matrix of the
//! hyperbolic basis is compared before and after.

use serde::Serialize;

use crate::enumerate::EnumConfig;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::{axpy, scale, CodeMatrix, Vector};
use crate::symplectic::{gram, symp, HyperbolicBasis, SymplecticVector};
use crate::subsystem::SubsystemCode;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum TraceStep {
    /// Which branch of the procedure runs.
    Case { case: String },
    /// A vector picked to drive the normalization.
    Choose { role: String, word: Vec<u32> },
    /// Coordinates `a` and `b` exchanged in both halves.
    Swap { a: usize, b: usize },
    /// `(a_i, b_i) <- M (a_i, b_i)` with `det M = 1`.
    LocalMap { coordinate: usize, matrix: [[u32; 2]; 2] },
    /// `z1 <- z1 - b1 z2`.
    ReduceB1 { b1: u32 },
    /// Gauge generator whose product with the weight-1 word was nonzero,
    /// removed to make that word isotropic.
    Demote { removed: Vec<u32> },
    /// Other generators made to vanish at `coordinate`.
    Clean { coordinate: usize, generators: usize },
    GramCheck { stage: String, preserved: bool },
    /// `rho`: coordinate removed from both halves.
    Puncture { coordinate: usize },
    /// Gauge partner dropped from the first hyperbolic pair.
    DropGauge { word: Vec<u32> },
    /// Product of the punctured pair before it was rescaled to 1.
    Rescale { gamma: u32 },
    /// Code passed through on the way; not returned.
    Intermediate { label: String, note: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Puncturing {
    pub input: SubsystemCode,
    pub output: SubsystemCode,
    pub trace: Vec<TraceStep>,
}

/// Deletes the first qudit: coordinates `1` and `n + 1` of `F_q^{2n}`.
pub fn rho(v: &SymplecticVector) -> Result<SymplecticVector> {
    if v.n() < 2 {
        return Err(Error::TooShort(v.n()));
    }
    SymplecticVector::new(v.field(), v.x()[1..].to_vec(), v.z()[1..].to_vec())
}

fn rho_raw(v: &[FieldElement]) -> Vector {
    let n = v.len() / 2;
    v[1..n].iter().chain(&v[n + 1..]).copied().collect()
}

fn values(v: &[FieldElement]) -> Vec<u32> {
    v.iter().map(|x| x.value()).collect()
}

fn label(n: usize, k: usize, r: usize, q: u32) -> String {
    format!("[[{n},{k},{r}]]_{q}")
}

/// Distance and exact purity, computed when the record does not carry them.
fn known_parameters(code: SubsystemCode, cfg: &EnumConfig) -> Result<(SubsystemCode, usize, usize)> {
    let code = match (code.distance(), code.purity()) {
        (Some(_), Some(_)) => code,
        _ => code.analyze(cfg)?,
    };
    let (d, dp) = (code.distance().unwrap(), code.purity().unwrap());
    Ok((code, d, dp))
}

/// Basis vectors under coordinate moves.
struct Frame {
    field: Field,
    n: usize,
    vecs: Vec<Vector>,
}

impl Frame {
    fn gram(&self) -> Vec<Vec<FieldElement>> {
        gram(&self.field, &self.vecs)
    }

    fn swap(&mut self, a: usize, b: usize, trace: &mut Vec<TraceStep>) {
        if a == b {
            return;
        }
        for v in &mut self.vecs {
            v.swap(a, b);
            v.swap(self.n + a, self.n + b);
        }
        trace.push(TraceStep::Swap { a, b });
    }

    fn local_map(&mut self, i: usize, m: [[FieldElement; 2]; 2], trace: &mut Vec<TraceStep>) {
        let f = &self.field;
        for v in &mut self.vecs {
            let (a, b) = (v[i], v[self.n + i]);
            v[i] = f.add(f.mul(m[0][0], a), f.mul(m[0][1], b));
            v[self.n + i] = f.add(f.mul(m[1][0], a), f.mul(m[1][1], b));
        }
        let matrix = m.map(|row| row.map(|x| x.value()));
        trace.push(TraceStep::LocalMap { coordinate: i, matrix });
    }

    /// Makes coordinate 0 of a vector with local part `(alpha, beta)` equal
    /// to `(1, 0)`.
    fn normalize_local(&mut self, alpha: FieldElement, beta: FieldElement, trace: &mut Vec<TraceStep>) -> Result<()> {
        let f = self.field.clone();
        let m = if !alpha.is_zero() {
            [[f.inv(alpha)?, FieldElement::ZERO], [f.neg(beta), alpha]]
        } else {
            [[FieldElement::ZERO, f.inv(beta)?], [f.neg(beta), FieldElement::ZERO]]
        };
        self.local_map(0, m, trace);
        Ok(())
    }
}

fn check_gram(
    stage: &str,
    before: &[Vec<FieldElement>],
    after: &[Vec<FieldElement>],
    trace: &mut Vec<TraceStep>,
) -> Result<()> {
    let preserved = before == after;
    trace.push(TraceStep::GramCheck { stage: stage.into(), preserved });
    if preserved {
        Ok(())
    } else {
        Err(Error::Inconsistent(format!("Gram matrix changed during {stage}")))
    }
}

fn submatrix(g: &[Vec<FieldElement>], from: usize) -> Vec<Vec<FieldElement>> {
    g[from..].iter().map(|row| row[from..].to_vec()).collect()
}

fn code_from_basis(basis: &HyperbolicBasis) -> Result<SubsystemCode> {
    if !basis.is_valid() {
        return Err(Error::Inconsistent("punctured basis is not hyperbolic".into()));
    }
    SubsystemCode::from_gauge_code(basis.span())
}

fn expect_shape(code: &SubsystemCode, n: usize, k: usize, r: usize, what: &str) -> Result<()> {
    if (code.n(), code.k(), code.r()) == (n, k, r) {
        Ok(())
    } else {
        Err(Error::Inconsistent(format!(
            "{what} gave {}, expected {}",
            label(code.n(), code.k(), code.r(), code.field().q()),
            label(n, k, r, code.field().q())
        )))
    }
}

/// Lowest coordinate `i` where `D` contains a nonzero vector supported on `i`
/// alone, with that vector.
fn weight_one_in(d: &CodeMatrix, n: usize) -> Result<Option<(usize, Vector)>> {
    let f = d.field();
    for i in 0..n {
        let mut ex = vec![FieldElement::ZERO; 2 * n];
        let mut ez = ex.clone();
        ex[i] = FieldElement::ONE;
        ez[n + i] = FieldElement::ONE;
        let plane = CodeMatrix::new(f.clone(), 2 * n, vec![ex, ez])?;
        if let Some(v) = d.intersect(&plane)?.basis().into_rows().into_iter().next() {
            return Ok(Some((i, v)));
        }
    }
    Ok(None)
}

/// Moves the weight-1 isotropic vector `iso[0]` to `(1, 0)` at coordinate 0,
/// clears coordinate 0 from everything else and deletes it. With `drop`, the
/// gauge partner of the first pair is removed afterwards.
fn puncture_weight_one(
    field: &Field,
    n: usize,
    iso: Vec<Vector>,
    pairs: Vec<(Vector, Vector)>,
    drop: bool,
    k: usize,
    trace: &mut Vec<TraceStep>,
) -> Result<SubsystemCode> {
    let f = field;
    let s = iso.len();
    let mut frame = Frame { field: f.clone(), n, vecs: iso };
    for (z, x) in pairs {
        frame.vecs.push(z);
        frame.vecs.push(x);
    }
    let g0 = frame.gram();
    let i = (0..n)
        .find(|&i| !frame.vecs[0][i].is_zero() || !frame.vecs[0][n + i].is_zero())
        .expect("weight-1 vector is nonzero");
    let (alpha, beta) = (frame.vecs[0][i], frame.vecs[0][n + i]);
    frame.swap(0, i, trace);
    frame.normalize_local(alpha, beta, trace)?;
    check_gram("coordinate moves", &g0, &frame.gram(), trace)?;

    let z = frame.vecs[0].clone();
    for v in frame.vecs.iter_mut().skip(1) {
        if !v[n].is_zero() {
            return Err(Error::Inconsistent("generator does not commute with the weight-1 stabilizer".into()));
        }
        let a = f.neg(v[0]);
        axpy(f, v, a, &z);
    }
    trace.push(TraceStep::Clean { coordinate: 0, generators: frame.vecs.len() - 1 });
    check_gram("cleaning", &g0, &frame.gram(), trace)?;

    let rest: Vec<Vector> = frame.vecs[1..].iter().map(|v| rho_raw(v)).collect();
    trace.push(TraceStep::Puncture { coordinate: 0 });
    check_gram("puncturing", &submatrix(&g0, 1), &gram(f, &rest), trace)?;

    let mut iso: Vec<Vector> = rest[..s - 1].to_vec();
    let mut pairs: Vec<(Vector, Vector)> = rest[s - 1..].chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect();
    let r = pairs.len();
    if drop {
        let mid = code_from_basis(&HyperbolicBasis::new(f, n - 1, iso.clone(), pairs.clone()))?;
        expect_shape(&mid, n - 1, k, r, "puncturing")?;
        trace.push(TraceStep::Intermediate {
            label: label(n - 1, k, r, f.q()),
            note: "punctured code before the gauge generator is dropped".into(),
        });
        let (z, x) = pairs.remove(0);
        trace.push(TraceStep::DropGauge { word: values(&x) });
        iso.push(z);
    }
    code_from_basis(&HyperbolicBasis::new(f, n - 1, iso, pairs))
}

/// Punctures a code that is exactly pure to 1 to `[[n−1, k, r−1, ≥d]]`.
///
/// If the stabilizer has a weight-1 element it is moved to `(1, 0)` at the
/// first qudit, that qudit is removed and one gauge qudit is turned into a
/// stabilizer. Otherwise a weight-1 gauge word `w` is made isotropic by
/// restricting the gauge code to `{c : <c|w>_s = 0}`, which already costs
/// one gauge qudit, and the punctured code is returned directly.
pub fn puncture_pure1(code: SubsystemCode, cfg: &EnumConfig) -> Result<Puncturing> {
    let (code, d, dp) = known_parameters(code, cfg)?;
    if code.r() == 0 || d < 2 || dp != 1 {
        return Err(Error::PreconditionFailed(format!(
            "needs r > 0, d >= 2 and exact purity 1; got r = {}, d = {d}, d' = {dp}",
            code.r()
        )));
    }
    let (f, n, k, r) = (code.field().clone(), code.n(), code.k(), code.r());
    let mut trace = Vec::new();
    let output = match weight_one_in(code.stabilizer(), n)? {
        Some((_, v)) => {
            trace.push(TraceStep::Case { case: "weight-1 stabilizer".into() });
            trace.push(TraceStep::Choose { role: "stabilizer".into(), word: values(&v) });
            let single = CodeMatrix::new(f.clone(), 2 * n, vec![v.clone()])?;
            let mut iso = vec![v];
            iso.extend(single.complement_in(code.stabilizer())?.into_rows());
            puncture_weight_one(&f, n, iso, code.basis().pairs.clone(), true, k, &mut trace)?
        }
        None => {
            trace.push(TraceStep::Case { case: "weight-1 gauge word".into() });
            let w = code.min_gauge_word(cfg)?.word;
            trace.push(TraceStep::Choose { role: "gauge".into(), word: values(&w) });
            let mut rows = code.gauge().basis().into_rows();
            let j = rows
                .iter()
                .position(|c| !symp(&f, c, &w).is_zero())
                .ok_or_else(|| Error::Inconsistent("weight-1 gauge word lies in the stabilizer".into()))?;
            let pivot = rows.remove(j);
            let inv = f.inv(symp(&f, &pivot, &w))?;
            for c in rows.iter_mut() {
                let t = f.neg(f.mul(symp(&f, c, &w), inv));
                axpy(&f, c, t, &pivot);
            }
            trace.push(TraceStep::Demote { removed: values(&pivot) });
            let restricted = SubsystemCode::from_gauge_code(CodeMatrix::new(f.clone(), 2 * n, rows)?)?;
            expect_shape(&restricted, n, k, r - 1, "restriction")?;
            trace.push(TraceStep::Intermediate {
                label: label(n, k, r - 1, f.q()),
                note: "weight-1 gauge word made isotropic".into(),
            });
            let single = CodeMatrix::new(f.clone(), 2 * n, vec![w.clone()])?;
            let mut iso = vec![w];
            iso.extend(single.complement_in(restricted.stabilizer())?.into_rows());
            puncture_weight_one(&f, n, iso, restricted.basis().pairs.clone(), false, k, &mut trace)?
        }
    };
    expect_shape(&output, n - 1, k, r - 1, "puncture_pure1")?;
    let output = output.analyze(cfg)?;
    Ok(Puncturing { input: code, output, trace })
}

/// Punctures a code with `d >= 3` that is pure to at least 2, giving
/// `[[n−1, k, r+1, ≥d−1]]`: the two stabilizers that cover the first qudit
/// become a new gauge pair.
pub fn puncture_impure(code: SubsystemCode, cfg: &EnumConfig) -> Result<Puncturing> {
    let (code, d, dp) = known_parameters(code, cfg)?;
    if d < 3 || dp < 2 {
        return Err(Error::PreconditionFailed(format!("needs d >= 3 and purity >= 2; got d = {d}, d' = {dp}")));
    }
    if code.n() < 2 {
        return Err(Error::TooShort(code.n()));
    }
    let (f, n, k, r) = (code.field().clone(), code.n(), code.k(), code.r());
    let mut trace = vec![TraceStep::Case { case: "puncture first qudit".into() }];

    let mut rows = code.basis().isotropic.clone();
    let no_cover = || Error::Inconsistent("stabilizer does not cover the first qudit".into());
    let j1 = rows.iter().position(|v| !v[0].is_zero()).ok_or_else(no_cover)?;
    let mut z1 = rows.remove(j1);
    z1 = scale(&f, f.inv(z1[0])?, &z1);
    for v in rows.iter_mut() {
        let t = f.neg(v[0]);
        axpy(&f, v, t, &z1);
    }
    let j2 = rows.iter().position(|v| !v[n].is_zero()).ok_or_else(no_cover)?;
    let mut z2 = rows.remove(j2);
    z2 = scale(&f, f.inv(z2[n])?, &z2);
    for v in rows.iter_mut() {
        let t = f.neg(v[n]);
        axpy(&f, v, t, &z2);
    }
    let b1 = z1[n];
    axpy(&f, &mut z1, f.neg(b1), &z2);
    trace.push(TraceStep::Choose { role: "z1".into(), word: values(&z1) });
    trace.push(TraceStep::ReduceB1 { b1: b1.value() });
    trace.push(TraceStep::Choose { role: "z2".into(), word: values(&z2) });

    let mut vecs = vec![z1, z2];
    vecs.extend(rows);
    for (z, x) in &code.basis().pairs {
        vecs.push(z.clone());
        vecs.push(x.clone());
    }
    let g0 = gram(&f, &vecs);
    let (z1, z2) = (vecs[0].clone(), vecs[1].clone());
    for v in vecs.iter_mut().skip(2) {
        let (a, b) = (f.neg(v[0]), f.neg(v[n]));
        axpy(&f, v, a, &z1);
        axpy(&f, v, b, &z2);
    }
    trace.push(TraceStep::Clean { coordinate: 0, generators: vecs.len() - 2 });
    check_gram("cleaning", &g0, &gram(&f, &vecs), &mut trace)?;

    let punctured: Vec<Vector> = vecs.iter().map(|v| rho_raw(v)).collect();
    trace.push(TraceStep::Puncture { coordinate: 0 });
    check_gram("puncturing", &submatrix(&g0, 2), &gram(&f, &punctured[2..]), &mut trace)?;
    let gamma = symp(&f, &punctured[0], &punctured[1]);
    if gamma.is_zero() {
        return Err(Error::SingularScale);
    }
    trace.push(TraceStep::Rescale { gamma: gamma.value() as u32 });

    let s = code.basis().s();
    let iso = punctured[2..s].to_vec();
    let mut pairs: Vec<(Vector, Vector)> =
        punctured[s..].chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect();
    pairs.push((punctured[1].clone(), scale(&f, f.inv(gamma)?, &punctured[0])));
    let output = code_from_basis(&HyperbolicBasis::new(&f, n - 1, iso, pairs))?;
    expect_shape(&output, n - 1, k, r + 1, "puncture_impure")?;
    let output = output.analyze(cfg)?;
    Ok(Puncturing { input: code, output, trace })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Move {
    PurePuncture,
    ImpurePuncture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainStop {
    Pure,
    DistanceTwo,
    /// Exactly pure to 1 with no gauge qudit left to remove.
    NoGauge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLink {
    pub code: SubsystemCode,
    /// How this code was reached from the previous link.
    pub via: Option<Move>,
    pub trace: Vec<TraceStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingletonChain {
    pub links: Vec<ChainLink>,
    pub stop: ChainStop,
}

impl SingletonChain {
    /// Checks that after `i` pure and `j` impure punctures the code is
    /// `[[n−i−j, k, r+j−i, ≥d−j]]`.
    pub fn bookkeeping_holds(&self) -> bool {
        let first = &self.links[0].code;
        let (n, k, r, d) = (first.n(), first.k(), first.r(), first.distance().unwrap_or(0));
        let (mut i, mut j) = (0usize, 0usize);
        self.links.iter().all(|link| {
            match link.via {
                Some(Move::PurePuncture) => i += 1,
                Some(Move::ImpurePuncture) => j += 1,
                None => {}
            }
            let c = &link.code;
            c.n() + i + j == n
                && c.k() == k
                && c.r() + i == r + j
                && c.distance().is_some_and(|dc| dc + j >= d)
        })
    }
}

/// Punctures repeatedly until the code is pure or has distance 2.
pub fn singleton_chain(code: SubsystemCode, cfg: &EnumConfig) -> Result<SingletonChain> {
    let (code, _, _) = known_parameters(code, cfg)?;
    let mut links = vec![ChainLink { code, via: None, trace: Vec::new() }];
    loop {
        let current = &links.last().unwrap().code;
        let (d, dp) = (current.distance().unwrap(), current.purity().unwrap());
        let stop = if dp >= d {
            Some(ChainStop::Pure)
        } else if d <= 2 {
            Some(ChainStop::DistanceTwo)
        } else if dp == 1 && current.r() == 0 {
            Some(ChainStop::NoGauge)
        } else {
            None
        };
        if let Some(stop) = stop {
            return Ok(SingletonChain { links, stop });
        }
        let (step, via) = if dp == 1 {
            (puncture_pure1(current.clone(), cfg)?, Move::PurePuncture)
        } else {
            (puncture_impure(current.clone(), cfg)?, Move::ImpurePuncture)
        };
        links.push(ChainLink { code: step.output, via: Some(via), trace: step.trace });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{bacon_shor, five_qudit_code};

    fn gf(q: u32) -> Field {
        Field::with_order(q).unwrap()
    }

    fn sv(f: &Field, x: &[u32], z: &[u32]) -> SymplecticVector {
        SymplecticVector::from_values(f, x, z).unwrap()
    }

    #[test]
    fn rho_examples() {
        let f = gf(2);
        let cases = [([1, 0], [0, 0], [0], [0], 1, 0), ([0, 1], [0, 1], [1], [1], 1, 1), ([1, 1], [1, 0], [1], [0], 2, 1)];
        for (x, z, px, pz, before, after) in cases {
            let v = sv(&f, &x, &z);
            let p = rho(&v).unwrap();
            assert_eq!(p, sv(&f, &px, &pz));
            assert_eq!((v.swt(), p.swt()), (before, after));
        }
        assert_eq!(rho(&sv(&f, &[1], &[0])), Err(Error::TooShort(1)));
    }

    /// Gauge code on `n + extra` qudits: `base` on the first `n`, then the
    /// given `(x, z)` rows on the appended qudits.
    fn extend(base: &CodeMatrix, extra: usize, local: &[(usize, u32, u32)]) -> CodeMatrix {
        let f = base.field();
        let n = base.len() / 2;
        let m = n + extra;
        let mut rows: Vec<Vec<u32>> = base
            .values()
            .into_iter()
            .map(|r| {
                let mut v = vec![0; 2 * m];
                v[..n].copy_from_slice(&r[..n]);
                v[m..m + n].copy_from_slice(&r[n..]);
                v
            })
            .collect();
        for &(i, a, b) in local {
            let mut v = vec![0; 2 * m];
            v[n + i] = a;
            v[m + n + i] = b;
            rows.push(v);
        }
        CodeMatrix::from_values(f, 2 * m, &rows).unwrap()
    }

    #[test]
    fn pure1_gauge_word_case() {
        let cfg = EnumConfig::default();
        for q in [2, 3] {
            let f = gf(q);
            let gauge = extend(&five_qudit_code(&f), 1, &[(0, 1, 0), (0, 0, 1)]);
            let code = SubsystemCode::from_gauge_code(gauge).unwrap().analyze(&cfg).unwrap();
            assert_eq!(code.label(), format!("[[6,1,1,3]]_{q}"));
            let out = puncture_pure1(code, &cfg).unwrap();
            assert_eq!(out.output.label(), format!("[[5,1,0,3]]_{q}"));
            assert!(out.trace.iter().any(|t| matches!(t, TraceStep::Demote { .. })));
        }
    }

    #[test]
    fn pure1_stabilizer_case() {
        let cfg = EnumConfig::default();
        let f = gf(3);
        let gauge = extend(&five_qudit_code(&f), 2, &[(0, 0, 1), (1, 1, 0), (1, 0, 1)]);
        let code = SubsystemCode::from_gauge_code(gauge).unwrap().analyze(&cfg).unwrap();
        assert_eq!(code.label(), "[[7,1,1,3]]_3");
        let out = puncture_pure1(code, &cfg).unwrap();
        assert_eq!((out.output.n(), out.output.k(), out.output.r()), (6, 1, 0));
        assert!(out.output.distance().unwrap() >= 3);
        assert!(out.trace.iter().any(|t| matches!(t, TraceStep::Intermediate { .. })));
        assert!(out.trace.iter().all(|t| !matches!(t, TraceStep::GramCheck { preserved: false, .. })));
    }

    #[test]
    fn pure1_rejects_purity_two() {
        let cfg = EnumConfig::default();
        let code = bacon_shor(3, 3, &gf(2)).unwrap();
        assert!(matches!(puncture_pure1(code, &cfg), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn impure_bacon_shor() {
        let cfg = EnumConfig::default();
        let out = puncture_impure(bacon_shor(3, 3, &gf(2)).unwrap(), &cfg).unwrap();
        assert_eq!((out.output.n(), out.output.k(), out.output.r()), (8, 1, 5));
        assert!(out.output.distance().unwrap() >= 2);
        let gamma = out.trace.iter().find_map(|t| match t {
            TraceStep::Rescale { gamma } => Some(*gamma),
            _ => None,
        });
        assert_eq!(gamma, Some(1));

        let out = puncture_impure(bacon_shor(3, 3, &gf(3)).unwrap(), &cfg).unwrap();
        assert_eq!((out.output.n(), out.output.k(), out.output.r()), (8, 1, 5));
    }

    #[test]
    fn impure_rejects_distance_two() {
        let cfg = EnumConfig::default();
        let code = bacon_shor(2, 2, &gf(2)).unwrap();
        assert!(matches!(puncture_impure(code, &cfg), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn chain_from_bacon_shor() {
        let cfg = EnumConfig::default();
        let chain = singleton_chain(bacon_shor(3, 3, &gf(2)).unwrap(), &cfg).unwrap();
        assert!(chain.links.len() >= 2);
        assert!(chain.bookkeeping_holds());
        for link in &chain.links {
            let c = &link.code;
            assert!(c.k() + c.r() + 2 * c.distance().unwrap() <= c.n() + 2, "{}", c.label());
        }
    }

    #[test]
    fn chain_of_pure_code_is_trivial() {
        let cfg = EnumConfig::default();
        let code = SubsystemCode::from_gauge_code(five_qudit_code(&gf(2))).unwrap();
        let chain = singleton_chain(code, &cfg).unwrap();
        assert_eq!((chain.links.len(), chain.stop), (1, ChainStop::Pure));
    }
}
