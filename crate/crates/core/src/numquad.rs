//! Floating-point quadrature for the measure
//! dμ = 2^{−r} (x₁⋯x_r)^{−q} ∏_{j<k}|x_j − x_k|^a dx on (0,∞)^r.
//! All floating-point arithmetic of the crate lives here.

use gauss_quad::jacobi::GaussJacobi;
use gauss_quad::laguerre::GaussLaguerre;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::jack::JackFamily;
use crate::params::{compositions_up_to, AlphaContext, Composition};
use crate::poly::Polynomial;
use crate::rational::{to_f64, Q};
use crate::special::LaguerreFunction;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadratureSpec {
    pub r: usize,
    /// Base node count per axis; the error estimate compares n with 2n.
    pub nodes: usize,
    pub tolerance: f64,
    /// Extra doublings allowed before reporting non-convergence.
    pub max_refinements: usize,
}

impl QuadratureSpec {
    pub fn default_for(r: usize) -> Self {
        Self {
            r,
            nodes: 24,
            tolerance: if r == 1 { 1e-8 } else { 1e-6 },
            max_refinements: 3,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=2).contains(&self.r) {
            return Err(Error::Input(format!("quadrature supports r ∈ {{1, 2}}, got {}", self.r)));
        }
        if self.nodes < 8 {
            return Err(Error::Input(format!("at least 8 nodes per axis, got {}", self.nodes)));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::Input("tolerance must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuadValue {
    pub value: f64,
    /// |I_n − I_{2n}|
    pub error: f64,
    pub nodes: usize,
}

struct FloatPoly(Vec<(Vec<i32>, f64)>);

impl FloatPoly {
    fn new(p: &Polynomial) -> Self {
        Self(
            p.terms()
                .iter()
                .map(|(e, c)| (e.exps().iter().map(|&k| k as i32).collect(), to_f64(c)))
                .collect(),
        )
    }

    fn eval(&self, x: &[f64]) -> f64 {
        self.0
            .iter()
            .map(|(e, c)| c * e.iter().zip(x).map(|(&k, v)| v.powi(k)).product::<f64>())
            .sum()
    }
}

fn quad_err(e: impl std::fmt::Display) -> Error {
    Error::Input(format!("quadrature rule: {e}"))
}

/// (1/2) ∫₀^∞ P(u) u^{b−1} e^{−u} du
fn integrate_r1(p: &FloatPoly, b: f64, n: usize) -> Result<f64> {
    let rule = GaussLaguerre::new(n, b - 1.0).map_err(quad_err)?;
    Ok(0.5 * rule.integrate(|u| p.eval(&[u])))
}

/// (1/4) ∫∫ P(u) e^{−u₁−u₂} (u₁u₂)^β |u₁−u₂|^a du with β = b − q, by the
/// split u = s·(t, 1−t): s carries s^{2β+a+1}e^{−s}; on each half of t the
/// map t = (1 ± τ)/2, τ = (1+y)/2 leaves the Jacobi weight (1−y)^β(1+y)^a
/// and the smooth factor (1+τ)^β.
fn integrate_r2(p: &FloatPoly, b: f64, ctx: &AlphaContext, n: usize) -> Result<f64> {
    let a = to_f64(ctx.a());
    let beta = b - to_f64(ctx.q());
    let radial = GaussLaguerre::new(n, 2.0 * beta + a + 1.0).map_err(quad_err)?;
    let angular = GaussJacobi::new(n, beta, a).map_err(quad_err)?;
    let ang: Vec<(f64, f64)> = angular
        .iter()
        .map(|(y, w)| {
            let tau = 0.5 * (1.0 + y);
            (tau, w * (1.0 + tau).powf(beta))
        })
        .collect();
    let mut total = 0.0;
    for (s, ws) in radial.iter() {
        let mut inner = 0.0;
        for &(tau, wt) in &ang {
            let (hi, lo) = (0.5 * s * (1.0 + tau), 0.5 * s * (1.0 - tau));
            inner += wt * (p.eval(&[hi, lo]) + p.eval(&[lo, hi]));
        }
        total += ws * inner;
    }
    // 2^{−β−a} from τ ↦ y, 1/2 · 1/2 from the two changes of variable,
    // 4^{−β} from t(1−t) = (1−τ²)/4, 1/4 from the measure
    Ok(total * 2f64.powf(-beta - a) * 0.25 * 4f64.powf(-beta) * 0.25)
}

fn integrate(p: &FloatPoly, b: f64, ctx: &AlphaContext, n: usize) -> Result<f64> {
    match ctx.r() {
        1 => integrate_r1(p, b, n),
        2 => integrate_r2(p, b, ctx, n),
        r => Err(Error::Input(format!("quadrature supports r ∈ {{1, 2}}, got {r}"))),
    }
}

/// ∫ P(2x) e^{−2p₁(x)} (2x)^b dμ(x) with the error estimate from doubling,
/// refined until the estimate is below `tolerance · scale`.
fn integrate_refined(p: &Polynomial, b: f64, ctx: &AlphaContext, spec: &QuadratureSpec, scale: f64) -> Result<QuadValue> {
    let fp = FloatPoly::new(p);
    let mut n = spec.nodes;
    let mut coarse = integrate(&fp, b, ctx, n)?;
    for _ in 0..=spec.max_refinements {
        let fine = integrate(&fp, b, ctx, 2 * n)?;
        let error = (fine - coarse).abs();
        if error <= spec.tolerance * scale.max(f64::MIN_POSITIVE) {
            return Ok(QuadValue { value: fine, error, nodes: 2 * n });
        }
        n *= 2;
        coarse = fine;
    }
    let fine = integrate(&fp, b, ctx, 2 * n)?;
    Err(Error::NonConvergence { estimate: (fine - coarse).abs() / scale, tolerance: spec.tolerance })
}

fn check_spec(spec: &QuadratureSpec, ctx: &AlphaContext) -> Result<()> {
    spec.validate()?;
    if spec.r != ctx.r() {
        return Err(Error::RankMismatch { expected: ctx.r(), got: spec.r });
    }
    Ok(())
}

/// ⟨f, g⟩ in L²(dμ) for Laguerre functions with the same b.
pub fn inner_product_dmu(f: &LaguerreFunction, g: &LaguerreFunction, spec: &QuadratureSpec, ctx: &AlphaContext) -> Result<QuadValue> {
    check_spec(spec, ctx)?;
    if f.b != g.b {
        return Err(Error::Input("inner product of Laguerre functions with different b".into()));
    }
    let b = to_f64(&f.b);
    let ff = integrate_refined(&(&f.poly * &f.poly), b, ctx, spec, 1.0)?;
    let gg = integrate_refined(&(&g.poly * &g.poly), b, ctx, spec, 1.0)?;
    let scale = (ff.value * gg.value).abs().sqrt();
    integrate_refined(&(&f.poly * &g.poly), b, ctx, spec, scale)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Gram {
    pub kappas: Vec<Composition>,
    pub raw: Vec<Vec<f64>>,
    /// raw_ij / sqrt(raw_ii raw_jj)
    pub normalized: Vec<Vec<f64>>,
    pub max_error: f64,
    pub max_off_diagonal: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Gram matrix of the Laguerre functions with |κ| ≤ m.
pub fn laguerre_gram(fam: &JackFamily, m: u32, b: &Q, spec: &QuadratureSpec) -> Result<Gram> {
    let ctx = fam.ctx();
    check_spec(spec, ctx)?;
    let kappas = compositions_up_to(ctx.r(), m);
    let funcs = kappas
        .iter()
        .map(|k| LaguerreFunction::new(fam, k, b))
        .collect::<Result<Vec<_>>>()?;
    let bf = to_f64(b);
    let diag: Vec<QuadValue> = funcs
        .par_iter()
        .map(|f| integrate_refined(&(&f.poly * &f.poly), bf, ctx, spec, 1.0))
        .collect::<Result<Vec<_>>>()?;
    let n = funcs.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let off: Vec<QuadValue> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let scale = (diag[i].value * diag[j].value).abs().sqrt();
            integrate_refined(&(&funcs[i].poly * &funcs[j].poly), bf, ctx, spec, scale)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut raw = vec![vec![0.0; n]; n];
    let mut max_error = 0.0f64;
    for (i, d) in diag.iter().enumerate() {
        raw[i][i] = d.value;
        max_error = max_error.max(d.error / d.value.abs());
    }
    for (&(i, j), v) in pairs.iter().zip(&off) {
        raw[i][j] = v.value;
        raw[j][i] = v.value;
        max_error = max_error.max(v.error / (diag[i].value * diag[j].value).abs().sqrt());
    }
    let normalized: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| raw[i][j] / (raw[i][i] * raw[j][j]).sqrt()).collect())
        .collect();
    let max_off_diagonal = pairs.iter().map(|&(i, j)| normalized[i][j].abs()).fold(0.0, f64::max);
    let pass = max_off_diagonal < spec.tolerance && diag.iter().all(|d| d.value > 0.0);
    Ok(Gram { kappas, raw, normalized, max_error, max_off_diagonal, tolerance: spec.tolerance, pass })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LaplaceRow {
    pub l: u32,
    pub t: f64,
    /// ∫ e^{−tx} x^{c+l} dμ(x)
    pub value: f64,
    pub error: f64,
    /// value · t^{c+l} / (c)_l
    pub n0_estimate: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LaplaceReport {
    pub c: f64,
    pub rows: Vec<LaplaceRow>,
    /// Largest relative deviation from t^{−(c+l)} scaling across t.
    pub power_law_deviation: f64,
    /// Largest relative deviation of value(l+1)/value(l) from (c+l)/t.
    pub pochhammer_deviation: f64,
    /// Largest relative spread of the fitted constant across rows.
    pub n0_spread: f64,
    pub n0: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// One-variable Laplace transform of x^{c+l} against dμ: checks the
/// t^{−(c+l)} power law, the Pochhammer ratio in l, and fits the constant.
pub fn laplace_check_r1(c: &Q, ls: &[u32], ts: &[f64], spec: &QuadratureSpec) -> Result<LaplaceReport> {
    spec.validate()?;
    if spec.r != 1 {
        return Err(Error::Input("the Laplace check is one-variable".into()));
    }
    let cf = to_f64(c);
    if cf <= 0.0 {
        return Err(Error::ParameterOutOfRange(format!("c must be positive, got {c}")));
    }
    if ts.is_empty() || ts.iter().any(|&t| t <= 0.0) || ls.is_empty() {
        return Err(Error::Input("need positive t values and at least one l".into()));
    }
    // y = t·x turns e^{−tx}x^{c+l−1}dx/2 into t^{−(c+l)} y^l · y^{c−1}e^{−y}dy/2
    let eval = |l: u32, t: f64, n: usize| -> Result<f64> {
        let rule = GaussLaguerre::new(n, cf - 1.0).map_err(quad_err)?;
        Ok(0.5 * t.powf(-(cf + l as f64)) * rule.integrate(|y| y.powi(l as i32)))
    };
    let mut rows = Vec::new();
    for &l in ls {
        for &t in ts {
            let coarse = eval(l, t, spec.nodes)?;
            let fine = eval(l, t, 2 * spec.nodes)?;
            let error = (fine - coarse).abs();
            if error > spec.tolerance * fine.abs() {
                return Err(Error::NonConvergence { estimate: error / fine.abs(), tolerance: spec.tolerance });
            }
            let poch: f64 = (0..l).map(|i| cf + i as f64).product();
            rows.push(LaplaceRow { l, t, value: fine, error, n0_estimate: fine * t.powf(cf + l as f64) / poch });
        }
    }
    let find = |l: u32, t: f64| rows.iter().find(|r| r.l == l && r.t == t).map(|r| r.value);
    let mut power = 0.0f64;
    let mut poch = 0.0f64;
    for &l in ls {
        for &t in ts {
            let v = find(l, t).expect("row");
            let v0 = find(l, ts[0]).expect("row");
            let want = (ts[0] / t).powf(cf + l as f64);
            power = power.max((v / v0 - want).abs() / want);
            if let Some(v1) = find(l + 1, t) {
                let want = (cf + l as f64) / t;
                poch = poch.max((v1 / v - want).abs() / want);
            }
        }
    }
    let n0 = rows[0].n0_estimate;
    let spread = rows.iter().map(|r| (r.n0_estimate - n0).abs() / n0.abs()).fold(0.0, f64::max);
    let pass = power <= spec.tolerance && poch <= spec.tolerance && spread <= 1e-7;
    Ok(LaplaceReport {
        c: cf,
        rows,
        power_law_deviation: power,
        pochhammer_deviation: poch,
        n0_spread: spread,
        n0,
        tolerance: spec.tolerance,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn spec_validation() {
        let mut s = QuadratureSpec::default_for(1);
        assert!(s.validate().is_ok());
        s.nodes = 4;
        assert!(s.validate().is_err());
        assert!(QuadratureSpec::default_for(3).validate().is_err());
    }

    #[test]
    fn trivial_norm_is_positive() {
        let ctx = AlphaContext::new(1, int(1)).unwrap();
        let fam = JackFamily::new(ctx.clone());
        let l0 = LaguerreFunction::new(&fam, &Composition::zero(1), &int(2)).unwrap();
        let v = inner_product_dmu(&l0, &l0, &QuadratureSpec::default_for(1), &ctx).unwrap();
        // (1/2)Γ(2)
        assert!((v.value - 0.5).abs() < 1e-12);
    }
}
