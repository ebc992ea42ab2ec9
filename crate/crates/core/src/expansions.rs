//! Expansion identities: Laguerre generating function, Cayley-transform
//! coefficients by series and by formula, their Meixner–Pollaczek form, and
//! the symmetric analogue.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::binomial::{binom_poly, binom_table};
use crate::error::{Error, Result};
use crate::interp::interpolate;
use crate::jack::JackFamily;
use crate::operators::{compose_with_permutation, Permutation};
use crate::params::{compositions_up_to, hook_products, partitions, spectral_point, Composition, RationalVector};
use crate::poly::{
    cayley_coefficients, cayley_series, inverse_power_coefficients, shifted_geometric_coefficients, to_e_basis,
    ExpansionTable, Polynomial, TruncatedSeries,
};
use crate::rational::{format_rational, int, pow, sign_pow, Q};
use crate::special::{laguerre_poly, mp_value};

fn check_even_b(b: u32) -> Result<()> {
    if b == 0 || b % 2 == 1 {
        return Err(Error::Input(format!("b must be an even positive integer, got {b}")));
    }
    Ok(())
}

fn tensor(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let n = a.nvars() + b.nvars();
    &a.embed(n, 0) * &b.embed(n, a.nvars())
}

/// LHS − RHS of
/// (1−z)^{−b} 𝒦(−x; z/(1−z)) = Σ_η (−α)^{|η|}/d′_η E_η^(L)(x) ℰ_η(z),
/// as a polynomial in (x, z) truncated at z-degree `cap`.
pub fn generating_residual(fam: &JackFamily, cap: u32, b: &Q) -> Result<Polynomial> {
    let ctx = fam.ctx();
    let r = ctx.r();
    let geo = vec![shifted_geometric_coefficients(cap); r];
    let pref = TruncatedSeries::product_of_univariate(r, &inverse_power_coefficients(b, cap), cap);
    let mut residual = Polynomial::zero(2 * r);
    for eta in compositions_up_to(r, cap) {
        let h = hook_products(&eta, ctx);
        let k = eta.weight();
        // kernel side: α^k/d′ ℰ_η(−x) ⊗ (1−z)^{−b} E_η(z/(1−z))
        let x_part = fam.normalized(&eta)?.negate_vars();
        let z_part = TruncatedSeries::compose(&*fam.e(&eta)?, &geo, cap)?.mul(&pref);
        let w = pow(ctx.alpha(), k) / &h.d_prime;
        residual.add_scaled(&tensor(&x_part, z_part.poly()), &w);
        // Laguerre side
        let lw = sign_pow(k) * pow(ctx.alpha(), k) / &h.d_prime;
        let lag = laguerre_poly(fam, &eta, b)?;
        residual.add_scaled(&tensor(&lag, &*fam.normalized(&eta)?), &-lw);
    }
    Ok(residual.truncate_block(r, r, cap))
}

/// Coefficients of (1−z)^{−b} ℰ_η((1−z)/(1+z)) in the basis ℰ_κ(z), |κ| ≤ cap.
pub fn c_direct(fam: &JackFamily, eta: &Composition, b: u32, cap: u32) -> Result<ExpansionTable> {
    check_even_b(b)?;
    fam.ctx().check_rank(eta.len())?;
    if eta.parts().iter().any(|&p| 2 * p < b) {
        return Err(Error::Input(format!("every entry of {eta} must be at least b/2 = {}", b / 2)));
    }
    let s = cayley_series(&*fam.normalized(eta)?, &int(b as i64), cap);
    to_normalized_basis(fam, s.poly(), cap)
}

/// Coefficients in the ℰ_κ basis.
fn to_normalized_basis(fam: &JackFamily, p: &Polynomial, cap: u32) -> Result<ExpansionTable> {
    let in_e = to_e_basis(p, fam)?;
    let mut out = ExpansionTable::new(fam.r(), cap);
    for (k, c) in in_e.entries() {
        out.accumulate(k.clone(), c * &fam.jack(k)?.value_at_ones)?;
    }
    Ok(out)
}

/// Finite-sum formula, valid when every η_j ≥ b:
/// (−1)^{|η|−rb} Σ_σ (−2)^{|σ|} binom(η−b, σ) binom(−σ*−b, κ)_{w₀}.
fn c_formula_finite(fam: &JackFamily, eta: &Composition, kappa: &Composition, b: u32) -> Result<Q> {
    let r = fam.r();
    let base = eta.shifted(-(b as i64)).ok_or_else(|| Error::Internal("η − b not in ℕ^r".into()))?;
    let w0 = Permutation::longest(r);
    let g = binom_poly(fam, kappa, &w0)?;
    let table = binom_table(fam, &base)?;
    let mut sum = Q::zero();
    for (sigma, bin) in table.entries() {
        let top = (-&sigma.star().to_rational()).add_scalar(&-int(b as i64));
        let v = g.eval_spectral(&spectral_point(&top, fam.ctx()))?;
        sum += pow(&int(-2), sigma.weight()) * bin * v;
    }
    Ok(sign_pow(base.weight()) * sum)
}

/// 𝒞_κ(η) from the binomial formula. For η with entries below b the finite
/// sum is continued polynomially in the spectral variable of η − b.
pub fn c_formula(fam: &JackFamily, eta: &Composition, kappa: &Composition, b: u32) -> Result<Q> {
    check_even_b(b)?;
    let ctx = fam.ctx();
    ctx.check_rank(eta.len())?;
    ctx.check_rank(kappa.len())?;
    if eta.parts().iter().all(|&p| p >= b) {
        return c_formula_finite(fam, eta, kappa, b);
    }
    let poly = c_formula_continuation(fam, kappa, b)?;
    let label = eta.to_rational().add_scalar(&-int(b as i64));
    poly.eval(spectral_point(&label, ctx).entries())
}

fn c_formula_nodes(fam: &JackFamily, kappa: &Composition, b: u32, degree: u32) -> Result<Polynomial> {
    let mut pts = Vec::new();
    let mut vals = Vec::new();
    for tau in compositions_up_to(fam.r(), degree) {
        pts.push(fam.jack(&tau)?.spectral.clone());
        let eta = tau.shifted(b as i64).expect("non-negative");
        vals.push(c_formula_finite(fam, &eta, kappa, b)?);
    }
    interpolate(&pts, &vals, degree)
}

/// τ ↦ 𝒞_κ(b + τ) as a polynomial in the spectral vector of τ, degree |κ|,
/// confirmed on the |κ|+1 node set.
pub fn c_formula_continuation(fam: &JackFamily, kappa: &Composition, b: u32) -> Result<Polynomial> {
    let d = kappa.weight();
    let low = c_formula_nodes(fam, kappa, b, d)?;
    let high = c_formula_nodes(fam, kappa, b, d + 1)?;
    if low != high {
        return Err(Error::DegreeCheckFailure { nu: kappa.clone(), low: d as usize, high: d as usize + 1 });
    }
    Ok(low)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyRow {
    pub kappa: String,
    pub direct: String,
    pub formula: String,
    /// (−α)^{|κ|}/d′_κ M_κ(−(η+ρ)).
    pub via_mp: String,
    /// (−α)^{|κ|}/d′_κ M_κ(−(η − b/2 + ρ)).
    pub via_mp_half_shift: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub eta: Composition,
    pub b: u32,
    pub cap: u32,
    pub rows: Vec<ConsistencyRow>,
    /// direct = formula = via_mp on every row.
    pub pass: bool,
    /// direct = formula = via_mp_half_shift on every row.
    pub pass_half_shift: bool,
    /// direct = formula on every row.
    pub pass_direct_formula: bool,
}

/// (−α)^{|κ|}/d′_κ · M_κ(λ) with identity twist.
pub fn mp_route(fam: &JackFamily, kappa: &Composition, lambda: &RationalVector, b: u32) -> Result<Q> {
    let ctx = fam.ctx();
    let m = mp_value(fam, kappa, lambda, &Permutation::identity(ctx.r()), &int(b as i64))?;
    let h = hook_products(kappa, ctx);
    Ok(pow(&-ctx.alpha(), kappa.weight()) / h.d_prime * m.value)
}

pub fn three_way_consistency(fam: &JackFamily, eta: &Composition, b: u32, cap: u32) -> Result<ConsistencyReport> {
    let ctx = fam.ctx();
    let direct = c_direct(fam, eta, b, cap)?;
    let e = eta.to_rational();
    let lam = -&(&e + ctx.rho());
    let lam_half = lam.add_scalar(&int(b as i64 / 2));
    let mut rows = Vec::new();
    let (mut pass, mut pass_half, mut pass_df) = (true, true, true);
    for kappa in compositions_up_to(ctx.r(), cap) {
        let d = direct.get(&kappa);
        let f = c_formula(fam, eta, &kappa, b)?;
        let m = mp_route(fam, &kappa, &lam, b)?;
        let mh = mp_route(fam, &kappa, &lam_half, b)?;
        pass_df &= d == f;
        pass &= d == f && f == m;
        pass_half &= d == f && f == mh;
        rows.push(ConsistencyRow {
            kappa: kappa.to_string(),
            direct: format_rational(&d),
            formula: format_rational(&f),
            via_mp: format_rational(&m),
            via_mp_half_shift: format_rational(&mh),
        });
    }
    Ok(ConsistencyReport {
        eta: eta.clone(),
        b,
        cap,
        rows,
        pass,
        pass_half_shift: pass_half,
        pass_direct_formula: pass_df,
    })
}

/// Ω_κ: symmetrization of E_κ, normalized to 1 at 1^r.
pub fn sym_jack(fam: &JackFamily, kappa: &Composition) -> Result<Polynomial> {
    let r = fam.r();
    fam.ctx().check_rank(kappa.len())?;
    if !kappa.is_partition() {
        return Err(Error::Input(format!("{kappa} is not a partition")));
    }
    let e = fam.e(kappa)?;
    let mut sum = Polynomial::zero(r);
    for w in Permutation::all(r) {
        sum.add_scaled(&compose_with_permutation(&e, &w)?, &Q::one());
    }
    let v = sum.eval_ones();
    if v.is_zero() {
        return Err(Error::Internal(format!("symmetrization of E_{kappa} vanishes at 1")));
    }
    Ok(sum.scale(&v.recip()))
}

/// Coefficients of a symmetric polynomial in the Ω_κ basis, peeling off the
/// dominance-maximal partition monomial of top degree at each step.
pub fn to_omega_basis(fam: &JackFamily, p: &Polynomial, cap: u32) -> Result<ExpansionTable> {
    let r = fam.r();
    let mut rest = p.clone();
    let mut out = ExpansionTable::new(r, cap);
    let mut omegas: BTreeMap<Composition, Polynomial> = BTreeMap::new();
    while !rest.is_zero() {
        let lead = rest
            .terms()
            .keys()
            .map(|e| e.to_composition())
            .filter(Composition::is_partition)
            .max_by(|a, b| {
                a.weight()
                    .cmp(&b.weight())
                    .then_with(|| fam.position_of(a).cmp(&fam.position_of(b)))
            })
            .ok_or_else(|| Error::Input("polynomial is not symmetric".into()))?;
        if !omegas.contains_key(&lead) {
            omegas.insert(lead.clone(), sym_jack(fam, &lead)?);
        }
        let om = &omegas[&lead];
        let c = rest.coeff(lead.parts()) / om.coeff(lead.parts());
        rest.add_scaled(om, &-&c);
        out.accumulate(lead, c)?;
    }
    Ok(out)
}

/// Coefficients Q_κ(η) of ∏(1−z_j²)^{−b/2} Ω_{η−b/2}((1−z)/(1+z)) = Σ Q_κ(η) Ω_κ(z).
pub fn q_direct(fam: &JackFamily, eta: &Composition, b: u32, cap: u32) -> Result<ExpansionTable> {
    check_even_b(b)?;
    let r = fam.r();
    fam.ctx().check_rank(eta.len())?;
    if !eta.is_partition() {
        return Err(Error::Input(format!("{eta} is not a partition")));
    }
    let inner = eta
        .shifted(-(b as i64 / 2))
        .ok_or_else(|| Error::Input(format!("every entry of {eta} must be at least b/2 = {}", b / 2)))?;
    let om = sym_jack(fam, &inner)?;
    let cay = TruncatedSeries::compose(&om, &vec![cayley_coefficients(cap); r], cap)?;
    // (1 − z²)^{−b/2} = Σ_k (b/2)_k/k! z^{2k}
    let half = inverse_power_coefficients(&int(b as i64 / 2), cap / 2);
    let mut even = vec![Q::zero(); cap as usize + 1];
    for (k, c) in half.into_iter().enumerate() {
        even[2 * k] = c;
    }
    let pref = TruncatedSeries::product_of_univariate(r, &even, cap);
    to_omega_basis(fam, cay.mul(&pref).poly(), cap)
}

/// Partition labels for interpolating η ↦ Q_κ(η): base + τ with |τ| ≤ d and
/// base_j = b/2 + (r−j)(d+1), so every node is a partition with η_j ≥ b/2.
pub fn q_lattice(r: usize, b: u32, d: u32) -> Vec<Composition> {
    compositions_up_to(r, d)
        .into_iter()
        .map(|tau| {
            Composition::new(
                tau.parts()
                    .iter()
                    .enumerate()
                    .map(|(j, t)| b / 2 + (r - 1 - j) as u32 * (d + 1) + t)
                    .collect(),
            )
        })
        .collect()
}

fn q_nodes(fam: &JackFamily, kappa: &Composition, b: u32, d: u32) -> Result<Polynomial> {
    let labels = q_lattice(fam.r(), b, d);
    let mut pts = Vec::new();
    let mut vals = Vec::new();
    for eta in &labels {
        pts.push(eta.to_rational());
        vals.push(q_direct(fam, eta, b, kappa.weight())?.get(kappa));
    }
    interpolate(&pts, &vals, d)
}

/// η ↦ Q_κ(η) as a polynomial in the label, degree |κ|, confirmed on the
/// |κ|+1 lattice.
pub fn q_polynomial(fam: &JackFamily, kappa: &Composition, b: u32) -> Result<Polynomial> {
    if !kappa.is_partition() {
        return Err(Error::Input(format!("{kappa} is not a partition")));
    }
    let d = kappa.weight();
    let low = q_nodes(fam, kappa, b, d)?;
    let high = q_nodes(fam, kappa, b, d + 1)?;
    if low != high {
        return Err(Error::DegreeCheckFailure { nu: kappa.clone(), low: d as usize, high: d as usize + 1 });
    }
    Ok(low)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryRow {
    pub kappa: String,
    pub lambda: String,
    pub literal: [String; 2],
    pub half_rho: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub b: u32,
    pub rows: Vec<SymmetryRow>,
    /// λ ↦ Q_κ(−λ−ρ) invariant at every test point.
    pub pass: bool,
    /// λ ↦ Q_κ(−λ+ρ/2) invariant at every test point.
    pub pass_half_rho: bool,
}

/// Compares each test point λ with its image under every permutation, for
/// λ ↦ Q_κ(−λ−ρ) and for λ ↦ Q_κ(−λ+ρ/2).
pub fn q_symmetry(fam: &JackFamily, kappas: &[Composition], b: u32, points: &[RationalVector]) -> Result<SymmetryReport> {
    let ctx = fam.ctx();
    let rho = ctx.rho();
    let half_rho = rho.scale(&Q::new(1.into(), 2.into()));
    let (mut pass, mut pass_half) = (true, true);
    let mut rows = Vec::new();
    for kappa in kappas {
        let qp = q_polynomial(fam, kappa, b)?;
        for lam in points {
            for w in Permutation::all(ctx.r()).into_iter().filter(|w| !w.is_identity()) {
                let wl = RationalVector::new(w.act_on_point(lam.entries()));
                let lit = |l: &RationalVector| qp.eval((-&(l + rho)).entries());
                let hr = |l: &RationalVector| qp.eval((&half_rho - l).entries());
                let (a, a2) = (lit(lam)?, lit(&wl)?);
                let (h, h2) = (hr(lam)?, hr(&wl)?);
                pass &= a == a2;
                pass_half &= h == h2;
                rows.push(SymmetryRow {
                    kappa: kappa.to_string(),
                    lambda: format!("{lam} vs {wl}"),
                    literal: [format_rational(&a), format_rational(&a2)],
                    half_rho: [format_rational(&h), format_rational(&h2)],
                });
            }
        }
    }
    Ok(SymmetryReport { b, rows, pass, pass_half_rho: pass_half })
}

/// Partitions of weight ≤ d with r parts.
pub fn partitions_up_to(r: usize, d: u32) -> Vec<Composition> {
    (0..=d).flat_map(|m| partitions(r, m)).collect()
}
