//! Laguerre polynomials, the truncated exponential kernel, Meixner–Pollaczek
//! type polynomials and the terminating ₂F₁.

use num_traits::{One, Signed, Zero};

use crate::binomial::{binom_poly, binom_table};
use crate::error::{Error, Result};
use crate::jack::JackFamily;
use crate::operators::Permutation;
use crate::params::{compositions_up_to, hook_products, pochhammer_ratio, spectral_point, AlphaContext, Composition, RationalVector};
use crate::poly::{MultiExponent, Polynomial};
use crate::rational::{factorial, int, pow, rising, sign_pow, Q};

/// The algebraic identities are polynomial in b, so the boundary b = q − 1
/// is admitted; only measure-level objects require b > q − 1.
fn check_b_algebraic(b: &Q, ctx: &AlphaContext) -> Result<()> {
    let floor = ctx.q() - Q::one();
    if b < &floor {
        return Err(Error::ParameterOutOfRange(format!("b = {b} below q − 1 = {floor}")));
    }
    Ok(())
}

/// E_κ^(L)(x) = (−1)^{|κ|}(e_κ/d_κ) Σ_σ (−1)^{|σ|} ([b]_κ/[b]_σ) binom(κ,σ) ℰ_σ(x).
pub fn laguerre_poly(fam: &JackFamily, kappa: &Composition, b: &Q) -> Result<Polynomial> {
    let ctx = fam.ctx();
    ctx.check_rank(kappa.len())?;
    check_b_algebraic(b, ctx)?;
    let table = binom_table(fam, kappa)?;
    let mut out = Polynomial::zero(ctx.r());
    for (sigma, bin) in table.entries() {
        let c = sign_pow(sigma.weight()) * pochhammer_ratio(b, kappa, sigma, ctx)? * bin;
        out.add_scaled(&*fam.normalized(sigma)?, &c);
    }
    let h = hook_products(kappa, ctx);
    Ok(out.scale(&(sign_pow(kappa.weight()) * h.e / h.d)))
}

/// Laguerre function data for quadrature: E_κ^(L)(2x) e^{−p₁(x)} (2x)^{b/2}
/// with b strictly above q − 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaguerreFunction {
    pub kappa: Composition,
    pub b: Q,
    /// E_κ^(L) in the variable u = 2x.
    pub poly: Polynomial,
}

impl LaguerreFunction {
    pub fn new(fam: &JackFamily, kappa: &Composition, b: &Q) -> Result<Self> {
        let floor = fam.ctx().q() - Q::one();
        if b <= &floor {
            return Err(Error::ParameterOutOfRange(format!("Laguerre functions need b > q − 1 = {floor}, got {b}")));
        }
        Ok(Self { kappa: kappa.clone(), b: b.clone(), poly: laguerre_poly(fam, kappa, b)? })
    }
}

/// Σ_{|η|≤D} α^{|η|}/d′_η ℰ_η(t) E_η(y) as a polynomial in (t, y).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernel {
    r: usize,
    cap: u32,
    poly: Polynomial,
}

pub fn kernel_truncated(fam: &JackFamily, cap: u32) -> Result<Kernel> {
    let ctx = fam.ctx();
    let r = ctx.r();
    let mut poly = Polynomial::zero(2 * r);
    for eta in compositions_up_to(r, cap) {
        let w = pow(ctx.alpha(), eta.weight()) / hook_products(&eta, ctx).d_prime;
        let t = fam.normalized(&eta)?.embed(2 * r, 0);
        let y = fam.e(&eta)?.embed(2 * r, r);
        poly.add_scaled(&(&t * &y), &w);
    }
    Ok(Kernel { r, cap, poly })
}

impl Kernel {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Polynomial in (t₁..t_r, y₁..y_r).
    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    /// Terms of degree m in t (equivalently in y).
    pub fn slice(&self, m: u32) -> Polynomial {
        self.poly.homogeneous_part(2 * m)
    }

    /// Substitutes y := point, leaving a polynomial in t.
    pub fn contract_y(&self, point: &[Q]) -> Result<Polynomial> {
        contract_block(&self.poly, self.r, self.r, point)
    }

    /// Substitutes t := point, leaving a polynomial in y.
    pub fn contract_t(&self, point: &[Q]) -> Result<Polynomial> {
        contract_block(&self.poly, 0, self.r, point)
    }
}

/// Evaluates the variable block [offset, offset+len) at `point`, keeping
/// the remaining variables in order.
pub fn contract_block(p: &Polynomial, offset: usize, len: usize, point: &[Q]) -> Result<Polynomial> {
    if point.len() != len {
        return Err(Error::RankMismatch { expected: len, got: point.len() });
    }
    let n = p.nvars() - len;
    let mut out = Polynomial::zero(n);
    for (e, c) in p.terms() {
        let ex = e.exps();
        let mut v = c.clone();
        for (k, x) in point.iter().enumerate() {
            if ex[offset + k] > 0 {
                v *= pow(x, ex[offset + k]);
            }
        }
        let rest: Vec<u32> = ex[..offset].iter().chain(&ex[offset + len..]).copied().collect();
        out.add_term(MultiExponent::new(rest), v);
    }
    Ok(out)
}

/// p with the block [offset, offset+len) replaced by c times itself.
pub fn scale_block(p: &Polynomial, offset: usize, len: usize, c: &Q) -> Polynomial {
    let mut out = Polynomial::zero(p.nvars());
    for (e, v) in p.terms() {
        let k: u32 = e.exps()[offset..offset + len].iter().sum();
        out.add_term(e.clone(), v * pow(c, k));
    }
    out
}

/// p with the block [offset, offset+len) composed with w.
pub fn permute_block(p: &Polynomial, offset: usize, w: &Permutation) -> Polynomial {
    let n = p.nvars();
    p.map_exponents(n, |e| {
        let mut out = e.to_vec();
        for i in 0..w.len() {
            out[offset + i] = 0;
        }
        for (i, &k) in e[offset..offset + w.len()].iter().enumerate() {
            out[offset + w.images()[i]] += k;
        }
        out
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPValue {
    pub kappa: Composition,
    pub w: Permutation,
    pub b: Q,
    pub lambda: RationalVector,
    pub value: Q,
}

/// Power base in front of binom(κ,σ); the value implied by the
/// generating-function derivation and by the one-variable reduction.
pub const MP_POWER_BASE: i64 = 2;

/// M_κ^w(λ) = (−1)^{|κ|}(e_κ/d_κ) Σ_σ ([b]_κ/[b]_σ)(d′_σ d_σ/(α^{|σ|} e_σ))
///            2^{|σ|} binom(κ,σ) binom(−b/2 + λ* + ρ*, σ)_w.
pub fn mp_value(fam: &JackFamily, kappa: &Composition, lambda: &RationalVector, w: &Permutation, b: &Q) -> Result<MPValue> {
    mp_value_with_base(fam, kappa, lambda, w, b, &int(MP_POWER_BASE))
}

/// mp_value with an explicit power base (used to document the sign choice).
pub fn mp_value_with_base(
    fam: &JackFamily,
    kappa: &Composition,
    lambda: &RationalVector,
    w: &Permutation,
    b: &Q,
    base: &Q,
) -> Result<MPValue> {
    let ctx = fam.ctx();
    let r = ctx.r();
    ctx.check_rank(kappa.len())?;
    ctx.check_rank(lambda.len())?;
    if w.len() != r {
        return Err(Error::RankMismatch { expected: r, got: w.len() });
    }
    check_b_algebraic(b, ctx)?;
    // the twist is relative to the reversed positive system
    let internal = w.compose(&Permutation::longest(r));
    let half_b = b / int(2);
    let top = (&lambda.star() + &ctx.rho().star()).add_scalar(&-&half_b);
    let sp = spectral_point(&top, ctx);
    let table = binom_table(fam, kappa)?;
    let mut sum = Q::zero();
    for (sigma, bin) in table.entries() {
        let h = hook_products(sigma, ctx);
        let weight = h.d_prime * h.d / (pow(ctx.alpha(), sigma.weight()) * h.e);
        let g = binom_poly(fam, sigma, &internal)?.eval_spectral(&sp)?;
        if g.is_zero() {
            continue;
        }
        sum += pochhammer_ratio(b, kappa, sigma, ctx)? * weight * pow(base, sigma.weight()) * bin * g;
    }
    let h = hook_products(kappa, ctx);
    Ok(MPValue {
        kappa: kappa.clone(),
        w: w.clone(),
        b: b.clone(),
        lambda: lambda.clone(),
        value: sign_pow(kappa.weight()) * h.e / h.d * sum,
    })
}

/// Σ_{l=0}^{k} (−k)_l(β)_l/((γ)_l l!) z^l.
pub fn hyp2f1_terminating(k: u32, beta: &Q, gamma: &Q, z: &Q) -> Result<Q> {
    let mk = int(-(k as i64));
    let mut sum = Q::zero();
    for l in 0..=k {
        let den = rising(gamma, l);
        if den.is_zero() {
            return Err(Error::Pole(format!("(γ)_{l} vanishes at γ = {gamma}")));
        }
        sum += rising(&mk, l) * rising(beta, l) / (den * factorial(l)) * pow(z, l);
    }
    Ok(sum)
}

/// Relative size |x − y| / max(|y|, 1), exact; used only for reporting.
pub fn exact_gap(x: &Q, y: &Q) -> Q {
    let d = (x - y).abs();
    let s = y.abs().max(Q::one());
    d / s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn laguerre_trivial_and_one_variable() {
        let fam = JackFamily::new(AlphaContext::new(2, int(1)).unwrap());
        assert_eq!(laguerre_poly(&fam, &Composition::zero(2), &int(3)).unwrap(), Polynomial::one(2));
        // three-term recurrence for L_k^{(β)}, β = b − 1
        let f1 = JackFamily::new(AlphaContext::new(1, frac(1, 2)).unwrap());
        for b in [int(2), frac(5, 2), int(4)] {
            let beta = &b - Q::one();
            let x = Polynomial::var(1, 0);
            let mut prev = Polynomial::one(1);
            let mut cur = &(&Polynomial::constant(1, Q::one() + &beta) - &x) * &Polynomial::one(1);
            let mut ls = vec![prev.clone(), cur.clone()];
            for k in 1..5i64 {
                let a = &Polynomial::constant(1, int(2 * k + 1) + &beta) - &x;
                let next = (&(&a * &cur) - &prev.scale(&(int(k) + &beta))).scale(&frac(1, k + 1));
                prev = cur;
                cur = next;
                ls.push(cur.clone());
            }
            for (k, lk) in ls.iter().enumerate() {
                let want = lk.scale(&(sign_pow(k as u32) * factorial(k as u32)));
                assert_eq!(laguerre_poly(&f1, &c(&[k as u32]), &b).unwrap(), want, "k={k}, b={b}");
            }
        }
    }

    #[test]
    fn laguerre_two_variable_regression() {
        // κ=(1,0), b=2, α=1: e/d = 3/2, [b]_κ = 2, binom(κ,0) = binom(κ,κ) = 1
        // and binom(κ,(0,1)) = 0, so E^(L) = −(3/2)(2 − ℰ_(1,0))
        let fam = JackFamily::new(AlphaContext::new(2, int(1)).unwrap());
        let got = laguerre_poly(&fam, &c(&[1, 0]), &int(2)).unwrap();
        let e10 = fam.normalized(&c(&[1, 0])).unwrap();
        let want = (&Polynomial::constant(2, int(2)) - &e10).scale(&frac(-3, 2));
        assert_eq!(got, want);
        assert!(laguerre_poly(&fam, &c(&[1, 0]), &frac(1, 2)).is_err());
    }

    #[test]
    fn kernel_one_variable_is_exponential() {
        let fam = JackFamily::new(AlphaContext::new(1, frac(3, 2)).unwrap());
        let k = kernel_truncated(&fam, 5).unwrap();
        let mut want = Polynomial::zero(2);
        for l in 0..=5u32 {
            want.add_term(MultiExponent::new(vec![l, l]), factorial(l).recip());
        }
        assert_eq!(k.poly(), &want);
        let k0 = kernel_truncated(&fam, 0).unwrap();
        assert_eq!(k0.poly(), &Polynomial::one(2));
    }

    #[test]
    fn hyp2f1_examples() {
        let (b, g, z) = (frac(3, 7), frac(5, 2), frac(-1, 3));
        assert_eq!(hyp2f1_terminating(0, &b, &g, &z).unwrap(), Q::one());
        assert_eq!(hyp2f1_terminating(1, &b, &g, &z).unwrap(), Q::one() - &b * &z / &g);
        // 1 + (−2)(1)/(2)·2 + (−2)(−1)(1)(2)/((2)(3)·2)·4 = 1 − 2 + 4/3
        assert_eq!(hyp2f1_terminating(2, &int(1), &int(2), &int(2)).unwrap(), frac(1, 3));
        assert!(hyp2f1_terminating(3, &int(1), &int(-1), &int(2)).is_err());
    }

    #[test]
    fn mp_trivial_index() {
        let fam = JackFamily::new(AlphaContext::new(2, int(1)).unwrap());
        let lam = RationalVector::new(vec![frac(1, 3), int(-2)]);
        for w in Permutation::all(2) {
            let m = mp_value(&fam, &Composition::zero(2), &lam, &w, &int(2)).unwrap();
            assert_eq!(m.value, Q::one());
        }
    }
}
