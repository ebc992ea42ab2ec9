//! Non-symmetric Jack polynomials by triangular eigen-solve.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::binomial::BinomialPolynomial;
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::operators::{apply_cherednik, compose_with_permutation, Permutation};
use crate::params::{compositions, hook_products, AlphaContext, Composition, OrderConvention, RationalVector, ORDER_CONVENTION};
use crate::poly::{ExpansionTable, MultiExponent, Polynomial, TriangularBasis};
use crate::rational::{frac, Q};

const SEED: u64 = 0x5eed_1ac4;
const ATTEMPTS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JackPolynomial {
    pub eta: Composition,
    pub poly: Arc<Polynomial>,
    /// Eigenvalue of U_j, j = 1..r.
    pub spectral: RationalVector,
    pub value_at_ones: Q,
}

/// E_η for the frozen order convention, uncached.
pub fn nonsym_jack(eta: &Composition, ctx: &AlphaContext) -> Result<JackPolynomial> {
    let slice = compositions(ctx.r(), eta.weight());
    let order = ORDER_CONVENTION.linear_extension(&slice);
    solve_eigen(eta, ctx, ORDER_CONVENTION, &order)
}

fn generic_weights(r: usize, attempt: usize) -> Vec<Q> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED.wrapping_add(attempt as u64));
    (0..r).map(|_| frac(rng.gen_range(1..=97), rng.gen_range(1..=13))).collect()
}

/// Eigenvector of Σ t_j U_j with leading monomial x^η on the span of
/// {x^ζ : ζ ≤ η}, by back-substitution along `order` (the slice's linear
/// extension, smallest first).
pub fn solve_eigen(
    eta: &Composition,
    ctx: &AlphaContext,
    conv: OrderConvention,
    order: &[Composition],
) -> Result<JackPolynomial> {
    ctx.check_rank(eta.len())?;
    let r = ctx.r();
    let support: Vec<&Composition> = order.iter().filter(|z| *z == eta || conv.less(z, eta)).collect();

    // U_j x^ζ for every ζ in the support, checked for closure
    let mut images: Vec<Vec<Polynomial>> = Vec::with_capacity(support.len());
    for z in &support {
        let m = Polynomial::monomial(z.parts().to_vec(), Q::one());
        let imgs = (0..r).map(|j| apply_cherednik(&m, j, ctx)).collect::<Result<Vec<_>>>()?;
        for img in &imgs {
            for e in img.terms().keys() {
                let mu = e.to_composition();
                if &mu != *z && !conv.less(&mu, z) {
                    return Err(Error::NotTriangular { eta: eta.clone(), offending: mu });
                }
            }
        }
        images.push(imgs);
    }

    let pos_eta = support.iter().position(|z| *z == eta).expect("η in its own support");
    for attempt in 0..ATTEMPTS {
        let t = generic_weights(r, attempt);
        let cols: Vec<Polynomial> = images
            .iter()
            .map(|imgs| {
                let mut g = Polynomial::zero(r);
                for (tj, img) in t.iter().zip(imgs) {
                    g.add_scaled(img, tj);
                }
                g
            })
            .collect();
        let diag: Vec<Q> = support.iter().zip(&cols).map(|(z, g)| g.coeff(z.parts())).collect();
        let lambda = diag[pos_eta].clone();
        if diag.iter().enumerate().any(|(k, d)| k != pos_eta && *d == lambda) {
            continue;
        }
        let mut coef: HashMap<usize, Q> = HashMap::new();
        coef.insert(pos_eta, Q::one());
        for mu in (0..pos_eta).rev() {
            let key = support[mu].parts();
            let mut acc = Q::zero();
            for (zk, c) in &coef {
                acc += cols[*zk].coeff(key) * c;
            }
            coef.insert(mu, acc / (&lambda - &diag[mu]));
        }
        let mut poly = Polynomial::zero(r);
        for (k, c) in coef {
            poly.add_term(MultiExponent::from(support[k]), c);
        }
        let mut spectral = Vec::with_capacity(r);
        for j in 0..r {
            let img = apply_cherednik(&poly, j, ctx)?;
            let lj = img.coeff(eta.parts());
            if img != poly.scale(&lj) {
                return Err(Error::EigenRelation { eta: eta.clone(), index: j + 1 });
            }
            spectral.push(lj);
        }
        let value_at_ones = poly.eval_ones();
        return Ok(JackPolynomial {
            eta: eta.clone(),
            poly: Arc::new(poly),
            spectral: RationalVector::new(spectral),
            value_at_ones,
        });
    }
    Err(Error::SpectralDegeneracy { eta: eta.clone(), attempts: ATTEMPTS })
}

/// Memoized family {E_η} for one context, plus the derived tables that
/// downstream modules cache per context.
#[derive(Debug)]
pub struct JackFamily {
    ctx: AlphaContext,
    convention: OrderConvention,
    jacks: Memo<Composition, JackPolynomial>,
    normalized: Memo<Composition, Polynomial>,
    slices: Memo<u32, SliceOrder>,
    pub(crate) binom_tables: Memo<(Composition, Permutation), ExpansionTable>,
    pub(crate) binom_polys: Memo<(Composition, Permutation), BinomialPolynomial>,
}

#[derive(Debug)]
struct SliceOrder {
    order: Vec<Composition>,
    position: HashMap<Composition, usize>,
}

impl JackFamily {
    pub fn new(ctx: AlphaContext) -> Self {
        Self::with_convention(ctx, ORDER_CONVENTION)
    }

    pub fn with_convention(ctx: AlphaContext, convention: OrderConvention) -> Self {
        Self {
            ctx,
            convention,
            jacks: Memo::default(),
            normalized: Memo::default(),
            slices: Memo::default(),
            binom_tables: Memo::default(),
            binom_polys: Memo::default(),
        }
    }

    pub fn ctx(&self) -> &AlphaContext {
        &self.ctx
    }

    pub fn r(&self) -> usize {
        self.ctx.r()
    }

    pub fn convention(&self) -> OrderConvention {
        self.convention
    }

    fn slice(&self, m: u32) -> Arc<SliceOrder> {
        self.slices
            .get_or_try_insert(&m, || {
                let order = self.convention.linear_extension(&compositions(self.r(), m));
                let position = order.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
                Ok(SliceOrder { order, position })
            })
            .expect("infallible")
    }

    /// Linear extension of the weight-m slice, smallest first.
    pub fn slice_order(&self, m: u32) -> Vec<Composition> {
        self.slice(m).order.clone()
    }

    pub fn jack(&self, eta: &Composition) -> Result<Arc<JackPolynomial>> {
        self.ctx.check_rank(eta.len())?;
        self.jacks.get_or_try_insert(eta, || {
            let s = self.slice(eta.weight());
            solve_eigen(eta, &self.ctx, self.convention, &s.order)
        })
    }

    /// E_η
    pub fn e(&self, eta: &Composition) -> Result<Arc<Polynomial>> {
        Ok(self.jack(eta)?.poly.clone())
    }

    /// ℰ_η = E_η / E_η(1^r)
    pub fn normalized(&self, eta: &Composition) -> Result<Arc<Polynomial>> {
        self.normalized.get_or_try_insert(eta, || {
            let j = self.jack(eta)?;
            if j.value_at_ones.is_zero() {
                return Err(Error::Internal(format!("E_{eta}(1) vanishes")));
            }
            Ok(j.poly.scale(&j.value_at_ones.recip()))
        })
    }

    /// Index of κ in the linear extension of its weight slice.
    pub fn position_of(&self, kappa: &Composition) -> usize {
        self.slice(kappa.weight()).position[kappa]
    }

    /// e_η / d_η
    pub fn hook_value(&self, eta: &Composition) -> Q {
        let h = hook_products(eta, &self.ctx);
        h.e / h.d
    }
}

impl TriangularBasis for JackFamily {
    fn rank(&self) -> usize {
        self.r()
    }

    fn element(&self, kappa: &Composition) -> Result<Arc<Polynomial>> {
        self.e(kappa)
    }

    fn position(&self, kappa: &Composition) -> usize {
        self.position_of(kappa)
    }
}

/// Affine substitution x ↦ scale·(w·x) + translate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointMap {
    pub w: Permutation,
    pub scale: Q,
    pub translate: Q,
}

impl PointMap {
    pub fn identity(r: usize) -> Self {
        Self { w: Permutation::identity(r), scale: Q::one(), translate: Q::zero() }
    }

    pub fn permutation(w: Permutation) -> Self {
        Self { w, scale: Q::one(), translate: Q::zero() }
    }
}

/// (x₁⋯x_r)^power · poly(x); kept as a pair when `power` is negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedEval {
    pub monomial_power: i64,
    pub poly: Polynomial,
}

impl ShiftedEval {
    pub fn to_polynomial(&self) -> Option<Polynomial> {
        let k = u32::try_from(self.monomial_power).ok()?;
        let n = self.poly.nvars();
        Some(self.poly.map_exponents(n, |e| e.iter().map(|x| x + k).collect()))
    }
}

/// (x₁⋯x_r)^c · ℰ_η(scale·(w·x) + translate).
pub fn jack_shifted_eval(fam: &JackFamily, eta: &Composition, c: i64, map: &PointMap) -> Result<ShiftedEval> {
    let r = fam.r();
    if map.w.len() != r {
        return Err(Error::Input(format!("substitution permutes {} variables, rank is {r}", map.w.len())));
    }
    let base = fam.normalized(eta)?;
    let moved = base.translate(&map.translate).scale_vars(&map.scale);
    let poly = compose_with_permutation(&moved, &map.w)?;
    Ok(ShiftedEval { monomial_power: c, poly })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn trivial_and_one_variable() {
        for r in 1..=3 {
            let ctx = AlphaContext::new(r, frac(1, 2)).unwrap();
            let j = nonsym_jack(&Composition::zero(r), &ctx).unwrap();
            assert_eq!(*j.poly, Polynomial::one(r));
            assert_eq!(j.spectral, ctx.rho().scale(&frac(-1, 2)));
        }
        let ctx = AlphaContext::new(1, int(3)).unwrap();
        for k in 0..6 {
            let j = nonsym_jack(&c(&[k]), &ctx).unwrap();
            assert_eq!(*j.poly, Polynomial::monomial(vec![k], Q::one()));
        }
    }

    #[test]
    fn two_variable_regressions() {
        let ctx = AlphaContext::new(2, int(1)).unwrap();
        let j = nonsym_jack(&c(&[0, 1]), &ctx).unwrap();
        assert_eq!(*j.poly, Polynomial::var(2, 1));
        let j = nonsym_jack(&c(&[1, 0]), &ctx).unwrap();
        let want = &Polynomial::var(2, 0) + &Polynomial::var(2, 1).scale(&frac(1, 2));
        assert_eq!(*j.poly, want);
    }

    #[test]
    fn normalized_is_one_at_ones() {
        let fam = JackFamily::new(AlphaContext::new(3, frac(2, 3)).unwrap());
        for eta in crate::params::compositions_up_to(3, 3) {
            assert_eq!(fam.normalized(&eta).unwrap().eval_ones(), Q::one());
        }
        let f1 = JackFamily::new(AlphaContext::new(1, int(2)).unwrap());
        assert_eq!(*f1.normalized(&c(&[4])).unwrap(), Polynomial::monomial(vec![4], Q::one()));
    }

    #[test]
    fn shifted_eval_examples() {
        let fam = JackFamily::new(AlphaContext::new(2, int(1)).unwrap());
        let eta = c(&[0, 1]);
        let s = jack_shifted_eval(&fam, &eta, 0, &PointMap::identity(2)).unwrap();
        assert_eq!(s.to_polynomial().unwrap(), *fam.normalized(&eta).unwrap());
        let w = Permutation::transposition(2, 0, 1).unwrap();
        let s = jack_shifted_eval(&fam, &eta, 0, &PointMap::permutation(w)).unwrap();
        let swapped = crate::operators::apply_transposition(&fam.normalized(&eta).unwrap(), 0, 1).unwrap();
        assert_eq!(s.poly, swapped);
        let s = jack_shifted_eval(&fam, &eta, -1, &PointMap::identity(2)).unwrap();
        assert!(s.to_polynomial().is_none());
    }

    #[test]
    fn monomial_shift_raises_label() {
        // (x₁⋯x_r)^c ℰ_σ = ℰ_{σ+c}
        let fam = JackFamily::new(AlphaContext::new(3, frac(1, 2)).unwrap());
        for sigma in crate::params::compositions_up_to(3, 2) {
            for k in 1..=2u32 {
                let lhs = jack_shifted_eval(&fam, &sigma, k as i64, &PointMap::identity(3))
                    .unwrap()
                    .to_polynomial()
                    .unwrap();
                let up = sigma.shifted(k as i64).unwrap();
                assert_eq!(lhs, *fam.normalized(&up).unwrap());
            }
        }
    }
}
