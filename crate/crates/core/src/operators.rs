//! Transpositions, divided differences, Dunkl and Cherednik operators.

use std::fmt;
use std::str::FromStr;



use crate::error::{Error, Result};
use crate::params::AlphaContext;
use crate::poly::{MultiExponent, Polynomial};
use crate::rational::{int, Q};

/// Permutation of {0..r-1} stored by images. Acting on points,
/// (w·x)_i = x_{w(i)}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::Input(format!("not a permutation: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Self(images))
    }

    pub fn identity(r: usize) -> Self {
        Self((0..r).collect())
    }

    /// Longest element i ↦ r−1−i.
    pub fn longest(r: usize) -> Self {
        Self((0..r).rev().collect())
    }

    pub fn transposition(r: usize, i: usize, j: usize) -> Result<Self> {
        if i >= r || j >= r {
            return Err(Error::Input(format!("transposition ({},{}) out of range for r={r}", i + 1, j + 1)));
        }
        let mut v: Vec<usize> = (0..r).collect();
        v.swap(i, j);
        Ok(Self(v))
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &w)| i == w)
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut v = vec![0; self.0.len()];
        for (i, &w) in self.0.iter().enumerate() {
            v[w] = i;
        }
        Self(v)
    }

    pub fn act_on_point<T: Clone>(&self, x: &[T]) -> Vec<T> {
        self.0.iter().map(|&i| x[i].clone()).collect()
    }

    /// All permutations of {0..r-1}, lexicographic.
    pub fn all(r: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..r).collect();
        loop {
            out.push(Self(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..r).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..r).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// Parses one-line image notation "2,1,3" or cycle notation "(1 2)(3)",
    /// 1-based, for rank `r`.
    pub fn parse(s: &str, r: usize) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('(') {
            let mut images: Vec<usize> = (0..r).collect();
            for cyc in t.split(')').map(str::trim).filter(|c| !c.is_empty()) {
                let body = cyc.strip_prefix('(').ok_or_else(|| Error::Input(format!("bad cycle in {s:?}")))?;
                let pts = body
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|x| !x.is_empty())
                    .map(|x| match x.parse::<usize>() {
                        Ok(v) if v >= 1 && v <= r => Ok(v - 1),
                        _ => Err(Error::Input(format!("bad cycle entry {x:?} for r={r}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                for k in 0..pts.len() {
                    images[pts[k]] = pts[(k + 1) % pts.len()];
                }
            }
            Self::from_images(images)
        } else {
            let images = t
                .split(',')
                .map(|x| match x.trim().parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(Error::Input(format!("bad permutation entry {x:?}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            if images.len() != r {
                return Err(Error::RankMismatch { expected: r, got: images.len() });
            }
            Self::from_images(images)
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{}", v.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let n = if s.trim().starts_with('(') {
            return Err(Error::Input("cycle notation needs the rank; use Permutation::parse".into()));
        } else {
            s.split(',').count()
        };
        Self::parse(s, n)
    }
}

/// f ↦ f∘w, i.e. (f∘w)(x) = f(w·x).
pub fn compose_with_permutation(p: &Polynomial, w: &Permutation) -> Result<Polynomial> {
    if w.len() != p.nvars() {
        return Err(Error::RankMismatch { expected: p.nvars(), got: w.len() });
    }
    Ok(p.map_exponents(p.nvars(), |e| {
        let mut out = vec![0; e.len()];
        for (i, &k) in e.iter().enumerate() {
            out[w.0[i]] += k;
        }
        out
    }))
}

/// Swap of the variables x_i and x_j (0-based).
pub fn apply_transposition(p: &Polynomial, i: usize, j: usize) -> Result<Polynomial> {
    let n = p.nvars();
    if i >= n || j >= n || i == j {
        return Err(Error::Input(format!("transposition ({},{}) invalid for r={n}", i + 1, j + 1)));
    }
    Ok(p.map_exponents(n, |e| {
        let mut v = e.to_vec();
        v.swap(i, j);
        v
    }))
}

/// Adds c · (1 − s_ij) x^e / (x_j − x_i) into `out`, variables shifted by
/// `offset`. Geometric-sum expansion, no division.
fn add_divided_difference(out: &mut Polynomial, e: &[u32], c: &Q, i: usize, j: usize) {
    let (m, n) = (e[i], e[j]);
    if m == n {
        return;
    }
    let (lo, len, sign) = if n > m { (m, n - m, c.clone()) } else { (n, m - n, -c) };
    for k in 0..len {
        let mut ne = e.to_vec();
        ne[j] = lo + k;
        ne[i] = lo + len - 1 - k;
        out.add_term(MultiExponent::new(ne), sign.clone());
    }
}

/// (1 − s_ij) p / (x_j − x_i).
pub fn divided_difference(p: &Polynomial, i: usize, j: usize) -> Polynomial {
    let mut out = Polynomial::zero(p.nvars());
    for (e, c) in p.terms() {
        add_divided_difference(&mut out, e.exps(), c, i, j);
    }
    out
}

/// T_j acting on the variables offset..offset+r of a polynomial in more
/// variables. j is 0-based within the block.
pub fn apply_dunkl_block(p: &Polynomial, j: usize, offset: usize, ctx: &AlphaContext) -> Result<Polynomial> {
    let r = ctx.r();
    if j >= r || offset + r > p.nvars() {
        return Err(Error::Input(format!("Dunkl index {} out of range", j + 1)));
    }
    let inv = ctx.inv_alpha();
    let jj = offset + j;
    let mut out = Polynomial::zero(p.nvars());
    for (e, c) in p.terms() {
        let ex = e.exps();
        if ex[jj] > 0 {
            let mut ne = ex.to_vec();
            ne[jj] -= 1;
            out.add_term(MultiExponent::new(ne), c * int(ex[jj] as i64));
        }
        let ci = c * &inv;
        for i in (offset..offset + r).filter(|&i| i != jj) {
            add_divided_difference(&mut out, ex, &ci, i, jj);
        }
    }
    Ok(out)
}

/// T_j = ∂_j + (1/α) Σ_{i≠j} (1 − s_ij)/(x_j − x_i), 0-based j.
pub fn apply_dunkl(p: &Polynomial, j: usize, ctx: &AlphaContext) -> Result<Polynomial> {
    ctx.check_rank(p.nvars())?;
    apply_dunkl_block(p, j, 0, ctx)
}

/// U_j = x_j∂_j + (1/α)Σ_{i<j} x_j/(x_j−x_i)(1−s_ij)
///       + (1/α)Σ_{k>j} x_k/(x_j−x_k)(1−s_jk) − ρ_j/2, 0-based j.
pub fn apply_cherednik(p: &Polynomial, j: usize, ctx: &AlphaContext) -> Result<Polynomial> {
    ctx.check_rank(p.nvars())?;
    let r = ctx.r();
    if j >= r {
        return Err(Error::Input(format!("Cherednik index {} out of range", j + 1)));
    }
    let inv = ctx.inv_alpha();
    let shift = -&ctx.rho().entries()[j] / int(2);
    let mut out = Polynomial::zero(r);
    for (e, c) in p.terms() {
        let ex = e.exps();
        out.add_term(e.clone(), c * (int(ex[j] as i64) + &shift));
        let ci = c * &inv;
        let mut dd = Polynomial::zero(r);
        // x_j (1 − s_ij)/(x_j − x_i) for i < j
        for i in 0..j {
            add_divided_difference(&mut dd, ex, &ci, i, j);
        }
        for (de, dc) in dd.terms() {
            let mut ne = de.exps().to_vec();
            ne[j] += 1;
            out.add_term(MultiExponent::new(ne), dc.clone());
        }
        // x_k (1 − s_jk)/(x_j − x_k) = −x_k (1 − s_jk)/(x_k − x_j) for k > j
        for k in j + 1..r {
            let mut dk = Polynomial::zero(r);
            add_divided_difference(&mut dk, ex, &ci, j, k);
            for (de, dc) in dk.terms() {
                let mut ne = de.exps().to_vec();
                ne[k] += 1;
                out.add_term(MultiExponent::new(ne), -dc.clone());
            }
        }
    }
    Ok(out)
}

/// E(T) applied to `target`, with x_j ↦ T_j acting on the block at `offset`.
pub fn apply_dunkl_poly_block(coeff: &Polynomial, target: &Polynomial, offset: usize, ctx: &AlphaContext) -> Result<Polynomial> {
    ctx.check_rank(coeff.nvars())?;
    let mut out = Polynomial::zero(target.nvars());
    // memoize T^e target along a walk over exponents sharing prefixes
    let mut cache: std::collections::HashMap<Vec<u32>, Polynomial> = std::collections::HashMap::new();
    cache.insert(vec![0; ctx.r()], target.clone());
    for (e, c) in coeff.terms() {
        let img = dunkl_monomial(e.exps(), offset, ctx, &mut cache)?;
        out.add_scaled(&img, c);
    }
    Ok(out)
}

fn dunkl_monomial(
    e: &[u32],
    offset: usize,
    ctx: &AlphaContext,
    cache: &mut std::collections::HashMap<Vec<u32>, Polynomial>,
) -> Result<Polynomial> {
    if let Some(p) = cache.get(e) {
        return Ok(p.clone());
    }
    let j = e.iter().position(|&k| k > 0).expect("nonzero exponent");
    let mut prev = e.to_vec();
    prev[j] -= 1;
    let base = dunkl_monomial(&prev, offset, ctx, cache)?;
    let img = if base.is_zero() { base } else { apply_dunkl_block(&base, j, offset, ctx)? };
    cache.insert(e.to_vec(), img.clone());
    Ok(img)
}

/// E(T) target with x_j replaced by T_j.
pub fn apply_dunkl_poly(coeff: &Polynomial, target: &Polynomial, ctx: &AlphaContext) -> Result<Polynomial> {
    ctx.check_rank(target.nvars())?;
    apply_dunkl_poly_block(coeff, target, 0, ctx)
}

/// Σ_j x_j ∂_j, the Euler operator.
pub fn euler(p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(p.nvars());
    for (e, c) in p.terms() {
        out.add_term(e.clone(), c * int(e.degree() as i64));
    }
    out
}

pub fn is_zero_or_degree(p: &Polynomial, d: u32) -> bool {
    p.is_zero() || p.terms().keys().all(|e| e.degree() == d)
}
