//! Exact linear solves and total-degree polynomial interpolation.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::params::{compositions_up_to, RationalVector};
use crate::poly::{MultiExponent, Polynomial};
use crate::rational::{pow, Q};

/// Solves the square system a·x = b by Gaussian elimination over ℚ.
pub fn solve(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Result<Vec<Q>> {
    let n = b.len();
    if a.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::Input("system is not square".into()));
    }
    for col in 0..n {
        let piv = (col..n)
            .find(|&i| !a[i][col].is_zero())
            .ok_or_else(|| Error::Singular(format!("no pivot in column {col}")))?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].recip();
        for x in &mut a[col][col..] {
            *x *= &inv;
        }
        b[col] *= &inv;
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            let (pivot_row, row) = if i < col {
                let (lo, hi) = a.split_at_mut(col);
                (&hi[0], &mut lo[i])
            } else {
                let (lo, hi) = a.split_at_mut(i);
                (&lo[col], &mut hi[0])
            };
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &f * p;
            }
            let t = &f * &b[col];
            b[i] -= t;
        }
    }
    Ok(b)
}

/// Polynomial of total degree ≤ `degree` through the given values. The
/// node set must be unisolvent, in particular of size C(degree + n, n).
pub fn interpolate(points: &[RationalVector], values: &[Q], degree: u32) -> Result<Polynomial> {
    let n = points.first().map(RationalVector::len).ok_or_else(|| Error::Input("no nodes".into()))?;
    let monos: Vec<Vec<u32>> = compositions_up_to(n, degree).into_iter().map(|c| c.parts().to_vec()).collect();
    if monos.len() != points.len() || values.len() != points.len() {
        return Err(Error::Input(format!(
            "{} nodes and {} values for {} unknowns",
            points.len(),
            values.len(),
            monos.len()
        )));
    }
    let a: Vec<Vec<Q>> = points
        .iter()
        .map(|p| {
            monos
                .iter()
                .map(|e| {
                    e.iter()
                        .zip(p.entries())
                        .fold(Q::one(), |acc, (&k, x)| if k == 0 { acc } else { acc * pow(x, k) })
                })
                .collect()
        })
        .collect();
    let coef = solve(a, values.to_vec())?;
    let mut poly = Polynomial::zero(n);
    for (e, c) in monos.into_iter().zip(coef) {
        poly.add_term(MultiExponent::new(e), c);
    }
    Ok(poly)
}
