//! Small helpers around `BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `p/q` or `-p/q`. Denominators must be non-zero.
pub fn parse_rational(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || Error::Input(format!("not a rational: {s:?}"));
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Input(format!("zero denominator in {s:?}")));
    }
    Ok(Q::new(n, d))
}

/// Canonical "p/q" form, "p" when the denominator is one.
pub fn format_rational(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // huge numerators: fall back on a scaled division
        let n = x.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = x.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

pub fn pow(x: &Q, k: u32) -> Q {
    num_traits::pow(x.clone(), k as usize)
}

pub fn sign_pow(k: u32) -> Q {
    if k.is_multiple_of(2) {
        Q::one()
    } else {
        -Q::one()
    }
}

pub fn factorial(k: u32) -> Q {
    (1..=k).fold(Q::one(), |acc, i| acc * int(i as i64))
}

/// Rising factorial x(x+1)...(x+k-1).
pub fn rising(x: &Q, k: u32) -> Q {
    (0..k).fold(Q::one(), |acc, i| acc * (x + int(i as i64)))
}

/// Binomial coefficient C(x, k) for rational top argument.
pub fn binomial(x: &Q, k: u32) -> Q {
    let mut acc = Q::one();
    for i in 0..k {
        acc = acc * (x - int(i as i64)) / int(i as i64 + 1);
    }
    acc
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "3", "-7", "1/2", "-5/3"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("4/8").unwrap()), "1/2");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn classical_counts() {
        assert_eq!(factorial(5), int(120));
        assert_eq!(rising(&int(2), 3), int(24));
        assert_eq!(binomial(&int(6), 2), int(15));
        assert_eq!(binomial(&int(-2), 3), int(-4));
    }
}
