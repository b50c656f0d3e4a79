//! Exact rational arithmetic helpers.
//!
//! `Rat` is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator (the `num_rational` invariants). This module adds
//! the number-theoretic utilities the rest of the crate needs: perfect
//! square and fourth-power tests, square-free decomposition, and parsing.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "p", "-p" or "p/q".
pub fn parse_rat(s: &str) -> Result<Rat> {
    Rat::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// Integer square root if `n` is a perfect square (n >= 0).
pub fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Exact square root of a rational, if it is a square.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    let n = perfect_sqrt(x.numer())?;
    let d = perfect_sqrt(x.denom())?;
    Some(Rat::new(n, d))
}

pub fn is_square(x: &Rat) -> bool {
    rat_sqrt(x).is_some()
}

/// Exact fourth root of a rational, if it is a fourth power.
pub fn rat_fourth_root(x: &Rat) -> Option<Rat> {
    let s = rat_sqrt(x)?;
    rat_sqrt(&s)
}

pub fn is_fourth_power(x: &Rat) -> bool {
    rat_fourth_root(x).is_some()
}

/// Square-free decomposition of a nonzero rational: `x = d * scale^2`
/// with `d` a square-free integer.
///
/// Odd prime powers are extracted by trial division up to 10^6. A
/// leftover cofactor with no divisor below that bound is declared
/// square-free when it is not a perfect square and stays below 10^12
/// (it then has at most two prime factors, necessarily distinct);
/// beyond that, `normalized` is false and `d` may retain a hidden
/// square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFreePart {
    pub d: BigInt,
    pub scale: Rat,
    pub normalized: bool,
}

pub fn squarefree_part(x: &Rat) -> Result<SquareFreePart> {
    if x.is_zero() {
        return Err(Error::Internal("square-free part of zero".into()));
    }
    // p/q = (p*q) / q^2, so the square-free part of p/q is that of p*q.
    let n = x.numer() * x.denom();
    let q = x.denom().clone();
    let negative = n.is_negative();
    let mut m = n.abs();
    let mut d = BigInt::one();
    let mut s = BigInt::one();

    let divide_out = |m: &mut BigInt, p: u64, d: &mut BigInt, s: &mut BigInt| {
        let pp = BigInt::from(p);
        let mut e = 0u64;
        while (&*m % &pp).is_zero() {
            *m /= &pp;
            e += 1;
        }
        if e % 2 == 1 {
            *d *= &pp;
        }
        for _ in 0..e / 2 {
            *s *= &pp;
        }
    };

    divide_out(&mut m, 2, &mut d, &mut s);
    divide_out(&mut m, 3, &mut d, &mut s);
    let mut p = 5u64;
    while p <= 1_000_000 && BigInt::from(p) * BigInt::from(p) <= m {
        divide_out(&mut m, p, &mut d, &mut s);
        divide_out(&mut m, p + 2, &mut d, &mut s);
        p += 6;
    }

    let mut normalized = true;
    if !m.is_one() {
        if let Some(r) = perfect_sqrt(&m) {
            s *= r;
        } else if m < BigInt::from(1_000_000_000_000u64) {
            // no divisor <= 10^6 and not a square: at most two distinct primes
            d *= &m;
        } else {
            d *= &m;
            normalized = false;
        }
    }
    if negative {
        d = -d;
    }
    Ok(SquareFreePart {
        d,
        scale: Rat::new(s, q),
        normalized,
    })
}

/// Deterministic sample sequence 0, 1, -1, 2, -2, ... used by the
/// identity tester and the verification suites.
pub fn sample_sequence() -> impl Iterator<Item = Rat> {
    (0u64..).map(|k| {
        if k == 0 {
            Rat::zero()
        } else if k % 2 == 1 {
            rat_i(((k + 1) / 2) as i64)
        } else {
            -rat_i((k / 2) as i64)
        }
    })
}

/// True if the integer is square-free (trial division; desk scale).
pub fn is_squarefree_int(n: &BigInt) -> bool {
    if n.is_zero() {
        return false;
    }
    match squarefree_part(&Rat::from_integer(n.clone())) {
        Ok(sf) => sf.scale.is_one() && sf.normalized,
        Err(_) => false,
    }
}

/// Sign of a big integer as -1, 0, 1.
pub fn sign_i(n: &BigInt) -> i32 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_normalize() {
        let x = parse_rat("6/4").unwrap();
        assert_eq!(x, rat(3, 2));
        assert_eq!(x.to_string(), "3/2");
        assert_eq!(parse_rat("-7").unwrap(), rat_i(-7));
    }

    #[test]
    fn square_detection() {
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert!(!is_square(&rat_i(-4)));
        assert!(!is_square(&rat(2, 1)));
        assert!(is_fourth_power(&rat(16, 81)));
        assert!(!is_fourth_power(&rat_i(8)));
    }

    #[test]
    fn squarefree_parts() {
        let sf = squarefree_part(&rat_i(18)).unwrap();
        assert_eq!(sf.d, BigInt::from(2));
        assert_eq!(sf.scale, rat_i(3));
        assert!(sf.normalized);

        // -19 stays -19
        let sf = squarefree_part(&rat_i(-19)).unwrap();
        assert_eq!(sf.d, BigInt::from(-19));

        // 3/4 = 3 * (1/2)^2
        let sf = squarefree_part(&rat(3, 4)).unwrap();
        assert_eq!(sf.d, BigInt::from(3));
        assert_eq!(sf.scale, rat(1, 2));

        // -19/25
        let sf = squarefree_part(&rat(-19, 25)).unwrap();
        assert_eq!(sf.d, BigInt::from(-19));
        assert_eq!(sf.scale, rat(1, 5));
    }

    #[test]
    fn squarefree_int() {
        assert!(is_squarefree_int(&BigInt::from(15)));
        assert!(!is_squarefree_int(&BigInt::from(12)));
        assert!(!is_squarefree_int(&BigInt::from(0)));
    }

    proptest! {
        // (a/b)*(b/a) = 1 and normalization is stable under re-parsing.
        #[test]
        fn mul_inverse(a in -1000i64..1000, b in 1i64..1000) {
            prop_assume!(a != 0);
            let x = rat(a, b);
            let inv = rat(b, a);
            prop_assert_eq!(&x * &inv, rat_i(1));
            let reparsed = parse_rat(&x.to_string()).unwrap();
            prop_assert_eq!(reparsed, x);
        }

        #[test]
        fn squarefree_reconstructs(n in -5000i64..5000, d in 1i64..200) {
            prop_assume!(n != 0);
            let x = rat(n, d);
            let sf = squarefree_part(&x).unwrap();
            prop_assert!(sf.normalized);
            let back = Rat::from_integer(sf.d) * &sf.scale * &sf.scale;
            prop_assert_eq!(back, x);
        }
    }
}
