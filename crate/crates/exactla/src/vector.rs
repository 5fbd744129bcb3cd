//! Exact rational vectors in ambient coordinates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

pub type Rat = BigRational;
pub type QVec = Vec<Rat>;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from numerator and denominator.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn zeros(n: usize) -> QVec {
    vec![Rat::zero(); n]
}

pub fn from_i64(v: &[i64]) -> QVec {
    v.iter().map(|&x| rat(x)).collect()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn add(a: &[Rat], b: &[Rat]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rat], c: &Rat) -> QVec {
    a.iter().map(|x| x * c).collect()
}

pub fn neg(a: &[Rat]) -> QVec {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Lexicographic comparison, used for deterministic ordering of ray lists.
pub fn lex_cmp(a: &[Rat], b: &[Rat]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// Scales a nonzero rational vector to primitive integer form: integer
/// coordinates with gcd 1, first nonzero coordinate positive in the sense
/// of keeping the original direction (no sign flip).
pub fn primitive(v: &[Rat]) -> QVec {
    if is_zero_vec(v) {
        return v.to_vec();
    }
    let mut den = BigInt::one();
    for x in v {
        den = den.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let mut g = BigInt::zero();
    for n in &ints {
        g = g.gcd(n);
    }
    ints.into_iter()
        .map(|n| Rat::from_integer(n / &g))
        .collect()
}

/// Primitive form with a canonical sign: first nonzero entry positive.
/// Used when a vector represents a line rather than a direction.
pub fn primitive_signed(v: &[Rat]) -> QVec {
    let p = primitive(v);
    match p.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => neg(&p),
        _ => p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_clears_denominators() {
        let v = vec![ratio(1, 2), ratio(-3, 4)];
        assert_eq!(primitive(&v), vec![rat(2), rat(-3)]);
    }

    #[test]
    fn primitive_keeps_direction() {
        let v = vec![rat(-2), rat(4)];
        assert_eq!(primitive(&v), vec![rat(-1), rat(2)]);
        assert_eq!(primitive_signed(&v), vec![rat(1), rat(-2)]);
    }
}
