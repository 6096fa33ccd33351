//! Exact integer and modular arithmetic.
//!
//! Every operation here is exact: fixed-width machine integers with widening
//! intermediates, and a hard panic on any value that cannot be represented.
//! Intended operating range: moduli up to `2^20`, free exponents up to `2^31`
//! in magnitude. Silent wraparound is never acceptable because downstream
//! algebraic identities are checked exactly.

use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum ArithError {
    #[error("{a} is not invertible modulo {modulus}")]
    NotInvertible { a: i64, modulus: u64 },
}

/// A residue reduced into `[0, modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    /// Reduces an arbitrary integer into `[0, modulus)`. Panics if `modulus == 0`.
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        let value = (value as i128).rem_euclid(modulus as i128) as u64;
        Residue { value, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }
}

/// Coefficients `(u, v, w, d)` of a linear identity over the integers.
///
/// Which identity holds is part of the producing operation's contract;
/// consumers re-verify the identity they asked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BezoutWitness {
    pub u: i64,
    pub v: i64,
    pub w: i64,
    pub d: i64,
}

pub(crate) fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("arithmetic overflow: result exceeds i64")
}

/// Extended Euclidean algorithm.
///
/// Returns `(d, x, y)` with `d = gcd(|a|, |b|) >= 0` and `a*x + b*y = d`
/// exactly. By convention `ext_gcd(0, 0) = (0, 0, 0)`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if a == 0 && b == 0 {
        return (0, 0, 0);
    }
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (r0, x0, y0) = (-r0, -x0, -y0);
    }
    (narrow(r0), narrow(x0), narrow(y0))
}

/// `gcd(|a|, |b|)`, with `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> u64 {
    ext_gcd(a, b).0 as u64
}

/// Greatest common divisor of three integers by absolute value.
/// Zero arguments are ignored: `gcd3(0, x, y) = gcd(x, y)`.
pub fn gcd3(a: i64, b: i64, c: i64) -> u64 {
    gcd(narrow(gcd(a, b) as i128), c)
}

/// Multiplicative inverse modulo `n >= 1`.
///
/// Errors with [`ArithError::NotInvertible`] when `gcd(a, n) != 1`.
pub fn mod_inverse(a: i64, n: u64) -> Result<Residue, ArithError> {
    let nn = i64::try_from(n).expect("modulus exceeds i64 range");
    assert!(nn >= 1, "modulus must be positive");
    let (d, x, _) = ext_gcd(a, nn);
    if d == 1 {
        Ok(Residue::new(x, n))
    } else {
        Err(ArithError::NotInvertible { a, modulus: n })
    }
}

/// `base^exp mod n`, exact for any sign of `exp`.
///
/// Negative exponents are routed through [`mod_inverse`], so they require
/// `gcd(base, n) = 1`.
pub fn mod_pow(base: i64, exp: i64, n: u64) -> Result<Residue, ArithError> {
    assert!(n >= 1, "modulus must be positive");
    let b = if exp < 0 {
        mod_inverse(base, n)?.value()
    } else {
        Residue::new(base, n).value()
    };
    let mut e = exp.unsigned_abs();
    let mut acc = 1 % n;
    let mut sq = b;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, sq, n);
        }
        e >>= 1;
        if e > 0 {
            sq = mul_mod(sq, sq, n);
        }
    }
    Ok(Residue { value: acc, modulus: n })
}

/// `(a * b) mod n` through a widening intermediate.
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Recursive Euclid, independent of ext_gcd.
    fn gcd_oracle(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd_oracle(b, a % b)
        }
    }

    #[test]
    fn ext_gcd_examples() {
        assert_eq!(ext_gcd(4, 6), (2, -1, 1));
        assert_eq!(ext_gcd(1, 0), (1, 1, 0));
        assert_eq!(ext_gcd(0, 0), (0, 0, 0));
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(3, 4).unwrap().value(), 3);
        for n in 2..40 {
            assert_eq!(mod_inverse(1, n).unwrap().value(), 1);
        }
        assert_eq!(
            mod_inverse(2, 4),
            Err(ArithError::NotInvertible { a: 2, modulus: 4 })
        );
        // the one-element group: 0 is the only residue and 0 == 1 (mod 1)
        assert_eq!(mod_inverse(7, 1).unwrap().value(), 0);
    }

    #[test]
    fn mod_pow_examples() {
        assert_eq!(mod_pow(3, 2, 4).unwrap().value(), 1);
        assert_eq!(mod_pow(2, -1, 5).unwrap().value(), 3);
        for b in [-3i64, 0, 1, 5, 17] {
            assert_eq!(mod_pow(b, 0, 7).unwrap().value(), 1);
        }
        assert!(mod_pow(2, -1, 4).is_err());
    }

    #[test]
    fn gcd3_examples() {
        assert_eq!(gcd3(2, 3, 2), 1);
        assert_eq!(gcd3(0, 3, 2), 1);
        assert_eq!(gcd3(2, 2, 0), 2);
    }

    #[test]
    fn residue_reduces_into_range() {
        let r = Residue::new(-7, 5);
        assert_eq!(r.value(), 3);
        assert_eq!(r.modulus(), 5);
        assert_eq!(Residue::new(10, 5).value(), 0);
    }

    proptest! {
        #[test]
        fn bezout_identity_holds(a in -10_000i64..10_000, b in -10_000i64..10_000) {
            let (d, x, y) = ext_gcd(a, b);
            prop_assert_eq!(a as i128 * x as i128 + b as i128 * y as i128, d as i128);
            prop_assert_eq!(d as u64, gcd_oracle(a.unsigned_abs(), b.unsigned_abs()));
        }

        #[test]
        fn inverse_composes_to_identity(a in 1i64..5_000, n in 2u64..5_000) {
            prop_assume!(gcd(a, n as i64) == 1);
            let inv = mod_inverse(a, n).unwrap();
            prop_assert_eq!(mul_mod(Residue::new(a, n).value(), inv.value(), n), 1);
        }

        #[test]
        fn mod_pow_is_additive_in_the_exponent(
            b in 1i64..500,
            e1 in -60i64..60,
            e2 in -60i64..60,
            n in 2u64..500,
        ) {
            prop_assume!(gcd(b, n as i64) == 1);
            let lhs = mod_pow(b, e1 + e2, n).unwrap().value();
            let rhs = mul_mod(
                mod_pow(b, e1, n).unwrap().value(),
                mod_pow(b, e2, n).unwrap().value(),
                n,
            );
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn gcd3_permutation_invariant(a in -500i64..500, b in -500i64..500, c in -500i64..500) {
            let g = gcd3(a, b, c);
            prop_assert_eq!(g, gcd3(b, a, c));
            prop_assert_eq!(g, gcd3(c, b, a));
            prop_assert_eq!(g, gcd3(a, c, b));
        }

        #[test]
        fn gcd3_is_class_invariant(s in -500i64..500, k in -20i64..20, m in 1i64..100, n in 1i64..100) {
            // gcd3(s + k*n, m, n) depends only on s modulo n
            prop_assert_eq!(gcd3(s + k * n, m, n), gcd3(s, m, n));
        }
    }
}
