//! Exact scalars: arbitrary-precision rationals and Laurent polynomials in a
//! single formal parameter `t`.
//!
//! Rationals are [`num_rational::BigRational`], which keeps values in canonical
//! form (positive denominator, fully reduced) and serializes as `"p/q"` with
//! the denominator omitted when it is 1. Laurent polynomials carry the
//! `t -> 0` limit semantics used by one-parameter basis-change families.

use alloc::collections::BTreeMap;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Builds `p/q` in canonical form. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Builds the integer rational `p`.
pub fn rat_int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// A finite Laurent polynomial in `t` with rational coefficients.
///
/// The zero polynomial stores no terms; a stored coefficient is never zero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentScalar {
    terms: BTreeMap<i64, Rational>,
}

/// A negative power of `t` survives, so the value has no limit at `t -> +0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoLimit {
    pub exponent: i64,
}

impl fmt::Display for NoLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no limit at t -> 0: nonzero coefficient at t^{}", self.exponent)
    }
}

impl core::error::Error for NoLimit {}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// The single term `c * t^exp`.
    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// The parameter `t` itself.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Term iterator in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// The value at `t -> +0`: the constant coefficient, provided no negative
    /// exponent carries a nonzero coefficient.
    pub fn limit_at_zero(&self) -> Result<Rational, NoLimit> {
        if let Some((&exp, _)) = self.terms.first_key_value() {
            if exp < 0 {
                return Err(NoLimit { exponent: exp });
            }
        }
        Ok(self.coeff(0))
    }

    /// The value at `t = 1`, i.e. the coefficient sum.
    pub fn eval_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    fn insert_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }
}

impl From<Rational> for LaurentScalar {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in &self.terms {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*exp, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (e, true) => write!(f, "t^{e}")?,
                (e, false) => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.insert_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for LaurentScalar {
            type Output = LaurentScalar;
            fn $method(self, rhs: LaurentScalar) -> LaurentScalar {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        for (e, c) in &rhs.terms {
            self.insert_term(*e, c.clone());
        }
    }
}

impl Zero for LaurentScalar {
    fn zero() -> Self {
        LaurentScalar::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentScalar::is_zero(self)
    }
}

impl One for LaurentScalar {
    fn one() -> Self {
        LaurentScalar::constant(Rational::one())
    }
}

impl Sum for LaurentScalar {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t_pow(e: i64) -> LaurentScalar {
        LaurentScalar::monomial(Rational::one(), e)
    }

    #[test]
    fn limit_of_t_plus_two_is_two() {
        let s = &t_pow(1) + &LaurentScalar::constant(rat_int(2));
        assert_eq!(s.limit_at_zero(), Ok(rat_int(2)));
    }

    #[test]
    fn limit_of_zero_is_zero() {
        assert_eq!(LaurentScalar::zero().limit_at_zero(), Ok(rat_int(0)));
    }

    #[test]
    fn negative_power_has_no_limit() {
        assert_eq!(t_pow(-1).limit_at_zero(), Err(NoLimit { exponent: -1 }));
    }

    #[test]
    fn cancellation_removes_terms() {
        let s = &t_pow(-3) - &t_pow(-3);
        assert!(s.is_zero());
        assert_eq!(s.limit_at_zero(), Ok(rat_int(0)));
    }

    #[test]
    fn multiplication_adds_exponents() {
        let p = &t_pow(2) * &t_pow(-2);
        assert_eq!(p, LaurentScalar::constant(Rational::one()));
    }

    #[test]
    fn display_is_readable() {
        let s = &(&t_pow(-1) + &LaurentScalar::constant(rat_int(2))) - &t_pow(3);
        assert_eq!(alloc::format!("{s}"), "t^-1 + 2 - t^3");
    }

    #[test]
    fn rational_string_format_round_trips() {
        for s in ["3", "-5/2", "0", "7/3"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(alloc::format!("{r}"), s);
        }
        // non-canonical input reduces
        let r: Rational = "4/6".parse::<Rational>().unwrap();
        assert_eq!(alloc::format!("{r}"), "2/3");
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..=50, 1i64..=20).prop_map(|(p, q)| rat(p, q))
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentScalar> {
        proptest::collection::vec(((-4i64..=4), arb_rational()), 0..5).prop_map(|terms| {
            let mut s = LaurentScalar::zero();
            for (e, c) in terms {
                s.insert_term(e, c);
            }
            s
        })
    }

    proptest! {
        #[test]
        fn parse_render_round_trip(p in -10_000i64..10_000, q in 1i64..500) {
            let r = rat(p, q);
            let back: Rational = alloc::format!("{r}").parse().unwrap();
            prop_assert_eq!(back, r);
        }

        #[test]
        fn limit_distributes_over_addition(a in arb_laurent(), b in arb_laurent()) {
            let (la, lb) = (a.limit_at_zero(), b.limit_at_zero());
            if let (Ok(la), Ok(lb)) = (la, lb) {
                // both limits exist, so the sum converges to their sum
                prop_assert_eq!((&a + &b).limit_at_zero(), Ok(la + lb));
            }
        }

        #[test]
        fn multiplication_commutes(a in arb_laurent(), b in arb_laurent()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }
    }
}
