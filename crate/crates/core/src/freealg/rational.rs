use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

type BigRational = num_rational::BigRational;

/// An exact rational number with arbitrary-precision integers.
///
/// Values that fit a machine word are stored inline and promoted to
/// big-integer arithmetic exactly when an operation would overflow; the
/// result of every operation is exact. The inline invariant: `den >= 1`,
/// `gcd(|num|, den) = 1`, and the big variant never holds a value that
/// would fit inline, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rational(Repr);

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Small { num: i64, den: u64 },
    Big(Box<BigRational>),
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    /// A reduced small value; callers must uphold the invariant.
    fn small(num: i64, den: u64) -> Rational {
        debug_assert!(den >= 1);
        debug_assert!(num == 0 && den == 1 || gcd_u64(num.unsigned_abs(), den) == 1);
        Rational(Repr::Small { num, den })
    }

    /// Builds from a possibly unreduced i128 fraction, `den != 0`.
    fn from_i128(num: i128, den: u128, reduced: bool) -> Rational {
        debug_assert!(den != 0);
        if num == 0 {
            return Rational::small(0, 1);
        }
        let (num, den) = if reduced {
            (num, den)
        } else {
            let g = gcd_u128(num.unsigned_abs(), den);
            (num / g as i128, den / g)
        };
        match (i64::try_from(num), u64::try_from(den)) {
            (Ok(n), Ok(d)) => Rational::small(n, d),
            _ => Rational(Repr::Big(Box::new(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            )))),
        }
    }

    /// Demotes a big value back inline when it fits.
    fn from_big(b: BigRational) -> Rational {
        if let (Some(n), Some(d)) = (b.numer().to_i64(), b.denom().to_u64()) {
            Rational::small(n, d)
        } else {
            Rational(Repr::Big(Box::new(b)))
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => BigRational::new(BigInt::from(*num), BigInt::from(*den)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        // sign-fold in i128 so i64::MIN needs no special case
        let mut n = num as i128;
        let mut d = den as i128;
        if d < 0 {
            n = -n;
            d = -d;
        }
        Rational::from_i128(n, d as u128, false)
    }

    pub fn from_integer(n: i64) -> Rational {
        Rational::small(n, 1)
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Rational {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Rational {
        match &self.0 {
            Repr::Small { num, den } => {
                assert!(*num != 0, "division by zero");
                let sign = if *num < 0 { -1 } else { 1 };
                Rational::from_i128(
                    sign * *den as i128,
                    num.unsigned_abs() as u128,
                    true,
                )
            }
            Repr::Big(b) => Rational::from_big(b.recip()),
        }
    }

    fn add_small(a: i64, b: u64, c: i64, d: u64) -> Rational {
        let g = gcd_u64(b, d);
        let (b1, d1) = (b / g, d / g);
        let num = a as i128 * d1 as i128 + c as i128 * b1 as i128;
        let den = b1 as u128 * d as u128;
        Rational::from_i128(num, den, false)
    }

    fn mul_small(a: i64, b: u64, c: i64, d: u64) -> Rational {
        let g1 = gcd_u64(a.unsigned_abs(), d);
        let g2 = gcd_u64(b, c.unsigned_abs());
        let num = (a / g1 as i64) as i128 * (c / g2 as i64) as i128;
        let den = (b / g2) as u128 * (d / g1) as u128;
        // cross-cancelled reduced inputs leave a reduced product
        Rational::from_i128(num, den, true)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::small(0, 1)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::small(0, 1)
    }

    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::small(1, 1)
    }

    fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small { num: 1, den: 1 })
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                Rational::add_small(*a, *b, *c, *d)
            }
            _ => Rational::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) if *c != i64::MIN => {
                Rational::add_small(*a, *b, -*c, *d)
            }
            _ => Rational::from_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                Rational::mul_small(*a, *b, *c, *d)
            }
            _ => Rational::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        self * &rhs.recip()
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small { num, den } if *num != i64::MIN => Rational::small(-num, *den),
            _ => Rational::from_big(-self.to_big()),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}

forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = &*self + rhs;
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = &*self - rhs;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        *self = &*self - &rhs;
    }
}

impl DivAssign<&Rational> for Rational {
    fn div_assign(&mut self, rhs: &Rational) {
        *self = &*self / rhs;
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Rational {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

/// Parses `p`, `-p`, or `p/q` with arbitrary-precision integers. Anything
/// else (in particular decimal points) is rejected.
impl FromStr for Rational {
    type Err = num_rational::ParseRatioError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigRational::from_str(s).map(Rational::from_big)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(r: &Rational) -> BigRational {
        r.to_big()
    }

    #[test]
    fn construction_reduces() {
        assert_eq!(Rational::new(2, 4), Rational::new(1, 2));
        assert_eq!(Rational::new(-2, -4), Rational::new(1, 2));
        assert_eq!(Rational::new(2, -4), Rational::new(-1, 2));
        assert_eq!(Rational::new(0, 5), Rational::zero());
        assert_eq!(Rational::new(7, 1).to_string(), "7");
        assert_eq!(Rational::new(-1, 2).to_string(), "-1/2");
    }

    #[test]
    fn extreme_values_promote_and_stay_exact() {
        let min = Rational::from_integer(i64::MIN);
        let neg = -&min;
        assert_eq!(big(&neg), -BigRational::from_integer(BigInt::from(i64::MIN)));
        let sq = &min * &min;
        assert_eq!(
            big(&sq),
            BigRational::from_integer(BigInt::from(i64::MIN)) * BigRational::from_integer(BigInt::from(i64::MIN))
        );
        // demotion back to the inline form keeps equality structural
        let back = &sq / &min;
        assert_eq!(back, min);
    }

    #[test]
    fn new_with_min_denominator() {
        let r = Rational::new(1, i64::MIN);
        assert_eq!(
            big(&r),
            BigRational::new(BigInt::from(1), BigInt::from(i64::MIN))
        );
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for s in ["0", "5", "-5", "1/2", "-3/4", "100000000000000000000000000000/7"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!("0.5".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn recip_and_division() {
        assert_eq!(Rational::new(-2, 3).recip(), Rational::new(-3, 2));
        assert_eq!(
            &Rational::new(1, 2) / &Rational::new(3, 4),
            Rational::new(2, 3)
        );
    }

    proptest! {
        #[test]
        fn ops_match_bigrational(a in any::<i64>(), b in 1..=i64::MAX, c in any::<i64>(), d in 1..=i64::MAX) {
            let x = Rational::new(a, b);
            let y = Rational::new(c, d);
            prop_assert_eq!(big(&(&x + &y)), big(&x) + big(&y));
            prop_assert_eq!(big(&(&x - &y)), big(&x) - big(&y));
            prop_assert_eq!(big(&(&x * &y)), big(&x) * big(&y));
            if !y.is_zero() {
                prop_assert_eq!(big(&(&x / &y)), big(&x) / big(&y));
            }
            prop_assert_eq!(big(&-&x), -big(&x));
            prop_assert_eq!(x.is_negative(), big(&x).is_negative());
            prop_assert_eq!(big(&x.abs()), big(&x).abs());
        }

        #[test]
        fn equality_is_value_equality(a in -1000i64..1000, b in 1..1000i64, k in 1..1000i64) {
            let x = Rational::new(a, b);
            let y = Rational::new(a.checked_mul(k).unwrap(), b.checked_mul(k).unwrap());
            prop_assert_eq!(x, y);
        }
    }
}
