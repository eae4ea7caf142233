//! Rational functions in ℚ(x, y), kept in lowest terms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gcd::mpoly_gcd;
use super::mpoly::{forward_owned_binop, MPoly, Var, Variables};
use super::ArithError;

/// `num / den` with `gcd(num, den) = 1` and `den` monic in graded-lex order.
/// Zero is `0 / 1`. Because the form is canonical, structural equality is
/// equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(MPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_poly(MPoly::from_int(n))
    }

    pub fn constant(c: BigRational) -> Self {
        RatFunc::from_poly(MPoly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        RatFunc::from_poly(MPoly::var(v))
    }

    pub fn from_poly(num: MPoly) -> Self {
        RatFunc {
            num,
            den: MPoly::one(),
        }
    }

    /// Builds `num / den` in canonical form.
    pub fn new(num: MPoly, den: MPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(RatFunc::reduce(num, den))
    }

    fn reduce(num: MPoly, den: MPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc::zero();
        }
        if let Some(c) = den.constant_value() {
            return RatFunc::from_poly(num.scale(&c.recip()));
        }
        let g = mpoly_gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        RatFunc::with_monic_den(num, den)
    }

    fn with_monic_den(num: MPoly, den: MPoly) -> Self {
        let lc = den.leading_coefficient();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    /// Re-runs canonicalization; a no-op on values built through this API.
    pub fn normalized(&self) -> Self {
        RatFunc::reduce(self.num.clone(), self.den.clone())
    }

    pub fn numer(&self) -> &MPoly {
        &self.num
    }

    pub fn denom(&self) -> &MPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MPoly, MPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&MPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_polynomial() {
            self.num.constant_value()
        } else {
            None
        }
    }

    /// Number of stored terms in numerator and denominator together.
    pub fn num_terms(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<Self, ArithError> {
        if other.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self * &other.recip()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        // Powers of coprime polynomials stay coprime.
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Formal partial derivative (quotient rule).
    pub fn diff(&self, var: Var) -> Self {
        let dn = self.num.diff(var);
        if self.is_polynomial() {
            return RatFunc::from_poly(dn);
        }
        let dd = self.den.diff(var);
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        RatFunc::reduce(num, self.den.pow(2))
    }

    /// Exact value at a point of ℚ².
    pub fn eval(&self, point: &(BigRational, BigRational)) -> Result<BigRational, ArithError> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(ArithError::PoleAtPoint {
                denominator: self.den.to_string(),
                point: format!("({}, {})", point.0, point.1),
            });
        }
        Ok(self.num.eval(point) / d)
    }

    pub fn display<'a>(&'a self, vars: &'a Variables) -> RatFuncDisplay<'a> {
        RatFuncDisplay { value: self, vars }
    }

    pub fn to_string_with(&self, vars: &Variables) -> String {
        self.display(vars).to_string()
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc::from_poly(&self.num + &rhs.num);
            }
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = mpoly_gcd(&self.den, &rhs.den);
        if g.is_one() {
            // With coprime denominators the cross sum is coprime to their product.
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return RatFunc::zero();
            }
            return RatFunc::with_monic_den(num, &self.den * &rhs.den);
        }
        let a_co = self.den.div_exact(&g).expect("gcd divides");
        let b_co = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &b_co) + &(&rhs.num * &a_co);
        RatFunc::reduce(num, &(&a_co * &b_co) * &g)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel before multiplying so the result is already reduced.
        let g1 = mpoly_gcd(&self.num, &rhs.den);
        let g2 = mpoly_gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        RatFunc::with_monic_den(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned_binop!(RatFunc, Add, add);
forward_owned_binop!(RatFunc, Sub, sub);
forward_owned_binop!(RatFunc, Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<MPoly> for RatFunc {
    fn from(p: MPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<BigRational> for RatFunc {
    fn from(c: BigRational) -> Self {
        RatFunc::constant(c)
    }
}

pub struct RatFuncDisplay<'a> {
    value: &'a RatFunc,
    vars: &'a Variables,
}

impl fmt::Display for RatFuncDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let RatFunc { num, den } = self.value;
        if den.is_one() {
            return num.display(self.vars).fmt(f);
        }
        let wrap_num = num.num_terms() > 1 || num.leading_coefficient() < BigRational::zero();
        if wrap_num {
            write!(f, "({})", num.display(self.vars))?;
        } else {
            write!(f, "{}", num.display(self.vars))?;
        }
        write!(f, "/({})", den.display(self.vars))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(&Variables::default()).fmt(f)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn x() -> RatFunc {
        RatFunc::var(Var::X)
    }
    fn y() -> RatFunc {
        RatFunc::var(Var::Y)
    }

    #[test]
    fn inverse_product_is_one() {
        let a = x().checked_div(&y()).unwrap();
        let b = y().checked_div(&x()).unwrap();
        assert!((&a * &b).is_one());
    }

    #[test]
    fn self_difference_is_zero() {
        let a = (&x() + &y()).checked_div(&(&x() - &RatFunc::one())).unwrap();
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn reduces_common_factor() {
        let num = &x().pow(2) - &y().pow(2);
        let r = num.checked_div(&(&x() - &y())).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r, &x() + &y());
    }

    #[test]
    fn division_by_zero_rejected() {
        assert_eq!(x().checked_div(&RatFunc::zero()), Err(ArithError::DivisionByZero));
        assert!(RatFunc::new(MPoly::one(), MPoly::zero()).is_err());
    }

    #[test]
    fn denominator_is_monic() {
        let r = RatFunc::new(MPoly::one(), MPoly::var(Var::X).scale(&rat(-2, 1))).unwrap();
        assert_eq!(r.denom(), &MPoly::var(Var::X));
        assert_eq!(r.numer(), &MPoly::constant(rat(-1, 2)));
    }

    #[test]
    fn pole_at_point() {
        let r = x().checked_div(&(&x() - &RatFunc::one())).unwrap();
        let err = r.eval(&(rat(1, 1), rat(1, 1))).unwrap_err();
        assert!(matches!(err, ArithError::PoleAtPoint { .. }));
        assert_eq!(r.eval(&(rat(2, 1), rat(0, 1))).unwrap(), rat(2, 1));
    }

    #[test]
    fn quotient_rule() {
        let r = RatFunc::one().checked_div(&x()).unwrap();
        let expected = RatFunc::from_int(-1).checked_div(&x().pow(2)).unwrap();
        assert_eq!(r.diff(Var::X), expected);
        assert!(r.diff(Var::Y).is_zero());
    }

    #[test]
    fn sums_with_shared_denominator_factor() {
        // 1/(x y) + 1/(x (y+1)) = (2y + 1) / (x y (y+1))
        let xy = &x() * &y();
        let xy1 = &x() * &(&y() + &RatFunc::one());
        let s = &RatFunc::one().checked_div(&xy).unwrap() + &RatFunc::one().checked_div(&xy1).unwrap();
        let expected = (&y().scale(&rat(2, 1)) + &RatFunc::one())
            .checked_div(&(&xy * &(&y() + &RatFunc::one())))
            .unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn display() {
        let r = (&x() + &RatFunc::one()).checked_div(&y()).unwrap();
        assert_eq!(r.to_string(), "(x + 1)/(y)");
        let r = RatFunc::constant(rat(-1, 6)).checked_div(&y()).unwrap();
        assert_eq!(r.to_string(), "(-1/6)/(y)");
    }
}
