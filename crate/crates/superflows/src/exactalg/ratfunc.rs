//! Rational functions `num/den` kept **unreduced**: no gcd computation ever
//! runs behind the caller's back.  Equality is decided by cross-multiplication,
//! so `x/x == 1` holds as values even though the representations differ.

use super::{MPoly, Rat};
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Debug)]
pub struct RatFunc {
    pub num: MPoly,
    pub den: MPoly,
}

impl RatFunc {
    pub fn new(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        assert_eq!(num.nvars(), den.nvars());
        RatFunc { num, den }
    }

    pub fn from_poly(num: MPoly) -> Self {
        let den = MPoly::one(num.nvars());
        RatFunc { num, den }
    }

    pub fn zero(nvars: usize) -> Self {
        RatFunc::from_poly(MPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        RatFunc::from_poly(MPoly::one(nvars))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Degree as a homogeneous rational function: numerator degree minus
    /// denominator degree.  `None` when either part is inhomogeneous or the
    /// numerator is zero.
    pub fn homogeneity(&self) -> Option<i64> {
        let nd = self.num.homogeneous_degree()? as i64;
        let dd = self.den.homogeneous_degree()? as i64;
        Some(nd - dd)
    }

    /// Partial derivative by the quotient rule; denominator becomes `den^2`.
    pub fn partial(&self, i: usize) -> RatFunc {
        let num = &(&self.num.partial(i) * &self.den) - &(&self.num * &self.den.partial(i));
        RatFunc::new(num, &self.den * &self.den)
    }

    /// Exact evaluation; `None` on a denominator zero.
    pub fn eval(&self, point: &[Rat]) -> Option<Rat> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }

    pub fn eval_f64(&self, point: &[f64]) -> Option<f64> {
        let d = self.den.eval_f64(point);
        if d == 0.0 {
            return None;
        }
        Some(self.num.eval_f64(point) / d)
    }

    /// Cancel every common factor `d` (a fixed polynomial) that divides both
    /// parts exactly.  Used to keep Taylor denominators at their true power.
    pub fn cancel_factor(&self, d: &MPoly) -> RatFunc {
        let mut out = self.clone();
        loop {
            match (out.num.divide_exact(d), out.den.divide_exact(d)) {
                (Some(n), Some(dd)) if !dd.is_zero() => {
                    out = RatFunc { num: n, den: dd };
                }
                _ => return out,
            }
        }
    }

    /// Substitute each variable by a rational function with a **common**
    /// denominator: `x_i := nums[i]/den`.  Requires a homogeneous numerator and
    /// denominator (which is all this crate composes), so that
    /// `p(N_1/D, …) = P(N_1, …)/D^{deg p}` termwise.
    pub fn substitute_homogeneous(&self, nums: &[MPoly], den: &MPoly) -> RatFunc {
        let sub = |p: &MPoly| -> (MPoly, u32) {
            if p.is_zero() {
                return (MPoly::zero(den.nvars()), 0);
            }
            let deg = p
                .homogeneous_degree()
                .expect("substitute_homogeneous needs homogeneous parts");
            (p.substitute(nums), deg)
        };
        let (pn, dn) = sub(&self.num);
        let (pd, dd) = sub(&self.den);
        // num/den = pn * D^{dd} / (pd * D^{dn}); cancel the common power.
        let (extra_n, extra_d) = if dd >= dn { (dd - dn, 0) } else { (0, dn - dd) };
        RatFunc::new(&pn * &den.pow(extra_n), &pd * &den.pow(extra_d))
    }
}

impl PartialEq for RatFunc {
    /// Value equality by cross-multiplication.
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == MPoly::one(self.den.nvars()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.num.is_zero(), "division by zero rational function");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse_poly, rint};
    use super::*;

    const XY: [&str; 2] = ["x", "y"];

    fn rf(n: &str, d: &str) -> RatFunc {
        RatFunc::new(parse_poly(n, &XY).unwrap(), parse_poly(d, &XY).unwrap())
    }

    #[test]
    fn cross_multiplication_equality() {
        // x/x == 1 as values, even unreduced.
        assert_eq!(rf("x", "x"), RatFunc::one(2));
        assert_eq!(rf("x^2 - y^2", "x - y"), rf("x^2 + x*y", "x"));
        assert_ne!(rf("x", "y"), rf("y", "x"));
    }

    #[test]
    fn field_axioms_spot_checks() {
        let a = rf("x", "y");
        let b = rf("y", "x + y");
        let c = rf("x - y", "x");
        let left = &(&a + &b) + &c;
        let right = &a + &(&b + &c);
        assert_eq!(left, right);
        let dist = &(&a + &b) * &c;
        let expand = &(&a * &c) + &(&b * &c);
        assert_eq!(dist, expand);
        assert_eq!(&(&a / &b) * &b, a);
    }

    #[test]
    fn quotient_rule_partial() {
        // d/dx (x^2/y) = 2x/y
        let f = rf("x^2", "y");
        assert_eq!(f.partial(0), rf("2*x", "y"));
        // d/dy (x^2/y) = -x^2/y^2
        assert_eq!(f.partial(1), rf("-x^2", "y^2"));
    }

    #[test]
    fn homogeneity_degree() {
        assert_eq!(rf("x^3 - x*y^2", "x*y").homogeneity(), Some(1));
        assert_eq!(rf("x", "x^2 + y^2").homogeneity(), Some(-1));
        assert_eq!(rf("x + x^2", "y").homogeneity(), None);
    }

    #[test]
    fn cancel_factor_reduces_true_power() {
        let d = parse_poly("x + y", &XY).unwrap();
        let f = RatFunc::new(
            &parse_poly("x", &XY).unwrap() * &(&d * &d),
            &d * &d,
        );
        let g = f.cancel_factor(&d);
        assert_eq!(g.den, MPoly::one(2));
        assert_eq!(g.num, parse_poly("x", &XY).unwrap());
        assert_eq!(f, g);
    }

    #[test]
    fn eval_guards_poles() {
        let f = rf("x", "x - y");
        assert_eq!(f.eval(&[rint(2), rint(1)]), Some(rint(2)));
        assert_eq!(f.eval(&[rint(1), rint(1)]), None);
    }
}
