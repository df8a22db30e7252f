//! Homogeneous vector fields with one shared denominator.
//!
//! A field in n variables stores n polynomial numerators and a single
//! denominator (the constant 1 for polynomial fields).  This mirrors how the
//! superflow candidates arise — the denominator is a group-invariant form —
//! and keeps Reynolds averages cheap: conjugation by a symmetry fixes the
//! denominator, so only numerators move.

use super::{parse_poly, CompiledPoly, ExactMatrix, MPoly, Rat, RatFunc};
use crate::Result;
use num_traits::Zero;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct VectorField {
    nums: Vec<MPoly>,
    den: MPoly,
}

impl VectorField {
    /// Polynomial field (denominator 1).
    pub fn from_polys(nums: Vec<MPoly>) -> Self {
        assert!(!nums.is_empty());
        let nvars = nums[0].nvars();
        assert!(nums.iter().all(|p| p.nvars() == nvars));
        assert_eq!(nums.len(), nvars, "a field has one component per variable");
        VectorField { den: MPoly::one(nvars), nums }
    }

    /// Rational field with a shared denominator.
    pub fn new(nums: Vec<MPoly>, den: MPoly) -> Self {
        assert!(!den.is_zero());
        let nvars = den.nvars();
        assert_eq!(nums.len(), nvars);
        assert!(nums.iter().all(|p| p.nvars() == nvars));
        VectorField { nums, den }
    }

    /// Parse components from text over the given variables (denominator 1).
    pub fn parse(components: &[&str], vars: &[&str]) -> Result<Self> {
        let nums = components
            .iter()
            .map(|c| parse_poly(c, vars))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_polys(nums))
    }

    pub fn nvars(&self) -> usize {
        self.nums.len()
    }

    pub fn numerators(&self) -> &[MPoly] {
        &self.nums
    }

    pub fn denominator(&self) -> &MPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == MPoly::one(self.nvars())
    }

    pub fn is_zero(&self) -> bool {
        self.nums.iter().all(MPoly::is_zero)
    }

    pub fn component(&self, i: usize) -> RatFunc {
        RatFunc::new(self.nums[i].clone(), self.den.clone())
    }

    pub fn components(&self) -> Vec<RatFunc> {
        (0..self.nvars()).map(|i| self.component(i)).collect()
    }

    /// Homogeneity degree (numerator degree − denominator degree), verified
    /// componentwise through the Euler operator `Σ x_i ∂_i p = (deg p)·p`.
    /// `None` when components disagree or some part is inhomogeneous.
    pub fn homogeneity(&self) -> Option<i64> {
        let dd = self.den.homogeneous_degree()?;
        if !self.den.euler_degree_is(dd) {
            return None;
        }
        let mut degree: Option<i64> = None;
        for p in &self.nums {
            if p.is_zero() {
                continue;
            }
            let nd = p.homogeneous_degree()?;
            if !p.euler_degree_is(nd) {
                return None;
            }
            let h = nd as i64 - dd as i64;
            match degree {
                None => degree = Some(h),
                Some(d) if d == h => {}
                Some(_) => return None,
            }
        }
        degree
    }

    /// Divergence `Σ ∂_i (N_i/D)` as a single rational function over `D^2`.
    pub fn divergence(&self) -> RatFunc {
        let n = self.nvars();
        let mut num = MPoly::zero(n);
        for i in 0..n {
            num = &num + &(&(&self.nums[i].partial(i) * &self.den) - &(&self.nums[i] * &self.den.partial(i)));
        }
        RatFunc::new(num, &self.den * &self.den)
    }

    /// `Σ x_i N_i`: zero exactly when the field is tangent to all spheres.
    pub fn radial_numerator(&self) -> MPoly {
        let n = self.nvars();
        let mut s = MPoly::zero(n);
        for i in 0..n {
            s = &s + &(&MPoly::var(n, i) * &self.nums[i]);
        }
        s
    }

    pub fn is_sphere_tangent(&self) -> bool {
        self.radial_numerator().is_zero()
    }

    pub fn is_solenoidal(&self) -> bool {
        self.divergence().is_zero()
    }

    /// Conjugate by M: returns `M^{-1} ∘ V ∘ M`.
    pub fn conjugate(&self, m: &ExactMatrix) -> Result<VectorField> {
        let n = self.nvars();
        assert_eq!(m.n, n);
        let minv = m.inverse()?;
        let moved: Vec<MPoly> = self.nums.iter().map(|p| p.compose_linear(m)).collect();
        let nums = (0..n)
            .map(|i| {
                let mut s = MPoly::zero(n);
                for (j, mv) in moved.iter().enumerate() {
                    let c = minv.at(i, j);
                    if !c.is_zero() {
                        s = &s + &mv.scale(c);
                    }
                }
                s
            })
            .collect();
        Ok(VectorField { nums, den: self.den.compose_linear(m) })
    }

    /// Componentwise sum; denominators must already agree.
    pub fn add_same_den(&self, other: &VectorField) -> VectorField {
        assert_eq!(self.den, other.den, "fields must share a denominator");
        VectorField {
            nums: self
                .nums
                .iter()
                .zip(&other.nums)
                .map(|(a, b)| a + b)
                .collect(),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &Rat) -> VectorField {
        VectorField {
            nums: self.nums.iter().map(|p| p.scale(c)).collect(),
            den: self.den.clone(),
        }
    }

    /// Exact evaluation; `None` at denominator zeros.
    pub fn eval(&self, point: &[Rat]) -> Option<Vec<Rat>> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.nums.iter().map(|p| p.eval(point) / &d).collect())
    }

    pub fn eval_f64(&self, point: &[f64]) -> Option<Vec<f64>> {
        let d = self.den.eval_f64(point);
        if d == 0.0 {
            return None;
        }
        Some(self.nums.iter().map(|p| p.eval_f64(point) / d).collect())
    }

    /// Freeze to f64 for integrator right-hand sides.
    pub fn compile(&self) -> CompiledField {
        CompiledField {
            nums: self.nums.iter().map(MPoly::compile).collect(),
            den: if self.is_polynomial() { None } else { Some(self.den.compile()) },
        }
    }
}

impl fmt::Display for VectorField {
    /// Components joined by the bullet separator the write-ups use.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components().iter().map(|c| format!("{c}")).collect();
        write!(f, "{}", parts.join(" • "))
    }
}

/// f64-frozen field for hot loops.
#[derive(Clone, Debug)]
pub struct CompiledField {
    nums: Vec<CompiledPoly>,
    den: Option<CompiledPoly>,
}

impl CompiledField {
    pub fn nvars(&self) -> usize {
        self.nums.len()
    }

    /// Evaluate into `out`; returns false at a denominator zero.
    pub fn eval_into(&self, x: &[f64], out: &mut [f64]) -> bool {
        let d = match &self.den {
            None => 1.0,
            Some(den) => {
                let d = den.eval(x);
                if d == 0.0 {
                    return false;
                }
                d
            }
        };
        for (o, p) in out.iter_mut().zip(&self.nums) {
            *o = p.eval(x) / d;
        }
        true
    }
}

/// Three-dimensional curl with the quotient rule over the shared denominator:
/// the result has denominator `D^2`.
pub fn curl3(v: &VectorField) -> VectorField {
    assert_eq!(v.nvars(), 3, "curl3 is a 3-variable operation");
    let d = v.denominator();
    let dd = d * d;
    // ∂_j (N_i/D) has numerator (∂_j N_i · D − N_i · ∂_j D) over D².
    let pd = |i: usize, j: usize| -> MPoly {
        &(&v.numerators()[i].partial(j) * d) - &(&v.numerators()[i] * &d.partial(j))
    };
    let nums = vec![
        &pd(2, 1) - &pd(1, 2),
        &pd(0, 2) - &pd(2, 0),
        &pd(1, 0) - &pd(0, 1),
    ];
    VectorField::new(nums, dd)
}

/// Gradient of a scalar polynomial as a polynomial field.
pub fn gradient(p: &MPoly) -> VectorField {
    VectorField::from_polys((0..p.nvars()).map(|i| p.partial(i)).collect())
}

#[cfg(test)]
mod tests {
    use super::super::rint;
    use super::*;

    const XYZ: [&str; 3] = ["x", "y", "z"];

    fn tetra() -> VectorField {
        VectorField::parse(&["y*z", "x*z", "x*y"], &XYZ).unwrap()
    }

    #[test]
    fn tetra_field_is_gradient_and_curl_free() {
        let s = tetra();
        assert_eq!(s.homogeneity(), Some(2));
        assert!(s.is_solenoidal());
        assert!(curl3(&s).is_zero());
        let xyz = parse_poly("x*y*z", &XYZ).unwrap();
        assert_eq!(gradient(&xyz), s);
    }

    #[test]
    fn curl_of_s4_matches_by_hand_expansion() {
        // curl(y³z−yz³ • z³x−zx³ • x³y−xy³) = (2x³−3xy²−3xz², cyclic), and a
        // second curl annihilates it.
        let s4 = VectorField::parse(&["y^3*z - y*z^3", "z^3*x - z*x^3", "x^3*y - x*y^3"], &XYZ).unwrap();
        let s3 = curl3(&s4);
        let expect = VectorField::parse(
            &[
                "2*x^3 - 3*x*y^2 - 3*x*z^2",
                "2*y^3 - 3*x^2*y - 3*y*z^2",
                "2*z^3 - 3*x^2*z - 3*y^2*z",
            ],
            &XYZ,
        )
        .unwrap();
        assert_eq!(s3, expect);
        assert!(curl3(&s3).is_zero());
        // The quarter-scaled cubic field of the tetra note closes the chain:
        // curl ¼(x(z²−y²), y(x²−z²), z(y²−x²)) = (yz, xz, xy).
        let r = VectorField::parse(
            &["1/4*x*z^2 - 1/4*x*y^2", "1/4*x^2*y - 1/4*y*z^2", "1/4*y^2*z - 1/4*x^2*z"],
            &XYZ,
        )
        .unwrap();
        assert_eq!(curl3(&r), tetra());
        assert!(r.is_solenoidal());
    }

    #[test]
    fn conjugation_is_contravariant() {
        let v = tetra();
        let a = ExactMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let b = ExactMatrix::from_i64(&[&[-1, 0, 0], &[0, -1, 0], &[0, 0, 1]]);
        let ab = a.mul(&b);
        let lhs = v.conjugate(&a).unwrap().conjugate(&b).unwrap();
        let rhs = v.conjugate(&ab).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tetra_field_is_invariant_under_its_group() {
        let v = tetra();
        for rows in [
            [[1i64, 0, 0], [0, -1, 0], [0, 0, -1]],
            [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
            [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
        ] {
            let m = ExactMatrix::from_i64(&[&rows[0], &rows[1], &rows[2]]);
            assert_eq!(v.conjugate(&m).unwrap(), v);
        }
    }

    #[test]
    fn rational_octahedral_field_checks() {
        let num = |s: &str| parse_poly(s, &XYZ).unwrap();
        let den = num("x^2 + y^2 + z^2");
        let c = VectorField::new(
            vec![num("y^3*z - y*z^3"), num("z^3*x - z*x^3"), num("x^3*y - x*y^3")],
            den,
        );
        assert_eq!(c.homogeneity(), Some(2));
        assert!(c.is_sphere_tangent());
        assert!(c.is_solenoidal());
        let at = c.eval(&[rint(1), rint(2), rint(3)]).unwrap();
        // (y³z−yz³)/14 = (24−54)/14 etc.
        assert_eq!(at[0], rint(-30) / rint(14));
    }

    #[test]
    fn compiled_field_matches_exact_eval() {
        let v = tetra();
        let c = v.compile();
        let mut out = [0.0; 3];
        assert!(c.eval_into(&[0.3, -0.7, 1.1], &mut out));
        let exact = v.eval_f64(&[0.3, -0.7, 1.1]).unwrap();
        for i in 0..3 {
            assert!((out[i] - exact[i]).abs() < 1e-15);
        }
    }
}
