//! Sparse multivariate polynomials over the exact rationals.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors under the graded
//! lexicographic order, so iteration order — and therefore serialization — is
//! canonical.  Zero coefficients are removed on every write; the zero
//! polynomial is the empty map.

use super::{rat_pow, rat_to_f64, ExactMatrix, Rat};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector with graded-lex ordering (total degree first, then lex).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Expo(pub Vec<u32>);

impl Expo {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise sum; panics past the 2^31 exponent bound.
    fn add(&self, other: &Expo) -> Expo {
        Expo(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| {
                    let s = a.checked_add(*b).expect("exponent exceeds 2^31 bound");
                    assert!(s <= 1 << 31, "exponent exceeds 2^31 bound");
                    s
                })
                .collect(),
        )
    }

    /// `self - other` when every component dominates.
    fn try_sub(&self, other: &Expo) -> Option<Expo> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Expo(out))
    }
}

impl Ord for Expo {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `nvars` variables with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Expo, Rat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Expo(vec![0; nvars]), c);
        }
        p
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Rat::one())
    }

    pub fn monomial(nvars: usize, expo: Vec<u32>, coeff: Rat) -> Self {
        assert_eq!(expo.len(), nvars);
        let mut p = Self::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(Expo(expo), coeff);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &Rat)> {
        self.terms.iter()
    }

    /// Leading (largest graded-lex) term, if any.
    pub fn leading(&self) -> Option<(&Expo, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Add `coeff * x^expo` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, expo: Expo, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(expo.0.len(), self.nvars);
        match self.terms.entry(expo) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, expo: &[u32]) -> Rat {
        self.terms.get(&Expo(expo.to_vec())).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one(self.nvars);
        let mut b = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Expo::degree).max()
    }

    /// `Some(d)` when every term has total degree `d` (zero gives `None`).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Expo::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Split into (degree, component) pairs, ascending in degree.
    pub fn homogeneous_components(&self) -> Vec<(u32, MPoly)> {
        let mut map: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            map.entry(e.degree())
                .or_insert_with(|| MPoly::zero(self.nvars))
                .add_term(e.clone(), c.clone());
        }
        map.into_iter().collect()
    }

    /// Formal partial derivative with respect to `x_i`.
    pub fn partial(&self, i: usize) -> MPoly {
        assert!(i < self.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.0[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne.0[i] -= 1;
            out.add_term(ne, c * Rat::from_integer(e.0[i].into()));
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut s = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    t *= rat_pow(&point[i], k);
                }
            }
            s += t;
        }
        s
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        let mut s = 0.0;
        for (e, c) in &self.terms {
            let mut t = rat_to_f64(c);
            for (i, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    t *= point[i].powi(k as i32);
                }
            }
            s += t;
        }
        s
    }

    /// Freeze into an f64 form for fast repeated evaluation.
    pub fn compile(&self) -> CompiledPoly {
        CompiledPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (rat_to_f64(c), e.0.clone())).collect(),
        }
    }

    /// Substitute `x_i := M x`, i.e. return `p ∘ M`.  Signed permutations take
    /// a term-permuting fast path; general matrices expand row powers.
    pub fn compose_linear(&self, m: &ExactMatrix) -> MPoly {
        assert_eq!(m.n, self.nvars);
        if let Some(sp) = m.signed_permutation() {
            let mut out = MPoly::zero(self.nvars);
            for (e, c) in &self.terms {
                // x_i -> sign[i] * x_{perm[i]}: exponent a_i moves to slot perm[i].
                let mut ne = vec![0u32; self.nvars];
                let mut sgn_neg = false;
                for i in 0..self.nvars {
                    ne[sp.perm[i]] = e.0[i];
                    if sp.sign[i] < 0 && e.0[i] % 2 == 1 {
                        sgn_neg = !sgn_neg;
                    }
                }
                let coeff = if sgn_neg { -c.clone() } else { c.clone() };
                out.add_term(Expo(ne), coeff);
            }
            return out;
        }
        let rows: Vec<MPoly> = (0..self.nvars)
            .map(|i| {
                let mut row = MPoly::zero(self.nvars);
                for j in 0..self.nvars {
                    if !m.at(i, j).is_zero() {
                        row.add_term(Expo({
                            let mut e = vec![0; self.nvars];
                            e[j] = 1;
                            e
                        }), m.at(i, j).clone());
                    }
                }
                row
            })
            .collect();
        self.substitute(&rows)
    }

    /// General composition: replace `x_i` by `subs[i]` (all in the same target
    /// variable set).  Powers of each substituend are cached.
    pub fn substitute(&self, subs: &[MPoly]) -> MPoly {
        assert_eq!(subs.len(), self.nvars);
        let out_vars = subs.first().map(|p| p.nvars).unwrap_or(0);
        assert!(subs.iter().all(|p| p.nvars == out_vars));
        let mut powers: Vec<Vec<MPoly>> = subs.iter().map(|p| vec![MPoly::one(out_vars), p.clone()]).collect();
        let mut out = MPoly::zero(out_vars);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(out_vars, c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &subs[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][k as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Exact division: `Some(q)` with `self = q * div` or `None`.
    pub fn divide_exact(&self, div: &MPoly) -> Option<MPoly> {
        assert_eq!(self.nvars, div.nvars);
        assert!(!div.is_zero(), "division by zero polynomial");
        let (dlm, dlc) = div.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut q = MPoly::zero(self.nvars);
        while let Some((rlm, rlc)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let t = rlm.try_sub(&dlm)?;
            let c = rlc / &dlc;
            let mono = MPoly::monomial(self.nvars, t.0.clone(), c.clone());
            q.add_term(t, c);
            rem = &rem - &(&mono * div);
        }
        Some(q)
    }

    /// Check `Σ x_i ∂_i p = d·p` (Euler's identity for d-homogeneous forms).
    pub fn euler_degree_is(&self, d: u32) -> bool {
        let mut euler = MPoly::zero(self.nvars);
        for i in 0..self.nvars {
            euler = &euler + &(&MPoly::var(self.nvars, i) * &self.partial(i));
        }
        euler == self.scale(&Rat::from_integer(d.into()))
    }

    /// Reduce modulo the unit sphere: rewrite `z^2 -> 1 - x^2 - y^2`
    /// exhaustively (3 variables only).  The result is zero exactly when
    /// `x^2 + y^2 + z^2 - 1` divides the input.
    pub fn reduce_mod_sphere(&self) -> MPoly {
        assert_eq!(self.nvars, 3, "sphere reduction is a 3-variable operation");
        let n = self.nvars;
        let mut p = self.clone();
        loop {
            let mut low = MPoly::zero(n);
            let mut quot = MPoly::zero(n); // coefficient of z^2
            for (e, c) in &p.terms {
                if e.0[2] >= 2 {
                    let mut ne = e.clone();
                    ne.0[2] -= 2;
                    quot.add_term(ne, c.clone());
                } else {
                    low.add_term(e.clone(), c.clone());
                }
            }
            if quot.is_zero() {
                return low;
            }
            // z^2 == 1 - x^2 - y^2 on the sphere.
            let mut repl = MPoly::one(n);
            repl.add_term(Expo(vec![2, 0, 0]), -Rat::one());
            repl.add_term(Expo(vec![0, 2, 0]), -Rat::one());
            p = &low + &(&quot * &repl);
        }
    }

    /// Canonical text form with the given variable names.
    pub fn to_string_with(&self, vars: &[&str]) -> String {
        assert_eq!(vars.len(), self.nvars);
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        // Leading (highest) term first.
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let is_const = e.degree() == 0;
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || is_const {
                factors.push(mag.to_string());
            }
            for (i, &p) in e.0.iter().enumerate() {
                match p {
                    0 => {}
                    1 => factors.push(vars[i].to_string()),
                    _ => factors.push(format!("{}^{}", vars[i], p)),
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        static XYZ: [&str; 3] = ["x", "y", "z"];
        if self.nvars <= 3 {
            write!(f, "{}", self.to_string_with(&XYZ[..self.nvars]))
        } else {
            let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            write!(f, "{}", self.to_string_with(&refs))
        }
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        out
    }
}

/// Coefficients and exponents frozen to f64 for hot loops (orbit right-hand
/// sides, quadrature integrands).
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    nvars: usize,
    terms: Vec<(f64, Vec<u32>)>,
}

impl CompiledPoly {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn eval(&self, point: &[f64]) -> f64 {
        debug_assert_eq!(point.len(), self.nvars);
        let mut s = 0.0;
        for (c, e) in &self.terms {
            let mut t = *c;
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t *= point[i].powi(k as i32);
                }
            }
            s += t;
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rint, rq};
    use super::*;

    fn xyz() -> (MPoly, MPoly, MPoly) {
        (MPoly::var(3, 0), MPoly::var(3, 1), MPoly::var(3, 2))
    }

    #[test]
    fn graded_lex_ordering() {
        // Degree dominates, then lex: y^2 < x*y < x^2 < x^3.
        let e = |v: Vec<u32>| Expo(v);
        assert!(e(vec![0, 2, 0]) < e(vec![1, 1, 0]));
        assert!(e(vec![1, 1, 0]) < e(vec![2, 0, 0]));
        assert!(e(vec![2, 0, 0]) < e(vec![3, 0, 0]));
    }

    #[test]
    fn arithmetic_basics() {
        let (x, y, _) = xyz();
        let p = &(&x + &y) * &(&x - &y);
        let q = &(&x * &x) - &(&y * &y);
        assert_eq!(p, q);
        assert!((&p - &q).is_zero());
    }

    #[test]
    fn partial_and_euler() {
        let (x, y, z) = xyz();
        let p = &(&x * &y) * &z; // xyz, 3-homogeneous
        assert!(p.euler_degree_is(3));
        assert!(!p.euler_degree_is(2));
        assert_eq!(p.partial(0), &y * &z);
    }

    #[test]
    fn homogeneous_components_split() {
        let (x, y, _) = xyz();
        let p = &(&x * &x) + &y;
        let comps = p.homogeneous_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], (1, y));
        assert_eq!(comps[1], (2, &x * &x));
        assert_eq!(p.homogeneous_degree(), None);
    }

    #[test]
    fn divide_exact_finds_cofactor() {
        let (x, y, z) = xyz();
        let sphere = &(&(&x * &x) + &(&y * &y)) + &(&z * &z);
        let p = &sphere * &(&x - &y);
        assert_eq!(p.divide_exact(&sphere), Some(&x - &y));
        assert_eq!(p.divide_exact(&(&x + &z)), None);
    }

    #[test]
    fn reduce_mod_sphere_kills_multiples() {
        let (x, y, z) = xyz();
        let mut sphere_m1 = &(&(&x * &x) + &(&y * &y)) + &(&z * &z);
        sphere_m1.add_term(Expo(vec![0, 0, 0]), rint(-1));
        let witness = &(&x * &y) - &(&z * &z);
        let p = &sphere_m1 * &witness;
        assert!(p.reduce_mod_sphere().is_zero());
        assert!(!witness.reduce_mod_sphere().is_zero());
    }

    #[test]
    fn compose_linear_signed_permutation() {
        let (x, y, z) = xyz();
        // (Mx) = (-y, x, -z)
        let m = ExactMatrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, -1]]);
        let p = &(&x * &x) + &(&y * &z);
        // p(Mx) = y^2 + x*(-z)
        let expect = &(&y * &y) - &(&x * &z);
        assert_eq!(p.compose_linear(&m), expect);
    }

    #[test]
    fn compose_linear_general_matches_substitute() {
        let (x, y, z) = xyz();
        let m = ExactMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let p = &(&x * &y) + &(&z * &z);
        let rows = vec![&x + &y, &y + &z, &x + &z];
        assert_eq!(p.compose_linear(&m), p.substitute(&rows));
    }

    #[test]
    fn eval_exact_and_f64_agree() {
        let (x, y, z) = xyz();
        let p = &(&(&x * &y) * &z) + &MPoly::constant(3, rq(1, 2));
        let at = [rint(2), rint(3), rq(1, 6)];
        assert_eq!(p.eval(&at), rq(3, 2));
        let f = p.eval_f64(&[2.0, 3.0, 1.0 / 6.0]);
        assert!((f - 1.5).abs() < 1e-14);
        assert!((p.compile().eval(&[2.0, 3.0, 1.0 / 6.0]) - 1.5).abs() < 1e-14);
    }

    #[test]
    fn display_graded_lex_descending() {
        let (x, y, _) = xyz();
        let p = &(&(&x * &x) - &(&x * &y).scale(&rint(2))) + &MPoly::constant(3, rq(-1, 2));
        assert_eq!(p.to_string(), "x^2 - 2*x*y - 1/2");
    }
}
