//! Exact arithmetic: arbitrary-precision rationals, sparse multivariate
//! polynomials in graded-lex order, rational functions kept unreduced, and
//! homogeneous vector fields with a shared denominator.
//!
//! Everything downstream (Reynolds averaging, first integrals, Taylor flows,
//! resultants) reduces to the handful of primitives defined here, so the
//! invariants are strict: rationals are always gcd-reduced with positive
//! denominator (guaranteed by the representation), polynomials never store a
//! zero coefficient, and rational-function equality is decided by
//! cross-multiplication rather than normal forms.

mod mpoly;
mod parse;
mod ratfunc;
mod vfield;

pub use mpoly::{CompiledPoly, Expo, MPoly};
pub use parse::parse_poly;
pub use ratfunc::RatFunc;
pub use vfield::{curl3, gradient, CompiledField, VectorField};

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar: arbitrary-precision, gcd-reduced, denominator > 0.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `num/den` (reduced on construction).
pub fn rq(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` by repeated squaring.
pub fn rat_pow(base: &Rat, exp: u32) -> Rat {
    let mut acc = Rat::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// Nearest f64 to an exact rational (used only when leaving the exact layer).
pub fn rat_to_f64(r: &Rat) -> f64 {
    // Scale into i128 range first so huge numerators keep ~15 digits.
    let (n, d) = (r.numer(), r.denom());
    match (n.to_string().parse::<f64>(), d.to_string().parse::<f64>()) {
        (Ok(nf), Ok(df)) if nf.is_finite() && df.is_finite() && df != 0.0 => nf / df,
        _ => {
            // Fall back to a digit-limited quotient.
            let bits = n.bits().max(d.bits()) as i64 - 500;
            let shift = bits.max(0) as u64;
            let nf = (n >> shift).to_string().parse::<f64>().unwrap_or(f64::NAN);
            let df = (d >> shift).to_string().parse::<f64>().unwrap_or(f64::NAN);
            nf / df
        }
    }
}

/// A signed permutation: `(Mx)_i = sign[i] * x[perm[i]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPerm {
    pub perm: Vec<usize>,
    pub sign: Vec<i8>,
}

/// Dense square matrix with exact rational entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExactMatrix {
    pub n: usize,
    pub a: Vec<Rat>,
}

impl ExactMatrix {
    pub fn identity(n: usize) -> Self {
        let mut a = vec![Rat::zero(); n * n];
        for i in 0..n {
            a[i * n + i] = Rat::one();
        }
        ExactMatrix { n, a }
    }

    /// Build from rows of integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        let a = rows.iter().flat_map(|r| r.iter().map(|&v| rint(v))).collect();
        ExactMatrix { n, a }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        ExactMatrix { n, a: rows.into_iter().flatten().collect() }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.a[i * self.n + j]
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut a = vec![Rat::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let s = self.at(i, k);
                if s.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = other.at(k, j);
                    if !t.is_zero() {
                        a[i * n + j] += s * t;
                    }
                }
            }
        }
        ExactMatrix { n, a }
    }

    pub fn transpose(&self) -> ExactMatrix {
        let n = self.n;
        let mut a = vec![Rat::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                a[j * n + i] = self.at(i, j).clone();
            }
        }
        ExactMatrix { n, a }
    }

    /// Matrix inverse by Gauss-Jordan elimination; `Err` when singular.
    pub fn inverse(&self) -> Result<ExactMatrix> {
        let n = self.n;
        let mut m: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rat> = self.a[i * n..(i + 1) * n].to_vec();
                let mut id = vec![Rat::zero(); n];
                id[i] = Rat::one();
                row.extend(id);
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .ok_or_else(|| Error::Domain("singular matrix has no inverse".into()))?;
            m.swap(col, pivot);
            let inv = m[col][col].recip();
            for v in m[col].iter_mut() {
                *v *= &inv;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for j in 0..2 * n {
                        let sub = &f * &m[col][j];
                        m[r][j] -= sub;
                    }
                }
            }
        }
        Ok(ExactMatrix {
            n,
            a: m.into_iter().flat_map(|row| row.into_iter().skip(n)).collect(),
        })
    }

    pub fn det(&self) -> Rat {
        let n = self.n;
        let mut m: Vec<Vec<Rat>> = (0..n).map(|i| self.a[i * n..(i + 1) * n].to_vec()).collect();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Rat::zero();
            };
            if pivot != col {
                m.swap(col, pivot);
                det = -det;
            }
            det *= &m[col][col];
            let inv = m[col][col].recip();
            for r in col + 1..n {
                if !m[r][col].is_zero() {
                    let f = &m[r][col] * &inv;
                    for j in col..n {
                        let sub = &f * &m[col][j];
                        m[r][j] -= sub;
                    }
                }
            }
        }
        det
    }

    /// Detect a signed permutation matrix (exactly one ±1 per row and column).
    pub fn signed_permutation(&self) -> Option<SignedPerm> {
        let n = self.n;
        let mut perm = vec![usize::MAX; n];
        let mut sign = vec![0i8; n];
        let mut seen = vec![false; n];
        for i in 0..n {
            for j in 0..n {
                let v = self.at(i, j);
                if v.is_zero() {
                    continue;
                }
                if perm[i] != usize::MAX || seen[j] {
                    return None;
                }
                if v == &Rat::one() {
                    sign[i] = 1;
                } else if v == &-Rat::one() {
                    sign[i] = -1;
                } else {
                    return None;
                }
                perm[i] = j;
                seen[j] = true;
            }
            if perm[i] == usize::MAX {
                return None;
            }
        }
        Some(SignedPerm { perm, sign })
    }

    /// Apply to an exact column vector.
    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| {
                let mut s = Rat::zero();
                for j in 0..self.n {
                    if !self.at(i, j).is_zero() {
                        s += self.at(i, j) * &x[j];
                    }
                }
                s
            })
            .collect()
    }

    /// Apply to an f64 column vector.
    pub fn apply_f64(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| rat_to_f64(self.at(i, j)) * x[j]).sum())
            .collect()
    }

    /// Deterministic dedup key.
    pub fn key(&self) -> String {
        let mut s = String::new();
        for v in &self.a {
            s.push_str(&v.to_string());
            s.push(',');
        }
        s
    }
}

/// True when `|r|`'s numerator/denominator fit the bound (sanity guard used by
/// tests; the arithmetic itself is unbounded).
pub fn rat_abs_le(r: &Rat, bound: i64) -> bool {
    r.abs() <= rint(bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_reduce() {
        assert_eq!(rq(2, 4), rq(1, 2));
        assert_eq!(rq(3, -6), rq(-1, 2));
        assert!(rq(-1, 2).denom() > &BigInt::zero());
    }

    #[test]
    fn rat_pow_matches_repeated_mul() {
        let b = rq(3, 7);
        let mut acc = Rat::one();
        for k in 0..10 {
            assert_eq!(rat_pow(&b, k), acc);
            acc *= &b;
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = ExactMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), ExactMatrix::identity(3));
        assert_eq!(m.det(), rint(1));
    }

    #[test]
    fn signed_permutation_detection() {
        let m = ExactMatrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, -1]]);
        let sp = m.signed_permutation().unwrap();
        assert_eq!(sp.perm, vec![1, 0, 2]);
        assert_eq!(sp.sign, vec![-1, 1, -1]);
        // The S4 representation matrix is not a signed permutation.
        let k = ExactMatrix::from_i64(&[&[-1, 0, 0], &[-1, 1, 0], &[-1, 0, 1]]);
        assert!(k.signed_permutation().is_none());
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(m.inverse().is_err());
        assert_eq!(m.det(), rint(0));
    }
}
