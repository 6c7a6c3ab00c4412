//! Polynomials with exact rational coefficients.

use num::{BigInt, BigRational, One, Signed, Zero};

/// A polynomial over the rationals, coefficients stored in ascending degree.
///
/// The zero polynomial is the empty coefficient list; otherwise the leading
/// coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPolynomial {
    coeffs: Vec<BigRational>,
}

impl ExactPolynomial {
    pub fn zero() -> Self {
        ExactPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = ExactPolynomial { coeffs: vec![c] };
        p.normalize();
        p
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = ExactPolynomial { coeffs };
        p.normalize();
        p
    }

    /// The linear polynomial `a*t + b`.
    pub fn linear(a: BigRational, b: BigRational) -> Self {
        ExactPolynomial::from_coeffs(vec![b, a])
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_int(&self, t: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(t)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        ExactPolynomial::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        ExactPolynomial::from_coeffs(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ExactPolynomial::zero();
        }
        let mut out =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPolynomial::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        ExactPolynomial::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Product of linear factors `a*t + b`.
    pub fn from_linear_factors<I>(factors: I) -> Self
    where
        I: IntoIterator<Item = (BigRational, BigRational)>,
    {
        let mut acc = ExactPolynomial::constant(BigRational::one());
        for (a, b) in factors {
            acc = acc.mul(&ExactPolynomial::linear(a, b));
        }
        acc
    }

    /// Unique interpolating polynomial through `(x_i, y_i)` with distinct `x_i`.
    ///
    /// Newton's divided differences, exact over the rationals.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Self {
        assert!(!points.is_empty(), "need at least one interpolation point");
        let n = points.len();
        let mut diffs: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
        let xs: Vec<BigRational> = points.iter().map(|(x, _)| x.clone()).collect();
        // diffs[i] becomes the divided difference f[x_0..x_i]
        for level in 1..n {
            for i in (level..n).rev() {
                let dx = &xs[i] - &xs[i - level];
                assert!(!dx.is_zero(), "interpolation points must be distinct");
                diffs[i] = (&diffs[i] - &diffs[i - 1]) / dx;
            }
        }
        // expand the Newton form
        let mut acc = ExactPolynomial::zero();
        for i in (0..n).rev() {
            acc = acc.mul(&ExactPolynomial::linear(
                BigRational::one(),
                -xs[i].clone(),
            ));
            acc = acc.add(&ExactPolynomial::constant(diffs[i].clone()));
        }
        acc
    }

    /// True when every coefficient is nonnegative.
    ///
    /// This certifies `p(t) >= 0` for all real `t >= 0`, which is how the
    /// composite injection certificates are checked.
    pub fn coeffs_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// The polynomial `t -> p(t + c)`.
    pub fn shift(&self, c: &BigRational) -> Self {
        let mut acc = ExactPolynomial::zero();
        let x_plus_c = ExactPolynomial::linear(BigRational::one(), c.clone());
        for coeff in self.coeffs.iter().rev() {
            acc = acc.mul(&x_plus_c);
            acc = acc.add(&ExactPolynomial::constant(coeff.clone()));
        }
        acc
    }
}
