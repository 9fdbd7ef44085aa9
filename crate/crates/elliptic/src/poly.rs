//! Exact univariate polynomials and reduced rational functions over the
//! rationals.

use num_traits::{One, Signed, Zero};

use crate::{EllipticError, Q};

/// Dense univariate polynomial: `coeffs[i]` multiplies `x^i`, with no
/// trailing zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    /// The monomial `c x^n`.
    pub fn monomial(n: usize, c: Q) -> Self {
        let mut coeffs = vec![Q::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(1, Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, n: usize) -> Q {
        self.coeffs.get(n).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn divmod(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let lead = d.leading();
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let step = Self::monomial(dr - dd, r.leading() / &lead);
            q = q.add(&step);
            r = r.sub(&step.mul(d));
        }
        (q, r)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lead = a.leading();
            a.scale(&(Q::one() / lead))
        }
    }

    /// Replaces `x^step` by the given polynomial; every exponent must be a
    /// multiple of `step`.
    pub fn substitute_power(&self, step: usize, replacement: &Self) -> Result<Self, EllipticError> {
        assert!(step > 0);
        let mut out = Self::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i % step != 0 {
                return Err(EllipticError::IndivisibleExponent {
                    exponent: i,
                    step,
                });
            }
            out = out.add(&replacement.pow((i / step) as u32).scale(c));
        }
        Ok(out)
    }

    /// Largest absolute value among the coefficients.
    pub fn max_abs_coeff(&self) -> Q {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(Q::zero)
    }
}

/// A rational function stored in lowest terms with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self, EllipticError> {
        if den.is_zero() {
            return Err(EllipticError::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_zero() {
            (num, den)
        } else {
            (num.divmod(&g).0, den.divmod(&g).0)
        };
        let lead = den.leading();
        Ok(Self {
            num: num.scale(&(Q::one() / &lead)),
            den: den.scale(&(Q::one() / &lead)),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        Self {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self, EllipticError> {
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self, EllipticError> {
        Self::new(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &Self) -> Result<Self, EllipticError> {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Result<Self, EllipticError> {
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Evaluation, failing at poles.
    pub fn eval(&self, x: &Q) -> Result<Q, EllipticError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(EllipticError::PoleInput(x.clone()));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Composition `self(inner)` of rational functions.
    pub fn compose(&self, inner: &Self) -> Result<Self, EllipticError> {
        let d = self
            .num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0));
        let assemble = |p: &Poly| {
            let mut out = Poly::zero();
            for i in 0..=d {
                let c = p.coeff(i);
                if c.is_zero() {
                    continue;
                }
                let term = inner
                    .num
                    .pow(i as u32)
                    .mul(&inner.den.pow((d - i) as u32))
                    .scale(&c);
                out = out.add(&term);
            }
            out
        };
        Self::new(assemble(&self.num), assemble(&self.den))
    }

    /// Replaces `x^step` by a polynomial in both numerator and denominator.
    pub fn substitute_power(
        &self,
        step: usize,
        replacement: &Poly,
    ) -> Result<Self, EllipticError> {
        Self::new(
            self.num.substitute_power(step, replacement)?,
            self.den.substitute_power(step, replacement)?,
        )
    }
}
