//! The 24-dimensional quotient ring Q[H1..H4]/(H1^3, H2^2, H3^2, H4^2).

use num_traits::{One, Zero};

use crate::Q;

const DIM: usize = 24;

fn index(a: usize, b: usize, c: usize, d: usize) -> usize {
    ((a * 2 + b) * 2 + c) * 2 + d
}

fn monomial_of(idx: usize) -> (usize, usize, usize, usize) {
    let d = idx % 2;
    let c = (idx / 2) % 2;
    let b = (idx / 4) % 2;
    let a = idx / 8;
    (a, b, c, d)
}

/// An element of Q[H1..H4]/(H1^3, H2^2, H3^2, H4^2), stored on the 24 monomial
/// basis H1^a H2^b H3^c H4^d with a <= 2 and b, c, d <= 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowElement {
    coeffs: Vec<Q>,
}

impl ChowElement {
    pub fn zero() -> Self {
        Self {
            coeffs: vec![Q::zero(); DIM],
        }
    }

    pub fn one() -> Self {
        let mut e = Self::zero();
        e.coeffs[0] = Q::one();
        e
    }

    /// The generator H_i, i in 1..=4.
    pub fn h(i: usize) -> Self {
        assert!((1..=4).contains(&i), "generator index out of range");
        let mut e = Self::zero();
        let idx = match i {
            1 => index(1, 0, 0, 0),
            2 => index(0, 1, 0, 0),
            3 => index(0, 0, 1, 0),
            _ => index(0, 0, 0, 1),
        };
        e.coeffs[idx] = Q::one();
        e
    }

    /// The linear combination c1 H1 + c2 H2 + c3 H3 + c4 H4.
    pub fn linear(c: [Q; 4]) -> Self {
        let mut e = Self::zero();
        e.coeffs[index(1, 0, 0, 0)] = c[0].clone();
        e.coeffs[index(0, 1, 0, 0)] = c[1].clone();
        e.coeffs[index(0, 0, 1, 0)] = c[2].clone();
        e.coeffs[index(0, 0, 0, 1)] = c[3].clone();
        e
    }

    pub fn scalar(c: Q) -> Self {
        let mut e = Self::zero();
        e.coeffs[0] = c;
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Q::is_zero)
    }

    /// Coefficient of the monomial H1^a H2^b H3^c H4^d.
    pub fn coeff(&self, a: usize, b: usize, c: usize, d: usize) -> Q {
        assert!(a <= 2 && b <= 1 && c <= 1 && d <= 1, "monomial out of range");
        self.coeffs[index(a, b, c, d)].clone()
    }

    /// Coefficient of the top class H1^2 H2 H3 H4 (integration pairing).
    pub fn top_pairing(&self) -> Q {
        self.coeffs[index(2, 1, 1, 1)].clone()
    }

    /// Scalar (degree-zero) component.
    pub fn scalar_part(&self) -> Q {
        self.coeffs[0].clone()
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| x - y)
            .collect();
        Self { coeffs }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| -x.clone()).collect(),
        }
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * s).collect(),
        }
    }

    /// Product reduced by the nilpotency relations.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (i, ci) in self.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            let (a1, b1, c1, d1) = monomial_of(i);
            for (j, cj) in other.coeffs.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                let (a2, b2, c2, d2) = monomial_of(j);
                let (a, b, c, d) = (a1 + a2, b1 + b2, c1 + c2, d1 + d2);
                if a > 2 || b > 1 || c > 1 || d > 1 {
                    continue;
                }
                let k = index(a, b, c, d);
                out.coeffs[k] += ci * cj;
            }
        }
        out
    }

    /// Iterates nonzero coefficients as `((a, b, c, d), coefficient)`.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize, usize, usize), &Q)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (monomial_of(i), c))
    }
}
