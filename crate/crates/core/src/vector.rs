//! Sparse vectors indexed by basis position.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// A finite linear combination of basis generators. Zero coefficients are
/// never stored, so structural equality is equality of vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector {
    coeffs: BTreeMap<usize, Scalar>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector::default()
    }

    pub fn basis(index: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(index, Scalar::one());
        Vector { coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut v = Vector::zero();
        for (i, c) in terms {
            v.add_term(i, &c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, index: usize) -> Scalar {
        self.coeffs.get(&index).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, index: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(index).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&index);
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Vector) {
        if c.is_zero() {
            return;
        }
        for (i, x) in other.iter() {
            self.add_term(i, &(c * x));
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            coeffs: self.coeffs.iter().map(|(i, x)| (*i, c * x)).collect(),
        }
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(mut self, rhs: Vector) -> Vector {
        self.add_scaled(&Scalar::one(), &rhs);
        self
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(mut self, rhs: Vector) -> Vector {
        self.add_scaled(&-Scalar::one(), &rhs);
        self
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        self.scaled(&-Scalar::one())
    }
}

impl Mul<&Scalar> for Vector {
    type Output = Vector;
    fn mul(self, rhs: &Scalar) -> Vector {
        self.scaled(rhs)
    }
}

impl Mul<&Scalar> for &Vector {
    type Output = Vector;
    fn mul(self, rhs: &Scalar) -> Vector {
        self.scaled(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_dropped() {
        let v = Vector::basis(3);
        assert!((&v - &v).is_zero());
        let w = Vector::from_terms([(1, Scalar::from(2)), (1, Scalar::from(-2)), (2, Scalar::zero())]);
        assert!(w.is_zero());
        assert_eq!(w, Vector::zero());
    }

    #[test]
    fn scaling() {
        let v = Vector::from_terms([(0, Scalar::new(1, 2)), (4, Scalar::from(3))]);
        assert!(v.scaled(&Scalar::zero()).is_zero());
        assert_eq!(v.scaled(&Scalar::from(2)).coeff(0), Scalar::one());
        assert_eq!((-v).coeff(4), Scalar::from(-3));
    }
}
