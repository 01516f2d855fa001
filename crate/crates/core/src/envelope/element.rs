use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use super::monomial::{Letter, Monomial};
use crate::basis::{GradedBasis, Parity};
use crate::identity::Render;
use crate::scalar::Scalar;
use crate::vector::Vector;

/// A finite linear combination of PBW monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EnvElement {
    terms: BTreeMap<Monomial, Scalar>,
}

impl EnvElement {
    pub fn zero() -> Self {
        EnvElement::default()
    }

    pub fn unit() -> Self {
        EnvElement::monomial(Monomial::Unit)
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, Scalar::one());
        EnvElement { terms }
    }

    /// The degree-one element with the coordinates of `v`.
    pub fn lift(basis: &GradedBasis, v: &Vector) -> Self {
        let mut out = EnvElement::zero();
        for (i, c) in v.iter() {
            out.add_term(Monomial::generator(Letter::of(basis, i)), c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &EnvElement) {
        if c.is_zero() {
            return;
        }
        for (m, x) in other.iter() {
            self.add_term(m.clone(), &(c * x));
        }
    }

    pub fn scaled(&self, c: &Scalar) -> EnvElement {
        if c.is_zero() {
            return EnvElement::zero();
        }
        EnvElement {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), c * x)).collect(),
        }
    }

    /// Highest degree present, `None` for zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The homogeneous component of degree `n`.
    pub fn component(&self, n: usize) -> EnvElement {
        EnvElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coordinates of the degree-one component.
    pub fn degree_one_part(&self) -> Vector {
        Vector::from_terms(self.terms.iter().filter_map(|(m, c)| match m {
            Monomial::Word(w) if w.len() == 1 => Some((w[0].index, c.clone())),
            _ => None,
        }))
    }

    /// Parity of a nonzero homogeneous element.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Canonical text form: `c1 m1 + c2 m2 + ...` in monomial order, with
    /// every coefficient printed; `0` for the zero element.
    pub fn render(&self, basis: &GradedBasis) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(m, c)| format!("{} {}", c, m.render(basis)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Render for EnvElement {
    fn render(&self, basis: &GradedBasis) -> String {
        EnvElement::render(self, basis)
    }
}

impl Add<&EnvElement> for &EnvElement {
    type Output = EnvElement;
    fn add(self, rhs: &EnvElement) -> EnvElement {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl Add for EnvElement {
    type Output = EnvElement;
    fn add(mut self, rhs: EnvElement) -> EnvElement {
        self.add_scaled(&Scalar::one(), &rhs);
        self
    }
}

impl Sub<&EnvElement> for &EnvElement {
    type Output = EnvElement;
    fn sub(self, rhs: &EnvElement) -> EnvElement {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

impl Sub for EnvElement {
    type Output = EnvElement;
    fn sub(mut self, rhs: EnvElement) -> EnvElement {
        self.add_scaled(&-Scalar::one(), &rhs);
        self
    }
}
