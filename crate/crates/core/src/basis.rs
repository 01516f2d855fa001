//! Z2 parities and ordered graded bases.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;
use crate::vector::Vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Self {
        if bit & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^p` as a scalar.
    pub fn sign(self) -> Scalar {
        Scalar::sign(self.is_odd())
    }
}

/// Addition in Z2.
impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit((self.bit() + rhs.bit()) % 2)
    }
}

/// Multiplication in Z2, so that `(a * b).sign()` is the Koszul sign `(-1)^{ab}`.
impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() * rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// Koszul sign `(-1)^{ab}` for homogeneous elements of parities `a`, `b`.
pub fn koszul(a: Parity, b: Parity) -> Scalar {
    (a * b).sign()
}

/// A totally ordered list of generator symbols in which every even
/// generator precedes every odd one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    names: Vec<String>,
    parities: Vec<Parity>,
    lookup: HashMap<String, usize>,
}

impl GradedBasis {
    pub fn new<S: Into<String>>(
        even: impl IntoIterator<Item = S>,
        odd: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let symbols = even
            .into_iter()
            .map(|s| (s.into(), Parity::Even))
            .chain(odd.into_iter().map(|s| (s.into(), Parity::Odd)));
        Self::from_symbols(symbols)
    }

    pub fn from_symbols(symbols: impl IntoIterator<Item = (String, Parity)>) -> Result<Self> {
        let mut names = Vec::new();
        let mut parities = Vec::new();
        let mut lookup = HashMap::new();
        let mut seen_odd = false;
        for (name, parity) in symbols {
            if !is_identifier(&name) {
                return Err(AlgebraError::InvalidInput(format!(
                    "`{name}` is not a valid generator name"
                )));
            }
            if lookup.contains_key(&name) {
                return Err(AlgebraError::DuplicateSymbol(name));
            }
            match parity {
                Parity::Odd => seen_odd = true,
                Parity::Even if seen_odd => return Err(AlgebraError::OrderViolation(name)),
                Parity::Even => {}
            }
            lookup.insert(name.clone(), names.len());
            names.push(name);
            parities.push(parity);
        }
        if names.is_empty() {
            return Err(AlgebraError::EmptyBasis);
        }
        Ok(GradedBasis {
            names,
            parities,
            lookup,
        })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn even_dim(&self) -> usize {
        self.parities.iter().filter(|p| **p == Parity::Even).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn parity(&self, index: usize) -> Parity {
        self.parities[index]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.lookup
            .get(name)
            .copied()
            .ok_or_else(|| AlgebraError::UnknownSymbol(name.to_string()))
    }

    pub fn indices(&self) -> std::ops::Range<usize> {
        0..self.dim()
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.dim() {
            Ok(())
        } else {
            Err(AlgebraError::BasisMismatch {
                index,
                dim: self.dim(),
            })
        }
    }

    /// Fails if `v` mentions an index outside this basis.
    pub fn check(&self, v: &Vector) -> Result<()> {
        match v.max_index() {
            Some(i) => self.check_index(i),
            None => Ok(()),
        }
    }

    /// The basis vector for generator `name`.
    pub fn vector(&self, name: &str) -> Result<Vector> {
        Ok(Vector::basis(self.index_of(name)?))
    }

    /// Parity of a nonzero homogeneous vector; `None` for zero or mixed vectors.
    pub fn parity_of(&self, v: &Vector) -> Option<Parity> {
        let mut parity = None;
        for (i, _) in v.iter() {
            let p = self.parities[i];
            match parity {
                None => parity = Some(p),
                Some(q) if q != p => return None,
                Some(_) => {}
            }
        }
        parity
    }

    /// True if `v` is zero or lies entirely in degree `p`.
    pub fn is_homogeneous_of(&self, v: &Vector, p: Parity) -> bool {
        v.iter().all(|(i, _)| self.parities[i] == p)
    }

    /// Splits `v` into its even and odd components.
    pub fn split_parity(&self, v: &Vector) -> (Vector, Vector) {
        let mut even = Vector::zero();
        let mut odd = Vector::zero();
        for (i, c) in v.iter() {
            match self.parities[i] {
                Parity::Even => even.add_term(i, c),
                Parity::Odd => odd.add_term(i, c),
            }
        }
        (even, odd)
    }

    /// Exact sparse sum of scaled vectors over this basis.
    pub fn linear_combine<'a>(
        &self,
        terms: impl IntoIterator<Item = (&'a Scalar, &'a Vector)>,
    ) -> Result<Vector> {
        let mut out = Vector::zero();
        for (c, v) in terms {
            self.check(v)?;
            out.add_scaled(c, v);
        }
        Ok(out)
    }

    /// Renders `v` as `c1 g1 + c2 g2 + ...`, or `0`.
    pub fn format_vector(&self, v: &Vector) -> String {
        if v.is_zero() {
            return "0".to_string();
        }
        v.iter()
            .map(|(i, c)| format!("{} {}", c, self.names[i]))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Compact rendering used in printed tables: `-2e3`, `e5`, `(1/2)e1 - e2`.
    pub fn format_compact(&self, v: &Vector) -> String {
        if v.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (i, c)) in v.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                if abs.is_integer() {
                    out.push_str(&abs.to_string());
                } else {
                    out.push_str(&format!("({abs})"));
                }
            }
            out.push_str(&self.names[i]);
        }
        out
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_arithmetic() {
        assert_eq!(Parity::Odd + Parity::Odd, Parity::Even);
        assert_eq!(Parity::Odd + Parity::Even, Parity::Odd);
        assert_eq!(koszul(Parity::Odd, Parity::Odd), -Scalar::one());
        assert_eq!(koszul(Parity::Odd, Parity::Even), Scalar::one());
    }

    #[test]
    fn even_symbols_come_first() {
        let b = GradedBasis::new(["a", "b"], ["x"]).unwrap();
        assert_eq!(b.index_of("x").unwrap(), 2);
        assert_eq!(b.parity(2), Parity::Odd);
        let bad = GradedBasis::from_symbols(vec![
            ("x".to_string(), Parity::Odd),
            ("a".to_string(), Parity::Even),
        ]);
        assert_eq!(bad, Err(AlgebraError::OrderViolation("a".into())));
    }

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(matches!(
            GradedBasis::new(["a", "a"], Vec::<&str>::new()),
            Err(AlgebraError::DuplicateSymbol(_))
        ));
        assert!(GradedBasis::new(["1"], Vec::<&str>::new()).is_err());
        assert_eq!(
            GradedBasis::new(Vec::<&str>::new(), Vec::<&str>::new()),
            Err(AlgebraError::EmptyBasis)
        );
    }

    #[test]
    fn linear_combine_examples() {
        let b = GradedBasis::new(["e1", "e2"], Vec::<&str>::new()).unwrap();
        let e1 = Vector::basis(0);
        let e2 = Vector::basis(1);
        let one = Scalar::one();
        let minus = -Scalar::one();
        assert!(b
            .linear_combine([(&one, &e1), (&minus, &e1)])
            .unwrap()
            .is_zero());
        let (two, three) = (Scalar::from(2), Scalar::from(3));
        assert_eq!(
            b.linear_combine([(&two, &e1), (&three, &e1)]).unwrap(),
            Vector::from_terms([(0, Scalar::from(5))])
        );
        let (h, t) = (Scalar::new(1, 2), Scalar::new(1, 3));
        let v = b.linear_combine([(&h, &e1), (&t, &e2)]).unwrap();
        assert_eq!(b.format_vector(&v), "1/2 e1 + 1/3 e2");
        let stray = Vector::basis(5);
        assert_eq!(
            b.linear_combine([(&one, &stray)]),
            Err(AlgebraError::BasisMismatch { index: 5, dim: 2 })
        );
    }

    #[test]
    fn homogeneity() {
        let b = GradedBasis::new(["a"], ["x", "y"]).unwrap();
        let mixed = Vector::from_terms([(0, Scalar::one()), (1, Scalar::one())]);
        assert_eq!(b.parity_of(&mixed), None);
        assert_eq!(b.parity_of(&Vector::basis(2)), Some(Parity::Odd));
        let (e, o) = b.split_parity(&mixed);
        assert_eq!(e, Vector::basis(0));
        assert_eq!(o, Vector::basis(1));
        assert_eq!(b.format_compact(&(Vector::basis(1) * &Scalar::from(-2))), "-2x");
    }
}
