use crate::akivis::AkivisSpec;
use crate::basis::{koszul, GradedBasis, Parity};
use crate::scalar::Scalar;
use crate::vector::Vector;

/// An element of the free nonassociative graded tensor algebra, kept fully
/// parenthesized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MagmaTerm {
    /// The scalar `1` in degree zero.
    Unit,
    Gen(usize),
    Scaled(Scalar, Box<MagmaTerm>),
    Sum(Vec<MagmaTerm>),
    Product(Box<MagmaTerm>, Box<MagmaTerm>),
}

impl MagmaTerm {
    pub fn gen(index: usize) -> Self {
        MagmaTerm::Gen(index)
    }

    pub fn product(left: MagmaTerm, right: MagmaTerm) -> Self {
        MagmaTerm::Product(Box::new(left), Box::new(right))
    }

    pub fn scaled(c: Scalar, t: MagmaTerm) -> Self {
        MagmaTerm::Scaled(c, Box::new(t))
    }

    pub fn sum(terms: impl IntoIterator<Item = MagmaTerm>) -> Self {
        MagmaTerm::Sum(terms.into_iter().collect())
    }

    /// `left - right`.
    pub fn difference(left: MagmaTerm, right: MagmaTerm) -> Self {
        MagmaTerm::sum([left, MagmaTerm::scaled(-Scalar::one(), right)])
    }

    /// The degree-one term with the coordinates of `v`.
    pub fn from_vector(v: &Vector) -> Self {
        MagmaTerm::sum(
            v.iter()
                .map(|(i, c)| MagmaTerm::scaled(c.clone(), MagmaTerm::gen(i))),
        )
    }

    /// Tensor degree of a homogeneous term; `None` when summands disagree.
    /// An empty sum is treated as having no degree.
    pub fn degree(&self) -> Option<usize> {
        match self {
            MagmaTerm::Unit => Some(0),
            MagmaTerm::Gen(_) => Some(1),
            MagmaTerm::Scaled(_, t) => t.degree(),
            MagmaTerm::Sum(ts) => {
                let mut it = ts.iter().map(MagmaTerm::degree);
                let first = it.next()??;
                it.all(|d| d == Some(first)).then_some(first)
            }
            MagmaTerm::Product(l, r) => Some(l.degree()? + r.degree()?),
        }
    }

    /// Z2 parity of a homogeneous term.
    pub fn parity(&self, basis: &GradedBasis) -> Option<Parity> {
        match self {
            MagmaTerm::Unit => Some(Parity::Even),
            MagmaTerm::Gen(i) => Some(basis.parity(*i)),
            MagmaTerm::Scaled(_, t) => t.parity(basis),
            MagmaTerm::Sum(ts) => {
                let mut it = ts.iter().map(|t| t.parity(basis));
                let first = it.next()??;
                it.all(|p| p == Some(first)).then_some(first)
            }
            MagmaTerm::Product(l, r) => Some(l.parity(basis)? + r.parity(basis)?),
        }
    }

    pub fn render(&self, basis: &GradedBasis) -> String {
        match self {
            MagmaTerm::Unit => "1".to_string(),
            MagmaTerm::Gen(i) => basis.name(*i).to_string(),
            MagmaTerm::Scaled(c, t) => format!("{} {}", c, t.render(basis)),
            MagmaTerm::Sum(ts) if ts.is_empty() => "0".to_string(),
            MagmaTerm::Sum(ts) => format!(
                "({})",
                ts.iter()
                    .map(|t| t.render(basis))
                    .collect::<Vec<_>>()
                    .join(" + ")
            ),
            MagmaTerm::Product(l, r) => format!("({} * {})", l.render(basis), r.render(basis)),
        }
    }
}

/// `x ⊗ y - (-1)^{αβ} y ⊗ x - [x, y]` for basis generators `x = e_i`, `y = e_j`.
pub fn bracket_relation(spec: &AkivisSpec, i: usize, j: usize) -> MagmaTerm {
    let sign = koszul(spec.parity(i), spec.parity(j));
    MagmaTerm::sum([
        MagmaTerm::product(MagmaTerm::gen(i), MagmaTerm::gen(j)),
        MagmaTerm::scaled(-sign, MagmaTerm::product(MagmaTerm::gen(j), MagmaTerm::gen(i))),
        MagmaTerm::scaled(-Scalar::one(), MagmaTerm::from_vector(spec.bracket(i, j))),
    ])
}

/// `(x ⊗ y) ⊗ z - x ⊗ (y ⊗ z) - A(x, y, z)` for basis generators.
pub fn associator_relation(spec: &AkivisSpec, i: usize, j: usize, k: usize) -> MagmaTerm {
    let (x, y, z) = (MagmaTerm::gen(i), MagmaTerm::gen(j), MagmaTerm::gen(k));
    MagmaTerm::sum([
        MagmaTerm::product(MagmaTerm::product(x.clone(), y.clone()), z.clone()),
        MagmaTerm::scaled(
            -Scalar::one(),
            MagmaTerm::product(x, MagmaTerm::product(y, z)),
        ),
        MagmaTerm::scaled(-Scalar::one(), MagmaTerm::from_vector(spec.ternary(i, j, k))),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_and_parity() {
        let basis = GradedBasis::new(["a"], ["x", "y"]).unwrap();
        let t = MagmaTerm::product(
            MagmaTerm::product(MagmaTerm::gen(1), MagmaTerm::gen(2)),
            MagmaTerm::gen(0),
        );
        assert_eq!(t.degree(), Some(3));
        assert_eq!(t.parity(&basis), Some(Parity::Even));
        let mixed = MagmaTerm::sum([MagmaTerm::gen(0), t.clone()]);
        assert_eq!(mixed.degree(), None);
        assert_eq!(t.render(&basis), "((x * y) * a)");
    }
}
