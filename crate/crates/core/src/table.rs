//! Superalgebras given by structure constants.

use crate::akivis::AkivisSpec;
use crate::basis::{koszul, GradedBasis};
use crate::error::{AlgebraError, Result};
use crate::vector::Vector;

/// A finite-dimensional superalgebra `W` given by the products of all
/// ordered pairs of basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperTable {
    basis: GradedBasis,
    // row-major, `product[a * dim + b]` is `e_a e_b`
    product: Vec<Vector>,
    unit: Option<usize>,
}

impl SuperTable {
    /// Builds a table from its nonzero entries; unspecified products are zero.
    /// Checks grading closure and, when `unit` is given, the unit axiom.
    pub fn new(
        basis: GradedBasis,
        entries: impl IntoIterator<Item = ((usize, usize), Vector)>,
        unit: Option<usize>,
    ) -> Result<Self> {
        let dim = basis.dim();
        let mut product = vec![Vector::zero(); dim * dim];
        for ((a, b), v) in entries {
            basis.check_index(a)?;
            basis.check_index(b)?;
            basis.check(&v)?;
            product[a * dim + b] = v;
        }
        let table = SuperTable {
            basis,
            product,
            unit,
        };
        table.validate()?;
        Ok(table)
    }

    pub fn from_fn(
        basis: GradedBasis,
        unit: Option<usize>,
        mut f: impl FnMut(usize, usize) -> Vector,
    ) -> Result<Self> {
        let dim = basis.dim();
        let entries: Vec<_> = (0..dim)
            .flat_map(|a| (0..dim).map(move |b| (a, b)))
            .map(|(a, b)| ((a, b), f(a, b)))
            .collect();
        Self::new(basis, entries, unit)
    }

    fn validate(&self) -> Result<()> {
        let dim = self.basis.dim();
        for a in 0..dim {
            for b in 0..dim {
                let expected = self.basis.parity(a) + self.basis.parity(b);
                if !self.basis.is_homogeneous_of(self.product(a, b), expected) {
                    return Err(AlgebraError::GradingViolation {
                        entry: format!("{} {}", self.basis.name(a), self.basis.name(b)),
                        expected,
                    });
                }
            }
        }
        if let Some(u) = self.unit {
            self.basis.check_index(u)?;
            for a in 0..dim {
                let ea = Vector::basis(a);
                if self.product(u, a) != &ea || self.product(a, u) != &ea {
                    return Err(AlgebraError::NotUnital {
                        unit: self.basis.name(u).to_string(),
                        other: self.basis.name(a).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    /// The structure constant `e_a e_b`.
    pub fn product(&self, a: usize, b: usize) -> &Vector {
        &self.product[a * self.dim() + b]
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.basis.check(x)?;
        self.basis.check(y)?;
        let mut out = Vector::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_scaled(&(ca * cb), self.product(a, b));
            }
        }
        Ok(out)
    }

    /// `[e_a, e_b] = e_a e_b - (-1)^{ab} e_b e_a`.
    pub fn basis_commutator(&self, a: usize, b: usize) -> Vector {
        let sign = koszul(self.basis.parity(a), self.basis.parity(b));
        let mut out = self.product(a, b).clone();
        out.add_scaled(&-sign, self.product(b, a));
        out
    }

    /// Super-commutator `xy - (-1)^{αβ} yx`, extended bilinearly over the
    /// parity components of non-homogeneous arguments.
    pub fn super_commutator(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.basis.check(x)?;
        self.basis.check(y)?;
        let mut out = Vector::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_scaled(&(ca * cb), &self.basis_commutator(a, b));
            }
        }
        Ok(out)
    }

    /// Associator `(xy)z - x(yz)`.
    pub fn associator(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        let left = self.multiply(&self.multiply(x, y)?, z)?;
        let right = self.multiply(x, &self.multiply(y, z)?)?;
        Ok(left - right)
    }

    /// True if every basis triple associates.
    pub fn is_associative(&self) -> bool {
        let dim = self.dim();
        (0..dim).all(|a| {
            (0..dim).all(|b| {
                (0..dim).all(|c| {
                    self.associator(&Vector::basis(a), &Vector::basis(b), &Vector::basis(c))
                        .map(|v| v.is_zero())
                        .unwrap_or(false)
                })
            })
        })
    }

    /// The Akivis superalgebra `W^A`: bracket is the super-commutator,
    /// ternary map is the associator. Grading closure of the result follows
    /// from that of the table, which construction guarantees.
    pub fn derive_akivis(&self) -> Result<AkivisSpec> {
        let dim = self.dim();
        let bracket = (0..dim)
            .flat_map(|a| (0..dim).map(move |b| (a, b)))
            .map(|(a, b)| self.basis_commutator(a, b))
            .collect();
        let mut ternary = Vec::with_capacity(dim * dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                let ab = self.product(a, b);
                for c in 0..dim {
                    let left = self.multiply(ab, &Vector::basis(c))?;
                    let right = self.multiply(&Vector::basis(a), self.product(b, c))?;
                    ternary.push(left - right);
                }
            }
        }
        AkivisSpec::from_dense(self.basis.clone(), bracket, ternary)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::Parity;
    use crate::scalar::Scalar;

    fn two_by_two_assoc() -> SuperTable {
        // E11, E22 even; E12, E21 odd; ordinary matrix units
        let basis = GradedBasis::new(["E11", "E22"], ["E12", "E21"]).unwrap();
        let idx = |i: usize, j: usize| match (i, j) {
            (1, 1) => 0,
            (2, 2) => 1,
            (1, 2) => 2,
            _ => 3,
        };
        let pos = [(1, 1), (2, 2), (1, 2), (2, 1)];
        SuperTable::from_fn(basis, None, |a, b| {
            let (i, j) = pos[a];
            let (k, l) = pos[b];
            if j == k {
                Vector::basis(idx(i, l))
            } else {
                Vector::zero()
            }
        })
        .unwrap()
    }

    #[test]
    fn grading_closure_is_enforced() {
        let basis = GradedBasis::new(["a"], ["x"]).unwrap();
        let err = SuperTable::new(basis, [((0, 1), Vector::basis(0))], None).unwrap_err();
        assert!(matches!(
            err,
            AlgebraError::GradingViolation {
                expected: Parity::Odd,
                ..
            }
        ));
    }

    #[test]
    fn unit_axiom_is_enforced() {
        let basis = GradedBasis::new(["u", "a"], Vec::<&str>::new()).unwrap();
        let err = SuperTable::new(basis, [((0, 0), Vector::basis(0))], Some(0)).unwrap_err();
        assert!(matches!(err, AlgebraError::NotUnital { .. }));
    }

    #[test]
    fn odd_odd_commutator_is_anticommutator() {
        let m = two_by_two_assoc();
        let x = Vector::basis(2);
        let y = Vector::basis(3);
        let expected = Vector::from_terms([(0, Scalar::one()), (1, Scalar::one())]);
        assert_eq!(m.super_commutator(&x, &y).unwrap(), expected);
        assert!(m.is_associative());
    }

    #[test]
    fn even_self_commutator_vanishes() {
        let m = two_by_two_assoc();
        let x = Vector::from_terms([(0, Scalar::new(2, 3)), (1, Scalar::from(-5))]);
        assert!(m.super_commutator(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn associative_table_has_zero_ternary() {
        let spec = two_by_two_assoc().derive_akivis().unwrap();
        let dim = spec.dim();
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    assert!(spec.ternary(a, b, c).is_zero());
                }
            }
        }
    }

    #[test]
    fn basis_mismatch_is_reported() {
        let m = two_by_two_assoc();
        let err = m.multiply(&Vector::basis(9), &Vector::basis(0)).unwrap_err();
        assert_eq!(err, AlgebraError::BasisMismatch { index: 9, dim: 4 });
    }
}
