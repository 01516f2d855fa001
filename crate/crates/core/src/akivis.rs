//! Akivis superalgebras: a superanticommutative bracket together with a
//! grading-compatible trilinear map.

use crate::basis::{koszul, GradedBasis, Parity};
use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;
use crate::vector::Vector;

/// Bracket and ternary tables over a graded basis.
///
/// Construction enforces grading closure of both tables and
/// superanticommutativity of the bracket. The Akivis identity itself is
/// *not* enforced; see [`crate::identity::check_akivis_identity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AkivisSpec {
    basis: GradedBasis,
    bracket: Vec<Vector>,
    ternary: Vec<Vector>,
}

impl AkivisSpec {
    /// Builds a spec from nonzero table entries; unspecified entries are zero.
    pub fn new(
        basis: GradedBasis,
        bracket: impl IntoIterator<Item = ((usize, usize), Vector)>,
        ternary: impl IntoIterator<Item = ((usize, usize, usize), Vector)>,
    ) -> Result<Self> {
        let spec = Self::assemble(basis, bracket, ternary)?;
        spec.validate_grading()?;
        spec.validate_superanticommutative()?;
        Ok(spec)
    }

    /// Like [`AkivisSpec::new`] but skips the superanticommutativity check.
    /// Grading closure is still enforced. Meant for exercising the checkers
    /// on deliberately broken input.
    pub fn new_unchecked(
        basis: GradedBasis,
        bracket: impl IntoIterator<Item = ((usize, usize), Vector)>,
        ternary: impl IntoIterator<Item = ((usize, usize, usize), Vector)>,
    ) -> Result<Self> {
        let spec = Self::assemble(basis, bracket, ternary)?;
        spec.validate_grading()?;
        Ok(spec)
    }

    /// Builds a spec from closures evaluated on every basis pair and triple.
    pub fn from_fns(
        basis: GradedBasis,
        mut bracket: impl FnMut(usize, usize) -> Vector,
        mut ternary: impl FnMut(usize, usize, usize) -> Vector,
    ) -> Result<Self> {
        let dim = basis.dim();
        let mut b = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                b.push(bracket(i, j));
            }
        }
        let mut t = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    t.push(ternary(i, j, k));
                }
            }
        }
        Self::from_dense(basis, b, t)
    }

    pub(crate) fn from_dense(
        basis: GradedBasis,
        bracket: Vec<Vector>,
        ternary: Vec<Vector>,
    ) -> Result<Self> {
        let dim = basis.dim();
        assert_eq!(bracket.len(), dim * dim);
        assert_eq!(ternary.len(), dim * dim * dim);
        for v in bracket.iter().chain(ternary.iter()) {
            basis.check(v)?;
        }
        let spec = AkivisSpec {
            basis,
            bracket,
            ternary,
        };
        spec.validate_grading()?;
        spec.validate_superanticommutative()?;
        Ok(spec)
    }

    fn assemble(
        basis: GradedBasis,
        bracket: impl IntoIterator<Item = ((usize, usize), Vector)>,
        ternary: impl IntoIterator<Item = ((usize, usize, usize), Vector)>,
    ) -> Result<Self> {
        let dim = basis.dim();
        let mut b = vec![Vector::zero(); dim * dim];
        for ((i, j), v) in bracket {
            basis.check_index(i)?;
            basis.check_index(j)?;
            basis.check(&v)?;
            b[i * dim + j] = v;
        }
        let mut t = vec![Vector::zero(); dim * dim * dim];
        for ((i, j, k), v) in ternary {
            basis.check_index(i)?;
            basis.check_index(j)?;
            basis.check_index(k)?;
            basis.check(&v)?;
            t[(i * dim + j) * dim + k] = v;
        }
        Ok(AkivisSpec {
            basis,
            bracket: b,
            ternary: t,
        })
    }

    fn validate_grading(&self) -> Result<()> {
        let dim = self.dim();
        let p = |i| self.basis.parity(i);
        for i in 0..dim {
            for j in 0..dim {
                let expected = p(i) + p(j);
                if !self.basis.is_homogeneous_of(self.bracket(i, j), expected) {
                    return Err(AlgebraError::GradingViolation {
                        entry: format!("[{}, {}]", self.basis.name(i), self.basis.name(j)),
                        expected,
                    });
                }
                for k in 0..dim {
                    let expected = p(i) + p(j) + p(k);
                    if !self.basis.is_homogeneous_of(self.ternary(i, j, k), expected) {
                        return Err(AlgebraError::GradingViolation {
                            entry: format!(
                                "A({}, {}, {})",
                                self.basis.name(i),
                                self.basis.name(j),
                                self.basis.name(k)
                            ),
                            expected,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn validate_superanticommutative(&self) -> Result<()> {
        let dim = self.dim();
        for i in 0..dim {
            for j in i..dim {
                if !self.superanticommutator(i, j).is_zero() {
                    return Err(AlgebraError::NotSuperanticommutative {
                        left: self.basis.name(i).to_string(),
                        right: self.basis.name(j).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// `[e_i, e_j] + (-1)^{ij} [e_j, e_i]`, zero for a valid bracket.
    pub fn superanticommutator(&self, i: usize, j: usize) -> Vector {
        let sign = koszul(self.basis.parity(i), self.basis.parity(j));
        let mut v = self.bracket(i, j).clone();
        v.add_scaled(&sign, self.bracket(j, i));
        v
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis.parity(i)
    }

    pub fn bracket(&self, i: usize, j: usize) -> &Vector {
        &self.bracket[i * self.dim() + j]
    }

    pub fn ternary(&self, i: usize, j: usize, k: usize) -> &Vector {
        let dim = self.dim();
        &self.ternary[(i * dim + j) * dim + k]
    }

    /// Replaces one ternary entry, keeping every other entry. The new value
    /// must respect the grading.
    pub fn with_ternary_entry(&self, i: usize, j: usize, k: usize, value: Vector) -> Result<Self> {
        let dim = self.dim();
        self.basis.check(&value)?;
        let mut out = self.clone();
        out.ternary[(i * dim + j) * dim + k] = value;
        out.validate_grading()?;
        Ok(out)
    }

    /// Copy of this spec with the ternary map set to zero.
    pub fn with_zero_ternary(&self) -> Self {
        AkivisSpec {
            basis: self.basis.clone(),
            bracket: self.bracket.clone(),
            ternary: vec![Vector::zero(); self.ternary.len()],
        }
    }

    /// Copy of this spec whose ternary map is `SJ / 6`, the presentation
    /// used for Malcev superalgebras.
    pub fn with_malcev_ternary(&self) -> Self {
        let dim = self.dim();
        let sixth = Scalar::new(1, 6);
        let mut ternary = Vec::with_capacity(self.ternary.len());
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    ternary.push(self.basis_super_jacobian(i, j, k).scaled(&sixth));
                }
            }
        }
        AkivisSpec {
            basis: self.basis.clone(),
            bracket: self.bracket.clone(),
            ternary,
        }
    }

    /// Bilinear extension of the bracket table.
    pub fn bracket_eval(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.basis.check(x)?;
        self.basis.check(y)?;
        let mut out = Vector::zero();
        for (i, ci) in x.iter() {
            for (j, cj) in y.iter() {
                out.add_scaled(&(ci * cj), self.bracket(i, j));
            }
        }
        Ok(out)
    }

    /// Trilinear extension of the ternary table.
    pub fn ternary_eval(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        self.basis.check(x)?;
        self.basis.check(y)?;
        self.basis.check(z)?;
        let mut out = Vector::zero();
        for (i, ci) in x.iter() {
            for (j, cj) in y.iter() {
                let cij = ci * cj;
                for (k, ck) in z.iter() {
                    out.add_scaled(&(&cij * ck), self.ternary(i, j, k));
                }
            }
        }
        Ok(out)
    }

    /// `SJ(e_i, e_j, e_k) = [[x,y],z] + (-1)^{α(β+γ)} [[y,z],x] + (-1)^{γ(β+α)} [[z,x],y]`.
    pub fn basis_super_jacobian(&self, i: usize, j: usize, k: usize) -> Vector {
        let (a, b, c) = (self.parity(i), self.parity(j), self.parity(k));
        let bracket_right = |v: &Vector, r: usize| {
            let mut out = Vector::zero();
            for (t, ct) in v.iter() {
                out.add_scaled(ct, self.bracket(t, r));
            }
            out
        };
        let mut out = bracket_right(self.bracket(i, j), k);
        out.add_scaled(&(a * (b + c)).sign(), &bracket_right(self.bracket(j, k), i));
        out.add_scaled(&(c * (b + a)).sign(), &bracket_right(self.bracket(k, i), j));
        out
    }

    /// Super-Jacobian, extended trilinearly over parity components.
    pub fn super_jacobian(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        self.basis.check(x)?;
        self.basis.check(y)?;
        self.basis.check(z)?;
        let mut out = Vector::zero();
        for (i, ci) in x.iter() {
            for (j, cj) in y.iter() {
                let cij = ci * cj;
                for (k, ck) in z.iter() {
                    out.add_scaled(&(&cij * ck), &self.basis_super_jacobian(i, j, k));
                }
            }
        }
        Ok(out)
    }

    /// The alternating side of the Akivis identity at a basis triple:
    /// `A(x,y,z) + (-1)^{α(β+γ)} A(y,z,x) + (-1)^{γ(β+α)} A(z,x,y)
    ///  - (-1)^{αβ} A(y,x,z) - (-1)^{α(β+γ)+βγ} A(z,y,x) - (-1)^{γβ} A(x,z,y)`.
    pub fn basis_ternary_alternation(&self, i: usize, j: usize, k: usize) -> Vector {
        let (a, b, c) = (self.parity(i), self.parity(j), self.parity(k));
        let mut out = self.ternary(i, j, k).clone();
        out.add_scaled(&(a * (b + c)).sign(), self.ternary(j, k, i));
        out.add_scaled(&(c * (b + a)).sign(), self.ternary(k, i, j));
        out.add_scaled(&-(a * b).sign(), self.ternary(j, i, k));
        out.add_scaled(&-(a * (b + c) + b * c).sign(), self.ternary(k, j, i));
        out.add_scaled(&-(c * b).sign(), self.ternary(i, k, j));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2_like() -> AkivisSpec {
        // [h, e] = 2e, [h, f] = -2f, [e, f] = h
        let basis = GradedBasis::new(["h", "e", "f"], Vec::<&str>::new()).unwrap();
        let s = |n: i64| Scalar::from(n);
        AkivisSpec::new(
            basis,
            [
                ((0, 1), Vector::basis(1).scaled(&s(2))),
                ((1, 0), Vector::basis(1).scaled(&s(-2))),
                ((0, 2), Vector::basis(2).scaled(&s(-2))),
                ((2, 0), Vector::basis(2).scaled(&s(2))),
                ((1, 2), Vector::basis(0)),
                ((2, 1), Vector::basis(0).scaled(&s(-1))),
            ],
            [],
        )
        .unwrap()
    }

    #[test]
    fn rejects_symmetric_even_bracket() {
        let basis = GradedBasis::new(["a", "b", "c"], Vec::<&str>::new()).unwrap();
        let err = AkivisSpec::new(
            basis,
            [((0, 1), Vector::basis(2)), ((1, 0), Vector::basis(2))],
            [],
        )
        .unwrap_err();
        assert!(matches!(err, AlgebraError::NotSuperanticommutative { .. }));
    }

    #[test]
    fn odd_squares_are_allowed() {
        let basis = GradedBasis::new(["u"], ["x"]).unwrap();
        let spec = AkivisSpec::new(basis, [((1, 1), Vector::basis(0))], []).unwrap();
        assert_eq!(spec.bracket(1, 1), &Vector::basis(0));
    }

    #[test]
    fn ternary_grading_is_enforced() {
        let basis = GradedBasis::new(["u"], ["x"]).unwrap();
        let err = AkivisSpec::new(basis, [], [((0, 0, 1), Vector::basis(0))]).unwrap_err();
        assert!(matches!(err, AlgebraError::GradingViolation { .. }));
    }

    #[test]
    fn lie_bracket_has_vanishing_jacobian() {
        let spec = sl2_like();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert!(spec.basis_super_jacobian(i, j, k).is_zero());
                }
            }
        }
        let x = Vector::from_terms([(0, Scalar::one()), (1, Scalar::new(1, 2))]);
        assert!(spec
            .ternary_eval(&x, &x, &Vector::basis(2))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn bracket_eval_is_bilinear_on_mixed_input() {
        let spec = sl2_like();
        let x = Vector::from_terms([(0, Scalar::one()), (1, Scalar::one())]);
        let y = Vector::basis(2);
        let expected = spec.bracket(0, 2) + spec.bracket(1, 2);
        assert_eq!(spec.bracket_eval(&x, &y).unwrap(), expected);
    }

    #[test]
    fn malcev_presentation_of_lie_is_zero() {
        let spec = sl2_like().with_malcev_ternary();
        assert_eq!(spec, sl2_like());
    }
}
