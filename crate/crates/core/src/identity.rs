//! Exhaustive verification of the identities satisfied (or violated) by
//! finite-dimensional Akivis superalgebras.
//!
//! Every checker sweeps all basis tuples, so by multilinearity a pass holds
//! for arbitrary elements. Failures carry witnesses: the offending tuple
//! and the two exact sides that differ.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::akivis::AkivisSpec;
use crate::basis::{koszul, GradedBasis};
use crate::scalar::Scalar;
use crate::vector::Vector;

pub const DEFAULT_MAX_WITNESSES: usize = 16;

#[derive(Clone, Debug)]
pub struct CheckOptions {
    /// Upper bound on stored witnesses; at least one is always kept.
    pub max_witnesses: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_witnesses: DEFAULT_MAX_WITNESSES,
        }
    }
}

impl CheckOptions {
    pub fn unlimited() -> Self {
        CheckOptions {
            max_witnesses: usize::MAX,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("pass"),
            Status::Fail => f.write_str("fail"),
        }
    }
}

/// A tuple on which the two sides of a checked relation differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<V = Vector> {
    /// Which relation of the check failed (e.g. `SJ` or `A` for the Lie check).
    pub relation: &'static str,
    pub args: Vec<V>,
    pub lhs: V,
    pub rhs: V,
}

/// Outcome of one exhaustive check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport<V = Vector> {
    pub identity: String,
    /// Number of relation instances evaluated.
    pub checked: usize,
    /// Number of failing instances, before capping.
    pub failures: usize,
    /// Failing instances in sweep order, capped by [`CheckOptions::max_witnesses`].
    pub witnesses: Vec<Witness<V>>,
}

impl<V> CheckReport<V> {
    pub fn status(&self) -> Status {
        if self.witnesses.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    pub(crate) fn from_parts(
        identity: impl Into<String>,
        checked: usize,
        mut witnesses: Vec<Witness<V>>,
        opts: &CheckOptions,
    ) -> Self {
        let failures = witnesses.len();
        witnesses.truncate(opts.max_witnesses.max(1));
        CheckReport {
            identity: identity.into(),
            checked,
            failures,
            witnesses,
        }
    }
}

fn basis_args(indices: &[usize]) -> Vec<Vector> {
    indices.iter().map(|&i| Vector::basis(i)).collect()
}

/// Runs `f` on every ordered basis triple in lexicographic order, in
/// parallel over the first index, and concatenates the witnesses in order.
fn sweep_triples<F>(dim: usize, f: F) -> Vec<Witness>
where
    F: Fn(usize, usize, usize) -> Vec<Witness> + Sync,
{
    (0..dim)
        .into_par_iter()
        .map(|i| {
            let mut out = Vec::new();
            for j in 0..dim {
                for k in 0..dim {
                    out.extend(f(i, j, k));
                }
            }
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// The super-Jacobian equals the alternating sum of ternary values on every
/// basis triple.
pub fn check_akivis_identity(spec: &AkivisSpec) -> CheckReport {
    check_akivis_identity_with(spec, &CheckOptions::default())
}

pub fn check_akivis_identity_with(spec: &AkivisSpec, opts: &CheckOptions) -> CheckReport {
    let dim = spec.dim();
    let witnesses = sweep_triples(dim, |i, j, k| {
        let lhs = spec.basis_super_jacobian(i, j, k);
        let rhs = spec.basis_ternary_alternation(i, j, k);
        if lhs == rhs {
            vec![]
        } else {
            vec![Witness {
                relation: "akivis",
                args: basis_args(&[i, j, k]),
                lhs,
                rhs,
            }]
        }
    });
    CheckReport::from_parts("akivis", dim * dim * dim, witnesses, opts)
}

/// `[a, b] = -(-1)^{αβ} [b, a]` on every ordered basis pair.
pub fn check_superanticommutative(spec: &AkivisSpec) -> CheckReport {
    check_superanticommutative_with(spec, &CheckOptions::default())
}

pub fn check_superanticommutative_with(spec: &AkivisSpec, opts: &CheckOptions) -> CheckReport {
    let dim = spec.dim();
    let mut witnesses = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let lhs = spec.bracket(i, j).clone();
            let sign = -koszul(spec.parity(i), spec.parity(j));
            let rhs = spec.bracket(j, i).scaled(&sign);
            if lhs != rhs {
                witnesses.push(Witness {
                    relation: "superanticomm",
                    args: basis_args(&[i, j]),
                    lhs,
                    rhs,
                });
            }
        }
    }
    CheckReport::from_parts("superanticomm", dim * dim, witnesses, opts)
}

/// Lie superalgebra test: the ternary map and the super-Jacobian both
/// vanish on every basis triple. Witnesses are labelled `A` or `SJ`.
pub fn check_lie(spec: &AkivisSpec) -> CheckReport {
    check_lie_with(spec, &CheckOptions::default())
}

pub fn check_lie_with(spec: &AkivisSpec, opts: &CheckOptions) -> CheckReport {
    let dim = spec.dim();
    let witnesses = sweep_triples(dim, |i, j, k| {
        let mut out = Vec::new();
        let a = spec.ternary(i, j, k);
        if !a.is_zero() {
            out.push(Witness {
                relation: "A",
                args: basis_args(&[i, j, k]),
                lhs: a.clone(),
                rhs: Vector::zero(),
            });
        }
        let sj = spec.basis_super_jacobian(i, j, k);
        if !sj.is_zero() {
            out.push(Witness {
                relation: "SJ",
                args: basis_args(&[i, j, k]),
                lhs: sj,
                rhs: Vector::zero(),
            });
        }
        out
    });
    CheckReport::from_parts("lie", 2 * dim * dim * dim, witnesses, opts)
}

/// The Malcev presentation test `A(x, y, z) = SJ(x, y, z) / 6`.
pub fn check_malcev_ternary(spec: &AkivisSpec) -> CheckReport {
    check_malcev_ternary_with(spec, &CheckOptions::default())
}

pub fn check_malcev_ternary_with(spec: &AkivisSpec, opts: &CheckOptions) -> CheckReport {
    let dim = spec.dim();
    let sixth = Scalar::new(1, 6);
    let witnesses = sweep_triples(dim, |i, j, k| {
        let lhs = spec.ternary(i, j, k).clone();
        let rhs = spec.basis_super_jacobian(i, j, k).scaled(&sixth);
        if lhs == rhs {
            vec![]
        } else {
            vec![Witness {
                relation: "malcev-ternary",
                args: basis_args(&[i, j, k]),
                lhs,
                rhs,
            }]
        }
    });
    CheckReport::from_parts("malcev-ternary", dim * dim * dim, witnesses, opts)
}

/// Degree-four bracket relations evaluated at a single 4-tuple `(a, b, c, d)`,
/// all products taken in the bracket algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MalcevPattern {
    /// `((ab)c)d - ((bc)d)a` against `(ac)(bd)`; fails for the graded
    /// octonions at `(e4, e2, e3, e5)`.
    CyclicDifference,
    /// `2((ab)c)d - ((ba)d)c` against `(ac)(bd)`; with `(x, y, x, y)` this is
    /// `2((xy)x)y - ((yx)y)x` against `x^2 y^2`.
    DoubledSquares,
    /// The classical (ungraded) Malcev identity in Sagle's form:
    /// `((ab)c)d + ((bc)d)a + ((cd)a)b + ((da)b)c = (ac)(bd)`.
    /// Holds in every Lie algebra; only meaningful for even arguments.
    Sagle,
}

impl MalcevPattern {
    pub fn name(self) -> &'static str {
        match self {
            MalcevPattern::CyclicDifference => "cyclic-difference",
            MalcevPattern::DoubledSquares => "doubled-squares",
            MalcevPattern::Sagle => "sagle",
        }
    }
}

/// Evaluates both sides of `pattern` at `args` and reports whether they agree.
pub fn check_malcev_instance(
    spec: &AkivisSpec,
    pattern: MalcevPattern,
    args: [&Vector; 4],
) -> crate::Result<CheckReport> {
    let br = |x: &Vector, y: &Vector| spec.bracket_eval(x, y);
    let [a, b, c, d] = args;
    // ((xy)z)w
    let left_nested =
        |x: &Vector, y: &Vector, z: &Vector, w: &Vector| -> crate::Result<Vector> {
            br(&br(&br(x, y)?, z)?, w)
        };
    let rhs = br(&br(a, c)?, &br(b, d)?)?;
    let lhs = match pattern {
        MalcevPattern::CyclicDifference => left_nested(a, b, c, d)? - left_nested(b, c, d, a)?,
        MalcevPattern::DoubledSquares => {
            left_nested(a, b, c, d)?.scaled(&Scalar::from(2)) - left_nested(b, a, d, c)?
        }
        MalcevPattern::Sagle => {
            left_nested(a, b, c, d)?
                + left_nested(b, c, d, a)?
                + left_nested(c, d, a, b)?
                + left_nested(d, a, b, c)?
        }
    };
    let witnesses = if lhs == rhs {
        vec![]
    } else {
        vec![Witness {
            relation: pattern.name(),
            args: args.iter().map(|v| (*v).clone()).collect(),
            lhs,
            rhs,
        }]
    };
    Ok(CheckReport::from_parts(
        format!("malcev-instance:{}", pattern.name()),
        1,
        witnesses,
        &CheckOptions::default(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    #[serde(rename = "lie")]
    Lie,
    #[serde(rename = "malcev-presented")]
    MalcevPresented,
    #[serde(rename = "proper-akivis")]
    ProperAkivis,
    #[serde(rename = "not-akivis")]
    NotAkivis,
}

impl Classification {
    pub fn label(self) -> &'static str {
        match self {
            Classification::Lie => "lie",
            Classification::MalcevPresented => "malcev-presented",
            Classification::ProperAkivis => "proper-akivis",
            Classification::NotAkivis => "not-akivis",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Most specific label among lie, malcev-presented and proper-akivis, or
/// not-akivis when the Akivis identity fails.
pub fn classify(spec: &AkivisSpec) -> Classification {
    let first_only = CheckOptions { max_witnesses: 1 };
    if !check_akivis_identity_with(spec, &first_only).passed() {
        Classification::NotAkivis
    } else if check_lie_with(spec, &first_only).passed() {
        Classification::Lie
    } else if check_malcev_ternary_with(spec, &first_only).passed() {
        Classification::MalcevPresented
    } else {
        Classification::ProperAkivis
    }
}

/// Renders report values for text and machine-readable output.
pub trait Render {
    fn render(&self, basis: &GradedBasis) -> String;
}

impl Render for Vector {
    fn render(&self, basis: &GradedBasis) -> String {
        basis.format_vector(self)
    }
}

impl<V: Render> CheckReport<V> {
    /// Human-readable summary followed by one line per stored witness.
    pub fn to_text(&self, basis: &GradedBasis) -> String {
        let mut out = format!(
            "{:<24} {}  ({} checked, {} failing)\n",
            self.identity,
            self.status(),
            self.checked,
            self.failures
        );
        for w in &self.witnesses {
            let args: Vec<String> = w.args.iter().map(|a| a.render(basis)).collect();
            out.push_str(&format!(
                "  {} at ({}): {}  !=  {}\n",
                w.relation,
                args.join(", "),
                w.lhs.render(basis),
                w.rhs.render(basis)
            ));
        }
        if self.failures > self.witnesses.len() {
            out.push_str(&format!(
                "  ... {} more\n",
                self.failures - self.witnesses.len()
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trivial(p: usize, q: usize) -> AkivisSpec {
        let even: Vec<String> = (0..p).map(|i| format!("a{i}")).collect();
        let odd: Vec<String> = (0..q).map(|i| format!("x{i}")).collect();
        AkivisSpec::new(GradedBasis::new(even, odd).unwrap(), [], []).unwrap()
    }

    #[test]
    fn trivial_spec_is_lie() {
        let spec = trivial(2, 2);
        assert!(check_akivis_identity(&spec).passed());
        assert!(check_lie(&spec).passed());
        assert_eq!(classify(&spec), Classification::Lie);
    }

    #[test]
    fn witness_cap_keeps_total_count() {
        // bracket [a0, a1] = a2 is fine, ternary nonzero everywhere on even
        // triples breaks the Lie check many times over
        let basis = GradedBasis::new(["a0", "a1", "a2"], Vec::<&str>::new()).unwrap();
        let spec = AkivisSpec::from_fns(basis, |_, _| Vector::zero(), |_, _, _| Vector::basis(0))
            .unwrap();
        let report = check_lie_with(&spec, &CheckOptions { max_witnesses: 2 });
        assert_eq!(report.status(), Status::Fail);
        assert_eq!(report.witnesses.len(), 2);
        assert_eq!(report.failures, 27);
        // the constant ternary map alternates to zero: still Akivis
        assert!(check_akivis_identity(&spec).passed());
    }

    #[test]
    fn symmetric_even_bracket_fails_superanticommutativity() {
        let basis = GradedBasis::new(["a", "b", "c"], Vec::<&str>::new()).unwrap();
        let spec = AkivisSpec::new_unchecked(
            basis,
            [((0, 1), Vector::basis(2)), ((1, 0), Vector::basis(2))],
            [],
        )
        .unwrap();
        let report = check_superanticommutative(&spec);
        assert_eq!(report.status(), Status::Fail);
        assert_eq!(report.witnesses[0].args, basis_args(&[0, 1]));
    }

    #[test]
    fn sagle_holds_for_lie_bracket() {
        // sl2: [h,e] = 2e, [h,f] = -2f, [e,f] = h
        let basis = GradedBasis::new(["h", "e", "f"], Vec::<&str>::new()).unwrap();
        let s = Scalar::from;
        let spec = AkivisSpec::new(
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
        .unwrap();
        let x = Vector::from_terms([(0, s(1)), (1, s(2))]);
        let y = Vector::from_terms([(1, s(-1)), (2, Scalar::new(1, 3))]);
        let z = Vector::basis(2);
        let w = Vector::from_terms([(0, s(3)), (2, s(1))]);
        let report = check_malcev_instance(&spec, MalcevPattern::Sagle, [&x, &y, &z, &w]).unwrap();
        assert!(report.passed());
        assert_eq!(classify(&spec), Classification::Lie);
    }
}
