//! Constructors for the concrete algebras used throughout the crate: the
//! graded octonions, the antiassociative matrix quasialgebras, associative
//! matrix superalgebras and trivial Akivis superalgebras.

use crate::akivis::AkivisSpec;
use crate::algebra::Algebra;
use crate::basis::GradedBasis;
use crate::error::{AlgebraError, Result};
use crate::identity::Classification;
use crate::scalar::Scalar;
use crate::table::SuperTable;
use crate::vector::Vector;

// Hamilton quaternions as coefficient arrays over (1, i, j, k).
type Quat = [Scalar; 4];

fn quat_mul(a: &Quat, b: &Quat) -> Quat {
    let [a0, a1, a2, a3] = a;
    let [b0, b1, b2, b3] = b;
    [
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ]
}

fn quat_conj(a: &Quat) -> Quat {
    [a[0].clone(), -&a[1], -&a[2], -&a[3]]
}

fn quat_add(a: &Quat, b: &Quat) -> Quat {
    [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2], &a[3] + &b[3]]
}

fn quat_sub(a: &Quat, b: &Quat) -> Quat {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2], &a[3] - &b[3]]
}

fn quat_unit(pos: usize, sign: i64) -> Quat {
    let mut q: Quat = Default::default();
    q[pos] = Scalar::from(sign);
    q
}

/// Cayley-Dickson doubling of the quaternions:
/// `(a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))`.
fn doubled_mul(x: &(Quat, Quat), y: &(Quat, Quat)) -> (Quat, Quat) {
    let (a, b) = x;
    let (c, d) = y;
    (
        quat_sub(&quat_mul(a, c), &quat_mul(&quat_conj(d), b)),
        quat_add(&quat_mul(d, a), &quat_mul(b, &quat_conj(c))),
    )
}

fn flatten(x: &(Quat, Quat)) -> Vec<Scalar> {
    x.0.iter().chain(x.1.iter()).cloned().collect()
}

/// Expresses `raw` in a basis that is a signed permutation of the raw
/// coordinates.
fn signed_perm_coords(raw: &[Scalar], basis: &[(usize, Scalar)]) -> Vector {
    let v = Vector::from_terms(
        basis
            .iter()
            .enumerate()
            .map(|(idx, (pos, sign))| (idx, &raw[*pos] * sign)),
    );
    debug_assert_eq!(
        raw.iter().filter(|c| !c.is_zero()).count(),
        v.len(),
        "basis is not a signed permutation"
    );
    v
}

fn signed_perm_of(raw: &[Scalar]) -> (usize, Scalar) {
    let nonzero: Vec<_> = raw
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    assert_eq!(nonzero.len(), 1, "expected a signed raw unit vector");
    let (pos, c) = nonzero[0];
    assert!(c.abs().is_one());
    (pos, c.clone())
}

const OCTONION_NAMES: [&str; 8] = ["e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7"];

/// Raw product table of the octonions in the basis `e0 = 1`, `e1 = i`,
/// `e2 = j`, `e3 = -k`, `e4 = (0, 1)`, `e_{4+t} = -(e_t e4)`.
///
/// The sign choices reproduce the printed bracket table of the graded
/// octonions `O^A` entry for entry.
fn octonion_products() -> Vec<Vec<Vector>> {
    let zero: Quat = Default::default();
    let mut raw: Vec<(Quat, Quat)> = vec![
        (quat_unit(0, 1), zero.clone()),
        (quat_unit(1, 1), zero.clone()),
        (quat_unit(2, 1), zero.clone()),
        (quat_unit(3, -1), zero.clone()),
        (zero.clone(), quat_unit(0, 1)),
    ];
    for t in 1..4 {
        let p = doubled_mul(&raw[t], &raw[4]);
        raw.push((
            [-&p.0[0], -&p.0[1], -&p.0[2], -&p.0[3]],
            [-&p.1[0], -&p.1[1], -&p.1[2], -&p.1[3]],
        ));
    }
    let basis: Vec<(usize, Scalar)> = raw.iter().map(|x| signed_perm_of(&flatten(x))).collect();
    raw.iter()
        .map(|x| {
            raw.iter()
                .map(|y| signed_perm_coords(&flatten(&doubled_mul(x, y)), &basis))
                .collect()
        })
        .collect()
}

/// The octonions with the chess-board grading `O_0 = Q = <1, e1, e2, e3>`,
/// `O_1 = e4 Q = <e4, e5, e6, e7>`. The identity is the generator `e0`.
pub fn build_octonions() -> SuperTable {
    let products = octonion_products();
    let basis = GradedBasis::new(OCTONION_NAMES[..4].to_vec(), OCTONION_NAMES[4..].to_vec())
        .expect("static basis");
    SuperTable::from_fn(basis, Some(0), |a, b| products[a][b].clone())
        .expect("octonion table is graded and unital")
}

/// The same octonion product with every generator even.
pub fn build_ungraded_octonions() -> SuperTable {
    let products = octonion_products();
    let basis =
        GradedBasis::new(OCTONION_NAMES.to_vec(), Vec::<&str>::new()).expect("static basis");
    SuperTable::from_fn(basis, Some(0), |a, b| products[a][b].clone())
        .expect("octonion table is unital")
}

/// The quaternion subalgebra `<e0, e1, e2, e3>` of [`build_octonions`],
/// all even.
pub fn build_quaternions() -> SuperTable {
    let products = octonion_products();
    let basis =
        GradedBasis::new(OCTONION_NAMES[..4].to_vec(), Vec::<&str>::new()).expect("static basis");
    SuperTable::from_fn(basis, Some(0), |a, b| products[a][b].clone())
        .expect("quaternion table is unital")
}

/// The commutator algebra of the ungraded octonions presented as an Akivis
/// algebra with `A = SJ / 6` (a Malcev algebra).
pub fn build_malcev_octonions() -> AkivisSpec {
    build_ungraded_octonions()
        .derive_akivis()
        .expect("graded table")
        .with_malcev_ternary()
}

/// Block position of a matrix unit in a chess-board graded
/// `(n + m) x (n + m)` matrix algebra. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Block {
    TopLeft,
    BottomRight,
    TopRight,
    BottomLeft,
}

fn block_of(n: usize, i: usize, j: usize) -> Block {
    match (i <= n, j <= n) {
        (true, true) => Block::TopLeft,
        (false, false) => Block::BottomRight,
        (true, false) => Block::TopRight,
        (false, true) => Block::BottomLeft,
    }
}

/// Matrix units ordered as: top-left block, bottom-right block (even), then
/// top-right block, bottom-left block (odd); row-major within each block.
fn matrix_units(n: usize, m: usize) -> Vec<(usize, usize)> {
    let size = n + m;
    let mut units = Vec::with_capacity(size * size);
    for block in [
        Block::TopLeft,
        Block::BottomRight,
        Block::TopRight,
        Block::BottomLeft,
    ] {
        for i in 1..=size {
            for j in 1..=size {
                if block_of(n, i, j) == block {
                    units.push((i, j));
                }
            }
        }
    }
    units
}

/// Generator name of the matrix unit `E_{i,j}`.
pub fn matrix_unit_name(i: usize, j: usize) -> String {
    format!("E{i}_{j}")
}

fn matrix_table(n: usize, m: usize, twisted: bool) -> Result<SuperTable> {
    if n == 0 || m == 0 {
        return Err(AlgebraError::InvalidInput(format!(
            "block sizes must be positive, got ({n}, {m})"
        )));
    }
    let units = matrix_units(n, m);
    let even: Vec<String> = units
        .iter()
        .filter(|(i, j)| matches!(block_of(n, *i, *j), Block::TopLeft | Block::BottomRight))
        .map(|(i, j)| matrix_unit_name(*i, *j))
        .collect();
    let odd: Vec<String> = units
        .iter()
        .filter(|(i, j)| matches!(block_of(n, *i, *j), Block::TopRight | Block::BottomLeft))
        .map(|(i, j)| matrix_unit_name(*i, *j))
        .collect();
    let basis = GradedBasis::new(even, odd)?;
    let position = |i: usize, j: usize| units.iter().position(|u| *u == (i, j)).unwrap();
    SuperTable::from_fn(basis, None, |a, b| {
        let (i, j) = units[a];
        let (k, l) = units[b];
        if j != k {
            return Vector::zero();
        }
        // bottom-right block of the product picks up -w1 v2
        let sign = if twisted
            && block_of(n, i, j) == Block::BottomLeft
            && block_of(n, k, l) == Block::TopRight
        {
            -1
        } else {
            1
        };
        Vector::from_terms([(position(i, l), Scalar::from(sign))])
    })
}

/// The antiassociative quasialgebra of `(n + m)`-square rational matrices
/// with chess-board grading and the twisted block product
/// `(a1 v1; w1 b1)(a2 v2; w2 b2) = (a1a2 + v1w2, a1v2 + v1b2; w1a2 + b1w2, -w1v2 + b1b2)`.
pub fn build_matrix_quasialgebra(n: usize, m: usize) -> Result<SuperTable> {
    matrix_table(n, m, true)
}

/// Ordinary `(m + n)`-square matrices with chess-board grading.
pub fn build_associative_matrix_superalgebra(m: usize, n: usize) -> Result<SuperTable> {
    matrix_table(m, n, false)
}

/// Zero bracket and zero ternary map on `p` even generators `a1..ap` and
/// `q` odd generators `x1..xq`.
pub fn build_trivial_akivis(p: usize, q: usize) -> Result<AkivisSpec> {
    if p + q == 0 {
        return Err(AlgebraError::InvalidInput(
            "trivial Akivis superalgebra needs at least one generator".into(),
        ));
    }
    let even: Vec<String> = (1..=p).map(|i| format!("a{i}")).collect();
    let odd: Vec<String> = (1..=q).map(|i| format!("x{i}")).collect();
    AkivisSpec::new(GradedBasis::new(even, odd)?, [], [])
}

/// An entry of the example catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleDescriptor {
    pub name: String,
    /// `(even, odd)` dimensions.
    pub dims: (usize, usize),
    pub expected: Classification,
}

impl ExampleDescriptor {
    pub fn build(&self) -> Result<Algebra> {
        build_example(&self.name)
    }
}

fn parse_pair(rest: &str) -> Option<(usize, usize)> {
    let (a, b) = rest.split_once('-')?;
    Some((a.parse().ok()?, b.parse().ok()?))
}

/// Builds a catalog algebra by name. Parametrised families use
/// `mat-quasi-N-M`, `mat-assoc-M-N` and `trivial-P-Q`.
pub fn build_example(name: &str) -> Result<Algebra> {
    let unknown = || AlgebraError::InvalidInput(format!("unknown example `{name}`"));
    match name {
        "octonions" => Ok(build_octonions().into()),
        "quaternions" => Ok(build_quaternions().into()),
        "octonions-malcev" => Ok(build_malcev_octonions().into()),
        _ => {
            if let Some(rest) = name.strip_prefix("mat-quasi-") {
                let (n, m) = parse_pair(rest).ok_or_else(unknown)?;
                Ok(build_matrix_quasialgebra(n, m)?.into())
            } else if let Some(rest) = name.strip_prefix("mat-assoc-") {
                let (m, n) = parse_pair(rest).ok_or_else(unknown)?;
                Ok(build_associative_matrix_superalgebra(m, n)?.into())
            } else if let Some(rest) = name.strip_prefix("trivial-") {
                let (p, q) = parse_pair(rest).ok_or_else(unknown)?;
                Ok(build_trivial_akivis(p, q)?.into())
            } else {
                Err(unknown())
            }
        }
    }
}

/// The standard catalog, in a fixed order.
pub fn catalog() -> Vec<ExampleDescriptor> {
    let entry = |name: &str, dims, expected| ExampleDescriptor {
        name: name.to_string(),
        dims,
        expected,
    };
    vec![
        entry("octonions", (4, 4), Classification::ProperAkivis),
        entry("quaternions", (4, 0), Classification::Lie),
        entry("octonions-malcev", (8, 0), Classification::MalcevPresented),
        entry("mat-quasi-1-1", (2, 2), Classification::ProperAkivis),
        entry("mat-quasi-2-1", (5, 4), Classification::ProperAkivis),
        entry("mat-assoc-1-1", (2, 2), Classification::Lie),
        entry("trivial-2-2", (2, 2), Classification::Lie),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::classify;
    use crate::basis::Parity;

    fn v(basis: &GradedBasis, terms: &[(i64, &str)]) -> Vector {
        Vector::from_terms(
            terms
                .iter()
                .map(|(c, n)| (basis.index_of(n).unwrap(), Scalar::from(*c))),
        )
    }

    #[test]
    fn octonion_squares() {
        let o = build_octonions();
        let b = o.basis().clone();
        for name in ["e1", "e4", "e7"] {
            let x = b.vector(name).unwrap();
            assert_eq!(o.multiply(&x, &x).unwrap(), v(&b, &[(-1, "e0")]));
        }
        let e1 = b.vector("e1").unwrap();
        let e0 = b.vector("e0").unwrap();
        assert_eq!(o.multiply(&e0, &e1).unwrap(), e1);
    }

    #[test]
    fn octonions_are_not_associative() {
        let o = build_octonions();
        let b = o.basis();
        let a = o
            .associator(
                &b.vector("e1").unwrap(),
                &b.vector("e2").unwrap(),
                &b.vector("e4").unwrap(),
            )
            .unwrap();
        assert!(!a.is_zero());
        assert!(build_quaternions().is_associative());
    }

    #[test]
    fn quasialgebra_products() {
        let w = build_matrix_quasialgebra(1, 1).unwrap();
        let b = w.basis().clone();
        assert_eq!(b.names(), &["E1_1", "E2_2", "E1_2", "E2_1"]);
        let x = b.vector("E1_2").unwrap();
        let y = b.vector("E2_1").unwrap();
        assert_eq!(w.multiply(&x, &y).unwrap(), v(&b, &[(1, "E1_1")]));
        // the twisted entry: y x = -E22
        assert_eq!(w.multiply(&y, &x).unwrap(), v(&b, &[(-1, "E2_2")]));
        let e11 = b.vector("E1_1").unwrap();
        assert_eq!(w.multiply(&e11, &e11).unwrap(), e11);
        let assoc = w.associator(&x, &y, &x).unwrap();
        assert!(!assoc.is_zero());
    }

    #[test]
    fn matrix_ordering_for_larger_blocks() {
        let w = build_matrix_quasialgebra(2, 1).unwrap();
        assert_eq!(
            w.basis().names(),
            &["E1_1", "E1_2", "E2_1", "E2_2", "E3_3", "E1_3", "E2_3", "E3_1", "E3_2"]
        );
        assert!(build_matrix_quasialgebra(0, 1).is_err());
    }

    #[test]
    fn catalog_dims_and_labels() {
        for entry in catalog() {
            let alg = entry.build().unwrap();
            let basis = alg.basis();
            assert_eq!((basis.even_dim(), basis.odd_dim()), entry.dims, "{}", entry.name);
            assert_eq!(
                classify(&alg.to_akivis().unwrap()),
                entry.expected,
                "{}",
                entry.name
            );
        }
    }

    #[test]
    fn unknown_examples() {
        assert!(build_example("sedenions").is_err());
        assert!(build_example("mat-quasi-x-1").is_err());
        assert!(build_example("trivial-0-0").is_err());
        assert_eq!(
            build_trivial_akivis(1, 2).unwrap().basis().parity(2),
            Parity::Odd
        );
    }
}
