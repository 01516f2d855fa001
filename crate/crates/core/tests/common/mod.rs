#![allow(dead_code)]

use akivis::basis::{GradedBasis, Parity};
use akivis::{Scalar, SuperTable, Vector};
use rand::Rng;

/// Small nonzero rational with numerator in -5..=5 and denominator 1..=4.
pub fn nonzero_scalar(rng: &mut impl Rng) -> Scalar {
    loop {
        let n: i64 = rng.random_range(-5..=5);
        if n != 0 {
            return Scalar::new(n, rng.random_range(1..=4));
        }
    }
}

pub fn scalar(rng: &mut impl Rng) -> Scalar {
    Scalar::new(rng.random_range(-9..=9), rng.random_range(1..=6))
}

/// Random vector with every coordinate drawn independently, zero allowed.
pub fn vector(rng: &mut impl Rng, dim: usize) -> Vector {
    Vector::from_terms((0..dim).map(|i| (i, scalar(rng))))
}

/// Random nonzero vector supported on generators of parity `p`, or `None`
/// if the basis has none.
pub fn homogeneous_nonzero(rng: &mut impl Rng, basis: &GradedBasis, p: Parity) -> Option<Vector> {
    let pool: Vec<usize> = basis.indices().filter(|&i| basis.parity(i) == p).collect();
    if pool.is_empty() {
        return None;
    }
    let mut v = Vector::zero();
    while v.is_zero() {
        for &i in &pool {
            if rng.random_bool(0.5) {
                v.add_term(i, &nonzero_scalar(rng));
            }
        }
    }
    Some(v)
}

pub fn basis(p: usize, q: usize) -> GradedBasis {
    let even: Vec<String> = (0..p).map(|i| format!("u{i}")).collect();
    let odd: Vec<String> = (0..q).map(|i| format!("w{i}")).collect();
    GradedBasis::new(even, odd).unwrap()
}

/// Random sparse table of shape `(p|q)` respecting the grading.
pub fn graded_table(rng: &mut impl Rng, p: usize, q: usize, density: f64) -> SuperTable {
    let basis = basis(p, q);
    let b2 = basis.clone();
    SuperTable::from_fn(basis, None, |a, b| {
        if !rng.random_bool(density) {
            return Vector::zero();
        }
        let parity = b2.parity(a) + b2.parity(b);
        homogeneous_nonzero(rng, &b2, parity).unwrap_or_default()
    })
    .expect("grading is closed by construction")
}

/// All shapes `(p|q)` with `1 <= p + q` and `p, q <= 3`.
pub fn shapes() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in 0..=3 {
        for q in 0..=3 {
            if p + q > 0 {
                out.push((p, q));
            }
        }
    }
    out
}

/// Koszul sign for parities given as bits.
pub fn ksign(bits: u8) -> Scalar {
    if bits.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}
