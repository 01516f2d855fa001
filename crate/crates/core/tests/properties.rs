mod common;

use akivis::basis::Parity;
use akivis::catalog::{build_example, build_matrix_quasialgebra, catalog};
use akivis::envelope::{associator_relation, bracket_relation};
use akivis::identity::{check_akivis_identity, check_malcev_ternary, classify};
use akivis::{AkivisSpec, Classification, EnvElement, Envelope, Scalar, Vector};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_spec(seed: u64) -> AkivisSpec {
    let mut r = rng(seed);
    let shapes = common::shapes();
    let (p, q) = shapes[r.random_range(0..shapes.len())];
    common::graded_table(&mut r, p, q, 0.5).derive_akivis().unwrap()
}

fn catalog_spec(i: usize) -> AkivisSpec {
    let all = catalog();
    all[i % all.len()].build().unwrap().to_akivis().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_text_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let s = Scalar::new(n, d);
        let back: Scalar = s.to_string().parse().unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn super_commutator_is_superanticommutative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let shapes = common::shapes();
        let (p, q) = shapes[r.random_range(0..shapes.len())];
        let t = common::graded_table(&mut r, p, q, 0.7);
        let b = t.basis().clone();
        for pa in [Parity::Even, Parity::Odd] {
            for pb in [Parity::Even, Parity::Odd] {
                let (Some(x), Some(y)) = (
                    common::homogeneous_nonzero(&mut r, &b, pa),
                    common::homogeneous_nonzero(&mut r, &b, pb),
                ) else { continue };
                let xy = t.super_commutator(&x, &y).unwrap();
                let yx = t.super_commutator(&y, &x).unwrap();
                let sign = common::ksign(pa.bit() * pb.bit());
                prop_assert_eq!(xy, -(yx.scaled(&sign)));
            }
        }
    }

    #[test]
    fn derived_structure_satisfies_the_identity(seed in any::<u64>()) {
        let spec = random_spec(seed);
        prop_assert!(check_akivis_identity(&spec).passed());
    }

    #[test]
    fn multiply_is_bilinear_and_graded(seed in any::<u64>()) {
        let mut r = rng(seed);
        let t = common::graded_table(&mut r, 2, 2, 0.8);
        let dim = t.dim();
        let (x, y, z) = (common::vector(&mut r, dim), common::vector(&mut r, dim), common::vector(&mut r, dim));
        let c = common::nonzero_scalar(&mut r);
        let lhs = t.multiply(&(&x.scaled(&c) + &y), &z).unwrap();
        let rhs = &t.multiply(&x, &z).unwrap().scaled(&c) + &t.multiply(&y, &z).unwrap();
        prop_assert_eq!(lhs, rhs);
        let b = t.basis();
        for pa in [Parity::Even, Parity::Odd] {
            for pb in [Parity::Even, Parity::Odd] {
                let x = common::homogeneous_nonzero(&mut r, b, pa).unwrap();
                let y = common::homogeneous_nonzero(&mut r, b, pb).unwrap();
                prop_assert!(b.is_homogeneous_of(&t.multiply(&x, &y).unwrap(), pa + pb));
            }
        }
    }

    #[test]
    fn classification_is_monotone(seed in any::<u64>()) {
        let spec = random_spec(seed);
        let class = classify(&spec);
        prop_assert_ne!(class, Classification::NotAkivis);
        let lie_bracket = spec.with_zero_ternary();
        if class == Classification::Lie {
            prop_assert!(check_malcev_ternary(&spec).passed());
        }
        // zeroing A keeps an Akivis structure exactly when the bracket is Lie
        let zeroed = classify(&lie_bracket);
        prop_assert!(zeroed == Classification::Lie || zeroed == Classification::NotAkivis);
        let malcev = spec.with_malcev_ternary();
        if check_akivis_identity(&malcev).passed() {
            prop_assert!(matches!(classify(&malcev), Classification::Lie | Classification::MalcevPresented));
        }
    }

    #[test]
    fn star_is_bilinear(seed in any::<u64>(), which in 0usize..7) {
        let spec = catalog_spec(which);
        let env = Envelope::new(&spec);
        let mut r = rng(seed);
        let dim = spec.dim();
        let mut lifted = || env.lift(&common::vector(&mut r, dim));
        let (x, y, z, w) = (lifted(), lifted(), lifted(), lifted());
        let zw = env.star(&z, &w).unwrap();
        let c = Scalar::new(r.random_range(-7..=7), r.random_range(1..=5));
        let left = env.star(&(&x.scaled(&c) + &y), &zw).unwrap();
        let split = &env.star(&x, &zw).unwrap().scaled(&c) + &env.star(&y, &zw).unwrap();
        prop_assert_eq!(left, split);
        let right = env.star(&zw, &(&x + &y.scaled(&c))).unwrap();
        let split = &env.star(&zw, &x).unwrap() + &env.star(&zw, &y).unwrap().scaled(&c);
        prop_assert_eq!(right, split);
    }

    #[test]
    fn star_adds_parities(seed in any::<u64>(), which in 0usize..7) {
        let spec = catalog_spec(which);
        let env = Envelope::new(&spec);
        let mut r = rng(seed);
        let b = spec.basis().clone();
        let mut hom = |p: Parity| common::homogeneous_nonzero(&mut r, &b, p).map(|v| env.lift(&v));
        for pa in [Parity::Even, Parity::Odd] {
            for pb in [Parity::Even, Parity::Odd] {
                let (Some(x), Some(y), Some(z)) = (hom(pa), hom(pb), hom(Parity::Even)) else { continue };
                let xz = env.star(&x, &z).unwrap();
                let prod = env.star(&xz, &y).unwrap();
                if !prod.is_zero() {
                    prop_assert_eq!(prod.parity(), Some(pa + pb));
                }
            }
        }
    }

    #[test]
    fn zero_ternary_gives_zero_generator_associators(seed in any::<u64>(), name in prop::sample::select(vec!["quaternions", "mat-assoc-1-1", "trivial-2-2"])) {
        let spec = build_example(name).unwrap().to_akivis().unwrap();
        prop_assert!((0..spec.dim()).all(|i| (0..spec.dim()).all(|j| (0..spec.dim()).all(|k| spec.ternary(i, j, k).is_zero()))));
        let env = Envelope::new(&spec);
        let mut r = rng(seed);
        let dim = spec.dim();
        let (x, y, z) = (
            env.lift(&common::vector(&mut r, dim)),
            env.lift(&common::vector(&mut r, dim)),
            env.lift(&common::vector(&mut r, dim)),
        );
        prop_assert!(env.star_associator(&x, &y, &z).unwrap().is_zero());
    }

    #[test]
    fn relations_vanish_under_evaluation(seed in any::<u64>(), which in 0usize..7) {
        let spec = catalog_spec(which);
        let env = Envelope::new(&spec);
        let mut r = rng(seed);
        let dim = spec.dim();
        for _ in 0..8 {
            let (i, j, k) = (r.random_range(0..dim), r.random_range(0..dim), r.random_range(0..dim));
            prop_assert!(env.eval(&bracket_relation(&spec, i, j)).unwrap().is_zero());
            prop_assert!(env.eval(&associator_relation(&spec, i, j, k)).unwrap().is_zero());
        }
    }

    #[test]
    fn lifted_vectors_round_trip(seed in any::<u64>(), which in 0usize..7) {
        let spec = catalog_spec(which);
        let env = Envelope::new(&spec);
        let v = common::vector(&mut rng(seed), spec.dim());
        prop_assert_eq!(env.iota_roundtrip(&v).unwrap(), v.clone());
        prop_assert_eq!(env.lift(&v).degree_one_part(), v);
    }
}

/// Square rational matrix of side `n + m` as a dense row-major array.
type Matrix = Vec<Vec<Scalar>>;

fn unit_position(name: &str) -> (usize, usize) {
    let (i, j) = name.trim_start_matches('E').split_once('_').unwrap();
    (i.parse::<usize>().unwrap() - 1, j.parse::<usize>().unwrap() - 1)
}

fn to_matrix(spec_names: &[String], v: &Vector, size: usize) -> Matrix {
    let mut m = vec![vec![Scalar::zero(); size]; size];
    for (idx, c) in v.iter() {
        let (i, j) = unit_position(&spec_names[idx]);
        m[i][j] = c.clone();
    }
    m
}

/// Block product with the bottom-right block `-w1 v2 + b1 b2`.
fn twisted_product(x: &Matrix, y: &Matrix, n: usize) -> Matrix {
    let size = x.len();
    let mut out = vec![vec![Scalar::zero(); size]; size];
    for i in 0..size {
        for j in 0..size {
            for k in 0..size {
                let mut t = &x[i][k] * &y[k][j];
                if i >= n && j >= n && k < n {
                    t = -t;
                }
                out[i][j] += &t;
            }
        }
    }
    out
}

#[test]
fn matrix_quasialgebra_matches_block_formula() {
    let mut r = rng(7);
    for n in 1..=3 {
        for m in 1..=3 {
            let t = build_matrix_quasialgebra(n, m).unwrap();
            let names = t.basis().names().to_vec();
            let size = n + m;
            for _ in 0..6 {
                let x = common::vector(&mut r, t.dim());
                let y = common::vector(&mut r, t.dim());
                let got = to_matrix(&names, &t.multiply(&x, &y).unwrap(), size);
                let want = twisted_product(&to_matrix(&names, &x, size), &to_matrix(&names, &y, size), n);
                assert_eq!(got, want, "Mat~({n},{m})");
            }
        }
    }
}

#[test]
fn unit_of_the_envelope_is_neutral() {
    let spec = catalog_spec(0);
    let env = Envelope::new(&spec);
    let x = env.star(&env.gen(3), &env.gen(5)).unwrap();
    assert_eq!(env.star(&EnvElement::unit(), &x).unwrap(), x);
    assert_eq!(env.star(&x, &EnvElement::unit()).unwrap(), x);
}
