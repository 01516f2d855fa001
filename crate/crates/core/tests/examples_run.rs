// Each example is compiled in here so its output can be asserted.

#[allow(dead_code)]
mod octonion_table {
    include!("../examples/octonion_table.rs");
}
#[allow(dead_code)]
mod identity_checks {
    include!("../examples/identity_checks.rs");
}
#[allow(dead_code)]
mod matrix_quasialgebra {
    include!("../examples/matrix_quasialgebra.rs");
}
#[allow(dead_code)]
mod envelope_star {
    include!("../examples/envelope_star.rs");
}
#[allow(dead_code)]
mod pbw_dimensions {
    include!("../examples/pbw_dimensions.rs");
}
#[allow(dead_code)]
mod algebra_files {
    include!("../examples/algebra_files.rs");
}

fn has_line(out: &str, line: &str) -> bool {
    out.lines().any(|l| l.trim_end() == line)
}

#[test]
fn octonion_table_example() {
    let out = octonion_table::run_example();
    assert!(has_line(&out, "e4     0  2e5  2e6  2e7 -2e0    0    0    0"), "{out}");
    assert!(has_line(&out, "classification: proper-akivis"));
}

#[test]
fn identity_checks_example() {
    let out = identity_checks::run_example();
    assert!(has_line(&out, "SJ(e3, e7, e2) = 12 e6"), "{out}");
    assert!(has_line(&out, "((e4 e2)e3)e5 - ((e2 e3)e5)e4 = -16 e0"));
    assert!(has_line(&out, "(e4 e3)(e2 e5) = 8 e0"));
}

#[test]
fn matrix_quasialgebra_example() {
    let out = matrix_quasialgebra::run_example();
    assert!(has_line(&out, "x       -x   -2x     0     b"), "{out}");
    assert!(has_line(&out, "SJ(x, y, x) = 4x"));
    assert!(has_line(&out, "doubled-squares instance holds: false"));
}

#[test]
fn envelope_star_example() {
    let out = envelope_star::run_example();
    assert!(has_line(&out, "e5 * e4            = -1 e4e5"), "{out}");
    assert!(out.contains("embedding-relations      pass"));
}

#[test]
fn pbw_dimensions_example() {
    let out = pbw_dimensions::run_example();
    assert!(has_line(&out, "octonions          1 8 32 88 2432"), "{out}");
    assert!(has_line(&out, "mat-quasi-2-1      1 9 41 129 4003"));
}

#[test]
fn algebra_files_example() {
    let out = algebra_files::run_example();
    assert!(out.contains("round trip ok"), "{out}");
    assert!(has_line(&out, "broken: not-akivis"));
}
