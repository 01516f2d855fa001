// Runs every identity check on the octonion Akivis superalgebra and shows
// the two witnesses that it is neither Lie nor Malcev.

use akivis::catalog::build_octonions;
use akivis::identity::{
    check_akivis_identity, check_lie, check_malcev_instance, check_malcev_ternary,
    check_superanticommutative, MalcevPattern,
};

pub fn run_example() -> String {
    let spec = build_octonions().derive_akivis().unwrap();
    let basis = spec.basis();
    let mut out = String::new();
    for report in [
        check_akivis_identity(&spec),
        check_superanticommutative(&spec),
        check_lie(&spec),
        check_malcev_ternary(&spec),
    ] {
        // keep the summary line only
        let text = report.to_text(basis);
        out.push_str(text.lines().next().unwrap());
        out.push('\n');
    }

    let v = |name: &str| basis.vector(name).unwrap();
    let sj = spec.super_jacobian(&v("e3"), &v("e7"), &v("e2")).unwrap();
    out.push_str(&format!("SJ(e3, e7, e2) = {}\n", basis.format_vector(&sj)));

    let args = [v("e4"), v("e2"), v("e3"), v("e5")];
    let refs = [&args[0], &args[1], &args[2], &args[3]];
    let inst = check_malcev_instance(&spec, MalcevPattern::CyclicDifference, refs).unwrap();
    let w = &inst.witnesses[0];
    out.push_str(&format!(
        "((e4 e2)e3)e5 - ((e2 e3)e5)e4 = {}\n(e4 e3)(e2 e5) = {}\n",
        basis.format_vector(&w.lhs),
        basis.format_vector(&w.rhs)
    ));
    out
}

fn main() {
    print!("{}", run_example());
}
