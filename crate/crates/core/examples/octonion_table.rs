// Builds the octonions by doubling the quaternions, grades them with the
// quaternions as the even part, and prints the bracket table of the
// derived Akivis superalgebra.

use akivis::catalog::build_octonions;
use akivis::identity::classify;

pub fn run_example() -> String {
    let oct = build_octonions();
    let spec = oct.derive_akivis().expect("grading is closed");
    let basis = spec.basis();
    let mut out = String::new();
    for a in basis.indices() {
        let row: Vec<String> = basis
            .indices()
            .map(|b| format!("{:>5}", basis.format_compact(spec.bracket(a, b))))
            .collect();
        out.push_str(&format!("{:<3}{}\n", basis.name(a), row.join("")));
    }
    out.push_str(&format!("classification: {}\n", classify(&spec)));
    out
}

fn main() {
    print!("{}", run_example());
}
