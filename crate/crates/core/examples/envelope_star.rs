// Products in the enveloping superalgebra of the octonion Akivis
// superalgebra, and the relations its generators satisfy there.

use akivis::catalog::build_octonions;
use akivis::envelope::Envelope;
use akivis::expr::{parse_expr, Mode};

pub fn run_example() -> String {
    let spec = build_octonions().derive_akivis().unwrap();
    let env = Envelope::new(&spec);
    let basis = spec.basis();
    let mut out = String::new();
    for text in [
        "e5 * e4",
        "e4 * e4",
        "(e1 * e2) * e4",
        "e1 * (e2 * e4)",
        "(e4 e2) e3",
        "(e1 e1) (e2 e3)",
    ] {
        let value = parse_expr(text, basis, Mode::Envelope)
            .unwrap()
            .eval_envelope(&env)
            .unwrap();
        out.push_str(&format!("{text:<18} = {}\n", value.render(basis)));
    }
    let report = env.verify_embedding_relations().unwrap();
    out.push_str(&report.to_text(basis));
    out
}

fn main() {
    print!("{}", run_example());
}
