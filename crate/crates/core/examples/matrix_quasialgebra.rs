// The antiassociative matrix superalgebra of 2x2 matrices: its bracket in
// the basis a = E11, b = E11 - E22, x = E12, y = E21, and its failure to be
// Lie or Malcev.

use akivis::catalog::build_matrix_quasialgebra;
use akivis::identity::{check_malcev_instance, classify, MalcevPattern};
use akivis::Vector;

pub fn run_example() -> String {
    let table = build_matrix_quasialgebra(1, 1).unwrap();
    let spec = table.derive_akivis().unwrap();
    let basis = spec.basis();
    let e = |name: &str| basis.vector(name).unwrap();
    let a = e("E1_1");
    let b = &e("E1_1") - &e("E2_2");
    let x = e("E1_2");
    let y = e("E2_1");

    let named: [(&str, &Vector); 4] = [("a", &a), ("b", &b), ("x", &x), ("y", &y)];
    // express a result back in the a, b, x, y basis
    let rename = |v: &Vector| -> String {
        let c11 = v.coeff(0);
        let c22 = v.coeff(1);
        // c11 E11 + c22 E22 = (c11 + c22) a - c22 b
        let coords = [
            (c11.clone() + c22.clone(), "a"),
            (-c22, "b"),
            (v.coeff(2), "x"),
            (v.coeff(3), "y"),
        ];
        let terms: Vec<String> = coords
            .iter()
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| {
                if c.is_one() {
                    n.to_string()
                } else if (-c.clone()).is_one() {
                    format!("-{n}")
                } else {
                    format!("{c}{n}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    };

    let mut out = String::from("[,] ");
    for (n, _) in &named {
        out.push_str(&format!("{n:>6}"));
    }
    out.push('\n');
    for (rn, rv) in &named {
        out.push_str(&format!("{rn:<4}"));
        for (_, cv) in &named {
            let br = spec.bracket_eval(rv, cv).unwrap();
            out.push_str(&format!("{:>6}", rename(&br)));
        }
        out.push('\n');
    }

    let sj = spec.super_jacobian(&x, &y, &x).unwrap();
    out.push_str(&format!("SJ(x, y, x) = {}\n", rename(&sj)));
    let inst = check_malcev_instance(&spec, MalcevPattern::DoubledSquares, [&x, &y, &x, &y]).unwrap();
    out.push_str(&format!(
        "doubled-squares instance holds: {}\n",
        inst.passed()
    ));
    out.push_str(&format!("classification: {}\n", classify(&spec)));
    out
}

fn main() {
    print!("{}", run_example());
}
