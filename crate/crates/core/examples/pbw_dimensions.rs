// Graded dimensions of the enveloping superalgebra for each catalog
// example, from the closed recursion and from explicit enumeration.

use akivis::catalog::catalog;
use akivis::envelope::Envelope;

pub fn run_example() -> String {
    let mut out = String::new();
    for d in catalog() {
        let spec = d.build().unwrap().to_akivis().unwrap();
        let env = Envelope::new(&spec);
        let dims: Vec<String> = (0..=4)
            .map(|n| {
                let recursion = env.graded_dim(n).unwrap();
                let listed = env.pbw_basis(n).unwrap().len() as u128;
                assert_eq!(recursion, listed);
                recursion.to_string()
            })
            .collect();
        out.push_str(&format!("{:<18} {}\n", d.name, dims.join(" ")));
    }
    out
}

fn main() {
    print!("{}", run_example());
}
