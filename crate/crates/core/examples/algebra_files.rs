// Writes an algebra in the text format, reads it back, and reads a small
// hand-written Akivis spec.

use akivis::catalog::build_quaternions;
use akivis::format::AlgebraFile;
use akivis::identity::classify;

const HANDWRITTEN: &str = "\
# sl(2) with a ternary map that breaks the Akivis identity
name broken
kind akivis-spec
even h e f
h e = 2 e
e h = -2 e
h f = -2 f
f h = 2 f
e f = h
f e = -1 h
h e f = 1 h
";

pub fn run_example() -> String {
    let file = AlgebraFile::new("quaternions", build_quaternions());
    let text = file.emit();
    let back = AlgebraFile::parse(&text).unwrap();
    assert_eq!(back, file);
    let mut out = format!("{} lines, round trip ok\n", text.lines().count());

    let broken = AlgebraFile::parse(HANDWRITTEN).unwrap();
    let spec = broken.algebra.to_akivis().unwrap();
    out.push_str(&format!("{}: {}\n", broken.name, classify(&spec)));

    let bad = HANDWRITTEN.replace("f e = -1 h", "f e = 1 h");
    match AlgebraFile::parse(&bad) {
        Ok(_) => out.push_str("unexpectedly accepted\n"),
        Err(e) => out.push_str(&format!("rejected: {e}\n")),
    }
    out
}

fn main() {
    print!("{}", run_example());
}
