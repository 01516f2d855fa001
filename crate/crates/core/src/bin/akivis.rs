fn main() {
    std::process::exit(akivis::cli::run(std::env::args_os()));
}
