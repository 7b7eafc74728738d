fn main() {
    std::process::exit(stmult::cli::run(std::env::args_os()));
}
