fn main() {
    std::process::exit(fhpt::cli::run(std::env::args_os()));
}
