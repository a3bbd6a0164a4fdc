fn main() {
    std::process::exit(eigenpoints::cli::run(std::env::args_os()));
}
