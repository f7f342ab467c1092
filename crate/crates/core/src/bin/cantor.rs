fn main() {
    std::process::exit(cantor::cli::main_with_args(std::env::args_os()));
}
