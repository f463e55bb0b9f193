fn main() {
    std::process::exit(pi_forge::cli::main_with_args(std::env::args_os()));
}
