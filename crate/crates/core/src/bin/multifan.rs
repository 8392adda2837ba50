fn main() {
    std::process::exit(multifan::cli::main_with_args(std::env::args_os()));
}
