fn main() {
    std::process::exit(ptcrystal::cli::main_with_args(std::env::args_os()));
}
