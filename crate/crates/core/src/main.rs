fn main() {
    std::process::exit(hallgroup::cli::main_with(std::env::args_os()));
}
