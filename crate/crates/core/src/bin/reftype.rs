fn main() {
    std::process::exit(reftype::cli::run(std::env::args_os()));
}
