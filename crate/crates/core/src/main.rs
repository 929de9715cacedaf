fn main() {
    std::process::exit(reed_expansion::cli::run(std::env::args_os()));
}
