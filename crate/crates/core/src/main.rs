fn main() {
    std::process::exit(frobwc::cli::run(std::env::args_os()));
}
