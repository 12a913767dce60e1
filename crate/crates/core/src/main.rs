fn main() {
    std::process::exit(tlh::cli::run_from(std::env::args_os()));
}
