fn main() {
    std::process::exit(lieact::cli::run_cli(std::env::args_os()));
}
