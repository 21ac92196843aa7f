fn main() {
    std::process::exit(steiner_cli::run_cli(std::env::args_os()));
}
