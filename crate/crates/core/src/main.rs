fn main() {
    std::process::exit(qcholder::harness::run_cli(std::env::args_os()));
}
