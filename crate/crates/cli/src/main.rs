fn main() {
    std::process::exit(ddqpc_cli::run_main(std::env::args().skip(1)));
}
