fn main() {
    std::process::exit(hypercontracts_cli::main_with(std::env::args_os()));
}
