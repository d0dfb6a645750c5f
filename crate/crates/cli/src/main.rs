fn main() {
    std::process::exit(permcycle_cli::run(std::env::args_os()));
}
