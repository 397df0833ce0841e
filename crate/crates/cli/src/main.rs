fn main() {
    std::process::exit(ghilb_cli::run(std::env::args_os()));
}
