fn main() {
    std::process::exit(hbim::cli::run(std::env::args_os()));
}
