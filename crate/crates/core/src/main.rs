fn main() {
    std::process::exit(qrk::cli::run(std::env::args_os()));
}
