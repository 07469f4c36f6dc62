fn main() {
    std::process::exit(asymfit::cli::run(std::env::args_os()));
}
