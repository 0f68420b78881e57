fn main() {
    std::process::exit(chromsym::cli::run(std::env::args_os()));
}
