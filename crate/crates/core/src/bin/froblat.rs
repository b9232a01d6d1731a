fn main() {
    std::process::exit(froblat::cli::run(std::env::args_os()));
}
