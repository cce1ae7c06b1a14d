fn main() {
    std::process::exit(treetopo::cli::run(std::env::args_os()));
}
