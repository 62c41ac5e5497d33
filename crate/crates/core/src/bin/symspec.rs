fn main() {
    std::process::exit(symspec::cli::run(std::env::args_os()));
}
