fn main() {
    std::process::exit(lendens::cli::run(std::env::args_os()));
}
