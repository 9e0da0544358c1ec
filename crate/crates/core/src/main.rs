fn main() {
    std::process::exit(strongedge::cli::run(std::env::args_os()));
}
