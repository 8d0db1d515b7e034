fn main() {
    std::process::exit(leavitt::cli::run());
}
