fn main() {
    std::process::exit(isospectral::cli::run());
}
