fn main() {
    std::process::exit(localmode::cli::run());
}
