fn main() {
    std::process::exit(terracini::cli::run());
}
