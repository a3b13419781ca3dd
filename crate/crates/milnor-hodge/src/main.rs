fn main() {
    std::process::exit(milnor_hodge::cli::run());
}
