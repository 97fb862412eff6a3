fn main() {
    std::process::exit(goldenbase::run());
}
