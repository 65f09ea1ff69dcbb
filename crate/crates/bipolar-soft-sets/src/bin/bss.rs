fn main() {
    std::process::exit(bipolar_soft_sets::cli::run());
}
