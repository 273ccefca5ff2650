fn main() {
    std::process::exit(villainy_cli::run());
}
