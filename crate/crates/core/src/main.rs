fn main() {
    std::process::exit(omega_gft::cli::run());
}
