fn main() {
    std::process::exit(fcpoincare::cli::main_from_env());
}
