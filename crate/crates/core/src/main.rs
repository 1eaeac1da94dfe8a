fn main() {
    std::process::exit(turing_bounds::run_cli());
}
