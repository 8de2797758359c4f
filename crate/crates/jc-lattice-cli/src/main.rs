fn main() {
    std::process::exit(jc_lattice_cli::run(std::env::args().skip(1)));
}
