fn main() {
    std::process::exit(qcyclic::cli::main());
}
