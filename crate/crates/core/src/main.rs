fn main() {
    std::process::exit(signconj::cli::main());
}
