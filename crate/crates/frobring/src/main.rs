fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(frobring::cli::run(&args));
}
