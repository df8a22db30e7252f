fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(superflows::cli::run(&args[1..]));
}
