fn main() { std::process::exit(cremona::cli::run()); }
