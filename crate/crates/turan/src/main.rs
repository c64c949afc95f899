fn main() { std::process::exit(turan::cli::main_entry()); }
