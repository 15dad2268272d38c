fn main() { std::process::exit(firmcor::cli::main_exit()); }
