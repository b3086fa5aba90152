fn main() { std::process::exit(qehrhart::cli::run(std::env::args_os())) }
