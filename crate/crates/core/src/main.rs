fn main() { std::process::exit(cubeturan::cli::run(std::env::args_os())) }
