fn main() {
    std::process::exit(baumkuchen::cli::run(std::env::args_os()));
}
