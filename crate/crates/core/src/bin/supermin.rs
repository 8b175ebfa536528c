fn main() {
    env_logger::init();
    std::process::exit(supermin::cli::run(std::env::args_os()));
}
