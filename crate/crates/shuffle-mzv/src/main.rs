fn main() {
    std::process::exit(shuffle_mzv::cli::run(std::env::args_os()));
}
