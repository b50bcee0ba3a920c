fn main() {
    std::process::exit(gspheres::cli::run(std::env::args_os()));
}
