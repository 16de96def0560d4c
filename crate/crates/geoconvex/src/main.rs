fn main() {
    std::process::exit(geoconvex::cli::run());
}
