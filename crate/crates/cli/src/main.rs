fn main() {
    std::process::exit(octoek_cli::run(std::env::args_os()));
}
