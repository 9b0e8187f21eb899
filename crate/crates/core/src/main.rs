fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("ZEMM_LOG", "warn")).init();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = zemm::cli::main_with_args(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code);
}
