fn main() {
    let code = qnet::cli::run(std::env::args_os(), &mut std::io::stderr());
    std::process::exit(code);
}
