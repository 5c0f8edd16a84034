fn main() {
    let (code, out) = pargraph::cli::run_args(std::env::args_os());
    println!("{out}");
    std::process::exit(code);
}
