fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let (code, out) = ctf_core::cli::run_cli(&argv);
    if code == 0 {
        print!("{out}");
    } else {
        eprint!("{out}");
    }
    std::process::exit(code);
}
