use std::io::Write;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let (stdout, stderr, code) = arrowpoly::cli::run(&argv);
    print!("{stdout}");
    if !stderr.is_empty() {
        let _ = write!(std::io::stderr(), "{stderr}");
    }
    std::process::exit(code);
}
