use std::io::Write;

fn main() {
    let out = cayley_pst::cli::run(std::env::args_os());
    print!("{}", out.stdout);
    if !out.stderr.is_empty() {
        let _ = writeln!(std::io::stderr(), "{}", out.stderr.trim_end());
    }
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
