use std::io::Write;

fn main() {
    let out = smallsub::run(std::env::args().collect());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
