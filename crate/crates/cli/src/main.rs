use std::io::{self, Read};
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let mut stdin = String::new();
    if args.iter().skip(1).any(|a| a == "-") {
        if let Err(e) = io::stdin().read_to_string(&mut stdin) {
            eprintln!("cannot read standard input: {e}");
            return ExitCode::from(1);
        }
    }
    let out = artin_cli::run(args, &stdin);
    println!("{}", out.text);
    ExitCode::from(out.exit_code as u8)
}
