use clap::Parser;

fn main() {
    let cli = artin_cli::Cli::parse();
    match artin_cli::run(&cli) {
        Ok((code, out)) => {
            print!("{out}");
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
