use clap::Parser;

fn main() {
    let cli = dereq_cli::Cli::parse();
    let out = dereq_cli::run(&cli);
    let text = if out.text.ends_with('\n') { out.text } else { out.text + "\n" };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                std::process::exit(1);
            }
        }
        None => print!("{text}"),
    }
    std::process::exit(out.code);
}
