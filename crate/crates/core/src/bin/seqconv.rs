use std::io::Write;

fn main() {
    let workers = std::env::var(seqconv::cli::WORKERS_ENV).ok();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let code = seqconv::cli::main_with(
        std::env::args_os(),
        workers.as_deref(),
        &mut out,
        &mut std::io::stderr(),
    );
    if out.flush().is_err() && code == 0 {
        std::process::exit(2);
    }
    drop(out);
    std::process::exit(code);
}
