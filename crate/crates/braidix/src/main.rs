fn main() {
    let args: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    std::process::exit(braidix::cli::dispatch(&args, &mut out));
}
