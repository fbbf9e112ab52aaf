use std::io::Write;

fn main() {
    let threads = std::env::var("DCT_THREADS").ok().and_then(|s| s.parse::<usize>().ok()).unwrap_or(0);
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().expect("thread pool");
    let out = dct_cli::run(std::env::args_os());
    std::io::stdout().write_all(out.stdout.as_bytes()).expect("stdout");
    std::process::exit(out.code);
}
