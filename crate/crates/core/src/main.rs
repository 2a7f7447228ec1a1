fn main() {
    let out = bimon::cli::run_command(std::env::args().skip(1));
    println!("{}", out.stdout.trim_end());
    std::process::exit(out.code);
}
