fn main() {
    let outcome = qccd::cli::run(std::env::args_os());
    println!("{}", outcome.output.trim_end());
    std::process::exit(outcome.code);
}
