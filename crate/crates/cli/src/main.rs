use std::io;

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let mut stdin = io::stdin().lock();
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    let code = clawcolor_cli::run(
        std::env::args_os(),
        &mut clawcolor_cli::Io {
            stdin: &mut stdin,
            out: &mut out,
            err: &mut err,
        },
    );
    std::process::exit(code);
}
