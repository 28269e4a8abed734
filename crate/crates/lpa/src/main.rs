use std::process::ExitCode;

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes, like any other filter.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    lpa::cli::run()
}
