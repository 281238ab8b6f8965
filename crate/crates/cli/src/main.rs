fn main() {
    // Die quietly when the downstream consumer closes the pipe, the way
    // other line-oriented filters do.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(outersq::run(std::env::args_os()));
}
