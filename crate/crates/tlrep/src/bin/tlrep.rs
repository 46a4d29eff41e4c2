fn main() {
    // restore default SIGPIPE handling so that piping into `head` or a pager
    // truncates quietly instead of panicking
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(tlrep::cli::main_with_args(std::env::args_os()));
}
