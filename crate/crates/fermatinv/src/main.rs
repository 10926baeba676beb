fn main() {
    // Restore default SIGPIPE disposition so a closed pipe (e.g. `| head`)
    // terminates the process instead of panicking mid-write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(fermatinv::cli::run());
}
