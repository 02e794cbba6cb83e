fn main() -> std::process::ExitCode {
    zdg::cli::main()
}
