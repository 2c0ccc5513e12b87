fn main() -> std::process::ExitCode {
    fe_umbral::cli::main()
}
