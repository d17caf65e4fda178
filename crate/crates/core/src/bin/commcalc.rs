use std::io::Write;

fn main() {
    let inv = commutator_core::cli::main_with_args(std::env::args_os());
    let _ = if inv.stderr {
        std::io::stderr().write_all(inv.output.as_bytes())
    } else {
        std::io::stdout().write_all(inv.output.as_bytes())
    };
    std::process::exit(inv.code);
}
