//! Parse a configuration and print its canonical SI echo.
//!
//!     cargo run --example config_echo -- configs/ring_count.toml

use std::path::Path;

use stiffshell::config::{canonical_echo, load_config, parse_config};

fn main() -> stiffshell::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "configs/reference.toml".into());
    let run = load_config(Path::new(&path))?;
    let echo = canonical_echo(&run)?;
    print!("{echo}");
    assert_eq!(parse_config(&echo)?, run, "echo must parse back to the same configuration");
    Ok(())
}
