//! Mode search for the critical pulsation amplitude.
//!
//!     cargo run --example critical_force -- configs/reference.toml

use std::path::Path;

use stiffshell::config::{load_config, RunConfig};
use stiffshell::sweep::run_single;

fn main() {
    let run = match std::env::args().nth(1) {
        Some(p) => load_config(Path::new(&p)),
        None => Ok(RunConfig::reference()),
    };
    match run.and_then(|r| run_single(&r)) {
        Ok(report) => print!("{}", report.render()),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(stiffshell::sweep::exit_code(&e));
        }
    }
}
