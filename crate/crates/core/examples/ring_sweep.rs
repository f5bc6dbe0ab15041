//! Critical force against ring count, written as CSV to stdout.

use stiffshell::config::{RunConfig, SweepParameter, SweepSpec};
use stiffshell::sweep::run_sweep;

fn main() -> stiffshell::Result<()> {
    let run = RunConfig {
        sweep: Some(SweepSpec {
            parameter: SweepParameter::RingCount,
            values: vec![0.0, 2.0, 4.0, 6.0, 8.0, 10.0],
        }),
        ..RunConfig::reference()
    };
    print!("{}", run_sweep(&run)?.to_csv());
    Ok(())
}
