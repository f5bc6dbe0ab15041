//! Full oracle suite, plus the same suite with b12 deliberately negated.

use stiffshell::selfcheck::{self_check, CheckLevel, Fault};

fn main() {
    let report = self_check(CheckLevel::Full, Fault::None);
    print!("{}", report.render());
    println!("\nwith b12 negated:");
    print!("{}", self_check(CheckLevel::Fast, Fault::FlipB12).render());
    if !report.passed() {
        std::process::exit(5);
    }
}
