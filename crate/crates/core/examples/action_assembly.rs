//! Block-by-block action coefficients for one mode of the reference shell.

use stiffshell::action::{assemble_breakdown, ActionQuadraticForm};
use stiffshell::damage::characteristic_time;
use stiffshell::{ModeIndex, ShellConfig};

fn row(name: &str, f: &ActionQuadraticForm) {
    let [l11, l12, l13, l22, l23, l33] = f.coefficients();
    println!("{name:<12} {l11:>12.4e} {l12:>12.4e} {l13:>12.4e} {l22:>12.4e} {l23:>12.4e} {l33:>12.4e}");
}

fn main() -> stiffshell::Result<()> {
    let mut cfg = ShellConfig::reference();
    cfg.loading.p1 = 1.0e4;
    let t = characteristic_time(cfg.loading.omega, cfg.damage.cycles)?;
    let mode = ModeIndex::new(5, 1)?;
    let b = assemble_breakdown(&cfg, mode, t)?;

    println!("{:<12} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12}", "block", "l11", "l12", "l13", "l22", "l23", "l33");
    row("shell", &b.shell);
    for (i, r) in b.rods.iter().enumerate() {
        row(&format!("rod {i}"), r);
    }
    for (j, r) in b.rings.iter().enumerate() {
        row(&format!("ring {j}"), r);
    }
    row("foundation", &b.foundation);
    row("medium", &b.medium);
    row("damage", &b.damage);
    row("total", &b.total());
    println!("phi* = {:.6e}  (p1 = {} Pa)", b.phi_star, cfg.loading.p1);
    Ok(())
}
