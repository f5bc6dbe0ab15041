//! Finite-difference Hessian of the space-time quadrature action against
//! the closed-form coefficients.

use stiffshell::action::{assemble_by_quadrature, assemble_closed_form, finite_difference_form};
use stiffshell::damage::characteristic_time;
use stiffshell::selfcheck::oracle_config;
use stiffshell::ModeIndex;

fn main() -> stiffshell::Result<()> {
    let cfg = oracle_config();
    let t = characteristic_time(cfg.loading.omega, 1)?;
    for (n, m) in [(1, 1), (5, 1), (6, 3)] {
        let mode = ModeIndex::new(n, m)?;
        let closed = assemble_closed_form(&cfg, mode, t)?;
        let fd = finite_difference_form(|q| assemble_by_quadrature(&cfg, mode, t, q), 1e-6)?;
        println!("mode ({n},{m})");
        let names = ["l11", "l12", "l13", "l22", "l23", "l33"];
        for ((name, a), b) in names.iter().zip(closed.coefficients()).zip(fd.coefficients()) {
            println!("  {name}  {a:>16.9e}  {b:>16.9e}");
        }
        println!("  phi*  {:>16.9e}  {:>16.9e}", closed.phi_star, fd.phi_star);
    }
    Ok(())
}
