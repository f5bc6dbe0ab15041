//! Closed-form stiffener integrals I1..I9 next to adaptive quadrature.
//!
//!     cargo run --example profile_integrals -- 5 1

use stiffshell::quadrature::*;
use stiffshell::{ModeIndex, ShellConfig};

fn main() -> stiffshell::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mode = ModeIndex::new(*args.first().unwrap_or(&5), *args.get(1).unwrap_or(&1))?;
    let cfg = ShellConfig::reference();
    let spec = QuadratureSpec::default();

    let rod = &cfg.rods[0];
    let a = rod_profile_integrals(rod, &cfg.geometry, mode);
    let b = rod_profile_integrals_by_quadrature(rod, &cfg.geometry, mode, &spec)?;
    let ring = &cfg.rings[0];
    let c = ring_profile_integrals(ring, mode);
    let d = ring_profile_integrals_by_quadrature(ring, mode, &spec)?;

    println!("mode n={} m={}", mode.n, mode.m);
    println!("{:>4} {:>22} {:>22} {:>10}", "", "closed form", "quadrature", "rel");
    let rows = [
        ("I1", a.i1, b.i1),
        ("I2", a.i2, b.i2),
        ("I3", a.i3, b.i3),
        ("I4", a.i4, b.i4),
        ("I5", a.i5, b.i5),
        ("I6", c.i6, d.i6),
        ("I7", c.i7, d.i7),
        ("I8", c.i8, d.i8),
        ("I9", c.i9, d.i9),
    ];
    for (name, x, y) in rows {
        println!("{name:>4} {x:>22.15e} {y:>22.15e} {:>10.1e}", ((x - y) / y).abs());
    }
    Ok(())
}
