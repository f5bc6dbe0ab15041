//! Active damage intervals, the characteristic time and F(T).

use stiffshell::damage::{active_intervals, characteristic_time, damage_modulation};

fn main() -> stiffshell::Result<()> {
    let omega = 100.0;
    for cycles in [1, 2, 3] {
        let iv = active_intervals(omega, cycles)?;
        let t = characteristic_time(omega, cycles)?;
        let spans: Vec<String> = iv.iter().map(|(a, b)| format!("[{a:.5}, {b:.5}]")).collect();
        println!("N_c={cycles}  T={t:.6} s  intervals {}", spans.join(" "));
        for rl in [0.0, 0.5, 1.0] {
            println!("    R_l={rl:<4} F(T)={:.6e}", damage_modulation(omega, t, rl)?);
        }
    }
    Ok(())
}
