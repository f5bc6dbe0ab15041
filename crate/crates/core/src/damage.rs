//! Hereditary damage bookkeeping: active-load intervals, the characteristic
//! time T and the modulation F(T) that weights the damage corrections of the
//! action.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Half-cycles `[(π/2 + 2πk)/ω, (3π/2 + 2πk)/ω]` during which the response
/// `sin ωt` decreases and damage grows.
#[derive(Debug, Clone, PartialEq)]
pub struct ActiveIntervals(pub Vec<(f64, f64)>);

impl ActiveIntervals {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn supremum(&self) -> Option<f64> {
        self.0.last().map(|&(_, hi)| hi)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(f64, f64)> {
        self.0.iter()
    }
}

fn check_omega(omega: f64) -> Result<()> {
    if omega.is_finite() && omega > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain {
            value: omega,
            lo: 0.0,
            hi: f64::INFINITY,
        })
    }
}

fn check_cycles(cycles: u32) -> Result<()> {
    if cycles == 0 {
        Err(Error::invalid("cycles", "must be >= 1"))
    } else {
        Ok(())
    }
}

pub fn active_intervals(omega: f64, cycles: u32) -> Result<ActiveIntervals> {
    check_omega(omega)?;
    check_cycles(cycles)?;
    Ok(ActiveIntervals(
        (0..cycles)
            .map(|k| {
                let base = 2.0 * PI * k as f64;
                ((0.5 * PI + base) / omega, (1.5 * PI + base) / omega)
            })
            .collect(),
    ))
}

/// Right end of the last active interval, (3π/2 + 2π(N_c−1))/ω.
pub fn characteristic_time(omega: f64, cycles: u32) -> Result<f64> {
    check_omega(omega)?;
    check_cycles(cycles)?;
    Ok((1.5 * PI + 2.0 * PI * (cycles - 1) as f64) / omega)
}

/// F(T) = (sin²ωT + 4·R_l·sin²(ωT/2)) / 2ω.
pub fn damage_modulation(omega: f64, time: f64, rheologic: f64) -> Result<f64> {
    check_omega(omega)?;
    if !(time.is_finite() && time >= 0.0) {
        return Err(Error::Domain {
            value: time,
            lo: 0.0,
            hi: f64::INFINITY,
        });
    }
    let phase = omega * time;
    Ok(((phase).sin().powi(2) + 4.0 * rheologic * (0.5 * phase).sin().powi(2)) / (2.0 * omega))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_examples() {
        let one = active_intervals(PI, 1).unwrap();
        assert_eq!(one.len(), 1);
        let (lo, hi) = one.0[0];
        assert!((lo - 0.5).abs() < 1e-15 && (hi - 1.5).abs() < 1e-15);

        let two = active_intervals(PI, 2).unwrap();
        let (lo, hi) = two.0[1];
        assert!((lo - 2.5).abs() < 1e-15 && (hi - 3.5).abs() < 1e-15);

        let (lo, hi) = active_intervals(100.0, 1).unwrap().0[0];
        assert!((lo - 0.015_707_963_267_948_967).abs() < 1e-17);
        assert!((hi - 0.047_123_889_803_846_9).abs() < 1e-16);
    }

    #[test]
    fn intervals_are_ordered_and_disjoint() {
        let iv = active_intervals(37.0, 9).unwrap();
        for w in iv.0.windows(2) {
            assert!(w[0].0 < w[0].1 && w[0].1 < w[1].0);
        }
    }

    #[test]
    fn characteristic_time_examples() {
        assert!((characteristic_time(PI, 1).unwrap() - 1.5).abs() < 1e-15);
        assert!((characteristic_time(PI, 3).unwrap() - 5.5).abs() < 1e-15);
        assert!((characteristic_time(100.0, 1).unwrap() - 3.0 * PI / 200.0).abs() < 1e-17);
        for (w, n) in [(1.0, 1), (3.3, 4), (100.0, 12)] {
            let t = characteristic_time(w, n).unwrap();
            assert_eq!(Some(t), active_intervals(w, n).unwrap().supremum());
        }
    }

    #[test]
    fn rejects_bad_frequency() {
        assert!(matches!(active_intervals(0.0, 1), Err(Error::Domain { .. })));
        assert!(matches!(characteristic_time(-1.0, 1), Err(Error::Domain { .. })));
        assert!(characteristic_time(1.0, 0).is_err());
        assert!(damage_modulation(1.0, -1.0, 0.0).is_err());
    }

    #[test]
    fn modulation_examples() {
        assert_eq!(damage_modulation(7.0, 0.0, 0.3).unwrap(), 0.0);
        let undamaged = damage_modulation(100.0, PI / 100.0, 0.0).unwrap();
        assert!(undamaged.abs() < 1e-32);
        // (1 + 0.4 * 0.5) / 200
        let v = damage_modulation(100.0, PI / 200.0, 0.1).unwrap();
        assert!((v - 0.006).abs() < 1e-16);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn modulation_is_periodic(omega in 0.1f64..500.0, t in 0.0f64..10.0, r in -1.0f64..5.0) {
                let a = damage_modulation(omega, t, r).unwrap();
                let b = damage_modulation(omega, t + 2.0 * PI / omega, r).unwrap();
                prop_assert!((a - b).abs() <= 1e-12);
            }

            #[test]
            fn modulation_increases_with_rheologic(omega in 0.1f64..500.0, t in 0.0f64..10.0,
                                                  r in 0.0f64..5.0, dr in 1e-3f64..1.0) {
                let half = (0.5 * omega * t).sin();
                prop_assume!(half.abs() > 1e-6);
                let a = damage_modulation(omega, t, r).unwrap();
                let b = damage_modulation(omega, t, r + dr).unwrap();
                prop_assert!(b > a);
                prop_assert!(a >= 0.0);
            }
        }
    }
}
