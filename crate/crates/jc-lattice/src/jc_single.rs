//! Single Jaynes-Cummings cell: dressed states, ladder energies, and
//! golden-rule decay rates between neighbouring photon-number manifolds.
//!
//! One two-level atom (transition frequency `omega_a = omega_c + delta`)
//! couples to one cavity mode `omega_c` with strength `g`. Within the
//! `n`-excitation manifold the Hamiltonian mixes `|e, n-1>` and `|g, n>`
//! into the dressed doublet `|+, n>`, `|-, n>` through the angle
//! `theta_n = atan2(2 g sqrt(n), delta) / 2`, which stays in `[0, pi/2]`
//! for `g >= 0`.
//!
//! Energies are quoted in the frame with a uniform `-delta/2` offset, so
//! the doublet sits at `n omega_c +/- sqrt(n g^2 + delta^2/4)` and the
//! ground state at `-delta/2`. Uniform offsets cancel in every Bohr
//! frequency.

use num_complex::Complex64;
use thiserror::Error;

use crate::params::CellDamping;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SingleCellError {
    #[error("photon-number manifold {n} is below the minimum {min} for this quantity")]
    InvalidManifold { n: u32, min: u32 },
    #[error("dressed-state angle is undefined at g = 0, delta = 0 (degenerate manifold)")]
    DegenerateAngle,
}

/// Mixing angle `theta_n = atan2(2 g sqrt(n), delta) / 2` of the
/// `n`-excitation doublet. Requires `n >= 1`; errors when both the coupling
/// and the detuning vanish, where the doublet is degenerate and the angle
/// loses meaning.
pub fn dressed_angle(n: u32, g: f64, delta: f64) -> Result<f64, SingleCellError> {
    if n == 0 {
        return Err(SingleCellError::InvalidManifold { n, min: 1 });
    }
    let rabi = 2.0 * g * f64::from(n).sqrt();
    if rabi == 0.0 && delta == 0.0 {
        return Err(SingleCellError::DegenerateAngle);
    }
    Ok(rabi.atan2(delta) / 2.0)
}

/// Energies of the `n`-excitation doublet and of the ground state, all in
/// the `-delta/2`-shifted frame (see module docs).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderEnergies {
    /// `n omega_c + sqrt(n g^2 + delta^2 / 4)`.
    pub omega_plus: f64,
    /// `n omega_c - sqrt(n g^2 + delta^2 / 4)`.
    pub omega_minus: f64,
    /// Ground-state energy `-delta/2`.
    pub omega_ground: f64,
}

/// Doublet and ground energies for manifold `n >= 1`.
pub fn ladder_energies(
    n: u32,
    omega_c: f64,
    g: f64,
    delta: f64,
) -> Result<LadderEnergies, SingleCellError> {
    if n == 0 {
        return Err(SingleCellError::InvalidManifold { n, min: 1 });
    }
    let nf = f64::from(n);
    let split = (nf * g * g + delta * delta / 4.0).sqrt();
    Ok(LadderEnergies {
        omega_plus: nf * omega_c + split,
        omega_minus: nf * omega_c - split,
        omega_ground: -delta / 2.0,
    })
}

/// Dressed doublet of manifold `n`, expressed over `[|e, n-1>, |g, n>]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DressedDoublet {
    /// Mixing angle `theta_n`.
    pub theta: f64,
    /// `|+, n> = cos(theta) |e, n-1> + i sin(theta) |g, n>`.
    pub plus: [Complex64; 2],
    /// `|-, n> = -sin(theta) |e, n-1> + i cos(theta) |g, n>`.
    pub minus: [Complex64; 2],
}

/// Dressed states of manifold `n >= 1`.
pub fn dressed_state(n: u32, g: f64, delta: f64) -> Result<DressedDoublet, SingleCellError> {
    let theta = dressed_angle(n, g, delta)?;
    let (s, c) = theta.sin_cos();
    Ok(DressedDoublet {
        theta,
        plus: [Complex64::new(c, 0.0), Complex64::new(0.0, s)],
        minus: [Complex64::new(-s, 0.0), Complex64::new(0.0, c)],
    })
}

/// Numerical round-off can push an analytically non-negative rate slightly
/// below zero; snap it back.
fn clamp_rate(rate: f64) -> f64 {
    debug_assert!(rate > -1e-12, "rate {rate} is negative beyond round-off");
    rate.max(0.0)
}

/// Decay rates of the first doublet into the ground state:
/// `Gamma_+ = gamma_c + (gamma_a - gamma_c) cos^2(theta_1)` and
/// `Gamma_- = gamma_a - (gamma_a - gamma_c) cos^2(theta_1)`.
/// Their sum is exactly `gamma_a + gamma_c` for any angle.
pub fn doublet_to_ground_rates(theta_1: f64, damping: CellDamping) -> (f64, f64) {
    let c2 = theta_1.cos().powi(2);
    let diff = damping.gamma_a - damping.gamma_c;
    (
        clamp_rate(damping.gamma_c + diff * c2),
        clamp_rate(damping.gamma_a - diff * c2),
    )
}

/// Golden-rule rates between the doublets of manifolds `n` and `n - 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubletRates {
    /// `|+, n> -> |+, n-1>`.
    pub plus_to_plus: f64,
    /// `|+, n> -> |-, n-1>`.
    pub plus_to_minus: f64,
    /// `|-, n> -> |+, n-1>`.
    pub minus_to_plus: f64,
    /// `|-, n> -> |-, n-1>`.
    pub minus_to_minus: f64,
}

impl DoubletRates {
    /// Total decay rate of `|+, n>`.
    pub fn total_from_plus(&self) -> f64 {
        self.plus_to_plus + self.plus_to_minus
    }

    /// Total decay rate of `|-, n>`.
    pub fn total_from_minus(&self) -> f64 {
        self.minus_to_plus + self.minus_to_minus
    }
}

/// Closed-form golden-rule rates for the four transitions from manifold
/// `n >= 2` into manifold `n - 1`.
///
/// With `theta = theta_n`, `theta' = theta_{n-1}`:
///
/// ```text
/// Gamma(+ -> +/-) = [(ga - gc) -/+ (ga + gc) cos 2theta'] cos^2(theta) / 2
///                 + n gc [1 +/- cos 2theta cos 2theta'] / 2
///                 +/- gc sqrt(n(n-1)) sin 2theta sin 2theta' / 2
/// Gamma(- -> +/-) = [(ga - gc) -/+ (ga + gc) cos 2theta'] sin^2(theta) / 2
///                 + n gc [1 -/+ cos 2theta cos 2theta'] / 2
///                 -/+ gc sqrt(n(n-1)) sin 2theta sin 2theta' / 2
/// ```
pub fn inter_doublet_rates(
    n: u32,
    g: f64,
    delta: f64,
    damping: CellDamping,
) -> Result<DoubletRates, SingleCellError> {
    if n < 2 {
        return Err(SingleCellError::InvalidManifold { n, min: 2 });
    }
    let theta = dressed_angle(n, g, delta)?;
    let theta_prev = dressed_angle(n - 1, g, delta)?;
    let (ga, gc) = (damping.gamma_a, damping.gamma_c);
    let nf = f64::from(n);
    let c2 = (2.0 * theta).cos();
    let s2 = (2.0 * theta).sin();
    let c2p = (2.0 * theta_prev).cos();
    let s2p = (2.0 * theta_prev).sin();
    let cos_sq = theta.cos().powi(2);
    let sin_sq = theta.sin().powi(2);
    let cross = gc * (nf * (nf - 1.0)).sqrt() * s2 * s2p / 2.0;
    let photon_corr = nf * gc * c2 * c2p / 2.0;
    let atom_hi = ((ga - gc) - (ga + gc) * c2p) / 2.0;
    let atom_lo = ((ga - gc) + (ga + gc) * c2p) / 2.0;
    Ok(DoubletRates {
        plus_to_plus: clamp_rate(atom_hi * cos_sq + nf * gc / 2.0 + photon_corr + cross),
        plus_to_minus: clamp_rate(atom_lo * cos_sq + nf * gc / 2.0 - photon_corr - cross),
        minus_to_plus: clamp_rate(atom_hi * sin_sq + nf * gc / 2.0 - photon_corr - cross),
        minus_to_minus: clamp_rate(atom_lo * sin_sq + nf * gc / 2.0 + photon_corr + cross),
    })
}

/// Total decay rates of `|+, n>` and `|-, n>` in closed form:
/// `Gamma_+ = n gamma_c + (gamma_a - gamma_c) cos^2(theta_n)` and
/// `Gamma_- = n gamma_c + (gamma_a - gamma_c) sin^2(theta_n)`.
pub fn total_decay_rates(
    n: u32,
    g: f64,
    delta: f64,
    damping: CellDamping,
) -> Result<(f64, f64), SingleCellError> {
    let theta = dressed_angle(n, g, delta)?;
    let nf = f64::from(n);
    let diff = damping.gamma_a - damping.gamma_c;
    Ok((
        clamp_rate(nf * damping.gamma_c + diff * theta.cos().powi(2)),
        clamp_rate(nf * damping.gamma_c + diff * theta.sin().powi(2)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_8};

    /// Direct golden-rule evaluation from matrix elements of the lowering
    /// operators, used as an independent oracle for the closed forms.
    ///
    /// In manifold `n` the dressed states over `[|e, n-1>, |g, n>]` are
    /// `|+, n> = (cos t, i sin t)` and `|-, n> = (-sin t, i cos t)`.
    /// The atomic lowering operator maps `|e, n-1> -> |g, n-1>`; the cavity
    /// operator maps `|e, n-1> -> sqrt(n-1) |e, n-2>` and
    /// `|g, n> -> sqrt(n) |g, n-1>`.
    fn oracle_rates(n: u32, g: f64, delta: f64, damping: CellDamping) -> DoubletRates {
        use num_complex::Complex64 as C;
        let hi = dressed_state(n, g, delta).unwrap();
        let lo = dressed_state(n - 1, g, delta).unwrap();
        let nf = f64::from(n);
        let rate = |init: &[C; 2], fin: &[C; 2]| -> f64 {
            // Atomic channel: only |e, n-1> -> |g, n-1> contributes.
            let atom = fin[1].conj() * init[0];
            // Cavity channel: |e, n-1> -> |e, n-2> and |g, n> -> |g, n-1>.
            let cavity =
                fin[0].conj() * ((nf - 1.0).sqrt() * init[0]) + fin[1].conj() * (nf.sqrt() * init[1]);
            damping.gamma_a * atom.norm_sqr() + damping.gamma_c * cavity.norm_sqr()
        };
        DoubletRates {
            plus_to_plus: rate(&hi.plus, &lo.plus),
            plus_to_minus: rate(&hi.plus, &lo.minus),
            minus_to_plus: rate(&hi.minus, &lo.plus),
            minus_to_minus: rate(&hi.minus, &lo.minus),
        }
    }

    #[test]
    fn angle_matches_hand_values() {
        assert!((dressed_angle(1, 1.0, 2.0).unwrap() - FRAC_PI_8).abs() < 1e-15);
        assert!((dressed_angle(1, 1.0, 0.0).unwrap() - FRAC_PI_4).abs() < 1e-15);
        assert!((dressed_angle(4, 1.0, 0.0).unwrap() - FRAC_PI_4).abs() < 1e-15);
        // Large positive detuning: angle -> 0; large negative: -> pi/2.
        assert!(dressed_angle(1, 1e-3, 1e6).unwrap() < 1e-8);
        assert!((dressed_angle(1, 1e-3, -1e6).unwrap() - std::f64::consts::FRAC_PI_2) < 1e-8);
    }

    #[test]
    fn angle_error_cases() {
        assert_eq!(
            dressed_angle(0, 1.0, 0.0),
            Err(SingleCellError::InvalidManifold { n: 0, min: 1 })
        );
        assert_eq!(dressed_angle(1, 0.0, 0.0), Err(SingleCellError::DegenerateAngle));
    }

    #[test]
    fn ladder_energy_hand_values() {
        let e = ladder_energies(1, 10.0, 1.0, 0.0).unwrap();
        assert_eq!((e.omega_plus, e.omega_minus, e.omega_ground), (11.0, 9.0, 0.0));
        let e = ladder_energies(1, 10.0, 0.0, 2.0).unwrap();
        assert_eq!((e.omega_plus, e.omega_minus, e.omega_ground), (11.0, 9.0, -1.0));
        let e = ladder_energies(2, 10.0, 1.0, 0.0).unwrap();
        assert!((e.omega_plus - (20.0 + 2.0_f64.sqrt())).abs() < 1e-15);
        assert!((e.omega_minus - (20.0 - 2.0_f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn dressed_states_are_orthonormal() {
        let d = dressed_state(3, 0.7, -1.3).unwrap();
        let norm_p: f64 = d.plus.iter().map(|z| z.norm_sqr()).sum();
        let norm_m: f64 = d.minus.iter().map(|z| z.norm_sqr()).sum();
        let overlap = d.plus[0].conj() * d.minus[0] + d.plus[1].conj() * d.minus[1];
        assert!((norm_p - 1.0).abs() < 1e-15);
        assert!((norm_m - 1.0).abs() < 1e-15);
        assert!(overlap.norm() < 1e-15);
    }

    #[test]
    fn first_doublet_rates_at_resonance_and_detuned_limit() {
        let damping = CellDamping::new(0.05, 0.02);
        // Resonance: both rates average to (ga + gc) / 2.
        let (p, m) = doublet_to_ground_rates(FRAC_PI_4, damping);
        assert!((p - 0.035).abs() < 1e-15);
        assert!((m - 0.035).abs() < 1e-15);
        // theta -> 0: |+> is atom-like, |-> is photon-like.
        let (p, m) = doublet_to_ground_rates(0.0, damping);
        assert_eq!((p, m), (0.05, 0.02));
    }

    #[test]
    fn inter_doublet_bare_limit() {
        // theta_2 = theta_1 = 0: |+, 2> = |e, 1> decays by photon loss to
        // |e, 0> (rate gamma_c) and by atomic decay to |g, 1> (rate gamma_a).
        let damping = CellDamping::new(0.05, 0.02);
        let r = inter_doublet_rates(2, 0.0, 5.0, damping).unwrap();
        assert!((r.plus_to_plus - 0.02).abs() < 1e-15);
        assert!((r.plus_to_minus - 0.05).abs() < 1e-15);
        assert!((r.minus_to_plus - 0.0).abs() < 1e-15);
        assert!((r.minus_to_minus - 2.0 * 0.02).abs() < 1e-15);
    }

    #[test]
    fn inter_doublet_requires_second_manifold() {
        let damping = CellDamping::new(0.05, 0.02);
        assert_eq!(
            inter_doublet_rates(1, 1.0, 0.0, damping),
            Err(SingleCellError::InvalidManifold { n: 1, min: 2 })
        );
    }

    #[test]
    fn closed_rates_match_golden_rule_oracle() {
        let damping = CellDamping::new(0.073, 0.019);
        for n in [2_u32, 3, 4, 7] {
            for &(g, delta) in &[(1.0, 0.0), (0.6, 1.7), (2.0, -3.3), (0.1, 8.0)] {
                let closed = inter_doublet_rates(n, g, delta, damping).unwrap();
                let oracle = oracle_rates(n, g, delta, damping);
                assert!((closed.plus_to_plus - oracle.plus_to_plus).abs() < 1e-12);
                assert!((closed.plus_to_minus - oracle.plus_to_minus).abs() < 1e-12);
                assert!((closed.minus_to_plus - oracle.minus_to_plus).abs() < 1e-12);
                assert!((closed.minus_to_minus - oracle.minus_to_minus).abs() < 1e-12);
            }
        }
    }

    proptest! {
        /// The two first-doublet rates always sum to gamma_a + gamma_c.
        #[test]
        fn first_doublet_sum_rule(
            theta in 0.0..std::f64::consts::FRAC_PI_2,
            ga in 0.0..1.0f64,
            gc in 0.0..1.0f64,
        ) {
            let (p, m) = doublet_to_ground_rates(theta, CellDamping::new(ga, gc));
            prop_assert!((p + m - (ga + gc)).abs() < 1e-15 * (1.0 + ga + gc));
        }

        /// Branch rates sum to the closed-form total rate.
        #[test]
        fn branch_rates_sum_to_totals(
            n in 2u32..6,
            g in 0.05..3.0f64,
            delta in -6.0..6.0f64,
            ga in 0.0..0.5f64,
            gc in 0.0..0.5f64,
        ) {
            let damping = CellDamping::new(ga, gc);
            let rates = inter_doublet_rates(n, g, delta, damping).unwrap();
            let (tp, tm) = total_decay_rates(n, g, delta, damping).unwrap();
            prop_assert!((rates.total_from_plus() - tp).abs() < 1e-12);
            prop_assert!((rates.total_from_minus() - tm).abs() < 1e-12);
        }

        /// The rate imbalance of the first doublet is exactly
        /// `(gamma_a - gamma_c) cos(2 theta_1)`: the two rates coincide
        /// precisely at the equal-mixture angle.
        #[test]
        fn rate_imbalance_tracks_mixing(
            theta in 0.0..std::f64::consts::FRAC_PI_2,
        ) {
            let damping = CellDamping::new(0.05, 0.02);
            let (p, m) = doublet_to_ground_rates(theta, damping);
            let imbalance = (damping.gamma_a - damping.gamma_c) * (2.0 * theta).cos();
            prop_assert!((p - m - imbalance).abs() < 1e-15);
            if (2.0 * theta).cos().abs() > 1e-6 {
                prop_assert!((p - m).abs() > 1e-9);
            }
        }

        /// Closed forms agree with the golden-rule oracle across the
        /// parameter space.
        #[test]
        fn oracle_agreement(
            n in 2u32..5,
            g in 0.05..2.0f64,
            delta in -5.0..5.0f64,
            ga in 0.0..0.3f64,
            gc in 0.0..0.3f64,
        ) {
            let damping = CellDamping::new(ga, gc);
            let closed = inter_doublet_rates(n, g, delta, damping).unwrap();
            let oracle = oracle_rates(n, g, delta, damping);
            prop_assert!((closed.plus_to_plus - oracle.plus_to_plus).abs() < 1e-12);
            prop_assert!((closed.plus_to_minus - oracle.plus_to_minus).abs() < 1e-12);
            prop_assert!((closed.minus_to_plus - oracle.minus_to_plus).abs() < 1e-12);
            prop_assert!((closed.minus_to_minus - oracle.minus_to_minus).abs() < 1e-12);
        }
    }
}
