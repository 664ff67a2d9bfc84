//! Shared inputs for the criterion benches.

use bell_euler_core::algebra::{int, Rational};

/// The orders swept by the sequence benches.
pub fn alphas() -> Vec<Rational> {
    (0..=3).map(int).collect()
}
