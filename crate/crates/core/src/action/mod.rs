//! Involutive group actions on even-odd and odd-odd descent permutations
//! and their orbits.

mod fbar;
mod hop;
mod normalizer;
mod orbit;

pub use fbar::{fbar_case, fbar_phi, fbar_toggle, FbarCase};
pub use hop::{free_pairs, interhop, theta, FreeKind, FreePair};
pub use normalizer::{
    normalizer_case, normalizer_phi, normalizer_search, normalizer_toggle, tau_move, NormalizerCase,
};
pub use orbit::{orbit, orbit_sum, orbits_of, Action, Orbit};
