//! Permutations, their statistics, weak signatures and Foata's transform.

mod permutation;
mod signature;
mod stats;

pub use permutation::Permutation;
pub use signature::{has_only_even_odd_descents, signature_of, SignatureFunction, WeakSignature};
pub use stats::{
    cyc, des, dom, drop, embrace, fixed_points, foata, lma, parity_maxmin, rmi, shape,
    tops_bottoms, Embrace, Shape, ShapeCounts, Stat, StatVector,
};
