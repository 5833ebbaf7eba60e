//! 2-Motzkin paths, path diagrams, weight systems and the two
//! permutation-to-diagram bijections.

mod bijection;
mod diagram;
mod flajolet;
mod weights;

pub use bijection::{phi, phi_inverse, psi, psi_inverse, psi_table, PsiTable};
pub use diagram::{enumerate_diagrams, enumerate_paths, MotzkinPath, PathDiagram, Step};
pub use flajolet::{diagram_series, flajolet_check, flajolet_generic, generic_path_series, FlajoletOutcome};
pub use weights::WeightScheme;
