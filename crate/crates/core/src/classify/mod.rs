//! Symmetry labels, PT pairs, exceptional points and the reduction procedure.

mod action;
mod cluster;
mod energy;
mod ep;
mod label;
mod quartet;
mod reduction;
mod subspace;

pub use action::{apply_action, SymmetryAction};
pub use cluster::{degeneracy_clusters, detect_pt_pairs, pair_ids, CLUSTER_TOL, PAIR_TOL};
pub use energy::{rod_energies, rod_energy_ratio};
pub use ep::{locate_exceptional_point, pair_imaginary_part, ExceptionalPoint, EP_TOL_K};
pub use label::{
    classify_at, classify_cluster, classify_solution, corep_families, family_name, match_characters, BlockKind,
    Classification, ClassifiedMode, ClassifyOptions, CorepFamily, ModeLabel, SymmetryBlock, MATCH_TOL,
};
pub use quartet::{verify_quartet_structure, QuartetMatrix, QuartetReport, QUARTET_TOL};
pub use reduction::{fixed_point_profile, reduce, reduce_star, stars_up_to, Reduction, Star, C4V_ORDER};
