//! Tree-specific solvers.

mod centroid;
mod feasibility;
mod locate;
mod prune;
mod search;
mod unweighted;
mod weighted;

pub use centroid::centroid;
pub use feasibility::feasibility_tree;
pub use locate::{locate_center_subtrees, Designation, HangingSubtree, HangingSubtreeReport, TauCase};
pub use prune::{prune_unpaired_leaves, Pruned};
pub use unweighted::{solve_tree_unweighted, unweighted_center, UnweightedCenter};
pub use weighted::{phase_one, solve_tree_weighted, PhaseOne};
