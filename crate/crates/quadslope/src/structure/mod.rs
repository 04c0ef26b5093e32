//! Structural decomposition machinery for cubic graphs: exact girth, short
//! supercycles via contraction and breadth-first search, suitable M-cuts,
//! bridge and two-cut shortcuts, Hamiltonian detection, the bound table, and
//! small-order enumeration.

mod bounds;
mod enumerate;
mod girth;
mod hamilton;
mod mcut;
mod supercycle;

pub use bounds::{bounds_table, ceil_log2_ratio, fmax, girth_bound, supercycle_size_bound, BoundReport};
pub use enumerate::{are_isomorphic, enumerate_cubic_graphs, isomorphism, random_cubic};
pub use girth::girth_cycle;
pub use hamilton::find_hamiltonian_cycle;
pub use mcut::{find_bridge_cut, find_suitable_m_cut, find_two_cut_split, Cut, SuitableMCut};
pub use supercycle::find_short_supercycle;

use crate::error::StructureError;
use crate::graph::Graph;

/// Checks that every vertex has degree exactly three.
pub(crate) fn require_cubic(g: &Graph) -> Result<(), StructureError> {
    for v in 0..g.n() {
        if g.degree(v) != 3 {
            return Err(StructureError::NotCubic {
                vertex: v,
                degree: g.degree(v),
            });
        }
    }
    Ok(())
}

/// Checks connectivity.
pub(crate) fn require_connected(g: &Graph) -> Result<(), StructureError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(StructureError::NotConnected)
    }
}
