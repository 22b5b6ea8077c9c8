//! Shared inputs for the criterion benches.

use extremal_core::{build_family_member, FamilyMemberSpec, Graph, Parameters};

/// Instances small enough to search exhaustively inside a bench iteration.
pub const SEARCH_INSTANCES: &[(usize, usize, usize)] = &[(6, 1, 4), (7, 2, 3), (8, 3, 2)];

/// A dense eight-vertex family member: backbone for k = 2, d = 3 plus two
/// outside vertices on a four-block window.
pub fn dense_member() -> Graph {
    let p = Parameters::new(8, 2, 3).expect("valid instance");
    build_family_member(p, &FamilyMemberSpec::four(1, 1, 2))
        .expect("valid spec")
        .0
}
