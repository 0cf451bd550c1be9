//! Exact arithmetic for Looijenga pairs with short anticanonical cycles.
//!
//! A Looijenga pair `(Y, D)` is a smooth rational surface with an
//! anticanonical cycle of rational curves `D = D_1 + ... + D_n`. Pairs are
//! described by the sequence `a_i = -D_i^2`; toric models carry their
//! interior blowups as per-component counts.

pub mod classifier;
pub mod cycle;
pub mod error;
pub mod fan;
pub mod lattice;
pub mod marked;
pub mod tables;
pub mod transforms;

pub use classifier::{
    deformation_types, feasible_presentations, orbit_upper_bound, realized_subgroup, Count,
    Presentation, RealizedSymmetry, TypeCount,
};
pub use cycle::{
    dihedral_alignment, dihedral_canonical, dihedral_equivalent, intersection_matrix,
    invariants_of, is_negative_definite, symmetry_group, Cycle, DihedralElement, PairInvariants,
};
pub use error::{Error, Result};
pub use fan::{cycle_from_fan, fan_from_cycle, Fan, FanSymmetry};
pub use lattice::{det2, is_primitive, smith_normal_form, GroupInvariants, LatticeVector, Matrix2};
pub use marked::{
    add_marks, elliptic_pair, fundamental_group, standard_models, MarkedPair, ModelName,
    StandardModel,
};
pub use tables::{
    embedded_rows, replay, verify_all, ReplayMode, ReplayReport, ReplayStatus, RowSource, TableRow,
    VerificationSummary,
};
pub use transforms::{
    elem_transform, find_path, relative_elem_transform, relative_reachable, Move, Path,
    SearchBounds,
};
