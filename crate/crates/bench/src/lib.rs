//! Inputs shared by the benchmarks.

use atk_core::Cycle;

/// Toric cycles one or two moves away from a standard model, by length.
pub fn toric_samples() -> Vec<Cycle> {
    [
        &[0, 1, 1, 2, 1, 1][..],
        &[0, 1, 1, 2, 2, 1, 2],
        &[0, 2, 1, 2, 2, 2, 1, 2],
        &[2, 1, 1, 1, 1, 3, 2, 1, 3],
    ]
    .iter()
    .map(|e| Cycle::new(e.to_vec()).expect("sample cycles have length at least 3"))
    .collect()
}

/// Negative definite cycles with entries at least 2, one per supported length.
pub fn definite_samples() -> Vec<Cycle> {
    [
        &[2, 3, 2, 3, 2, 3][..],
        &[2, 2, 3, 2, 4, 2, 3],
        &[3, 2, 4, 2, 3, 2, 5, 2],
        &[2, 3, 4, 2, 5, 2, 3, 2, 2],
    ]
    .iter()
    .map(|e| Cycle::new(e.to_vec()).expect("sample cycles have length at least 3"))
    .collect()
}
