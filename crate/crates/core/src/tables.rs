//! Tables of elementary transformations for n = 7, 8, 9, and two worked
//! sequences for n = 6, with a replay engine.
//!
//! The printed `φ_{i,j}` pairs do not all follow one index order, so replay
//! treats the orientation of every printed pair as unknown and reports which
//! assignment worked. Rows ending in "back to (x)" continue with the moves of
//! the row labeled `x`, after relabeling.

use std::fmt;

use serde::Serialize;

use crate::cycle::{dihedral_equivalent, Cycle};
use crate::error::{Error, Result};
use crate::marked::{ModelName, StandardModel};
use crate::transforms::{elem_transform, find_path, Move, SearchBounds};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowSource {
    /// Keyed by cycle length, 7, 8 or 9.
    Table(u8),
    Worked(u8),
}

impl fmt::Display for RowSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowSource::Table(n) => write!(f, "table n={n}"),
            RowSource::Worked(k) => write!(f, "worked {k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub source: RowSource,
    /// 1-based position within its source, counting every printed row.
    pub row: usize,
    pub label: Option<String>,
    pub start: Cycle,
    /// `(i, j)` exactly as printed in `φ_{i,j}`, 1-based.
    pub listed_moves: Vec<(usize, usize)>,
    pub continuation: Option<String>,
    pub declared_target: ModelName,
}

type Raw = (
    Option<&'static str>,
    &'static [i64],
    &'static [(usize, usize)],
    Option<&'static str>,
);

const TABLE_7: &[Raw] = &[
    (None, &[1, 1, 1, 1, 2, 1, 2], &[], None),
    (None, &[0, 1, 1, 2, 2, 1, 2], &[(4, 1)], None),
    (None, &[0, 1, 1, 3, 1, 2, 1], &[(4, 1)], None),
    (None, &[0, 0, 2, 2, 1, 3, 1], &[(3, 1), (6, 2)], None),
];

// The last column of the n = 8 table names the target model per row.
const TABLE_8: &[(Raw, ModelName)] = &[
    (
        (Some("a"), &[1, 2, 1, 2, 1, 2, 1, 2], &[], None),
        ModelName::Ti,
    ),
    (
        (
            Some("b"),
            &[1, 2, 1, 1, 1, 2, 1, 3],
            &[(6, 3), (8, 5)],
            None,
        ),
        ModelName::Tii,
    ),
    ((None, &[2, 1, 2, 1, 1, 2, 1, 2], &[], None), ModelName::Tii),
    ((None, &[1, 1, 2, 1, 2, 2, 1, 2], &[], None), ModelName::Tii),
    (
        (None, &[1, 1, 1, 1, 2, 2, 1, 3], &[(8, 3)], None),
        ModelName::Tii,
    ),
    (
        (
            Some("c"),
            &[0, 1, 1, 2, 2, 2, 1, 3],
            &[(4, 1), (8, 3)],
            None,
        ),
        ModelName::Tii,
    ),
    (
        (Some("d"), &[0, 2, 1, 2, 2, 2, 1, 2], &[(5, 1)], None),
        ModelName::Ti,
    ),
    (
        (None, &[0, 1, 1, 2, 3, 1, 2, 2], &[(8, 2), (5, 1)], None),
        ModelName::Tii,
    ),
    (
        (
            None,
            &[0, 1, 1, 3, 1, 3, 1, 2],
            &[(4, 1), (4, 1), (6, 3)],
            None,
        ),
        ModelName::Tii,
    ),
    (
        (None, &[0, 1, 1, 3, 2, 1, 3, 1], &[(4, 1), (7, 2)], None),
        ModelName::Tii,
    ),
    (
        (None, &[0, 1, 1, 4, 1, 2, 2, 1], &[(4, 1), (4, 1)], None),
        ModelName::Tii,
    ),
    (
        (
            None,
            &[0, 1, 2, 1, 4, 1, 2, 1],
            &[(5, 1), (3, 8), (5, 2)],
            None,
        ),
        ModelName::Tii,
    ),
    (
        (
            None,
            &[0, 1, 2, 2, 2, 1, 4, 0],
            &[(7, 1), (3, 8), (7, 2)],
            None,
        ),
        ModelName::Tii,
    ),
    (
        (None, &[0, 1, 2, 3, 1, 2, 3, 0], &[(7, 1), (4, 1)], None),
        ModelName::Tii,
    ),
    (
        (
            None,
            &[0, 1, 3, 1, 3, 1, 3, 0],
            &[(7, 1), (7, 1), (4, 8)],
            None,
        ),
        ModelName::Tii,
    ),
];

const TABLE_9: &[Raw] = &[
    // Rulings with sections D1 and D5.
    (
        Some("i"),
        &[2, 1, 2, 1, 3, 1, 2, 2, 1],
        &[(7, 2), (1, 6), (9, 5)],
        None,
    ),
    (None, &[3, 1, 2, 1, 2, 1, 2, 2, 1], &[(8, 4)], Some("i")),
    (None, &[2, 1, 2, 1, 2, 1, 3, 1, 2], &[(9, 4)], Some("i")),
    (
        Some("ii"),
        &[1, 1, 2, 1, 2, 2, 2, 1, 3],
        &[(1, 6), (9, 5)],
        None,
    ),
    (None, &[2, 1, 2, 1, 1, 2, 2, 1, 3], &[(1, 5)], Some("ii")),
    (None, &[2, 2, 1, 2, 2, 1, 2, 2, 1], &[], None),
    // Rulings with sections D1 and D4.
    (None, &[2, 1, 1, 2, 1, 2, 3, 1, 2], &[(6, 2)], Some("ii")),
    (None, &[2, 1, 1, 2, 1, 3, 1, 3, 1], &[(8, 3)], Some("i")),
    (None, &[2, 1, 1, 1, 1, 3, 2, 1, 3], &[(6, 3), (9, 4)], None),
    (
        Some("iii"),
        &[1, 1, 1, 2, 1, 3, 2, 1, 3],
        &[(9, 3), (6, 1)],
        None,
    ),
    (
        Some("iv"),
        &[2, 1, 1, 1, 1, 4, 1, 2, 2],
        &[(6, 3), (1, 5), (6, 2)],
        None,
    ),
    (
        Some("v"),
        &[1, 1, 1, 2, 1, 4, 1, 2, 2],
        &[(6, 2)],
        Some("i"),
    ),
    (
        Some("vi"),
        &[1, 1, 1, 1, 3, 1, 3, 1, 3],
        &[(9, 3), (5, 1)],
        Some("i"),
    ),
    // Rulings with sections D1 and D3.
    (
        None,
        &[2, 0, 3, 1, 2, 2, 2, 2, 1],
        &[(5, 9), (8, 4), (3, 7)],
        None,
    ),
    (
        None,
        &[0, 0, 1, 2, 2, 2, 2, 1, 5],
        &[(9, 2), (4, 1), (9, 3), (5, 1), (9, 4)],
        None,
    ),
    (None, &[1, 0, 1, 1, 3, 2, 2, 1, 4], &[(5, 2)], Some("iv")),
    (
        None,
        &[0, 0, 1, 3, 1, 3, 2, 1, 4],
        &[(9, 2), (4, 1)],
        Some("iii"),
    ),
    (
        None,
        &[1, 0, 1, 2, 1, 4, 2, 1, 3],
        &[(6, 2), (6, 2)],
        Some("i"),
    ),
    (
        None,
        &[2, 0, 1, 1, 2, 3, 2, 1, 3],
        &[(5, 2), (6, 3), (9, 4)],
        None,
    ),
    (
        None,
        &[0, 0, 1, 2, 3, 1, 3, 1, 4],
        &[(9, 2), (4, 1)],
        Some("vi"),
    ),
    (None, &[1, 0, 1, 1, 4, 1, 3, 1, 3], &[(5, 2)], Some("vi")),
    (
        None,
        &[1, 0, 0, 3, 2, 1, 4, 1, 3],
        &[(4, 2), (9, 3)],
        Some("v"),
    ),
    (None, &[1, 0, 1, 2, 2, 1, 5, 1, 2], &[(7, 2)], Some("v")),
    (
        None,
        &[1, 0, 2, 1, 3, 1, 4, 1, 2],
        &[(7, 2), (7, 2)],
        Some("i"),
    ),
    (None, &[1, 0, 2, 2, 1, 3, 3, 1, 2], &[(7, 2), (5, 2)], None),
    (None, &[2, 0, 2, 1, 2, 2, 3, 1, 2], &[(6, 2)], Some("i")),
    (
        None,
        &[1, 0, 0, 2, 2, 3, 1, 2, 4],
        &[(4, 2), (9, 3), (6, 2)],
        None,
    ),
    (
        None,
        &[1, 0, 1, 1, 3, 3, 3, 2, 3],
        &[(5, 2), (9, 3), (5, 2)],
        None,
    ),
    (None, &[1, 0, 2, 1, 2, 4, 1, 2, 2], &[(6, 2), (6, 2)], None),
    (
        None,
        &[1, 0, 0, 2, 3, 2, 1, 3, 3],
        &[(4, 2), (9, 3), (5, 2), (8, 3)],
        None,
    ),
    (None, &[1, 0, 1, 1, 4, 2, 1, 3, 2], &[(5, 2), (8, 3)], None),
    (
        None,
        &[1, 0, 0, 3, 2, 2, 1, 2, 4],
        &[(4, 2), (9, 3), (8, 2), (4, 9), (8, 3)],
        None,
    ),
    (
        None,
        &[1, 0, 1, 2, 2, 2, 1, 5, 1],
        &[(8, 2), (4, 9), (8, 3)],
        None,
    ),
    (None, &[1, 0, 2, 1, 3, 2, 1, 4, 1], &[(8, 2), (5, 9)], None),
    (
        None,
        &[2, 0, 2, 1, 2, 3, 1, 3, 1],
        &[(6, 2), (9, 3)],
        Some("i"),
    ),
];

const WORKED: &[(u8, Raw)] = &[
    (1, (None, &[0, 1, 1, 2, 1, 1], &[(1, 4)], None)),
    (2, (None, &[0, 0, 2, 1, 2, 1], &[(1, 3), (2, 5)], None)),
];

fn build(source: RowSource, row: usize, raw: &Raw, target: ModelName) -> TableRow {
    let (label, start, moves, continuation) = *raw;
    TableRow {
        source,
        row,
        label: label.map(str::to_owned),
        start: Cycle::new(start.to_vec()).expect("embedded cycles have length at least 6"),
        listed_moves: moves.to_vec(),
        continuation: continuation.map(str::to_owned),
        declared_target: target,
    }
}

/// Rows of the table for cycle length `n` (7, 8 or 9); empty otherwise.
pub fn table_rows(n: u8) -> Vec<TableRow> {
    let src = RowSource::Table(n);
    match n {
        7 => TABLE_7
            .iter()
            .enumerate()
            .map(|(i, r)| build(src, i + 1, r, ModelName::T7))
            .collect(),
        8 => TABLE_8
            .iter()
            .enumerate()
            .map(|(i, (r, t))| build(src, i + 1, r, *t))
            .collect(),
        9 => TABLE_9
            .iter()
            .enumerate()
            .map(|(i, r)| build(src, i + 1, r, ModelName::T9))
            .collect(),
        _ => Vec::new(),
    }
}

pub fn worked_rows() -> Vec<TableRow> {
    WORKED
        .iter()
        .map(|(k, r)| build(RowSource::Worked(*k), 1, r, ModelName::T6))
        .collect()
}

/// Every table row for n = 7, 8, 9, in printed order.
pub fn embedded_rows() -> Vec<TableRow> {
    [7, 8, 9].into_iter().flat_map(table_rows).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReplayMode {
    Literal,
    Swapped,
    Auto,
}

impl std::str::FromStr for ReplayMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "literal" => Ok(ReplayMode::Literal),
            "swapped" => Ok(ReplayMode::Swapped),
            "auto" => Ok(ReplayMode::Auto),
            _ => Err(format!(
                "unknown replay mode {s:?}, expected literal, swapped or auto"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReplayStatus {
    LiteralPass,
    PassWithSwappedOrientation,
    PassWithPerMoveFlips,
    ResolvedBySearch,
    Fail,
}

impl ReplayStatus {
    pub fn is_success(&self) -> bool {
        *self != ReplayStatus::Fail
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ReplayStatus::LiteralPass => "literal_pass",
            ReplayStatus::PassWithSwappedOrientation => "pass_with_swapped_orientation",
            ReplayStatus::PassWithPerMoveFlips => "pass_with_per_move_flips",
            ReplayStatus::ResolvedBySearch => "resolved_by_search",
            ReplayStatus::Fail => "fail",
        }
    }
}

/// How one printed pair `(i, j)` was read: as printed means blow up on `D_i`
/// and down onto `D_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    AsPrinted,
    Swapped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReplayReport {
    #[serde(flatten)]
    pub row: TableRow,
    pub mode: ReplayMode,
    pub status: ReplayStatus,
    /// One entry per move of the whole chain, continuation rows included.
    /// Empty when the row was resolved by search or failed.
    pub orientation_choices: Vec<Orientation>,
    /// The moves actually applied, each in the labels of the row it belongs to.
    pub applied_moves: Vec<Move>,
    pub final_cycle: Option<Cycle>,
    pub notes: Vec<String>,
}

/// The row followed by its continuation rows, resolved within the row's table.
fn chain_of(row: &TableRow) -> Result<Vec<TableRow>> {
    let mut chain = vec![row.clone()];
    let mut next = row.continuation.clone();
    while let Some(label) = next {
        let unknown = || Error::UnknownContinuation {
            table: row.start.len() as u8,
            label: label.clone(),
        };
        let RowSource::Table(n) = row.source else {
            return Err(unknown());
        };
        let target = table_rows(n)
            .into_iter()
            .find(|r| r.label.as_deref() == Some(label.as_str()))
            .ok_or_else(unknown)?;
        if chain.len() > TABLE_9.len() {
            return Err(unknown());
        }
        next = target.continuation.clone();
        chain.push(target);
    }
    Ok(chain)
}

fn segment_name(row: &TableRow) -> String {
    match &row.label {
        Some(l) => format!("row ({l})"),
        None => format!("row {} {}", row.row, row.start),
    }
}

/// Applies the chain with `swapped[k]` deciding the k-th move's orientation.
/// On failure, returns the reason and the last cycle reached.
fn run_chain(
    chain: &[TableRow],
    swapped: &[bool],
) -> std::result::Result<(Cycle, Vec<Move>), String> {
    let mut cur = chain[0].start.clone();
    let mut applied = Vec::new();
    let mut k = 0;
    for (s, seg) in chain.iter().enumerate() {
        if s > 0 {
            if !dihedral_equivalent(&cur, &seg.start) {
                return Err(format!(
                    "reached {cur}, which is not a relabeling of the start of {}",
                    segment_name(seg)
                ));
            }
            cur = seg.start.clone();
        }
        for &(i, j) in &seg.listed_moves {
            let (up, down) = if swapped[k] { (j, i) } else { (i, j) };
            k += 1;
            let m = Move::from_labels(up, down).map_err(|e| e.to_string())?;
            cur = elem_transform(&cur, m).map_err(|e| format!("{m} on {cur}: {e}"))?;
            applied.push(m);
        }
    }
    Ok((cur, applied))
}

fn try_assignment(
    chain: &[TableRow],
    swapped: &[bool],
    target: &Cycle,
) -> std::result::Result<(Cycle, Vec<Move>), String> {
    let (end, applied) = run_chain(chain, swapped)?;
    if dihedral_equivalent(&end, target) {
        Ok((end, applied))
    } else {
        Err(format!("ends at {end}, not a relabeling of {target}"))
    }
}

/// Replay one row. Deterministic: in auto mode the as-printed assignment is
/// tried first, then all-swapped, then the mixed assignments in increasing
/// bitmask order (bit k set means move k is swapped).
pub fn replay(row: &TableRow, mode: ReplayMode) -> Result<ReplayReport> {
    let chain = chain_of(row)?;
    let k: usize = chain.iter().map(|r| r.listed_moves.len()).sum();
    let target = StandardModel::get(row.declared_target).cycle;
    let mut report = ReplayReport {
        row: row.clone(),
        mode,
        status: ReplayStatus::Fail,
        orientation_choices: Vec::new(),
        applied_moves: Vec::new(),
        final_cycle: None,
        notes: Vec::new(),
    };
    if chain.len() > 1 {
        let names: Vec<String> = chain[1..].iter().map(segment_name).collect();
        report
            .notes
            .push(format!("continues with {}", names.join(", then ")));
    }

    let masks: Vec<u64> = match mode {
        ReplayMode::Literal => vec![0],
        ReplayMode::Swapped => vec![(1u64 << k) - 1],
        ReplayMode::Auto => {
            let all = (1u64 << k) - 1;
            let mut v = vec![0, all];
            v.extend(1..all);
            v.dedup();
            v
        }
    };
    for (attempt, mask) in masks.iter().enumerate() {
        let swapped: Vec<bool> = (0..k).map(|b| mask >> b & 1 == 1).collect();
        match try_assignment(&chain, &swapped, &target) {
            Ok((end, applied)) => {
                report.status = if *mask == 0 {
                    ReplayStatus::LiteralPass
                } else if swapped.iter().all(|&s| s) {
                    ReplayStatus::PassWithSwappedOrientation
                } else {
                    ReplayStatus::PassWithPerMoveFlips
                };
                report.orientation_choices = swapped
                    .iter()
                    .map(|&s| {
                        if s {
                            Orientation::Swapped
                        } else {
                            Orientation::AsPrinted
                        }
                    })
                    .collect();
                report.applied_moves = applied;
                report.final_cycle = Some(end);
                return Ok(report);
            }
            Err(reason) if attempt < 2 => {
                let which = if *mask == 0 {
                    "as printed"
                } else {
                    "all swapped"
                };
                report.notes.push(format!("{which}: {reason}"));
            }
            Err(_) => {}
        }
    }
    if mode != ReplayMode::Auto {
        if let Ok((end, _)) = run_chain(&chain, &vec![mode == ReplayMode::Swapped; k]) {
            report.final_cycle = Some(end);
        }
        return Ok(report);
    }

    report.notes.push(format!(
        "no orientation assignment of the {k} printed moves reaches {}",
        row.declared_target
    ));
    let bounds = SearchBounds {
        max_moves: k + 2,
        entry_min: SearchBounds::default().entry_min,
    };
    match find_path(&row.start, &target, bounds) {
        Ok(path) => {
            report.status = ReplayStatus::ResolvedBySearch;
            report.notes.push(format!(
                "search found {} moves within max_moves {}",
                path.len(),
                k + 2
            ));
            report.applied_moves = path.moves;
            report.final_cycle = Some(path.end);
        }
        Err(e) => report.notes.push(format!("search: {e}")),
    }
    Ok(report)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StatusCounts {
    pub literal_pass: usize,
    pub pass_with_swapped_orientation: usize,
    pub pass_with_per_move_flips: usize,
    pub resolved_by_search: usize,
    pub fail: usize,
}

impl StatusCounts {
    fn add(&mut self, s: ReplayStatus) {
        match s {
            ReplayStatus::LiteralPass => self.literal_pass += 1,
            ReplayStatus::PassWithSwappedOrientation => self.pass_with_swapped_orientation += 1,
            ReplayStatus::PassWithPerMoveFlips => self.pass_with_per_move_flips += 1,
            ReplayStatus::ResolvedBySearch => self.resolved_by_search += 1,
            ReplayStatus::Fail => self.fail += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationSummary {
    pub mode: ReplayMode,
    pub counts: StatusCounts,
    /// True iff no row failed.
    pub all_resolved: bool,
    pub reports: Vec<ReplayReport>,
}

pub fn verify_rows(rows: &[TableRow], mode: ReplayMode) -> Result<VerificationSummary> {
    let mut counts = StatusCounts::default();
    let mut reports = Vec::with_capacity(rows.len());
    for row in rows {
        let r = replay(row, mode)?;
        counts.add(r.status);
        reports.push(r);
    }
    Ok(VerificationSummary {
        mode,
        all_resolved: counts.fail == 0,
        counts,
        reports,
    })
}

/// Worked sequences first, then the three tables.
pub fn verify_all(mode: ReplayMode) -> VerificationSummary {
    let mut rows = worked_rows();
    rows.extend(embedded_rows());
    verify_rows(&rows, mode).expect("embedded continuations all resolve")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(e: &[i64]) -> Cycle {
        Cycle::new(e.to_vec()).unwrap()
    }

    fn find(n: u8, start: &[i64]) -> TableRow {
        table_rows(n)
            .into_iter()
            .find(|r| r.start.entries() == start)
            .unwrap()
    }

    #[test]
    fn row_counts() {
        assert_eq!(table_rows(7).len(), 4);
        assert_eq!(table_rows(8).len(), 15);
        assert_eq!(table_rows(9).len(), 35);
        assert!(table_rows(6).is_empty());
        assert_eq!(worked_rows().len(), 2);
    }

    #[test]
    fn transcribed_rows() {
        assert_eq!(find(7, &[0, 1, 1, 3, 1, 2, 1]).listed_moves, vec![(4, 1)]);
        let c = find(8, &[0, 1, 1, 2, 2, 2, 1, 3]);
        assert_eq!(c.label.as_deref(), Some("c"));
        assert_eq!(c.listed_moves, vec![(4, 1), (8, 3)]);
        assert_eq!(c.declared_target, ModelName::Tii);
        let i = find(9, &[2, 1, 2, 1, 3, 1, 2, 2, 1]);
        assert_eq!(i.label.as_deref(), Some("i"));
        assert_eq!(i.listed_moves, vec![(7, 2), (1, 6), (9, 5)]);
    }

    #[test]
    fn entry_sums() {
        let off: Vec<Cycle> = embedded_rows()
            .into_iter()
            .filter(|r| r.start.sum() != 3 * r.start.len() as i64 - 12)
            .map(|r| r.start)
            .collect();
        assert_eq!(off, vec![cyc(&[1, 0, 1, 1, 3, 3, 3, 2, 3])]);
    }

    #[test]
    fn worked_sequences_replay_literally() {
        for row in worked_rows() {
            let r = replay(&row, ReplayMode::Literal).unwrap();
            assert_eq!(r.status, ReplayStatus::LiteralPass, "{:?}", r.notes);
            assert_eq!(r.final_cycle, Some(cyc(&[1; 6])));
        }
    }

    #[test]
    fn first_table_row_orientation() {
        let row = find(7, &[0, 1, 1, 2, 2, 1, 2]);
        let lit = replay(&row, ReplayMode::Literal).unwrap();
        assert_eq!(lit.status, ReplayStatus::Fail);
        let sw = replay(&row, ReplayMode::Swapped).unwrap();
        assert_eq!(sw.status, ReplayStatus::PassWithSwappedOrientation);
        assert_eq!(sw.final_cycle, Some(cyc(&[1, 1, 1, 1, 2, 1, 2])));
        assert_eq!(replay(&row, ReplayMode::Auto).unwrap().status, sw.status);
    }

    #[test]
    fn continuation_chain() {
        let row = find(9, &[1, 0, 1, 1, 3, 2, 2, 1, 4]);
        let chain = chain_of(&row).unwrap();
        assert_eq!(chain.len(), 2);
        assert_eq!(chain[1].label.as_deref(), Some("iv"));
        let row = find(9, &[1, 0, 0, 3, 2, 1, 4, 1, 3]);
        let labels: Vec<_> = chain_of(&row)
            .unwrap()
            .iter()
            .map(|r| r.label.clone())
            .collect();
        assert_eq!(labels, vec![None, Some("v".into()), Some("i".into())]);
    }

    #[test]
    fn unknown_continuation() {
        let mut row = find(9, &[3, 1, 2, 1, 2, 1, 2, 2, 1]);
        row.continuation = Some("vii".into());
        assert!(matches!(
            replay(&row, ReplayMode::Auto),
            Err(Error::UnknownContinuation { .. })
        ));
    }

    #[test]
    fn auto_is_deterministic() {
        let row = find(8, &[0, 1, 2, 1, 4, 1, 2, 1]);
        assert_eq!(
            replay(&row, ReplayMode::Auto).unwrap(),
            replay(&row, ReplayMode::Auto).unwrap()
        );
    }
}
