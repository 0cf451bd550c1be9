//! Elementary transformations and bounded searches over them.
//!
//! On a toric pair whose fan has opposite rays `v_b = -v_c`, the elementary
//! transformation blows up a general point of `D_b` and contracts the strict
//! transform of the fiber through it, which meets `D_c`. On cycles this is
//! `a_b += 1`, `a_c -= 1`. On a marked pair the blown-up point must be one of
//! the existing interior blowups over `D_b`, so a mark moves from `b` to `c`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cycle::{dihedral_canonical, dihedral_equivalent, Cycle, DihedralElement};
use crate::error::{Error, Result};
use crate::fan::{fan_from_cycle, Fan};
use crate::marked::{MarkedPair, StandardModel};

/// Blow up on component `up`, blow down onto component `down`.
///
/// Indices are 0-based in Rust; the JSON form `{"up": b, "down": c}` and
/// `Display` use the 1-based labels of printed tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub up: usize,
    pub down: usize,
}

impl Move {
    pub fn new(up: usize, down: usize) -> Move {
        Move { up, down }
    }

    /// From 1-based labels as printed, e.g. `φ_{4,1}` is `from_labels(4, 1)`.
    pub fn from_labels(up: usize, down: usize) -> Result<Move> {
        if up == 0 || down == 0 {
            return Err(Error::InvalidMove { up, down, len: 0 });
        }
        Ok(Move {
            up: up - 1,
            down: down - 1,
        })
    }

    pub fn reversed(&self) -> Move {
        Move {
            up: self.down,
            down: self.up,
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let adjacent = (self.up + 1) % n == self.down || (self.down + 1) % n == self.up;
        if self.up >= n || self.down >= n || self.up == self.down || adjacent {
            return Err(Error::InvalidMove {
                up: self.up + 1,
                down: self.down + 1,
                len: n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "φ({},{})", self.up + 1, self.down + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct MoveRepr {
    up: usize,
    down: usize,
}

impl Serialize for Move {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MoveRepr {
            up: self.up + 1,
            down: self.down + 1,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Move {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = MoveRepr::deserialize(d)?;
        Move::from_labels(r.up, r.down).map_err(serde::de::Error::custom)
    }
}

/// Apply an elementary transformation to a toric cycle.
pub fn elem_transform(c: &Cycle, m: Move) -> Result<Cycle> {
    m.validate(c.len())?;
    let fan = fan_from_cycle(c)?;
    if !fan.are_opposite(m.up, m.down) {
        return Err(Error::NotOpposite {
            up: m.up + 1,
            down: m.down + 1,
        });
    }
    let mut out = c.clone();
    let e = out.entries_mut();
    e[m.up] = e[m.up].checked_add(1).ok_or(Error::Overflow)?;
    e[m.down] = e[m.down].checked_sub(1).ok_or(Error::Overflow)?;
    Ok(out)
}

/// Every move applicable to a toric fan, in lexicographic order.
pub fn available_moves(fan: &Fan) -> Vec<Move> {
    fan.opposite_pairs()
        .into_iter()
        .map(|(up, down)| Move { up, down })
        .collect()
}

/// Elementary transformation of a marked pair. The base fan is sheared
/// (see [`Fan::elementary_transform`]) and one mark moves from `up` to `down`,
/// so the blown-up pair, and hence its boundary cycle, is unchanged.
pub fn relative_elem_transform(p: &MarkedPair, m: Move) -> Result<MarkedPair> {
    m.validate(p.len())?;
    if !p.base().are_opposite(m.up, m.down) {
        return Err(Error::NotOpposite {
            up: m.up + 1,
            down: m.down + 1,
        });
    }
    if p.marks()[m.up] == 0 {
        return Err(Error::NoMarkAvailable {
            component: m.up + 1,
        });
    }
    let base = p.base().elementary_transform(m.up, m.down)?;
    let mut marks = p.marks().to_vec();
    marks[m.up] -= 1;
    marks[m.down] = marks[m.down].checked_add(1).ok_or(Error::Overflow)?;
    MarkedPair::new(base, marks)
}

/// A sequence of elementary transformations between toric cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Path {
    pub start: Cycle,
    pub moves: Vec<Move>,
    pub end: Cycle,
}

impl Path {
    /// Replays the moves and returns every cycle visited, start included.
    pub fn replay(&self) -> Result<Vec<Cycle>> {
        let mut visited = vec![self.start.clone()];
        let mut cur = self.start.clone();
        for m in &self.moves {
            cur = elem_transform(&cur, *m)?;
            visited.push(cur.clone());
        }
        if cur != self.end {
            return Err(Error::NotToric {
                reason: format!(
                    "path replay ends at {cur}, not at the recorded end {}",
                    self.end
                ),
            });
        }
        Ok(visited)
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    pub max_moves: usize,
    /// Every intermediate cycle must have all entries at least this large.
    pub entry_min: i64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_moves: 8,
            entry_min: -2,
        }
    }
}

/// Breadth-first search for a shortest sequence of moves taking `start` to a
/// cycle dihedral-equal to `target`. States are deduplicated up to dihedral
/// relabeling; ties are broken by lexicographic move order, so the result is
/// deterministic. Failure only means nothing was found within `bounds`.
pub fn find_path(start: &Cycle, target: &Cycle, bounds: SearchBounds) -> Result<Path> {
    if start.len() != target.len() {
        return Err(Error::LengthMismatch {
            expected: start.len(),
            found: target.len(),
        });
    }
    fan_from_cycle(start)?;
    let goal = dihedral_canonical(target).0;

    struct Node {
        cycle: Cycle,
        parent: Option<(usize, Move)>,
        depth: usize,
    }
    let mut nodes = vec![Node {
        cycle: start.clone(),
        parent: None,
        depth: 0,
    }];
    let mut seen = HashSet::from([dihedral_canonical(start).0]);
    let mut queue = VecDeque::from([0usize]);

    while let Some(idx) = queue.pop_front() {
        if dihedral_canonical(&nodes[idx].cycle).0 == goal {
            let mut moves = Vec::new();
            let mut cur = idx;
            while let Some((parent, m)) = nodes[cur].parent {
                moves.push(m);
                cur = parent;
            }
            moves.reverse();
            return Ok(Path {
                start: start.clone(),
                moves,
                end: nodes[idx].cycle.clone(),
            });
        }
        if nodes[idx].depth >= bounds.max_moves {
            continue;
        }
        let Ok(fan) = fan_from_cycle(&nodes[idx].cycle) else {
            continue;
        };
        for m in available_moves(&fan) {
            let next = elem_transform(&nodes[idx].cycle, m)?;
            if next.entries().iter().any(|&a| a < bounds.entry_min) {
                continue;
            }
            if !seen.insert(dihedral_canonical(&next).0) {
                continue;
            }
            let depth = nodes[idx].depth + 1;
            nodes.push(Node {
                cycle: next,
                parent: Some((idx, m)),
                depth,
            });
            queue.push_back(nodes.len() - 1);
        }
    }
    Err(Error::NotFoundWithinBounds {
        max_moves: bounds.max_moves,
        entry_min: bounds.entry_min,
    })
}

/// Lexicographically least relabeling of a (base cycle, marks) state.
fn marked_state_key(p: &MarkedPair) -> (Vec<i64>, Vec<u32>) {
    let base = p.base_cycle();
    DihedralElement::all(p.len())
        .map(|g| (g.permute(base.entries()), g.permute(p.marks())))
        .min()
        .expect("dihedral group is nonempty")
}

/// Bounded search over marked pairs using relative moves only. True iff some
/// reachable state has a base cycle dihedral-equal to the target model's.
pub fn relative_reachable(p: &MarkedPair, target: &StandardModel, max_moves: usize) -> bool {
    relative_path(p, target, max_moves).is_some()
}

/// Like [`relative_reachable`], returning the moves of a shortest witness.
pub fn relative_path(
    p: &MarkedPair,
    target: &StandardModel,
    max_moves: usize,
) -> Option<Vec<Move>> {
    if p.len() != target.cycle.len() {
        return None;
    }
    let mut seen = HashSet::from([marked_state_key(p)]);
    let mut queue = VecDeque::from([(p.clone(), Vec::<Move>::new())]);
    while let Some((state, path)) = queue.pop_front() {
        if dihedral_equivalent(&state.base_cycle(), &target.cycle) {
            return Some(path);
        }
        if path.len() >= max_moves {
            continue;
        }
        for m in available_moves(state.base()) {
            let Ok(next) = relative_elem_transform(&state, m) else {
                continue;
            };
            if seen.insert(marked_state_key(&next)) {
                let mut next_path = path.clone();
                next_path.push(m);
                queue.push_back((next, next_path));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::marked::{add_marks, elliptic_pair, fundamental_group, ModelName};

    fn cyc(e: &[i64]) -> Cycle {
        Cycle::new(e.to_vec()).unwrap()
    }

    fn mv(up: usize, down: usize) -> Move {
        Move::from_labels(up, down).unwrap()
    }

    #[test]
    fn worked_sequences() {
        assert_eq!(
            elem_transform(&cyc(&[0, 1, 1, 2, 1, 1]), mv(1, 4)).unwrap(),
            cyc(&[1, 1, 1, 1, 1, 1])
        );
        let mid = elem_transform(&cyc(&[0, 0, 2, 1, 2, 1]), mv(1, 3)).unwrap();
        assert_eq!(mid, cyc(&[1, 0, 1, 1, 2, 1]));
        assert_eq!(
            elem_transform(&mid, mv(2, 5)).unwrap(),
            cyc(&[1, 1, 1, 1, 1, 1])
        );
    }

    #[test]
    fn inverse_pair() {
        let c = cyc(&[0, 1, 1, 2, 1, 1]);
        let there = elem_transform(&c, mv(1, 4)).unwrap();
        assert_eq!(elem_transform(&there, mv(4, 1)).unwrap(), c);
    }

    #[test]
    fn move_errors() {
        let c = cyc(&[0, 1, 1, 2, 1, 1]);
        assert!(matches!(
            elem_transform(&c, mv(1, 2)),
            Err(Error::InvalidMove { .. })
        ));
        assert!(matches!(
            elem_transform(&c, mv(1, 1)),
            Err(Error::InvalidMove { .. })
        ));
        assert!(matches!(
            elem_transform(&c, mv(1, 7)),
            Err(Error::InvalidMove { .. })
        ));
        assert!(matches!(
            elem_transform(&c, mv(2, 4)),
            Err(Error::NotOpposite { .. })
        ));
        assert!(matches!(
            elem_transform(&cyc(&[2, 2, 2, 2, 2, 2]), mv(1, 4)),
            Err(Error::NotToric { .. })
        ));
        assert!(Move::from_labels(0, 3).is_err());
    }

    #[test]
    fn relative_move_keeps_derived_cycle() {
        let base = fan_from_cycle(&cyc(&[0, 1, 1, 2, 1, 1])).unwrap();
        let p = MarkedPair::new(base, vec![2, 0, 0, 0, 0, 0]).unwrap();
        let q = relative_elem_transform(&p, mv(1, 4)).unwrap();
        assert_eq!(q.base_cycle(), cyc(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(q.marks(), &[1, 0, 0, 1, 0, 0]);
        assert_eq!(q.derived_cycle(), p.derived_cycle());

        let r = relative_elem_transform(&q, mv(1, 4)).unwrap();
        assert_eq!(r.marks(), &[0, 0, 0, 2, 0, 0]);
        assert_eq!(r.base_cycle(), cyc(&[2, 1, 1, 0, 1, 1]));
        assert_eq!(r.derived_cycle(), p.derived_cycle());

        assert_eq!(
            relative_elem_transform(&r, mv(1, 4)),
            Err(Error::NoMarkAvailable { component: 1 })
        );
        let bare = MarkedPair::unmarked(fan_from_cycle(&cyc(&[1; 6])).unwrap());
        assert!(matches!(
            relative_elem_transform(&bare, mv(1, 4)),
            Err(Error::NoMarkAvailable { .. })
        ));
    }

    #[test]
    fn relative_move_preserves_fundamental_group() {
        let ti = elliptic_pair(&StandardModel::get(ModelName::Ti));
        let p = add_marks(&ti, &[1, 0, 0, 0, 2, 0, 0, 0]).unwrap();
        for m in available_moves(p.base()) {
            if let Ok(q) = relative_elem_transform(&p, m) {
                assert_eq!(fundamental_group(&q), fundamental_group(&p));
            }
        }
    }

    #[test]
    fn path_examples() {
        let t7 = StandardModel::get(ModelName::T7).cycle;
        let p = find_path(&cyc(&[0, 1, 1, 2, 2, 1, 2]), &t7, SearchBounds::default()).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.moves, vec![mv(1, 4)]);
        p.replay().unwrap();

        let same = find_path(&t7, &t7, SearchBounds::default()).unwrap();
        assert!(same.is_empty());

        let ti = StandardModel::get(ModelName::Ti).cycle;
        let p = find_path(
            &cyc(&[0, 2, 1, 2, 2, 2, 1, 2]),
            &ti,
            SearchBounds::default(),
        )
        .unwrap();
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn path_bounds_are_reported() {
        let t7 = StandardModel::get(ModelName::T7).cycle;
        let bounds = SearchBounds {
            max_moves: 0,
            entry_min: -2,
        };
        assert_eq!(
            find_path(&cyc(&[0, 1, 1, 2, 2, 1, 2]), &t7, bounds),
            Err(Error::NotFoundWithinBounds {
                max_moves: 0,
                entry_min: -2
            })
        );
        assert!(matches!(
            find_path(&cyc(&[1; 6]), &t7, SearchBounds::default()),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn relative_reachability() {
        let ti = StandardModel::get(ModelName::Ti);
        let tii = StandardModel::get(ModelName::Tii);

        let odd_only = add_marks(&elliptic_pair(&ti), &[1, 0, 2, 0, 0, 0, 1, 0]).unwrap();
        assert!(!relative_reachable(&odd_only, &tii, 6));
        assert!(relative_reachable(&odd_only, &ti, 0));

        // Different fundamental groups, so never connected.
        let e_ii = elliptic_pair(&tii);
        assert!(!relative_reachable(&e_ii, &ti, 6));
        assert!(relative_reachable(&e_ii, &tii, 0));

        let mixed = add_marks(&elliptic_pair(&ti), &[0, 1, 0, 0, 0, 0, 0, 0]).unwrap();
        assert!(fundamental_group(&mixed).is_trivial());
        assert!(relative_reachable(&mixed, &tii, 6));
    }

    #[test]
    fn no_relative_move_between_table_pairs_a_and_b() {
        // a = (1,2,1,2,1,2,1,2), b = (1,2,1,1,1,2,1,3): one toric move apart...
        let a = cyc(&[1, 2, 1, 2, 1, 2, 1, 2]);
        let b = cyc(&[1, 2, 1, 1, 1, 2, 1, 3]);
        assert_eq!(elem_transform(&a, mv(8, 4)).unwrap(), b);
        // ...but with no interior blowups over D4 and D8 the move cannot be lifted.
        let base = fan_from_cycle(&a).unwrap();
        let p = MarkedPair::new(base, vec![1, 0, 1, 0, 1, 0, 1, 0]).unwrap();
        assert_eq!(
            relative_elem_transform(&p, mv(8, 4)),
            Err(Error::NoMarkAvailable { component: 8 })
        );
    }

    #[test]
    fn move_json() {
        let m = mv(4, 1);
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"up":4,"down":1}"#);
        assert_eq!(
            serde_json::from_str::<Move>(r#"{"up":4,"down":1}"#).unwrap(),
            m
        );
        let p = Path {
            start: cyc(&[0, 1, 1, 2, 1, 1]),
            moves: vec![mv(1, 4)],
            end: cyc(&[1; 6]),
        };
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"start":[0,1,1,2,1,1],"moves":[{"up":1,"down":4}],"end":[1,1,1,1,1,1]}"#
        );
    }
}
