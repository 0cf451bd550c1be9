//! Counting deformation types of negative definite pairs of length 6 to 9.
//!
//! Such a pair is an elliptic pair over one of the standard models with some
//! further interior blowups. Writing the target cycle against the model's
//! labels via a dihedral alignment `σ` determines the extra blowups, and two
//! alignments give deformation equivalent pairs when they differ by a
//! symmetry of the cycle on one side and a realized automorphism of the
//! elliptic pair on the other.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cycle::{
    generate_subgroup, is_negative_definite, symmetry_group, Cycle, DihedralElement,
};
use crate::error::{Error, Result};
use crate::lattice::{GroupInvariants, Matrix2};
use crate::marked::{fundamental_group, MarkedPair, ModelName, StandardModel};

pub const MIN_CLASSIFIED_LEN: usize = 6;
pub const MAX_CLASSIFIED_LEN: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizedSymmetry {
    pub model: ModelName,
    pub n: usize,
    pub subgroup: Vec<DihedralElement>,
}

impl RealizedSymmetry {
    pub fn order(&self) -> usize {
        self.subgroup.len()
    }

    pub fn contains(&self, g: &DihedralElement) -> bool {
        self.subgroup.contains(g)
    }
}

/// `(x, y) -> (-y, -x)`.
const INVOLUTION: Matrix2 = Matrix2([[0, -1], [-1, 0]]);
/// `e_1 <-> e_2`.
const SWAP: Matrix2 = Matrix2([[0, 1], [1, 0]]);

/// The image of the automorphism group of the elliptic pair in the dihedral
/// group of its boundary: generated by a rotation and by the reflection that
/// a lattice involution induces on the model's fan.
pub fn realized_subgroup(model: ModelName) -> RealizedSymmetry {
    let sm = StandardModel::get(model);
    let n = sm.cycle.len();
    let (step, involution) = match model {
        ModelName::T6 => (1, SWAP),
        ModelName::T7 | ModelName::Tii => (1, INVOLUTION),
        ModelName::Ti => (2, INVOLUTION),
        ModelName::T9 => (3, INVOLUTION),
    };
    let reflection = sm
        .fan
        .induced_permutation(&involution)
        .expect("the involution permutes the rays of every standard model");
    let t = sm.cycle.entries();
    debug_assert!(reflection.reflected);
    debug_assert!((0..n).all(|k| t[reflection.apply(k)] == t[k]));
    let subgroup = generate_subgroup(n, &[DihedralElement::rotation_by(n, step), reflection]);
    RealizedSymmetry { model, n, subgroup }
}

/// The cycle written as an elliptic pair over `model` plus extra blowups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub model: ModelName,
    /// Model component `k` is matched with component `alignment(k)` of the cycle.
    pub alignment: DihedralElement,
    /// Interior blowups on each model component, the elliptic ones included.
    pub marks: Vec<u32>,
    pub pi1: GroupInvariants,
}

fn check_classifiable(c: &Cycle) -> Result<()> {
    let n = c.len();
    if !(MIN_CLASSIFIED_LEN..=MAX_CLASSIFIED_LEN).contains(&n) {
        return Err(Error::LengthOutOfRange {
            len: n,
            min: MIN_CLASSIFIED_LEN,
            max: MAX_CLASSIFIED_LEN,
        });
    }
    // An entry below 2 means a (-1)- or nonnegative curve in the boundary.
    if c.entries().iter().any(|&a| a < 2) || !is_negative_definite(c) {
        return Err(Error::NotNegativeDefinite);
    }
    Ok(())
}

/// Marks for alignment `g`, when every component of the model ends up with
/// the right self-intersection and every (-1)-curve gets at least one blowup.
fn marks_for(c: &Cycle, model: &StandardModel, g: DihedralElement) -> Option<Vec<u32>> {
    let aligned = c.act(g);
    aligned
        .entries()
        .iter()
        .zip(model.cycle.entries())
        .map(|(&a, &t)| {
            let m = a.checked_sub(t)?;
            let floor = if t == 1 { 1 } else { 0 };
            (m >= floor).then(|| u32::try_from(m).ok()).flatten()
        })
        .collect()
}

fn presentations_on(c: &Cycle, model: &StandardModel) -> Vec<Presentation> {
    DihedralElement::all(c.len())
        .filter_map(|g| {
            let marks = marks_for(c, model, g)?;
            let pair = MarkedPair::new(model.fan.clone(), marks.clone()).ok()?;
            Some(Presentation {
                model: model.name,
                alignment: g,
                marks,
                pi1: fundamental_group(&pair),
            })
        })
        .collect()
}

/// Every (model, alignment) pair realizing `c`, models in the fixed order
/// `T6, T7, Ti, Tii, T9`, then rotations before reflections.
pub fn feasible_presentations(c: &Cycle) -> Result<Vec<Presentation>> {
    check_classifiable(c)?;
    Ok(ModelName::of_length(c.len())
        .into_iter()
        .flat_map(|name| presentations_on(c, &StandardModel::get(name)))
        .collect())
}

/// Orbits of feasible alignments on `model` under `σ -> τ σ ρ`, with `τ` a
/// symmetry of `c` and `ρ` in the realized subgroup. Each orbit is returned
/// as its sorted member list, orbits ordered by first member.
fn alignment_orbits(c: &Cycle, model: ModelName) -> Result<Vec<Vec<DihedralElement>>> {
    check_classifiable(c)?;
    if model.cycle_len() != c.len() {
        return Err(Error::LengthMismatch {
            expected: model.cycle_len(),
            found: c.len(),
        });
    }
    let sm = StandardModel::get(model);
    let feasible: Vec<DihedralElement> = DihedralElement::all(c.len())
        .filter(|&g| marks_for(c, &sm, g).is_some())
        .collect();
    let sym = symmetry_group(c);
    let realized = realized_subgroup(model).subgroup;

    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    for &s in &feasible {
        if seen.contains(&s) {
            continue;
        }
        let orbit: BTreeSet<DihedralElement> = sym
            .iter()
            .flat_map(|t| realized.iter().map(move |r| t.compose(&s).compose(r)))
            .collect();
        seen.extend(orbit.iter().copied());
        orbits.push(orbit.into_iter().collect());
    }
    Ok(orbits)
}

/// Number of double cosets `Sym(c) \ F / R` of the feasible alignments `F`.
pub fn orbit_upper_bound(c: &Cycle, model: ModelName) -> Result<usize> {
    Ok(alignment_orbits(c, model)?.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Count {
    Exact(usize),
    Interval { lo: usize, hi: usize },
}

impl Count {
    pub fn upper(&self) -> usize {
        match *self {
            Count::Exact(k) => k,
            Count::Interval { hi, .. } => hi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeCount {
    pub cycle: Cycle,
    pub count: Count,
    pub representatives: Vec<Presentation>,
}

/// The alternating pattern `(a,2,b,2,c,2,d,2)` in some labeling.
pub fn has_alternating_twos(c: &Cycle) -> bool {
    c.len() == 8
        && DihedralElement::all(8).any(|g| {
            c.act(g)
                .entries()
                .iter()
                .skip(1)
                .step_by(2)
                .all(|&a| a == 2)
        })
}

pub fn deformation_types(c: &Cycle) -> Result<TypeCount> {
    let presentations = feasible_presentations(c)?;
    let first_on = |m: ModelName| presentations.iter().find(|p| p.model == m).cloned();
    let (count, representatives) = match c.len() {
        6 => (
            Count::Exact(1),
            first_on(ModelName::T6).into_iter().collect(),
        ),
        7 => (
            Count::Exact(1),
            first_on(ModelName::T7).into_iter().collect(),
        ),
        8 if has_alternating_twos(c) => {
            let torsion = presentations
                .iter()
                .find(|p| p.model == ModelName::Ti && p.pi1.order() == Some(2))
                .cloned();
            (
                Count::Exact(2),
                torsion
                    .into_iter()
                    .chain(first_on(ModelName::Tii))
                    .collect(),
            )
        }
        8 => (
            Count::Exact(1),
            first_on(ModelName::Tii).into_iter().collect(),
        ),
        _ => {
            let orbits = alignment_orbits(c, ModelName::T9)?;
            let hi = orbits.len().min(3);
            let reps = orbits
                .iter()
                .take(hi)
                .filter_map(|o| presentations.iter().find(|p| p.alignment == o[0]).cloned())
                .collect();
            (Count::Interval { lo: 1, hi }, reps)
        }
    };
    Ok(TypeCount {
        cycle: c.clone(),
        count,
        representatives,
    })
}
