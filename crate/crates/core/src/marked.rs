//! Looijenga pairs presented by a toric model plus interior-blowup marks.
//!
//! A [`MarkedPair`] records a toric fan together with the number of interior
//! blowups performed on each boundary component. Its boundary cycle is
//! `a_i + m_i` and its charge is `sum m_i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cycle::{invariants_of, Cycle};
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::lattice::{smith_normal_form, GroupInvariants, LatticeVector};

/// The five toric pairs that every negative definite pair of length 6 to 9
/// can be contracted to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ModelName {
    T6,
    T7,
    Ti,
    Tii,
    T9,
}

impl ModelName {
    pub const ALL: [ModelName; 5] = [
        ModelName::T6,
        ModelName::T7,
        ModelName::Ti,
        ModelName::Tii,
        ModelName::T9,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ModelName::T6 => "T6",
            ModelName::T7 => "T7",
            ModelName::Ti => "Ti",
            ModelName::Tii => "Tii",
            ModelName::T9 => "T9",
        }
    }

    pub fn cycle_len(&self) -> usize {
        match self {
            ModelName::T6 => 6,
            ModelName::T7 => 7,
            ModelName::Ti | ModelName::Tii => 8,
            ModelName::T9 => 9,
        }
    }

    /// Models whose boundary has `n` components.
    pub fn of_length(n: usize) -> Vec<ModelName> {
        Self::ALL
            .into_iter()
            .filter(|m| m.cycle_len() == n)
            .collect()
    }
}

impl fmt::Display for ModelName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ModelName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s
            .trim()
            .to_ascii_lowercase()
            .replace(['_', '(', ')', ' '], "");
        match key.as_str() {
            "t6" => Ok(ModelName::T6),
            "t7" => Ok(ModelName::T7),
            "ti" | "t8i" => Ok(ModelName::Ti),
            "tii" | "t8ii" => Ok(ModelName::Tii),
            "t9" => Ok(ModelName::T9),
            _ => Err(Error::UnknownModel(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardModel {
    pub name: ModelName,
    pub fan: Fan,
    pub cycle: Cycle,
}

fn v(x: i64, y: i64) -> LatticeVector {
    LatticeVector::new(x, y)
}

/// Rays of each model, written in the basis `e_1, e_2` in which the
/// hexagon is `{±e_1, ±e_2, ±(e_1 + e_2)}`. Labels start at `e_1`, except
/// for `Ti`, whose labels start at `e_1 + e_2` so that its cycle reads
/// `(1,2,1,2,1,2,1,2)` with the (-1)-curves at the odd positions.
fn model_rays(name: ModelName) -> Vec<LatticeVector> {
    let hexagon = [v(1, 0), v(1, 1), v(0, 1), v(-1, 0), v(-1, -1), v(0, -1)];
    match name {
        ModelName::T6 => hexagon.to_vec(),
        // + (-e1 + e2)
        ModelName::T7 => {
            vec![
                v(1, 0),
                v(1, 1),
                v(0, 1),
                v(-1, 1),
                v(-1, 0),
                v(-1, -1),
                v(0, -1),
            ]
        }
        // T7 + (e1 - e2)
        ModelName::Ti => {
            vec![
                v(1, 1),
                v(0, 1),
                v(-1, 1),
                v(-1, 0),
                v(-1, -1),
                v(0, -1),
                v(1, -1),
                v(1, 0),
            ]
        }
        // hexagon + (e1 + 2 e2), (-2 e1 - e2)
        ModelName::Tii => {
            vec![
                v(1, 0),
                v(1, 1),
                v(1, 2),
                v(0, 1),
                v(-1, 0),
                v(-2, -1),
                v(-1, -1),
                v(0, -1),
            ]
        }
        // Tii + (e1 - e2)
        ModelName::T9 => vec![
            v(1, 0),
            v(1, 1),
            v(1, 2),
            v(0, 1),
            v(-1, 0),
            v(-2, -1),
            v(-1, -1),
            v(0, -1),
            v(1, -1),
        ],
    }
}

impl StandardModel {
    pub fn get(name: ModelName) -> StandardModel {
        let fan = Fan::from_rays(model_rays(name)).expect("standard model rays form a fan");
        let cycle = fan.cycle();
        StandardModel { name, fan, cycle }
    }

    /// Components carrying a (-1)-curve, i.e. `a_i = 1`.
    pub fn minus_one_components(&self) -> Vec<usize> {
        (0..self.cycle.len())
            .filter(|&i| self.cycle.entries()[i] == 1)
            .collect()
    }
}

pub fn standard_models() -> Vec<StandardModel> {
    ModelName::ALL.into_iter().map(StandardModel::get).collect()
}

/// A toric fan together with interior-blowup multiplicities per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedPair {
    base: Fan,
    marks: Vec<u32>,
}

impl MarkedPair {
    pub fn new(base: Fan, marks: Vec<u32>) -> Result<MarkedPair> {
        if marks.len() != base.len() {
            return Err(Error::LengthMismatch {
                expected: base.len(),
                found: marks.len(),
            });
        }
        Ok(MarkedPair { base, marks })
    }

    /// The toric pair itself, with no interior blowups.
    pub fn unmarked(base: Fan) -> MarkedPair {
        let n = base.len();
        MarkedPair {
            base,
            marks: vec![0; n],
        }
    }

    pub fn base(&self) -> &Fan {
        &self.base
    }

    pub fn marks(&self) -> &[u32] {
        &self.marks
    }

    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }

    pub fn base_cycle(&self) -> Cycle {
        self.base.cycle()
    }

    /// Boundary cycle of the blown-up pair: each interior blowup lowers
    /// `D_i^2` by one.
    pub fn derived_cycle(&self) -> Cycle {
        let base = self.base.cycle();
        let entries = base
            .entries()
            .iter()
            .zip(&self.marks)
            .map(|(a, m)| a + *m as i64)
            .collect();
        Cycle::new(entries).expect("same length as the base")
    }

    /// Charge of the blown-up pair; the toric base has charge zero.
    pub fn charge(&self) -> i64 {
        self.marks.iter().map(|m| *m as i64).sum()
    }

    /// Charge computed from the derived cycle as `12 - D^2 - n`.
    pub fn charge_from_cycle(&self) -> i64 {
        invariants_of(&self.derived_cycle()).charge
    }

    pub fn marked_components(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.marks[i] > 0).collect()
    }

    pub(crate) fn from_parts(base: Fan, marks: Vec<u32>) -> MarkedPair {
        debug_assert_eq!(base.len(), marks.len());
        MarkedPair { base, marks }
    }
}

/// One interior blowup on every (-1)-component of the model; all boundary
/// components become (-2)-curves.
pub fn elliptic_pair(model: &StandardModel) -> MarkedPair {
    let marks = model
        .cycle
        .entries()
        .iter()
        .map(|&a| u32::from(a == 1))
        .collect();
    MarkedPair::from_parts(model.fan.clone(), marks)
}

pub fn add_marks(p: &MarkedPair, extra: &[u32]) -> Result<MarkedPair> {
    if extra.len() != p.len() {
        return Err(Error::LengthMismatch {
            expected: p.len(),
            found: extra.len(),
        });
    }
    let marks = p
        .marks
        .iter()
        .zip(extra)
        .map(|(m, e)| m.checked_add(*e).ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    Ok(MarkedPair::from_parts(p.base.clone(), marks))
}

/// `Z^2` modulo the rays of the components carrying interior blowups.
pub fn fundamental_group(p: &MarkedPair) -> GroupInvariants {
    let rays: Vec<LatticeVector> = p
        .marked_components()
        .into_iter()
        .map(|i| p.base.rays()[i])
        .collect();
    smith_normal_form(&rays)
}

/// Either a standard model by name or an explicit fan.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum ModelRef {
    Name(ModelName),
    Fan(Fan),
}

#[derive(Serialize, Deserialize)]
struct MarkedPairRepr {
    model: ModelRef,
    marks: Vec<u32>,
}

/// `{"model": "Ti", "marks": [...]}`, or with an explicit fan in place of the name.
/// A name is written when the base is, label for label, a standard model.
impl Serialize for MarkedPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let named = ModelName::ALL.into_iter().find(|m| {
            m.cycle_len() == self.len() && StandardModel::get(*m).fan.rays() == self.base.rays()
        });
        let model = match named {
            Some(name) => ModelRef::Name(name),
            None => ModelRef::Fan(self.base.clone()),
        };
        MarkedPairRepr {
            model,
            marks: self.marks.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MarkedPair {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = MarkedPairRepr::deserialize(d)?;
        let base = match repr.model {
            ModelRef::Name(name) => StandardModel::get(name).fan,
            ModelRef::Fan(fan) => fan,
        };
        MarkedPair::new(base, repr.marks).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::dihedral_equivalent;

    fn cyc(e: &[i64]) -> Cycle {
        Cycle::new(e.to_vec()).unwrap()
    }

    #[test]
    fn standard_model_cycles() {
        let expect = [
            (ModelName::T6, vec![1, 1, 1, 1, 1, 1]),
            (ModelName::T7, vec![1, 1, 2, 1, 2, 1, 1]),
            (ModelName::Ti, vec![1, 2, 1, 2, 1, 2, 1, 2]),
            (ModelName::Tii, vec![1, 2, 1, 2, 2, 1, 2, 1]),
            (ModelName::T9, vec![2, 2, 1, 2, 2, 1, 2, 2, 1]),
        ];
        let models = standard_models();
        assert_eq!(models.len(), 5);
        for (m, (name, c)) in models.iter().zip(expect) {
            assert_eq!(m.name, name);
            assert_eq!(m.cycle, cyc(&c));
            assert_eq!(m.fan.len(), name.cycle_len());
        }
    }

    #[test]
    fn models_are_corner_blowups_of_each_other() {
        let t6 = StandardModel::get(ModelName::T6);
        let t7 = StandardModel::get(ModelName::T7);
        let tii = StandardModel::get(ModelName::Tii);
        let t9 = StandardModel::get(ModelName::T9);
        assert!(dihedral_equivalent(
            &t6.fan.corner_blowup(2).unwrap().cycle(),
            &t7.cycle
        ));
        // T9 adds e1 - e2 between -e2 and e1 of Tii.
        assert_eq!(tii.fan.corner_blowup(7).unwrap().rays(), t9.fan.rays());
    }

    #[test]
    fn elliptic_pairs() {
        let t6 = elliptic_pair(&StandardModel::get(ModelName::T6));
        assert_eq!(t6.marks(), &[1, 1, 1, 1, 1, 1]);
        assert_eq!(t6.derived_cycle(), cyc(&[2; 6]));
        assert_eq!(t6.charge(), 6);

        let ti = elliptic_pair(&StandardModel::get(ModelName::Ti));
        assert_eq!(ti.marked_components(), vec![0, 2, 4, 6]);
        assert_eq!(ti.derived_cycle(), cyc(&[2; 8]));

        let tii = elliptic_pair(&StandardModel::get(ModelName::Tii));
        assert_eq!(tii.marked_components(), vec![0, 2, 5, 7]);

        let t9 = elliptic_pair(&StandardModel::get(ModelName::T9));
        assert_eq!(t9.marked_components().len(), 3);
        assert_eq!(t9.derived_cycle(), cyc(&[2; 9]));
        assert_eq!(t9.charge(), 3);
    }

    #[test]
    fn adding_marks() {
        let e6 = elliptic_pair(&StandardModel::get(ModelName::T6));
        let p = add_marks(&e6, &[1, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(p.derived_cycle(), cyc(&[3, 2, 2, 2, 2, 2]));
        assert_eq!(add_marks(&e6, &[0; 6]).unwrap(), e6);
        assert!(matches!(
            add_marks(&e6, &[0; 5]),
            Err(Error::LengthMismatch { .. })
        ));

        let ei = elliptic_pair(&StandardModel::get(ModelName::Ti));
        let p = add_marks(&ei, &[1, 0, 0, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(p.derived_cycle(), cyc(&[3, 2, 2, 2, 2, 2, 2, 2]));
    }

    #[test]
    fn charge_formulas_agree() {
        let ei = elliptic_pair(&StandardModel::get(ModelName::Tii));
        let p = add_marks(&ei, &[0, 3, 0, 1, 0, 0, 2, 0]).unwrap();
        assert_eq!(p.charge(), 10);
        assert_eq!(p.charge_from_cycle(), 10);
    }

    #[test]
    fn fundamental_groups() {
        let g = |m| fundamental_group(&elliptic_pair(&StandardModel::get(m)));
        assert!(g(ModelName::Tii).is_trivial());
        assert_eq!(
            g(ModelName::Ti),
            GroupInvariants {
                free_rank: 0,
                torsion: vec![2]
            }
        );
        assert_eq!(
            g(ModelName::T9),
            GroupInvariants {
                free_rank: 0,
                torsion: vec![3]
            }
        );
        assert!(g(ModelName::T6).is_trivial());
        assert!(g(ModelName::T7).is_trivial());
        let bare = MarkedPair::unmarked(StandardModel::get(ModelName::T6).fan);
        assert_eq!(
            fundamental_group(&bare),
            GroupInvariants {
                free_rank: 2,
                torsion: vec![]
            }
        );
    }

    #[test]
    fn model_name_parsing() {
        assert_eq!("T_ii".parse::<ModelName>().unwrap(), ModelName::Tii);
        assert_eq!("t(9)".parse::<ModelName>().unwrap(), ModelName::T9);
        assert!("T10".parse::<ModelName>().is_err());
    }

    #[test]
    fn json_forms() {
        let p = elliptic_pair(&StandardModel::get(ModelName::Ti));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"model":"Ti","marks":[1,0,1,0,1,0,1,0]}"#);
        assert_eq!(serde_json::from_str::<MarkedPair>(&s).unwrap(), p);

        let custom = r#"{"model":[[1,0],[0,1],[-1,-1]],"marks":[0,2,0]}"#;
        let q: MarkedPair = serde_json::from_str(custom).unwrap();
        assert_eq!(q.derived_cycle(), cyc(&[-1, 1, -1]));
        assert_eq!(serde_json::to_string(&q).unwrap(), custom);

        assert!(serde_json::from_str::<MarkedPair>(r#"{"model":"T6","marks":[1]}"#).is_err());
    }
}
