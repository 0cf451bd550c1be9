//! Cycles of integers `(a_1, ..., a_n)` with `a_i = -D_i^2`, their numerical
//! invariants, and the dihedral group acting on their labels.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shortest cycle accepted. Lengths one and two have degenerate adjacency.
pub const MIN_CYCLE_LEN: usize = 3;

/// Cyclic sequence of negated self-intersections.
///
/// Serialized as a plain JSON array, e.g. `[0,1,1,2,1,1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Cycle(Vec<i64>);

impl Cycle {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.len() < MIN_CYCLE_LEN {
            return Err(Error::LengthOutOfRange {
                len: entries.len(),
                min: MIN_CYCLE_LEN,
                max: usize::MAX,
            });
        }
        Ok(Cycle(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at a cyclic index.
    pub fn at(&self, i: isize) -> i64 {
        let n = self.0.len() as isize;
        self.0[i.rem_euclid(n) as usize]
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    /// Relabel by a dihedral element: entry `k` of the result is entry `g(k)` of `self`.
    pub fn act(&self, g: DihedralElement) -> Cycle {
        Cycle(g.permute(&self.0))
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }
}

impl TryFrom<Vec<i64>> for Cycle {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Cycle::new(v)
    }
}

impl From<Cycle> for Vec<i64> {
    fn from(c: Cycle) -> Self {
        c.0
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"1,2,1"` or `"(1,2,1)"`.
impl FromStr for Cycle {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let inner = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let entries = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| format!("bad entry {t:?}: {e}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Cycle::new(entries).map_err(|e| e.to_string())
    }
}

/// Element of the dihedral group of order `2n` acting on labels `0..n`.
///
/// As a map on labels, `k -> rotation + k` or, when reflected,
/// `k -> rotation - k` (mod n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DihedralElement {
    pub rotation: usize,
    pub reflected: bool,
    #[serde(skip)]
    n: usize,
}

impl DihedralElement {
    pub fn new(n: usize, rotation: usize, reflected: bool) -> Self {
        assert!(n > 0);
        DihedralElement {
            rotation: rotation % n,
            reflected,
            n,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, 0, false)
    }

    pub fn rotation_by(n: usize, k: usize) -> Self {
        Self::new(n, k, false)
    }

    pub fn order_n(&self) -> usize {
        self.n
    }

    pub fn is_identity(&self) -> bool {
        self.rotation == 0 && !self.reflected
    }

    pub fn apply(&self, k: usize) -> usize {
        let k = k % self.n;
        if self.reflected {
            (self.rotation + self.n - k) % self.n
        } else {
            (self.rotation + k) % self.n
        }
    }

    /// `self ∘ other` as maps on labels.
    pub fn compose(&self, other: &DihedralElement) -> DihedralElement {
        assert_eq!(self.n, other.n, "dihedral groups of different order");
        let rotation = self.apply(other.rotation);
        DihedralElement::new(self.n, rotation, self.reflected != other.reflected)
    }

    pub fn inverse(&self) -> DihedralElement {
        if self.reflected {
            *self
        } else {
            DihedralElement::new(self.n, self.n - self.rotation, false)
        }
    }

    /// `out[k] = seq[self(k)]`.
    pub fn permute<T: Clone>(&self, seq: &[T]) -> Vec<T> {
        assert_eq!(seq.len(), self.n);
        (0..self.n).map(|k| seq[self.apply(k)].clone()).collect()
    }

    /// All `2n` elements: rotations first, then reflections.
    pub fn all(n: usize) -> impl Iterator<Item = DihedralElement> {
        [false, true]
            .into_iter()
            .flat_map(move |refl| (0..n).map(move |r| DihedralElement::new(n, r, refl)))
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reflected {
            write!(f, "k -> {} - k", self.rotation)
        } else {
            write!(f, "k -> k + {}", self.rotation)
        }
    }
}

/// Closure of a set of generators under composition.
pub fn generate_subgroup(n: usize, generators: &[DihedralElement]) -> Vec<DihedralElement> {
    let mut elems = vec![DihedralElement::identity(n)];
    let mut frontier = elems.clone();
    while let Some(g) = frontier.pop() {
        for h in generators {
            let gh = g.compose(h);
            if !elems.contains(&gh) {
                elems.push(gh);
                frontier.push(gh);
            }
        }
    }
    elems.sort();
    elems
}

/// Numerical invariants of a pair with the given boundary cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairInvariants {
    pub d_squared: i64,
    pub charge: i64,
    pub euler_complement: i64,
    /// Rank of the orthogonal complement lattice; present only when the
    /// boundary is negative definite.
    pub lambda_rank: Option<i64>,
}

pub fn invariants_of(c: &Cycle) -> PairInvariants {
    let n = c.len() as i64;
    // Each component meets its two neighbours once.
    let d_squared = 2 * n - c.sum();
    let charge = 12 - d_squared - n;
    PairInvariants {
        d_squared,
        charge,
        euler_complement: charge,
        lambda_rank: is_negative_definite(c).then_some(charge - 2),
    }
}

/// `(D_i . D_j)`: diagonal `-a_i`, ones between cyclic neighbours.
pub fn intersection_matrix(c: &Cycle) -> Vec<Vec<i64>> {
    let n = c.len();
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = -c.entries()[i];
        m[i][(i + 1) % n] += 1;
        m[(i + 1) % n][i] += 1;
    }
    m
}

/// Leading principal minors `det(M_k)` for `k = 1..=n`, by fraction-free
/// (Bareiss) elimination. Stops early at the first vanishing minor.
fn leading_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::from(1);
    for k in 0..n {
        let pivot = a[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&pivot * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = pivot;
    }
    minors
}

/// Sylvester's criterion: `(-1)^k det(M_k) > 0` for every leading minor.
pub fn is_negative_definite(c: &Cycle) -> bool {
    let minors = leading_minors(&intersection_matrix(c));
    minors.len() == c.len()
        && minors.iter().enumerate().all(|(k, d)| {
            if k % 2 == 0 {
                d.is_negative()
            } else {
                d.is_positive()
            }
        })
}

/// Lexicographically least relabeling, with an element achieving it.
pub fn dihedral_canonical(c: &Cycle) -> (Cycle, DihedralElement) {
    let n = c.len();
    let mut best: Option<(Vec<i64>, DihedralElement)> = None;
    for g in DihedralElement::all(n) {
        let img = g.permute(c.entries());
        if best.as_ref().map_or(true, |(b, _)| img < *b) {
            best = Some((img, g));
        }
    }
    let (entries, g) = best.expect("dihedral group is nonempty");
    (Cycle(entries), g)
}

/// Equality up to rotation and reflection.
pub fn dihedral_equivalent(a: &Cycle, b: &Cycle) -> bool {
    a.len() == b.len() && dihedral_canonical(a).0 == dihedral_canonical(b).0
}

/// Some `g` with `a.act(g) == b`, if one exists.
pub fn dihedral_alignment(a: &Cycle, b: &Cycle) -> Option<DihedralElement> {
    if a.len() != b.len() {
        return None;
    }
    DihedralElement::all(a.len()).find(|g| g.permute(a.entries()) == b.entries())
}

/// Stabilizer of the labeled cycle in the dihedral group.
pub fn symmetry_group(c: &Cycle) -> Vec<DihedralElement> {
    DihedralElement::all(c.len())
        .filter(|g| g.permute(c.entries()) == c.entries())
        .collect()
}
