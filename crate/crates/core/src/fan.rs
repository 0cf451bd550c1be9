//! Complete smooth fans in `Z^2`, stored as counterclockwise ray lists.
//!
//! A valid fan satisfies `det(v_i, v_{i+1}) = 1` for every cyclically
//! adjacent pair and winds exactly once around the origin. Ray `i` of a fan
//! is the ray of boundary component `i`; the cycle is read off from the
//! relation `v_{i-1} + v_{i+1} = a_i v_i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cycle::{Cycle, DihedralElement, MIN_CYCLE_LEN};
use crate::error::{Error, Result};
use crate::lattice::{det2, is_primitive, LatticeVector, Matrix2};

/// Serialized as a JSON array of `[x, y]` pairs in counterclockwise order.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "Vec<LatticeVector>", into = "Vec<LatticeVector>")]
pub struct Fan {
    rays: Vec<LatticeVector>,
}

/// A lattice automorphism permuting the rays of a fan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FanSymmetry {
    /// Label map: ray `k` is sent to ray `element.apply(k)`.
    pub element: DihedralElement,
    pub matrix: Matrix2,
}

/// Number of times a ray sequence turning counterclockwise by less than a
/// half turn at each step wraps around the origin.
pub fn winding_number(rays: &[LatticeVector]) -> usize {
    let n = rays.len();
    (0..n)
        .filter(|&i| {
            let q = rays[i].quadrant();
            let r = rays[(i + 1) % n].quadrant();
            r < q
        })
        .count()
}

impl Fan {
    pub fn from_rays(rays: Vec<LatticeVector>) -> Result<Fan> {
        let invalid = |reason: String| Err(Error::InvalidFan { reason });
        let n = rays.len();
        if n < MIN_CYCLE_LEN {
            return invalid(format!("{n} rays; at least {MIN_CYCLE_LEN} required"));
        }
        for (i, v) in rays.iter().enumerate() {
            if !is_primitive(*v).unwrap_or(false) {
                return invalid(format!("ray {} = {v} is not primitive", i + 1));
            }
        }
        for i in 0..n {
            let (v, w) = (rays[i], rays[(i + 1) % n]);
            let d = det2(v, w);
            if d != 1 {
                return invalid(format!(
                    "det(v{}, v{}) = {d}, expected 1",
                    i + 1,
                    (i + 1) % n + 1
                ));
            }
        }
        let w = winding_number(&rays);
        if w != 1 {
            return invalid(format!("winding number {w}, expected 1"));
        }
        Ok(Fan { rays })
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    /// Ray at a cyclic index.
    pub fn ray(&self, i: isize) -> LatticeVector {
        let n = self.rays.len() as isize;
        self.rays[i.rem_euclid(n) as usize]
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            })
        }
    }

    /// Image under a unimodular map.
    pub fn transform(&self, m: &Matrix2) -> Result<Fan> {
        if m.det() != 1 {
            // Orientation-reversing maps would list the rays clockwise.
            return Err(Error::InvalidFan {
                reason: "basis change must have determinant 1".into(),
            });
        }
        let rays = self
            .rays
            .iter()
            .map(|v| m.apply(*v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Fan { rays })
    }

    /// The same fan in the basis where `v_1 = (1,0)` and `v_2 = (0,1)`.
    pub fn normalized(&self) -> Fan {
        let basis = Matrix2::from_columns(self.rays[0], self.rays[1]);
        let inv = basis
            .unimodular_inverse()
            .expect("adjacent rays form a basis");
        self.transform(&inv)
            .expect("normalized rays are bounded by the cycle recurrence")
    }

    /// Relabel so that ray `start` becomes ray 0.
    pub fn relabeled_from(&self, start: usize) -> Fan {
        let n = self.len();
        Fan {
            rays: (0..n).map(|k| self.rays[(start + k) % n]).collect(),
        }
    }

    /// `a_i` with `v_{i-1} + v_{i+1} = a_i v_i`.
    pub fn self_intersection_number(&self, i: usize) -> i64 {
        let v = self.rays[i];
        let prev = self.ray(i as isize - 1);
        let next = self.ray(i as isize + 1);
        // det(v_{i-1}, v_i) = det(v_i, v_{i+1}) = 1 forces the sum onto the line of v_i.
        let sum_x = prev.x as i128 + next.x as i128;
        let sum_y = prev.y as i128 + next.y as i128;
        let a = if v.x != 0 {
            sum_x / v.x as i128
        } else {
            sum_y / v.y as i128
        };
        a as i64
    }

    pub fn cycle(&self) -> Cycle {
        let entries = (0..self.len())
            .map(|i| self.self_intersection_number(i))
            .collect();
        Cycle::new(entries).expect("fan has at least three rays")
    }

    /// Blow up the node between components `i` and `i + 1`. The new ray
    /// `v_i + v_{i+1}` gets label `i + 1`; later labels shift by one.
    pub fn corner_blowup(&self, i: usize) -> Result<Fan> {
        self.check_index(i)?;
        let new_ray = self.rays[i].checked_add(self.ray(i as isize + 1))?;
        let mut rays = self.rays.clone();
        rays.insert(i + 1, new_ray);
        Ok(Fan { rays })
    }

    /// Contract component `i`, which must be a (-1)-curve of the fan.
    pub fn corner_blowdown(&self, i: usize) -> Result<Fan> {
        self.check_index(i)?;
        let prev = self.ray(i as isize - 1);
        let next = self.ray(i as isize + 1);
        if self.len() <= MIN_CYCLE_LEN || prev.checked_add(next)? != self.rays[i] {
            return Err(Error::NotContractible { index: i });
        }
        let mut rays = self.rays.clone();
        rays.remove(i);
        Ok(Fan { rays })
    }

    pub fn are_opposite(&self, i: usize, j: usize) -> bool {
        match (self.rays.get(i), self.rays.get(j)) {
            (Some(v), Some(w)) => {
                v.x as i128 == -(w.x as i128) && v.y as i128 == -(w.y as i128) && !v.is_zero()
            }
            _ => false,
        }
    }

    /// All ordered pairs `(i, j)` of opposite rays, sorted.
    pub fn opposite_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.are_opposite(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Elementary transformation realized on the fan: with `u = v_up = -v_down`,
    /// the rays strictly between `up` and `down` (counterclockwise) are sheared
    /// by `w -> w + det(u, w) u`. This raises `a_up` by one and lowers
    /// `a_down` by one, leaving every other entry and the rays `±u` fixed.
    pub fn elementary_transform(&self, up: usize, down: usize) -> Result<Fan> {
        self.check_index(up)?;
        self.check_index(down)?;
        if !self.are_opposite(up, down) {
            return Err(Error::NotOpposite { up, down });
        }
        let n = self.len();
        let u = self.rays[up];
        let mut rays = self.rays.clone();
        let mut k = (up + 1) % n;
        while k != down {
            let w = rays[k];
            let d: i64 = det2(u, w).try_into().map_err(|_| Error::Overflow)?;
            rays[k] = w.checked_add(u.checked_scale(d)?)?;
            k = (k + 1) % n;
        }
        Ok(Fan { rays })
    }

    /// The label permutation induced by a lattice map, if the map permutes the rays.
    pub fn induced_permutation(&self, m: &Matrix2) -> Option<DihedralElement> {
        if !m.is_unimodular() {
            return None;
        }
        let n = self.len();
        let img0 = m.apply(self.rays[0]).ok()?;
        let j = self.rays.iter().position(|v| *v == img0)?;
        let reflected = m.det() < 0;
        let g = DihedralElement::new(n, j, reflected);
        (0..n)
            .all(|k| m.apply(self.rays[k]).ok() == Some(self.rays[g.apply(k)]))
            .then_some(g)
    }

    /// Every lattice automorphism permuting the rays, found by trying each
    /// target ray and orientation for the adjacent pair `(v_0, v_1)`.
    pub fn symmetries(&self) -> Vec<FanSymmetry> {
        let n = self.len();
        let source = Matrix2::from_columns(self.rays[0], self.rays[1]);
        let source_inv = source
            .unimodular_inverse()
            .expect("adjacent rays form a basis");
        let mut out = Vec::new();
        for g in DihedralElement::all(n) {
            let target = Matrix2::from_columns(self.rays[g.apply(0)], self.rays[g.apply(1)]);
            let Some(m) = mul(&target, &source_inv) else {
                continue;
            };
            if self.induced_permutation(&m) == Some(g) {
                out.push(FanSymmetry {
                    element: g,
                    matrix: m,
                });
            }
        }
        out
    }
}

fn mul(a: &Matrix2, b: &Matrix2) -> Option<Matrix2> {
    let mut out = [[0i64; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let v = a.0[i][0] as i128 * b.0[0][j] as i128 + a.0[i][1] as i128 * b.0[1][j] as i128;
            *cell = v.try_into().ok()?;
        }
    }
    Some(Matrix2(out))
}

/// Fans compare equal when they agree after normalization.
impl PartialEq for Fan {
    fn eq(&self, other: &Fan) -> bool {
        self.len() == other.len() && self.normalized().rays == other.normalized().rays
    }
}

impl Eq for Fan {}

impl TryFrom<Vec<LatticeVector>> for Fan {
    type Error = Error;

    fn try_from(rays: Vec<LatticeVector>) -> Result<Self> {
        Fan::from_rays(rays)
    }
}

impl From<Fan> for Vec<LatticeVector> {
    fn from(f: Fan) -> Self {
        f.rays
    }
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rays.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Build the normalized fan of a toric pair from its cycle, via
/// `v_0 = (1,0)`, `v_1 = (0,1)`, `v_{i+1} = a_i v_i - v_{i-1}`.
pub fn fan_from_cycle(c: &Cycle) -> Result<Fan> {
    let n = c.len();
    let a = c.entries();
    let mut rays = Vec::with_capacity(n + 2);
    rays.push(LatticeVector::E1);
    rays.push(LatticeVector::E2);
    for i in 1..=n {
        let next = rays[i].checked_scale(a[i % n])?.checked_sub(rays[i - 1])?;
        rays.push(next);
    }
    if rays[n] != rays[0] || rays[n + 1] != rays[1] {
        return Err(Error::NotToric {
            reason: format!(
                "ray recurrence does not close up (v{} = {})",
                n + 1,
                rays[n]
            ),
        });
    }
    rays.truncate(n);
    Fan::from_rays(rays).map_err(|e| match e {
        Error::InvalidFan { reason } => Error::NotToric { reason },
        other => other,
    })
}

pub fn cycle_from_fan(f: &Fan) -> Cycle {
    f.cycle()
}
