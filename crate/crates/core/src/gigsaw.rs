//! G-igsaw transformations: moving from a G-set to its neighbour across a
//! wall of `σ(Γ)`.
//!
//! Each wall is dual to one boundary monomial `u`, paired with
//! `v = wt_Γ(u)`. Direction names follow the boundary monomial:
//!
//! | direction    | u     | valleys |
//! |--------------|-------|---------|
//! | `Upper`      | `α`   | 0 or 1  |
//! | `Right`      | `β`   | any     |
//! | `Left`       | `γ`   | any     |
//! | `UpperRight` | `δ_y` | 2       |
//! | `UpperLeft`  | `δ_z` | 2       |

use crate::cones::boundary_monomials;
use crate::error::{Error, Result};
use crate::gset::GSet;
use crate::lattice::ExponentTriple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Upper,
    Right,
    Left,
    UpperRight,
    UpperLeft,
}

impl Direction {
    pub const ALL: [Direction; 5] =
        [Direction::Upper, Direction::Right, Direction::Left, Direction::UpperRight, Direction::UpperLeft];
}

/// The pair `(u, v)` with `v = wt_Γ(u)` for the wall in direction `d`.
pub fn direction_monomial(g: &GSet, d: Direction) -> Result<(ExponentTriple, ExponentTriple)> {
    let b = boundary_monomials(g);
    let valleys = g.valley_count();
    let u = match (valleys == 2, d) {
        (false, Direction::Upper) => b.alpha,
        (_, Direction::Right) => b.beta,
        (_, Direction::Left) => b.gamma,
        (true, Direction::UpperRight) => b.delta_y.expect("two valleys"),
        (true, Direction::UpperLeft) => b.delta_z.expect("two valleys"),
        _ => return Err(Error::IllegalDirection { direction: d, valleys }),
    };
    Ok((u, g.transfer(u)))
}

/// Replaces every member `w` by `w (u/v)^c(w)`, where `c(w)` is the number
/// of times `v` divides `w`.
pub fn transform(g: &GSet, d: Direction) -> Result<GSet> {
    let (u, v) = direction_monomial(g, d)?;
    if v == ExponentTriple::ONE {
        return Err(Error::DegenerateWall(d));
    }
    let shift = u - v;
    let moved: Vec<ExponentTriple> = g
        .members()
        .iter()
        .map(|&w| {
            let c = [(w.x, v.x), (w.y, v.y), (w.z, v.z)]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(have, e)| have / e)
                .min()
                .expect("v is not constant");
            w + shift.scaled(c)
        })
        .collect();
    GSet::validate(g.action(), &moved)
        .map_err(|e| Error::Inconsistent(format!("transform of {g} in direction {d:?}: {e}")))
}

/// Directions in which the transformation is defined and described by the
/// explicit span formulas: the wall is interior (`v != 1`), and for two
/// valleys `Right` needs `k_z >= 1` and `Left` needs `j_y >= 1`.
pub fn available_directions(g: &GSet) -> Vec<Direction> {
    let candidates: Vec<Direction> = match TwoValleyShape::of(g) {
        Some(shape) => {
            let mut c = Vec::new();
            if shape.k_z >= 1 {
                c.push(Direction::Right);
            }
            if shape.j_y >= 1 {
                c.push(Direction::Left);
            }
            c.extend([Direction::UpperRight, Direction::UpperLeft]);
            c
        }
        None => vec![Direction::Upper, Direction::Right, Direction::Left],
    };
    candidates
        .into_iter()
        .filter(|&d| matches!(direction_monomial(g, d), Ok((_, v)) if v != ExponentTriple::ONE))
        .collect()
}

/// Apply `d` `times` times.
pub fn iterate(g: &GSet, d: Direction, times: usize) -> Result<GSet> {
    let mut cur = g.clone();
    for _ in 0..times {
        cur = transform(&cur, d)?;
    }
    Ok(cur)
}

/// The exponents describing a two-valley G-set
/// `span(x^i y^j_y, x^i z^k_z, x^i_y y^j, x^i_z z^k)` with y-valley
/// `x^i_y y^j_y` and z-valley `x^i_z z^k_z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoValleyShape {
    pub i: i64,
    pub j: i64,
    pub k: i64,
    pub i_y: i64,
    pub j_y: i64,
    pub i_z: i64,
    pub k_z: i64,
}

impl TwoValleyShape {
    pub fn of(g: &GSet) -> Option<Self> {
        if g.valley_count() != 2 {
            return None;
        }
        let (v, w) = (g.y_valley()?, g.z_valley()?);
        let (i, j, k) = g.pure_power_exponents();
        Some(TwoValleyShape { i, j, k, i_y: v.x, j_y: v.y, i_z: w.x, k_z: w.z })
    }

    /// `min{j, k, j - j_y, k - k_z}`: the size of the triangle of
    /// transformations hanging off this set.
    pub fn reach(&self) -> i64 {
        self.j.min(self.k).min(self.j - self.j_y).min(self.k - self.k_z)
    }

    fn spanners(&self, foot_y: i64, foot_z: i64, tower_y: i64, tower_z: i64) -> Vec<ExponentTriple> {
        vec![
            ExponentTriple::new(self.i, foot_y, 0),
            ExponentTriple::new(self.i, 0, foot_z),
            ExponentTriple::new(self.i_y, tower_y, 0),
            ExponentTriple::new(self.i_z, 0, tower_z),
        ]
    }
}

/// Closed-form spans of transformed G-sets, used to cross-check
/// [`transform`].
pub mod formulas {
    use super::*;

    /// Spanners of `T(Γ)` for a two-valley `Γ` and `T` one of the four
    /// two-valley directions, when the side condition holds.
    pub fn two_valley_step(shape: &TwoValleyShape, d: Direction) -> Option<Vec<ExponentTriple>> {
        let s = shape;
        match d {
            Direction::Right if s.k_z >= 1 => Some(s.spanners(s.j_y, s.k_z - 1, s.j + 1, s.k)),
            Direction::Left if s.j_y >= 1 => Some(s.spanners(s.j_y - 1, s.k_z, s.j, s.k + 1)),
            Direction::UpperRight => Some(s.spanners(s.j_y + 1, s.k_z, s.j, s.k - 1)),
            Direction::UpperLeft => Some(s.spanners(s.j_y, s.k_z + 1, s.j - 1, s.k)),
            _ => None,
        }
    }

    /// Spanners of `T_UR^m(T_UL^n(Γ))` for `m + n <= reach`.
    pub fn iterated_upper(shape: &TwoValleyShape, m: i64, n: i64) -> Option<Vec<ExponentTriple>> {
        if m < 0 || n < 0 || m + n > shape.reach() {
            return None;
        }
        let s = shape;
        Some(s.spanners(s.j_y + m, s.k_z + n, s.j - n, s.k - m))
    }

    /// Spanners of `T_U(Γ)` when `Γ = span(x^i_y y^j, x^i z^k)` has a single
    /// y-valley `x^i_y`, or mirror-wise a single z-valley `x^i_z`.
    pub fn upper_of_one_valley(g: &GSet) -> Option<Vec<ExponentTriple>> {
        if g.valley_count() != 1 {
            return None;
        }
        let (i, j, k) = g.pure_power_exponents();
        if let Some(v) = g.y_valley().filter(|v| v.y == 0) {
            if g.z_heights().iter().all(|&h| h == k) {
                let iy = v.x;
                return Some(vec![
                    ExponentTriple::new(i + iy + 1, 0, 0),
                    ExponentTriple::new(iy, j - 1, 0),
                    ExponentTriple::new(i, 0, k),
                ]);
            }
        }
        if let Some(w) = g.z_valley().filter(|w| w.z == 0) {
            if g.y_heights().iter().all(|&h| h == j) {
                let iz = w.x;
                return Some(vec![
                    ExponentTriple::new(i + iz + 1, 0, 0),
                    ExponentTriple::new(i, j, 0),
                    ExponentTriple::new(iz, 0, k - 1),
                ]);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gset::{gamma_x, gamma_yz};
    use crate::lattice::GroupAction;

    fn act(r: i64, a: i64) -> GroupAction {
        GroupAction::new(r, a).unwrap()
    }

    fn m(x: i64, y: i64, z: i64) -> ExponentTriple {
        ExponentTriple::new(x, y, z)
    }

    fn span(action: &GroupAction, s: &[(i64, i64, i64)]) -> GSet {
        let s: Vec<_> = s.iter().map(|&(x, y, z)| m(x, y, z)).collect();
        GSet::from_span(action, &s).unwrap()
    }

    #[test]
    fn direction_monomials() {
        let g = act(5, 2);
        let one = span(&g, &[(0, 1, 0), (1, 0, 1)]);
        assert_eq!(direction_monomial(&one, Direction::Upper).unwrap(), (m(2, 0, 0), m(0, 1, 0)));
        let two = span(&g, &[(1, 0, 0), (0, 2, 0), (0, 0, 1)]);
        assert_eq!(direction_monomial(&two, Direction::Left).unwrap(), (m(0, 0, 2), m(1, 0, 0)));
        assert_eq!(direction_monomial(&two, Direction::UpperLeft).unwrap(), (m(1, 0, 1), m(0, 2, 0)));
        assert_eq!(direction_monomial(&two, Direction::UpperRight).unwrap(), (m(1, 1, 0), m(0, 0, 1)));
        let yz2 = gamma_yz(&g, 2).unwrap();
        assert_eq!(direction_monomial(&yz2, Direction::Upper).unwrap(), (m(1, 0, 0), m(0, 0, 2)));
        assert_eq!(
            direction_monomial(&two, Direction::Upper),
            Err(Error::IllegalDirection { direction: Direction::Upper, valleys: 2 })
        );
        assert!(direction_monomial(&one, Direction::UpperLeft).is_err());
    }

    #[test]
    fn transforms() {
        let g = act(5, 2);
        let one = span(&g, &[(0, 1, 0), (1, 0, 1)]);
        assert_eq!(transform(&one, Direction::Upper).unwrap(), span(&g, &[(2, 0, 0), (1, 0, 1)]));
        let two = span(&g, &[(1, 0, 0), (0, 2, 0), (0, 0, 1)]);
        assert_eq!(transform(&two, Direction::UpperRight).unwrap(), span(&g, &[(0, 2, 0), (1, 1, 0)]));
        assert_eq!(transform(&two, Direction::UpperLeft).unwrap(), span(&g, &[(0, 1, 0), (1, 0, 1)]));
        // walls outside the span formulas still lead to G-sets
        assert_eq!(transform(&two, Direction::Left).unwrap(), gamma_yz(&g, 2).unwrap());
        assert_eq!(transform(&two, Direction::Right).unwrap(), gamma_yz(&g, 1).unwrap());

        let g14 = act(14, 5);
        let gamma5 = span(&g14, &[(8, 0, 0), (4, 0, 1)]);
        assert_eq!(transform(&gamma5, Direction::Upper).unwrap(), gamma_x(&g14));
    }

    #[test]
    fn degenerate_walls() {
        let g = act(5, 2);
        assert_eq!(transform(&gamma_x(&g), Direction::Upper), Err(Error::DegenerateWall(Direction::Upper)));
        // Γ_yz,0 = {1, ..., y^4}: z ~ y^4, so Left is interior but Right (y^5 ~ 1) is not
        let yz0 = gamma_yz(&g, 0).unwrap();
        assert_eq!(transform(&yz0, Direction::Right), Err(Error::DegenerateWall(Direction::Right)));
    }

    #[test]
    fn available() {
        let g = act(5, 2);
        assert_eq!(available_directions(&gamma_x(&g)), vec![Direction::Right, Direction::Left]);
        let two = span(&g, &[(1, 0, 0), (0, 2, 0), (0, 0, 1)]);
        assert_eq!(available_directions(&two), vec![Direction::UpperRight, Direction::UpperLeft]);
        let one = span(&g, &[(2, 0, 0), (1, 0, 1)]);
        assert_eq!(available_directions(&one), vec![Direction::Upper, Direction::Right, Direction::Left]);
    }

    #[test]
    fn span_formula_examples() {
        let g14 = act(14, 5);
        let gamma1 = span(&g14, &[(1, 0, 0), (0, 2, 0), (0, 0, 10)]);
        let shape = TwoValleyShape::of(&gamma1).unwrap();
        assert_eq!(shape.reach(), 2);
        let predicted = formulas::two_valley_step(&shape, Direction::UpperRight).unwrap();
        assert_eq!(GSet::from_span(&g14, &predicted).unwrap(), transform(&gamma1, Direction::UpperRight).unwrap());
        assert!(formulas::two_valley_step(&shape, Direction::Right).is_none());
    }
}
