//! The lattices of the action `1/r(1, a, r-a)`.
//!
//! `M0 = Z^3` holds exponent triples of Laurent monomials in `x, y, z`, and
//! `M` is the sublattice of invariant ones. The dual side `N0 = Z^3` is refined
//! to `N = N0 + Z * (1/r)(1, a, r-a)`; points of `N` are stored scaled by `r`
//! so all arithmetic stays integral.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::geometry::{self, Vec3};

/// The cyclic action of type `1/r(1, a, r-a)`, canonicalized so that `a < r - a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupAction {
    r: i64,
    a: i64,
    b: i64,
    swapped: bool,
}

impl GroupAction {
    /// An action accepted by the structured pipeline: `gcd(r, a) = 1` and
    /// `2 <= a <= r - 2`. Inputs with `a > r - a` are canonicalized by
    /// exchanging `y` and `z`.
    pub fn new(r: i64, a: i64) -> Result<Self> {
        let action = Self::exploratory(r, a)?;
        if action.a == 1 {
            return Err(Error::DegenerateAction { r, a });
        }
        Ok(action)
    }

    /// Like [`GroupAction::new`] but also accepts `a` in `{1, r - 1}`, for use
    /// with the brute-force enumerator only.
    pub fn exploratory(r: i64, a: i64) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidAction { r, a, reason: "group order must be at least 2" });
        }
        if a < 1 || a >= r {
            return Err(Error::InvalidAction { r, a, reason: "a must lie in 1..r" });
        }
        if r.gcd(&a) != 1 {
            return Err(Error::InvalidAction { r, a, reason: "r and a must be coprime" });
        }
        let swapped = a > r - a;
        let a = if swapped { r - a } else { a };
        let b = crate::euclid::modular_inverse(a, r)?;
        Ok(GroupAction { r, a, b, swapped })
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    /// The canonical second weight, `a < r - a`.
    pub fn a(&self) -> i64 {
        self.a
    }

    /// Inverse of the canonical `a` modulo `r`.
    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn swapped(&self) -> bool {
        self.swapped
    }

    /// The weight `a` as originally supplied.
    pub fn original_a(&self) -> i64 {
        if self.swapped {
            self.r - self.a
        } else {
            self.a
        }
    }

    pub fn original_b(&self) -> i64 {
        if self.swapped {
            self.r - self.b
        } else {
            self.b
        }
    }

    /// The weights `(1, a, r - a)` of `x, y, z`.
    pub fn weights(&self) -> [i64; 3] {
        [1, self.a, self.r - self.a]
    }

    /// The character of a Laurent monomial, in `0..r`.
    pub fn weight(&self, m: ExponentTriple) -> i64 {
        let w = self.weights();
        let raw = m.x as i128 * w[0] as i128 + m.y as i128 * w[1] as i128 + m.z as i128 * w[2] as i128;
        raw.rem_euclid(self.r as i128) as i64
    }

    /// Whether `m` lies in `M`, the lattice of invariant Laurent monomials.
    pub fn is_invariant(&self, m: ExponentTriple) -> bool {
        self.weight(m) == 0
    }

    /// Whether `(1/r) w` is a point of `N`.
    pub fn contains_n(&self, w: &Vec3) -> bool {
        let r = self.r as i128;
        let t = w[0] as i128;
        (w[1] as i128 - self.a as i128 * t).rem_euclid(r) == 0
            && (w[2] as i128 - (self.r - self.a) as i128 * t).rem_euclid(r) == 0
    }

    /// Exchanges `y` and `z` when the action was canonicalized, mapping
    /// internal data back to the caller's coordinates (and vice versa).
    pub fn to_original_exponent(&self, m: ExponentTriple) -> ExponentTriple {
        if self.swapped {
            ExponentTriple::new(m.x, m.z, m.y)
        } else {
            m
        }
    }

    pub fn to_original_n(&self, w: Vec3) -> Vec3 {
        if self.swapped {
            [w[0], w[2], w[1]]
        } else {
            w
        }
    }
}

impl fmt::Display for GroupAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{},{})", self.r, self.original_a(), self.r - self.original_a())
    }
}

/// Exponents of a Laurent monomial `x^x y^y z^z`; equally a vector of `M0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExponentTriple {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl ExponentTriple {
    pub const ONE: ExponentTriple = ExponentTriple { x: 0, y: 0, z: 0 };
    pub const X: ExponentTriple = ExponentTriple { x: 1, y: 0, z: 0 };
    pub const Y: ExponentTriple = ExponentTriple { x: 0, y: 1, z: 0 };
    pub const Z: ExponentTriple = ExponentTriple { x: 0, y: 0, z: 1 };

    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        ExponentTriple { x, y, z }
    }

    pub fn to_array(self) -> Vec3 {
        [self.x, self.y, self.z]
    }

    pub fn from_array(v: Vec3) -> Self {
        ExponentTriple::new(v[0], v[1], v[2])
    }

    /// Nonnegative exponents, i.e. an ordinary monomial.
    pub fn is_ordinary(self) -> bool {
        self.x >= 0 && self.y >= 0 && self.z >= 0
    }

    pub fn divides(self, other: ExponentTriple) -> bool {
        self.x <= other.x && self.y <= other.y && self.z <= other.z
    }

    pub fn scaled(self, k: i64) -> Self {
        ExponentTriple::new(self.x * k, self.y * k, self.z * k)
    }

    pub fn degree(self) -> i64 {
        self.x + self.y + self.z
    }
}

impl Add for ExponentTriple {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        ExponentTriple::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for ExponentTriple {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        ExponentTriple::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for ExponentTriple {
    type Output = Self;
    fn neg(self) -> Self {
        ExponentTriple::new(-self.x, -self.y, -self.z)
    }
}

impl fmt::Display for ExponentTriple {
    /// Monomial notation: `1`, `x^2y`, `y^3x^-1` is written `x^-1y^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::ONE {
            return f.write_str("1");
        }
        for (var, e) in [("x", self.x), ("y", self.y), ("z", self.z)] {
            match e {
                0 => {}
                1 => f.write_str(var)?,
                _ => write!(f, "{var}^{e}")?,
            }
        }
        Ok(())
    }
}

/// A point `(1/r) w` of `N`, stored by its integer numerator `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NVector {
    w: Vec3,
    r: i64,
}

impl NVector {
    /// Checks lattice membership; does not normalize.
    pub fn new(action: &GroupAction, w: Vec3) -> Result<Self> {
        if !action.contains_n(&w) {
            return Err(Error::NotInLattice { w, r: action.r() });
        }
        Ok(NVector { w, r: action.r() })
    }

    /// The primitive generator in `N` of the ray through `(1/r) w`.
    pub fn primitive(action: &GroupAction, w: Vec3) -> Result<Self> {
        primitive_n_vector(action, w)
    }

    /// The `r`-scaled integer coordinates.
    pub fn scaled(&self) -> Vec3 {
        self.w
    }

    pub fn denominator(&self) -> i64 {
        self.r
    }

    /// `r` times the pairing with a vector of `M0`; only the sign is
    /// meaningful for cone membership.
    pub fn pairing(&self, m: ExponentTriple) -> i128 {
        geometry::dot(&self.w, &m.to_array())
    }

    /// Whether the vector lies on a coordinate ray `e1`, `e2` or `e3`.
    pub fn coordinate_axis(&self) -> Option<usize> {
        let nonzero: Vec<usize> = (0..3).filter(|&k| self.w[k] != 0).collect();
        match nonzero.as_slice() {
            [k] => Some(*k),
            _ => None,
        }
    }
}

impl fmt::Display for NVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}({},{},{})", self.r, self.w[0], self.w[1], self.w[2])
    }
}

/// The weight of `m` in `0..r`.
pub fn weight(action: &GroupAction, m: ExponentTriple) -> i64 {
    action.weight(m)
}

pub fn is_invariant(action: &GroupAction, m: ExponentTriple) -> bool {
    action.is_invariant(m)
}

/// The primitive generator in `N` of the ray `R+ w`, returned `r`-scaled.
pub fn primitive_n_vector(action: &GroupAction, w: Vec3) -> Result<NVector> {
    if geometry::is_zero(&w) {
        return Err(Error::ZeroVector);
    }
    let u = geometry::primitive_dir(&w);
    let r = action.r();
    // k u lies in N iff k kills both residues below modulo r
    let res_y = (u[1] as i128 - action.a() as i128 * u[0] as i128).rem_euclid(r as i128) as i64;
    let res_z = (u[2] as i128 - (r - action.a()) as i128 * u[0] as i128).rem_euclid(r as i128) as i64;
    let k = (r / r.gcd(&res_y)).lcm(&(r / r.gcd(&res_z)));
    NVector::new(action, geometry::scale(&u, k))
}

/// Extremal rays of the cone dual to the one spanned by `generators` (vectors
/// of `M0`), as primitive points of `N` in cyclic order.
pub fn dual_cone_3d(generators: &[ExponentTriple], action: &GroupAction) -> Result<Vec<NVector>> {
    let gens: Vec<Vec3> = generators.iter().map(|g| g.to_array()).collect();
    let dirs = geometry::dual_extremal(&gens)?;
    dirs.into_iter().map(|d| primitive_n_vector(action, d)).collect()
}

/// Whether `point` is a nonnegative combination of `rays`.
pub fn cone_contains(rays: &[NVector], point: &NVector) -> Result<bool> {
    let rs: Vec<Vec3> = rays.iter().map(|v| v.scaled()).collect();
    let normals = geometry::dual_extremal(&rs)?;
    Ok(geometry::classify(&normals, &point.scaled()) != geometry::Position::Outside)
}

/// `|det(w1, w2, w3)| / r^2`: the index of the sublattice generated by the
/// three rays in `N`. Equals 1 exactly when they form a basis of `N`.
pub fn normalized_det(rays: &[NVector; 3], action: &GroupAction) -> Result<u64> {
    if let Some(bad) = rays.iter().find(|v| !action.contains_n(&v.scaled())) {
        return Err(Error::NotInLattice { w: bad.scaled(), r: action.r() });
    }
    let det = geometry::det3(&rays[0].scaled(), &rays[1].scaled(), &rays[2].scaled()).unsigned_abs();
    // N has covolume r^2 in scaled coordinates
    Ok(u64::try_from(det / (action.r() as u128).pow(2)).expect("overflow"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn act(r: i64, a: i64) -> GroupAction {
        GroupAction::new(r, a).unwrap()
    }

    fn nv(action: &GroupAction, w: Vec3) -> NVector {
        NVector::new(action, w).unwrap()
    }

    #[test]
    fn weights_of_variables() {
        let g = act(14, 5);
        assert_eq!(g.weight(ExponentTriple::X), 1);
        assert_eq!(g.weight(ExponentTriple::Y), 5);
        assert_eq!(g.weight(ExponentTriple::Z), 9);
        assert_eq!(g.weight(ExponentTriple::new(0, 1, 1)), 0);
        assert_eq!(act(5, 2).weight(ExponentTriple::new(2, 0, 1)), 0);
    }

    #[test]
    fn invariance() {
        let g = act(5, 2);
        assert!(g.is_invariant(ExponentTriple::new(0, 1, 1)));
        assert!(g.is_invariant(ExponentTriple::new(-1, 3, 0)));
        assert!(!g.is_invariant(ExponentTriple::X));
    }

    #[test]
    fn action_validation() {
        assert!(matches!(GroupAction::new(6, 2), Err(Error::InvalidAction { .. })));
        assert!(matches!(GroupAction::new(7, 1), Err(Error::DegenerateAction { .. })));
        assert!(matches!(GroupAction::new(7, 6), Err(Error::DegenerateAction { .. })));
        assert!(GroupAction::exploratory(7, 1).is_ok());
        let g = act(14, 9);
        assert!(g.swapped());
        assert_eq!((g.a(), g.b(), g.original_a(), g.original_b()), (5, 3, 9, 11));
    }

    #[test]
    fn primitive_generators() {
        let g = act(5, 2);
        assert_eq!(primitive_n_vector(&g, [2, 4, 6]).unwrap().scaled(), [1, 2, 3]);
        assert_eq!(primitive_n_vector(&g, [0, 10, 0]).unwrap().scaled(), [0, 5, 0]);
        assert_eq!(primitive_n_vector(&g, [6, 2, 3]).unwrap().scaled(), [6, 2, 3]);
        assert_eq!(primitive_n_vector(&g, [0, 0, 0]), Err(Error::ZeroVector));
    }

    #[test]
    fn primitive_generator_matches_submultiple_scan() {
        for (r, a) in [(5, 2), (7, 3), (12, 5), (14, 5)] {
            let g = act(r, a);
            for w in [[1, 1, 1], [3, 0, 2], [2, 4, 1], [0, 0, 7], [9, 6, 3], [1, -2, 5]] {
                let p = primitive_n_vector(&g, w).unwrap().scaled();
                let u = geometry::primitive_dir(&w);
                // brute force: the smallest k with k u in N
                let k = (1..=r).find(|&k| g.contains_n(&geometry::scale(&u, k))).unwrap();
                assert_eq!(p, geometry::scale(&u, k));
            }
        }
    }

    #[test]
    fn dual_of_gamma_x_generators() {
        let g = act(5, 2);
        let gens = [ExponentTriple::new(5, 0, 0), ExponentTriple::new(-2, 1, 0), ExponentTriple::new(-3, 0, 1)];
        let mut rays: Vec<Vec3> = dual_cone_3d(&gens, &g).unwrap().iter().map(|v| v.scaled()).collect();
        rays.sort();
        assert_eq!(rays, vec![[0, 0, 5], [0, 5, 0], [1, 2, 3]]);
    }

    #[test]
    fn dual_of_quadric_generators() {
        let g = act(5, 2);
        let gens = [
            ExponentTriple::new(-1, 3, 0),
            ExponentTriple::new(-1, 0, 2),
            ExponentTriple::new(1, 1, -1),
            ExponentTriple::new(1, -2, 1),
        ];
        let rays = dual_cone_3d(&gens, &g).unwrap();
        let mut sorted: Vec<Vec3> = rays.iter().map(|v| v.scaled()).collect();
        sorted.sort();
        assert_eq!(sorted, vec![[1, 2, 3], [3, 1, 4], [4, 3, 2], [6, 2, 3]]);
        // oracle: nonnegative pairings, each ray tight on exactly two generators
        for ray in &rays {
            assert!(gens.iter().all(|m| ray.pairing(*m) >= 0));
            assert_eq!(gens.iter().filter(|m| ray.pairing(**m) == 0).count(), 2);
        }
    }

    #[test]
    fn dual_of_unit_generators() {
        let g = act(5, 2);
        let gens = [ExponentTriple::X, ExponentTriple::Y, ExponentTriple::Z];
        let mut rays: Vec<Vec3> = dual_cone_3d(&gens, &g).unwrap().iter().map(|v| v.scaled()).collect();
        rays.sort();
        assert_eq!(rays, vec![[0, 0, 5], [0, 5, 0], [5, 0, 0]]);
    }

    #[test]
    fn degenerate_generators_rejected() {
        let g = act(5, 2);
        let gens = [ExponentTriple::X, ExponentTriple::Y, ExponentTriple::new(1, 1, 0)];
        assert!(matches!(dual_cone_3d(&gens, &g), Err(Error::DegenerateCone(_))));
    }

    #[test]
    fn containment() {
        let g = act(5, 2);
        let octant = [nv(&g, [5, 0, 0]), nv(&g, [0, 5, 0]), nv(&g, [0, 0, 5])];
        assert!(cone_contains(&octant, &nv(&g, [1, 2, 3])).unwrap());
        assert!(cone_contains(&octant, &nv(&g, [6, 2, 3])).unwrap());
        let c = [nv(&g, [0, 5, 0]), nv(&g, [0, 0, 5]), nv(&g, [2, 4, 1])];
        assert!(cone_contains(&c, &nv(&g, [1, 2, 3])).unwrap());
        let d = [nv(&g, [1, 2, 3]), nv(&g, [0, 5, 0]), nv(&g, [0, 0, 5])];
        assert!(!cone_contains(&d, &nv(&g, [2, 4, 1])).unwrap());
    }

    #[test]
    fn normalized_determinants() {
        let g = act(5, 2);
        let smooth = [nv(&g, [1, 2, 3]), nv(&g, [0, 5, 0]), nv(&g, [0, 0, 5])];
        assert_eq!(normalized_det(&smooth, &g).unwrap(), 1);
        let octant = [nv(&g, [5, 0, 0]), nv(&g, [0, 5, 0]), nv(&g, [0, 0, 5])];
        assert_eq!(normalized_det(&octant, &g).unwrap(), 5);
        let other = [nv(&g, [3, 1, 4]), nv(&g, [1, 2, 3]), nv(&g, [0, 0, 5])];
        assert_eq!(normalized_det(&other, &g).unwrap(), 1);
        let bad = [NVector { w: [1, 0, 0], r: 5 }, nv(&g, [0, 5, 0]), nv(&g, [0, 0, 5])];
        assert!(matches!(normalized_det(&bad, &g), Err(Error::NotInLattice { .. })));
    }

    #[test]
    fn monomial_display() {
        assert_eq!(ExponentTriple::ONE.to_string(), "1");
        assert_eq!(ExponentTriple::new(2, 1, 0).to_string(), "x^2y");
        assert_eq!(ExponentTriple::new(-1, 3, 0).to_string(), "x^-1y^3");
    }
}
