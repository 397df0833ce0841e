//! Exact integer machinery for 3-dimensional polyhedral cones.
//!
//! Vectors are plain `[i64; 3]`; every product that can grow beyond the
//! input width is taken in `i128` and narrowed with a checked conversion,
//! so overflow panics instead of wrapping.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Vec3 = [i64; 3];

fn narrow(v: i128) -> i64 {
    i64::try_from(v).expect("integer overflow in exact cone arithmetic")
}

pub fn dot(u: &Vec3, v: &Vec3) -> i128 {
    u.iter().zip(v).map(|(&a, &b)| a as i128 * b as i128).sum()
}

pub fn cross(u: &Vec3, v: &Vec3) -> Vec3 {
    let (u0, u1, u2) = (u[0] as i128, u[1] as i128, u[2] as i128);
    let (v0, v1, v2) = (v[0] as i128, v[1] as i128, v[2] as i128);
    [narrow(u1 * v2 - u2 * v1), narrow(u2 * v0 - u0 * v2), narrow(u0 * v1 - u1 * v0)]
}

pub fn det3(u: &Vec3, v: &Vec3, w: &Vec3) -> i128 {
    let c = cross(v, w);
    dot(u, &c)
}

pub fn is_zero(v: &Vec3) -> bool {
    v.iter().all(|&c| c == 0)
}

pub fn scale(v: &Vec3, k: i64) -> Vec3 {
    [
        v[0].checked_mul(k).expect("overflow"),
        v[1].checked_mul(k).expect("overflow"),
        v[2].checked_mul(k).expect("overflow"),
    ]
}

pub fn content(v: &Vec3) -> i64 {
    v[0].gcd(&v[1]).gcd(&v[2])
}

/// Divides out the gcd of the entries. The zero vector is returned unchanged.
pub fn primitive_dir(v: &Vec3) -> Vec3 {
    let g = content(v);
    if g == 0 {
        return *v;
    }
    [v[0] / g, v[1] / g, v[2] / g]
}

fn has_full_rank(vs: &[Vec3]) -> bool {
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let c = cross(&vs[i], &vs[j]);
            if is_zero(&c) {
                continue;
            }
            if vs[j + 1..].iter().any(|w| dot(&c, w) != 0) {
                return true;
            }
        }
    }
    false
}

/// Extremal rays of the dual cone `{n : <n, g> >= 0 for all g}`, as primitive
/// integer directions in cyclic order.
///
/// The generators must span 3-space and lie in an open half-space, i.e. the
/// cone they span must be full-dimensional and pointed.
pub fn dual_extremal(generators: &[Vec3]) -> Result<Vec<Vec3>> {
    let mut gens: Vec<Vec3> = generators.iter().filter(|g| !is_zero(g)).map(primitive_dir).collect();
    gens.sort();
    gens.dedup();
    if !has_full_rank(&gens) {
        return Err(Error::DegenerateCone("generators do not span 3-space"));
    }
    let mut rays: Vec<Vec3> = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let c = cross(&gens[i], &gens[j]);
            if is_zero(&c) {
                continue;
            }
            let mut pos = false;
            let mut neg = false;
            for g in &gens {
                match dot(&c, g).cmp(&0) {
                    Ordering::Greater => pos = true,
                    Ordering::Less => neg = true,
                    Ordering::Equal => {}
                }
                if pos && neg {
                    break;
                }
            }
            if pos && neg {
                continue;
            }
            let n = primitive_dir(&if neg { scale(&c, -1) } else { c });
            if !rays.contains(&n) {
                rays.push(n);
            }
        }
    }
    if rays.len() < 3 {
        return Err(Error::DegenerateCone("generators span a cone containing a line"));
    }
    cyclic_sort(&mut rays);
    Ok(rays)
}

/// Sorts the rays of a pointed full-dimensional cone cyclically around the
/// axis through their sum, starting from the lexicographically smallest ray.
pub fn cyclic_sort(rays: &mut [Vec3]) {
    if rays.len() < 3 {
        rays.sort();
        return;
    }
    let mut axis = [0i64; 3];
    for r in rays.iter() {
        for k in 0..3 {
            axis[k] = axis[k].checked_add(r[k]).expect("overflow");
        }
    }
    let start = *rays.iter().min().expect("nonempty");
    let half = |v: &Vec3| -> u8 {
        if *v == start {
            return 0;
        }
        match det3(&axis, &start, v).cmp(&0) {
            Ordering::Greater => 1,
            Ordering::Equal => 2,
            Ordering::Less => 3,
        }
    };
    rays.sort_by(|u, v| half(u).cmp(&half(v)).then_with(|| 0.cmp(&det3(&axis, u, v))));
}

/// Extremal rays of the cone spanned by `points`, primitive and cyclically ordered.
pub fn hull_extremal(points: &[Vec3]) -> Result<Vec<Vec3>> {
    let normals = dual_extremal(points)?;
    dual_extremal(&normals)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    Interior,
    Boundary,
    Outside,
}

pub fn classify(normals: &[Vec3], point: &Vec3) -> Position {
    let mut on_face = false;
    for n in normals {
        match dot(n, point).cmp(&0) {
            Ordering::Less => return Position::Outside,
            Ordering::Equal => on_face = true,
            Ordering::Greater => {}
        }
    }
    if on_face {
        Position::Boundary
    } else {
        Position::Interior
    }
}

/// Two full-dimensional pointed cones inside a common open half-space have
/// disjoint interiors iff a facet plane of one of them separates them.
pub fn interiors_disjoint(a: &[Vec3], b: &[Vec3]) -> Result<bool> {
    let na = dual_extremal(a)?;
    let nb = dual_extremal(b)?;
    let separates = |normals: &[Vec3], other: &[Vec3]| normals.iter().any(|n| other.iter().all(|v| dot(n, v) <= 0));
    Ok(separates(&na, b) || separates(&nb, a))
}

/// Area of the cross-section of a cone in the octant with the plane
/// `w1 + w2 + w3 = 1`, up to the constant factor relating the determinant of
/// three points on that plane to their Euclidean area. The rays must be in
/// cyclic order and have positive coordinate sums.
pub fn cross_section_area(rays: &[Vec3]) -> BigRational {
    let sum = |v: &Vec3| BigInt::from(v[0] as i128 + v[1] as i128 + v[2] as i128);
    let mut total = BigRational::zero();
    for i in 1..rays.len().saturating_sub(1) {
        let det = BigInt::from(det3(&rays[0], &rays[i], &rays[i + 1])).abs();
        let denom = sum(&rays[0]) * sum(&rays[i]) * sum(&rays[i + 1]);
        total += BigRational::new(det, denom);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octant_is_self_dual() {
        let e = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        let mut d = dual_extremal(&e).unwrap();
        d.sort();
        assert_eq!(d, vec![[0, 0, 1], [0, 1, 0], [1, 0, 0]]);
    }

    #[test]
    fn dual_of_halfspace_is_rejected() {
        let gens = [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, 0, 1]];
        assert!(dual_extremal(&gens).is_err());
        let flat = [[1, 0, 0], [0, 1, 0], [1, 1, 0]];
        assert!(dual_extremal(&flat).is_err());
    }

    #[test]
    fn cyclic_order_has_consecutive_facets() {
        let mut rays = vec![[1, 0, 0], [0, 1, 1], [1, 1, 0], [0, 0, 1], [0, 1, 0]];
        cyclic_sort(&mut rays);
        let n = rays.len();
        for i in 0..n {
            let c = cross(&rays[i], &rays[(i + 1) % n]);
            let signs: Vec<i128> = rays.iter().map(|r| dot(&c, r).signum()).collect();
            assert!(signs.iter().all(|&s| s >= 0) || signs.iter().all(|&s| s <= 0), "{rays:?}");
        }
    }

    #[test]
    fn square_cross_section_area() {
        let rays = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        assert_eq!(cross_section_area(&rays), BigRational::from_integer(1.into()));
        let split = [[1, 0, 0], [0, 1, 0], [1, 1, 1]];
        // barycentric area of the sub-triangle (e1, e2, centroid) is a third
        assert_eq!(cross_section_area(&split), BigRational::new(1.into(), 3.into()));
    }

    #[test]
    fn disjointness() {
        let a = [[1, 0, 0], [0, 1, 0], [1, 1, 1]];
        let b = [[0, 1, 0], [0, 0, 1], [1, 1, 1]];
        let c = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        assert!(interiors_disjoint(&a, &b).unwrap());
        assert!(!interiors_disjoint(&a, &c).unwrap());
    }
}
