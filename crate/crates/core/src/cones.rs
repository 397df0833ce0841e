//! The cone `σ(Γ)` of a G-set and the semigroup `S(Γ)` generated by its
//! s-values.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::geometry::{self, Vec3};
use crate::gset::GSet;
use crate::lattice::{dual_cone_3d, normalized_det, ExponentTriple, NVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConeKind {
    /// Three rays forming a basis of `N`.
    Smooth,
    /// Four rays; the affine piece is the quadric cone `xy = zw`.
    Quadric,
}

/// A maximal cone of the fan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    dual_generators: Vec<ExponentTriple>,
    rays: Vec<NVector>,
    kind: ConeKind,
}

impl Cone {
    /// Semigroup generators of `σ∨(Γ) ∩ M`.
    pub fn dual_generators(&self) -> &[ExponentTriple] {
        &self.dual_generators
    }

    /// Extremal rays in cyclic order, starting from the lexicographically
    /// smallest; consecutive rays span a 2-dimensional face.
    pub fn rays(&self) -> &[NVector] {
        &self.rays
    }

    pub fn kind(&self) -> ConeKind {
        self.kind
    }

    /// Pairs of consecutive ray positions, one per 2-dimensional face.
    pub fn walls(&self) -> Vec<(usize, usize)> {
        let n = self.rays.len();
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    }

    pub fn scaled_rays(&self) -> Vec<Vec3> {
        self.rays.iter().map(|v| v.scaled()).collect()
    }

    /// Checks the structural invariants: nonnegative pairings, two tight
    /// extremal generators per ray, ray count matching the kind, and
    /// unimodularity of smooth cones.
    pub fn check_invariants(&self, g: &GSet) -> Result<()> {
        let action = g.action();
        let fail = |msg: String| Err(Error::Inconsistent(format!("{g}: {msg}")));
        if self.dual_generators.iter().any(|m| !action.is_invariant(*m)) {
            return fail("dual generator outside M".into());
        }
        if self.rays.iter().any(|v| !action.contains_n(&v.scaled())) {
            return fail("ray outside N".into());
        }
        let extremal: Vec<_> = geometry::dual_extremal(&self.scaled_rays())?;
        for ray in &self.rays {
            if self.dual_generators.iter().any(|m| ray.pairing(*m) < 0) {
                return fail(format!("ray {ray} pairs negatively"));
            }
            let tight = extremal.iter().filter(|n| geometry::dot(n, &ray.scaled()) == 0).count();
            if tight != 2 {
                return fail(format!("ray {ray} is tight on {tight} facets"));
            }
        }
        let expected = match (self.kind, g.valley_count()) {
            (ConeKind::Smooth, 0 | 1) => 3,
            (ConeKind::Quadric, 2) => 4,
            _ => return fail("kind does not match valley count".into()),
        };
        if self.rays.len() != expected {
            return fail(format!("{} rays for a {:?} cone", self.rays.len(), self.kind));
        }
        if self.kind == ConeKind::Smooth {
            let det = normalized_det(&[self.rays[0], self.rays[1], self.rays[2]], action)?;
            if det != 1 {
                return fail(format!("smooth cone has multiplicity {det}"));
            }
        }
        Ok(())
    }
}

const STEPS: [ExponentTriple; 3] = [ExponentTriple::X, ExponentTriple::Y, ExponentTriple::Z];

/// Minimal monomial generators of the ideal spanned by the complement of `g`.
pub fn complement_generators(g: &GSet) -> Vec<ExponentTriple> {
    let mut out = BTreeSet::new();
    for &m in g.members() {
        for t in STEPS {
            let u = m + t;
            if g.contains(u) {
                continue;
            }
            let minimal = STEPS.iter().all(|&s| {
                let d = u - s;
                !d.is_ordinary() || g.contains(d)
            });
            if minimal {
                out.insert(u);
            }
        }
    }
    out.into_iter().collect()
}

/// The boundary monomials `α = x^(i+1)`, `β = y^(j+1)`, `γ = z^(k+1)`, and for
/// two valleys `δ_y = xy·(y-valley)`, `δ_z = xz·(z-valley)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryMonomials {
    pub alpha: ExponentTriple,
    pub beta: ExponentTriple,
    pub gamma: ExponentTriple,
    pub delta_y: Option<ExponentTriple>,
    pub delta_z: Option<ExponentTriple>,
}

pub fn boundary_monomials(g: &GSet) -> BoundaryMonomials {
    let (i, j, k) = g.pure_power_exponents();
    let two = g.valley_count() == 2;
    BoundaryMonomials {
        alpha: ExponentTriple::new(i + 1, 0, 0),
        beta: ExponentTriple::new(0, j + 1, 0),
        gamma: ExponentTriple::new(0, 0, k + 1),
        delta_y: g.y_valley().filter(|_| two).map(|v| v + ExponentTriple::new(1, 1, 0)),
        delta_z: g.z_valley().filter(|_| two).map(|w| w + ExponentTriple::new(1, 0, 1)),
    }
}

/// `s(α), s(β), s(γ)` for at most one valley; `s(β), s(γ), s(δ_y), s(δ_z)`
/// for two. Fails if some s-value of a complement generator is not a
/// nonnegative integer combination of them.
pub fn dual_generators(g: &GSet) -> Result<Vec<ExponentTriple>> {
    let gens = candidate_generators(g);
    let rays = dual_cone_3d(&gens, g.action())?;
    let interior = interior_direction(&rays);
    let raw: Vec<Vec3> = gens.iter().map(|m| m.to_array()).collect();
    for u in complement_generators(g) {
        let s = g.s_value(u);
        if !semigroup_contains(&raw, s.to_array(), &interior) {
            return Err(Error::DominationFailure(s));
        }
    }
    Ok(gens)
}

fn candidate_generators(g: &GSet) -> Vec<ExponentTriple> {
    let b = boundary_monomials(g);
    let us = match (b.delta_y, b.delta_z) {
        (Some(dy), Some(dz)) => vec![b.beta, b.gamma, dy, dz],
        _ => vec![b.alpha, b.beta, b.gamma],
    };
    us.into_iter().map(|u| g.s_value(u)).collect()
}

fn interior_direction(rays: &[NVector]) -> Vec3 {
    rays.iter().fold([0; 3], |acc, v| {
        let w = v.scaled();
        [acc[0] + w[0], acc[1] + w[1], acc[2] + w[2]]
    })
}

/// Whether `target` is a nonnegative integer combination of `gens`. The
/// direction `interior` must pair positively with every nonzero generator,
/// which bounds the search.
pub(crate) fn semigroup_contains(gens: &[Vec3], target: Vec3, interior: &Vec3) -> bool {
    if gens.len() == 3 {
        let d = geometry::det3(&gens[0], &gens[1], &gens[2]);
        if d != 0 {
            let coeffs = [
                geometry::det3(&target, &gens[1], &gens[2]),
                geometry::det3(&gens[0], &target, &gens[2]),
                geometry::det3(&gens[0], &gens[1], &target),
            ];
            return coeffs.iter().all(|&c| c % d == 0 && c / d >= 0);
        }
    }
    let Some((last, rest)) = gens.split_last() else {
        return geometry::is_zero(&target);
    };
    let height = geometry::dot(interior, &target);
    let step = geometry::dot(interior, last);
    if height < 0 {
        return false;
    }
    if step <= 0 {
        return semigroup_contains(rest, target, interior);
    }
    (0..=height / step).any(|c| {
        let c = c as i64;
        let t = [target[0] - c * last[0], target[1] - c * last[1], target[2] - c * last[2]];
        semigroup_contains(rest, t, interior)
    })
}

/// `σ(Γ)`, the cone dual to the one spanned by the dual generators.
pub fn sigma(g: &GSet) -> Result<Cone> {
    let dual_generators = dual_generators(g)?;
    let rays = dual_cone_3d(&dual_generators, g.action())?;
    let kind = if g.valley_count() == 2 { ConeKind::Quadric } else { ConeKind::Smooth };
    let expected = if kind == ConeKind::Quadric { 4 } else { 3 };
    if rays.len() != expected {
        return Err(Error::Inconsistent(format!("{g}: σ has {} rays, expected {expected}", rays.len())));
    }
    Ok(Cone { dual_generators, rays, kind })
}

/// The binomial relation and determinant behind the quadric structure of a
/// two-valley G-set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadricCertificate {
    /// `s(β) + s(δ_z)`.
    pub beta_delta_z: ExponentTriple,
    /// `s(γ) + s(δ_y)`.
    pub gamma_delta_y: ExponentTriple,
    /// Determinant of the rows `(-i_z-1, j+1, -k_z)`, `(i_y+1, j_y+1, -k)`,
    /// `(-i_y-1, -j_y, k+1)`.
    pub determinant: i128,
}

impl QuadricCertificate {
    pub fn holds(&self, r: i64) -> bool {
        let yz = ExponentTriple::new(0, 1, 1);
        self.beta_delta_z == yz && self.gamma_delta_y == yz && self.determinant.abs() == r as i128
    }
}

pub fn quadric_certificate(g: &GSet) -> Result<QuadricCertificate> {
    let (Some(v), Some(w)) = (g.y_valley(), g.z_valley()) else {
        return Err(Error::NotQuadric(g.valley_count()));
    };
    let b = boundary_monomials(g);
    let (dy, dz) = (b.delta_y.expect("two valleys"), b.delta_z.expect("two valleys"));
    let (_, j, k) = g.pure_power_exponents();
    let (iy, jy, iz, kz) = (v.x, v.y, w.x, w.z);
    let rows = [[-iz - 1, j + 1, -kz], [iy + 1, jy + 1, -k], [-iy - 1, -jy, k + 1]];
    Ok(QuadricCertificate {
        beta_delta_z: g.s_value(b.beta) + g.s_value(dz),
        gamma_delta_y: g.s_value(b.gamma) + g.s_value(dy),
        determinant: geometry::det3(&rows[0], &rows[1], &rows[2]),
    })
}

/// Bounded evidence that `S(Γ)` is saturated: every point of `M ∩ σ∨(Γ)`
/// with coordinates in `[-bound, bound]` is generated by the dual generators.
pub fn saturation_check(g: &GSet, bound: i64) -> Result<bool> {
    Ok(saturation_counterexample(g, bound)?.is_none())
}

pub fn saturation_counterexample(g: &GSet, bound: i64) -> Result<Option<ExponentTriple>> {
    let cone = sigma(g)?;
    let action = g.action();
    let r = action.r();
    let interior = interior_direction(cone.rays());
    let gens: Vec<Vec3> = cone.dual_generators().iter().map(|m| m.to_array()).collect();
    let rays = cone.scaled_rays();
    for x in -bound..=bound {
        for y in -bound..=bound {
            // invariance forces z ≡ b (x + a y) (mod r)
            let residue = ((action.b() as i128 * (x + action.a() * y) as i128).rem_euclid(r as i128)) as i64;
            let mut z = -bound + (residue - (-bound)).rem_euclid(r);
            while z <= bound {
                let t = [x, y, z];
                if rays.iter().all(|w| geometry::dot(w, &t) >= 0) && !semigroup_contains(&gens, t, &interior) {
                    return Ok(Some(ExponentTriple::from_array(t)));
                }
                z += r;
            }
        }
    }
    Ok(None)
}
