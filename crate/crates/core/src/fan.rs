//! The G-Hilbert fan: every maximal cone, assembled from the three families
//! of G-sets (the `Γ_yz,l`, the triangles hanging off the primitive sequence,
//! and the upper chain ending at `Γ_x`), plus an independent validator.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cones::{sigma, Cone};
use crate::error::{Error, Result};
use crate::euclid::{euclid_trace, predicted_count, primitive_sequence, EuclidTrace, PrimitiveSequence};
use crate::geometry::{self, Position, Vec3};
use crate::gigsaw::{formulas, transform, Direction, TwoValleyShape};
use crate::gset::{gamma_x, gamma_yz, GSet};
use crate::lattice::{primitive_n_vector, GroupAction, NVector};

pub const DEFAULT_SAMPLES: usize = 1000;
pub const DEFAULT_SEED: u64 = 0x5EED_F00D;

/// One cone of a triangle: `T_UR^up_right(T_UL^up_left(base))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleMember {
    pub up_right: i64,
    pub up_left: i64,
    pub gset: GSet,
    pub cone: Cone,
}

/// The triangle of transformations of a primitive G-set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    base: GSet,
    shape: TwoValleyShape,
    members: Vec<TriangleMember>,
    support: Vec<NVector>,
}

impl Triangle {
    pub fn base(&self) -> &GSet {
        &self.base
    }

    pub fn shape(&self) -> TwoValleyShape {
        self.shape
    }

    /// Ordered by `up_left`, then `up_right`.
    pub fn members(&self) -> &[TriangleMember] {
        &self.members
    }

    pub fn get(&self, up_right: i64, up_left: i64) -> Option<&GSet> {
        self.members.iter().find(|t| (t.up_right, t.up_left) == (up_right, up_left)).map(|t| &t.gset)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The three extremal rays of the union of member cones, cyclically ordered.
    pub fn support(&self) -> &[NVector] {
        &self.support
    }
}

fn scaled(v: &[NVector]) -> Vec<Vec3> {
    v.iter().map(NVector::scaled).collect()
}

fn area(rays: &[Vec3]) -> BigRational {
    geometry::cross_section_area(rays)
}

pub fn triangle(base: &GSet) -> Result<Triangle> {
    let shape = TwoValleyShape::of(base)
        .filter(|_| base.is_primitive())
        .ok_or_else(|| Error::Inconsistent(format!("{base} is not primitive")))?;
    let reach = shape.reach();
    let action = base.action();
    let mut members = Vec::new();
    let mut column = base.clone();
    for up_left in 0..=reach {
        if up_left > 0 {
            column = transform(&column, Direction::UpperLeft)?;
        }
        let mut g = column.clone();
        for up_right in 0..=reach - up_left {
            if up_right > 0 {
                g = transform(&g, Direction::UpperRight)?;
            }
            let spans = formulas::iterated_upper(&shape, up_right, up_left).expect("within reach");
            if GSet::from_span(action, &spans)? != g {
                return Err(Error::Inconsistent(format!(
                    "T_UR^{up_right} T_UL^{up_left} of {base} is {g}, expected span {spans:?}"
                )));
            }
            let expected_valleys = if up_right + up_left < reach { 2 } else { 1 };
            if g.valley_count() != expected_valleys {
                return Err(Error::Inconsistent(format!("{g} has {} valleys", g.valley_count())));
            }
            let cone = sigma(&g)?;
            members.push(TriangleMember { up_right, up_left, gset: g.clone(), cone });
        }
    }

    let all: Vec<Vec3> = members.iter().flat_map(|t| t.cone.scaled_rays()).collect();
    let hull = geometry::hull_extremal(&all)?;
    if hull.len() != 3 {
        return Err(Error::Inconsistent(format!("triangle of {base} has a {}-ray support", hull.len())));
    }
    let total: BigRational = members.iter().map(|t| area(&t.cone.scaled_rays())).sum();
    if total != area(&hull) {
        return Err(Error::Inconsistent(format!("member cones of the triangle of {base} overlap or leave gaps")));
    }
    let support = hull.iter().map(|d| primitive_n_vector(action, *d)).collect::<Result<_>>()?;
    Ok(Triangle { base: base.clone(), shape, members, support })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    Yz {
        l: i64,
    },
    /// `n` counts primitive members from 1.
    Triangle {
        n: usize,
        up_right: i64,
        up_left: i64,
    },
    /// `step` applications of `T_U` to the first non-primitive member.
    UpperChain {
        step: usize,
    },
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Yz { l } => write!(f, "yz[{l}]"),
            Region::Triangle { n, up_right, up_left } => write!(f, "triangle[{n}]({up_right},{up_left})"),
            Region::UpperChain { step } => write!(f, "upper[{step}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanCone {
    pub gset: GSet,
    pub cone: Cone,
    /// Indices into [`Fan::rays`], in the cone's cyclic order.
    pub ray_ids: Vec<usize>,
    pub region: Region,
}

#[derive(Debug, Clone)]
pub struct Fan {
    action: GroupAction,
    rays: Vec<NVector>,
    cones: Vec<FanCone>,
    sequence: PrimitiveSequence,
    triangles: Vec<Triangle>,
    trace: EuclidTrace,
}

impl Fan {
    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    /// Every ray once, sorted lexicographically by scaled coordinates.
    pub fn rays(&self) -> &[NVector] {
        &self.rays
    }

    /// `yz` cones by `l`, then triangles, then the upper chain.
    pub fn cones(&self) -> &[FanCone] {
        &self.cones
    }

    pub fn gsets(&self) -> impl Iterator<Item = &GSet> {
        self.cones.iter().map(|c| &c.gset)
    }

    pub fn sequence(&self) -> &PrimitiveSequence {
        &self.sequence
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    /// Division chain of `(max(b, r-b), min(b, r-b))`.
    pub fn trace(&self) -> &EuclidTrace {
        &self.trace
    }

    pub fn ray_id(&self, v: &NVector) -> Option<usize> {
        self.rays.binary_search(v).ok()
    }

    pub fn region_cones(&self, pred: impl Fn(&Region) -> bool) -> Vec<usize> {
        (0..self.cones.len()).filter(|&i| pred(&self.cones[i].region)).collect()
    }
}

fn coordinate_ray(action: &GroupAction, axis: usize) -> NVector {
    let mut w = [0; 3];
    w[axis] = action.r();
    NVector::new(action, w).expect("coordinate rays lie in N")
}

pub fn build_fan(action: &GroupAction) -> Result<Fan> {
    if action.a() == 1 {
        return Err(Error::DegenerateAction { r: action.r(), a: action.original_a() });
    }
    let r = action.r();
    let sequence = primitive_sequence(action)?;
    let mut entries: Vec<(GSet, Cone, Region)> = Vec::new();

    for l in 0..r {
        let g = gamma_yz(action, l)?;
        let cone = sigma(&g)?;
        entries.push((g, cone, Region::Yz { l }));
    }

    let mut triangles = Vec::new();
    for (n, base) in sequence.primitive().iter().enumerate() {
        let t = triangle(base)?;
        for m in t.members() {
            let region = Region::Triangle { n: n + 1, up_right: m.up_right, up_left: m.up_left };
            entries.push((m.gset.clone(), m.cone.clone(), region));
        }
        triangles.push(t);
    }

    let top = gamma_x(action);
    let mut g = sequence.last().clone();
    for step in 0.. {
        let cone = sigma(&g)?;
        let done = g == top;
        entries.push((g.clone(), cone, Region::UpperChain { step }));
        if done {
            break;
        }
        if step > 2 * r as usize {
            return Err(Error::ChainBroken(format!("upper chain from {} does not reach Γ_x", sequence.last())));
        }
        g = transform(&g, Direction::Upper)?;
    }

    let mut seen: HashMap<&GSet, Region> = HashMap::new();
    for (g, _, region) in &entries {
        if let Some(first) = seen.insert(g, *region) {
            return Err(Error::Inconsistent(format!("{g} appears in both {first} and {region}")));
        }
    }

    let rays: Vec<NVector> =
        entries.iter().flat_map(|(_, c, _)| c.rays().iter().copied()).collect::<BTreeSet<_>>().into_iter().collect();
    let cones = entries
        .into_iter()
        .map(|(gset, cone, region)| {
            let ray_ids = cone.rays().iter().map(|v| rays.binary_search(v).expect("ray in table")).collect();
            FanCone { gset, cone, ray_ids, region }
        })
        .collect();

    let b = action.b() as u64;
    let rb = r as u64 - b;
    let trace = euclid_trace(b.max(rb), b.min(rb));
    Ok(Fan { action: *action, rays, cones, sequence, triangles, trace })
}

/// `ρ_1, ..., ρ_(m+1)`.
///
/// `ρ_n` is the common extremal ray of `σ(Γ_n)` and the support of its
/// triangle; `ρ_(m+1)` is the non-coordinate extremal ray of the union of
/// the upper chain. The chain is checked to telescope: each triangle support
/// together with `cone(ρ_(n+1), e2, e3)` tiles `cone(ρ_n, e2, e3)`, and the
/// upper chain tiles `cone(ρ_(m+1), e2, e3)`.
pub fn rho_chain(fan: &Fan) -> Result<Vec<NVector>> {
    let action = fan.action();
    let broken = |msg: String| Err(Error::ChainBroken(msg));
    let mut rho = Vec::new();
    for t in fan.triangles() {
        let own = sigma(t.base())?;
        let common: Vec<NVector> = own.rays().iter().filter(|v| t.support().contains(v)).copied().collect();
        match common.as_slice() {
            [v] => rho.push(*v),
            _ => return broken(format!("σ({}) shares {} rays with its triangle", t.base(), common.len())),
        }
    }

    let chain: Vec<Vec3> = fan
        .cones()
        .iter()
        .filter(|c| matches!(c.region, Region::UpperChain { .. }))
        .flat_map(|c| c.cone.scaled_rays())
        .collect();
    let hull = geometry::hull_extremal(&chain)?;
    let (e2, e3) = (coordinate_ray(action, 1), coordinate_ray(action, 2));
    let (d2, d3) = (geometry::primitive_dir(&e2.scaled()), geometry::primitive_dir(&e3.scaled()));
    let other: Vec<Vec3> = hull.iter().filter(|d| **d != d2 && **d != d3).copied().collect();
    match (hull.len(), other.as_slice()) {
        (3, [d]) => rho.push(primitive_n_vector(action, *d)?),
        _ => return broken(format!("upper chain union has extremal rays {hull:?}")),
    }

    let corner = |v: &NVector| vec![v.scaled(), e2.scaled(), e3.scaled()];
    for (n, t) in fan.triangles().iter().enumerate() {
        let outer = corner(&rho[n]);
        let inner = corner(&rho[n + 1]);
        let support = scaled(t.support());
        let normals = geometry::dual_extremal(&outer)?;
        if support.iter().chain([&rho[n + 1].scaled()]).any(|v| geometry::classify(&normals, v) == Position::Outside) {
            return broken(format!("triangle {} leaves cone(ρ_{}, e2, e3)", n + 1, n + 1));
        }
        if !geometry::interiors_disjoint(&support, &inner)? {
            return broken(format!("triangle {} overlaps cone(ρ_{}, e2, e3)", n + 1, n + 2));
        }
        if area(&support) + area(&inner) != area(&outer) {
            return broken(format!("triangle {} does not fill the gap between ρ_{} and ρ_{}", n + 1, n + 1, n + 2));
        }
    }
    let last = corner(rho.last().expect("nonempty"));
    let chain_area: BigRational = fan
        .cones()
        .iter()
        .filter(|c| matches!(c.region, Region::UpperChain { .. }))
        .map(|c| area(&c.cone.scaled_rays()))
        .sum();
    if chain_area != area(&last) {
        return broken("upper chain does not tile cone(ρ_(m+1), e2, e3)".into());
    }
    Ok(rho)
}

/// The `yz` cones split by the plane through `e1` and `ρ_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YzSplit {
    /// Cone indices inside `cone(e1, e2, ρ_1)`.
    pub e2_side: Vec<usize>,
    /// Cone indices inside `cone(e1, e3, ρ_1)`.
    pub e3_side: Vec<usize>,
}

pub fn yz_split(fan: &Fan) -> Result<YzSplit> {
    let action = fan.action();
    let rho1 = rho_chain(fan)?[0].scaled();
    let e1 = coordinate_ray(action, 0).scaled();
    let halves = [1, 2].map(|axis| {
        let half = [e1, coordinate_ray(action, axis).scaled(), rho1];
        geometry::dual_extremal(&half)
    });
    let [n2, n3] = halves;
    let (n2, n3) = (n2?, n3?);
    let mut split = YzSplit { e2_side: Vec::new(), e3_side: Vec::new() };
    for id in fan.region_cones(|r| matches!(r, Region::Yz { .. })) {
        let rays = fan.cones()[id].cone.scaled_rays();
        let inside = |n: &[Vec3]| rays.iter().all(|v| geometry::classify(n, v) != Position::Outside);
        if inside(&n2) {
            split.e2_side.push(id);
        } else if inside(&n3) {
            split.e3_side.push(id);
        } else {
            return Err(Error::Inconsistent(format!(
                "{} straddles the plane through e1 and ρ_1",
                fan.cones()[id].gset
            )));
        }
    }
    Ok(split)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    WallMatching,
    Coverage,
    Oracle,
    Count,
    Structure,
}

impl Check {
    pub const ALL: [Check; 5] = [Check::WallMatching, Check::Coverage, Check::Oracle, Check::Count, Check::Structure];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub check: Check,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanReport {
    pub seed: u64,
    pub samples: usize,
    pub cones: usize,
    pub predicted: u64,
    pub interior_walls: usize,
    pub boundary_walls: usize,
    /// Whether the oracle comparison ran.
    pub oracle_checked: bool,
    pub failures: Vec<Failure>,
}

impl FanReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn passed(&self, check: Check) -> bool {
        !self.failures.iter().any(|f| f.check == check)
    }
}

/// Checks the fan against the fan axioms, octant coverage, an optional list
/// of G-sets from an independent enumeration, and the predicted count.
/// Failures are collected, never thrown.
pub fn validate_fan(fan: &Fan, oracle: Option<&[GSet]>, samples: usize, seed: u64) -> FanReport {
    let mut report = FanReport {
        seed,
        samples,
        cones: fan.cones().len(),
        predicted: predicted_count(fan.action()),
        interior_walls: 0,
        boundary_walls: 0,
        oracle_checked: oracle.is_some(),
        failures: Vec::new(),
    };
    let mut fail = |check, detail: String| report.failures.push(Failure { check, detail });

    let scaled_rays: Vec<Vec3> = fan.rays().iter().map(NVector::scaled).collect();

    // Every 2-face is either in a coordinate plane and used once, or used
    // twice with the two cones on opposite sides.
    let mut walls: HashMap<(usize, usize), Vec<i8>> = HashMap::new();
    for c in fan.cones() {
        let ids = &c.ray_ids;
        let n = ids.len();
        for i in 0..n {
            let (p, q) = (ids[i], ids[(i + 1) % n]);
            let normal = geometry::cross(&scaled_rays[p], &scaled_rays[q]);
            let side = geometry::dot(&normal, &scaled_rays[ids[(i + 2) % n]]).signum() as i8;
            let key = if p < q { (p, q) } else { (q, p) };
            let side = if p < q { side } else { -side };
            walls.entry(key).or_default().push(side);
        }
    }
    let (mut interior, mut boundary) = (0, 0);
    for ((p, q), sides) in &walls {
        let (u, v) = (scaled_rays[*p], scaled_rays[*q]);
        let coordinate = (0..3).any(|k| u[k] == 0 && v[k] == 0);
        match (coordinate, sides.as_slice()) {
            (true, [_]) => boundary += 1,
            (false, [s, t]) if *s == -*t && *s != 0 => interior += 1,
            _ => fail(
                Check::WallMatching,
                format!("wall {} {} is used with sides {sides:?}", fan.rays()[*p], fan.rays()[*q]),
            ),
        }
    }

    let total: BigRational = fan.cones().iter().map(|c| area(&c.cone.scaled_rays())).sum();
    if total != BigRational::one() {
        fail(Check::Coverage, format!("cross-section areas sum to {total}, not 1"));
    }
    let normals: Vec<Vec<Vec3>> = fan
        .cones()
        .iter()
        .map(|c| geometry::dual_extremal(&c.cone.scaled_rays()).expect("cones are full-dimensional"))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let p: Vec3 = [0; 3].map(|_| rng.gen_range(1..=1_000_000));
        let (mut inside, mut on_wall) = (0, 0);
        for n in &normals {
            match geometry::classify(n, &p) {
                Position::Interior => inside += 1,
                Position::Boundary => on_wall += 1,
                Position::Outside => {}
            }
        }
        if !((inside == 1 && on_wall == 0) || (inside == 0 && on_wall >= 2)) {
            fail(Check::Coverage, format!("{p:?} is interior to {inside} cones and on the boundary of {on_wall}"));
        }
    }

    if let Some(oracle) = oracle {
        let built: HashSet<&GSet> = fan.gsets().collect();
        let expected: HashSet<&GSet> = oracle.iter().collect();
        for g in expected.difference(&built) {
            fail(Check::Oracle, format!("{g} is missing from the fan"));
        }
        for g in built.difference(&expected) {
            fail(Check::Oracle, format!("{g} is not a G-set of the enumeration"));
        }
        if expected.len() != oracle.len() {
            fail(Check::Oracle, "enumeration lists a G-set twice".into());
        }
    }

    if fan.cones().len() as u64 != report.predicted {
        fail(Check::Count, format!("{} cones, {} predicted", fan.cones().len(), report.predicted));
    }
    let implied = fan.sequence().implied_count(fan.action().r());
    if implied != report.predicted {
        fail(Check::Count, format!("triangle and chain sizes add up to {implied}"));
    }

    for c in fan.cones() {
        if let Err(e) = c.cone.check_invariants(&c.gset) {
            fail(Check::Structure, e.to_string());
        }
    }
    if let Err(e) = structure(fan) {
        fail(Check::Structure, e.to_string());
    }

    report.interior_walls = interior;
    report.boundary_walls = boundary;
    report
}

/// The geometric statements about the three families: simplicial triangle
/// supports with the predicted coordinate ray, the telescoping `ρ` chain,
/// and the split of the `yz` cones.
fn structure(fan: &Fan) -> Result<()> {
    let action = fan.action();
    let bad = |msg: String| Err(Error::Inconsistent(msg));
    for (n, t) in fan.triangles().iter().enumerate() {
        let s = t.shape();
        let t_size = (s.j.min(s.k) + 2) as usize;
        if t.len() != t_size * (t_size - 1) / 2 {
            return bad(format!("triangle {} has {} members", n + 1, t.len()));
        }
        let axis = if s.j < s.k { 1 } else { 2 };
        if !t.support().contains(&coordinate_ray(action, axis)) {
            return bad(format!("support of triangle {} misses e{}", n + 1, axis + 1));
        }
    }

    let rho = rho_chain(fan)?;
    let split = yz_split(fan)?;
    let (b, r) = (action.b() as usize, action.r() as usize);
    let mut sizes = [split.e2_side.len(), split.e3_side.len()];
    sizes.sort_unstable();
    if sizes != [b.min(r - b), b.max(r - b)] {
        return bad(format!("yz cones split {sizes:?}, expected {{{b}, {}}}", r - b));
    }
    let e1 = coordinate_ray(action, 0).scaled();
    for (ids, axis) in [(&split.e2_side, 1), (&split.e3_side, 2)] {
        let half = [e1, coordinate_ray(action, axis).scaled(), rho[0].scaled()];
        let sum: BigRational = ids.iter().map(|&i| area(&fan.cones()[i].cone.scaled_rays())).sum();
        if sum != area(&half) {
            return bad(format!("yz cones on the e{} side do not tile cone(e1, e{}, ρ_1)", axis + 1, axis + 1));
        }
    }

    let base = &fan.sequence().primitive()[0];
    let hits: Vec<i64> = (0..action.r())
        .filter(
            |&l| matches!(transform(&gamma_yz(action, l).expect("l in range"), Direction::Upper), Ok(g) if &g == base),
        )
        .collect();
    if hits.len() != 2 || hits[1] != hits[0] + 1 {
        return bad(format!("T_U(Γ_yz,l) = Γ_1 for l in {hits:?}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::ConeKind;
    use crate::gset::enumerate_all;
    use crate::lattice::ExponentTriple;

    fn act(r: i64, a: i64) -> GroupAction {
        GroupAction::new(r, a).unwrap()
    }

    fn span(action: &GroupAction, s: &[(i64, i64, i64)]) -> GSet {
        let s: Vec<_> = s.iter().map(|&(x, y, z)| ExponentTriple::new(x, y, z)).collect();
        GSet::from_span(action, &s).unwrap()
    }

    fn nv(g: &GroupAction, w: Vec3) -> NVector {
        NVector::new(g, w).unwrap()
    }

    #[test]
    fn triangle_r5() {
        let g = act(5, 2);
        let t = triangle(&span(&g, &[(1, 0, 0), (0, 2, 0), (0, 0, 1)])).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.get(1, 0), Some(&span(&g, &[(0, 2, 0), (1, 1, 0)])));
        assert_eq!(t.get(0, 1), Some(&span(&g, &[(0, 1, 0), (1, 0, 1)])));
        let mut support = t.support().to_vec();
        support.sort();
        assert_eq!(support, vec![nv(&g, [0, 0, 5]), nv(&g, [2, 4, 1]), nv(&g, [6, 2, 3])]);
    }

    #[test]
    fn triangle_sizes_r14() {
        let fan = build_fan(&act(14, 5)).unwrap();
        let sizes: Vec<usize> = fan.triangles().iter().map(Triangle::len).collect();
        assert_eq!(sizes, vec![6, 6, 6, 3]);
        assert_eq!(fan.cones().len(), 37);
        let chain = fan.region_cones(|r| matches!(r, Region::UpperChain { .. }));
        assert_eq!(chain.len(), 2);
    }

    #[test]
    fn fan_r5() {
        let g = act(5, 2);
        let fan = build_fan(&g).unwrap();
        assert_eq!(fan.cones().len(), 10);
        let expected: Vec<NVector> =
            [[0, 0, 5], [0, 5, 0], [1, 2, 3], [2, 4, 1], [3, 1, 4], [4, 3, 2], [5, 0, 0], [6, 2, 3]]
                .map(|w| nv(&g, w))
                .to_vec();
        assert_eq!(fan.rays(), expected.as_slice());
        let quadrics: Vec<&FanCone> = fan.cones().iter().filter(|c| c.cone.kind() == ConeKind::Quadric).collect();
        assert_eq!(quadrics.len(), 1);
        assert_eq!(quadrics[0].gset, span(&g, &[(1, 0, 0), (0, 2, 0), (0, 0, 1)]));
        assert_eq!(fan.region_cones(|r| matches!(r, Region::Yz { .. })).len(), 5);
        assert_eq!(fan.region_cones(|r| matches!(r, Region::Triangle { n: 1, .. })).len(), 3);
        let chain: Vec<&GSet> = fan
            .region_cones(|r| matches!(r, Region::UpperChain { .. }))
            .iter()
            .map(|&i| &fan.cones()[i].gset)
            .collect();
        assert_eq!(chain, vec![&span(&g, &[(2, 0, 0), (1, 0, 1)]), &gamma_x(&g)]);
    }

    #[test]
    fn rho_r5() {
        let g = act(5, 2);
        let fan = build_fan(&g).unwrap();
        assert_eq!(rho_chain(&fan).unwrap(), vec![nv(&g, [6, 2, 3]), nv(&g, [2, 4, 1])]);
        let split = yz_split(&fan).unwrap();
        assert_eq!((split.e2_side.len(), split.e3_side.len()), (3, 2));
        let l_of = |i: &usize| match fan.cones()[*i].region {
            Region::Yz { l } => l,
            _ => unreachable!(),
        };
        assert_eq!(split.e3_side.iter().map(l_of).collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn validation_passes_with_oracle() {
        for (r, a) in [(5, 2), (14, 5), (7, 2), (11, 4)] {
            let g = act(r, a);
            let fan = build_fan(&g).unwrap();
            let oracle = enumerate_all(&g).unwrap();
            let report = validate_fan(&fan, Some(&oracle), 300, DEFAULT_SEED);
            assert!(report.ok(), "({r},{a}): {:?}", report.failures);
        }
    }

    #[test]
    fn validation_reports_a_missing_gset() {
        let g = act(5, 2);
        let fan = build_fan(&g).unwrap();
        let mut oracle = enumerate_all(&g).unwrap();
        oracle.retain(|s| *s != gamma_x(&g));
        let report = validate_fan(&fan, Some(&oracle), 10, 1);
        assert!(!report.passed(Check::Oracle));
        assert!(report.passed(Check::Coverage));
    }

    #[test]
    fn degenerate_action_is_rejected() {
        let g = GroupAction::exploratory(7, 1).unwrap();
        assert!(matches!(build_fan(&g), Err(Error::DegenerateAction { .. })));
    }
}
