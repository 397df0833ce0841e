//! A fan flattened into plain data in the caller's coordinates: the single
//! source for the text, JSON and SVG outputs.
//!
//! Internally the action is canonicalized to `a < r - a` by exchanging `y`
//! and `z`; everything here is mapped back, so `a`, `b`, exponents, rays and
//! region labels refer to the action as the user wrote it.

use ghilb_core::fan::{rho_chain, Fan, FanReport, Region};
use ghilb_core::{ConeKind, ExponentTriple, GSet, GroupAction};
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanDocument {
    pub schema: u32,
    pub r: i64,
    pub a: i64,
    pub b: i64,
    /// Whether the computation ran on the mirrored action `1/r(1, r-a, a)`.
    pub swapped: bool,
    pub count: usize,
    /// `r`-scaled, lexicographically sorted.
    pub rays: Vec<[i64; 3]>,
    pub cones: Vec<ConeEntry>,
    pub gsets: Vec<GSetEntry>,
    pub rho: Vec<[i64; 3]>,
    pub euclid: EuclidEntry,
    pub triangles: Vec<TriangleEntry>,
    pub validation: ValidationEntry,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeEntry {
    pub gset: usize,
    /// Indices into `rays`, in cyclic order.
    pub rays: Vec<usize>,
    pub kind: String,
    pub region: RegionEntry,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum RegionEntry {
    Yz { l: i64 },
    Triangle { n: usize, up_right: i64, up_left: i64 },
    Upper { step: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GSetEntry {
    pub id: usize,
    pub span: String,
    /// Sorted exponent triples.
    pub monomials: Vec<[i64; 3]>,
    pub valleys: usize,
    /// Exponents of the longest pure powers of `x`, `y`, `z` in the set.
    pub ijk: [i64; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EuclidEntry {
    pub p: Vec<u64>,
    pub q: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleEntry {
    pub n: usize,
    /// G-set id of the primitive base.
    pub base: usize,
    pub support: Vec<usize>,
    /// Cone ids.
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationEntry {
    pub seed: u64,
    pub samples: usize,
    pub ok: bool,
    pub oracle: bool,
    pub interior_walls: usize,
    pub boundary_walls: usize,
    pub failures: Vec<String>,
}

/// Renders the spanners of `g` in the caller's coordinates.
pub fn user_span(g: &GSet) -> String {
    let action = g.action();
    let parts: Vec<String> = g.spanners().iter().map(|s| action.to_original_exponent(*s).to_string()).collect();
    format!("span({})", parts.join(", "))
}

fn user_region(action: &GroupAction, region: Region) -> RegionEntry {
    let swapped = action.swapped();
    match region {
        Region::Yz { l } if swapped => RegionEntry::Yz { l: action.r() - 1 - l },
        Region::Yz { l } => RegionEntry::Yz { l },
        Region::Triangle { n, up_right, up_left } if swapped => {
            RegionEntry::Triangle { n, up_right: up_left, up_left: up_right }
        }
        Region::Triangle { n, up_right, up_left } => RegionEntry::Triangle { n, up_right, up_left },
        Region::UpperChain { step } => RegionEntry::Upper { step },
    }
}

impl FanDocument {
    pub fn new(fan: &Fan, report: &FanReport) -> Self {
        let action = *fan.action();
        let user_ray = |w: [i64; 3]| action.to_original_n(w);

        let mut rays: Vec<[i64; 3]> = fan.rays().iter().map(|v| user_ray(v.scaled())).collect();
        rays.sort();
        let ray_id = |w: [i64; 3]| rays.binary_search(&user_ray(w)).expect("ray in table");

        let cones = fan
            .cones()
            .iter()
            .enumerate()
            .map(|(id, c)| ConeEntry {
                gset: id,
                rays: c.cone.rays().iter().map(|v| ray_id(v.scaled())).collect(),
                kind: match c.cone.kind() {
                    ConeKind::Smooth => "smooth",
                    ConeKind::Quadric => "quadric",
                }
                .to_string(),
                region: user_region(&action, c.region),
            })
            .collect();

        let gsets = fan
            .cones()
            .iter()
            .enumerate()
            .map(|(id, c)| {
                let g = &c.gset;
                let mut monomials: Vec<[i64; 3]> =
                    g.members().iter().map(|m| action.to_original_exponent(*m).to_array()).collect();
                monomials.sort();
                let (i, j, k) = g.pure_power_exponents();
                let ijk = action.to_original_exponent(ExponentTriple::new(i, j, k)).to_array();
                GSetEntry { id, span: user_span(g), monomials, valleys: g.valley_count(), ijk }
            })
            .collect();

        let rho = rho_chain(fan).map(|v| v.iter().map(|v| user_ray(v.scaled())).collect()).unwrap_or_default();

        let triangles = fan
            .triangles()
            .iter()
            .enumerate()
            .map(|(k, t)| {
                let n = k + 1;
                let members = fan.region_cones(|r| matches!(r, Region::Triangle { n: m, .. } if *m == n));
                let base =
                    members.iter().copied().find(|&id| fan.cones()[id].gset == *t.base()).expect("base is a member");
                let mut support: Vec<usize> = t.support().iter().map(|v| ray_id(v.scaled())).collect();
                support.sort();
                TriangleEntry { n, base, support, members }
            })
            .collect();

        let failures = report.failures.iter().map(|f| format!("{:?}: {}", f.check, f.detail)).collect();

        FanDocument {
            schema: SCHEMA,
            r: action.r(),
            a: action.original_a(),
            b: action.original_b(),
            swapped: action.swapped(),
            count: fan.cones().len(),
            rays,
            cones,
            gsets,
            rho,
            euclid: EuclidEntry { p: fan.trace().p().to_vec(), q: fan.trace().q().to_vec() },
            triangles,
            validation: ValidationEntry {
                seed: report.seed,
                samples: report.samples,
                ok: report.ok(),
                oracle: report.oracle_checked,
                interior_walls: report.interior_walls,
                boundary_walls: report.boundary_walls,
                failures,
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let r = self.r;
        let fmt_ray = |w: &[i64; 3]| format!("1/{r}({},{},{})", w[0], w[1], w[2]);
        let _ = writeln!(out, "fan of 1/{r}(1,{},{}), b = {}", self.a, r - self.a, self.b);
        let _ = writeln!(out, "{} cones over {} rays", self.count, self.rays.len());
        let _ = writeln!(out, "rays:");
        for (id, w) in self.rays.iter().enumerate() {
            let _ = writeln!(out, "  {id:>3}  {}", fmt_ray(w));
        }
        let _ = writeln!(out, "cones:");
        for c in &self.cones {
            let region = match c.region {
                RegionEntry::Yz { l } => format!("yz[{l}]"),
                RegionEntry::Triangle { n, up_right, up_left } => format!("triangle[{n}]({up_right},{up_left})"),
                RegionEntry::Upper { step } => format!("upper[{step}]"),
            };
            let ids: Vec<String> = c.rays.iter().map(usize::to_string).collect();
            let _ = writeln!(
                out,
                "  {:>3}  {:<18} {:<8} {:<28} rays {}",
                c.gset,
                region,
                c.kind,
                self.gsets[c.gset].span,
                ids.join(" ")
            );
        }
        let rho: Vec<String> = self.rho.iter().map(fmt_ray).collect();
        let _ = writeln!(out, "rho: {}", rho.join(" "));
        let v = &self.validation;
        let status = if v.ok { "ok".to_string() } else { format!("{} failures", v.failures.len()) };
        let _ = writeln!(
            out,
            "validation: {status} (seed {}, {} samples, {} interior walls, oracle {})",
            v.seed,
            v.samples,
            v.interior_walls,
            if v.oracle { "on" } else { "off" }
        );
        for f in &v.failures {
            let _ = writeln!(out, "  {f}");
        }
        out
    }
}
