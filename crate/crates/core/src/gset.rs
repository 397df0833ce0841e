//! G-sets: divisor-closed sets of `r` monomials containing `1` on which the
//! weight map is a bijection onto `Z/r`.
//!
//! Since `wt(yz) = wt(1)`, no member is divisible by `yz`, so a G-set is two
//! staircases sharing the `x`-axis. It is stored as the pair of column
//! heights over each `x`-degree.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::error::{Error, Result};
use crate::lattice::{ExponentTriple, GroupAction};

/// The first axiom a candidate monomial set fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GSetViolation {
    #[error("{0} is not an ordinary monomial")]
    NotOrdinary(ExponentTriple),
    #[error("the constant monomial 1 is missing")]
    MissingConstant,
    #[error("{member} is present but its divisor {missing} is not")]
    NotDivisorClosed { member: ExponentTriple, missing: ExponentTriple },
    #[error("{0} is divisible by yz")]
    ContainsYz(ExponentTriple),
    #[error("{first} and {second} share weight {weight}")]
    WeightCollision { weight: i64, first: ExponentTriple, second: ExponentTriple },
    #[error("expected {expected} monomials, found {found}")]
    WrongCardinality { expected: usize, found: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ValleyKind {
    Y,
    Z,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Valley {
    pub kind: ValleyKind,
    pub position: ExponentTriple,
}

#[derive(Clone)]
pub struct GSet {
    action: GroupAction,
    /// `y_heights[p]` is the largest `q` with `x^p y^q` in the set, for `p <= i`.
    y_heights: Vec<i64>,
    z_heights: Vec<i64>,
    members: Vec<ExponentTriple>,
    by_weight: Vec<ExponentTriple>,
}

impl GSet {
    /// Checks every G-set axiom and returns the structured set, or the first
    /// violated axiom.
    pub fn validate(action: &GroupAction, monomials: &[ExponentTriple]) -> Result<GSet, GSetViolation> {
        let set: BTreeSet<ExponentTriple> = monomials.iter().copied().collect();
        if let Some(m) = set.iter().find(|m| !m.is_ordinary()) {
            return Err(GSetViolation::NotOrdinary(*m));
        }
        if !set.contains(&ExponentTriple::ONE) {
            return Err(GSetViolation::MissingConstant);
        }
        for &m in &set {
            for t in [ExponentTriple::X, ExponentTriple::Y, ExponentTriple::Z] {
                let d = m - t;
                if d.is_ordinary() && !set.contains(&d) {
                    return Err(GSetViolation::NotDivisorClosed { member: m, missing: d });
                }
            }
        }
        if let Some(m) = set.iter().find(|m| m.y > 0 && m.z > 0) {
            return Err(GSetViolation::ContainsYz(*m));
        }
        let r = action.r() as usize;
        let mut seen: Vec<Option<ExponentTriple>> = vec![None; r];
        for &m in &set {
            let w = action.weight(m);
            if let Some(first) = seen[w as usize] {
                return Err(GSetViolation::WeightCollision { weight: w, first, second: m });
            }
            seen[w as usize] = Some(m);
        }
        if set.len() != r {
            return Err(GSetViolation::WrongCardinality { expected: r, found: set.len() });
        }

        let i = set.iter().filter(|m| m.y == 0 && m.z == 0).map(|m| m.x).max().unwrap_or(0);
        let mut y_heights = vec![0; i as usize + 1];
        let mut z_heights = vec![0; i as usize + 1];
        for m in &set {
            let p = m.x as usize;
            y_heights[p] = y_heights[p].max(m.y);
            z_heights[p] = z_heights[p].max(m.z);
        }
        Ok(Self::from_heights(*action, y_heights, z_heights))
    }

    /// The set of all divisors of `spanners`, if it is a G-set.
    pub fn from_span(action: &GroupAction, spanners: &[ExponentTriple]) -> Result<GSet> {
        let mut divisors = BTreeSet::new();
        for &s in spanners {
            if !s.is_ordinary() {
                return Err(GSetViolation::NotOrdinary(s).into());
            }
            if s.y > 0 && s.z > 0 {
                return Err(Error::MixedYz(s));
            }
            for x in 0..=s.x {
                for y in 0..=s.y {
                    for z in 0..=s.z {
                        divisors.insert(ExponentTriple::new(x, y, z));
                    }
                }
            }
        }
        let list: Vec<_> = divisors.into_iter().collect();
        Ok(Self::validate(action, &list)?)
    }

    /// Builds from column heights that are already known to describe a G-set.
    fn from_heights(action: GroupAction, y_heights: Vec<i64>, z_heights: Vec<i64>) -> GSet {
        let mut members = Vec::with_capacity(action.r() as usize);
        for (p, (&yh, &zh)) in y_heights.iter().zip(&z_heights).enumerate() {
            let p = p as i64;
            members.extend((0..=yh).map(|q| ExponentTriple::new(p, q, 0)));
            members.extend((1..=zh).map(|s| ExponentTriple::new(p, 0, s)));
        }
        members.sort();
        let mut by_weight = vec![ExponentTriple::ONE; action.r() as usize];
        for &m in &members {
            by_weight[action.weight(m) as usize] = m;
        }
        debug_assert_eq!(members.len(), action.r() as usize);
        GSet { action, y_heights, z_heights, members, by_weight }
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    /// Members in increasing lexicographic order of exponents.
    pub fn members(&self) -> &[ExponentTriple] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn y_heights(&self) -> &[i64] {
        &self.y_heights
    }

    pub fn z_heights(&self) -> &[i64] {
        &self.z_heights
    }

    pub fn contains(&self, m: ExponentTriple) -> bool {
        if !m.is_ordinary() || (m.y > 0 && m.z > 0) {
            return false;
        }
        match self.y_heights.get(m.x as usize) {
            None => false,
            Some(&yh) => m.y <= yh && m.z <= self.z_heights[m.x as usize],
        }
    }

    /// The largest `(i, j, k)` with `x^i`, `y^j`, `z^k` in the set.
    pub fn pure_power_exponents(&self) -> (i64, i64, i64) {
        (self.y_heights.len() as i64 - 1, self.y_heights[0], self.z_heights[0])
    }

    /// All y- and z-valleys, y-valleys first.
    pub fn valleys(&self) -> Vec<Valley> {
        let mut out = Vec::new();
        for (kind, heights) in [(ValleyKind::Y, &self.y_heights), (ValleyKind::Z, &self.z_heights)] {
            for m in 0..heights.len().saturating_sub(1) {
                if heights[m] > heights[m + 1] {
                    let h = heights[m + 1];
                    let position = match kind {
                        ValleyKind::Y => ExponentTriple::new(m as i64, h, 0),
                        ValleyKind::Z => ExponentTriple::new(m as i64, 0, h),
                    };
                    out.push(Valley { kind, position });
                }
            }
        }
        out
    }

    pub fn valley_count(&self) -> usize {
        self.valleys().len()
    }

    pub fn y_valley(&self) -> Option<ExponentTriple> {
        self.valleys().into_iter().find(|v| v.kind == ValleyKind::Y).map(|v| v.position)
    }

    pub fn z_valley(&self) -> Option<ExponentTriple> {
        self.valleys().into_iter().find(|v| v.kind == ValleyKind::Z).map(|v| v.position)
    }

    /// Both valleys exist and are pure powers of `x`.
    pub fn is_primitive(&self) -> bool {
        matches!(
            (self.y_valley(), self.z_valley()),
            (Some(v), Some(w)) if v.y == 0 && w.z == 0
        )
    }

    /// `wt_Γ(v)`: the member with the same weight as `v`.
    pub fn transfer(&self, v: ExponentTriple) -> ExponentTriple {
        self.by_weight[self.action.weight(v) as usize]
    }

    /// `s_Γ(v) = v / wt_Γ(v)`, an invariant Laurent monomial.
    pub fn s_value(&self, v: ExponentTriple) -> ExponentTriple {
        v - self.transfer(v)
    }

    /// The members maximal under divisibility; the set is their span.
    /// Ordered as pure `x`-power, then `y`-type, then `z`-type, each by
    /// decreasing `x`-degree.
    pub fn spanners(&self) -> Vec<ExponentTriple> {
        let mut out: Vec<ExponentTriple> = self
            .members
            .iter()
            .copied()
            .filter(|&m| {
                [ExponentTriple::X, ExponentTriple::Y, ExponentTriple::Z].iter().all(|&t| !self.contains(m + t))
            })
            .collect();
        let class = |m: &ExponentTriple| match (m.y > 0, m.z > 0) {
            (false, false) => 0,
            (true, _) => 1,
            (_, true) => 2,
        };
        out.sort_by(|a, b| class(a).cmp(&class(b)).then(b.x.cmp(&a.x)));
        out
    }
}

impl PartialEq for GSet {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action && self.y_heights == other.y_heights && self.z_heights == other.z_heights
    }
}

impl Eq for GSet {}

impl Hash for GSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.action.hash(state);
        self.y_heights.hash(state);
        self.z_heights.hash(state);
    }
}

impl PartialOrd for GSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// By action, then by sorted member list.
impl Ord for GSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.action.cmp(&other.action).then_with(|| self.members.cmp(&other.members))
    }
}

impl fmt::Display for GSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("span(")?;
        for (n, s) in self.spanners().iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for GSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GSet[{}]{}", self.action, self)
    }
}

/// `{1, x, ..., x^(r-1)}`.
pub fn gamma_x(action: &GroupAction) -> GSet {
    let n = action.r() as usize;
    GSet::from_heights(*action, vec![0; n], vec![0; n])
}

/// `{y^(r-l-1), ..., y, 1, z, ..., z^l}`.
pub fn gamma_yz(action: &GroupAction, l: i64) -> Result<GSet> {
    if !(0..action.r()).contains(&l) {
        return Err(Error::Inconsistent(format!("gamma_yz index {l} outside 0..{}", action.r())));
    }
    Ok(GSet::from_heights(*action, vec![action.r() - l - 1], vec![l]))
}

pub const DEFAULT_ENUMERATION_BOUND: i64 = 60;

/// Every G-set of the action, by exhaustive search with the default bound on `r`.
pub fn enumerate_all(action: &GroupAction) -> Result<Vec<GSet>> {
    enumerate_all_bounded(action, DEFAULT_ENUMERATION_BOUND)
}

/// Every G-set exactly once, in lexicographic order of the interleaved
/// column heights `(y_0, z_0, y_1, z_1, ...)`.
///
/// Columns are placed left to right; within a column the `y`-cells are added
/// bottom-up, then the `z`-cells, and a branch is cut at the first weight
/// that repeats. A taller column always contains the colliding cell of a
/// shorter one, so the cut discards no G-set.
pub fn enumerate_all_bounded(action: &GroupAction, bound: i64) -> Result<Vec<GSet>> {
    if action.r() > bound {
        return Err(Error::BoundExceeded { r: action.r(), bound });
    }
    let mut search = Search {
        action: *action,
        used: vec![false; action.r() as usize],
        count: 0,
        y_cols: Vec::new(),
        z_cols: Vec::new(),
        found: Vec::new(),
    };
    search.column(0, action.r(), action.r());
    Ok(search.found)
}

struct Search {
    action: GroupAction,
    used: Vec<bool>,
    count: i64,
    y_cols: Vec<i64>,
    z_cols: Vec<i64>,
    found: Vec<GSet>,
}

impl Search {
    fn claim(&mut self, m: ExponentTriple) -> bool {
        let w = self.action.weight(m) as usize;
        if self.used[w] {
            return false;
        }
        self.used[w] = true;
        self.count += 1;
        true
    }

    fn release(&mut self, m: ExponentTriple) {
        self.used[self.action.weight(m) as usize] = false;
        self.count -= 1;
    }

    /// Opens column `p` with heights bounded by the previous column.
    fn column(&mut self, p: i64, max_y: i64, max_z: i64) {
        if self.count == self.action.r() {
            self.found.push(GSet::from_heights(self.action, self.y_cols.clone(), self.z_cols.clone()));
            return;
        }
        if max_y < 0 || !self.claim(ExponentTriple::new(p, 0, 0)) {
            return;
        }
        let mut y = 0;
        loop {
            self.z_cells(p, y, max_z);
            if y + 1 > max_y || self.count == self.action.r() || !self.claim(ExponentTriple::new(p, y + 1, 0)) {
                break;
            }
            y += 1;
        }
        for q in (0..=y).rev() {
            self.release(ExponentTriple::new(p, q, 0));
        }
    }

    fn z_cells(&mut self, p: i64, y: i64, max_z: i64) {
        let mut z = 0;
        loop {
            self.y_cols.push(y);
            self.z_cols.push(z);
            // the next column may be empty only if the set is complete
            self.column(p + 1, y, z);
            self.y_cols.pop();
            self.z_cols.pop();
            if z + 1 > max_z || self.count == self.action.r() || !self.claim(ExponentTriple::new(p, 0, z + 1)) {
                break;
            }
            z += 1;
        }
        for s in (1..=z).rev() {
            self.release(ExponentTriple::new(p, 0, s));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn span_constructs_members() {
        let g = act(5, 2);
        let s = span(&g, &[(1, 0, 0), (0, 2, 0), (0, 0, 1)]);
        assert_eq!(s.members(), &[m(0, 0, 0), m(0, 0, 1), m(0, 1, 0), m(0, 2, 0), m(1, 0, 0)]);
        assert_eq!(s.to_string(), "span(x, y^2, z)");
        let gamma1 = span(&act(14, 5), &[(1, 0, 0), (0, 2, 0), (0, 0, 10)]);
        assert_eq!(gamma1.len(), 14);
    }

    #[test]
    fn span_errors() {
        let g = act(5, 2);
        assert!(matches!(
            GSet::from_span(&g, &[m(2, 0, 0)]),
            Err(Error::NotAGSet(GSetViolation::WrongCardinality { expected: 5, found: 3 }))
        ));
        assert!(matches!(GSet::from_span(&g, &[m(0, 1, 1)]), Err(Error::MixedYz(_))));
    }

    #[test]
    fn validation_reports_first_violation() {
        let g = act(5, 2);
        assert!(GSet::validate(&g, &[m(0, 0, 0), m(1, 0, 0), m(0, 1, 0), m(0, 2, 0), m(0, 0, 1)]).is_ok());
        assert_eq!(
            GSet::validate(&g, &[m(0, 0, 0), m(1, 0, 0), m(0, 1, 0), m(1, 1, 0), m(0, 0, 1)]).unwrap_err(),
            GSetViolation::WeightCollision { weight: 3, first: m(0, 0, 1), second: m(1, 1, 0) }
        );
        assert_eq!(GSet::validate(&g, &[m(1, 0, 0)]).unwrap_err(), GSetViolation::MissingConstant);
        assert!(matches!(
            GSet::validate(&g, &[m(0, 0, 0), m(2, 0, 0)]).unwrap_err(),
            GSetViolation::NotDivisorClosed { .. }
        ));
    }

    #[test]
    fn pure_powers() {
        let g = act(5, 2);
        assert_eq!(gamma_x(&g).pure_power_exponents(), (4, 0, 0));
        assert_eq!(span(&g, &[(1, 0, 0), (0, 2, 0), (0, 0, 1)]).pure_power_exponents(), (1, 2, 1));
        let gamma1 = span(&act(14, 5), &[(1, 0, 0), (0, 2, 0), (0, 0, 10)]);
        assert_eq!(gamma1.pure_power_exponents(), (1, 2, 10));
    }

    #[test]
    fn valley_positions() {
        let g = act(5, 2);
        assert!(gamma_x(&g).valleys().is_empty());
        let two = span(&g, &[(1, 0, 0), (0, 2, 0), (0, 0, 1)]);
        assert_eq!(
            two.valleys(),
            vec![
                Valley { kind: ValleyKind::Y, position: ExponentTriple::ONE },
                Valley { kind: ValleyKind::Z, position: ExponentTriple::ONE },
            ]
        );
        assert!(two.is_primitive());
        let one = span(&g, &[(2, 0, 0), (1, 0, 1)]);
        assert_eq!(one.valleys(), vec![Valley { kind: ValleyKind::Z, position: m(1, 0, 0) }]);
    }

    #[test]
    fn transfer_and_s_values() {
        let g = act(5, 2);
        let gx = gamma_x(&g);
        assert_eq!(gx.transfer(m(3, 0, 0)), m(3, 0, 0));
        assert_eq!(gx.transfer(ExponentTriple::Y), m(2, 0, 0));
        assert_eq!(gx.s_value(ExponentTriple::Y), m(-2, 1, 0));
        assert_eq!(gx.s_value(m(2, 0, 0)), ExponentTriple::ONE);
        let two = span(&g, &[(1, 0, 0), (0, 2, 0), (0, 0, 1)]);
        assert_eq!(two.transfer(m(1, 0, 1)), m(0, 2, 0));
        assert_eq!(two.s_value(m(1, 0, 1)), m(1, -2, 1));
    }

    #[test]
    fn no_valley_families() {
        let g = act(5, 2);
        assert_eq!(gamma_x(&g).members(), &[m(0, 0, 0), m(1, 0, 0), m(2, 0, 0), m(3, 0, 0), m(4, 0, 0)]);
        let yz2 = gamma_yz(&g, 2).unwrap();
        assert_eq!(yz2.members(), &[m(0, 0, 0), m(0, 0, 1), m(0, 0, 2), m(0, 1, 0), m(0, 2, 0)]);
        let yz0 = gamma_yz(&g, 0).unwrap();
        assert_eq!(yz0.pure_power_exponents(), (0, 4, 0));
        assert!(gamma_yz(&g, 5).is_err());
        // both families satisfy the axioms
        for l in 0..5 {
            let s = gamma_yz(&g, l).unwrap();
            assert_eq!(GSet::validate(&g, s.members()).unwrap(), s);
        }
        assert_eq!(GSet::validate(&g, gamma_x(&g).members()).unwrap(), gamma_x(&g));
    }

    #[test]
    fn enumeration_r5() {
        let g = act(5, 2);
        let all = enumerate_all(&g).unwrap();
        assert_eq!(all.len(), 10);
        let mut expected = vec![
            gamma_x(&g),
            span(&g, &[(1, 0, 0), (0, 2, 0), (0, 0, 1)]),
            span(&g, &[(0, 1, 0), (1, 0, 1)]),
            span(&g, &[(0, 2, 0), (1, 1, 0)]),
            span(&g, &[(2, 0, 0), (1, 0, 1)]),
        ];
        expected.extend((0..5).map(|l| gamma_yz(&g, l).unwrap()));
        let mut got = all.clone();
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn enumeration_r14() {
        assert_eq!(enumerate_all(&act(14, 5)).unwrap().len(), 37);
    }

    #[test]
    fn enumeration_bound() {
        let g = act(61, 2);
        assert!(matches!(enumerate_all(&g), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn enumeration_runs_on_exploratory_action() {
        // a = 1 is outside the structured pipeline but still enumerable
        let g = GroupAction::exploratory(5, 1).unwrap();
        let all = enumerate_all(&g).unwrap();
        assert!(all.contains(&gamma_x(&g)));
    }
}
