//! The Euclidean algorithm behind the fan: `b = a^-1 mod r`, the division
//! chain of `(r - b, b)`, and the sequence of primitive G-sets whose
//! exponents run through that chain.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::gigsaw::{iterate, transform, Direction, TwoValleyShape};
use crate::gset::GSet;
use crate::lattice::{ExponentTriple, GroupAction};

/// The unique `b` in `1..r` with `a b ≡ 1 (mod r)`.
pub fn modular_inverse(a: i64, r: i64) -> Result<i64> {
    if r < 2 {
        return Err(Error::NotCoprime { a, r });
    }
    let e = a.rem_euclid(r).extended_gcd(&r);
    if e.gcd != 1 {
        return Err(Error::NotCoprime { a, r });
    }
    Ok(e.x.rem_euclid(r))
}

/// The division chain `p_i = q_i p_(i+1) + p_(i+2)` ending at
/// `p_(n+1) = gcd(p_1, p_2)`.
///
/// When `p_1 < p_2` the chain starts with the quotient `0`, so that
/// `p_3 = p_1`; both sum identities still hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidTrace {
    p: Vec<u64>,
    q: Vec<u64>,
}

pub fn euclid_trace(p1: u64, p2: u64) -> EuclidTrace {
    assert!(p1 > 0 && p2 > 0, "euclid_trace needs positive inputs");
    let mut p = vec![p1, p2];
    let mut q = Vec::new();
    loop {
        let (a, b) = (p[p.len() - 2], p[p.len() - 1]);
        q.push(a / b);
        if a % b == 0 {
            break;
        }
        p.push(a % b);
    }
    EuclidTrace { p, q }
}

impl EuclidTrace {
    /// `p_1, ..., p_(n+1)`; the trailing zero `p_(n+2)` is implicit.
    pub fn p(&self) -> &[u64] {
        &self.p
    }

    /// `q_1, ..., q_n`.
    pub fn q(&self) -> &[u64] {
        &self.q
    }

    pub fn n(&self) -> usize {
        self.q.len()
    }

    pub fn gcd(&self) -> u64 {
        *self.p.last().expect("nonempty")
    }

    /// `(Σ q_l p_(l+1), p_1 + p_2 - p_(n+1))`.
    pub fn linear_identity(&self) -> (u128, u128) {
        let lhs = self.q.iter().zip(&self.p[1..]).map(|(&q, &p)| q as u128 * p as u128).sum();
        (lhs, self.p[0] as u128 + self.p[1] as u128 - self.gcd() as u128)
    }

    /// `(Σ q_l p_(l+1)^2, p_1 p_2)`.
    pub fn quadratic_identity(&self) -> (u128, u128) {
        let lhs = self.q.iter().zip(&self.p[1..]).map(|(&q, &p)| q as u128 * (p as u128).pow(2)).sum();
        (lhs, self.p[0] as u128 * self.p[1] as u128)
    }

    pub fn identities_hold(&self) -> bool {
        let (a, b) = self.linear_identity();
        let (c, d) = self.quadratic_identity();
        a == b && c == d
    }
}

/// `span(x, y^(b-1), z^(r-b-1))`, the first primitive G-set.
pub fn gamma_1(action: &GroupAction) -> Result<GSet> {
    if action.a() == 1 {
        return Err(Error::DegenerateAction { r: action.r(), a: action.original_a() });
    }
    let b = action.b();
    GSet::from_span(
        action,
        &[ExponentTriple::X, ExponentTriple::new(0, b - 1, 0), ExponentTriple::new(0, 0, action.r() - b - 1)],
    )
}

/// Exponents of a sequence member: `x^i` is the longest pure power, the
/// `y`-tower `x^i_y y^j` and `z`-tower `x^i_z z^k`. The valley positions are
/// `None` when the member lacks that valley.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceIndices {
    pub i: i64,
    pub i_y: Option<i64>,
    pub j: i64,
    pub i_z: Option<i64>,
    pub k: i64,
}

impl SequenceIndices {
    fn of(g: &GSet) -> Self {
        let (i, j, k) = g.pure_power_exponents();
        SequenceIndices { i, i_y: g.y_valley().map(|v| v.x), j, i_z: g.z_valley().map(|w| w.x), k }
    }
}

/// `Γ_1, ..., Γ_(m+1)`: all primitive except the last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveSequence {
    members: Vec<GSet>,
    indices: Vec<SequenceIndices>,
}

impl PrimitiveSequence {
    pub fn members(&self) -> &[GSet] {
        &self.members
    }

    pub fn indices(&self) -> &[SequenceIndices] {
        &self.indices
    }

    /// Number of primitive members.
    pub fn m(&self) -> usize {
        self.members.len() - 1
    }

    pub fn primitive(&self) -> &[GSet] {
        &self.members[..self.m()]
    }

    /// `Γ_(m+1)`, the first non-primitive member.
    pub fn last(&self) -> &GSet {
        self.members.last().expect("nonempty")
    }

    /// `r + max{j_(m+1)+1, k_(m+1)+1} + Σ_l C(min{j_l+1, k_l+1} + 1, 2)`:
    /// the `Γ_yz,l`, the upper chain, and the triangles.
    pub fn implied_count(&self, r: i64) -> u64 {
        let last = self.indices[self.m()];
        let chain = (last.j + 1).max(last.k + 1) as u64;
        let triangles: u64 = self.indices[..self.m()]
            .iter()
            .map(|ix| {
                let t = (ix.j + 1).min(ix.k + 1) as u64;
                (t + 1) * t / 2
            })
            .sum();
        r as u64 + chain + triangles
    }
}

/// Iterates `Γ_(n+1) = T_U(T_UR^(j_n)(Γ_n))` if `j_n < k_n`, else
/// `T_U(T_UL^(k_n)(Γ_n))`, until the result is not primitive. Every step is
/// checked against its closed-form span.
pub fn primitive_sequence(action: &GroupAction) -> Result<PrimitiveSequence> {
    let mut members = vec![gamma_1(action)?];
    while members.last().expect("nonempty").is_primitive() {
        if members.len() > action.r() as usize {
            return Err(Error::Inconsistent("primitive sequence does not terminate".into()));
        }
        let cur = members.last().expect("nonempty");
        let s = TwoValleyShape::of(cur).expect("primitive sets have two valleys");
        let (next, predicted) = if s.j < s.k {
            let next = transform(&iterate(cur, Direction::UpperRight, s.j as usize)?, Direction::Upper)?;
            let predicted = [
                ExponentTriple::new(s.i + s.i_z + 1, 0, 0),
                ExponentTriple::new(s.i, s.j, 0),
                ExponentTriple::new(s.i_z, 0, s.k - s.j - 1),
            ];
            (next, predicted)
        } else if s.k < s.j {
            let next = transform(&iterate(cur, Direction::UpperLeft, s.k as usize)?, Direction::Upper)?;
            let predicted = [
                ExponentTriple::new(s.i + s.i_y + 1, 0, 0),
                ExponentTriple::new(s.i_y, s.j - s.k - 1, 0),
                ExponentTriple::new(s.i, 0, s.k),
            ];
            (next, predicted)
        } else {
            return Err(Error::Inconsistent(format!("primitive member {cur} has j = k")));
        };
        if GSet::from_span(action, &predicted)? != next {
            return Err(Error::Inconsistent(format!("successor of {cur} is {next}, expected span {predicted:?}")));
        }
        members.push(next);
    }
    let indices = members.iter().map(SequenceIndices::of).collect();
    Ok(PrimitiveSequence { members, indices })
}

/// `(3r + b(r - b) - 1) / 2`.
pub fn predicted_count(action: &GroupAction) -> u64 {
    let (r, b) = (action.r() as u64, action.b() as u64);
    (3 * r + b * (r - b) - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn act(r: i64, a: i64) -> GroupAction {
        GroupAction::new(r, a).unwrap()
    }

    fn span(action: &GroupAction, s: &[(i64, i64, i64)]) -> GSet {
        let s: Vec<_> = s.iter().map(|&(x, y, z)| ExponentTriple::new(x, y, z)).collect();
        GSet::from_span(action, &s).unwrap()
    }

    #[test]
    fn inverses() {
        assert_eq!(modular_inverse(5, 14).unwrap(), 3);
        assert_eq!(modular_inverse(2, 5).unwrap(), 3);
        assert_eq!(modular_inverse(1, 9).unwrap(), 1);
        assert_eq!(modular_inverse(4, 6), Err(Error::NotCoprime { a: 4, r: 6 }));
    }

    #[test]
    fn traces() {
        let t = euclid_trace(11, 3);
        assert_eq!(t.p(), &[11, 3, 2, 1]);
        assert_eq!(t.q(), &[3, 1, 2]);
        assert_eq!(t.linear_identity(), (13, 13));
        assert_eq!(t.quadratic_identity(), (33, 33));

        let t = euclid_trace(7, 1);
        assert_eq!((t.p(), t.q()), (&[7u64, 1][..], &[7u64][..]));
        assert!(t.identities_hold());

        let t = euclid_trace(3, 11);
        assert_eq!(t.q(), &[0, 3, 1, 2]);
        assert_eq!(t.p(), &[3, 11, 3, 2, 1]);
        assert!(t.identities_hold());
    }

    #[test]
    fn first_primitive() {
        assert_eq!(gamma_1(&act(14, 5)).unwrap(), span(&act(14, 5), &[(1, 0, 0), (0, 2, 0), (0, 0, 10)]));
        assert_eq!(gamma_1(&act(5, 2)).unwrap(), span(&act(5, 2), &[(1, 0, 0), (0, 2, 0), (0, 0, 1)]));
        assert_eq!(gamma_1(&act(7, 2)).unwrap(), span(&act(7, 2), &[(1, 0, 0), (0, 3, 0), (0, 0, 2)]));
        let g = GroupAction::exploratory(7, 1).unwrap();
        assert!(matches!(gamma_1(&g), Err(Error::DegenerateAction { .. })));
    }

    #[test]
    fn sequence_r14() {
        let g = act(14, 5);
        let seq = primitive_sequence(&g).unwrap();
        assert_eq!(seq.m(), 4);
        let expected = [
            span(&g, &[(1, 0, 0), (0, 2, 0), (0, 0, 10)]),
            span(&g, &[(2, 0, 0), (1, 2, 0), (0, 0, 7)]),
            span(&g, &[(3, 0, 0), (2, 2, 0), (0, 0, 4)]),
            span(&g, &[(4, 0, 0), (3, 2, 0), (0, 0, 1)]),
            span(&g, &[(8, 0, 0), (4, 0, 1)]),
        ];
        assert_eq!(seq.members(), &expected);
        assert!(!seq.last().is_primitive());
        assert_eq!(seq.implied_count(14), 37);
    }

    #[test]
    fn sequence_r5() {
        let g = act(5, 2);
        let seq = primitive_sequence(&g).unwrap();
        assert_eq!(seq.m(), 1);
        assert_eq!(seq.last(), &span(&g, &[(2, 0, 0), (1, 0, 1)]));
    }

    #[test]
    fn counts() {
        assert_eq!(predicted_count(&act(14, 5)), 37);
        assert_eq!(predicted_count(&act(5, 2)), 10);
        for (r, a) in [(7, 2), (11, 3), (13, 5), (29, 12)] {
            assert_eq!(predicted_count(&act(r, a)), predicted_count(&act(r, r - a)));
        }
    }
}
