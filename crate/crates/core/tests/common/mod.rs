#![allow(dead_code)]

use std::collections::BTreeSet;

use ghilb_core::{ExponentTriple, GSet, GroupAction};

/// Every `(r, a)` with `gcd(r, a) = 1`, `2 <= a < r - a` and `r <= r_max`.
pub fn actions(r_max: i64) -> Vec<GroupAction> {
    let mut out = Vec::new();
    for r in 5..=r_max {
        for a in 2..r {
            if 2 * a < r && num_integer::gcd(a, r) == 1 {
                out.push(GroupAction::new(r, a).unwrap());
            }
        }
    }
    out
}

pub fn m(x: i64, y: i64, z: i64) -> ExponentTriple {
    ExponentTriple::new(x, y, z)
}

pub fn span(action: &GroupAction, s: &[(i64, i64, i64)]) -> GSet {
    let s: Vec<_> = s.iter().map(|&(x, y, z)| m(x, y, z)).collect();
    GSet::from_span(action, &s).unwrap()
}

/// G-sets by brute force over all monomials of degree below `r` (a G-set
/// is divisor-closed with `r` members, so none has larger degree), as sorted
/// member lists: grow divisor-closed sets
/// one monomial at a time in (degree, lex) order, which visits each set
/// exactly once because divisors always come first.
pub fn brute_gsets(action: &GroupAction) -> BTreeSet<Vec<ExponentTriple>> {
    let r = action.r();
    let mut pool: Vec<ExponentTriple> = Vec::new();
    for p in 0..r {
        for q in 0..r - p {
            for s in 0..r - p - q {
                pool.push(m(p, q, s));
            }
        }
    }
    pool.sort_by_key(|t| (t.degree(), *t));
    let mut out = BTreeSet::new();
    let mut chosen = vec![m(0, 0, 0)];
    let mut used = vec![false; r as usize];
    used[0] = true;
    grow(action, &pool, 1, &mut chosen, &mut used, &mut out);
    out
}

fn grow(
    action: &GroupAction,
    pool: &[ExponentTriple],
    from: usize,
    chosen: &mut Vec<ExponentTriple>,
    used: &mut Vec<bool>,
    out: &mut BTreeSet<Vec<ExponentTriple>>,
) {
    if chosen.len() == action.r() as usize {
        let mut s = chosen.clone();
        s.sort();
        out.insert(s);
        return;
    }
    for idx in from..pool.len() {
        let c = pool[idx];
        let w = action.weight(c) as usize;
        if used[w] {
            continue;
        }
        let closed = [m(1, 0, 0), m(0, 1, 0), m(0, 0, 1)]
            .iter()
            .map(|&t| c - t)
            .filter(|d| d.is_ordinary())
            .all(|d| chosen.contains(&d));
        if !closed {
            continue;
        }
        used[w] = true;
        chosen.push(c);
        grow(action, pool, idx + 1, chosen, used, out);
        chosen.pop();
        used[w] = false;
    }
}
