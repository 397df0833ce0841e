//! Shared inputs for the benchmarks.

use ghilb_core::GroupAction;

/// Actions of increasing size; `(14, 5)` is the worked example.
pub const CASES: [(i64, i64); 4] = [(5, 2), (14, 5), (29, 12), (53, 20)];

pub fn actions() -> Vec<GroupAction> {
    CASES.iter().map(|&(r, a)| GroupAction::new(r, a).expect("benchmark actions are valid")).collect()
}
