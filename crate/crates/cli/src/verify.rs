//! Oracle-versus-algebra checks behind `knotmosaic verify`.
//!
//! The split builder is a parameter so a deliberately broken recurrence can
//! be fed in and shown to be caught.

use knotmosaic::oracle::{oracle_knot_count, oracle_split_matrices, oracle_state_matrix};
use knotmosaic::{count_dense, count_matrixfree, BigSplitPair, BigStateMatrix, EnumBudget, Error};
use num_bigint::BigUint;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Mismatch(String),
    Budget(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub check: &'static str,
    pub params: Value,
    pub status: Status,
    pub extra: Option<Value>,
}

impl Outcome {
    pub fn to_json(&self) -> Value {
        let mut obj = json!({ "check": self.check, "params": self.params });
        let (status, detail) = match &self.status {
            Status::Pass => ("pass", None),
            Status::Mismatch(d) => ("mismatch", Some(d)),
            Status::Budget(d) => ("budget", Some(d)),
        };
        obj["status"] = json!(status);
        if let Some(d) = detail {
            obj["detail"] = json!(d);
        }
        if let Some(extra) = &self.extra {
            obj["result"] = extra.clone();
        }
        obj
    }
}

struct Plan {
    max_split_p: u32,
    max_pq: u32,
    knots: &'static [(usize, usize)],
    max_engine_m: usize,
    max_engine_n: usize,
}

fn plan(level: Level) -> Plan {
    match level {
        Level::Quick => Plan {
            max_split_p: 3,
            max_pq: 5,
            knots: &[(2, 2), (2, 3), (3, 3)],
            max_engine_m: 6,
            max_engine_n: 8,
        },
        Level::Full => Plan {
            max_split_p: 5,
            max_pq: 6,
            knots: &[(2, 2), (2, 3), (3, 3), (3, 4)],
            max_engine_m: 10,
            max_engine_n: 12,
        },
    }
}

fn status_of(err: Error) -> Status {
    if err.is_budget() {
        Status::Budget(err.to_string())
    } else {
        Status::Mismatch(err.to_string())
    }
}

fn first_difference(kind: &str, got: &BigStateMatrix, want: &BigStateMatrix) -> Option<String> {
    for i in 0..want.side() {
        for j in 0..want.side() {
            if got.get(i, j) != want.get(i, j) {
                return Some(format!(
                    "{kind}[{i}][{j}]: recurrence {} vs enumeration {}",
                    got.get(i, j),
                    want.get(i, j)
                ));
            }
        }
    }
    None
}

/// `2 ||(X + O)^(n-2)||` with the supplied split builder.
fn count_from_split(m: usize, n: usize, split: &dyn Fn(u32) -> BigSplitPair) -> BigUint {
    if m.min(n) == 1 {
        return BigUint::from(1u32);
    }
    split((m - 2) as u32).sum().power((n - 2) as u32).grand_sum() * 2u32
}

pub fn run_checks(level: Level, split: &dyn Fn(u32) -> BigSplitPair, budget: EnumBudget) -> Vec<Outcome> {
    let plan = plan(level);
    let mut out = Vec::new();

    for p in 1..=plan.max_split_p {
        let status = match oracle_split_matrices::<BigUint>(p, budget) {
            Ok(tally) => {
                let built = split(p);
                first_difference("X", &built.x, &tally.x_counts)
                    .or_else(|| first_difference("O", &built.o, &tally.o_counts))
                    .map_or(Status::Pass, Status::Mismatch)
            }
            Err(e) => status_of(e),
        };
        out.push(Outcome {
            check: "split",
            params: json!({ "p": p }),
            status,
            extra: None,
        });
    }

    for p in 1..plan.max_pq {
        for q in 1..=plan.max_pq - p {
            let status = match oracle_state_matrix::<BigUint>(p, q as usize, budget) {
                Ok(brute) => {
                    let built = split(p).sum().power(q);
                    first_difference("N", &built, &brute).map_or(Status::Pass, Status::Mismatch)
                }
                Err(e) => status_of(e),
            };
            out.push(Outcome {
                check: "state_matrix",
                params: json!({ "p": p, "q": q }),
                status,
                extra: None,
            });
        }
    }

    for &(m, n) in plan.knots {
        let (status, extra) = match oracle_knot_count(m, n, budget) {
            Ok(found) => {
                let algebra = count_from_split(m, n, split);
                let status = if algebra == BigUint::from(found) {
                    Status::Pass
                } else {
                    Status::Mismatch(format!("enumeration {found} vs algebra {algebra}"))
                };
                (status, Some(json!({ "count": found.to_string() })))
            }
            Err(e) => (status_of(e), None),
        };
        out.push(Outcome {
            check: "knot_count",
            params: json!({ "m": m, "n": n }),
            status,
            extra,
        });
    }

    for m in 2..=plan.max_engine_m {
        let mut mismatch = None;
        for n in 2..=plan.max_engine_n {
            let dense: BigUint = count_dense(m, n).expect("valid dimensions");
            let free: BigUint = count_matrixfree(m, n).expect("valid dimensions");
            if dense != free {
                mismatch = Some(format!("D({m},{n}): dense {dense} vs matrix-free {free}"));
                break;
            }
        }
        out.push(Outcome {
            check: "engines",
            params: json!({ "m": m, "max_n": plan.max_engine_n }),
            status: mismatch.map_or(Status::Pass, Status::Mismatch),
            extra: None,
        });
    }
    out
}

/// 0 when everything passed, 4 on any mismatch, otherwise 3 when a budget
/// ran out.
pub fn exit_code(outcomes: &[Outcome]) -> i32 {
    if outcomes.iter().any(|o| matches!(o.status, Status::Mismatch(_))) {
        4
    } else if outcomes.iter().any(|o| matches!(o.status, Status::Budget(_))) {
        3
    } else {
        0
    }
}
