//! Golden counts, checked against both engines and against a cell-by-cell
//! profile recursion that shares no code with either engine.

use std::collections::HashMap;

use knotmosaic::{count_dense, count_matrixfree, transfer, Count};
use num_bigint::BigUint;

/// Knot mosaic count by sweeping cells row-major and tracking which cells
/// of the frontier carry a bottom connection point, plus the right side of
/// the previous cell.
fn profile_count(m: usize, n: usize) -> BigUint {
    // (left, right, top, bottom) for T_0..T_10
    const SIDES: [(bool, bool, bool, bool); 11] = [
        (false, false, false, false),
        (true, false, false, true),
        (false, true, false, true),
        (false, true, true, false),
        (true, false, true, false),
        (true, true, false, false),
        (false, false, true, true),
        (true, true, true, true),
        (true, true, true, true),
        (true, true, true, true),
        (true, true, true, true),
    ];
    let mut states: HashMap<(u64, bool), BigUint> = HashMap::new();
    states.insert((0, false), BigUint::from(1u32));
    for r in 0..m {
        for c in 0..n {
            let mut next: HashMap<(u64, bool), BigUint> = HashMap::new();
            for ((frontier, right), ways) in &states {
                let left = c > 0 && *right;
                let top = frontier >> c & 1 == 1;
                for &(l, rt, t, b) in &SIDES {
                    if l != left || t != top || (c + 1 == n && rt) || (r + 1 == m && b) {
                        continue;
                    }
                    let f = (frontier & !(1 << c)) | ((b as u64) << c);
                    *next.entry((f, rt)).or_default() += ways;
                }
            }
            states = next;
        }
    }
    states.into_values().sum()
}

fn big(s: &str) -> BigUint {
    s.parse().unwrap()
}

/// Exact `D^(n,n)`, frozen from `profile_count`.
const DIAGONAL: [&str; 13] = [
    "1",
    "2",
    "22",
    "2594",
    "4183954",
    "101393411126",
    "38572794946976686",
    "234855052870954505606714",
    "23054099362200397056093750003442",
    "36564627559441095000442883434988307728126",
    "937273142571326346553334567317274833729462713413038",
    "388216021519370723269602026803415014673735084425250326374150938",
    "2597619491722288002705429124317905557044101982354405617161447383643940545390",
];

#[test]
fn profile_oracle_reproduces_frozen_diagonal() {
    for (i, want) in DIAGONAL.iter().enumerate() {
        let n = i + 1;
        assert_eq!(profile_count(n, n), big(want), "n = {n}");
    }
}

#[test]
fn engines_reproduce_diagonal() {
    for (i, want) in DIAGONAL.iter().enumerate() {
        let n = i + 1;
        assert_eq!(count_matrixfree(n, n).unwrap(), big(want), "matrix-free n = {n}");
        if n <= 9 {
            assert_eq!(count_dense(n, n).unwrap(), big(want), "dense n = {n}");
        }
    }
}

#[test]
fn published_small_table() {
    let table = [
        ((4, 4), 2594u64),
        ((4, 5), 54_226),
        ((4, 6), 1_144_526),
        ((5, 5), 4_183_954),
        ((5, 6), 331_745_962),
        ((6, 6), 101_393_411_126),
    ];
    for ((m, n), want) in table {
        let want = Count::from(want);
        assert_eq!(count_dense(m, n).unwrap(), want);
        assert_eq!(count_dense(n, m).unwrap(), want);
        assert_eq!(count_matrixfree(m, n).unwrap(), want);
    }
}

#[test]
fn off_diagonal_against_profile_oracle() {
    for m in 1..=7 {
        for n in 1..=9 {
            let want = profile_count(m, n);
            assert_eq!(count_matrixfree(m, n).unwrap(), want, "({m}, {n})");
            assert_eq!(count_dense(m, n).unwrap(), want, "({m}, {n})");
        }
    }
}

#[test]
fn closed_forms_against_engines() {
    for m in 1..=3 {
        for n in 2..=12 {
            let closed = transfer::closed_form(m, n).unwrap();
            assert_eq!(count_dense(m, n).unwrap(), closed, "({m}, {n})");
            assert_eq!(count_matrixfree(m, n).unwrap(), closed, "({m}, {n})");
        }
    }
    assert_eq!(transfer::closed_form(3, 4).unwrap(), Count::from(130u32));
}
