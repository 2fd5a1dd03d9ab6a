//! State matrices built from the block recurrence, and the dense counting
//! engine.
//!
//! `X_p` counts suitably connected `(p,1)` columns whose bottom tile has no
//! bottom connection point and `O_p` those whose bottom tile has one. Adding
//! a tile below a `(k,1)` column picks one quadrant of the `(k+1)` matrices:
//!
//! | bottom tile | quadrant in X | quadrant in O |
//! |-------------|---------------|---------------|
//! | no l, no r  | 11: `X_k` (T_0) | 11: `O_k` (T_6) |
//! | r only      | 12: `O_k` (T_3) | 12: `X_k` (T_2) |
//! | l only      | 21: `O_k` (T_4) | 21: `X_k` (T_1) |
//! | l and r     | 22: `X_k` (T_5) | 22: `4 O_k` (T_7..T_10) |

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::matrix::StateMatrix;
use crate::scalar::Natural;

/// The `X_p`/`O_p` split of the single-column state matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPair<T> {
    pub x: StateMatrix<T>,
    pub o: StateMatrix<T>,
}

impl<T: Natural> SplitPair<T> {
    pub fn p(&self) -> u32 {
        self.x.p()
    }

    /// `X_p + O_p`, the state matrix of a single column.
    pub fn sum(&self) -> StateMatrix<T> {
        self.x.add(&self.o).expect("split halves share a shape")
    }

    /// One step of the recurrence: `(X_k, O_k) -> (X_{k+1}, O_{k+1})`.
    pub fn grow(&self) -> Self {
        let (x, o) = (&self.x, &self.o);
        let o4 = o.scaled_by_four();
        SplitPair {
            x: StateMatrix::from_quadrants(x, o, o, x).expect("same shape"),
            o: StateMatrix::from_quadrants(o, x, x, &o4).expect("same shape"),
        }
    }
}

/// `X_p` and `O_p`, grown from the `1 x 1` seeds `X_0 = O_0 = [1]`.
pub fn build_split<T: Natural>(p: u32) -> SplitPair<T> {
    let seed = SplitPair {
        x: StateMatrix::identity(0),
        o: StateMatrix::identity(0),
    };
    (0..p).fold(seed, |pair, _| pair.grow())
}

/// `N^(p,q) = (X_p + O_p)^q`.
pub fn state_matrix<T: Natural>(p: u32, q: u32) -> Result<StateMatrix<T>> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidDimensions {
            rows: p as usize,
            cols: q as usize,
        });
    }
    Ok(build_split::<T>(p).sum().power(q))
}

fn check_dims(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidDimensions { rows: m, cols: n });
    }
    Ok(())
}

/// Number of knot `(m,n)`-mosaics: `2 * ||(X_{m-2} + O_{m-2})^(n-2)||`,
/// with the dense matrix power.
pub fn count_dense<T: Natural>(m: usize, n: usize) -> Result<T> {
    check_dims(m, n)?;
    if m.min(n) == 1 {
        return Ok(T::one());
    }
    let p = u32::try_from(m - 2).expect("row count fits u32");
    let e = u32::try_from(n - 2).expect("column count fits u32");
    let mut total = build_split::<T>(p).sum().power(e).grand_sum();
    let twice = total.clone();
    total += &twice;
    Ok(total)
}

/// `D^(m,1) ..= D^(m,max_n)` from successive dense powers of one state
/// matrix.
pub fn count_dense_row<T: Natural>(m: usize, max_n: usize) -> Result<Vec<T>> {
    check_dims(m, max_n)?;
    if m == 1 {
        return Ok(vec![T::one(); max_n]);
    }
    let a = build_split::<T>(u32::try_from(m - 2).expect("row count fits u32")).sum();
    let mut out = vec![T::one()];
    let mut power = StateMatrix::identity(a.p());
    for n in 2..=max_n {
        if n > 2 {
            power = power.mul(&a)?;
        }
        let mut total = power.grand_sum();
        let twice = total.clone();
        total += &twice;
        out.push(total);
    }
    Ok(out)
}

/// The known closed forms for one, two and three rows.
pub fn closed_form(m: usize, n: usize) -> Result<BigUint> {
    let domain = Error::ClosedFormDomain { m, n };
    match (m, n) {
        (_, 0) => Err(Error::InvalidDimensions { rows: m, cols: n }),
        (1, _) => Ok(BigUint::one()),
        (2, n) => Ok(BigUint::one() << (n - 1)),
        (3, n) if n >= 2 => {
            let numerator = BigUint::from(2u32) * (BigUint::from(9u32) * BigUint::from(6u32).pow(n - 2) + 1u32);
            debug_assert_eq!(&numerator % 5u32, BigUint::ZERO);
            Ok(numerator / 5u32)
        }
        _ => Err(domain),
    }
}

/// Checks `2^e <= 275 d / (2 (9*6^(m-2)+1)(9*6^(n-2)+1)) <= (22/5)^e` with
/// `e = (m-3)(n-3)`, by cross-multiplying in exact integers.
pub fn bounds_check(m: usize, n: usize, d: &BigUint) -> bool {
    assert!(m >= 3 && n >= 3, "bounds hold only for m, n >= 3");
    let e = (m - 3) * (n - 3);
    let edge = |k: usize| BigUint::from(9u32) * BigUint::from(6u32).pow(k - 2) + 1u32;
    let denominator = BigUint::from(2u32) * edge(m) * edge(n);
    let scaled = BigUint::from(275u32) * d;
    let lower = (BigUint::one() << e) * &denominator <= scaled;
    let upper = scaled * BigUint::from(5u32).pow(e) <= BigUint::from(22u32).pow(e) * denominator;
    lower && upper
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::grand_sum;

    type M = StateMatrix<BigUint>;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn seeds_and_first_step() {
        let s0 = build_split::<BigUint>(0);
        assert_eq!(s0.x, M::identity(0));
        assert_eq!(s0.o, M::identity(0));
        let s1 = build_split::<BigUint>(1);
        assert_eq!(s1.x, M::from_u64_rows(&[[1, 1], [1, 1]]).unwrap());
        assert_eq!(s1.o, M::from_u64_rows(&[[1, 1], [1, 4]]).unwrap());
    }

    #[test]
    fn second_step_expansion() {
        let s2 = build_split::<BigUint>(2);
        assert_eq!(
            s2.x,
            M::from_u64_rows(&[[1, 1, 1, 1], [1, 1, 1, 4], [1, 1, 1, 1], [1, 4, 1, 1]]).unwrap()
        );
        assert_eq!(
            s2.o,
            M::from_u64_rows(&[[1, 1, 1, 1], [1, 4, 1, 1], [1, 1, 4, 4], [1, 1, 4, 16]]).unwrap()
        );
        assert_eq!(grand_sum(&s2.sum()), big(65));
    }

    #[test]
    fn worked_entry_of_o4() {
        let s4 = build_split::<BigUint>(4);
        assert_eq!(*s4.o.get(10, 11), big(16));
    }

    #[test]
    fn state_matrix_examples() {
        assert_eq!(state_matrix::<BigUint>(1, 1).unwrap(), M::from_u64_rows(&[[2, 2], [2, 5]]).unwrap());
        assert_eq!(
            state_matrix::<BigUint>(1, 2).unwrap(),
            M::from_u64_rows(&[[8, 14], [14, 29]]).unwrap()
        );
        assert_eq!(state_matrix::<BigUint>(2, 2).unwrap().grand_sum(), big(1297));
        assert!(state_matrix::<BigUint>(0, 2).is_err());
    }

    #[test]
    fn row_sum_shortcut_for_symmetric_square() {
        let a = build_split::<BigUint>(2).sum();
        let rows = a.row_sums();
        assert_eq!(rows, vec![big(8), big(14), big(14), big(29)]);
        let shortcut: BigUint = rows.iter().map(|r| r * r).sum();
        assert_eq!(shortcut, a.power(2).grand_sum());
    }

    #[test]
    fn dense_count_examples() {
        assert_eq!(count_dense::<BigUint>(4, 4).unwrap(), big(2594));
        assert_eq!(count_dense::<BigUint>(5, 6).unwrap(), big(331_745_962));
        assert_eq!(count_dense::<BigUint>(2, 5).unwrap(), big(16));
        assert_eq!(count_dense::<BigUint>(1, 7).unwrap(), big(1));
        assert_eq!(count_dense::<u64>(3, 3).unwrap(), 22);
        assert_eq!(
            count_dense::<BigUint>(0, 3),
            Err(Error::InvalidDimensions { rows: 0, cols: 3 })
        );
    }

    #[test]
    fn dense_row_matches_single_counts() {
        for m in 1..=6 {
            let row = count_dense_row::<BigUint>(m, 7).unwrap();
            assert_eq!(row.len(), 7);
            for (i, d) in row.iter().enumerate() {
                assert_eq!(*d, count_dense::<BigUint>(m, i + 1).unwrap(), "({m}, {})", i + 1);
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(1, 9).unwrap(), big(1));
        assert_eq!(closed_form(2, 4).unwrap(), big(8));
        assert_eq!(closed_form(3, 5).unwrap(), big(778));
        assert_eq!(closed_form(3, 2).unwrap(), big(4));
        assert!(closed_form(4, 4).is_err());
        assert!(closed_form(3, 1).is_err());
    }

    #[test]
    fn bounds_examples() {
        assert!(bounds_check(3, 3, &big(22)));
        assert!(bounds_check(4, 4, &big(2594)));
        assert!(bounds_check(6, 6, &big(101_393_411_126)));
        assert!(!bounds_check(3, 3, &big(21)));
        assert!(!bounds_check(4, 4, &big(100_000)));
    }
}
