//! Matrix-free application of `X_k`, `O_k` and `X_k + O_k`.
//!
//! Only the grand sum of `(X_k + O_k)^e` is ever needed, and that equals
//! `1^T (X_k + O_k)^e 1`. So instead of materializing `4^k` entries we push
//! the all-ones vector through the operator `e` times. The block structure
//!
//! ```text
//! X_{j+1} [v1; v2] = [X_j v1 + O_j v2;  O_j v1 + X_j v2]
//! O_{j+1} [v1; v2] = [O_j v1 + X_j v2;  X_j v1 + 4 O_j v2]
//! ```
//!
//! gives both products from the two half-vector products with three
//! additions and one quadrupling per pair. Unrolled bottom-up this is an
//! in-place butterfly over the index bits, `O(k 2^k)` additions in total.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Natural;

/// A vector indexed by boundary state, of length `2^p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountVector<T> {
    p: u32,
    entries: Vec<T>,
}

impl<T: Natural> CountVector<T> {
    pub fn new(entries: Vec<T>) -> Result<Self> {
        if !entries.len().is_power_of_two() {
            return Err(Error::DimensionMismatch {
                expected: entries.len().next_power_of_two(),
                actual: entries.len(),
            });
        }
        Ok(CountVector {
            p: entries.len().trailing_zeros(),
            entries,
        })
    }

    pub fn from_u64s(values: &[u64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| T::from_u64(v)).collect())
    }

    pub fn ones(p: u32) -> Self {
        CountVector {
            p,
            entries: vec![T::one(); 1 << p],
        }
    }

    /// The standard basis vector `e_index`.
    pub fn basis(p: u32, index: usize) -> Self {
        let mut entries = vec![T::zero(); 1 << p];
        entries[index] = T::one();
        CountVector { p, entries }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    pub fn sum(&self) -> T {
        self.entries.iter().fold(T::zero(), |mut acc, v| {
            acc += v;
            acc
        })
    }
}

/// `(X_k v, O_k v)`.
pub type SplitProducts<T> = (CountVector<T>, CountVector<T>);

/// Arithmetic performed by one matrix-free application.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    pub additions: u64,
    pub quadruplings: u64,
}

impl std::ops::AddAssign for OpCounts {
    fn add_assign(&mut self, rhs: Self) {
        self.additions += rhs.additions;
        self.quadruplings += rhs.quadruplings;
    }
}

// Below this many pairs a block is combined on the current thread.
const PAR_PAIRS: usize = 1 << 12;

fn check_len<T>(k: u32, v: &CountVector<T>) -> Result<()> {
    if v.p != k {
        return Err(Error::DimensionMismatch {
            expected: 1 << k,
            actual: v.entries.len(),
        });
    }
    Ok(())
}

/// Combines one pair `(v1[i], v2[i])` in place; returns the additions made.
#[inline]
fn combine<T: Natural>(x1: &mut T, x2: &mut T, o1: &mut T, o2: &mut T, scratch: &mut T) -> u64 {
    scratch.clone_from(x1);
    *x1 += &*o2;
    o2.quadruple();
    *o2 += &*scratch;
    *o1 += &*x2;
    x2.clone_from(o1);
    3
}

fn combine_block<T: Natural>(xs: &mut [T], os: &mut [T]) -> u64 {
    let half = xs.len() / 2;
    let (xl, xh) = xs.split_at_mut(half);
    let (ol, oh) = os.split_at_mut(half);
    if half >= PAR_PAIRS {
        xl.par_iter_mut()
            .zip(xh.par_iter_mut())
            .zip(ol.par_iter_mut().zip(oh.par_iter_mut()))
            .map_init(T::zero, |scratch, ((x1, x2), (o1, o2))| combine(x1, x2, o1, o2, scratch))
            .sum()
    } else {
        let mut scratch = T::zero();
        xl.iter_mut()
            .zip(xh.iter_mut())
            .zip(ol.iter_mut().zip(oh.iter_mut()))
            .map(|((x1, x2), (o1, o2))| combine(x1, x2, o1, o2, &mut scratch))
            .sum()
    }
}

/// `(X_k v, O_k v)` together with the arithmetic it took.
pub fn apply_split_counted<T: Natural>(
    k: u32,
    v: &CountVector<T>,
) -> Result<(SplitProducts<T>, OpCounts)> {
    check_len(k, v)?;
    let mut xs = v.entries.clone();
    let mut os = v.entries.clone();
    let mut counts = OpCounts::default();
    for level in 0..k {
        let block = 2usize << level;
        counts.additions += xs
            .par_chunks_mut(block)
            .zip(os.par_chunks_mut(block))
            .map(|(xc, oc)| combine_block(xc, oc))
            .sum::<u64>();
        counts.quadruplings += (xs.len() / 2) as u64;
    }
    Ok((
        (CountVector { p: k, entries: xs }, CountVector { p: k, entries: os }),
        counts,
    ))
}

/// `(X_k v, O_k v)`.
pub fn apply_split<T: Natural>(k: u32, v: &CountVector<T>) -> Result<SplitProducts<T>> {
    apply_split_counted(k, v).map(|(pair, _)| pair)
}

/// `(X_k + O_k) v` together with the arithmetic it took.
pub fn apply_operator_counted<T: Natural>(k: u32, v: &CountVector<T>) -> Result<(CountVector<T>, OpCounts)> {
    let ((mut x, o), mut counts) = apply_split_counted(k, v)?;
    x.entries
        .par_iter_mut()
        .zip(o.entries.par_iter())
        .for_each(|(a, b)| *a += b);
    counts.additions += x.entries.len() as u64;
    Ok((x, counts))
}

/// `(X_k + O_k) v`.
pub fn apply_operator<T: Natural>(k: u32, v: &CountVector<T>) -> Result<CountVector<T>> {
    apply_operator_counted(k, v).map(|(out, _)| out)
}

/// Number of knot `(m,n)`-mosaics by iterating the operator on the
/// all-ones vector.
pub fn count_matrixfree<T: Natural>(m: usize, n: usize) -> Result<T> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidDimensions { rows: m, cols: n });
    }
    if m.min(n) == 1 {
        return Ok(T::one());
    }
    let k = u32::try_from(m - 2).expect("row count fits u32");
    let mut v = CountVector::<T>::ones(k);
    for _ in 2..n {
        v = apply_operator(k, &v)?;
    }
    let mut total = v.sum();
    let twice = total.clone();
    total += &twice;
    Ok(total)
}
