//! Dense square matrices of side `2^p` over an exact scalar.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Natural;

/// A `2^p x 2^p` matrix stored row-major. Rows are indexed by l-state and
/// columns by r-state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateMatrix<T> {
    p: u32,
    entries: Vec<T>,
}

impl<T: Natural> StateMatrix<T> {
    pub fn zeros(p: u32) -> Self {
        let side = 1usize << p;
        StateMatrix {
            p,
            entries: vec![T::zero(); side * side],
        }
    }

    pub fn identity(p: u32) -> Self {
        let mut m = Self::zeros(p);
        let side = m.side();
        for i in 0..side {
            m.entries[i * side + i] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let side = rows.len();
        if !side.is_power_of_two() {
            return Err(Error::DimensionMismatch {
                expected: side.next_power_of_two(),
                actual: side,
            });
        }
        let mut entries = Vec::with_capacity(side * side);
        for row in rows {
            if row.len() != side {
                return Err(Error::DimensionMismatch {
                    expected: side,
                    actual: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(StateMatrix {
            p: side.trailing_zeros(),
            entries,
        })
    }

    pub fn from_u64_rows<R: AsRef<[u64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| T::from_u64(v)).collect())
                .collect(),
        )
    }

    /// Assembles `[[q11, q12], [q21, q22]]` from four equally sized blocks.
    pub fn from_quadrants(q11: &Self, q12: &Self, q21: &Self, q22: &Self) -> Result<Self> {
        for q in [q12, q21, q22] {
            q11.check_same_shape(q)?;
        }
        let half = q11.side();
        let side = 2 * half;
        let mut entries = Vec::with_capacity(side * side);
        for (left, right) in [(q11, q12), (q21, q22)] {
            for r in 0..half {
                entries.extend_from_slice(left.row(r));
                entries.extend_from_slice(right.row(r));
            }
        }
        Ok(StateMatrix {
            p: q11.p + 1,
            entries,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn side(&self) -> usize {
        1 << self.p
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row * self.side() + col]
    }

    pub fn get_mut(&mut self, row: usize, col: usize) -> &mut T {
        let side = self.side();
        &mut self.entries[row * side + col]
    }

    pub fn row(&self, row: usize) -> &[T] {
        let side = self.side();
        &self.entries[row * side..(row + 1) * side]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn map<U: Natural>(&self, f: impl Fn(&T) -> U) -> StateMatrix<U> {
        StateMatrix {
            p: self.p,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::DimensionMismatch {
                expected: self.side(),
                actual: other.side(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a += b;
        }
        Ok(out)
    }

    pub fn scaled_by_four(&self) -> Self {
        let mut out = self.clone();
        out.entries.iter_mut().for_each(T::quadruple);
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let side = self.side();
        let mut entries = vec![T::zero(); side * side];
        entries
            .par_chunks_mut(side)
            .zip(self.entries.par_chunks(side))
            .for_each(|(out_row, a_row)| {
                for (k, a) in a_row.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (out, b) in out_row.iter_mut().zip(other.row(k)) {
                        out.add_product(a, b);
                    }
                }
            });
        Ok(StateMatrix { p: self.p, entries })
    }

    /// `self^exponent` by repeated multiplication; exponent 0 is the identity.
    pub fn power(&self, exponent: u32) -> Self {
        let mut acc = Self::identity(self.p);
        for _ in 0..exponent {
            acc = acc.mul(self).expect("same shape");
        }
        acc
    }

    /// `self^exponent` by binary exponentiation.
    pub fn power_binary(&self, exponent: u32) -> Self {
        let mut acc = Self::identity(self.p);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same shape");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same shape");
            }
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        let side = self.side();
        let entries = (0..side * side)
            .map(|k| self.entries[(k % side) * side + k / side].clone())
            .collect();
        StateMatrix { p: self.p, entries }
    }

    pub fn is_symmetric(&self) -> bool {
        let side = self.side();
        (0..side).all(|i| (i + 1..side).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn row_sums(&self) -> Vec<T> {
        (0..self.side())
            .map(|r| {
                self.row(r).iter().fold(T::zero(), |mut acc, v| {
                    acc += v;
                    acc
                })
            })
            .collect()
    }

    /// Sum of all entries.
    pub fn grand_sum(&self) -> T {
        self.entries.iter().fold(T::zero(), |mut acc, v| {
            acc += v;
            acc
        })
    }
}

pub fn mat_add<T: Natural>(a: &StateMatrix<T>, b: &StateMatrix<T>) -> Result<StateMatrix<T>> {
    a.add(b)
}

pub fn mat_mul<T: Natural>(a: &StateMatrix<T>, b: &StateMatrix<T>) -> Result<StateMatrix<T>> {
    a.mul(b)
}

pub fn mat_power<T: Natural>(a: &StateMatrix<T>, exponent: u32) -> StateMatrix<T> {
    a.power(exponent)
}

pub fn grand_sum<T: Natural>(a: &StateMatrix<T>) -> T {
    a.grand_sum()
}

/// Which matrix a dump holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    X,
    O,
    N,
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixKind::X => "X",
            MatrixKind::O => "O",
            MatrixKind::N => "N",
        })
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "X" => Ok(MatrixKind::X),
            "O" => Ok(MatrixKind::O),
            "N" => Ok(MatrixKind::N),
            _ => Err(Error::parse(1, format!("unknown matrix kind `{s}`"))),
        }
    }
}

impl<T: Natural> StateMatrix<T> {
    /// Renders the `statematrix` dump: a header line followed by one line of
    /// decimal entries per row.
    pub fn to_dump(&self, kind: MatrixKind) -> String {
        let mut out = format!("statematrix p={} kind={}\n", self.p, kind);
        for r in 0..self.side() {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl<T: Natural + FromStr> StateMatrix<T> {
    pub fn parse_dump(text: &str) -> Result<(MatrixKind, Self)> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "empty dump"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let (p, kind) = match fields[..] {
            ["statematrix", p, kind] => {
                let p = p
                    .strip_prefix("p=")
                    .and_then(|v| v.parse::<u32>().ok())
                    .ok_or_else(|| Error::parse(1, format!("bad field `{p}`")))?;
                let kind = kind
                    .strip_prefix("kind=")
                    .ok_or_else(|| Error::parse(1, format!("bad field `{kind}`")))?
                    .parse()?;
                (p, kind)
            }
            _ => return Err(Error::parse(1, "expected `statematrix p=<p> kind=<X|O|N>`")),
        };
        let mut rows = Vec::new();
        for (i, line) in lines {
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<T>().map_err(|_| Error::parse(i + 1, format!("bad entry `{t}`"))))
                .collect::<Result<Vec<T>>>()?;
            rows.push(row);
        }
        if rows.len() != 1 << p {
            return Err(Error::parse(1, format!("expected {} rows, found {}", 1 << p, rows.len())));
        }
        Ok((kind, Self::from_rows(rows)?))
    }
}
