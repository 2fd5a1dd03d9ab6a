//! Boundary states: which rows of a mosaic side carry a connection point.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A column boundary read top to bottom; `true` marks a connection point
/// (`o`), `false` its absence (`x`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundaryState {
    bits: Vec<bool>,
}

impl BoundaryState {
    pub fn new(bits: Vec<bool>) -> Self {
        BoundaryState { bits }
    }

    pub fn empty(len: usize) -> Self {
        BoundaryState {
            bits: vec![false; len],
        }
    }

    /// Inverse of [`BoundaryState::index`] for a state of `len` rows.
    ///
    /// # Panics
    /// If `index >= 2^len`.
    pub fn from_index(index: usize, len: usize) -> Self {
        assert!(
            len >= usize::BITS as usize || index >> len == 0,
            "state index {index} out of range for {len} rows"
        );
        BoundaryState {
            bits: (0..len).map(|i| (index >> i) & 1 == 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn is_all_x(&self) -> bool {
        self.bits.iter().all(|&b| !b)
    }

    /// Row `i` (top = 0) contributes `2^i` when it carries a connection point,
    /// so `xxx` is 0 and the bottom row is the most significant bit.
    pub fn index(&self) -> usize {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| 1usize << i)
            .sum()
    }
}

pub fn state_index(state: &BoundaryState) -> usize {
    state.index()
}

impl fmt::Display for BoundaryState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "o" } else { "x" })?;
        }
        Ok(())
    }
}

impl FromStr for BoundaryState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'o' => Ok(true),
                'x' => Ok(false),
                _ => Err(Error::InvalidState(s.to_owned())),
            })
            .collect::<Result<Vec<_>>>()
            .map(BoundaryState::new)
    }
}
