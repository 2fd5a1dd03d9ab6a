//! Brute-force enumeration of mosaics, used as an independent check on the
//! algebraic engines.
//!
//! The search places tiles cell by cell in row-major order, trying tile ids
//! in ascending order, and rejects any tile whose left or top side disagrees
//! with the neighbor already placed. Cells can be pinned to a fixed tile,
//! which is how border completions are found.

use crate::error::{BudgetExceeded, Error, Result};
use crate::matrix::StateMatrix;
use crate::mosaic::Mosaic;
use crate::scalar::Natural;
use crate::tile::Tile;

/// Limits on brute-force searches. Exceeding either is reported as
/// [`Error::Budget`], never as a short result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBudget {
    pub max_cells: usize,
    pub max_nodes: u64,
}

impl EnumBudget {
    pub const DEFAULT_MAX_CELLS: usize = 12;
    pub const DEFAULT_MAX_NODES: u64 = 100_000_000;

    pub fn new(max_cells: usize, max_nodes: u64) -> Result<Self> {
        if max_cells == 0 || max_nodes == 0 {
            return Err(Error::InvalidDimensions {
                rows: max_cells,
                cols: max_nodes as usize,
            });
        }
        Ok(EnumBudget { max_cells, max_nodes })
    }

    fn check_cells(&self, rows: usize, cols: usize) -> Result<()> {
        let cells = rows * cols;
        if cells > self.max_cells {
            return Err(BudgetExceeded::Cells {
                cells,
                max_cells: self.max_cells,
            }
            .into());
        }
        Ok(())
    }
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget {
            max_cells: Self::DEFAULT_MAX_CELLS,
            max_nodes: Self::DEFAULT_MAX_NODES,
        }
    }
}

/// Depth-first search over tile assignments, yielding each complete
/// assignment once.
#[derive(Debug, Clone)]
pub struct MosaicStream {
    rows: usize,
    cols: usize,
    pinned: Vec<Option<Tile>>,
    closed: bool,
    max_nodes: u64,
    nodes: u64,
    cells: Vec<Tile>,
    next_try: Vec<u8>,
    depth: usize,
    done: bool,
}

impl MosaicStream {
    fn new(rows: usize, cols: usize, pinned: Vec<Option<Tile>>, closed: bool, max_nodes: u64) -> Self {
        let total = rows * cols;
        MosaicStream {
            rows,
            cols,
            pinned,
            closed,
            max_nodes,
            nodes: 0,
            cells: vec![Tile::BLANK; total],
            next_try: vec![0; total + 1],
            depth: 0,
            done: false,
        }
    }

    /// Search nodes (tile placements) visited so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    fn fits(&self, pos: usize, tile: Tile) -> bool {
        if let Some(pin) = self.pinned[pos] {
            if pin != tile {
                return false;
            }
        }
        let (r, c) = (pos / self.cols, pos % self.cols);
        let s = tile.sides();
        let left_ok = if c > 0 {
            s.left() == self.cells[pos - 1].sides().right()
        } else {
            !(self.closed && s.left())
        };
        let top_ok = if r > 0 {
            s.top() == self.cells[pos - self.cols].sides().bottom()
        } else {
            !(self.closed && s.top())
        };
        let right_ok = if c + 1 == self.cols {
            !(self.closed && s.right())
        } else {
            self.pinned[pos + 1].is_none_or(|t| t.sides().left() == s.right())
        };
        let bottom_ok = if r + 1 == self.rows {
            !(self.closed && s.bottom())
        } else {
            self.pinned[pos + self.cols].is_none_or(|t| t.sides().top() == s.bottom())
        };
        left_ok && top_ok && right_ok && bottom_ok
    }
}

impl Iterator for MosaicStream {
    type Item = Result<Mosaic>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let total = self.cells.len();
        loop {
            if self.depth == total {
                let found = Mosaic::new(self.rows, self.cols, self.cells.clone());
                // resume from the last cell on the next call
                self.depth -= 1;
                return Some(found);
            }
            let pos = self.depth;
            let start = self.next_try[pos];
            let candidate = (start..Tile::COUNT as u8).map(Tile::of).find(|&t| self.fits(pos, t));
            match candidate {
                Some(tile) => {
                    self.nodes += 1;
                    if self.nodes > self.max_nodes {
                        self.done = true;
                        return Some(Err(BudgetExceeded::Nodes {
                            max_nodes: self.max_nodes,
                        }
                        .into()));
                    }
                    self.cells[pos] = tile;
                    self.next_try[pos] = tile.id() + 1;
                    self.depth += 1;
                    self.next_try[self.depth] = 0;
                }
                None => {
                    if pos == 0 {
                        self.done = true;
                        return None;
                    }
                    self.depth -= 1;
                }
            }
        }
    }
}

/// Every suitably connected `(p,q)`-mosaic, boundary connection points
/// allowed, in row-major ascending-tile order.
pub fn enumerate_suitably_connected(p: usize, q: usize, budget: EnumBudget) -> Result<MosaicStream> {
    check_dims(p, q)?;
    budget.check_cells(p, q)?;
    Ok(MosaicStream::new(p, q, vec![None; p * q], false, budget.max_nodes))
}

/// Every knot `(m,n)`-mosaic, in row-major ascending-tile order.
pub fn enumerate_knot_mosaics(m: usize, n: usize, budget: EnumBudget) -> Result<MosaicStream> {
    check_dims(m, n)?;
    budget.check_cells(m, n)?;
    Ok(MosaicStream::new(m, n, vec![None; m * n], true, budget.max_nodes))
}

fn check_dims(rows: usize, cols: usize) -> Result<()> {
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidDimensions { rows, cols });
    }
    Ok(())
}

/// Empirical `X_p`/`O_p` split: single columns tallied by (l-state,
/// r-state), separated by whether the bottom tile has a bottom connection
/// point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tally<T> {
    pub p: u32,
    pub x_counts: StateMatrix<T>,
    pub o_counts: StateMatrix<T>,
}

fn bump<T: Natural>(cell: &mut T) {
    *cell += &T::one();
}

pub fn oracle_split_matrices<T: Natural>(p: u32, budget: EnumBudget) -> Result<Tally<T>> {
    let mut tally = Tally {
        p,
        x_counts: StateMatrix::zeros(p),
        o_counts: StateMatrix::zeros(p),
    };
    for mosaic in enumerate_suitably_connected(p as usize, 1, budget)? {
        let mosaic = mosaic?;
        let (i, j) = (mosaic.l_state().index(), mosaic.r_state().index());
        let target = if mosaic.has_bottom_cp()? {
            &mut tally.o_counts
        } else {
            &mut tally.x_counts
        };
        bump(target.get_mut(i, j));
    }
    Ok(tally)
}

/// Empirical state matrix of all suitably connected `(p,q)`-mosaics.
pub fn oracle_state_matrix<T: Natural>(p: u32, q: usize, budget: EnumBudget) -> Result<StateMatrix<T>> {
    let mut counts = StateMatrix::zeros(p);
    for mosaic in enumerate_suitably_connected(p as usize, q, budget)? {
        let mosaic = mosaic?;
        bump(counts.get_mut(mosaic.l_state().index(), mosaic.r_state().index()));
    }
    Ok(counts)
}

/// Number of knot `(m,n)`-mosaics by exhaustive search.
pub fn oracle_knot_count(m: usize, n: usize, budget: EnumBudget) -> Result<u64> {
    enumerate_knot_mosaics(m, n, budget)?.try_fold(0u64, |acc, mosaic| mosaic.map(|_| acc + 1))
}

// Border searches pin every interior cell, so they stay small regardless of
// the mosaic size.
const COMPLETION_MAX_NODES: u64 = 10_000_000;

/// All knot mosaics obtained by adding a one-tile border around `inner`.
pub fn complete_to_knot(inner: &Mosaic) -> Result<Vec<Mosaic>> {
    if !inner.is_suitably_connected() {
        return Err(Error::NotSuitablyConnected);
    }
    let (rows, cols) = (inner.rows() + 2, inner.cols() + 2);
    let mut pinned = vec![None; rows * cols];
    for r in 0..inner.rows() {
        for c in 0..inner.cols() {
            pinned[(r + 1) * cols + c + 1] = Some(inner.get(r, c));
        }
    }
    MosaicStream::new(rows, cols, pinned, true, COMPLETION_MAX_NODES).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn budget() -> EnumBudget {
        EnumBudget::default()
    }

    fn m(rows: &[&[u32]]) -> Mosaic {
        Mosaic::from_ids(rows).unwrap()
    }

    #[test]
    fn single_cell_enumeration() {
        let all: Vec<Mosaic> = enumerate_suitably_connected(1, 1, budget())
            .unwrap()
            .collect::<Result<_>>()
            .unwrap();
        assert_eq!(all.len(), 11);
        let ids: Vec<u8> = all.iter().map(|m| m.get(0, 0).id()).collect();
        assert_eq!(ids, (0..11).collect::<Vec<u8>>());
    }

    #[test]
    fn small_enumeration_totals() {
        let count = |p, q| enumerate_suitably_connected(p, q, budget()).unwrap().count();
        assert_eq!(count(2, 1), 65);
        // ||N^(1,1)^2|| = 8 + 14 + 14 + 29
        assert_eq!(count(1, 2), 65);
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        let all: Vec<Vec<u8>> = enumerate_suitably_connected(2, 2, budget())
            .unwrap()
            .map(|m| m.unwrap().cells().iter().map(|t| t.id()).collect())
            .collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let all_knots: Vec<Mosaic> = enumerate_knot_mosaics(3, 3, budget())
            .unwrap()
            .collect::<Result<_>>()
            .unwrap();
        assert!(all_knots.iter().all(Mosaic::is_knot_mosaic));
    }

    #[test]
    fn split_tally_for_one_row() {
        let tally = oracle_split_matrices::<u64>(1, budget()).unwrap();
        assert_eq!(tally.x_counts, StateMatrix::from_u64_rows(&[[1, 1], [1, 1]]).unwrap());
        assert_eq!(tally.o_counts, StateMatrix::from_u64_rows(&[[1, 1], [1, 4]]).unwrap());
    }

    #[test]
    fn state_matrix_for_single_cell() {
        let n = oracle_state_matrix::<BigUint>(1, 1, budget()).unwrap();
        assert_eq!(n, StateMatrix::from_u64_rows(&[[2, 2], [2, 5]]).unwrap());
        assert_eq!(n.grand_sum(), BigUint::from(11u32));
    }

    #[test]
    fn knot_counts() {
        assert_eq!(oracle_knot_count(1, 1, budget()).unwrap(), 1);
        assert_eq!(oracle_knot_count(2, 2, budget()).unwrap(), 2);
        assert_eq!(oracle_knot_count(3, 3, budget()).unwrap(), 22);
    }

    #[test]
    fn budgets_are_errors() {
        let tight = EnumBudget::new(4, 1_000_000).unwrap();
        assert!(matches!(
            enumerate_suitably_connected(2, 3, tight),
            Err(Error::Budget(BudgetExceeded::Cells { cells: 6, max_cells: 4 }))
        ));
        let few_nodes = EnumBudget::new(12, 50).unwrap();
        let err = oracle_knot_count(3, 3, few_nodes).unwrap_err();
        assert_eq!(err, Error::Budget(BudgetExceeded::Nodes { max_nodes: 50 }));
        assert!(EnumBudget::new(0, 10).is_err());
    }

    #[test]
    fn completion_of_blank_cell() {
        let found = complete_to_knot(&m(&[&[0]])).unwrap();
        assert_eq!(
            found,
            vec![
                Mosaic::filled(3, 3, Tile::BLANK).unwrap(),
                m(&[&[2, 5, 1], &[6, 0, 6], &[3, 5, 4]]),
            ]
        );
    }

    #[test]
    fn completion_of_crossing() {
        let found = complete_to_knot(&m(&[&[9]])).unwrap();
        assert_eq!(found.len(), 2);
        for k in &found {
            assert!(k.is_knot_mosaic());
            assert_eq!(k.get(1, 1), Tile::of(9));
        }
    }

    #[test]
    fn completion_of_circle() {
        let found = complete_to_knot(&m(&[&[2, 1], &[3, 4]])).unwrap();
        assert_eq!(found.len(), 2);
        assert!(found.iter().all(Mosaic::is_knot_mosaic));
    }

    #[test]
    fn completion_rejects_disconnected_input() {
        assert_eq!(complete_to_knot(&m(&[&[5, 6]])), Err(Error::NotSuitablyConnected));
    }
}
