//! Mosaic grids, their connectivity predicates and the `mosaic v1` text format.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::state::BoundaryState;
use crate::tile::Tile;

pub const HEADER: &str = "mosaic v1";

/// An `rows x cols` grid of tiles. Row 0 is the top row, column 0 the left
/// column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mosaic {
    rows: usize,
    cols: usize,
    cells: Vec<Tile>,
}

impl Mosaic {
    pub fn new(rows: usize, cols: usize, cells: Vec<Tile>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidDimensions { rows, cols });
        }
        if cells.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                actual: cells.len(),
            });
        }
        Ok(Mosaic { rows, cols, cells })
    }

    pub fn filled(rows: usize, cols: usize, tile: Tile) -> Result<Self> {
        Mosaic::new(rows, cols, vec![tile; rows * cols])
    }

    /// Builds a mosaic from rows of tile ids.
    pub fn from_ids<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut cells = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    actual: row.len(),
                });
            }
            for &id in row {
                cells.push(Tile::new(id)?);
            }
        }
        Mosaic::new(rows.len(), cols, cells)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cells(&self) -> &[Tile] {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> Tile {
        assert!(row < self.rows && col < self.cols, "cell ({row}, {col}) out of bounds");
        self.cells[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[Tile] {
        &self.cells[row * self.cols..(row + 1) * self.cols]
    }

    /// The `rows x cols` block whose top-left cell is `(top, left)`.
    pub fn submosaic(&self, top: usize, left: usize, rows: usize, cols: usize) -> Result<Mosaic> {
        if top + rows > self.rows || left + cols > self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                actual: (top + rows) * (left + cols),
            });
        }
        let cells = (top..top + rows)
            .flat_map(|r| self.row(r)[left..left + cols].iter().copied())
            .collect();
        Mosaic::new(rows, cols, cells)
    }

    pub fn is_suitably_connected(&self) -> bool {
        let horizontal = (0..self.rows).all(|r| {
            self.row(r)
                .windows(2)
                .all(|w| w[0].sides().right() == w[1].sides().left())
        });
        horizontal
            && (1..self.rows).all(|r| {
                self.row(r - 1)
                    .iter()
                    .zip(self.row(r))
                    .all(|(up, down)| up.sides().bottom() == down.sides().top())
            })
    }

    pub fn has_boundary_connection_points(&self) -> bool {
        let last_row = self.rows - 1;
        let last_col = self.cols - 1;
        (0..self.cols).any(|c| self.get(0, c).sides().top() || self.get(last_row, c).sides().bottom())
            || (0..self.rows).any(|r| self.get(r, 0).sides().left() || self.get(r, last_col).sides().right())
    }

    pub fn is_knot_mosaic(&self) -> bool {
        self.is_suitably_connected() && !self.has_boundary_connection_points()
    }

    pub fn l_state(&self) -> BoundaryState {
        BoundaryState::new((0..self.rows).map(|r| self.get(r, 0).sides().left()).collect())
    }

    pub fn r_state(&self) -> BoundaryState {
        let last = self.cols - 1;
        BoundaryState::new((0..self.rows).map(|r| self.get(r, last).sides().right()).collect())
    }

    /// Whether the bottom tile of a single-column mosaic has a bottom
    /// connection point.
    pub fn has_bottom_cp(&self) -> Result<bool> {
        if self.cols != 1 {
            return Err(Error::NotAColumn(self.cols));
        }
        Ok(self.get(self.rows - 1, 0).sides().bottom())
    }

    /// Number of connection points lying on the outer boundary.
    pub fn boundary_connection_points(&self) -> usize {
        let last_row = self.rows - 1;
        let last_col = self.cols - 1;
        let horizontal: usize = (0..self.cols)
            .map(|c| self.get(0, c).sides().top() as usize + self.get(last_row, c).sides().bottom() as usize)
            .sum();
        let vertical: usize = (0..self.rows)
            .map(|r| self.get(r, 0).sides().left() as usize + self.get(r, last_col).sides().right() as usize)
            .sum();
        horizontal + vertical
    }
}

pub fn is_suitably_connected(mosaic: &Mosaic) -> bool {
    mosaic.is_suitably_connected()
}

pub fn is_knot_mosaic(mosaic: &Mosaic) -> bool {
    mosaic.is_knot_mosaic()
}

pub fn l_state(mosaic: &Mosaic) -> BoundaryState {
    mosaic.l_state()
}

pub fn r_state(mosaic: &Mosaic) -> BoundaryState {
    mosaic.r_state()
}

pub fn has_bottom_cp(column: &Mosaic) -> Result<bool> {
    column.has_bottom_cp()
}

impl fmt::Display for Mosaic {
    /// Writes the `mosaic v1` document, newline terminated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{HEADER}")?;
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|t| t.id().to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Mosaic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .collect();
        let end = lines
            .iter()
            .rposition(|(_, l)| !l.is_empty())
            .map_or(0, |i| i + 1);
        parse_document(&lines[..end])
    }
}

fn parse_document(lines: &[(usize, &str)]) -> Result<Mosaic> {
    let mut it = lines.iter();
    match it.next() {
        Some((_, l)) if *l == HEADER => {}
        Some((n, l)) => return Err(Error::parse(*n, format!("expected `{HEADER}`, found `{l}`"))),
        None => return Err(Error::parse(1, "empty document")),
    }
    let (dim_line, dims) = it
        .next()
        .ok_or_else(|| Error::parse(lines[0].0 + 1, "missing dimension line"))?;
    let dims: Vec<usize> = dims
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::parse(*dim_line, format!("bad dimension `{t}`"))))
        .collect::<Result<_>>()?;
    let [rows, cols] = dims[..] else {
        return Err(Error::parse(*dim_line, "expected `<rows> <cols>`"));
    };
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidDimensions { rows, cols });
    }
    let body: Vec<&(usize, &str)> = it.collect();
    if body.len() != rows {
        return Err(Error::parse(
            *dim_line,
            format!("expected {rows} tile rows, found {}", body.len()),
        ));
    }
    let mut cells = Vec::with_capacity(rows * cols);
    for (line_no, line) in body {
        let row: Vec<&str> = line.split_whitespace().collect();
        if row.len() != cols {
            return Err(Error::parse(*line_no, format!("expected {cols} tiles, found {}", row.len())));
        }
        for tok in row {
            let id: u32 = tok
                .parse()
                .map_err(|_| Error::parse(*line_no, format!("bad tile id `{tok}`")))?;
            cells.push(Tile::new(id).map_err(|e| Error::parse(*line_no, e.to_string()))?);
        }
    }
    Mosaic::new(rows, cols, cells)
}

/// Parses a stream of `mosaic v1` documents separated by blank lines.
pub fn parse_documents(s: &str) -> Result<Vec<Mosaic>> {
    let mut docs = Vec::new();
    let mut current: Vec<(usize, &str)> = Vec::new();
    for (i, line) in s.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            if !current.is_empty() {
                docs.push(parse_document(&current)?);
                current.clear();
            }
        } else {
            current.push((i + 1, line));
        }
    }
    if !current.is_empty() {
        docs.push(parse_document(&current)?);
    }
    Ok(docs)
}

/// Writes documents separated by a blank line.
pub fn write_documents<'a, W, I>(out: &mut W, mosaics: I) -> std::io::Result<()>
where
    W: std::io::Write + ?Sized,
    I: IntoIterator<Item = &'a Mosaic>,
{
    for (i, m) in mosaics.into_iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        write!(out, "{m}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u32]]) -> Mosaic {
        Mosaic::from_ids(rows).unwrap()
    }

    #[test]
    fn suitably_connected_examples() {
        for id in 0..11 {
            assert!(m(&[&[id]]).is_suitably_connected());
        }
        assert!(m(&[&[5, 4]]).is_suitably_connected());
        assert!(!m(&[&[5, 6]]).is_suitably_connected());
        // vertical mismatch: T_5 has no bottom, T_6 has a top
        assert!(!m(&[&[5], &[6]]).is_suitably_connected());
    }

    #[test]
    fn knot_mosaic_examples() {
        assert!(m(&[&[0]]).is_knot_mosaic());
        assert!(!m(&[&[9]]).is_knot_mosaic());
        assert!(m(&[&[2, 1], &[3, 4]]).is_knot_mosaic());
        assert!(m(&[&[0, 0], &[0, 0]]).is_knot_mosaic());
        assert!(!m(&[&[2, 1], &[6, 6]]).is_knot_mosaic());
    }

    #[test]
    fn boundary_states() {
        let t4 = m(&[&[4]]);
        assert_eq!(t4.l_state().to_string(), "o");
        assert_eq!(t4.r_state().to_string(), "x");
        let col = m(&[&[5], &[0]]);
        assert_eq!(col.l_state().to_string(), "ox");
        assert_eq!(col.r_state().to_string(), "ox");
        let blank = Mosaic::filled(3, 4, Tile::BLANK).unwrap();
        assert!(blank.l_state().is_all_x() && blank.r_state().is_all_x());
    }

    #[test]
    fn bottom_connection_point() {
        assert!(!m(&[&[0]]).has_bottom_cp().unwrap());
        assert!(m(&[&[6]]).has_bottom_cp().unwrap());
        assert!(m(&[&[5], &[2]]).has_bottom_cp().unwrap());
        assert_eq!(m(&[&[5, 4]]).has_bottom_cp(), Err(Error::NotAColumn(2)));
    }

    #[test]
    fn degenerate_dimensions_rejected() {
        assert_eq!(
            Mosaic::new(0, 3, vec![]),
            Err(Error::InvalidDimensions { rows: 0, cols: 3 })
        );
        assert!(Mosaic::new(2, 2, vec![Tile::BLANK; 3]).is_err());
    }

    #[test]
    fn text_format() {
        let circle = m(&[&[2, 1], &[3, 4]]);
        let text = circle.to_string();
        assert_eq!(text, "mosaic v1\n2 2\n2 1\n3 4\n");
        assert_eq!(text.parse::<Mosaic>().unwrap(), circle);
    }

    #[test]
    fn parser_rejects_bad_input() {
        assert!("mosaic v2\n1 1\n0\n".parse::<Mosaic>().is_err());
        assert!("mosaic v1\n1 1\n11\n".parse::<Mosaic>().is_err());
        assert!("mosaic v1\n1 2\n0\n".parse::<Mosaic>().is_err());
        assert!("mosaic v1\n2 1\n0\n".parse::<Mosaic>().is_err());
        assert!("mosaic v1\n0 1\n".parse::<Mosaic>().is_err());
        assert!("mosaic v1\n1 1\n0\n\nmosaic v1\n1 1\n0\n".parse::<Mosaic>().is_err());
    }

    #[test]
    fn multi_document_stream() {
        let docs = vec![m(&[&[0]]), m(&[&[2, 1], &[3, 4]])];
        let mut out = Vec::new();
        write_documents(&mut out, &docs).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(parse_documents(&text).unwrap(), docs);
    }

    #[test]
    fn submosaic_extracts_block() {
        let big = m(&[&[0, 0, 0], &[0, 9, 0], &[0, 0, 0]]);
        assert_eq!(big.submosaic(1, 1, 1, 1).unwrap(), m(&[&[9]]));
        assert!(big.submosaic(2, 2, 2, 1).is_err());
    }
}
