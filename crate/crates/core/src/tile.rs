//! The eleven mosaic tiles and their connection points.

use std::fmt;

use crate::error::{Error, Result};

/// An edge of a tile on which a connection point may sit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConnectionSide {
    Left,
    Right,
    Top,
    Bottom,
}

impl ConnectionSide {
    pub const ALL: [ConnectionSide; 4] = [
        ConnectionSide::Left,
        ConnectionSide::Right,
        ConnectionSide::Top,
        ConnectionSide::Bottom,
    ];

    const fn bit(self) -> u8 {
        match self {
            ConnectionSide::Left => 1,
            ConnectionSide::Right => 2,
            ConnectionSide::Top => 4,
            ConnectionSide::Bottom => 8,
        }
    }
}

/// A set of connection sides.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Sides(u8);

impl Sides {
    pub const NONE: Sides = Sides(0);
    pub const ALL: Sides = Sides(15);

    pub const fn from_flags(left: bool, right: bool, top: bool, bottom: bool) -> Sides {
        let mut bits = 0;
        if left {
            bits |= ConnectionSide::Left.bit();
        }
        if right {
            bits |= ConnectionSide::Right.bit();
        }
        if top {
            bits |= ConnectionSide::Top.bit();
        }
        if bottom {
            bits |= ConnectionSide::Bottom.bit();
        }
        Sides(bits)
    }

    pub const fn contains(self, side: ConnectionSide) -> bool {
        self.0 & side.bit() != 0
    }

    pub const fn left(self) -> bool {
        self.contains(ConnectionSide::Left)
    }

    pub const fn right(self) -> bool {
        self.contains(ConnectionSide::Right)
    }

    pub const fn top(self) -> bool {
        self.contains(ConnectionSide::Top)
    }

    pub const fn bottom(self) -> bool {
        self.contains(ConnectionSide::Bottom)
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = ConnectionSide> {
        ConnectionSide::ALL.into_iter().filter(move |&s| self.contains(s))
    }
}

impl fmt::Debug for Sides {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<ConnectionSide> for Sides {
    fn from_iter<I: IntoIterator<Item = ConnectionSide>>(iter: I) -> Self {
        Sides(iter.into_iter().fold(0, |acc, s| acc | s.bit()))
    }
}

/// One of the mosaic tiles `T_0` through `T_10`.
///
/// `T_1..T_4` are quarter arcs, `T_5`/`T_6` straight lines, `T_7`/`T_8` double
/// arcs and `T_9`/`T_10` crossings. `T_7` joins left with bottom and top with
/// right; `T_8` joins left with top and right with bottom. `T_9` has the
/// vertical strand over, `T_10` the horizontal one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tile(u8);

const SIDES: [Sides; 11] = [
    Sides::from_flags(false, false, false, false),
    Sides::from_flags(true, false, false, true),
    Sides::from_flags(false, true, false, true),
    Sides::from_flags(false, true, true, false),
    Sides::from_flags(true, false, true, false),
    Sides::from_flags(true, true, false, false),
    Sides::from_flags(false, false, true, true),
    Sides::ALL,
    Sides::ALL,
    Sides::ALL,
    Sides::ALL,
];

impl Tile {
    pub const COUNT: usize = 11;
    pub const BLANK: Tile = Tile(0);

    pub fn new(id: u32) -> Result<Tile> {
        if id < Self::COUNT as u32 {
            Ok(Tile(id as u8))
        } else {
            Err(Error::InvalidTile(id))
        }
    }

    /// # Panics
    /// If `id > 10`.
    pub const fn of(id: u8) -> Tile {
        assert!(id < 11, "tile id out of range");
        Tile(id)
    }

    pub const fn id(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = Tile> + Clone {
        (0..Self::COUNT as u8).map(Tile)
    }

    pub const fn sides(self) -> Sides {
        SIDES[self.0 as usize]
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T_{}", self.0)
    }
}

pub fn connection_points(tile: Tile) -> Sides {
    tile.sides()
}

/// All tiles whose connection points are exactly the given side pattern, in
/// ascending id order.
pub fn tiles_matching(left: bool, right: bool, top: bool, bottom: bool) -> Vec<Tile> {
    let want = Sides::from_flags(left, right, top, bottom);
    Tile::all().filter(|t| t.sides() == want).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ConnectionSide::*;

    fn set(sides: &[ConnectionSide]) -> Sides {
        sides.iter().copied().collect()
    }

    #[test]
    fn connection_point_table() {
        let expected = [
            set(&[]),
            set(&[Left, Bottom]),
            set(&[Bottom, Right]),
            set(&[Top, Right]),
            set(&[Left, Top]),
            set(&[Left, Right]),
            set(&[Top, Bottom]),
        ];
        for (id, want) in expected.iter().enumerate() {
            assert_eq!(connection_points(Tile::of(id as u8)), *want, "T_{id}");
        }
        for id in 7..=10 {
            assert_eq!(connection_points(Tile::of(id)), set(&[Left, Right, Top, Bottom]));
        }
    }

    #[test]
    fn connection_point_counts_are_even() {
        for t in Tile::all() {
            let n = t.sides().len();
            assert_eq!(n % 2, 0);
            let want = match t.id() {
                0 => 0,
                1..=6 => 2,
                _ => 4,
            };
            assert_eq!(n, want);
        }
    }

    #[test]
    fn tiles_matching_examples() {
        assert_eq!(
            tiles_matching(true, true, true, true),
            vec![Tile::of(7), Tile::of(8), Tile::of(9), Tile::of(10)]
        );
        assert_eq!(tiles_matching(false, false, false, false), vec![Tile::BLANK]);
        assert!(tiles_matching(true, false, false, false).is_empty());
    }

    #[test]
    fn tiles_matching_partitions_tiles() {
        let mut total = 0;
        let mut singles = 0;
        for bits in 0u8..16 {
            let (l, r, t, b) = (bits & 1 != 0, bits & 2 != 0, bits & 4 != 0, bits & 8 != 0);
            let found = tiles_matching(l, r, t, b);
            total += found.len();
            match (bits.count_ones() % 2, bits) {
                (1, _) => assert!(found.is_empty()),
                (_, 15) => assert_eq!(found.len(), 4),
                _ => {
                    assert_eq!(found.len(), 1);
                    singles += 1;
                }
            }
        }
        assert_eq!(total, 11);
        assert_eq!(singles, 7);
    }

    #[test]
    fn tile_ids_are_checked() {
        assert_eq!(Tile::new(10).unwrap().id(), 10);
        assert_eq!(Tile::new(11), Err(Error::InvalidTile(11)));
    }
}
