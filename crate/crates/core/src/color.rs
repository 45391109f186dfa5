use std::fmt;

use crate::error::{Error, Result};

/// One of the three edge labels. The derived order (Blue < Red < Yellow) is
/// used for every deterministic tie-break in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Blue = 0,
    Red = 1,
    Yellow = 2,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Blue, Color::Red, Color::Yellow];

    #[inline]
    pub const fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub fn from_index(i: usize) -> Option<Color> {
        Color::ALL.get(i).copied()
    }

    pub const fn as_char(self) -> char {
        match self {
            Color::Blue => 'B',
            Color::Red => 'R',
            Color::Yellow => 'Y',
        }
    }

    pub fn from_char(c: char) -> Result<Color> {
        match c {
            'B' => Ok(Color::Blue),
            'R' => Ok(Color::Red),
            'Y' => Ok(Color::Yellow),
            other => Err(Error::Format(format!("bad color character {other:?}"))),
        }
    }

    /// Lower-case name, also the DOT/SVG stroke color.
    pub const fn name(self) -> &'static str {
        match self {
            Color::Blue => "blue",
            Color::Red => "red",
            Color::Yellow => "yellow",
        }
    }

    /// The first `k` colors in order.
    pub fn palette(k: usize) -> Result<&'static [Color]> {
        match k {
            2 | 3 => Ok(&Color::ALL[..k]),
            _ => Err(Error::ColorCount(k)),
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl std::str::FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Color> {
        match s {
            "B" | "b" | "blue" | "Blue" => Ok(Color::Blue),
            "R" | "r" | "red" | "Red" => Ok(Color::Red),
            "Y" | "y" | "yellow" | "Yellow" => Ok(Color::Yellow),
            _ => Err(Error::Format(format!("unknown color {s:?}"))),
        }
    }
}

/// A bijection on the three colors, stored as its image table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColorPerm([Color; 3]);

impl ColorPerm {
    pub const IDENTITY: ColorPerm = ColorPerm(Color::ALL);

    /// Red -> Yellow -> Blue -> Red.
    pub const SIGMA: ColorPerm = ColorPerm([Color::Red, Color::Yellow, Color::Blue]);

    /// Builds a permutation from the images of Blue, Red, Yellow.
    pub fn new(images: [Color; 3]) -> Result<ColorPerm> {
        let mut seen = [false; 3];
        for c in images {
            if std::mem::replace(&mut seen[c.index()], true) {
                return Err(Error::Domain(format!("{images:?} is not a bijection")));
            }
        }
        Ok(ColorPerm(images))
    }

    /// All six permutations, in lexicographic order of image tables.
    pub fn all() -> [ColorPerm; 6] {
        use Color::*;
        [
            ColorPerm([Blue, Red, Yellow]),
            ColorPerm([Blue, Yellow, Red]),
            ColorPerm([Red, Blue, Yellow]),
            ColorPerm([Red, Yellow, Blue]),
            ColorPerm([Yellow, Blue, Red]),
            ColorPerm([Yellow, Red, Blue]),
        ]
    }

    #[inline]
    pub fn apply(&self, c: Color) -> Color {
        self.0[c.index()]
    }

    pub fn then(&self, next: &ColorPerm) -> ColorPerm {
        ColorPerm(Color::ALL.map(|c| next.apply(self.apply(c))))
    }

    pub fn inverse(&self) -> ColorPerm {
        let mut inv = Color::ALL;
        for c in Color::ALL {
            inv[self.apply(c).index()] = c;
        }
        ColorPerm(inv)
    }
}

/// The cyclic recoloring Red -> Yellow -> Blue -> Red.
#[inline]
pub fn sigma(c: Color) -> Color {
    ColorPerm::SIGMA.apply(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_follows_cyclic_rule() {
        assert_eq!(sigma(Color::Red), Color::Yellow);
        assert_eq!(sigma(Color::Yellow), Color::Blue);
        assert_eq!(sigma(Color::Blue), Color::Red);
        for c in Color::ALL {
            assert_eq!(sigma(sigma(sigma(c))), c);
        }
    }

    #[test]
    fn order_is_blue_red_yellow() {
        assert!(Color::Blue < Color::Red && Color::Red < Color::Yellow);
    }

    #[test]
    fn perm_inverse_and_composition() {
        for p in ColorPerm::all() {
            assert_eq!(p.then(&p.inverse()), ColorPerm::IDENTITY);
        }
        let s3 = ColorPerm::SIGMA.then(&ColorPerm::SIGMA).then(&ColorPerm::SIGMA);
        assert_eq!(s3, ColorPerm::IDENTITY);
        assert!(ColorPerm::new([Color::Red, Color::Red, Color::Blue]).is_err());
    }

    #[test]
    fn char_round_trip() {
        for c in Color::ALL {
            assert_eq!(Color::from_char(c.as_char()).unwrap(), c);
        }
        assert!(Color::from_char('G').is_err());
        assert!(Color::palette(4).is_err());
    }
}
