//! Triangle-free 3-colorings of K16.
//!
//! Two routes: the finite-field coloring, where `{u, w}` takes the color of
//! the cubic-residue coset containing `u + w`, and the hub-and-blocks
//! ("cylinder") layout, whose cross edges are recovered by backtracking.

use std::fmt;

use crate::color::{Color, ColorPerm};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::gf16::Gf16;
use crate::template::{ColoringTemplate, Domain};

/// The three cosets of the cubic residues in GF(16)*.
/// Class `j` is `{g^(3k+j) : k = 0..5}` for `g = x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueClasses {
    pub classes: [Vec<Gf16>; 3],
    /// `class_of[a]` for nonzero `a`; entry 0 is unused.
    class_of: [u8; 16],
}

impl ResidueClasses {
    pub fn class_of(&self, a: Gf16) -> Option<usize> {
        (a != Gf16::ZERO).then(|| self.class_of[a.bits() as usize] as usize)
    }

    /// No two distinct members of a class sum to a member of the same class.
    pub fn is_sum_free(&self, class: usize) -> bool {
        let members = &self.classes[class];
        members.iter().enumerate().all(|(i, &a)| {
            members[i + 1..].iter().all(|&b| !members.contains(&(a + b)))
        })
    }
}

pub fn cubic_classes() -> ResidueClasses {
    let mut classes: [Vec<Gf16>; 3] = Default::default();
    let mut class_of = [0u8; 16];
    let mut power = Gf16::ONE;
    for e in 0..15 {
        classes[e % 3].push(power);
        class_of[power.bits() as usize] = (e % 3) as u8;
        power = power * Gf16::GENERATOR;
    }
    ResidueClasses { classes, class_of }
}

/// K16 on the field elements: `{u, w}` gets color `class(u + w)` with
/// classes 0, 1, 2 mapped to Blue, Red, Yellow.
pub fn construct_gf16() -> EdgeColoring {
    let classes = cubic_classes();
    EdgeColoring::from_fn(16, |u, w| {
        let sum = Gf16::new(u as u8).unwrap() + Gf16::new(w as u8).unwrap();
        Color::ALL[classes.class_of(sum).expect("distinct vertices have nonzero sum")]
    })
    .expect("16 vertices")
}

/// Vertex roles of the hub-and-blocks K16: `O` is vertex 0, `A1..A5` are
/// 1..=5, `B1..B5` are 6..=10 and `C1..C5` are 11..=15.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CylinderLabel {
    O,
    A(u8),
    B(u8),
    C(u8),
}

impl CylinderLabel {
    pub fn vertex(self) -> usize {
        match self {
            CylinderLabel::O => 0,
            CylinderLabel::A(i) => i as usize,
            CylinderLabel::B(i) => 5 + i as usize,
            CylinderLabel::C(i) => 10 + i as usize,
        }
    }

    pub fn of_vertex(v: usize) -> Result<CylinderLabel> {
        match v {
            0 => Ok(CylinderLabel::O),
            1..=5 => Ok(CylinderLabel::A(v as u8)),
            6..=10 => Ok(CylinderLabel::B((v - 5) as u8)),
            11..=15 => Ok(CylinderLabel::C((v - 10) as u8)),
            _ => Err(Error::VertexOutOfRange { v, n: 16 }),
        }
    }
}

impl fmt::Display for CylinderLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CylinderLabel::O => write!(f, "O"),
            CylinderLabel::A(i) => write!(f, "A{i}"),
            CylinderLabel::B(i) => write!(f, "B{i}"),
            CylinderLabel::C(i) => write!(f, "C{i}"),
        }
    }
}

/// Spoke color, block palette and label constructor.
type Group = (Color, [Color; 2], fn(u8) -> CylinderLabel);

const GROUPS: [Group; 3] = [
    (Color::Blue, [Color::Red, Color::Yellow], CylinderLabel::A),
    (Color::Red, [Color::Yellow, Color::Blue], CylinderLabel::B),
    (Color::Yellow, [Color::Blue, Color::Red], CylinderLabel::C),
];

/// Hub-and-blocks template on 16 vertices.
///
/// Spokes `O-A*`, `O-B*`, `O-C*` are fixed Blue, Red, Yellow. The blocks on
/// `{A*}`, `{B*}`, `{C*}` are two-colored with {Red, Yellow}, {Yellow, Blue},
/// {Blue, Red}. Cross edges `Ai-Bj` are free; `Bi-Cj` is coupled to
/// `sigma(Ai-Bj)` and `Ci-Aj` to `sigma^2(Ai-Bj)`.
pub fn cylinder_template() -> ColoringTemplate {
    use CylinderLabel::*;
    let mut t = ColoringTemplate::unconstrained(16).expect("16 vertices");
    let v = |l: CylinderLabel| l.vertex();
    for (spoke, block, label) in GROUPS {
        for i in 1..=5 {
            t.set_domain(0, v(label(i)), Domain::single(spoke)).unwrap();
            for j in i + 1..=5 {
                t.set_domain(v(label(i)), v(label(j)), Domain::of(&block).unwrap()).unwrap();
            }
        }
    }
    let sigma2 = ColorPerm::SIGMA.then(&ColorPerm::SIGMA);
    for i in 1..=5 {
        for j in 1..=5 {
            let ab = (v(A(i)), v(B(j)));
            t.couple(ab, (v(B(i)), v(C(j))), ColorPerm::SIGMA).unwrap();
            t.couple(ab, (v(C(i)), v(A(j))), sigma2).unwrap();
        }
    }
    t
}

/// The canonical (first-found) completion of [`cylinder_template`].
pub fn construct_cylinder() -> EdgeColoring {
    cylinder_template()
        .solve(1)
        .expect("16 vertices fit the bit rows")
        .into_iter()
        .next()
        .expect("the hub-and-blocks template is satisfiable")
}
