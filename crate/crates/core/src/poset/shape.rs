//! The catalogue of lattice shapes that occur as orbit-closure posets of
//! spherical double flag varieties, and recognition by exact isomorphism.
//!
//! A ladder consists of two chains `up_1 < ... < up_m` and `lo_1 < ... < lo_m`
//! joined by the diagonal covers `up_k < lo_{k+1}`. The four ladder families
//! differ only in how the ladder is capped:
//!
//! | family | below the ladder          | above the ladder        |
//! |--------|---------------------------|-------------------------|
//! | A      | stem `tau0 < w`           | merge node, then `w0`   |
//! | B      | stem `tau0 < w`           | `w0` directly           |
//! | C      | `tau0` splits immediately | merge node, then `w0`   |
//! | D      | `tau0` splits immediately | `w0` directly           |
//!
//! `m` is the number of rungs, i.e. the number of elements on each side.

use std::fmt;

use serde::Serialize;

use super::{are_isomorphic, FinitePoset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ShapeFamily {
    Point,
    Chain,
    StretchedDiamond,
    LadderA,
    LadderB,
    LadderC,
    LadderD,
}

impl fmt::Display for ShapeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A catalogue shape with its size parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "String")]
pub enum ShapeClass {
    Point,
    /// Total order on `k` elements.
    Chain(usize),
    /// Six elements: a chain with one two-element antichain inserted.
    StretchedDiamond,
    LadderA(usize),
    LadderB(usize),
    LadderC(usize),
    LadderD(usize),
}

impl ShapeClass {
    pub fn family(&self) -> ShapeFamily {
        match self {
            ShapeClass::Point => ShapeFamily::Point,
            ShapeClass::Chain(_) => ShapeFamily::Chain,
            ShapeClass::StretchedDiamond => ShapeFamily::StretchedDiamond,
            ShapeClass::LadderA(_) => ShapeFamily::LadderA,
            ShapeClass::LadderB(_) => ShapeFamily::LadderB,
            ShapeClass::LadderC(_) => ShapeFamily::LadderC,
            ShapeClass::LadderD(_) => ShapeFamily::LadderD,
        }
    }

    /// Number of elements of the template.
    pub fn size(&self) -> usize {
        match *self {
            ShapeClass::Point => 1,
            ShapeClass::Chain(k) => k,
            ShapeClass::StretchedDiamond => 6,
            ShapeClass::LadderA(m) => 2 * m + 4,
            ShapeClass::LadderB(m) | ShapeClass::LadderC(m) => 2 * m + 3,
            ShapeClass::LadderD(m) => 2 * m + 2,
        }
    }

    /// The shape as an explicit poset with descriptive labels.
    pub fn template(&self) -> FinitePoset<String> {
        match *self {
            ShapeClass::Point => labelled(vec!["tau0".into()], vec![]),
            ShapeClass::Chain(k) => {
                assert!(k >= 1, "Chain(0) is not a shape");
                labelled(
                    (0..k).map(|i| format!("c{i}")).collect(),
                    (1..k).map(|i| (i - 1, i)).collect(),
                )
            }
            ShapeClass::StretchedDiamond => labelled(
                (0..6).map(|i| format!("tau{i}")).collect(),
                vec![(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)],
            ),
            ShapeClass::LadderA(m) => ladder(m, true, true),
            ShapeClass::LadderB(m) => ladder(m, true, false),
            ShapeClass::LadderC(m) => ladder(m, false, true),
            ShapeClass::LadderD(m) => ladder(m, false, false),
        }
    }

    /// Candidate shapes of a given size, in precedence order.
    fn candidates(size: usize) -> Vec<ShapeClass> {
        let mut out = Vec::new();
        if size == 1 {
            out.push(ShapeClass::Point);
        }
        if size >= 1 {
            out.push(ShapeClass::Chain(size));
        }
        if size == 6 {
            out.push(ShapeClass::StretchedDiamond);
        }
        if size >= 6 && size.is_multiple_of(2) {
            out.push(ShapeClass::LadderA((size - 4) / 2));
        }
        if size >= 5 && size % 2 == 1 {
            out.push(ShapeClass::LadderB((size - 3) / 2));
            out.push(ShapeClass::LadderC((size - 3) / 2));
        }
        if size >= 4 && size.is_multiple_of(2) {
            out.push(ShapeClass::LadderD((size - 2) / 2));
        }
        out
    }
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeClass::Point => f.write_str("Point"),
            ShapeClass::Chain(k) => write!(f, "Chain({k})"),
            ShapeClass::StretchedDiamond => f.write_str("StretchedDiamond"),
            ShapeClass::LadderA(m) => write!(f, "LadderA({m})"),
            ShapeClass::LadderB(m) => write!(f, "LadderB({m})"),
            ShapeClass::LadderC(m) => write!(f, "LadderC({m})"),
            ShapeClass::LadderD(m) => write!(f, "LadderD({m})"),
        }
    }
}

impl From<ShapeClass> for String {
    fn from(s: ShapeClass) -> String {
        s.to_string()
    }
}

fn labelled(elements: Vec<String>, covers: Vec<(usize, usize)>) -> FinitePoset<String> {
    FinitePoset::from_generating_pairs(elements, covers).expect("templates are acyclic")
}

fn ladder(m: usize, stem: bool, merge: bool) -> FinitePoset<String> {
    assert!(m >= 1, "a ladder needs at least one rung");
    let mut names = vec!["tau0".to_string()];
    let mut covers = Vec::new();
    let base = if stem {
        names.push("w".into());
        covers.push((0, 1));
        1
    } else {
        0
    };
    let first_rung = base + 1;
    let up = |k: usize| first_rung + 2 * (k - 1);
    let lo = |k: usize| up(k) + 1;
    for k in 1..=m {
        names.push(format!("up{k}"));
        names.push(format!("lo{k}"));
    }
    covers.push((base, up(1)));
    covers.push((base, lo(1)));
    for k in 1..m {
        covers.push((up(k), up(k + 1)));
        covers.push((lo(k), lo(k + 1)));
        covers.push((up(k), lo(k + 1)));
    }
    let top_side = names.len();
    if merge {
        names.push("merge".into());
        names.push("w0".into());
        covers.extend([
            (up(m), top_side),
            (lo(m), top_side),
            (top_side, top_side + 1),
        ]);
    } else {
        names.push("w0".into());
        covers.extend([(up(m), top_side), (lo(m), top_side)]);
    }
    labelled(names, covers)
}

/// Every catalogue shape isomorphic to `p`, most specific first
/// (`Point > Chain > StretchedDiamond > LadderA > LadderB > LadderC > LadderD`).
pub fn matching_shapes<T>(p: &FinitePoset<T>) -> Vec<ShapeClass> {
    if p.len() > super::DEFAULT_ISO_CAP {
        return Vec::new();
    }
    ShapeClass::candidates(p.len())
        .into_iter()
        .filter(|shape| {
            let template = shape.template();
            are_isomorphic(p, &template).expect("catalogue shapes stay below the cap")
        })
        .collect()
}

/// The highest-precedence catalogue shape isomorphic to `p`, or `None` when
/// `p` is not in the catalogue.
pub fn classify_shape<T>(p: &FinitePoset<T>) -> Option<ShapeClass> {
    matching_shapes(p).into_iter().next()
}
