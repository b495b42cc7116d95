//! Finite posets stored as a transitively reduced cover relation together
//! with a reflexive reachability matrix.

mod iso;
mod shape;

use std::collections::VecDeque;
use std::fmt::{Display, Write as _};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::{Error, Result};

pub use iso::{are_isomorphic, are_isomorphic_capped, find_isomorphism, DEFAULT_ISO_CAP};
pub use shape::{classify_shape, matching_shapes, ShapeClass, ShapeFamily};

#[derive(Debug, Clone)]
pub struct FinitePoset<T> {
    elements: Vec<T>,
    // sorted (lower, upper) pairs
    covers: Vec<(usize, usize)>,
    // up[a] contains b  <=>  a <= b
    up: Vec<FixedBitSet>,
}

/// Why [`FinitePoset::is_lattice`] failed: the two elements have no least
/// upper bound (or no greatest lower bound).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeFailure {
    NoJoin(usize, usize),
    NoMeet(usize, usize),
}

impl LatticeFailure {
    pub fn pair(&self) -> (usize, usize) {
        match *self {
            LatticeFailure::NoJoin(a, b) | LatticeFailure::NoMeet(a, b) => (a, b),
        }
    }
}

impl<T> FinitePoset<T> {
    /// Builds a poset from a `≤` predicate, rejecting predicates that are not
    /// reflexive, antisymmetric and transitive.
    pub fn from_relation(elements: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Result<Self> {
        let n = elements.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for a in 0..n {
            for b in 0..n {
                if leq(&elements[a], &elements[b]) {
                    up[a].insert(b);
                }
            }
        }
        for a in 0..n {
            if !up[a].contains(a) {
                return Err(Error::NotPartialOrder(format!(
                    "element {a} is not ≤ itself"
                )));
            }
            for b in up[a].ones() {
                if b != a && up[b].contains(a) {
                    return Err(Error::NotPartialOrder(format!(
                        "cycle between elements {a} and {b}"
                    )));
                }
                if !up[b].is_subset(&up[a]) {
                    return Err(Error::NotPartialOrder(format!(
                        "not transitive above elements {a} ≤ {b}"
                    )));
                }
            }
        }
        Ok(Self::from_reachability(elements, up))
    }

    /// Builds the poset generated by `pairs` (each `(a, b)` meaning `a ≤ b`),
    /// i.e. the reflexive-transitive closure. A directed cycle is an error.
    pub fn from_generating_pairs(
        elements: Vec<T>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = elements.len();
        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for (a, b) in pairs {
            assert!(
                a < n && b < n,
                "pair ({a}, {b}) out of range for {n} elements"
            );
            if a == b {
                continue;
            }
            succ[a].push(b);
            indegree[b] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&a| indegree[a] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(a) = queue.pop_front() {
            order.push(a);
            for &b in &succ[a] {
                indegree[b] -= 1;
                if indegree[b] == 0 {
                    queue.push_back(b);
                }
            }
        }
        if order.len() < n {
            return Err(Error::NotPartialOrder(
                "generating relation contains a directed cycle".into(),
            ));
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &a in order.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(a);
            for &b in &succ[a] {
                row.union_with(&up[b]);
            }
            up[a] = row;
        }
        Ok(Self::from_reachability(elements, up))
    }

    fn from_reachability(elements: Vec<T>, up: Vec<FixedBitSet>) -> Self {
        let n = elements.len();
        let mut covers = Vec::new();
        for a in 0..n {
            let mut candidates = up[a].clone();
            candidates.set(a, false);
            let strict: Vec<usize> = candidates.ones().collect();
            for &c in &strict {
                // anything strictly above some c > a is not a cover of a
                let mut above_c = up[c].clone();
                above_c.set(c, false);
                candidates.difference_with(&above_c);
            }
            covers.extend(candidates.ones().map(|b| (a, b)));
        }
        covers.sort_unstable();
        FinitePoset {
            elements,
            covers,
            up,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(x, _)| x == a)
            .map(|&(_, y)| y)
            .collect()
    }

    pub fn lower_covers(&self, b: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(_, y)| y == b)
            .map(|&(x, _)| x)
            .collect()
    }

    /// Number of elements `≥ a` (including `a`).
    pub fn up_set_size(&self, a: usize) -> usize {
        self.up[a].count_ones(..)
    }

    /// Number of elements `≤ b` (including `b`).
    pub fn down_set_size(&self, b: usize) -> usize {
        (0..self.len()).filter(|&a| self.leq(a, b)).count()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&b| (0..self.len()).all(|a| !self.lt(a, b)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| self.up_set_size(a) == 1)
            .collect()
    }

    /// The unique minimum, if there is one.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&a| self.up_set_size(a) == self.len())
    }

    /// The unique maximum, if there is one.
    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&b| (0..self.len()).all(|a| self.leq(a, b)))
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|a| (a + 1..self.len()).all(|b| self.comparable(a, b)))
    }

    /// For each element, the number of covers in a longest chain ending at it.
    pub fn ranks(&self) -> Vec<usize> {
        let n = self.len();
        // process elements by increasing down-set size: a topological order
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&b| self.down_set_size(b));
        let mut rank = vec![0usize; n];
        for &b in &order {
            rank[b] = self
                .lower_covers(b)
                .into_iter()
                .map(|a| rank[a] + 1)
                .max()
                .unwrap_or(0);
        }
        rank
    }

    /// Number of elements in a longest chain, minus one.
    pub fn height(&self) -> usize {
        self.ranks().into_iter().max().unwrap_or(0)
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice_counterexample().is_none()
    }

    /// First pair (in index order) without a join or a meet.
    pub fn lattice_counterexample(&self) -> Option<LatticeFailure> {
        let n = self.len();
        let down: Vec<FixedBitSet> = (0..n)
            .map(|b| {
                let mut row = FixedBitSet::with_capacity(n);
                row.extend((0..n).filter(|&a| self.leq(a, b)));
                row
            })
            .collect();
        let has_extreme = |bounds: &FixedBitSet, cone: &[FixedBitSet]| {
            bounds.ones().any(|c| bounds.is_subset(&cone[c]))
        };
        for a in 0..n {
            for b in a + 1..n {
                let mut upper = self.up[a].clone();
                upper.intersect_with(&self.up[b]);
                // a least upper bound is an upper bound below every other one
                if !has_extreme(&upper, &self.up) {
                    return Some(LatticeFailure::NoJoin(a, b));
                }
                let mut lower = down[a].clone();
                lower.intersect_with(&down[b]);
                if !has_extreme(&lower, &down) {
                    return Some(LatticeFailure::NoMeet(a, b));
                }
            }
        }
        None
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> FinitePoset<U> {
        FinitePoset {
            elements: self.elements.iter().map(f).collect(),
            covers: self.covers.clone(),
            up: self.up.clone(),
        }
    }

    /// DOT digraph with edges pointing from lower to upper element and one
    /// `rank=same` group per level of [`FinitePoset::ranks`].
    pub fn to_dot_with(&self, label: impl Fn(&T) -> String) -> String {
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for (i, e) in self.elements.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", escape_dot(&label(e)));
        }
        let ranks = self.ranks();
        for level in 0..=ranks.iter().copied().max().unwrap_or(0) {
            let members: Vec<String> = (0..self.len())
                .filter(|&i| ranks[i] == level)
                .map(|i| format!("n{i};"))
                .collect();
            if members.len() > 1 {
                let _ = writeln!(out, "  {{ rank=same; {} }}", members.join(" "));
            }
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }

    pub fn index_of(&self, x: &T) -> Option<usize>
    where
        T: PartialEq,
    {
        self.elements.iter().position(|e| e == x)
    }
}

impl<T: Display> FinitePoset<T> {
    pub fn to_dot(&self) -> String {
        self.to_dot_with(|e| e.to_string())
    }
}

#[derive(Serialize)]
struct PosetJson<'a, T> {
    elements: &'a [T],
    covers: Vec<[usize; 2]>,
}

impl<T: Serialize> FinitePoset<T> {
    /// `{"elements": [...], "covers": [[lower, upper], ...]}`.
    pub fn to_json(&self) -> String {
        let doc = PosetJson {
            elements: &self.elements,
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("poset serialization cannot fail")
    }
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Total order on `k` elements labelled `0..k`.
pub fn chain(k: usize) -> FinitePoset<usize> {
    FinitePoset::from_generating_pairs((0..k).collect(), (1..k).map(|i| (i - 1, i)))
        .expect("a path has no cycles")
}
