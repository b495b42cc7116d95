//! Permutations of `{1, ..., n+1}` in one-line notation and subsets of the
//! simple reflections `s_1, ..., s_n`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest degree [`enumerate`] accepts without an explicit cap.
pub const DEFAULT_DEGREE_CAP: usize = 8;

/// Highest rank a [`GenSet`] can hold (one bit per generator).
pub const MAX_RANK: usize = 63;

/// An element of `S_{n+1}` stored as its 1-based one-line word `w_1 ... w_{n+1}`.
///
/// `Ord` is the lexicographic order on one-line words; all sets of
/// permutations returned by this crate are sorted by it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from a 1-based one-line word.
    pub fn new(word: &[usize]) -> Result<Self> {
        let degree = word.len();
        if degree == 0 {
            return Err(Error::InvalidDegree(0));
        }
        if degree > u8::MAX as usize {
            return Err(Error::ResourceLimit {
                what: "degree",
                requested: degree,
                cap: u8::MAX as usize,
            });
        }
        let mut seen = vec![false; degree];
        for &x in word {
            if x == 0 || x > degree || seen[x - 1] {
                return Err(Error::NotAPermutation(format!("{word:?}")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation {
            word: word.iter().map(|&x| x as u8).collect(),
        })
    }

    pub fn identity(degree: usize) -> Result<Self> {
        check_degree(degree)?;
        Ok(Permutation {
            word: (1..=degree as u8).collect(),
        })
    }

    /// `w_0 = n+1 n ... 1`, the unique element of maximal length.
    pub fn longest_element(degree: usize) -> Result<Self> {
        check_degree(degree)?;
        Ok(Permutation {
            word: (1..=degree as u8).rev().collect(),
        })
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn simple_reflection(degree: usize, i: usize) -> Result<Self> {
        check_degree(degree)?;
        if i == 0 || i >= degree {
            return Err(Error::GeneratorOutOfRange {
                index: i,
                rank: degree - 1,
            });
        }
        let mut w = Permutation::identity(degree)?;
        w.word.swap(i - 1, i);
        Ok(w)
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    /// Number of simple reflections, `n = degree - 1`.
    pub fn rank(&self) -> usize {
        self.word.len() - 1
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.word.iter().map(|&x| x as usize).collect()
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(k, &x)| x as usize == k + 1)
    }

    /// `(u ∘ v)(i) = u(v(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_same_degree(other)?;
        Ok(Permutation {
            word: other
                .word
                .iter()
                .map(|&x| self.word[x as usize - 1])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0u8; self.word.len()];
        for (k, &x) in self.word.iter().enumerate() {
            word[x as usize - 1] = (k + 1) as u8;
        }
        Permutation { word }
    }

    /// Coxeter length, counted as the number of inversions `i < j, w_i > w_j`.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut inversions = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inversions += 1;
                }
            }
        }
        inversions
    }

    /// `w s_i`: swaps the entries in positions `i` and `i+1`.
    pub fn mul_simple_right(&self, i: usize) -> Permutation {
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Permutation { word }
    }

    /// `s_i w`: swaps the values `i` and `i+1`.
    pub fn mul_simple_left(&self, i: usize) -> Permutation {
        let (a, b) = (i as u8, i as u8 + 1);
        Permutation {
            word: self
                .word
                .iter()
                .map(|&x| {
                    if x == a {
                        b
                    } else if x == b {
                        a
                    } else {
                        x
                    }
                })
                .collect(),
        }
    }

    /// `w t_{ab}`: swaps the entries in positions `a` and `b` (1-based).
    pub fn swap_positions(&self, a: usize, b: usize) -> Permutation {
        let mut word = self.word.clone();
        word.swap(a - 1, b - 1);
        Permutation { word }
    }

    /// `w_0 w w_0`, the image under the diagram automorphism `s_i ↦ s_{n+1-i}`.
    pub fn conjugate_by_longest(&self) -> Permutation {
        let m = self.word.len() as u8 + 1;
        Permutation {
            word: self.word.iter().rev().map(|&x| m - x).collect(),
        }
    }

    /// `Des_R(w) = {i : w_i > w_{i+1}}`.
    pub fn right_descents(&self) -> GenSet {
        let mut set = GenSet::empty(self.rank());
        for i in 1..self.word.len() {
            if self.word[i - 1] > self.word[i] {
                set.bits |= 1 << i;
            }
        }
        set
    }

    /// `Asc_R(w) = {i : ℓ(w s_i) > ℓ(w)}`, the complement of the right descents.
    pub fn right_ascents(&self) -> GenSet {
        self.right_descents().complement()
    }

    /// `Asc_L(w) = Asc_R(w⁻¹)`.
    pub fn left_ascents(&self) -> GenSet {
        self.inverse().right_ascents()
    }

    pub fn left_descents(&self) -> GenSet {
        self.inverse().right_descents()
    }

    fn check_same_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }
}

fn check_degree(degree: usize) -> Result<()> {
    if degree == 0 {
        return Err(Error::InvalidDegree(degree));
    }
    if degree > u8::MAX as usize {
        return Err(Error::ResourceLimit {
            what: "degree",
            requested: degree,
            cap: u8::MAX as usize,
        });
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.word.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses a whitespace-separated one-line word such as `"2 1 6 5 4 3"`.
    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(&word)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(&word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(w: Permutation) -> Self {
        w.to_vec()
    }
}

/// A subset of the simple reflections `{1, ..., n}` (printed by index).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "Vec<usize>")]
pub struct GenSet {
    rank: usize,
    // bit i set <=> s_i is a member; bit 0 unused
    bits: u64,
}

impl GenSet {
    pub fn empty(rank: usize) -> Self {
        assert!(rank <= MAX_RANK, "rank {rank} exceeds {MAX_RANK}");
        GenSet { rank, bits: 0 }
    }

    /// All of `{1, ..., rank}`.
    pub fn full(rank: usize) -> Self {
        GenSet::empty(rank).complement()
    }

    pub fn new(rank: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        if rank > MAX_RANK {
            return Err(Error::ResourceLimit {
                what: "rank",
                requested: rank,
                cap: MAX_RANK,
            });
        }
        let mut set = GenSet::empty(rank);
        for i in members {
            if i == 0 || i > rank {
                return Err(Error::GeneratorOutOfRange { index: i, rank });
            }
            set.bits |= 1 << i;
        }
        Ok(set)
    }

    /// Every subset of `{1, ..., rank}`, ordered by bitmask.
    pub fn all_subsets(rank: usize) -> impl Iterator<Item = GenSet> {
        assert!(rank <= 20, "refusing to list 2^{rank} subsets");
        (0u64..1 << rank).map(move |mask| GenSet {
            rank,
            bits: mask << 1,
        })
    }

    /// Parses `"{2,4}"`, `"{}"` (braces optional) against the given rank.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .unwrap_or(t);
        let members = inner
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad generator index {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        GenSet::new(rank, members)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.rank && self.bits & (1 << i) != 0
    }

    pub fn complement(&self) -> GenSet {
        let all = if self.rank == 0 {
            0
        } else {
            ((1u64 << self.rank) - 1) << 1
        };
        GenSet {
            rank: self.rank,
            bits: all & !self.bits,
        }
    }

    pub fn is_subset(&self, other: &GenSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.rank).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &GenSet) -> GenSet {
        GenSet {
            rank: self.rank,
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &GenSet) -> GenSet {
        GenSet {
            rank: self.rank,
            bits: self.bits & other.bits,
        }
    }

    /// Image under `i ↦ n+1-i`.
    pub fn reversed(&self) -> GenSet {
        let mut out = GenSet::empty(self.rank);
        for i in self.iter() {
            out.bits |= 1 << (self.rank + 1 - i);
        }
        out
    }

    /// Sizes of the blocks `{1..n+1}` splits into when only the members glue
    /// neighbours together; `W_S` is the product of the symmetric groups on them.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![1];
        for i in 1..=self.rank {
            if self.contains(i) {
                *sizes.last_mut().unwrap() += 1;
            } else {
                sizes.push(1);
            }
        }
        sizes
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<GenSet> for Vec<usize> {
    fn from(s: GenSet) -> Self {
        s.to_vec()
    }
}

/// Lexicographic enumeration of `S_degree`.
pub struct Enumeration {
    next: Option<Vec<u8>>,
}

impl Iterator for Enumeration {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { word: current })
    }
}

pub(crate) fn next_permutation<T: Ord>(w: &mut [T]) -> bool {
    let Some(pivot) = w.windows(2).rposition(|p| p[0] < p[1]) else {
        return false;
    };
    let succ = w.iter().rposition(|x| *x > w[pivot]).unwrap();
    w.swap(pivot, succ);
    w[pivot + 1..].reverse();
    true
}

/// All permutations of the given degree in lexicographic order, refusing
/// degrees above [`DEFAULT_DEGREE_CAP`].
pub fn enumerate(degree: usize) -> Result<Enumeration> {
    enumerate_capped(degree, DEFAULT_DEGREE_CAP)
}

pub fn enumerate_capped(degree: usize, cap: usize) -> Result<Enumeration> {
    check_degree(degree)?;
    if degree > cap {
        return Err(Error::ResourceLimit {
            what: "degree",
            requested: degree,
            cap,
        });
    }
    Ok(Enumeration {
        next: Some((1..=degree as u8).collect()),
    })
}

/// A fully enumerated `S_degree` with an element index, shared by the
/// brute-force constructions in [`crate::parabolic`] and [`crate::weights`].
#[derive(Debug, Clone)]
pub struct SymmetricGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl SymmetricGroup {
    pub fn new(degree: usize) -> Result<Self> {
        SymmetricGroup::with_cap(degree, DEFAULT_DEGREE_CAP)
    }

    pub fn with_cap(degree: usize, cap: usize) -> Result<Self> {
        let elements: Vec<_> = enumerate_capped(degree, cap)?.collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k))
            .collect();
        Ok(SymmetricGroup {
            degree,
            elements,
            index,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.degree - 1
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, w: &Permutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree).unwrap()
    }

    pub fn longest(&self) -> Permutation {
        Permutation::longest_element(self.degree).unwrap()
    }

    pub fn full_genset(&self) -> GenSet {
        GenSet::full(self.rank())
    }
}
