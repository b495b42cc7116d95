//! Bruhat-Chevalley order on `S_{n+1}`.
//!
//! [`leq`] uses the sorted-prefix (tableau) criterion. [`leq_subword_oracle`]
//! implements the subword definition directly and exists to cross-check it.

use std::collections::HashSet;

use serde::Serialize;

use crate::poset::FinitePoset;
use crate::symgroup::{Permutation, SymmetricGroup};
use crate::{Error, Result};

/// Default bound on `ℓ(v)` for [`leq_subword_oracle`]; `C(7, 2)` covers all of `S_7`.
pub const DEFAULT_WORD_LENGTH_CAP: usize = 21;

/// `u ≤ v` in Bruhat order.
pub fn leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    check_degrees(u, v)?;
    Ok(leq_same_degree(u, v))
}

/// `u ≤ v` for permutations already known to have equal degree: for every
/// `k`, the sorted first `k` entries of `u` are entrywise at most those of `v`.
pub(crate) fn leq_same_degree(u: &Permutation, v: &Permutation) -> bool {
    debug_assert_eq!(u.degree(), v.degree());
    let (a, b) = (u.word(), v.word());
    let mut prefix_u: Vec<u8> = Vec::with_capacity(a.len());
    let mut prefix_v: Vec<u8> = Vec::with_capacity(b.len());
    for k in 0..a.len().saturating_sub(1) {
        insert_sorted(&mut prefix_u, a[k]);
        insert_sorted(&mut prefix_v, b[k]);
        if prefix_u.iter().zip(&prefix_v).any(|(x, y)| x > y) {
            return false;
        }
    }
    true
}

fn insert_sorted(v: &mut Vec<u8>, x: u8) {
    let pos = v.partition_point(|&y| y < x);
    v.insert(pos, x);
}

pub fn lt(u: &Permutation, v: &Permutation) -> Result<bool> {
    Ok(u != v && leq(u, v)?)
}

/// A reduced word for `w`, as simple-reflection indices `[a_1, ..., a_k]` with
/// `w = s_{a_1} ... s_{a_k}`.
pub fn reduced_word(w: &Permutation) -> Vec<usize> {
    let mut rest = w.clone();
    let mut letters = Vec::with_capacity(w.length());
    while let Some(i) = rest.right_descents().iter().next() {
        letters.push(i);
        rest = rest.mul_simple_right(i);
    }
    letters.reverse();
    letters
}

/// `u ≤ v` decided by the subword property: some reduced word of `u` is a
/// subword of a reduced word of `v`. Products of reduced subwords are built
/// letter by letter, so the cost is `ℓ(v) · |[e, v]|`.
pub fn leq_subword_oracle(u: &Permutation, v: &Permutation, word_cap: usize) -> Result<bool> {
    check_degrees(u, v)?;
    let len_v = v.length();
    if len_v > word_cap {
        return Err(Error::ResourceLimit {
            what: "word length",
            requested: len_v,
            cap: word_cap,
        });
    }
    let identity = Permutation::identity(v.degree())?;
    let mut reachable: HashSet<Permutation> = HashSet::from([identity]);
    for letter in reduced_word(v) {
        let extended: Vec<Permutation> = reachable
            .iter()
            .filter(|x| x.right_ascents().contains(letter))
            .map(|x| x.mul_simple_right(letter))
            .collect();
        reachable.extend(extended);
    }
    Ok(reachable.contains(u))
}

/// Elements covering `v` in Bruhat order.
///
/// Without a universe these are the `v t` with `ℓ(v t) = ℓ(v) + 1`. With a
/// universe they are the covers of `v` in the induced subposet, which can
/// jump in length by more than one.
pub fn covers(v: &Permutation, universe: Option<&[Permutation]>) -> Vec<Permutation> {
    let mut out = match universe {
        None => {
            let len = v.length();
            let n = v.degree();
            let mut found = Vec::new();
            for a in 1..=n {
                for b in a + 1..=n {
                    if v.apply(a) < v.apply(b) {
                        let w = v.swap_positions(a, b);
                        if w.length() == len + 1 {
                            found.push(w);
                        }
                    }
                }
            }
            found
        }
        Some(universe) => {
            let above: Vec<&Permutation> = universe
                .iter()
                .filter(|w| *w != v && w.degree() == v.degree() && leq_same_degree(v, w))
                .collect();
            above
                .iter()
                .filter(|&&w| !above.iter().any(|&x| x != w && leq_same_degree(x, w)))
                .map(|&w| w.clone())
                .collect()
        }
    };
    out.sort();
    out.dedup();
    out
}

/// `[u, v] = {x : u ≤ x ≤ v}` as an induced subposet of the Bruhat order.
pub fn interval(
    group: &SymmetricGroup,
    u: &Permutation,
    v: &Permutation,
) -> Result<FinitePoset<Permutation>> {
    check_degrees(u, v)?;
    if u.degree() != group.degree() {
        return Err(Error::DegreeMismatch {
            left: u.degree(),
            right: group.degree(),
        });
    }
    if !leq_same_degree(u, v) {
        return Err(Error::EmptyInterval {
            lower: u.to_string(),
            upper: v.to_string(),
        });
    }
    let members: Vec<Permutation> = group
        .elements()
        .iter()
        .filter(|x| leq_same_degree(u, x) && leq_same_degree(x, v))
        .cloned()
        .collect();
    Ok(bruhat_poset(members))
}

/// The Bruhat order restricted to `elements` (sorted lexicographically first).
pub fn bruhat_poset(mut elements: Vec<Permutation>) -> FinitePoset<Permutation> {
    elements.sort();
    elements.dedup();
    FinitePoset::from_relation(elements, leq_same_degree)
        .expect("Bruhat order restricts to a partial order")
}

/// A comparison `lesser ≤ greater` with a saturated chain witnessing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruhatRelation {
    pub lesser: Permutation,
    pub greater: Permutation,
    /// Cover chain `lesser = c_0 < c_1 < ... < c_k = greater` in the full group.
    pub witness: Vec<Permutation>,
}

/// `Some` relation with a cover chain when `u ≤ v`, `None` otherwise.
pub fn relation(u: &Permutation, v: &Permutation) -> Result<Option<BruhatRelation>> {
    if !leq(u, v)? {
        return Ok(None);
    }
    let mut chain = vec![u.clone()];
    let mut current = u.clone();
    while current != *v {
        // Bruhat intervals are graded, so some cover of `current` stays below `v`
        current = covers(&current, None)
            .into_iter()
            .find(|w| leq_same_degree(w, v))
            .expect("graded interval has a next step");
        chain.push(current.clone());
    }
    Ok(Some(BruhatRelation {
        lesser: u.clone(),
        greater: v.clone(),
        witness: chain,
    }))
}

fn check_degrees(u: &Permutation, v: &Permutation) -> Result<()> {
    if u.degree() != v.degree() {
        return Err(Error::DegreeMismatch {
            left: u.degree(),
            right: v.degree(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::enumerate;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn s(degree: usize, i: usize) -> Permutation {
        Permutation::simple_reflection(degree, i).unwrap()
    }

    #[test]
    fn leq_examples() {
        let w0 = Permutation::longest_element(4).unwrap();
        let e = Permutation::identity(4).unwrap();
        for w in enumerate(4).unwrap() {
            assert!(leq(&e, &w).unwrap());
            assert!(leq(&w, &w0).unwrap());
        }
        assert!(leq(&p("2 1 6 5 4 3"), &p("6 2 5 1 4 3")).unwrap());
        assert!(!leq(&p("6 2 5 1 4 3"), &p("2 1 6 5 4 3")).unwrap());
        assert!(matches!(
            leq(&p("1 2"), &p("1 2 3")),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn oracle_examples() {
        let s1 = s(3, 1);
        let s121 = p("3 2 1");
        assert_eq!(reduced_word(&s121).len(), 3);
        assert!(leq_subword_oracle(&s1, &s121, DEFAULT_WORD_LENGTH_CAP).unwrap());
        assert!(!leq_subword_oracle(&s(3, 2), &s1, DEFAULT_WORD_LENGTH_CAP).unwrap());
        assert!(matches!(
            leq_subword_oracle(&s1, &s121, 2),
            Err(Error::ResourceLimit { cap: 2, .. })
        ));
    }

    #[test]
    fn reduced_words_multiply_back() {
        for w in enumerate(5).unwrap() {
            let word = reduced_word(&w);
            assert_eq!(word.len(), w.length());
            let mut x = Permutation::identity(5).unwrap();
            for i in word {
                x = x.mul_simple_right(i);
            }
            assert_eq!(x, w);
        }
    }

    #[test]
    fn oracle_agrees_exhaustively_up_to_degree_four() {
        for degree in 1..=4 {
            let all: Vec<_> = enumerate(degree).unwrap().collect();
            for u in &all {
                for v in &all {
                    assert_eq!(
                        leq(u, v).unwrap(),
                        leq_subword_oracle(u, v, DEFAULT_WORD_LENGTH_CAP).unwrap(),
                        "{u} vs {v}"
                    );
                }
            }
        }
    }

    #[test]
    fn inverse_preserves_order_on_s4() {
        let all: Vec<_> = enumerate(4).unwrap().collect();
        for u in &all {
            for v in &all {
                assert_eq!(leq(u, v).unwrap(), leq(&u.inverse(), &v.inverse()).unwrap());
            }
        }
    }

    #[test]
    fn partial_order_axioms_on_s4() {
        let all: Vec<_> = enumerate(4).unwrap().collect();
        for u in &all {
            for v in &all {
                if leq(u, v).unwrap() && leq(v, u).unwrap() {
                    assert_eq!(u, v);
                }
                if leq(u, v).unwrap() {
                    assert!(u.length() <= v.length());
                    for x in &all {
                        if leq(v, x).unwrap() {
                            assert!(leq(u, x).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cover_examples() {
        assert!(covers(&Permutation::longest_element(4).unwrap(), None).is_empty());
        assert_eq!(
            covers(&Permutation::identity(3).unwrap(), None),
            vec![p("1 3 2"), p("2 1 3")]
        );
        for w in enumerate(5).unwrap() {
            for c in covers(&w, None) {
                assert_eq!(c.length(), w.length() + 1);
                assert!(leq(&w, &c).unwrap());
            }
        }
    }

    #[test]
    fn full_group_covers_match_universe_covers() {
        let all: Vec<_> = enumerate(4).unwrap().collect();
        for w in &all {
            assert_eq!(covers(w, None), covers(w, Some(&all)));
        }
    }

    #[test]
    fn interval_examples() {
        let g = SymmetricGroup::new(3).unwrap();
        let w = p("2 3 1");
        assert_eq!(interval(&g, &w, &w).unwrap().len(), 1);
        let whole = interval(&g, &g.identity(), &g.longest()).unwrap();
        assert_eq!(whole.len(), 6);
        // s1 s2 = 2 3 1: lower interval {e, s1, s2, s1 s2}
        let s1s2 = s(3, 1).compose(&s(3, 2)).unwrap();
        let lower = interval(&g, &g.identity(), &s1s2).unwrap();
        assert_eq!(
            lower.elements(),
            &[p("1 2 3"), p("1 3 2"), p("2 1 3"), p("2 3 1")]
        );
        assert_eq!(lower.covers().len(), 4);
        assert!(matches!(
            interval(&g, &s1s2, &g.identity()),
            Err(Error::EmptyInterval { .. })
        ));
    }

    #[test]
    fn relation_witness_is_a_cover_chain() {
        let u = p("2 1 6 5 4 3");
        let v = p("6 5 4 3 2 1");
        let rel = relation(&u, &v).unwrap().unwrap();
        assert_eq!(rel.witness.len(), v.length() - u.length() + 1);
        for pair in rel.witness.windows(2) {
            assert!(covers(&pair[0], None).contains(&pair[1]));
        }
        assert!(relation(&v, &u).unwrap().is_none());
    }
}
