//! Order-isomorphism of small posets by backtracking over invariant classes.

use super::FinitePoset;
use crate::{Error, Result};

/// Largest poset [`are_isomorphic`] will search.
pub const DEFAULT_ISO_CAP: usize = 10_000;

pub fn are_isomorphic<A, B>(p: &FinitePoset<A>, q: &FinitePoset<B>) -> Result<bool> {
    are_isomorphic_capped(p, q, DEFAULT_ISO_CAP)
}

pub fn are_isomorphic_capped<A, B>(
    p: &FinitePoset<A>,
    q: &FinitePoset<B>,
    cap: usize,
) -> Result<bool> {
    Ok(find_isomorphism_capped(p, q, cap)?.is_some())
}

/// An order isomorphism `p → q` as a vector `phi` with `phi[a]` the image of `a`.
pub fn find_isomorphism<A, B>(
    p: &FinitePoset<A>,
    q: &FinitePoset<B>,
) -> Result<Option<Vec<usize>>> {
    find_isomorphism_capped(p, q, DEFAULT_ISO_CAP)
}

fn find_isomorphism_capped<A, B>(
    p: &FinitePoset<A>,
    q: &FinitePoset<B>,
    cap: usize,
) -> Result<Option<Vec<usize>>> {
    let size = p.len().max(q.len());
    if size > cap {
        return Err(Error::ResourceLimit {
            what: "poset size",
            requested: size,
            cap,
        });
    }
    if p.len() != q.len() || p.covers().len() != q.covers().len() {
        return Ok(None);
    }
    let inv_p = invariants(p);
    let inv_q = invariants(q);
    let mut sorted_p = inv_p.clone();
    let mut sorted_q = inv_q.clone();
    sorted_p.sort_unstable();
    sorted_q.sort_unstable();
    if sorted_p != sorted_q {
        return Ok(None);
    }

    // map p's elements bottom-up, rarest invariant class first within a rank
    let mut order: Vec<usize> = (0..p.len()).collect();
    let class_size = |inv: &Invariant| sorted_p.iter().filter(|x| *x == inv).count();
    order.sort_by_key(|&a| (inv_p[a].rank, class_size(&inv_p[a]), a));

    let mut search = Search {
        p,
        q,
        inv_p: &inv_p,
        inv_q: &inv_q,
        order: &order,
        phi: vec![usize::MAX; p.len()],
        used: vec![false; q.len()],
    };
    Ok(search.extend(0).then_some(search.phi))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Invariant {
    rank: usize,
    corank: usize,
    lower_covers: usize,
    upper_covers: usize,
    below: usize,
    above: usize,
}

fn invariants<T>(p: &FinitePoset<T>) -> Vec<Invariant> {
    let ranks = p.ranks();
    let coranks = coranks(p);
    (0..p.len())
        .map(|a| Invariant {
            rank: ranks[a],
            corank: coranks[a],
            lower_covers: p.lower_covers(a).len(),
            upper_covers: p.upper_covers(a).len(),
            below: p.down_set_size(a),
            above: p.up_set_size(a),
        })
        .collect()
}

// longest chain starting at each element
fn coranks<T>(p: &FinitePoset<T>) -> Vec<usize> {
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&a| p.up_set_size(a));
    let mut corank = vec![0usize; p.len()];
    for &a in &order {
        corank[a] = p
            .upper_covers(a)
            .into_iter()
            .map(|b| corank[b] + 1)
            .max()
            .unwrap_or(0);
    }
    corank
}

struct Search<'a, A, B> {
    p: &'a FinitePoset<A>,
    q: &'a FinitePoset<B>,
    inv_p: &'a [Invariant],
    inv_q: &'a [Invariant],
    order: &'a [usize],
    phi: Vec<usize>,
    used: Vec<bool>,
}

impl<A, B> Search<'_, A, B> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let a = self.order[depth];
        for b in 0..self.q.len() {
            if self.used[b] || self.inv_q[b] != self.inv_p[a] || !self.consistent(a, b, depth) {
                continue;
            }
            self.phi[a] = b;
            self.used[b] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[b] = false;
            self.phi[a] = usize::MAX;
        }
        false
    }

    fn consistent(&self, a: usize, b: usize, depth: usize) -> bool {
        self.order[..depth].iter().all(|&x| {
            let y = self.phi[x];
            self.p.leq(x, a) == self.q.leq(y, b) && self.p.leq(a, x) == self.q.leq(b, y)
        })
    }
}
