//! Parabolic subgroups `W_I`, double cosets `W_I \ W / W_J`, their minimal
//! (`X⁻`) and maximal (`X⁺`) representatives, and the induced Bruhat order.
//!
//! Subsets are passed as the generating sets `I`, `J` themselves; callers
//! working with complements (as the CLI does) take [`GenSet::complement`] first.

use std::collections::VecDeque;

use serde::Serialize;

use crate::bruhat::{bruhat_poset, leq_same_degree};
use crate::poset::FinitePoset;
use crate::symgroup::{GenSet, Permutation, SymmetricGroup};
use crate::{Error, Result};

/// Elements of the standard parabolic subgroup generated by `{s_i : i ∈ S}`.
pub fn parabolic_elements(degree: usize, generators: &GenSet) -> Result<Vec<Permutation>> {
    check_rank(degree, generators)?;
    let identity = Permutation::identity(degree)?;
    let mut out = orbit(identity, |w| {
        generators.iter().map(|i| w.mul_simple_right(i)).collect()
    });
    out.sort();
    Ok(out)
}

/// `X⁻_{I,J} = {w : I ⊆ Asc_L(w), J ⊆ Asc_R(w)}`.
pub fn min_representatives(
    group: &SymmetricGroup,
    left: &GenSet,
    right: &GenSet,
) -> Vec<Permutation> {
    group
        .elements()
        .iter()
        .filter(|w| is_min_representative(w, left, right))
        .cloned()
        .collect()
}

/// `X⁺_{I,J} = {w : I ⊆ Des_R(w⁻¹), J ⊆ Des_R(w)}`.
pub fn max_representatives(
    group: &SymmetricGroup,
    left: &GenSet,
    right: &GenSet,
) -> Vec<Permutation> {
    group
        .elements()
        .iter()
        .filter(|w| is_max_representative(w, left, right))
        .cloned()
        .collect()
}

pub fn is_min_representative(w: &Permutation, left: &GenSet, right: &GenSet) -> bool {
    left.is_subset(&w.left_ascents()) && right.is_subset(&w.right_ascents())
}

pub fn is_max_representative(w: &Permutation, left: &GenSet, right: &GenSet) -> bool {
    left.is_subset(&w.left_descents()) && right.is_subset(&w.right_descents())
}

/// The double coset `W_I w W_J`, sorted.
pub fn double_coset(w: &Permutation, left: &GenSet, right: &GenSet) -> Vec<Permutation> {
    let mut out = orbit(w.clone(), |x| {
        left.iter()
            .map(|i| x.mul_simple_left(i))
            .chain(right.iter().map(|j| x.mul_simple_right(j)))
            .collect()
    });
    out.sort();
    out
}

/// The minimal and maximal elements of `W_I w W_J`.
pub fn coset_of(w: &Permutation, left: &GenSet, right: &GenSet) -> (Permutation, Permutation) {
    let coset = double_coset(w, left, right);
    let min = coset.iter().min_by_key(|x| x.length()).unwrap().clone();
    let max = coset.iter().max_by_key(|x| x.length()).unwrap().clone();
    (min, max)
}

/// The unique length-additive factorization `x = u · w · v` with `w ∈ X⁻_{I,J}`,
/// `v ∈ W_J` and `u ∈ W_I` a minimal coset representative for `W_I / W_H`,
/// `H = I ∩ w J w⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub left: Permutation,
    pub middle: Permutation,
    pub right: Permutation,
    /// `H` as a set of generators of `W_I`.
    pub stabilizer: GenSet,
}

pub fn factorize(x: &Permutation, left: &GenSet, right: &GenSet) -> Result<Factorization> {
    let degree = x.degree();
    check_rank(degree, left)?;
    check_rank(degree, right)?;
    let (middle, _) = coset_of(x, left, right);
    let stabilizer = intersection_generators(&middle, left, right);
    let middle_inv = middle.inverse();
    let len = x.length();
    for u in parabolic_elements(degree, left)? {
        if !stabilizer.is_subset(&u.right_ascents()) {
            continue;
        }
        // v = w⁻¹ u⁻¹ x
        let v = middle_inv.compose(&u.inverse().compose(x)?)?;
        if is_in_parabolic(&v, right) && u.length() + middle.length() + v.length() == len {
            return Ok(Factorization {
                left: u,
                middle,
                right: v,
                stabilizer,
            });
        }
    }
    unreachable!("every element of a double coset factors uniquely")
}

/// `H = I ∩ w J w⁻¹` for `w ∈ X⁻_{I,J}`: the `i ∈ I` with `w⁻¹ s_i w = s_j`, `j ∈ J`.
fn intersection_generators(w: &Permutation, left: &GenSet, right: &GenSet) -> GenSet {
    let inv = w.inverse();
    let members = left.iter().filter(|&i| {
        let (a, b) = (inv.apply(i), inv.apply(i + 1));
        a.abs_diff(b) == 1 && right.contains(a.min(b))
    });
    GenSet::new(left.rank(), members).expect("subset of I")
}

/// `v ∈ W_S` iff `v` maps each block of consecutive positions glued by `S` onto itself.
pub fn is_in_parabolic(v: &Permutation, generators: &GenSet) -> bool {
    let mut start = 1;
    for size in generators.block_sizes() {
        let block = start..start + size;
        if !block.clone().all(|k| block.contains(&v.apply(k))) {
            return false;
        }
        start += size;
    }
    true
}

fn orbit(
    seed: Permutation,
    neighbours: impl Fn(&Permutation) -> Vec<Permutation>,
) -> Vec<Permutation> {
    let mut seen = std::collections::HashSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed]);
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        for next in neighbours(&w) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        out.push(w);
    }
    out
}

fn check_rank(degree: usize, set: &GenSet) -> Result<()> {
    if degree == 0 {
        return Err(Error::InvalidDegree(0));
    }
    if set.rank() != degree - 1 {
        return Err(Error::Domain(format!(
            "generator set {set} has rank {}, expected {}",
            set.rank(),
            degree - 1
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetEntry {
    pub min: Permutation,
    pub max: Permutation,
    pub size: usize,
}

/// The partition of `S_{n+1}` into `(W_I, W_J)`-double cosets with the order
/// induced through maximal representatives. Cosets are sorted by `max`.
#[derive(Debug, Clone)]
pub struct DoubleCosetTable {
    degree: usize,
    left: GenSet,
    right: GenSet,
    cosets: Vec<CosetEntry>,
    // coset index of every group element, in group enumeration order
    class_of: Vec<usize>,
    order: FinitePoset<Permutation>,
}

impl DoubleCosetTable {
    /// Partitions the group by union-find over the left `W_I` and right `W_J`
    /// generator actions.
    pub fn build(group: &SymmetricGroup, left: &GenSet, right: &GenSet) -> Result<Self> {
        let degree = group.degree();
        check_rank(degree, left)?;
        check_rank(degree, right)?;
        let elements = group.elements();
        let mut parent: Vec<usize> = (0..elements.len()).collect();
        for (k, w) in elements.iter().enumerate() {
            let images = left
                .iter()
                .map(|i| w.mul_simple_left(i))
                .chain(right.iter().map(|j| w.mul_simple_right(j)));
            for x in images {
                let idx = group.index_of(&x).expect("group is closed");
                union(&mut parent, k, idx);
            }
        }

        let mut roots: Vec<usize> = (0..elements.len()).map(|k| find(&mut parent, k)).collect();
        let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (k, &r) in roots.iter().enumerate() {
            by_root.entry(r).or_default().push(k);
        }
        let mut cosets: Vec<(usize, CosetEntry)> = by_root
            .into_iter()
            .map(|(root, members)| {
                let min = members
                    .iter()
                    .map(|&k| &elements[k])
                    .min_by_key(|w| w.length())
                    .unwrap();
                let max = members
                    .iter()
                    .map(|&k| &elements[k])
                    .max_by_key(|w| w.length())
                    .unwrap();
                (
                    root,
                    CosetEntry {
                        min: min.clone(),
                        max: max.clone(),
                        size: members.len(),
                    },
                )
            })
            .collect();
        cosets.sort_by(|a, b| a.1.max.cmp(&b.1.max));
        let mut position = std::collections::HashMap::new();
        for (k, (root, _)) in cosets.iter().enumerate() {
            position.insert(*root, k);
        }
        for r in roots.iter_mut() {
            *r = position[r];
        }
        let cosets: Vec<CosetEntry> = cosets.into_iter().map(|(_, c)| c).collect();
        let order = bruhat_poset(cosets.iter().map(|c| c.max.clone()).collect());
        Ok(DoubleCosetTable {
            degree,
            left: *left,
            right: *right,
            cosets,
            class_of: roots,
            order,
        })
    }

    /// Convenience constructor taking the complements `Iᶜ`, `Jᶜ`.
    pub fn from_complements(
        group: &SymmetricGroup,
        left_complement: &GenSet,
        right_complement: &GenSet,
    ) -> Result<Self> {
        Self::build(
            group,
            &left_complement.complement(),
            &right_complement.complement(),
        )
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn left(&self) -> &GenSet {
        &self.left
    }

    pub fn right(&self) -> &GenSet {
        &self.right
    }

    pub fn cosets(&self) -> &[CosetEntry] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Index of the coset containing `w`.
    pub fn coset_index(&self, group: &SymmetricGroup, w: &Permutation) -> Option<usize> {
        group.index_of(w).map(|k| self.class_of[k])
    }

    /// Coset order on maximal representatives (`X⁺`), element `k` being coset `k`.
    pub fn order(&self) -> &FinitePoset<Permutation> {
        &self.order
    }

    /// Bruhat order on the minimal representatives (`X⁻`), element `k` being coset `k`.
    pub fn min_order(&self) -> FinitePoset<Permutation> {
        FinitePoset::from_relation(
            self.cosets.iter().map(|c| c.min.clone()).collect(),
            leq_same_degree,
        )
        .expect("Bruhat order restricts to a partial order")
    }

    /// Whether `min_c ≤ min_c'` exactly when `max_c ≤ max_c'`, i.e. the
    /// canonical bijection `X⁺ → X⁻` is an order isomorphism.
    pub fn min_max_orders_agree(&self) -> bool {
        let n = self.cosets.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                leq_same_degree(&self.cosets[a].min, &self.cosets[b].min)
                    == leq_same_degree(&self.cosets[a].max, &self.cosets[b].max)
            })
        })
    }

    /// Whether every coset equals the Bruhat interval `[min, max]` as a set.
    pub fn has_interval_property(&self, group: &SymmetricGroup) -> bool {
        let mut interval_sizes = vec![0usize; self.cosets.len()];
        for (k, x) in group.elements().iter().enumerate() {
            for (c, entry) in self.cosets.iter().enumerate() {
                let inside = leq_same_degree(&entry.min, x) && leq_same_degree(x, &entry.max);
                if inside {
                    if self.class_of[k] != c {
                        return false;
                    }
                    interval_sizes[c] += 1;
                }
            }
        }
        interval_sizes
            .iter()
            .zip(&self.cosets)
            .all(|(&n, c)| n == c.size)
    }

    /// `{degree, I_complement, J_complement, cosets: [{min, max, size}], covers}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct TableJson<'a> {
            degree: usize,
            #[serde(rename = "I_complement")]
            left_complement: GenSet,
            #[serde(rename = "J_complement")]
            right_complement: GenSet,
            cosets: &'a [CosetEntry],
            covers: Vec<[usize; 2]>,
        }
        let doc = TableJson {
            degree: self.degree,
            left_complement: self.left.complement(),
            right_complement: self.right.complement(),
            cosets: &self.cosets,
            covers: self.order.covers().iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("table serialization cannot fail")
    }

    /// Plain-text listing, one coset per line.
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "degree {}  Ic {}  Jc {}  cosets {}\n",
            self.degree,
            self.left.complement(),
            self.right.complement(),
            self.cosets.len()
        );
        for (k, c) in self.cosets.iter().enumerate() {
            let ups: Vec<String> = self
                .order
                .upper_covers(k)
                .iter()
                .map(usize::to_string)
                .collect();
            out.push_str(&format!(
                "{k:>4}  min [{}]  max [{}]  size {}  covered by [{}]\n",
                c.min,
                c.max,
                c.size,
                ups.join(",")
            ));
        }
        out
    }
}

/// Runs [`DoubleCosetTable::has_interval_property`] for one pair `(I, J)`.
pub fn check_interval_property(
    group: &SymmetricGroup,
    left: &GenSet,
    right: &GenSet,
) -> Result<bool> {
    Ok(DoubleCosetTable::build(group, left, right)?.has_interval_property(group))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}
