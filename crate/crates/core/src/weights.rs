//! Type-A weights in ambient coordinates. `S_{n+1}` acts by permuting the
//! `n+1` coordinates, `(w·θ)_m = θ_{w⁻¹(m)}`, and the pairing with the
//! positive root `e_i − e_j` is `μ_i − μ_j`.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::Serialize;

use crate::bruhat::leq_same_degree;
use crate::parabolic::min_representatives;
use crate::poset::FinitePoset;
use crate::symgroup::{next_permutation, GenSet, Permutation, SymmetricGroup};
use crate::{Error, Result};

/// Largest degree [`tight_scan`] accepts by default.
pub const DEFAULT_TIGHT_SCAN_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "Vec<String>")]
pub struct WeightVector(Vec<Rational64>);

impl WeightVector {
    pub fn new(coords: Vec<Rational64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidDegree(0));
        }
        Ok(WeightVector(coords))
    }

    pub fn from_integers(coords: &[i64]) -> Result<Self> {
        WeightVector::new(
            coords
                .iter()
                .map(|&c| Rational64::from_integer(c))
                .collect(),
        )
    }

    /// The representative `θ` with stabilizer `W_J`: coordinates start at
    /// `|Jᶜ|` and drop by one after each position in `Jᶜ`.
    pub fn for_pattern(j_complement: &GenSet) -> WeightVector {
        let mut value = j_complement.len() as i64;
        let mut coords = Vec::with_capacity(j_complement.rank() + 1);
        for pos in 1..=j_complement.rank() + 1 {
            coords.push(Rational64::from_integer(value));
            if j_complement.contains(pos) {
                value -= 1;
            }
        }
        WeightVector(coords)
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> Rational64 {
        self.0.iter().sum()
    }

    /// Weakly decreasing coordinates.
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|p| p[0] >= p[1])
    }

    /// `⟨μ, e_i − e_j⟩` for 1-based `i`, `j`.
    pub fn pairing(&self, i: usize, j: usize) -> Rational64 {
        self.0[i - 1] - self.0[j - 1]
    }

    /// `s_{e_i − e_j}(μ)`: the vector with coordinates `i` and `j` exchanged.
    pub fn reflect(&self, i: usize, j: usize) -> WeightVector {
        let mut out = self.0.clone();
        out.swap(i - 1, j - 1);
        WeightVector(out)
    }

    fn check_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.to_string()))
        }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for WeightVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<Rational64>()
                    .map_err(|e| Error::Parse(format!("bad coordinate {:?}: {e}", part.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        WeightVector::new(coords)
    }
}

impl From<WeightVector> for Vec<String> {
    fn from(w: WeightVector) -> Self {
        w.0.iter().map(|c| c.to_string()).collect()
    }
}

/// `J = {i : θ_i = θ_{i+1}}`, the generators of the stabilizer of a dominant `θ`.
pub fn stabilizer_genset(theta: &WeightVector) -> Result<GenSet> {
    theta.check_dominant()?;
    let rank = theta.degree() - 1;
    GenSet::new(rank, (1..=rank).filter(|&i| theta.0[i - 1] == theta.0[i]))
}

/// `w·θ` with `(w·θ)_m = θ_{w⁻¹(m)}`.
pub fn evaluate(w: &Permutation, theta: &WeightVector) -> Result<WeightVector> {
    if w.degree() != theta.degree() {
        return Err(Error::DegreeMismatch {
            left: w.degree(),
            right: theta.degree(),
        });
    }
    let mut out = theta.0.clone();
    for k in 1..=w.degree() {
        out[w.apply(k) - 1] = theta.0[k - 1];
    }
    Ok(WeightVector(out))
}

/// `ν ⪯ μ` iff every prefix sum of `μ − ν` is nonnegative.
pub fn dominance_leq(nu: &WeightVector, mu: &WeightVector) -> Result<bool> {
    if nu.degree() != mu.degree() {
        return Err(Error::DegreeMismatch {
            left: nu.degree(),
            right: mu.degree(),
        });
    }
    if nu.sum() != mu.sum() {
        return Err(Error::UnequalSums {
            left: nu.to_string(),
            right: mu.to_string(),
        });
    }
    let mut prefix = Rational64::from_integer(0);
    for (m, n) in mu.0.iter().zip(&nu.0) {
        prefix += m - n;
        if prefix < Rational64::from_integer(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `μ ∈ (Wθ)_I`: weakly decreasing inside every block of consecutive
/// positions glued by `I`.
pub fn in_restriction(mu: &WeightVector, restriction: &GenSet) -> bool {
    restriction.iter().all(|i| mu.0[i - 1] >= mu.0[i])
}

/// The orbit `Wθ` (or `(Wθ)_I`) under `≤_B`, generated by `μ < s_β(μ)` for
/// positive roots `β` with `⟨μ, β⟩ > 0` and `s_β(μ)` inside the restriction.
#[derive(Debug, Clone)]
pub struct OrbitPoset {
    theta: WeightVector,
    restriction: Option<GenSet>,
    poset: FinitePoset<WeightVector>,
}

impl OrbitPoset {
    pub fn theta(&self) -> &WeightVector {
        &self.theta
    }

    pub fn restriction(&self) -> Option<&GenSet> {
        self.restriction.as_ref()
    }

    pub fn poset(&self) -> &FinitePoset<WeightVector> {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// `μ ≤_B ν`; `false` when either lies outside the orbit.
    pub fn leq(&self, mu: &WeightVector, nu: &WeightVector) -> bool {
        match (self.poset.index_of(mu), self.poset.index_of(nu)) {
            (Some(a), Some(b)) => self.poset.leq(a, b),
            _ => false,
        }
    }
}

pub fn orbit_poset(theta: &WeightVector, restriction: Option<&GenSet>) -> Result<OrbitPoset> {
    theta.check_dominant()?;
    if let Some(r) = restriction {
        if r.rank() + 1 != theta.degree() {
            return Err(Error::DegreeMismatch {
                left: r.rank() + 1,
                right: theta.degree(),
            });
        }
    }
    let keep = |mu: &WeightVector| restriction.is_none_or(|r| in_restriction(mu, r));

    let mut coords = theta.0.clone();
    coords.sort();
    let mut orbit = Vec::new();
    loop {
        let mu = WeightVector(coords.clone());
        if keep(&mu) {
            orbit.push(mu);
        }
        if !next_permutation(&mut coords) {
            break;
        }
    }
    // lexicographically largest first, so θ is element 0
    orbit.reverse();

    let index: std::collections::HashMap<&WeightVector, usize> =
        orbit.iter().enumerate().map(|(k, mu)| (mu, k)).collect();
    let degree = theta.degree();
    let mut pairs = Vec::new();
    for (a, mu) in orbit.iter().enumerate() {
        for i in 1..degree {
            for j in i + 1..=degree {
                if mu.pairing(i, j) > Rational64::from_integer(0) {
                    if let Some(&b) = index.get(&mu.reflect(i, j)) {
                        pairs.push((a, b));
                    }
                }
            }
        }
    }
    let poset = FinitePoset::from_generating_pairs(orbit, pairs)?;
    Ok(OrbitPoset {
        theta: theta.clone(),
        restriction: restriction.copied(),
        poset,
    })
}

/// Outcome of [`is_tight`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tightness {
    pub tight: bool,
    /// `(μ, ν)` with `ν ⪯ μ` but not `μ ≤_B ν`.
    pub witness: Option<(WeightVector, WeightVector)>,
    /// `(μ, ν)` with `μ ≤_B ν` but not `ν ⪯ μ`; never expected.
    pub forward_violation: Option<(WeightVector, WeightVector)>,
}

/// Whether `μ ≤_B ν ⟺ ν ⪯ μ` on the (restricted) orbit of `θ`.
pub fn is_tight(theta: &WeightVector, restriction: Option<&GenSet>) -> Result<Tightness> {
    let orbit = orbit_poset(theta, restriction)?;
    Ok(tightness_of(&orbit))
}

pub fn tightness_of(orbit: &OrbitPoset) -> Tightness {
    let p = orbit.poset();
    let mut witness = None;
    let mut forward_violation = None;
    for a in 0..p.len() {
        for b in 0..p.len() {
            let (mu, nu) = (p.element(a), p.element(b));
            let bruhat = p.leq(a, b);
            let dominance = dominance_leq(nu, mu).expect("orbit points share a sum");
            if bruhat && !dominance && forward_violation.is_none() {
                forward_violation = Some((mu.clone(), nu.clone()));
            }
            if dominance && !bruhat && witness.is_none() {
                witness = Some((mu.clone(), nu.clone()));
            }
        }
    }
    Tightness {
        tight: witness.is_none() && forward_violation.is_none(),
        witness,
        forward_violation,
    }
}

/// The type-A tightness rule: rank at most 2, or `J = R`, or `Jᶜ = {j}`, or
/// `Jᶜ = {j, j+1}`.
pub fn tight_rule(j_complement: &GenSet) -> bool {
    let members = j_complement.to_vec();
    j_complement.rank() <= 2
        || members.len() <= 1
        || (members.len() == 2 && members[1] == members[0] + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TightEntry {
    pub j_complement: GenSet,
    pub theta: WeightVector,
    pub orbit_size: usize,
    pub tight: bool,
    pub predicted: bool,
    pub witness: Option<(WeightVector, WeightVector)>,
    pub forward_violation: Option<(WeightVector, WeightVector)>,
}

impl TightEntry {
    pub fn agrees(&self) -> bool {
        self.tight == self.predicted
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TightReport {
    pub degree: usize,
    pub entries: Vec<TightEntry>,
}

impl TightReport {
    /// Every entry matches the rule, every non-tight entry has a witness, and
    /// no forward implication fails.
    pub fn all_agree(&self) -> bool {
        self.entries.iter().all(|e| {
            e.agrees() && e.forward_violation.is_none() && (e.tight || e.witness.is_some())
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("degree {}\n", self.degree);
        out.push_str("  Jc          theta            orbit  tight  rule   witness\n");
        for e in &self.entries {
            let witness = e
                .witness
                .as_ref()
                .map(|(mu, nu)| format!("mu=({mu}) nu=({nu})"))
                .unwrap_or_else(|| "-".into());
            out.push_str(&format!(
                "  {:<11} {:<16} {:>5}  {:<5}  {:<5}  {}{}\n",
                e.j_complement.to_string(),
                e.theta.to_string(),
                e.orbit_size,
                e.tight,
                e.predicted,
                witness,
                if e.agrees() { "" } else { "  MISMATCH" }
            ));
        }
        out
    }
}

/// Tightness of one representative `θ` per subset `Jᶜ`, compared with [`tight_rule`].
pub fn tight_scan(degree: usize) -> Result<TightReport> {
    tight_scan_capped(degree, DEFAULT_TIGHT_SCAN_CAP)
}

pub fn tight_scan_capped(degree: usize, cap: usize) -> Result<TightReport> {
    if degree < 2 {
        return Err(Error::InvalidDegree(degree));
    }
    if degree > cap {
        return Err(Error::ResourceLimit {
            what: "tight scan degree",
            requested: degree,
            cap,
        });
    }
    let entries = GenSet::all_subsets(degree - 1)
        .map(|jc| {
            let theta = WeightVector::for_pattern(&jc);
            let orbit = orbit_poset(&theta, None)?;
            let t = tightness_of(&orbit);
            Ok(TightEntry {
                j_complement: jc,
                theta,
                orbit_size: orbit.len(),
                tight: t.tight,
                predicted: tight_rule(&jc),
                witness: t.witness,
                forward_violation: t.forward_violation,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TightReport { degree, entries })
}

/// Whether `w ↦ w·θ` is an order isomorphism from Bruhat order on `X⁻_{I,J}`
/// (`W^J` when no restriction is given) onto the (restricted) orbit poset,
/// with `J` the stabilizer of `θ`.
pub fn evaluation_is_isomorphism(
    group: &SymmetricGroup,
    theta: &WeightVector,
    restriction: Option<&GenSet>,
) -> Result<bool> {
    let right = stabilizer_genset(theta)?;
    let left = restriction
        .copied()
        .unwrap_or_else(|| GenSet::empty(right.rank()));
    let reps = min_representatives(group, &left, &right);
    let orbit = orbit_poset(theta, restriction)?;
    if reps.len() != orbit.len() {
        return Ok(false);
    }
    let mut image = Vec::with_capacity(reps.len());
    for w in &reps {
        match orbit.poset().index_of(&evaluate(w, theta)?) {
            Some(k) => image.push(k),
            None => return Ok(false),
        }
    }
    let mut seen = image.clone();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != reps.len() {
        return Ok(false);
    }
    for (a, u) in reps.iter().enumerate() {
        for (b, v) in reps.iter().enumerate() {
            if leq_same_degree(u, v) != orbit.poset().leq(image[a], image[b]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(s: &str) -> WeightVector {
        s.parse().unwrap()
    }

    fn gs(rank: usize, m: &[usize]) -> GenSet {
        GenSet::new(rank, m.iter().copied()).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let w = wv("2, 1,1/2 ,0");
        assert_eq!(w.to_string(), "2,1,1/2,0");
        assert_eq!(w.coords()[2], Rational64::new(1, 2));
        assert!(w.is_dominant());
        assert!("1,x".parse::<WeightVector>().is_err());
        assert!("".parse::<WeightVector>().is_err());
        assert_eq!(
            serde_json::to_string(&wv("1,1/3")).unwrap(),
            r#"["1","1/3"]"#
        );
    }

    #[test]
    fn stabilizers() {
        assert_eq!(stabilizer_genset(&wv("3,3,3,3")).unwrap(), GenSet::full(3));
        assert_eq!(stabilizer_genset(&wv("3,2,1,0")).unwrap(), GenSet::empty(3));
        let j = stabilizer_genset(&wv("1,0,0,0")).unwrap();
        assert_eq!(j, gs(3, &[2, 3]));
        assert_eq!(j.complement(), gs(3, &[1]));
        assert!(matches!(
            stabilizer_genset(&wv("0,1")),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn pattern_representatives() {
        assert_eq!(WeightVector::for_pattern(&gs(3, &[1])), wv("1,0,0,0"));
        assert_eq!(WeightVector::for_pattern(&gs(3, &[1, 3])), wv("2,1,1,0"));
        assert_eq!(WeightVector::for_pattern(&GenSet::empty(2)), wv("0,0,0"));
        for jc in GenSet::all_subsets(4) {
            let theta = WeightVector::for_pattern(&jc);
            assert_eq!(stabilizer_genset(&theta).unwrap().complement(), jc);
        }
    }

    #[test]
    fn evaluation_action() {
        let theta = wv("2,1,0");
        let e = Permutation::identity(3).unwrap();
        assert_eq!(evaluate(&e, &theta).unwrap(), theta);
        // s_1 swaps the first two coordinates
        let s1 = Permutation::simple_reflection(3, 1).unwrap();
        assert_eq!(evaluate(&s1, &theta).unwrap(), wv("1,2,0"));
        // action, not anti-action: (uv)·θ = u·(v·θ)
        let g = SymmetricGroup::new(4).unwrap();
        let theta = wv("3,2,1,0");
        for u in g.elements() {
            for v in g.elements() {
                let lhs = evaluate(&u.compose(v).unwrap(), &theta).unwrap();
                let rhs = evaluate(u, &evaluate(v, &theta).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        assert!(evaluate(&e, &wv("1,0")).is_err());
    }

    #[test]
    fn dominance_examples() {
        let (mu, nu) = (wv("1,0,0"), wv("0,0,1"));
        assert!(dominance_leq(&mu, &mu).unwrap());
        assert!(dominance_leq(&nu, &mu).unwrap());
        assert!(!dominance_leq(&mu, &nu).unwrap());
        assert!(matches!(
            dominance_leq(&wv("1,0"), &wv("1,1")),
            Err(Error::UnequalSums { .. })
        ));
    }

    #[test]
    fn dominance_is_a_partial_order_on_orbit() {
        let orbit = orbit_poset(&wv("2,1,0"), None).unwrap();
        let pts = orbit.poset().elements();
        assert_eq!(pts.len(), 6);
        for a in pts {
            assert!(dominance_leq(a, a).unwrap());
            for b in pts {
                if a != b {
                    assert!(!(dominance_leq(a, b).unwrap() && dominance_leq(b, a).unwrap()));
                }
                for c in pts {
                    if dominance_leq(a, b).unwrap() && dominance_leq(b, c).unwrap() {
                        assert!(dominance_leq(a, c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn fundamental_orbit_is_a_chain() {
        let orbit = orbit_poset(&wv("1,0,0"), None).unwrap();
        assert_eq!(
            orbit.poset().elements(),
            &[wv("1,0,0"), wv("0,1,0"), wv("0,0,1")]
        );
        assert!(orbit.poset().is_chain());
        assert!(orbit.leq(&wv("1,0,0"), &wv("0,0,1")));
        assert!(!orbit.leq(&wv("0,0,1"), &wv("1,0,0")));
        assert_eq!(orbit_poset(&wv("5,5,5"), None).unwrap().len(), 1);
    }

    #[test]
    fn orbit_sizes_and_minimum() {
        for jc in GenSet::all_subsets(4) {
            let theta = WeightVector::for_pattern(&jc);
            let orbit = orbit_poset(&theta, None).unwrap();
            let stab: usize = stabilizer_genset(&theta)
                .unwrap()
                .block_sizes()
                .into_iter()
                .map(|b| (1..=b).product::<usize>())
                .product();
            assert_eq!(orbit.len() * stab, 120);
            assert_eq!(orbit.poset().bottom(), Some(0));
            assert_eq!(orbit.poset().element(0), &theta);
        }
    }

    #[test]
    fn restricted_orbit_contains_extremes() {
        let theta = wv("2,1,1,0");
        let full = orbit_poset(&theta, None).unwrap();
        let top = full.poset().element(full.poset().top().unwrap()).clone();
        assert_eq!(top, wv("0,1,1,2"));
        let r = gs(3, &[1]);
        let restricted = orbit_poset(&theta, Some(&r)).unwrap();
        assert!(restricted
            .poset()
            .elements()
            .iter()
            .all(|mu| in_restriction(mu, &r)));
        assert_eq!(restricted.poset().element(0), &theta);
        assert_eq!(restricted.poset().bottom(), Some(0));
        assert!(restricted.poset().top().is_some());
        assert!(orbit_poset(&theta, Some(&GenSet::empty(2))).is_err());
    }

    #[test]
    fn tightness_examples() {
        assert!(is_tight(&wv("1,0,0,0"), None).unwrap().tight);
        assert!(is_tight(&wv("1,1,0,0"), None).unwrap().tight);
        let t = is_tight(&wv("2,1,1,0"), None).unwrap();
        assert!(!t.tight);
        assert!(t.forward_violation.is_none());
        let (mu, nu) = t.witness.unwrap();
        assert!(dominance_leq(&nu, &mu).unwrap());
        let orbit = orbit_poset(&wv("2,1,1,0"), None).unwrap();
        assert!(!orbit.leq(&mu, &nu));
    }

    #[test]
    fn rank_two_is_always_tight() {
        let report = tight_scan(3).unwrap();
        assert_eq!(report.entries.len(), 4);
        assert!(report.entries.iter().all(|e| e.tight && e.predicted));
    }

    #[test]
    fn degree_five_examples() {
        let report = tight_scan(5).unwrap();
        let find = |m: &[usize]| {
            report
                .entries
                .iter()
                .find(|e| e.j_complement == gs(4, m))
                .unwrap()
        };
        assert!(find(&[2, 3]).tight);
        let far = find(&[1, 4]);
        assert!(!far.tight && far.witness.is_some());
        assert!(report.all_agree());
    }

    #[test]
    fn tight_rule_cases() {
        assert!(tight_rule(&GenSet::empty(5)));
        assert!(tight_rule(&gs(5, &[3])));
        assert!(tight_rule(&gs(5, &[3, 4])));
        assert!(!tight_rule(&gs(5, &[2, 4])));
        assert!(!tight_rule(&gs(5, &[1, 2, 3])));
        assert!(tight_rule(&gs(2, &[1, 2])));
    }

    #[test]
    fn scan_degree_cap() {
        assert!(matches!(tight_scan(7), Err(Error::ResourceLimit { .. })));
        assert!(tight_scan(1).is_err());
    }

    #[test]
    fn evaluation_isomorphism_degree_four() {
        let g = SymmetricGroup::new(4).unwrap();
        for jc in GenSet::all_subsets(3) {
            let theta = WeightVector::for_pattern(&jc);
            assert!(evaluation_is_isomorphism(&g, &theta, None).unwrap(), "{jc}");
            for i in GenSet::all_subsets(3) {
                assert!(
                    evaluation_is_isomorphism(&g, &theta, Some(&i)).unwrap(),
                    "{jc} {i}"
                );
            }
        }
    }
}
