//! The type-A classification of spherical double flag varieties
//! `G/P_I × G/P_J` with `I` maximal, the predicted shape and bottom element
//! of each case, and a brute-force verifier.
//!
//! Cases are normalized before the side conditions are read off: a pair with
//! `|Jᶜ| = 1 < |Iᶜ|` is swapped (`X⁺_{J,I}` is the image of `X⁺_{I,J}` under
//! inversion), and a pair whose conditions hold only after the diagram flip
//! `k ↦ n+1−k` is mirrored (conjugation by `w₀`).

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bruhat::bruhat_poset;
use crate::parabolic::max_representatives;
use crate::poset::{classify_shape, matching_shapes, FinitePoset, ShapeClass, ShapeFamily};
use crate::symgroup::{GenSet, Permutation, SymmetricGroup};
use crate::{Error, Result};

/// Largest degree [`verify_theorem`] accepts by default.
pub const DEFAULT_VERIFY_CAP: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "String")]
pub enum CaseTag {
    Trivial,
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5a,
    Thm5b,
    Thm5c,
    Thm5d,
}

impl CaseTag {
    pub fn predicted_shape(&self) -> ShapeFamily {
        match self {
            CaseTag::Trivial => ShapeFamily::Point,
            CaseTag::Thm1 | CaseTag::Thm2 | CaseTag::Thm4 => ShapeFamily::Chain,
            CaseTag::Thm3 => ShapeFamily::StretchedDiamond,
            CaseTag::Thm5a => ShapeFamily::LadderA,
            CaseTag::Thm5b => ShapeFamily::LadderB,
            CaseTag::Thm5c => ShapeFamily::LadderC,
            CaseTag::Thm5d => ShapeFamily::LadderD,
        }
    }

    pub fn is_ladder(&self) -> bool {
        matches!(
            self,
            CaseTag::Thm5a | CaseTag::Thm5b | CaseTag::Thm5c | CaseTag::Thm5d
        )
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::Trivial => "Trivial",
            CaseTag::Thm1 => "Thm-1",
            CaseTag::Thm2 => "Thm-2",
            CaseTag::Thm3 => "Thm-3",
            CaseTag::Thm4 => "Thm-4",
            CaseTag::Thm5a => "Thm-5a",
            CaseTag::Thm5b => "Thm-5b",
            CaseTag::Thm5c => "Thm-5c",
            CaseTag::Thm5d => "Thm-5d",
        })
    }
}

impl From<CaseTag> for String {
    fn from(t: CaseTag) -> String {
        t.to_string()
    }
}

/// A classified pair `(Iᶜ, Jᶜ)`. The parameters `i`, `j`, `p`, `q` are the
/// normalized values the side conditions are stated in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphericalCase {
    pub degree: usize,
    pub i_complement: GenSet,
    pub j_complement: GenSet,
    pub tag: CaseTag,
    pub predicted_shape: ShapeFamily,
    /// `I` and `J` were exchanged to make `I` maximal.
    pub swapped: bool,
    /// The conditions hold after the diagram flip.
    pub mirrored: bool,
    pub i: Option<usize>,
    pub j: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
}

impl SphericalCase {
    /// `n`, the rank.
    pub fn rank(&self) -> usize {
        self.degree - 1
    }

    /// For ladder cases: whether the two chains meet strictly below `w₀`,
    /// i.e. `n+1−(j−1) > i`.
    pub fn predicts_merge(&self) -> Option<bool> {
        match (self.tag.is_ladder(), self.i, self.j) {
            (true, Some(i), Some(j)) => Some(self.rank() + 2 > i + j),
            _ => None,
        }
    }

    fn label(&self) -> String {
        format!(
            "{} Ic={} Jc={}",
            self.tag, self.i_complement, self.j_complement
        )
    }
}

/// Classifies `(Iᶜ, Jᶜ)` in `S_degree`; `None` for pairs outside the table.
pub fn classify_pair(
    degree: usize,
    i_complement: &GenSet,
    j_complement: &GenSet,
) -> Result<Option<SphericalCase>> {
    if degree < 2 {
        return Err(Error::InvalidDegree(degree));
    }
    let n = degree - 1;
    for set in [i_complement, j_complement] {
        if set.rank() != n {
            return Err(Error::DegreeMismatch {
                left: set.rank() + 1,
                right: degree,
            });
        }
    }
    let mut case = SphericalCase {
        degree,
        i_complement: *i_complement,
        j_complement: *j_complement,
        tag: CaseTag::Trivial,
        predicted_shape: ShapeFamily::Point,
        swapped: false,
        mirrored: false,
        i: None,
        j: None,
        p: None,
        q: None,
    };
    if i_complement.is_empty() || j_complement.is_empty() {
        return Ok(Some(case));
    }
    let (ic, jc) = if i_complement.len() == 1 {
        (i_complement, j_complement)
    } else if j_complement.len() == 1 {
        case.swapped = true;
        (j_complement, i_complement)
    } else {
        return Ok(None);
    };
    let i = ic.to_vec()[0];
    let members = jc.to_vec();
    case.i = Some(i);

    let tag = if members.len() == 1 {
        case.j = Some(members[0]);
        CaseTag::Thm1
    } else if members.len() == 2 && members[1] == members[0] + 1 {
        case.j = Some(members[0]);
        CaseTag::Thm2
    } else if i == 1 || i == n {
        case.mirrored = i == n && n > 1;
        CaseTag::Thm4
    } else if let Some((p, q)) = stretched_params(i, &members, n) {
        case.mirrored = i != 2;
        case.i = Some(2);
        case.p = Some(p);
        case.q = Some(q);
        CaseTag::Thm3
    } else if let Some((ni, nj, mirrored)) = ladder_params(i, &members, n) {
        case.mirrored = mirrored;
        case.i = Some(ni);
        case.j = Some(nj);
        match (nj <= ni, ni + nj - 2 < n) {
            (true, true) => CaseTag::Thm5a,
            (true, false) => CaseTag::Thm5b,
            (false, true) => CaseTag::Thm5c,
            (false, false) => CaseTag::Thm5d,
        }
    } else {
        return Ok(None);
    };
    case.tag = tag;
    case.predicted_shape = tag.predicted_shape();
    Ok(Some(case))
}

// Iᶜ = {2} or {n−1}, Jᶜ = {p, q} with 1 < p, p+1 < q < n; normalized to Iᶜ = {2}.
fn stretched_params(i: usize, members: &[usize], n: usize) -> Option<(usize, usize)> {
    let [p, q] = *members else { return None };
    let valid = |p: usize, q: usize| 1 < p && p + 1 < q && q < n;
    if i == 2 && valid(p, q) {
        Some((p, q))
    } else if i == n - 1 && valid(n + 1 - q, n + 1 - p) {
        Some((n + 1 - q, n + 1 - p))
    } else {
        None
    }
}

// 2 ≤ i ≤ n−1 and Jᶜ = {1, j} or {j, n} with 2 < j < n−1; normalized to {1, j}.
fn ladder_params(i: usize, members: &[usize], n: usize) -> Option<(usize, usize, bool)> {
    let [a, b] = *members else { return None };
    if !(2 <= i && i < n) {
        return None;
    }
    let valid = |j: usize| 2 < j && j + 1 < n;
    if a == 1 && valid(b) {
        Some((i, b, false))
    } else if b == n && valid(a) {
        Some((n + 1 - i, n + 1 - a, true))
    } else {
        None
    }
}

/// Every classified pair with `|Iᶜ| = 1` in `S_degree` together with the
/// trivial pairs `(∅, ∅)` and `({i}, ∅)`, sorted by `(Iᶜ, Jᶜ)`.
pub fn spherical_pairs(degree: usize) -> Result<Vec<SphericalCase>> {
    if degree < 2 {
        return Err(Error::InvalidDegree(degree));
    }
    let n = degree - 1;
    let mut out =
        vec![classify_pair(degree, &GenSet::empty(n), &GenSet::empty(n))?.expect("trivial pair")];
    for i in 1..=n {
        let ic = GenSet::new(n, [i])?;
        for jc in GenSet::all_subsets(n) {
            if let Some(case) = classify_pair(degree, &ic, &jc)? {
                out.push(case);
            }
        }
    }
    out.sort_by(|a, b| {
        (a.i_complement.to_vec(), a.j_complement.to_vec())
            .cmp(&(b.i_complement.to_vec(), b.j_complement.to_vec()))
    });
    Ok(out)
}

/// The explicit bottom element `τ₀` of `X⁺` for the Thm-3 and Thm-5 cases.
pub fn predicted_bottom(case: &SphericalCase) -> Result<Permutation> {
    let n = case.rank();
    let normalized = match case.tag {
        CaseTag::Thm3 => stretched_bottom(n, case.p.unwrap()),
        t if t.is_ladder() => ladder_bottom(n, case.i.unwrap(), case.j.unwrap()),
        _ => return Err(Error::UnsupportedCase(case.label())),
    };
    let mut tau = Permutation::new(&normalized)?;
    if case.mirrored {
        tau = tau.conjugate_by_longest();
    }
    if case.swapped {
        tau = tau.inverse();
    }
    Ok(tau)
}

// Iᶜ = {2}, Jᶜ = {p, q}: the p−2 largest values, then 2 1, then the rest descending.
fn stretched_bottom(n: usize, p: usize) -> Vec<usize> {
    let top: Vec<usize> = (n + 4 - p..=n + 1).rev().collect();
    let mut word = top.clone();
    word.extend([2, 1]);
    word.extend((3..n + 4 - p).rev());
    word
}

// Iᶜ = {i}, Jᶜ = {1, j}.
fn ladder_bottom(n: usize, i: usize, j: usize) -> Vec<usize> {
    let mut word = Vec::with_capacity(n + 1);
    if j <= i {
        word.extend((i - j + 1..=i).rev());
        word.extend((i + 1..=n + 1).rev());
        word.extend((1..=i - j).rev());
    } else {
        let d = j - i;
        word.push(i);
        word.extend((n + 2 - d..=n + 1).rev());
        word.extend((1..i).rev());
        word.extend((i + 1..=n + 1 - d).rev());
    }
    word
}

/// `f_n(q) = C(n+1, 2) + 1 − (n+1−q) − (n+1−(q−1))` for `3 < q < n`: the
/// length of the competing bottom candidate in the stretched-diamond case.
pub fn f_n(q: usize, n: usize) -> Result<usize> {
    if !(3 < q && q < n) {
        return Err(Error::Domain(format!(
            "f_n needs 3 < q < n, got q={q}, n={n}"
        )));
    }
    Ok((n + 1) * n / 2 + 1 - (n + 1 - q) - (n + 2 - q))
}

/// The poset `X⁺_{I,J}` under Bruhat order.
pub fn x_plus_poset(
    group: &SymmetricGroup,
    i_complement: &GenSet,
    j_complement: &GenSet,
) -> FinitePoset<Permutation> {
    bruhat_poset(max_representatives(
        group,
        &i_complement.complement(),
        &j_complement.complement(),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub case: SphericalCase,
    pub size: usize,
    pub actual_shape: Option<ShapeClass>,
    pub matching_shapes: Vec<ShapeClass>,
    /// (a)
    pub lattice: bool,
    /// (b) the predicted family is among the isomorphic catalogue shapes.
    pub shape_match: bool,
    pub bottom: Option<Permutation>,
    pub predicted_bottom: Option<Permutation>,
    /// (c)
    pub bottom_match: Option<bool>,
    pub height: usize,
    /// (d) `height ≤ j`, ladder cases only.
    pub height_ok: Option<bool>,
    pub top_lower_covers: usize,
    /// (e) `w₀` has a single lower cover exactly when `n+1−(j−1) > i`.
    pub merge_ok: Option<bool>,
    pub notes: Vec<String>,
}

impl CaseRecord {
    pub fn passed(&self) -> bool {
        self.lattice
            && self.shape_match
            && self.bottom_match != Some(false)
            && self.height_ok != Some(false)
            && self.merge_ok != Some(false)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub lattice_failures: usize,
    pub shape_failures: usize,
    pub bottom_failures: usize,
    pub height_failures: usize,
    pub merge_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub degree: usize,
    pub records: Vec<CaseRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "degree {}: {} cases, {} passed, {} failed\n",
            self.degree, self.summary.total, self.summary.passed, self.summary.failed
        );
        out.push_str(
            "  tag      Ic     Jc             size  shape              lattice  bottom  height  merge  status\n",
        );
        let flag = |v: Option<bool>| match v {
            Some(true) => "ok",
            Some(false) => "FAIL",
            None => "-",
        };
        for r in &self.records {
            let shape = r
                .actual_shape
                .map(|s| s.to_string())
                .unwrap_or_else(|| "Unrecognized".into());
            out.push_str(&format!(
                "  {:<8} {:<6} {:<14} {:>4}  {:<18} {:<8} {:<7} {:<7} {:<6} {}\n",
                r.case.tag.to_string(),
                r.case.i_complement.to_string(),
                r.case.j_complement.to_string(),
                r.size,
                shape,
                if r.lattice { "ok" } else { "FAIL" },
                flag(r.bottom_match),
                flag(r.height_ok),
                flag(r.merge_ok),
                if r.passed() { "PASS" } else { "FAIL" }
            ));
            for note in &r.notes {
                out.push_str(&format!("           note: {note}\n"));
            }
        }
        out
    }
}

/// Checks one case against its predictions.
pub fn verify_case(group: &SymmetricGroup, case: &SphericalCase) -> CaseRecord {
    let poset = x_plus_poset(group, &case.i_complement, &case.j_complement);
    let matching = matching_shapes(&poset);
    let actual_shape = classify_shape(&poset);
    let shape_match = matching.iter().any(|s| s.family() == case.predicted_shape);
    let bottom = poset.bottom().map(|b| poset.element(b).clone());
    let predicted = predicted_bottom(case).ok();
    let bottom_match = predicted.as_ref().map(|p| Some(p) == bottom.as_ref());
    let height = poset.height();
    let top_lower_covers = poset.top().map_or(0, |t| poset.lower_covers(t).len());

    let mut notes = Vec::new();
    let (height_ok, merge_ok) = if case.tag.is_ladder() {
        let j = case.j.unwrap();
        let merged = top_lower_covers == 1;
        if height > j {
            notes.push(format!("height {height} exceeds j = {j}"));
        }
        (
            Some(height <= j),
            Some(case.predicts_merge() == Some(merged)),
        )
    } else {
        (None, None)
    };
    if shape_match && actual_shape.map(|s| s.family()) != Some(case.predicted_shape) {
        let other = actual_shape.map(|s| s.to_string()).unwrap_or_default();
        notes.push(format!("{} is isomorphic to {other}", case.predicted_shape));
    }
    if case.tag == CaseTag::Thm3 && case.p != Some(2) {
        notes.push(format!("p = {} reduces to p = 2", case.p.unwrap()));
    }
    if actual_shape.is_none() {
        notes.push("shape not in the catalogue".into());
    }
    CaseRecord {
        case: case.clone(),
        size: poset.len(),
        actual_shape,
        matching_shapes: matching,
        lattice: poset.is_lattice(),
        shape_match,
        bottom,
        predicted_bottom: predicted,
        bottom_match,
        height,
        height_ok,
        top_lower_covers,
        merge_ok,
        notes,
    }
}

/// Builds `X⁺` for every case of [`spherical_pairs`] and checks (a) lattice,
/// (b) shape, (c) bottom element, (d) ladder height `≤ j` and (e) the merge rule.
pub fn verify_theorem(degree: usize) -> Result<VerificationReport> {
    verify_theorem_capped(degree, DEFAULT_VERIFY_CAP)
}

pub fn verify_theorem_capped(degree: usize, cap: usize) -> Result<VerificationReport> {
    if degree > cap {
        return Err(Error::ResourceLimit {
            what: "verify degree",
            requested: degree,
            cap,
        });
    }
    let group = SymmetricGroup::with_cap(degree, cap)?;
    let cases = spherical_pairs(degree)?;
    let records: Vec<CaseRecord> = cases.par_iter().map(|c| verify_case(&group, c)).collect();
    let mut summary = Summary {
        total: records.len(),
        ..Summary::default()
    };
    for r in &records {
        if r.passed() {
            summary.passed += 1;
        } else {
            summary.failed += 1;
        }
        summary.lattice_failures += usize::from(!r.lattice);
        summary.shape_failures += usize::from(!r.shape_match);
        summary.bottom_failures += usize::from(r.bottom_match == Some(false));
        summary.height_failures += usize::from(r.height_ok == Some(false));
        summary.merge_failures += usize::from(r.merge_ok == Some(false));
    }
    Ok(VerificationReport {
        degree,
        records,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(rank: usize, m: &[usize]) -> GenSet {
        GenSet::new(rank, m.iter().copied()).unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn case(degree: usize, ic: &[usize], jc: &[usize]) -> SphericalCase {
        classify_pair(degree, &gs(degree - 1, ic), &gs(degree - 1, jc))
            .unwrap()
            .unwrap()
    }

    #[test]
    fn classification_examples() {
        let c = case(6, &[2], &[2, 4]);
        assert_eq!(c.tag, CaseTag::Thm3);
        assert_eq!(c.predicted_shape, ShapeFamily::StretchedDiamond);
        let c = case(7, &[3], &[1, 4]);
        assert_eq!(c.tag, CaseTag::Thm5c);
        assert_eq!((c.i, c.j), (Some(3), Some(4)));
        let c = case(4, &[1], &[2]);
        assert_eq!(c.tag, CaseTag::Thm1);
        assert_eq!(c.predicted_shape, ShapeFamily::Chain);
        assert_eq!(case(6, &[3], &[2, 3]).tag, CaseTag::Thm2);
        assert_eq!(case(6, &[1], &[2, 4]).tag, CaseTag::Thm4);
        assert_eq!(case(6, &[5], &[1, 3, 5]).tag, CaseTag::Thm4);
        assert_eq!(case(6, &[], &[]).tag, CaseTag::Trivial);
        assert_eq!(case(6, &[3], &[]).tag, CaseTag::Trivial);
    }

    #[test]
    fn non_spherical_pairs_are_rejected() {
        let n = 6;
        assert!(classify_pair(7, &gs(n, &[2, 5]), &gs(n, &[1, 4]))
            .unwrap()
            .is_none());
        // middle Iᶜ with a Jᶜ of neither listed form
        assert!(classify_pair(7, &gs(n, &[3]), &gs(n, &[2, 4]))
            .unwrap()
            .is_none());
        assert!(classify_pair(7, &gs(n, &[3]), &gs(n, &[1, 3, 5]))
            .unwrap()
            .is_none());
        // j = n−1 is outside the ladder range
        assert!(classify_pair(7, &gs(n, &[3]), &gs(n, &[1, 5]))
            .unwrap()
            .is_none());
        assert!(classify_pair(7, &gs(5, &[3]), &gs(n, &[1])).is_err());
    }

    #[test]
    fn mirrored_and_swapped_cases() {
        // {j, n} form: Iᶜ={4}, Jᶜ={3,6} in degree 7 mirrors to Iᶜ={3}, Jᶜ={1,4}
        let c = case(7, &[4], &[3, 6]);
        assert!(c.mirrored);
        assert_eq!(c.tag, CaseTag::Thm5c);
        assert_eq!((c.i, c.j), (Some(3), Some(4)));
        let c = case(7, &[5], &[2, 4]);
        assert_eq!(c.tag, CaseTag::Thm3);
        assert!(c.mirrored);
        assert_eq!((c.p, c.q), (Some(3), Some(5)));
        let c = case(6, &[2, 4], &[2]);
        assert!(c.swapped);
        assert_eq!(c.tag, CaseTag::Thm3);
    }

    #[test]
    fn ladder_subcases_partition() {
        for degree in 6..=9 {
            let n = degree - 1;
            for i in 2..n {
                for j in 3..n - 1 {
                    let c = case(degree, &[i], &[1, j]);
                    let expected = match (j <= i, i + j - 2 < n) {
                        (true, true) => CaseTag::Thm5a,
                        (true, false) => CaseTag::Thm5b,
                        (false, true) => CaseTag::Thm5c,
                        (false, false) => CaseTag::Thm5d,
                    };
                    assert_eq!(c.tag, expected, "degree {degree} i {i} j {j}");
                }
            }
        }
    }

    #[test]
    fn bottom_examples() {
        assert_eq!(
            predicted_bottom(&case(6, &[2], &[2, 4])).unwrap(),
            p("2 1 6 5 4 3")
        );
        assert_eq!(
            predicted_bottom(&case(7, &[3], &[1, 4])).unwrap(),
            p("3 7 2 1 6 5 4")
        );
        assert_eq!(
            predicted_bottom(&case(7, &[4], &[1, 3])).unwrap(),
            p("4 3 2 7 6 5 1")
        );
        assert!(matches!(
            predicted_bottom(&case(5, &[1], &[2])),
            Err(Error::UnsupportedCase(_))
        ));
    }

    #[test]
    fn predicted_bottoms_match_brute_force() {
        for degree in 5..=7 {
            let group = SymmetricGroup::new(degree).unwrap();
            let n = degree - 1;
            for ic in (1..=n).map(|i| gs(n, &[i])) {
                for jc in GenSet::all_subsets(n) {
                    let Some(c) = classify_pair(degree, &ic, &jc).unwrap() else {
                        continue;
                    };
                    let Ok(tau) = predicted_bottom(&c) else {
                        continue;
                    };
                    let poset = x_plus_poset(&group, &ic, &jc);
                    let bottom = poset.element(poset.bottom().unwrap());
                    assert_eq!(&tau, bottom, "{}", c.label());
                    // the swapped pair has the inverse bottom
                    let swapped = classify_pair(degree, &jc, &ic).unwrap().unwrap();
                    let poset = x_plus_poset(&group, &jc, &ic);
                    assert_eq!(
                        &predicted_bottom(&swapped).unwrap(),
                        poset.element(poset.bottom().unwrap())
                    );
                }
            }
        }
    }

    #[test]
    fn f_n_values() {
        assert_eq!(f_n(4, 5).unwrap(), 11);
        assert_eq!(f_n(5, 6).unwrap(), 17);
        assert!(f_n(3, 6).is_err());
        assert!(f_n(6, 6).is_err());
        for n in 5..=12 {
            for q in 4..n {
                assert!(f_n(q, n).unwrap() > 1 + (n - 1) * (n - 2) / 2);
            }
        }
    }

    #[test]
    fn stretched_diamond_record() {
        let group = SymmetricGroup::new(6).unwrap();
        let r = verify_case(&group, &case(6, &[2], &[2, 4]));
        assert_eq!(r.size, 6);
        assert!(r.passed());
        assert_eq!(r.actual_shape, Some(ShapeClass::StretchedDiamond));
        assert_eq!(r.bottom_match, Some(true));
    }

    #[test]
    fn stretched_diamond_size_is_independent_of_rank() {
        for degree in 6..=8 {
            let group = SymmetricGroup::new(degree).unwrap();
            for c in spherical_pairs(degree).unwrap() {
                if c.tag == CaseTag::Thm3 {
                    assert_eq!(
                        x_plus_poset(&group, &c.i_complement, &c.j_complement).len(),
                        6
                    );
                }
            }
        }
    }

    #[test]
    fn end_chains_are_short() {
        for degree in 4..=6 {
            let n = degree - 1;
            let group = SymmetricGroup::new(degree).unwrap();
            for c in spherical_pairs(degree).unwrap() {
                let i = c.i_complement.to_vec();
                if i == [1] || i == [n] {
                    let poset = x_plus_poset(&group, &c.i_complement, &c.j_complement);
                    assert!(poset.is_chain(), "{}", c.label());
                    assert!(poset.len() <= n + 1);
                }
            }
        }
    }

    #[test]
    fn pairs_are_unique_and_sorted() {
        let cases = spherical_pairs(7).unwrap();
        let keys: Vec<_> = cases
            .iter()
            .map(|c| (c.i_complement.to_vec(), c.j_complement.to_vec()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
        assert!(cases
            .iter()
            .all(|c| c.i_complement.len() <= 1 && !c.swapped));
    }

    #[test]
    fn height_claim_fails_only_for_stemmed_merged_ladders() {
        let report = verify_theorem(6).unwrap();
        for r in &report.records {
            assert!(r.lattice && r.shape_match, "{}", r.case.label());
            assert_ne!(r.bottom_match, Some(false));
            assert_ne!(r.merge_ok, Some(false));
            if let Some(ok) = r.height_ok {
                assert_eq!(!ok, r.case.tag == CaseTag::Thm5a, "{}", r.case.label());
            }
        }
    }

    #[test]
    fn report_is_deterministic() {
        let a = verify_theorem(5).unwrap();
        let b = verify_theorem(5).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.all_passed());
        assert!(verify_theorem(8).is_err());
    }
}
