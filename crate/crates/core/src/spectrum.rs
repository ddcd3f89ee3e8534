//! The spectrum of proper round prime filters and the results relating it
//! back to `(S, ≤, ≺)`.

use rayon::prelude::*;

use crate::axioms::{check_axioms, Axiom};
use crate::bits::{bit, bits, full, has, subset};
use crate::order::{ElementSet, Structure, StructureId};
use crate::topology::{union_closure, FiniteTopology};

/// Points of the spectrum with their basic opens `Ŝ_p` and generated topology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumResult {
    owner: StructureId,
    /// Proper nonempty round prime filters, ascending by bitmask.
    pub points: Vec<ElementSet>,
    /// `basic_opens[p]` is the mask of point indices whose filter contains `p`.
    pub basic_opens: Vec<u32>,
    /// All unions of basic opens.
    pub topology: FiniteTopology,
}

impl SpectrumResult {
    fn assemble(s: &Structure, mut masks: Vec<u32>) -> SpectrumResult {
        masks.sort_unstable();
        masks.dedup();
        let k = masks.len();
        let basic_opens: Vec<u32> = s
            .elements()
            .map(|p| {
                masks
                    .iter()
                    .enumerate()
                    .filter(|(_, &m)| has(m, p))
                    .fold(0, |acc, (i, _)| acc | bit(i))
            })
            .collect();
        let topology = FiniteTopology::new(k, union_closure(&basic_opens, 0))
            .expect("basic opens of a family of filters form a basis");
        SpectrumResult {
            owner: s.id(),
            points: masks.into_iter().map(|m| s.set(m)).collect(),
            basic_opens,
            topology,
        }
    }

    pub fn owner(&self) -> StructureId {
        self.owner
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `Ŝ_p`.
    pub fn basic_open(&self, p: usize) -> u32 {
        self.basic_opens[p]
    }

    pub fn opens(&self) -> &[u32] {
        self.topology.opens()
    }

    pub fn index_of(&self, mask: u32) -> Option<usize> {
        self.points.binary_search_by_key(&mask, |p| p.bits()).ok()
    }
}

/// Enumerates the spectrum.
///
/// The complement of a proper nonempty prime filter is a proper nonempty
/// ideal, and every nonempty ideal of a finite join-semilattice is the
/// principal down-set of its join. So the candidates are `S \ ↓j`, one per
/// element; each is tested against the defining predicates.
pub fn enumerate_spectrum(s: &Structure) -> SpectrumResult {
    let masks = s
        .elements()
        .map(|j| s.full_mask() & !s.below(j))
        .filter(|&m| s.is_spectrum_point_mask(m))
        .collect();
    SpectrumResult::assemble(s, masks)
}

/// Enumerates the spectrum by testing every subset of the carrier.
pub fn enumerate_spectrum_exhaustive(s: &Structure) -> SpectrumResult {
    let n = s.len();
    let total = 1u64 << n;
    let masks: Vec<u32> = if n >= 14 {
        const CHUNK: u64 = 1 << 12;
        (0..total.div_ceil(CHUNK))
            .into_par_iter()
            .flat_map_iter(|c| {
                let lo = c * CHUNK;
                let hi = (lo + CHUNK).min(total);
                (lo..hi)
                    .map(|m| m as u32)
                    .filter(|&m| s.is_spectrum_point_mask(m))
                    .collect::<Vec<_>>()
            })
            .collect()
    } else {
        (0..total)
            .map(|m| m as u32)
            .filter(|&m| s.is_spectrum_point_mask(m))
            .collect()
    };
    SpectrumResult::assemble(s, masks)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub prime: ElementSet,
    /// The maximal ideal disjoint from the filter; the complement of `prime`.
    pub maximal_ideal: ElementSet,
    /// Hypotheses (distributive, auxiliary) that do not hold for the structure.
    pub failed_hypotheses: Vec<Axiom>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ExtensionError {
    #[error("bad input: {0}")]
    BadInput(&'static str),
    #[error("the complement of the maximal ideal {maximal_ideal} is not {missing}")]
    NoExtension {
        maximal_ideal: String,
        missing: &'static str,
        failed_hypotheses: Vec<Axiom>,
    },
}

/// Extends a proper round filter to a proper round prime filter avoiding
/// `ideal`, by growing `ideal` greedily (in element order) to a maximal ideal
/// disjoint from `filter` and taking the complement.
///
/// The result is verified before it is returned; when distributivity or
/// auxiliarity fail the search still runs and may end in `NoExtension`.
pub fn extend_to_prime(
    s: &Structure,
    ideal: &ElementSet,
    filter: &ElementSet,
) -> Result<Extension, ExtensionError> {
    assert_eq!(ideal.owner(), s.id());
    assert_eq!(filter.owner(), s.id());
    let (i, f) = (ideal.bits(), filter.bits());
    if !s.is_ideal_mask(i) {
        return Err(ExtensionError::BadInput("first argument is not an ideal"));
    }
    if f == 0 {
        return Err(ExtensionError::BadInput("filter is empty"));
    }
    if !s.is_round_filter_mask(f) {
        return Err(ExtensionError::BadInput("second argument is not a round filter"));
    }
    if has(f, s.bottom()) {
        return Err(ExtensionError::BadInput("filter is the whole carrier"));
    }
    if i & f != 0 {
        return Err(ExtensionError::BadInput("ideal and filter overlap"));
    }
    let failed_hypotheses: Vec<Axiom> = [Axiom::Distributive, Axiom::Auxiliary]
        .into_iter()
        .filter(|a| a.check(s).is_some())
        .collect();

    let mut j = i;
    for x in s.elements() {
        if has(j, x) {
            continue;
        }
        let grown = s.generate_ideal_mask(j | bit(x));
        if grown & f == 0 {
            j = grown;
        }
    }
    let p = s.full_mask() & !j;
    let missing = if !subset(f, p) {
        Some("a superset of the filter")
    } else if p == s.full_mask() {
        Some("proper")
    } else if !s.is_prime_filter_mask(p) {
        Some("a prime filter")
    } else if !s.is_round_filter_mask(p) {
        Some("round")
    } else {
        None
    };
    match missing {
        Some(missing) => Err(ExtensionError::NoExtension {
            maximal_ideal: s.render_mask(j),
            missing,
            failed_hypotheses,
        }),
        None => Ok(Extension {
            prime: s.set(p),
            maximal_ideal: s.set(j),
            failed_hypotheses,
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactInterpolant {
    /// `q = c_0 ≻ c_1 ≻ …`, each `c_{k+1}` the least element with `p ≺ c_{k+1} ≺ c_k`.
    pub chain: Vec<usize>,
    /// Up-closure of the chain: a `≺`-filter inside `p^≺` containing `q`.
    pub filter: ElementSet,
    /// `C = ⋂_{f ∈ filter} Ŝ_f`, as a mask of spectrum points.
    pub points: u32,
    pub contains_lower: bool,
    pub inside_upper: bool,
    pub compact: bool,
}

impl CompactInterpolant {
    pub fn holds(&self) -> bool {
        self.contains_lower && self.inside_upper && self.compact
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum InterpolantError {
    #[error("`{0}` ≺ `{1}` does not hold")]
    NotPrec(String, String),
    #[error("hypotheses fail: {0:?}")]
    HypothesesFail(Vec<Axiom>),
}

/// A compact set of points squeezed between `Ŝ_p` and `Ŝ_q` for `p ≺ q`.
pub fn compact_interpolant(
    s: &Structure,
    spectrum: &SpectrumResult,
    p: usize,
    q: usize,
) -> Result<CompactInterpolant, InterpolantError> {
    assert_eq!(spectrum.owner(), s.id());
    let failed: Vec<Axiom> = [Axiom::Distributive, Axiom::Auxiliary, Axiom::Interpolative]
        .into_iter()
        .filter(|a| a.check(s).is_some())
        .collect();
    if !failed.is_empty() {
        return Err(InterpolantError::HypothesesFail(failed));
    }
    if !s.prec(p, q) {
        return Err(InterpolantError::NotPrec(s.label(p).into(), s.label(q).into()));
    }
    let mut chain = vec![q];
    let mut seen = bit(q);
    loop {
        let last = *chain.last().unwrap();
        let between = s.successors_mask(p) & s.predecessors_mask(last);
        let next = between.trailing_zeros() as usize;
        debug_assert!(between != 0, "interpolation holds");
        if has(seen, next) {
            break;
        }
        seen |= bit(next);
        chain.push(next);
    }
    let filter = s.up_closure(seen);
    let all_points = full(spectrum.len());
    let points = bits(filter).fold(all_points, |acc, f| acc & spectrum.basic_open(f));
    let lower = spectrum.basic_open(p);
    let upper = spectrum.basic_open(q);
    Ok(CompactInterpolant {
        chain,
        filter: s.set(filter),
        points,
        contains_lower: subset(lower, points),
        inside_upper: subset(points, upper),
        compact: is_compact_for_basic_covers(s, spectrum, points),
    })
}

/// For every nonempty ideal `I`, if no single `Ŝ_j` (`j ∈ I`) contains the
/// set then neither does `⋃_{j ∈ I} Ŝ_j`. Since basic opens are closed under
/// finite unions this is compactness with respect to basic covers. Nonempty
/// ideals of a finite structure are principal, so `I` ranges over `↓j`.
fn is_compact_for_basic_covers(s: &Structure, spectrum: &SpectrumResult, set: u32) -> bool {
    s.elements().all(|top| {
        let ideal = s.below(top);
        let single = bits(ideal).any(|j| subset(set, spectrum.basic_open(j)));
        let union = bits(ideal).fold(0, |acc, j| acc | spectrum.basic_open(j));
        single || !subset(set, union)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationReport {
    pub is_predomain: bool,
    pub distributive: bool,
    /// Pairs breaking `p ≤ q ⟺ Ŝ_p ⊆ Ŝ_q`.
    pub order_violations: Vec<(usize, usize)>,
    /// Pairs breaking `p ≺ q ⟺ Ŝ_p ⋐ Ŝ_q`.
    pub prec_violations: Vec<(usize, usize)>,
    /// `p ↦ Ŝ_p` is one-to-one.
    pub injective: bool,
}

impl RepresentationReport {
    pub fn holds(&self) -> bool {
        self.order_violations.is_empty() && self.prec_violations.is_empty() && self.injective
    }
}

/// Compares `≤`/`≺` with `⊆`/`⋐` on the basic opens of the spectrum.
pub fn verify_representation(s: &Structure) -> RepresentationReport {
    let spectrum = enumerate_spectrum(s);
    verify_representation_with(s, &spectrum)
}

pub fn verify_representation_with(s: &Structure, spectrum: &SpectrumResult) -> RepresentationReport {
    assert_eq!(spectrum.owner(), s.id());
    let report = check_axioms(s);
    let t = &spectrum.topology;
    let mut order_violations = Vec::new();
    let mut prec_violations = Vec::new();
    for p in s.elements() {
        for q in s.elements() {
            let (sp, sq) = (spectrum.basic_open(p), spectrum.basic_open(q));
            if s.leq(p, q) != subset(sp, sq) {
                order_violations.push((p, q));
            }
            let wb = t.way_below(sp, sq).expect("basic opens are open");
            if s.prec(p, q) != wb {
                prec_violations.push((p, q));
            }
        }
    }
    let mut images: Vec<u32> = spectrum.basic_opens.clone();
    images.sort_unstable();
    images.dedup();
    RepresentationReport {
        is_predomain: report.is_predomain(),
        distributive: report.passes(Axiom::Distributive),
        order_violations,
        prec_violations,
        injective: images.len() == s.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::fixtures::*;
    use crate::sober::sober_check;

    fn brute_points(s: &Structure) -> Vec<u32> {
        // oracle straight from the definitions, independent of both enumerators
        (0u32..(1 << s.len()))
            .filter(|&m| {
                let members: Vec<usize> = (0..s.len()).filter(|&p| m >> p & 1 == 1).collect();
                let inside = |p: usize| m >> p & 1 == 1;
                let up = members.iter().all(|&p| (0..s.len()).all(|q| !s.leq(p, q) || inside(q)));
                let directed = members.iter().all(|&p| {
                    members
                        .iter()
                        .all(|&q| members.iter().any(|&r| s.leq(r, p) && s.leq(r, q)))
                });
                let prime = (0..s.len())
                    .all(|p| (0..s.len()).all(|q| !inside(s.join(p, q)) || inside(p) || inside(q)));
                let round = members.iter().all(|&p| members.iter().any(|&r| s.prec(r, p)));
                !members.is_empty() && members.len() < s.len() && up && directed && prime && round
            })
            .collect()
    }

    #[test]
    fn chain_spectrum() {
        let s = c3();
        let sp = enumerate_spectrum(&s);
        let shown: Vec<String> = sp.points.iter().map(|p| s.render(p)).collect();
        assert_eq!(shown, vec!["{1}", "{a,1}"]);
        assert_eq!(brute_points(&s), vec![0b100, 0b110]);
        // Ŝ_0 = ∅, Ŝ_a = {↑a}, Ŝ_1 = {↑a, ↑1}
        let up_a = sp.index_of(0b110).unwrap();
        assert_eq!(sp.basic_open(0), 0);
        assert_eq!(sp.basic_open(1), bit(up_a));
        assert_eq!(sp.basic_open(2), 0b11);
        assert_eq!(sp, enumerate_spectrum_exhaustive(&s));
        assert!(sober_check(&sp.topology).is_sober);
    }

    #[test]
    fn empty_spectra() {
        for s in [m3(), s2_strict()] {
            let sp = enumerate_spectrum(&s);
            assert!(sp.is_empty());
            assert!(brute_points(&s).is_empty());
            assert_eq!(sp, enumerate_spectrum_exhaustive(&s));
        }
    }

    #[test]
    fn extension_in_chain() {
        let s = c3();
        let e = extend_to_prime(&s, &s.set_of([0]), &s.set_of([2])).unwrap();
        assert_eq!(s.render(&e.prime), "{1}");
        assert_eq!(s.render(&e.maximal_ideal), "{0,a}");
        assert!(e.failed_hypotheses.is_empty());
    }

    #[test]
    fn extension_in_m3_fails() {
        let s = m3();
        let f = s.set_of_labels(["x", "1"]);
        assert!(s.is_round_filter(&f));
        let err = extend_to_prime(&s, &s.set_of([0]), &f).unwrap_err();
        match err {
            ExtensionError::NoExtension {
                failed_hypotheses, ..
            } => assert_eq!(failed_hypotheses, vec![Axiom::Distributive]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn extension_rejects_bad_input() {
        let s = s2_strict();
        let err = extend_to_prime(&s, &s.set_of([0]), &s.set_of([0, 1])).unwrap_err();
        assert!(matches!(err, ExtensionError::BadInput(_)));
        let c = c3();
        assert!(matches!(
            extend_to_prime(&c, &c.set_of([0, 2]), &c.set_of([2])),
            Err(ExtensionError::BadInput("first argument is not an ideal"))
        ));
        assert!(matches!(
            extend_to_prime(&c, &c.set(0), &c.set(0)),
            Err(ExtensionError::BadInput("filter is empty"))
        ));
    }

    #[test]
    fn interpolant_in_chain() {
        let s = c3();
        let sp = enumerate_spectrum(&s);
        let ci = compact_interpolant(&s, &sp, 1, 2).unwrap();
        assert_eq!(ci.points, sp.basic_open(1));
        assert!(ci.holds());
        assert_eq!(s.render(&ci.filter), "{a,1}");

        let from_bottom = compact_interpolant(&s, &sp, 0, 1).unwrap();
        assert!(from_bottom.holds());
        assert!(subset(from_bottom.points, sp.basic_open(1)));

        assert_eq!(
            compact_interpolant(&s, &sp, 2, 1).unwrap_err(),
            InterpolantError::NotPrec("1".into(), "a".into())
        );
    }

    #[test]
    fn interpolant_with_empty_spectrum() {
        let s = s2_strict();
        let sp = enumerate_spectrum(&s);
        let ci = compact_interpolant(&s, &sp, 0, 1).unwrap();
        assert_eq!(ci.points, 0);
        assert!(ci.holds());
    }

    #[test]
    fn interpolant_needs_hypotheses() {
        let s = m3();
        let sp = enumerate_spectrum(&s);
        assert_eq!(
            compact_interpolant(&s, &sp, 1, 4).unwrap_err(),
            InterpolantError::HypothesesFail(vec![Axiom::Distributive])
        );
    }

    #[test]
    fn representation_examples() {
        let r = verify_representation(&c3());
        assert!(r.holds());
        assert!(r.is_predomain && r.distributive);

        let r = verify_representation(&m3());
        assert!(!r.distributive);
        assert!(r.order_violations.contains(&(1, 2)));
        assert!(!r.injective);

        let r = verify_representation(&s2_strict());
        assert!(r.order_violations.contains(&(1, 0)));
    }
}
