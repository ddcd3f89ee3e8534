//! Counterexample search over small structures.
//!
//! Exhaustive properties walk sizes `1..=max_size`, lattices in the order of
//! [`lattices`], and for each lattice the candidate relations `≺` in the order
//! of [`SubRelations`] (or only `≺ = ≤`). The first witness in that
//! order is reported.
//! Random properties draw structures from seeds derived from the search seed.

use rayon::prelude::*;

use super::enumerate::{lattices, SubRelations};
use super::random::{gen_structure_with, PrecMode};
use crate::axioms::{check_axioms, Axiom};
use crate::bits::{bit, has};
use crate::order::Structure;
use crate::sober::sober_check;
use crate::spectrum::enumerate_spectrum;

pub const PROPERTIES: [(&str, &str); 5] = [
    (
        "prime-extension-without-distributivity",
        "lattice with ≺ = ≤, a round filter F and a disjoint ideal I such that no spectrum point contains F and avoids I",
    ),
    (
        "prime-extension-without-distributivity-any-prec",
        "as above, over every auxiliary ≺ ⊆ ≤",
    ),
    (
        "finite-predomain-with-strict-prec",
        "predomain whose ≺ differs from ≤",
    ),
    (
        "finite-predomain-with-strict-prec-above-bottom",
        "predomain whose ≺ differs from ≤ at some pair other than (0,0)",
    ),
    (
        "spectrum-not-sober",
        "structure (arbitrary ≺) whose spectrum is not sober",
    ),
];

/// Largest size the exhaustive properties accept.
pub const MAX_EXHAUSTIVE_SIZE: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub property: String,
    pub max_size: usize,
    pub seed: u64,
    pub budget: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Witness,
    /// Every instance within the bound was examined without a witness.
    Exhausted,
    /// The budget ran out before the instance space did.
    BudgetSpent,
}

impl SearchStatus {
    pub fn name(self) -> &'static str {
        match self {
            SearchStatus::Witness => "witness",
            SearchStatus::Exhausted => "exhausted",
            SearchStatus::BudgetSpent => "budget-spent",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub spec: SearchSpec,
    pub status: SearchStatus,
    pub witness: Option<Structure>,
    /// What makes the witness one, in terms of its labels.
    pub detail: Option<String>,
    pub examined: u64,
    pub transcript: Vec<String>,
}

impl SearchOutcome {
    pub fn transcript_text(&self) -> String {
        let mut s = self.transcript.join("\n");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("max size {0} is outside 1..={1}")]
    BadSize(usize, usize),
}

type Probe = fn(&Structure) -> Option<String>;

/// Which relations `≺` accompany each lattice.
#[derive(Clone, Copy)]
enum Candidates {
    Leq,
    Auxiliary,
    All,
}

pub fn search(spec: &SearchSpec) -> Result<SearchOutcome, SearchError> {
    let (probe, candidates): (Probe, Candidates) = match spec.property.as_str() {
        "prime-extension-without-distributivity" => (extension_failure, Candidates::Leq),
        "prime-extension-without-distributivity-any-prec" => (extension_failure, Candidates::Auxiliary),
        "finite-predomain-with-strict-prec" => (|s| strict_predomain(s, false), Candidates::All),
        "finite-predomain-with-strict-prec-above-bottom" => (|s| strict_predomain(s, true), Candidates::All),
        "spectrum-not-sober" => return random_search(spec, not_sober),
        other => return Err(SearchError::UnknownProperty(other.to_string())),
    };
    if !(1..=MAX_EXHAUSTIVE_SIZE).contains(&spec.max_size) {
        return Err(SearchError::BadSize(spec.max_size, MAX_EXHAUSTIVE_SIZE));
    }
    let mut transcript = header(spec, "exhaustive");
    let mut examined = 0u64;
    for n in 1..=spec.max_size {
        let lats = lattices(n);
        let families: Vec<SubRelations> = lats
            .iter()
            .map(|l| match candidates {
                Candidates::Leq => SubRelations::leq_only(l),
                Candidates::Auxiliary => {
                    let mut r = SubRelations::new(l);
                    r.retain(|s| Axiom::Auxiliary.check(s).is_none());
                    r
                }
                Candidates::All => SubRelations::new(l),
            })
            .collect();
        // offsets[k] is the global index of the first instance of family k
        let mut offsets = Vec::with_capacity(families.len());
        let mut total = 0usize;
        for f in &families {
            offsets.push(total);
            total += f.len();
        }
        let instance = |i: usize| {
            let k = offsets.partition_point(|&o| o <= i) - 1;
            families[k].get(i - offsets[k])
        };
        let remaining = spec.budget - examined;
        let truncated = (total as u64) > remaining;
        let count = total.min(remaining as usize);
        let hit = (0..count).into_par_iter().position_first(|i| probe(&instance(i)).is_some());
        match hit {
            Some(i) => {
                examined += i as u64 + 1;
                transcript.push(format!(
                    "size {n}: {} lattices, witness at instance {}",
                    lats.len(),
                    i + 1
                ));
                let w = instance(i);
                return Ok(finish_with_witness(spec, w, probe, examined, transcript));
            }
            None => {
                examined += count as u64;
                transcript.push(format!(
                    "size {n}: {} lattices, {} instances, no witness",
                    lats.len(),
                    count
                ));
                if truncated {
                    return Ok(finish(spec, SearchStatus::BudgetSpent, examined, transcript));
                }
            }
        }
    }
    Ok(finish(spec, SearchStatus::Exhausted, examined, transcript))
}

fn random_search(spec: &SearchSpec, probe: Probe) -> Result<SearchOutcome, SearchError> {
    if !(1..=crate::order::MAX_ELEMENTS).contains(&spec.max_size) {
        return Err(SearchError::BadSize(spec.max_size, crate::order::MAX_ELEMENTS));
    }
    let mut transcript = header(spec, "random");
    let draw = |i: u64| {
        let seed = spec.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i);
        let n = 1 + (seed % spec.max_size as u64) as usize;
        gen_structure_with(n, seed, PrecMode::Arbitrary)
    };
    let hit = (0..spec.budget as usize)
        .into_par_iter()
        .position_first(|i| probe(&draw(i as u64)).is_some());
    match hit {
        Some(i) => {
            transcript.push(format!("witness at draw {}", i + 1));
            Ok(finish_with_witness(spec, draw(i as u64), probe, i as u64 + 1, transcript))
        }
        None => {
            // the random instance space is unbounded, so a spent budget with no
            // witness is reported as exhausted
            transcript.push(format!("{} draws, no witness", spec.budget));
            Ok(finish(spec, SearchStatus::Exhausted, spec.budget, transcript))
        }
    }
}

fn header(spec: &SearchSpec, mode: &str) -> Vec<String> {
    vec![
        format!("property: {}", spec.property),
        format!(
            "mode: {mode}, max-size {}, seed {}, budget {}",
            spec.max_size, spec.seed, spec.budget
        ),
    ]
}

fn finish(spec: &SearchSpec, status: SearchStatus, examined: u64, mut transcript: Vec<String>) -> SearchOutcome {
    transcript.push(format!("examined: {examined}"));
    transcript.push(format!("status: {}", status.name()));
    SearchOutcome {
        spec: spec.clone(),
        status,
        witness: None,
        detail: None,
        examined,
        transcript,
    }
}

fn finish_with_witness(
    spec: &SearchSpec,
    witness: Structure,
    probe: Probe,
    examined: u64,
    mut transcript: Vec<String>,
) -> SearchOutcome {
    let detail = probe(&witness).expect("witness re-examined");
    transcript.push(format!("witness elements: {}", witness.labels().join(" ")));
    transcript.push(format!("witness ≺: {}", render_relation(&witness)));
    transcript.push(format!("witness detail: {detail}"));
    transcript.push(format!("examined: {examined}"));
    transcript.push(format!("status: {}", SearchStatus::Witness.name()));
    SearchOutcome {
        spec: spec.clone(),
        status: SearchStatus::Witness,
        witness: Some(witness),
        detail: Some(detail),
        examined,
        transcript,
    }
}

fn render_relation(s: &Structure) -> String {
    let pairs: Vec<String> = s
        .prec_matrix()
        .pairs()
        .map(|(p, q)| format!("({},{})", s.label(p), s.label(q)))
        .collect();
    format!("{{{}}}", pairs.join(","))
}

/// First round filter `F = ↑x` and element `j ∉ F` such that no spectrum
/// point contains `F` and avoids `↓j`. Nonempty filters of a finite lattice
/// are principal, and every ideal disjoint from `F` lies in some such `↓j`.
fn extension_failure(s: &Structure) -> Option<String> {
    let points: Vec<u32> = enumerate_spectrum(s).points.iter().map(|p| p.bits()).collect();
    for x in s.elements() {
        let f = s.above(x);
        if has(f, s.bottom()) || !s.is_round_filter_mask(f) {
            continue;
        }
        for j in s.elements().filter(|&j| !has(f, j)) {
            let ideal = s.below(j);
            if !points.iter().any(|&p| f & !p == 0 && p & ideal == 0) {
                let distributive = if Axiom::Distributive.check(s).is_none() { "pass" } else { "fail" };
                return Some(format!(
                    "F={}, I={}, distributive: {distributive}",
                    s.render_mask(f),
                    s.render_mask(ideal)
                ));
            }
        }
    }
    None
}

fn strict_predomain(s: &Structure, ignore_bottom: bool) -> Option<String> {
    let ignored = if ignore_bottom { Some((s.bottom(), s.bottom())) } else { None };
    let differing: Vec<(usize, usize)> = s
        .elements()
        .flat_map(|p| s.elements().map(move |q| (p, q)))
        .filter(|&(p, q)| s.leq(p, q) != s.prec(p, q) && Some((p, q)) != ignored)
        .collect();
    if differing.is_empty() || !check_axioms(s).is_predomain() {
        return None;
    }
    let shown: Vec<String> = differing
        .iter()
        .map(|&(p, q)| format!("({},{})", s.label(p), s.label(q)))
        .collect();
    Some(format!("≤ but not ≺ at {}", shown.join(",")))
}

fn not_sober(s: &Structure) -> Option<String> {
    let sp = enumerate_spectrum(s);
    let r = sober_check(&sp.topology);
    if r.is_sober && r.is_t0 {
        return None;
    }
    let bad = r
        .irreducibles
        .iter()
        .zip(&r.generic_points)
        .find(|(_, g)| !matches!(g, crate::sober::GenericPoint::Unique(_)))
        .map(|(c, _)| *c)
        .unwrap_or(0);
    Some(format!("irreducible closed set {bad:#b} without a unique generic point"))
}

/// Mask with exactly the listed labels; used in tests.
#[allow(dead_code)]
fn mask_of(s: &Structure, labels: &[&str]) -> u32 {
    labels.iter().fold(0, |acc, l| acc | bit(s.index_of(l).unwrap()))
}
