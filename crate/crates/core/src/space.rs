//! Finite spaces with a designated union-basis, and the passage between such
//! spaces and structures `(S, ⊆, ⋐)`.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeSet;
use std::hash::{Hash, Hasher};

use crate::axioms::{check_axioms, Axiom, AxiomReport};
use crate::bits::{bit, bits, has, subset};
use crate::order::{ElementSet, RawStructure, Structure, MAX_ELEMENTS};
use crate::sober::{core_compact_check, sober_check};
use crate::spectrum::{enumerate_spectrum, verify_representation, RepresentationReport, SpectrumResult};
use crate::topology::{FiniteTopology, TopologyError};

pub const MAX_SPACE_POINTS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpaceId(u64);

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error("{0} points, at most {MAX_SPACE_POINTS} are supported")]
    TooManyPoints(usize),
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid topology: {0}")]
    Topology(#[from] TopologyError),
    #[error("basis index {0} does not name an open set")]
    BasisIndex(usize),
    #[error("the basis does not contain the empty set")]
    BasisMissingEmpty,
    #[error("basis members {0} and {1} have a union outside the basis")]
    BasisNotUnionClosed(String, String),
    #[error("open set {0} is not a union of basis members")]
    NotCoveredByBasis(String),
    #[error("basis has {0} members, at most {MAX_ELEMENTS} are supported")]
    BasisTooLarge(usize),
    #[error("space is not T0")]
    NotT0,
    #[error("space is not sober")]
    NotSober,
}

/// A validated finite space with a union-basis and its derived structure.
///
/// Basis members are kept ascending by mask; element `i` of
/// [`structure`](Self::structure) is `basis()[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    labels: Vec<String>,
    topology: FiniteTopology,
    basis: Vec<u32>,
    structure: Structure,
    id: SpaceId,
}

impl FiniteSpace {
    /// `basis` holds indices into `opens`; `None` designates every open set.
    pub fn new(
        labels: Vec<String>,
        opens: Vec<u32>,
        basis: Option<Vec<usize>>,
    ) -> Result<FiniteSpace, SpaceError> {
        let m = labels.len();
        if m > MAX_SPACE_POINTS {
            return Err(SpaceError::TooManyPoints(m));
        }
        let mut seen = BTreeSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(SpaceError::DuplicateLabel(dup.clone()));
        }
        let basis_masks: Vec<u32> = match &basis {
            None => opens.clone(),
            Some(idx) => idx
                .iter()
                .map(|&i| opens.get(i).copied().ok_or(SpaceError::BasisIndex(i)))
                .collect::<Result<_, _>>()?,
        };
        let topology = FiniteTopology::new(m, opens)?;
        let basis: Vec<u32> = basis_masks.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let render = |mask: u32| render_points(&labels, mask);
        if basis.first() != Some(&0) {
            return Err(SpaceError::BasisMissingEmpty);
        }
        for (i, &a) in basis.iter().enumerate() {
            for &b in &basis[i + 1..] {
                if basis.binary_search(&(a | b)).is_err() {
                    return Err(SpaceError::BasisNotUnionClosed(render(a), render(b)));
                }
            }
        }
        for &o in topology.opens() {
            let covered = basis
                .iter()
                .filter(|&&b| subset(b, o))
                .fold(0, |acc, &b| acc | b);
            if covered != o {
                return Err(SpaceError::NotCoveredByBasis(render(o)));
            }
        }
        if basis.len() > MAX_ELEMENTS {
            return Err(SpaceError::BasisTooLarge(basis.len()));
        }
        let structure = derive(&labels, &topology, &basis);
        let mut h = DefaultHasher::new();
        (&labels, topology.opens(), &basis).hash(&mut h);
        Ok(FiniteSpace {
            labels,
            topology,
            basis,
            structure,
            id: SpaceId(h.finish()),
        })
    }

    /// Space whose opens are the up-sets of a partial order on the points
    /// (`leq[x]` is the mask of points above `x`), with every open in the basis.
    pub fn from_up_sets(labels: Vec<String>, up: &[u32]) -> Result<FiniteSpace, SpaceError> {
        let gens: Vec<u32> = up.to_vec();
        let t = FiniteTopology::generated_by(labels.len(), gens);
        FiniteSpace::new(labels, t.opens().to_vec(), None)
    }

    pub fn id(&self) -> SpaceId {
        self.id
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn n_points(&self) -> usize {
        self.labels.len()
    }

    pub fn topology(&self) -> &FiniteTopology {
        &self.topology
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    /// `(S, ⊆, ⋐)` on the basis, with union as join and `∅` as bottom.
    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    /// Index of a basis member in [`structure`](Self::structure).
    pub fn basis_index(&self, mask: u32) -> Option<usize> {
        self.basis.binary_search(&mask).ok()
    }

    /// `S_x = {s ∈ S : x ∈ s}`.
    pub fn point_filter(&self, x: usize) -> ElementSet {
        assert!(x < self.n_points(), "point {x} out of range");
        let mask = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| has(b, x))
            .fold(0, |acc, (i, _)| acc | bit(i));
        self.structure.set(mask)
    }

    pub fn render_points(&self, mask: u32) -> String {
        render_points(&self.labels, mask)
    }
}

/// `{x,y}` in point order; `{}` for the empty set.
pub fn render_points(labels: &[String], mask: u32) -> String {
    let names: Vec<&str> = bits(mask).map(|x| labels[x].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

fn derive(labels: &[String], t: &FiniteTopology, basis: &[u32]) -> Structure {
    let raw = RawStructure::from_fns(
        basis.iter().map(|&b| render_points(labels, b)),
        |i, j| subset(basis[i], basis[j]),
        |i, j| t.way_below(basis[i], basis[j]).expect("basis members are open"),
    );
    Structure::validate(&raw).expect("a union-basis ordered by inclusion is a join-semilattice with ∅")
}

/// Outcome of comparing `x ↦ S_x` with the spectrum of the derived structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointRecovery {
    pub spectrum: SpectrumResult,
    /// Spectrum index of `S_x` for each point, when `S_x` is a spectrum point.
    pub assignment: Vec<Option<usize>>,
    pub injective: bool,
    pub surjective: bool,
    /// Basis members `s` whose image `{S_x : x ∈ s}` differs from `Ŝ_s`.
    pub mismatched_opens: Vec<usize>,
}

impl PointRecovery {
    pub fn holds(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
            && self.injective
            && self.surjective
            && self.mismatched_opens.is_empty()
    }
}

/// Checks that `x ↦ S_x` is a homeomorphism from the space onto the spectrum
/// of its derived structure, carrying each basis member `s` onto `Ŝ_s`.
pub fn verify_point_recovery(space: &FiniteSpace) -> Result<PointRecovery, SpaceError> {
    let t = space.topology();
    let sober = sober_check(t);
    if !sober.is_t0 {
        return Err(SpaceError::NotT0);
    }
    if !sober.is_sober {
        return Err(SpaceError::NotSober);
    }
    debug_assert!(core_compact_check(t));
    let s = space.structure();
    let spectrum = enumerate_spectrum(s);
    let assignment: Vec<Option<usize>> = (0..space.n_points())
        .map(|x| spectrum.index_of(space.point_filter(x).bits()))
        .collect();
    let hit: u32 = assignment.iter().flatten().fold(0, |acc, &i| acc | bit(i));
    let distinct: BTreeSet<usize> = assignment.iter().flatten().copied().collect();
    let injective = distinct.len() == assignment.len();
    let surjective = hit.count_ones() as usize == spectrum.len();
    let mismatched_opens = s
        .elements()
        .filter(|&i| {
            let image = bits(space.basis()[i])
                .filter_map(|x| assignment[x])
                .fold(0, |acc, j| acc | bit(j));
            image != spectrum.basic_open(i)
        })
        .collect();
    Ok(PointRecovery {
        spectrum,
        assignment,
        injective,
        surjective,
        mismatched_opens,
    })
}

/// The axioms every union-basis of a core compact space satisfies under `⋐`.
pub const BASIS_AXIOMS: [Axiom; 5] = [
    Axiom::Distributive,
    Axiom::Interpolative,
    Axiom::Auxiliary,
    Axiom::Approximating,
    Axiom::JoinPreserving,
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisAxioms {
    pub report: AxiomReport,
}

impl BasisAxioms {
    pub fn holds(&self) -> bool {
        self.report.all_pass(&BASIS_AXIOMS)
    }

    pub fn failures(&self) -> Vec<Axiom> {
        BASIS_AXIOMS
            .into_iter()
            .filter(|&a| !self.report.passes(a))
            .collect()
    }
}

pub fn verify_basis_axioms(space: &FiniteSpace) -> BasisAxioms {
    BasisAxioms {
        report: check_axioms(space.structure()),
    }
}

/// Whether `x ⊑ y ⟺ S_x ⊑ S_y` in the spectrum, under the point assignment.
pub fn specialization_matches(space: &FiniteSpace, recovery: &PointRecovery) -> bool {
    let own = space.topology().specialization();
    let theirs = recovery.spectrum.topology.specialization();
    let n = space.n_points();
    (0..n).all(|x| {
        (0..n).all(|y| match (recovery.assignment[x], recovery.assignment[y]) {
            (Some(i), Some(j)) => own.get(x, y) == theirs.get(i, j),
            _ => false,
        })
    })
}

/// Every check of the space-to-structure-and-back round trip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTrip {
    pub basis_axioms: BasisAxioms,
    pub point_recovery: Result<PointRecovery, SpaceError>,
    pub representation: RepresentationReport,
    pub specialization: bool,
}

impl RoundTrip {
    /// Name of the first failing check, if any.
    pub fn first_failure(&self) -> Option<String> {
        if !self.basis_axioms.holds() {
            let names: Vec<&str> = self.basis_axioms.failures().iter().map(|a| a.name()).collect();
            return Some(format!("basis axioms: {}", names.join(", ")));
        }
        match &self.point_recovery {
            Err(e) => return Some(format!("point recovery: {e}")),
            Ok(r) if !r.holds() => return Some("point recovery: x ↦ S_x is not a homeomorphism".into()),
            Ok(_) => {}
        }
        if !self.representation.holds() {
            return Some("representation: p ↦ Ŝ_p does not preserve and reflect ≤ and ≺".into());
        }
        if !self.specialization {
            return Some("specialization orders differ".into());
        }
        None
    }

    pub fn holds(&self) -> bool {
        self.first_failure().is_none()
    }
}

pub fn roundtrip(space: &FiniteSpace) -> RoundTrip {
    let point_recovery = verify_point_recovery(space);
    let specialization = match &point_recovery {
        Ok(r) => r.holds() && specialization_matches(space, r),
        Err(_) => false,
    };
    RoundTrip {
        basis_axioms: verify_basis_axioms(space),
        point_recovery,
        representation: verify_representation(space.structure()),
        specialization,
    }
}

/// The spectrum of `s` as a space, with the distinct `Ŝ_p` as its basis.
/// Points are labelled by their filters.
pub fn spectrum_space(s: &Structure) -> Result<FiniteSpace, SpaceError> {
    let spectrum = enumerate_spectrum(s);
    if spectrum.len() > MAX_SPACE_POINTS {
        return Err(SpaceError::TooManyPoints(spectrum.len()));
    }
    let labels = spectrum.points.iter().map(|p| s.render(p)).collect();
    let opens = spectrum.opens().to_vec();
    let basis = spectrum
        .basic_opens
        .iter()
        .map(|b| opens.binary_search(b).expect("basic opens are open"))
        .collect();
    FiniteSpace::new(labels, opens, Some(basis))
}

/// Whether `p ↦ Ŝ_p` is an isomorphism of `(≤, ≺)` from `s` onto the
/// structure derived from its spectrum space.
pub fn is_isomorphic_to_spectrum_basis(s: &Structure) -> Result<bool, SpaceError> {
    let space = spectrum_space(s)?;
    let spectrum = enumerate_spectrum(s);
    let d = space.structure();
    if d.len() != s.len() {
        return Ok(false);
    }
    let image: Vec<usize> = s
        .elements()
        .map(|p| space.basis_index(spectrum.basic_open(p)).expect("Ŝ_p is a basis member"))
        .collect();
    Ok(s.elements().all(|p| {
        s.elements()
            .all(|q| s.leq(p, q) == d.leq(image[p], image[q]) && s.prec(p, q) == d.prec(image[p], image[q]))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::fixtures::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn sierpinski() -> FiniteSpace {
        FiniteSpace::new(labels(&["x", "y"]), vec![0, 0b10, 0b11], None).unwrap()
    }

    #[test]
    fn validation() {
        let err = FiniteSpace::new(labels(&["x", "y"]), vec![0, 0b10, 0b11], Some(vec![1, 2])).unwrap_err();
        assert_eq!(err, SpaceError::BasisMissingEmpty);
        let err = FiniteSpace::new(labels(&["x", "y"]), vec![0, 0b10, 0b11], Some(vec![0, 1])).unwrap_err();
        assert_eq!(err, SpaceError::NotCoveredByBasis("{x,y}".into()));
        let err = FiniteSpace::new(labels(&["x", "x"]), vec![0, 0b11], None).unwrap_err();
        assert_eq!(err, SpaceError::DuplicateLabel("x".into()));
        let err = FiniteSpace::new(labels(&["x", "y"]), vec![0, 0b11], Some(vec![5])).unwrap_err();
        assert_eq!(err, SpaceError::BasisIndex(5));
        let discrete = FiniteSpace::new(labels(&["x", "y"]), vec![0, 1, 2, 3], Some(vec![0, 1, 2])).unwrap_err();
        assert_eq!(discrete, SpaceError::BasisNotUnionClosed("{x}".into(), "{y}".into()));
    }

    #[test]
    fn sierpinski_derives_chain() {
        let sp = sierpinski();
        let s = sp.structure();
        assert_eq!(s.labels(), ["{}", "{y}", "{x,y}"]);
        assert_eq!(s.leq_matrix(), c3().leq_matrix());
        assert!(s.prec_is_leq());
        assert_eq!(s.render(&sp.point_filter(1)), "{{y},{x,y}}");
        assert_eq!(s.render(&sp.point_filter(0)), "{{x,y}}");
    }

    #[test]
    fn small_derivations() {
        let one = FiniteSpace::new(labels(&["x"]), vec![0, 1], None).unwrap();
        assert_eq!(one.structure().len(), 2);
        assert!(one.structure().prec_is_leq());
        let discrete = FiniteSpace::new(labels(&["x", "y"]), vec![0, 1, 2, 3], None).unwrap();
        let s = discrete.structure();
        assert_eq!(s.len(), 4);
        assert!(s.prec_is_leq());
        assert!(!s.leq(1, 2) && !s.leq(2, 1));
    }

    #[test]
    fn point_recovery_examples() {
        let r = verify_point_recovery(&sierpinski()).unwrap();
        assert!(r.holds());
        let chain = FiniteSpace::from_up_sets(labels(&["a", "b", "c"]), &[0b111, 0b110, 0b100]).unwrap();
        let r = verify_point_recovery(&chain).unwrap();
        assert!(r.holds());
        assert_eq!(r.spectrum.len(), 3);
        let indiscrete = FiniteSpace::new(labels(&["x", "y"]), vec![0, 3], None).unwrap();
        assert_eq!(verify_point_recovery(&indiscrete).unwrap_err(), SpaceError::NotT0);
    }

    #[test]
    fn basis_axioms_examples() {
        assert!(verify_basis_axioms(&sierpinski()).holds());
        let discrete = FiniteSpace::new(labels(&["a", "b", "c"]), (0..8).collect(), None).unwrap();
        assert!(verify_basis_axioms(&discrete).holds());
        let one = FiniteSpace::new(labels(&["x"]), vec![0, 1], None).unwrap();
        assert!(verify_basis_axioms(&one).holds());
    }

    #[test]
    fn roundtrips() {
        assert!(roundtrip(&sierpinski()).holds());
        let indiscrete = FiniteSpace::new(labels(&["x", "y"]), vec![0, 3], None).unwrap();
        let rt = roundtrip(&indiscrete);
        assert_eq!(rt.first_failure().unwrap(), "point recovery: space is not T0");
    }

    #[test]
    fn structure_side() {
        assert!(is_isomorphic_to_spectrum_basis(&c3()).unwrap());
        assert!(!is_isomorphic_to_spectrum_basis(&m3()).unwrap());
        let sp = spectrum_space(&c3()).unwrap();
        assert_eq!(sp.labels(), ["{1}", "{a,1}"]);
    }
}
