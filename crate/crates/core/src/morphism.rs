//! Relational morphisms between structures, partial continuous maps between
//! finite spaces, and the constructions passing between them.

use std::fmt;

use crate::axioms::{check_axioms, Axiom};
use crate::bits::{bit, bits, has};
use crate::order::{Structure, StructureId};
use crate::relation::BitMatrix;
use crate::space::{FiniteSpace, SpaceId};
use crate::spectrum::SpectrumResult;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MorphismError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("relation is not a morphism: {axiom} fails at {witness}")]
    NotAMorphism { axiom: MorphismAxiom, witness: String },
    #[error("image of {point} is {image}, which is not a spectrum point")]
    ImageNotPoint { point: String, image: String },
    #[error("preimage of {0} is not open")]
    NotContinuous(String),
    #[error("map sends point {0} outside the target")]
    PointOutOfRange(usize),
    #[error("hypotheses fail: {0}")]
    HypothesesFail(String),
}

fn mismatch(expected: impl fmt::Display, found: impl fmt::Display) -> MorphismError {
    MorphismError::DimensionMismatch {
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

/// A relation `⊏ ⊆ S × S′` tagged with the identities of both structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelMorphism {
    source: StructureId,
    target: StructureId,
    pairs: BitMatrix,
}

impl RelMorphism {
    pub fn new(source: &Structure, target: &Structure, pairs: BitMatrix) -> Result<Self, MorphismError> {
        if pairs.rows() != source.len() || pairs.cols() != target.len() {
            return Err(mismatch(
                format!("{}×{}", source.len(), target.len()),
                format!("{}×{}", pairs.rows(), pairs.cols()),
            ));
        }
        Ok(RelMorphism {
            source: source.id(),
            target: target.id(),
            pairs,
        })
    }

    pub fn from_fn(source: &Structure, target: &Structure, f: impl FnMut(usize, usize) -> bool) -> Self {
        let pairs = BitMatrix::from_fn(source.len(), target.len(), f);
        RelMorphism::new(source, target, pairs).expect("dimensions taken from the structures")
    }

    /// `≤`, the identity of the category of morphisms.
    pub fn identity(s: &Structure) -> Self {
        RelMorphism::new(s, s, s.leq_matrix()).unwrap()
    }

    /// `≺`, the identity among `∨`-morphisms.
    pub fn prec(s: &Structure) -> Self {
        RelMorphism::new(s, s, s.prec_matrix()).unwrap()
    }

    pub fn empty(source: &Structure, target: &Structure) -> Self {
        RelMorphism::from_fn(source, target, |_, _| false)
    }

    pub fn full(source: &Structure, target: &Structure) -> Self {
        RelMorphism::from_fn(source, target, |_, _| true)
    }

    pub fn source(&self) -> StructureId {
        self.source
    }

    pub fn target(&self) -> StructureId {
        self.target
    }

    pub fn pairs(&self) -> &BitMatrix {
        &self.pairs
    }

    pub fn relates(&self, p: usize, q: usize) -> bool {
        self.pairs.get(p, q)
    }

    /// `P^⊏ = {p′ : ∃p ∈ P, p ⊏ p′}`.
    pub fn image(&self, set: u32) -> u32 {
        self.pairs.image(set)
    }

    /// `{p : p ⊏ p′}`.
    pub fn column(&self, p_prime: usize) -> u32 {
        self.pairs.column(p_prime)
    }

    fn assert_over(&self, source: &Structure, target: &Structure) {
        assert_eq!(self.source, source.id(), "relation source differs from the given structure");
        assert_eq!(self.target, target.id(), "relation target differs from the given structure");
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MorphismAxiom {
    Faithful,
    Auxiliary,
    Pushforward,
    VeePullback,
    LeftInterpolation,
    VeePreserving,
    Total,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Source,
    Target,
}

impl MorphismAxiom {
    pub const ALL: [MorphismAxiom; 7] = [
        MorphismAxiom::Faithful,
        MorphismAxiom::Auxiliary,
        MorphismAxiom::Pushforward,
        MorphismAxiom::VeePullback,
        MorphismAxiom::LeftInterpolation,
        MorphismAxiom::VeePreserving,
        MorphismAxiom::Total,
    ];

    /// The conditions defining a morphism.
    pub const REQUIRED: [MorphismAxiom; 4] = [
        MorphismAxiom::Faithful,
        MorphismAxiom::Auxiliary,
        MorphismAxiom::Pushforward,
        MorphismAxiom::VeePullback,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MorphismAxiom::Faithful => "faithful",
            MorphismAxiom::Auxiliary => "auxiliary",
            MorphismAxiom::Pushforward => "pushforward",
            MorphismAxiom::VeePullback => "join_pullback",
            MorphismAxiom::LeftInterpolation => "left_interpolation",
            MorphismAxiom::VeePreserving => "join_preserving",
            MorphismAxiom::Total => "total",
        }
    }

    pub fn roles(self) -> &'static [(&'static str, Side)] {
        use Side::*;
        match self {
            MorphismAxiom::Faithful => &[("p", Source)],
            MorphismAxiom::Auxiliary => &[("p", Source), ("q", Source), ("q′", Target), ("p′", Target)],
            MorphismAxiom::Pushforward | MorphismAxiom::VeePullback => {
                &[("p", Source), ("q", Source), ("r′", Target), ("s′", Target)]
            }
            MorphismAxiom::LeftInterpolation => &[("p", Source), ("p′", Target)],
            MorphismAxiom::VeePreserving => &[("q", Source), ("r", Source), ("p′", Target)],
            MorphismAxiom::Total => &[("p", Source), ("q", Source)],
        }
    }
}

impl fmt::Display for MorphismAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismViolation {
    pub axiom: MorphismAxiom,
    /// Indices in the order given by [`MorphismAxiom::roles`].
    pub elements: Vec<usize>,
}

impl MorphismViolation {
    pub fn render(&self, source: &Structure, target: &Structure) -> String {
        self.axiom
            .roles()
            .iter()
            .zip(&self.elements)
            .map(|((role, side), &e)| {
                let label = match side {
                    Side::Source => source.label(e),
                    Side::Target => target.label(e),
                };
                format!("{role}={label}")
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    pub results: Vec<(MorphismAxiom, Option<MorphismViolation>)>,
}

impl MorphismReport {
    pub fn violation(&self, axiom: MorphismAxiom) -> Option<&MorphismViolation> {
        self.results
            .iter()
            .find(|(a, _)| *a == axiom)
            .and_then(|(_, v)| v.as_ref())
    }

    pub fn passes(&self, axiom: MorphismAxiom) -> bool {
        self.violation(axiom).is_none()
    }

    pub fn is_morphism(&self) -> bool {
        MorphismAxiom::REQUIRED.iter().all(|&a| self.passes(a))
    }

    pub fn is_vee_morphism(&self) -> bool {
        self.is_morphism()
            && self.passes(MorphismAxiom::LeftInterpolation)
            && self.passes(MorphismAxiom::VeePreserving)
    }

    /// First failing required condition.
    pub fn first_failure(&self) -> Option<&MorphismViolation> {
        MorphismAxiom::REQUIRED.iter().find_map(|&a| self.violation(a))
    }

    pub fn render(&self, source: &Structure, target: &Structure) -> String {
        let mut out = String::new();
        for (axiom, v) in &self.results {
            let optional = !MorphismAxiom::REQUIRED.contains(axiom);
            let tag = if optional { " (optional)" } else { "" };
            match v {
                None => out.push_str(&format!("{axiom}{tag}: pass\n")),
                Some(v) => out.push_str(&format!("{axiom}{tag}: FAIL at {}\n", v.render(source, target))),
            }
        }
        out
    }
}

pub fn check_morphism(m: &RelMorphism, source: &Structure, target: &Structure) -> MorphismReport {
    m.assert_over(source, target);
    let results = MorphismAxiom::ALL
        .into_iter()
        .map(|a| (a, check_one(a, m, source, target)))
        .collect();
    MorphismReport { results }
}

fn violation(axiom: MorphismAxiom, elements: Vec<usize>) -> Option<MorphismViolation> {
    Some(MorphismViolation { axiom, elements })
}

fn check_one(axiom: MorphismAxiom, m: &RelMorphism, s: &Structure, t: &Structure) -> Option<MorphismViolation> {
    let rel = |p, q| m.relates(p, q);
    match axiom {
        MorphismAxiom::Faithful => {
            let bad = m.column(t.bottom()) & !bit(s.bottom());
            (bad != 0).then(|| MorphismViolation {
                axiom,
                elements: vec![bad.trailing_zeros() as usize],
            })
        }
        MorphismAxiom::Auxiliary => {
            for p in s.elements() {
                for q in bits(s.above(p)) {
                    for q1 in bits(m.pairs.row(q)) {
                        let missing = t.above(q1) & !m.pairs.row(p);
                        if missing != 0 {
                            return violation(axiom, vec![p, q, q1, missing.trailing_zeros() as usize]);
                        }
                    }
                }
            }
            None
        }
        MorphismAxiom::Pushforward => {
            for p in s.elements() {
                for q in bits(s.successors_mask(p)) {
                    let row = m.pairs.row(q);
                    for r1 in bits(row) {
                        for s1 in bits(row) {
                            let between = m.pairs.row(p) & t.predecessors_mask(r1) & t.predecessors_mask(s1);
                            if between == 0 {
                                return violation(axiom, vec![p, q, r1, s1]);
                            }
                        }
                    }
                }
            }
            None
        }
        MorphismAxiom::VeePullback => {
            let n = t.len();
            // joins[r′][s′] = {r ∨ s : r ⊏ r′, s ⊏ s′}
            let joins: Vec<Vec<u32>> = (0..n)
                .map(|r1| {
                    (0..n)
                        .map(|s1| {
                            let mut acc = 0;
                            for r in bits(m.column(r1)) {
                                for x in bits(m.column(s1)) {
                                    acc |= bit(s.join(r, x));
                                }
                            }
                            acc
                        })
                        .collect()
                })
                .collect();
            for p in s.elements() {
                let up = s.successors_mask(p);
                for q in bits(up) {
                    for r1 in t.elements() {
                        for s1 in t.elements() {
                            if rel(q, t.join(r1, s1)) && joins[r1][s1] & up == 0 {
                                return violation(axiom, vec![p, q, r1, s1]);
                            }
                        }
                    }
                }
            }
            None
        }
        MorphismAxiom::LeftInterpolation => {
            for (p, p1) in m.pairs.pairs() {
                if s.successors_mask(p) & m.column(p1) == 0 {
                    return violation(axiom, vec![p, p1]);
                }
            }
            None
        }
        MorphismAxiom::VeePreserving => {
            for p1 in t.elements() {
                let col = m.column(p1);
                for q in bits(col) {
                    for r in bits(col) {
                        if !has(col, s.join(q, r)) {
                            return violation(axiom, vec![q, r, p1]);
                        }
                    }
                }
            }
            None
        }
        MorphismAxiom::Total => {
            for p in s.elements() {
                if m.pairs.row(p) == 0 {
                    if let Some(q) = bits(s.successors_mask(p)).next() {
                        return violation(axiom, vec![p, q]);
                    }
                }
            }
            None
        }
    }
}

/// `p (⊏ ∘ ⊏′) p″ ⟺ ∃p′ (p ⊏ p′ ⊏′ p″)`.
pub fn compose(a: &RelMorphism, b: &RelMorphism) -> Result<RelMorphism, MorphismError> {
    if a.target != b.source || a.pairs.cols() != b.pairs.rows() {
        return Err(mismatch(
            format!("middle structure with {} elements", a.pairs.cols()),
            format!("{} elements", b.pairs.rows()),
        ));
    }
    Ok(RelMorphism {
        source: a.source,
        target: b.target,
        pairs: a.pairs.compose(&b.pairs).expect("dimensions checked"),
    })
}

/// [`compose`], asserting closure of the morphism conditions when all three
/// structures are distributive predomains and both inputs are morphisms.
pub fn compose_checked(
    a: &RelMorphism,
    b: &RelMorphism,
    s: &Structure,
    t: &Structure,
    u: &Structure,
) -> Result<RelMorphism, MorphismError> {
    a.assert_over(s, t);
    b.assert_over(t, u);
    let c = compose(a, b)?;
    let in_category = [s, t, u].iter().all(|x| is_distributive_predomain(x));
    if in_category && check_morphism(a, s, t).is_morphism() && check_morphism(b, t, u).is_morphism() {
        let report = check_morphism(&c, s, u);
        assert!(
            report.is_morphism(),
            "composite of morphisms fails {}",
            report.first_failure().unwrap().axiom
        );
    }
    Ok(c)
}

pub fn is_distributive_predomain(s: &Structure) -> bool {
    let r = check_axioms(s);
    r.is_predomain() && r.passes(Axiom::Distributive)
}

/// `p ⊏_∨ p′ ⟺ ∃` finite `F ⊆ {q : q ⊏ p′}` with `p ≺ ⋁F`. `F = ∅` is allowed.
pub fn vee_closure(m: &RelMorphism, source: &Structure) -> RelMorphism {
    assert_eq!(m.source, source.id());
    let cols = m.pairs.cols();
    let joins: Vec<u32> = (0..cols).map(|p1| source.join_closure(m.column(p1))).collect();
    let pairs = BitMatrix::from_fn(source.len(), cols, |p, p1| source.successors_mask(p) & joins[p1] != 0);
    RelMorphism {
        source: m.source,
        target: m.target,
        pairs,
    }
}

/// `φ_⊏`: each source spectrum point `P` with `P^⊏ ≠ ∅` goes to `P^⊏`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumMap {
    /// Target spectrum index for each source spectrum point.
    pub assignment: Vec<Option<usize>>,
}

impl SpectrumMap {
    pub fn domain(&self) -> u32 {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, a)| a.is_some())
            .fold(0, |acc, (i, _)| acc | bit(i))
    }

    pub fn preimage(&self, set: u32) -> u32 {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, a)| matches!(a, Some(j) if has(set, *j)))
            .fold(0, |acc, (i, _)| acc | bit(i))
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &SpectrumMap) -> SpectrumMap {
        SpectrumMap {
            assignment: self
                .assignment
                .iter()
                .map(|a| a.and_then(|j| next.assignment[j]))
                .collect(),
        }
    }
}

pub fn spectrum_map(
    m: &RelMorphism,
    source: &Structure,
    target: &Structure,
    source_spectrum: &SpectrumResult,
    target_spectrum: &SpectrumResult,
) -> Result<SpectrumMap, MorphismError> {
    m.assert_over(source, target);
    assert_eq!(source_spectrum.owner(), source.id());
    assert_eq!(target_spectrum.owner(), target.id());
    let report = check_morphism(m, source, target);
    if let Some(v) = report.first_failure() {
        return Err(MorphismError::NotAMorphism {
            axiom: v.axiom,
            witness: v.render(source, target),
        });
    }
    let mut assignment = Vec::with_capacity(source_spectrum.len());
    for point in &source_spectrum.points {
        let image = m.image(point.bits());
        if image == 0 {
            assignment.push(None);
            continue;
        }
        match target_spectrum.index_of(image) {
            Some(j) => assignment.push(Some(j)),
            None => {
                return Err(MorphismError::ImageNotPoint {
                    point: source.render(point),
                    image: target.render_mask(image),
                })
            }
        }
    }
    let map = SpectrumMap { assignment };
    for p1 in target.elements() {
        let expected = bits(m.column(p1)).fold(0, |acc, p| acc | source_spectrum.basic_open(p));
        assert_eq!(
            map.preimage(target_spectrum.basic_open(p1)),
            expected,
            "preimage of a basic open differs from the union of basic opens related to it"
        );
    }
    Ok(map)
}

/// A partial function between the points of two finite spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialMap {
    source: SpaceId,
    target: SpaceId,
    assignment: Vec<Option<usize>>,
}

impl PartialMap {
    /// Validates that the domain is open and every basis member of the target
    /// has an open preimage.
    pub fn new(
        source: &FiniteSpace,
        target: &FiniteSpace,
        assignment: Vec<Option<usize>>,
    ) -> Result<PartialMap, MorphismError> {
        if assignment.len() != source.n_points() {
            return Err(mismatch(
                format!("{} points", source.n_points()),
                format!("{} assignments", assignment.len()),
            ));
        }
        if let Some(&y) = assignment.iter().flatten().find(|&&y| y >= target.n_points()) {
            return Err(MorphismError::PointOutOfRange(y));
        }
        let map = PartialMap {
            source: source.id(),
            target: target.id(),
            assignment,
        };
        let t = source.topology();
        if !t.is_open(map.domain()) {
            return Err(MorphismError::NotContinuous(target.render_points(target.topology().full())));
        }
        for &b in target.basis() {
            if !t.is_open(map.preimage(b)) {
                return Err(MorphismError::NotContinuous(target.render_points(b)));
            }
        }
        Ok(map)
    }

    pub fn identity(space: &FiniteSpace) -> PartialMap {
        PartialMap {
            source: space.id(),
            target: space.id(),
            assignment: (0..space.n_points()).map(Some).collect(),
        }
    }

    pub fn source(&self) -> SpaceId {
        self.source
    }

    pub fn target(&self) -> SpaceId {
        self.target
    }

    pub fn assignment(&self) -> &[Option<usize>] {
        &self.assignment
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.assignment[x]
    }

    pub fn domain(&self) -> u32 {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, a)| a.is_some())
            .fold(0, |acc, (i, _)| acc | bit(i))
    }

    pub fn preimage(&self, set: u32) -> u32 {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, a)| matches!(a, Some(y) if has(set, *y)))
            .fold(0, |acc, (i, _)| acc | bit(i))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &PartialMap) -> Result<PartialMap, MorphismError> {
        if self.target != next.source {
            return Err(mismatch("maps sharing a middle space", "unrelated spaces"));
        }
        Ok(PartialMap {
            source: self.source,
            target: next.target,
            assignment: self
                .assignment
                .iter()
                .map(|a| a.and_then(|y| next.assignment[y]))
                .collect(),
        })
    }
}

/// `p ⊏_φ p′ ⟺ p ⋐ φ⁻¹[p′]` on the derived structures.
pub fn morphism_of_map(
    map: &PartialMap,
    source: &FiniteSpace,
    target: &FiniteSpace,
) -> Result<RelMorphism, MorphismError> {
    assert_eq!(map.source, source.id());
    assert_eq!(map.target, target.id());
    let t = source.topology();
    let mut pairs = BitMatrix::empty(source.basis().len(), target.basis().len());
    for (j, &b1) in target.basis().iter().enumerate() {
        let pre = map.preimage(b1);
        for (i, &b) in source.basis().iter().enumerate() {
            let wb = t
                .way_below(b, pre)
                .map_err(|_| MorphismError::NotContinuous(target.render_points(b1)))?;
            pairs.set(i, j, wb);
        }
    }
    RelMorphism::new(source.structure(), target.structure(), pairs)
}

/// Both sides of the functor law for composites of relations, on every point
/// of the source spectrum.
pub fn check_spectrum_functor(
    a: &RelMorphism,
    b: &RelMorphism,
    structures: [&Structure; 3],
    spectra: [&SpectrumResult; 3],
) -> Result<bool, MorphismError> {
    let [s, t, u] = structures;
    let [ss, st, su] = spectra;
    let fa = spectrum_map(a, s, t, ss, st)?;
    let fb = spectrum_map(b, t, u, st, su)?;
    let ab = compose(a, b)?;
    let fab = spectrum_map(&ab, s, u, ss, su)?;
    let expected_domain = fa.preimage(fb.domain());
    Ok(fab.domain() == expected_domain && fab == fa.then(&fb))
}

/// `⊏_{φ′∘φ} = ⊏_φ ∘ ⊏_{φ′}`.
pub fn check_map_composition(
    phi: &PartialMap,
    phi2: &PartialMap,
    spaces: [&FiniteSpace; 3],
) -> Result<bool, MorphismError> {
    let [x, y, z] = spaces;
    let composite = phi.then(phi2)?;
    let lhs = morphism_of_map(&composite, x, z)?;
    let rhs = compose(&morphism_of_map(phi, x, y)?, &morphism_of_map(phi2, y, z)?)?;
    Ok(lhs == rhs)
}

/// `S′_{φ(x)} = (S_x)^{⊏_φ}` for points in the domain, and `(S_x)^{⊏_φ} = ∅`
/// outside it.
pub fn check_point_naturality(
    map: &PartialMap,
    source: &FiniteSpace,
    target: &FiniteSpace,
) -> Result<bool, MorphismError> {
    let rel = morphism_of_map(map, source, target)?;
    Ok((0..source.n_points()).all(|x| {
        let image = rel.image(source.point_filter(x).bits());
        match map.apply(x) {
            Some(y) => image == target.point_filter(y).bits(),
            None => image == 0,
        }
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeeRepresentation {
    /// `⊏_∨`.
    pub closure: RelMorphism,
    /// `Ŝ_p ⋐ φ_⊏⁻¹[Ŝ′_{p′}]`.
    pub spatial: BitMatrix,
    pub mismatches: Vec<(usize, usize)>,
}

impl VeeRepresentation {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `⊏_∨` with the relation induced by `φ_⊏` between basic opens.
pub fn verify_vee_representation(
    m: &RelMorphism,
    source: &Structure,
    target: &Structure,
    source_spectrum: &SpectrumResult,
    target_spectrum: &SpectrumResult,
) -> Result<VeeRepresentation, MorphismError> {
    for (x, side) in [(source, "source"), (target, "target")] {
        if !is_distributive_predomain(x) {
            return Err(MorphismError::HypothesesFail(format!(
                "{side} is not a distributive predomain"
            )));
        }
    }
    let map = spectrum_map(m, source, target, source_spectrum, target_spectrum)?;
    let closure = vee_closure(m, source);
    let t = &source_spectrum.topology;
    let spatial = BitMatrix::from_fn(source.len(), target.len(), |p, p1| {
        let pre = map.preimage(target_spectrum.basic_open(p1));
        t.way_below(source_spectrum.basic_open(p), pre)
            .expect("preimages of basic opens are open")
    });
    let mismatches = spatial
        .pairs()
        .chain(closure.pairs.pairs())
        .filter(|&(p, q)| spatial.get(p, q) != closure.relates(p, q))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    Ok(VeeRepresentation {
        closure,
        spatial,
        mismatches,
    })
}

/// `≤ ∘ ⊏ = ⊏ = ⊏ ∘ ≤′`.
pub fn leq_is_identity_for(m: &RelMorphism, source: &Structure, target: &Structure) -> bool {
    let left = compose(&RelMorphism::identity(source), m).unwrap();
    let right = compose(m, &RelMorphism::identity(target)).unwrap();
    &left == m && &right == m
}

/// `≺ ∘ ⊏ = ⊏ = ⊏ ∘ ≺′`, the identity law among `∨`-morphisms.
pub fn prec_is_identity_for(m: &RelMorphism, source: &Structure, target: &Structure) -> bool {
    let left = compose(&RelMorphism::prec(source), m).unwrap();
    let right = compose(m, &RelMorphism::prec(target)).unwrap();
    &left == m && &right == m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::fixtures::*;
    use crate::spectrum::enumerate_spectrum;

    #[test]
    fn identity_is_a_morphism() {
        let s = c3();
        let r = check_morphism(&RelMorphism::identity(&s), &s, &s);
        assert!(r.is_morphism());
        assert!(r.passes(MorphismAxiom::Total));
    }

    #[test]
    fn empty_and_full_relations() {
        let s = c3();
        let r = check_morphism(&RelMorphism::empty(&s, &s), &s, &s);
        assert!(r.is_morphism());
        let v = r.violation(MorphismAxiom::Total).unwrap();
        assert_eq!(v.render(&s, &s), "p=0, q=0");

        let r = check_morphism(&RelMorphism::full(&s, &s), &s, &s);
        let v = r.violation(MorphismAxiom::Faithful).unwrap();
        assert_eq!(v.render(&s, &s), "p=a");
        assert!(!r.is_morphism());
    }

    #[test]
    fn composition_examples() {
        let s = c3();
        let id = RelMorphism::identity(&s);
        assert_eq!(compose(&id, &id).unwrap(), id);
        let e = RelMorphism::empty(&s, &s);
        assert_eq!(compose(&e, &id).unwrap(), e);
        let p = RelMorphism::prec(&s);
        assert_eq!(compose(&p, &p).unwrap(), p);
        let t = m3();
        let into_t = RelMorphism::empty(&s, &t);
        assert!(matches!(
            compose(&into_t, &id),
            Err(MorphismError::DimensionMismatch { .. })
        ));
        assert!(leq_is_identity_for(&id, &s, &s));
    }

    #[test]
    fn spectrum_map_examples() {
        let s = c3();
        let sp = enumerate_spectrum(&s);
        let id = spectrum_map(&RelMorphism::identity(&s), &s, &s, &sp, &sp).unwrap();
        assert_eq!(id.assignment, vec![Some(0), Some(1)]);
        let e = spectrum_map(&RelMorphism::empty(&s, &s), &s, &s, &sp, &sp).unwrap();
        assert_eq!(e.assignment, vec![None, None]);

        let t = chain(&["0", "a"]);
        let tp = enumerate_spectrum(&t);
        let pairs = [(0, 0), (0, 1), (1, 1), (2, 1)];
        let m = RelMorphism::from_fn(&s, &t, |p, q| pairs.contains(&(p, q)));
        assert!(check_morphism(&m, &s, &t).is_morphism());
        let f = spectrum_map(&m, &s, &t, &sp, &tp).unwrap();
        assert_eq!(f.assignment, vec![Some(0), Some(0)]);
        assert_eq!(t.render(&tp.points[0]), "{a}");

        let full = RelMorphism::full(&s, &s);
        assert!(matches!(
            spectrum_map(&full, &s, &s, &sp, &sp),
            Err(MorphismError::NotAMorphism {
                axiom: MorphismAxiom::Faithful,
                ..
            })
        ));
    }

    #[test]
    fn vee_closure_examples() {
        let s = c3();
        let id = RelMorphism::identity(&s);
        assert_eq!(vee_closure(&id, &s), RelMorphism::prec(&s));
        let e = vee_closure(&RelMorphism::empty(&s, &s), &s);
        // p ≺ 0 only for p = 0
        assert_eq!(e.pairs().pairs().collect::<Vec<_>>(), vec![(0, 0), (0, 1), (0, 2)]);
        let single = RelMorphism::from_fn(&s, &s, |p, q| (p, q) == (0, 1));
        let v = vee_closure(&single, &s);
        assert!(v.relates(0, 1));
        assert_eq!(v.pairs().count(), 3);
    }

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn maps_between_spaces() {
        let x = FiniteSpace::new(labels(&["x", "y"]), vec![0, 0b10, 0b11], None).unwrap();
        let id = PartialMap::identity(&x);
        let rel = morphism_of_map(&id, &x, &x).unwrap();
        assert_eq!(rel.pairs(), &x.structure().leq_matrix());

        let to_y = PartialMap::new(&x, &x, vec![Some(1), Some(1)]).unwrap();
        let rel = morphism_of_map(&to_y, &x, &x).unwrap();
        for p in 0..3 {
            for q in 0..3 {
                // ∅ ⋐ ∅ puts the empty basis member below everything
                assert_eq!(rel.relates(p, q), p == 0 || has(x.basis()[q], 1));
            }
        }

        let nowhere = PartialMap::new(&x, &x, vec![None, None]).unwrap();
        let rel = morphism_of_map(&nowhere, &x, &x).unwrap();
        assert_eq!(rel.pairs().pairs().collect::<Vec<_>>(), vec![(0, 0), (0, 1), (0, 2)]);

        // sending the open point to the closed one is not continuous
        assert!(matches!(
            PartialMap::new(&x, &x, vec![Some(1), Some(0)]),
            Err(MorphismError::NotContinuous(_))
        ));
        // domain {x} is not open
        assert!(matches!(
            PartialMap::new(&x, &x, vec![Some(0), None]),
            Err(MorphismError::NotContinuous(_))
        ));

        assert!(check_map_composition(&id, &id, [&x, &x, &x]).unwrap());
        assert!(check_map_composition(&to_y, &id, [&x, &x, &x]).unwrap());
        assert!(check_point_naturality(&id, &x, &x).unwrap());
        assert!(check_point_naturality(&nowhere, &x, &x).unwrap());
    }

    #[test]
    fn vee_representation_examples() {
        let s = c3();
        let sp = enumerate_spectrum(&s);
        let id = RelMorphism::identity(&s);
        let r = verify_vee_representation(&id, &s, &s, &sp, &sp).unwrap();
        assert!(r.holds());
        let e = RelMorphism::empty(&s, &s);
        assert!(verify_vee_representation(&e, &s, &s, &sp, &sp).unwrap().holds());
        let t = m3();
        let tp = enumerate_spectrum(&t);
        assert!(matches!(
            verify_vee_representation(&RelMorphism::identity(&t), &t, &t, &tp, &tp),
            Err(MorphismError::HypothesesFail(_))
        ));
    }

    #[test]
    fn functor_on_identities() {
        let s = c3();
        let sp = enumerate_spectrum(&s);
        let id = RelMorphism::identity(&s);
        assert!(check_spectrum_functor(&id, &id, [&s, &s, &s], [&sp, &sp, &sp]).unwrap());
    }
}
