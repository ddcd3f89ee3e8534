//! Finite join-semilattices with bottom carrying an extra relation `≺`,
//! together with filters, ideals and their closure operators.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::bits::{bit, bits, full, has, subset};
use crate::relation::BitMatrix;

/// Largest supported carrier. Subsets of the carrier are `u32` masks.
pub const MAX_ELEMENTS: usize = 24;

/// Content fingerprint of a validated [`Structure`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StructureId(u64);

/// Unvalidated description of `(S, ≤, ≺, ∨, 0)`.
///
/// `join` and `bottom` may be omitted, in which case they are computed from
/// `leq`. When present they are cross-checked against `leq`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawStructure {
    pub elements: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub prec: Vec<Vec<bool>>,
    pub join: Option<Vec<Vec<usize>>>,
    pub bottom: Option<usize>,
}

impl RawStructure {
    /// Raw structure from labels and the two relations as predicates over indices.
    pub fn from_fns<L: Into<String>>(
        elements: impl IntoIterator<Item = L>,
        leq: impl Fn(usize, usize) -> bool,
        prec: impl Fn(usize, usize) -> bool,
    ) -> Self {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        let n = elements.len();
        let mat = |f: &dyn Fn(usize, usize) -> bool| {
            (0..n).map(|p| (0..n).map(|q| f(p, q)).collect()).collect()
        };
        RawStructure {
            leq: mat(&leq),
            prec: mat(&prec),
            elements,
            join: None,
            bottom: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderViolation {
    NotReflexive(String),
    NotAntisymmetric(String, String),
    NotTransitive(String, String, String),
}

impl fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderViolation::NotReflexive(p) => write!(f, "{p} ≤ {p} is missing"),
            OrderViolation::NotAntisymmetric(p, q) => {
                write!(f, "{p} ≤ {q} and {q} ≤ {p} for distinct elements")
            }
            OrderViolation::NotTransitive(p, q, r) => {
                write!(f, "{p} ≤ {q} ≤ {r} but not {p} ≤ {r}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("carrier is empty")]
    Empty,
    #[error("carrier has {0} elements, at most {MAX_ELEMENTS} are supported")]
    CarrierTooLarge(usize),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("{0} table does not match the carrier size")]
    Dimension(&'static str),
    #[error("element index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("≤ is not a partial order: {0}")]
    NotPartialOrder(OrderViolation),
    #[error("`{0}` and `{1}` have no least upper bound")]
    NoJoin(String, String),
    #[error("no element lies below every other element")]
    NoBottom,
    #[error("join table says {p} ∨ {q} = {given} but the least upper bound is {computed}")]
    JoinMismatch {
        p: String,
        q: String,
        given: String,
        computed: String,
    },
}

/// A validated finite `(S, ≤, ≺, ∨, 0)`. Immutable.
#[derive(Clone)]
pub struct Structure {
    labels: Vec<String>,
    up: Vec<u32>,
    down: Vec<u32>,
    prec_up: Vec<u32>,
    prec_down: Vec<u32>,
    join: Vec<u8>,
    bottom: usize,
    top: usize,
    id: StructureId,
}

fn ensure_square(rel: &[Vec<bool>], n: usize, name: &'static str) -> Result<(), StructureError> {
    if rel.len() != n || rel.iter().any(|r| r.len() != n) {
        return Err(StructureError::Dimension(name));
    }
    Ok(())
}

impl Structure {
    /// Validates a raw description. See [`StructureError`] for the failure modes.
    pub fn validate(raw: &RawStructure) -> Result<Structure, StructureError> {
        let n = raw.elements.len();
        if n == 0 {
            return Err(StructureError::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(StructureError::CarrierTooLarge(n));
        }
        for (i, l) in raw.elements.iter().enumerate() {
            if raw.elements[..i].contains(l) {
                return Err(StructureError::DuplicateLabel(l.clone()));
            }
        }
        ensure_square(&raw.leq, n, "leq")?;
        ensure_square(&raw.prec, n, "prec")?;
        let lab = |i: usize| raw.elements[i].clone();

        let mut up = vec![0u32; n];
        let mut down = vec![0u32; n];
        let mut prec_up = vec![0u32; n];
        let mut prec_down = vec![0u32; n];
        for p in 0..n {
            for q in 0..n {
                if raw.leq[p][q] {
                    up[p] |= bit(q);
                    down[q] |= bit(p);
                }
                if raw.prec[p][q] {
                    prec_up[p] |= bit(q);
                    prec_down[q] |= bit(p);
                }
            }
        }

        for p in 0..n {
            if !has(up[p], p) {
                return Err(StructureError::NotPartialOrder(OrderViolation::NotReflexive(lab(p))));
            }
        }
        for p in 0..n {
            for q in bits(up[p]) {
                if q != p && has(up[q], p) {
                    return Err(StructureError::NotPartialOrder(
                        OrderViolation::NotAntisymmetric(lab(p), lab(q)),
                    ));
                }
            }
        }
        for p in 0..n {
            for q in bits(up[p]) {
                let missing = up[q] & !up[p];
                if missing != 0 {
                    let r = missing.trailing_zeros() as usize;
                    return Err(StructureError::NotPartialOrder(OrderViolation::NotTransitive(
                        lab(p),
                        lab(q),
                        lab(r),
                    )));
                }
            }
        }

        let mut join = vec![0u8; n * n];
        for p in 0..n {
            for q in 0..n {
                let upper = up[p] & up[q];
                let least = bits(upper).find(|&u| subset(upper, up[u]));
                match least {
                    Some(u) => join[p * n + q] = u as u8,
                    None => return Err(StructureError::NoJoin(lab(p), lab(q))),
                }
            }
        }

        let computed_bottom = (0..n).find(|&b| up[b] == full(n));
        let bottom = match (raw.bottom, computed_bottom) {
            (Some(b), _) if b >= n => return Err(StructureError::IndexOutOfRange(b)),
            (Some(b), Some(c)) if b == c => b,
            (None, Some(c)) => c,
            _ => return Err(StructureError::NoBottom),
        };
        // a finite join-semilattice is bounded above by the join of everything
        let top = (0..n).fold(bottom, |acc, p| join[acc * n + p] as usize);

        if let Some(given) = &raw.join {
            if given.len() != n || given.iter().any(|r| r.len() != n) {
                return Err(StructureError::Dimension("join"));
            }
            for p in 0..n {
                for q in 0..n {
                    let g = given[p][q];
                    if g >= n {
                        return Err(StructureError::IndexOutOfRange(g));
                    }
                    let c = join[p * n + q] as usize;
                    if g != c {
                        return Err(StructureError::JoinMismatch {
                            p: lab(p),
                            q: lab(q),
                            given: lab(g),
                            computed: lab(c),
                        });
                    }
                }
            }
        }

        let mut h = DefaultHasher::new();
        raw.elements.hash(&mut h);
        up.hash(&mut h);
        prec_up.hash(&mut h);
        bottom.hash(&mut h);
        let id = StructureId(h.finish());

        Ok(Structure {
            labels: raw.elements.clone(),
            up,
            down,
            prec_up,
            prec_down,
            join,
            bottom,
            top,
            id,
        })
    }

    /// Raw description carrying the computed join table and bottom.
    pub fn to_raw(&self) -> RawStructure {
        let n = self.len();
        RawStructure {
            elements: self.labels.clone(),
            leq: (0..n).map(|p| (0..n).map(|q| self.leq(p, q)).collect()).collect(),
            prec: (0..n).map(|p| (0..n).map(|q| self.prec(p, q)).collect()).collect(),
            join: Some((0..n).map(|p| (0..n).map(|q| self.join(p, q)).collect()).collect()),
            bottom: Some(self.bottom),
        }
    }

    /// Same carrier and order with `≺` replaced.
    pub fn with_prec(&self, prec: impl Fn(usize, usize) -> bool) -> Structure {
        let mut raw = self.to_raw();
        let n = self.len();
        raw.prec = (0..n).map(|p| (0..n).map(|q| prec(p, q)).collect()).collect();
        Structure::validate(&raw).expect("order unchanged, revalidation cannot fail")
    }

    pub fn id(&self) -> StructureId {
        self.id
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, p: usize) -> &str {
        &self.labels[p]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    #[inline]
    pub fn leq(&self, p: usize, q: usize) -> bool {
        has(self.up[p], q)
    }

    #[inline]
    pub fn prec(&self, p: usize, q: usize) -> bool {
        has(self.prec_up[p], q)
    }

    #[inline]
    pub fn join(&self, p: usize, q: usize) -> usize {
        self.join[p * self.len() + q] as usize
    }

    pub fn join_all(&self, mask: u32) -> usize {
        bits(mask).fold(self.bottom, |acc, p| self.join(acc, p))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn full_mask(&self) -> u32 {
        full(self.len())
    }

    /// `↑p = {q : p ≤ q}`.
    #[inline]
    pub fn above(&self, p: usize) -> u32 {
        self.up[p]
    }

    /// `↓p = {q : q ≤ p}`.
    #[inline]
    pub fn below(&self, p: usize) -> u32 {
        self.down[p]
    }

    /// `p^≻ = {r : r ≺ p}`.
    #[inline]
    pub fn predecessors_mask(&self, p: usize) -> u32 {
        self.prec_down[p]
    }

    /// `p^≺ = {r : p ≺ r}`.
    #[inline]
    pub fn successors_mask(&self, p: usize) -> u32 {
        self.prec_up[p]
    }

    pub fn leq_matrix(&self) -> BitMatrix {
        BitMatrix::from_rows(self.len(), self.up.clone())
    }

    pub fn prec_matrix(&self) -> BitMatrix {
        BitMatrix::from_rows(self.len(), self.prec_up.clone())
    }

    /// True when `≺` and `≤` are the same relation.
    pub fn prec_is_leq(&self) -> bool {
        self.up == self.prec_up
    }

    pub fn set(&self, mask: u32) -> ElementSet {
        assert!(subset(mask, self.full_mask()), "mask exceeds carrier");
        ElementSet {
            owner: self.id,
            bits: mask,
        }
    }

    pub fn set_of(&self, members: impl IntoIterator<Item = usize>) -> ElementSet {
        self.set(members.into_iter().fold(0, |m, p| m | bit(p)))
    }

    /// Set from labels. Panics on an unknown label.
    pub fn set_of_labels<'a>(&self, labels: impl IntoIterator<Item = &'a str>) -> ElementSet {
        self.set_of(labels.into_iter().map(|l| {
            self.index_of(l)
                .unwrap_or_else(|| panic!("unknown element `{l}`"))
        }))
    }

    pub fn predecessors(&self, p: usize) -> ElementSet {
        self.set(self.prec_down[p])
    }

    pub fn successors(&self, p: usize) -> ElementSet {
        self.set(self.prec_up[p])
    }

    pub fn up_closure(&self, mask: u32) -> u32 {
        bits(mask).fold(0, |acc, p| acc | self.up[p])
    }

    pub fn down_closure(&self, mask: u32) -> u32 {
        bits(mask).fold(0, |acc, p| acc | self.down[p])
    }

    fn check_owner(&self, set: &ElementSet) {
        assert_eq!(set.owner, self.id, "element set belongs to a different structure");
    }

    pub fn is_up_set(&self, mask: u32) -> bool {
        bits(mask).all(|p| subset(self.up[p], mask))
    }

    pub fn is_down_set(&self, mask: u32) -> bool {
        bits(mask).all(|p| subset(self.down[p], mask))
    }

    /// `p, q ∈ F ⟺ ∃r ∈ F (r ≤ p, q)`: an up-set in which every pair has a
    /// lower bound. The empty set qualifies vacuously.
    pub fn is_filter_mask(&self, mask: u32) -> bool {
        if !self.is_up_set(mask) {
            return false;
        }
        for p in bits(mask) {
            for q in bits(mask & !full(p)) {
                if self.down[p] & self.down[q] & mask == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// `p, q ∈ I ⟺ ∃r ∈ I (r ≥ p, q)`: a down-set closed under `∨`.
    pub fn is_ideal_mask(&self, mask: u32) -> bool {
        if !self.is_down_set(mask) {
            return false;
        }
        for p in bits(mask) {
            for q in bits(mask & !full(p)) {
                if !has(mask, self.join(p, q)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_prime_filter_mask(&self, mask: u32) -> bool {
        self.is_filter_mask(mask) && self.is_ideal_mask(self.full_mask() & !mask)
    }

    /// A filter in which every member has a `≺`-predecessor.
    pub fn is_round_filter_mask(&self, mask: u32) -> bool {
        self.is_filter_mask(mask) && bits(mask).all(|p| self.prec_down[p] & mask != 0)
    }

    /// Candidate spectrum point: proper, nonempty, round and prime.
    pub fn is_spectrum_point_mask(&self, mask: u32) -> bool {
        mask != 0
            && mask != self.full_mask()
            && self.is_round_filter_mask(mask)
            && self.is_prime_filter_mask(mask)
    }

    pub fn is_filter(&self, set: &ElementSet) -> bool {
        self.check_owner(set);
        self.is_filter_mask(set.bits)
    }

    pub fn is_ideal(&self, set: &ElementSet) -> bool {
        self.check_owner(set);
        self.is_ideal_mask(set.bits)
    }

    pub fn is_prime_filter(&self, set: &ElementSet) -> bool {
        self.check_owner(set);
        self.is_prime_filter_mask(set.bits)
    }

    pub fn is_round_filter(&self, set: &ElementSet) -> bool {
        self.check_owner(set);
        self.is_round_filter_mask(set.bits)
    }

    /// Join closure of `mask` including the empty join `0`.
    pub fn join_closure(&self, mask: u32) -> u32 {
        let mut acc = mask | bit(self.bottom);
        loop {
            let mut next = acc;
            for p in bits(acc) {
                for q in bits(acc) {
                    next |= bit(self.join(p, q));
                }
            }
            if next == acc {
                return acc;
            }
            acc = next;
        }
    }

    pub fn generate_ideal_mask(&self, seeds: u32) -> u32 {
        if seeds == 0 {
            return 0;
        }
        let mut acc = seeds;
        loop {
            let mut next = self.down_closure(acc);
            for p in bits(next) {
                for q in bits(next) {
                    next |= bit(self.join(p, q));
                }
            }
            if next == acc {
                return acc;
            }
            acc = next;
        }
    }

    /// Least ideal containing `seeds`.
    pub fn generate_ideal(&self, seeds: &ElementSet) -> ElementSet {
        self.check_owner(seeds);
        self.set(self.generate_ideal_mask(seeds.bits))
    }

    /// Least filter containing `seeds`, which exists here only when every two
    /// seeds have a seed below both; the result is then the up-closure.
    pub fn generate_filter(&self, seeds: &ElementSet) -> Result<ElementSet, NotDirected> {
        self.check_owner(seeds);
        let m = seeds.bits;
        for p in bits(m) {
            for q in bits(m & !full(p)) {
                if self.down[p] & self.down[q] & m == 0 {
                    return Err(NotDirected {
                        p: self.labels[p].clone(),
                        q: self.labels[q].clone(),
                    });
                }
            }
        }
        Ok(self.set(self.up_closure(m)))
    }

    /// `{(p, q) : p^≻ ⊆ q^≻}`, compared against `≤`.
    pub fn lower_preorder(&self) -> LowerPreorder {
        let n = self.len();
        let relation =
            BitMatrix::from_fn(n, n, |p, q| subset(self.prec_down[p], self.prec_down[q]));
        let equals_leq = relation == self.leq_matrix();
        LowerPreorder {
            relation,
            equals_leq,
        }
    }

    /// `{a,b}` rendering of a subset.
    pub fn render_mask(&self, mask: u32) -> String {
        let parts: Vec<&str> = bits(mask).map(|p| self.label(p)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn render(&self, set: &ElementSet) -> String {
        self.check_owner(set);
        self.render_mask(set.bits)
    }
}

impl fmt::Debug for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Structure")
            .field("elements", &self.labels)
            .field("leq", &self.leq_matrix())
            .field("prec", &self.prec_matrix())
            .field("bottom", &self.bottom)
            .finish()
    }
}

impl PartialEq for Structure {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
            && self.up == other.up
            && self.prec_up == other.prec_up
            && self.bottom == other.bottom
    }
}

impl Eq for Structure {}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("seeds `{p}` and `{q}` have no common lower bound among the seeds")]
pub struct NotDirected {
    pub p: String,
    pub q: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerPreorder {
    pub relation: BitMatrix,
    pub equals_leq: bool,
}

/// A subset of one structure's carrier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    owner: StructureId,
    bits: u32,
}

impl ElementSet {
    pub fn owner(&self) -> StructureId {
        self.owner
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn contains(&self, p: usize) -> bool {
        has(self.bits, p)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn members(&self) -> impl Iterator<Item = usize> {
        bits(self.bits)
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        subset(self.bits, other.bits)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// `0 ≤ a ≤ 1` with `≺ = ≤`.
    pub fn c3() -> Structure {
        chain(&["0", "a", "1"])
    }

    pub fn chain(labels: &[&str]) -> Structure {
        Structure::validate(&RawStructure::from_fns(
            labels.iter().copied(),
            |p, q| p <= q,
            |p, q| p <= q,
        ))
        .unwrap()
    }

    /// `{0, x, y, z, 1}` with three pairwise joins equal to `1`, `≺ = ≤`.
    pub fn m3() -> Structure {
        let leq = |p: usize, q: usize| p == q || p == 0 || q == 4;
        Structure::validate(&RawStructure::from_fns(["0", "x", "y", "z", "1"], leq, leq)).unwrap()
    }

    /// `{0, a}` with `≺ = {(0,0), (0,a)}`.
    pub fn s2_strict() -> Structure {
        Structure::validate(&RawStructure::from_fns(
            ["0", "a"],
            |p, q| p <= q,
            |p, _| p == 0,
        ))
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn chain_validates() {
        let s = c3();
        assert_eq!(s.bottom(), 0);
        assert_eq!(s.top(), 2);
        assert_eq!(s.join(1, 2), 2);
        assert_eq!(s.join(0, 1), 1);
    }

    #[test]
    fn two_atoms_without_top_have_no_join() {
        let leq = |p: usize, q: usize| p == q || p == 0;
        let err = Structure::validate(&RawStructure::from_fns(["0", "x", "y"], leq, leq)).unwrap_err();
        assert_eq!(err, StructureError::NoJoin("x".into(), "y".into()));
    }

    #[test]
    fn m3_joins_by_brute_force() {
        let s = m3();
        // every pair has a least upper bound: check against the definition directly
        for p in 0..5 {
            for q in 0..5 {
                let ub: Vec<usize> = (0..5).filter(|&u| s.leq(p, u) && s.leq(q, u)).collect();
                let least: Vec<usize> =
                    ub.iter().copied().filter(|&u| ub.iter().all(|&v| s.leq(u, v))).collect();
                assert_eq!(least, vec![s.join(p, q)]);
            }
        }
        assert_eq!(s.join(1, 2), 4);
        assert_eq!(s.join(2, 3), 4);
    }

    #[test]
    fn order_violations_are_reported() {
        let not_refl = RawStructure::from_fns(["0", "a"], |p, q| p < q, |_, _| false);
        assert!(matches!(
            Structure::validate(&not_refl),
            Err(StructureError::NotPartialOrder(OrderViolation::NotReflexive(_)))
        ));
        let not_anti = RawStructure::from_fns(["0", "a"], |_, _| true, |_, _| false);
        assert!(matches!(
            Structure::validate(&not_anti),
            Err(StructureError::NotPartialOrder(OrderViolation::NotAntisymmetric(..)))
        ));
        let not_trans = RawStructure::from_fns(
            ["0", "a", "b"],
            |p, q| p == q || (p, q) == (0, 1) || (p, q) == (1, 2),
            |_, _| false,
        );
        assert_eq!(
            Structure::validate(&not_trans).unwrap_err(),
            StructureError::NotPartialOrder(OrderViolation::NotTransitive(
                "0".into(),
                "a".into(),
                "b".into()
            ))
        );
    }

    #[test]
    fn bottom_and_join_cross_checks() {
        let mut raw = c3().to_raw();
        raw.bottom = Some(1);
        assert_eq!(Structure::validate(&raw).unwrap_err(), StructureError::NoBottom);
        let mut raw = c3().to_raw();
        raw.join.as_mut().unwrap()[0][1] = 2;
        assert!(matches!(
            Structure::validate(&raw),
            Err(StructureError::JoinMismatch { .. })
        ));
        let big = RawStructure::from_fns((0..25).map(|i| i.to_string()), |p, q| p <= q, |_, _| false);
        assert_eq!(Structure::validate(&big).unwrap_err(), StructureError::CarrierTooLarge(25));
        let dup = RawStructure::from_fns(["a", "a"], |p, q| p <= q, |_, _| false);
        assert_eq!(
            Structure::validate(&dup).unwrap_err(),
            StructureError::DuplicateLabel("a".into())
        );
    }

    #[test]
    fn validation_is_idempotent() {
        for s in [c3(), m3(), s2_strict()] {
            let again = Structure::validate(&s.to_raw()).unwrap();
            assert_eq!(again, s);
            assert_eq!(again.to_raw(), s.to_raw());
            assert_eq!(again.id(), s.id());
        }
    }

    #[test]
    fn predecessor_and_successor_sets() {
        let s = s2_strict();
        assert_eq!(s.predecessors(1), s.set_of([0]));
        assert_eq!(s.predecessors(0), s.set_of([0]));
        assert_eq!(s.successors(0), s.set_of([0, 1]));
        let c = c3();
        assert_eq!(c.predecessors(2), c.set_of([0, 1, 2]));
    }

    #[test]
    fn filters() {
        let c = c3();
        assert!(c.is_filter(&c.set_of_labels(["a", "1"])));
        assert!(!c.is_filter(&c.set_of_labels(["0", "1"])));
        assert!(c.is_filter(&c.set(0)));
        let m = m3();
        assert!(!m.is_filter(&m.set_of_labels(["x", "y", "1"])));
    }

    #[test]
    fn ideals() {
        let m = m3();
        assert!(m.is_ideal(&m.set_of_labels(["0", "x"])));
        assert!(!m.is_ideal(&m.set_of_labels(["0", "x", "y"])));
        for s in [c3(), m3(), s2_strict()] {
            assert!(s.is_ideal(&s.set_of([s.bottom()])));
            assert!(s.is_ideal(&s.set(0)));
        }
    }

    #[test]
    fn prime_filters() {
        let c = c3();
        assert!(c.is_prime_filter(&c.set_of_labels(["a", "1"])));
        let m = m3();
        assert!(!m.is_prime_filter(&m.set_of_labels(["x", "1"])));
        for s in [c3(), m3(), s2_strict()] {
            // whole carrier: complement is empty, hence an ideal
            assert!(s.is_prime_filter(&s.set(s.full_mask())));
        }
    }

    #[test]
    fn round_filters() {
        let c = c3();
        assert!(c.is_round_filter(&c.set_of_labels(["a", "1"])));
        let s = s2_strict();
        assert!(!s.is_round_filter(&s.set_of_labels(["a"])));
        assert!(s.is_round_filter(&s.set_of_labels(["0", "a"])));
    }

    #[test]
    fn generated_ideals_and_filters() {
        let m = m3();
        let ideal = m.generate_ideal(&m.set_of_labels(["x", "y"]));
        assert_eq!(ideal, m.set(m.full_mask()));
        let c = c3();
        assert_eq!(c.generate_filter(&c.set_of_labels(["1"])).unwrap(), c.set_of_labels(["1"]));
        assert_eq!(
            m.generate_filter(&m.set_of_labels(["x", "y"])).unwrap_err(),
            NotDirected {
                p: "x".into(),
                q: "y".into()
            }
        );
        assert_eq!(m.generate_ideal(&m.set(0)), m.set(0));
    }

    #[test]
    fn lower_preorder_examples() {
        let c = c3();
        let lp = c.lower_preorder();
        assert!(lp.equals_leq);
        assert_eq!(lp.relation, c.leq_matrix());

        let s = s2_strict();
        let lp = s.lower_preorder();
        assert!(!lp.equals_leq);
        assert_eq!(lp.relation, BitMatrix::full(2, 2));

        let empty = c3().with_prec(|_, _| false);
        assert_eq!(empty.lower_preorder().relation, BitMatrix::full(3, 3));
    }

    #[test]
    fn principal_sets_are_filters_and_ideals() {
        for s in [c3(), m3(), s2_strict()] {
            for p in s.elements() {
                assert!(s.is_filter_mask(s.above(p)));
                assert!(s.is_ideal_mask(s.below(p)));
            }
        }
    }
}
