//! First-order conditions on `≺`, checked exhaustively with witnesses.

use std::fmt;

use crate::bits::{bits, has, subset};
use crate::order::Structure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// `p ≺ q ≺ r ⟹ p ≺ r`
    PrecTransitive,
    /// `p ≤ p′ ≺ q′ ≤ q ⟹ p ≺ q ⟹ p ≤ q`
    Auxiliary,
    /// `p ≺ s ∨ t ⟹ ∀p′ ≺ p ∃s′ ≺ s ∃t′ ≺ t (p′ ≤ s′ ∨ t′ ≤ p)`
    Distributive,
    /// `p ≺ q ⟹ ∃s (p ≺ s ≺ q)`
    Interpolative,
    /// `p ≤ q ⟺ p^≻ ⊆ q^≻`
    Approximating,
    /// `p′ ≺ p, q′ ≺ q ⟹ p′ ∨ q′ ≺ p ∨ q`
    JoinPreserving,
    /// `p ≤ s ∨ t ⟺ ∀p′ ≺ p ∃s′ ≺ s ∃t′ ≺ t (p′ ≺ s′ ∨ t′ ≺ p)`
    StrongDistributive,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::PrecTransitive,
        Axiom::Auxiliary,
        Axiom::Distributive,
        Axiom::Interpolative,
        Axiom::Approximating,
        Axiom::JoinPreserving,
        Axiom::StrongDistributive,
    ];

    /// The conditions making up a ∨-predomain.
    pub const PREDOMAIN: [Axiom; 4] = [
        Axiom::Auxiliary,
        Axiom::Approximating,
        Axiom::Interpolative,
        Axiom::JoinPreserving,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::PrecTransitive => "prec_transitive",
            Axiom::Auxiliary => "auxiliary",
            Axiom::Distributive => "distributive",
            Axiom::Interpolative => "interpolative",
            Axiom::Approximating => "approximating",
            Axiom::JoinPreserving => "join_preserving",
            Axiom::StrongDistributive => "strong_distributive",
        }
    }

    pub fn from_name(name: &str) -> Option<Axiom> {
        Axiom::ALL.into_iter().find(|a| a.name() == name)
    }

    /// Names of the witness positions, in order.
    pub fn witness_roles(self, clause: Clause) -> &'static [&'static str] {
        match (self, clause) {
            (Axiom::PrecTransitive, _) => &["p", "q", "r"],
            (Axiom::Auxiliary, Clause::Forward) => &["p", "p′", "q′", "q"],
            (Axiom::Auxiliary, Clause::Backward) => &["p", "q"],
            (Axiom::Distributive, _) => &["p", "s", "t", "p′"],
            (Axiom::Interpolative, _) => &["p", "q"],
            (Axiom::Approximating, Clause::Forward) => &["p", "q", "r"],
            (Axiom::Approximating, Clause::Backward) => &["p", "q"],
            (Axiom::JoinPreserving, _) => &["p′", "p", "q′", "q"],
            (Axiom::StrongDistributive, Clause::Forward) => &["p", "s", "t", "p′"],
            (Axiom::StrongDistributive, Clause::Backward) => &["p", "s", "t"],
        }
    }

    /// First violation in canonical (lexicographic tuple) order, if any.
    pub fn check(self, s: &Structure) -> Option<Violation> {
        match self {
            Axiom::PrecTransitive => check_prec_transitive(s),
            Axiom::Auxiliary => check_auxiliary(s),
            Axiom::Distributive => check_distributive(s),
            Axiom::Interpolative => check_interpolative(s),
            Axiom::Approximating => check_approximating(s),
            Axiom::JoinPreserving => check_join_preserving(s),
            Axiom::StrongDistributive => check_strong_distributive(s),
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which half of a two-part condition failed. Single-part conditions use `Forward`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Clause {
    Forward,
    Backward,
}

/// How a violation is certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FailureKind {
    /// The witness tuple alone violates a universally quantified clause.
    Counterexample,
    /// The violation rests on searching the whole carrier for a witness that
    /// was not found. Only meaningful for the carrier at hand.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Violation {
    pub axiom: Axiom,
    pub clause: Clause,
    pub kind: FailureKind,
    pub elements: Vec<usize>,
}

impl Violation {
    fn new(axiom: Axiom, clause: Clause, kind: FailureKind, elements: Vec<usize>) -> Self {
        Violation {
            axiom,
            clause,
            kind,
            elements,
        }
    }

    /// Re-evaluates the violated clause at the witness tuple.
    pub fn recheck(&self, s: &Structure) -> bool {
        let e = &self.elements;
        match (self.axiom, self.clause) {
            (Axiom::PrecTransitive, _) => {
                let (p, q, r) = (e[0], e[1], e[2]);
                s.prec(p, q) && s.prec(q, r) && !s.prec(p, r)
            }
            (Axiom::Auxiliary, Clause::Forward) => {
                let (p, p1, q1, q) = (e[0], e[1], e[2], e[3]);
                s.leq(p, p1) && s.prec(p1, q1) && s.leq(q1, q) && !s.prec(p, q)
            }
            (Axiom::Auxiliary, Clause::Backward) => s.prec(e[0], e[1]) && !s.leq(e[0], e[1]),
            (Axiom::Distributive, _) => {
                let (p, a, b, p1) = (e[0], e[1], e[2], e[3]);
                s.prec(p, s.join(a, b)) && s.prec(p1, p) && !split_exists(s, p, a, b, p1)
            }
            (Axiom::Interpolative, _) => {
                let (p, q) = (e[0], e[1]);
                s.prec(p, q) && s.successors_mask(p) & s.predecessors_mask(q) == 0
            }
            (Axiom::Approximating, Clause::Forward) => {
                let (p, q, r) = (e[0], e[1], e[2]);
                s.leq(p, q) && s.prec(r, p) && !s.prec(r, q)
            }
            (Axiom::Approximating, Clause::Backward) => {
                let (p, q) = (e[0], e[1]);
                !s.leq(p, q) && subset(s.predecessors_mask(p), s.predecessors_mask(q))
            }
            (Axiom::JoinPreserving, _) => {
                let (p1, p, q1, q) = (e[0], e[1], e[2], e[3]);
                s.prec(p1, p) && s.prec(q1, q) && !s.prec(s.join(p1, q1), s.join(p, q))
            }
            (Axiom::StrongDistributive, Clause::Forward) => {
                let (p, a, b, p1) = (e[0], e[1], e[2], e[3]);
                s.leq(p, s.join(a, b)) && s.prec(p1, p) && !strong_split_exists(s, p, a, b, p1)
            }
            (Axiom::StrongDistributive, Clause::Backward) => {
                let (p, a, b) = (e[0], e[1], e[2]);
                !s.leq(p, s.join(a, b)) && strong_rhs(s, p, a, b)
            }
        }
    }

    pub fn render(&self, s: &Structure) -> String {
        let roles = self.axiom.witness_roles(self.clause);
        let parts: Vec<String> = roles
            .iter()
            .zip(&self.elements)
            .map(|(r, &i)| format!("{r}={}", s.label(i)))
            .collect();
        parts.join(", ")
    }
}

fn check_prec_transitive(s: &Structure) -> Option<Violation> {
    for p in s.elements() {
        for q in bits(s.successors_mask(p)) {
            let missing = s.successors_mask(q) & !s.successors_mask(p);
            if missing != 0 {
                let r = missing.trailing_zeros() as usize;
                return Some(Violation::new(
                    Axiom::PrecTransitive,
                    Clause::Forward,
                    FailureKind::Counterexample,
                    vec![p, q, r],
                ));
            }
        }
    }
    None
}

fn check_auxiliary(s: &Structure) -> Option<Violation> {
    for p in s.elements() {
        for q in s.elements() {
            if s.prec(p, q) {
                continue;
            }
            for p1 in bits(s.above(p)) {
                let q1s = s.successors_mask(p1) & s.below(q);
                if q1s != 0 {
                    let q1 = q1s.trailing_zeros() as usize;
                    return Some(Violation::new(
                        Axiom::Auxiliary,
                        Clause::Forward,
                        FailureKind::Counterexample,
                        vec![p, p1, q1, q],
                    ));
                }
            }
        }
    }
    for p in s.elements() {
        let bad = s.successors_mask(p) & !s.above(p);
        if bad != 0 {
            return Some(Violation::new(
                Axiom::Auxiliary,
                Clause::Backward,
                FailureKind::Counterexample,
                vec![p, bad.trailing_zeros() as usize],
            ));
        }
    }
    None
}

/// `∃s′ ≺ a ∃t′ ≺ b (p′ ≤ s′ ∨ t′ ≤ p)`
fn split_exists(s: &Structure, p: usize, a: usize, b: usize, p1: usize) -> bool {
    let window = s.above(p1) & s.below(p);
    bits(s.predecessors_mask(a))
        .any(|x| bits(s.predecessors_mask(b)).any(|y| has(window, s.join(x, y))))
}

/// `∃s′ ≺ a ∃t′ ≺ b (p′ ≺ s′ ∨ t′ ≺ p)`
fn strong_split_exists(s: &Structure, p: usize, a: usize, b: usize, p1: usize) -> bool {
    let window = s.successors_mask(p1) & s.predecessors_mask(p);
    bits(s.predecessors_mask(a))
        .any(|x| bits(s.predecessors_mask(b)).any(|y| has(window, s.join(x, y))))
}

fn strong_rhs(s: &Structure, p: usize, a: usize, b: usize) -> bool {
    bits(s.predecessors_mask(p)).all(|p1| strong_split_exists(s, p, a, b, p1))
}

fn check_distributive(s: &Structure) -> Option<Violation> {
    for p in s.elements() {
        for a in s.elements() {
            for b in s.elements() {
                if !s.prec(p, s.join(a, b)) {
                    continue;
                }
                for p1 in bits(s.predecessors_mask(p)) {
                    if !split_exists(s, p, a, b, p1) {
                        return Some(Violation::new(
                            Axiom::Distributive,
                            Clause::Forward,
                            FailureKind::Exhaustive,
                            vec![p, a, b, p1],
                        ));
                    }
                }
            }
        }
    }
    None
}

fn check_interpolative(s: &Structure) -> Option<Violation> {
    for p in s.elements() {
        for q in bits(s.successors_mask(p)) {
            if s.successors_mask(p) & s.predecessors_mask(q) == 0 {
                return Some(Violation::new(
                    Axiom::Interpolative,
                    Clause::Forward,
                    FailureKind::Exhaustive,
                    vec![p, q],
                ));
            }
        }
    }
    None
}

fn check_approximating(s: &Structure) -> Option<Violation> {
    for p in s.elements() {
        for q in s.elements() {
            let below_p = s.predecessors_mask(p);
            let below_q = s.predecessors_mask(q);
            if s.leq(p, q) {
                let extra = below_p & !below_q;
                if extra != 0 {
                    return Some(Violation::new(
                        Axiom::Approximating,
                        Clause::Forward,
                        FailureKind::Counterexample,
                        vec![p, q, extra.trailing_zeros() as usize],
                    ));
                }
            } else if subset(below_p, below_q) {
                return Some(Violation::new(
                    Axiom::Approximating,
                    Clause::Backward,
                    FailureKind::Exhaustive,
                    vec![p, q],
                ));
            }
        }
    }
    None
}

fn check_join_preserving(s: &Structure) -> Option<Violation> {
    for p1 in s.elements() {
        for p in bits(s.successors_mask(p1)) {
            for q1 in s.elements() {
                for q in bits(s.successors_mask(q1)) {
                    if !s.prec(s.join(p1, q1), s.join(p, q)) {
                        return Some(Violation::new(
                            Axiom::JoinPreserving,
                            Clause::Forward,
                            FailureKind::Counterexample,
                            vec![p1, p, q1, q],
                        ));
                    }
                }
            }
        }
    }
    None
}

fn check_strong_distributive(s: &Structure) -> Option<Violation> {
    for p in s.elements() {
        for a in s.elements() {
            for b in s.elements() {
                let lhs = s.leq(p, s.join(a, b));
                if lhs {
                    for p1 in bits(s.predecessors_mask(p)) {
                        if !strong_split_exists(s, p, a, b, p1) {
                            return Some(Violation::new(
                                Axiom::StrongDistributive,
                                Clause::Forward,
                                FailureKind::Exhaustive,
                                vec![p, a, b, p1],
                            ));
                        }
                    }
                } else if strong_rhs(s, p, a, b) {
                    return Some(Violation::new(
                        Axiom::StrongDistributive,
                        Clause::Backward,
                        FailureKind::Exhaustive,
                        vec![p, a, b],
                    ));
                }
            }
        }
    }
    None
}

/// Verdicts for every [`Axiom`], in [`Axiom::ALL`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    results: Vec<(Axiom, Option<Violation>)>,
}

impl AxiomReport {
    pub fn passes(&self, axiom: Axiom) -> bool {
        self.violation(axiom).is_none()
    }

    pub fn violation(&self, axiom: Axiom) -> Option<&Violation> {
        self.results
            .iter()
            .find(|(a, _)| *a == axiom)
            .and_then(|(_, v)| v.as_ref())
    }

    pub fn results(&self) -> &[(Axiom, Option<Violation>)] {
        &self.results
    }

    pub fn failures(&self) -> impl Iterator<Item = &Violation> {
        self.results.iter().filter_map(|(_, v)| v.as_ref())
    }

    pub fn all_pass(&self, axioms: &[Axiom]) -> bool {
        axioms.iter().all(|&a| self.passes(a))
    }

    /// Auxiliary, approximating, interpolative and ∨-preserving.
    pub fn is_predomain(&self) -> bool {
        self.all_pass(&Axiom::PREDOMAIN)
    }

    pub fn render(&self, s: &Structure) -> String {
        let mut out = String::new();
        for (a, v) in &self.results {
            match v {
                None => out.push_str(&format!("{:<20} pass\n", a.name())),
                Some(v) => out.push_str(&format!("{:<20} FAIL  {}\n", a.name(), v.render(s))),
            }
        }
        out.push_str(&format!(
            "{:<20} {}\n",
            "predomain",
            if self.is_predomain() { "pass" } else { "FAIL" }
        ));
        out
    }
}

pub fn check_axioms(s: &Structure) -> AxiomReport {
    AxiomReport {
        results: Axiom::ALL.iter().map(|&a| (a, a.check(s))).collect(),
    }
}

/// Bundle used when none is requested: ∨-predomain plus distributivity.
pub const DEFAULT_BUNDLE: &str = "predomain,distributive";

/// Parses a comma-separated list of axiom names; `predomain` expands to its four parts.
pub fn parse_bundle(spec: &str) -> Result<Vec<Axiom>, String> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part == "predomain" {
            out.extend(Axiom::PREDOMAIN);
        } else {
            out.push(Axiom::from_name(part).ok_or_else(|| format!("unknown axiom `{part}`"))?);
        }
    }
    if out.is_empty() {
        return Err("empty axiom bundle".into());
    }
    out.sort();
    out.dedup();
    Ok(out)
}
