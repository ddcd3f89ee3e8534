use std::collections::BTreeSet;
use std::fmt;

use crate::axioms::{Axiom, FailureKind, Violation};
use crate::order::{RawStructure, Structure, StructureError, MAX_ELEMENTS};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ExemplarError {
    #[error("window has {0} elements, at most {MAX_ELEMENTS} are supported")]
    WindowTooLarge(usize),
    #[error("window is not a valid structure: {0}")]
    InvalidWindow(#[from] StructureError),
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

/// A possibly infinite structure given by decidable predicates on codes.
pub trait LazyStructure {
    type Code: Clone + Ord + fmt::Debug;

    fn name(&self) -> String;
    fn label(&self, code: &Self::Code) -> String;
    fn leq(&self, a: &Self::Code, b: &Self::Code) -> bool;
    fn prec(&self, a: &Self::Code, b: &Self::Code) -> bool;
    fn join(&self, a: &Self::Code, b: &Self::Code) -> Self::Code;
    fn bottom(&self) -> Self::Code;

    /// The first `k` codes; the window closes them under `∨` and `0`.
    fn initial_codes(&self, k: usize) -> Result<Vec<Self::Code>, ExemplarError>;

    fn window(&self, k: usize) -> Result<Window<Self::Code>, ExemplarError> {
        let mut codes: BTreeSet<Self::Code> = self.initial_codes(k)?.into_iter().collect();
        codes.insert(self.bottom());
        loop {
            let cur: Vec<Self::Code> = codes.iter().cloned().collect();
            if cur.len() > MAX_ELEMENTS {
                return Err(ExemplarError::WindowTooLarge(cur.len()));
            }
            let before = codes.len();
            for a in &cur {
                for b in &cur {
                    codes.insert(self.join(a, b));
                }
            }
            if codes.len() == before {
                break;
            }
        }
        let codes: Vec<Self::Code> = codes.into_iter().collect();
        let index = |c: &Self::Code| codes.binary_search(c).expect("closed under join");
        let mut raw = RawStructure::from_fns(
            codes.iter().map(|c| self.label(c)),
            |i, j| self.leq(&codes[i], &codes[j]),
            |i, j| self.prec(&codes[i], &codes[j]),
        );
        raw.join = Some(
            codes
                .iter()
                .map(|a| codes.iter().map(|b| index(&self.join(a, b))).collect())
                .collect(),
        );
        raw.bottom = Some(index(&self.bottom()));
        let structure = Structure::validate(&raw)?;
        Ok(Window { structure, codes })
    }
}

/// A finite window: the structure induced on `codes` (ascending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window<C> {
    pub structure: Structure,
    pub codes: Vec<C>,
}

impl<C: Ord + Clone> Window<C> {
    pub fn index_of(&self, code: &C) -> Option<usize> {
        self.codes.binary_search(code).ok()
    }

    /// Whether the inclusion of codes embeds `self` into `larger`, preserving
    /// `≤`, `≺`, `∨` and `0`.
    pub fn embeds_into(&self, larger: &Window<C>) -> bool {
        let Some(map) = self
            .codes
            .iter()
            .map(|c| larger.index_of(c))
            .collect::<Option<Vec<usize>>>()
        else {
            return false;
        };
        let (s, t) = (&self.structure, &larger.structure);
        map[s.bottom()] == t.bottom()
            && s.elements().all(|p| {
                s.elements().all(|q| {
                    s.leq(p, q) == t.leq(map[p], map[q])
                        && s.prec(p, q) == t.prec(map[p], map[q])
                        && map[s.join(p, q)] == t.join(map[p], map[q])
                })
            })
    }
}

/// Three-valued result of an axiom on a finite window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WindowVerdict {
    Pass,
    /// The violation is certified by elements of the window alone.
    Fail(Violation),
    /// A required witness is missing from the window and may lie outside it.
    Unknown(Violation),
}

impl WindowVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            WindowVerdict::Pass => "pass",
            WindowVerdict::Fail(_) => "FAIL",
            WindowVerdict::Unknown(_) => "UNKNOWN",
        }
    }
}

pub fn window_verdicts(s: &Structure) -> Vec<(Axiom, WindowVerdict)> {
    Axiom::ALL
        .into_iter()
        .map(|a| {
            let verdict = match a.check(s) {
                None => WindowVerdict::Pass,
                Some(v) if v.kind == FailureKind::Counterexample => WindowVerdict::Fail(v),
                Some(v) => WindowVerdict::Unknown(v),
            };
            (a, verdict)
        })
        .collect()
}
