//! The chain `0 < 1 < … < ω < ω+1` with `≺ = ≤` (variant A) or `≺ = ≤`
//! without the pair `(ω, ω)` (variant B).

use super::window::{ExemplarError, LazyStructure};

/// Ordered as the chain itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OmegaCode {
    Finite(u32),
    Omega,
    OmegaSucc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaVariant {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OmegaPlusTwo {
    pub variant: OmegaVariant,
}

impl OmegaPlusTwo {
    pub fn new(variant: OmegaVariant) -> Self {
        OmegaPlusTwo { variant }
    }
}

impl LazyStructure for OmegaPlusTwo {
    type Code = OmegaCode;

    fn name(&self) -> String {
        match self.variant {
            OmegaVariant::A => "omega+2/A".into(),
            OmegaVariant::B => "omega+2/B".into(),
        }
    }

    fn label(&self, code: &OmegaCode) -> String {
        match code {
            OmegaCode::Finite(n) => n.to_string(),
            OmegaCode::Omega => "ω".into(),
            OmegaCode::OmegaSucc => "ω+1".into(),
        }
    }

    fn leq(&self, a: &OmegaCode, b: &OmegaCode) -> bool {
        a <= b
    }

    fn prec(&self, a: &OmegaCode, b: &OmegaCode) -> bool {
        match self.variant {
            OmegaVariant::A => a <= b,
            OmegaVariant::B => a <= b && !(*a == OmegaCode::Omega && *b == OmegaCode::Omega),
        }
    }

    fn join(&self, a: &OmegaCode, b: &OmegaCode) -> OmegaCode {
        *a.max(b)
    }

    fn bottom(&self) -> OmegaCode {
        OmegaCode::Finite(0)
    }

    /// `{0, …, k−1, ω, ω+1}`.
    fn initial_codes(&self, k: usize) -> Result<Vec<OmegaCode>, ExemplarError> {
        let mut codes: Vec<OmegaCode> = (0..k as u32).map(OmegaCode::Finite).collect();
        codes.extend([OmegaCode::Omega, OmegaCode::OmegaSucc]);
        Ok(codes)
    }
}
