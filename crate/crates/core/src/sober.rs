//! Sobriety and core compactness of finite topologies.

use crate::bits::{bits, subset};
use crate::topology::FiniteTopology;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenericPoint {
    Unique(usize),
    Missing,
    Multiple(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoberReport {
    /// Irreducible closed sets, ascending.
    pub irreducibles: Vec<u32>,
    /// Dense points of each irreducible, parallel to `irreducibles`.
    pub generic_points: Vec<GenericPoint>,
    pub is_sober: bool,
    pub is_t0: bool,
}

/// A closed set is irreducible when it is nonempty and its proper closed
/// subsets are closed under finite unions. In a finite space the latter
/// holds iff the union of all proper closed subsets is still proper, and
/// that union is the union of the point closures strictly inside the set.
pub fn is_irreducible(t: &FiniteTopology, closed: u32) -> bool {
    if closed == 0 {
        return false;
    }
    let union = bits(closed)
        .map(|x| t.point_closure(x))
        .filter(|&c| c != closed)
        .fold(0, |acc, c| acc | c);
    union != closed
}

pub fn sober_check(t: &FiniteTopology) -> SoberReport {
    let mut irreducibles = Vec::new();
    let mut generic_points = Vec::new();
    for c in t.closed_sets() {
        if !is_irreducible(t, c) {
            continue;
        }
        let dense: Vec<usize> = bits(c).filter(|&x| t.point_closure(x) == c).collect();
        let g = match dense.len() {
            0 => GenericPoint::Missing,
            1 => GenericPoint::Unique(dense[0]),
            _ => GenericPoint::Multiple(dense),
        };
        irreducibles.push(c);
        generic_points.push(g);
    }
    let is_sober = generic_points
        .iter()
        .all(|g| matches!(g, GenericPoint::Unique(_)));
    SoberReport {
        irreducibles,
        generic_points,
        is_sober,
        is_t0: t.is_t0(),
    }
}

/// Every open neighbourhood filter is round for `⋐`: each open `O ∋ x` has an
/// open `U ∋ x` with `U ⋐ O`.
pub fn core_compact_check(t: &FiniteTopology) -> bool {
    (0..t.n_points()).all(|x| {
        t.opens()
            .iter()
            .filter(|&&o| o & (1 << x) != 0)
            .all(|&o| {
                t.opens().iter().any(|&u| {
                    u & (1 << x) != 0 && t.way_below(u, o).expect("both sets are open")
                })
            })
    })
}

/// Literal irreducibility: nonempty, and no two proper closed subsets cover it.
/// Quadratic in the number of closed sets; kept for cross-checking.
pub fn is_irreducible_pairwise(t: &FiniteTopology, closed: u32) -> bool {
    if closed == 0 {
        return false;
    }
    let proper: Vec<u32> = t
        .closed_sets()
        .into_iter()
        .filter(|&d| d != closed && subset(d, closed))
        .collect();
    proper
        .iter()
        .all(|&a| proper.iter().all(|&b| a | b != closed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indiscrete_doubleton_is_not_sober() {
        let t = FiniteTopology::new(2, [0, 0b11]).unwrap();
        let r = sober_check(&t);
        assert!(!r.is_t0);
        assert!(!r.is_sober);
        assert_eq!(r.irreducibles, vec![0b11]);
        assert_eq!(r.generic_points, vec![GenericPoint::Multiple(vec![0, 1])]);
    }

    #[test]
    fn one_point_space_is_sober() {
        let t = FiniteTopology::new(1, [0, 1]).unwrap();
        let r = sober_check(&t);
        assert!(r.is_sober && r.is_t0);
        assert!(core_compact_check(&t));
    }

    #[test]
    fn sierpinski_is_sober_and_core_compact() {
        let t = FiniteTopology::new(2, [0, 0b10, 0b11]).unwrap();
        let r = sober_check(&t);
        assert!(r.is_sober);
        assert_eq!(r.irreducibles, vec![0b01, 0b11]);
        assert!(core_compact_check(&t));
    }

    #[test]
    fn irreducibility_agrees_with_pairwise_definition() {
        let ts = [
            FiniteTopology::generated_by(3, [0b001, 0b010, 0b100]),
            FiniteTopology::new(3, [0, 0b100, 0b110, 0b111]).unwrap(),
            FiniteTopology::new(3, [0, 0b011, 0b111]).unwrap(),
            FiniteTopology::generated_by(4, [0b0011, 0b0110, 0b1000]),
        ];
        for t in &ts {
            for c in t.closed_sets() {
                assert_eq!(is_irreducible(t, c), is_irreducible_pairwise(t, c), "{c:#b}");
            }
        }
    }
}
