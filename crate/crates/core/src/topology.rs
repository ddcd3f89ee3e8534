//! Finite topologies given by an explicit family of open sets.

use std::collections::BTreeSet;

use crate::bits::{bit, bits, full, has, subset};
use crate::relation::BitMatrix;

/// Point sets are `u32` masks.
pub const MAX_POINTS: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TopologyError {
    #[error("{0} points, at most {MAX_POINTS} are supported")]
    TooManyPoints(usize),
    #[error("open set {0:#b} mentions points outside the space")]
    OutOfRange(u32),
    #[error("the empty set is not open")]
    MissingEmpty,
    #[error("the whole space is not open")]
    MissingFull,
    #[error("open sets {0:#b} and {1:#b} have a union that is not open")]
    NotUnionClosed(u32, u32),
    #[error("open sets {0:#b} and {1:#b} have an intersection that is not open")]
    NotIntersectionClosed(u32, u32),
    #[error("{0:#b} is not an open set")]
    NotOpen(u32),
}

/// A validated finite topology. Opens are kept sorted and distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteTopology {
    n_points: usize,
    opens: Vec<u32>,
    /// Minimal open neighbourhood of each point.
    neighbourhoods: Vec<u32>,
}

impl FiniteTopology {
    pub fn new(n_points: usize, opens: impl IntoIterator<Item = u32>) -> Result<Self, TopologyError> {
        if n_points > MAX_POINTS {
            return Err(TopologyError::TooManyPoints(n_points));
        }
        let all = full(n_points);
        let opens: Vec<u32> = opens.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if let Some(&bad) = opens.iter().find(|&&o| !subset(o, all)) {
            return Err(TopologyError::OutOfRange(bad));
        }
        if opens.binary_search(&0).is_err() {
            return Err(TopologyError::MissingEmpty);
        }
        if opens.binary_search(&all).is_err() {
            return Err(TopologyError::MissingFull);
        }
        let neighbourhoods: Vec<u32> = (0..n_points)
            .map(|x| {
                opens
                    .iter()
                    .filter(|&&o| has(o, x))
                    .fold(all, |acc, &o| acc & o)
            })
            .collect();
        let t = FiniteTopology {
            n_points,
            opens,
            neighbourhoods,
        };
        // A finite family is a topology iff it is exactly the set of unions of
        // the minimal neighbourhoods; only on failure do we look for a pair.
        let consistent = t.neighbourhoods.iter().all(|&n| t.is_open(n))
            && t.opens.iter().all(|&o| t.union_of_neighbourhoods(o) == o)
            && union_closure(&t.neighbourhoods, 0).len() == t.opens.len();
        if !consistent {
            return Err(t.find_closure_failure());
        }
        Ok(t)
    }

    /// Smallest topology containing `generators`.
    pub fn generated_by(n_points: usize, generators: impl IntoIterator<Item = u32>) -> Self {
        let all = full(n_points);
        let mut fam: BTreeSet<u32> = generators.into_iter().collect();
        fam.insert(all);
        // close under pairwise intersection, then under unions
        loop {
            let cur: Vec<u32> = fam.iter().copied().collect();
            let before = fam.len();
            for (i, &a) in cur.iter().enumerate() {
                for &b in &cur[i + 1..] {
                    fam.insert(a & b);
                }
            }
            if fam.len() == before {
                break;
            }
        }
        let gens: Vec<u32> = fam.into_iter().collect();
        FiniteTopology::new(n_points, union_closure(&gens, 0))
            .expect("intersection-closed generators yield a topology under unions")
    }

    fn union_of_neighbourhoods(&self, set: u32) -> u32 {
        bits(set).fold(0, |acc, x| acc | self.neighbourhoods[x])
    }

    fn find_closure_failure(&self) -> TopologyError {
        for (i, &a) in self.opens.iter().enumerate() {
            for &b in &self.opens[i + 1..] {
                if !self.is_open(a | b) {
                    return TopologyError::NotUnionClosed(a, b);
                }
                if !self.is_open(a & b) {
                    return TopologyError::NotIntersectionClosed(a, b);
                }
            }
        }
        unreachable!("family failed the neighbourhood test but is closed under ∪ and ∩")
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn full(&self) -> u32 {
        full(self.n_points)
    }

    pub fn opens(&self) -> &[u32] {
        &self.opens
    }

    pub fn is_open(&self, set: u32) -> bool {
        self.opens.binary_search(&set).is_ok()
    }

    /// Smallest open set containing `x`.
    pub fn neighbourhood(&self, x: usize) -> u32 {
        self.neighbourhoods[x]
    }

    pub fn closure(&self, set: u32) -> u32 {
        let outside = self
            .opens
            .iter()
            .filter(|&&o| o & set == 0)
            .fold(0, |acc, &o| acc | o);
        self.full() & !outside
    }

    pub fn point_closure(&self, x: usize) -> u32 {
        self.closure(bit(x))
    }

    pub fn closed_sets(&self) -> Vec<u32> {
        let mut c: Vec<u32> = self.opens.iter().map(|&o| self.full() & !o).collect();
        c.sort_unstable();
        c
    }

    /// `x ⊑ y` iff `x ∈ cl{y}`, i.e. every open around `x` contains `y`.
    pub fn specialization(&self) -> BitMatrix {
        BitMatrix::from_fn(self.n_points, self.n_points, |x, y| has(self.neighbourhoods[x], y))
    }

    pub fn is_t0(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.neighbourhoods.iter().all(|n| seen.insert(*n))
    }

    /// `u ⋐ v`: every open cover of `v` has a finite subfamily covering `u`.
    ///
    /// Quantifies over directed covers. A finite directed family contains its
    /// own union, so the directed covers of `v` are exactly the families whose
    /// largest member contains `v`.
    pub fn way_below(&self, u: u32, v: u32) -> Result<bool, TopologyError> {
        for s in [u, v] {
            if !self.is_open(s) {
                return Err(TopologyError::NotOpen(s));
            }
        }
        let result = self
            .opens
            .iter()
            .filter(|&&m| subset(v, m))
            .all(|&m| subset(u, m));
        assert_eq!(
            result,
            subset(u, v),
            "way-below on a finite space must coincide with inclusion"
        );
        Ok(result)
    }

    /// Literal form of [`way_below`](Self::way_below) ranging over every
    /// subfamily of opens. Exponential in the number of opens.
    pub fn way_below_exhaustive(&self, u: u32, v: u32) -> Result<bool, TopologyError> {
        for s in [u, v] {
            if !self.is_open(s) {
                return Err(TopologyError::NotOpen(s));
            }
        }
        let k = self.opens.len();
        assert!(k <= 20, "exhaustive way-below is limited to 20 open sets");
        for fam in 0u32..(1u32 << k) {
            let union = bits(fam).fold(0, |acc, i| acc | self.opens[i]);
            // a subfamily of a finite family is finite, so it is its own subcover
            if subset(v, union) && !subset(u, union) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// All unions of subfamilies of `gens`, together with `base`.
pub(crate) fn union_closure(gens: &[u32], base: u32) -> Vec<u32> {
    let mut seen: BTreeSet<u32> = BTreeSet::new();
    seen.insert(base);
    let mut frontier = vec![base];
    while let Some(cur) = frontier.pop() {
        for &g in gens {
            let next = cur | g;
            if seen.insert(next) {
                frontier.push(next);
            }
        }
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sierpinski() -> FiniteTopology {
        // points x = 0, y = 1; {y} is open
        FiniteTopology::new(2, [0, 0b10, 0b11]).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(FiniteTopology::new(2, [0b10, 0b11]).unwrap_err(), TopologyError::MissingEmpty);
        assert_eq!(FiniteTopology::new(2, [0, 0b10]).unwrap_err(), TopologyError::MissingFull);
        assert_eq!(
            FiniteTopology::new(3, [0, 0b001, 0b010, 0b111]).unwrap_err(),
            TopologyError::NotUnionClosed(0b001, 0b010)
        );
        assert_eq!(
            FiniteTopology::new(3, [0, 0b011, 0b110, 0b111]).unwrap_err(),
            TopologyError::NotIntersectionClosed(0b011, 0b110)
        );
        assert!(matches!(
            FiniteTopology::new(2, [0, 0b100, 0b11]),
            Err(TopologyError::OutOfRange(_))
        ));
    }

    #[test]
    fn sierpinski_way_below() {
        let t = sierpinski();
        assert!(t.way_below(0b10, 0b11).unwrap());
        assert!(!t.way_below(0b11, 0b10).unwrap());
        for &v in t.opens() {
            assert!(t.way_below(0, v).unwrap());
        }
        assert_eq!(t.way_below(0b01, 0b11), Err(TopologyError::NotOpen(0b01)));
    }

    #[test]
    fn directed_and_exhaustive_way_below_agree() {
        let spaces = [
            sierpinski(),
            FiniteTopology::new(3, [0, 0b100, 0b110, 0b111]).unwrap(),
            FiniteTopology::generated_by(3, [0b001, 0b010, 0b100]),
            FiniteTopology::new(2, [0, 0b11]).unwrap(),
        ];
        for t in &spaces {
            for &u in t.opens() {
                for &v in t.opens() {
                    assert_eq!(t.way_below(u, v), t.way_below_exhaustive(u, v));
                }
            }
        }
    }

    #[test]
    fn closures_and_specialization() {
        let t = sierpinski();
        assert_eq!(t.point_closure(0), 0b01);
        assert_eq!(t.point_closure(1), 0b11);
        let sp = t.specialization();
        assert!(sp.get(0, 1));
        assert!(!sp.get(1, 0));
        assert!(t.is_t0());
        assert!(!FiniteTopology::new(2, [0, 0b11]).unwrap().is_t0());
    }

    #[test]
    fn generated_topology_is_discrete_from_singletons() {
        let t = FiniteTopology::generated_by(3, [0b001, 0b010, 0b100]);
        assert_eq!(t.opens().len(), 8);
    }
}
