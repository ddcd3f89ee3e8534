//! Finite unions of bounded open intervals with rational endpoints, ordered by
//! inclusion, with `≺` the compact containment `cl(p) ⊆ q`.

use std::fmt;

use num_rational::Ratio;

use super::window::{ExemplarError, LazyStructure};
use crate::order::MAX_ELEMENTS;

pub type Q = Ratio<i64>;

/// Disjoint open intervals sorted by left endpoint. Intervals may share an
/// endpoint, which is then not in the set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IntervalUnion(Vec<(Q, Q)>);

impl IntervalUnion {
    pub fn empty() -> Self {
        IntervalUnion(Vec::new())
    }

    /// Normal form of the union; empty intervals are dropped.
    pub fn new(intervals: impl IntoIterator<Item = (Q, Q)>) -> Self {
        let mut v: Vec<(Q, Q)> = intervals.into_iter().filter(|(a, b)| a < b).collect();
        v.sort();
        let mut out: Vec<(Q, Q)> = Vec::with_capacity(v.len());
        for (a, b) in v {
            match out.last_mut() {
                Some((_, end)) if a < *end => *end = (*end).max(b),
                _ => out.push((a, b)),
            }
        }
        IntervalUnion(out)
    }

    pub fn interval(a: Q, b: Q) -> Self {
        IntervalUnion::new([(a, b)])
    }

    pub fn intervals(&self) -> &[(Q, Q)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn union(&self, other: &IntervalUnion) -> IntervalUnion {
        IntervalUnion::new(self.0.iter().chain(&other.0).copied())
    }

    pub fn is_subset_of(&self, other: &IntervalUnion) -> bool {
        self.0
            .iter()
            .all(|&(a, b)| other.0.iter().any(|&(c, d)| c <= a && b <= d))
    }

    /// `cl(self) ⊆ other`: each `[a, b]` sits strictly inside one component.
    pub fn compactly_inside(&self, other: &IntervalUnion) -> bool {
        self.0
            .iter()
            .all(|&(a, b)| other.0.iter().any(|&(c, d)| c < a && b < d))
    }
}

impl fmt::Display for IntervalUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.0.iter().map(|(a, b)| format!("({a},{b})")).collect();
        f.write_str(&parts.join("∪"))
    }
}

/// Windows are the unions whose endpoints lie on the grid `j/denominator`
/// within `[0, k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalIntervals {
    pub denominator: i64,
    pub width: i64,
}

impl RationalIntervals {
    pub fn new(denominator: i64, width: i64) -> Result<Self, ExemplarError> {
        if denominator <= 0 || width <= 0 {
            return Err(ExemplarError::BadParameter("caps must be positive".into()));
        }
        Ok(RationalIntervals { denominator, width })
    }

    /// All grid unions inside `[0, width]`: choose a set of unit cells and,
    /// between two chosen neighbours, whether the shared grid point is included.
    fn grid_elements(&self, width: i64) -> Vec<IntervalUnion> {
        let cells = (width * self.denominator) as usize;
        let point = |j: usize| Q::new(j as i64, self.denominator);
        let mut out = vec![IntervalUnion::empty()];
        // runs[i] = elements whose rightmost component ends at grid point i
        let mut runs: Vec<Vec<Vec<(Q, Q)>>> = vec![Vec::new(); cells + 1];
        for end in 1..=cells {
            let mut here = Vec::new();
            for start in 0..end {
                let comp = (point(start), point(end));
                here.push(vec![comp]);
                for run in &runs[..=start] {
                    for prefix in run {
                        let mut v = prefix.clone();
                        v.push(comp);
                        here.push(v);
                    }
                }
            }
            runs[end] = here;
        }
        for run in runs.into_iter().flatten() {
            out.push(IntervalUnion(run));
        }
        out.sort();
        out
    }
}

impl LazyStructure for RationalIntervals {
    type Code = IntervalUnion;

    fn name(&self) -> String {
        format!("intervals/d={}", self.denominator)
    }

    fn label(&self, code: &IntervalUnion) -> String {
        code.to_string()
    }

    fn leq(&self, a: &IntervalUnion, b: &IntervalUnion) -> bool {
        a.is_subset_of(b)
    }

    fn prec(&self, a: &IntervalUnion, b: &IntervalUnion) -> bool {
        a.compactly_inside(b)
    }

    fn join(&self, a: &IntervalUnion, b: &IntervalUnion) -> IntervalUnion {
        a.union(b)
    }

    fn bottom(&self) -> IntervalUnion {
        IntervalUnion::empty()
    }

    /// Grid unions inside `[0, k]`, `k ≤ width`.
    fn initial_codes(&self, k: usize) -> Result<Vec<IntervalUnion>, ExemplarError> {
        let k = k as i64;
        if k > self.width {
            return Err(ExemplarError::BadParameter(format!(
                "window {k} exceeds the width cap {}",
                self.width
            )));
        }
        let count = count_grid_elements((k * self.denominator) as usize);
        if count > MAX_ELEMENTS {
            return Err(ExemplarError::WindowTooLarge(count));
        }
        Ok(self.grid_elements(k))
    }
}

/// Number of grid unions over `cells` unit cells, including `∅`.
fn count_grid_elements(cells: usize) -> usize {
    // f[i]: unions inside the first i cells ending with a component at i
    let mut f = vec![0usize; cells + 1];
    for end in 1..=cells {
        f[end] = (0..end).map(|start| 1 + (0..=start).map(|p| f[p]).sum::<usize>()).sum();
    }
    1 + f.iter().sum::<usize>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exemplars::window::{window_verdicts, WindowVerdict};
    use crate::axioms::Axiom;

    fn q(n: i64) -> Q {
        Q::from_integer(n)
    }

    #[test]
    fn compact_containment() {
        let unit = IntervalUnion::interval(q(0), q(1));
        assert!(unit.compactly_inside(&IntervalUnion::interval(q(-1), q(2))));
        assert!(!unit.compactly_inside(&unit));
        assert!(unit.is_subset_of(&unit));
        assert!(IntervalUnion::empty().compactly_inside(&IntervalUnion::empty()));
    }

    #[test]
    fn touching_intervals_stay_apart() {
        let split = IntervalUnion::interval(q(0), q(1)).union(&IntervalUnion::interval(q(1), q(2)));
        assert_eq!(split.intervals().len(), 2);
        let whole = IntervalUnion::interval(q(0), q(2));
        assert!(split.is_subset_of(&whole));
        assert!(!whole.is_subset_of(&split));
        assert_eq!(split.to_string(), "(0,1)∪(1,2)");
        let half = IntervalUnion::interval(Q::new(1, 2), q(3));
        assert_eq!(whole.union(&half).to_string(), "(0,3)");
    }

    #[test]
    fn grid_counts() {
        let r = RationalIntervals::new(1, 5).unwrap();
        for cells in 0..=5 {
            assert_eq!(r.grid_elements(cells as i64).len(), count_grid_elements(cells));
        }
        assert_eq!(count_grid_elements(3), 13);
        assert_eq!(count_grid_elements(4), 34);
    }

    #[test]
    fn window_verdicts_on_width_three() {
        let r = RationalIntervals::new(1, 3).unwrap();
        let w = r.window(3).unwrap();
        assert_eq!(w.structure.len(), 13);
        let verdicts = window_verdicts(&w.structure);
        for (a, v) in &verdicts {
            match a {
                Axiom::Auxiliary | Axiom::JoinPreserving | Axiom::PrecTransitive => {
                    assert_eq!(*v, WindowVerdict::Pass, "{a}")
                }
                _ => assert!(!matches!(v, WindowVerdict::Fail(_)), "{a}"),
            }
        }
        let interp = &verdicts.iter().find(|(a, _)| *a == Axiom::Interpolative).unwrap().1;
        assert!(matches!(interp, WindowVerdict::Unknown(_)));
    }

    #[test]
    fn windows_nest() {
        let r = RationalIntervals::new(1, 3).unwrap();
        for k in 0..3 {
            assert!(r.window(k).unwrap().embeds_into(&r.window(k + 1).unwrap()));
        }
        assert!(matches!(
            RationalIntervals::new(2, 3).unwrap().window(3),
            Err(ExemplarError::WindowTooLarge(_))
        ));
    }
}
