//! Seeded random structures, spaces and partial maps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::{bit, bits, has};
use crate::morphism::PartialMap;
use crate::order::{RawStructure, Structure, MAX_ELEMENTS};
use crate::space::FiniteSpace;

/// How `≺` is drawn once the order is fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrecMode {
    /// `≺ = ≤`.
    Leq,
    /// A random subset of `≤`, transitively closed on a coin flip.
    SubsetOfLeq,
    /// A random relation with no constraint.
    Arbitrary,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gen_structure(n: usize, seed: u64) -> Structure {
    gen_structure_with(n, seed, PrecMode::SubsetOfLeq)
}

/// A random `n`-element lattice with labels `e0, e1, …` in random positions.
///
/// The order grows from the two-element chain by inserting each new element
/// strictly between a random comparable pair `v < u`, which keeps all joins.
/// This reaches many but not all lattices, and not uniformly.
pub fn gen_structure_with(n: usize, seed: u64, mode: PrecMode) -> Structure {
    assert!((1..=MAX_ELEMENTS).contains(&n), "size must be in 1..={MAX_ELEMENTS}");
    let mut rng = rng(seed);
    let up = random_lattice(n, &mut rng);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    // element i of the lattice sits at position perm[i]
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let leq = |p: usize, q: usize| has(up[inv[p]], inv[q]);
    let density: f64 = rng.random_range(0.2..1.0);
    let mut prec = vec![vec![false; n]; n];
    for (p, row) in prec.iter_mut().enumerate() {
        for (q, cell) in row.iter_mut().enumerate() {
            *cell = match mode {
                PrecMode::Leq => leq(p, q),
                PrecMode::SubsetOfLeq => leq(p, q) && rng.random_bool(density),
                PrecMode::Arbitrary => rng.random_bool(density),
            };
        }
    }
    if mode == PrecMode::SubsetOfLeq && rng.random_bool(0.5) {
        for k in 0..n {
            for p in 0..n {
                for q in 0..n {
                    if prec[p][k] && prec[k][q] {
                        prec[p][q] = true;
                    }
                }
            }
        }
    }
    let raw = RawStructure::from_fns((0..n).map(|i| format!("e{i}")), leq, |p, q| prec[p][q]);
    Structure::validate(&raw).expect("generated order is a lattice")
}

/// `up[i]` is the mask of elements above `i`; element 0 is the bottom and,
/// for `n ≥ 2`, element 1 the top.
fn random_lattice(n: usize, rng: &mut impl Rng) -> Vec<u32> {
    if n == 1 {
        return vec![1];
    }
    let mut up = vec![0b11, 0b10];
    for x in 2..n {
        let pairs: Vec<(usize, usize)> = (0..x)
            .flat_map(|v| bits(up[v]).filter(move |&u| u != v).map(move |u| (v, u)))
            .collect();
        let (v, u) = pairs[rng.random_range(0..pairs.len())];
        let new_up = up[u] | bit(x);
        for y in 0..x {
            if has(up[y], v) {
                up[y] |= bit(x);
            }
        }
        up.push(new_up);
    }
    up
}

/// A random `T0` space: the up-set topology of a random partial order on `m`
/// points. Orders whose up-sets exceed the basis limit are redrawn.
pub fn gen_poset_space(m: usize, seed: u64) -> FiniteSpace {
    assert!((1..=crate::space::MAX_SPACE_POINTS).contains(&m));
    let mut rng = rng(seed);
    let labels: Vec<String> = (0..m).map(|i| format!("x{i}")).collect();
    loop {
        let density: f64 = rng.random_range(0.0..0.8);
        let mut perm: Vec<usize> = (0..m).collect();
        perm.shuffle(&mut rng);
        // i ≤ j in the order when perm[i] < perm[j] and a coin says so
        let mut up: Vec<u32> = (0..m).map(bit).collect();
        for i in 0..m {
            for j in 0..m {
                if perm[i] < perm[j] && rng.random_bool(density) {
                    up[i] |= bit(j);
                }
            }
        }
        // transitive closure along the linear extension
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(perm[i]));
        for &i in &order {
            let reach = bits(up[i]).fold(up[i], |acc, j| acc | up[j]);
            up[i] = reach;
        }
        if let Ok(space) = FiniteSpace::from_up_sets(labels.clone(), &up) {
            return space;
        }
    }
}

/// A random partial continuous map, by rejection; falls back to the
/// nowhere-defined map, which is always continuous.
pub fn gen_partial_map(source: &FiniteSpace, target: &FiniteSpace, rng: &mut impl Rng) -> PartialMap {
    let opens = source.topology().opens();
    for _ in 0..64 {
        let domain = opens[rng.random_range(0..opens.len())];
        let assignment = (0..source.n_points())
            .map(|x| has(domain, x).then(|| rng.random_range(0..target.n_points())))
            .collect();
        if let Ok(map) = PartialMap::new(source, target, assignment) {
            return map;
        }
    }
    PartialMap::new(source, target, vec![None; source.n_points()]).expect("empty map is continuous")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        for seed in 0..20 {
            assert_eq!(gen_structure(6, seed), gen_structure(6, seed));
            assert_eq!(gen_poset_space(4, seed), gen_poset_space(4, seed));
        }
    }

    #[test]
    fn small_sizes() {
        let one = gen_structure(1, 3);
        assert_eq!(one.len(), 1);
        for seed in 0..50 {
            let s = gen_structure(3, seed);
            // the only 3-element join-semilattice with bottom is the chain
            let comparable = (0..3)
                .flat_map(|p| (0..3).map(move |q| (p, q)))
                .filter(|&(p, q)| s.leq(p, q))
                .count();
            assert_eq!(comparable, 6);
        }
    }

    #[test]
    fn modes_respect_constraints() {
        for seed in 0..50 {
            let s = gen_structure_with(6, seed, PrecMode::Leq);
            assert!(s.prec_is_leq());
            let s = gen_structure_with(6, seed, PrecMode::SubsetOfLeq);
            assert!(s.prec_matrix().is_subset_of(&s.leq_matrix()));
        }
    }

    #[test]
    fn partial_maps_are_continuous() {
        let mut r = rng(9);
        for seed in 0..30 {
            let x = gen_poset_space(3, seed);
            let y = gen_poset_space(3, seed + 100);
            let _ = gen_partial_map(&x, &y, &mut r);
        }
    }
}
