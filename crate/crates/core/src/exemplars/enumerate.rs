//! Exhaustive enumeration of small lattices, relations and finite spaces.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::bits::{bit, has};
use crate::order::{RawStructure, Structure};
use crate::space::{FiniteSpace, SpaceError};

fn lattice_labels(n: usize) -> Vec<String> {
    if n == 1 {
        return vec!["0".into()];
    }
    let mut labels = vec!["0".to_string()];
    labels.extend((0..n - 2).map(|i| ((b'a' + i as u8) as char).to_string()));
    labels.push("1".into());
    labels
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    heap_permute(k, &mut cur, &mut out);
    out
}

fn heap_permute(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, cur, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        cur.swap(j, k - 1);
    }
}

/// Lattices of size `n` up to isomorphism, with `≺ = ≤`.
///
/// Ordered by the number of comparable pairs, then by a canonical code. The
/// bottom is labelled `0`, the top `1`, and the rest `a, b, c, …`.
pub fn lattices(n: usize) -> Vec<Structure> {
    assert!((1..=8).contains(&n), "lattice enumeration supports 1..=8 elements");
    if n <= 2 {
        let raw = RawStructure::from_fns(lattice_labels(n), |p, q| p <= q, |p, q| p <= q);
        return vec![Structure::validate(&raw).unwrap()];
    }
    let k = n - 2;
    // middle elements 1..=k, naturally labelled: i < j in the order only if i < j
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let perms = permutations(k);
    let mut found: BTreeMap<(usize, u64), Structure> = BTreeMap::new();
    for code in 0u64..(1 << pairs.len()) {
        let mut lt = vec![0u32; k];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if code >> b & 1 == 1 {
                lt[i] |= bit(j);
            }
        }
        let transitive = (0..k).all(|i| (0..k).filter(|&j| has(lt[i], j)).all(|j| lt[j] & !lt[i] == 0));
        if !transitive {
            continue;
        }
        let canonical = perms
            .iter()
            .map(|perm| {
                let mut c = 0u64;
                for i in 0..k {
                    for j in 0..k {
                        if has(lt[i], j) {
                            c |= 1 << (perm[i] * k + perm[j]);
                        }
                    }
                }
                c
            })
            .min()
            .unwrap();
        let comparable = lt.iter().map(|m| m.count_ones() as usize).sum::<usize>();
        if found.contains_key(&(comparable, canonical)) {
            continue;
        }
        let leq = |p: usize, q: usize| {
            p == q || p == 0 || q == n - 1 || (p > 0 && q > 0 && p < n - 1 && q < n - 1 && has(lt[p - 1], q - 1))
        };
        let raw = RawStructure::from_fns(lattice_labels(n), leq, leq);
        if let Ok(s) = Structure::validate(&raw) {
            found.insert((comparable, canonical), s);
        }
    }
    found.into_values().collect()
}

/// Every `≺ ⊆ ≤` on the carrier of a lattice, indexed without materializing
/// the structures. Ordered by descending number of pairs and then by pair
/// code, so `≺ = ≤` comes first.
#[derive(Clone, Debug)]
pub struct SubRelations {
    base: Structure,
    pairs: Vec<(usize, usize)>,
    codes: Vec<u32>,
}

impl SubRelations {
    pub fn new(s: &Structure) -> Self {
        let pairs: Vec<(usize, usize)> = s
            .elements()
            .flat_map(|p| s.elements().map(move |q| (p, q)))
            .filter(|&(p, q)| s.leq(p, q))
            .collect();
        assert!(pairs.len() <= 24, "too many comparable pairs to enumerate");
        let full_code = (1u32 << pairs.len()) - 1;
        let mut codes: Vec<u32> = (0..=full_code).collect();
        codes.sort_by_key(|&c| (std::cmp::Reverse(c.count_ones()), full_code & !c));
        SubRelations {
            base: s.clone(),
            pairs,
            codes,
        }
    }

    /// Only `≺ = ≤`.
    pub fn leq_only(s: &Structure) -> Self {
        let mut r = SubRelations::new(s);
        r.codes.truncate(1);
        r
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn get(&self, i: usize) -> Structure {
        let c = self.codes[i];
        let n = self.base.len();
        let mut rel = vec![0u32; n];
        for (b, &(p, q)) in self.pairs.iter().enumerate() {
            if c >> b & 1 == 1 {
                rel[p] |= bit(q);
            }
        }
        self.base.with_prec(|p, q| has(rel[p], q))
    }

    /// Keeps the relations whose structure satisfies `keep`, preserving order.
    pub fn retain(&mut self, keep: impl Fn(&Structure) -> bool + Sync) {
        let kept: Vec<u32> = (0..self.len())
            .into_par_iter()
            .filter(|&i| keep(&self.get(i)))
            .map(|i| self.codes[i])
            .collect();
        self.codes = kept;
    }
}

/// Every `≺ ⊆ ≤` on the carrier of `s`, in [`SubRelations`] order.
pub fn sub_relations_of_leq(s: &Structure) -> Vec<Structure> {
    let r = SubRelations::new(s);
    (0..r.len()).map(|i| r.get(i)).collect()
}

/// Every structure of size `n` with `≺ ⊆ ≤` satisfying `keep`, one lattice
/// per isomorphism class, in [`lattices`] then [`SubRelations`] order.
///
/// Any structure with an auxiliary `≺` is isomorphic to exactly one of these
/// carriers with some `≺ ⊆ ≤`.
pub fn structures_where(n: usize, keep: impl Fn(&Structure) -> bool + Sync) -> Vec<Structure> {
    let mut out = Vec::new();
    for l in lattices(n) {
        let mut r = SubRelations::new(&l);
        r.retain(&keep);
        out.extend((0..r.len()).map(|i| r.get(i)));
    }
    out
}

/// Labelled partial orders on `m` points as up-set masks (`up[x]` holds every
/// point above `x`).
pub fn labelled_posets(m: usize) -> Vec<Vec<u32>> {
    assert!(m <= 6, "labelled poset enumeration supports up to 6 points");
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let total = 3u64.pow(pairs.len() as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut up: Vec<u32> = (0..m).map(bit).collect();
        for &(i, j) in &pairs {
            match code % 3 {
                1 => up[i] |= bit(j),
                2 => up[j] |= bit(i),
                _ => {}
            }
            code /= 3;
        }
        let transitive = (0..m).all(|x| (0..m).filter(|&y| has(up[x], y)).all(|y| up[y] & !up[x] == 0));
        if transitive {
            out.push(up);
        }
    }
    out
}

/// The up-set topology of every labelled order on `m` points, all opens in the
/// basis. Orders with too many up-sets for a basis come back as errors.
pub fn poset_spaces(m: usize) -> Vec<Result<FiniteSpace, SpaceError>> {
    let labels: Vec<String> = (0..m).map(|i| format!("x{i}")).collect();
    labelled_posets(m)
        .iter()
        .map(|up| FiniteSpace::from_up_sets(labels.clone(), up))
        .collect()
}
