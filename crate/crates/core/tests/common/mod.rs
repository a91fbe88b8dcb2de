//! Random inputs and brute-force oracles shared by the integration tests.
//! Nothing here calls into the recursion being checked.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use boolean_complex::derangement::{CyclePermutation, DerangementSet};
use boolean_complex::graph::{OrderedGraph, VertexId, VertexToken};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph on the given labels.
pub fn random_graph_on(rng: &mut impl Rng, labels: &[VertexId], p: f64) -> OrderedGraph {
    let edges: Vec<_> = labels
        .iter()
        .tuple_combinations()
        .filter(|_| rng.gen_bool(p))
        .map(|(&a, &b)| (a, b))
        .collect();
    OrderedGraph::new(labels.iter().copied().map(VertexToken::single), edges).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: u32, p: f64) -> OrderedGraph {
    random_graph_on(rng, &(1..=n).collect::<Vec<_>>(), p)
}

/// Splits `1..=n` into two nonempty random label sets.
pub fn random_split(rng: &mut impl Rng, n: u32) -> (Vec<VertexId>, Vec<VertexId>) {
    let mut labels: Vec<VertexId> = (1..=n).collect();
    labels.shuffle(rng);
    let cut = rng.gen_range(1..n as usize);
    let mut a = labels[..cut].to_vec();
    let mut b = labels[cut..].to_vec();
    a.sort();
    b.sort();
    (a, b)
}

pub fn perm(s: &str) -> CyclePermutation {
    s.parse().unwrap()
}

pub fn perms(items: &[&str]) -> DerangementSet {
    items.iter().map(|s| perm(s)).collect()
}

fn from_images(domain: &[VertexId], images: &[VertexId]) -> CyclePermutation {
    let mapping = domain.iter().copied().zip(images.iter().copied()).collect();
    CyclePermutation::from_mapping(&mapping).unwrap()
}

/// Every fixed-point-free bijection of `support`.
pub fn brute_derangements(support: &[VertexId]) -> DerangementSet {
    support
        .iter()
        .copied()
        .permutations(support.len())
        .filter(|img| img.iter().zip(support).all(|(a, b)| a != b))
        .map(|img| from_images(support, &img))
        .collect()
}

pub fn derangement_number(n: usize) -> u64 {
    (0..n)
        .permutations(n)
        .filter(|p| p.iter().enumerate().all(|(i, &x)| i != x))
        .count() as u64
}

/// `w(i) > i` at odd `i`, `w(i) < i` at even `i`.
pub fn alternating_excedances(r: u32) -> DerangementSet {
    let domain: Vec<VertexId> = (1..=2 * r).collect();
    domain
        .iter()
        .copied()
        .permutations(domain.len())
        .filter(|img| {
            img.iter()
                .zip(&domain)
                .all(|(&w, &i)| if i % 2 == 1 { w > i } else { w < i })
        })
        .map(|img| from_images(&domain, &img))
        .collect()
}

/// Cuts of `letters` into contiguous blocks of length at least two, by
/// bitmask over the cut positions.
pub fn parsings(letters: &[VertexId]) -> DerangementSet {
    let n = letters.len();
    if n < 2 {
        return DerangementSet::new();
    }
    let mut out = DerangementSet::new();
    for mask in 0u32..1 << (n - 1) {
        let mut blocks = vec![vec![letters[0]]];
        for i in 1..n {
            if mask >> (i - 1) & 1 == 1 {
                blocks.push(Vec::new());
            }
            blocks.last_mut().unwrap().push(letters[i]);
        }
        if blocks.iter().all(|b| b.len() >= 2) {
            out.insert(CyclePermutation::from_cycles(blocks).unwrap());
        }
    }
    out
}

/// Number of commutation classes of injective words of length `len`,
/// found by flood fill over swaps of adjacent non-adjacent letters.
pub fn commutation_classes(g: &OrderedGraph, len: usize) -> usize {
    let keys: Vec<VertexId> = g.keys().collect();
    let mut seen: HashSet<Vec<VertexId>> = HashSet::new();
    let mut classes = 0;
    for word in keys.iter().copied().permutations(len) {
        if seen.contains(&word) {
            continue;
        }
        classes += 1;
        let mut queue = VecDeque::from([word.clone()]);
        seen.insert(word);
        while let Some(w) = queue.pop_front() {
            for i in 0..w.len().saturating_sub(1) {
                if !g.adjacent(w[i], w[i + 1]) {
                    let mut v = w.clone();
                    v.swap(i, i + 1);
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
    }
    classes
}

/// Length of the unique cycle of a connected unicyclic graph, by
/// stripping leaves until none remain.
pub fn unicyclic_cycle_len(g: &OrderedGraph) -> usize {
    let mut alive: BTreeSet<VertexId> = g.keys().collect();
    loop {
        let leaf = alive
            .iter()
            .copied()
            .find(|&v| g.neighbors(v).filter(|u| alive.contains(u)).count() <= 1);
        match leaf {
            Some(v) => {
                alive.remove(&v);
            }
            None => return alive.len(),
        }
    }
}
