//! Closed-form derangement sets for particular graph families, computed
//! without touching a graph. They serve as oracles for the recursion.

use std::collections::{BTreeMap, HashSet};

use itertools::Itertools;

use super::{CyclePermutation, DerangementSet};
use crate::error::{Error, Result};
use crate::graph::{Family, VertexId};

/// Permutations of `1..=2r` with `w(i) > i` for odd `i` and `w(i) < i` for
/// even `i`, by brute force over the symmetric group.
pub fn alternating_excedance_set(r: u32) -> DerangementSet {
    let n = 2 * r;
    (1..=n)
        .permutations(n as usize)
        .filter(|img| {
            img.iter().zip(1..=n).all(|(&wi, i)| {
                if i % 2 == 1 {
                    wi > i
                } else {
                    wi < i
                }
            })
        })
        .map(|img| {
            let m: BTreeMap<_, _> = (1..=n).zip(img).collect();
            CyclePermutation::from_mapping(&m).expect("permutation")
        })
        .collect()
}

/// Every way to cut `letters` into contiguous blocks of length at least
/// two, each block read as a cycle.
pub fn valid_parsings(letters: &[VertexId]) -> Result<DerangementSet> {
    let distinct: HashSet<_> = letters.iter().collect();
    if distinct.len() != letters.len() {
        return Err(Error::domain("valid parsings need distinct letters"));
    }
    let mut out = DerangementSet::new();
    let mut blocks = Vec::new();
    parse_from(letters, &mut blocks, &mut out);
    Ok(out)
}

fn parse_from<'a>(rest: &'a [VertexId], blocks: &mut Vec<&'a [VertexId]>, out: &mut DerangementSet) {
    if rest.is_empty() {
        if !blocks.is_empty() {
            let cycles = blocks.iter().map(|b| b.to_vec()).collect();
            out.insert(CyclePermutation::from_cycles(cycles).expect("distinct letters"));
        }
        return;
    }
    for len in 2..=rest.len() {
        blocks.push(&rest[..len]);
        parse_from(&rest[len..], blocks, out);
        blocks.pop();
    }
}

fn same_cycle(w: &CyclePermutation, letters: &[VertexId]) -> bool {
    w.cycles()
        .iter()
        .any(|c| letters.iter().all(|v| c.contains(v)))
}

/// Closed-form `D(G)` for the labeled Coxeter families:
///
/// * `A_n`: `VP(1 2 ... n)`;
/// * `D_n`: parsings of `1 2 n 3 ... (n-1)` with 2 and n in one cycle;
/// * `E_n`: parsings of `1 2 3 n 4 ... (n-1)` with 3 and n in one cycle;
/// * affine `A_n` (the `n`-cycle): `VP(1 ... n)` together with, for each
///   `k` in `3..=n`, the parsings of `1 k (k+1) ... n 2 ... (k-1)` that keep
///   `{1, k, ..., n}` in one cycle.
pub fn coxeter_derangement_set(family: Family, n: u32) -> Result<DerangementSet> {
    if n < family.min_param() {
        return Err(Error::domain(format!(
            "family {family} needs n >= {}, got {n}",
            family.min_param()
        )));
    }
    match family {
        Family::A => valid_parsings(&(1..=n).collect::<Vec<_>>()),
        Family::D => {
            let word: Vec<_> = [1, 2, n].into_iter().chain(3..n).collect();
            Ok(filtered(valid_parsings(&word)?, &[2, n]))
        }
        Family::E => {
            let word: Vec<_> = [1, 2, 3, n].into_iter().chain(4..n).collect();
            Ok(filtered(valid_parsings(&word)?, &[3, n]))
        }
        Family::AffineA => {
            let mut out = valid_parsings(&(1..=n).collect::<Vec<_>>())?;
            for k in 3..=n {
                let word: Vec<_> = [1].into_iter().chain(k..=n).chain(2..k).collect();
                let together: Vec<_> = [1].into_iter().chain(k..=n).collect();
                out.extend(filtered(valid_parsings(&word)?, &together));
            }
            Ok(out)
        }
        other => Err(Error::domain(format!("no closed form for family {other}"))),
    }
}

fn filtered(set: DerangementSet, together: &[VertexId]) -> DerangementSet {
    set.into_iter().filter(|w| same_cycle(w, together)).collect()
}
