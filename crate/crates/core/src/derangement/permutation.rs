use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::VertexId;

/// A permutation of a finite ordered set, held in standard cycle form:
/// every cycle starts with its minimum and cycles are sorted by minima.
/// Fixed points are kept as length-one cycles.
///
/// Ordering compares the rendered text `"(1 3 4)(2 6)"`, so sorted
/// collections list permutations the way they read.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<VertexId>>", into = "Vec<Vec<VertexId>>")]
pub struct CyclePermutation {
    cycles: Vec<Vec<VertexId>>,
}

/// `λ_w(t)` and `ρ_w(t)` for one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canopy {
    pub lambda: VertexId,
    pub rho: BTreeSet<VertexId>,
}

impl CyclePermutation {
    /// Normalizes arbitrary cycle notation. Cycles must be nonempty and
    /// pairwise disjoint.
    pub fn from_cycles(cycles: Vec<Vec<VertexId>>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut normalized = Vec::with_capacity(cycles.len());
        for mut cycle in cycles {
            if cycle.is_empty() {
                return Err(Error::domain("empty cycle"));
            }
            for &v in &cycle {
                if !seen.insert(v) {
                    return Err(Error::domain(format!("{v} appears twice")));
                }
            }
            let min_pos = cycle
                .iter()
                .enumerate()
                .min_by_key(|(_, &v)| v)
                .map(|(i, _)| i)
                .unwrap();
            cycle.rotate_left(min_pos);
            normalized.push(cycle);
        }
        normalized.sort_by_key(|c| c[0]);
        Ok(CyclePermutation { cycles: normalized })
    }

    /// Standard cycle form of a bijection given as `x -> mapping[x]`.
    pub fn from_mapping(mapping: &BTreeMap<VertexId, VertexId>) -> Result<Self> {
        let images: HashSet<_> = mapping.values().collect();
        if images.len() != mapping.len() || !images.iter().all(|v| mapping.contains_key(v)) {
            return Err(Error::domain("mapping is not a bijection of its domain"));
        }
        let mut visited = HashSet::new();
        let mut cycles = Vec::new();
        // Ascending iteration starts each cycle at its minimum.
        for &start in mapping.keys() {
            if visited.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            visited.insert(start);
            let mut x = mapping[&start];
            while x != start {
                visited.insert(x);
                cycle.push(x);
                x = mapping[&x];
            }
            cycles.push(cycle);
        }
        Ok(CyclePermutation { cycles })
    }

    /// The permutation with empty support.
    pub fn empty() -> Self {
        CyclePermutation { cycles: Vec::new() }
    }

    pub fn cycles(&self) -> &[Vec<VertexId>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn support(&self) -> BTreeSet<VertexId> {
        self.cycles.iter().flatten().copied().collect()
    }

    pub fn support_len(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    pub fn is_derangement(&self) -> bool {
        self.cycles.iter().all(|c| c.len() >= 2)
    }

    fn locate(&self, v: VertexId) -> Option<(usize, usize)> {
        self.cycles
            .iter()
            .enumerate()
            .find_map(|(ci, c)| c.iter().position(|&x| x == v).map(|pos| (ci, pos)))
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.locate(v).is_some()
    }

    pub fn image(&self, v: VertexId) -> Option<VertexId> {
        let (ci, pos) = self.locate(v)?;
        let c = &self.cycles[ci];
        Some(c[(pos + 1) % c.len()])
    }

    pub fn preimage(&self, v: VertexId) -> Option<VertexId> {
        let (ci, pos) = self.locate(v)?;
        let c = &self.cycles[ci];
        Some(c[(pos + c.len() - 1) % c.len()])
    }

    pub fn to_mapping(&self) -> BTreeMap<VertexId, VertexId> {
        let mut m = BTreeMap::new();
        for c in &self.cycles {
            for (i, &v) in c.iter().enumerate() {
                m.insert(v, c[(i + 1) % c.len()]);
            }
        }
        m
    }

    /// `λ_w(t)` is the first element `<= t` reached by walking backwards
    /// from `t` along its cycle; `ρ_w(t)` collects `t` and the elements
    /// after it up to, not including, the first element `<= t`.
    pub fn canopy(&self, t: VertexId) -> Result<Canopy> {
        let (ci, pos) = self
            .locate(t)
            .ok_or_else(|| Error::domain(format!("{t} is not in the support")))?;
        let c = &self.cycles[ci];
        let len = c.len();

        let mut rho = BTreeSet::from([t]);
        for step in 1..len {
            let x = c[(pos + step) % len];
            if x <= t {
                break;
            }
            rho.insert(x);
        }

        let mut lambda = t;
        for step in 1..=len {
            let x = c[(pos + len - step % len) % len];
            if x <= t {
                lambda = x;
                break;
            }
        }
        Ok(Canopy { lambda, rho })
    }

    /// `w ⊔ u` on disjoint supports.
    pub fn disjoint_union(&self, other: &CyclePermutation) -> Result<Self> {
        let mut cycles = self.cycles.clone();
        cycles.extend(other.cycles.iter().cloned());
        Self::from_cycles(cycles)
            .map_err(|_| Error::domain(format!("{self} and {other} share support")))
    }

    /// Replaces every letter by a sequence of letters, read in place.
    pub fn expand_letters<F>(&self, mut expand: F) -> Result<Self>
    where
        F: FnMut(VertexId) -> Vec<VertexId>,
    {
        let cycles = self
            .cycles
            .iter()
            .map(|c| c.iter().flat_map(|&v| expand(v)).collect())
            .collect();
        Self::from_cycles(cycles)
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

impl Ord for CyclePermutation {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.cycles == other.cycles {
            return Ordering::Equal;
        }
        self.render().cmp(&other.render())
    }
}

impl PartialOrd for CyclePermutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CyclePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return f.write_str("()");
        }
        for c in &self.cycles {
            f.write_str("(")?;
            for (i, v) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for CyclePermutation {
    type Err = Error;

    /// Accepts any cycle notation, e.g. `"(3 4 1)(2 6)(5 8 7)"`, and
    /// normalizes it. `"()"` is the empty permutation.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::parse(1, msg);
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| bad(format!("expected '(' at {rest:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| bad("unclosed cycle".to_string()))?;
            let letters = body[..close]
                .split_whitespace()
                .map(|tok| tok.parse::<VertexId>().map_err(|_| bad(format!("bad id {tok:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if !letters.is_empty() {
                cycles.push(letters);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(cycles).map_err(|e| bad(e.to_string()))
    }
}

impl TryFrom<Vec<Vec<VertexId>>> for CyclePermutation {
    type Error = Error;

    fn try_from(cycles: Vec<Vec<VertexId>>) -> Result<Self> {
        Self::from_cycles(cycles)
    }
}

impl From<CyclePermutation> for Vec<Vec<VertexId>> {
    fn from(w: CyclePermutation) -> Self {
        w.cycles
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(s: &str) -> CyclePermutation {
        s.parse().unwrap()
    }

    #[test]
    fn mapping_to_standard_form() {
        let m: BTreeMap<u32, u32> =
            [(1, 3), (2, 6), (3, 4), (4, 1), (5, 8), (6, 2), (7, 5), (8, 7)].into();
        let w = CyclePermutation::from_mapping(&m).unwrap();
        assert_eq!(w.to_string(), "(1 3 4)(2 6)(5 8 7)");
        assert!(w.is_derangement());

        let id = CyclePermutation::from_mapping(&[(1, 1), (2, 2)].into()).unwrap();
        assert_eq!(id.to_string(), "(1)(2)");
        assert!(!id.is_derangement());

        assert!(CyclePermutation::from_mapping(&[(1, 2), (2, 2)].into()).is_err());
        assert!(CyclePermutation::from_mapping(&[(1, 3)].into()).is_err());
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(perm("(3 4 1)(2 6)(5 8 7)").to_string(), "(1 3 4)(2 6)(5 8 7)");
        assert_eq!(perm("(1 3 4)(5 8 7)(2 6)").to_string(), "(1 3 4)(2 6)(5 8 7)");
        assert_eq!(perm("()"), CyclePermutation::empty());
        assert!("(1 2)(2 3)".parse::<CyclePermutation>().is_err());
        assert!("(1 2".parse::<CyclePermutation>().is_err());
        assert!("1 2".parse::<CyclePermutation>().is_err());
    }

    #[test]
    fn canopy_table() {
        let w = perm("(1 3 4 7 2)(5 6)");
        let rows: [(u32, u32, &[u32]); 7] = [
            (1, 1, &[1, 2, 3, 4, 7]),
            (2, 1, &[2]),
            (3, 1, &[3, 4, 7]),
            (4, 3, &[4, 7]),
            (5, 5, &[5, 6]),
            (6, 5, &[6]),
            (7, 4, &[7]),
        ];
        for (t, lambda, rho) in rows {
            let c = w.canopy(t).unwrap();
            assert_eq!(c.lambda, lambda, "lambda({t})");
            assert_eq!(c.rho.iter().copied().collect::<Vec<_>>(), rho, "rho({t})");
        }
        assert!(w.canopy(9).is_err());
    }

    #[test]
    fn fixed_point_canopy() {
        let w = perm("(1 2)(3)");
        let c = w.canopy(3).unwrap();
        assert_eq!(c.lambda, 3);
        assert_eq!(c.rho, BTreeSet::from([3]));
    }

    #[test]
    fn ordering_reads_like_text() {
        let mut v = [perm("(1 2)(3 4)"), perm("(1 4 3 2)"), perm("(1 2 3 4)")];
        v.sort();
        let s: Vec<String> = v.iter().map(ToString::to_string).collect();
        // ' ' < ')' < digits in ASCII.
        assert_eq!(s, ["(1 2 3 4)", "(1 2)(3 4)", "(1 4 3 2)"]);
    }

    #[test]
    fn union_and_images() {
        let w = perm("(1 3)").disjoint_union(&perm("(2 4)")).unwrap();
        assert_eq!(w.to_string(), "(1 3)(2 4)");
        assert_eq!(w.image(2), Some(4));
        assert_eq!(w.preimage(1), Some(3));
        assert!(w.disjoint_union(&perm("(3 5)")).is_err());
    }

    proptest! {
        #[test]
        fn mapping_roundtrip(perm_vec in Just((1u32..=8).collect::<Vec<_>>()).prop_shuffle()) {
            let m: BTreeMap<u32, u32> = (1u32..=8).zip(perm_vec).collect();
            let w = CyclePermutation::from_mapping(&m).unwrap();
            prop_assert_eq!(w.to_mapping(), m);
            let reparsed: CyclePermutation = w.to_string().parse().unwrap();
            prop_assert_eq!(&reparsed, &w);
            for c in w.cycles() {
                prop_assert_eq!(c[0], *c.iter().min().unwrap());
            }
            prop_assert!(w.cycles().windows(2).all(|p| p[0][0] < p[1][0]));
        }

        #[test]
        fn smallest_element_law(perm_vec in Just((1u32..=6).collect::<Vec<_>>()).prop_shuffle()) {
            let m: BTreeMap<u32, u32> = (1u32..=6).zip(perm_vec).collect();
            let w = CyclePermutation::from_mapping(&m).unwrap();
            prop_assume!(w.is_derangement());
            for c in w.cycles() {
                for &t in c {
                    let can = w.canopy(t).unwrap();
                    prop_assert_eq!(can.rho.contains(&can.lambda), t == c[0]);
                }
            }
        }
    }
}
