//! The degenerate ground manifold: every independent set of an instance,
//! canonically indexed, plus the median-graph adjacency on it.
//!
//! Canonical order is ascending cardinality, then ascending bitmask value,
//! which places the n+1 trivial solutions (empty set and singletons) at
//! indices `0..=n`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use std::collections::HashMap;

/// Default cap on the vertex count for full basis enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 30;

/// All independent sets of a graph in canonical order.
#[derive(Debug, Clone)]
pub struct SolutionBasis {
    n: usize,
    solutions: Vec<VertexSet>,
    index_of: HashMap<u64, u32>,
    cardinality_histogram: Vec<u64>,
}

impl SolutionBasis {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of solutions N_s.
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the empty set is always a solution
    }

    pub fn solutions(&self) -> &[VertexSet] {
        &self.solutions
    }

    pub fn solution(&self, index: usize) -> VertexSet {
        self.solutions[index]
    }

    /// Canonical index of a solution, if present.
    pub fn index_of(&self, s: VertexSet) -> Option<usize> {
        self.index_of.get(&s.bits()).map(|&i| i as usize)
    }

    /// `N_k`: number of solutions with exactly `k` vertices, for k = 0..=max.
    pub fn cardinality_histogram(&self) -> &[u64] {
        &self.cardinality_histogram
    }

    /// Largest solution cardinality.
    pub fn max_cardinality(&self) -> usize {
        self.cardinality_histogram.len() - 1
    }

    /// Indices of the n+1 trivial solutions (cardinality ≤ 1).
    ///
    /// With canonical ordering these are always `0..=n`, but the scan does
    /// not assume it.
    pub fn trivial_indices(&self) -> Vec<usize> {
        self.solutions
            .iter()
            .enumerate()
            .filter(|(_, s)| s.cardinality() <= 1)
            .map(|(i, _)| i)
            .collect()
    }

    /// CSV export: `index,bitmask,popcount` (header included).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,bitmask,popcount\n");
        for (i, s) in self.solutions.iter().enumerate() {
            out.push_str(&format!("{},{},{}\n", i, s.bits(), s.cardinality()));
        }
        out
    }
}

/// Pairs of basis indices whose solutions differ in exactly one vertex.
#[derive(Debug, Clone)]
pub struct MedianAdjacency {
    pairs: Vec<(u32, u32)>,
    degrees: Vec<u32>,
}

impl MedianAdjacency {
    /// Edge list with `α < β`, sorted lexicographically.
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Median-graph degree of each solution.
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// CSV export: `alpha,beta` (header included).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("alpha,beta\n");
        for &(a, b) in &self.pairs {
            out.push_str(&format!("{a},{b}\n"));
        }
        out
    }
}

/// Enumerate every independent set of `g` into a canonical basis.
///
/// Backtracks over vertices with adjacency bitmasks; a vertex joins the
/// current set only when none of its neighbors are already in it, so the
/// search tree has O(n · N_s) nodes. Fails with a capacity error when
/// `n` exceeds `limit`.
pub fn enumerate_independent_sets_with_limit(g: &Graph, limit: usize) -> Result<SolutionBasis> {
    let n = g.vertex_count();
    if n > limit {
        return Err(Error::Capacity(format!(
            "enumeration limited to {limit} vertices, instance has {n}"
        )));
    }
    let mut solutions = Vec::new();
    let mut stack: Vec<(usize, u64)> = vec![(0, 0)];
    while let Some((v, current)) = stack.pop() {
        if v == n {
            solutions.push(VertexSet(current));
            continue;
        }
        // Exclude v, then include it when no chosen vertex is adjacent.
        stack.push((v + 1, current));
        if g.neighbors(v) & current == 0 {
            stack.push((v + 1, current | 1 << v));
        }
    }
    solutions.sort_unstable_by_key(|s| (s.cardinality(), s.bits()));

    let mut index_of = HashMap::with_capacity(solutions.len());
    for (i, s) in solutions.iter().enumerate() {
        index_of.insert(s.bits(), i as u32);
    }
    let max_card = solutions.last().map_or(0, |s| s.cardinality());
    let mut cardinality_histogram = vec![0u64; max_card + 1];
    for s in &solutions {
        cardinality_histogram[s.cardinality()] += 1;
    }
    Ok(SolutionBasis {
        n,
        solutions,
        index_of,
        cardinality_histogram,
    })
}

/// [`enumerate_independent_sets_with_limit`] at the default limit.
pub fn enumerate_independent_sets(g: &Graph) -> Result<SolutionBasis> {
    enumerate_independent_sets_with_limit(g, DEFAULT_ENUMERATION_LIMIT)
}

/// Count independent sets without materializing the basis.
///
/// Runs the same output-sensitive backtracking as the enumerator, so the
/// count is exact for any graph the search can traverse.
pub fn count_independent_sets(g: &Graph) -> u128 {
    let n = g.vertex_count();
    let mut count: u128 = 0;
    let mut stack: Vec<(usize, u64)> = vec![(0, 0)];
    while let Some((v, current)) = stack.pop() {
        if v == n {
            count += 1;
            continue;
        }
        stack.push((v + 1, current));
        if g.neighbors(v) & current == 0 {
            stack.push((v + 1, current | 1 << v));
        }
    }
    count
}

/// Build the median-graph adjacency: all pairs of solutions that differ in
/// exactly one vertex.
///
/// For every solution, removing any single member yields another solution
/// (downward closure), so one hash probe per (solution, member) pair finds
/// every edge exactly once.
pub fn median_adjacency(basis: &SolutionBasis) -> MedianAdjacency {
    let mut pairs = Vec::new();
    for (i, s) in basis.solutions().iter().enumerate() {
        for v in s.iter() {
            let smaller = basis
                .index_of(s.without(v))
                .expect("downward closure: subset of a solution is a solution");
            // Smaller cardinality sorts first, so smaller < i.
            pairs.push((smaller as u32, i as u32));
        }
    }
    pairs.sort_unstable();
    let mut degrees = vec![0u32; basis.len()];
    for &(a, b) in &pairs {
        degrees[a as usize] += 1;
        degrees[b as usize] += 1;
    }
    MedianAdjacency { pairs, degrees }
}
