//! Problem instances: simple undirected graphs and vertex subsets.
//!
//! Graphs are immutable after construction and capped at 64 vertices so
//! that vertex subsets fit in a single `u64` bitmask. Random instances
//! are drawn uniformly from all edge sets of the requested size with
//! Floyd's combination-sampling algorithm driven by a PCG generator, so
//! a `(n, m, seed)` triple pins the instance across runs and platforms.

use crate::error::{Error, Result};
use rand::{RngExt, SeedableRng};
use rand_pcg::Pcg64Mcg;
use std::fmt;

/// Hard cap on vertex count imposed by the `u64` bitmask representation.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices stored as a bitmask (bit `j` set ⟺ vertex `j` included).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices(vs: &[usize]) -> VertexSet {
        VertexSet(vs.iter().fold(0u64, |acc, &v| acc | (1u64 << v)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    /// Number of vertices in the set.
    pub fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    /// Iterate member vertices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored canonically: as `(u, v)` with `u < v`, sorted
/// lexicographically, with no duplicates and no self-loops. An adjacency
/// bitmask per vertex backs the O(|S|) independence test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<u64>,
}

impl Graph {
    /// Build a graph from an edge list, validating and canonicalizing it.
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidArgument("vertex count must be ≥ 1".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "vertex count {n} exceeds the bitmask limit {MAX_VERTICES}"
            )));
        }
        let mut canon: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {a}")));
            }
            if a as usize >= n || b as usize >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({a},{b}) references a vertex ≥ {n}"
                )));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        if canon.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("duplicate edge".into()));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in &canon {
            adj[u as usize] |= 1u64 << v;
            adj[v as usize] |= 1u64 << u;
        }
        Ok(Graph {
            n,
            edges: canon,
            adj,
        })
    }

    /// Graph with no edges.
    pub fn edgeless(n: usize) -> Graph {
        Graph::new(n, &[]).expect("edgeless graph is always valid")
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph is always valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonically ordered edge list (`u < v`, lexicographic).
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Neighbors of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    /// Serialize to the edge-list text format (`n m` header, then one
    /// `u v` line per edge in canonical order).
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parse the edge-list text format.
    ///
    /// First significant line is `n m`, followed by `m` lines `u v` with
    /// 0-indexed endpoints. Blank lines and lines starting with `#` are
    /// ignored. Edge order and endpoint order are normalized, so
    /// `parse(serialize(g)) == g`.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(u32, u32)> = Vec::new();
        let mut last_line = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected two integers, got {:?}", line),
                });
            }
            let a: u64 = fields[0].parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("not an integer: {:?}", fields[0]),
            })?;
            let b: u64 = fields[1].parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("not an integer: {:?}", fields[1]),
            })?;
            match header {
                None => {
                    let (n, m) = (a as usize, b as usize);
                    if n == 0 || n > MAX_VERTICES {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("vertex count {n} out of range 1..={MAX_VERTICES}"),
                        });
                    }
                    if m > n * (n - 1) / 2 {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("edge count {m} exceeds C({n},2)"),
                        });
                    }
                    header = Some((n, m));
                }
                Some((n, m)) => {
                    if edges.len() == m {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("more than the declared {m} edges"),
                        });
                    }
                    if a == b {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("self-loop at vertex {a}"),
                        });
                    }
                    if a >= n as u64 || b >= n as u64 {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("vertex index out of range (n = {n})"),
                        });
                    }
                    let e = (a.min(b) as u32, a.max(b) as u32);
                    if edges.contains(&e) {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("duplicate edge ({} {})", e.0, e.1),
                        });
                    }
                    edges.push(e);
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: last_line + 1,
            msg: "missing `n m` header".into(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: last_line + 1,
                msg: format!("expected {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }
}

/// Number of candidate edges on `n` vertices.
pub fn max_edges(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Map a row-major upper-triangular edge index to its `(u, v)` pair, `u < v`.
///
/// Index 0 is `(0,1)`, index 1 is `(0,2)`, …, index `n-2` is `(0,n-1)`,
/// index `n-1` is `(1,2)`, and so on.
pub(crate) fn edge_from_index(n: usize, index: usize) -> (u32, u32) {
    debug_assert!(index < max_edges(n));
    let mut idx = index;
    let mut u = 0usize;
    loop {
        let row = n - 1 - u;
        if idx < row {
            return (u as u32, (u + 1 + idx) as u32);
        }
        idx -= row;
        u += 1;
    }
}

/// Draw a uniformly random graph with exactly `m` edges on `n` vertices.
///
/// Uses Floyd's algorithm to sample an `m`-subset of the `n(n-1)/2`
/// candidate edge indices without rejection, then maps indices to pairs.
/// Deterministic for a fixed `(n, m, seed)`.
pub fn generate_random_graph(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("vertex count must be ≥ 1".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::Capacity(format!(
            "vertex count {n} exceeds the bitmask limit {MAX_VERTICES}"
        )));
    }
    let total = max_edges(n);
    if m > total {
        return Err(Error::InvalidArgument(format!(
            "edge count {m} exceeds C({n},2) = {total}"
        )));
    }
    let mut rng = Pcg64Mcg::seed_from_u64(seed);
    let mut chosen: Vec<bool> = vec![false; total];
    for j in total - m..total {
        let t = rng.random_range(0..=j);
        if chosen[t] {
            chosen[j] = true;
        } else {
            chosen[t] = true;
        }
    }
    let edges: Vec<(u32, u32)> = chosen
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(i, _)| edge_from_index(n, i))
        .collect();
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn forced_instances() {
        // K3 is the only graph with n = 3, m = 3; K2 the only one with n = 2, m = 1.
        for seed in [0u64, 1, 17, 123456789] {
            let g = generate_random_graph(3, 3, seed).unwrap();
            assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
            let g = generate_random_graph(2, 1, seed).unwrap();
            assert_eq!(g.edges(), &[(0, 1)]);
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let a = generate_random_graph(10, 10, 42).unwrap();
        let b = generate_random_graph(10, 10, 42).unwrap();
        assert_eq!(a, b);
        let c = generate_random_graph(10, 10, 43).unwrap();
        assert_eq!(c.edge_count(), 10);
    }

    #[test]
    fn generation_rejects_out_of_range_m() {
        assert!(matches!(
            generate_random_graph(4, 7, 0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn edge_index_roundtrip() {
        for n in 2..=12 {
            for i in 0..max_edges(n) {
                let (u, v) = edge_from_index(n, i);
                assert!(u < v && (v as usize) < n);
                // Recompute the row-major index.
                let u = u as usize;
                let v = v as usize;
                let idx = u * n - u * (u + 1) / 2 + (v - u - 1);
                assert_eq!(idx, i);
            }
        }
    }

    #[test]
    fn sampling_is_uniform_over_edge_sets() {
        // n = 5, m = 3: C(10,3) = 120 possible edge sets; each should appear
        // with frequency within 5σ of 1/120 over 10^5 seeded draws.
        let draws = 100_000usize;
        let mut counts = std::collections::HashMap::<Vec<(u32, u32)>, usize>::new();
        for seed in 0..draws as u64 {
            let g = generate_random_graph(5, 3, seed).unwrap();
            *counts.entry(g.edges().to_vec()).or_insert(0) += 1;
        }
        assert_eq!(counts.len(), 120);
        let p = 1.0 / 120.0;
        let sigma = (draws as f64 * p * (1.0 - p)).sqrt();
        let expect = draws as f64 * p;
        for (_, &c) in counts.iter() {
            assert!(
                (c as f64 - expect).abs() < 5.0 * sigma,
                "count {c} vs expected {expect} (σ = {sigma})"
            );
        }
    }

    #[test]
    fn independence_basics() {
        assert!(p3().is_independent(VertexSet::from_vertices(&[0, 2])));
        assert!(!Graph::complete(2).is_independent(VertexSet::from_vertices(&[0, 1])));
        assert!(Graph::complete(5).is_independent(VertexSet::EMPTY));
    }

    #[test]
    fn independence_matches_double_loop() {
        let mut rng = Pcg64Mcg::seed_from_u64(7);
        for _ in 0..1000 {
            let n = rng.random_range(1..=12usize);
            let m = rng.random_range(0..=max_edges(n));
            let g = generate_random_graph(n, m, rng.random()).unwrap();
            let s = VertexSet(rng.random_range(0..(1u64 << n)));
            let direct = g
                .edges()
                .iter()
                .all(|&(u, v)| !(s.contains(u as usize) && s.contains(v as usize)));
            assert_eq!(g.is_independent(s), direct);
        }
    }

    #[test]
    fn parse_basic_and_errors() {
        let g = Graph::parse("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g, p3());

        // Comments, blank lines, unordered endpoints.
        let g = Graph::parse("# a path\n\n3 2\n1 0\n\n2 1\n").unwrap();
        assert_eq!(g, p3());

        match Graph::parse("2 1\n0 0") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected self-loop parse error, got {other:?}"),
        }
        match Graph::parse("3 2\n0 1\n0 3") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected range parse error, got {other:?}"),
        }
        match Graph::parse("3 2\n0 1\n0 1") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected duplicate parse error, got {other:?}"),
        }
        assert!(matches!(
            Graph::parse("3 2\n0 1"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(Graph::parse("0 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse("oops\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn serialize_canonicalizes() {
        let text = "3 2\n1 2\n1 0\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.to_text(), "3 2\n0 1\n1 2\n");
    }

    proptest! {
        #[test]
        fn parse_serialize_roundtrip(n in 1usize..=16, m_frac in 0.0f64..1.0, seed in any::<u64>()) {
            let m = (m_frac * max_edges(n) as f64).floor() as usize;
            let g = generate_random_graph(n, m, seed).unwrap();
            let back = Graph::parse(&g.to_text()).unwrap();
            prop_assert_eq!(&g, &back);
        }
    }
}
