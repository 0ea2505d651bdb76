//! Classical comparison algorithms.
//!
//! Finding any independent set that beats the trivial ones classically is
//! easy: encode each edge as the clause (¬x_u ∨ ¬x_v), force a candidate
//! pair of variables true, and hand the result to a linear-time 2-SAT
//! solver. For all-negated clause sets the same answer falls out of a
//! plain non-edge scan, which serves as the fast path and as an
//! independent cross-check. A uniformly random pair fails with
//! probability 2m/(n(n−1)), the baseline any quantum claim has to beat.

use crate::error::{Error, Result};
use crate::graph::{edge_from_index, max_edges, Graph, VertexSet};
use rand::{RngExt, SeedableRng};
use rand_pcg::Pcg64Mcg;

/// One signed variable occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Literal {
        Literal {
            var,
            negated: false,
        }
    }

    pub fn neg(var: usize) -> Literal {
        Literal { var, negated: true }
    }

    fn satisfied_by(self, assignment: &[bool]) -> bool {
        assignment[self.var] != self.negated
    }
}

/// A 2-SAT instance: clauses of exactly two literals over n variables.
#[derive(Debug, Clone)]
pub struct ClauseSet {
    n: usize,
    clauses: Vec<(Literal, Literal)>,
}

impl ClauseSet {
    pub fn new(n: usize, clauses: Vec<(Literal, Literal)>) -> Result<ClauseSet> {
        for &(a, b) in &clauses {
            if a.var >= n || b.var >= n {
                return Err(Error::InvalidArgument(format!(
                    "clause literal out of range for {n} variables"
                )));
            }
        }
        Ok(ClauseSet { n, clauses })
    }

    pub fn variable_count(&self) -> usize {
        self.n
    }

    pub fn clauses(&self) -> &[(Literal, Literal)] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|&(a, b)| a.satisfied_by(assignment) || b.satisfied_by(assignment))
    }

    /// DIMACS CNF text: `p cnf n m` then one 1-based signed clause per line.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.n, self.clauses.len());
        for &(a, b) in &self.clauses {
            let render = |l: Literal| {
                if l.negated {
                    format!("-{}", l.var + 1)
                } else {
                    format!("{}", l.var + 1)
                }
            };
            out.push_str(&format!("{} {} 0\n", render(a), render(b)));
        }
        out
    }
}

/// One clause (¬x_u ∨ ¬x_v) per edge: satisfying assignments are exactly
/// the independent sets.
pub fn graph_to_clauses(g: &Graph) -> ClauseSet {
    let clauses = g
        .edges()
        .iter()
        .map(|&(u, v)| (Literal::neg(u as usize), Literal::neg(v as usize)))
        .collect();
    ClauseSet {
        n: g.vertex_count(),
        clauses,
    }
}

const UNSET: u32 = u32::MAX;

/// Component id per node in reverse topological order of the condensation
/// (sinks get the smallest ids), via iterative Tarjan.
fn tarjan_components(adj: &[Vec<u32>]) -> Vec<u32> {
    let n = adj.len();
    let mut comp = vec![UNSET; n];
    let mut disc = vec![UNSET; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut scc_stack: Vec<u32> = Vec::new();
    let mut call: Vec<(u32, u32)> = Vec::new();
    let mut timer = 0u32;
    let mut next_comp = 0u32;

    for start in 0..n as u32 {
        if disc[start as usize] != UNSET {
            continue;
        }
        call.push((start, 0));
        while let Some(frame) = call.last_mut() {
            let v = frame.0 as usize;
            if disc[v] == UNSET {
                disc[v] = timer;
                low[v] = timer;
                timer += 1;
                scc_stack.push(frame.0);
                on_stack[v] = true;
            }
            if (frame.1 as usize) < adj[v].len() {
                let w = adj[v][frame.1 as usize];
                frame.1 += 1;
                if disc[w as usize] == UNSET {
                    call.push((w, 0));
                } else if on_stack[w as usize] {
                    low[v] = low[v].min(disc[w as usize]);
                }
            } else {
                if low[v] == disc[v] {
                    loop {
                        let w = scc_stack.pop().unwrap();
                        on_stack[w as usize] = false;
                        comp[w as usize] = next_comp;
                        if w as usize == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
                call.pop();
                if let Some(parent) = call.last() {
                    let p = parent.0 as usize;
                    low[p] = low[p].min(low[v]);
                }
            }
        }
    }
    comp
}

/// Satisfying assignment extending the forced variables, or None when
/// unsatisfiable.
///
/// Implication graph on 2n nodes (node 2v+b asserts x_v = b): each clause
/// (a ∨ b) adds ¬a→b and ¬b→a, each forced literal ℓ adds ¬ℓ→ℓ.
/// Unsatisfiable exactly when some variable shares a strongly connected
/// component with its negation; otherwise each variable takes the value
/// whose component is closer to the sinks.
pub fn solve_2sat(c: &ClauseSet, forced: &[(usize, bool)]) -> Option<Vec<bool>> {
    let assert_node = |l: Literal| 2 * l.var as u32 + !l.negated as u32;
    let deny_node = |l: Literal| 2 * l.var as u32 + l.negated as u32;
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); 2 * c.n];
    for &(a, b) in &c.clauses {
        adj[deny_node(a) as usize].push(assert_node(b));
        adj[deny_node(b) as usize].push(assert_node(a));
    }
    for &(var, value) in forced {
        assert!(var < c.n, "forced variable out of range");
        let l = Literal {
            var,
            negated: !value,
        };
        adj[deny_node(l) as usize].push(assert_node(l));
    }
    let comp = tarjan_components(&adj);
    let mut assignment = vec![false; c.n];
    for v in 0..c.n {
        if comp[2 * v] == comp[2 * v + 1] {
            return None;
        }
        assignment[v] = comp[2 * v + 1] < comp[2 * v];
    }
    Some(assignment)
}

/// Vertices in candidate order for the non-trivial search: lowest degree
/// first, ties by index.
fn by_ascending_degree(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    order
}

/// An independent set of size ≥ 2, or None exactly when the graph is
/// complete. Fast path: scan for a non-edge from the lowest-degree
/// vertex.
pub fn find_nontrivial_classical(g: &Graph) -> Option<VertexSet> {
    let n = g.vertex_count();
    for u in by_ascending_degree(g) {
        for v in 0..n {
            if v != u && !g.has_edge(u, v) {
                return Some(VertexSet::from_vertices(&[u, v]));
            }
        }
    }
    None
}

/// The same search through the 2-SAT solver: force candidate pairs true
/// and return all true variables of the first satisfying assignment.
pub fn find_nontrivial_via_2sat(g: &Graph) -> Option<VertexSet> {
    let n = g.vertex_count();
    let clauses = graph_to_clauses(g);
    for u in by_ascending_degree(g) {
        for v in 0..n {
            if v == u {
                continue;
            }
            if let Some(assignment) = solve_2sat(&clauses, &[(u, true), (v, true)]) {
                let chosen: Vec<usize> = assignment
                    .iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(|(i, _)| i)
                    .collect();
                return Some(VertexSet::from_vertices(&chosen));
            }
        }
    }
    None
}

/// Fraction of uniformly random vertex pairs that are not independent;
/// expectation 2m/(n(n−1)).
pub fn random_pair_baseline(g: &Graph, trials: u64, seed: u64) -> Result<f64> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::InvalidArgument(
            "pair baseline needs at least 2 vertices".into(),
        ));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("pair baseline needs trials ≥ 1".into()));
    }
    let mut rng = Pcg64Mcg::seed_from_u64(seed);
    let mut failures = 0u64;
    for _ in 0..trials {
        let (u, v) = edge_from_index(n, rng.random_range(0..max_edges(n)));
        if g.has_edge(u as usize, v as usize) {
            failures += 1;
        }
    }
    Ok(failures as f64 / trials as f64)
}

/// Fraction of uniformly random vertex triples that are not independent.
/// Reported for comparison only; no closed form is asserted.
pub fn random_triple_baseline(g: &Graph, trials: u64, seed: u64) -> Result<f64> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::InvalidArgument(
            "triple baseline needs at least 3 vertices".into(),
        ));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument(
            "triple baseline needs trials ≥ 1".into(),
        ));
    }
    let mut rng = Pcg64Mcg::seed_from_u64(seed);
    let mut failures = 0u64;
    for _ in 0..trials {
        // Floyd sampling of 3 distinct vertices.
        let mut set = VertexSet::EMPTY;
        for j in n - 3..n {
            let t = rng.random_range(0..=j as u32);
            if set.contains(t as usize) {
                set = set.with(j);
            } else {
                set = set.with(t as usize);
            }
        }
        if !g.is_independent(set) {
            failures += 1;
        }
    }
    Ok(failures as f64 / trials as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_random_graph;

    fn p3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    /// Oracle: scan all 2^n assignments consistent with the forcing.
    fn brute_force_2sat(c: &ClauseSet, forced: &[(usize, bool)]) -> Option<Vec<bool>> {
        'outer: for bits in 0..1u64 << c.variable_count() {
            let assignment: Vec<bool> =
                (0..c.variable_count()).map(|v| bits >> v & 1 == 1).collect();
            for &(var, value) in forced {
                if assignment[var] != value {
                    continue 'outer;
                }
            }
            if c.is_satisfied_by(&assignment) {
                return Some(assignment);
            }
        }
        None
    }

    #[test]
    fn clause_construction() {
        let c = graph_to_clauses(&Graph::new(2, &[(0, 1)]).unwrap());
        assert_eq!(c.clauses(), &[(Literal::neg(0), Literal::neg(1))]);
        assert_eq!(graph_to_clauses(&p3()).clauses().len(), 2);
        assert!(graph_to_clauses(&Graph::edgeless(4)).clauses().is_empty());
    }

    #[test]
    fn single_edge_satisfiable() {
        let c = graph_to_clauses(&Graph::new(2, &[(0, 1)]).unwrap());
        let assignment = solve_2sat(&c, &[]).unwrap();
        assert!(c.is_satisfied_by(&assignment));
    }

    #[test]
    fn contradictory_units_unsat() {
        let c = ClauseSet::new(
            1,
            vec![
                (Literal::pos(0), Literal::pos(0)),
                (Literal::neg(0), Literal::neg(0)),
            ],
        )
        .unwrap();
        assert!(solve_2sat(&c, &[]).is_none());
    }

    #[test]
    fn path_forced_endpoints() {
        let c = graph_to_clauses(&p3());
        let assignment = solve_2sat(&c, &[(0, true), (2, true)]).unwrap();
        assert_eq!(assignment, vec![true, false, true]);
        // Forcing an edge pair is contradictory.
        assert!(solve_2sat(&c, &[(0, true), (1, true)]).is_none());
    }

    #[test]
    fn agrees_with_brute_force() {
        let mut rng = Pcg64Mcg::seed_from_u64(83);
        for _ in 0..150 {
            let nv = rng.random_range(1..=9usize);
            let n_clauses = rng.random_range(0..=3 * nv);
            let clauses: Vec<(Literal, Literal)> = (0..n_clauses)
                .map(|_| {
                    let lit = |rng: &mut Pcg64Mcg| Literal {
                        var: rng.random_range(0..nv),
                        negated: rng.random(),
                    };
                    (lit(&mut rng), lit(&mut rng))
                })
                .collect();
            let c = ClauseSet::new(nv, clauses).unwrap();
            let n_forced = rng.random_range(0..=2usize.min(nv));
            let mut forced = Vec::new();
            while forced.len() < n_forced {
                let var = rng.random_range(0..nv);
                if !forced.iter().any(|&(v, _)| v == var) {
                    forced.push((var, rng.random::<bool>()));
                }
            }
            let got = solve_2sat(&c, &forced);
            let want = brute_force_2sat(&c, &forced);
            assert_eq!(got.is_some(), want.is_some());
            if let Some(assignment) = got {
                assert!(c.is_satisfied_by(&assignment));
                for &(var, value) in &forced {
                    assert_eq!(assignment[var], value);
                }
            }
        }
    }

    #[test]
    fn nontrivial_examples() {
        assert_eq!(
            find_nontrivial_classical(&p3()),
            Some(VertexSet::from_vertices(&[0, 2]))
        );
        assert_eq!(find_nontrivial_classical(&Graph::complete(3)), None);
        assert_eq!(find_nontrivial_via_2sat(&Graph::complete(3)), None);
        let found = find_nontrivial_classical(&Graph::edgeless(5)).unwrap();
        assert_eq!(found.cardinality(), 2);
    }

    #[test]
    fn nontrivial_routes_agree() {
        let mut rng = Pcg64Mcg::seed_from_u64(89);
        for _ in 0..60 {
            let n = rng.random_range(2..=10usize);
            let m = rng.random_range(0..=max_edges(n));
            let g = generate_random_graph(n, m, rng.random()).unwrap();
            let scan = find_nontrivial_classical(&g);
            let sat = find_nontrivial_via_2sat(&g);
            assert_eq!(scan.is_some(), sat.is_some());
            assert_eq!(scan.is_none(), m == max_edges(n));
            for found in [scan, sat].into_iter().flatten() {
                assert!(found.cardinality() >= 2);
                assert!(g.is_independent(found));
            }
        }
    }

    #[test]
    fn pair_baseline_statistics() {
        // 2m/(n(n−1)) = 2/3 for the path on three vertices; 3σ binomial
        // band at 10⁴ trials.
        let rate = random_pair_baseline(&p3(), 10_000, 7).unwrap();
        let sigma = (2.0 / 3.0 * (1.0 / 3.0) / 10_000.0f64).sqrt();
        assert!((rate - 2.0 / 3.0).abs() < 3.0 * sigma);
        assert_eq!(
            random_pair_baseline(&Graph::edgeless(6), 500, 1).unwrap(),
            0.0
        );
        assert_eq!(
            random_pair_baseline(&Graph::complete(6), 500, 1).unwrap(),
            1.0
        );
    }

    #[test]
    fn triple_baseline_limits() {
        assert_eq!(
            random_triple_baseline(&Graph::edgeless(6), 300, 3).unwrap(),
            0.0
        );
        assert_eq!(
            random_triple_baseline(&Graph::complete(5), 300, 3).unwrap(),
            1.0
        );
        assert!(random_triple_baseline(&Graph::edgeless(2), 10, 0).is_err());
    }

    #[test]
    fn dimacs_format() {
        let c = graph_to_clauses(&Graph::new(2, &[(0, 1)]).unwrap());
        assert_eq!(c.to_dimacs(), "p cnf 2 1\n-1 -2 0\n");
        let mixed = ClauseSet::new(3, vec![(Literal::pos(2), Literal::neg(0))]).unwrap();
        assert_eq!(mixed.to_dimacs(), "p cnf 3 1\n3 -1 0\n");
    }

    #[test]
    fn clause_set_validates_range() {
        assert!(ClauseSet::new(2, vec![(Literal::pos(0), Literal::pos(2))]).is_err());
    }
}
