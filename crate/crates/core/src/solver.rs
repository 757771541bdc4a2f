//! Exact computation of minimum propagating sets and the exhaustive
//! desk-scale audits built on top of it.
//!
//! The solver sweeps cardinalities upward from the trivial lower bound and,
//! within each cardinality, enumerates candidate subsets in lexicographic
//! order; the first propagating subset wins, so the reported witness is the
//! lexicographically smallest optimal set and every run is reproducible.
//! Candidate evaluation runs on u64 adjacency bitmasks; every witness is
//! re-verified through the general propagation module before it is returned.

use crate::families;
use crate::graph::{Digraph, Graph, VertexSet};
use crate::propagation;
use crate::{Error, Result};

/// Vertex cap for the exact sweeps.
pub const SOLVE_VERTEX_CAP: usize = 32;
/// Vertex range for the two-seed edge-maximum audit.
pub const EDGE_MAX_AUDIT_CAP: usize = 7;
/// Vertex cap for the spanning-subgraph audit.
pub const SPANNING_AUDIT_CAP: usize = 5;
/// Vertex cap for the tree cover-time audit.
pub const COVER_TIME_AUDIT_CAP: usize = 7;
/// Above this many absent edges, saturation falls back to a greedy pass.
pub const SATURATE_EXACT_CAP: usize = 15;

/// Outcome of an exact sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    /// Minimum cardinality of a propagating subset.
    pub size: usize,
    /// The lexicographically smallest optimal set.
    pub witness: VertexSet,
    /// Number of candidate subsets whose closure was evaluated.
    pub sets_tested: u64,
    /// Cardinality the sweep started from.
    pub lower_bound_used: usize,
}

// ---------------------------------------------------------------------------
// bitmask machinery
// ---------------------------------------------------------------------------

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// Closure on neighbor bitmasks. Applies forces in passes; order does not
/// affect the result (a vertex with a unique uncolored neighbor keeps one
/// until it is colored).
fn closure_mask(adj: &[u64], seed: u64) -> u64 {
    let mut colored = seed;
    loop {
        let before = colored;
        let mut rest = before;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let uncolored = adj[v] & !colored;
            if uncolored != 0 && uncolored & (uncolored - 1) == 0 {
                colored |= uncolored;
            }
        }
        if colored == before {
            return colored;
        }
    }
}

/// Visits the size-`s` subsets of `0..m` in lexicographic order until the
/// visitor returns true; reports whether it did.
fn for_each_combination(m: usize, s: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    if s > m {
        return false;
    }
    let mut idx: Vec<usize> = (0..s).collect();
    loop {
        if visit(&idx) {
            return true;
        }
        // advance: rightmost index that can still move right
        let mut i = s;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != i + m - s {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..s {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Sweeps cardinalities `lower_bound..=candidates.len()`, lexicographically
/// within each, over subsets of `candidates` (ascending ids). Returns the
/// first propagating subset found plus the number of closures evaluated.
fn sweep(
    adj: &[u64],
    n: usize,
    candidates: &[usize],
    lower_bound: usize,
) -> (Option<(usize, u64)>, u64) {
    let full = full_mask(n);
    let mut tested = 0u64;
    for s in lower_bound..=candidates.len() {
        let mut hit = 0u64;
        let found = for_each_combination(candidates.len(), s, |idx| {
            let mask = idx.iter().fold(0u64, |acc, &i| acc | 1 << candidates[i]);
            tested += 1;
            if closure_mask(adj, mask) == full {
                hit = mask;
                true
            } else {
                false
            }
        });
        if found {
            return (Some((s, hit)), tested);
        }
    }
    (None, tested)
}

fn check_solver_capacity(g: &Graph) -> Result<()> {
    if g.n() > SOLVE_VERTEX_CAP {
        return Err(Error::Capacity {
            what: "exact solve",
            actual: g.n(),
            limit: SOLVE_VERTEX_CAP,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// minimum propagating sets
// ---------------------------------------------------------------------------

/// Minimum size of a propagating set, by exhaustive sweep from the trivial
/// lower bound max(1, δ(G)). Rejects disconnected graphs and graphs above
/// the capacity cap.
pub fn min_propagating_set(g: &Graph) -> Result<SolveResult> {
    check_solver_capacity(g)?;
    let candidates: Vec<usize> = (0..g.n()).collect();
    let lower_bound = g.min_degree().max(1);
    let (hit, tested) = sweep(&g.adjacency_masks(), g.n(), &candidates, lower_bound);
    let (size, mask) = hit.expect("the full vertex set always propagates");
    let witness = VertexSet::from_mask(g.n(), mask);
    assert!(
        propagation::propagates(g, &witness),
        "witness re-check failed"
    );
    Ok(SolveResult {
        size,
        witness,
        sets_tested: tested,
        lower_bound_used: lower_bound,
    })
}

/// Same sweep restricted to subsets of `candidates`; `None` when even the
/// full candidate set does not propagate.
pub fn min_propagating_set_restricted(
    g: &Graph,
    candidates: &VertexSet,
) -> Result<Option<SolveResult>> {
    check_solver_capacity(g)?;
    assert_eq!(candidates.capacity(), g.n(), "vertex set range mismatch");
    let adj = g.adjacency_masks();
    let ids = candidates.ids();
    let all = ids.iter().fold(0u64, |acc, &v| acc | 1 << v);
    if closure_mask(&adj, all) != full_mask(g.n()) {
        return Ok(None); // no subset can do better than the whole candidate set
    }
    let lower_bound = g.min_degree().max(1);
    let (hit, tested) = sweep(&adj, g.n(), &ids, lower_bound);
    let (size, mask) = hit.expect("the candidate set itself propagates");
    let witness = VertexSet::from_mask(g.n(), mask);
    assert!(
        propagation::propagates(g, &witness),
        "witness re-check failed"
    );
    Ok(Some(SolveResult {
        size,
        witness,
        sets_tested: tested + 1,
        lower_bound_used: lower_bound,
    }))
}

fn check_tree(tree: &Graph, root: usize) -> Result<()> {
    if tree.n() > SOLVE_VERTEX_CAP {
        return Err(Error::Capacity {
            what: "exact solve",
            actual: tree.n(),
            limit: SOLVE_VERTEX_CAP,
        });
    }
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    if root >= tree.n() {
        return Err(Error::VertexOutOfRange {
            id: root,
            n: tree.n(),
        });
    }
    Ok(())
}

/// Orients every tree edge parent→child from `root` (information flows from
/// the root toward the leaves) and sweeps for the smallest seed whose
/// directed closure covers the tree.
pub fn pi_topdown(tree: &Graph, root: usize) -> Result<SolveResult> {
    check_tree(tree, root)?;
    solve_directed(&orient_tree(tree, root, false))
}

/// Child→parent counterpart: information flows from the leaves to the root.
pub fn pi_bottomup(tree: &Graph, root: usize) -> Result<SolveResult> {
    check_tree(tree, root)?;
    solve_directed(&orient_tree(tree, root, true))
}

fn orient_tree(tree: &Graph, root: usize, toward_root: bool) -> Digraph {
    let mut arcs = Vec::with_capacity(tree.n().saturating_sub(1));
    let mut seen = vec![false; tree.n()];
    let mut queue = std::collections::VecDeque::from([root]);
    seen[root] = true;
    while let Some(v) = queue.pop_front() {
        for &w in tree.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                arcs.push(if toward_root { (w, v) } else { (v, w) });
                queue.push_back(w);
            }
        }
    }
    Digraph::new(tree.n(), &arcs).expect("tree edges are valid arcs")
}

/// Exact sweep on a digraph under the out-arc forcing rule. Every source
/// (in-degree 0) must sit in any propagating seed, which gives the starting
/// cardinality.
fn solve_directed(d: &Digraph) -> Result<SolveResult> {
    let candidates: Vec<usize> = (0..d.n()).collect();
    let lower_bound = d.sources().len().max(1);
    let (hit, tested) = sweep(&d.out_masks(), d.n(), &candidates, lower_bound);
    let (size, mask) = hit.expect("the full vertex set always propagates");
    let witness = VertexSet::from_mask(d.n(), mask);
    assert!(
        propagation::propagates_directed(d, &witness),
        "witness re-check failed"
    );
    Ok(SolveResult {
        size,
        witness,
        sets_tested: tested,
        lower_bound_used: lower_bound,
    })
}

// ---------------------------------------------------------------------------
// redundant edges and saturation
// ---------------------------------------------------------------------------

/// Whether adding the absent edge `e` keeps `seed` propagating, decided by
/// recomputing the closure in the augmented graph.
pub fn is_redundant_edge(g: &Graph, seed: &VertexSet, e: (usize, usize)) -> Result<bool> {
    let (u, v) = e;
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    for id in [u, v] {
        if id >= g.n() {
            return Err(Error::VertexOutOfRange { id, n: g.n() });
        }
    }
    if g.has_edge(u, v) {
        return Err(Error::EdgePresent(u, v));
    }
    if !propagation::propagates(g, seed) {
        return Err(Error::DoesNotPropagate);
    }
    let mut edges = g.edges();
    edges.push(e);
    let augmented = Graph::new(g.n(), &edges).expect("validated above");
    Ok(propagation::propagates(&augmented, seed))
}

/// A maximum set of absent edges that can be added while `seed` keeps
/// propagating.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Saturation {
    /// The added edges, ascending.
    pub added: Vec<(usize, usize)>,
    /// True when found by exhaustive subset search; false when the absent
    /// edge count exceeded [`SATURATE_EXACT_CAP`] and a greedy pass was used.
    pub exact: bool,
}

/// Adds as many absent edges as possible without breaking propagation of
/// `seed`: exhaustively when at most [`SATURATE_EXACT_CAP`] edges are absent,
/// greedily (ascending, keep if propagation survives) beyond that.
pub fn saturate(g: &Graph, seed: &VertexSet) -> Result<Saturation> {
    if !propagation::propagates(g, seed) {
        return Err(Error::DoesNotPropagate);
    }
    let mut absent = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                absent.push((u, v));
            }
        }
    }
    let base = g.edges();
    let with = |extra: &[(usize, usize)]| -> Graph {
        let mut edges = base.clone();
        edges.extend_from_slice(extra);
        Graph::new(g.n(), &edges).expect("absent edges are valid")
    };
    if absent.len() <= SATURATE_EXACT_CAP {
        let mut best: Vec<(usize, usize)> = Vec::new();
        for mask in 1u32..1 << absent.len() {
            if (mask.count_ones() as usize) <= best.len() {
                continue;
            }
            let extra: Vec<_> = (0..absent.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| absent[i])
                .collect();
            if propagation::propagates(&with(&extra), seed) {
                best = extra;
            }
        }
        Ok(Saturation {
            added: best,
            exact: true,
        })
    } else {
        let mut kept: Vec<(usize, usize)> = Vec::new();
        for &e in &absent {
            kept.push(e);
            if !propagation::propagates(&with(&kept), seed) {
                kept.pop();
            }
        }
        Ok(Saturation {
            added: kept,
            exact: false,
        })
    }
}

// ---------------------------------------------------------------------------
// audits
// ---------------------------------------------------------------------------

/// Result of the exhaustive search for the densest graph a 2-element seed can
/// cover.
#[derive(Clone, Debug)]
pub struct EdgeMaxAudit {
    pub n: usize,
    /// Largest edge count among graphs on `n` vertices admitting a
    /// propagating 2-set.
    pub max_edges: usize,
    /// The conjectured maximum 2n − 3.
    pub conjectured: usize,
    /// First witness attaining the maximum, with its seed pair.
    pub witness: Graph,
    pub witness_seed: (usize, usize),
}

impl EdgeMaxAudit {
    pub fn matches_conjecture(&self) -> bool {
        self.max_edges == self.conjectured
    }
}

/// Sweeps all labeled graphs on `n` vertices and all 2-element seeds,
/// reporting the maximum edge count among graphs some 2-seed covers.
pub fn audit_two_set_edge_max(n: usize) -> Result<EdgeMaxAudit> {
    if !(2..=EDGE_MAX_AUDIT_CAP).contains(&n) {
        return Err(Error::Capacity {
            what: "two-seed edge-maximum audit",
            actual: n,
            limit: EDGE_MAX_AUDIT_CAP,
        });
    }
    let pairs = vertex_pairs(n);
    let full = full_mask(n);
    let mut best: Option<(usize, u64, (usize, usize))> = None;
    for gmask in 0u64..1 << pairs.len() {
        let edge_count = gmask.count_ones() as usize;
        if best.as_ref().is_some_and(|(b, _, _)| edge_count <= *b) {
            continue;
        }
        let adj = masks_from_pairs(n, &pairs, gmask);
        for &(a, b) in &pairs {
            if closure_mask(&adj, 1 << a | 1 << b) == full {
                best = Some((edge_count, gmask, (a, b)));
                break;
            }
        }
    }
    let (max_edges, gmask, witness_seed) = best.expect("the empty graph qualifies for n = 2");
    Ok(EdgeMaxAudit {
        n,
        max_edges,
        conjectured: 2 * n - 3,
        witness: graph_from_pairs(n, &pairs, gmask),
        witness_seed,
    })
}

/// A propagating pair broken by passing to a spanning subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningCounterexample {
    pub graph: Graph,
    pub seed: VertexSet,
    pub subgraph: Graph,
}

/// Tests the claim that a set propagating in a graph propagates in all of
/// its spanning subgraphs: enumerates every labeled graph on `n` vertices,
/// every seed, and every spanning subgraph (edge subset), and returns every
/// violating triple. With `connected_only`, disconnected subgraphs are
/// skipped.
pub fn audit_spanning_subgraph_claim(
    n: usize,
    connected_only: bool,
) -> Result<Vec<SpanningCounterexample>> {
    if n > SPANNING_AUDIT_CAP {
        return Err(Error::Capacity {
            what: "spanning-subgraph audit",
            actual: n,
            limit: SPANNING_AUDIT_CAP,
        });
    }
    let pairs = vertex_pairs(n);
    let full = full_mask(n);
    let mut found = Vec::new();
    for gmask in 0u64..1 << pairs.len() {
        let adj = masks_from_pairs(n, &pairs, gmask);
        for smask in 0u64..1 << n {
            if closure_mask(&adj, smask) != full {
                continue;
            }
            // proper spanning subgraphs: submasks of the edge set, descending
            let mut hmask = gmask;
            loop {
                hmask = hmask.wrapping_sub(1) & gmask;
                let hadj = masks_from_pairs(n, &pairs, hmask);
                let keep = !connected_only || mask_graph_connected(n, &hadj);
                if keep && closure_mask(&hadj, smask) != full {
                    found.push(SpanningCounterexample {
                        graph: graph_from_pairs(n, &pairs, gmask),
                        seed: VertexSet::from_mask(n, smask),
                        subgraph: graph_from_pairs(n, &pairs, hmask),
                    });
                }
                if hmask == 0 {
                    break;
                }
            }
        }
    }
    Ok(found)
}

/// One tree where the synchronized cover time of the minimum leaf seed
/// differs from the diameter.
#[derive(Clone, Debug)]
pub struct CoverTimeCase {
    pub tree: Graph,
    pub seed: VertexSet,
    pub rounds: usize,
    pub diameter: usize,
}

/// Comparison of synchronized cover time against tree diameter over every
/// labeled tree on `n` vertices.
#[derive(Clone, Debug)]
pub struct CoverTimeAudit {
    pub n: usize,
    pub trees: u64,
    pub agree: u64,
    pub disagreements: Vec<CoverTimeCase>,
}

/// For every labeled tree on `n` vertices (by Prüfer enumeration), computes
/// the minimum leaf-restricted propagating set, runs synchronized rounds from
/// it, and compares the round count against the diameter.
pub fn audit_tree_cover_time(n: usize) -> Result<CoverTimeAudit> {
    if !(2..=COVER_TIME_AUDIT_CAP).contains(&n) {
        return Err(Error::Capacity {
            what: "tree cover-time audit",
            actual: n,
            limit: COVER_TIME_AUDIT_CAP,
        });
    }
    let mut audit = CoverTimeAudit {
        n,
        trees: 0,
        agree: 0,
        disagreements: Vec::new(),
    };
    let mut seq = vec![0usize; n - 2];
    loop {
        let tree = families::prufer_to_tree(&seq, n).expect("sequence in range");
        let leaves = VertexSet::from_ids(n, &tree.leaves()).expect("leaves in range");
        let sol = min_propagating_set_restricted(&tree, &leaves)?
            .expect("the leaf set of a tree propagates");
        let rounds =
            propagation::synchronized_rounds(&tree, &sol.witness).expect("the witness propagates");
        let diameter = tree.diameter().expect("trees are connected");
        audit.trees += 1;
        if rounds == diameter {
            audit.agree += 1;
        } else {
            audit.disagreements.push(CoverTimeCase {
                tree,
                seed: sol.witness,
                rounds,
                diameter,
            });
        }
        // next sequence in lexicographic order
        let mut i = seq.len();
        loop {
            if i == 0 {
                return Ok(audit);
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}

/// If the graph has a Hamilton path, orients it forward and the remaining
/// edges backward; the path's start then covers everything on its own under
/// the out-arc rule (checked before returning).
pub fn single_source_orientation(g: &Graph) -> Result<Option<(Digraph, usize)>> {
    let Some(path) = g.hamilton_path()? else {
        return Ok(None);
    };
    let d = g.orient_along_path(&path)?;
    let source = path[0];
    let seed = VertexSet::from_ids(g.n(), &[source]).expect("source in range");
    assert!(
        propagation::propagates_directed(&d, &seed),
        "single-source coverage must hold for a hamilton-path orientation"
    );
    Ok(Some((d, source)))
}

// ---------------------------------------------------------------------------

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

fn masks_from_pairs(n: usize, pairs: &[(usize, usize)], emask: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if emask >> i & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    adj
}

fn graph_from_pairs(n: usize, pairs: &[(usize, usize)], emask: u64) -> Graph {
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| emask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::new(n, &edges).expect("pairs are valid edges")
}

fn mask_graph_connected(n: usize, adj: &[u64]) -> bool {
    if n == 0 {
        return false;
    }
    let mut seen = 1u64;
    loop {
        let mut next = seen;
        let mut rest = seen;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= adj[v];
        }
        if next == seen {
            return seen == full_mask(n);
        }
        seen = next;
    }
}

// ---------------------------------------------------------------------------
