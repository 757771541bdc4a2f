//! Simple undirected graphs, digraphs, and dense vertex sets.
//!
//! Graphs are immutable after construction: structural operations return new
//! graphs. Vertex ids are dense 0-based integers; operations that delete a
//! vertex relabel the survivors by order-preserving compaction.

use std::collections::HashSet;
use std::collections::VecDeque;
use std::fmt;

use crate::{Error, Result};

/// Vertex cap for the Hamilton path search (bitmask state space).
pub const HAMILTON_VERTEX_CAP: usize = 20;

// ---------------------------------------------------------------------------
// VertexSet
// ---------------------------------------------------------------------------

/// Dense set of vertex ids drawn from a fixed range `0..capacity`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    capacity: usize,
    blocks: Vec<u64>,
}

impl VertexSet {
    pub fn empty(capacity: usize) -> Self {
        VertexSet {
            capacity,
            blocks: vec![0; capacity.div_ceil(64)],
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = Self::empty(capacity);
        for b in s.blocks.iter_mut() {
            *b = !0;
        }
        s.clear_tail();
        s
    }

    /// Builds a set from explicit ids, rejecting any id outside `0..capacity`.
    pub fn from_ids(capacity: usize, ids: &[usize]) -> Result<Self> {
        let mut s = Self::empty(capacity);
        for &v in ids {
            if v >= capacity {
                return Err(Error::VertexOutOfRange { id: v, n: capacity });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub(crate) fn from_mask(capacity: usize, mask: u64) -> Self {
        debug_assert!(capacity <= 64);
        let mut s = Self::empty(capacity);
        if capacity > 0 {
            s.blocks[0] = mask;
        }
        s.clear_tail();
        s
    }

    fn clear_tail(&mut self) {
        let rem = self.capacity % 64;
        if rem != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && self.blocks[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.capacity, "vertex {v} out of range");
        self.blocks[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.capacity, "vertex {v} out of range");
        self.blocks[v / 64] &= !(1 << (v % 64));
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.capacity == other.capacity
            && self
                .blocks
                .iter()
                .zip(&other.blocks)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &Self) {
        assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    /// Ascending iterator over the member ids.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &b)| {
            let mut bits = b;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let t = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(i * 64 + t)
                }
            })
        })
    }

    pub fn ids(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Display for VertexSet {
    /// Members in ascending order, space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self)
    }
}

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

/// Simple undirected graph on vertices `0..n`: no self-loops, no multi-edges,
/// symmetric adjacency.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut seen: HashSet<(usize, usize)> = HashSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for id in [u, v] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// All edges as pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// True when every vertex is reachable from vertex 0. The empty graph is
    /// treated as disconnected (it has no component at all).
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() == self.n - 1
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// The vertices outside `s` adjacent to at least one member of `s`.
    pub fn external_neighborhood(&self, s: &VertexSet) -> VertexSet {
        assert_eq!(s.capacity(), self.n, "vertex set range mismatch");
        let mut out = VertexSet::empty(self.n);
        for v in s.iter() {
            for &w in &self.adj[v] {
                if !s.contains(w) {
                    out.insert(w);
                }
            }
        }
        out
    }

    /// Replaces the edge `{u, v}` by a new degree-2 vertex with id `n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph> {
        for id in [u, v] {
            if id >= self.n {
                return Err(Error::VertexOutOfRange { id, n: self.n });
            }
        }
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let w = self.n;
        let mut edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&e| e != (u.min(v), u.max(v)))
            .collect();
        edges.push((u, w));
        edges.push((v, w));
        Ok(Graph::new(self.n + 1, &edges).expect("subdivision preserves validity"))
    }

    /// Removes a degree-2 vertex and joins its two neighbors directly; the
    /// inverse of subdivision. Refuses when the neighbors are already
    /// adjacent, since that would create a multi-edge. Remaining vertices are
    /// relabeled by order-preserving compaction.
    pub fn smooth_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { id: v, n: self.n });
        }
        if self.degree(v) != 2 {
            return Err(Error::SmoothDegree {
                vertex: v,
                degree: self.degree(v),
            });
        }
        let (a, b) = (self.adj[v][0], self.adj[v][1]);
        if self.has_edge(a, b) {
            return Err(Error::SmoothWouldMultiEdge(v));
        }
        let relabel = |x: usize| if x < v { x } else { x - 1 };
        let mut edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(x, y)| x != v && y != v)
            .map(|(x, y)| (relabel(x), relabel(y)))
            .collect();
        edges.push((relabel(a), relabel(b)));
        Ok(Graph::new(self.n - 1, &edges).expect("smoothing preserves validity"))
    }

    /// Repeatedly smooths the smallest-id eligible degree-2 vertex until none
    /// remains. Vertices whose two neighbors are adjacent are skipped.
    pub fn topological_reduce(&self) -> Graph {
        let mut g = self.clone();
        'outer: loop {
            for v in 0..g.n {
                if g.degree(v) == 2 && !g.has_edge(g.adj[v][0], g.adj[v][1]) {
                    g = g.smooth_vertex(v).expect("eligibility checked");
                    continue 'outer;
                }
            }
            return g;
        }
    }

    /// Maximum over all pairs of the shortest-path length, by breadth-first
    /// search from every vertex.
    pub fn diameter(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut best = 0;
        let mut dist = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.fill(usize::MAX);
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            best = best.max(*dist.iter().max().expect("n >= 1"));
        }
        Ok(best)
    }

    /// Finds a Hamilton path, or `None` if the graph has none. The search
    /// tries start vertices in ascending order and extends to the smallest
    /// unvisited neighbor first, pruning (visited, last) states that already
    /// failed, so the returned path is the lexicographically smallest vertex
    /// sequence that works.
    pub fn hamilton_path(&self) -> Result<Option<Vec<usize>>> {
        if self.n > HAMILTON_VERTEX_CAP {
            return Err(Error::Capacity {
                what: "hamilton path search",
                actual: self.n,
                limit: HAMILTON_VERTEX_CAP,
            });
        }
        if self.n == 0 {
            return Ok(None);
        }
        // dead[visited * n + last] marks states with no completion.
        let states = (1usize << self.n) * self.n;
        let mut dead = vec![0u64; states.div_ceil(64)];
        let mut path = Vec::with_capacity(self.n);
        for start in 0..self.n {
            path.push(start);
            if self.extend_path(&mut path, 1 << start, &mut dead) {
                return Ok(Some(path));
            }
            path.pop();
        }
        Ok(None)
    }

    fn extend_path(&self, path: &mut Vec<usize>, visited: u32, dead: &mut [u64]) -> bool {
        if path.len() == self.n {
            return true;
        }
        let last = *path.last().expect("path starts nonempty");
        let key = visited as usize * self.n + last;
        if dead[key / 64] >> (key % 64) & 1 == 1 {
            return false;
        }
        for &w in &self.adj[last] {
            if visited >> w & 1 == 0 {
                path.push(w);
                if self.extend_path(path, visited | 1 << w, dead) {
                    return true;
                }
                path.pop();
            }
        }
        dead[key / 64] |= 1 << (key % 64);
        false
    }

    /// Orients every edge of the given Hamilton path forward along the path
    /// and every remaining edge from the later to the earlier endpoint in
    /// path order.
    pub fn orient_along_path(&self, path: &[usize]) -> Result<Digraph> {
        if path.len() != self.n {
            return Err(Error::InvalidHamiltonPath(format!(
                "path visits {} of {} vertices",
                path.len(),
                self.n
            )));
        }
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in path.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { id: v, n: self.n });
            }
            if pos[v] != usize::MAX {
                return Err(Error::InvalidHamiltonPath(format!(
                    "vertex {v} visited twice"
                )));
            }
            pos[v] = i;
        }
        for w in path.windows(2) {
            if !self.has_edge(w[0], w[1]) {
                return Err(Error::InvalidHamiltonPath(format!(
                    "({}, {}) is not an edge",
                    w[0], w[1]
                )));
            }
        }
        let arcs: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| {
                if pos[u] + 1 == pos[v] {
                    (u, v) // path edge, forward
                } else if pos[v] + 1 == pos[u] {
                    (v, u)
                } else if pos[u] > pos[v] {
                    (u, v) // chord, later -> earlier
                } else {
                    (v, u)
                }
            })
            .collect();
        Ok(Digraph::new(self.n, &arcs).expect("orientation preserves validity"))
    }

    /// Per-vertex neighbor bitmasks; valid only for graphs with at most 64
    /// vertices (the exact solver's working representation).
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask representation needs n <= 64");
        self.adj
            .iter()
            .map(|nbrs| nbrs.iter().fold(0u64, |acc, &v| acc | 1 << v))
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

// ---------------------------------------------------------------------------
// Digraph
// ---------------------------------------------------------------------------

/// Directed graph on vertices `0..n`: no self-loops, at most one arc per
/// ordered pair. Both `(u, v)` and `(v, u)` may be present.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        let mut seen: HashSet<(usize, usize)> = HashSet::new();
        for &(u, v) in arcs {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for id in [u, v] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateArc(u, v));
            }
            out[u].push(v);
            inn[v].push(u);
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
        }
        Ok(Digraph { n, out, inn })
    }

    /// The digraph with both arcs for every edge of `g`.
    pub fn symmetric(g: &Graph) -> Digraph {
        let mut arcs = Vec::with_capacity(2 * g.edge_count());
        for (u, v) in g.edges() {
            arcs.push((u, v));
            arcs.push((v, u));
        }
        Digraph::new(g.n(), &arcs).expect("edges are valid arcs")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// All arcs in ascending `(u, v)` order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.arc_count());
        for u in 0..self.n {
            for &v in &self.out[u] {
                out.push((u, v));
            }
        }
        out
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    /// Vertices with no incoming arc; they can never be forced, so every
    /// propagating seed contains them.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.inn[v].is_empty()).collect()
    }

    pub(crate) fn out_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask representation needs n <= 64");
        self.out
            .iter()
            .map(|nbrs| nbrs.iter().fold(0u64, |acc, &v| acc | 1 << v))
            .collect()
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs())
    }
}

// ---------------------------------------------------------------------------
