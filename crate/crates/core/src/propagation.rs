//! The propagation process: force eligibility, closures, witness traces, and
//! synchronized rounds, on graphs and on digraphs.
//!
//! A colored vertex `v` forces its neighbor `w` when `w` is the only
//! uncolored neighbor of `v`. On digraphs the rule follows out-arcs: `w` must
//! be the only uncolored out-neighbor of `v`. The closure reached from a seed
//! is independent of the order in which forces are applied (once `v` has a
//! unique uncolored neighbor it keeps one until that neighbor is colored), so
//! a single canonical policy — always the smallest eligible `(v, w)` pair —
//! is used whenever a concrete sequence is needed.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{Digraph, Graph, VertexSet};
use crate::{Error, Result};

/// One forcing step: at `time`, `forcer` colored `forced`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ForceEvent {
    pub time: usize,
    pub forcer: usize,
    pub forced: usize,
}

/// A replayable witness of a propagation run. Events with equal times fired
/// in the same synchronized round; sequential traces use times 1, 2, 3, …
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub initial: VertexSet,
    pub events: Vec<ForceEvent>,
    pub covered: bool,
}

impl Trace {
    /// The colored set after all events.
    pub fn final_set(&self) -> VertexSet {
        let mut s = self.initial.clone();
        for e in &self.events {
            s.insert(e.forced);
        }
        s
    }
}

// ---------------------------------------------------------------------------
// forcing core, shared by the undirected and directed variants
// ---------------------------------------------------------------------------

/// Where a vertex may send color, and who is affected when it gets colored.
#[derive(Clone, Copy)]
enum Host<'a> {
    Undirected(&'a Graph),
    /// Forcing follows out-arcs.
    OutArcs(&'a Digraph),
    /// Alternative reading used by the orientation audit: forcing pulls the
    /// unique uncolored in-neighbor.
    InArcs(&'a Digraph),
}

impl Host<'_> {
    fn n(&self) -> usize {
        match self {
            Host::Undirected(g) => g.n(),
            Host::OutArcs(d) | Host::InArcs(d) => d.n(),
        }
    }

    /// Candidates `v` may force.
    fn forcing_neighbors(&self, v: usize) -> &[usize] {
        match self {
            Host::Undirected(g) => g.neighbors(v),
            Host::OutArcs(d) => d.out_neighbors(v),
            Host::InArcs(d) => d.in_neighbors(v),
        }
    }

    /// Vertices whose eligibility may change when `w` becomes colored.
    fn affected_by(&self, w: usize) -> &[usize] {
        match self {
            Host::Undirected(g) => g.neighbors(w),
            Host::OutArcs(d) => d.in_neighbors(w),
            Host::InArcs(d) => d.out_neighbors(w),
        }
    }
}

fn unique_uncolored(host: Host, colored: &VertexSet, v: usize) -> Option<usize> {
    let mut found = None;
    for &w in host.forcing_neighbors(v) {
        if !colored.contains(w) {
            if found.is_some() {
                return None;
            }
            found = Some(w);
        }
    }
    found
}

fn eligible_in(host: Host, colored: &VertexSet) -> Vec<(usize, usize)> {
    assert_eq!(colored.capacity(), host.n(), "vertex set range mismatch");
    let mut out = Vec::new();
    for v in colored.iter() {
        if let Some(w) = unique_uncolored(host, colored, v) {
            out.push((v, w));
        }
    }
    out // ascending in (v, w): one pair per v, v ascending
}

/// Runs the canonical sequential policy to the closure. Eligible pairs sit in
/// a min-heap; stale entries are skipped on pop, and a vertex is (re)offered
/// whenever coloring brings its uncolored neighbor count down to one.
fn sequential_trace(host: Host, seed: &VertexSet) -> Trace {
    let n = host.n();
    assert_eq!(seed.capacity(), n, "vertex set range mismatch");
    let mut colored = seed.clone();
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = BinaryHeap::new();
    for v in seed.iter() {
        if let Some(w) = unique_uncolored(host, &colored, v) {
            heap.push(Reverse((v, w)));
        }
    }
    let mut events = Vec::new();
    while let Some(Reverse((v, w))) = heap.pop() {
        if colored.contains(w) || unique_uncolored(host, &colored, v) != Some(w) {
            continue; // stale offer
        }
        colored.insert(w);
        events.push(ForceEvent {
            time: events.len() + 1,
            forcer: v,
            forced: w,
        });
        if let Some(t) = unique_uncolored(host, &colored, w) {
            heap.push(Reverse((w, t)));
        }
        for &u in host.affected_by(w) {
            if colored.contains(u) {
                if let Some(t) = unique_uncolored(host, &colored, u) {
                    heap.push(Reverse((u, t)));
                }
            }
        }
    }
    let covered = colored.len() == n;
    Trace {
        initial: seed.clone(),
        events,
        covered,
    }
}

/// Fires every eligible force simultaneously each round. Each newly colored
/// vertex is recorded once, credited to its smallest forcer.
fn synchronized_trace_in(host: Host, seed: &VertexSet) -> Trace {
    let n = host.n();
    assert_eq!(seed.capacity(), n, "vertex set range mismatch");
    let mut colored = seed.clone();
    let mut events = Vec::new();
    let mut round = 0;
    loop {
        let forces = eligible_in(host, &colored);
        if forces.is_empty() {
            break;
        }
        round += 1;
        for (v, w) in forces {
            if !colored.contains(w) {
                colored.insert(w);
                events.push(ForceEvent {
                    time: round,
                    forcer: v,
                    forced: w,
                });
            }
        }
    }
    let covered = colored.len() == n;
    Trace {
        initial: seed.clone(),
        events,
        covered,
    }
}

/// Replays a trace, validating every event against the colored set at the
/// start of its round, and checks the covered flag.
fn verify_in(host: Host, trace: &Trace) -> Result<()> {
    let n = host.n();
    if trace.initial.capacity() != n {
        return Err(Error::TraceInvalid {
            index: 0,
            message: format!(
                "initial set ranges over {} vertices, host has {n}",
                trace.initial.capacity()
            ),
        });
    }
    let mut colored = trace.initial.clone();
    let mut i = 0;
    let mut last_time = 0;
    while i < trace.events.len() {
        let t = trace.events[i].time;
        if t <= last_time {
            return Err(Error::TraceInvalid {
                index: i,
                message: format!("time {t} does not increase past {last_time}"),
            });
        }
        last_time = t;
        let mut j = i;
        while j < trace.events.len() && trace.events[j].time == t {
            j += 1;
        }
        let mut newly = Vec::new();
        for (idx, e) in trace.events[i..j].iter().enumerate() {
            if !colored.contains(e.forcer) {
                return Err(Error::TraceInvalid {
                    index: i + idx,
                    message: format!("forcer {} is not colored", e.forcer),
                });
            }
            if colored.contains(e.forced) || newly.contains(&e.forced) {
                return Err(Error::TraceInvalid {
                    index: i + idx,
                    message: format!("vertex {} is already colored", e.forced),
                });
            }
            if unique_uncolored(host, &colored, e.forcer) != Some(e.forced) {
                return Err(Error::TraceInvalid {
                    index: i + idx,
                    message: format!(
                        "{} is not the unique uncolored neighbor of {}",
                        e.forced, e.forcer
                    ),
                });
            }
            newly.push(e.forced);
        }
        for w in newly {
            colored.insert(w);
        }
        i = j;
    }
    if trace.covered != (colored.len() == n) {
        return Err(Error::TraceInvalid {
            index: trace.events.len(),
            message: "covered flag disagrees with the replayed colored set".into(),
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// public surface
// ---------------------------------------------------------------------------

/// All pairs `(v, w)` where colored `v` may force `w`, ascending.
pub fn eligible_forces(g: &Graph, colored: &VertexSet) -> Vec<(usize, usize)> {
    eligible_in(Host::Undirected(g), colored)
}

/// The unique maximal colored set reachable from `seed` by repeated forcing.
pub fn closure(g: &Graph, seed: &VertexSet) -> VertexSet {
    sequential_trace(Host::Undirected(g), seed).final_set()
}

/// Whether the closure of `seed` is the whole vertex set. The empty seed
/// propagates only on the empty graph.
pub fn propagates(g: &Graph, seed: &VertexSet) -> bool {
    sequential_trace(Host::Undirected(g), seed).covered
}

/// The canonical sequential trace: repeatedly fire the smallest eligible
/// `(forcer, forced)` pair, stamping times 1, 2, 3, …
pub fn force_trace(g: &Graph, seed: &VertexSet) -> Trace {
    sequential_trace(Host::Undirected(g), seed)
}

/// Round count at which the synchronized process covers the whole graph, or
/// `None` when its fixpoint falls short. A seed that is already the full
/// vertex set covers in 0 rounds.
pub fn synchronized_rounds(g: &Graph, seed: &VertexSet) -> Option<usize> {
    let trace = synchronized_trace_in(Host::Undirected(g), seed);
    rounds_of(&trace)
}

/// The synchronized-rounds trace; events with equal times fired together.
pub fn synchronized_trace(g: &Graph, seed: &VertexSet) -> Trace {
    synchronized_trace_in(Host::Undirected(g), seed)
}

/// Directed closure: `v` forces `w` when `w` is the only uncolored
/// out-neighbor of `v`.
pub fn closure_directed(d: &Digraph, seed: &VertexSet) -> VertexSet {
    sequential_trace(Host::OutArcs(d), seed).final_set()
}

pub fn propagates_directed(d: &Digraph, seed: &VertexSet) -> bool {
    sequential_trace(Host::OutArcs(d), seed).covered
}

pub fn force_trace_directed(d: &Digraph, seed: &VertexSet) -> Trace {
    sequential_trace(Host::OutArcs(d), seed)
}

pub fn synchronized_trace_directed(d: &Digraph, seed: &VertexSet) -> Trace {
    synchronized_trace_in(Host::OutArcs(d), seed)
}

pub fn synchronized_rounds_directed(d: &Digraph, seed: &VertexSet) -> Option<usize> {
    rounds_of(&synchronized_trace_in(Host::OutArcs(d), seed))
}

/// The other straightforward directed reading, kept for the orientation
/// audit: `v` forces `w` when `w` is the only uncolored *in*-neighbor of `v`.
pub fn closure_directed_in(d: &Digraph, seed: &VertexSet) -> VertexSet {
    sequential_trace(Host::InArcs(d), seed).final_set()
}

/// Re-validates every event of a trace against the undirected rule.
pub fn verify_trace(g: &Graph, trace: &Trace) -> Result<()> {
    verify_in(Host::Undirected(g), trace)
}

/// Re-validates every event of a trace against the directed (out-arc) rule.
pub fn verify_trace_directed(d: &Digraph, trace: &Trace) -> Result<()> {
    verify_in(Host::OutArcs(d), trace)
}

fn rounds_of(trace: &Trace) -> Option<usize> {
    if !trace.covered {
        return None;
    }
    Some(trace.events.last().map_or(0, |e| e.time))
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(n, ids).unwrap()
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn eligible_examples() {
        let p3 = families::path(3).unwrap();
        assert_eq!(eligible_forces(&p3, &set(3, &[0])), vec![(0, 1)]);
        assert_eq!(eligible_forces(&p3, &set(3, &[1])), vec![]);
        let k3 = families::complete(3).unwrap();
        assert_eq!(eligible_forces(&k3, &set(3, &[0, 1])), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn closure_examples() {
        for n in 1..12 {
            let p = families::path(n).unwrap();
            assert_eq!(closure(&p, &set(n, &[0])), VertexSet::full(n));
        }
        let p3 = families::path(3).unwrap();
        assert_eq!(closure(&p3, &set(3, &[1])), set(3, &[1]));
    }

    #[test]
    fn seven_vertex_cover_in_three_rounds() {
        // a 7-vertex instance whose 2-seed covers everything by round 3
        let p7 = families::path(7).unwrap();
        let s = set(7, &[0, 6]);
        assert!(propagates(&p7, &s));
        assert_eq!(synchronized_rounds(&p7, &s), Some(3));
    }

    #[test]
    fn propagates_examples() {
        let c4 = families::cycle(4).unwrap();
        assert!(propagates(&c4, &set(4, &[0, 1])));
        assert!(!propagates(&c4, &set(4, &[0, 2])));
        let k5 = families::complete(5).unwrap();
        assert!(propagates(&k5, &VertexSet::full(5)));
        // the empty seed propagates only on the empty graph
        let empty = Graph::new(0, &[]).unwrap();
        assert!(propagates(&empty, &VertexSet::empty(0)));
        assert!(!propagates(&p(3), &VertexSet::empty(3)));
    }

    fn p(n: usize) -> Graph {
        families::path(n).unwrap()
    }

    #[test]
    fn trace_examples() {
        let t = force_trace(&p(3), &set(3, &[0]));
        assert!(t.covered);
        assert_eq!(
            t.events,
            vec![
                ForceEvent {
                    time: 1,
                    forcer: 0,
                    forced: 1
                },
                ForceEvent {
                    time: 2,
                    forcer: 1,
                    forced: 2
                },
            ]
        );

        let t = force_trace(&p(3), &set(3, &[1]));
        assert!(!t.covered);
        assert!(t.events.is_empty());

        // C_5 plus chords {1,4} and {2,4}, seeded on {0, 4}
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 4), (2, 4)]).unwrap();
        let t = force_trace(&g, &set(5, &[0, 4]));
        assert!(t.covered);
        assert_eq!(
            t.events,
            vec![
                ForceEvent {
                    time: 1,
                    forcer: 0,
                    forced: 1
                },
                ForceEvent {
                    time: 2,
                    forcer: 1,
                    forced: 2
                },
                ForceEvent {
                    time: 3,
                    forcer: 2,
                    forced: 3
                },
            ]
        );
    }

    #[test]
    fn synchronized_examples() {
        assert_eq!(synchronized_rounds(&p(5), &set(5, &[0])), Some(4));
        assert_eq!(synchronized_rounds(&p(3), &set(3, &[1])), None);
        // the balanced binary tree on 7 vertices from its lexicographically
        // smallest minimum leaf seed: two branches run in parallel
        let t23 = families::balanced_tree(2, 3).unwrap();
        assert_eq!(synchronized_rounds(&t23, &set(7, &[3, 4, 5])), Some(3));
        assert_eq!(t23.diameter().unwrap(), 4);
        // seed = everything covers in zero rounds
        assert_eq!(synchronized_rounds(&p(4), &VertexSet::full(4)), Some(0));
    }

    #[test]
    fn synchronized_trace_shape() {
        let t = synchronized_trace(&p(7), &set(7, &[0, 6]));
        assert!(t.covered);
        let times: Vec<usize> = t.events.iter().map(|e| e.time).collect();
        assert_eq!(times, vec![1, 1, 2, 2, 3]);
        verify_trace(&p(7), &t).unwrap();
    }

    #[test]
    fn directed_examples() {
        let dpath = Digraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(closure_directed(&dpath, &set(4, &[0])), VertexSet::full(4));

        let rev = Digraph::new(4, &[(1, 0), (2, 1), (3, 2)]).unwrap();
        assert_eq!(closure_directed(&rev, &set(4, &[0])), set(4, &[0]));

        let k4 = families::complete(4).unwrap();
        let d = k4.orient_along_path(&[0, 1, 2, 3]).unwrap();
        assert_eq!(closure_directed(&d, &set(4, &[0])), VertexSet::full(4));
        // under the in-arc reading the same seed stalls immediately
        assert_eq!(closure_directed_in(&d, &set(4, &[0])), set(4, &[0]));
    }

    #[test]
    fn directed_synchronized_rounds() {
        // the oriented complete graph still forces one vertex per round:
        // every later vertex keeps two uncolored out-neighbors until the
        // frontier passes it
        let k4 = families::complete(4).unwrap();
        let d = k4.orient_along_path(&[0, 1, 2, 3]).unwrap();
        assert_eq!(synchronized_rounds_directed(&d, &set(4, &[0])), Some(3));
        let t = synchronized_trace_directed(&d, &set(4, &[0]));
        assert!(t.covered);
        verify_trace_directed(&d, &t).unwrap();

        let rev = Digraph::new(3, &[(1, 0), (2, 1)]).unwrap();
        assert_eq!(synchronized_rounds_directed(&rev, &set(3, &[0])), None);
    }

    #[test]
    fn trace_replay_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let n = rng.gen_range(1..10);
            let g = random_graph(&mut rng, n, 0.4);
            let k = rng.gen_range(0..=n);
            let mut ids: Vec<usize> = (0..n).collect();
            for i in 0..k {
                let j = rng.gen_range(i..n);
                ids.swap(i, j);
            }
            let s = set(n, &ids[..k]);
            let t = force_trace(&g, &s);
            verify_trace(&g, &t).unwrap();
            assert_eq!(t.events.len(), closure(&g, &s).len() - s.len());
            let st = synchronized_trace(&g, &s);
            verify_trace(&g, &st).unwrap();
            assert_eq!(st.covered, t.covered);
            assert_eq!(st.final_set(), t.final_set()); // same fixpoint
        }
    }

    #[test]
    fn replay_rejects_tampering() {
        let t = force_trace(&p(4), &set(4, &[0]));
        let mut bad = t.clone();
        bad.events[1].forcer = 0;
        assert!(matches!(
            verify_trace(&p(4), &bad),
            Err(crate::Error::TraceInvalid { .. })
        ));
        let mut bad = t.clone();
        bad.covered = false;
        assert!(verify_trace(&p(4), &bad).is_err());
        let mut bad = t;
        bad.events[1].time = 1;
        assert!(verify_trace(&p(4), &bad).is_err());
    }

    #[test]
    fn directed_agrees_with_undirected_on_symmetric_digraphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.gen_range(1..10);
            let g = random_graph(&mut rng, n, 0.4);
            let d = Digraph::symmetric(&g);
            let k = rng.gen_range(0..=n);
            let ids: Vec<usize> = (0..k).collect();
            let s = set(n, &ids);
            assert_eq!(closure(&g, &s), closure_directed(&d, &s));
        }
    }

    #[test]
    fn closure_monotone_and_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..40 {
            let n = rng.gen_range(1..10);
            let g = random_graph(&mut rng, n, 0.4);
            let mut small = VertexSet::empty(n);
            let mut big = VertexSet::empty(n);
            for v in 0..n {
                if rng.gen_bool(0.3) {
                    small.insert(v);
                    big.insert(v);
                } else if rng.gen_bool(0.3) {
                    big.insert(v);
                }
            }
            let cs = closure(&g, &small);
            let cb = closure(&g, &big);
            assert!(cs.is_subset_of(&cb));
            assert_eq!(closure(&g, &cs), cs);
        }
    }
}
