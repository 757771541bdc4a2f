//! Canonical graph families and the closed-form counting functions they are
//! checked against: the balanced-tree formula, Jacobsthal numbers, walk
//! counts in complete graphs, alternating power sums, and alternating sign
//! matrix counts.

use num_bigint::BigUint;

use crate::graph::Graph;
use crate::{Error, Result};

/// Largest order accepted by [`asm_count`]; A(100) already has ~2600 digits.
pub const ASM_ORDER_CAP: u64 = 100;

// ---------------------------------------------------------------------------
// generators
// ---------------------------------------------------------------------------

/// Path 0–1–…–(n−1).
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidArgument(
            "path needs at least 1 vertex".into(),
        ));
    }
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges)
}

/// Cycle: the path plus the closing edge {0, n−1}.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(
            "cycle needs at least 3 vertices".into(),
        ));
    }
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidArgument(
            "complete graph needs at least 1 vertex".into(),
        ));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

/// Star on `n` vertices: center 0, leaves 1..n.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "star needs at least 2 vertices".into(),
        ));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::new(n, &edges)
}

/// Comb: a bone path on ids 0..n, where bone vertex `i` carries a pendant
/// path of k−1 vertices (ids n+i(k−1) .. n+(i+1)(k−1), chained, the first one
/// attached to `i`). Total kn vertices; k = 1 degenerates to the bare path.
pub fn comb(n: usize, k: usize) -> Result<Graph> {
    if n < 1 || k < 1 {
        return Err(Error::InvalidArgument(
            "comb needs n >= 1 and k >= 1".into(),
        ));
    }
    let total = k
        .checked_mul(n)
        .ok_or(Error::InvalidArgument("comb size overflows".into()))?;
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    for i in 0..n {
        if k > 1 {
            let base = n + i * (k - 1);
            edges.push((i, base));
            for j in 0..k - 2 {
                edges.push((base + j, base + j + 1));
            }
        }
    }
    Graph::new(total, &edges)
}

/// Shape of a balanced m-ary tree: every internal vertex has `arity`
/// children and the root counts as level 1. Construction validates the
/// shape, so the accessors below cannot fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeSpec {
    arity: usize,
    levels: usize,
}

impl TreeSpec {
    pub fn new(arity: usize, levels: usize) -> Result<Self> {
        if arity < 2 {
            return Err(Error::InvalidArgument(
                "tree arity must be at least 2".into(),
            ));
        }
        if levels < 1 {
            return Err(Error::InvalidArgument("tree needs at least 1 level".into()));
        }
        let spec = TreeSpec { arity, levels };
        checked_pow_usize(arity, levels)?; // reject shapes that overflow
        Ok(spec)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    /// (m^k − 1) / (m − 1).
    pub fn vertex_count(&self) -> usize {
        let p = checked_pow_usize(self.arity, self.levels).expect("validated on construction");
        (p - 1) / (self.arity - 1)
    }

    /// Vertices with children: ids below this bound are internal.
    pub fn internal_count(&self) -> usize {
        let p = checked_pow_usize(self.arity, self.levels - 1).expect("validated on construction");
        (p - 1) / (self.arity - 1)
    }

    /// Ids of the deepest level, the m^(k−1) highest ids. For a single-level
    /// tree this is the root itself.
    pub fn leaves(&self) -> Vec<usize> {
        (self.internal_count()..self.vertex_count()).collect()
    }
}

/// Balanced m-ary tree under heap labeling: root 0, children of internal `i`
/// are m·i+1 ..= m·i+m.
///
/// Vertices are often written with digit strings: the vertex reached from the
/// root by child digits d₁…dⱼ (each in 0..m) has the id obtained by folding
/// `id = m·id + d + 1` over the digits. The deepest level reads left to right
/// in ascending id order.
pub fn balanced_tree(arity: usize, levels: usize) -> Result<Graph> {
    let spec = TreeSpec::new(arity, levels)?;
    balanced_tree_from(&spec)
}

pub fn balanced_tree_from(spec: &TreeSpec) -> Result<Graph> {
    let total = spec.vertex_count();
    let mut edges = Vec::with_capacity(total.saturating_sub(1));
    for i in 0..spec.internal_count() {
        for c in 1..=spec.arity() {
            edges.push((i, spec.arity() * i + c));
        }
    }
    Graph::new(total, &edges)
}

/// rows × cols lattice with horizontal and vertical edges, row-major ids.
pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    if rows < 1 || cols < 1 {
        return Err(Error::InvalidArgument(
            "grid needs rows >= 1 and cols >= 1".into(),
        ));
    }
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::new(rows * cols, &edges)
}

/// Decodes a Prüfer sequence of length n−2 into the labeled tree on n
/// vertices it encodes.
pub fn prufer_to_tree(seq: &[usize], n: usize) -> Result<Graph> {
    if n < 2 || seq.len() != n - 2 {
        return Err(Error::InvalidArgument(format!(
            "a tree on {n} vertices needs a sequence of length {}, got {}",
            n.saturating_sub(2),
            seq.len()
        )));
    }
    for &v in seq {
        if v >= n {
            return Err(Error::VertexOutOfRange { id: v, n });
        }
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let std::cmp::Reverse(u) = heap.pop().expect("a tree always has a leaf");
        edges.push((u, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            heap.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(u) = heap.pop().expect("two leaves remain");
    let std::cmp::Reverse(v) = heap.pop().expect("two leaves remain");
    edges.push((u, v));
    Graph::new(n, &edges)
}

// ---------------------------------------------------------------------------
// counting functions
// ---------------------------------------------------------------------------

fn checked_pow_usize(base: usize, exp: usize) -> Result<usize> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .ok_or_else(|| {
            Error::InvalidArgument(format!("a {base}-ary tree with {exp} levels overflows"))
        })
}

/// Closed form for the minimum propagating set size of the balanced m-ary
/// tree with k levels: (m^k + (−1)^(k−1)) / (m + 1). Always an integer since
/// m ≡ −1 (mod m+1). Requires m >= 2: a 1-ary "tree" is a path, whose
/// minimum is 1 regardless of depth, and the formula does not apply.
pub fn balanced_tree_pi(m: u64, k: u32) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidArgument(
            "balanced_tree_pi needs arity >= 2".into(),
        ));
    }
    if k < 1 {
        return Err(Error::InvalidArgument(
            "balanced_tree_pi needs at least 1 level".into(),
        ));
    }
    let p = (m as u128).checked_pow(k).ok_or(Error::Capacity {
        what: "balanced_tree_pi",
        actual: k as usize,
        limit: 127,
    })?;
    let numerator = if k % 2 == 1 { p + 1 } else { p - 1 };
    let val = numerator / (m as u128 + 1);
    u64::try_from(val).map_err(|_| Error::Capacity {
        what: "balanced_tree_pi",
        actual: k as usize,
        limit: 64,
    })
}

/// J(0)=0, J(1)=1, J(i) = J(i−1) + 2·J(i−2); equivalently (2^i − (−1)^i)/3.
///
/// # Panics
/// For `i > 65`, where the value no longer fits in a `u64`.
pub fn jacobsthal(i: u32) -> u64 {
    assert!(i <= 65, "jacobsthal({i}) exceeds u64");
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..i {
        (a, b) = (b, b + 2 * a);
    }
    a
}

/// Whether `x` appears in the Jacobsthal sequence 0, 1, 1, 3, 5, 11, 21, …
pub fn is_jacobsthal(x: u64) -> bool {
    let (mut a, mut b) = (0u128, 1u128);
    loop {
        if a == x as u128 {
            return true;
        }
        if a > x as u128 {
            return false;
        }
        (a, b) = (b, b + 2 * a);
    }
}

/// Number of walks of length `k` between two fixed distinct vertices of the
/// complete graph on m+1 vertices, as an exact integer: w(0)=0, w(1)=1,
/// w(j) = (m−1)·w(j−1) + m·w(j−2).
pub fn complete_graph_walks(m: u64, k: u32) -> Result<BigUint> {
    if m < 1 {
        return Err(Error::InvalidArgument("walk counts need m >= 1".into()));
    }
    let mb = BigUint::from(m);
    let mut a = BigUint::from(0u32);
    let mut b = BigUint::from(1u32);
    for _ in 0..k {
        let next = (&mb - 1u32) * &b + &mb * &a;
        a = std::mem::replace(&mut b, next);
    }
    Ok(a)
}

/// The alternating sum m^k − m^(k−1) + … ± 1 (leading term positive),
/// evaluated exactly. Coincides with [`balanced_tree_pi`]`(m, k+1)` by the
/// geometric-series closed form, which the tests assert through both routes.
pub fn alternating_power_sum(m: u64, k: u32) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidArgument(
            "alternating_power_sum needs m >= 2".into(),
        ));
    }
    let mut acc: i128 = 0;
    let mut sign: i128 = 1;
    for j in (0..=k).rev() {
        let term = (m as i128).checked_pow(j).ok_or(Error::Capacity {
            what: "alternating_power_sum",
            actual: j as usize,
            limit: 127,
        })?;
        acc = acc.checked_add(sign * term).ok_or(Error::Capacity {
            what: "alternating_power_sum",
            actual: k as usize,
            limit: 127,
        })?;
        sign = -sign;
    }
    debug_assert!(acc > 0);
    u64::try_from(acc).map_err(|_| Error::Capacity {
        what: "alternating_power_sum",
        actual: k as usize,
        limit: 64,
    })
}

/// Number of alternating sign matrices of order n, the exact product
/// ∏_{l=0}^{n−1} (3l+1)! / (n+l)!.
pub fn asm_count(n: u64) -> Result<BigUint> {
    if !(1..=ASM_ORDER_CAP).contains(&n) {
        return Err(Error::Capacity {
            what: "asm_count order",
            actual: n as usize,
            limit: ASM_ORDER_CAP as usize,
        });
    }
    let mut numerator = BigUint::from(1u32);
    let mut denominator = BigUint::from(1u32);
    for l in 0..n {
        numerator *= factorial(3 * l + 1);
        denominator *= factorial(n + l);
    }
    debug_assert!(
        &numerator % &denominator == BigUint::from(0u32),
        "the product is an exact integer"
    );
    Ok(numerator / denominator)
}

fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 2..=n {
        acc *= i;
    }
    acc
}

// ---------------------------------------------------------------------------
