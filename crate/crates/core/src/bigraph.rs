//! Bipartite graphs with an equal bipartition, their degree sequences, and
//! the high-degree-difference count.
//!
//! For a graph on vertex sets `U = {u_0..u_{n-1}}`, `V = {v_0..v_{n-1}}` with
//! descending-sorted degree sequences `alpha`, `beta`, the statistic
//!
//! ```text
//! D_k = #{ (i, j) : |alpha_i - beta_j| >= k }
//! ```
//!
//! satisfies `D_k <= 2k(n-k)` whenever `n >= k > n/2`, with equality exactly
//! for the block graph [`make_extremal`] and its complement.

use crate::error::{Counterexample, Error, Result};

/// Side-size cap for the packed incidence representation.
pub const MAX_SIDE: usize = 64;

/// Equal-bipartition bipartite graph, rows packed as 64-bit masks.
///
/// Vertex indices are 0-based; bit `j` of `rows[i]` is the edge `u_i - v_j`.
/// Values are immutable after construction and cheap to copy around.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n: usize,
    rows: Vec<u64>,
}

impl BipartiteGraph {
    fn check_side(n: usize) -> Result<()> {
        if n == 0 || n > MAX_SIDE {
            return Err(Error::InvalidParameter(format!(
                "side size must be in 1..={MAX_SIDE}, got {n}"
            )));
        }
        Ok(())
    }

    fn side_mask(n: usize) -> u64 {
        if n == 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    /// Graph with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::check_side(n)?;
        Ok(Self { n, rows: vec![0; n] })
    }

    /// Complete graph `K_{n,n}`.
    pub fn complete(n: usize) -> Result<Self> {
        Self::check_side(n)?;
        Ok(Self {
            n,
            rows: vec![Self::side_mask(n); n],
        })
    }

    /// Build from 0-based `(u, v)` edge pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::check_side(n)?;
        let mut rows = vec![0u64; n];
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({i},{j}) out of bounds for n={n}"
                )));
            }
            rows[i] |= 1 << j;
        }
        Ok(Self { n, rows })
    }

    /// Build from per-row adjacency masks; bits above `n` must be clear.
    pub fn from_row_masks(n: usize, rows: Vec<u64>) -> Result<Self> {
        Self::check_side(n)?;
        if rows.len() != n {
            return Err(Error::InvalidParameter(format!(
                "expected {n} rows, got {}",
                rows.len()
            )));
        }
        let mask = Self::side_mask(n);
        if rows.iter().any(|r| r & !mask != 0) {
            return Err(Error::InvalidParameter(
                "row mask has bits beyond the side size".into(),
            ));
        }
        Ok(Self { n, rows })
    }

    pub fn side(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn row_masks(&self) -> &[u64] {
        &self.rows
    }

    pub fn edge_count(&self) -> u64 {
        self.rows.iter().map(|r| u64::from(r.count_ones())).sum()
    }

    /// Edges as 0-based pairs in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &row) in self.rows.iter().enumerate() {
            let mut bits = row;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                out.push((i, j));
                bits &= bits - 1;
            }
        }
        out
    }

    /// Per-vertex degrees in vertex order: `(deg(u_i))_i, (deg(v_j))_j`.
    pub fn degrees(&self) -> (Vec<u32>, Vec<u32>) {
        let deg_u: Vec<u32> = self.rows.iter().map(|r| r.count_ones()).collect();
        let mut deg_v = vec![0u32; self.n];
        for &row in &self.rows {
            let mut bits = row;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                deg_v[j] += 1;
                bits &= bits - 1;
            }
        }
        (deg_u, deg_v)
    }

    /// Both degree sequences, sorted non-increasing.
    pub fn degree_pair(&self) -> DegreePair {
        let (alpha, beta) = self.degrees();
        DegreePair::new(alpha, beta).expect("graph degrees are always a valid pair")
    }

    /// Edge-complement: `(i, j)` present iff absent here.
    pub fn complement(&self) -> Self {
        let mask = Self::side_mask(self.n);
        Self {
            n: self.n,
            rows: self.rows.iter().map(|r| !r & mask).collect(),
        }
    }

    /// `D_k` of this graph; delegates through [`degree_pair`](Self::degree_pair).
    pub fn high_diff_count(&self, k: usize) -> Result<u64> {
        count_high_diff(&self.degree_pair(), k)
    }
}

/// Descending-sorted degree sequences of an equal-bipartition graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreePair {
    n: usize,
    alpha: Vec<u32>,
    beta: Vec<u32>,
}

impl DegreePair {
    /// Sorts both sequences non-increasing; entries must lie in `[0, n]`
    /// where `n` is the (common) length.
    pub fn new(mut alpha: Vec<u32>, mut beta: Vec<u32>) -> Result<Self> {
        if alpha.is_empty() || alpha.len() != beta.len() {
            return Err(Error::InvalidParameter(format!(
                "sequences must be non-empty and of equal length, got {} and {}",
                alpha.len(),
                beta.len()
            )));
        }
        let n = alpha.len();
        if alpha.iter().chain(beta.iter()).any(|&d| d as usize > n) {
            return Err(Error::InvalidParameter(format!(
                "degree exceeds side size n={n}"
            )));
        }
        alpha.sort_unstable_by(|a, b| b.cmp(a));
        beta.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { n, alpha, beta })
    }

    pub fn side(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &[u32] {
        &self.alpha
    }

    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    pub fn sums(&self) -> (u64, u64) {
        (
            self.alpha.iter().map(|&d| u64::from(d)).sum(),
            self.beta.iter().map(|&d| u64::from(d)).sum(),
        )
    }

    pub fn counterexample(&self, k: usize, edges: Option<Vec<(usize, usize)>>) -> Counterexample {
        Counterexample {
            n: self.n,
            k,
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
            edges,
        }
    }
}

/// Positions `s`, `t` certifying `alpha_s <= beta_{s+k-1} + k - 1` and
/// `beta_t <= alpha_{t+k-1} + k - 1` (1-based into the sorted sequences).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct LemmaWitness {
    pub s: usize,
    pub t: usize,
}

/// The sharp upper bound `2k(n-k)` on `D_k` for `n >= k > n/2`.
pub fn theorem_bound(n: usize, k: usize) -> u64 {
    2 * k as u64 * (n - k) as u64
}

/// Validates `n >= k > n/2`.
pub fn check_k_over_half(n: usize, k: usize) -> Result<()> {
    if k > n || 2 * k <= n {
        return Err(Error::KOutOfRange { n, k });
    }
    Ok(())
}

/// `P[v] = #{j : seq_j <= v}` for `v` in `0..=n`.
fn prefix_counts(seq: &[u32], n: usize) -> Vec<u32> {
    let mut hist = vec![0u32; n + 1];
    for &d in seq {
        hist[d as usize] += 1;
    }
    let mut acc = 0;
    for h in hist.iter_mut() {
        acc += *h;
        *h = acc;
    }
    hist
}

fn count_with_prefix(alpha: &[u32], beta_prefix: &[u32], n: usize, k: usize) -> u64 {
    let mut total = 0u64;
    for &a in alpha {
        let a = a as usize;
        // beta_j <= a - k
        if a >= k {
            total += u64::from(beta_prefix[a - k]);
        }
        // beta_j >= a + k
        if a + k <= n {
            total += n as u64 - u64::from(beta_prefix[a + k - 1]);
        }
    }
    total
}

/// `D_k`: the number of ordered index pairs `(i, j)` with
/// `|alpha_i - beta_j| >= k`. Requires `1 <= k <= n`.
pub fn count_high_diff(dp: &DegreePair, k: usize) -> Result<u64> {
    let n = dp.n;
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { n, k });
    }
    let beta_prefix = prefix_counts(&dp.beta, n);
    Ok(count_with_prefix(&dp.alpha, &beta_prefix, n, k))
}

/// Checks `D_k <= 2k(n-k)` for every `k > n/2`. A violation would falsify
/// the degree bound and is returned as a replayable counterexample.
pub fn check_theorem_bound(dp: &DegreePair) -> Result<()> {
    let n = dp.n;
    let beta_prefix = prefix_counts(&dp.beta, n);
    for k in n / 2 + 1..=n {
        let count = count_with_prefix(&dp.alpha, &beta_prefix, n, k);
        if count > theorem_bound(n, k) {
            return Err(Error::BoundViolation {
                counterexample: dp.counterexample(k, None),
            });
        }
    }
    Ok(())
}

/// The block graph `G_{n,k}`: edge `(u_i, v_j)` iff `max(i, j) < k`
/// (0-based), i.e. a complete `k x k` block plus isolated vertices.
/// Requires `n >= k >= 1`. Attains `D_k = 2k(n-k)` whenever `k > n/2`.
pub fn make_extremal(n: usize, k: usize) -> Result<BipartiteGraph> {
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { n, k });
    }
    BipartiteGraph::check_side(n)?;
    let block = BipartiteGraph::side_mask(k);
    let rows = (0..n).map(|i| if i < k { block } else { 0 }).collect();
    BipartiteGraph::from_row_masks(n, rows)
}

/// Smallest valid `s` and `t` (1-based) such that
/// `alpha_s <= beta_{s+k-1} + k - 1` and `beta_t <= alpha_{t+k-1} + k - 1`.
///
/// Every degree pair realizable by a graph admits a witness when
/// `n >= k > n/2`; absence of one is reported as a counterexample error.
pub fn lemma_witness(dp: &DegreePair, k: usize) -> Result<LemmaWitness> {
    check_k_over_half(dp.n, k)?;
    let s = smallest_witness(&dp.alpha, &dp.beta, dp.n, k);
    let t = smallest_witness(&dp.beta, &dp.alpha, dp.n, k);
    match (s, t) {
        (Some(s), Some(t)) => Ok(LemmaWitness { s, t }),
        _ => Err(Error::LemmaCounterexample {
            counterexample: dp.counterexample(k, None),
        }),
    }
}

fn smallest_witness(a: &[u32], b: &[u32], n: usize, k: usize) -> Option<usize> {
    (1..=n - k + 1).find(|&s| u64::from(a[s - 1]) <= u64::from(b[s + k - 2]) + (k as u64 - 1))
}

/// Whether `g` is (sides fixed) isomorphic to `G_{n,k}` or to its
/// complement. Decided by the degree profile: `k` vertices of degree `k`
/// and `n - k` of degree `0` per side force the complete `k x k` block.
/// Requires `n >= k > n/2`.
pub fn is_extremal_form(g: &BipartiteGraph, k: usize) -> bool {
    let (deg_u, deg_v) = g.degrees();
    is_extremal_profile(&deg_u, &deg_v, g.side(), k)
}

/// Degree-profile test behind [`is_extremal_form`], usable without
/// materializing a graph.
pub(crate) fn is_extremal_profile(deg_u: &[u32], deg_v: &[u32], n: usize, k: usize) -> bool {
    debug_assert!(k <= n && 2 * k > n);
    block_profile(deg_u, n, k) && block_profile(deg_v, n, k)
        || complement_block_profile(deg_u, n, k) && complement_block_profile(deg_v, n, k)
}

/// Exactly `k` vertices of degree `k`, the rest of degree `0`.
fn block_profile(deg: &[u32], _n: usize, k: usize) -> bool {
    let mut at_k = 0usize;
    for &d in deg {
        if d as usize == k {
            at_k += 1;
        } else if d != 0 {
            return false;
        }
    }
    at_k == k
}

fn complement_block_profile(deg: &[u32], n: usize, k: usize) -> bool {
    let mut at_nk = 0usize;
    for &d in deg {
        if d as usize == n - k {
            at_nk += 1;
        } else if d as usize != n {
            return false;
        }
    }
    at_nk == k
}
