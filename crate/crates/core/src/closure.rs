//! Degree-sum closures: the k-closure `C_k(G)` and the bipartite closure `cl_B(G)`.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};

/// A closed graph together with the joins that produced it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosureResult<G> {
    #[serde(skip)]
    pub closed: G,
    /// Joined pairs in the order they were added. For the bipartite closure the
    /// pairs are part-local `(x, y)` indices.
    pub added_edges: Vec<(usize, usize)>,
    /// The degree-sum threshold that was applied.
    pub threshold: usize,
}

/// Order in which candidate pairs are first queued. The closed graph does not
/// depend on it; only the trace does.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairOrder {
    Lexicographic,
    ReverseLexicographic,
    /// A seeded random permutation.
    Shuffled(u64),
}

fn arrange(pairs: &mut [(usize, usize)], order: PairOrder) {
    match order {
        PairOrder::Lexicographic => {}
        PairOrder::ReverseLexicographic => pairs.reverse(),
        PairOrder::Shuffled(seed) => pairs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed)),
    }
}

/// `C_k(G)`: join nonadjacent pairs with degree sum at least `k` until none remain.
pub fn k_closure(g: &Graph, k: usize) -> ClosureResult<Graph> {
    k_closure_ordered(g, k, PairOrder::Lexicographic)
}

pub fn k_closure_ordered(g: &Graph, k: usize, order: PairOrder) -> ClosureResult<Graph> {
    let n = g.order();
    let mut closed = g.clone();
    let mut deg = g.degrees();
    let mut pairs = g.non_edges();
    arrange(&mut pairs, order);
    let mut queued = vec![false; n * n];
    for &(u, v) in &pairs {
        queued[u * n + v] = true;
    }
    let mut queue: VecDeque<(usize, usize)> = pairs.into();
    let mut added = Vec::new();
    while let Some((u, v)) = queue.pop_front() {
        queued[u * n + v] = false;
        if closed.has_edge(u, v) || deg[u] + deg[v] < k {
            continue;
        }
        closed = closed.with_edge(u, v);
        deg[u] += 1;
        deg[v] += 1;
        added.push((u, v));
        // Only pairs touching u or v gained degree.
        for w in [u, v] {
            for z in 0..n {
                if z == w || closed.has_edge(w, z) {
                    continue;
                }
                let (a, b) = (w.min(z), w.max(z));
                if !queued[a * n + b] && deg[a] + deg[b] >= k {
                    queued[a * n + b] = true;
                    queue.push_back((a, b));
                }
            }
        }
    }
    ClosureResult {
        closed,
        added_edges: added,
        threshold: k,
    }
}

/// `cl_B(G)` for a balanced bipartite graph with parts of size `n`: join
/// nonadjacent cross pairs with degree sum at least `n + 1`.
pub fn bipartite_closure(b: &BipartiteGraph) -> Result<ClosureResult<BipartiteGraph>> {
    bipartite_closure_ordered(b, PairOrder::Lexicographic)
}

pub fn bipartite_closure_ordered(
    b: &BipartiteGraph,
    order: PairOrder,
) -> Result<ClosureResult<BipartiteGraph>> {
    if !b.is_balanced() {
        return Err(Error::NotBalanced {
            x_size: b.x_size(),
            y_size: b.y_size(),
        });
    }
    let n = b.x_size();
    let threshold = n + 1;
    let mut closed = b.clone();
    let mut dx = b.x_degrees();
    let mut dy = b.y_degrees();
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| !b.has_edge(x, y))
        .collect();
    arrange(&mut pairs, order);
    let mut queued = vec![false; n * n];
    for &(x, y) in &pairs {
        queued[x * n + y] = true;
    }
    let mut queue: VecDeque<(usize, usize)> = pairs.into();
    let mut added = Vec::new();
    while let Some((x, y)) = queue.pop_front() {
        queued[x * n + y] = false;
        if closed.has_edge(x, y) || dx[x] + dy[y] < threshold {
            continue;
        }
        closed = closed.with_edge(x, y);
        dx[x] += 1;
        dy[y] += 1;
        added.push((x, y));
        for yy in 0..n {
            if !closed.has_edge(x, yy) && !queued[x * n + yy] && dx[x] + dy[yy] >= threshold {
                queued[x * n + yy] = true;
                queue.push_back((x, yy));
            }
        }
        for xx in 0..n {
            if !closed.has_edge(xx, y) && !queued[xx * n + y] && dx[xx] + dy[y] >= threshold {
                queued[xx * n + y] = true;
                queue.push_back((xx, y));
            }
        }
    }
    Ok(ClosureResult {
        closed,
        added_edges: added,
        threshold,
    })
}
