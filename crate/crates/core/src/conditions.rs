//! Classical degree and edge-count sufficient conditions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConditionId {
    /// Pairwise degree sums at least `n + 1` on a 2-connected graph.
    OreHamiltonConnected,
    /// The Chvátal-type degree sequence condition for Hamilton-connectedness.
    DegreeSequence,
    /// Edge count on a balanced bipartite graph (Hamiltonian unless ⊆ B_n^k).
    BipartiteBalancedEdges,
    /// Edge count on a nearly balanced bipartite graph (traceable unless ⊆ C_n^k).
    BipartiteNearlyBalancedEdges,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum ConditionEvidence {
    /// A nonadjacent pair whose degree sum is too small.
    WeakPair { u: usize, v: usize, degree_sum: usize },
    /// The graph is not 2-connected.
    NotTwoConnected,
    /// The integer `k` at which the degree-sequence test fails.
    BadIndex { k: usize },
    /// Both sides of an edge-count inequality.
    EdgeCount { edges: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionVerdict {
    pub condition_id: ConditionId,
    pub satisfied: bool,
    pub evidence: Option<ConditionEvidence>,
    pub warnings: Vec<String>,
}

/// 2-connected and `d(u) + d(v) ≥ n + 1` for every nonadjacent pair.
pub fn ore_hamilton_connected(g: &Graph) -> ConditionVerdict {
    let n = g.order();
    let mut verdict = ConditionVerdict {
        condition_id: ConditionId::OreHamiltonConnected,
        satisfied: false,
        evidence: None,
        warnings: Vec::new(),
    };
    let weak = g.non_edges().into_iter().find_map(|(u, v)| {
        let s = g.degree(u) + g.degree(v);
        (s < n + 1).then_some(ConditionEvidence::WeakPair { u, v, degree_sum: s })
    });
    if let Some(e) = weak {
        verdict.evidence = Some(e);
    } else if !g.is_two_connected() {
        verdict.evidence = Some(ConditionEvidence::NotTwoConnected);
    } else {
        verdict.satisfied = true;
    }
    verdict
}

/// No integer `2 ≤ k ≤ n/2` with `d(v_{k−1}) ≤ k` and `d(v_{n−k}) ≤ n − k`,
/// indices 1-based into the ascending degree sequence.
///
/// Taken as printed, without a connectivity hypothesis. For `n = 3` the range
/// of `k` is empty, so every graph on three vertices passes; a warning is
/// attached whenever the input is not 2-connected.
pub fn degree_sequence_hc(g: &Graph) -> ConditionVerdict {
    let n = g.order();
    let mut d = g.degrees();
    d.sort_unstable();
    let bad = (2..=n / 2).find(|&k| d[k - 2] <= k && d[n - k - 1] <= n - k);
    let mut warnings = Vec::new();
    if !g.is_two_connected() {
        warnings.push("graph is not 2-connected; the condition carries no connectivity hypothesis".into());
    }
    ConditionVerdict {
        condition_id: ConditionId::DegreeSequence,
        satisfied: bad.is_none(),
        evidence: bad.map(|k| ConditionEvidence::BadIndex { k }),
        warnings,
    }
}

/// Edge-count conditions for balanced (order `2n`) and nearly balanced
/// (order `2n − 1`) bipartite graphs with minimum-degree parameter `k`.
pub fn bipartite_edge_conditions(b: &BipartiteGraph, k: usize) -> Result<ConditionVerdict> {
    let (balanced, n) = if b.is_balanced() {
        (true, b.x_size())
    } else if b.x_size().abs_diff(b.y_size()) == 1 {
        (false, b.x_size().max(b.y_size()))
    } else {
        return Err(Error::HypothesisNotMet(format!(
            "parts {}/{} are neither balanced nor nearly balanced",
            b.x_size(),
            b.y_size()
        )));
    };
    if k < 1 {
        return Err(Error::HypothesisNotMet("k ≥ 1 required".into()));
    }
    if n < 2 * k + 1 {
        return Err(Error::HypothesisNotMet(format!("n = {n} < 2k + 1 = {}", 2 * k + 1)));
    }
    let delta = b.min_degree().unwrap_or(0);
    if delta < k {
        return Err(Error::HypothesisNotMet(format!("δ = {delta} < k = {k}")));
    }
    let bound = if balanced {
        n * (n - k - 1) + (k + 1) * (k + 1)
    } else {
        n * (n - k - 2) + (k + 1) * (k + 1)
    };
    let edges = b.edge_count();
    Ok(ConditionVerdict {
        condition_id: if balanced {
            ConditionId::BipartiteBalancedEdges
        } else {
            ConditionId::BipartiteNearlyBalancedEdges
        },
        satisfied: edges > bound,
        evidence: Some(ConditionEvidence::EdgeCount { edges, bound }),
        warnings: Vec::new(),
    })
}
