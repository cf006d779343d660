//! Exact decision procedures for Hamiltonian cycles and paths.
//!
//! The main engine is a subset dynamic program: for a start set and every vertex
//! subset `S`, `ends[S]` is the set of vertices `v` such that some path that starts
//! in the start set visits exactly `S` and stops at `v`. Cost is `O(2ⁿ · n)` word
//! operations per start, so orders are capped (default 24).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard ceiling imposed by the 32-bit subset masks.
pub const MAX_ORACLE_ORDER: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HamProperty {
    Hamiltonian,
    Traceable,
    HamiltonConnected,
    TraceableFromEveryVertex,
    TraceableFrom(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    Path(Vec<usize>),
    Cycle(Vec<usize>),
    /// A pair with no Hamiltonian path between them.
    FailingPair(usize, usize),
    /// A vertex from which no Hamiltonian path starts.
    FailingVertex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleAnswer {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl OracleAnswer {
    fn yes(witness: Option<Witness>) -> Self {
        OracleAnswer {
            holds: true,
            witness,
        }
    }

    fn no(witness: Option<Witness>) -> Self {
        OracleAnswer {
            holds: false,
            witness,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { cap: 24 }
    }
}

fn guard(g: &Graph, cfg: &OracleConfig) -> Result<()> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let cap = cfg.cap.min(MAX_ORACLE_ORDER);
    if n > cap {
        return Err(Error::TooLarge { order: n, cap });
    }
    Ok(())
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.order()).map(|v| g.neighbor_mask(v) as u32).collect()
}

/// `ends[S]` for paths starting at any vertex of `starts`.
fn path_table(adj: &[u32], starts: u32) -> Vec<u32> {
    let n = adj.len();
    let mut ends = vec![0u32; 1 << n];
    for s in 0..n {
        if starts >> s & 1 == 1 {
            ends[1 << s] = 1 << s;
        }
    }
    for mask in 1u32..(1u32 << n) {
        if mask.count_ones() < 2 || mask & starts == 0 {
            continue;
        }
        let mut acc = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let prev = mask ^ (1 << v);
            if ends[prev as usize] & adj[v as usize] != 0 {
                acc |= 1 << v;
            }
        }
        ends[mask as usize] = acc;
    }
    ends
}

/// Walks a path ending at `end` back through the table; returned start-first.
fn reconstruct(adj: &[u32], ends: &[u32], full: u32, end: usize) -> Vec<usize> {
    let mut seq = vec![end];
    let mut mask = full;
    let mut cur = end;
    while mask.count_ones() > 1 {
        let prev = mask ^ (1 << cur);
        let cand = ends[prev as usize] & adj[cur];
        debug_assert!(cand != 0);
        let u = cand.trailing_zeros() as usize;
        seq.push(u);
        mask = prev;
        cur = u;
    }
    seq.reverse();
    seq
}

fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Is there a Hamiltonian path with endpoints `u` and `v`?
pub fn ham_path_between(g: &Graph, u: usize, v: usize, cfg: &OracleConfig) -> Result<OracleAnswer> {
    guard(g, cfg)?;
    let n = g.order();
    for w in [u, v] {
        if w >= n {
            return Err(Error::InvalidVertex { vertex: w, order: n });
        }
    }
    if u == v {
        return Err(Error::DomainError("endpoints must differ".into()));
    }
    let adj = masks(g);
    let full = full_mask(n);
    let ends = path_table(&adj, 1 << u);
    if ends[full as usize] >> v & 1 == 1 {
        Ok(OracleAnswer::yes(Some(Witness::Path(reconstruct(
            &adj, &ends, full, v,
        )))))
    } else {
        Ok(OracleAnswer::no(Some(Witness::FailingPair(u, v))))
    }
}

/// Exact answer for `p` on `g`.
pub fn check_property(g: &Graph, p: HamProperty, cfg: &OracleConfig) -> Result<OracleAnswer> {
    guard(g, cfg)?;
    let n = g.order();
    let adj = masks(g);
    let full = full_mask(n);
    match p {
        HamProperty::Hamiltonian => {
            if n < 3 {
                return Err(Error::DomainError(
                    "a Hamiltonian cycle needs at least 3 vertices".into(),
                ));
            }
            if !g.is_connected() || bipartite_imbalance(g).is_some_and(|d| d != 0) {
                return Ok(OracleAnswer::no(None));
            }
            let ends = path_table(&adj, 1);
            let closing = ends[full as usize] & adj[0];
            if closing == 0 {
                Ok(OracleAnswer::no(None))
            } else {
                let end = closing.trailing_zeros() as usize;
                Ok(OracleAnswer::yes(Some(Witness::Cycle(reconstruct(
                    &adj, &ends, full, end,
                )))))
            }
        }
        HamProperty::Traceable => {
            if !g.is_connected() || bipartite_imbalance(g).is_some_and(|d| d >= 2) {
                return Ok(OracleAnswer::no(None));
            }
            let ends = path_table(&adj, full);
            let e = ends[full as usize];
            if e == 0 {
                Ok(OracleAnswer::no(None))
            } else {
                let end = e.trailing_zeros() as usize;
                Ok(OracleAnswer::yes(Some(Witness::Path(reconstruct(
                    &adj, &ends, full, end,
                )))))
            }
        }
        HamProperty::TraceableFrom(s) => {
            if s >= n {
                return Err(Error::InvalidVertex { vertex: s, order: n });
            }
            let ends = path_table(&adj, 1 << s);
            let e = ends[full as usize];
            if e == 0 {
                Ok(OracleAnswer::no(Some(Witness::FailingVertex(s))))
            } else {
                let end = e.trailing_zeros() as usize;
                Ok(OracleAnswer::yes(Some(Witness::Path(reconstruct(
                    &adj, &ends, full, end,
                )))))
            }
        }
        HamProperty::TraceableFromEveryVertex => {
            // A Hamiltonian path ending at v, reversed, starts at v.
            let ends = path_table(&adj, full);
            let missing = full & !ends[full as usize];
            if missing == 0 {
                Ok(OracleAnswer::yes(None))
            } else {
                Ok(OracleAnswer::no(Some(Witness::FailingVertex(
                    missing.trailing_zeros() as usize,
                ))))
            }
        }
        HamProperty::HamiltonConnected => hamilton_connected(g, &adj),
    }
}

/// `Some(||X| − |Y||)` when `g` is connected and bipartite.
fn bipartite_imbalance(g: &Graph) -> Option<usize> {
    if !g.is_connected() {
        return None;
    }
    let coloring = g.two_coloring()?;
    let x = coloring.iter().filter(|&&c| c).count();
    Some(x.abs_diff(g.order() - x))
}

fn hamilton_connected(g: &Graph, adj: &[u32]) -> Result<OracleAnswer> {
    let n = g.order();
    if n == 1 {
        return Ok(OracleAnswer::yes(None));
    }
    if n == 2 {
        return Ok(if g.has_edge(0, 1) {
            OracleAnswer::yes(None)
        } else {
            OracleAnswer::no(Some(Witness::FailingPair(0, 1)))
        });
    }
    // A Hamiltonian path from a cut vertex c leaves G − c connected, so every
    // pair (c, w) fails; a disconnected graph fails on any pair.
    if !g.is_two_connected() {
        let cut = (0..n)
            .find(|&c| {
                let rest: Vec<usize> = (0..n).filter(|&v| v != c).collect();
                !g.induced(&rest).is_connected()
            })
            .unwrap_or(0);
        let other = if cut == 0 { 1 } else { 0 };
        return Ok(OracleAnswer::no(Some(Witness::FailingPair(
            cut.min(other),
            cut.max(other),
        ))));
    }
    let full = full_mask(n);
    let failing_end = |s: usize| -> Option<usize> {
        let ends = path_table(adj, 1 << s);
        let missing = full & !ends[full as usize] & !(1 << s);
        (missing != 0).then(|| missing.trailing_zeros() as usize)
    };
    let first_failure = first_failing_start(n, failing_end);
    Ok(match first_failure {
        None => OracleAnswer::yes(None),
        Some((s, v)) => OracleAnswer::no(Some(Witness::FailingPair(s.min(v), s.max(v)))),
    })
}

#[cfg(feature = "parallel")]
fn first_failing_start(n: usize, f: impl Fn(usize) -> Option<usize> + Sync) -> Option<(usize, usize)> {
    use rayon::prelude::*;
    if n >= 16 {
        (0..n)
            .into_par_iter()
            .filter_map(|s| f(s).map(|v| (s, v)))
            .min()
    } else {
        (0..n).find_map(|s| f(s).map(|v| (s, v)))
    }
}

#[cfg(not(feature = "parallel"))]
fn first_failing_start(n: usize, f: impl Fn(usize) -> Option<usize>) -> Option<(usize, usize)> {
    (0..n).find_map(|s| f(s).map(|v| (s, v)))
}

/// Checks that `w` is a valid certificate for `p` on `g`.
pub fn validate_witness(g: &Graph, p: HamProperty, w: &Witness) -> bool {
    let n = g.order();
    let spanning = |seq: &[usize]| {
        let mut seen = vec![false; n];
        seq.len() == n
            && seq.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
            && seq.windows(2).all(|e| g.has_edge(e[0], e[1]))
    };
    match (p, w) {
        (HamProperty::Hamiltonian, Witness::Cycle(c)) => {
            spanning(c) && n >= 3 && g.has_edge(c[0], c[n - 1])
        }
        (HamProperty::Traceable, Witness::Path(path)) => spanning(path),
        (HamProperty::TraceableFrom(s), Witness::Path(path)) => spanning(path) && path[0] == s,
        (_, Witness::FailingPair(_, _)) | (_, Witness::FailingVertex(_)) => true,
        _ => false,
    }
}

/// Plain depth-first search, kept independent of the subset DP for cross-checks.
pub mod backtrack {
    use super::HamProperty;
    use crate::graph::Graph;

    fn extend(
        g: &Graph,
        path: &mut Vec<usize>,
        used: &mut [bool],
        accept: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        if path.len() == g.order() {
            return accept(path);
        }
        let last = *path.last().expect("path is seeded");
        for v in g.neighbors(last).collect::<Vec<_>>() {
            if !used[v] {
                used[v] = true;
                path.push(v);
                if extend(g, path, used, accept) {
                    return true;
                }
                path.pop();
                used[v] = false;
            }
        }
        false
    }

    fn from(g: &Graph, s: usize, accept: &dyn Fn(&[usize]) -> bool) -> bool {
        let mut used = vec![false; g.order()];
        used[s] = true;
        extend(g, &mut vec![s], &mut used, accept)
    }

    pub fn has_path_between(g: &Graph, u: usize, v: usize) -> bool {
        from(g, u, &|p: &[usize]| p[p.len() - 1] == v)
    }

    pub fn check_property(g: &Graph, p: HamProperty) -> bool {
        let n = g.order();
        match p {
            HamProperty::Hamiltonian => {
                n >= 3 && from(g, 0, &|path: &[usize]| g.has_edge(path[0], path[n - 1]))
            }
            HamProperty::Traceable => (0..n).any(|s| from(g, s, &|_| true)),
            HamProperty::TraceableFrom(s) => from(g, s, &|_| true),
            HamProperty::TraceableFromEveryVertex => (0..n).all(|s| from(g, s, &|_| true)),
            HamProperty::HamiltonConnected => {
                (0..n).all(|u| (u + 1..n).all(|v| has_path_between(g, u, v)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BipartiteGraph;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    fn prism() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    #[test]
    fn path_between_examples() {
        let k4 = Graph::complete(4);
        let a = ham_path_between(&k4, 0, 1, &cfg()).unwrap();
        assert!(a.holds);
        let w = a.witness.unwrap();
        assert!(validate_witness(&k4, HamProperty::TraceableFrom(0), &w));
        if let Witness::Path(p) = &w {
            assert_eq!((p[0], p[3]), (0, 1));
        }
        let k33 = BipartiteGraph::complete(3, 3).to_graph();
        assert!(!ham_path_between(&k33, 0, 1, &cfg()).unwrap().holds);
        assert!(ham_path_between(&k33, 0, 3, &cfg()).unwrap().holds);

        let ex = Graph::complete(2).join(&Graph::complete(6).disjoint_union(&Graph::complete(1)));
        assert!(!ham_path_between(&ex, 0, 1, &cfg()).unwrap().holds);
    }

    #[test]
    fn property_examples() {
        let b62 = BipartiteGraph::empty(2, 4)
            .sqcup(&BipartiteGraph::complete(4, 2))
            .to_graph();
        assert!(!check_property(&b62, HamProperty::Hamiltonian, &cfg()).unwrap().holds);
        let c62 = BipartiteGraph::empty(2, 4)
            .sqcup(&BipartiteGraph::complete(3, 2))
            .to_graph();
        assert!(!check_property(&c62, HamProperty::Traceable, &cfg()).unwrap().holds);
        assert!(check_property(&prism(), HamProperty::HamiltonConnected, &cfg()).unwrap().holds);
        let k33 = BipartiteGraph::complete(3, 3).to_graph();
        assert!(!check_property(&k33, HamProperty::HamiltonConnected, &cfg()).unwrap().holds);
    }

    #[test]
    fn witnesses_validate() {
        let g = prism();
        for p in [
            HamProperty::Hamiltonian,
            HamProperty::Traceable,
            HamProperty::TraceableFrom(4),
        ] {
            let a = check_property(&g, p, &cfg()).unwrap();
            assert!(a.holds);
            assert!(validate_witness(&g, p, a.witness.as_ref().unwrap()));
        }
    }

    #[test]
    fn small_orders() {
        let k1 = Graph::complete(1);
        assert!(check_property(&k1, HamProperty::Traceable, &cfg()).unwrap().holds);
        assert!(check_property(&k1, HamProperty::HamiltonConnected, &cfg()).unwrap().holds);
        assert!(matches!(
            check_property(&Graph::complete(2), HamProperty::Hamiltonian, &cfg()),
            Err(Error::DomainError(_))
        ));
        assert!(check_property(&Graph::complete(2), HamProperty::HamiltonConnected, &cfg()).unwrap().holds);
        assert!(!check_property(&Graph::empty(2), HamProperty::HamiltonConnected, &cfg()).unwrap().holds);
        assert!(check_property(&Graph::empty(0), HamProperty::Traceable, &cfg()).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::cycle(9);
        let small = OracleConfig { cap: 8 };
        assert_eq!(
            check_property(&g, HamProperty::Traceable, &small).unwrap_err(),
            Error::TooLarge { order: 9, cap: 8 }
        );
    }

    #[test]
    fn cut_vertex_witness() {
        let bowtie = Graph::complete(2)
            .disjoint_union(&Graph::complete(2))
            .add_cone();
        let a = check_property(&bowtie, HamProperty::HamiltonConnected, &cfg()).unwrap();
        assert!(!a.holds);
        if let Some(Witness::FailingPair(u, v)) = a.witness {
            assert!(!ham_path_between(&bowtie, u, v, &cfg()).unwrap().holds);
        } else {
            panic!("expected failing pair");
        }
        let tfev = check_property(&bowtie, HamProperty::TraceableFromEveryVertex, &cfg()).unwrap();
        assert_eq!(tfev.witness, Some(Witness::FailingVertex(4)));
    }

    #[test]
    fn backtracking_agrees_on_examples() {
        for g in [prism(), Graph::cycle(7), Graph::path(5), Graph::complete(5)] {
            for p in [
                HamProperty::Hamiltonian,
                HamProperty::Traceable,
                HamProperty::HamiltonConnected,
                HamProperty::TraceableFromEveryVertex,
            ] {
                assert_eq!(
                    check_property(&g, p, &cfg()).unwrap().holds,
                    backtrack::check_property(&g, p),
                    "{p:?} on {g:?}"
                );
            }
        }
    }
}
