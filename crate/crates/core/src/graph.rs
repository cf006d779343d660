//! Immutable simple graphs and bipartite graphs with fixed, ordered parts.
//!
//! Vertices are positional (`0..n`). All operations return new values.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A simple undirected graph stored as one adjacency bit row per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BitSet>,
}

/// Summary statistics of a non-empty graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    /// Degrees sorted ascending.
    pub degree_sequence: Vec<usize>,
    pub min_degree: usize,
    pub edge_count: usize,
    pub connected: bool,
    pub two_connected: bool,
}

impl Graph {
    /// The edgeless graph `O_n`.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![BitSet::new(n); n],
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| {
                let mut row = BitSet::full(n);
                row.remove(v);
                row
            })
            .collect();
        Graph { adj }
    }

    /// The cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle edges are valid")
    }

    /// The path `P_n`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    /// Builds a graph from an edge list; duplicate edges are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::InvalidEdge(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric with an empty diagonal.
    pub(crate) fn from_rows(adj: Vec<BitSet>) -> Self {
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, row)| !row.contains(u) && row.iter().all(|v| adj[v].contains(u))));
        Graph { adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BitSet::count).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(BitSet::count).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(BitSet::count).max()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn neighbor_set(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    /// Neighbourhood of `v` as a machine word. Only valid for `order() <= 64`.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        debug_assert!(self.order() <= 64);
        self.adj[v].first_word()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Nonadjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut r = row.not();
                r.remove(v);
                r
            })
            .collect();
        Graph { adj }
    }

    /// Disjoint union `self + other`; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let (n1, n) = (self.order(), self.order() + other.order());
        let mut adj: Vec<BitSet> = self.adj.iter().map(|r| r.resized(n)).collect();
        adj.extend(other.adj.iter().map(|r| r.shifted(n1, n)));
        Graph { adj }
    }

    /// Join `self ∨ other`: the disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Graph {
        let (n1, n) = (self.order(), self.order() + other.order());
        let mut g = self.disjoint_union(other);
        for u in 0..n1 {
            for v in n1..n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    /// `G ∨ K_1`; the new vertex is the last one.
    pub fn add_cone(&self) -> Graph {
        self.join(&Graph::empty(1))
    }

    /// Copy with the edge `uv` added. Panics on invalid vertices.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u != v && u < self.order() && v < self.order());
        let mut g = self.clone();
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        g
    }

    /// Copy with the edge `uv` removed (if present).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        g
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut adj = vec![BitSet::new(k); k];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i].insert(j);
                }
            }
        }
        Graph { adj }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        assert_eq!(perm.len(), n);
        let mut adj = vec![BitSet::new(n); n];
        for u in 0..n {
            for v in self.adj[u].iter() {
                adj[perm[u]].insert(perm[v]);
            }
        }
        Graph { adj }
    }

    /// `true` when every edge of `self` is an edge of `other` (same vertex labels).
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.order() == other.order()
            && (0..self.order()).all(|v| self.adj[v].iter().all(|u| other.has_edge(u, v)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(None)
    }

    fn components_avoiding(&self, removed: Option<usize>) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        if let Some(r) = removed {
            seen[r] = true;
        }
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.adj[u].iter() {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// 2-connected: more than two vertices, connected, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        let n = self.order();
        n > 2
            && self.is_connected()
            && (0..n).all(|v| self.components_avoiding(Some(v)).len() == 1)
    }

    /// A proper 2-colouring (`true` for colour 1), if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let cu = color[u].expect("coloured on push");
                for v in self.adj[u].iter() {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            stack.push(v);
                        }
                        Some(cv) if cv == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn stats(&self) -> Result<GraphStats> {
        if self.order() == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut degree_sequence = self.degrees();
        degree_sequence.sort_unstable();
        Ok(GraphStats {
            min_degree: degree_sequence[0],
            edge_count: degree_sequence.iter().sum::<usize>() / 2,
            degree_sequence,
            connected: self.is_connected(),
            two_connected: self.is_two_connected(),
        })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

/// One side of a bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Part {
    X,
    Y,
}

/// A bipartite graph `(X, Y; E)` with fixed, ordered parts.
///
/// `O_{a,b}` and `O_{b,a}` are different values unless `a == b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    y_size: usize,
    /// `rows[x]` holds the Y-neighbours of `x`.
    rows: Vec<BitSet>,
}

impl BipartiteGraph {
    pub fn empty(x_size: usize, y_size: usize) -> Self {
        BipartiteGraph {
            y_size,
            rows: vec![BitSet::new(y_size); x_size],
        }
    }

    pub fn complete(x_size: usize, y_size: usize) -> Self {
        BipartiteGraph {
            y_size,
            rows: vec![BitSet::full(y_size); x_size],
        }
    }

    /// Edges are `(x, y)` pairs of part-local indices.
    pub fn from_edges(x_size: usize, y_size: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = BipartiteGraph::empty(x_size, y_size);
        for &(x, y) in edges {
            if x >= x_size {
                return Err(Error::InvalidVertex {
                    vertex: x,
                    order: x_size,
                });
            }
            if y >= y_size {
                return Err(Error::InvalidVertex {
                    vertex: x_size + y,
                    order: x_size + y_size,
                });
            }
            b.rows[x].insert(y);
        }
        Ok(b)
    }

    /// Reads a bipartite graph whose first `x_size` vertices form X.
    pub fn from_graph(g: &Graph, x_size: usize) -> Result<Self> {
        let n = g.order();
        if x_size > n {
            return Err(Error::DomainError(format!(
                "part size {x_size} exceeds order {n}"
            )));
        }
        let mut b = BipartiteGraph::empty(x_size, n - x_size);
        for (u, v) in g.edges() {
            if v < x_size || u >= x_size {
                return Err(Error::DomainError(format!(
                    "edge {u}-{v} lies inside one part"
                )));
            }
            b.rows[u].insert(v - x_size);
        }
        Ok(b)
    }

    #[inline]
    pub fn x_size(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn y_size(&self) -> usize {
        self.y_size
    }

    pub fn order(&self) -> usize {
        self.x_size() + self.y_size
    }

    pub fn part_size(&self, part: Part) -> usize {
        match part {
            Part::X => self.x_size(),
            Part::Y => self.y_size,
        }
    }

    pub fn is_balanced(&self) -> bool {
        self.x_size() == self.y_size
    }

    /// `|X| = |Y| - 1`.
    pub fn is_nearly_balanced(&self) -> bool {
        self.x_size() + 1 == self.y_size
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum()
    }

    #[inline]
    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn y_neighbors(&self, x: usize) -> &BitSet {
        &self.rows[x]
    }

    pub fn x_neighbors(&self, y: usize) -> BitSet {
        let mut s = BitSet::new(self.x_size());
        for (x, row) in self.rows.iter().enumerate() {
            if row.contains(y) {
                s.insert(x);
            }
        }
        s
    }

    pub fn degree(&self, part: Part, i: usize) -> usize {
        match part {
            Part::X => self.rows[i].count(),
            Part::Y => self.rows.iter().filter(|r| r.contains(i)).count(),
        }
    }

    pub fn x_degrees(&self) -> Vec<usize> {
        self.rows.iter().map(BitSet::count).collect()
    }

    pub fn y_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.y_size];
        for row in &self.rows {
            for y in row.iter() {
                d[y] += 1;
            }
        }
        d
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.x_degrees().into_iter().chain(self.y_degrees()).min()
    }

    /// Edges `(x, y)` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().map(move |y| (x, y)))
            .collect()
    }

    /// Complement across the bipartition; parts unchanged.
    pub fn quasi_complement(&self) -> BipartiteGraph {
        BipartiteGraph {
            y_size: self.y_size,
            rows: self.rows.iter().map(BitSet::not).collect(),
        }
    }

    /// `self ⊔ other`: parts `(X1 ∪ X2, Y1 ∪ Y2)` with all of `X1 × Y2` and `Y1 × X2` added.
    pub fn sqcup(&self, other: &BipartiteGraph) -> BipartiteGraph {
        let (y1, y) = (self.y_size, self.y_size + other.y_size);
        let mut rows: Vec<BitSet> = self
            .rows
            .iter()
            .map(|r| {
                let mut row = r.resized(y);
                for j in y1..y {
                    row.insert(j);
                }
                row
            })
            .collect();
        rows.extend(other.rows.iter().map(|r| {
            let mut row = r.shifted(y1, y);
            for j in 0..y1 {
                row.insert(j);
            }
            row
        }));
        BipartiteGraph { y_size: y, rows }
    }

    /// Adds one vertex to `part`, adjacent to every vertex of the opposite part.
    /// The new vertex is last within its part.
    pub fn add_cone_to_part(&self, part: Part) -> BipartiteGraph {
        match part {
            Part::X => {
                let mut b = self.clone();
                b.rows.push(BitSet::full(self.y_size));
                b
            }
            Part::Y => BipartiteGraph {
                y_size: self.y_size + 1,
                rows: self
                    .rows
                    .iter()
                    .map(|r| {
                        let mut row = r.resized(self.y_size + 1);
                        row.insert(self.y_size);
                        row
                    })
                    .collect(),
            },
        }
    }

    /// Removes vertex `i` from `part`; later vertices of that part shift down.
    pub fn delete_vertex(&self, part: Part, i: usize) -> BipartiteGraph {
        match part {
            Part::X => {
                let mut b = self.clone();
                b.rows.remove(i);
                b
            }
            Part::Y => {
                let keep: Vec<usize> = (0..self.y_size).filter(|&y| y != i).collect();
                BipartiteGraph {
                    y_size: self.y_size - 1,
                    rows: self
                        .rows
                        .iter()
                        .map(|r| {
                            let mut row = BitSet::new(keep.len());
                            for (j, &y) in keep.iter().enumerate() {
                                if r.contains(y) {
                                    row.insert(j);
                                }
                            }
                            row
                        })
                        .collect(),
                }
            }
        }
    }

    /// Exchanges the roles of X and Y.
    pub fn swap_parts(&self) -> BipartiteGraph {
        let mut rows = vec![BitSet::new(self.x_size()); self.y_size];
        for (x, row) in self.rows.iter().enumerate() {
            for y in row.iter() {
                rows[y].insert(x);
            }
        }
        BipartiteGraph {
            y_size: self.x_size(),
            rows,
        }
    }

    pub fn without_edge(&self, x: usize, y: usize) -> BipartiteGraph {
        let mut b = self.clone();
        b.rows[x].remove(y);
        b
    }

    pub fn with_edge(&self, x: usize, y: usize) -> BipartiteGraph {
        let mut b = self.clone();
        b.rows[x].insert(y);
        b
    }

    /// Permutes X by `px` and Y by `py` (`new = p[old]`).
    pub fn relabel(&self, px: &[usize], py: &[usize]) -> BipartiteGraph {
        let mut b = BipartiteGraph::empty(self.x_size(), self.y_size);
        for (x, y) in self.edges() {
            b.rows[px[x]].insert(py[y]);
        }
        b
    }

    /// `true` when every edge of `self` is an edge of `other` (same labels).
    pub fn is_spanning_subgraph_of(&self, other: &BipartiteGraph) -> bool {
        self.x_size() == other.x_size()
            && self.y_size == other.y_size
            && self
                .rows
                .iter()
                .zip(&other.rows)
                .all(|(a, b)| a.intersection_count(b) == a.count())
    }

    /// Embeds as a [`Graph`] of order `|X| + |Y|` with the X vertices first.
    pub fn to_graph(&self) -> Graph {
        let x = self.x_size();
        let n = self.order();
        let mut adj = vec![BitSet::new(n); n];
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.iter() {
                adj[i].insert(x + j);
                adj[x + j].insert(i);
            }
        }
        Graph::from_rows(adj)
    }

    /// Part mask of the embedding: `true` for X vertices.
    pub fn part_mask(&self) -> Vec<bool> {
        (0..self.order()).map(|v| v < self.x_size()).collect()
    }
}

impl std::fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "BipartiteGraph(|X|={}, |Y|={}, edges={:?})",
            self.x_size(),
            self.y_size,
            self.edges()
        )
    }
}

/// Free-function forms of the graph algebra.
pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

pub fn quasi_complement(b: &BipartiteGraph) -> BipartiteGraph {
    b.quasi_complement()
}

pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    g1.join(g2)
}

pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    g1.disjoint_union(g2)
}

pub fn bipartite_sqcup(b1: &BipartiteGraph, b2: &BipartiteGraph) -> BipartiteGraph {
    b1.sqcup(b2)
}

pub fn embed_bipartite(b: &BipartiteGraph) -> Graph {
    b.to_graph()
}

pub fn graph_stats(g: &Graph) -> Result<GraphStats> {
    g.stats()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k_bip(a: usize, b: usize) -> Graph {
        Graph::empty(a).join(&Graph::empty(b))
    }

    #[test]
    fn from_edges_basics() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 1)]).unwrap();
        assert_eq!(p3.stats().unwrap().degree_sequence, vec![1, 1, 2]);
        assert_eq!(p3.edge_count(), 2);
        let all: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        assert_eq!(Graph::from_edges(4, &all).unwrap(), Graph::complete(4));
        assert_eq!(Graph::from_edges(4, &all).unwrap().edge_count(), 6);
        assert_eq!(Graph::from_edges(0, &[]).unwrap().edge_count(), 0);
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(Error::InvalidEdge(1))
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::InvalidVertex {
                vertex: 3,
                order: 3
            })
        );
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
        let p3 = Graph::path(3);
        assert_eq!(p3.complement().complement(), p3);
        let c = k_bip(2, 3).complement();
        assert_eq!(c, Graph::complete(2).disjoint_union(&Graph::complete(3)));
        assert_eq!(c.edge_count(), 4);
    }

    #[test]
    fn join_examples() {
        assert_eq!(k_bip(2, 3).edge_count(), 6);
        let g = Graph::complete(2).join(&Graph::complete(6).disjoint_union(&Graph::complete(1)));
        assert_eq!(g.order(), 9);
        assert_eq!(g.edge_count(), 30);
        let p = Graph::path(4);
        assert_eq!(Graph::empty(1).join(&p).relabel(&[4, 0, 1, 2, 3]), p.add_cone());
    }

    #[test]
    fn union_examples() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(g.components().len(), 2);
        assert_eq!(g.edge_count(), 6);
        let p = Graph::path(5);
        assert_eq!(p.disjoint_union(&Graph::empty(0)), p);
        let h = Graph::complete(4).disjoint_union(&Graph::complete(4));
        assert_eq!(h.complement(), k_bip(4, 4));
    }

    #[test]
    fn sqcup_examples() {
        let b62 = BipartiteGraph::empty(2, 4).sqcup(&BipartiteGraph::complete(4, 2));
        assert_eq!(b62.edge_count(), 28);
        assert!(b62.is_balanced());
        let c62 = BipartiteGraph::empty(2, 4).sqcup(&BipartiteGraph::complete(3, 2));
        assert_eq!(c62.edge_count(), 22);
        assert!(c62.is_nearly_balanced());
        // Only X1 × Y2 and Y1 × X2 are added, so two empty K_{1,1}-shells give a
        // perfect matching rather than a 4-cycle.
        let m = BipartiteGraph::empty(1, 1).sqcup(&BipartiteGraph::empty(1, 1));
        assert_eq!(m, BipartiteGraph::from_edges(2, 2, &[(0, 1), (1, 0)]).unwrap());
        let c4 = BipartiteGraph::complete(1, 1).sqcup(&BipartiteGraph::complete(1, 1));
        assert_eq!(c4, BipartiteGraph::complete(2, 2));
    }

    #[test]
    fn quasi_complement_examples() {
        assert_eq!(
            BipartiteGraph::complete(2, 3).quasi_complement(),
            BipartiteGraph::empty(2, 3)
        );
        let b = BipartiteGraph::from_edges(2, 3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(b.quasi_complement().quasi_complement(), b);
        assert_eq!(b.quasi_complement().edge_count(), 4);
    }

    #[test]
    fn stats_examples() {
        let c62 = BipartiteGraph::empty(2, 4)
            .sqcup(&BipartiteGraph::complete(3, 2))
            .to_graph();
        let s = c62.stats().unwrap();
        assert_eq!(s.degree_sequence, vec![2, 2, 3, 3, 3, 3, 5, 5, 6, 6, 6]);
        assert_eq!(s.min_degree, 2);
        assert_eq!(s.edge_count, 22);
        let k5 = Graph::complete(5).stats().unwrap();
        assert_eq!(k5.degree_sequence, vec![4; 5]);
        assert!(k5.two_connected);
        let p3 = Graph::path(3).stats().unwrap();
        assert!(p3.connected && !p3.two_connected);
        assert_eq!(Graph::empty(0).stats(), Err(Error::EmptyGraph));
        assert!(!Graph::complete(2).is_two_connected());
    }

    #[test]
    fn cone_examples() {
        let star = Graph::empty(3).add_cone();
        assert_eq!(star.stats().unwrap().degree_sequence, vec![1, 1, 1, 3]);
        assert_eq!(Graph::complete(4).add_cone(), Graph::complete(5));
        let c = BipartiteGraph::empty(2, 4).sqcup(&BipartiteGraph::complete(3, 2));
        let coned = c.add_cone_to_part(Part::X);
        assert!(coned.is_balanced());
        assert_eq!(coned.order(), 12);
        assert_eq!(coned.edge_count(), 22 + 6);
    }

    #[test]
    fn embed_examples() {
        let k33 = BipartiteGraph::complete(3, 3).to_graph();
        assert_eq!(k33.degrees(), vec![3; 6]);
        assert_eq!(BipartiteGraph::empty(2, 3).to_graph(), Graph::empty(5));
        let c = BipartiteGraph::empty(2, 4).sqcup(&BipartiteGraph::complete(3, 2));
        assert_eq!(c.to_graph().min_degree(), Some(2));
        let back = BipartiteGraph::from_graph(&c.to_graph(), c.x_size()).unwrap();
        assert_eq!(back, c);
        assert!(BipartiteGraph::from_graph(&Graph::complete(3), 1).is_err());
    }

    #[test]
    fn part_operations() {
        let b = BipartiteGraph::from_edges(2, 3, &[(0, 0), (1, 2)]).unwrap();
        assert_eq!(b.swap_parts().swap_parts(), b);
        assert_eq!(b.swap_parts().x_size(), 3);
        assert_eq!(b.delete_vertex(Part::Y, 0).edges(), vec![(1, 1)]);
        assert_eq!(b.delete_vertex(Part::X, 0).edges(), vec![(0, 2)]);
        assert_eq!(b.y_degrees(), vec![1, 0, 1]);
        assert_eq!(b.add_cone_to_part(Part::Y).y_degrees(), vec![1, 0, 1, 2]);
    }

    #[test]
    fn two_connectivity() {
        assert!(Graph::cycle(5).is_two_connected());
        assert!(!Graph::path(5).is_two_connected());
        // bowtie: the shared vertex is a cut vertex
        let bowtie = Graph::complete(2)
            .disjoint_union(&Graph::complete(2))
            .add_cone();
        assert!(bowtie.is_connected() && !bowtie.is_two_connected());
    }
}
