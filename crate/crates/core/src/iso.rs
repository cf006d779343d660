//! Small-graph isomorphism by individualization–refinement.
//!
//! Only used to recognise the paper's fixed exceptional graphs, which are
//! highly symmetric joins of cliques and empty graphs; refinement collapses those
//! quickly and a single individualization per orbit is usually enough.

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Joint colour refinement on `g ⊔ h`. Vertices `0..n` belong to `g`, `n..2n` to `h`.
fn refine(g: &Graph, h: &Graph, colors: &mut [u32]) {
    let n = g.order();
    let nbrs = |v: usize| -> Vec<usize> {
        if v < n {
            g.neighbors(v).collect()
        } else {
            h.neighbors(v - n).map(|u| u + n).collect()
        }
    };
    let adjacency: Vec<Vec<usize>> = (0..2 * n).map(nbrs).collect();
    let mut classes = count_classes(colors);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..2 * n)
            .map(|v| {
                let mut s: Vec<u32> = adjacency[v].iter().map(|&u| colors[u]).collect();
                s.sort_unstable();
                (colors[v], s)
            })
            .collect();
        let mut ids: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
        for s in &sigs {
            let next = ids.len() as u32;
            ids.entry(s).or_insert(next);
        }
        // Re-number by sorted signature so both sides get identical colours.
        let ordered: BTreeMap<&(u32, Vec<u32>), u32> = ids
            .keys()
            .enumerate()
            .map(|(i, k)| (*k, i as u32))
            .collect();
        for v in 0..2 * n {
            colors[v] = ordered[&sigs[v]];
        }
        let now = ordered.len();
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn balanced(colors: &[u32], n: usize) -> bool {
    let mut left: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &colors[..n] {
        *left.entry(c).or_default() += 1;
    }
    let mut right: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &colors[n..] {
        *right.entry(c).or_default() += 1;
    }
    left == right
}

fn search(g: &Graph, h: &Graph, mut colors: Vec<u32>) -> Option<Vec<usize>> {
    let n = g.order();
    refine(g, h, &mut colors);
    if !balanced(&colors, n) {
        return None;
    }
    // Pick the smallest non-singleton class.
    let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &colors[..n] {
        *sizes.entry(c).or_default() += 1;
    }
    let target = sizes
        .iter()
        .filter(|(_, &s)| s > 1)
        .min_by_key(|(&c, &s)| (s, c))
        .map(|(&c, _)| c);
    let Some(c) = target else {
        let mut mapping = vec![0; n];
        for v in 0..n {
            mapping[v] = (n..2 * n).find(|&w| colors[w] == colors[v])? - n;
        }
        let ok = g
            .edges()
            .iter()
            .all(|&(u, v)| h.has_edge(mapping[u], mapping[v]))
            && g.edge_count() == h.edge_count();
        return ok.then_some(mapping);
    };
    let fresh = colors.iter().copied().max().unwrap_or(0) + 1;
    let v = (0..n).find(|&v| colors[v] == c)?;
    for w in (n..2 * n).filter(|&w| colors[w] == c) {
        let mut next = colors.clone();
        next[v] = fresh;
        next[w] = fresh;
        if let Some(m) = search(g, h, next) {
            return Some(m);
        }
    }
    None
}

/// An isomorphism `g → h` preserving the given vertex colours, as
/// `mapping[v_in_g] = v_in_h`.
pub fn find_isomorphism(
    g: &Graph,
    h: &Graph,
    colors_g: &[u32],
    colors_h: &[u32],
) -> Option<Vec<usize>> {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let colors: Vec<u32> = colors_g.iter().chain(colors_h).copied().collect();
    search(g, h, colors)
}

pub fn isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    find_isomorphism(g, h, &vec![0; n], &vec![0; h.order()])
}
