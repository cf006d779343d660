//! Constructors and membership tests for the named graph families.
//!
//! Bipartite families are built with the `⊔` operator and keep the part order
//! `(X1 ∪ X2, Y1 ∪ Y2)`. So for `C_n^k` the part X is `[X1 (k) | X2 (n−k−1)]` and
//! Y is `[Y1 (n−k) | Y2 (k)]`. X1 is adjacent exactly to Y2, and X2 to all of Y.

use std::borrow::Cow;
use std::fmt;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph, Part};
use crate::io::parse_graph6;
use crate::iso::{find_isomorphism, isomorphic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum FamilySpec {
    /// `K_2 ∨ (K_{n−k−1} + K_{k−1})`.
    K2JoinSplit { n: usize, k: usize },
    /// `K_1 ∨ (K_{n−k−1} + K_k)`.
    K1JoinSplit { n: usize, k: usize },
    /// `(K_{k−1} + K_{n−k−1}) ∨ K_2`.
    TwoCliquesJoinK2 { n: usize, k: usize },
    /// `(K_{k−1} + K_{n−k−1}) ∨ O_2`.
    TwoCliquesJoinO2 { n: usize, k: usize },
    /// `K_{k−1,n−k−1} ∨ K_2`, the literal wording of one exceptional graph.
    BipartiteJoinK2 { n: usize, k: usize },
    /// `K_{k−1,n−k−1} ∨ O_2`.
    BipartiteJoinO2 { n: usize, k: usize },
    /// `K_{k,n−k−1} ∨ K_1`.
    BipartiteJoinK1 { n: usize, k: usize },
    /// `B_n^k = O_{k,n−k} ⊔ K_{n−k,k}`.
    Bnk { n: usize, k: usize },
    /// `C_n^k = O_{k,n−k} ⊔ K_{n−k−1,k}`.
    Cnk { n: usize, k: usize },
    ESn { n: usize },
    EWn { n: usize },
    /// `{O_{k,n−k} ⊔ G(X, Y) : |X| = n−k, |Y| = k}`.
    ScriptB { n: usize, k: usize },
    /// `{O_{k,n−k} ⊔ G(X, Y) : |X| = n−k−1, |Y| = k}`.
    ScriptC { n: usize, k: usize },
    Gamma1,
    Gamma2,
    /// `Γ_2 − v` with `d(v) = 4`, oriented so that `|X| = |Y| − 1`.
    Gamma2MinusV,
    /// `K_{n/2,n/2}`.
    CompleteBipartiteHalf { n: usize },
}

impl FamilySpec {
    pub fn is_set_valued(&self) -> bool {
        matches!(
            self,
            FamilySpec::ESn { .. }
                | FamilySpec::EWn { .. }
                | FamilySpec::ScriptB { .. }
                | FamilySpec::ScriptC { .. }
        )
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(
            self,
            FamilySpec::Bnk { .. }
                | FamilySpec::Cnk { .. }
                | FamilySpec::ScriptB { .. }
                | FamilySpec::ScriptC { .. }
                | FamilySpec::Gamma1
                | FamilySpec::Gamma2
                | FamilySpec::Gamma2MinusV
                | FamilySpec::CompleteBipartiteHalf { .. }
        )
    }

    /// Identifier without parameters, as accepted by [`FamilySpec::from_name`].
    pub fn id(&self) -> &'static str {
        match self {
            FamilySpec::K2JoinSplit { .. } => "K2JoinSplit",
            FamilySpec::K1JoinSplit { .. } => "K1JoinSplit",
            FamilySpec::TwoCliquesJoinK2 { .. } => "TwoCliquesJoinK2",
            FamilySpec::TwoCliquesJoinO2 { .. } => "TwoCliquesJoinO2",
            FamilySpec::BipartiteJoinK2 { .. } => "BipartiteJoinK2",
            FamilySpec::BipartiteJoinO2 { .. } => "BipartiteJoinO2",
            FamilySpec::BipartiteJoinK1 { .. } => "BipartiteJoinK1",
            FamilySpec::Bnk { .. } => "Bnk",
            FamilySpec::Cnk { .. } => "Cnk",
            FamilySpec::ESn { .. } => "ESn",
            FamilySpec::EWn { .. } => "EWn",
            FamilySpec::ScriptB { .. } => "ScriptB",
            FamilySpec::ScriptC { .. } => "ScriptC",
            FamilySpec::Gamma1 => "Gamma1",
            FamilySpec::Gamma2 => "Gamma2",
            FamilySpec::Gamma2MinusV => "Gamma2MinusV",
            FamilySpec::CompleteBipartiteHalf { .. } => "CompleteBipartiteHalf",
        }
    }

    /// Builds a spec from its identifier and the parameters it needs.
    pub fn from_name(name: &str, n: Option<usize>, k: Option<usize>) -> Result<FamilySpec> {
        let need = |v: Option<usize>, what: &str| {
            v.ok_or_else(|| Error::InvalidFamilyParams(format!("{name} needs --{what}")))
        };
        let spec = match name {
            "K2JoinSplit" => FamilySpec::K2JoinSplit { n: need(n, "n")?, k: need(k, "k")? },
            "K1JoinSplit" => FamilySpec::K1JoinSplit { n: need(n, "n")?, k: need(k, "k")? },
            "TwoCliquesJoinK2" => FamilySpec::TwoCliquesJoinK2 { n: need(n, "n")?, k: need(k, "k")? },
            "TwoCliquesJoinO2" => FamilySpec::TwoCliquesJoinO2 { n: need(n, "n")?, k: need(k, "k")? },
            "BipartiteJoinK2" => FamilySpec::BipartiteJoinK2 { n: need(n, "n")?, k: need(k, "k")? },
            "BipartiteJoinO2" => FamilySpec::BipartiteJoinO2 { n: need(n, "n")?, k: need(k, "k")? },
            "BipartiteJoinK1" => FamilySpec::BipartiteJoinK1 { n: need(n, "n")?, k: need(k, "k")? },
            "Bnk" => FamilySpec::Bnk { n: need(n, "n")?, k: need(k, "k")? },
            "Cnk" => FamilySpec::Cnk { n: need(n, "n")?, k: need(k, "k")? },
            "ESn" => FamilySpec::ESn { n: need(n, "n")? },
            "EWn" => FamilySpec::EWn { n: need(n, "n")? },
            "ScriptB" => FamilySpec::ScriptB { n: need(n, "n")?, k: need(k, "k")? },
            "ScriptC" => FamilySpec::ScriptC { n: need(n, "n")?, k: need(k, "k")? },
            "Gamma1" => FamilySpec::Gamma1,
            "Gamma2" => FamilySpec::Gamma2,
            "Gamma2MinusV" => FamilySpec::Gamma2MinusV,
            "CompleteBipartiteHalf" => FamilySpec::CompleteBipartiteHalf { n: need(n, "n")? },
            other => return Err(Error::InvalidFamilyParams(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamilyParams(format!("{self}: {msg}")));
        match *self {
            FamilySpec::K2JoinSplit { n, k }
            | FamilySpec::TwoCliquesJoinK2 { n, k }
            | FamilySpec::TwoCliquesJoinO2 { n, k }
            | FamilySpec::BipartiteJoinK2 { n, k }
            | FamilySpec::BipartiteJoinO2 { n, k } => {
                if k < 2 || n < k + 2 {
                    return bad("requires k ≥ 2 and n ≥ k + 2".into());
                }
            }
            FamilySpec::K1JoinSplit { n, k } | FamilySpec::BipartiteJoinK1 { n, k } => {
                if k < 1 || n < k + 2 {
                    return bad("requires k ≥ 1 and n ≥ k + 2".into());
                }
            }
            FamilySpec::Bnk { n, k }
            | FamilySpec::Cnk { n, k }
            | FamilySpec::ScriptB { n, k }
            | FamilySpec::ScriptC { n, k } => {
                if k < 1 || 2 * k > n {
                    return bad("requires 1 ≤ k ≤ n/2".into());
                }
            }
            FamilySpec::ESn { n } | FamilySpec::CompleteBipartiteHalf { n } => {
                if n < 2 || n % 2 != 0 {
                    return bad("requires even n ≥ 2".into());
                }
            }
            FamilySpec::EWn { n } => {
                if n % 2 != 1 {
                    return bad("requires odd n".into());
                }
            }
            FamilySpec::Gamma1 | FamilySpec::Gamma2 | FamilySpec::Gamma2MinusV => {}
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::K2JoinSplit { n, k }
            | FamilySpec::K1JoinSplit { n, k }
            | FamilySpec::TwoCliquesJoinK2 { n, k }
            | FamilySpec::TwoCliquesJoinO2 { n, k }
            | FamilySpec::BipartiteJoinK2 { n, k }
            | FamilySpec::BipartiteJoinO2 { n, k }
            | FamilySpec::BipartiteJoinK1 { n, k }
            | FamilySpec::Bnk { n, k }
            | FamilySpec::Cnk { n, k }
            | FamilySpec::ScriptB { n, k }
            | FamilySpec::ScriptC { n, k } => write!(f, "{}({n},{k})", self.id()),
            FamilySpec::ESn { n } | FamilySpec::EWn { n } | FamilySpec::CompleteBipartiteHalf { n } => {
                write!(f, "{}({n})", self.id())
            }
            FamilySpec::Gamma1 | FamilySpec::Gamma2 | FamilySpec::Gamma2MinusV => f.write_str(self.id()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FamilyGraph {
    Simple(Graph),
    Bipartite(BipartiteGraph),
}

impl FamilyGraph {
    /// The plain graph (bipartite graphs embedded with X first).
    pub fn graph(&self) -> Cow<'_, Graph> {
        match self {
            FamilyGraph::Simple(g) => Cow::Borrowed(g),
            FamilyGraph::Bipartite(b) => Cow::Owned(b.to_graph()),
        }
    }

    pub fn as_bipartite(&self) -> Option<&BipartiteGraph> {
        match self {
            FamilyGraph::Bipartite(b) => Some(b),
            FamilyGraph::Simple(_) => None,
        }
    }

    pub fn as_ref(&self) -> GraphRef<'_> {
        match self {
            FamilyGraph::Simple(g) => GraphRef::Simple(g),
            FamilyGraph::Bipartite(b) => GraphRef::Bipartite(b),
        }
    }
}

/// Borrowed input to a membership test.
#[derive(Debug, Clone, Copy)]
pub enum GraphRef<'a> {
    Simple(&'a Graph),
    Bipartite(&'a BipartiteGraph),
}

impl GraphRef<'_> {
    pub fn graph(&self) -> Cow<'_, Graph> {
        match *self {
            GraphRef::Simple(g) => Cow::Borrowed(g),
            GraphRef::Bipartite(b) => Cow::Owned(b.to_graph()),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            GraphRef::Simple(g) => g.order(),
            GraphRef::Bipartite(b) => b.order(),
        }
    }
}

#[derive(Deserialize)]
struct GammaFile {
    graphs: Vec<GammaEntry>,
}

#[derive(Deserialize)]
struct GammaEntry {
    name: String,
    graph6: String,
    x_size: usize,
}

const GAMMA_DATA: &str = include_str!("../data/gamma.json");

/// Γ₁ or Γ₂ from the embedded data file.
pub fn gamma_graph(name: &str) -> Result<BipartiteGraph> {
    static PARSED: OnceLock<std::result::Result<Vec<(String, BipartiteGraph)>, String>> = OnceLock::new();
    let all = PARSED.get_or_init(|| {
        let file: GammaFile = serde_json::from_str(GAMMA_DATA).map_err(|e| e.to_string())?;
        file.graphs
            .into_iter()
            .map(|e| {
                let g = parse_graph6(&e.graph6).map_err(|err| err.to_string())?;
                let b = BipartiteGraph::from_graph(&g, e.x_size).map_err(|err| err.to_string())?;
                Ok((e.name, b))
            })
            .collect()
    });
    match all {
        Ok(list) => list
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, b)| b.clone())
            .ok_or_else(|| Error::UnavailableFamily(format!("{name} missing from the data file"))),
        Err(e) => Err(Error::UnavailableFamily(format!("Γ data unreadable: {e}"))),
    }
}

/// Every `Γ₂ − v` with `d(v) = 4`, oriented so `|X| = |Y| − 1`, together with
/// the deleted vertex.
pub fn gamma2_deletions() -> Result<Vec<((Part, usize), BipartiteGraph)>> {
    let g2 = gamma_graph("Gamma2")?;
    let mut out = Vec::new();
    for x in 0..g2.x_size() {
        if g2.degree(Part::X, x) == 4 {
            out.push(((Part::X, x), g2.delete_vertex(Part::X, x)));
        }
    }
    for y in 0..g2.y_size() {
        if g2.degree(Part::Y, y) == 4 {
            out.push(((Part::Y, y), g2.delete_vertex(Part::Y, y).swap_parts()));
        }
    }
    Ok(out)
}

fn complete_bipartite_graph(a: usize, b: usize) -> Graph {
    Graph::empty(a).join(&Graph::empty(b))
}

/// The graph described by `spec`; set-valued families yield their canonical
/// member (`K_{n/2,n/2}` for ES_n, `K_{(n+1)/2,(n−1)/2}` for EW_n, `B_n^k` for
/// 𝓑_n^k, `C_n^k` for 𝒞_n^k).
pub fn build_family(spec: &FamilySpec) -> Result<FamilyGraph> {
    spec.validate()?;
    Ok(match *spec {
        FamilySpec::K2JoinSplit { n, k } => FamilyGraph::Simple(
            Graph::complete(2).join(&Graph::complete(n - k - 1).disjoint_union(&Graph::complete(k - 1))),
        ),
        FamilySpec::K1JoinSplit { n, k } => FamilyGraph::Simple(
            Graph::complete(1).join(&Graph::complete(n - k - 1).disjoint_union(&Graph::complete(k))),
        ),
        FamilySpec::TwoCliquesJoinK2 { n, k } => FamilyGraph::Simple(
            Graph::complete(k - 1)
                .disjoint_union(&Graph::complete(n - k - 1))
                .join(&Graph::complete(2)),
        ),
        FamilySpec::TwoCliquesJoinO2 { n, k } => FamilyGraph::Simple(
            Graph::complete(k - 1)
                .disjoint_union(&Graph::complete(n - k - 1))
                .join(&Graph::empty(2)),
        ),
        FamilySpec::BipartiteJoinK2 { n, k } => {
            FamilyGraph::Simple(complete_bipartite_graph(k - 1, n - k - 1).join(&Graph::complete(2)))
        }
        FamilySpec::BipartiteJoinO2 { n, k } => {
            FamilyGraph::Simple(complete_bipartite_graph(k - 1, n - k - 1).join(&Graph::empty(2)))
        }
        FamilySpec::BipartiteJoinK1 { n, k } => {
            FamilyGraph::Simple(complete_bipartite_graph(k, n - k - 1).join(&Graph::complete(1)))
        }
        FamilySpec::Bnk { n, k } | FamilySpec::ScriptB { n, k } => FamilyGraph::Bipartite(
            BipartiteGraph::empty(k, n - k).sqcup(&BipartiteGraph::complete(n - k, k)),
        ),
        FamilySpec::Cnk { n, k } | FamilySpec::ScriptC { n, k } => FamilyGraph::Bipartite(
            BipartiteGraph::empty(k, n - k).sqcup(&BipartiteGraph::complete(n - k - 1, k)),
        ),
        FamilySpec::ESn { n } => FamilyGraph::Simple(complete_bipartite_graph(n / 2, n / 2)),
        FamilySpec::EWn { n } => FamilyGraph::Simple(complete_bipartite_graph(n.div_ceil(2), n / 2)),
        FamilySpec::Gamma1 => FamilyGraph::Bipartite(gamma_graph("Gamma1")?),
        FamilySpec::Gamma2 => FamilyGraph::Bipartite(gamma_graph("Gamma2")?),
        FamilySpec::Gamma2MinusV => {
            let first = gamma2_deletions()?.into_iter().next();
            FamilyGraph::Bipartite(
                first
                    .ok_or_else(|| Error::UnavailableFamily("Γ2 has no vertex of degree 4".into()))?
                    .1,
            )
        }
        FamilySpec::CompleteBipartiteHalf { n } => {
            FamilyGraph::Bipartite(BipartiteGraph::complete(n / 2, n / 2))
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum MembershipWitness {
    /// `mapping[v]` is the vertex of the constructed family graph that input
    /// vertex `v` corresponds to (embedded numbering for bipartite graphs).
    Isomorphism { mapping: Vec<usize> },
    /// ES_n / EW_n: `inner` is the vertex set of `G_2`, joined to the
    /// regular part `G_1` on the remaining vertices.
    JoinPattern { r: usize, inner: Vec<usize> },
    /// 𝓑 / 𝒞 pattern or containment in B_n^k / C_n^k: `x1` (part-local X
    /// indices) is adjacent only to Y∖`y1`; `y1` only to X∖`x1`.
    PartPattern { k: usize, x1: Vec<usize>, y1: Vec<usize> },
    /// `Γ₂ − v`: the deletions (vertex of Γ₂ as part plus index) that match.
    Gamma2Deletion { deleted: Vec<(Part, usize)>, mapping: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub member: bool,
    pub witness: Option<MembershipWitness>,
}

impl Membership {
    fn no() -> Self {
        Membership {
            member: false,
            witness: None,
        }
    }

    fn yes(w: MembershipWitness) -> Self {
        Membership {
            member: true,
            witness: Some(w),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyConfig {
    /// Largest order for which the exhaustive ES_n / EW_n search runs.
    pub search_cap: usize,
}

impl Default for FamilyConfig {
    fn default() -> Self {
        FamilyConfig { search_cap: 16 }
    }
}

fn part_colors(b: &BipartiteGraph) -> Vec<u32> {
    b.part_mask().iter().map(|&x| if x { 0 } else { 1 }).collect()
}

fn iso_membership(g: GraphRef<'_>, target: &FamilyGraph) -> Membership {
    let mapping = match (g, target) {
        (GraphRef::Bipartite(b), FamilyGraph::Bipartite(t)) => {
            if b.x_size() != t.x_size() || b.y_size() != t.y_size() {
                return Membership::no();
            }
            find_isomorphism(&b.to_graph(), &t.to_graph(), &part_colors(b), &part_colors(t))
        }
        _ => isomorphic(&g.graph(), &target.graph()),
    };
    match mapping {
        Some(mapping) => Membership::yes(MembershipWitness::Isomorphism { mapping }),
        None => Membership::no(),
    }
}

/// Calls `f` on each `m`-subset of `items` in lexicographic order until it returns true.
fn any_combination(items: &[usize], m: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        items: &[usize],
        m: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == m {
            return f(cur);
        }
        let need = m - cur.len();
        for i in start..=items.len().saturating_sub(need) {
            if items.len() < need {
                break;
            }
            cur.push(items[i]);
            if rec(items, m, i + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(items, m, 0, &mut Vec::with_capacity(m), f)
}

/// Searches for a set `S` with `sizes` elements such that every vertex outside
/// `S` has degree `outer_degree` and is adjacent to all of `S`.
fn join_pattern(g: &Graph, sizes: impl Iterator<Item = usize>, outer_degree: usize) -> Option<(usize, Vec<usize>)> {
    let n = g.order();
    let forced: Vec<usize> = (0..n).filter(|&v| g.degree(v) != outer_degree).collect();
    let free: Vec<usize> = (0..n).filter(|&v| g.degree(v) == outer_degree).collect();
    for s in sizes {
        if forced.len() > s {
            continue;
        }
        let mut found = None;
        any_combination(&free, s - forced.len(), &mut |extra| {
            let mut inner = BitSet::new(n);
            for &v in forced.iter().chain(extra) {
                inner.insert(v);
            }
            let ok = (0..n)
                .filter(|&v| !inner.contains(v))
                .all(|v| g.neighbor_set(v).intersection_count(&inner) == s);
            if ok {
                found = Some(inner.iter().collect::<Vec<_>>());
            }
            ok
        });
        if let Some(inner) = found {
            return Some((s, inner));
        }
    }
    None
}

/// Membership of `b` (fixed orientation) in `O_{j,n−j} ⊔ G(X2, Y2)` with
/// `|X| = j + x2`, `|Y| = n`.
///
/// Every vertex of X1 has neighbourhood exactly Y2 (of size `j`). The X vertices
/// sharing that neighbourhood must be exactly X1, since any other one would have
/// to see all of Y1. So X1 is recovered by grouping X by neighbourhood.
fn part_pattern(b: &BipartiteGraph, j: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let ny = b.y_size();
    if j == 0 || j > ny {
        return None;
    }
    let nx = b.x_size();
    let mut seen = vec![false; nx];
    for x in 0..nx {
        if seen[x] || b.degree(Part::X, x) != j {
            continue;
        }
        let nb = b.y_neighbors(x);
        let group: Vec<usize> = (0..nx).filter(|&z| b.y_neighbors(z) == nb).collect();
        for &z in &group {
            seen[z] = true;
        }
        if group.len() != j {
            continue;
        }
        let y1: Vec<usize> = (0..ny).filter(|&y| !nb.contains(y)).collect();
        let rest_ok = (0..nx)
            .filter(|z| !group.contains(z))
            .all(|z| y1.iter().all(|&y| b.has_edge(z, y)));
        if rest_ok {
            return Some((group, y1));
        }
    }
    None
}

/// `b ⊆ B_n^k` (balanced, `|X| = |Y| = n`) or `b ⊆ C_n^k` (`|X| = n−1`, `|Y| = n`)
/// as a part-respecting spanning subgraph: some `k` vertices of X whose joint
/// neighbourhood has at most `k` vertices.
pub fn spanning_subgraph_of(b: &BipartiteGraph, family: &FamilySpec) -> Result<Membership> {
    family.validate()?;
    let (n, k, x_size) = match *family {
        FamilySpec::Bnk { n, k } => (n, k, n),
        FamilySpec::Cnk { n, k } => (n, k, n - 1),
        _ => {
            return Err(Error::DomainError(format!(
                "spanning-subgraph test is defined for Bnk and Cnk, not {family}"
            )))
        }
    };
    if b.x_size() != x_size || b.y_size() != n {
        return Ok(Membership::no());
    }
    let candidates: Vec<usize> = (0..x_size).filter(|&x| b.degree(Part::X, x) <= k).collect();
    fn rec(
        b: &BipartiteGraph,
        cands: &[usize],
        start: usize,
        k: usize,
        chosen: &mut Vec<usize>,
        union: &BitSet,
    ) -> Option<(Vec<usize>, BitSet)> {
        if chosen.len() == k {
            return Some((chosen.clone(), union.clone()));
        }
        for i in start..cands.len() {
            if cands.len() - i < k - chosen.len() {
                break;
            }
            let x = cands[i];
            let mut next = union.clone();
            for y in b.y_neighbors(x).iter() {
                next.insert(y);
            }
            if next.count() > k {
                continue;
            }
            chosen.push(x);
            if let Some(found) = rec(b, cands, i + 1, k, chosen, &next) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }
    let found = rec(b, &candidates, 0, k, &mut Vec::new(), &BitSet::new(n));
    Ok(match found {
        None => Membership::no(),
        Some((x1, nbhd)) => {
            // Pad N(X1) up to k vertices to form Y2; the rest is Y1.
            let mut y2 = nbhd;
            for y in 0..n {
                if y2.count() == k {
                    break;
                }
                if !y2.contains(y) {
                    y2.insert(y);
                }
            }
            let y1 = (0..n).filter(|&y| !y2.contains(y)).collect();
            Membership::yes(MembershipWitness::PartPattern { k, x1, y1 })
        }
    })
}

/// Is `g` a member of `family`? Fixed families are decided by isomorphism
/// (part-respecting for bipartite inputs); set-valued ones by pattern search.
pub fn family_membership(g: GraphRef<'_>, family: &FamilySpec, cfg: &FamilyConfig) -> Result<Membership> {
    family.validate()?;
    match *family {
        FamilySpec::ESn { n } => {
            let graph = g.graph();
            if graph.order() != n {
                return Ok(Membership::no());
            }
            let half = complete_bipartite_graph(n / 2, n / 2);
            if let Some(mapping) = isomorphic(&graph, &half) {
                return Ok(Membership::yes(MembershipWitness::Isomorphism { mapping }));
            }
            if n > cfg.search_cap {
                return Err(Error::TooLarge {
                    order: n,
                    cap: cfg.search_cap,
                });
            }
            Ok(match join_pattern(&graph, 1..=n / 2, n / 2) {
                Some((r, inner)) => Membership::yes(MembershipWitness::JoinPattern { r, inner }),
                None => Membership::no(),
            })
        }
        FamilySpec::EWn { n } => {
            let graph = g.graph();
            if graph.order() != n {
                return Ok(Membership::no());
            }
            if n > cfg.search_cap {
                return Err(Error::TooLarge {
                    order: n,
                    cap: cfg.search_cap,
                });
            }
            // G_2 has r − 1 vertices, r = 1..=(n+1)/2.
            Ok(match join_pattern(&graph, 0..=(n - 1) / 2, (n - 1) / 2) {
                Some((s, inner)) => Membership::yes(MembershipWitness::JoinPattern { r: s + 1, inner }),
                None => Membership::no(),
            })
        }
        FamilySpec::ScriptB { n, k } | FamilySpec::ScriptC { n, k } => {
            let GraphRef::Bipartite(b) = g else {
                return Err(Error::DomainError(format!("{family} needs a bipartite input")));
            };
            let x_size = if matches!(family, FamilySpec::ScriptB { .. }) { n } else { n - 1 };
            if b.x_size() != x_size || b.y_size() != n {
                return Ok(Membership::no());
            }
            Ok(match part_pattern(b, k) {
                Some((x1, y1)) => Membership::yes(MembershipWitness::PartPattern { k, x1, y1 }),
                None => Membership::no(),
            })
        }
        FamilySpec::Gamma2MinusV => {
            let oriented: Cow<'_, BipartiteGraph>;
            let input = match g {
                GraphRef::Bipartite(b) if b.x_size() == b.y_size() + 1 => {
                    oriented = Cow::Owned(b.swap_parts());
                    GraphRef::Bipartite(&oriented)
                }
                other => other,
            };
            let mut deleted = Vec::new();
            let mut first = None;
            for (v, candidate) in gamma2_deletions()? {
                let m = iso_membership(input, &FamilyGraph::Bipartite(candidate));
                if let Some(MembershipWitness::Isomorphism { mapping }) = m.witness {
                    deleted.push(v);
                    first.get_or_insert(mapping);
                }
            }
            Ok(match first {
                Some(mapping) => Membership::yes(MembershipWitness::Gamma2Deletion { deleted, mapping }),
                None => Membership::no(),
            })
        }
        _ => {
            let target = build_family(family)?;
            Ok(iso_membership(g, &target))
        }
    }
}

/// Membership in `⋃_{j=1}^{⌊n/2⌋} 𝒞_n^j`, returning the first `j` that fits.
pub fn script_c_union_membership(b: &BipartiteGraph, n: usize) -> Option<(usize, Membership)> {
    (1..=n / 2).find_map(|j| {
        let m = family_membership(GraphRef::Bipartite(b), &FamilySpec::ScriptC { n, k: j }, &FamilyConfig::default())
            .ok()?;
        m.member.then_some((j, m))
    })
}

fn random_regular(m: usize, d: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    if (m > 0 && d >= m) || (m == 0 && d > 0) || (m * d) % 2 == 1 {
        return None;
    }
    let mut adj = vec![vec![false; m]; m];
    let mut edges = Vec::new();
    let add = |adj: &mut Vec<Vec<bool>>, edges: &mut Vec<(usize, usize)>, a: usize, b: usize| {
        if a != b && !adj[a][b] {
            adj[a][b] = true;
            adj[b][a] = true;
            edges.push((a, b));
        }
    };
    for i in 0..m {
        for s in 1..=d / 2 {
            add(&mut adj, &mut edges, i, (i + s) % m);
        }
        if d % 2 == 1 {
            add(&mut adj, &mut edges, i, (i + m / 2) % m);
        }
    }
    // Degree-preserving double-edge swaps.
    if edges.len() >= 2 {
        for _ in 0..10 * edges.len() {
            let i = rng.gen_range(0..edges.len());
            let j = rng.gen_range(0..edges.len());
            let (a, b) = edges[i];
            let (mut c, mut e) = edges[j];
            if rng.gen_bool(0.5) {
                std::mem::swap(&mut c, &mut e);
            }
            if i == j || a == c || a == e || b == c || b == e || adj[a][c] || adj[b][e] {
                continue;
            }
            adj[a][b] = false;
            adj[b][a] = false;
            adj[c][e] = false;
            adj[e][c] = false;
            adj[a][c] = true;
            adj[c][a] = true;
            adj[b][e] = true;
            adj[e][b] = true;
            edges[i] = (a, c);
            edges[j] = (b, e);
        }
    }
    Graph::from_edges(m, &edges).ok()
}

fn random_graph(m: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..m {
        for v in u + 1..m {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(m, &edges).expect("valid vertices")
}

fn random_perm(m: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..m).collect();
    p.shuffle(rng);
    p
}

/// Pseudorandom members of `family`, deterministic in `seed`.
///
/// Set-valued families draw a random split, regular part and inner graph;
/// fixed families return randomly relabelled copies of the constructed graph.
pub fn sample_family_members(family: &FamilySpec, count: usize, seed: u64) -> Result<Vec<FamilyGraph>> {
    family.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let member = match *family {
            FamilySpec::ESn { n } => {
                // r = 0 stands for K_{n/2,n/2}.
                let options: Vec<usize> = (0..=n / 2)
                    .filter(|&r| r == 0 || ((n / 2 - r) * (n - r)) % 2 == 0)
                    .collect();
                let r = *options.choose(&mut rng).expect("r = 0 always available");
                let g = if r == 0 {
                    complete_bipartite_graph(n / 2, n / 2)
                } else {
                    let g1 = random_regular(n - r, n / 2 - r, &mut rng).expect("parity checked");
                    g1.join(&random_graph(r, 0.5, &mut rng))
                };
                FamilyGraph::Simple(g.relabel(&random_perm(n, &mut rng)))
            }
            FamilySpec::EWn { n } => {
                let options: Vec<usize> = (1..=n.div_ceil(2))
                    .filter(|&r| (((n + 1) / 2 - r) * (n + 1 - r)) % 2 == 0)
                    .collect();
                let r = *options
                    .choose(&mut rng)
                    .ok_or_else(|| Error::InvalidFamilyParams(format!("{family} has no member")))?;
                let g1 = random_regular(n + 1 - r, (n + 1) / 2 - r, &mut rng).expect("parity checked");
                let g = g1.join(&random_graph(r - 1, 0.5, &mut rng));
                FamilyGraph::Simple(g.relabel(&random_perm(n, &mut rng)))
            }
            FamilySpec::ScriptB { n, k } | FamilySpec::ScriptC { n, k } => {
                let x2 = if matches!(family, FamilySpec::ScriptB { .. }) { n - k } else { n - k - 1 };
                let mut inner = BipartiteGraph::empty(x2, k);
                for x in 0..x2 {
                    for y in 0..k {
                        if rng.gen_bool(0.5) {
                            inner = inner.with_edge(x, y);
                        }
                    }
                }
                let b = BipartiteGraph::empty(k, n - k).sqcup(&inner);
                let px = random_perm(b.x_size(), &mut rng);
                let py = random_perm(b.y_size(), &mut rng);
                FamilyGraph::Bipartite(b.relabel(&px, &py))
            }
            _ => match build_family(family)? {
                FamilyGraph::Simple(g) => {
                    let p = random_perm(g.order(), &mut rng);
                    FamilyGraph::Simple(g.relabel(&p))
                }
                FamilyGraph::Bipartite(b) => {
                    let px = random_perm(b.x_size(), &mut rng);
                    let py = random_perm(b.y_size(), &mut rng);
                    FamilyGraph::Bipartite(b.relabel(&px, &py))
                }
            },
        };
        out.push(member);
    }
    Ok(out)
}
