//! Largest eigenvalues of `A(G)` and `Q(G) = D(G) + A(G)`, with residual certificates,
//! and the degree/edge bounds that sandwich them.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpectralKind {
    Adjacency,
    SignlessLaplacian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    Dense,
    ShiftedPowerIteration,
}

/// Which eigensolver to run on each connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MethodChoice {
    /// Dense for components up to `dense_limit` vertices, power iteration above.
    Auto,
    Dense,
    Power,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralOptions {
    pub tol: f64,
    pub max_iterations: usize,
    pub dense_limit: usize,
    pub method: MethodChoice,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions {
            tol: 1e-10,
            max_iterations: 100_000,
            dense_limit: 64,
            method: MethodChoice::Auto,
        }
    }
}

impl SpectralOptions {
    pub fn with_method(self, method: MethodChoice) -> Self {
        SpectralOptions { method, ..self }
    }
}

/// A converged extreme eigenpair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub kind: SpectralKind,
    pub value: f64,
    /// Unit eigenvector indexed by vertex; positive on the component attaining
    /// the maximum and zero elsewhere.
    pub vector: Vec<f64>,
    /// `max_v |(M x)_v - value * x_v|`.
    pub residual: f64,
    pub iterations: usize,
    pub method: Method,
}

/// Sparse view of `A` or `Q` restricted to one component.
struct ComponentMatrix {
    diag: Vec<f64>,
    nbrs: Vec<Vec<usize>>,
}

impl ComponentMatrix {
    fn new(g: &Graph, comp: &[usize], kind: SpectralKind) -> Self {
        let mut local = vec![usize::MAX; g.order()];
        for (i, &v) in comp.iter().enumerate() {
            local[v] = i;
        }
        let nbrs: Vec<Vec<usize>> = comp
            .iter()
            .map(|&v| g.neighbors(v).map(|u| local[u]).collect())
            .collect();
        let diag = match kind {
            SpectralKind::Adjacency => vec![0.0; comp.len()],
            SpectralKind::SignlessLaplacian => nbrs.iter().map(|r| r.len() as f64).collect(),
        };
        ComponentMatrix { diag, nbrs }
    }

    fn len(&self) -> usize {
        self.diag.len()
    }

    fn apply(&self, x: &[f64], out: &mut [f64]) {
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.diag[i] * x[i] + self.nbrs[i].iter().map(|&j| x[j]).sum::<f64>();
        }
    }

    fn dense(&self) -> DMatrix<f64> {
        let n = self.len();
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = self.diag[i];
            for &j in &self.nbrs[i] {
                m[(i, j)] = 1.0;
            }
        }
        m
    }
}

struct Eigenpair {
    value: f64,
    vector: Vec<f64>,
    iterations: usize,
    method: Method,
}

fn normalize_positive(v: &mut [f64]) {
    let sum: f64 = v.iter().sum();
    let sign = if sum < 0.0 { -1.0 } else { 1.0 };
    let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
    for a in v.iter_mut() {
        *a = (sign * *a / norm).abs();
    }
}

fn dense_top(m: &ComponentMatrix) -> Eigenpair {
    let eig = SymmetricEigen::new(m.dense());
    let (idx, value) = eig
        .eigenvalues
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, (i, l)| {
            if l > best.1 {
                (i, l)
            } else {
                best
            }
        });
    let mut vector: Vec<f64> = eig.eigenvectors.column(idx).iter().copied().collect();
    normalize_positive(&mut vector);
    Eigenpair {
        value,
        vector,
        iterations: 1,
        method: Method::Dense,
    }
}

/// Power iteration on `M + I`. On a connected component `M + I` is primitive,
/// so the iteration cannot oscillate between `±μ` on bipartite inputs.
fn power_top(m: &ComponentMatrix, opts: &SpectralOptions) -> Result<Eigenpair> {
    let n = m.len();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut mx = vec![0.0; n];
    let mut value = 0.0;
    let mut residual = f64::INFINITY;
    for it in 1..=opts.max_iterations {
        m.apply(&x, &mut mx);
        value = x.iter().zip(&mx).map(|(a, b)| a * b).sum();
        residual = x
            .iter()
            .zip(&mx)
            .map(|(a, b)| (b - value * a).abs())
            .fold(0.0, f64::max);
        if residual <= opts.tol * 0.5 {
            return Ok(Eigenpair {
                value,
                vector: x,
                iterations: it,
                method: Method::ShiftedPowerIteration,
            });
        }
        let norm = x
            .iter()
            .zip(&mx)
            .map(|(a, b)| (a + b) * (a + b))
            .sum::<f64>()
            .sqrt();
        for (a, b) in x.iter_mut().zip(&mx) {
            *a = (*a + b) / norm;
        }
    }
    Err(Error::ConvergenceFailure {
        estimate: value,
        residual,
        iterations: opts.max_iterations,
    })
}

/// Largest eigenvalue of `A(G)` or `Q(G)`, computed per connected component.
pub fn spectral_radius(g: &Graph, kind: SpectralKind, opts: &SpectralOptions) -> Result<SpectralResult> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut best: Option<(Vec<usize>, Eigenpair)> = None;
    let mut total_iterations = 0;
    for comp in g.components() {
        let pair = if comp.len() == 1 {
            Eigenpair {
                value: 0.0,
                vector: vec![1.0],
                iterations: 0,
                method: Method::Dense,
            }
        } else {
            let m = ComponentMatrix::new(g, &comp, kind);
            let dense = match opts.method {
                MethodChoice::Auto => comp.len() <= opts.dense_limit,
                MethodChoice::Dense => true,
                MethodChoice::Power => false,
            };
            if dense {
                dense_top(&m)
            } else {
                power_top(&m, opts)?
            }
        };
        total_iterations += pair.iterations;
        if best.as_ref().is_none_or(|(_, b)| pair.value > b.value) {
            best = Some((comp, pair));
        }
    }
    let (comp, pair) = best.expect("n >= 1 gives at least one component");
    let mut vector = vec![0.0; n];
    for (i, &v) in comp.iter().enumerate() {
        vector[v] = pair.vector[i];
    }
    let residual = residual(g, kind, pair.value, &vector);
    if residual > opts.tol {
        return Err(Error::ConvergenceFailure {
            estimate: pair.value,
            residual,
            iterations: total_iterations,
        });
    }
    Ok(SpectralResult {
        kind,
        value: pair.value,
        vector,
        residual,
        iterations: total_iterations,
        method: pair.method,
    })
}

/// `‖M x − λ x‖∞` on the full graph.
pub fn residual(g: &Graph, kind: SpectralKind, value: f64, x: &[f64]) -> f64 {
    (0..g.order())
        .map(|v| {
            let d = match kind {
                SpectralKind::Adjacency => 0.0,
                SpectralKind::SignlessLaplacian => g.degree(v) as f64,
            };
            let mx = d * x[v] + g.neighbors(v).map(|u| x[u]).sum::<f64>();
            (mx - value * x[v]).abs()
        })
        .fold(0.0, f64::max)
}

/// `μ(G)`.
pub fn adjacency_spectral_radius(g: &Graph, opts: &SpectralOptions) -> Result<SpectralResult> {
    spectral_radius(g, SpectralKind::Adjacency, opts)
}

/// `q(G)`.
pub fn q_spectral_radius(g: &Graph, opts: &SpectralOptions) -> Result<SpectralResult> {
    spectral_radius(g, SpectralKind::SignlessLaplacian, opts)
}

/// `μ(G)` with default options.
pub fn mu(g: &Graph) -> Result<f64> {
    adjacency_spectral_radius(g, &SpectralOptions::default()).map(|r| r.value)
}

/// `q(G)` with default options.
pub fn q(g: &Graph) -> Result<f64> {
    q_spectral_radius(g, &SpectralOptions::default()).map(|r| r.value)
}

/// Rayleigh quotient `xᵀ A x = 2 Σ_{uv ∈ E} x_u x_v`.
pub fn adjacency_quadratic_form(g: &Graph, x: &[f64]) -> f64 {
    2.0 * g.edges().iter().map(|&(u, v)| x[u] * x[v]).sum::<f64>()
}

/// Rayleigh quotient `xᵀ Q x = Σ_{uv ∈ E} (x_u + x_v)²`.
pub fn signless_quadratic_form(g: &Graph, x: &[f64]) -> f64 {
    g.edges()
        .iter()
        .map(|&(u, v)| (x[u] + x[v]).powi(2))
        .sum()
}

/// `f(x) = (x − 1)/2 + √(2m − n x + (x + 1)²/4)`, decreasing for `x ≤ n − 1`.
pub fn hong_shu_f(x: f64, n: usize, m: usize) -> Result<f64> {
    let (nf, mf) = (n as f64, m as f64);
    if 2 * m > n * n.saturating_sub(1) {
        return Err(Error::DomainError(format!(
            "2m = {} exceeds n(n-1) = {}",
            2 * m,
            n * n.saturating_sub(1)
        )));
    }
    if x > nf - 1.0 {
        return Err(Error::DomainError(format!("x = {x} exceeds n - 1")));
    }
    let radicand = 2.0 * mf - nf * x + (x + 1.0).powi(2) / 4.0;
    if radicand < 0.0 {
        return Err(Error::DomainError(format!("negative radicand {radicand}")));
    }
    Ok((x - 1.0) / 2.0 + radicand.sqrt())
}

/// Strict lower bound on `μ(G ∨ K_1)` from `μ(G)` and `n = |V(G)|`.
pub fn cone_lower_bound(mu: f64, n: usize) -> f64 {
    debug_assert!(n >= 2);
    let nf = n as f64;
    (nf - 1.0) / nf * mu + 2.0 * (nf - 1.0).sqrt() / nf
}

/// Degree and edge bounds for `μ` and `q`; no eigensolve involved.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    /// `(δ − 1)/2 + √(2m − nδ + (δ + 1)²/4) ≥ μ(G)`.
    pub hong_shu_upper: f64,
    /// `min_{uv ∈ E} √(d(u) d(v)) ≤ μ(G)`; absent for edgeless graphs.
    pub min_edge_geometric_lower: Option<f64>,
    /// Strict lower bound for `μ(G ∨ K_1)`; filled by [`BoundsReport::with_cone_lower`].
    pub cone_lower: Option<f64>,
    /// `√e(G) ≥ μ(G)` for bipartite `G`.
    pub sqrt_edges_upper: Option<f64>,
    /// `max_u { d(u) + Σ_{v ~ u} d(v) / d(u) } ≥ q(G)`; absent for edgeless graphs.
    pub q_degree_upper: Option<f64>,
    /// `e(G)/n + n ≥ q(G)` for bipartite `G`, `n` the larger part size.
    pub q_edge_part_upper: Option<f64>,
}

impl BoundsReport {
    pub fn with_cone_lower(mut self, mu: f64, n: usize) -> Self {
        self.cone_lower = Some(cone_lower_bound(mu, n));
        self
    }
}

/// Bounds for `g`; `part_mask` (true = X) enables the bipartite-only bounds.
pub fn bounds_report(g: &Graph, part_mask: Option<&[bool]>) -> Result<BoundsReport> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let m = g.edge_count();
    let deg = g.degrees();
    let delta = *deg.iter().min().expect("n >= 1");
    let hong_shu_upper = hong_shu_f(delta as f64, n, m)?;
    let edges = g.edges();
    let min_edge_geometric_lower = edges
        .iter()
        .map(|&(u, v)| ((deg[u] * deg[v]) as f64).sqrt())
        .reduce(f64::min);
    let q_degree_upper = (0..n)
        .filter(|&u| deg[u] > 0)
        .map(|u| {
            let s: usize = g.neighbors(u).map(|v| deg[v]).sum();
            deg[u] as f64 + s as f64 / deg[u] as f64
        })
        .reduce(f64::max);
    let (sqrt_edges_upper, q_edge_part_upper) = match part_mask {
        None => (None, None),
        Some(mask) => {
            if mask.len() != n {
                return Err(Error::DomainError(format!(
                    "part mask has length {}, graph has order {n}",
                    mask.len()
                )));
            }
            if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| mask[u] == mask[v]) {
                return Err(Error::DomainError(format!(
                    "edge {u}-{v} lies inside one part"
                )));
            }
            let x = mask.iter().filter(|&&b| b).count();
            let larger = x.max(n - x) as f64;
            (
                Some((m as f64).sqrt()),
                Some(m as f64 / larger + larger),
            )
        }
    };
    Ok(BoundsReport {
        hong_shu_upper,
        min_edge_geometric_lower,
        cone_lower: None,
        sqrt_edges_upper,
        q_degree_upper,
        q_edge_part_upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BipartiteGraph;

    fn kbip(a: usize, b: usize) -> Graph {
        Graph::empty(a).join(&Graph::empty(b))
    }

    fn c62() -> Graph {
        BipartiteGraph::empty(2, 4)
            .sqcup(&BipartiteGraph::complete(3, 2))
            .to_graph()
    }

    #[test]
    fn complete_graph_radius() {
        let r = adjacency_spectral_radius(&Graph::complete(5), &SpectralOptions::default()).unwrap();
        assert!((r.value - 4.0).abs() < 1e-9);
        assert!(r.residual <= 1e-10);
        assert!(r.vector.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn complete_bipartite_radius() {
        let v = mu(&kbip(2, 4)).unwrap();
        assert!((v - 8f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn cnk_radius_above_complete_bipartite() {
        assert!(mu(&c62()).unwrap() > 18f64.sqrt());
    }

    #[test]
    fn q_examples() {
        assert!((q(&Graph::complete(4)).unwrap() - 6.0).abs() < 1e-9);
        assert!((q(&kbip(3, 2)).unwrap() - 5.0).abs() < 1e-9);
        assert_eq!(q(&Graph::empty(4)).unwrap(), 0.0);
        assert!((q(&Graph::complete(2)).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn quadratic_forms_at_eigenvector() {
        let g = c62();
        let opts = SpectralOptions::default();
        let a = adjacency_spectral_radius(&g, &opts).unwrap();
        assert!((adjacency_quadratic_form(&g, &a.vector) - a.value).abs() < 1e-9);
        let qr = q_spectral_radius(&g, &opts).unwrap();
        assert!((signless_quadratic_form(&g, &qr.vector) - qr.value).abs() < 1e-9);
        // K_2: q = 2, which the form without a leading factor reproduces
        let k2 = q_spectral_radius(&Graph::complete(2), &opts).unwrap();
        assert!((signless_quadratic_form(&Graph::complete(2), &k2.vector) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn power_iteration_handles_bipartite() {
        let opts = SpectralOptions::default().with_method(MethodChoice::Power);
        let r = adjacency_spectral_radius(&kbip(3, 5), &opts).unwrap();
        assert_eq!(r.method, Method::ShiftedPowerIteration);
        assert!((r.value - 15f64.sqrt()).abs() < 1e-9);
        let cyc = adjacency_spectral_radius(&Graph::cycle(8), &opts).unwrap();
        assert!((cyc.value - 2.0).abs() < 1e-9);
    }

    #[test]
    fn disconnected_takes_component_maximum() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(5));
        let r = adjacency_spectral_radius(&g, &SpectralOptions::default()).unwrap();
        assert!((r.value - 4.0).abs() < 1e-9);
        assert!(r.vector[..3].iter().all(|&x| x == 0.0));
        assert!(r.vector[3..].iter().all(|&x| x > 0.0));
        assert_eq!(mu(&Graph::empty(3)).unwrap(), 0.0);
        assert!(mu(&Graph::empty(0)).is_err());
    }

    #[test]
    fn convergence_failure_reports_estimate() {
        let opts = SpectralOptions {
            max_iterations: 3,
            method: MethodChoice::Power,
            ..SpectralOptions::default()
        };
        match adjacency_spectral_radius(&Graph::path(30), &opts) {
            Err(Error::ConvergenceFailure { iterations, .. }) => assert_eq!(iterations, 3),
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn bounds_examples() {
        let k4 = bounds_report(&Graph::complete(4), None).unwrap();
        assert!((k4.hong_shu_upper - 3.0).abs() < 1e-12);
        let star = bounds_report(&kbip(1, 3), None).unwrap();
        assert!((star.min_edge_geometric_lower.unwrap() - 3f64.sqrt()).abs() < 1e-12);
        assert!((mu(&kbip(1, 3)).unwrap() - 3f64.sqrt()).abs() < 1e-9);
        let mask = [true, true, true, false, false, false];
        let k33 = bounds_report(&kbip(3, 3), Some(&mask)).unwrap();
        assert_eq!(k33.sqrt_edges_upper, Some(3.0));
        assert_eq!(k33.q_edge_part_upper, Some(6.0));
        assert!((q(&kbip(3, 3)).unwrap() - 6.0).abs() < 1e-9);
        let empty = bounds_report(&Graph::empty(3), None).unwrap();
        assert_eq!(empty.min_edge_geometric_lower, None);
        assert_eq!(empty.q_degree_upper, None);
        assert!(bounds_report(&Graph::complete(3), Some(&[true, false, false])).is_err());
    }

    #[test]
    fn hong_shu_f_examples() {
        assert!((hong_shu_f(3.0, 4, 6).unwrap() - 3.0).abs() < 1e-12);
        for n in 2..12 {
            let m = n * (n - 1) / 2;
            assert!((hong_shu_f((n - 1) as f64, n, m).unwrap() - (n - 1) as f64).abs() < 1e-12);
        }
        assert!(matches!(hong_shu_f(0.0, 3, 4), Err(Error::DomainError(_))));
        assert!(matches!(hong_shu_f(5.0, 4, 3), Err(Error::DomainError(_))));
    }

    #[test]
    fn cone_bound_examples() {
        let b = cone_lower_bound(3.0, 4);
        assert!((b - (2.25 + 3f64.sqrt() / 2.0)).abs() < 1e-12);
        assert!(4.0 > b);
        let b0 = cone_lower_bound(0.0, 3);
        assert!((b0 - 2.0 * 2f64.sqrt() / 3.0).abs() < 1e-12);
        assert!(3f64.sqrt() > b0);
        let g = kbip(2, 4);
        let b2 = cone_lower_bound(8f64.sqrt(), 6);
        assert!((b2 - 3.1023).abs() < 1e-4);
        assert!(mu(&g.add_cone()).unwrap() > b2);
    }
}
