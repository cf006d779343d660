//! Re-derives the two exceptional order-8 graphs shipped in `data/gamma.json`:
//! among all bipartite graphs on parts of size 4 that satisfy the cross-pair
//! degree-sum condition `d(x) + d(y) ≥ 4` and are not Hamiltonian, exactly the
//! two Γ graphs fall outside every 𝓑_4^k.

use spectraham::families::{family_membership, gamma_graph, FamilyConfig, FamilySpec, GraphRef};
use spectraham::graph::{BipartiteGraph, Part};
use spectraham::oracle::{check_property, HamProperty, OracleConfig};

fn in_script_b(b: &BipartiteGraph) -> bool {
    let cfg = FamilyConfig::default();
    (1..=2).any(|k| {
        family_membership(GraphRef::Bipartite(b), &FamilySpec::ScriptB { n: 4, k }, &cfg)
            .unwrap()
            .member
    })
}

fn is_gamma(b: &BipartiteGraph, name: &str) -> bool {
    let spec = if name == "Gamma1" {
        FamilySpec::Gamma1
    } else {
        FamilySpec::Gamma2
    };
    let cfg = FamilyConfig::default();
    [b.clone(), b.swap_parts()]
        .iter()
        .any(|o| family_membership(GraphRef::Bipartite(o), &spec, &cfg).unwrap().member)
}

#[test]
fn gamma_graphs_are_the_only_non_script_b_exceptions() {
    let oracle = OracleConfig::default();
    let (mut outside_b, mut swap_only, mut leftovers) = (0, 0, Vec::new());
    for mask in 0u32..1 << 16 {
        let edges: Vec<(usize, usize)> = (0..16).filter(|i| mask >> i & 1 == 1).map(|i| (i / 4, i % 4)).collect();
        let b = BipartiteGraph::from_edges(4, 4, &edges).unwrap();
        let ok = (0..4).all(|x| {
            (0..4).all(|y| b.has_edge(x, y) || b.degree(Part::X, x) + b.degree(Part::Y, y) >= 4)
        });
        if !ok {
            continue;
        }
        let ham = check_property(&b.to_graph(), HamProperty::Hamiltonian, &oracle).unwrap();
        if ham.holds {
            continue;
        }
        if in_script_b(&b) {
            continue;
        }
        outside_b += 1;
        if in_script_b(&b.swap_parts()) {
            swap_only += 1;
            continue;
        }
        leftovers.push(b);
    }
    // Non-Hamiltonian, condition holds, outside 𝓑 in the given orientation.
    assert_eq!(outside_b, 304);
    assert_eq!(swap_only, 112);
    assert!(!leftovers.is_empty());
    let mut seen = [false, false];
    for b in &leftovers {
        let g1 = is_gamma(b, "Gamma1");
        let g2 = is_gamma(b, "Gamma2");
        assert!(g1 ^ g2, "unexpected leftover {:?}", b.edges());
        seen[g2 as usize] = true;
    }
    assert_eq!(seen, [true, true]);
}

#[test]
fn gamma_graphs_satisfy_the_hypotheses() {
    let oracle = OracleConfig::default();
    for name in ["Gamma1", "Gamma2"] {
        let b = gamma_graph(name).unwrap();
        assert!(b.is_balanced() && b.x_size() == 4);
        assert!(!check_property(&b.to_graph(), HamProperty::Hamiltonian, &oracle).unwrap().holds);
        assert!(!in_script_b(&b) && !in_script_b(&b.swap_parts()));
    }
}
