//! Acceptance suite. One test per criterion; each asserts exact equality
//! against values stated in the tables or frozen from the independent
//! oracles in this file.

use std::process::Command;

use g2ido::bgg::{orbit, reducibility_points, EdgeKind};
use g2ido::multiplets::{build, CaseLabel, ComponentTag, MultipletGraph, SpecialKind};
use g2ido::parabolic::{
    catalog, describe, ks_partner_id, nilradical, ParabolicName, DISCRETE_SERIES_COUNT,
};
use g2ido::rational::Rational;
use g2ido::rootsys::{g2, weyl_element, weyl_group, RootLength};
use g2ido::weights::{shifted_action, weyl_dim, WeightLabels};

/// Independent weight-multiplicity oracle: Freudenthal's recursion on the
/// fixed G2 data, in plain integer arithmetic, sharing no code with the
/// engine's dimension formula.
mod freudenthal {
    const POSITIVE_ROOTS: [(i64, i64); 6] = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)];
    const RHO: (i64, i64) = (5, 3);

    fn ip(u: (i64, i64), v: (i64, i64)) -> i64 {
        2 * u.0 * v.0 - 3 * (u.0 * v.1 + u.1 * v.0) + 6 * u.1 * v.1
    }

    /// Dimension of the irreducible representation with highest weight of
    /// Dynkin labels (d1, d2), summed from weight multiplicities.
    pub fn dimension(d1: i64, d2: i64) -> i64 {
        assert!(d1 >= 0 && d2 >= 0);
        // highest weight in simple-root coordinates
        let lam = (2 * d1 + 3 * d2, d1 + 2 * d2);
        let (max_a, max_b) = (2 * lam.0, 2 * lam.1);
        let idx = |a: i64, b: i64| (a * (max_b + 1) + b) as usize;
        let mut mult = vec![0i64; ((max_a + 1) * (max_b + 1)) as usize];
        mult[idx(0, 0)] = 1;
        let norm_top = ip((lam.0 + RHO.0, lam.1 + RHO.1), (lam.0 + RHO.0, lam.1 + RHO.1));
        for height in 1..=(max_a + max_b) {
            for a in 0..=max_a.min(height) {
                let b = height - a;
                if b > max_b {
                    continue;
                }
                let mu = (lam.0 - a, lam.1 - b);
                let mut num = 0i64;
                for alpha in POSITIVE_ROOTS {
                    let mut k = 1;
                    loop {
                        let (ao, bo) = (a - k * alpha.0, b - k * alpha.1);
                        if ao < 0 || bo < 0 {
                            break;
                        }
                        let m = mult[idx(ao, bo)];
                        if m != 0 {
                            num += ip((mu.0 + k * alpha.0, mu.1 + k * alpha.1), alpha) * m;
                        }
                        k += 1;
                    }
                }
                let mu_rho = (mu.0 + RHO.0, mu.1 + RHO.1);
                let den = norm_top - ip(mu_rho, mu_rho);
                // den = 0 marks shifted-Weyl-orbit points, never weights.
                mult[idx(a, b)] = if den == 0 {
                    0
                } else {
                    assert_eq!((2 * num) % den, 0, "non-integral multiplicity");
                    let m = 2 * num / den;
                    assert!(m >= 0);
                    m
                };
            }
        }
        mult.iter().sum()
    }

    #[test]
    fn oracle_sanity() {
        assert_eq!(dimension(0, 0), 1);
        assert_eq!(dimension(1, 0), 7);
        assert_eq!(dimension(0, 1), 14);
    }
}

fn rat(s: &str) -> Rational {
    s.parse().unwrap()
}

fn labels(n1: i64, n2: i64) -> WeightLabels {
    WeightLabels::from_ints(n1, n2)
}

fn diffops(g: &MultipletGraph) -> Vec<(String, String, u8, i64, bool)> {
    g.edges
        .iter()
        .filter_map(|e| match e.kind {
            EdgeKind::DiffOp {
                root_index,
                degree,
                m_compact,
            } => Some((
                e.source.clone(),
                e.target.clone(),
                root_index,
                degree,
                m_compact,
            )),
            _ => None,
        })
        .collect()
}

fn degenerations(g: &MultipletGraph) -> Vec<(String, String, u8, i64)> {
    g.edges
        .iter()
        .filter_map(|e| match e.kind {
            EdgeKind::DegeneratedKs { root_index, degree } => {
                Some((e.source.clone(), e.target.clone(), root_index, degree))
            }
            _ => None,
        })
        .collect()
}

fn component(g: &MultipletGraph, tag: ComponentTag) -> Vec<String> {
    g.components
        .iter()
        .find(|c| c.tag == tag)
        .map(|c| c.nodes.clone())
        .unwrap_or_else(|| panic!("no component tagged {tag:?}"))
}

#[test]
fn criterion_01_root_data() {
    let sys = g2();
    let eps: Vec<(i64, i64, i64)> = sys.roots.iter().map(|r| r.eps).collect();
    assert_eq!(
        eps,
        vec![
            (1, -1, 0),
            (-1, 2, -1),
            (0, 1, -1),
            (1, 0, -1),
            (2, -1, -1),
            (1, 1, -2)
        ]
    );
    assert_eq!(sys.inner(sys.root(1), sys.root(1)), Rational::from_int(2));
    assert_eq!(sys.inner(sys.root(2), sys.root(2)), Rational::from_int(6));
    assert_eq!(sys.inner(sys.root(1), sys.root(2)), Rational::from_int(-3));
    // The six dual-root expansions over (α1∨, α2∨).
    let coroots: Vec<(i64, i64)> = sys
        .roots
        .iter()
        .map(|r| {
            let (c1, c2) = sys.coroot(r);
            (c1.as_integer().unwrap(), c2.as_integer().unwrap())
        })
        .collect();
    assert_eq!(
        coroots,
        vec![(1, 0), (0, 1), (1, 3), (2, 3), (1, 1), (1, 2)]
    );
    // Pairing rows used by every weight shift.
    let rows: Vec<(i64, i64)> = sys.roots.iter().map(|r| sys.pairing_row(r)).collect();
    assert_eq!(rows, vec![(2, -1), (-3, 2), (-1, 1), (1, 0), (3, -1), (0, 1)]);
    let short = sys
        .roots
        .iter()
        .filter(|r| r.length == RootLength::Short)
        .count();
    assert_eq!(short, 3);
    println!("criterion 01 root data: PASS");
}

#[test]
fn criterion_02_weyl_group() {
    let group = weyl_group();
    assert_eq!(group.len(), 12);
    let s1 = weyl_element("1");
    let s2 = weyl_element("2");
    let s1s2 = group
        .iter()
        .find(|e| e.matrix == s1.compose_matrix(s2))
        .unwrap();
    let mut power = weyl_element("").matrix;
    for _ in 0..6 {
        let m = power;
        power = [
            [
                m[0][0] * s1s2.matrix[0][0] + m[0][1] * s1s2.matrix[1][0],
                m[0][0] * s1s2.matrix[0][1] + m[0][1] * s1s2.matrix[1][1],
            ],
            [
                m[1][0] * s1s2.matrix[0][0] + m[1][1] * s1s2.matrix[1][0],
                m[1][0] * s1s2.matrix[0][1] + m[1][1] * s1s2.matrix[1][1],
            ],
        ];
    }
    assert_eq!(power, weyl_element("").matrix, "(s1 s2)^6 = identity");
    // Longest element acts as label negation.
    let longest = weyl_element("121212");
    for (n1, n2) in [(1, 1), (5, 7), (-3, 2)] {
        assert_eq!(
            shifted_action(longest, &labels(n1, n2)).unwrap(),
            labels(-n1, -n2)
        );
    }
    println!("criterion 02 weyl group: PASS");
}

/// The twelve signatures of the main multiplet, restated independently.
fn expected_signatures(m1: i64, m2: i64) -> Vec<(&'static str, i64, i64, Rational)> {
    let half = |n: i64| Rational::new(n, 2).unwrap();
    vec![
        ("", m1, m2, half(-(2 * m2 + m1))),
        ("1", -m1, m2 + m1, half(-(2 * m2 + m1))),
        ("2", 3 * m2 + m1, -m2, half(-(m2 + m1))),
        ("12", -3 * m2 - m1, 2 * m2 + m1, half(-(m2 + m1))),
        ("21", 3 * m2 + 2 * m1, -m2 - m1, half(-m2)),
        ("121", -3 * m2 - 2 * m1, 2 * m2 + m1, half(-m2)),
        ("212", 3 * m2 + 2 * m1, -2 * m2 - m1, half(m2)),
        ("1212", -3 * m2 - 2 * m1, m2 + m1, half(m2)),
        ("2121", 3 * m2 + m1, -2 * m2 - m1, half(m2 + m1)),
        ("12121", -3 * m2 - m1, m2, half(m2 + m1)),
        ("21212", m1, -m2 - m1, half(2 * m2 + m1)),
        ("121212", -m1, -m2, half(2 * m2 + m1)),
    ]
}

#[test]
fn criterion_03_main_multiplet_signatures_and_relations() {
    // Pairing rows restated here so the relation check shares nothing with
    // the engine's subtraction path.
    const ROWS: [(i64, i64); 6] = [(2, -1), (-3, 2), (-1, 1), (1, 0), (3, -1), (0, 1)];
    for (m1, m2) in [(1, 1), (2, 3), (5, 2)] {
        let nodes = orbit(&labels(m1, m2)).unwrap();
        assert_eq!(nodes.len(), 12);
        for (id, n1, n2, c) in expected_signatures(m1, m2) {
            let node = nodes
                .iter()
                .find(|n| n.id == id)
                .unwrap_or_else(|| panic!("missing node {id}"));
            assert_eq!(node.labels, labels(n1, n2), "labels of {id} at ({m1},{m2})");
            assert_eq!(node.signature.c, c, "c of {id} at ({m1},{m2})");
        }
        // The ten subtraction relations, plus the longest-element identity.
        let relations: [(&str, &str, u8, i64); 10] = [
            ("", "1", 1, m1),
            ("", "2", 2, m2),
            ("2", "21", 3, m1),
            ("1", "12", 5, m2),
            ("", "212", 3, m1 + 3 * m2),
            ("", "121", 5, m1 + m2),
            ("212", "2121", 4, m1),
            ("121", "1212", 6, m2),
            ("", "21212", 6, m1 + 2 * m2),
            ("", "12121", 4, 2 * m1 + 3 * m2),
        ];
        let labels_of = |id: &str| {
            let n = nodes.iter().find(|n| n.id == id).unwrap();
            (
                n.labels.n1.as_integer().unwrap(),
                n.labels.n2.as_integer().unwrap(),
            )
        };
        for (src, tgt, root, k) in relations {
            let (a, b) = labels_of(src);
            let row = ROWS[(root - 1) as usize];
            assert_eq!(
                (a - k * row.0, b - k * row.1),
                labels_of(tgt),
                "relation {src}->{tgt} at ({m1},{m2})"
            );
        }
        let (a, b) = labels_of("121212");
        assert_eq!((a, b), (-m1, -m2), "(s1 s2)^3 relation at ({m1},{m2})");
    }
    println!("criterion 03 main multiplet: PASS");
}

#[test]
fn criterion_04_c_formula() {
    let cases: [(Rational, Rational, ParabolicName); 6] = [
        (rat("1"), rat("1"), ParabolicName::P0),
        (rat("2"), rat("3"), ParabolicName::P0),
        (rat("0"), rat("2"), ParabolicName::P0),
        (rat("1/3"), rat("2"), ParabolicName::P1),
        (rat("2"), rat("1/5"), ParabolicName::P2),
        (rat("0"), rat("2/3"), ParabolicName::P2),
    ];
    for (m1, m2, p) in cases {
        let g = build(&m1, &m2, p).unwrap();
        for n in &g.nodes {
            let want = n
                .labels
                .n2
                .scale(2)
                .unwrap()
                .add(&n.labels.n1)
                .unwrap()
                .neg()
                .halve()
                .unwrap();
            assert_eq!(n.signature.c, want, "node {} of ({m1},{m2},{p})", n.id);
        }
    }
    println!("criterion 04 c formula: PASS");
}

#[test]
fn criterion_05_ks_pairing() {
    let nodes = orbit(&labels(2, 3)).unwrap();
    let identifications = [
        ("", "121212"),
        ("1", "21212"),
        ("2", "12121"),
        ("12", "2121"),
        ("21", "1212"),
        ("121", "212"),
    ];
    for (a, b) in identifications {
        assert_eq!(ks_partner_id(&nodes, a).unwrap(), b);
        assert_eq!(ks_partner_id(&nodes, b).unwrap(), a, "involution at {a}");
    }
    println!("criterion 05 Knapp-Stein pairing: PASS");
}

#[test]
fn criterion_06_reduced_multiplets() {
    // M1 at (0, 2): six nodes in one chain.
    let g = build(&rat("0"), &rat("2"), ParabolicName::P0).unwrap();
    assert_eq!(g.case, CaseLabel::ReducedM1);
    assert_eq!(g.nodes.len(), 6);
    assert_eq!(g.components.len(), 1);
    let chain: Vec<(String, String, u8, i64)> = diffops(&g)
        .into_iter()
        .map(|(s, t, r, k, _)| (s, t, r, k))
        .collect();
    assert_eq!(
        chain,
        vec![
            ("".into(), "2".into(), 2, 2),
            ("2".into(), "12".into(), 1, 6),
            ("12".into(), "212".into(), 2, 4),
            ("212".into(), "1212".into(), 1, 6),
            ("1212".into(), "21212".into(), 2, 2),
        ]
    );
    let degs = degenerations(&g);
    assert!(
        degs.contains(&("12".into(), "212".into(), 2, 4)),
        "middle edge degenerates"
    );
    // The outer pairs degenerate through the chain; their one-root
    // realizations are flagged as well.
    assert!(degs.contains(&("".into(), "21212".into(), 6, 4)));
    assert!(degs.contains(&("2".into(), "1212".into(), 5, 4)));
    assert_eq!(degs.len(), 3);

    // M2 at (3, 0).
    let g = build(&rat("3"), &rat("0"), ParabolicName::P0).unwrap();
    assert_eq!(g.case, CaseLabel::ReducedM2);
    assert_eq!(g.nodes.len(), 6);
    let chain: Vec<(String, String, u8, i64)> = diffops(&g)
        .into_iter()
        .map(|(s, t, r, k, _)| (s, t, r, k))
        .collect();
    assert_eq!(
        chain,
        vec![
            ("".into(), "1".into(), 1, 3),
            ("1".into(), "21".into(), 2, 3),
            ("21".into(), "121".into(), 1, 6),
            ("121".into(), "2121".into(), 2, 3),
            ("2121".into(), "12121".into(), 1, 3),
        ]
    );
    println!("criterion 06 reduced multiplets: PASS");
}

#[test]
fn criterion_07_p1_generic() {
    let g = build(&rat("1/3"), &rat("2"), ParabolicName::P1).unwrap();
    assert_eq!(g.case, CaseLabel::P1MainGeneric);
    assert_eq!(g.components.len(), 3);
    for c in &g.components {
        assert_eq!(c.nodes.len(), 4);
    }
    let a = component(&g, ComponentTag::A);
    let b = component(&g, ComponentTag::B);
    let c = component(&g, ComponentTag::C);
    assert_eq!(a, vec!["", "2", "12121", "121212"]);
    assert_eq!(b, vec!["1", "12", "2121", "21212"]);
    assert_eq!(c, vec!["21", "121", "212", "1212"]);
    let edge_roots = |members: &[String]| {
        let mut roots: Vec<u8> = diffops(&g)
            .into_iter()
            .filter(|(s, _, _, _, _)| members.contains(s))
            .map(|(_, _, r, _, _)| r)
            .collect();
        roots.sort_unstable();
        roots
    };
    assert_eq!(edge_roots(&a), vec![2, 2]);
    assert_eq!(edge_roots(&b), vec![5, 5]);
    assert_eq!(edge_roots(&c), vec![6, 6]);
    println!("criterion 07 P1 generic components: PASS");
}

#[test]
fn criterion_08_p1_half_relaxed() {
    // Reducibility fixture, exactly as stated.
    let pts = reducibility_points(&WeightLabels::new(rat("7/2"), rat("1"))).unwrap();
    let got: Vec<(u8, i64)> = pts.iter().map(|p| (p.root_index, p.degree)).collect();
    assert_eq!(got, vec![(2, 1), (4, 10)]);

    let g = build(&rat("7/2"), &rat("1"), ParabolicName::P1).unwrap();
    assert_eq!(g.case, CaseLabel::P1MainHalfRelaxed);
    assert_eq!(g.components.len(), 3);
    // Subtypes A and B keep the generic square shape.
    let a = component(&g, ComponentTag::A);
    let b = component(&g, ComponentTag::B);
    let c = component(&g, ComponentTag::C);
    let edges_in = |members: &[String]| {
        diffops(&g)
            .into_iter()
            .filter(|(s, _, _, _, _)| members.contains(s))
            .collect::<Vec<_>>()
    };
    assert_eq!(
        edges_in(&a),
        vec![
            ("".into(), "2".into(), 2, 1, false),
            ("12121".into(), "121212".into(), 2, 1, false),
        ]
    );
    assert_eq!(
        edges_in(&b),
        vec![
            ("1".into(), "12".into(), 5, 1, false),
            ("2121".into(), "21212".into(), 5, 1, false),
        ]
    );
    // Subtype C gains the two arrows of degree 3m2 + 2m1 = 10. They realize
    // the (α4, 10) reducibility point above; conjugated to the C nodes the
    // root is α1, the M-compact root of P1.
    assert_eq!(
        edges_in(&c),
        vec![
            ("21".into(), "121".into(), 1, 10, true),
            ("21".into(), "212".into(), 6, 1, false),
            ("121".into(), "1212".into(), 6, 1, false),
            ("212".into(), "1212".into(), 1, 10, true),
        ]
    );
    let deg10 = diffops(&g)
        .into_iter()
        .filter(|(_, _, _, k, _)| *k == 10)
        .count();
    assert_eq!(deg10, 2, "exactly the C component gains degree-10 arrows");
    println!("criterion 08 P1 half-relaxed: PASS");
}

#[test]
fn criterion_09_p2_generic_and_third_relaxed() {
    let g = build(&rat("2"), &rat("1/5"), ParabolicName::P2).unwrap();
    assert_eq!(g.case, CaseLabel::P2MainGeneric);
    assert_eq!(g.components.len(), 3);
    let roots_of = |tag| {
        let members = component(&g, tag);
        let mut roots: Vec<u8> = diffops(&g)
            .into_iter()
            .filter(|(s, _, _, _, _)| members.contains(s))
            .map(|(_, _, r, _, _)| r)
            .collect();
        roots.sort_unstable();
        roots
    };
    assert_eq!(roots_of(ComponentTag::A), vec![1, 1]);
    assert_eq!(roots_of(ComponentTag::B), vec![3, 3]);
    assert_eq!(roots_of(ComponentTag::C), vec![4, 4]);

    let g = build(&rat("1"), &rat("2/3"), ParabolicName::P2).unwrap();
    assert_eq!(g.case, CaseLabel::P2MainThirdRelaxed);
    assert_eq!(g.components.len(), 2, "B and C merge");
    let mut sizes: Vec<usize> = g.components.iter().map(|c| c.nodes.len()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![4, 8]);
    let merged = component(&g, ComponentTag::B);
    assert_eq!(merged.len(), 8);
    // Merged through the integral conjugates of the α3 and α4 points.
    let merging: Vec<(String, String, u8, i64)> = diffops(&g)
        .into_iter()
        .filter(|(_, _, _, k, _)| *k == 3 || *k == 4)
        .map(|(s, t, r, k, _)| (s, t, r, k))
        .collect();
    assert_eq!(
        merging,
        vec![
            ("2".into(), "12".into(), 1, 3),
            ("21".into(), "121".into(), 1, 4),
            ("212".into(), "1212".into(), 1, 4),
            ("2121".into(), "12121".into(), 1, 3),
        ]
    );
    println!("criterion 09 P2 generic and third-relaxed: PASS");
}

#[test]
fn criterion_10_m21_quartet() {
    let g = build(&rat("0"), &rat("2/3"), ParabolicName::P2).unwrap();
    assert_eq!(g.case, CaseLabel::M21ThirdQuartet);
    assert_eq!(g.nodes.len(), 6);
    assert_eq!(g.components.len(), 2);
    let quartet = component(&g, ComponentTag::Quartet);
    assert_eq!(quartet, vec!["2", "12", "212", "1212"]);
    let arrows: Vec<(String, String, u8, i64)> = diffops(&g)
        .into_iter()
        .map(|(s, t, r, k, _)| (s, t, r, k))
        .collect();
    assert_eq!(
        arrows,
        vec![
            ("2".into(), "12".into(), 1, 2),
            ("212".into(), "1212".into(), 1, 2),
        ],
        "horizontal edges (α1, 3m2 = 2)"
    );
    println!("criterion 10 M21 quartet: PASS");
}

#[test]
fn criterion_11_dimension_formula() {
    let dim = |n1: i64, n2: i64| {
        weyl_dim(&labels(n1, n2))
            .unwrap()
            .as_integer()
            .expect("integral on the dominant cone")
    };
    assert_eq!(dim(1, 1), 1);
    assert_eq!(dim(2, 1), 7);
    assert_eq!(dim(1, 2), 14);
    assert_eq!(freudenthal::dimension(1, 0), 7);
    assert_eq!(freudenthal::dimension(0, 1), 14);
    // Against the oracle across the grid (labels are of Λ+ρ, the oracle
    // takes labels of Λ).
    for n1 in 1..=6 {
        for n2 in 1..=6 {
            let d = weyl_dim(&labels(n1, n2)).unwrap();
            assert!(d.is_natural(), "dim({n1},{n2}) not natural: {d}");
            assert_eq!(
                d.as_integer().unwrap(),
                freudenthal::dimension(n1 - 1, n2 - 1),
                "dim({n1},{n2}) vs oracle"
            );
        }
    }
    println!("criterion 11 dimension formula: PASS");
}

#[test]
fn criterion_12_parabolic_catalog() {
    let cat = catalog();
    assert_eq!(
        cat.iter().map(|p| (p.dim_a, p.dim_n)).collect::<Vec<_>>(),
        vec![(2, 6), (1, 5), (1, 5)]
    );
    let p1 = nilradical(&describe(ParabolicName::P1));
    assert_eq!(p1.derived_roots, vec![6]);
    assert_eq!(p1.center_roots, vec![6]);
    assert_eq!(p1.nilpotency_step, 2, "Heisenberg nilradical");
    let p2 = nilradical(&describe(ParabolicName::P2));
    assert_eq!(p2.derived_roots, vec![4, 5, 6]);
    assert_eq!(p2.nilpotency_step, 3);
    println!("criterion 12 parabolic catalog: PASS");
}

#[test]
fn criterion_13_discrete_series() {
    assert_eq!(DISCRETE_SERIES_COUNT, 3);
    let find = |g: &MultipletGraph, kind: SpecialKind| {
        g.specials
            .iter()
            .find(|s| s.kind == kind)
            .unwrap_or_else(|| panic!("missing {kind:?}"))
            .d
    };
    let g = build(&rat("1"), &rat("1"), ParabolicName::P0).unwrap();
    assert_eq!(find(&g, SpecialKind::DiscreteSeriesD0), rat("3"));
    assert_eq!(find(&g, SpecialKind::FiniteDim { dim: 1 }), rat("0"));
    let g = build(&rat("0"), &rat("1"), ParabolicName::P0).unwrap();
    assert_eq!(find(&g, SpecialKind::DiscreteSeriesD1), rat("5/2"));
    let g = build(&rat("1"), &rat("0"), ParabolicName::P0).unwrap();
    assert_eq!(find(&g, SpecialKind::DiscreteSeriesD2), rat("2"));
    // The relaxed-case subrepresentations sit at their stated weights.
    let g = build(&rat("1"), &rat("1/2"), ParabolicName::P2).unwrap();
    assert_eq!(find(&g, SpecialKind::SubrepDPrime0), rat("5/2"));
    let g = build(&rat("0"), &rat("3/2"), ParabolicName::P2).unwrap();
    assert_eq!(find(&g, SpecialKind::SubrepDPrime1), rat("3"));
    println!("criterion 13 discrete series: PASS");
}

fn run_cli(args: &[&str]) -> (Vec<u8>, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_g2ido"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.stdout, out.status.code())
}

#[test]
fn criterion_14_cli_determinism() {
    let matrix: Vec<Vec<&str>> = vec![
        vec!["roots", "--format", "table"],
        vec!["roots", "--format", "json"],
        vec!["weyl", "--format", "table"],
        vec!["weyl", "--format", "json"],
        vec!["parabolics", "--format", "table"],
        vec!["parabolics", "--format", "json"],
        vec!["classify", "--m1", "7/2", "--m2", "1", "--parabolic", "P1"],
        vec!["dim", "--m1", "2", "--m2", "1"],
        vec!["verify", "--format", "table"],
        vec!["verify", "--format", "json"],
    ];
    let params: Vec<(&str, &str, &str)> = vec![
        ("1", "1", "P0"),
        ("0", "2", "P0"),
        ("1/3", "2", "P1"),
        ("7/2", "1", "P1"),
        ("2", "1/5", "P2"),
        ("1", "2/3", "P2"),
        ("0", "2/3", "P2"),
    ];
    let mut all = matrix;
    for (m1, m2, p) in params {
        for format in ["table", "json", "dot"] {
            all.push(vec![
                "multiplet",
                "--m1",
                m1,
                "--m2",
                m2,
                "--parabolic",
                p,
                "--format",
                format,
            ]);
        }
    }
    for args in &all {
        let (first, code1) = run_cli(args);
        let (second, code2) = run_cli(args);
        assert_eq!(code1, Some(0), "exit code for {args:?}");
        assert_eq!(code2, Some(0));
        assert!(!first.is_empty());
        assert_eq!(first, second, "byte-identical output for {args:?}");
    }
    println!("criterion 14 CLI determinism: PASS");
}
