//! The three parabolic subalgebras of G2(2) and the Knapp-Stein structure of
//! an orbit: partner pairing, degeneration to differential operators, and
//! M-compact edge marking.

use std::fmt;
use std::str::FromStr;

use crate::bgg::{Edge, EdgeKind, MultipletNode};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::rootsys::{g2, word_key, Root};
use crate::weights::ks_partner;

/// G2(2) has three discrete series families: |W(g)| / |W(k)| = 12 / 4.
pub const DISCRETE_SERIES_COUNT: usize = 3;

/// Bruhat datum shared by the catalog: dim ñ0 = 6 and m0 = 0.
pub const BRUHAT_DIM_N_BAR: usize = 6;
pub const MINIMAL_LEVI_DIM: usize = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParabolicName {
    P0,
    P1,
    P2,
}

impl fmt::Display for ParabolicName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParabolicName::P0 => write!(f, "P0"),
            ParabolicName::P1 => write!(f, "P1"),
            ParabolicName::P2 => write!(f, "P2"),
        }
    }
}

impl FromStr for ParabolicName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P0" | "p0" => Ok(ParabolicName::P0),
            "P1" | "p1" => Ok(ParabolicName::P1),
            "P2" | "p2" => Ok(ParabolicName::P2),
            other => Err(Error::Parse(format!(
                "unknown parabolic {other:?}, expected P0, P1 or P2"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicDesc {
    pub name: ParabolicName,
    /// Indices of the M-compact positive roots.
    pub m_compact_roots: Vec<u8>,
    pub dim_a: usize,
    pub dim_n: usize,
    pub levi: &'static str,
}

/// P0 (minimal), P1 and P2 (the two maximal parabolics).
pub fn catalog() -> Vec<ParabolicDesc> {
    vec![
        ParabolicDesc {
            name: ParabolicName::P0,
            m_compact_roots: vec![],
            dim_a: 2,
            dim_n: 6,
            levi: "m0 = 0",
        },
        ParabolicDesc {
            name: ParabolicName::P1,
            m_compact_roots: vec![1],
            dim_a: 1,
            dim_n: 5,
            levi: "m1 = sl(2,R)_1",
        },
        ParabolicDesc {
            name: ParabolicName::P2,
            m_compact_roots: vec![2],
            dim_a: 1,
            dim_n: 5,
            levi: "m2 = sl(2,R)_2",
        },
    ]
}

pub fn describe(name: ParabolicName) -> ParabolicDesc {
    catalog()
        .into_iter()
        .find(|p| p.name == name)
        .expect("catalog covers all names")
}

/// Nilradical structure computed purely by root addition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilradicalReport {
    pub roots: Vec<u8>,
    /// Roots spanning [n, n].
    pub derived_roots: Vec<u8>,
    /// Roots whose sum with every nilradical root leaves the root system.
    pub center_roots: Vec<u8>,
    /// Length of the lower central series.
    pub nilpotency_step: usize,
}

pub fn nilradical(p: &ParabolicDesc) -> NilradicalReport {
    let sys = g2();
    let member = |r: &Root| match p.name {
        ParabolicName::P0 => true,
        ParabolicName::P1 => r.simple.1 > 0,
        ParabolicName::P2 => r.simple.0 > 0,
    };
    let roots: Vec<&Root> = sys.roots.iter().filter(|r| member(r)).collect();
    let indices = |set: &[&Root]| -> Vec<u8> {
        let mut v: Vec<u8> = set.iter().map(|r| r.index).collect();
        v.sort_unstable();
        v
    };

    let bracket = |a: &[&Root], b: &[&Root]| -> Vec<&'static Root> {
        let mut out: Vec<&Root> = Vec::new();
        for x in a {
            for y in b {
                if let Some(sum) = sys.root_sum(x, y) {
                    if roots.iter().any(|r| r.index == sum.index)
                        && !out.iter().any(|r| r.index == sum.index)
                    {
                        out.push(sys.root(sum.index));
                    }
                }
            }
        }
        out
    };

    let derived = bracket(&roots, &roots);
    let center: Vec<&Root> = roots
        .iter()
        .filter(|x| roots.iter().all(|y| sys.root_sum(x, y).is_none()))
        .copied()
        .collect();

    // Lower central series n ⊇ [n,n] ⊇ [n,[n,n]] ⊇ ...
    let mut step = 1;
    let mut layer = roots.clone();
    loop {
        let next = bracket(&roots, &layer);
        if next.is_empty() {
            break;
        }
        layer = next;
        step += 1;
    }

    NilradicalReport {
        roots: indices(&roots),
        derived_roots: indices(&derived),
        center_roots: indices(&center),
        nilpotency_step: step,
    }
}

/// Marks each differential-operator edge as M-compact (suppressed in the GVM
/// picture) or M-noncompact. For P0 every edge is M-noncompact.
pub fn classify_edges(edges: &[Edge], p: &ParabolicDesc) -> Vec<Edge> {
    edges
        .iter()
        .map(|e| {
            let mut e = e.clone();
            if let EdgeKind::DiffOp {
                root_index,
                degree,
                ..
            } = e.kind
            {
                e.kind = EdgeKind::DiffOp {
                    root_index,
                    degree,
                    m_compact: p.m_compact_roots.contains(&root_index),
                };
            }
            e
        })
        .collect()
}

/// Pairs every node with the node carrying the negated signature. The edge
/// source is the pair's earlier node in (word length, word) order.
pub fn ks_pairs(nodes: &[MultipletNode]) -> Result<Vec<Edge>> {
    let mut edges = Vec::new();
    for node in nodes {
        let want = ks_partner(&node.signature);
        let partner = nodes
            .iter()
            .find(|n| n.signature == want)
            .ok_or_else(|| Error::MissingKsPartner(node.id.clone()))?;
        if word_key(&node.id) <= word_key(&partner.id) {
            edges.push(Edge {
                source: node.id.clone(),
                target: partner.id.clone(),
                kind: EdgeKind::KnappStein,
            });
        }
    }
    edges.sort_by_key(|e| word_key(&e.source));
    Ok(edges)
}

/// Knapp-Stein partner id of a node within an orbit.
pub fn ks_partner_id(nodes: &[MultipletNode], id: &str) -> Result<String> {
    let node = nodes
        .iter()
        .find(|n| n.id == id)
        .ok_or_else(|| Error::MissingKsPartner(id.to_string()))?;
    let want = ks_partner(&node.signature);
    nodes
        .iter()
        .find(|n| n.signature == want)
        .map(|n| n.id.clone())
        .ok_or_else(|| Error::MissingKsPartner(id.to_string()))
}

/// For each Knapp-Stein pair whose signed label difference is a positive
/// integer multiple of a positive root, the operator in that direction
/// degenerates to a differential operator.
pub fn ks_degenerations(nodes: &[MultipletNode], pairs: &[Edge]) -> Result<Vec<Edge>> {
    let sys = g2();
    let mut out = Vec::new();
    for pair in pairs {
        let a = nodes.iter().find(|n| n.id == pair.source).expect("paired");
        let b = nodes.iter().find(|n| n.id == pair.target).expect("paired");
        for (u, v) in [(a, b), (b, a)] {
            let d1 = u.labels.n1.sub(&v.labels.n1)?;
            let d2 = u.labels.n2.sub(&v.labels.n2)?;
            if d1.is_zero() && d2.is_zero() {
                continue;
            }
            for root in &sys.roots {
                let (p1, p2) = sys.pairing_row(root);
                let k = match solve_multiple((d1, d2), (p1, p2)) {
                    Some(k) => k,
                    None => continue,
                };
                if k.is_natural() {
                    out.push(Edge {
                        source: u.id.clone(),
                        target: v.id.clone(),
                        kind: EdgeKind::DegeneratedKs {
                            root_index: root.index,
                            degree: k.as_integer().expect("natural"),
                        },
                    });
                }
            }
        }
    }
    out.sort_by_key(|e| word_key(&e.source));
    Ok(out)
}

/// Solves (d1, d2) = k·(p1, p2) for a single scalar k, if one exists.
fn solve_multiple(d: (Rational, Rational), p: (i64, i64)) -> Option<Rational> {
    let k = if p.0 != 0 {
        d.0.div(&Rational::from_int(p.0)).ok()?
    } else if p.1 != 0 {
        d.1.div(&Rational::from_int(p.1)).ok()?
    } else {
        return None;
    };
    let matches = |lhs: Rational, coef: i64| k.scale(coef).is_ok_and(|v| v == lhs);
    (matches(d.0, p.0) && matches(d.1, p.1)).then_some(k)
}
