//! Top-level assembly: build the annotated multiplet graph for a parameter
//! pair and a parabolic, classify the case, split into components, and attach
//! the finite-dimensional and discrete-series subspaces.
//!
//! The differential-operator arrows of a diagram are the generic twelve-point
//! arrow pattern specialized at the parameters: an arrow survives iff its
//! degree form evaluates to a positive integer. Orbit points that coincide are
//! merged first, and merge-induced shortcuts are removed by transitive
//! reduction, which is what turns the twelve-point pattern into the six-point
//! chains of the reduced multiplets.

use std::collections::BTreeMap;
use std::fmt;

use crate::bgg::{
    generic_main_arrows, orbit, transitive_reduction, Edge, EdgeKind, MultipletNode,
};
use crate::error::{Error, Result};
use crate::parabolic::{classify_edges, describe, ks_degenerations, ks_pairs, ParabolicName};
use crate::rational::Rational;
use crate::rootsys::word_key;
pub use crate::verify::verify_fixtures;
use crate::weights::{conformal_weight, weyl_dim, WeightLabels};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseLabel {
    MainMinimal,
    ReducedM1,
    ReducedM2,
    RemarkDoublet(u8),
    P1MainGeneric,
    P1MainHalfRelaxed,
    P2MainGeneric,
    P2MainHalfRelaxed,
    P2MainThirdRelaxed,
    M11,
    M12Generic,
    M12HalfRelaxed,
    M21Generic,
    M21HalfRelaxed,
    M21ThirdQuartet,
    M22,
    Unlisted,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseLabel::MainMinimal => write!(f, "MainMinimal"),
            CaseLabel::ReducedM1 => write!(f, "ReducedM1"),
            CaseLabel::ReducedM2 => write!(f, "ReducedM2"),
            CaseLabel::RemarkDoublet(k) => write!(f, "RemarkDoublet({k})"),
            CaseLabel::P1MainGeneric => write!(f, "P1MainGeneric"),
            CaseLabel::P1MainHalfRelaxed => write!(f, "P1MainHalfRelaxed"),
            CaseLabel::P2MainGeneric => write!(f, "P2MainGeneric"),
            CaseLabel::P2MainHalfRelaxed => write!(f, "P2MainHalfRelaxed"),
            CaseLabel::P2MainThirdRelaxed => write!(f, "P2MainThirdRelaxed"),
            CaseLabel::M11 => write!(f, "M11"),
            CaseLabel::M12Generic => write!(f, "M12Generic"),
            CaseLabel::M12HalfRelaxed => write!(f, "M12HalfRelaxed"),
            CaseLabel::M21Generic => write!(f, "M21Generic"),
            CaseLabel::M21HalfRelaxed => write!(f, "M21HalfRelaxed"),
            CaseLabel::M21ThirdQuartet => write!(f, "M21ThirdQuartet"),
            CaseLabel::M22 => write!(f, "M22"),
            CaseLabel::Unlisted => write!(f, "Unlisted"),
        }
    }
}

/// Applies the parameter-membership conditions in the documented precedence:
/// zero tests first, then ℕ, then ℕ/2 away from ℕ, then ℕ/3 away from both.
/// m ∈ ℕ/k means k·m ∈ ℕ.
pub fn classify(m1: &Rational, m2: &Rational, p: ParabolicName) -> Result<CaseLabel> {
    let nat = |m: &Rational| m.is_natural();
    let half = |m: &Rational| m.is_in_naturals_over(2);
    let third = |m: &Rational| m.is_in_naturals_over(3);

    let label = match p {
        ParabolicName::P0 => {
            if m1.is_zero() && nat(m2) {
                CaseLabel::ReducedM1
            } else if m2.is_zero() && nat(m1) {
                CaseLabel::ReducedM2
            } else if nat(m1) && nat(m2) {
                CaseLabel::MainMinimal
            } else {
                // A Verma doublet needs exactly one integral reducibility
                // point, sitting on a simple root.
                let points = crate::bgg::reducibility_points(&WeightLabels::new(*m1, *m2))?;
                match points.as_slice() {
                    [p] if p.root_index == 1 => CaseLabel::RemarkDoublet(1),
                    [p] if p.root_index == 2 => CaseLabel::RemarkDoublet(2),
                    _ => CaseLabel::Unlisted,
                }
            }
        }
        ParabolicName::P1 => {
            if m1.is_zero() {
                if nat(m2) {
                    CaseLabel::M11
                } else {
                    CaseLabel::Unlisted
                }
            } else if m2.is_zero() {
                if half(m1)? && !nat(m1) {
                    CaseLabel::M12HalfRelaxed
                } else if !half(m1)? {
                    CaseLabel::M12Generic
                } else {
                    CaseLabel::Unlisted
                }
            } else if nat(m2) {
                if half(m1)? && !nat(m1) {
                    CaseLabel::P1MainHalfRelaxed
                } else if !half(m1)? {
                    CaseLabel::P1MainGeneric
                } else {
                    CaseLabel::Unlisted
                }
            } else {
                CaseLabel::Unlisted
            }
        }
        ParabolicName::P2 => {
            if m1.is_zero() {
                if m2.is_zero() || nat(m2) {
                    CaseLabel::Unlisted
                } else if half(m2)? {
                    CaseLabel::M21HalfRelaxed
                } else if third(m2)? {
                    CaseLabel::M21ThirdQuartet
                } else {
                    CaseLabel::M21Generic
                }
            } else if m2.is_zero() {
                if nat(m1) {
                    CaseLabel::M22
                } else {
                    CaseLabel::Unlisted
                }
            } else if nat(m1) {
                if nat(m2) {
                    CaseLabel::Unlisted
                } else if half(m2)? {
                    CaseLabel::P2MainHalfRelaxed
                } else if third(m2)? {
                    CaseLabel::P2MainThirdRelaxed
                } else {
                    CaseLabel::P2MainGeneric
                }
            } else {
                CaseLabel::Unlisted
            }
        }
    };
    Ok(label)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentTag {
    A,
    B,
    C,
    Chain,
    Quartet,
    None,
}

impl fmt::Display for ComponentTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentTag::A => write!(f, "A"),
            ComponentTag::B => write!(f, "B"),
            ComponentTag::C => write!(f, "C"),
            ComponentTag::Chain => write!(f, "chain"),
            ComponentTag::Quartet => write!(f, "quartet"),
            ComponentTag::None => write!(f, "none"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub tag: ComponentTag,
    pub nodes: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialKind {
    FiniteDim { dim: i64 },
    DiscreteSeriesD0,
    DiscreteSeriesD1,
    DiscreteSeriesD2,
    SubrepDPrime0,
    SubrepDPrime1,
}

impl fmt::Display for SpecialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialKind::FiniteDim { dim } => write!(f, "finite-dim(dim={dim})"),
            SpecialKind::DiscreteSeriesD0 => write!(f, "discrete-series-D0"),
            SpecialKind::DiscreteSeriesD1 => write!(f, "discrete-series-D1"),
            SpecialKind::DiscreteSeriesD2 => write!(f, "discrete-series-D2"),
            SpecialKind::SubrepDPrime0 => write!(f, "subrep-D'0"),
            SpecialKind::SubrepDPrime1 => write!(f, "subrep-D'1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialSubspace {
    pub node: String,
    pub kind: SpecialKind,
    pub d: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipletGraph {
    pub m1: Rational,
    pub m2: Rational,
    pub parabolic: ParabolicName,
    pub case: CaseLabel,
    pub nodes: Vec<MultipletNode>,
    pub edges: Vec<Edge>,
    pub components: Vec<Component>,
    pub specials: Vec<SpecialSubspace>,
}

/// Builds the annotated multiplet graph for the given parameters.
pub fn build(m1: &Rational, m2: &Rational, p: ParabolicName) -> Result<MultipletGraph> {
    let desc = describe(p);
    let start = WeightLabels::new(*m1, *m2);
    let nodes = orbit(&start)?;

    let mut word_to_id: BTreeMap<&str, &str> = BTreeMap::new();
    for node in &nodes {
        word_to_id.insert(&node.id, &node.id);
        for alias in &node.aliases {
            word_to_id.insert(alias, &node.id);
        }
    }

    // Specialize the generic arrow pattern.
    let mut arrows: Vec<Edge> = Vec::new();
    for arrow in generic_main_arrows() {
        let degree = arrow.degree.eval(m1, m2)?;
        if !degree.is_natural() {
            continue;
        }
        let edge = Edge::diff_op(
            word_to_id[arrow.source_word.as_str()],
            word_to_id[arrow.target_word.as_str()],
            arrow.root_index,
            degree.as_integer().expect("natural"),
        );
        if !arrows.contains(&edge) {
            arrows.push(edge);
        }
    }
    let arrows = transitive_reduction(&arrows)?;
    let arrows = classify_edges(&arrows, &desc);

    let pairs = ks_pairs(&nodes)?;
    let degenerations = ks_degenerations(&nodes, &pairs)?;

    // A degenerated pair keeps its Knapp-Stein arrow only in the opposite
    // direction.
    let mut ks_edges: Vec<Edge> = Vec::new();
    for pair in &pairs {
        let degenerated = degenerations
            .iter()
            .find(|d| same_pair(d, pair));
        match degenerated {
            Some(d) if d.source != d.target => ks_edges.push(Edge {
                source: d.target.clone(),
                target: d.source.clone(),
                kind: EdgeKind::KnappStein,
            }),
            _ => ks_edges.push(pair.clone()),
        }
    }

    let mut edges = arrows;
    edges.extend(ks_edges);
    edges.extend(degenerations);

    let case = classify(m1, m2, p)?;
    let components = connected_components(&nodes, &edges, case);
    let specials = attach_specials(case, m1, m2, &nodes)?;

    Ok(MultipletGraph {
        m1: *m1,
        m2: *m2,
        parabolic: p,
        case,
        nodes,
        edges,
        components,
        specials,
    })
}

fn same_pair(a: &Edge, b: &Edge) -> bool {
    (a.source == b.source && a.target == b.target)
        || (a.source == b.target && a.target == b.source)
}

fn connected_components(
    nodes: &[MultipletNode],
    edges: &[Edge],
    case: CaseLabel,
) -> Vec<Component> {
    let ids: Vec<&str> = nodes.iter().map(|n| n.id.as_str()).collect();
    let index = |id: &str| ids.iter().position(|n| *n == id).expect("known node");
    let mut parent: Vec<usize> = (0..ids.len()).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for e in edges {
        let (a, b) = (index(&e.source), index(&e.target));
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut groups: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for (i, id) in ids.iter().enumerate() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(id.to_string());
    }
    let mut comps: Vec<Vec<String>> = groups.into_values().collect();
    for c in &mut comps {
        c.sort_by_key(|id| word_key(id));
    }
    comps.sort_by_key(|c| word_key(&c[0]));

    comps
        .into_iter()
        .map(|nodes| Component {
            tag: component_tag(case, &nodes),
            nodes,
        })
        .collect()
}

/// Subtype tags are assigned by membership: A contains the identity node,
/// B contains "1" (P1 cases) or "2" (P2 cases), C is the remainder.
fn component_tag(case: CaseLabel, members: &[String]) -> ComponentTag {
    let has = |id: &str| members.iter().any(|m| m == id);
    match case {
        CaseLabel::P1MainGeneric | CaseLabel::P1MainHalfRelaxed => {
            if has("") {
                ComponentTag::A
            } else if has("1") {
                ComponentTag::B
            } else {
                ComponentTag::C
            }
        }
        CaseLabel::P2MainGeneric
        | CaseLabel::P2MainHalfRelaxed
        | CaseLabel::P2MainThirdRelaxed => {
            if has("") {
                ComponentTag::A
            } else if has("2") {
                ComponentTag::B
            } else {
                ComponentTag::C
            }
        }
        CaseLabel::ReducedM1 | CaseLabel::ReducedM2 | CaseLabel::M11 | CaseLabel::M22 => {
            ComponentTag::Chain
        }
        CaseLabel::M21ThirdQuartet => {
            if members.len() == 4 {
                ComponentTag::Quartet
            } else {
                ComponentTag::None
            }
        }
        _ => ComponentTag::None,
    }
}

/// The finite-dimensional and discrete-series subspaces carried by the case.
pub fn special_subspaces(graph: &MultipletGraph) -> Vec<SpecialSubspace> {
    graph.specials.clone()
}

fn attach_specials(
    case: CaseLabel,
    m1: &Rational,
    m2: &Rational,
    nodes: &[MultipletNode],
) -> Result<Vec<SpecialSubspace>> {
    let node_with = |labels: WeightLabels| -> Option<&MultipletNode> {
        nodes.iter().find(|n| n.labels == labels)
    };
    let d_of = |n: &MultipletNode| conformal_weight(&n.signature.c);
    let mut out = Vec::new();
    match case {
        CaseLabel::MainMinimal => {
            let bottom = node_with(WeightLabels::new(*m1, *m2)).expect("orbit start");
            let dim = weyl_dim(&bottom.labels)?
                .as_integer()
                .ok_or(Error::Overflow)?;
            out.push(SpecialSubspace {
                node: bottom.id.clone(),
                kind: SpecialKind::FiniteDim { dim },
                d: d_of(bottom)?,
            });
            let top = node_with(WeightLabels::new(m1.neg(), m2.neg())).expect("longest image");
            out.push(SpecialSubspace {
                node: top.id.clone(),
                kind: SpecialKind::DiscreteSeriesD0,
                d: d_of(top)?,
            });
        }
        CaseLabel::ReducedM1 => {
            let top = node_with(WeightLabels::new(Rational::ZERO, m2.neg())).expect("top");
            out.push(SpecialSubspace {
                node: top.id.clone(),
                kind: SpecialKind::DiscreteSeriesD1,
                d: d_of(top)?,
            });
        }
        CaseLabel::ReducedM2 => {
            let top = node_with(WeightLabels::new(m1.neg(), Rational::ZERO)).expect("top");
            out.push(SpecialSubspace {
                node: top.id.clone(),
                kind: SpecialKind::DiscreteSeriesD2,
                d: d_of(top)?,
            });
        }
        CaseLabel::P2MainHalfRelaxed => {
            let top = node_with(WeightLabels::new(m1.neg(), m2.neg())).expect("top");
            out.push(SpecialSubspace {
                node: top.id.clone(),
                kind: SpecialKind::SubrepDPrime0,
                d: d_of(top)?,
            });
        }
        CaseLabel::M21HalfRelaxed => {
            let top = node_with(WeightLabels::new(Rational::ZERO, m2.neg())).expect("top");
            out.push(SpecialSubspace {
                node: top.id.clone(),
                kind: SpecialKind::SubrepDPrime1,
                d: d_of(top)?,
            });
        }
        _ => {}
    }
    Ok(out)
}
