//! Reducibility detection, shifted Weyl orbits, and the differential-operator
//! edge structure between orbit points.
//!
//! An edge u → v along a positive root β of degree k means the weight of v is
//! the weight of u minus k·β with k equal to u's Harish-Chandra parameter
//! along β (a positive integer). Two edge sets are exposed: the full relation
//! on a given orbit (`embedding_graph`) and the generic arrow pattern of the
//! regular twelve-point multiplet (`generic_main_arrows`), whose degrees are
//! linear forms in the two parameters and which specializes to the diagrams
//! drawn for reduced and relaxed parameter values.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::rootsys::{g2, weyl_group, word_key, WeylElement};
use crate::weights::{
    hc_params, shifted_action, subtract_root_multiple, Signature, WeightLabels,
};

/// A positive root along which the BGG condition (Λ+ρ, β∨) = k ∈ ℕ holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReduciblePoint {
    pub root_index: u8,
    pub degree: i64,
}

/// One ER/GVM of a multiplet: a Weyl-word id plus the signature, with the
/// words of coincident orbit points merged into aliases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipletNode {
    pub id: String,
    pub labels: WeightLabels,
    pub signature: Signature,
    pub aliases: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    /// Differential operator of the stated degree along a positive root.
    /// `m_compact` marks edges along the parabolic's M-compact root, which
    /// are suppressed in the GVM picture.
    DiffOp {
        root_index: u8,
        degree: i64,
        m_compact: bool,
    },
    /// Knapp-Stein intertwiner between a signature and its negation.
    KnappStein,
    /// A Knapp-Stein operator degenerated to a differential operator.
    DegeneratedKs { root_index: u8, degree: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub source: String,
    pub target: String,
    pub kind: EdgeKind,
}

impl Edge {
    pub fn diff_op(source: &str, target: &str, root_index: u8, degree: i64) -> Self {
        Edge {
            source: source.to_string(),
            target: target.to_string(),
            kind: EdgeKind::DiffOp {
                root_index,
                degree,
                m_compact: false,
            },
        }
    }

    /// Weight shift of the edge as a simple-root lattice vector, when the
    /// kind carries one.
    pub fn shift(&self) -> Option<(i64, i64)> {
        let (root_index, degree) = match self.kind {
            EdgeKind::DiffOp {
                root_index, degree, ..
            }
            | EdgeKind::DegeneratedKs { root_index, degree } => (root_index, degree),
            EdgeKind::KnappStein => return None,
        };
        let root = g2().root(root_index);
        Some((degree * root.simple.0, degree * root.simple.1))
    }
}

/// The positive roots whose Harish-Chandra parameter at `labels` is a
/// positive integer, sorted by root index.
pub fn reducibility_points(labels: &WeightLabels) -> Result<Vec<ReduciblePoint>> {
    let hc = hc_params(labels)?;
    Ok(hc
        .0
        .iter()
        .enumerate()
        .filter(|(_, m)| m.is_natural())
        .map(|(i, m)| ReduciblePoint {
            root_index: (i + 1) as u8,
            degree: m.as_integer().expect("natural"),
        })
        .collect())
}

/// Applies all twelve Weyl elements to the start labels and merges coincident
/// results; node ids are the shortest (then lexicographically smallest)
/// words, the remaining words become aliases.
pub fn orbit(start: &WeightLabels) -> Result<Vec<MultipletNode>> {
    let mut groups: Vec<(WeightLabels, Vec<String>)> = Vec::new();
    // weyl_group() is already sorted by (length, word), so the first word of
    // each group is the canonical id.
    for w in weyl_group() {
        let labels = shifted_action(w, start)?;
        match groups.iter_mut().find(|(l, _)| *l == labels) {
            Some((_, words)) => words.push(w.word.clone()),
            None => groups.push((labels, vec![w.word.clone()])),
        }
    }
    let mut nodes = Vec::with_capacity(groups.len());
    for (labels, mut words) in groups {
        let id = words.remove(0);
        nodes.push(MultipletNode {
            id,
            labels,
            signature: Signature::of(labels)?,
            aliases: words,
        });
    }
    nodes.sort_by_key(|n| word_key(&n.id));
    Ok(nodes)
}

/// The full differential-operator relation on an orbit: every ordered node
/// pair connected by a single root subtraction satisfying the BGG condition.
pub fn embedding_graph(nodes: &[MultipletNode]) -> Result<Vec<Edge>> {
    let sys = g2();
    let mut edges = Vec::new();
    for u in nodes {
        let hc = hc_params(&u.labels)?;
        for root in &sys.roots {
            let k = hc.along(root);
            if !k.is_natural() {
                continue;
            }
            let target = subtract_root_multiple(&u.labels, &k, root)?;
            if let Some(v) = nodes.iter().find(|n| n.labels == target) {
                edges.push(Edge::diff_op(
                    &u.id,
                    &v.id,
                    root.index,
                    k.as_integer().expect("natural"),
                ));
            }
        }
    }
    edges.sort_by_key(edge_sort_key);
    Ok(edges)
}

fn edge_sort_key(e: &Edge) -> ((usize, String), (usize, String), u8) {
    let root = match e.kind {
        EdgeKind::DiffOp { root_index, .. } | EdgeKind::DegeneratedKs { root_index, .. } => {
            root_index
        }
        EdgeKind::KnappStein => 0,
    };
    (word_key(&e.source), word_key(&e.target), root)
}

/// Removes every differential-operator edge implied by a longer path with the
/// same total weight shift; reachability is preserved. Errors on a cycle.
pub fn transitive_reduction(edges: &[Edge]) -> Result<Vec<Edge>> {
    check_acyclic(edges)?;
    let mut kept: Vec<bool> = vec![true; edges.len()];
    for (i, edge) in edges.iter().enumerate() {
        let shift = edge.shift().expect("diff-op edge set");
        if implied_by_path(edges, i, &edge.source, &edge.target, shift) {
            kept[i] = false;
        }
    }
    Ok(edges
        .iter()
        .zip(kept)
        .filter(|(_, k)| *k)
        .map(|(e, _)| e.clone())
        .collect())
}

fn check_acyclic(edges: &[Edge]) -> Result<()> {
    let mut out: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    let mut indeg: BTreeMap<&str, usize> = BTreeMap::new();
    for e in edges {
        out.entry(&e.source).or_default().push(&e.target);
        indeg.entry(&e.source).or_default();
        *indeg.entry(&e.target).or_default() += 1;
    }
    let mut queue: Vec<&str> = indeg
        .iter()
        .filter(|(_, d)| **d == 0)
        .map(|(n, _)| *n)
        .collect();
    let mut seen = 0;
    while let Some(n) = queue.pop() {
        seen += 1;
        for &t in out.get(n).into_iter().flatten() {
            let d = indeg.get_mut(t).expect("known node");
            *d -= 1;
            if *d == 0 {
                queue.push(t);
            }
        }
    }
    if seen == indeg.len() {
        Ok(())
    } else {
        Err(Error::Cycle)
    }
}

/// Is there a path of at least two edges from `source` to `target`, avoiding
/// the edge at `skip`, whose accumulated shift equals `shift`?
fn implied_by_path(
    edges: &[Edge],
    skip: usize,
    source: &str,
    target: &str,
    shift: (i64, i64),
) -> bool {
    fn dfs(
        edges: &[Edge],
        skip: usize,
        here: &str,
        target: &str,
        acc: (i64, i64),
        want: (i64, i64),
        hops: usize,
    ) -> bool {
        if here == target {
            return hops >= 2 && acc == want;
        }
        for (j, e) in edges.iter().enumerate() {
            if j == skip || e.source != here {
                continue;
            }
            let s = e.shift().expect("diff-op edge set");
            let next = (acc.0 + s.0, acc.1 + s.1);
            if dfs(edges, skip, &e.target, target, next, want, hops + 1) {
                return true;
            }
        }
        false
    }
    dfs(edges, skip, source, target, (0, 0), shift, 0)
}

/// A degree that is a linear form c1·m1 + c2·m2 in the two parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DegreeForm {
    pub c1: i64,
    pub c2: i64,
}

impl DegreeForm {
    pub fn eval(&self, m1: &Rational, m2: &Rational) -> Result<Rational> {
        m1.scale(self.c1)?.add(&m2.scale(self.c2)?)
    }
}

/// One arrow of the generic twelve-point multiplet: endpoints are Weyl words,
/// the degree a linear form in (m1, m2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericArrow {
    pub source_word: String,
    pub target_word: String,
    pub root_index: u8,
    pub degree: DegreeForm,
}

// Labels of a node as a pair of linear forms; rows of the element's matrix.
type FormLabels = [[i64; 2]; 2];

/// The arrow pattern of the regular main multiplet: the transitive reduction
/// of the symbolic edge relation on the twelve Weyl words. Twenty arrows.
pub fn generic_main_arrows() -> &'static Vec<GenericArrow> {
    use std::sync::OnceLock;
    static ARROWS: OnceLock<Vec<GenericArrow>> = OnceLock::new();
    ARROWS.get_or_init(|| {
        let full = symbolic_edges();
        // Reachability-based reduction. Shifts are determined by the endpoint
        // forms, so any alternate path matches the direct edge's shift.
        let reachable = |from: &str, to: &str, skip: usize| -> bool {
            fn dfs(
                edges: &[(String, String, u8, DegreeForm)],
                skip: usize,
                here: &str,
                to: &str,
                hops: usize,
            ) -> bool {
                if here == to {
                    return hops >= 2;
                }
                for (j, (s, t, _, _)) in edges.iter().enumerate() {
                    if j != skip && s == here && dfs(edges, skip, t, to, hops + 1) {
                        return true;
                    }
                }
                false
            }
            dfs(&full, skip, from, to, 0)
        };
        let mut arrows: Vec<GenericArrow> = full
            .iter()
            .enumerate()
            .filter(|(i, (s, t, _, _))| !reachable(s, t, *i))
            .map(|(_, (s, t, root, degree))| GenericArrow {
                source_word: s.clone(),
                target_word: t.clone(),
                root_index: *root,
                degree: *degree,
            })
            .collect();
        arrows.sort_by_key(|a| (word_key(&a.source_word), word_key(&a.target_word)));
        assert_eq!(arrows.len(), 20);
        arrows
    })
}

/// Full symbolic edge relation on the twelve words (the generic BGG closure).
fn symbolic_edges() -> Vec<(String, String, u8, DegreeForm)> {
    let sys = g2();
    let group = weyl_group();
    let form_labels = |w: &WeylElement| -> FormLabels { w.matrix };
    let mut edges = Vec::new();
    for u in group {
        let lu = form_labels(u);
        for root in &sys.roots {
            let (c1, c2) = sys.coroot(root);
            let (c1, c2) = (
                c1.as_integer().expect("integral coroot"),
                c2.as_integer().expect("integral coroot"),
            );
            // Harish-Chandra parameter along the root, as a form.
            let k = DegreeForm {
                c1: c1 * lu[0][0] + c2 * lu[1][0],
                c2: c1 * lu[0][1] + c2 * lu[1][1],
            };
            // Keep arrows whose degree is positive for every dominant
            // integral parameter pair.
            if k.c1 < 0 || k.c2 < 0 || (k.c1 == 0 && k.c2 == 0) {
                continue;
            }
            let (p1, p2) = sys.pairing_row(root);
            let target: FormLabels = [
                [lu[0][0] - k.c1 * p1, lu[0][1] - k.c2 * p1],
                [lu[1][0] - k.c1 * p2, lu[1][1] - k.c2 * p2],
            ];
            if let Some(v) = group.iter().find(|v| form_labels(v) == target) {
                edges.push((u.word.clone(), v.word.clone(), root.index, k));
            }
        }
    }
    edges
}
