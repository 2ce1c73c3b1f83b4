//! Text, JSON and DOT renderers. All output is assembled from sorted data,
//! so identical invocations produce byte-identical documents.

use serde_json::{json, Value};

use g2ido::bgg::EdgeKind;
use g2ido::multiplets::{MultipletGraph, SpecialKind};
use g2ido::parabolic::{
    catalog, nilradical, BRUHAT_DIM_N_BAR, DISCRETE_SERIES_COUNT, MINIMAL_LEVI_DIM,
};
use g2ido::rootsys::{g2, weyl_group, Root, RootLength};
use g2ido::verify::FixtureResult;

/// Node subscript for display: the identity word prints as "0".
pub fn display_id(id: &str) -> &str {
    if id.is_empty() {
        "0"
    } else {
        id
    }
}

fn eps_str(root: &Root) -> String {
    format!("({},{},{})", root.eps.0, root.eps.1, root.eps.2)
}

fn length_str(root: &Root) -> &'static str {
    match root.length {
        RootLength::Short => "short",
        RootLength::Long => "long",
    }
}

/// The dual root written over the simple roots, e.g. "α2/3" or "(3α1+α2)/3".
fn coroot_str(root: &Root) -> String {
    let combo = root.combo();
    match root.length {
        RootLength::Short => combo,
        RootLength::Long => {
            if combo.contains('+') {
                format!("({combo})/3")
            } else {
                format!("{combo}/3")
            }
        }
    }
}

pub fn roots_table() -> String {
    let sys = g2();
    let mut lines = vec!["root | combo | eps | length | coroot".to_string()];
    for root in &sys.roots {
        lines.push(format!(
            "α{} | {} | {} | {} | {}",
            root.index,
            root.combo(),
            eps_str(root),
            length_str(root),
            coroot_str(root)
        ));
    }
    lines.join("\n") + "\n"
}

pub fn roots_json() -> String {
    let sys = g2();
    let roots: Vec<Value> = sys
        .roots
        .iter()
        .map(|root| {
            let (c1, c2) = sys.coroot(root);
            json!({
                "index": root.index,
                "simple": [root.simple.0, root.simple.1],
                "eps": [root.eps.0, root.eps.1, root.eps.2],
                "length": length_str(root),
                "coroot": coroot_str(root),
                "coroot_coords": [c1.to_string(), c2.to_string()],
            })
        })
        .collect();
    pretty(&json!({ "roots": roots }))
}

/// Symbolic action of a matrix on the label pair, e.g. "(-n1, n1+n2)".
fn action_str(matrix: [[i64; 2]; 2]) -> String {
    let row = |a: i64, b: i64| {
        let mut s = String::new();
        for (coef, name) in [(a, "n1"), (b, "n2")] {
            if coef == 0 {
                continue;
            }
            if !s.is_empty() && coef > 0 {
                s.push('+');
            }
            match coef {
                1 => s.push_str(name),
                -1 => {
                    s.push('-');
                    s.push_str(name);
                }
                c => s.push_str(&format!("{c}{name}")),
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    };
    format!("({}, {})", row(matrix[0][0], matrix[0][1]), row(matrix[1][0], matrix[1][1]))
}

pub fn weyl_table() -> String {
    let mut lines = vec!["word | length | matrix | action on (n1,n2)".to_string()];
    for e in weyl_group() {
        lines.push(format!(
            "{} | {} | [[{},{}],[{},{}]] | {}",
            if e.word.is_empty() { "e" } else { &e.word },
            e.length(),
            e.matrix[0][0],
            e.matrix[0][1],
            e.matrix[1][0],
            e.matrix[1][1],
            action_str(e.matrix)
        ));
    }
    lines.join("\n") + "\n"
}

pub fn weyl_json() -> String {
    let elements: Vec<Value> = weyl_group()
        .iter()
        .map(|e| {
            json!({
                "word": e.word,
                "length": e.length(),
                "matrix": [[e.matrix[0][0], e.matrix[0][1]], [e.matrix[1][0], e.matrix[1][1]]],
                "det": e.det(),
                "action": action_str(e.matrix),
            })
        })
        .collect();
    pretty(&json!({ "elements": elements }))
}

fn root_list(indices: &[u8]) -> String {
    indices
        .iter()
        .map(|i| format!("α{i}"))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn parabolics_table() -> String {
    let mut lines = vec![
        format!("discrete series families: {DISCRETE_SERIES_COUNT}"),
        format!("bruhat: dim n~0 = {BRUHAT_DIM_N_BAR}, m0 = {MINIMAL_LEVI_DIM}"),
        "name | levi | dim_a | dim_n | m-compact | nilradical | derived | center | step"
            .to_string(),
    ];
    for p in catalog() {
        let n = nilradical(&p);
        lines.push(format!(
            "{} | {} | {} | {} | {} | {} | {} | {} | {}",
            p.name,
            p.levi,
            p.dim_a,
            p.dim_n,
            if p.m_compact_roots.is_empty() {
                "-".to_string()
            } else {
                root_list(&p.m_compact_roots)
            },
            root_list(&n.roots),
            root_list(&n.derived_roots),
            root_list(&n.center_roots),
            n.nilpotency_step
        ));
    }
    lines.join("\n") + "\n"
}

pub fn parabolics_json() -> String {
    let parabolics: Vec<Value> = catalog()
        .iter()
        .map(|p| {
            let n = nilradical(p);
            json!({
                "name": p.name.to_string(),
                "levi": p.levi,
                "dim_a": p.dim_a,
                "dim_n": p.dim_n,
                "m_compact_roots": p.m_compact_roots,
                "nilradical": {
                    "roots": n.roots,
                    "derived_roots": n.derived_roots,
                    "center_roots": n.center_roots,
                    "nilpotency_step": n.nilpotency_step,
                },
            })
        })
        .collect();
    pretty(&json!({
        "parabolics": parabolics,
        "discrete_series_families": DISCRETE_SERIES_COUNT,
        "bruhat": { "dim_n_bar": BRUHAT_DIM_N_BAR, "dim_m0": MINIMAL_LEVI_DIM },
    }))
}

fn edge_kind_str(kind: &EdgeKind) -> &'static str {
    match kind {
        EdgeKind::DiffOp { .. } => "diffop",
        EdgeKind::KnappStein => "knapp-stein",
        EdgeKind::DegeneratedKs { .. } => "degenerated-ks",
    }
}

fn edge_root_degree(kind: &EdgeKind) -> Option<(u8, i64)> {
    match kind {
        EdgeKind::DiffOp {
            root_index, degree, ..
        }
        | EdgeKind::DegeneratedKs { root_index, degree } => Some((*root_index, *degree)),
        EdgeKind::KnappStein => None,
    }
}

pub fn multiplet_table(g: &MultipletGraph) -> String {
    let mut lines = vec![
        format!(
            "multiplet m1={} m2={} parabolic={}",
            g.m1, g.m2, g.parabolic
        ),
        format!("case: {}", g.case),
        format!("nodes ({}):", g.nodes.len()),
        "id | n1 | n2 | c | d | aliases".to_string(),
    ];
    for n in &g.nodes {
        let d = g2ido::weights::conformal_weight(&n.signature.c).expect("small");
        let aliases: Vec<&str> = n.aliases.iter().map(|a| display_id(a)).collect();
        lines.push(format!(
            "{} | {} | {} | {} | {} | {}",
            display_id(&n.id),
            n.labels.n1,
            n.labels.n2,
            n.signature.c,
            d,
            if aliases.is_empty() {
                "-".to_string()
            } else {
                aliases.join(",")
            }
        ));
    }
    lines.push(format!("edges ({}):", g.edges.len()));
    for e in &g.edges {
        let arrow = match &e.kind {
            EdgeKind::DiffOp {
                root_index,
                degree,
                m_compact,
            } => format!(
                "α{root_index}^{degree}{}",
                if *m_compact { " (m-compact)" } else { "" }
            ),
            EdgeKind::KnappStein => "KS".to_string(),
            EdgeKind::DegeneratedKs { root_index, degree } => {
                format!("degenerated KS α{root_index}^{degree}")
            }
        };
        lines.push(format!(
            "{} -> {} | {}",
            display_id(&e.source),
            display_id(&e.target),
            arrow
        ));
    }
    lines.push(format!("components ({}):", g.components.len()));
    for c in &g.components {
        let ids: Vec<&str> = c.nodes.iter().map(|n| display_id(n)).collect();
        lines.push(format!("{} | {{{}}}", c.tag, ids.join(",")));
    }
    lines.push(format!("specials ({}):", g.specials.len()));
    for s in &g.specials {
        lines.push(format!(
            "{} | at χ_{} | d={}",
            s.kind,
            display_id(&s.node),
            s.d
        ));
    }
    lines.join("\n") + "\n"
}

pub fn multiplet_json(g: &MultipletGraph) -> String {
    let nodes: Vec<Value> = g
        .nodes
        .iter()
        .map(|n| {
            let d = g2ido::weights::conformal_weight(&n.signature.c).expect("small");
            json!({
                "id": n.id,
                "n1": n.labels.n1.to_string(),
                "n2": n.labels.n2.to_string(),
                "c": n.signature.c.to_string(),
                "d": d.to_string(),
                "aliases": n.aliases,
            })
        })
        .collect();
    let edges: Vec<Value> = g
        .edges
        .iter()
        .map(|e| {
            let (root, degree) = match edge_root_degree(&e.kind) {
                Some((r, k)) => (json!(r), json!(k)),
                None => (Value::Null, Value::Null),
            };
            let mut obj = json!({
                "from": e.source,
                "to": e.target,
                "kind": edge_kind_str(&e.kind),
                "root": root,
                "degree": degree,
            });
            if let EdgeKind::DiffOp { m_compact, .. } = e.kind {
                obj["m_compact"] = json!(m_compact);
            }
            obj
        })
        .collect();
    let components: Vec<Value> = g
        .components
        .iter()
        .map(|c| json!({ "subtype": c.tag.to_string(), "nodes": c.nodes }))
        .collect();
    let specials: Vec<Value> = g
        .specials
        .iter()
        .map(|s| {
            let mut obj = json!({
                "node": s.node,
                "kind": special_kind_str(&s.kind),
                "d": s.d.to_string(),
            });
            if let SpecialKind::FiniteDim { dim } = s.kind {
                obj["dim"] = json!(dim);
            }
            obj
        })
        .collect();
    pretty(&json!({
        "parameters": { "m1": g.m1.to_string(), "m2": g.m2.to_string() },
        "parabolic": g.parabolic.to_string(),
        "case": g.case.to_string(),
        "nodes": nodes,
        "edges": edges,
        "components": components,
        "specials": specials,
    }))
}

fn special_kind_str(kind: &SpecialKind) -> &'static str {
    match kind {
        SpecialKind::FiniteDim { .. } => "finite-dim",
        SpecialKind::DiscreteSeriesD0 => "discrete-series-D0",
        SpecialKind::DiscreteSeriesD1 => "discrete-series-D1",
        SpecialKind::DiscreteSeriesD2 => "discrete-series-D2",
        SpecialKind::SubrepDPrime0 => "subrep-D'0",
        SpecialKind::SubrepDPrime1 => "subrep-D'1",
    }
}

pub fn multiplet_dot(g: &MultipletGraph) -> String {
    let name = |id: &str| format!("\"chi_{}\"", display_id(id));
    let mut lines = vec![
        "digraph multiplet {".to_string(),
        format!(
            "  label=\"m1={} m2={} parabolic={} case={}\";",
            g.m1, g.m2, g.parabolic, g.case
        ),
        "  rankdir=TB;".to_string(),
    ];
    for n in &g.nodes {
        lines.push(format!(
            "  {} [label=\"χ_{{{}}} {{{},{}; {}}}\"];",
            name(&n.id),
            display_id(&n.id),
            n.labels.n1,
            n.labels.n2,
            n.signature.c
        ));
    }
    for e in &g.edges {
        let attrs = match &e.kind {
            EdgeKind::DiffOp {
                root_index,
                degree,
                m_compact,
            } => {
                if *m_compact {
                    format!("[label=\"α{root_index}^{degree} (m-compact)\", color=gray]")
                } else {
                    format!("[label=\"α{root_index}^{degree}\"]")
                }
            }
            EdgeKind::KnappStein => "[style=dashed, dir=both]".to_string(),
            EdgeKind::DegeneratedKs { root_index, degree } => {
                format!("[style=bold, label=\"α{root_index}^{degree}\"]")
            }
        };
        lines.push(format!(
            "  {} -> {} {attrs};",
            name(&e.source),
            name(&e.target)
        ));
    }
    lines.push("}".to_string());
    lines.join("\n") + "\n"
}

pub fn verify_table(report: &[FixtureResult]) -> (String, bool) {
    let mut lines = Vec::new();
    let mut passed = 0;
    for f in report {
        lines.push(format!(
            "{} | {}",
            f.name,
            if f.passed { "pass" } else { "FAIL" }
        ));
        if f.passed {
            passed += 1;
        } else {
            lines.push(format!("  expected: {}", f.expected));
            lines.push(format!("  actual:   {}", f.actual));
        }
    }
    let all = passed == report.len();
    lines.push(format!(
        "summary: {passed}/{} fixtures passed{}",
        report.len(),
        if all { "; all fixtures passed" } else { "" }
    ));
    (lines.join("\n") + "\n", all)
}

pub fn verify_json(report: &[FixtureResult]) -> (String, bool) {
    let fixtures: Vec<Value> = report
        .iter()
        .map(|f| {
            json!({
                "name": f.name,
                "status": if f.passed { "pass" } else { "fail" },
                "expected": f.expected,
                "actual": f.actual,
            })
        })
        .collect();
    let passed = report.iter().filter(|f| f.passed).count();
    let doc = pretty(&json!({
        "fixtures": fixtures,
        "total": report.len(),
        "passed": passed,
    }));
    (doc, passed == report.len())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}
