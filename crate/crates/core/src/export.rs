//! JSON, DOT, TSV and plain-text renderings of both crystals.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cartan::{vertex_label, CartanContext, WeightContent};
use crate::crystal::{CrystalEdge, CrystalGraph, VerificationReport, WalkStep};
use crate::error::{Error, Result};
use crate::multipartition::SpinMultipartition;
use crate::partition::{render_compact, CornerPartition, SpinRules, Variant, ZeroCornerSets};
use crate::reduced::ReducedCrystal;

const COLORS: [&str; 6] = ["black", "red", "blue", "darkgreen", "orange", "purple"];

fn edge_style(residue: usize) -> String {
    let style = if (residue / COLORS.len()).is_multiple_of(2) {
        "solid"
    } else {
        "dashed"
    };
    format!(
        "color={}, fontcolor={}, style={style}",
        COLORS[residue % COLORS.len()],
        COLORS[residue % COLORS.len()]
    )
}

fn content_key(c: &WeightContent) -> String {
    c.0.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Serialize, Deserialize)]
struct ReducedVertexDoc {
    content: WeightContent,
    hub: Vec<i64>,
    defect: String,
}

#[derive(Serialize, Deserialize)]
struct ReducedEdgeDoc {
    from: WeightContent,
    to: WeightContent,
    residue: usize,
}

#[derive(Serialize, Deserialize)]
struct ReducedDoc {
    n: usize,
    weight: Vec<i64>,
    max_degree: usize,
    vertices: Vec<ReducedVertexDoc>,
    edges: Vec<ReducedEdgeDoc>,
}

/// Vertices and edges restricted to `keep` (all of them when `None`).
fn reduced_parts<'a>(
    rc: &'a ReducedCrystal,
    keep: Option<&'a BTreeSet<WeightContent>>,
) -> (Vec<&'a WeightContent>, Vec<&'a crate::reduced::Edge>) {
    let inside = |c: &WeightContent| keep.is_none_or(|k| k.contains(c));
    let vertices = rc.vertices().keys().filter(|c| inside(c)).collect();
    let edges = rc
        .edges()
        .iter()
        .filter(|e| inside(&e.from) && inside(&e.to))
        .collect();
    (vertices, edges)
}

pub fn reduced_json(rc: &ReducedCrystal, keep: Option<&BTreeSet<WeightContent>>) -> String {
    let ctx = rc.context();
    let (vertices, edges) = reduced_parts(rc, keep);
    let doc = ReducedDoc {
        n: ctx.n(),
        weight: ctx.highest_weight().to_vec(),
        max_degree: rc.max_degree(),
        vertices: vertices
            .into_iter()
            .map(|c| {
                let v = rc.vertex(c).expect("listed vertex");
                ReducedVertexDoc {
                    content: c.clone(),
                    hub: v.hub.0.clone(),
                    defect: v.defect.to_string(),
                }
            })
            .collect(),
        edges: edges
            .into_iter()
            .map(|e| ReducedEdgeDoc {
                from: e.from.clone(),
                to: e.to.clone(),
                residue: e.residue,
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("serializable");
    out.push('\n');
    out
}

pub fn reduced_dot(rc: &ReducedCrystal, keep: Option<&BTreeSet<WeightContent>>) -> String {
    let (vertices, edges) = reduced_parts(rc, keep);
    let mut out = String::from("digraph reduced {\n  rankdir=TB;\n  node [shape=plaintext];\n");
    for c in vertices {
        let v = rc.vertex(c).expect("listed vertex");
        let _ = writeln!(
            out,
            "  \"{}\" [label=\"{}\", tooltip=\"{}\"];",
            content_key(c),
            vertex_label(&v.hub, v.defect),
            c
        );
    }
    for e in edges {
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\", {}];",
            content_key(&e.from),
            content_key(&e.to),
            e.residue,
            edge_style(e.residue)
        );
    }
    out.push_str("}\n");
    out
}

pub fn reduced_tsv(rc: &ReducedCrystal, keep: Option<&BTreeSet<WeightContent>>) -> String {
    let (vertices, _) = reduced_parts(rc, keep);
    let mut out = String::from("content\tdegree\thub\tdefect\n");
    for c in vertices {
        let v = rc.vertex(c).expect("listed vertex");
        let hub = v
            .hub
            .0
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(",");
        let _ = writeln!(
            out,
            "{}\t{}\t{hub}\t{}",
            content_key(c),
            c.degree(),
            v.defect
        );
    }
    out
}

/// One line per vertex, by degree and then content: `(2,1) [0,1]^2`.
pub fn reduced_text(rc: &ReducedCrystal, keep: Option<&BTreeSet<WeightContent>>) -> String {
    let (mut vertices, _) = reduced_parts(rc, keep);
    vertices.sort_by_key(|c| (c.degree(), (*c).clone()));
    let mut out = String::new();
    for c in vertices {
        let v = rc.vertex(c).expect("listed vertex");
        let _ = writeln!(out, "{c} {}", vertex_label(&v.hub, v.defect));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct ElementDoc {
    id: usize,
    content: WeightContent,
    components: Vec<CornerPartition>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct EdgeDoc {
    from: usize,
    to: usize,
    residue: usize,
}

/// The serialized form of a multipartition crystal, optionally with its
/// verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalDocument {
    n: usize,
    weight: Vec<i64>,
    max_degree: usize,
    variant: Variant,
    #[serde(default)]
    zero_corner: ZeroCornerSets,
    elements: Vec<ElementDoc>,
    edges: Vec<EdgeDoc>,
    report: Option<VerificationReport>,
}

impl CrystalDocument {
    pub fn new(g: &CrystalGraph, report: Option<&VerificationReport>) -> Self {
        let ctx = g.context();
        let rules = g.rules();
        CrystalDocument {
            n: ctx.n(),
            weight: ctx.highest_weight().to_vec(),
            max_degree: g.max_degree(),
            variant: rules.variant,
            zero_corner: rules.zero_corner,
            elements: (0..g.len())
                .map(|k| ElementDoc {
                    id: k,
                    content: g.content(k).clone(),
                    components: g.element(k).components().to_vec(),
                })
                .collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeDoc {
                    from: e.from,
                    to: e.to,
                    residue: e.residue,
                })
                .collect(),
            report: report.cloned(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("serializable");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))
    }

    pub fn report(&self) -> Option<&VerificationReport> {
        self.report.as_ref()
    }

    /// Rebuilds the graph, checking every element and its stored content.
    pub fn to_graph(&self) -> Result<CrystalGraph> {
        let ctx = CartanContext::new(self.n, &self.weight)?;
        let rules = SpinRules::new(ctx.h(), self.variant).with_zero_corner(self.zero_corner);
        let mut elements = Vec::with_capacity(self.elements.len());
        for (k, doc) in self.elements.iter().enumerate() {
            if doc.id != k {
                return Err(Error::Parse(format!("element {k} carries id {}", doc.id)));
            }
            let mp = SpinMultipartition::new(&ctx, rules, doc.components.clone())?;
            if mp.content(&ctx) != doc.content {
                return Err(Error::Parse(format!(
                    "element {k}: stored content {} but nodes give {}",
                    doc.content,
                    mp.content(&ctx)
                )));
            }
            elements.push(mp);
        }
        let mut edges = BTreeSet::new();
        for e in &self.edges {
            if e.from >= elements.len() || e.to >= elements.len() || e.residue > ctx.n() {
                return Err(Error::Parse(format!(
                    "edge {} -> {} out of range",
                    e.from, e.to
                )));
            }
            edges.insert(CrystalEdge {
                from: e.from,
                residue: e.residue,
                to: e.to,
            });
        }
        Ok(CrystalGraph::from_parts(
            &ctx,
            rules,
            self.max_degree,
            elements,
            edges,
        ))
    }
}

pub fn crystal_json(g: &CrystalGraph, report: Option<&VerificationReport>) -> String {
    CrystalDocument::new(g, report).to_json()
}

fn keep_content(filter: Option<&BTreeSet<WeightContent>>, c: &WeightContent) -> bool {
    filter.is_none_or(|f| f.contains(c))
}

/// Elements clustered by content; each cluster is labeled with its vertex.
pub fn crystal_dot(g: &CrystalGraph, filter: Option<&BTreeSet<WeightContent>>) -> String {
    let ctx = g.context();
    let h = ctx.h();
    let mut out = String::from(
        "digraph crystal {\n  compound=true;\n  node [shape=box, fontname=monospace];\n",
    );
    for (k, (c, ids)) in g.index().iter().enumerate() {
        if !keep_content(filter, c) {
            continue;
        }
        let _ = writeln!(out, "  subgraph cluster_{k} {{");
        let _ = writeln!(
            out,
            "    label=\"{} {}\";",
            c,
            vertex_label(&ctx.hub(c), ctx.defect(c))
        );
        for &id in ids {
            let _ = writeln!(out, "    e{id} [label=\"{}\"];", g.element(id).render(h));
        }
        out.push_str("  }\n");
    }
    for e in g.edges() {
        if !keep_content(filter, g.content(e.from)) || !keep_content(filter, g.content(e.to)) {
            continue;
        }
        let _ = writeln!(
            out,
            "  e{} -> e{} [label=\"{}\", {}];",
            e.from,
            e.to,
            e.residue,
            edge_style(e.residue)
        );
    }
    out.push_str("}\n");
    out
}

pub fn crystal_tsv(g: &CrystalGraph, filter: Option<&BTreeSet<WeightContent>>) -> String {
    let mut out = String::from("id\tcontent\tcomponents\n");
    for k in 0..g.len() {
        let c = g.content(k);
        if !keep_content(filter, c) {
            continue;
        }
        let comps = g
            .element(k)
            .components()
            .iter()
            .map(|cp| {
                let rows = cp
                    .rows
                    .rows()
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                format!("{}:{rows}", cp.corner)
            })
            .collect::<Vec<_>>()
            .join("|");
        let _ = writeln!(out, "{k}\t{}\t{comps}", content_key(c));
    }
    out
}

/// Contents in order, each followed by its elements' residue diagrams.
pub fn crystal_text(g: &CrystalGraph, filter: Option<&BTreeSet<WeightContent>>) -> String {
    let ctx = g.context();
    let mut out = String::new();
    for (c, ids) in g.index() {
        if !keep_content(filter, c) {
            continue;
        }
        let _ = writeln!(
            out,
            "{} {} count={}",
            c,
            vertex_label(&ctx.hub(c), ctx.defect(c)),
            ids.len()
        );
        for &id in ids {
            let _ = writeln!(out, "  #{id} {}", g.element(id).render(ctx.h()));
        }
    }
    out
}

/// Columns of residue diagrams, one column per element, laid out with the
/// top component first.
pub fn crystal_table(g: &CrystalGraph, contents: &[WeightContent]) -> String {
    let ctx = g.context();
    let h = ctx.h();
    let corners = crate::multipartition::layout(ctx);
    let mut header = vec![
        "Hub".to_string(),
        "Defect".to_string(),
        "Content".to_string(),
    ];
    header.extend(corners.iter().rev().map(|c| format!("{c}-corner")));
    let mut columns: Vec<Vec<String>> = vec![header];
    for c in contents {
        for mp in g.at(c) {
            let mut col = vec![
                ctx.hub(c).to_string(),
                ctx.defect(c).to_string(),
                c.to_string(),
            ];
            col.extend(mp.components().iter().rev().map(|cp| render_compact(cp, h)));
            columns.push(col);
        }
    }
    let widths: Vec<usize> = columns
        .iter()
        .map(|col| col.iter().map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in 0..columns[0].len() {
        let cells: Vec<String> = columns
            .iter()
            .zip(&widths)
            .map(|(col, &w)| format!("{:<w$}", col[row]))
            .collect();
        let _ = writeln!(out, "{}", cells.join(" | ").trim_end());
    }
    out
}

/// One line per operator step: signatures, the cogood node and the result.
pub fn walkthrough_text(steps: &[WalkStep], h: usize, ascii: bool) -> String {
    let mut out = String::new();
    for (k, s) in steps.iter().enumerate() {
        let cogood = match s.cogood {
            Some((component, node)) => format!("{node} in component {component}"),
            None => "none".to_string(),
        };
        let after = s
            .after
            .as_ref()
            .map_or("none".to_string(), |mp| mp.render(h));
        let _ = writeln!(
            out,
            "step {}: f{} on {} | signature {} | reduced {} | cogood {} | result {}",
            k + 1,
            s.residue,
            s.before.render(h),
            quoted(&s.raw.render(ascii)),
            quoted(&s.reduced.render(ascii)),
            cogood,
            after
        );
    }
    out
}

fn quoted(s: &str) -> String {
    format!("\"{s}\"")
}
