//! The multipartition crystal: closure of the empty multipartition under the
//! `fᵢ`, and the consistency checks run against the reduced crystal.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartan::{CartanContext, WeightContent};
use crate::multipartition::SpinMultipartition;
use crate::partition::{addable_set, removable_set, Node, RunKind, SpinRules};
use crate::reduced::ReducedCrystal;
use crate::signature::{
    apply_e, apply_f, build_signature, cogood, epsilon, phi, reduce, Signature,
};

/// Counterexamples kept per check; the violation count is always exact.
const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CrystalEdge {
    pub from: usize,
    pub residue: usize,
    pub to: usize,
}

/// A component whose maximum addable or removable set was not unique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TieWarning {
    pub element: usize,
    pub component: usize,
    pub residue: usize,
    pub kind: RunKind,
    pub maximum_sets: usize,
}

#[derive(Clone, Debug)]
pub struct CrystalGraph {
    ctx: CartanContext,
    rules: SpinRules,
    max_degree: usize,
    elements: Vec<SpinMultipartition>,
    contents: Vec<WeightContent>,
    edges: BTreeSet<CrystalEdge>,
    index: BTreeMap<WeightContent, Vec<usize>>,
}

impl CrystalGraph {
    /// Breadth-first closure of the empty multipartition under every `fᵢ`.
    /// Each degree layer is expanded in parallel and merged through ordered
    /// sets, so the result does not depend on scheduling.
    pub fn generate(ctx: &CartanContext, rules: SpinRules, max_degree: usize) -> Self {
        let empty = SpinMultipartition::empty(ctx);
        let mut all: BTreeSet<SpinMultipartition> = BTreeSet::from([empty.clone()]);
        let mut raw_edges: Vec<(SpinMultipartition, usize, SpinMultipartition)> = Vec::new();
        let mut layer = vec![empty];
        for _ in 0..max_degree {
            let found: Vec<_> = layer
                .par_iter()
                .flat_map_iter(|mp| {
                    (0..ctx.rank())
                        .filter_map(move |i| apply_f(rules, mp, i).map(|to| (mp.clone(), i, to)))
                })
                .collect();
            let mut next = BTreeSet::new();
            for (from, i, to) in found {
                next.insert(to.clone());
                raw_edges.push((from, i, to));
            }
            all.extend(next.iter().cloned());
            layer = next.into_iter().collect();
            if layer.is_empty() {
                break;
            }
        }

        let mut keyed: Vec<(WeightContent, SpinMultipartition)> =
            all.into_iter().map(|mp| (mp.content(ctx), mp)).collect();
        keyed.sort();
        let ids: BTreeMap<&SpinMultipartition, usize> = keyed
            .iter()
            .enumerate()
            .map(|(k, (_, mp))| (mp, k))
            .collect();
        let edges = raw_edges
            .iter()
            .map(|(from, residue, to)| CrystalEdge {
                from: ids[from],
                residue: *residue,
                to: ids[to],
            })
            .collect();
        let mut index: BTreeMap<WeightContent, Vec<usize>> = BTreeMap::new();
        for (k, (c, _)) in keyed.iter().enumerate() {
            index.entry(c.clone()).or_default().push(k);
        }
        let (contents, elements) = keyed.into_iter().unzip();
        CrystalGraph {
            ctx: ctx.clone(),
            rules,
            max_degree,
            elements,
            contents,
            edges,
            index,
        }
    }

    /// Reassembles a graph from stored parts; element order is taken as given.
    pub fn from_parts(
        ctx: &CartanContext,
        rules: SpinRules,
        max_degree: usize,
        elements: Vec<SpinMultipartition>,
        edges: BTreeSet<CrystalEdge>,
    ) -> Self {
        let contents: Vec<WeightContent> = elements.iter().map(|mp| mp.content(ctx)).collect();
        let mut index: BTreeMap<WeightContent, Vec<usize>> = BTreeMap::new();
        for (k, c) in contents.iter().enumerate() {
            index.entry(c.clone()).or_default().push(k);
        }
        CrystalGraph {
            ctx: ctx.clone(),
            rules,
            max_degree,
            elements,
            contents,
            edges,
            index,
        }
    }

    pub fn context(&self) -> &CartanContext {
        &self.ctx
    }

    pub fn rules(&self) -> SpinRules {
        self.rules
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn elements(&self) -> &[SpinMultipartition] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &SpinMultipartition {
        &self.elements[id]
    }

    pub fn content(&self, id: usize) -> &WeightContent {
        &self.contents[id]
    }

    pub fn edges(&self) -> &BTreeSet<CrystalEdge> {
        &self.edges
    }

    pub fn index(&self) -> &BTreeMap<WeightContent, Vec<usize>> {
        &self.index
    }

    pub fn id_of(&self, mp: &SpinMultipartition) -> Option<usize> {
        let c = mp.content(&self.ctx);
        self.index
            .get(&c)?
            .iter()
            .copied()
            .find(|&k| &self.elements[k] == mp)
    }

    /// Elements carrying content `c`, in canonical order.
    pub fn at(&self, c: &WeightContent) -> Vec<&SpinMultipartition> {
        self.index
            .get(c)
            .map(|ids| ids.iter().map(|&k| &self.elements[k]).collect())
            .unwrap_or_default()
    }

    pub fn count(&self, c: &WeightContent) -> usize {
        self.index.get(c).map_or(0, Vec::len)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Every component and residue whose addable or removable set was chosen
    /// by the tie-break rule.
    pub fn tie_warnings(&self) -> Vec<TieWarning> {
        let rank = self.ctx.rank();
        self.elements
            .par_iter()
            .enumerate()
            .flat_map_iter(|(id, mp)| {
                let mut found = Vec::new();
                for (component, cp) in mp.components().iter().enumerate() {
                    for residue in 0..rank {
                        for (kind, sel) in [
                            (RunKind::Addable, addable_set(cp, residue, self.rules)),
                            (RunKind::Removable, removable_set(cp, residue, self.rules)),
                        ] {
                            if sel.is_tie() {
                                found.push(TieWarning {
                                    element: id,
                                    component,
                                    residue,
                                    kind,
                                    maximum_sets: sel.maximum_sets,
                                });
                            }
                        }
                    }
                }
                found
            })
            .collect()
    }

    /// Restriction to elements of degree at most `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> Self {
        let keep: Vec<usize> = (0..self.len())
            .filter(|&k| self.contents[k].degree() <= max_degree as i64)
            .collect();
        let remap: BTreeMap<usize, usize> = keep
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let elements = keep.iter().map(|&k| self.elements[k].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                Some(CrystalEdge {
                    from: *remap.get(&e.from)?,
                    residue: e.residue,
                    to: *remap.get(&e.to)?,
                })
            })
            .collect();
        CrystalGraph::from_parts(
            &self.ctx,
            self.rules,
            max_degree.min(self.max_degree),
            elements,
            edges,
        )
    }
}

impl PartialEq for CrystalGraph {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx
            && self.rules == other.rules
            && self.max_degree == other.max_degree
            && self.elements == other.elements
            && self.edges == other.edges
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Validity,
    Membership,
    HubAxiom,
    OrbitCounts,
    PathBound,
    StringTransit,
    EfIdentity,
    Surjectivity,
}

impl CheckKind {
    pub const ALL: [CheckKind; 8] = [
        CheckKind::Validity,
        CheckKind::Membership,
        CheckKind::HubAxiom,
        CheckKind::OrbitCounts,
        CheckKind::PathBound,
        CheckKind::StringTransit,
        CheckKind::EfIdentity,
        CheckKind::Surjectivity,
    ];

    /// Surjectivity is evidence about the conjecture rather than a defect of
    /// the implementation.
    pub fn is_hard(self) -> bool {
        self != CheckKind::Surjectivity
    }

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Validity => "validity",
            CheckKind::Membership => "membership",
            CheckKind::HubAxiom => "hub_axiom",
            CheckKind::OrbitCounts => "orbit_counts",
            CheckKind::PathBound => "path_bound",
            CheckKind::StringTransit => "string_transit",
            CheckKind::EfIdentity => "ef_identity",
            CheckKind::Surjectivity => "surjectivity",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            CheckKind::Validity => "elements satisfy the corner predicates and f-edges add e_i",
            CheckKind::Membership => "every element content is a reduced-crystal vertex",
            CheckKind::HubAxiom => "phi - epsilon = theta_i",
            CheckKind::OrbitCounts => "counts agree across in-range simple reflections",
            CheckKind::PathBound => "count <= path count, exactly 1 where the path count is 1",
            CheckKind::StringTransit => "elements entering an i-string leave at the mirror vertex",
            CheckKind::EfIdentity => "e_i f_i and f_i e_i are the identity where defined",
            CheckKind::Surjectivity => "every reduced-crystal vertex in range carries an element",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Nothing could be checked inside the degree horizon.
    Truncated,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Truncated => "truncated",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub content: WeightContent,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<SpinMultipartition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signature: Option<String>,
    pub detail: String,
}

impl Counterexample {
    fn at(content: &WeightContent, detail: String) -> Self {
        Counterexample {
            content: content.clone(),
            residue: None,
            element: None,
            signature: None,
            detail,
        }
    }

    fn residue(mut self, i: usize) -> Self {
        self.residue = Some(i);
        self
    }

    fn element(mut self, mp: &SpinMultipartition) -> Self {
        self.element = Some(mp.clone());
        self
    }

    fn signature(mut self, sig: &Signature) -> Self {
        self.signature = Some(sig.render(true));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: CheckKind,
    pub hard: bool,
    pub status: CheckStatus,
    pub checked: usize,
    pub skipped: usize,
    pub violations: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl CheckResult {
    fn new(check: CheckKind) -> Self {
        CheckResult {
            check,
            hard: check.is_hard(),
            status: CheckStatus::Pass,
            checked: 0,
            skipped: 0,
            violations: 0,
            counterexamples: Vec::new(),
        }
    }

    fn ok(&mut self) {
        self.checked += 1;
    }

    fn skip(&mut self) {
        self.skipped += 1;
    }

    fn fail(&mut self, cx: Counterexample) {
        self.checked += 1;
        self.violations += 1;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(cx);
        }
    }

    fn record(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::Ok => self.ok(),
            Outcome::Skip => self.skip(),
            Outcome::Fail(cx) => self.fail(*cx),
        }
    }

    fn finish(mut self) -> Self {
        self.status = if self.violations > 0 {
            CheckStatus::Fail
        } else if self.checked == 0 && self.skipped > 0 {
            CheckStatus::Truncated
        } else {
            CheckStatus::Pass
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

enum Outcome {
    Ok,
    Skip,
    Fail(Box<Counterexample>),
}

fn fail(cx: Counterexample) -> Outcome {
    Outcome::Fail(Box::new(cx))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub max_degree: usize,
    pub elements: usize,
    pub vertices: usize,
    pub checks: Vec<CheckResult>,
    pub ties: Vec<TieWarning>,
}

impl VerificationReport {
    pub fn check(&self, kind: CheckKind) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == kind)
    }

    /// True when no hard check failed.
    pub fn hard_ok(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.hard)
            .all(CheckResult::passed)
    }

    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn evidence_failures(&self) -> Vec<&CheckResult> {
        self.checks
            .iter()
            .filter(|c| !c.hard && !c.passed())
            .collect()
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "degree <= {}: {} elements over {} vertices\n",
            self.max_degree, self.elements, self.vertices
        );
        for c in &self.checks {
            out.push_str(&format!(
                "{:<15} {:<9} checked={} skipped={} violations={}{}\n",
                c.check.name(),
                c.status.to_string(),
                c.checked,
                c.skipped,
                c.violations,
                if c.hard { "" } else { " (evidence)" }
            ));
            for cx in &c.counterexamples {
                out.push_str(&format!("  at {}", cx.content));
                if let Some(i) = cx.residue {
                    out.push_str(&format!(" i={i}"));
                }
                if let Some(mp) = &cx.element {
                    out.push_str(&format!(" {mp}"));
                }
                if let Some(s) = &cx.signature {
                    out.push_str(&format!(" sig={s}"));
                }
                out.push_str(&format!(": {}\n", cx.detail));
            }
        }
        if !self.ties.is_empty() {
            out.push_str(&format!("tie warnings: {}\n", self.ties.len()));
        }
        out
    }
}

/// Runs every check of `crystal` against `reduced`. The reduced crystal must
/// reach at least as deep as the crystal.
pub fn verify(crystal: &CrystalGraph, reduced: &ReducedCrystal) -> VerificationReport {
    assert!(
        reduced.max_degree() >= crystal.max_degree(),
        "reduced crystal must cover the crystal's degree range"
    );
    let ctx = crystal.context();
    let rules = crystal.rules();
    let horizon = crystal.max_degree() as i64;
    let rank = ctx.rank();
    let ids: Vec<usize> = (0..crystal.len()).collect();

    let mut validity = CheckResult::new(CheckKind::Validity);
    for &k in &ids {
        let mp = crystal.element(k);
        validity.record(match mp.validate(ctx, rules) {
            Ok(()) => Outcome::Ok,
            Err(e) => fail(Counterexample::at(crystal.content(k), e.to_string()).element(mp)),
        });
    }
    for e in crystal.edges() {
        let expected = crystal.content(e.from).shifted(e.residue, 1);
        validity.record(if crystal.content(e.to) == &expected {
            Outcome::Ok
        } else {
            fail(
                Counterexample::at(
                    crystal.content(e.from),
                    format!("f-edge lands at {}", crystal.content(e.to)),
                )
                .residue(e.residue)
                .element(crystal.element(e.from)),
            )
        });
    }

    let mut membership = CheckResult::new(CheckKind::Membership);
    for (c, members) in crystal.index() {
        membership.record(if reduced.contains(c) {
            Outcome::Ok
        } else {
            fail(
                Counterexample::at(c, "content is not a weight".into())
                    .element(crystal.element(members[0])),
            )
        });
    }

    // Per-element, per-residue checks are independent; run them in parallel
    // and fold in element order.
    let per_element: Vec<[Vec<Outcome>; 3]> = ids
        .par_iter()
        .map(|&k| {
            let mp = crystal.element(k);
            let c = crystal.content(k);
            let mut hub = Vec::with_capacity(rank);
            let mut ef = Vec::with_capacity(2 * rank);
            let mut transit = Vec::new();
            for i in 0..rank {
                let raw = build_signature(rules, mp, i);
                let red = reduce(&raw);
                let p = phi(rules, mp, i) as i64;
                let e = epsilon(rules, mp, i) as i64;
                let theta = ctx.theta(c, i);
                hub.push(if p - e == theta {
                    Outcome::Ok
                } else {
                    fail(
                        Counterexample::at(c, format!("phi={p} epsilon={e} theta={theta}"))
                            .residue(i)
                            .element(mp)
                            .signature(&red),
                    )
                });

                ef.push(match apply_f(rules, mp, i) {
                    None => Outcome::Ok,
                    Some(up) => match apply_e(rules, &up, i) {
                        Some(back) if &back == mp => Outcome::Ok,
                        back => fail(
                            Counterexample::at(
                                c,
                                format!(
                                    "e(f(b)) = {} with f(b) = {up}",
                                    back.map_or("none".to_string(), |b| b.to_string())
                                ),
                            )
                            .residue(i)
                            .element(mp),
                        ),
                    },
                });
                ef.push(match apply_e(rules, mp, i) {
                    None => Outcome::Ok,
                    Some(down) => match apply_f(rules, &down, i) {
                        Some(back) if &back == mp => Outcome::Ok,
                        back => fail(
                            Counterexample::at(
                                c,
                                format!(
                                    "f(e(b)) = {} with e(b) = {down}",
                                    back.map_or("none".to_string(), |b| b.to_string())
                                ),
                            )
                            .residue(i)
                            .element(mp),
                        ),
                    },
                });

                if e == 0 {
                    transit.push(string_transit(ctx, rules, mp, c, i, p, reduced));
                }
            }
            [hub, ef, transit]
        })
        .collect();
    let mut hub_axiom = CheckResult::new(CheckKind::HubAxiom);
    let mut ef_identity = CheckResult::new(CheckKind::EfIdentity);
    let mut transit = CheckResult::new(CheckKind::StringTransit);
    for [hub, ef, tr] in per_element {
        hub.into_iter().for_each(|o| hub_axiom.record(o));
        ef.into_iter().for_each(|o| ef_identity.record(o));
        tr.into_iter().for_each(|o| transit.record(o));
    }

    let in_horizon: Vec<&WeightContent> = reduced
        .vertices()
        .keys()
        .filter(|c| c.degree() <= horizon)
        .collect();

    let mut orbit = CheckResult::new(CheckKind::OrbitCounts);
    for c in &in_horizon {
        for i in 0..rank {
            let Ok(image) = ctx.reflect(c, i) else {
                continue;
            };
            if image <= **c {
                // Each unordered pair once; fixed points compare trivially.
                if image == **c {
                    orbit.ok();
                }
                continue;
            }
            if image.degree() > horizon {
                orbit.skip();
                continue;
            }
            let (a, b) = (crystal.count(c), crystal.count(&image));
            orbit.record(if a == b {
                Outcome::Ok
            } else {
                fail(
                    Counterexample::at(c, format!("{a} elements here, {b} at reflection {image}"))
                        .residue(i),
                )
            });
        }
    }

    let mut path_bound = CheckResult::new(CheckKind::PathBound);
    let paths = reduced.path_counts();
    for c in &in_horizon {
        let count = crystal.count(c);
        let bound = &paths[*c];
        let count_big = BigUint::from(count);
        path_bound.record(if &count_big > bound {
            fail(Counterexample::at(
                c,
                format!("{count} elements exceed {bound} paths"),
            ))
        } else if bound.is_one() && count != 1 {
            fail(Counterexample::at(
                c,
                format!("unique path but {count} elements"),
            ))
        } else {
            Outcome::Ok
        });
    }

    let mut surjectivity = CheckResult::new(CheckKind::Surjectivity);
    for c in &in_horizon {
        surjectivity.record(if crystal.count(c) > 0 {
            Outcome::Ok
        } else {
            fail(Counterexample::at(
                c,
                "no element carries this weight".into(),
            ))
        });
    }

    let checks = vec![
        validity.finish(),
        membership.finish(),
        hub_axiom.finish(),
        orbit.finish(),
        path_bound.finish(),
        transit.finish(),
        ef_identity.finish(),
        surjectivity.finish(),
    ];
    VerificationReport {
        max_degree: crystal.max_degree(),
        elements: crystal.len(),
        vertices: in_horizon.len(),
        checks,
        ties: crystal.tie_warnings(),
    }
}

/// From an element at the top of its `i`-string (`ε = 0`), `fᵢ` must apply
/// exactly `φ` times and land on the reflected weight at the same defect.
fn string_transit(
    ctx: &CartanContext,
    rules: SpinRules,
    mp: &SpinMultipartition,
    c: &WeightContent,
    i: usize,
    phi_top: i64,
    reduced: &ReducedCrystal,
) -> Outcome {
    let exit = c.shifted(i, phi_top);
    if exit.degree() > reduced.max_degree() as i64 {
        return Outcome::Skip;
    }
    let mut cur = mp.clone();
    for step in 0..phi_top {
        match apply_f(rules, &cur, i) {
            Some(next) => cur = next,
            None => {
                return fail(
                    Counterexample::at(c, format!("f stopped after {step} of {phi_top} steps"))
                        .residue(i)
                        .element(mp),
                )
            }
        }
    }
    if apply_f(rules, &cur, i).is_some() {
        return fail(
            Counterexample::at(c, format!("f continues past {phi_top} steps"))
                .residue(i)
                .element(mp),
        );
    }
    let (d_in, d_out) = (ctx.defect(c), ctx.defect(&exit));
    if !reduced.contains(&exit) || d_in != d_out {
        return fail(
            Counterexample::at(
                c,
                format!("exits at {exit} with defect {d_out}, entered at {d_in}"),
            )
            .residue(i)
            .element(mp),
        );
    }
    Outcome::Ok
}

/// Orbit-count equality restricted to the vertices with `c[coordinate] =
/// value` whose reflections stay on the slice.
pub fn verify_slice(
    crystal: &CrystalGraph,
    reduced: &ReducedCrystal,
    coordinate: usize,
    value: i64,
) -> CheckResult {
    let ctx = crystal.context();
    let horizon = crystal.max_degree() as i64;
    let mut result = CheckResult::new(CheckKind::OrbitCounts);
    let Ok(slice) = reduced.slice(coordinate, value) else {
        return result.finish();
    };
    for c in slice.iter().filter(|c| c.degree() <= horizon) {
        for i in (0..ctx.rank()).filter(|&i| i != coordinate) {
            let Ok(image) = ctx.reflect(c, i) else {
                continue;
            };
            if image <= *c {
                continue;
            }
            if image.degree() > horizon {
                result.skip();
                continue;
            }
            let (a, b) = (crystal.count(c), crystal.count(&image));
            result.record(if a == b {
                Outcome::Ok
            } else {
                fail(
                    Counterexample::at(c, format!("{a} elements here, {b} at reflection {image}"))
                        .residue(i),
                )
            });
        }
    }
    result.finish()
}

/// One operator application, with the signatures it was decided from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkStep {
    pub residue: usize,
    pub before: SpinMultipartition,
    pub raw: Signature,
    pub reduced: Signature,
    /// Component and node that `fᵢ` adds; absent when `fᵢ` kills the element.
    pub cogood: Option<(usize, Node)>,
    pub after: Option<SpinMultipartition>,
}

/// Applies `f_{path[0]}`, `f_{path[1]}`, … from the empty multipartition,
/// stopping after the first step that yields nothing.
pub fn walkthrough(ctx: &CartanContext, rules: SpinRules, path: &[usize]) -> Vec<WalkStep> {
    let mut cur = SpinMultipartition::empty(ctx);
    let mut steps = Vec::new();
    for &i in path {
        let raw = build_signature(rules, &cur, i);
        let reduced = reduce(&raw);
        let cogood = cogood(&reduced).and_then(|s| Some((s.component, s.add_target()?)));
        let after = apply_f(rules, &cur, i);
        steps.push(WalkStep {
            residue: i,
            before: cur.clone(),
            raw,
            reduced,
            cogood,
            after: after.clone(),
        });
        match after {
            Some(next) => cur = next,
            None => break,
        }
    }
    steps
}

/// Applies `fᵢ` from the empty multipartition until it is no longer defined.
pub fn saturate(ctx: &CartanContext, rules: SpinRules, i: usize) -> SpinMultipartition {
    let mut cur = SpinMultipartition::empty(ctx);
    while let Some(next) = apply_f(rules, &cur, i) {
        cur = next;
    }
    cur
}

/// Total size of the maximum addable `i`-sets over all components.
pub fn addable_count(rules: SpinRules, mp: &SpinMultipartition, i: usize) -> usize {
    mp.components()
        .iter()
        .map(|cp| addable_set(cp, i, rules).len())
        .sum()
}
