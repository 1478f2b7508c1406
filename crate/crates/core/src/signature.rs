//! The `i`-signature of a spin multipartition and the crystal operators.
//!
//! Addable nodes give `+`, removable nodes `−`. In an `i`-corner component
//! with `i > 0`, a removable 0-node sitting directly above an addable 0-node
//! is kept together as a single `±`. Symbols are read bottom component first
//! and, inside a component, along the front edge from bottom-left to
//! top-right. Reduction rewrites
//!
//! ```text
//! + −   →  (nothing)
//! + ± − →  (nothing)
//! + ±   →  +   (the addable node of the pair)
//! ± −   →  −   (the removable node of the pair)
//! ```
//!
//! until none applies, leaving `−* ±* +*`.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::multipartition::SpinMultipartition;
use crate::partition::{addable_set, removable_set, Node, NodeRun, RunKind, SpinRules};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mark {
    Plus,
    Minus,
    PlusMinus,
}

impl Mark {
    pub fn weight(self) -> i64 {
        match self {
            Mark::Plus => 1,
            Mark::Minus => -1,
            Mark::PlusMinus => 0,
        }
    }
}

/// One signature letter together with the node(s) it refers to.
///
/// For `Plus`/`Minus`, `node` is the node the letter was read from and `run`
/// the physical run it belongs to; operators act on `run[0]`. For
/// `PlusMinus`, `node` is the removable node and `partner` the addable node
/// directly below it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symbol {
    pub mark: Mark,
    pub component: usize,
    pub node: Node,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partner: Option<Node>,
    pub run: Vec<Node>,
}

impl Symbol {
    pub fn plus(component: usize, node: Node, run: Vec<Node>) -> Self {
        Symbol {
            mark: Mark::Plus,
            component,
            node,
            partner: None,
            run,
        }
    }

    pub fn minus(component: usize, node: Node, run: Vec<Node>) -> Self {
        Symbol {
            mark: Mark::Minus,
            component,
            node,
            partner: None,
            run,
        }
    }

    pub fn pair(component: usize, removable: Node, addable: Node) -> Self {
        Symbol {
            mark: Mark::PlusMinus,
            component,
            node: removable,
            partner: Some(addable),
            run: vec![removable],
        }
    }

    /// `+` left behind by `+±`.
    fn pair_addable(&self) -> Symbol {
        let addable = self.partner.expect("pair symbol");
        Symbol::plus(self.component, addable, vec![addable])
    }

    /// `−` left behind by `±−`.
    fn pair_removable(&self) -> Symbol {
        Symbol::minus(self.component, self.node, vec![self.node])
    }

    /// Node added by `fᵢ` when this letter is cogood.
    pub fn add_target(&self) -> Option<Node> {
        match self.mark {
            Mark::Plus => Some(self.run[0]),
            Mark::PlusMinus => self.partner,
            Mark::Minus => None,
        }
    }

    /// Node removed by `eᵢ` when this letter is good.
    pub fn remove_target(&self) -> Option<Node> {
        match self.mark {
            Mark::Minus => Some(self.run[0]),
            Mark::PlusMinus => Some(self.node),
            Mark::Plus => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub residue: usize,
    pub symbols: Vec<Symbol>,
}

impl Signature {
    pub fn marks(&self) -> Vec<Mark> {
        self.symbols.iter().map(|s| s.mark).collect()
    }

    pub fn count(&self, mark: Mark) -> usize {
        self.symbols.iter().filter(|s| s.mark == mark).count()
    }

    /// `#+ − #−`, with `±` counting zero; every rewrite rule preserves it.
    pub fn balance(&self) -> i64 {
        self.symbols.iter().map(|s| s.mark.weight()).sum()
    }

    /// True when the marks read `−* ±* +*`.
    pub fn is_reduced_shape(&self) -> bool {
        let rank = |m: Mark| match m {
            Mark::Minus => 0,
            Mark::PlusMinus => 1,
            Mark::Plus => 2,
        };
        self.symbols
            .windows(2)
            .all(|w| rank(w[0].mark) <= rank(w[1].mark))
    }

    pub fn render(&self, ascii: bool) -> String {
        render_marks(&self.marks(), ascii)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

pub fn render_marks(marks: &[Mark], ascii: bool) -> String {
    marks
        .iter()
        .map(|m| match m {
            Mark::Plus => "+",
            Mark::Minus => "-",
            Mark::PlusMinus if ascii => "pm",
            Mark::PlusMinus => "±",
        })
        .collect()
}

/// Parses `+`, `-`/`−` and `±`/`pm` into marks.
pub fn parse_marks(s: &str) -> Option<Vec<Mark>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(match c {
            '+' => Mark::Plus,
            '-' | '−' => Mark::Minus,
            '±' => Mark::PlusMinus,
            'p' if chars.next() == Some('m') => Mark::PlusMinus,
            _ => return None,
        });
    }
    Some(out)
}

enum Letter {
    Run(usize, NodeRun),
    Pair(usize, Node, Node),
}

impl Letter {
    fn key(&self) -> (std::cmp::Reverse<usize>, usize) {
        match self {
            Letter::Run(_, run) => run.sort_key(),
            Letter::Pair(_, _, addable) => (std::cmp::Reverse(addable.row), addable.col),
        }
    }
}

/// Raw (unreduced) `i`-signature.
pub fn build_signature(rules: SpinRules, mp: &SpinMultipartition, i: usize) -> Signature {
    let mut symbols = Vec::new();
    for (k, comp) in mp.components().iter().enumerate() {
        let add = addable_set(comp, i, rules);
        let rem = removable_set(comp, i, rules);
        let mut pairs: Vec<(Node, Node)> = Vec::new();
        if comp.corner > 0 && i == 0 {
            let addable: Vec<Node> = add.nodes().collect();
            for r in rem.nodes() {
                let below = Node::new(r.row + 1, r.col);
                if addable.contains(&below) {
                    pairs.push((r, below));
                }
            }
        }
        let paired = |n: &Node| pairs.iter().any(|(r, a)| r == n || a == n);
        let mut letters: Vec<Letter> = Vec::new();
        for run in add.runs.iter().chain(rem.runs.iter()) {
            let nodes: Vec<Node> = run.nodes.iter().copied().filter(|n| !paired(n)).collect();
            if !nodes.is_empty() {
                letters.push(Letter::Run(
                    k,
                    NodeRun {
                        kind: run.kind,
                        nodes,
                    },
                ));
            }
        }
        letters.extend(pairs.iter().map(|&(r, a)| Letter::Pair(k, r, a)));
        letters.sort_by_key(|l| l.key());
        for letter in letters {
            match letter {
                Letter::Run(k, run) => {
                    for &node in &run.nodes {
                        symbols.push(match run.kind {
                            RunKind::Addable => Symbol::plus(k, node, run.nodes.clone()),
                            RunKind::Removable => Symbol::minus(k, node, run.nodes.clone()),
                        });
                    }
                }
                Letter::Pair(k, r, a) => symbols.push(Symbol::pair(k, r, a)),
            }
        }
    }
    Signature {
        residue: i,
        symbols,
    }
}

/// Canonical reduction: a single left-to-right pass with a stack.
pub fn reduce(sig: &Signature) -> Signature {
    let mut stack: Vec<Symbol> = Vec::with_capacity(sig.symbols.len());
    for sym in &sig.symbols {
        let mut incoming = sym.clone();
        loop {
            match (stack.last().map(|s| s.mark), incoming.mark) {
                (Some(Mark::Plus), Mark::Minus) => {
                    stack.pop();
                    break;
                }
                (Some(Mark::Plus), Mark::PlusMinus) => {
                    // `+±` → `+` bound to the pair's addable node.
                    stack.pop();
                    incoming = incoming.pair_addable();
                    continue;
                }
                (Some(Mark::PlusMinus), Mark::Minus) => {
                    // `±−` → `−` bound to the pair's removable node; it may
                    // still cancel against a `+` further left.
                    let pair = stack.pop().unwrap();
                    incoming = pair.pair_removable();
                    continue;
                }
                _ => {
                    stack.push(incoming);
                    break;
                }
            }
        }
    }
    Signature {
        residue: sig.residue,
        symbols: stack,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rule {
    PlusMinus,
    PlusPairMinus,
    PlusPair,
    PairMinus,
}

fn applicable(symbols: &[Symbol]) -> Vec<(usize, Rule)> {
    let mut out = Vec::new();
    for p in 0..symbols.len() {
        let m0 = symbols[p].mark;
        let m1 = symbols.get(p + 1).map(|s| s.mark);
        let m2 = symbols.get(p + 2).map(|s| s.mark);
        match (m0, m1) {
            (Mark::Plus, Some(Mark::Minus)) => out.push((p, Rule::PlusMinus)),
            (Mark::Plus, Some(Mark::PlusMinus)) => {
                out.push((p, Rule::PlusPair));
                if m2 == Some(Mark::Minus) {
                    out.push((p, Rule::PlusPairMinus));
                }
            }
            (Mark::PlusMinus, Some(Mark::Minus)) => out.push((p, Rule::PairMinus)),
            _ => {}
        }
    }
    out
}

/// Applies rewrite rules one at a time in a seed-determined random order
/// until none applies.
pub fn reduce_with_order(sig: &Signature, seed: u64) -> Signature {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut symbols = sig.symbols.clone();
    loop {
        let choices = applicable(&symbols);
        if choices.is_empty() {
            break;
        }
        let (p, rule) = choices[rng.gen_range(0..choices.len())];
        match rule {
            Rule::PlusMinus => {
                symbols.drain(p..p + 2);
            }
            Rule::PlusPairMinus => {
                symbols.drain(p..p + 3);
            }
            Rule::PlusPair => {
                let replacement = symbols[p + 1].pair_addable();
                symbols.splice(p..p + 2, [replacement]);
            }
            Rule::PairMinus => {
                let replacement = symbols[p].pair_removable();
                symbols.splice(p..p + 2, [replacement]);
            }
        }
    }
    Signature {
        residue: sig.residue,
        symbols,
    }
}

pub fn reduced_signature(rules: SpinRules, mp: &SpinMultipartition, i: usize) -> Signature {
    reduce(&build_signature(rules, mp, i))
}

/// `φᵢ = #+ + #±` in the reduced signature.
pub fn phi(rules: SpinRules, mp: &SpinMultipartition, i: usize) -> usize {
    let r = reduced_signature(rules, mp, i);
    r.count(Mark::Plus) + r.count(Mark::PlusMinus)
}

/// `εᵢ = #− + #±` in the reduced signature.
pub fn epsilon(rules: SpinRules, mp: &SpinMultipartition, i: usize) -> usize {
    let r = reduced_signature(rules, mp, i);
    r.count(Mark::Minus) + r.count(Mark::PlusMinus)
}

/// The cogood letter: leftmost `±` or `+` of the reduced signature.
pub fn cogood(reduced: &Signature) -> Option<&Symbol> {
    reduced.symbols.iter().find(|s| s.mark != Mark::Minus)
}

/// The good letter: rightmost `−` or `±` of the reduced signature.
pub fn good(reduced: &Signature) -> Option<&Symbol> {
    reduced.symbols.iter().rev().find(|s| s.mark != Mark::Plus)
}

pub fn apply_f(rules: SpinRules, mp: &SpinMultipartition, i: usize) -> Option<SpinMultipartition> {
    let reduced = reduced_signature(rules, mp, i);
    let sym = cogood(&reduced)?;
    mp.with_node(sym.component, sym.add_target()?)
}

pub fn apply_e(rules: SpinRules, mp: &SpinMultipartition, i: usize) -> Option<SpinMultipartition> {
    let reduced = reduced_signature(rules, mp, i);
    let sym = good(&reduced)?;
    mp.without_node(sym.component, sym.remove_target()?)
}
