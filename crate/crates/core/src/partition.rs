//! Partitions carrying spin residues.
//!
//! Nodes use English conventions: row `s` and column `t` both start at 1.
//! A 0-corner partition places `t̂` in node `(s,t)`; an `i`-corner partition
//! (`i > 0`) places `(i+t−s+1)^`, so residues run down diagonals.

use std::cmp::Reverse;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Spin residue `m̂ = min((m−1) mod h, (−m) mod h)`.
pub fn hat(m: i64, h: usize) -> usize {
    let h = h as i64;
    (m - 1).rem_euclid(h).min((-m).rem_euclid(h)) as usize
}

/// Residue of `node` in a partition with the given corner.
pub fn residue(corner: usize, node: Node, h: usize) -> usize {
    let (s, t) = (node.row as i64, node.col as i64);
    if corner == 0 {
        hat(t, h)
    } else {
        hat(corner as i64 + t - s + 1, h)
    }
}

/// Which reading of "no `h` identical columns" to apply.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Every gap `λⱼ − λⱼ₊₁` (including the last row down to zero) is below `h`.
    #[default]
    Paper,
    /// As `Paper`, except a gap of exactly `h` is allowed above a row whose
    /// length is divisible by `h`.
    Standard,
    /// As `Paper`, except a gap of exactly `h` is allowed above a row whose
    /// length is not divisible by `h`.
    Indivisible,
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(Variant::Paper),
            "standard" => Ok(Variant::Standard),
            "indivisible" => Ok(Variant::Indivisible),
            other => Err(format!(
                "unknown variant `{other}` (expected paper|standard|indivisible)"
            )),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Paper => "paper",
            Variant::Standard => "standard",
            Variant::Indivisible => "indivisible",
        })
    }
}

/// Predicate a 0-corner partition must keep when its addable and removable
/// sets are computed. Elements themselves are always checked against both
/// predicates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroCornerSets {
    /// `h`-strict and `h`-restricted.
    #[default]
    Restricted,
    /// `h`-strict only.
    Strict,
}

impl std::str::FromStr for ZeroCornerSets {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "restricted" => Ok(ZeroCornerSets::Restricted),
            "strict" => Ok(ZeroCornerSets::Strict),
            other => Err(format!(
                "unknown 0-corner rule `{other}` (expected restricted|strict)"
            )),
        }
    }
}

impl fmt::Display for ZeroCornerSets {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ZeroCornerSets::Restricted => "restricted",
            ZeroCornerSets::Strict => "strict",
        })
    }
}

/// Residue modulus plus the predicate readings, shared by every
/// partition-level operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpinRules {
    pub h: usize,
    pub variant: Variant,
    #[serde(default)]
    pub zero_corner: ZeroCornerSets,
}

impl SpinRules {
    pub fn new(h: usize, variant: Variant) -> Self {
        assert!(h >= 3 && h % 2 == 1, "h must be odd and at least 3");
        SpinRules {
            h,
            variant,
            zero_corner: ZeroCornerSets::default(),
        }
    }

    pub fn with_zero_corner(self, zero_corner: ZeroCornerSets) -> Self {
        SpinRules {
            zero_corner,
            ..self
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Row lengths, weakly decreasing, no zero rows.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zero rows. Returns `None` if the
    /// rows increase anywhere.
    pub fn new(mut rows: Vec<usize>) -> Option<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition { rows })
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Length of row `s` (1-based); 0 past the last row.
    pub fn row_len(&self, s: usize) -> usize {
        self.rows.get(s.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && self.row_len(node.row) >= node.col
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |t| Node::new(r + 1, t)))
    }

    /// Adds a node; `None` if the result is not a Young diagram.
    pub fn with_node(&self, node: Node) -> Option<Partition> {
        if self.row_len(node.row) + 1 != node.col {
            return None;
        }
        if node.row > 1 && self.row_len(node.row - 1) < node.col {
            return None;
        }
        let mut rows = self.rows.clone();
        if node.row == rows.len() + 1 {
            rows.push(1);
        } else if node.row <= rows.len() {
            rows[node.row - 1] += 1;
        } else {
            return None;
        }
        Some(Partition { rows })
    }

    /// Removes a node; `None` if the result is not a Young diagram.
    pub fn without_node(&self, node: Node) -> Option<Partition> {
        if node.row == 0 || self.row_len(node.row) != node.col || node.col == 0 {
            return None;
        }
        if self.row_len(node.row + 1) >= node.col {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[node.row - 1] -= 1;
        Partition::new(rows)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

/// No repeated row length unless that length is divisible by `h`.
pub fn is_h_strict(p: &Partition, h: usize) -> bool {
    p.rows.windows(2).all(|w| w[0] != w[1] || w[0] % h == 0)
}

pub fn is_h_restricted(p: &Partition, h: usize, variant: Variant) -> bool {
    let rows = &p.rows;
    (0..rows.len()).all(|j| {
        let next = rows.get(j + 1).copied().unwrap_or(0);
        let gap = rows[j] - next;
        match variant {
            Variant::Paper => gap < h,
            Variant::Standard => gap < h || (gap == h && rows[j].is_multiple_of(h)),
            Variant::Indivisible => gap < h || (gap == h && !rows[j].is_multiple_of(h)),
        }
    })
}

/// One component of a spin multipartition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CornerPartition {
    pub corner: usize,
    pub rows: Partition,
}

impl CornerPartition {
    pub fn new(corner: usize, rows: Partition) -> Self {
        CornerPartition { corner, rows }
    }

    pub fn empty(corner: usize) -> Self {
        CornerPartition {
            corner,
            rows: Partition::empty(),
        }
    }

    pub fn residue(&self, node: Node, h: usize) -> usize {
        residue(self.corner, node, h)
    }

    /// 0-corner partitions must be `h`-strict and `h`-restricted, the others
    /// only `h`-restricted.
    pub fn admits(&self, p: &Partition, rules: SpinRules) -> bool {
        is_h_restricted(p, rules.h, rules.variant) && (self.corner != 0 || is_h_strict(p, rules.h))
    }

    pub fn is_valid(&self, rules: SpinRules) -> bool {
        self.admits(&self.rows, rules)
    }

    /// The predicate used when searching for addable and removable sets.
    pub fn admits_for_sets(&self, p: &Partition, rules: SpinRules) -> bool {
        if self.corner == 0 && rules.zero_corner == ZeroCornerSets::Strict {
            is_h_strict(p, rules.h)
        } else {
            self.admits(p, rules)
        }
    }

    pub fn with_rows(&self, rows: Partition) -> Self {
        CornerPartition {
            corner: self.corner,
            rows,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RunKind {
    Addable,
    Removable,
}

/// A horizontal or vertical segment of equal-residue nodes, listed in the
/// order they can physically be added (top/left first) or removed
/// (bottom/right first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NodeRun {
    pub kind: RunKind,
    pub nodes: Vec<Node>,
}

impl NodeRun {
    pub fn bottom_row(&self) -> usize {
        self.nodes.iter().map(|n| n.row).max().unwrap_or(0)
    }

    pub fn left_col(&self) -> usize {
        self.nodes.iter().map(|n| n.col).min().unwrap_or(0)
    }

    /// The node an operator acts on: the first one in physical order.
    pub fn actionable(&self) -> Node {
        self.nodes[0]
    }

    /// Position along the front edge, bottom-left first.
    pub fn sort_key(&self) -> (Reverse<usize>, usize) {
        (Reverse(self.bottom_row()), self.left_col())
    }
}

/// Result of a maximum-set search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeSelection {
    pub runs: Vec<NodeRun>,
    /// How many distinct maximum-cardinality sets exist; more than one means
    /// the tie-break rule decided.
    pub maximum_sets: usize,
}

impl NodeSelection {
    pub fn len(&self) -> usize {
        self.runs.iter().map(|r| r.nodes.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn is_tie(&self) -> bool {
        self.maximum_sets > 1
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.runs.iter().flat_map(|r| r.nodes.iter().copied())
    }
}

type TieKey = Vec<(Reverse<usize>, usize)>;

struct Search<'a> {
    cp: &'a CornerPartition,
    rules: SpinRules,
    kind: RunKind,
    base: Vec<usize>,
    /// Per row, the admissible numbers of nodes to add or remove.
    options: Vec<Vec<usize>>,
    chosen: Vec<usize>,
    best: Option<(usize, TieKey, Vec<Node>)>,
    maximum_sets: usize,
}

impl Search<'_> {
    fn new_len(&self, r: usize, k: usize) -> usize {
        match self.kind {
            RunKind::Addable => self.base[r] + k,
            RunKind::Removable => self.base[r] - k,
        }
    }

    fn run(&mut self, r: usize, prev: usize, count: usize) {
        if r == self.base.len() {
            self.leaf(count);
            return;
        }
        let remaining: usize = self.options[r..]
            .iter()
            .map(|o| o.iter().copied().max().unwrap_or(0))
            .sum();
        if let Some((best, _, _)) = &self.best {
            if count + remaining < *best {
                return;
            }
        }
        for idx in 0..self.options[r].len() {
            let k = self.options[r][idx];
            let len = self.new_len(r, k);
            if len > prev {
                continue;
            }
            self.chosen[r] = k;
            self.run(r + 1, len, count + k);
        }
        self.chosen[r] = 0;
    }

    fn leaf(&mut self, count: usize) {
        let rows: Vec<usize> = (0..self.base.len())
            .map(|r| self.new_len(r, self.chosen[r]))
            .collect();
        let Some(p) = Partition::new(rows) else {
            return;
        };
        if !self.cp.admits_for_sets(&p, self.rules) {
            return;
        }
        let nodes = self.chosen_nodes();
        let mut key: TieKey = nodes.iter().map(|n| (Reverse(n.row), n.col)).collect();
        key.sort();
        match &self.best {
            Some((best, _, _)) if count < *best => {}
            Some((best, best_key, _)) if count == *best => {
                self.maximum_sets += 1;
                if key < *best_key {
                    self.best = Some((count, key, nodes));
                }
            }
            _ => {
                self.maximum_sets = 1;
                self.best = Some((count, key, nodes));
            }
        }
    }

    fn chosen_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (r, &k) in self.chosen.iter().enumerate() {
            for step in 0..k {
                let col = match self.kind {
                    RunKind::Addable => self.base[r] + 1 + step,
                    RunKind::Removable => self.base[r] - step,
                };
                out.push(Node::new(r + 1, col));
            }
        }
        out
    }
}

fn maximum_set(cp: &CornerPartition, i: usize, rules: SpinRules, kind: RunKind) -> NodeSelection {
    let mut base = cp.rows.rows().to_vec();
    if kind == RunKind::Addable {
        // Two consecutive equal residues is the most a column can take, so two
        // fresh rows suffice.
        base.extend([0, 0]);
    }
    let options: Vec<Vec<usize>> = base
        .iter()
        .enumerate()
        .map(|(r, &len)| {
            let mut opts = vec![0];
            for k in 1..=2usize {
                let col = match kind {
                    RunKind::Addable => len + k,
                    RunKind::Removable => {
                        if k > len {
                            break;
                        }
                        len + 1 - k
                    }
                };
                if cp.residue(Node::new(r + 1, col), rules.h) != i {
                    break;
                }
                opts.push(k);
            }
            // Larger moves first so the bound prunes early.
            opts.reverse();
            opts
        })
        .collect();
    let rows = base.len();
    let mut search = Search {
        cp,
        rules,
        kind,
        base,
        options,
        chosen: vec![0; rows],
        best: None,
        maximum_sets: 0,
    };
    search.run(0, usize::MAX, 0);
    let (_, _, nodes) = search.best.expect("the empty set is always admissible");
    NodeSelection {
        runs: group_runs(nodes, kind),
        maximum_sets: search.maximum_sets,
    }
}

/// Splits a node set into runs sorted along the front edge (bottom-left
/// first).
fn group_runs(mut nodes: Vec<Node>, kind: RunKind) -> Vec<NodeRun> {
    nodes.sort();
    let mut runs: Vec<Vec<Node>> = Vec::new();
    let mut singles: Vec<Node> = Vec::new();
    let mut k = 0;
    while k < nodes.len() {
        let mut end = k + 1;
        while end < nodes.len()
            && nodes[end].row == nodes[k].row
            && nodes[end].col == nodes[end - 1].col + 1
        {
            end += 1;
        }
        if end - k > 1 {
            runs.push(nodes[k..end].to_vec());
        } else {
            singles.push(nodes[k]);
        }
        k = end;
    }
    singles.sort_by_key(|n| (n.col, n.row));
    let mut k = 0;
    while k < singles.len() {
        let mut end = k + 1;
        while end < singles.len()
            && singles[end].col == singles[k].col
            && singles[end].row == singles[end - 1].row + 1
        {
            end += 1;
        }
        runs.push(singles[k..end].to_vec());
        k = end;
    }
    let mut out: Vec<NodeRun> = runs
        .into_iter()
        .map(|mut nodes| {
            if kind == RunKind::Removable {
                nodes.reverse();
            }
            NodeRun { kind, nodes }
        })
        .collect();
    out.sort_by_key(|r| r.sort_key());
    out
}

/// Maximum set of addable `i`-nodes: adding all of them keeps the corner's
/// predicates.
pub fn addable_set(cp: &CornerPartition, i: usize, rules: SpinRules) -> NodeSelection {
    maximum_set(cp, i, rules, RunKind::Addable)
}

/// Maximum set of removable `i`-nodes: removing all of them keeps the
/// corner's predicates.
pub fn removable_set(cp: &CornerPartition, i: usize, rules: SpinRules) -> NodeSelection {
    maximum_set(cp, i, rules, RunKind::Removable)
}

fn residue_char(r: usize) -> String {
    if r < 10 {
        r.to_string()
    } else {
        format!("{{{r}}}")
    }
}

/// Residue diagram, one line per row.
pub fn render(cp: &CornerPartition, h: usize) -> String {
    render_rows(cp, h).join("\n")
}

pub fn render_rows(cp: &CornerPartition, h: usize) -> Vec<String> {
    cp.rows
        .rows()
        .iter()
        .enumerate()
        .map(|(r, &len)| {
            (1..=len)
                .map(|t| residue_char(cp.residue(Node::new(r + 1, t), h)))
                .collect()
        })
        .collect()
}

/// Rows joined by commas, `∅` for the empty partition.
pub fn render_compact(cp: &CornerPartition, h: usize) -> String {
    if cp.rows.is_empty() {
        "∅".to_string()
    } else {
        render_rows(cp, h).join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn part(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn cp(corner: usize, rows: &[usize]) -> CornerPartition {
        CornerPartition::new(corner, part(rows))
    }

    fn paper(h: usize) -> SpinRules {
        SpinRules::new(h, Variant::Paper)
    }

    fn run_nodes(sel: &NodeSelection) -> Vec<Vec<(usize, usize)>> {
        sel.runs
            .iter()
            .map(|r| r.nodes.iter().map(|n| (n.row, n.col)).collect())
            .collect()
    }

    #[test]
    fn hat_sequences() {
        let h7: Vec<usize> = (1..=8).map(|m| hat(m, 7)).collect();
        assert_eq!(h7, vec![0, 1, 2, 3, 2, 1, 0, 0]);
        let h3: Vec<usize> = (1..=6).map(|m| hat(m, 3)).collect();
        assert_eq!(h3, vec![0, 1, 0, 0, 1, 0]);
        for h in [3, 5, 7, 9, 11] {
            assert_eq!(hat(1, h), 0);
            for m in -20..20 {
                assert!(hat(m, h) <= (h - 1) / 2);
            }
        }
    }

    #[test]
    fn corner_residues() {
        assert_eq!(residue(1, Node::new(4, 1), 7), 1);
        assert_eq!(residue(1, Node::new(2, 1), 3), 0);
        for s in 1..10 {
            assert_eq!(residue(0, Node::new(s, 1), 5), 0);
        }
        for i in 0..=3 {
            assert_eq!(residue(i, Node::new(1, 1), 7), i);
        }
    }

    #[test]
    fn render_matches_displayed_diagram() {
        let d = cp(1, &[15, 14, 6, 6, 4]);
        let rows = render_rows(&d, 7);
        assert_eq!(
            rows,
            vec![
                "123210012321001",
                "01232100123210",
                "001232",
                "100123",
                "2100"
            ]
        );
        assert_eq!(render(&cp(0, &[3, 2]), 3), "010\n01");
        assert_eq!(render(&cp(2, &[]), 5), "");
        assert_eq!(render_compact(&cp(1, &[3, 1, 1]), 3), "100,0,0");
    }

    #[test]
    fn strictness() {
        assert!(is_h_strict(&part(&[3, 3, 1]), 3));
        assert!(!is_h_strict(&part(&[2, 2]), 3));
        assert!(is_h_strict(&part(&[1]), 5));
    }

    #[test]
    fn restrictedness_variants() {
        assert!(is_h_restricted(&part(&[3, 1, 1]), 3, Variant::Paper));
        assert!(!is_h_restricted(&part(&[4, 1]), 3, Variant::Paper));
        assert!(is_h_restricted(&part(&[3]), 3, Variant::Standard));
        assert!(!is_h_restricted(&part(&[3]), 3, Variant::Paper));
        assert!(!is_h_restricted(&part(&[4, 1]), 3, Variant::Standard));
    }

    #[test]
    fn partition_editing() {
        let p = part(&[2, 1]);
        assert_eq!(p.with_node(Node::new(1, 3)), Some(part(&[3, 1])));
        assert_eq!(p.with_node(Node::new(3, 1)), Some(part(&[2, 1, 1])));
        assert_eq!(p.with_node(Node::new(2, 3)), None);
        assert_eq!(p.without_node(Node::new(1, 2)), Some(part(&[1, 1])));
        assert_eq!(p.without_node(Node::new(1, 1)), None);
        assert_eq!(Partition::new(vec![1, 2]), None);
        assert_eq!(Partition::new(vec![2, 0]), Some(part(&[2])));
    }

    #[test]
    fn four_addable_zero_nodes_below_and_beside_a_one() {
        let sel = addable_set(&cp(1, &[1]), 0, paper(3));
        assert_eq!(
            run_nodes(&sel),
            vec![vec![(2, 1), (3, 1)], vec![(1, 2), (1, 3)]]
        );
        assert!(!sel.is_tie());
    }

    #[test]
    fn maximality_is_cardinality() {
        let sel = addable_set(&cp(0, &[3, 2, 1]), 0, paper(3));
        assert_eq!(run_nodes(&sel), vec![vec![(2, 3)], vec![(1, 4)]]);
        let sel = removable_set(&cp(0, &[3, 2, 1]), 0, paper(3));
        assert_eq!(run_nodes(&sel), vec![vec![(3, 1)]]);
    }

    #[test]
    fn collective_addition_beyond_single_nodes() {
        // (1,4) alone breaks restrictedness, together with (2,2) it does not.
        let sel = addable_set(&cp(1, &[3, 1, 1]), 1, paper(3));
        assert_eq!(
            run_nodes(&sel),
            vec![vec![(4, 1)], vec![(2, 2)], vec![(1, 4)]]
        );
    }

    #[test]
    fn removable_vertical_run() {
        let sel = removable_set(&cp(1, &[1, 1, 1]), 0, paper(3));
        assert_eq!(run_nodes(&sel), vec![vec![(3, 1), (2, 1)]]);
        assert!(removable_set(&cp(1, &[]), 0, paper(3)).is_empty());
        assert!(addable_set(&cp(2, &[]), 0, paper(5)).is_empty());
    }

    #[test]
    fn equal_adjacent_residues_only_for_zero() {
        for h in [3usize, 5, 7, 9] {
            let n = (h - 1) / 2;
            for corner in 0..=n {
                for s in 1..=(2 * h) {
                    for t in 1..=(2 * h) {
                        let here = residue(corner, Node::new(s, t), h);
                        let below = residue(corner, Node::new(s + 1, t), h);
                        let right = residue(corner, Node::new(s, t + 1), h);
                        if corner > 0 {
                            if here == below {
                                assert_eq!(here, 0);
                            }
                            // never three in a column
                            let below2 = residue(corner, Node::new(s + 2, t), h);
                            assert!(!(here == below && below == below2));
                        }
                        if here == right {
                            assert_eq!(here, 0);
                            let right2 = residue(corner, Node::new(s, t + 2), h);
                            assert_ne!(right, right2);
                        }
                    }
                }
            }
        }
    }

    fn arb_corner_partition() -> impl Strategy<Value = (usize, CornerPartition, usize)> {
        (
            prop_oneof![Just(3usize), Just(5usize)],
            proptest::collection::vec(0usize..4, 0..6),
        )
            .prop_flat_map(|(h, steps)| {
                let n = (h - 1) / 2;
                (Just(h), 0..=n, Just(steps), 0..=n)
            })
            .prop_filter_map("invalid partition", |(h, corner, steps, i)| {
                // Build rows from descending partial sums of steps.
                let mut rows = Vec::new();
                let mut acc = 0;
                for s in steps.iter().rev() {
                    acc += s;
                    if acc > 0 {
                        rows.push(acc);
                    }
                }
                rows.reverse();
                let c = CornerPartition::new(corner, Partition::new(rows)?);
                c.is_valid(paper(h)).then_some((h, c, i))
            })
    }

    proptest! {
        #[test]
        fn full_sets_keep_predicates((h, c, i) in arb_corner_partition()) {
            let rules = paper(h);
            let add = addable_set(&c, i, rules);
            let mut p = c.rows.clone();
            for run in &add.runs {
                for node in &run.nodes {
                    prop_assert_eq!(c.residue(*node, h), i);
                    p = p.with_node(*node).expect("run order is physical");
                }
            }
            prop_assert!(c.admits(&p, rules));
            for run in &add.runs {
                prop_assert!(c.rows.with_node(run.actionable()).is_some());
            }

            let rem = removable_set(&c, i, rules);
            let mut p = c.rows.clone();
            for run in &rem.runs {
                for node in &run.nodes {
                    prop_assert_eq!(c.residue(*node, h), i);
                    p = p.without_node(*node).expect("run order is physical");
                }
            }
            prop_assert!(c.admits(&p, rules));
        }

        #[test]
        fn added_runs_become_removable((h, c, i) in arb_corner_partition()) {
            let rules = paper(h);
            for run in addable_set(&c, i, rules).runs {
                let mut p = c.rows.clone();
                for node in &run.nodes {
                    p = p.with_node(*node).unwrap();
                }
                let grown = c.with_rows(p);
                if !grown.is_valid(rules) {
                    continue;
                }
                let rem = removable_set(&grown, i, rules);
                if rem.is_tie() {
                    continue;
                }
                let rem: Vec<Node> = rem.nodes().collect();
                for node in &run.nodes {
                    prop_assert!(rem.contains(node), "{:?} not removable from {:?}", node, grown);
                }
            }
        }
    }
}
