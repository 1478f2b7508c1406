use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanContext, WeightContent};
use crate::error::{Error, Result};
use crate::partition::{render_compact, CornerPartition, Node, Partition, SpinRules};

/// Ordered tuple of corner partitions, bottom first: `a₀` 0-corner
/// components, then `a₁` 1-corner components, and so on up to `aₙ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SpinMultipartition {
    components: Vec<CornerPartition>,
}

/// Corner tags, bottom first, dictated by the highest weight.
pub fn layout(ctx: &CartanContext) -> Vec<usize> {
    ctx.highest_weight()
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| std::iter::repeat_n(i, a as usize))
        .collect()
}

impl SpinMultipartition {
    pub fn empty(ctx: &CartanContext) -> Self {
        SpinMultipartition {
            components: layout(ctx)
                .into_iter()
                .map(CornerPartition::empty)
                .collect(),
        }
    }

    /// Checks the component layout against `Λ` and every component against
    /// its corner's predicates.
    pub fn new(
        ctx: &CartanContext,
        rules: SpinRules,
        components: Vec<CornerPartition>,
    ) -> Result<Self> {
        let mp = SpinMultipartition { components };
        mp.validate(ctx, rules)?;
        Ok(mp)
    }

    pub fn validate(&self, ctx: &CartanContext, rules: SpinRules) -> Result<()> {
        let corners: Vec<usize> = self.components.iter().map(|c| c.corner).collect();
        let expected = layout(ctx);
        if corners != expected {
            return Err(Error::InvalidMultipartition(format!(
                "corner layout {corners:?} does not match {expected:?}"
            )));
        }
        for (k, c) in self.components.iter().enumerate() {
            if !c.is_valid(rules) {
                return Err(Error::InvalidMultipartition(format!(
                    "component {k} ({}-corner {}) violates its predicates",
                    c.corner, c.rows
                )));
            }
        }
        Ok(())
    }

    pub fn components(&self) -> &[CornerPartition] {
        &self.components
    }

    pub fn degree(&self) -> usize {
        self.components.iter().map(|c| c.rows.size()).sum()
    }

    /// `cᵢ` counts the nodes of residue `i` over all components.
    pub fn content(&self, ctx: &CartanContext) -> WeightContent {
        let mut c = vec![0i64; ctx.rank()];
        for comp in &self.components {
            for node in comp.rows.nodes() {
                c[comp.residue(node, ctx.h())] += 1;
            }
        }
        WeightContent(c)
    }

    pub(crate) fn with_node(&self, component: usize, node: Node) -> Option<Self> {
        let rows = self.components[component].rows.with_node(node)?;
        Some(self.replace(component, rows))
    }

    pub(crate) fn without_node(&self, component: usize, node: Node) -> Option<Self> {
        let rows = self.components[component].rows.without_node(node)?;
        Some(self.replace(component, rows))
    }

    fn replace(&self, component: usize, rows: Partition) -> Self {
        let mut components = self.components.clone();
        components[component] = components[component].with_rows(rows);
        SpinMultipartition { components }
    }

    /// Residue diagrams top component first, e.g. `1:1,0 | 0:01`.
    pub fn render(&self, h: usize) -> String {
        self.components
            .iter()
            .rev()
            .map(|c| format!("{}:{}", c.corner, render_compact(c, h)))
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

impl fmt::Display for SpinMultipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}:{}", c.corner, c.rows)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Variant;

    fn comp(corner: usize, rows: &[usize]) -> CornerPartition {
        CornerPartition::new(corner, Partition::new(rows.to_vec()).unwrap())
    }

    #[test]
    fn layout_and_content() {
        let ctx = CartanContext::new(2, &[1, 2, 1]).unwrap();
        assert_eq!(layout(&ctx), vec![0, 1, 1, 2]);
        let rules = SpinRules::new(5, Variant::Paper);
        let mp = SpinMultipartition::new(
            &ctx,
            rules,
            vec![comp(0, &[1]), comp(1, &[1, 1]), comp(1, &[1]), comp(2, &[])],
        )
        .unwrap();
        assert_eq!(mp.content(&ctx), WeightContent(vec![2, 2, 0]));
        assert_eq!(
            SpinMultipartition::empty(&ctx).content(&ctx),
            WeightContent(vec![0, 0, 0])
        );

        let l1 = CartanContext::new(1, &[0, 1]).unwrap();
        let mp = SpinMultipartition::new(
            &l1,
            SpinRules::new(3, Variant::Paper),
            vec![comp(1, &[3, 1, 1])],
        )
        .unwrap();
        assert_eq!(mp.content(&l1), WeightContent(vec![4, 1]));
    }

    #[test]
    fn rejects_wrong_layout_or_shape() {
        let ctx = CartanContext::new(1, &[1, 1]).unwrap();
        let rules = SpinRules::new(3, Variant::Paper);
        assert!(SpinMultipartition::new(&ctx, rules, vec![comp(1, &[]), comp(0, &[])]).is_err());
        assert!(
            SpinMultipartition::new(&ctx, rules, vec![comp(0, &[1, 1]), comp(1, &[])]).is_err()
        );
        assert!(
            SpinMultipartition::new(&ctx, rules, vec![comp(0, &[3, 3, 1]), comp(1, &[1, 1])])
                .is_ok()
        );
    }
}
