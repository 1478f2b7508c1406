//! The block-reduced crystal: weights of `V(Λ)` up to a degree bound, joined
//! by `i`-string edges.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::cartan::{CartanContext, Hub, Rational, WeightContent};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexData {
    pub hub: Hub,
    pub defect: Rational,
}

/// `from → to` with `to = from + eᵢ` in content, i.e. `to = from − αᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub from: WeightContent,
    pub residue: usize,
    pub to: WeightContent,
}

#[derive(Clone, Debug)]
pub struct ReducedCrystal {
    ctx: CartanContext,
    max_degree: usize,
    vertices: BTreeMap<WeightContent, VertexData>,
    edges: BTreeSet<Edge>,
}

/// Members of a Weyl orbit found inside the degree horizon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSlice {
    pub members: BTreeSet<WeightContent>,
    /// Some reflection led past the horizon, so the orbit may continue there.
    pub truncated: bool,
}

impl ReducedCrystal {
    /// Breadth-first by degree. For a vertex `λ` and residue `i`, the `q`
    /// vertices `λ+αᵢ, λ+2αᵢ, …` above it are already known, so the string top
    /// `μ = λ + qαᵢ` and its length `w = ⟨hᵢ, μ⟩` are too; `λ − αᵢ` is a
    /// weight exactly when `q < w`.
    pub fn generate(ctx: &CartanContext, max_degree: usize) -> Self {
        let zero = WeightContent::zero(ctx.n());
        let mut vertices = BTreeMap::new();
        vertices.insert(
            zero.clone(),
            VertexData {
                hub: ctx.hub(&zero),
                defect: ctx.defect(&zero),
            },
        );
        let mut edges = BTreeSet::new();
        let mut layer = vec![zero];
        for _ in 0..max_degree {
            let known = &vertices;
            let found: Vec<Edge> = layer
                .par_iter()
                .flat_map_iter(|v| {
                    (0..ctx.rank()).filter_map(move |i| {
                        let mut q = 0;
                        while v.0[i] > q && known.contains_key(&v.shifted(i, -(q + 1))) {
                            q += 1;
                        }
                        let top = v.shifted(i, -q);
                        (q < ctx.theta(&top, i)).then(|| Edge {
                            from: v.clone(),
                            residue: i,
                            to: v.shifted(i, 1),
                        })
                    })
                })
                .collect();
            let mut next = BTreeSet::new();
            for e in found {
                next.insert(e.to.clone());
                edges.insert(e);
            }
            for c in &next {
                vertices.insert(
                    c.clone(),
                    VertexData {
                        hub: ctx.hub(c),
                        defect: ctx.defect(c),
                    },
                );
            }
            layer = next.into_iter().collect();
            if layer.is_empty() {
                break;
            }
        }
        ReducedCrystal {
            ctx: ctx.clone(),
            max_degree,
            vertices,
            edges,
        }
    }

    pub fn context(&self) -> &CartanContext {
        &self.ctx
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn vertices(&self) -> &BTreeMap<WeightContent, VertexData> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn contains(&self, c: &WeightContent) -> bool {
        self.vertices.contains_key(c)
    }

    pub fn vertex(&self, c: &WeightContent) -> Option<&VertexData> {
        self.vertices.get(c)
    }

    fn in_range(&self, c: &WeightContent) -> bool {
        c.is_nonnegative() && c.degree() <= self.max_degree as i64
    }

    fn require(&self, c: &WeightContent) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::NotAVertex(c.0.clone()))
        }
    }

    /// The full `i`-string through `w`, top (largest `θᵢ`) first.
    pub fn string_through(&self, w: &WeightContent, i: usize) -> Result<Vec<WeightContent>> {
        self.require(w)?;
        if i > self.ctx.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.ctx.n(),
            });
        }
        let mut top = w.clone();
        while top.0[i] > 0 && self.contains(&top.shifted(i, -1)) {
            top = top.shifted(i, -1);
        }
        let length = self.ctx.theta(&top, i);
        let bottom = top.shifted(i, length);
        if !self.in_range(&bottom) {
            return Err(Error::Truncated {
                content: w.0.clone(),
                residue: i,
                max_degree: self.max_degree,
            });
        }
        Ok((0..=length).map(|k| top.shifted(i, k)).collect())
    }

    /// `λ ∈ max(Λ)`: `λ + δ` is not a weight.
    pub fn in_max_lambda(&self, w: &WeightContent) -> Result<bool> {
        self.require(w)?;
        let null = self.ctx.null_root();
        let up = WeightContent(w.0.iter().zip(&null.0).map(|(a, b)| a - b).collect());
        Ok(!up.is_nonnegative() || !self.contains(&up))
    }

    /// Closure of `w` under simple reflections, restricted to the horizon.
    pub fn weyl_orbit(&self, w: &WeightContent) -> Result<OrbitSlice> {
        self.require(w)?;
        let mut members = BTreeSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        let mut truncated = false;
        while let Some(c) = queue.pop_front() {
            for i in 0..self.ctx.rank() {
                let Ok(image) = self.ctx.reflect(&c, i) else {
                    continue;
                };
                if !self.in_range(&image) {
                    truncated = true;
                    continue;
                }
                if members.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        Ok(OrbitSlice { members, truncated })
    }

    /// Number of directed edge paths from `Λ` to every vertex.
    pub fn path_counts(&self) -> BTreeMap<WeightContent, BigUint> {
        let mut by_degree: Vec<&WeightContent> = self.vertices.keys().collect();
        by_degree.sort_by_key(|c| c.degree());
        let mut counts: BTreeMap<WeightContent, BigUint> = self
            .vertices
            .keys()
            .map(|c| (c.clone(), BigUint::zero()))
            .collect();
        counts.insert(WeightContent::zero(self.ctx.n()), BigUint::one());
        let mut outgoing: BTreeMap<&WeightContent, Vec<&WeightContent>> = BTreeMap::new();
        for e in &self.edges {
            outgoing.entry(&e.from).or_default().push(&e.to);
        }
        for c in by_degree {
            let here = counts[c].clone();
            if here.is_zero() {
                continue;
            }
            for to in outgoing.get(c).into_iter().flatten() {
                *counts.get_mut(*to).unwrap() += &here;
            }
        }
        counts
    }

    pub fn path_count(&self, w: &WeightContent) -> Result<BigUint> {
        self.require(w)?;
        Ok(self.path_counts().remove(w).unwrap_or_default())
    }

    /// Vertices whose content has `c[coordinate] == value`.
    pub fn slice(&self, coordinate: usize, value: i64) -> Result<Vec<WeightContent>> {
        if coordinate > self.ctx.n() {
            return Err(Error::IndexOutOfRange {
                index: coordinate,
                n: self.ctx.n(),
            });
        }
        Ok(self
            .vertices
            .keys()
            .filter(|c| c.0[coordinate] == value)
            .cloned()
            .collect())
    }

    /// Restriction to a smaller degree bound.
    pub fn truncate(&self, max_degree: usize) -> Self {
        let keep = |c: &WeightContent| c.degree() <= max_degree as i64;
        ReducedCrystal {
            ctx: self.ctx.clone(),
            max_degree,
            vertices: self
                .vertices
                .iter()
                .filter(|(c, _)| keep(c))
                .map(|(c, v)| (c.clone(), v.clone()))
                .collect(),
            edges: self.edges.iter().filter(|e| keep(&e.to)).cloned().collect(),
        }
    }
}

impl PartialEq for ReducedCrystal {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx
            && self.max_degree == other.max_degree
            && self.vertices == other.vertices
            && self.edges == other.edges
    }
}
