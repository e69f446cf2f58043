use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct MapFlags {
    /// Edges go to edges.
    pub is_morphism: bool,
    /// Pairs whose images are adjacent were adjacent.
    pub is_comorphism: bool,
    pub is_strong: bool,
    pub is_bijective: bool,
}

/// A vertex map between graphs, with its flags computed at construction.
#[derive(Clone)]
pub struct GraphMap {
    source: Arc<Graph>,
    target: Arc<Graph>,
    map: Vec<usize>,
    flags: MapFlags,
}

impl fmt::Debug for GraphMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GraphMap")
            .field("map", &self.map)
            .field("flags", &self.flags)
            .finish()
    }
}

impl PartialEq for GraphMap {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map && self.source == other.source && self.target == other.target
    }
}

impl GraphMap {
    pub fn new(source: impl Into<Arc<Graph>>, target: impl Into<Arc<Graph>>, map: Vec<usize>) -> Result<Self> {
        let (source, target) = (source.into(), target.into());
        if map.len() != source.order() {
            return Err(Error::InvalidMap(format!(
                "{} images for {} vertices",
                map.len(),
                source.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&w| w >= target.order()) {
            return Err(Error::InvalidMap(format!("image {bad} is not a target vertex")));
        }
        let flags = classify(&source, &target, &map);
        Ok(GraphMap {
            source,
            target,
            map,
            flags,
        })
    }

    pub fn identity(g: impl Into<Arc<Graph>>) -> Self {
        let g = g.into();
        let map = (0..g.order()).collect();
        Self::new(Arc::clone(&g), g, map).expect("identity is total")
    }

    pub fn source(&self) -> &Arc<Graph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Graph> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn flags(&self) -> MapFlags {
        self.flags
    }

    /// Recomputes the flags from scratch.
    pub fn classify(&self) -> MapFlags {
        classify(&self.source, &self.target, &self.map)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GraphMap) -> Result<GraphMap> {
        if self.target != other.source {
            return Err(Error::MismatchedGraphs);
        }
        let map = self.map.iter().map(|&v| other.map[v]).collect();
        GraphMap::new(Arc::clone(&self.source), Arc::clone(&other.target), map)
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &w in &self.map {
            hit[w] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        self.map.iter().all(|&w| !std::mem::replace(&mut hit[w], true))
    }
}

fn classify(source: &Graph, target: &Graph, map: &[usize]) -> MapFlags {
    let n = source.order();
    let mut is_morphism = true;
    let mut is_comorphism = true;
    for u in 0..n {
        for v in u..n {
            let below = source.has_edge(u, v);
            let above = target.has_edge(map[u], map[v]);
            is_morphism &= !below || above;
            is_comorphism &= below || !above;
        }
    }
    let mut hit = vec![false; target.order()];
    let injective = map.iter().all(|&w| !std::mem::replace(&mut hit[w], true));
    MapFlags {
        is_morphism,
        is_comorphism,
        is_strong: is_morphism && is_comorphism,
        is_bijective: injective && n == target.order(),
    }
}

/// The subgraph of the common source induced on `{v : φ(v) = ψ(v)}`.
pub fn equalizer_graph(phi: &GraphMap, psi: &GraphMap) -> Result<Graph> {
    if phi.source != psi.source || phi.target != psi.target {
        return Err(Error::MismatchedGraphs);
    }
    Ok(phi.source.induced_by(|v| phi.map[v] == psi.map[v]))
}
