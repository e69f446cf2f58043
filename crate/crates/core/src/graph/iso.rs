use std::collections::HashMap;
use std::sync::Arc;

use super::{Graph, GraphMap};
use crate::error::{Error, Result};

/// Default number of search nodes for isomorphism backtracking.
pub const DEFAULT_ISO_BUDGET: usize = 10_000_000;

/// Stable colours for the disjoint union of `g` and `h`, refined until the
/// partition stops splitting. Colour ids are shared so they compare across graphs.
fn refine(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let graphs = [g, h];
    let mut colors: Vec<Vec<usize>> = graphs
        .iter()
        .map(|gr| {
            (0..gr.order())
                .map(|v| gr.degree(v) * 2 + gr.has_loop(v) as usize)
                .collect()
        })
        .collect();
    let mut classes = usize::MAX;
    loop {
        let mut ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut signatures: Vec<Vec<(usize, Vec<usize>)>> = Vec::new();
        for (k, gr) in graphs.iter().enumerate() {
            let sig = (0..gr.order())
                .map(|v| {
                    let mut around: Vec<usize> = gr.neighbors(v).map(|u| colors[k][u]).collect();
                    around.sort_unstable();
                    (colors[k][v], around)
                })
                .collect();
            signatures.push(sig);
        }
        // deterministic ids: sort the distinct signatures
        let mut distinct: Vec<&(usize, Vec<usize>)> = signatures.iter().flatten().collect();
        distinct.sort();
        distinct.dedup();
        for (i, s) in distinct.iter().enumerate() {
            ids.insert((*s).clone(), i);
        }
        let next: Vec<Vec<usize>> = signatures
            .iter()
            .map(|sig| sig.iter().map(|s| ids[s]).collect())
            .collect();
        colors = next;
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
    }
    let h_colors = colors.pop().expect("two graphs");
    let g_colors = colors.pop().expect("two graphs");
    (g_colors, h_colors)
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
    nodes: usize,
    budget: usize,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        for ci in 0..self.candidates[v].len() {
            let w = self.candidates[v][ci];
            if self.used[w] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded {
                    what: "isomorphism search node",
                    cap: self.budget,
                });
            }
            if self.g.has_loop(v) != self.h.has_loop(w) {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.g.has_edge(u, v) == self.h.has_edge(self.map[u], w));
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.used[w] = false;
        }
        Ok(false)
    }
}

impl Graph {
    /// A vertex bijection `self -> other` preserving adjacency and loops.
    /// Colour refinement prunes candidates; the remaining search is
    /// backtracking limited to `budget` nodes.
    pub fn isomorphism(&self, other: &Graph, budget: usize) -> Result<Option<Vec<usize>>> {
        let n = self.order();
        if n != other.order()
            || self.edge_count() != other.edge_count()
            || self.degree_profile() != other.degree_profile()
        {
            return Ok(None);
        }
        let (gc, hc) = refine(self, other);
        let histogram = |c: &[usize]| {
            let mut c = c.to_vec();
            c.sort_unstable();
            c
        };
        if histogram(&gc) != histogram(&hc) {
            return Ok(None);
        }
        let candidates: Vec<Vec<usize>> = (0..n).map(|v| (0..n).filter(|&w| hc[w] == gc[v]).collect()).collect();
        // rarest colour first, then prefer vertices adjacent to already placed ones
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        while order.len() < n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .min_by_key(|&v| {
                    let linked = order.iter().any(|&u| self.has_edge(u, v));
                    (!linked, candidates[v].len(), v)
                })
                .expect("unplaced vertex remains");
            placed[next] = true;
            order.push(next);
        }
        let mut search = Search {
            g: self,
            h: other,
            order,
            candidates,
            map: vec![0; n],
            used: vec![false; n],
            nodes: 0,
            budget,
        };
        Ok(if search.extend(0)? { Some(search.map) } else { None })
    }
}

/// A witnessing isomorphism `g -> h`, if one exists.
pub fn are_isomorphic(g: &Arc<Graph>, h: &Arc<Graph>, budget: usize) -> Result<Option<GraphMap>> {
    Ok(match g.isomorphism(h, budget)? {
        Some(map) => Some(GraphMap::new(Arc::clone(g), Arc::clone(h), map)?),
        None => None,
    })
}
