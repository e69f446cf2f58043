//! Undirected graphs with loops and the operations used on zero-divisor graphs.

mod export;
mod iso;
mod map;
pub mod zeta;

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

pub use iso::{are_isomorphic, DEFAULT_ISO_BUDGET};
pub use map::{equalizer_graph, GraphMap, MapFlags};
pub use zeta::{restrict_to_zero_divisors, zeta, zeta_on};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub label: String,
    /// Element id this vertex stands for, when it comes from a ring.
    pub payload: Option<usize>,
}

/// An undirected graph on vertex ids `0..n`; `(i, i)` edges are loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<Vertex>,
    adj: Vec<FixedBitSet>,
}

/// Result of [`Graph::connectivity`], computed with loops ignored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub connected: bool,
    /// `None` when disconnected.
    pub diameter: Option<usize>,
    pub empty: bool,
}

/// [`Graph::quotient`] output.
#[derive(Debug, Clone)]
pub struct GraphQuotient {
    pub graph: Graph,
    pub projection: GraphMap,
    pub is_strong: bool,
}

impl Graph {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        let n = vertices.len();
        Graph {
            vertices,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Vertices labelled `0..n` without payloads.
    pub fn with_order(n: usize) -> Self {
        Self::new(
            (0..n)
                .map(|i| Vertex {
                    label: i.to_string(),
                    payload: None,
                })
                .collect(),
        )
    }

    pub fn from_edges(vertices: Vec<Vertex>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(vertices);
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn empty() -> Self {
        Self::new(Vec::new())
    }

    /// One vertex with a loop; the terminal object for graph morphisms.
    pub fn terminal() -> Self {
        let mut g = Self::with_order(1);
        g.add_edge(0, 0).expect("vertex exists");
        g
    }

    /// `K_n`, optionally with a loop at every vertex.
    pub fn complete(n: usize, loops: bool) -> Self {
        let mut g = Self::with_order(n);
        for i in 0..n {
            for j in i..n {
                if i != j || loops {
                    g.add_edge(i, j).expect("vertices exist");
                }
            }
        }
        g
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        let n = self.order();
        for v in [i, j] {
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
        }
        self.adj[i].insert(j);
        self.adj[j].insert(i);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn label(&self, v: usize) -> &str {
        &self.vertices[v].label
    }

    pub fn payload(&self, v: usize) -> Option<usize> {
        self.vertices[v].payload
    }

    /// The vertex whose payload is `element`.
    pub fn vertex_of(&self, element: usize) -> Option<usize> {
        self.vertices.iter().position(|v| v.payload == Some(element))
    }

    /// The vertex with the given label.
    pub fn vertex_labelled(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.label == label)
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    #[inline]
    pub fn has_loop(&self, v: usize) -> bool {
        self.adj[v].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    /// Number of neighbours, a loop counting once.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges `(i, j)` with `i <= j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order())
            .flat_map(|i| self.adj[i].ones().filter(move |&j| j >= i).map(move |j| (i, j)))
            .collect()
    }

    /// Edge count, loops included.
    pub fn edge_count(&self) -> usize {
        let twice: usize = (0..self.order()).map(|v| self.degree(v)).sum();
        (twice + self.loop_count()) / 2
    }

    pub fn loop_count(&self) -> usize {
        (0..self.order()).filter(|&v| self.has_loop(v)).count()
    }

    /// Vertices adjacent to every vertex, themselves included.
    pub fn universal_vertices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.degree(v) == self.order()).collect()
    }

    /// The subgraph induced on `keep`; new ids follow increasing old ids.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.order()) {
            return Err(Error::UnknownVertex(bad));
        }
        let mut g = Graph::new(keep.iter().map(|&v| self.vertices[v].clone()).collect());
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate().skip(a) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b)?;
                }
            }
        }
        Ok(g)
    }

    /// The subgraph induced on the vertices satisfying `keep`.
    pub fn induced_by(&self, keep: impl Fn(usize) -> bool) -> Graph {
        let ids: Vec<usize> = (0..self.order()).filter(|&v| keep(v)).collect();
        self.induced_subgraph(&ids).expect("ids are in range")
    }

    pub fn strip_loops(&self) -> Graph {
        let mut g = self.clone();
        for v in 0..g.order() {
            g.adj[v].set(v, false);
        }
        g
    }

    /// `G/P`: blocks become vertices (ordered by minimal member, which also
    /// supplies label and payload) and `[x] ~ [y]` iff some members are adjacent.
    pub fn quotient(&self, blocks: &[Vec<usize>]) -> Result<GraphQuotient> {
        let n = self.order();
        let mut blocks: Vec<Vec<usize>> = blocks.to_vec();
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::MalformedPartition("empty block".into()));
            }
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        let mut class = vec![usize::MAX; n];
        for (c, b) in blocks.iter().enumerate() {
            for &v in b {
                if v >= n {
                    return Err(Error::MalformedPartition(format!("vertex {v} out of range")));
                }
                if class[v] != usize::MAX {
                    return Err(Error::MalformedPartition(format!("vertex {v} appears twice")));
                }
                class[v] = c;
            }
        }
        if let Some(v) = class.iter().position(|&c| c == usize::MAX) {
            return Err(Error::MalformedPartition(format!("vertex {v} is not covered")));
        }
        let mut q = Graph::new(blocks.iter().map(|b| self.vertices[b[0]].clone()).collect());
        for (i, j) in self.edges() {
            q.add_edge(class[i], class[j])?;
        }
        let projection = GraphMap::new(self.clone(), q.clone(), class)?;
        let is_strong = projection.flags().is_strong;
        Ok(GraphQuotient {
            graph: q,
            projection,
            is_strong,
        })
    }

    /// Tensor product; vertex `(g, h)` has id `g * |H| + h`.
    pub fn kronecker_product(&self, other: &Graph) -> Graph {
        let m = other.order();
        let vertices = self
            .vertices
            .iter()
            .flat_map(|g| {
                other.vertices.iter().map(move |h| Vertex {
                    label: format!("({},{})", g.label, h.label),
                    payload: None,
                })
            })
            .collect();
        let mut p = Graph::new(vertices);
        for g in 0..self.order() {
            for g2 in self.neighbors(g) {
                for h in 0..m {
                    for h2 in other.neighbors(h) {
                        p.adj[g * m + h].insert(g2 * m + h2);
                    }
                }
            }
        }
        p
    }

    /// Disjoint union; `other`'s ids are shifted by `self.order()`.
    pub fn coproduct(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut g = Graph::new(self.vertices.iter().chain(&other.vertices).cloned().collect());
        for (i, j) in self.edges() {
            g.add_edge(i, j).expect("in range");
        }
        for (i, j) in other.edges() {
            g.add_edge(i + shift, j + shift).expect("in range");
        }
        g
    }

    /// Loop-free BFS distances from `source`.
    fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued vertices have a distance");
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Connectedness and diameter with loops ignored. The empty graph counts as
    /// connected with diameter 0 and `empty` set.
    pub fn connectivity(&self) -> Connectivity {
        if self.is_empty() {
            return Connectivity {
                connected: true,
                diameter: Some(0),
                empty: true,
            };
        }
        let mut diameter = 0;
        for s in 0..self.order() {
            for d in self.distances_from(s) {
                match d {
                    None => {
                        return Connectivity {
                            connected: false,
                            diameter: None,
                            empty: false,
                        }
                    }
                    Some(d) => diameter = diameter.max(d),
                }
            }
        }
        Connectivity {
            connected: true,
            diameter: Some(diameter),
            empty: false,
        }
    }

    /// Multiset of `(degree, has_loop)` pairs, sorted.
    pub fn degree_profile(&self) -> Vec<(usize, bool)> {
        let mut p: Vec<(usize, bool)> = (0..self.order()).map(|v| (self.degree(v), self.has_loop(v))).collect();
        p.sort_unstable();
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let mut g = Graph::with_order(n);
        for i in 1..n {
            g.add_edge(i - 1, i).unwrap();
        }
        g
    }

    #[test]
    fn degrees_count_loops_once() {
        let g = Graph::terminal();
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges(), vec![(0, 0)]);
        let k = Graph::complete(3, true);
        assert_eq!(k.degree(1), 3);
        assert_eq!(k.edge_count(), 6);
    }

    #[test]
    fn add_edge_rejects_unknown_vertex() {
        let mut g = Graph::with_order(2);
        assert_eq!(g.add_edge(0, 2), Err(Error::UnknownVertex(2)));
    }

    #[test]
    fn induced_subgraph_edges() {
        let g = path(4);
        let s = g.induced_subgraph(&[3, 1, 2]).unwrap();
        assert_eq!(s.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.induced_subgraph(&[0, 1, 2, 3]).unwrap(), g);
        assert!(g.induced_subgraph(&[]).unwrap().is_empty());
        assert_eq!(g.induced_subgraph(&[4]), Err(Error::UnknownVertex(4)));
    }

    #[test]
    fn strip_loops_keeps_vertices() {
        let g = Graph::terminal().strip_loops();
        assert_eq!((g.order(), g.edge_count()), (1, 0));
        assert_eq!(path(3).strip_loops(), path(3));
    }

    #[test]
    fn quotient_extremes() {
        let g = path(3);
        let id = g.quotient(&[vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(id.graph, g);
        assert!(id.is_strong);
        let one = g.quotient(&[vec![0, 1, 2]]).unwrap();
        assert_eq!(one.graph.edges(), vec![(0, 0)]);
        let lonely = Graph::with_order(2).quotient(&[vec![0, 1]]).unwrap();
        assert_eq!(lonely.graph.edge_count(), 0);
        assert!(matches!(g.quotient(&[vec![0, 1]]), Err(Error::MalformedPartition(_))));
    }

    #[test]
    fn kronecker_ids_and_loops() {
        let p = Graph::terminal().kronecker_product(&path(2));
        assert_eq!(p.edges(), vec![(0, 1)]);
        let q = path(2).kronecker_product(&path(2));
        // (0,0)-(1,1) and (0,1)-(1,0)
        assert_eq!(q.edges(), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn coproduct_shifts_ids() {
        let g = Graph::terminal().coproduct(&Graph::terminal());
        assert_eq!(g.edges(), vec![(0, 0), (1, 1)]);
        assert!(!g.connectivity().connected);
        assert_eq!(path(3).coproduct(&Graph::empty()), path(3));
    }

    #[test]
    fn connectivity_conventions() {
        assert_eq!(
            Graph::empty().connectivity(),
            Connectivity {
                connected: true,
                diameter: Some(0),
                empty: true
            }
        );
        assert_eq!(Graph::terminal().connectivity().diameter, Some(0));
        assert_eq!(Graph::complete(4, false).connectivity().diameter, Some(1));
        assert_eq!(path(4).connectivity().diameter, Some(3));
        assert_eq!(Graph::with_order(2).connectivity().diameter, None);
    }
}
