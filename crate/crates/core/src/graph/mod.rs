//! Simple undirected graphs, coset and Cayley graph construction, quotients.

mod coset;
pub mod io;

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use coset::{
    cayley_graph, connection_set, coset_graph, enumerate_cosets, CayleyGraph, CosetGraph, CosetSpace,
    GroupAction,
};

/// Simple undirected graph with sorted adjacency lists. Vertices are `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymGraph {
    adjacency: Vec<Vec<u32>>,
    edge_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphPredicates {
    pub connected: bool,
    pub bipartite: bool,
    /// `None` when the graph is not regular.
    pub valency: Option<usize>,
}

/// Result of collapsing a partition into a quotient graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub graph: SymGraph,
    /// Some edge joined two vertices of the same block.
    pub discarded_loops: bool,
    /// Some pair of blocks was joined by more than one edge.
    pub collapsed_multi_edges: bool,
}

impl SymGraph {
    /// Builds a graph from an edge list. Loops and out-of-range endpoints are
    /// rejected; repeated edges are merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w as usize >= n {
                    return Err(Error::OutOfRange {
                        point: w as usize + 1,
                        degree: n,
                    });
                }
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {}", u + 1)));
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        Ok(SymGraph::from_neighbor_lists(adjacency))
    }

    /// Sorts and deduplicates each list. Callers guarantee symmetry and no loops.
    pub(crate) fn from_neighbor_lists(mut adjacency: Vec<Vec<u32>>) -> Self {
        let mut twice = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        SymGraph {
            adjacency,
            edge_count: twice / 2,
        }
    }

    /// Checked version of `from_neighbor_lists`.
    pub fn from_adjacency(adjacency: Vec<Vec<u32>>) -> Result<Self> {
        let n = adjacency.len();
        let graph = SymGraph::from_neighbor_lists(adjacency);
        for (u, list) in graph.adjacency.iter().enumerate() {
            for &v in list {
                if v as usize >= n {
                    return Err(Error::OutOfRange {
                        point: v as usize + 1,
                        degree: n,
                    });
                }
                if v as usize == u {
                    return Err(Error::invalid(format!("loop at vertex {}", u + 1)));
                }
                if !graph.has_edge(v, u as u32) {
                    return Err(Error::invalid("adjacency is not symmetric"));
                }
            }
        }
        Ok(graph)
    }

    pub fn cycle(n: usize) -> Self {
        let n32 = n as u32;
        SymGraph::from_edges(n, (0..n32).map(|i| (i, (i + 1) % n32))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let n32 = n as u32;
        SymGraph::from_edges(n, (0..n32).flat_map(|u| (u + 1..n32).map(move |v| (u, v)))).expect("valid")
    }

    /// The `d`-dimensional hypercube on bit strings.
    pub fn hypercube(d: u32) -> Self {
        let n = 1usize << d;
        let edges = (0..n as u32).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b)))).filter(|(u, v)| u < v);
        SymGraph::from_edges(n, edges).expect("valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adjacency
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u as u32).map(move |&v| (u as u32, v)))
    }

    /// Common degree, or `None` if degrees differ. The empty graph has valency 0.
    pub fn valency(&self) -> Option<usize> {
        let first = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency.iter().all(|l| l.len() == first).then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        n == 0 || self.component_of(0).len() == n
    }

    /// Vertices reachable from `start`, in BFS order.
    pub fn component_of(&self, start: u32) -> Vec<u32> {
        let mut seen = vec![false; self.vertex_count()];
        seen[start as usize] = true;
        let mut order = vec![start];
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            for &v in self.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    order.push(v);
                }
            }
            head += 1;
        }
        order
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s as u32);
            while let Some(u) = queue.pop_front() {
                let cu = color[u as usize];
                for &v in self.neighbors(u) {
                    match color[v as usize] {
                        u8::MAX => {
                            color[v as usize] = 1 - cu;
                            queue.push_back(v);
                        }
                        c if c == cu => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn predicates(&self) -> GraphPredicates {
        GraphPredicates {
            connected: self.is_connected(),
            bipartite: self.is_bipartite(),
            valency: self.valency(),
        }
    }

    /// Whether `g` (a permutation of the vertices) maps every edge to an edge.
    pub fn is_automorphism(&self, g: &Permutation) -> bool {
        g.degree() == self.vertex_count()
            && self.edges().all(|(u, v)| self.has_edge(g.image(u), g.image(v)))
    }

    /// The graph with vertex `v` renamed `g(v)`.
    pub fn relabel(&self, g: &Permutation) -> Result<SymGraph> {
        if g.degree() != self.vertex_count() {
            return Err(Error::DegreeMismatch {
                left: self.vertex_count(),
                right: g.degree(),
            });
        }
        let mut adjacency = vec![Vec::new(); self.vertex_count()];
        for (u, list) in self.adjacency.iter().enumerate() {
            adjacency[g.image(u as u32) as usize] = list.iter().map(|&v| g.image(v)).collect();
        }
        Ok(SymGraph::from_neighbor_lists(adjacency))
    }

    /// Collapses each block of `blocks` to a vertex; blocks are adjacent when
    /// some edge joins them. Quotient vertex `i` is `blocks[i]`.
    pub fn quotient(&self, blocks: &[Vec<u32>]) -> Result<Quotient> {
        let n = self.vertex_count();
        let mut block_of = vec![u32::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::invalid("partition has an empty block"));
            }
            for &v in block {
                if v as usize >= n {
                    return Err(Error::OutOfRange {
                        point: v as usize + 1,
                        degree: n,
                    });
                }
                if block_of[v as usize] != u32::MAX {
                    return Err(Error::invalid(format!("vertex {} lies in two blocks", v + 1)));
                }
                block_of[v as usize] = b as u32;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == u32::MAX) {
            return Err(Error::invalid(format!("vertex {} is not covered by the partition", v + 1)));
        }
        let mut discarded_loops = false;
        let mut collapsed_multi_edges = false;
        let mut adjacency = vec![Vec::new(); blocks.len()];
        for (u, v) in self.edges() {
            let (bu, bv) = (block_of[u as usize], block_of[v as usize]);
            if bu == bv {
                discarded_loops = true;
            } else {
                adjacency[bu as usize].push(bv);
                adjacency[bv as usize].push(bu);
            }
        }
        for list in &mut adjacency {
            let before = list.len();
            list.sort_unstable();
            list.dedup();
            collapsed_multi_edges |= list.len() != before;
        }
        Ok(Quotient {
            graph: SymGraph::from_neighbor_lists(adjacency),
            discarded_loops,
            collapsed_multi_edges,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_predicates() {
        let c5 = SymGraph::cycle(5).predicates();
        assert_eq!(
            c5,
            GraphPredicates {
                connected: true,
                bipartite: false,
                valency: Some(2)
            }
        );
        let c6 = SymGraph::cycle(6).predicates();
        assert!(c6.connected && c6.bipartite);
        assert_eq!(c6.valency, Some(2));
    }

    #[test]
    fn irregular_and_disconnected() {
        let g = SymGraph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.valency(), None);
        assert!(!g.is_connected());
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert!(SymGraph::from_edges(3, [(1, 1)]).is_err());
        assert!(SymGraph::from_edges(3, [(0, 3)]).is_err());
        assert!(SymGraph::from_adjacency(vec![vec![1], vec![]]).is_err());
    }

    #[test]
    fn hypercube_shape() {
        let q3 = SymGraph::hypercube(3);
        assert_eq!(q3.vertex_count(), 8);
        assert_eq!(q3.edge_count(), 12);
        assert!(q3.is_bipartite());
    }

    #[test]
    fn singleton_partition_is_identity() {
        let g = SymGraph::cycle(7);
        let blocks: Vec<Vec<u32>> = (0..7).map(|v| vec![v]).collect();
        let q = g.quotient(&blocks).unwrap();
        assert_eq!(q.graph, g);
        assert!(!q.discarded_loops && !q.collapsed_multi_edges);
    }

    #[test]
    fn one_block_partition() {
        let g = SymGraph::cycle(4);
        let q = g.quotient(&[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(q.graph.vertex_count(), 1);
        assert_eq!(q.graph.edge_count(), 0);
        assert!(q.discarded_loops);
    }

    #[test]
    fn ten_cycle_mod_half_turn() {
        let g = SymGraph::cycle(10);
        let blocks: Vec<Vec<u32>> = (0..5).map(|i| vec![i, i + 5]).collect();
        let q = g.quotient(&blocks).unwrap();
        assert_eq!(q.graph, SymGraph::cycle(5));
        assert!(!q.discarded_loops);
    }

    #[test]
    fn bad_partitions() {
        let g = SymGraph::cycle(4);
        assert!(g.quotient(&[vec![0, 1], vec![1, 2, 3]]).is_err());
        assert!(g.quotient(&[vec![0, 1]]).is_err());
        assert!(g.quotient(&[vec![0, 1, 2, 3], vec![]]).is_err());
    }

    #[test]
    fn relabel_and_automorphism() {
        let g = SymGraph::cycle(5);
        let rot = Permutation::parse_cycles("(1,2,3,4,5)", 5).unwrap();
        assert!(g.is_automorphism(&rot));
        assert_eq!(g.relabel(&rot).unwrap(), g);
        let swap = Permutation::parse_cycles("(1,3)", 5).unwrap();
        assert!(!g.is_automorphism(&swap));
        assert_ne!(g.relabel(&swap).unwrap(), g);
    }
}
