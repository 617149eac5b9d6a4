//! Automorphism groups and canonical forms by individualization and
//! equitable refinement.
//!
//! The search tree is label-invariant: cells are kept in an order derived
//! only from refinement signatures, and the target cell is the first
//! smallest non-singleton cell. Along the first path the group is built as
//! a stabilizer chain `Aut ≥ Aut_{v0} ≥ Aut_{v0 v1} ≥ …`; each level's orbit
//! is completed by searching, for every candidate `w`, the subtree below
//! `w` for a leaf equivalent to the first leaf.

use std::hash::{Hash, Hasher};

use num_bigint::BigUint;
use rustc_hash::FxHasher;

use crate::error::{Error, Result};
use crate::graph::SymGraph;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Ordered partition of the vertex set.
#[derive(Debug, Clone)]
struct Partition {
    cells: Vec<Vec<u32>>,
    color: Vec<u32>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        Partition {
            cells: if n == 0 { Vec::new() } else { vec![(0..n as u32).collect()] },
            color: vec![0; n],
        }
    }

    fn is_discrete(&self) -> bool {
        self.cells.len() == self.color.len()
    }

    /// First smallest cell with more than one vertex.
    fn target_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
    }

    /// Moves `v` into its own cell, placed just before the rest of its cell.
    fn individualize(&self, v: u32) -> Partition {
        let c = self.color[v as usize] as usize;
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        cells.extend_from_slice(&self.cells[..c]);
        cells.push(vec![v]);
        cells.push(self.cells[c].iter().copied().filter(|&w| w != v).collect());
        cells.extend_from_slice(&self.cells[c + 1..]);
        Partition::from_cells(cells, self.color.len())
    }

    fn from_cells(cells: Vec<Vec<u32>>, n: usize) -> Partition {
        let mut color = vec![0; n];
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                color[v as usize] = i as u32;
            }
        }
        Partition { cells, color }
    }

    /// Vertex → position, for a discrete partition.
    fn labeling(&self) -> Vec<u32> {
        self.color.clone()
    }
}

/// Splits cells by (own color, sorted neighbor colors) until stable.
/// Returns the refined partition and a label-invariant hash of the process.
fn refine(graph: &SymGraph, start: Partition) -> (Partition, u64) {
    let n = graph.vertex_count();
    let mut part = start;
    let mut hasher = FxHasher::default();
    let mut signature: Vec<Vec<u32>> = vec![Vec::new(); n];
    loop {
        for (v, sig) in signature.iter_mut().enumerate() {
            sig.clear();
            sig.extend(graph.neighbors(v as u32).iter().map(|&w| part.color[w as usize]));
            sig.sort_unstable();
        }
        let mut cells = Vec::with_capacity(part.cells.len());
        for cell in &part.cells {
            if cell.len() == 1 {
                signature[cell[0] as usize].hash(&mut hasher);
                cells.push(cell.clone());
                continue;
            }
            let mut sorted = cell.clone();
            sorted.sort_by(|&a, &b| signature[a as usize].cmp(&signature[b as usize]).then(a.cmp(&b)));
            let mut start = 0;
            for i in 1..=sorted.len() {
                if i == sorted.len() || signature[sorted[i] as usize] != signature[sorted[start] as usize] {
                    let mut piece = sorted[start..i].to_vec();
                    piece.sort_unstable();
                    (piece.len(), &signature[piece[0] as usize]).hash(&mut hasher);
                    cells.push(piece);
                    start = i;
                }
            }
        }
        let split = cells.len() != part.cells.len();
        part = Partition::from_cells(cells, n);
        if !split {
            break;
        }
    }
    part.cells.len().hash(&mut hasher);
    (part, hasher.finish())
}

/// Edges relabeled by `lab`, each as `(min, max)`, sorted.
fn certificate(graph: &SymGraph, lab: &[u32]) -> Vec<(u32, u32)> {
    let mut edges: Vec<(u32, u32)> = graph
        .edges()
        .map(|(u, v)| {
            let (a, b) = (lab[u as usize], lab[v as usize]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    edges
}

/// The permutation sending the vertex at position `i` of `from` to the
/// vertex at position `i` of `to`.
fn map_between(from: &[u32], to: &[u32]) -> Permutation {
    let n = from.len();
    let mut inverse_to = vec![0u32; n];
    for (v, &pos) in to.iter().enumerate() {
        inverse_to[pos as usize] = v as u32;
    }
    Permutation::from_images(from.iter().map(|&pos| inverse_to[pos as usize]).collect()).expect("labelings are bijections")
}

struct DisjointSets {
    parent: Vec<u32>,
    marked: Vec<bool>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n as u32).collect(),
            marked: vec![false; n],
        }
    }

    fn find(&mut self, mut v: u32) -> u32 {
        while self.parent[v as usize] != v {
            let gp = self.parent[self.parent[v as usize] as usize];
            self.parent[v as usize] = gp;
            v = gp;
        }
        v
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi as usize] = lo;
            self.marked[lo as usize] |= self.marked[hi as usize];
        }
    }

    fn apply(&mut self, g: &Permutation) {
        for v in 0..g.degree() as u32 {
            self.union(v, g.image(v));
        }
    }
}

/// A canonical relabeling and the relabeled edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub vertex_count: usize,
    pub edges: Vec<(u32, u32)>,
}

#[derive(Debug, Clone)]
pub struct AutResult {
    pub generators: Vec<Permutation>,
    pub order: BigUint,
    /// First-path base `v0, v1, …`.
    pub base: Vec<u32>,
    /// `|Aut_{v0..v(d-1)} : Aut_{v0..vd}|` for each base level `d`.
    pub orbit_lengths: Vec<usize>,
    /// Level at which each generator was found; it fixes `base[..level]`.
    generator_levels: Vec<usize>,
    /// Vertex `v` goes to position `labeling[v]` in the canonical form.
    pub labeling: Permutation,
    pub canonical_form: CanonicalForm,
    pub vertex_transitive: bool,
    degree: usize,
}

impl AutResult {
    pub fn group(&self) -> PermGroup {
        if self.generators.is_empty() {
            PermGroup::trivial(self.degree)
        } else {
            PermGroup::from_generators(self.generators.clone()).expect("equal degrees")
        }
    }

    /// Stabilizer of the first base point, generated by the generators found
    /// below the top level.
    pub fn base_stabilizer(&self) -> Option<(u32, PermGroup)> {
        let v0 = *self.base.first()?;
        let gens: Vec<Permutation> = self
            .generators
            .iter()
            .zip(&self.generator_levels)
            .filter(|(_, &l)| l >= 1)
            .map(|(g, _)| g.clone())
            .collect();
        let group = if gens.is_empty() {
            PermGroup::trivial(self.degree)
        } else {
            PermGroup::from_generators(gens).expect("equal degrees")
        };
        Some((v0, group))
    }

    pub fn base_stabilizer_order(&self) -> BigUint {
        self.orbit_lengths.iter().skip(1).map(|&l| BigUint::from(l)).product()
    }
}

struct Node {
    part: Partition,
    invariant: u64,
}

struct Search<'a> {
    graph: &'a SymGraph,
    first_path: Vec<Node>,
    first_leaf_cert: Vec<(u32, u32)>,
    first_leaf_lab: Vec<u32>,
}

impl Search<'_> {
    /// Looks below `part` (at `depth`, invariants matching the first path)
    /// for a leaf with the first leaf's certificate.
    fn find_equivalent(&self, part: &Partition, depth: usize) -> Option<Permutation> {
        if part.is_discrete() {
            let lab = part.labeling();
            return (certificate(self.graph, &lab) == self.first_leaf_cert)
                .then(|| map_between(&self.first_leaf_lab, &lab));
        }
        let target = part.target_cell()?;
        let expected = self.first_path.get(depth + 1)?.invariant;
        for &u in &part.cells[target] {
            let (child, inv) = refine(self.graph, part.individualize(u));
            if inv != expected {
                continue;
            }
            if let Some(g) = self.find_equivalent(&child, depth + 1) {
                return Some(g);
            }
        }
        None
    }
}

pub fn automorphism_group(graph: &SymGraph, vertex_limit: usize) -> Result<AutResult> {
    let n = graph.vertex_count();
    if n > vertex_limit {
        return Err(Error::budget("automorphism vertex limit", n, vertex_limit));
    }
    if n == 0 {
        return Err(Error::invalid("automorphism search needs at least one vertex"));
    }
    // first path
    let (root, root_inv) = refine(graph, Partition::unit(n));
    let mut first_path = vec![Node {
        part: root,
        invariant: root_inv,
    }];
    let mut base = Vec::new();
    while let Some(target) = first_path.last().expect("root").part.target_cell() {
        let part = &first_path.last().expect("root").part;
        let v = part.cells[target][0];
        base.push(v);
        let (child, inv) = refine(graph, part.individualize(v));
        first_path.push(Node { part: child, invariant: inv });
    }
    let first_leaf_lab = first_path.last().expect("leaf").part.labeling();
    let search = Search {
        graph,
        first_leaf_cert: certificate(graph, &first_leaf_lab),
        first_leaf_lab,
        first_path,
    };

    let mut generators: Vec<Permutation> = Vec::new();
    let mut generator_levels: Vec<usize> = Vec::new();
    let mut orbit_lengths = vec![0usize; base.len()];
    for d in (0..base.len()).rev() {
        let part = &search.first_path[d].part;
        let cell = part.cells[part.target_cell().expect("non-discrete on path")].clone();
        let mut sets = DisjointSets::new(n);
        for (g, _) in generators.iter().zip(&generator_levels).filter(|(_, &l)| l >= d) {
            sets.apply(g);
        }
        let v = base[d];
        for &w in &cell {
            let (rw, rv) = (sets.find(w), sets.find(v));
            if rw == rv || sets.marked[rw as usize] {
                continue;
            }
            let (child, inv) = refine(graph, part.individualize(w));
            let found = if inv == search.first_path[d + 1].invariant {
                search.find_equivalent(&child, d + 1)
            } else {
                None
            };
            match found {
                Some(g) => {
                    debug_assert!(graph.is_automorphism(&g));
                    sets.apply(&g);
                    generators.push(g);
                    generator_levels.push(d);
                }
                None => {
                    let r = sets.find(w);
                    sets.marked[r as usize] = true;
                }
            }
        }
        let rv = sets.find(v);
        orbit_lengths[d] = cell.iter().filter(|&&w| sets.find(w) == rv).count();
    }
    let order: BigUint = orbit_lengths.iter().map(|&l| BigUint::from(l)).product();

    let mut orbit_of_zero = DisjointSets::new(n);
    for g in &generators {
        orbit_of_zero.apply(g);
    }
    let r0 = orbit_of_zero.find(0);
    let vertex_transitive = (0..n as u32).all(|v| orbit_of_zero.find(v) == r0);

    let (lab, edges) = canonical_search(graph, &search.first_path[0], &generators);
    Ok(AutResult {
        generators,
        order,
        base,
        orbit_lengths,
        generator_levels,
        labeling: Permutation::from_images(lab).expect("labeling is a bijection"),
        canonical_form: CanonicalForm { vertex_count: n, edges },
        vertex_transitive,
        degree: n,
    })
}

struct Best {
    invariants: Vec<u64>,
    edges: Vec<(u32, u32)>,
    lab: Vec<u32>,
}

/// Minimum of (invariant path, certificate) over all leaves. Children in
/// the same orbit of the known automorphisms fixing the current prefix are
/// explored once; prefixes whose invariants already exceed the best leaf's
/// are cut.
fn canonical_search(graph: &SymGraph, root: &Node, generators: &[Permutation]) -> (Vec<u32>, Vec<(u32, u32)>) {
    let mut best: Option<Best> = None;
    let mut path_inv = vec![root.invariant];
    let mut prefix = Vec::new();
    explore(graph, &root.part, generators, &mut prefix, &mut path_inv, &mut best);
    let best = best.expect("at least one leaf");
    (best.lab, best.edges)
}

fn explore(
    graph: &SymGraph,
    part: &Partition,
    generators: &[Permutation],
    prefix: &mut Vec<u32>,
    path_inv: &mut Vec<u64>,
    best: &mut Option<Best>,
) {
    if let Some(b) = best.as_ref() {
        let k = path_inv.len();
        if path_inv[..] > b.invariants[..k.min(b.invariants.len())] {
            return;
        }
    }
    if part.is_discrete() {
        let lab = part.labeling();
        let edges = certificate(graph, &lab);
        let better = match best.as_ref() {
            None => true,
            Some(b) => (path_inv.as_slice(), &edges) < (b.invariants.as_slice(), &b.edges),
        };
        if better {
            *best = Some(Best {
                invariants: path_inv.clone(),
                edges,
                lab,
            });
        }
        return;
    }
    let target = part.target_cell().expect("non-discrete");
    let fixing: Vec<&Permutation> = generators
        .iter()
        .filter(|g| prefix.iter().all(|&u| g.image(u) == u))
        .collect();
    let mut sets = DisjointSets::new(graph.vertex_count());
    for g in &fixing {
        sets.apply(g);
    }
    let mut seen_roots = Vec::new();
    for &u in &part.cells[target] {
        let r = sets.find(u);
        if seen_roots.contains(&r) {
            continue;
        }
        seen_roots.push(r);
        let (child, inv) = refine(graph, part.individualize(u));
        prefix.push(u);
        path_inv.push(inv);
        explore(graph, &child, generators, prefix, path_inv, best);
        path_inv.pop();
        prefix.pop();
    }
}

/// Canonical form alone.
pub fn canonical_form(graph: &SymGraph, vertex_limit: usize) -> Result<CanonicalForm> {
    Ok(automorphism_group(graph, vertex_limit)?.canonical_form)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(g: &SymGraph) -> u64 {
        u64::try_from(automorphism_group(g, 1000).unwrap().order).unwrap()
    }

    #[test]
    fn classic_orders() {
        assert_eq!(order(&SymGraph::cycle(5)), 10);
        assert_eq!(order(&SymGraph::cycle(12)), 24);
        assert_eq!(order(&SymGraph::complete(6)), 720);
        assert_eq!(order(&SymGraph::hypercube(3)), 48);
        assert_eq!(order(&SymGraph::hypercube(4)), 384);
        let petersen = crate::graph::io::from_graph6("IheA@GUAo").unwrap();
        assert_eq!(order(&petersen), 120);
    }

    #[test]
    fn edgeless_and_single_vertex() {
        let empty = SymGraph::from_edges(4, []).unwrap();
        assert_eq!(order(&empty), 24);
        let one = SymGraph::from_edges(1, []).unwrap();
        let r = automorphism_group(&one, 10).unwrap();
        assert_eq!(r.order, BigUint::from(1u32));
        assert!(r.vertex_transitive);
    }

    #[test]
    fn generators_are_automorphisms() {
        let g = SymGraph::hypercube(4);
        let r = automorphism_group(&g, 100).unwrap();
        assert!(r.generators.iter().all(|a| g.is_automorphism(a)));
        assert_eq!(r.group().order(), r.order);
        assert!(r.vertex_transitive);
        let (v0, stab) = r.base_stabilizer().unwrap();
        assert!(stab.generators().iter().all(|a| a.image(v0) == v0));
        assert_eq!(stab.order(), r.base_stabilizer_order());
    }

    #[test]
    fn path_is_not_vertex_transitive() {
        let path = SymGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = automorphism_group(&path, 10).unwrap();
        assert_eq!(r.order, BigUint::from(2u32));
        assert!(!r.vertex_transitive);
    }

    #[test]
    fn canonical_form_detects_isomorphism() {
        let c6 = SymGraph::cycle(6);
        let relabeled = c6.relabel(&Permutation::parse_cycles("(1,4,2)(3,6)", 6).unwrap()).unwrap();
        assert_eq!(canonical_form(&c6, 10).unwrap(), canonical_form(&relabeled, 10).unwrap());
        let two_triangles = SymGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_form(&c6, 10).unwrap(), canonical_form(&two_triangles, 10).unwrap());
    }

    #[test]
    fn limit_enforced() {
        assert!(automorphism_group(&SymGraph::cycle(20), 10).unwrap_err().is_budget());
    }
}
