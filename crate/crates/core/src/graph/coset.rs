use num_bigint::BigUint;
use rustc_hash::FxHashMap;

use super::SymGraph;
use crate::error::{Error, Result};
use crate::group::{orbit_under, DoubleCosetSet, PermGroup};
use crate::parallel::par_map;
use crate::perm::Permutation;

/// A group acting on `0..space_size` through the images of its generators.
#[derive(Debug, Clone)]
pub struct GroupAction {
    pub group: PermGroup,
    pub space_size: usize,
    /// `generator_images[i]` is the action of `group.generators()[i]`.
    pub generator_images: Vec<Permutation>,
}

/// Right cosets `[G:H]` with canonical representatives, numbered in
/// breadth-first discovery order from the trivial coset.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    group: PermGroup,
    subgroup: PermGroup,
    subgroup_elements: Vec<Permutation>,
    representatives: Vec<Permutation>,
    index: FxHashMap<Permutation, u32>,
    generator_images: Vec<Permutation>,
}

/// A coset graph together with the space it lives on and the action of the
/// ambient group by right multiplication.
#[derive(Debug, Clone)]
pub struct CosetGraph {
    pub space: CosetSpace,
    pub graph: SymGraph,
    pub action: GroupAction,
}

/// A Cayley graph; vertex `i` is `elements[i]`, vertex 0 is the identity.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    pub elements: Vec<Permutation>,
    pub graph: SymGraph,
    pub action: GroupAction,
}

impl GroupAction {
    /// Orbits on `0..space_size`, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.space_size];
        let mut out = Vec::new();
        for p in 0..self.space_size as u32 {
            if seen[p as usize] {
                continue;
            }
            let mut orbit = orbit_under(&self.generator_images, p);
            for &q in &orbit {
                seen[q as usize] = true;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.space_size == 0 || orbit_under(&self.generator_images, 0).len() == self.space_size
    }

    /// Permutation group generated by the generator images. Meant for small
    /// spaces; the chain stores one transversal per base point.
    pub fn image_group(&self) -> PermGroup {
        PermGroup::from_generators(self.generator_images.clone()).expect("images share a degree")
    }

    /// `|G| / |image|`.
    pub fn kernel_order(&self) -> BigUint {
        self.group.order() / self.image_group().order()
    }

    /// Whether every generator image maps edges of `graph` to edges.
    pub fn preserves(&self, graph: &SymGraph) -> bool {
        self.space_size == graph.vertex_count() && self.generator_images.iter().all(|g| graph.is_automorphism(g))
    }
}

impl CosetSpace {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.subgroup
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Canonical representative of each coset, indexed by vertex id.
    pub fn representatives(&self) -> &[Permutation] {
        &self.representatives
    }

    /// Vertex id of the coset `H g`, or `None` if `g` lies outside `G`'s cosets.
    pub fn index_of(&self, g: &Permutation) -> Option<u32> {
        if g.degree() != self.group.degree() {
            return None;
        }
        self.index.get(&canonical_key(&self.subgroup_elements, g)).copied()
    }

    /// The action of the ambient group's generators, `Hx ↦ Hxg`.
    pub fn action(&self) -> GroupAction {
        GroupAction {
            group: self.group.clone(),
            space_size: self.len(),
            generator_images: self.generator_images.clone(),
        }
    }

    /// Action of another group `L ≤ G` on the same cosets.
    pub fn action_of(&self, sub: &PermGroup) -> Result<GroupAction> {
        if !sub.is_subgroup_of(&self.group)? {
            return Err(Error::NotSubgroup);
        }
        let images = sub
            .generators()
            .iter()
            .map(|s| self.right_multiplication(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupAction {
            group: sub.clone(),
            space_size: self.len(),
            generator_images: images,
        })
    }

    fn right_multiplication(&self, s: &Permutation) -> Result<Permutation> {
        let images = par_map(&self.representatives, |r| {
            self.index
                .get(&canonical_key(&self.subgroup_elements, &r.then(s)))
                .copied()
        });
        let images: Option<Vec<u32>> = images.into_iter().collect();
        Permutation::from_images(images.ok_or(Error::NotSubgroup)?)
    }
}

/// Lexicographically least image table among `{h g : h ∈ H}`.
///
/// Candidates are narrowed one position at a time; distinct `h` give distinct
/// products, so the search stops as soon as one candidate remains.
pub(crate) fn canonical_key(h_elements: &[Permutation], g: &Permutation) -> Permutation {
    if h_elements.len() <= 1 {
        return g.clone();
    }
    let mut candidates: Vec<&Permutation> = h_elements.iter().collect();
    let mut j = 0;
    while candidates.len() > 1 && j < g.degree() {
        let best = candidates.iter().map(|h| g.image(h.image(j as u32))).min().expect("nonempty");
        candidates.retain(|h| g.image(h.image(j as u32)) == best);
        j += 1;
    }
    candidates[0].then(g)
}

/// Enumerates `[G:H]` by breadth-first closure under right multiplication.
pub fn enumerate_cosets(
    group: &PermGroup,
    subgroup: &PermGroup,
    vertex_budget: usize,
    enumeration_bound: usize,
) -> Result<CosetSpace> {
    if group.degree() != subgroup.degree() {
        return Err(Error::DegreeMismatch {
            left: group.degree(),
            right: subgroup.degree(),
        });
    }
    if !subgroup.is_subgroup_of(group)? {
        return Err(Error::NotSubgroup);
    }
    let index = group.order() / subgroup.order();
    if index > BigUint::from(vertex_budget) {
        return Err(Error::budget("vertex budget", index, vertex_budget));
    }
    let subgroup_elements = subgroup.elements(enumeration_bound)?;
    let gens = group.generators();

    let start = canonical_key(&subgroup_elements, &Permutation::identity(group.degree()));
    let mut representatives = vec![start.clone()];
    let mut lookup: FxHashMap<Permutation, u32> = FxHashMap::default();
    lookup.insert(start, 0);
    let mut images: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    let mut level_start = 0;
    while level_start < representatives.len() {
        let level_end = representatives.len();
        let keys = par_map(&representatives[level_start..level_end], |r| {
            gens.iter()
                .map(|s| canonical_key(&subgroup_elements, &r.then(s)))
                .collect::<Vec<_>>()
        });
        for row in keys {
            for (s, key) in row.into_iter().enumerate() {
                let next = representatives.len() as u32;
                let id = *lookup.entry(key).or_insert_with_key(|k| {
                    representatives.push(k.clone());
                    next
                });
                images[s].push(id);
            }
        }
        level_start = level_end;
    }
    let generator_images = images
        .into_iter()
        .map(Permutation::from_images)
        .collect::<Result<Vec<_>>>()?;
    Ok(CosetSpace {
        group: group.clone(),
        subgroup: subgroup.clone(),
        subgroup_elements,
        representatives,
        index: lookup,
        generator_images,
    })
}

/// `Cos(G, H, D)`: cosets `Hx`, `Hy` adjacent iff `y x⁻¹ ∈ D`.
pub fn coset_graph(
    group: &PermGroup,
    subgroup: &PermGroup,
    d: &DoubleCosetSet,
    vertex_budget: usize,
    enumeration_bound: usize,
) -> Result<CosetGraph> {
    if d.elements().iter().any(|x| x.degree() != group.degree()) {
        return Err(Error::DegreeMismatch {
            left: group.degree(),
            right: d.middle().degree(),
        });
    }
    if !d.is_inverse_closed() {
        return Err(Error::invalid("connection set is not closed under inverses"));
    }
    for x in d.elements() {
        if subgroup.contains(x)? {
            return Err(Error::invalid("connection set meets the subgroup"));
        }
        if !group.contains(x)? {
            return Err(Error::invalid("connection set is not contained in the group"));
        }
    }
    for h in subgroup.generators() {
        if !d.elements().iter().all(|x| d.contains(&x.then(h)) && d.contains(&h.then(x))) {
            return Err(Error::invalid("connection set is not a union of double cosets"));
        }
    }
    let space = enumerate_cosets(group, subgroup, vertex_budget, enumeration_bound)?;

    // one representative per right coset of H inside D
    let mut seen = FxHashMap::default();
    let mut offsets = Vec::new();
    for x in d.elements() {
        let key = canonical_key(&space.subgroup_elements, x);
        if seen.insert(key, ()).is_none() {
            offsets.push(x.clone());
        }
    }
    let adjacency = par_map(&space.representatives, |g| {
        offsets
            .iter()
            .map(|r| space.index[&canonical_key(&space.subgroup_elements, &r.then(g))])
            .collect::<Vec<u32>>()
    });
    let graph = SymGraph::from_neighbor_lists(adjacency);
    let action = space.action();
    Ok(CosetGraph { space, graph, action })
}

/// `S = L ∩ D`, sorted.
pub fn connection_set(d: &DoubleCosetSet, l: &PermGroup) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for x in d.elements() {
        if l.contains(x)? {
            out.push(x.clone());
        }
    }
    Ok(out)
}

/// `Cay(L, S)` with `g ~ s g`, and the right regular action `g ↦ g a`.
pub fn cayley_graph(l: &PermGroup, s: &[Permutation], vertex_budget: usize) -> Result<CayleyGraph> {
    let mut set: Vec<Permutation> = s.to_vec();
    set.sort_unstable();
    set.dedup();
    for x in &set {
        if x.is_identity() {
            return Err(Error::invalid("connection set contains the identity"));
        }
        if set.binary_search(&x.inverse()).is_err() {
            return Err(Error::invalid("connection set is not closed under inverses"));
        }
        if !l.contains(x)? {
            return Err(Error::invalid("connection set is not contained in the group"));
        }
    }
    let elements = l.elements(vertex_budget).map_err(|e| match e {
        Error::BudgetExceeded { needed, limit, .. } => Error::BudgetExceeded {
            budget: "vertex budget",
            needed,
            limit,
        },
        other => other,
    })?;
    let index: FxHashMap<&Permutation, u32> = elements.iter().enumerate().map(|(i, g)| (g, i as u32)).collect();
    let adjacency = par_map(&elements, |g| set.iter().map(|x| index[&x.then(g)]).collect::<Vec<u32>>());
    let graph = SymGraph::from_neighbor_lists(adjacency);
    let generator_images = l
        .generators()
        .iter()
        .map(|a| Permutation::from_images(elements.iter().map(|g| index[&g.then(a)]).collect()))
        .collect::<Result<Vec<_>>>()?;
    let action = GroupAction {
        group: l.clone(),
        space_size: elements.len(),
        generator_images,
    };
    drop(index);
    Ok(CayleyGraph {
        elements,
        graph,
        action,
    })
}
