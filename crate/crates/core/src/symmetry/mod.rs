//! Arc-transitivity, regularity, vertex-stabilizer structure and the
//! classification of a regular subgroup inside the full automorphism group.

mod search;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CosetGraph, GroupAction, SymGraph};
use crate::group::{is_prime, DoubleCosetSet, PermGroup, SimplicityFingerprint};
use crate::perm::Permutation;

pub use search::{automorphism_group, canonical_form, AutResult, CanonicalForm};

fn check_preserves(graph: &SymGraph, act: &GroupAction) -> Result<()> {
    if act.space_size != graph.vertex_count() {
        return Err(Error::DegreeMismatch {
            left: graph.vertex_count(),
            right: act.space_size,
        });
    }
    if !act.preserves(graph) {
        return Err(Error::invalid("the action does not preserve the edge set"));
    }
    Ok(())
}

/// Size of the orbit of the arc `(0, first neighbor of 0)`; 0 for an edgeless graph.
pub fn arc_orbit_size(graph: &SymGraph, act: &GroupAction) -> Result<usize> {
    check_preserves(graph, act)?;
    let n = graph.vertex_count();
    if n == 0 || graph.degree(0) == 0 {
        return Ok(0);
    }
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0usize);
    for v in 0..n as u32 {
        offsets.push(offsets[v as usize] + graph.degree(v));
    }
    let arc_id = |u: u32, v: u32| -> usize {
        offsets[u as usize] + graph.neighbors(u).binary_search(&v).expect("images of arcs are arcs")
    };
    let total = offsets[n];
    let mut seen = vec![0u64; total.div_ceil(64)];
    let mut queue: Vec<(u32, u32)> = vec![(0, graph.neighbors(0)[0])];
    seen[0] |= 1;
    let mut head = 0;
    while head < queue.len() {
        let (u, v) = queue[head];
        head += 1;
        for g in &act.generator_images {
            let (gu, gv) = (g.image(u), g.image(v));
            let id = arc_id(gu, gv);
            if seen[id / 64] >> (id % 64) & 1 == 0 {
                seen[id / 64] |= 1 << (id % 64);
                queue.push((gu, gv));
            }
        }
    }
    Ok(queue.len())
}

/// Whether the action is transitive on arcs (ordered adjacent pairs).
pub fn is_arc_transitive(graph: &SymGraph, act: &GroupAction) -> Result<bool> {
    let size = arc_orbit_size(graph, act)?;
    Ok(size > 0 && size == 2 * graph.edge_count())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regularity {
    Regular,
    Semiregular,
    Neither,
}

/// Semiregular when every orbit has `|G|` points; regular when also transitive.
pub fn is_regular_action(act: &GroupAction) -> Regularity {
    let order = act.group.order();
    let orbits = act.orbits();
    if !orbits.iter().all(|o| BigUint::from(o.len()) == order) {
        Regularity::Neither
    } else if orbits.len() <= 1 {
        Regularity::Regular
    } else {
        Regularity::Semiregular
    }
}

fn check_fixes(gv: &PermGroup, v: u32) -> Result<()> {
    if gv.generators().iter().any(|g| g.image(v) != v) {
        return Err(Error::invalid(format!("stabilizer does not fix vertex {}", v + 1)));
    }
    Ok(())
}

/// The action of `Gv` on the sorted neighbor list of `v`, and the order of its kernel.
pub fn local_action(gv: &PermGroup, graph: &SymGraph, v: u32) -> Result<(PermGroup, BigUint)> {
    if gv.degree() != graph.vertex_count() {
        return Err(Error::DegreeMismatch {
            left: graph.vertex_count(),
            right: gv.degree(),
        });
    }
    check_fixes(gv, v)?;
    let nbrs = graph.neighbors(v);
    let k = nbrs.len();
    if k == 0 {
        return Ok((PermGroup::trivial(0), gv.order()));
    }
    let images = gv
        .generators()
        .iter()
        .map(|g| {
            let table = nbrs
                .iter()
                .map(|&w| {
                    nbrs.binary_search(&g.image(w))
                        .map(|i| i as u32)
                        .map_err(|_| Error::invalid("stabilizer does not preserve the neighborhood"))
                })
                .collect::<Result<Vec<u32>>>()?;
            Permutation::from_images(table)
        })
        .collect::<Result<Vec<_>>>()?;
    let local = PermGroup::from_generators(images)?;
    let kernel = gv.order() / local.order();
    Ok((local, kernel))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProfileChecks {
    pub unique_normal_sylow: bool,
    pub kernel_cyclic: bool,
    pub local_transitive: bool,
    /// `k | ℓ | p − 1` and `|Gv| = p k ℓ`.
    pub divisibility: bool,
}

/// `Gv ≅ Z_k × (Z_p : Z_ℓ)` data for a solvable arc-transitive stabilizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StabilizerProfile {
    pub p: u64,
    pub k: u64,
    pub ell: u64,
    pub order: u64,
    pub checks: ProfileChecks,
}

impl StabilizerProfile {
    pub fn all_checks_pass(&self) -> bool {
        let c = &self.checks;
        c.unique_normal_sylow && c.kernel_cyclic && c.local_transitive && c.divisibility
    }

    pub fn triple(&self) -> (u64, u64, u64) {
        (self.p, self.k, self.ell)
    }
}

pub fn stabilizer_profile(gv: &PermGroup, graph: &SymGraph, v: u32, enumeration_bound: usize) -> Result<StabilizerProfile> {
    let p = graph.degree(v) as u64;
    if p < 5 || !is_prime(p) {
        return Err(Error::invalid(format!("valency {p} is not a prime >= 5")));
    }
    if !gv.is_solvable() {
        return Err(Error::invalid("vertex stabilizer is not solvable"));
    }
    let (local, kernel_order) = local_action(gv, graph, v)?;
    let order = gv.order().to_u64().ok_or_else(|| Error::invalid("stabilizer order overflows"))?;
    let local_order = local.order().to_u64().expect("divides a u64");
    let k = kernel_order.to_u64().expect("divides a u64");
    let local_transitive = local.is_transitive() && local_order % p == 0;
    let ell = local_order / p;

    let kernel = gv.pointwise_stabilizer(graph.neighbors(v))?;
    let kernel_elements = kernel.elements(enumeration_bound)?;
    let kernel_cyclic = kernel_elements.iter().any(|g| g.order_u64() == k);

    let elements = gv.elements(enumeration_bound)?;
    let of_order_p = elements.iter().filter(|g| g.order_u64() == p).count() as u64;
    // with p² ∤ |Gv|, a unique Sylow p-subgroup has exactly p − 1 elements of order p
    let unique_normal_sylow = order % (p * p) != 0 && of_order_p == p - 1;

    let divisibility = k > 0 && ell > 0 && ell.is_multiple_of(k) && (p - 1).is_multiple_of(ell) && order == p * k * ell;
    Ok(StabilizerProfile {
        p,
        k,
        ell,
        order,
        checks: ProfileChecks {
            unique_normal_sylow,
            kernel_cyclic,
            local_transitive,
            divisibility,
        },
    })
}

/// Whether `G_v` and its local action `G_v^{Γ(v)}` are both solvable or both
/// not, where `G_v` is taken in the group induced on the vertices.
pub fn solvability_transfer_check(graph: &SymGraph, act: &GroupAction, v: u32) -> Result<bool> {
    check_preserves(graph, act)?;
    let g = act.image_group();
    let gv = g.point_stabilizer(v)?;
    let (local, _) = local_action(&gv, graph, v)?;
    Ok(gv.is_solvable() == local.is_solvable())
}

/// [`solvability_transfer_check`] for a coset graph, read off the abstract
/// stabilizer `H` of the trivial coset and its action on that coset's
/// neighbors. Never builds the action on the whole vertex set, so it scales
/// to graphs far beyond the reach of [`GroupAction::image_group`].
pub fn solvability_transfer_on_cosets(cg: &CosetGraph) -> Result<bool> {
    let space = &cg.space;
    let h = space.subgroup();
    let nbrs = cg.graph.neighbors(0);
    let reps = space.representatives();
    let images = h
        .generators()
        .iter()
        .map(|s| {
            let table = nbrs
                .iter()
                .map(|&w| {
                    let image = space
                        .index_of(&reps[w as usize].then(s))
                        .ok_or_else(|| Error::invalid("stabilizer leaves the coset space"))?;
                    nbrs.binary_search(&image)
                        .map(|i| i as u32)
                        .map_err(|_| Error::invalid("stabilizer does not preserve the neighborhood"))
                })
                .collect::<Result<Vec<u32>>>()?;
            Permutation::from_images(table)
        })
        .collect::<Result<Vec<_>>>()?;
    let local = if images.is_empty() || nbrs.is_empty() {
        PermGroup::trivial(nbrs.len().max(1))
    } else {
        PermGroup::from_generators(images)?
    };
    Ok(h.is_solvable() == local.is_solvable())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CandidateCheck {
    pub h_invariant: bool,
    pub d_invariant: bool,
}

/// For each supplied conjugator `c`: whether `H^c = H` and `D^c = D`.
pub fn normalizer_formula_check(
    h: &PermGroup,
    d: &DoubleCosetSet,
    candidates: &[Permutation],
) -> Result<Vec<CandidateCheck>> {
    candidates
        .iter()
        .map(|c| {
            Ok(CandidateCheck {
                h_invariant: h.conjugate(c)?.same_group(h)?,
                d_invariant: d.is_invariant_under(c),
            })
        })
        .collect()
}

/// `k | ℓ`, `ℓ | p − 1` and `k ≡ ℓ (mod 2)`.
pub fn conceivable_triple_check(p: u64, k: u64, ell: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::invalid(format!("need a prime p >= 5, got {p}")));
    }
    Ok(k > 0 && ell > 0 && ell.is_multiple_of(k) && (p - 1).is_multiple_of(ell) && k % 2 == ell % 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// The regular subgroup is normal in the automorphism group.
    Normal,
    /// Its normal closure is a larger arc-transitive normal subgroup.
    Overgroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub branch: Branch,
    #[serde(serialize_with = "crate::report::serialize_biguint")]
    pub aut_order: BigUint,
    /// Order of the normal closure, in the overgroup branch.
    pub t_order: Option<u64>,
    pub t_arc_transitive: Option<bool>,
    pub t_fingerprint: Option<SimplicityFingerprint>,
}

/// Places the regular group `act` inside `Aut(Γ)`: normal, or contained in
/// a larger arc-transitive normal subgroup (its normal closure).
pub fn classify_branch(graph: &SymGraph, act: &GroupAction, aut: &AutResult, simplicity_budget: usize) -> Result<Classification> {
    check_preserves(graph, act)?;
    if is_regular_action(act) != Regularity::Regular {
        return Err(Error::invalid("the supplied group is not regular on the vertices"));
    }
    let a = aut.group();
    let (_, stab) = aut.base_stabilizer().ok_or_else(|| Error::invalid("graph has no base"))?;
    if !stab.is_solvable() {
        return Err(Error::invalid("vertex stabilizer of the automorphism group is not solvable"));
    }
    let g = act.image_group();
    if g.is_normal_in(&a)? {
        return Ok(Classification {
            branch: Branch::Normal,
            aut_order: aut.order.clone(),
            t_order: None,
            t_arc_transitive: None,
            t_fingerprint: None,
        });
    }
    let t = g.normal_closure_in(&a)?;
    let t_action = GroupAction {
        group: t.clone(),
        space_size: graph.vertex_count(),
        generator_images: t.generators().to_vec(),
    };
    Ok(Classification {
        branch: Branch::Overgroup,
        aut_order: aut.order.clone(),
        t_order: t.order_u64(),
        t_arc_transitive: Some(is_arc_transitive(graph, &t_action)?),
        t_fingerprint: Some(t.simplicity_fingerprint(simplicity_budget)),
    })
}

/// `|H G_v| = |H| |G_v| / |H ∩ G_v|`.
pub fn product_set_size(h: &PermGroup, gv: &PermGroup, bound: usize) -> Result<BigUint> {
    let inter = h.intersection_small(gv, bound)?;
    Ok(h.order() * gv.order() / inter.order())
}

/// Frattini check for `H ≤ G`: `H` is transitive on the `G`-orbit of `v`
/// exactly when `|H G_v| = |G|`. Returns whether the two sides agree.
pub fn frattini_holds(g: &PermGroup, h: &PermGroup, v: u32, bound: usize) -> Result<bool> {
    let gv = g.point_stabilizer(v)?;
    let product_full = product_set_size(h, &gv, bound)? == g.order();
    let h_transitive = h.orbit(v)?.len() == g.orbit(v)?.len();
    Ok(product_full == h_transitive)
}
