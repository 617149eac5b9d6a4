//! Checks on the degree-23 family that do not need the full graph.

use rustc_hash::FxHashSet;
use serde::Serialize;

use super::data;
use super::{build_family, Family, FamilySpec};
use crate::error::Result;
use crate::graph::connection_set;
use crate::perm::Permutation;

/// The printed connection set, in printed order.
pub fn m23_connection_set() -> Vec<Permutation> {
    data::m23::S
        .iter()
        .map(|s| Permutation::parse_cycles(s, data::m23::DEGREE).expect("embedded element parses"))
        .collect()
}

/// `{a b c : a, b, c ∈ S}`.
pub fn product_set_cubed(s: &[Permutation]) -> FxHashSet<Permutation> {
    let mut out = FxHashSet::default();
    for a in s {
        for b in s {
            let ab = a.then(b);
            for c in s {
                out.insert(ab.then(c));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct M23Checks {
    /// `|G ∩ HtH|`.
    pub computed_s_size: usize,
    /// `G ∩ HtH` equals the printed list as a set.
    pub s_matches_printed: bool,
    pub cube_size: usize,
    /// `s_1² ∉ S³`.
    pub s1_squared_outside_cube: bool,
    pub b_order: u64,
    /// `H^b = H`.
    pub b_normalizes_h: bool,
    /// `(HtH)^b = HtH`; expected false.
    pub b_preserves_double_coset: bool,
    pub s11_order: u64,
    /// `(1, s11, s11², s11³, s11⁴)` is a closed walk of distinct vertices in `Cay(G, S)`.
    pub five_cycle: bool,
}

impl M23Checks {
    pub fn all_pass(&self) -> bool {
        self.computed_s_size == 23
            && self.s_matches_printed
            && self.s1_squared_outside_cube
            && self.b_order == 11
            && self.b_normalizes_h
            && !self.b_preserves_double_coset
            && self.s11_order == 5
            && self.five_cycle
    }
}

pub fn m23_deep_checks(enumeration_bound: usize) -> Result<M23Checks> {
    let bundle = build_family(FamilySpec::new(Family::M23, None, true)?)?;
    let h = &bundle.stabilizer;
    let d = h.double_coset(&bundle.t, enumeration_bound)?;
    let computed = connection_set(&d, &bundle.regular)?;
    let mut printed = m23_connection_set();
    let s1 = printed[0].clone();
    let s11 = printed[10].clone();
    let cube = product_set_cubed(&printed);
    printed.sort_unstable();
    let b = bundle.extra("b").expect("m23 bundle carries b").clone();

    // Cay(G, S): u ~ v iff v u⁻¹ ∈ S
    let adjacent = |u: &Permutation, v: &Permutation| printed.binary_search(&v.then(&u.inverse())).is_ok();
    let walk: Vec<Permutation> = (0..5).map(|k| s11.pow(k)).collect();
    let distinct = walk.iter().collect::<FxHashSet<_>>().len() == 5;
    let closed = (0..5).all(|k| adjacent(&walk[k], &walk[(k + 1) % 5]));

    Ok(M23Checks {
        computed_s_size: computed.len(),
        s_matches_printed: computed == printed,
        cube_size: cube.len(),
        s1_squared_outside_cube: !cube.contains(&s1.then(&s1)),
        b_order: b.order_u64(),
        b_normalizes_h: h.conjugate(&b)?.same_group(h)?,
        b_preserves_double_coset: d.is_invariant_under(&b),
        s11_order: s11.order_u64(),
        five_cycle: distinct && closed,
    })
}
