//! Permutation groups backed by a lazily built base and strong generating set.
//!
//! All points in this API are 0-based.

mod arith;
pub(crate) mod bsgs;

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use bsgs::Bsgs;

pub use arith::{is_prime, nu_factorial};

#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    bsgs: OnceLock<Bsgs>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.gens.len())
            .finish()
    }
}

/// Terms of the derived series, starting at the group itself and ending at
/// the first term equal to its own derived subgroup.
#[derive(Debug, Clone)]
pub struct DerivedSeries {
    pub chain: Vec<PermGroup>,
}

impl DerivedSeries {
    pub fn is_solvable(&self) -> bool {
        self.chain.last().is_some_and(|g| g.is_trivial())
    }

    pub fn is_perfect(&self) -> bool {
        self.chain.len() == 1 && !self.chain[0].is_trivial()
    }

    pub fn orders(&self) -> Vec<BigUint> {
        self.chain.iter().map(PermGroup::order).collect()
    }
}

/// Order, perfectness and (when affordable) exhaustive simplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicityFingerprint {
    #[serde(serialize_with = "crate::report::serialize_biguint")]
    pub order: BigUint,
    pub perfect: bool,
    /// `None` when the group is larger than the enumeration budget.
    pub exhaustive_simple: Option<bool>,
}

/// The set `H t H`, sorted by image table.
#[derive(Debug, Clone)]
pub struct DoubleCosetSet {
    elements: Vec<Permutation>,
    lookup: FxHashSet<Permutation>,
    left: PermGroup,
    middle: Permutation,
}

impl DoubleCosetSet {
    pub fn from_elements(left: PermGroup, middle: Permutation, mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let lookup = elements.iter().cloned().collect();
        DoubleCosetSet {
            elements,
            lookup,
            left,
            middle,
        }
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.lookup.contains(g)
    }

    pub fn left(&self) -> &PermGroup {
        &self.left
    }

    pub fn middle(&self) -> &Permutation {
        &self.middle
    }

    pub fn is_inverse_closed(&self) -> bool {
        self.elements.iter().all(|d| self.lookup.contains(&d.inverse()))
    }

    /// `D^c = c⁻¹ D c` compared as sets.
    pub fn is_invariant_under(&self, c: &Permutation) -> bool {
        self.elements.iter().all(|d| self.lookup.contains(&d.conjugate_by(c)))
    }
}

impl PermGroup {
    /// Group generated by `gens`; the list must be nonempty with equal degrees.
    pub fn from_generators(gens: Vec<Permutation>) -> Result<Self> {
        let degree = gens
            .first()
            .ok_or_else(|| Error::invalid("empty generator list"))?
            .degree();
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: bad.degree(),
            });
        }
        Ok(PermGroup {
            degree,
            gens,
            bsgs: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            gens: vec![Permutation::identity(degree)],
            bsgs: OnceLock::new(),
        }
    }

    fn from_bsgs(bsgs: Bsgs) -> Self {
        let degree = bsgs.degree;
        let mut gens = bsgs.strong_generators();
        if gens.is_empty() {
            gens.push(Permutation::identity(degree));
        }
        let cell = OnceLock::new();
        let _ = cell.set(bsgs);
        PermGroup {
            degree,
            gens,
            bsgs: cell,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub(crate) fn bsgs(&self) -> &Bsgs {
        self.bsgs.get_or_init(|| Bsgs::new(self.degree, &self.gens, &[]))
    }

    pub fn base(&self) -> Vec<u32> {
        self.bsgs().base()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.bsgs().strong_generators()
    }

    /// Product of the fundamental orbit lengths.
    pub fn order(&self) -> BigUint {
        self.bsgs().order()
    }

    /// Order when it fits a `u64`.
    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(self.order()).ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(Permutation::is_identity)
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        self.check_degree(g.degree())?;
        Ok(self.bsgs().contains(g))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool> {
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as subgroups of the same symmetric group.
    pub fn same_group(&self, other: &PermGroup) -> Result<bool> {
        Ok(self.order() == other.order() && self.is_subgroup_of(other)?)
    }

    pub fn orbit(&self, point: u32) -> Result<Vec<u32>> {
        self.check_point(point)?;
        Ok(orbit_under(&self.gens, point))
    }

    /// All orbits, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree as u32 {
            if seen[p as usize] {
                continue;
            }
            let mut orbit = orbit_under(&self.gens, p);
            for &q in &orbit {
                seen[q as usize] = true;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || orbit_under(&self.gens, 0).len() == self.degree
    }

    pub fn point_stabilizer(&self, point: u32) -> Result<PermGroup> {
        self.pointwise_stabilizer(&[point])
    }

    /// Subgroup fixing every point of `points`.
    pub fn pointwise_stabilizer(&self, points: &[u32]) -> Result<PermGroup> {
        for &p in points {
            self.check_point(p)?;
        }
        let gens = self.bsgs().strong_generators();
        let chain = Bsgs::new(self.degree, &gens, points);
        Ok(PermGroup::from_bsgs(chain.tail(points.len())))
    }

    /// Every element, in base-image order. Fails above `bound`.
    pub fn elements(&self, bound: usize) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > BigUint::from(bound) {
            return Err(Error::budget("enumeration bound", order, bound));
        }
        let mut out = Vec::with_capacity(bound.min(usize::try_from(&order).unwrap_or(0)));
        self.bsgs().for_each_element(|g| out.push(g.clone()));
        Ok(out)
    }

    /// `c⁻¹ H c`.
    pub fn conjugate(&self, c: &Permutation) -> Result<PermGroup> {
        self.check_degree(c.degree())?;
        PermGroup::from_generators(self.gens.iter().map(|g| g.conjugate_by(c)).collect())
    }

    /// Smallest normal subgroup of `ambient` containing `gens`.
    pub fn normal_closure_of(gens: &[Permutation], ambient: &PermGroup) -> Result<PermGroup> {
        let degree = ambient.degree;
        let nontrivial: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if nontrivial.is_empty() {
            return Ok(PermGroup::trivial(degree));
        }
        for g in &nontrivial {
            ambient.check_degree(g.degree())?;
        }
        let target = ambient.order();
        let mut chain = Bsgs::new(degree, &nontrivial, &[]);
        let mut added = nontrivial.clone();
        let mut queue: VecDeque<Permutation> = nontrivial.into();
        while let Some(n) = queue.pop_front() {
            if chain.order() == target {
                break;
            }
            for c in &ambient.gens {
                let conj = n.conjugate_by(c);
                if !chain.contains(&conj) {
                    chain.extend(&conj);
                    added.push(conj.clone());
                    queue.push_back(conj);
                }
            }
        }
        Ok(PermGroup {
            degree,
            gens: added,
            bsgs: {
                let cell = OnceLock::new();
                let _ = cell.set(chain);
                cell
            },
        })
    }

    pub fn normal_closure_in(&self, ambient: &PermGroup) -> Result<PermGroup> {
        PermGroup::normal_closure_of(&self.gens, ambient)
    }

    /// Normal closure of the commutators of all generator pairs.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                let c = a.inverse().then(&b.inverse()).then(a).then(b);
                if !c.is_identity() && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        PermGroup::normal_closure_of(&comms, self).expect("degrees agree")
    }

    pub fn derived_series(&self) -> DerivedSeries {
        let mut chain = vec![self.clone()];
        loop {
            let last = chain.last().expect("nonempty");
            if last.is_trivial() {
                break;
            }
            let next = last.derived_subgroup();
            if next.order() == last.order() {
                break;
            }
            chain.push(next);
        }
        DerivedSeries { chain }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().is_solvable()
    }

    pub fn is_perfect(&self) -> bool {
        !self.is_trivial() && self.derived_subgroup().order() == self.order()
    }

    /// Whether `self` is normal in `ambient`; `self` must be a subgroup.
    pub fn is_normal_in(&self, ambient: &PermGroup) -> Result<bool> {
        self.check_degree(ambient.degree)?;
        if !self.is_subgroup_of(ambient)? {
            return Err(Error::NotSubgroup);
        }
        for n in &self.gens {
            for g in &ambient.gens {
                if !self.bsgs().contains(&n.conjugate_by(g)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Perfectness always; simplicity by checking that every conjugacy class
    /// normally generates the group, when `|G| ≤ budget`.
    pub fn simplicity_fingerprint(&self, budget: usize) -> SimplicityFingerprint {
        let order = self.order();
        let perfect = self.is_perfect();
        let exhaustive_simple = if order <= BigUint::from(budget) {
            Some(self.exhaustively_simple(budget))
        } else {
            None
        };
        SimplicityFingerprint {
            order,
            perfect,
            exhaustive_simple,
        }
    }

    fn exhaustively_simple(&self, budget: usize) -> bool {
        if self.is_trivial() {
            return false;
        }
        let elements = self.elements(budget).expect("checked against budget");
        let order = self.order();
        let mut seen: FxHashSet<Permutation> = FxHashSet::default();
        for g in &elements {
            if g.is_identity() || seen.contains(g) {
                continue;
            }
            // conjugacy class of g
            let mut class = vec![g.clone()];
            seen.insert(g.clone());
            let mut head = 0;
            while head < class.len() {
                for c in &self.gens {
                    let conj = class[head].conjugate_by(c);
                    if seen.insert(conj.clone()) {
                        class.push(conj);
                    }
                }
                head += 1;
            }
            let closure = PermGroup::normal_closure_of(std::slice::from_ref(g), self).expect("same degree");
            if closure.order() != order {
                return false;
            }
        }
        true
    }

    /// `H t H` by enumerating `|H|²` products.
    pub fn double_coset(&self, t: &Permutation, bound: usize) -> Result<DoubleCosetSet> {
        self.check_degree(t.degree())?;
        let hs = self.elements(bound)?;
        let mut set: FxHashSet<Permutation> = FxHashSet::default();
        for h1 in &hs {
            let left = h1.then(t);
            for h2 in &hs {
                set.insert(left.then(h2));
            }
        }
        Ok(DoubleCosetSet::from_elements(
            self.clone(),
            t.clone(),
            set.into_iter().collect(),
        ))
    }

    /// `H ∩ K` by filtering the smaller group's elements.
    pub fn intersection_small(&self, other: &PermGroup, bound: usize) -> Result<PermGroup> {
        self.check_degree(other.degree)?;
        let (small, large) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        let elements = small.elements(bound)?;
        let mut chain = Bsgs::new(self.degree, &[], &[]);
        for g in elements {
            if !g.is_identity() && large.bsgs().contains(&g) && !chain.contains(&g) {
                chain.extend(&g);
            }
        }
        Ok(PermGroup::from_bsgs(chain))
    }

    /// Largest normal subgroup of `ambient` inside `self`.
    pub fn core_in(&self, ambient: &PermGroup, bound: usize) -> Result<PermGroup> {
        let mut core = self.clone();
        loop {
            let mut next = core.clone();
            for g in &ambient.gens {
                next = next.intersection_small(&core.conjugate(g)?, bound)?;
                next = next.intersection_small(&core.conjugate(&g.inverse())?, bound)?;
            }
            if next.order() == core.order() {
                return Ok(core);
            }
            core = next;
        }
    }

    fn check_degree(&self, degree: usize) -> Result<()> {
        if degree != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: degree,
            });
        }
        Ok(())
    }

    fn check_point(&self, point: u32) -> Result<()> {
        if point as usize >= self.degree {
            return Err(Error::OutOfRange {
                point: point as usize + 1,
                degree: self.degree,
            });
        }
        Ok(())
    }
}

/// Breadth-first orbit of `point` under `gens`, in discovery order.
pub fn orbit_under(gens: &[Permutation], point: u32) -> Vec<u32> {
    let degree = gens.first().map_or(0, Permutation::degree);
    let mut seen = vec![false; degree.max(point as usize + 1)];
    seen[point as usize] = true;
    let mut orbit = vec![point];
    let mut head = 0;
    while head < orbit.len() {
        let p = orbit[head];
        for g in gens {
            let q = g.image(p);
            if !seen[q as usize] {
                seen[q as usize] = true;
                orbit.push(q);
            }
        }
        head += 1;
    }
    orbit
}

/// Closure of `gens` by brute-force multiplication; test oracle for small
/// groups only.
pub fn enumerate_by_closure(gens: &[Permutation], limit: usize) -> Option<Vec<Permutation>> {
    let degree = gens.first()?.degree();
    let id = Permutation::identity(degree);
    let mut index: FxHashMap<Permutation, ()> = FxHashMap::default();
    index.insert(id.clone(), ());
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        for g in gens {
            let next = out[head].then(g);
            if !index.contains_key(&next) {
                if out.len() >= limit {
                    return None;
                }
                index.insert(next.clone(), ());
                out.push(next);
            }
        }
        head += 1;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn group(gens: &[&str], n: usize) -> PermGroup {
        PermGroup::from_generators(gens.iter().map(|g| p(g, n)).collect()).unwrap()
    }

    #[test]
    fn cyclic_group_order() {
        let g = group(&["(1,2,3,4,5)"], 5);
        assert_eq!(g.order(), BigUint::from(5u32));
        assert!(g.is_solvable());
        assert!(!g.is_perfect());
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        let s6 = group(&["(1,2,3,4,5,6)", "(1,2)"], 6);
        assert_eq!(s6.order_u64(), Some(720));
        let a7 = group(&["(1,2,3,4,5,6,7)", "(1,2)(3,4)"], 7);
        assert_eq!(a7.order_u64(), Some(2520));
        assert!(a7.is_perfect());
        let s4 = group(&["(1,2,3,4)", "(1,2)"], 4);
        let series = s4.derived_series();
        let orders: Vec<u64> = series.orders().iter().map(|o| u64::try_from(o).unwrap()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert!(series.is_solvable());
    }

    #[test]
    fn identity_group() {
        let g = PermGroup::trivial(4);
        assert_eq!(g.order_u64(), Some(1));
        assert!(g.contains(&Permutation::identity(4)).unwrap());
        assert_eq!(g.orbit(2).unwrap(), vec![2]);
        assert!(g.point_stabilizer(0).unwrap().is_trivial());
        assert!(g.is_solvable());
    }

    #[test]
    fn empty_generators_rejected() {
        assert!(PermGroup::from_generators(vec![]).is_err());
        assert!(PermGroup::from_generators(vec![Permutation::identity(3), Permutation::identity(4)]).is_err());
    }

    #[test]
    fn stabilizer_of_product_of_transpositions() {
        let g = group(&["(1,2)", "(3,4)"], 4);
        let stab = g.point_stabilizer(0).unwrap();
        assert_eq!(stab.order_u64(), Some(2));
        assert!(stab.contains(&p("(3,4)", 4)).unwrap());
        assert!(!stab.contains(&p("(1,2)", 4)).unwrap());
    }

    #[test]
    fn alternating_point_stabilizer() {
        for n in [5usize, 6, 7] {
            let cyc = format!("({})", (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(","));
            let gens: Vec<&str> = if n % 2 == 1 {
                vec![&cyc, "(1,2,3)"]
            } else {
                vec!["(1,2,3)"]
            };
            let g = if n % 2 == 1 {
                group(&gens, n)
            } else {
                // A_n for even n: (1,2,3) and (2,...,n)
                let cyc2 = format!("({})", (2..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(","));
                group(&["(1,2,3)", &cyc2], n)
            };
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(g.order_u64(), Some(fact / 2));
            let stab = g.point_stabilizer(n as u32 - 1).unwrap();
            assert_eq!(stab.order_u64(), Some(fact / n as u64 / 2));
        }
    }

    #[test]
    fn membership_by_sifting() {
        let a5 = group(&["(1,2,3,4,5)", "(1,2,3)"], 5);
        assert!(a5.contains(&p("(1,2)(3,4)", 5)).unwrap());
        assert!(!a5.contains(&p("(1,2)", 5)).unwrap());
        assert!(a5.contains(&Permutation::identity(5)).unwrap());
        assert!(a5.contains(&Permutation::identity(6)).is_err());
    }

    #[test]
    fn orbit_of_cycle_and_range_check() {
        let g = group(&["(1,2,3,4,5,6,7,8,9,10,11)"], 11);
        let mut orbit = g.orbit(0).unwrap();
        orbit.sort_unstable();
        assert_eq!(orbit, (0..11).collect::<Vec<_>>());
        assert!(g.orbit(11).is_err());
    }

    #[test]
    fn bsgs_order_matches_closure() {
        let cases = [
            (vec!["(1,2,3)(4,5)", "(1,4)(2,6)"], 6),
            (vec!["(1,2,3,4)", "(2,4)"], 4),
            (vec!["(1,5,2)(3,7)", "(2,6,4,8)"], 8),
        ];
        for (gens, n) in cases {
            let g = group(&gens, n);
            let closure = enumerate_by_closure(g.generators(), 100_000).unwrap();
            assert_eq!(g.order_u64(), Some(closure.len() as u64));
            let listed = g.elements(100_000).unwrap();
            let set: FxHashSet<_> = listed.iter().cloned().collect();
            assert_eq!(set.len(), listed.len());
            assert!(closure.iter().all(|e| set.contains(e)));
        }
    }

    #[test]
    fn normality() {
        let s3 = group(&["(1,2,3)", "(1,2)"], 3);
        let c3 = group(&["(1,2,3)"], 3);
        assert!(c3.is_normal_in(&s3).unwrap());
        assert!(s3.is_normal_in(&s3).unwrap());
        let c2 = group(&["(1,2)"], 3);
        assert!(!c2.is_normal_in(&s3).unwrap());
        let outside = group(&["(1,2)"], 3);
        let a3 = c3.clone();
        assert!(matches!(outside.is_normal_in(&a3), Err(Error::NotSubgroup)));
    }

    #[test]
    fn fingerprints() {
        let c6 = group(&["(1,2,3,4,5,6)"], 6);
        let f = c6.simplicity_fingerprint(1000);
        assert!(!f.perfect);
        assert_eq!(f.exhaustive_simple, Some(false));
        let a5 = group(&["(1,2,3,4,5)", "(1,2,3)"], 5);
        let f = a5.simplicity_fingerprint(1000);
        assert!(f.perfect);
        assert_eq!(f.exhaustive_simple, Some(true));
        let f = a5.simplicity_fingerprint(10);
        assert_eq!(f.exhaustive_simple, None);
        let c5 = group(&["(1,2,3,4,5)"], 5);
        assert_eq!(c5.simplicity_fingerprint(100).exhaustive_simple, Some(true));
    }

    #[test]
    fn double_coset_absorbs_members() {
        let h = group(&["(1,2,3)"], 4);
        let d = h.double_coset(&p("(1,3,2)", 4), 100).unwrap();
        assert_eq!(d.len(), 3);
        let d = h.double_coset(&p("(3,4)", 4), 100).unwrap();
        let inter = h.intersection_small(&h.conjugate(&p("(3,4)", 4)).unwrap(), 100).unwrap();
        assert_eq!(d.len() as u64 * inter.order_u64().unwrap(), 9);
    }

    #[test]
    fn intersections() {
        let h = group(&["(1,2,3,4)", "(1,3)"], 4);
        assert!(h.intersection_small(&h, 100).unwrap().same_group(&h).unwrap());
        let k = group(&["(1,2)(3,4)", "(1,3)(2,4)"], 4);
        assert_eq!(h.intersection_small(&k, 100).unwrap().order_u64(), Some(4));
        let tiny = group(&["(1,2)"], 4);
        assert!(matches!(
            group(&["(1,2,3,4)", "(1,2)"], 4).intersection_small(&tiny, 1),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn core_of_point_stabilizer() {
        let s4 = group(&["(1,2,3,4)", "(1,2)"], 4);
        let stab = s4.point_stabilizer(3).unwrap();
        assert!(stab.core_in(&s4, 100).unwrap().is_trivial());
        let v4 = group(&["(1,2)(3,4)", "(1,3)(2,4)"], 4);
        assert_eq!(v4.core_in(&s4, 100).unwrap().order_u64(), Some(4));
    }
}
