//! Independent oracles and seeded instance generators shared by the
//! integration suites and the acceptance runner. Nothing here calls into the
//! library's algorithms except to obtain the value under test.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;
use pgv_core::group::DoubleCosetSet;
use pgv_core::symmetry::{automorphism_group, canonical_form, frattini_holds};
use pgv_core::{PermGroup, Permutation, SymGraph};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn invert(a: &[u32]) -> Vec<u32> {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u32;
    }
    out
}

/// Every element of `<gens>` as an image table, by closure under right
/// multiplication.
pub fn closure(gens: &[Permutation], degree: usize) -> HashSet<Vec<u32>> {
    let gens: Vec<Vec<u32>> = gens.iter().map(|g| g.images().to_vec()).collect();
    let identity: Vec<u32> = (0..degree as u32).collect();
    let mut seen = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = compose(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn perm(images: Vec<u32>) -> Permutation {
    Permutation::from_images(images).expect("oracle builds bijections")
}

/// Uniform permutation of a random subset of the points, so that generated
/// groups are often intransitive and small.
pub fn sparse_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<u32> = (0..n as u32).collect();
    let moved: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
    let mut targets = moved.clone();
    targets.shuffle(rng);
    for (&from, &to) in moved.iter().zip(&targets) {
        images[from] = to as u32;
    }
    perm(images)
}

pub fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<u32> = (0..n as u32).collect();
    images.shuffle(rng);
    perm(images)
}

pub fn random_group(rng: &mut ChaCha8Rng, max_degree: usize) -> PermGroup {
    let n = rng.gen_range(2..=max_degree);
    let count = rng.gen_range(1..=3);
    let gens = (0..count).map(|_| sparse_perm(rng, n)).collect();
    PermGroup::from_generators(gens).expect("equal degrees")
}

/// `|G| = |v^G| |G_v|` for every point, with both sides counted from the
/// element list and compared to the library's orbit, stabilizer and order.
pub fn check_orbit_stabilizer(g: &PermGroup) -> Check {
    let n = g.degree();
    let elements = closure(g.generators(), n);
    let order = BigUint::from(elements.len());
    if g.order() != order {
        return Err(format!("order {} but closure has {}", g.order(), order));
    }
    for v in 0..n as u32 {
        let orbit: HashSet<u32> = elements.iter().map(|x| x[v as usize]).collect();
        let fixing = elements.iter().filter(|x| x[v as usize] == v).count();
        if orbit.len() * fixing != elements.len() {
            return Err(format!("point {v}: {} * {fixing} != {}", orbit.len(), elements.len()));
        }
        let lib_orbit: HashSet<u32> = g.orbit(v).map_err(|e| e.to_string())?.into_iter().collect();
        if lib_orbit != orbit {
            return Err(format!("point {v}: orbit {lib_orbit:?} vs {orbit:?}"));
        }
        let stab = g.point_stabilizer(v).map_err(|e| e.to_string())?;
        if stab.order() != BigUint::from(fixing) {
            return Err(format!("point {v}: stabilizer order {} vs {fixing}", stab.order()));
        }
    }
    Ok(())
}

/// `|HtH| = |H|² / |H ∩ H^t|`, each side counted by brute force.
pub fn check_double_coset_law(h: &PermGroup, t: &Permutation, bound: usize) -> Check {
    let n = h.degree();
    let hs = closure(h.generators(), n);
    let t_img = t.images().to_vec();
    let t_inv = invert(&t_img);
    let mut htk = HashSet::new();
    for a in &hs {
        let at = compose(a, &t_img);
        for b in &hs {
            htk.insert(compose(&at, b));
        }
    }
    let conj: HashSet<Vec<u32>> = hs.iter().map(|a| compose(&compose(&t_inv, a), &t_img)).collect();
    let meet = hs.intersection(&conj).count();
    if htk.len() * meet != hs.len() * hs.len() {
        return Err(format!("|HtH| = {}, |H| = {}, |H ∩ H^t| = {meet}", htk.len(), hs.len()));
    }
    let d: DoubleCosetSet = h.double_coset(t, bound).map_err(|e| e.to_string())?;
    if d.len() != htk.len() {
        return Err(format!("library |HtH| = {} vs {}", d.len(), htk.len()));
    }
    if d.elements().iter().any(|x| !htk.contains(x.images())) {
        return Err("library double coset has a stray element".into());
    }
    let ht = h.conjugate(t).map_err(|e| e.to_string())?;
    let lib_meet = h.intersection_small(&ht, bound).map_err(|e| e.to_string())?;
    if lib_meet.order() != BigUint::from(meet) {
        return Err(format!("library |H ∩ H^t| = {} vs {meet}", lib_meet.order()));
    }
    Ok(())
}

/// A subgroup with at most `max_order` elements, drawn until one fits.
pub fn small_subgroup(rng: &mut ChaCha8Rng, n: usize, max_order: usize) -> PermGroup {
    loop {
        let count = rng.gen_range(1..=2);
        let gens: Vec<Permutation> = (0..count).map(|_| sparse_perm(rng, n)).collect();
        if closure(&gens, n).len() <= max_order {
            return PermGroup::from_generators(gens).expect("equal degrees");
        }
    }
}

/// `|Aut(Γ)|` by backtracking over vertex images, extending a partial map
/// only while it preserves adjacency and non-adjacency.
pub fn brute_force_aut_order(graph: &SymGraph) -> u64 {
    fn extend(graph: &SymGraph, map: &mut Vec<u32>, used: &mut [bool]) -> u64 {
        let v = map.len();
        let n = graph.vertex_count();
        if v == n {
            return 1;
        }
        let mut count = 0;
        for w in 0..n as u32 {
            if used[w as usize] || graph.degree(w) != graph.degree(v as u32) {
                continue;
            }
            let ok = (0..v).all(|u| graph.has_edge(u as u32, v as u32) == graph.has_edge(map[u], w));
            if ok {
                used[w as usize] = true;
                map.push(w);
                count += extend(graph, map, used);
                map.pop();
                used[w as usize] = false;
            }
        }
        count
    }
    let mut used = vec![false; graph.vertex_count()];
    extend(graph, &mut Vec::new(), &mut used)
}

pub fn check_aut_against_oracle(graph: &SymGraph) -> Check {
    let expected = brute_force_aut_order(graph);
    let aut = automorphism_group(graph, 10_000).map_err(|e| e.to_string())?;
    if aut.order != BigUint::from(expected) {
        return Err(format!("|Aut| = {} but brute force gives {expected}", aut.order));
    }
    if let Some(g) = aut.generators.iter().find(|g| !graph.is_automorphism(g)) {
        return Err(format!("generator {g} is not an automorphism"));
    }
    if aut.group().order() != aut.order {
        return Err(format!("generators give {} not {}", aut.group().order(), aut.order));
    }
    Ok(())
}

/// Graphs on at most nine vertices: named families plus seeded random ones.
pub fn small_graph_corpus() -> Vec<(String, SymGraph)> {
    let mut corpus: Vec<(String, SymGraph)> = Vec::new();
    let mut add = |name: String, n: usize, edges: Vec<(u32, u32)>| {
        corpus.push((name, SymGraph::from_edges(n, edges).expect("corpus graph is valid")));
    };
    for n in 1..=9usize {
        add(format!("empty{n}"), n, vec![]);
        add(format!("path{n}"), n, (1..n as u32).map(|i| (i - 1, i)).collect());
        add(format!("star{n}"), n, (1..n as u32).map(|i| (0, i)).collect());
        let complete = (0..n as u32).flat_map(|i| (i + 1..n as u32).map(move |j| (i, j))).collect();
        add(format!("complete{n}"), n, complete);
        if n >= 3 {
            add(format!("cycle{n}"), n, (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect());
        }
    }
    for (a, b) in [(1, 1), (2, 2), (2, 3), (3, 3), (4, 4), (3, 5), (2, 7)] {
        let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
        add(format!("complete_bipartite{a}_{b}"), (a + b) as usize, edges);
    }
    let cube = (0..8u32).flat_map(|v| (0..3).map(move |k| (v, v ^ (1 << k)))).filter(|(u, v)| u < v).collect();
    add("cube".into(), 8, cube);
    // two disjoint triangles, the 3-prism, K4 with a pendant, the 3x3 rook graph
    add("two_triangles".into(), 6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
    add("prism3".into(), 6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]);
    add("k4_pendant".into(), 5, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]);
    let rook = (0..9u32)
        .flat_map(|u| (u + 1..9).map(move |v| (u, v)))
        .filter(|(u, v)| u / 3 == v / 3 || u % 3 == v % 3)
        .collect();
    add("rook3x3".into(), 9, rook);
    let wagner = (0..8u32).flat_map(|i| [(i, (i + 1) % 8), (i, (i + 4) % 8)]).filter(|(u, v)| u < v).collect();
    add("wagner".into(), 8, wagner);

    let mut r = rng(0x5eed);
    for i in 0..40 {
        let n = r.gen_range(2..=9);
        let density = r.gen_range(0.15..0.85);
        let edges = (0..n as u32)
            .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
            .filter(|_| r.gen_bool(density))
            .collect::<Vec<_>>();
        add(format!("random{i}_n{n}"), n, edges);
    }
    corpus
}

/// Canonical form of `graph` equals that of a random relabeling of it.
pub fn check_canonical_invariance(graph: &SymGraph, rng: &mut ChaCha8Rng) -> Check {
    let g = random_perm(rng, graph.vertex_count());
    let relabeled = graph.relabel(&g).map_err(|e| e.to_string())?;
    let a = canonical_form(graph, 10_000).map_err(|e| e.to_string())?;
    let b = canonical_form(&relabeled, 10_000).map_err(|e| e.to_string())?;
    if a != b {
        return Err(format!("canonical forms differ on {} vertices", graph.vertex_count()));
    }
    Ok(())
}

/// Random test graphs: sparse random graphs, random regular-ish circulants
/// and hypercube-like products, all with at most `max_n` vertices.
pub fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> SymGraph {
    let n = rng.gen_range(1..=max_n);
    match rng.gen_range(0..3) {
        0 => {
            let m = rng.gen_range(0..=2 * n);
            let edges: Vec<(u32, u32)> = (0..m)
                .filter_map(|_| {
                    let (u, v) = (rng.gen_range(0..n as u32), rng.gen_range(0..n as u32));
                    (u != v).then_some((u, v))
                })
                .collect();
            SymGraph::from_edges(n, edges).unwrap()
        }
        1 => {
            // circulant: highly symmetric, stresses the search
            let n = n.max(3);
            let jumps: Vec<u32> = (1..=n as u32 / 2).filter(|_| rng.gen_bool(0.3)).collect();
            let edges: Vec<(u32, u32)> = (0..n as u32)
                .flat_map(|i| jumps.iter().map(move |&j| (i, (i + j) % n as u32)))
                .filter(|(u, v)| u != v)
                .collect();
            SymGraph::from_edges(n, edges).unwrap()
        }
        _ => {
            let d = rng.gen_range(1..=(max_n as f64).log2().floor() as u32);
            SymGraph::hypercube(d)
        }
    }
}

/// Frattini: `H` transitive on `v^G` iff `|H G_v| = |G|`, both sides by
/// brute force, and the library agrees.
pub fn check_frattini(g: &PermGroup, h: &PermGroup, v: u32) -> Check {
    let n = g.degree();
    let gs = closure(g.generators(), n);
    let hs = closure(h.generators(), n);
    let g_orbit: HashSet<u32> = gs.iter().map(|x| x[v as usize]).collect();
    let h_orbit: HashSet<u32> = hs.iter().map(|x| x[v as usize]).collect();
    let gv: Vec<&Vec<u32>> = gs.iter().filter(|x| x[v as usize] == v).collect();
    let product: HashSet<Vec<u32>> = hs.iter().flat_map(|a| gv.iter().map(move |b| compose(a, b))).collect();
    let transitive = h_orbit == g_orbit;
    let full = product.len() == gs.len();
    if transitive != full {
        return Err(format!("oracle: transitive {transitive}, |HG_v| = |G| {full}"));
    }
    if !frattini_holds(g, h, v, 1_000_000).map_err(|e| e.to_string())? {
        return Err("library reports the equivalence failing".into());
    }
    Ok(())
}

/// A transitive group of degree `n` and a subgroup generated by random
/// words in its generators. Returns whether the subgroup is transitive.
pub fn frattini_instance(rng: &mut ChaCha8Rng) -> (PermGroup, PermGroup) {
    let n = rng.gen_range(3..=7);
    let cycle = perm((0..n as u32).map(|i| (i + 1) % n as u32).collect());
    let mut gens = vec![cycle];
    if rng.gen_bool(0.7) {
        gens.push(sparse_perm(rng, n));
    }
    let g = PermGroup::from_generators(gens.clone()).unwrap();
    let word = |rng: &mut ChaCha8Rng| {
        let len = rng.gen_range(1..=6);
        (0..len).fold(Permutation::identity(n), |acc, _| acc.then(gens.choose(rng).unwrap()))
    };
    let count = rng.gen_range(1..=2);
    let sub_gens = (0..count).map(|_| word(rng)).collect();
    (g, PermGroup::from_generators(sub_gens).unwrap())
}

/// The semiregular quotients used to test valency preservation:
/// `C_{2m}` by its half-turn and `Q_d` by the antipodal map, with the
/// expected quotient valency.
pub fn semiregular_examples() -> Vec<(String, SymGraph, PermGroup, usize)> {
    let mut out = Vec::new();
    for m in 3..=12u32 {
        let n = 2 * m;
        let half_turn = perm((0..n).map(|i| (i + m) % n).collect());
        let group = PermGroup::from_generators(vec![half_turn]).unwrap();
        out.push((format!("C{n}/Z2"), SymGraph::cycle(n as usize), group, 2));
    }
    for d in 3..=8u32 {
        let mask = (1u32 << d) - 1;
        let antipodal = perm((0..1u32 << d).map(|v| v ^ mask).collect());
        let group = PermGroup::from_generators(vec![antipodal]).unwrap();
        out.push((format!("Q{d}/antipodal"), SymGraph::hypercube(d), group, d as usize));
    }
    out
}

pub fn check_quotient_valency(graph: &SymGraph, group: &PermGroup, expected: usize) -> Check {
    let q = graph.quotient(&group.orbits()).map_err(|e| e.to_string())?;
    if q.discarded_loops {
        return Err("an edge lies inside a block".into());
    }
    // each vertex meets `expected` distinct other blocks
    let blocks = group.orbits();
    let mut block_of = vec![0usize; graph.vertex_count()];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            block_of[v as usize] = i;
        }
    }
    for v in 0..graph.vertex_count() as u32 {
        let nbrs: HashSet<usize> = graph.neighbors(v).iter().map(|&w| block_of[w as usize]).collect();
        if nbrs.len() != expected || nbrs.contains(&block_of[v as usize]) {
            return Err(format!("vertex {v} meets {} other blocks", nbrs.len()));
        }
    }
    match q.graph.valency() {
        Some(k) if k == expected && graph.valency() == Some(expected) => Ok(()),
        other => Err(format!("quotient valency {other:?}, expected {expected}")),
    }
}
