//! End-to-end verification of one family, recorded claim by claim.


use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use super::{
    alt_p_h_checks, build_family, closed_form_s, m23_deep_checks, sigma_cycle_check, support_table_check, Family,
    FamilyBundle, FamilySpec, vertex_budget_for,
};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::graph::{cayley_graph, connection_set, coset_graph, CosetGraph, GroupAction};
use crate::group::DoubleCosetSet;
use crate::symmetry::{
    arc_orbit_size, automorphism_group, conceivable_triple_check, is_regular_action, normalizer_formula_check,
    solvability_transfer_check, solvability_transfer_on_cosets, stabilizer_profile, classify_branch, Branch, Regularity,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// Not evaluated because a budget or limit was exceeded.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Claim {
    pub name: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
    pub status: ClaimStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Observation {
    pub name: String,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timing {
    pub stage: String,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub family: Family,
    pub p: u64,
    pub deep: bool,
    pub config: RunConfig,
    pub claims: Vec<Claim>,
    /// Computed values recorded without an expected counterpart.
    pub observations: Vec<Observation>,
    pub budget_notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<Timing>>,
}

impl VerificationReport {
    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.status == ClaimStatus::Fail)
    }

    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.status == ClaimStatus::Pass)
    }

    pub fn any_skipped(&self) -> bool {
        self.claims.iter().any(|c| c.status == ClaimStatus::Skipped)
    }

    /// 0 when every claim passed, 1 on any failure, 3 when only budget skips remain.
    pub fn exit_code(&self) -> i32 {
        if self.failures().next().is_some() {
            1
        } else if self.any_skipped() {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

struct Recorder {
    claims: Vec<Claim>,
    observations: Vec<Observation>,
    budget_notes: Vec<String>,
    timings: Vec<Timing>,
    clock: Stopwatch,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            claims: Vec::new(),
            observations: Vec::new(),
            budget_notes: Vec::new(),
            timings: Vec::new(),
            clock: Stopwatch::start(),
        }
    }

    fn check(&mut self, name: &str, expected: impl Serialize, computed: impl Serialize) {
        let expected = json!(expected);
        let computed = json!(computed);
        let pass = expected == computed;
        self.claims.push(Claim {
            name: name.to_string(),
            expected,
            computed,
            pass,
            status: if pass { ClaimStatus::Pass } else { ClaimStatus::Fail },
            note: None,
        });
    }

    /// Records `name` as failed with the error text, or as skipped when the
    /// error is a budget overrun.
    fn unavailable(&mut self, name: &str, expected: impl Serialize, err: &Error) {
        let skipped = err.is_budget();
        if skipped {
            let note = format!("{name}: {err}");
            if !self.budget_notes.contains(&note) {
                self.budget_notes.push(note);
            }
        }
        self.claims.push(Claim {
            name: name.to_string(),
            expected: json!(expected),
            computed: Value::Null,
            pass: false,
            status: if skipped { ClaimStatus::Skipped } else { ClaimStatus::Fail },
            note: Some(err.to_string()),
        });
    }

    fn observe(&mut self, name: &str, value: impl Serialize) {
        self.observations.push(Observation {
            name: name.to_string(),
            value: json!(value),
        });
    }

    fn lap(&mut self, stage: &str) {
        let seconds = self.clock.lap();
        self.timings.push(Timing {
            stage: stage.to_string(),
            seconds,
        });
    }
}

/// Stage clock. Browsers have no monotonic clock reachable from `std`, so
/// there every stage reports zero.
#[cfg(not(all(target_arch = "wasm32", target_os = "unknown")))]
struct Stopwatch(std::time::Instant);

#[cfg(not(all(target_arch = "wasm32", target_os = "unknown")))]
impl Stopwatch {
    fn start() -> Self {
        Stopwatch(std::time::Instant::now())
    }

    fn lap(&mut self) -> f64 {
        let now = std::time::Instant::now();
        let seconds = (now - self.0).as_secs_f64();
        self.0 = now;
        seconds
    }
}

#[cfg(all(target_arch = "wasm32", target_os = "unknown"))]
struct Stopwatch;

#[cfg(all(target_arch = "wasm32", target_os = "unknown"))]
impl Stopwatch {
    fn start() -> Self {
        Stopwatch
    }

    fn lap(&mut self) -> f64 {
        0.0
    }
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn big(v: &BigUint) -> Value {
    match v.to_u64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

/// Values the family is expected to produce.
struct Expected {
    t_order: BigUint,
    h_order: u64,
    g_order: BigUint,
    h_meet_ht: u64,
    /// `|Aut|` when the graph is in scope for the automorphism search.
    aut_order: Option<u64>,
}

fn expected_values(spec: &FamilySpec) -> Expected {
    match spec.family {
        Family::Psl2_11 => Expected {
            t_order: BigUint::from(660u32),
            h_order: 11,
            g_order: BigUint::from(60u32),
            h_meet_ht: 1,
            aut_order: Some(1320),
        },
        Family::Psl2_29 => Expected {
            t_order: BigUint::from(12180u32),
            h_order: 203,
            g_order: BigUint::from(60u32),
            h_meet_ht: 7,
            aut_order: Some(24360),
        },
        Family::M23 => Expected {
            t_order: BigUint::from(10_200_960u32),
            h_order: 23,
            g_order: BigUint::from(443_520u32),
            h_meet_ht: 1,
            aut_order: None,
        },
        Family::AltP => {
            let p = spec.p;
            Expected {
                t_order: factorial(p) / 2u32,
                h_order: p,
                g_order: factorial(p - 1) / 2u32,
                h_meet_ht: 1,
                aut_order: (p <= 7).then(|| factorial(p).to_u64().expect("small")),
            }
        }
    }
}

fn order_of(g: &crate::group::PermGroup) -> Value {
    big(&g.order())
}

/// Runs every check for the family. Errors are returned only for invalid
/// specifications; budget overruns are recorded as skipped claims.
pub fn verify_family(spec: FamilySpec, config: &RunConfig) -> Result<VerificationReport> {
    let mut rec = Recorder::new();
    let expected = expected_values(&spec);
    let p = spec.p;
    let bundle = build_family(spec)?;
    let vertex_budget = vertex_budget_for(&spec, config);

    rec.check("overgroup_order", big(&expected.t_order), order_of(&bundle.overgroup));
    rec.check("stabilizer_order", expected.h_order, order_of(&bundle.stabilizer));
    rec.check("regular_subgroup_order", big(&expected.g_order), order_of(&bundle.regular));
    if let Some(z) = bundle.extra("z") {
        rec.observe("order_of_z", z.order_u64());
    }
    rec.lap("groups");

    let d = match group_level(&mut rec, &bundle, &expected, config) {
        Ok(d) => d,
        Err(e) => {
            rec.unavailable("double_coset", json!(null), &e);
            return Ok(finish(spec, config, rec));
        }
    };
    rec.lap("double coset");

    family_specific(&mut rec, &bundle, &d, config)?;
    rec.lap("family checks");

    match coset_graph(&bundle.overgroup, &bundle.stabilizer, &d, vertex_budget, config.enumeration_bound) {
        Ok(cg) => {
            rec.lap("coset graph");
            graph_level(&mut rec, &bundle, &expected, &cg, &d, config)?;
        }
        Err(e) if e.is_budget() => {
            let n = &expected.t_order / expected.h_order;
            let arcs = &n * p;
            for (name, value) in [
                ("vertex_count", big(&n)),
                ("valency", json!(p)),
                ("connected", json!(true)),
                ("bipartite", json!(false)),
                ("regular_subgroup_action", json!("regular")),
                ("overgroup_arc_orbit", big(&arcs)),
            ] {
                rec.unavailable(name, value, &e);
            }
        }
        Err(e) => return Err(e),
    }
    Ok(finish(spec, config, rec))
}

fn finish(spec: FamilySpec, config: &RunConfig, rec: Recorder) -> VerificationReport {
    VerificationReport {
        family: spec.family,
        p: spec.p,
        deep: spec.deep,
        config: config.clone(),
        claims: rec.claims,
        observations: rec.observations,
        budget_notes: rec.budget_notes,
        timings: Some(rec.timings),
    }
}

fn group_level(rec: &mut Recorder, bundle: &FamilyBundle, expected: &Expected, config: &RunConfig) -> Result<DoubleCosetSet> {
    let h = &bundle.stabilizer;
    let ht = h.conjugate(&bundle.t)?;
    let meet = h.intersection_small(&ht, config.enumeration_bound)?;
    rec.check("stabilizer_meet_conjugate_order", expected.h_meet_ht, order_of(&meet));
    let d = h.double_coset(&bundle.t, config.enumeration_bound)?;
    let h_order = expected.h_order;
    rec.check("double_coset_size", h_order * h_order / expected.h_meet_ht, d.len());
    rec.check("double_coset_inverse_closed", true, d.is_inverse_closed());
    let core = h.core_in(&bundle.overgroup, config.enumeration_bound)?;
    rec.check("stabilizer_core_order", 1, order_of(&core));
    Ok(d)
}

fn family_specific(rec: &mut Recorder, bundle: &FamilyBundle, d: &DoubleCosetSet, config: &RunConfig) -> Result<()> {
    let p = bundle.spec.p;
    let s = connection_set(d, &bundle.regular)?;
    rec.check("connection_set_size", p, s.len());
    rec.check("connection_set_avoids_identity", true, s.iter().all(|g| !g.is_identity()));
    let x = bundle.x.clone();
    match bundle.spec.family {
        Family::M23 => {
            let m = m23_deep_checks(config.enumeration_bound)?;
            rec.check("connection_set_matches_printed", true, m.s_matches_printed);
            rec.observe("product_set_cubed_size", m.cube_size);
            rec.check("s1_squared_outside_cube", true, m.s1_squared_outside_cube);
            rec.check("b_order", 11, m.b_order);
            rec.check("b_normalizes_stabilizer", true, m.b_normalizes_h);
            rec.check("b_preserves_double_coset", false, m.b_preserves_double_coset);
            rec.check("s11_order", 5, m.s11_order);
            rec.check("s11_five_cycle", true, m.five_cycle);
        }
        Family::AltP => {
            let mut closed = closed_form_s(p)?;
            closed.sort_unstable();
            rec.check("connection_set_matches_closed_form", true, s == closed);
            let long = s.iter().filter(|g| g.support() as u64 == p - 2).count();
            let short = s.iter().filter(|g| g.support() == 4).count();
            rec.check("connection_set_long_elements", 4, long);
            rec.check("connection_set_short_elements", p - 4, short as u64);
            let h = alt_p_h_checks(p)?;
            rec.check("h_inverts_x", true, h.inverts_x);
            rec.check("t_conjugate_by_h", true, h.t_image);
            rec.check("t_conjugate_by_h_is_translate", true, h.t_image_is_translate);
            rec.check("h_even", p % 4 == 1, h.h_even);
            rec.check("h_preserves_double_coset", true, h.double_coset_invariant);
            let h_elt = bundle.extra("h").expect("alt bundle carries h").clone();
            let cands = normalizer_formula_check(&bundle.stabilizer, d, &[x, h_elt])?;
            rec.check("normalizer_candidates_x_h", json!([[true, true], [true, true]]), cands.iter().map(|c| [c.h_invariant, c.d_invariant]).collect::<Vec<_>>());
            if p >= 11 {
                rec.check("support_table", true, support_table_check(p)?);
                rec.check("sigma_is_cycle", true, sigma_cycle_check(p)?);
            }
        }
        Family::Psl2_11 | Family::Psl2_29 => {
            let cands = normalizer_formula_check(&bundle.stabilizer, d, &[x])?;
            rec.check("x_normalizes_stabilizer_and_double_coset", true, cands[0].h_invariant && cands[0].d_invariant);
        }
    }
    Ok(())
}

fn graph_level(
    rec: &mut Recorder,
    bundle: &FamilyBundle,
    expected: &Expected,
    cg: &CosetGraph,
    d: &DoubleCosetSet,
    config: &RunConfig,
) -> Result<()> {
    let p = bundle.spec.p;
    let graph = &cg.graph;
    let n = graph.vertex_count();
    let preds = graph.predicates();
    rec.check("vertex_count", big(&(&expected.t_order / expected.h_order)), n);
    rec.check("valency", p, preds.valency);
    rec.check("connected", true, preds.connected);
    rec.check("bipartite", false, preds.bipartite);

    let g_action = cg.space.action_of(&bundle.regular)?;
    rec.check("regular_subgroup_action", Regularity::Regular, is_regular_action(&g_action));
    rec.check("overgroup_arc_orbit", n as u64 * p, arc_orbit_size(graph, &cg.action)? as u64);
    rec.check("solvability_transfer_overgroup", true, solvability_transfer_on_cosets(cg)?);
    rec.lap("actions");

    let small = n <= config.aut_vertex_limit;
    if !small {
        return Ok(());
    }

    // vertex 0 is the trivial coset, whose stabilizer in the overgroup is H
    let t_image = cg.action.image_group();
    let tv = t_image.point_stabilizer(0)?;
    match stabilizer_profile(&tv, graph, 0, config.enumeration_bound) {
        Ok(profile) => {
            let k_ell = (profile.k, profile.ell);
            rec.check("overgroup_stabilizer_profile", [p, 1, expected.h_order / p], [profile.p, k_ell.0, k_ell.1]);
            rec.check("overgroup_profile_structure", true, profile.all_checks_pass());
            rec.check(
                "overgroup_profile_conceivable",
                true,
                conceivable_triple_check(p, profile.k, profile.ell)?,
            );
        }
        Err(e) => rec.unavailable("overgroup_stabilizer_profile", [p, 1, expected.h_order / p], &e),
    }
    rec.check(
        "solvability_transfer_overgroup_on_vertices",
        true,
        solvability_transfer_check(graph, &cg.action, 0)?,
    );

    let s = connection_set(d, &bundle.regular)?;
    match cayley_graph(&bundle.regular, &s, config.vertex_budget) {
        Ok(cay) => {
            let same = automorphism_group(&cay.graph, config.aut_vertex_limit)
                .and_then(|a| Ok(a.canonical_form == automorphism_group(graph, config.aut_vertex_limit)?.canonical_form));
            match same {
                Ok(v) => rec.check("cayley_isomorphic_to_coset_graph", true, v),
                Err(e) => rec.unavailable("cayley_isomorphic_to_coset_graph", true, &e),
            }
        }
        Err(e) => rec.unavailable("cayley_isomorphic_to_coset_graph", true, &e),
    }
    rec.lap("cayley cross-check");

    let Some(aut_expected) = expected.aut_order else {
        return Ok(());
    };
    let aut = match automorphism_group(graph, config.aut_vertex_limit) {
        Ok(a) => a,
        Err(e) => {
            rec.unavailable("aut_order", aut_expected, &e);
            return Ok(());
        }
    };
    rec.lap("automorphism group");
    rec.check("aut_order", aut_expected, aut.order.to_u64());
    rec.check("aut_vertex_transitive", true, aut.vertex_transitive);
    rec.check(
        "aut_generators_preserve_edges",
        true,
        aut.generators.iter().all(|g| graph.is_automorphism(g)),
    );
    let (v0, av) = aut.base_stabilizer().expect("nonempty graph");
    let stab_order = aut_expected / n as u64;
    rec.check("aut_stabilizer_order", stab_order, av.order_u64());
    rec.check("aut_stabilizer_solvable", true, av.is_solvable());
    match stabilizer_profile(&av, graph, v0, config.enumeration_bound) {
        Ok(profile) => {
            rec.check("aut_stabilizer_profile", [p, 1, stab_order / p], [profile.p, profile.k, profile.ell]);
            rec.check("aut_profile_structure", true, profile.all_checks_pass());
        }
        Err(e) => rec.unavailable("aut_stabilizer_profile", [p, 1, stab_order / p], &e),
    }
    let aut_action = GroupAction {
        group: aut.group(),
        space_size: n,
        generator_images: aut.generators.clone(),
    };
    rec.check("solvability_transfer_aut", true, solvability_transfer_check(graph, &aut_action, v0)?);

    let regular_hat = g_action.image_group();
    rec.check("regular_subgroup_normal_in_aut", false, regular_hat.is_normal_in(&aut.group())?);
    let class = classify_branch(graph, &g_action, &aut, config.simplicity_budget)?;
    rec.check("branch", Branch::Overgroup, class.branch);
    rec.check("branch_overgroup_order", expected.t_order.to_u64(), class.t_order);
    rec.check("branch_overgroup_arc_transitive", true, class.t_arc_transitive);
    if let Some(fp) = &class.t_fingerprint {
        rec.check("branch_overgroup_perfect", true, fp.perfect);
        rec.observe("branch_overgroup_fingerprint", fp);
    }
    rec.lap("classification");
    Ok(())
}
