//! The explicit families: generators, closed forms and combinatorial checks.

pub(crate) mod data;
mod alt;
mod m23;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::graph::{coset_graph, CosetGraph};
use crate::group::{is_prime, PermGroup};
use crate::perm::Permutation;

pub use alt::{
    alt_generators, alt_p_h_checks, closed_form_s, sigma_cycle_check, support_table, support_table_check,
    AltHChecks, SupportCell,
};
pub use m23::{m23_connection_set, m23_deep_checks, product_set_cubed, M23Checks};
pub use verify::{verify_family, Claim, ClaimStatus, Observation, Timing, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Psl2_11,
    Psl2_29,
    M23,
    AltP,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Psl2_11, Family::Psl2_29, Family::M23, Family::AltP];

    pub fn name(self) -> &'static str {
        match self {
            Family::Psl2_11 => "psl2-11",
            Family::Psl2_29 => "psl2-29",
            Family::M23 => "m23",
            Family::AltP => "alt-p",
        }
    }

    /// Valency of the family's graph, when fixed.
    pub fn fixed_prime(self) -> Option<u64> {
        match self {
            Family::Psl2_11 => Some(11),
            Family::Psl2_29 => Some(29),
            Family::M23 => Some(23),
            Family::AltP => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown family {s:?}; expected psl2-11, psl2-29, m23 or alt-p")))
    }
}

/// Which family to build, its prime, and whether expensive checks are wanted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub p: u64,
    pub deep: bool,
}

impl FamilySpec {
    /// `p` is required for `alt-p` and must match the fixed prime otherwise.
    pub fn new(family: Family, p: Option<u64>, deep: bool) -> Result<Self> {
        let p = match (family.fixed_prime(), p) {
            (Some(fixed), None) => fixed,
            (Some(fixed), Some(given)) if given == fixed => fixed,
            (Some(fixed), Some(given)) => {
                return Err(Error::invalid(format!("family {family} has p = {fixed}, not {given}")))
            }
            (None, None) => return Err(Error::invalid("family alt-p needs a prime p")),
            (None, Some(given)) => {
                if given < 5 {
                    return Err(Error::invalid(format!("alt-p needs p >= 5, got {given}")));
                }
                if !is_prime(given) {
                    return Err(Error::NotPrime(given));
                }
                given
            }
        };
        Ok(FamilySpec { family, p, deep })
    }
}

/// The groups of one family: `T = <x, t>`, the vertex stabilizer `H`, and
/// the subgroup `G` expected to act regularly on `[T:H]`.
#[derive(Debug, Clone)]
pub struct FamilyBundle {
    pub spec: FamilySpec,
    pub x: Permutation,
    pub t: Permutation,
    pub overgroup: PermGroup,
    pub stabilizer: PermGroup,
    pub regular: PermGroup,
    /// Further named elements (`y`, `z`, `b`, `h`), in a fixed order.
    pub extras: Vec<(&'static str, Permutation)>,
}

impl FamilyBundle {
    pub fn degree(&self) -> usize {
        self.x.degree()
    }

    pub fn extra(&self, name: &str) -> Option<&Permutation> {
        self.extras.iter().find(|(n, _)| *n == name).map(|(_, g)| g)
    }
}

fn parse(text: &str, degree: usize) -> Permutation {
    Permutation::parse_cycles(text, degree).expect("embedded generator parses")
}

fn group(gens: &[&Permutation]) -> PermGroup {
    PermGroup::from_generators(gens.iter().map(|g| (*g).clone()).collect()).expect("equal degrees")
}

pub fn build_family(spec: FamilySpec) -> Result<FamilyBundle> {
    let bundle = match spec.family {
        Family::Psl2_11 => {
            use data::psl2_11::*;
            let (x, y, t) = (parse(X, DEGREE), parse(Y, DEGREE), parse(T, DEGREE));
            FamilyBundle {
                spec,
                overgroup: group(&[&x, &t]),
                stabilizer: group(&[&x]),
                regular: group(&[&y, &t]),
                extras: vec![("y", y)],
                x,
                t,
            }
        }
        Family::Psl2_29 => {
            use data::psl2_29::*;
            let (x, y, t, z) = (parse(X, DEGREE), parse(Y, DEGREE), parse(T, DEGREE), parse(Z, DEGREE));
            FamilyBundle {
                spec,
                overgroup: group(&[&x, &t]),
                stabilizer: group(&[&x, &z]),
                regular: group(&[&y, &t]),
                extras: vec![("y", y), ("z", z)],
                x,
                t,
            }
        }
        Family::M23 => {
            use data::m23::*;
            let (x, y, t, b) = (parse(X, DEGREE), parse(Y, DEGREE), parse(T, DEGREE), parse(B, DEGREE));
            FamilyBundle {
                spec,
                overgroup: group(&[&x, &t]),
                stabilizer: group(&[&x]),
                regular: group(&[&y, &t]),
                extras: vec![("y", y), ("b", b)],
                x,
                t,
            }
        }
        Family::AltP => {
            let (x, t, h) = alt_generators(spec.p)?;
            let overgroup = group(&[&x, &t]);
            let regular = overgroup.point_stabilizer(spec.p as u32 - 1)?;
            FamilyBundle {
                spec,
                stabilizer: group(&[&x]),
                overgroup,
                regular,
                extras: vec![("h", h)],
                x,
                t,
            }
        }
    };
    Ok(bundle)
}

/// Vertex budget used by `--deep` runs of the alternating family.
pub const DEEP_VERTEX_BUDGET: usize = 2_000_000;

/// The configured vertex budget, raised to [`DEEP_VERTEX_BUDGET`] for deep
/// runs of the alternating family.
pub fn vertex_budget_for(spec: &FamilySpec, config: &RunConfig) -> usize {
    if spec.deep && spec.family == Family::AltP {
        config.vertex_budget.max(DEEP_VERTEX_BUDGET)
    } else {
        config.vertex_budget
    }
}

/// `Cos(T, H, HtH)` for the family, with `T` acting on the cosets.
pub fn family_graph(bundle: &FamilyBundle, config: &RunConfig) -> Result<CosetGraph> {
    let d = bundle.stabilizer.double_coset(&bundle.t, config.enumeration_bound)?;
    coset_graph(
        &bundle.overgroup,
        &bundle.stabilizer,
        &d,
        vertex_budget_for(&bundle.spec, config),
        config.enumeration_bound,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(g: &PermGroup) -> u64 {
        g.order_u64().unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(FamilySpec::new(Family::Psl2_11, None, false).is_ok());
        assert!(FamilySpec::new(Family::Psl2_11, Some(11), false).is_ok());
        assert!(FamilySpec::new(Family::Psl2_11, Some(13), false).is_err());
        assert!(FamilySpec::new(Family::AltP, None, false).is_err());
        assert!(FamilySpec::new(Family::AltP, Some(3), false).is_err());
        assert!(matches!(FamilySpec::new(Family::AltP, Some(9), false), Err(Error::NotPrime(9))));
        assert_eq!("m23".parse::<Family>().unwrap(), Family::M23);
        assert!("m24".parse::<Family>().is_err());
    }

    // Cycle types of the embedded generators, from their printed shapes.
    #[test]
    fn transcription_cycle_types() {
        use data::*;
        let ct = |s: &str, n: usize| parse(s, n).cycle_type();
        assert_eq!(ct(psl2_11::X, 11), vec![11]);
        assert_eq!(ct(psl2_11::Y, 11), vec![3, 3, 3]);
        assert_eq!(ct(psl2_11::T, 11), vec![2; 4]);
        assert_eq!(ct(psl2_29::X, 30), vec![29]);
        assert_eq!(ct(psl2_29::Y, 30), vec![3; 10]);
        assert_eq!(ct(psl2_29::T, 30), vec![2; 14]);
        assert_eq!(ct(psl2_29::Z, 30), vec![7; 4]);
        assert_eq!(ct(m23::X, 23), vec![23]);
        assert_eq!(ct(m23::Y, 23), vec![11, 11]);
        assert_eq!(ct(m23::T, 23), vec![2; 8]);
        assert_eq!(ct(m23::B, 23), vec![11, 11]);
        for s in &m23::S[16..] {
            assert_eq!(ct(s, 23), vec![2; 8]);
        }
        assert_eq!(parse(m23::S[10], 23).order_u64(), 5);
    }

    #[test]
    fn small_family_orders() {
        let b = build_family(FamilySpec::new(Family::Psl2_11, None, false).unwrap()).unwrap();
        assert_eq!(b.degree(), 11);
        assert_eq!((order(&b.overgroup), order(&b.stabilizer), order(&b.regular)), (660, 11, 60));
        let b = build_family(FamilySpec::new(Family::Psl2_29, None, false).unwrap()).unwrap();
        assert_eq!(b.degree(), 30);
        assert_eq!((order(&b.overgroup), order(&b.stabilizer), order(&b.regular)), (12180, 203, 60));
        assert_eq!(b.extra("z").unwrap().order_u64(), 7);
        let b = build_family(FamilySpec::new(Family::AltP, Some(7), false).unwrap()).unwrap();
        assert_eq!((order(&b.overgroup), order(&b.stabilizer), order(&b.regular)), (2520, 7, 360));
    }
}
