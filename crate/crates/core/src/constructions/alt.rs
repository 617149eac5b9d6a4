//! The alternating family: `x = (1..p)`, `t = (1,2)(3,4)` and the reversal `h`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SymGraph;
use crate::group::{is_prime, PermGroup};
use crate::perm::{Parity, Permutation};

fn check_prime(p: u64, least: u64) -> Result<usize> {
    if p < least {
        return Err(Error::invalid(format!("need a prime p >= {least}, got {p}")));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(p as usize)
}

/// `(x, t, h)` where `h` fixes 1 and swaps `a` with `p + 2 - a`.
pub fn alt_generators(p: u64) -> Result<(Permutation, Permutation, Permutation)> {
    let n = check_prime(p, 5)?;
    let x = Permutation::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect())?;
    let t = Permutation::parse_cycles("(1,2)(3,4)", n)?;
    let h = Permutation::from_images((0..n as u32).map(|i| if i == 0 { 0 } else { n as u32 - i }).collect())?;
    Ok((x, t, h))
}

fn cycle_1based(points: &[usize], n: usize) -> Permutation {
    let mut images: Vec<u32> = (0..n as u32).collect();
    for w in 0..points.len() {
        images[points[w] - 1] = (points[(w + 1) % points.len()] - 1) as u32;
    }
    Permutation::from_images(images).expect("distinct points")
}

/// The connection set of the alternating family in closed form, `s_1..s_p`.
pub fn closed_form_s(p: u64) -> Result<Vec<Permutation>> {
    let n = check_prime(p, 5)?;
    let mut s = Vec::with_capacity(n);
    for i in 0..=n - 5 {
        let a = cycle_1based(&[1 + i, 2 + i], n);
        let b = cycle_1based(&[3 + i, 4 + i], n);
        s.push(a.then(&b));
    }
    // (1, p-1, p-3, p-4, ..., 3, 2)
    let mut long_a = vec![1, n - 1];
    long_a.extend((2..=n - 3).rev());
    let s_p2 = cycle_1based(&long_a, n);
    // (1, p-1, p-2, ..., 4, 3)
    let mut long_b = vec![1];
    long_b.extend((3..=n - 1).rev());
    let s_p = cycle_1based(&long_b, n);
    s.push(s_p2.inverse());
    s.push(s_p2);
    s.push(s_p.inverse());
    s.push(s_p);
    Ok(s)
}

/// `x^{-i} t x^i` for `i` in `0..p`.
fn translates(p: u64) -> Result<Vec<Permutation>> {
    let (x, t, _) = alt_generators(p)?;
    Ok((0..p as i64).map(|i| t.conjugate_by(&x.pow(i))).collect())
}

fn expected_support(p: usize, i: usize, j: usize) -> usize {
    let d = i.abs_diff(j);
    match d.min(p - d) {
        1 => 5,
        2 => 4,
        3 => 7,
        _ => 8,
    }
}

/// One entry of the support table of products of translates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SupportCell {
    pub i: usize,
    pub j: usize,
    pub support: usize,
    pub expected: usize,
}

/// Support of `x^{-i} t x^i · x^{-j} t x^j` for all `i ≠ j`, with the value
/// predicted from the circular distance between `i` and `j`.
pub fn support_table(p: u64) -> Result<Vec<SupportCell>> {
    let n = check_prime(p, 11)?;
    let ts = translates(p)?;
    let mut cells = Vec::with_capacity(n * (n - 1));
    for i in 0..n {
        for j in 0..n {
            if i != j {
                cells.push(SupportCell {
                    i,
                    j,
                    support: ts[i].then(&ts[j]).support(),
                    expected: expected_support(n, i, j),
                });
            }
        }
    }
    Ok(cells)
}

pub fn support_table_check(p: u64) -> Result<bool> {
    Ok(support_table(p)?.iter().all(|c| c.support == c.expected))
}

/// Whether the translates, joined when their product has support 5, form
/// a single cycle of length `p`.
pub fn sigma_cycle_check(p: u64) -> Result<bool> {
    let n = check_prime(p, 11)?;
    let ts = translates(p)?;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if ts[i].then(&ts[j]).support() == 5 {
                edges.push((i as u32, j as u32));
            }
        }
    }
    let sigma = SymGraph::from_edges(n, edges)?;
    Ok(sigma.valency() == Some(2) && sigma.is_connected())
}

/// Identities satisfied by the reversal `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AltHChecks {
    /// `x^h = x⁻¹`.
    pub inverts_x: bool,
    /// `t^h = (1,p)(p-1,p-2)`.
    pub t_image: bool,
    /// `t^h = x^{-(p-3)} t x^{p-3}`.
    pub t_image_is_translate: bool,
    pub h_even: bool,
    /// `h` is even exactly when `p ≡ 1 (mod 4)`.
    pub parity_matches: bool,
    /// `(HtH)^h = HtH` as sets.
    pub double_coset_invariant: bool,
}

impl AltHChecks {
    pub fn all_pass(&self) -> bool {
        self.inverts_x && self.t_image && self.t_image_is_translate && self.parity_matches && self.double_coset_invariant
    }
}

pub fn alt_p_h_checks(p: u64) -> Result<AltHChecks> {
    let n = check_prime(p, 5)?;
    let (x, t, h) = alt_generators(p)?;
    let th = t.conjugate_by(&h);
    let expected = cycle_1based(&[1, n], n).then(&cycle_1based(&[n - 1, n - 2], n));
    let translate = t.conjugate_by(&x.pow(p as i64 - 3));
    let h_even = h.parity() == Parity::Even;
    let hgroup = PermGroup::from_generators(vec![x.clone()])?;
    let d = hgroup.double_coset(&t, n * n)?;
    Ok(AltHChecks {
        inverts_x: x.conjugate_by(&h) == x.inverse(),
        t_image: th == expected,
        t_image_is_translate: th == translate,
        h_even,
        parity_matches: h_even == (p % 4 == 1),
        double_coset_invariant: d.is_invariant_under(&h),
    })
}
