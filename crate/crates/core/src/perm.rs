//! Permutations of `{1..n}` stored as image tables.
//!
//! Composition is left to right: `a * b` applies `a` first, then `b`. With
//! that convention conjugation `g^c = c⁻¹ g c` matches exponent notation and
//! a right action `point ↦ point^g`.
//!
//! Points are 0-based in memory and 1-based in every textual form.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Disjoint cycles of length at least two, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub degree: usize,
    pub cycles: Vec<Vec<u32>>,
}

impl CycleDecomposition {
    pub fn to_permutation(&self) -> Result<Permutation> {
        let mut images: Vec<u32> = (0..self.degree as u32).collect();
        let mut seen = vec![false; self.degree];
        for cycle in &self.cycles {
            for (i, &p) in cycle.iter().enumerate() {
                let p = p as usize;
                if p == 0 || p > self.degree {
                    return Err(Error::OutOfRange {
                        point: p,
                        degree: self.degree,
                    });
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(Error::RepeatedPoint { point: p });
                }
                let next = cycle[(i + 1) % cycle.len()];
                images[p - 1] = next - 1;
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub fn support(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds from a 0-based image table, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let v = v as usize;
            if v >= n {
                return Err(Error::OutOfRange {
                    point: v + 1,
                    degree: n,
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotBijection);
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds from a 1-based image list, as used in the record format.
    pub fn from_images_one_based(images: &[u32]) -> Result<Self> {
        let zero = images
            .iter()
            .map(|&v| {
                v.checked_sub(1).ok_or(Error::OutOfRange {
                    point: 0,
                    degree: images.len(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(zero)
    }


    /// Parses cycle notation such as `(1, 2)(3, 4)`. Whitespace is ignored;
    /// the empty string and `()` both denote the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut current: Option<Vec<u32>> = None;
        let mut number: Option<(usize, u64)> = None;
        let mut expect_number = false;

        let finish_number = |number: &mut Option<(usize, u64)>,
                             current: &mut Option<Vec<u32>>|
         -> Result<()> {
            if let Some((column, value)) = number.take() {
                if value == 0 || value > degree as u64 {
                    return Err(Error::OutOfRange {
                        point: value.min(usize::MAX as u64) as usize,
                        degree,
                    });
                }
                match current {
                    Some(c) => c.push(value as u32),
                    None => {
                        return Err(Error::Malformed {
                            column,
                            message: "number outside a cycle".into(),
                        })
                    }
                }
            }
            Ok(())
        };

        for (idx, ch) in text.chars().enumerate() {
            let column = idx + 1;
            match ch {
                '(' => {
                    if current.is_some() {
                        return Err(Error::Malformed {
                            column,
                            message: "nested '('".into(),
                        });
                    }
                    current = Some(Vec::new());
                    expect_number = false;
                }
                ')' => {
                    finish_number(&mut number, &mut current)?;
                    if expect_number {
                        return Err(Error::Malformed {
                            column,
                            message: "dangling ','".into(),
                        });
                    }
                    match current.take() {
                        Some(c) => cycles.push(c),
                        None => {
                            return Err(Error::Malformed {
                                column,
                                message: "unmatched ')'".into(),
                            })
                        }
                    }
                }
                ',' => {
                    if number.is_none() {
                        return Err(Error::Malformed {
                            column,
                            message: "expected a point before ','".into(),
                        });
                    }
                    finish_number(&mut number, &mut current)?;
                    expect_number = true;
                }
                '0'..='9' => {
                    if current.is_none() {
                        return Err(Error::Malformed {
                            column,
                            message: "number outside a cycle".into(),
                        });
                    }
                    let digit = ch as u64 - '0' as u64;
                    number = Some(match number {
                        Some((c, v)) => (c, v.saturating_mul(10).saturating_add(digit)),
                        None => {
                            if !expect_number && current.as_ref().is_some_and(|c| !c.is_empty())
                            {
                                return Err(Error::Malformed {
                                    column,
                                    message: "missing ',' between points".into(),
                                });
                            }
                            (column, digit)
                        }
                    });
                    expect_number = false;
                }
                c if c.is_whitespace() => {
                    if number.is_some() {
                        finish_number(&mut number, &mut current)?;
                    }
                }
                other => {
                    return Err(Error::Malformed {
                        column,
                        message: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
        if current.is_some() {
            return Err(Error::Malformed {
                column: text.chars().count() + 1,
                message: "unterminated cycle".into(),
            });
        }
        let perm = CycleDecomposition {
            degree,
            cycles: cycles.into_iter().filter(|c| c.len() > 1).collect(),
        }
        .to_permutation()?;
        // singleton cycles were dropped above; they may still repeat a point
        check_singletons(text, degree)?;
        Ok(perm)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of a 0-based point.
    #[inline]
    pub fn image(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn images_one_based(&self) -> Vec<u32> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self` then `other`; errors on degree mismatch.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.then(other))
    }

    /// `self` then `other`. Panics if the degrees differ.
    #[inline]
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// `c⁻¹ self c`.
    pub fn conjugate(&self, c: &Permutation) -> Result<Permutation> {
        self.check_degree(c)?;
        Ok(self.conjugate_by(c))
    }

    pub fn conjugate_by(&self, c: &Permutation) -> Permutation {
        // c⁻¹ g c maps c(i) to c(g(i))
        let mut out = vec![0u32; self.degree()];
        for (i, &gi) in self.images.iter().enumerate() {
            out[c.images[i] as usize] = c.images[gi as usize];
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.inverse().then(&other.inverse()).then(self).then(other))
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut result = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        result
    }

    pub fn cycles(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u32 + 1);
                p = self.images[p] as usize;
            }
            cycles.push(cycle);
        }
        CycleDecomposition { degree: n, cycles }
    }

    /// Sorted lengths of the nontrivial cycles.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().cycles.iter().map(Vec::len).collect();
        lens.sort_unstable();
        lens
    }

    /// Least `m ≥ 1` with `self^m = 1`, the lcm of the cycle lengths.
    pub fn order(&self) -> BigUint {
        let mut acc = BigUint::one();
        for len in self.cycle_type() {
            let len = BigUint::from(len);
            let g = num_integer_gcd(&acc, &len);
            acc = acc * len / g;
        }
        acc
    }

    /// Order as a machine integer; saturates on overflow.
    pub fn order_u64(&self) -> u64 {
        u64::try_from(self.order()).unwrap_or(u64::MAX)
    }

    pub fn support(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i as u32 != v)
            .count()
    }

    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &v)| i as u32 != v)
            .map(|(i, _)| i as u32)
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().cycles.iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }
}

fn num_integer_gcd(a: &BigUint, b: &BigUint) -> BigUint {
    let (mut a, mut b) = (a.clone(), b.clone());
    while b != BigUint::ZERO {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn check_singletons(text: &str, degree: usize) -> Result<()> {
    // repeated points across singleton and longer cycles, e.g. "(1,2)(2)"
    let mut seen = vec![false; degree];
    for part in text.split(['(', ')', ',']) {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        if let Ok(p) = part.parse::<usize>() {
            if std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::RepeatedPoint { point: p });
            }
        }
    }
    Ok(())
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Left-to-right product; panics on degree mismatch.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in &cycles.cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// `{degree, images}` with 1-based images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageRecord {
    pub degree: usize,
    pub images: Vec<u32>,
}

impl From<&Permutation> for ImageRecord {
    fn from(p: &Permutation) -> Self {
        ImageRecord {
            degree: p.degree(),
            images: p.images_one_based(),
        }
    }
}

impl TryFrom<ImageRecord> for Permutation {
    type Error = Error;

    fn try_from(rec: ImageRecord) -> Result<Self> {
        if rec.images.len() != rec.degree {
            return Err(Error::DegreeMismatch {
                left: rec.degree,
                right: rec.images.len(),
            });
        }
        Permutation::from_images_one_based(&rec.images)
    }
}

/// Parses `"<degree>:<cycles>"`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (deg, cycles) = s
            .split_once(':')
            .ok_or_else(|| Error::invalid("expected <degree>:<cycles>"))?;
        let degree = deg
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("bad degree {deg:?}")))?;
        Permutation::parse_cycles(cycles, degree)
    }
}
