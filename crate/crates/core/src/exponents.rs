//! Exponent pairs of elliptic minimal models: the strong arithmetic
//! condition, the numeric constraints and enumeration by formal dimension.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::sullivan::SullivanModel;

/// Half-degrees `a` of even generators and `(degree + 1) / 2` of odd ones,
/// both sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentPair {
    a: Vec<u32>,
    b: Vec<u32>,
}

impl ExponentPair {
    pub fn new(mut a: Vec<u32>, mut b: Vec<u32>) -> Result<Self> {
        if a.contains(&0) {
            return Err(Error::Constraint("even exponents must be positive".into()));
        }
        if b.iter().any(|&v| v < 2) {
            return Err(Error::Constraint("odd exponents must be at least 2".into()));
        }
        a.sort_unstable();
        b.sort_unstable();
        Ok(ExponentPair { a, b })
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn b(&self) -> &[u32] {
        &self.b
    }

    pub fn q(&self) -> usize {
        self.a.len()
    }

    pub fn r(&self) -> usize {
        self.b.len()
    }

    /// Exponents of the tensor product of two models.
    pub fn concat(&self, other: &Self) -> Self {
        let mut a = self.a.clone();
        a.extend(&other.a);
        let mut b = self.b.clone();
        b.extend(&other.b);
        ExponentPair::new(a, b).expect("inputs already valid")
    }
}

impl Ord for ExponentPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.q().cmp(&other.q()).then_with(|| self.a.cmp(&other.a)).then_with(|| self.b.cmp(&other.b))
    }
}

impl PartialOrd for ExponentPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "a=({}) b=({})", join(&self.a), join(&self.b))
    }
}

/// `n = 2(Σ b_j − Σ a_i) − (r − q)`.
pub fn formal_dimension_from_exponents(e: &ExponentPair) -> i64 {
    let sa: i64 = e.a.iter().map(|&v| v as i64).sum();
    let sb: i64 = e.b.iter().map(|&v| v as i64).sum();
    2 * (sb - sa) - (e.r() as i64 - e.q() as i64)
}

/// Whether `target` is a nonnegative combination of `parts` with total
/// multiplicity at least 2.
fn representable(parts: &[u32], target: u32, memo: &mut HashMap<(Vec<u32>, u32), bool>) -> bool {
    let key = (parts.to_vec(), target);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // reach[v] = largest multiplicity (capped at 2) of a combination summing to v
    let t = target as usize;
    let mut reach: Vec<Option<u8>> = vec![None; t + 1];
    reach[0] = Some(0);
    for v in 1..=t {
        for &p in parts {
            let p = p as usize;
            if p <= v {
                if let Some(c) = reach[v - p] {
                    let c = (c + 1).min(2);
                    reach[v] = Some(reach[v].map_or(c, |old| old.max(c)));
                }
            }
        }
    }
    let ok = reach[t] == Some(2);
    memo.insert(key, ok);
    ok
}

/// The strong arithmetic condition: every set of s even exponents admits s
/// distinct odd exponents, each a combination of the set with total
/// multiplicity at least 2.
pub fn check_sac(e: &ExponentPair) -> bool {
    let q = e.q();
    let mut memo = HashMap::new();
    for mask in 1u32..(1 << q) {
        let parts: Vec<u32> = (0..q).filter(|&i| mask & (1 << i) != 0).map(|i| e.a[i]).collect();
        let hits = e.b.iter().filter(|&&b| representable(&parts, b, &mut memo)).count();
        if hits < parts.len() {
            return false;
        }
    }
    true
}

/// Constraints (a)–(d) for formal dimension `n`.
pub fn check_constraints(e: &ExponentPair, n: u32) -> bool {
    let n = n as i64;
    let even: i64 = e.a.iter().map(|&v| 2 * v as i64).sum();
    let odd: i64 = e.b.iter().map(|&v| 2 * v as i64 - 1).sum();
    e.q() <= e.r() && even <= n && odd < 2 * n && formal_dimension_from_exponents(e) == n
}

/// Nondecreasing sequences with parts in `min..` and `weight(part)` summing
/// to at most `budget`.
fn multisets(min: u32, budget: u32, weight: fn(u32) -> u32) -> Vec<Vec<u32>> {
    fn rec(start: u32, left: u32, weight: fn(u32) -> u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        let mut p = start;
        while weight(p) <= left {
            cur.push(p);
            rec(p, left - weight(p), weight, cur, out);
            cur.pop();
            p += 1;
        }
    }
    let mut out = Vec::new();
    rec(min, budget, weight, &mut Vec::new(), &mut out);
    out
}

pub const MAX_ENUMERATION_DIMENSION: u32 = 12;

/// All exponent pairs of formal dimension `n` satisfying SAC and (a)–(d),
/// in canonical order.
pub fn enumerate_exponents(n: u32) -> Result<Vec<ExponentPair>> {
    if !(1..=MAX_ENUMERATION_DIMENSION).contains(&n) {
        return Err(Error::OutOfRange(format!("dimension {n}")));
    }
    let evens = multisets(1, n, |a| 2 * a);
    let odds = multisets(2, 2 * n - 1, |b| 2 * b - 1);
    let mut out = Vec::new();
    for a in &evens {
        for b in &odds {
            let e = ExponentPair { a: a.clone(), b: b.clone() };
            if check_constraints(&e, n) && check_sac(&e) {
                out.push(e);
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn exponents_of_model<F: Field>(m: &SullivanModel<F>) -> ExponentPair {
    let t = m.table();
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (_, d) in t.iter() {
        if d % 2 == 0 {
            a.push(d / 2);
        } else {
            b.push(d.div_ceil(2));
        }
    }
    a.sort_unstable();
    b.sort_unstable();
    ExponentPair { a, b }
}
