//! Commutative polynomials under a (weighted) graded reverse-lexicographic order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Variable names and positive weights. The monomial order is fixed:
/// weighted degree first, ties broken reverse-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl PolyRing {
    /// Ring with all variables of weight 1.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let weights = vec![1; names.len()];
        Self::weighted(names.into_iter().zip(weights))
    }

    pub fn weighted<S: Into<String>>(vars: impl IntoIterator<Item = (S, u32)>) -> Result<Arc<Self>> {
        let mut names = Vec::new();
        let mut weights = Vec::new();
        for (n, w) in vars {
            let n = n.into();
            if w == 0 {
                return Err(Error::InvalidDegree { name: n, degree: 0 });
            }
            if names.contains(&n) {
                return Err(Error::DuplicateGenerator(n));
            }
            names.push(n);
            weights.push(w);
        }
        Ok(Arc::new(PolyRing { names, weights }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub(crate) fn mono(&self, exps: Vec<u32>) -> Mono {
        let deg = exps.iter().zip(&self.weights).map(|(e, w)| e * w).sum();
        Mono { deg, exps }
    }

    /// All monomials of weighted degree `d`.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Mono> {
        fn rec(r: &PolyRing, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Mono>) {
            if i == r.nvars() {
                if left == 0 {
                    out.push(r.mono(cur.clone()));
                }
                return;
            }
            let w = r.weights[i];
            for e in 0..=left / w {
                cur[i] = e;
                rec(r, i + 1, left - e * w, cur, out);
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        let mut cur = vec![0; self.nvars()];
        rec(self, 0, d, &mut cur, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Exponent vector with its cached weighted degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono {
    deg: u32,
    exps: Vec<u32>,
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| {
            for i in (0..self.exps.len()).rev() {
                if self.exps[i] != other.exps[i] {
                    return other.exps[i].cmp(&self.exps[i]);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mono {
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono {
            deg: self.deg + other.deg,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Mono) -> Mono {
        Mono {
            deg: other.deg - self.deg,
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn lcm(&self, other: &Mono, ring: &PolyRing) -> Mono {
        ring.mono(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Mono) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    pub fn render(&self, ring: &PolyRing) -> String {
        if self.is_one() {
            return "1".into();
        }
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    ring.name(i).to_string()
                } else {
                    format!("{}^{}", ring.name(i), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A polynomial with nonzero coefficients only.
#[derive(Debug, Clone)]
pub struct Poly<F> {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Mono, F>,
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Poly<F> {}

impl<F: Field> Poly<F> {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: F) -> Self {
        Self::monomial(ring, vec![0; ring.nvars()], c)
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, F::one())
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        let mut e = vec![0; ring.nvars()];
        e[i] = 1;
        Self::monomial(ring, e, F::one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, exps: Vec<u32>, c: F) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(ring.mono(exps), c);
        p
    }

    pub fn from_terms(ring: &Arc<PolyRing>, terms: impl IntoIterator<Item = (Vec<u32>, F)>) -> Self {
        let mut p = Self::zero(ring);
        for (e, c) in terms {
            p.add_term(ring.mono(e), c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &F)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exps: &[u32]) -> F {
        self.terms.get(&self.ring.mono(exps.to_vec())).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> Option<(&Mono, &F)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, m: Mono, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.clone() * c.clone())).collect(),
        }
    }

    /// Multiplies by `c * m`.
    pub fn mul_term(&self, m: &Mono, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone() * c.clone())).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut out = Self::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Weighted degree if homogeneous; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Mono::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = F::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exps[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            exps[var] -= 1;
            out.add_term(self.ring.mono(exps), c.clone() * F::from_int(e as i64));
        }
        out
    }

    /// Substitutes `images[i]` for variable `i`; images live in `target`.
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Poly<F>]) -> Result<Poly<F>> {
        if images.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch { expected: self.ring.nvars(), found: images.len() });
        }
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    t = t.try_mul(&images[i].pow(e))?;
                }
            }
            out = out.try_add(&t)?;
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[F]) -> F {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                for _ in 0..e {
                    t = t * point[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Coefficient vector against a list of monomials; fails if the
    /// polynomial has a term outside the list.
    pub fn coordinates(&self, basis: &[Mono]) -> Option<Vec<F>> {
        let mut out = vec![F::zero(); basis.len()];
        for (m, c) in &self.terms {
            let i = basis.iter().position(|b| b == m)?;
            out[i] = c.clone();
        }
        Some(out)
    }

    pub fn from_coordinates(ring: &Arc<PolyRing>, basis: &[Mono], coords: &[F]) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in basis.iter().zip(coords) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_neg();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.render(&self.ring))?;
            } else {
                write!(f, "{abs}*{}", m.render(&self.ring))?;
            }
        }
        Ok(())
    }
}

impl<'a, F: Field> std::ops::Add<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &'a Poly<F>) -> Poly<F> {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl<'a, F: Field> std::ops::Sub<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &'a Poly<F>) -> Poly<F> {
        self.try_add(&-rhs).expect("ring mismatch")
    }
}

impl<'a, F: Field> std::ops::Mul<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &'a Poly<F>) -> Poly<F> {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl<F: Field> std::ops::Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        self.scale(&-F::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use crate::RationalPoly as P;

    #[test]
    fn grevlex_order() {
        let r = PolyRing::new(["x", "y", "z"]).unwrap();
        let ms: Vec<String> = r.monomials_of_degree(2).iter().map(|m| m.render(&r)).collect();
        assert_eq!(ms, ["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"]);
    }

    #[test]
    fn arithmetic_and_display() {
        let r = PolyRing::new(["x1", "x2"]).unwrap();
        let x = P::var(&r, 0);
        let y = P::var(&r, 1);
        let p = &(&x * &x) - &(&y * &y);
        assert_eq!(p.to_string(), "x1^2 - x2^2");
        assert_eq!(p.homogeneous_degree(), Some(2));
        assert_eq!(p.derivative(1).to_string(), "-2*x2");
        let s = p.substitute(&r, &[y.clone(), x.clone()]).unwrap();
        assert_eq!(s.to_string(), "-x1^2 + x2^2");
        assert_eq!(p.evaluate(&[q(3), q(1)]), q(8));
        assert!(!(&p + &P::one(&r)).is_homogeneous());
    }
}
