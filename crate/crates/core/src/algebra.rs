//! The free graded-commutative algebra ΛV on a finite generator table.
//!
//! Even generators are polynomial variables, odd generators exterior ones.
//! A [`Monomial`] stores one exponent per generator (odd exponents are 0 or 1)
//! and always denotes the ordered product "even part, then odd factors in
//! increasing index order". Multiplication tracks the Koszul sign produced by
//! merging the odd factors back into increasing order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Named generators with positive degrees, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorTable {
    names: Vec<String>,
    degrees: Vec<u32>,
}

impl GeneratorTable {
    pub fn new<I, S>(entries: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = (S, u32)>,
        S: Into<String>,
    {
        let mut names = Vec::new();
        let mut degrees = Vec::new();
        let mut seen = HashSet::new();
        for (name, degree) in entries {
            let name = name.into();
            if degree == 0 {
                return Err(Error::InvalidDegree { name, degree });
            }
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateGenerator(name));
            }
            names.push(name);
            degrees.push(degree);
        }
        Ok(Arc::new(GeneratorTable { names, degrees }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.degrees[i] % 2 == 1
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.names.iter().map(String::as_str).zip(self.degrees.iter().copied())
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.is_odd(i)).collect()
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_odd(i)).collect()
    }
}

pub(crate) fn same_table(a: &Arc<GeneratorTable>, b: &Arc<GeneratorTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Exponent vector over a generator table. Odd entries are 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Number of generator factors counted with multiplicity.
    pub fn word_length(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn degree(&self, table: &GeneratorTable) -> u32 {
        self.0.iter().enumerate().map(|(i, &e)| e * table.degree(i)).sum()
    }

    pub fn odd_factors(&self, table: &GeneratorTable) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| table.is_odd(i) && self.0[i] == 1).collect()
    }

    fn even_degree(&self, table: &GeneratorTable) -> u32 {
        self.0
            .iter()
            .enumerate()
            .filter(|&(i, _)| !table.is_odd(i))
            .map(|(i, &e)| e * table.degree(i))
            .sum()
    }

    /// The canonical presentation order: graded reverse-lexicographic
    /// (descending) on the even part, then lexicographic on odd factor sets.
    pub fn canonical_cmp(&self, other: &Self, table: &GeneratorTable) -> Ordering {
        let da = self.even_degree(table);
        let db = other.even_degree(table);
        if da != db {
            return db.cmp(&da);
        }
        for i in (0..self.0.len()).rev() {
            if table.is_odd(i) {
                continue;
            }
            if self.0[i] != other.0[i] {
                // smaller exponent in the last differing variable is larger in grevlex
                return self.0[i].cmp(&other.0[i]);
            }
        }
        self.odd_factors(table).cmp(&other.odd_factors(table))
    }

    /// Product with Koszul sign; `None` if an odd factor repeats.
    pub fn mul(&self, other: &Self, table: &GeneratorTable) -> Option<(Monomial, bool)> {
        let mut exps = Vec::with_capacity(self.0.len());
        for i in 0..self.0.len() {
            let e = self.0[i] + other.0[i];
            if table.is_odd(i) && e > 1 {
                return None;
            }
            exps.push(e);
        }
        // inversions between the odd factors of self and other
        let a = self.odd_factors(table);
        let b = other.odd_factors(table);
        let mut inversions = 0usize;
        let mut j = 0;
        for &x in &a {
            while j < b.len() && b[j] < x {
                j += 1;
            }
            inversions += j;
        }
        Some((Monomial(exps), inversions % 2 == 1))
    }

    pub fn render(&self, table: &GeneratorTable) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for i in self.odd_factors(table) {
            parts.push(table.name(i).to_string());
        }
        for i in 0..self.0.len() {
            if table.is_odd(i) || self.0[i] == 0 {
                continue;
            }
            if self.0[i] == 1 {
                parts.push(table.name(i).to_string());
            } else {
                parts.push(format!("{}^{}", table.name(i), self.0[i]));
            }
        }
        parts.join("*")
    }
}

/// Degree information for an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    Zero,
    Homogeneous(u32),
    Mixed,
}

/// A finite linear combination of monomials with nonzero coefficients.
#[derive(Clone, Debug)]
pub struct AlgebraElement<F> {
    table: Arc<GeneratorTable>,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> PartialEq for AlgebraElement<F> {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl<F: Field> Eq for AlgebraElement<F> {}

impl<F: Field> AlgebraElement<F> {
    pub fn zero(table: &Arc<GeneratorTable>) -> Self {
        AlgebraElement { table: table.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(table: &Arc<GeneratorTable>, c: F) -> Self {
        Self::from_monomial(table, Monomial::one(table.len()), c)
    }

    pub fn one(table: &Arc<GeneratorTable>) -> Self {
        Self::constant(table, F::one())
    }

    pub fn generator(table: &Arc<GeneratorTable>, i: usize) -> Self {
        Self::from_monomial(table, Monomial::generator(table.len(), i), F::one())
    }

    pub fn generator_named(table: &Arc<GeneratorTable>, name: &str) -> Result<Self> {
        let i = table.index_of(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        Ok(Self::generator(table, i))
    }

    pub fn from_monomial(table: &Arc<GeneratorTable>, m: Monomial, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        AlgebraElement { table: table.clone(), terms }
    }

    /// Builds an element from raw terms, dropping zeros and merging repeats.
    pub fn from_terms<I>(table: &Arc<GeneratorTable>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, F)>,
    {
        let mut e = Self::zero(table);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// Terms in canonical presentation order.
    pub fn canonical_terms(&self) -> Vec<(&Monomial, &F)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.canonical_cmp(b.0, &self.table));
        v
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: F) {
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
            return Self::zero(&self.table);
        }
        AlgebraElement {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.clone() * c.clone())).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !same_table(&self.table, &other.table) {
            return Err(Error::TableMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Graded-commutative product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if !same_table(&self.table, &other.table) {
            return Err(Error::TableMismatch);
        }
        let mut out = Self::zero(&self.table);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, negative)) = ma.mul(mb, &self.table) {
                    let c = ca.clone() * cb.clone();
                    out.add_term(m, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.table);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn degree_of(&self) -> Degree {
        let mut degrees = self.terms.keys().map(|m| m.degree(&self.table));
        match degrees.next() {
            None => Degree::Zero,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    Degree::Homogeneous(d)
                } else {
                    Degree::Mixed
                }
            }
        }
    }

    /// Moves the element to another table, sending generator `i` to
    /// generator `map[i]`. Degrees must agree.
    pub fn reindex(&self, target: &Arc<GeneratorTable>, map: &[usize]) -> Self {
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[map[i]] = e;
            }
            let m2 = Monomial(exps);
            // odd factor order may change under the map
            let mut sign = false;
            let odd: Vec<usize> = m.odd_factors(&self.table).iter().map(|&i| map[i]).collect();
            for a in 0..odd.len() {
                for b in a + 1..odd.len() {
                    if odd[a] > odd[b] {
                        sign = !sign;
                    }
                }
            }
            out.add_term(m2, if sign { -c.clone() } else { c.clone() });
        }
        out
    }

    /// True if every term involves only even generators.
    pub fn is_in_even_subalgebra(&self) -> bool {
        self.terms.keys().all(|m| m.odd_factors(&self.table).is_empty())
    }
}

impl<F: Field> fmt::Display for AlgebraElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.canonical_terms() {
            let negative = c.is_neg();
            let abs = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mon = m.render(&self.table);
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mon}")?;
            } else {
                write!(f, "{abs}*{mon}")?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a, F: Field> std::ops::$tr<&'a AlgebraElement<F>> for &'a AlgebraElement<F> {
            type Output = AlgebraElement<F>;
            fn $method(self, rhs: &'a AlgebraElement<F>) -> AlgebraElement<F> {
                let f: fn(&AlgebraElement<F>, &AlgebraElement<F>) -> AlgebraElement<F> = $body;
                f(self, rhs)
            }
        }
        impl<F: Field> std::ops::$tr for AlgebraElement<F> {
            type Output = AlgebraElement<F>;
            fn $method(self, rhs: AlgebraElement<F>) -> AlgebraElement<F> {
                std::ops::$tr::$method(&self, &rhs)
            }
        }
    };
}

// Operators panic on mismatched tables; use `try_add` / `multiply` for the
// fallible forms.
forward_binop!(Add, add, |a, b| a.try_add(b).expect("generator table mismatch"));
forward_binop!(Sub, sub, |a, b| a.try_add(&-b).expect("generator table mismatch"));
forward_binop!(Mul, mul, |a, b| a.multiply(b).expect("generator table mismatch"));

impl<F: Field> std::ops::Neg for &AlgebraElement<F> {
    type Output = AlgebraElement<F>;
    fn neg(self) -> AlgebraElement<F> {
        self.scale(&-F::one())
    }
}

impl<F: Field> std::ops::Neg for AlgebraElement<F> {
    type Output = AlgebraElement<F>;
    fn neg(self) -> AlgebraElement<F> {
        -&self
    }
}

/// All monomials of degree `k`, in canonical order.
pub fn monomial_basis(table: &GeneratorTable, k: u32) -> Vec<Monomial> {
    fn rec(table: &GeneratorTable, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == table.len() {
            if left == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let d = table.degree(i);
        let max = if table.is_odd(i) { 1.min(left / d) } else { left / d };
        for e in 0..=max {
            cur[i] = e;
            rec(table, i + 1, left - e * d, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0; table.len()];
    rec(table, 0, k, &mut cur, &mut out);
    out.sort_by(|a, b| a.canonical_cmp(b, table));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};
    use crate::RationalElement as E;

    fn table(entries: &[(&str, u32)]) -> Arc<GeneratorTable> {
        GeneratorTable::new(entries.iter().map(|&(n, d)| (n, d))).unwrap()
    }

    #[test]
    fn odd_generators_anticommute() {
        let t = table(&[("y1", 3), ("y2", 3)]);
        let y1 = E::generator(&t, 0);
        let y2 = E::generator(&t, 1);
        let p = &y1 * &y2;
        assert_eq!(&y2 * &y1, -p.clone());
        assert_eq!(p.to_string(), "y1*y2");
        assert!((&y1 * &y1).is_zero());
    }

    #[test]
    fn even_generators_commute() {
        let t = table(&[("x1", 2), ("x2", 2)]);
        let s = &E::generator(&t, 0) + &E::generator(&t, 1);
        assert_eq!((&s * &s).to_string(), "x1^2 + 2*x1*x2 + x2^2");
    }

    #[test]
    fn degrees() {
        let t = table(&[("x1", 2), ("y1", 3)]);
        let x1 = E::generator(&t, 0);
        let y1 = E::generator(&t, 1);
        assert_eq!((&x1 * &x1).degree_of(), Degree::Homogeneous(4));
        assert_eq!((&y1 * &x1).degree_of(), Degree::Homogeneous(5));
        assert_eq!((&x1 + &(&x1 * &x1)).degree_of(), Degree::Mixed);
        assert_eq!(E::zero(&t).degree_of(), Degree::Zero);
    }

    #[test]
    fn mismatched_tables_are_rejected() {
        let t1 = table(&[("x", 2)]);
        let t2 = table(&[("x", 4)]);
        let a = E::generator(&t1, 0);
        let b = E::generator(&t2, 0);
        assert_eq!(a.multiply(&b), Err(Error::TableMismatch));
    }

    #[test]
    fn rendering_puts_odd_factors_first() {
        let t = table(&[("x1", 2), ("x2", 2), ("y1", 3)]);
        let e = E::generator(&t, 2) * E::generator(&t, 0).pow(2);
        let e = &e - &E::generator(&t, 1).pow(3).scale(&qf(1, 2));
        assert_eq!(e.to_string(), "-1/2*x2^3 + y1*x1^2");
        let c = E::constant(&t, q(-3));
        assert_eq!(c.to_string(), "-3");
    }

    #[test]
    fn bases_in_canonical_order() {
        let t = table(&[("x1", 2), ("x2", 2)]);
        let b: Vec<_> = monomial_basis(&t, 4).iter().map(|m| m.render(&t)).collect();
        assert_eq!(b, ["x1^2", "x1*x2", "x2^2"]);

        let t = table(&[("x1", 2), ("x2", 2), ("y1", 3), ("y2", 5)]);
        let b: Vec<_> = monomial_basis(&t, 7).iter().map(|m| m.render(&t)).collect();
        assert_eq!(b, ["y1*x1^2", "y1*x1*x2", "y1*x2^2", "y2*x1", "y2*x2"]);

        assert!(monomial_basis(&t, 1).is_empty());
        assert_eq!(monomial_basis(&t, 0).len(), 1);
    }

    #[test]
    fn reindexing_tracks_odd_order() {
        let t = table(&[("a", 3), ("b", 3)]);
        let swapped = table(&[("b", 3), ("a", 3)]);
        let ab = E::generator(&t, 0) * E::generator(&t, 1);
        let moved = ab.reindex(&swapped, &[1, 0]);
        // a*b = -(b*a)
        assert_eq!(moved.to_string(), "-b*a");
    }
}
