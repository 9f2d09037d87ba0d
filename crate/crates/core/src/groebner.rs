//! Reduced Gröbner bases of homogeneous ideals and the invariants read off
//! their leading-term ideals.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Mono, Poly, PolyRing};
use crate::scalar::Field;

/// Reduced, monic Gröbner basis under the ring's fixed order. Generators are
/// sorted by degree, then by descending leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<F> {
    ring: Arc<PolyRing>,
    generators: Vec<Poly<F>>,
}

impl<F: Field> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.generators == other.generators
    }
}

impl<F: Field> Eq for GroebnerBasis<F> {}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly<F>] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.generators.iter().map(|g| g.leading().unwrap().0.clone()).collect()
    }

    pub fn normal_form(&self, p: &Poly<F>) -> Poly<F> {
        reduce(p, &self.generators)
    }

    pub fn contains(&self, p: &Poly<F>) -> bool {
        self.normal_form(p).is_zero()
    }

    fn is_standard(&self, m: &Mono, leads: &[Mono]) -> bool {
        let _ = self;
        !leads.iter().any(|l| l.divides(m))
    }

    /// Standard monomials of weighted degree `d`, descending.
    pub fn standard_monomials(&self, d: u32) -> Vec<Mono> {
        let leads = self.leading_monomials();
        self.ring
            .monomials_of_degree(d)
            .into_iter()
            .filter(|m| self.is_standard(m, &leads))
            .collect()
    }

    /// Zero-dimensionality: every variable has a pure power among the
    /// leading monomials.
    pub fn is_finite_dimensional(&self) -> bool {
        let leads = self.leading_monomials();
        (0..self.ring.nvars()).all(|v| {
            leads.iter().any(|l| {
                let s = l.support();
                s.len() == 1 && s[0] == v
            })
        })
    }

    pub fn hilbert_function(&self, max_degree: u32) -> Vec<usize> {
        (0..=max_degree).map(|d| self.standard_monomials(d).len()).collect()
    }

    /// Largest set of variables containing the support of no leading
    /// monomial; -1 for the unit ideal.
    pub fn krull_dimension(&self) -> i64 {
        let n = self.ring.nvars();
        let leads = self.leading_monomials();
        if leads.iter().any(Mono::is_one) {
            return -1;
        }
        let supports: Vec<u64> = leads
            .iter()
            .map(|l| l.support().iter().fold(0u64, |acc, &i| acc | (1 << i)))
            .collect();
        let mut best = 0;
        for set in 0u64..(1 << n) {
            let size = set.count_ones() as i64;
            if size > best && supports.iter().all(|&s| s & !set != 0) {
                best = size;
            }
        }
        best
    }

    /// Krull dimension and degree of the quotient. The degree is the
    /// normalized leading coefficient of the Hilbert polynomial (the vector
    /// space dimension when the quotient is finite). Requires unit weights.
    pub fn dimension_and_degree(&self) -> Result<(i64, usize)> {
        if !self.ring.is_standard_graded() {
            return Err(Error::Precondition("degree needs a standard-graded ring".into()));
        }
        let dim = self.krull_dimension();
        if dim < 0 {
            return Ok((dim, 0));
        }
        let bound: u32 = self
            .leading_monomials()
            .iter()
            .map(Mono::degree)
            .sum::<u32>()
            + self.ring.nvars() as u32
            + 4;
        let hf = self.hilbert_function(bound + dim as u32 + 2);
        if dim == 0 {
            return Ok((0, hf.iter().sum()));
        }
        // (dim-1)-th forward difference is eventually the degree
        let mut seq: Vec<i64> = hf.iter().map(|&v| v as i64).collect();
        for _ in 0..dim - 1 {
            seq = seq.windows(2).map(|w| w[1] - w[0]).collect();
        }
        let last = *seq.last().unwrap();
        Ok((dim, last.max(0) as usize))
    }
}

/// Full reduction of `p` by `divisors`.
fn reduce<F: Field>(p: &Poly<F>, divisors: &[Poly<F>]) -> Poly<F> {
    let mut rest = p.clone();
    let mut out = Poly::zero(p.ring());
    let leads: Vec<(Mono, F)> = divisors
        .iter()
        .filter_map(|g| g.leading().map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    while let Some((m, c)) = rest.leading().map(|(m, c)| (m.clone(), c.clone())) {
        match leads.iter().position(|(l, _)| l.divides(&m)) {
            Some(i) => {
                let (l, lc) = &leads[i];
                let factor = l.quotient_of(&m);
                let coeff = -(c / lc.clone());
                rest = &rest + &divisors[i].mul_term(&factor, &coeff);
            }
            None => {
                out.add_term(m.clone(), c.clone());
                rest.add_term(m, -c);
            }
        }
    }
    out
}

fn s_polynomial<F: Field>(f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
    let (mf, cf) = f.leading().unwrap();
    let (mg, cg) = g.leading().unwrap();
    let l = mf.lcm(mg, f.ring());
    let a = f.mul_term(&mf.quotient_of(&l), &(F::one() / cf.clone()));
    let b = g.mul_term(&mg.quotient_of(&l), &(F::one() / cg.clone()));
    &a - &b
}

/// Reduced Gröbner basis of the ideal generated by `polys` (zero inputs are
/// dropped). Inputs must be homogeneous for the ring's weights.
pub fn buchberger<F: Field>(ring: &Arc<PolyRing>, polys: &[Poly<F>]) -> Result<GroebnerBasis<F>> {
    let mut basis: Vec<Poly<F>> = Vec::new();
    for p in polys {
        if **p.ring() != **ring {
            return Err(Error::RingMismatch);
        }
        if !p.is_homogeneous() {
            return Err(Error::NonHomogeneous(p.to_string()));
        }
        if !p.is_zero() {
            basis.push(p.monic());
        }
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        // normal selection: smallest lcm first
        let (k, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = basis[a.0].leading().unwrap().0.lcm(basis[a.1].leading().unwrap().0, ring);
                let lb = basis[b.0].leading().unwrap().0.lcm(basis[b.1].leading().unwrap().0, ring);
                la.cmp(&lb)
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(k);
        let (mi, mj) = (basis[i].leading().unwrap().0.clone(), basis[j].leading().unwrap().0.clone());
        if mi.coprime(&mj) {
            continue;
        }
        let lij = mi.lcm(&mj, ring);
        // chain criterion: skip if some third leading monomial divides the lcm
        // and both companion pairs are already processed
        let chain = (0..basis.len()).any(|t| {
            t != i
                && t != j
                && basis[t].leading().unwrap().0.divides(&lij)
                && !pairs.contains(&(i.min(t), i.max(t)))
                && !pairs.contains(&(j.min(t), j.max(t)))
        });
        if chain {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            basis.push(r.monic());
            let n = basis.len() - 1;
            for t in 0..n {
                pairs.push((t, n));
            }
        }
    }

    // minimalize
    let mut minimal: Vec<Poly<F>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lg = g.leading().unwrap().0;
        let redundant = basis.iter().enumerate().any(|(t, h)| {
            let lh = h.leading().unwrap().0;
            t != k && lh.divides(lg) && (lh != lg || t < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    // interreduce
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Poly<F>> =
            minimal.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, g)| g.clone()).collect();
        reduced.push(reduce(&minimal[k], &others).monic());
    }
    reduced.sort_by(|a, b| {
        let (la, lb) = (a.leading().unwrap().0, b.leading().unwrap().0);
        la.degree().cmp(&lb.degree()).then_with(|| lb.cmp(la))
    });
    Ok(GroebnerBasis { ring: ring.clone(), generators: reduced })
}

pub fn normal_form<F: Field>(p: &Poly<F>, gb: &GroebnerBasis<F>) -> Poly<F> {
    gb.normal_form(p)
}

/// Whether a sequence of homogeneous positive-degree polynomials is regular,
/// decided by codimension: regular iff dim R/(f) = n - k. Sequences longer
/// than the number of variables and sequences containing zero are not
/// regular; the empty sequence is.
pub fn is_regular_sequence<F: Field>(polys: &[Poly<F>], ring: &Arc<PolyRing>) -> Result<bool> {
    for p in polys {
        if **p.ring() != **ring {
            return Err(Error::RingMismatch);
        }
        if !p.is_homogeneous() {
            return Err(Error::NonHomogeneous(p.to_string()));
        }
        if p.homogeneous_degree() == Some(0) {
            return Err(Error::Precondition(format!("constant `{p}` in a regular-sequence test")));
        }
    }
    if polys.iter().any(Poly::is_zero) || polys.len() > ring.nvars() {
        return Ok(false);
    }
    let gb = buchberger(ring, polys)?;
    Ok(gb.krull_dimension() == (ring.nvars() - polys.len()) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use crate::RationalPoly as P;

    fn ring3() -> Arc<PolyRing> {
        PolyRing::new(["x1", "x2", "x3"]).unwrap()
    }

    fn vars(r: &Arc<PolyRing>) -> Vec<P> {
        (0..r.nvars()).map(|i| P::var(r, i)).collect()
    }

    fn render(gb: &GroebnerBasis<crate::Rational>) -> Vec<String> {
        gb.generators().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn basis_with_one_new_element() {
        let r = PolyRing::new(["x1", "x2"]).unwrap();
        let x = vars(&r);
        let f = &x[0] * &x[1];
        let g = &(&x[0] * &x[0]) - &(&x[1] * &x[1]);
        let gb = buchberger(&r, &[f, g]).unwrap();
        assert_eq!(render(&gb), ["x1^2 - x2^2", "x1*x2", "x2^3"]);

        let p = &(&x[0] * &x[0]) * &x[1];
        assert!(gb.normal_form(&p).is_zero());
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring3();
        let x = vars(&r);
        let sq: Vec<P> = x.iter().map(|v| v * v).collect();
        let gb = buchberger(&r, &sq).unwrap();
        assert_eq!(render(&gb), ["x1^2", "x2^2", "x3^2"]);
        assert!(gb.is_finite_dimensional());
        assert_eq!(gb.hilbert_function(5), vec![1, 3, 3, 1, 0, 0]);
        assert_eq!(gb.krull_dimension(), 0);
        let x1_cubed = x[0].pow(3);
        assert!(gb.normal_form(&x1_cubed).is_zero());
    }

    #[test]
    fn zero_ideal() {
        let r = PolyRing::new(["x1", "x2"]).unwrap();
        let gb = buchberger::<crate::Rational>(&r, &[]).unwrap();
        assert!(gb.is_zero_ideal());
        assert!(!gb.is_finite_dimensional());
        assert_eq!(gb.hilbert_function(3), vec![1, 2, 3, 4]);
        assert_eq!(gb.krull_dimension(), 2);
        let p = P::var(&r, 0);
        assert_eq!(gb.normal_form(&p), p);
        let gb = buchberger(&r, &[P::zero(&r)]).unwrap();
        assert!(gb.is_zero_ideal());
    }

    #[test]
    fn coordinate_products() {
        let r = ring3();
        let x = vars(&r);
        let gens = [&x[0] * &x[1], &x[0] * &x[2], &x[1] * &x[2]];
        let gb = buchberger(&r, &gens).unwrap();
        assert!(!gb.is_finite_dimensional());
        assert_eq!(gb.hilbert_function(5), vec![1, 3, 3, 3, 3, 3]);
        assert_eq!(gb.krull_dimension(), 1);
        assert_eq!(gb.dimension_and_degree().unwrap(), (1, 3));
        let gb = buchberger(&r, &[&x[0] * &x[1]]).unwrap();
        assert_eq!(gb.krull_dimension(), 2);
    }

    #[test]
    fn regular_sequences() {
        let r = ring3();
        let x = vars(&r);
        let seq = [&x[0] * &x[1], &(&x[0] * &x[0]) - &(&x[1] * &x[1]), &x[2] * &x[2]];
        assert!(is_regular_sequence(&seq, &r).unwrap());
        let seq = [&(&x[1] * &x[1]) + &(&x[0] * &x[2]), &x[2] * &x[2], &x[1] * &x[2]];
        assert!(!is_regular_sequence(&seq, &r).unwrap());
        let r1 = PolyRing::new(["x1"]).unwrap();
        assert!(is_regular_sequence(&[P::var(&r1, 0)], &r1).unwrap());
        assert!(is_regular_sequence::<crate::Rational>(&[], &r).unwrap());
        assert!(!is_regular_sequence(&[P::zero(&r)], &r).unwrap());
        let bad = &x[0] + &P::one(&r);
        assert!(matches!(is_regular_sequence(&[bad], &r), Err(Error::NonHomogeneous(_))));
        assert!(is_regular_sequence(&[P::constant(&r, q(2))], &r).is_err());
    }
}
