//! Sullivan algebras (ΛV, d): validation, cohomology and the derived
//! invariants used by the classifiers.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{monomial_basis, same_table, AlgebraElement, Degree, GeneratorTable, Monomial};
use crate::cubic::CubicForm;
use crate::error::{Error, Result};
use crate::exponents::{exponents_of_model, formal_dimension_from_exponents};
use crate::linalg::{in_span, Matrix};
use crate::poly::{Poly, PolyRing};
use crate::scalar::Field;

/// First defect found by [`SullivanModel::validate`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error("generator `{0}` has degree 1")]
    DegreeOne(String),
    #[error("d({generator}) has degree {found}, expected {expected}")]
    Degree { generator: String, expected: u32, found: String },
    #[error("d({0}) has a linear term")]
    NotMinimal(String),
    #[error("d(d({0})) is not zero")]
    NotSquareZero(String),
}

/// A free graded-commutative algebra with a differential given on generators.
#[derive(Debug, Clone)]
pub struct SullivanModel<F> {
    table: Arc<GeneratorTable>,
    d: Vec<AlgebraElement<F>>,
}

impl<F: Field> PartialEq for SullivanModel<F> {
    fn eq(&self, other: &Self) -> bool {
        *self.table == *other.table
            && self.d.len() == other.d.len()
            && self.d.iter().zip(&other.d).all(|(a, b)| a.terms().eq(b.terms()))
    }
}

impl<F: Field> Eq for SullivanModel<F> {}

/// Betti numbers through a window plus the duality check.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CohomologyReport {
    /// `betti[k]` is dim H^k for `k <= max_degree_computed`.
    pub betti: Vec<usize>,
    pub max_degree_computed: u32,
    /// Formal dimension predicted by the exponents.
    pub formal_dimension_claim: Option<u32>,
    pub poincare_symmetric: bool,
}

impl CohomologyReport {
    pub fn betti_pairs(&self) -> Vec<(u32, usize)> {
        self.betti.iter().enumerate().map(|(k, &b)| (k as u32, b)).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// H^k presented as cocycle representatives modulo an independent set of
/// coboundaries, both in coordinates of the monomial basis.
#[derive(Debug, Clone)]
pub struct CohomologyGroup<F> {
    pub degree: u32,
    pub basis: Vec<Monomial>,
    pub boundaries: Vec<Vec<F>>,
    pub representatives: Vec<Vec<F>>,
}

impl<F: Field> CohomologyGroup<F> {
    pub fn dimension(&self) -> usize {
        self.representatives.len()
    }

    pub fn coordinates_of(&self, a: &AlgebraElement<F>) -> Vec<F> {
        let index: HashMap<&Monomial, usize> = self.basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut v = vec![F::zero(); self.basis.len()];
        for (m, c) in a.terms() {
            if let Some(&i) = index.get(m) {
                v[i] = c.clone();
            }
        }
        v
    }

    /// Class of a cocycle in the representative basis.
    pub fn class_of(&self, a: &AlgebraElement<F>) -> Result<Vec<F>> {
        let v = self.coordinates_of(a);
        let mut all = self.boundaries.clone();
        all.extend(self.representatives.iter().cloned());
        let coords = in_span(&v, &all)?
            .ok_or_else(|| Error::Precondition(format!("{a} is not a cocycle of degree {}", self.degree)))?;
        Ok(coords[self.boundaries.len()..].to_vec())
    }
}

impl<F: Field> SullivanModel<F> {
    /// Model from one differential image per generator, in table order.
    pub fn new(table: &Arc<GeneratorTable>, images: Vec<AlgebraElement<F>>) -> Result<Self> {
        if images.len() != table.len() {
            return Err(Error::DimensionMismatch { expected: table.len(), found: images.len() });
        }
        if images.iter().any(|e| !same_table(e.table(), table)) {
            return Err(Error::TableMismatch);
        }
        Ok(SullivanModel { table: table.clone(), d: images })
    }

    /// Model from named images; unnamed generators are closed.
    pub fn from_named<'a>(
        table: &Arc<GeneratorTable>,
        images: impl IntoIterator<Item = (&'a str, AlgebraElement<F>)>,
    ) -> Result<Self> {
        let mut d: Vec<AlgebraElement<F>> = (0..table.len()).map(|_| AlgebraElement::zero(table)).collect();
        for (name, e) in images {
            let i = table.index_of(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            if !same_table(e.table(), table) {
                return Err(Error::TableMismatch);
            }
            d[i] = e;
        }
        Ok(SullivanModel { table: table.clone(), d })
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    pub fn differential(&self, i: usize) -> &AlgebraElement<F> {
        &self.d[i]
    }

    pub fn differentials(&self) -> &[AlgebraElement<F>] {
        &self.d
    }

    /// `d` on a single monomial, via the Leibniz rule on the ordered product
    /// "even part, then odd factors".
    fn d_monomial(&self, m: &Monomial) -> AlgebraElement<F> {
        let t = &self.table;
        let mut out = AlgebraElement::zero(t);
        let odd = m.odd_factors(t);
        let mut even_exps = m.exponents().to_vec();
        for &i in &odd {
            even_exps[i] = 0;
        }
        let even = AlgebraElement::from_monomial(t, Monomial::from_exponents(even_exps.clone()), F::one());
        let mut odd_part = AlgebraElement::one(t);
        for &i in &odd {
            odd_part = &odd_part * &AlgebraElement::generator(t, i);
        }

        // d(E) * O
        for (i, &e) in even_exps.iter().enumerate() {
            if e == 0 || self.d[i].is_zero() {
                continue;
            }
            let mut rest = even_exps.clone();
            rest[i] -= 1;
            let rest = AlgebraElement::from_monomial(t, Monomial::from_exponents(rest), F::from_int(e as i64));
            out = &out + &(&(&rest * &self.d[i]) * &odd_part);
        }
        // E * d(O), sign (-1)^k for the k-th odd factor
        for (k, &i) in odd.iter().enumerate() {
            if self.d[i].is_zero() {
                continue;
            }
            let mut prefix = AlgebraElement::one(t);
            for &p in &odd[..k] {
                prefix = &prefix * &AlgebraElement::generator(t, p);
            }
            let mut suffix = AlgebraElement::one(t);
            for &s in &odd[k + 1..] {
                suffix = &suffix * &AlgebraElement::generator(t, s);
            }
            let mut term = &(&(&even * &prefix) * &self.d[i]) * &suffix;
            if k % 2 == 1 {
                term = -term;
            }
            out = &out + &term;
        }
        out
    }

    /// Extends `d` to an arbitrary element by linearity and the Leibniz rule.
    pub fn extend_differential(&self, a: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        if !same_table(a.table(), &self.table) {
            return Err(Error::TableMismatch);
        }
        let mut out = AlgebraElement::zero(&self.table);
        for (m, c) in a.terms() {
            out = &out + &self.d_monomial(m).scale(c);
        }
        Ok(out)
    }

    /// Checks degrees, minimality and d² = 0 on every generator.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let t = &self.table;
        for i in 0..t.len() {
            if t.degree(i) < 2 {
                return Err(Violation::DegreeOne(t.name(i).into()));
            }
        }
        for (i, image) in self.d.iter().enumerate() {
            let expected = t.degree(i) + 1;
            match image.degree_of() {
                Degree::Zero => continue,
                Degree::Homogeneous(k) if k == expected => {}
                Degree::Homogeneous(k) => {
                    return Err(Violation::Degree {
                        generator: t.name(i).into(),
                        expected,
                        found: k.to_string(),
                    })
                }
                Degree::Mixed => {
                    return Err(Violation::Degree {
                        generator: t.name(i).into(),
                        expected,
                        found: "mixed".into(),
                    })
                }
            }
            if image.terms().any(|(m, _)| m.word_length() < 2) {
                return Err(Violation::NotMinimal(t.name(i).into()));
            }
        }
        for (i, image) in self.d.iter().enumerate() {
            if !self.extend_differential(image).expect("same table").is_zero() {
                return Err(Violation::NotSquareZero(t.name(i).into()));
            }
        }
        Ok(())
    }

    pub fn is_pure(&self) -> bool {
        (0..self.table.len()).all(|i| {
            if self.table.is_odd(i) {
                self.d[i].is_in_even_subalgebra()
            } else {
                self.d[i].is_zero()
            }
        })
    }

    /// Matrix of d: (ΛV)^k → (ΛV)^{k+1}, columns indexed by the degree-k basis.
    pub fn differential_matrix(&self, k: u32) -> Matrix<F> {
        let src = monomial_basis(&self.table, k);
        let dst = monomial_basis(&self.table, k + 1);
        let index: HashMap<&Monomial, usize> = dst.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut m = Matrix::zeros(dst.len(), src.len());
        for (j, s) in src.iter().enumerate() {
            for (t, c) in self.d_monomial(s).terms() {
                m.set(index[t], j, c.clone());
            }
        }
        m
    }

    pub fn cohomology_group(&self, k: u32) -> CohomologyGroup<F> {
        let basis = monomial_basis(&self.table, k);
        let cocycles = self.differential_matrix(k).kernel_basis();
        let mut boundaries: Vec<Vec<F>> = Vec::new();
        if k > 0 {
            let dm = self.differential_matrix(k - 1);
            for v in crate::linalg::canonical_basis(&dm.transpose().row_vectors()) {
                boundaries.push(v);
            }
        }
        let mut representatives = Vec::new();
        let mut span = boundaries.clone();
        for z in cocycles {
            if in_span(&z, &span).expect("equal lengths").is_none() {
                span.push(z.clone());
                representatives.push(z);
            }
        }
        CohomologyGroup { degree: k, basis, boundaries, representatives }
    }

    fn betti_vector(&self, max_degree: u32) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=max_degree).map(|k| self.differential_matrix(k).rank()).collect();
        (0..=max_degree as usize)
            .map(|k| {
                let dim = monomial_basis(&self.table, k as u32).len();
                dim - ranks[k] - if k > 0 { ranks[k - 1] } else { 0 }
            })
            .collect()
    }

    /// Betti numbers b_0..b_max and the Poincaré-duality check against the
    /// exponent-predicted formal dimension n (when n <= max_degree): Betti
    /// symmetry, dim H^n = 1, vanishing above n, and nondegeneracy of the
    /// pairing H^2 x H^{n-2} → H^n.
    pub fn cohomology_betti(&self, max_degree: u32) -> CohomologyReport {
        let betti = self.betti_vector(max_degree);
        let n = formal_dimension_from_exponents(&exponents_of_model(self));
        let claim = u32::try_from(n).ok();
        let poincare_symmetric = match claim {
            Some(n) if n <= max_degree => {
                let n = n as usize;
                (0..=n).all(|k| betti[k] == betti[n - k])
                    && betti[n] == 1
                    && betti[n + 1..].iter().all(|&b| b == 0)
                    && (betti[2] == 0 || n < 4 || self.pairing_nondegenerate(2, n as u32 - 2))
            }
            _ => false,
        };
        CohomologyReport { betti, max_degree_computed: max_degree, formal_dimension_claim: claim, poincare_symmetric }
    }

    /// Whether H^p x H^q → H^{p+q} is a perfect pairing onto a line.
    pub fn pairing_nondegenerate(&self, p: u32, q: u32) -> bool {
        let hp = self.cohomology_group(p);
        let hq = self.cohomology_group(q);
        let top = self.cohomology_group(p + q);
        if top.dimension() != 1 || hp.dimension() != hq.dimension() {
            return false;
        }
        let gram = self.gram(&hp, &hq, &top);
        gram.rank() == hp.dimension()
    }

    fn element(&self, basis: &[Monomial], coords: &[F]) -> AlgebraElement<F> {
        AlgebraElement::from_terms(&self.table, basis.iter().cloned().zip(coords.iter().cloned()))
    }

    fn gram(&self, a: &CohomologyGroup<F>, b: &CohomologyGroup<F>, top: &CohomologyGroup<F>) -> Matrix<F> {
        let mut g = Matrix::zeros(a.dimension(), b.dimension());
        for (i, ra) in a.representatives.iter().enumerate() {
            let ea = self.element(&a.basis, ra);
            for (j, rb) in b.representatives.iter().enumerate() {
                let eb = self.element(&b.basis, rb);
                let class = top.class_of(&(&ea * &eb)).expect("products of cocycles are cocycles");
                g.set(i, j, class[0].clone());
            }
        }
        g
    }

    /// Polynomial ring on the even generators, weighted by degree, and the
    /// table indices of its variables.
    pub fn even_ring(&self) -> (Arc<PolyRing>, Vec<usize>) {
        let idx = self.table.even_indices();
        let ring = PolyRing::weighted(idx.iter().map(|&i| (self.table.name(i).to_string(), self.table.degree(i))))
            .expect("table names are unique and degrees positive");
        (ring, idx)
    }

    /// An element of the even subalgebra as a polynomial in `ring`.
    pub fn to_even_poly(&self, a: &AlgebraElement<F>, ring: &Arc<PolyRing>, even: &[usize]) -> Result<Poly<F>> {
        if !a.is_in_even_subalgebra() {
            return Err(Error::NotPure);
        }
        Ok(Poly::from_terms(
            ring,
            a.terms().map(|(m, c)| (even.iter().map(|&i| m.exponent(i)).collect(), c.clone())),
        ))
    }

    /// Images d(y) of the odd generators as polynomials on the even ones.
    pub fn odd_images(&self) -> Result<(Arc<PolyRing>, Vec<Poly<F>>)> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let (ring, even) = self.even_ring();
        let polys = self
            .table
            .odd_indices()
            .into_iter()
            .map(|i| self.to_even_poly(&self.d[i], &ring, &even))
            .collect::<Result<Vec<_>>>()?;
        Ok((ring, polys))
    }

    /// A pure model is elliptic iff ΛV^even / (d V^odd) is finite-dimensional.
    pub fn pure_is_elliptic(&self) -> Result<bool> {
        let (ring, polys) = self.odd_images()?;
        Ok(crate::groebner::buchberger(&ring, &polys)?.is_finite_dimensional())
    }

    /// Rank of d restricted to the generators of degree `k`.
    pub fn generator_rank(&self, k: u32) -> usize {
        let gens: Vec<usize> = (0..self.table.len()).filter(|&i| self.table.degree(i) == k).collect();
        let basis = monomial_basis(&self.table, k + 1);
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut m = Matrix::zeros(basis.len(), gens.len());
        for (j, &g) in gens.iter().enumerate() {
            for (t, c) in self.d[g].terms() {
                m.set(index[t], j, c.clone());
            }
        }
        m.rank()
    }

    /// Cup-product cubic form on the degree-2 generators, evaluated against
    /// the first representative of H^6.
    pub fn cup_product_cubic_form(&self) -> Result<CubicForm<F>> {
        let gens: Vec<usize> = (0..self.table.len()).filter(|&i| self.table.degree(i) == 2).collect();
        if gens.iter().any(|&i| !self.d[i].is_zero()) {
            return Err(Error::Precondition("degree-2 generators must be closed".into()));
        }
        let top = self.cohomology_group(6);
        if top.dimension() != 1 {
            return Err(Error::TopCohomology { degree: 6, found: top.dimension() });
        }
        let mut form = CubicForm::zero(gens.len())?;
        for (a, &i) in gens.iter().enumerate() {
            for (b, &j) in gens.iter().enumerate().skip(a) {
                for (c, &k) in gens.iter().enumerate().skip(b) {
                    let t = &self.table;
                    let prod = &(&AlgebraElement::generator(t, i) * &AlgebraElement::generator(t, j))
                        * &AlgebraElement::generator(t, k);
                    form.set(a, b, c, top.class_of(&prod)?[0].clone());
                }
            }
        }
        Ok(form)
    }

    /// Determinant of the pairing on the two closed generators of degree
    /// `k`, evaluated in the one-dimensional H^{2k}.
    pub fn pairing_determinant(&self, k: u32) -> Result<F> {
        let found = self.cohomology_group(2 * k).dimension();
        if found != 1 {
            return Err(Error::TopCohomology { degree: 2 * k, found });
        }
        self.product_pairing_determinant(k)
    }

    /// Like `pairing_determinant`, but only requires the products of the
    /// degree-`k` generators to span a line in H^{2k}.
    pub fn product_pairing_determinant(&self, k: u32) -> Result<F> {
        let gens: Vec<usize> = (0..self.table.len()).filter(|&i| self.table.degree(i) == k).collect();
        if gens.len() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: gens.len() });
        }
        if gens.iter().any(|&i| !self.d[i].is_zero()) {
            return Err(Error::Precondition(format!("degree-{k} generators must be closed")));
        }
        let top = self.cohomology_group(2 * k);
        let t = &self.table;
        let mut classes = Vec::new();
        for &i in &gens {
            for &j in &gens {
                let prod = &AlgebraElement::generator(t, i) * &AlgebraElement::generator(t, j);
                classes.push(top.class_of(&prod)?);
            }
        }
        let Some(line) = classes.iter().find(|c| c.iter().any(|v| !v.is_zero())).cloned() else {
            return Ok(F::zero());
        };
        let pivot = line.iter().position(|v| !v.is_zero()).expect("nonzero class");
        let mut g = Matrix::zeros(2, 2);
        for (idx, c) in classes.iter().enumerate() {
            let lambda = c[pivot].clone() / line[pivot].clone();
            if c.iter().zip(&line).any(|(a, b)| *a != lambda.clone() * b.clone()) {
                return Err(Error::Precondition(format!("products of degree-{k} generators span more than a line")));
            }
            g.set(idx / 2, idx % 2, lambda);
        }
        g.determinant()
    }
}

impl SullivanModel<crate::Rational> {
    /// Square class of the H^2 x H^2 → H^4 pairing.
    pub fn h4_pairing_discriminant(&self) -> Result<num_bigint::BigInt> {
        self.pairing_discriminant(2)
    }

    /// Square class of the pairing on degree-`k` generators.
    pub fn pairing_discriminant(&self, k: u32) -> Result<num_bigint::BigInt> {
        crate::cubic::squarefree_part(&self.pairing_determinant(k)?)
    }

    /// Square class from `product_pairing_determinant`.
    pub fn product_pairing_discriminant(&self, k: u32) -> Result<num_bigint::BigInt> {
        crate::cubic::squarefree_part(&self.product_pairing_determinant(k)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use crate::RationalElement as E;
    use crate::RationalModel as M;

    fn vtilde_table() -> Arc<GeneratorTable> {
        GeneratorTable::new([("x1", 2), ("x2", 2), ("y1", 3), ("y2", 5)]).unwrap()
    }

    #[test]
    fn leibniz_on_products() {
        let t = vtilde_table();
        let x1 = E::generator(&t, 0);
        let x2 = E::generator(&t, 1);
        let dy1 = &(&x1 * &x1) + &(&x2 * &x2);
        let m = M::from_named(&t, [("y1", dy1.clone())]).unwrap();
        let y1 = E::generator(&t, 2);
        assert_eq!(m.extend_differential(&(&y1 * &x1)).unwrap(), &dy1 * &x1);
        assert!(m.extend_differential(&x1.pow(3)).unwrap().is_zero());
    }

    #[test]
    fn odd_product_sign() {
        let t = GeneratorTable::new([("x", 2), ("y1", 3), ("y2", 3)]).unwrap();
        let x = E::generator(&t, 0);
        let y1 = E::generator(&t, 1);
        let y2 = E::generator(&t, 2);
        let d1 = &x * &x;
        let d2 = d1.scale(&q(3));
        let m = M::from_named(&t, [("y1", d1.clone()), ("y2", d2.clone())]).unwrap();
        let expected = &(&d1 * &y2) - &(&y1 * &d2);
        assert_eq!(m.extend_differential(&(&y1 * &y2)).unwrap(), expected);
    }

    #[test]
    fn validation_failures() {
        let t = GeneratorTable::new([("x", 2), ("y", 3)]).unwrap();
        let x = E::generator(&t, 0);
        let m = M::from_named(&t, [("y", x.clone())]).unwrap();
        assert_eq!(m.validate(), Err(Violation::Degree { generator: "y".into(), expected: 4, found: "2".into() }));

        let t = GeneratorTable::new([("x", 3), ("y", 4)]).unwrap();
        let m = M::from_named(&t, [("y", E::generator(&t, 0).scale(&q(0)))]).unwrap();
        assert!(m.validate().is_ok());

        let t = GeneratorTable::new([("x", 2), ("y", 3)]).unwrap();
        let m = M::from_named(&t, [("x", E::generator(&t, 1))]).unwrap();
        assert_eq!(m.validate(), Err(Violation::NotMinimal("x".into())));

        // dx1 = y1 y2 (degree 6 → 7 mismatch avoided by degrees 4, 5)
        let t = GeneratorTable::new([("y1", 3), ("y2", 3), ("x1", 5), ("x2", 2)]).unwrap();
        let x2 = E::generator(&t, 3);
        let y1 = E::generator(&t, 0);
        let m = M::from_named(&t, [("y2", &x2 * &x2), ("x1", &y1 * &E::generator(&t, 1))]).unwrap();
        assert_eq!(m.validate(), Err(Violation::NotSquareZero("x1".into())));
    }

    #[test]
    fn cohomology_of_s3_times_s3() {
        let t = GeneratorTable::new([("y1", 3), ("y2", 3)]).unwrap();
        let m = M::from_named(&t, []).unwrap();
        let r = m.cohomology_betti(6);
        assert_eq!(r.betti, vec![1, 0, 0, 2, 0, 0, 1]);
        assert!(r.poincare_symmetric);
        assert_eq!(r.formal_dimension_claim, Some(6));
    }

    #[test]
    fn pure_models() {
        let t = GeneratorTable::new([("x1", 2), ("x2", 2), ("y1", 3), ("y2", 3), ("y3", 3)]).unwrap();
        let x1 = E::generator(&t, 0);
        let x2 = E::generator(&t, 1);
        let sq1 = &x1 * &x1;
        let sq2 = &x2 * &x2;
        let sum = &(&x1 + &x2) * &(&x1 + &x2);
        let n7 = M::from_named(&t, [("y1", sq1.clone()), ("y2", sq2), ("y3", sum)]).unwrap();
        assert!(n7.is_pure());
        assert!(n7.pure_is_elliptic().unwrap());
        assert_eq!(n7.generator_rank(3), 3);

        let y1 = E::generator(&t, 2);
        let impure = M::from_named(&t, [("y1", sq1), ("y2", &y1 * &x1)]).unwrap();
        assert!(!impure.is_pure());
        assert_eq!(impure.pure_is_elliptic(), Err(Error::NotPure));
    }
}
