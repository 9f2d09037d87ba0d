//! Cohomology ring fragments given by generators of degree 2 and relations,
//! and the square-zero locus of H^2.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::AlgebraElement;
use crate::cubic::{quadric_ring, QuadricSubspace};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::linalg::Matrix;
use crate::parse::parse_poly;
use crate::poly::{Poly, PolyRing};
use crate::{Rational, RationalModel};

/// Q[x1..xn] / (relations), all generators in degree 2.
#[derive(Debug, Clone)]
pub struct RingFragment {
    pub name: String,
    pub ring: Arc<PolyRing>,
    pub relations: Vec<Poly<Rational>>,
    /// Highest polynomial degree in which the presentation is claimed valid.
    pub valid_through: u32,
}

impl RingFragment {
    fn new(name: &str, vars: &[&str], relations: &[&str], valid_through: u32) -> Result<Self> {
        let ring = PolyRing::new(vars.iter().copied())?;
        let relations = relations.iter().map(|r| parse_poly(r, &ring)).collect::<Result<Vec<_>>>()?;
        Ok(RingFragment { name: name.into(), ring, relations, valid_through })
    }

    pub fn groebner(&self) -> Result<GroebnerBasis<Rational>> {
        buchberger(&self.ring, &self.relations)
    }

    /// Quadric relations (the degree-4 part of the ideal in real degrees).
    pub fn quadric_relations(&self) -> Result<QuadricSubspace<Rational>> {
        let quads: Vec<_> = self.relations.iter().filter(|r| r.homogeneous_degree() == Some(2)).cloned().collect();
        QuadricSubspace::span(&self.ring, &quads)
    }
}

/// The partial ring of N^9 (through H^4), the ring of the 8-manifold M^8
/// and the H^4 presentation of the circle bundle Y over (S^2)^4.
pub fn nine_dim_rings() -> Result<Vec<RingFragment>> {
    Ok(vec![
        RingFragment::new("N^9", &["x1", "x2"], &["x1*x2", "x1^2"], 2)?,
        RingFragment::new("M^8", &["x1", "x2", "y"], &["x1*x2", "x1^3 - x2^3", "y^2 - x1*y - x2*y"], 4)?,
        RingFragment::new("Y", &["x1", "x2", "x3"], &["x1^2", "x2^2", "x3^2", "x1*x2 + x1*x3 + x2*x3"], 2)?,
    ])
}

/// Quadrics in the degree-2 generators that vanish in H^4 of the model.
pub fn model_quadric_relations(m: &RationalModel) -> Result<QuadricSubspace<Rational>> {
    let t = m.table();
    let gens: Vec<usize> = (0..t.len()).filter(|&i| t.degree(i) == 2).collect();
    if gens.iter().any(|&i| !m.differential(i).is_zero()) {
        return Err(Error::Precondition("degree-2 generators must be closed".into()));
    }
    let ring = quadric_ring(gens.len());
    let mons = ring.monomials_of_degree(2);
    let h4 = m.cohomology_group(4);
    let columns = mons
        .iter()
        .map(|mon| {
            let mut e = AlgebraElement::one(t);
            for (k, &i) in gens.iter().enumerate() {
                e = &e * &AlgebraElement::generator(t, i).pow(mon.exponents()[k]);
            }
            h4.class_of(&e)
        })
        .collect::<Result<Vec<_>>>()?;
    let map = Matrix::from_columns(h4.dimension(), &columns)?;
    let rels: Vec<Poly<Rational>> =
        map.kernel_basis().iter().map(|v| Poly::from_coordinates(&ring, &mons, v)).collect();
    QuadricSubspace::span(&ring, &rels)
}

/// Krull dimension and degree of the locus of a in H^2 with
/// (Σ a_i x_i)^2 = 0, for H^4 = Sym^2(H^2) / relations.
pub fn square_zero_profile(relations: &QuadricSubspace<Rational>) -> Result<(i64, usize)> {
    let ring = relations.ring();
    let n = ring.nvars();
    let mons = ring.monomials_of_degree(2);
    let rows: Vec<Vec<Rational>> = relations
        .basis()
        .iter()
        .map(|r| r.coordinates(&mons).ok_or_else(|| Error::NonHomogeneous(r.to_string())))
        .collect::<Result<_>>()?;
    let ann = if rows.is_empty() {
        (0..mons.len())
            .map(|i| (0..mons.len()).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect()
    } else {
        Matrix::from_rows(rows)?.kernel_basis()
    };
    let a_ring = PolyRing::new((1..=n).map(|i| format!("a{i}")))?;
    let two = Rational::from_integer(2.into());
    let quadrics: Vec<Poly<Rational>> = ann
        .iter()
        .map(|phi| {
            Poly::from_terms(
                &a_ring,
                mons.iter().zip(phi).map(|(m, c)| {
                    let square = m.exponents().contains(&2);
                    (m.exponents().to_vec(), if square { c.clone() } else { c * &two })
                }),
            )
        })
        .collect();
    buchberger(&a_ring, &quadrics)?.dimension_and_degree()
}
