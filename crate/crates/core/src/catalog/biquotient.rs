//! Quadric presentations: the singular ternary forms with their associated
//! subspaces, the Hesse family and the biquotient rings in u, v, w.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::cubic::{form_ring, quadric_ring, CubicForm, QuadricSubspace};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::parse::parse_poly;
use crate::poly::{Poly, PolyRing};
use crate::Rational;

/// A ternary form, the listed basis of its associated subspace and whether
/// that basis is a regular sequence.
#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    pub name: &'static str,
    /// The form in x, y, z used for computation.
    pub form: &'static str,
    pub span: &'static [&'static str],
    pub regular: bool,
}

const fn row(name: &'static str, form: &'static str, span: &'static [&'static str], regular: bool) -> TableRow {
    TableRow { name, form, span, regular }
}

/// The fourteen singular real ternary forms.
pub fn table_one() -> Vec<TableRow> {
    vec![
        row("0", "0", &["x1^2", "x2^2", "x3^2", "x1*x2", "x1*x3", "x2*x3"], false),
        row("x^3", "x^3", &["x2^2", "x3^2", "x1*x2", "x1*x3", "x2*x3"], false),
        row("x^2y", "x^2*y", &["x2^2", "x1*x3", "x2*x3", "x3^2"], false),
        row("x^2y - xy^2", "x^2*y - x*y^2", &["x1^2 + x1*x2 + x2^2", "x1*x3", "x2*x3", "x3^2"], false),
        row("x(x^2+y^2)", "x^3 + y^3", &["x1*x2", "x1*x3", "x2*x3", "x3^2"], false),
        row("xyz", "x*y*z", &["x1^2", "x2^2", "x3^2"], true),
        row("z(x^2+y^2)", "z*(x^2 + y^2)", &["x1*x2", "x1^2 - x2^2", "x3^2"], true),
        row("x(xz-y^2)", "x*(x*z - y^2)", &["x2^2 + x1*x3", "x3^2", "x2*x3"], false),
        row("z(x^2+y^2-z^2)", "z*(3*x^2 + 3*y^2 - z^2)", &["x1*x2", "x1^2 + x3^2", "x2^2 + x3^2"], true),
        row("x(x^2+y^2-z^2)", "x*(x^2 + 3*y^2 - 3*z^2)", &["x2*x3", "x1^2 - x2^2", "x1^2 + x3^2"], true),
        row("x(x^2+y^2+z^2)", "x*(x^2 + 3*y^2 + 3*z^2)", &["x2*x3", "x1^2 - x2^2", "x1^2 - x3^2"], true),
        row("x^3-3y^2z", "x^3 - 3*y^2*z", &["x1*x2", "x1*x3", "x3^2"], false),
        row("x^3+3x^2z-3y^2z", "x^3 + 3*x^2*z - 3*y^2*z", &["x1*x2", "x3^2", "x1^2 - x1*x3 + x2^2"], true),
        row("x^3-3x^2z-3y^2z", "x^3 - 3*x^2*z - 3*y^2*z", &["x1*x2", "x3^2", "x1^2 + x1*x3 - x2^2"], true),
    ]
}

impl TableRow {
    pub fn cubic_form(&self) -> Result<CubicForm<Rational>> {
        CubicForm::form_of_polynomial(&parse_poly(self.form, &form_ring(3))?)
    }

    pub fn listed_span(&self) -> Result<QuadricSubspace<Rational>> {
        span_of(&quadric_ring(3), self.span)
    }
}

/// Listed basis of the subspace for the Hesse form with parameter σ.
pub fn hesse_span(sigma: &Rational) -> Result<QuadricSubspace<Rational>> {
    let s = format!("({sigma})");
    span_of(
        &quadric_ring(3),
        &[&format!("{s}*x1^2 - x2*x3"), &format!("{s}*x2^2 - x1*x3"), &format!("{s}*x3^2 - x1*x2")],
    )
}

pub fn span_of(ring: &Arc<PolyRing>, polys: &[&str]) -> Result<QuadricSubspace<Rational>> {
    let ps = polys.iter().map(|p| parse_poly(p, ring)).collect::<Result<Vec<_>>>()?;
    QuadricSubspace::span(ring, &ps)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BiquotientKind {
    B1 { c1: Rational, c2: Rational },
    B2 { a3: Rational, b3: Rational },
    B3 { b1: Rational, c1: Rational, c2: Rational },
    Sporadic,
}

impl BiquotientKind {
    /// Kind from a name (`B1`, `B2`, `B3`, `Bsp`) and its parameters.
    pub fn parse(name: &str, params: &[Rational]) -> Result<Self> {
        let want = |n: usize| {
            if params.len() == n {
                Ok(())
            } else {
                Err(Error::DimensionMismatch { expected: n, found: params.len() })
            }
        };
        let k = match name.to_ascii_lowercase().as_str() {
            "b1" => {
                want(2)?;
                BiquotientKind::B1 { c1: params[0].clone(), c2: params[1].clone() }
            }
            "b2" => {
                want(2)?;
                BiquotientKind::B2 { a3: params[0].clone(), b3: params[1].clone() }
            }
            "b3" => {
                want(3)?;
                BiquotientKind::B3 { b1: params[0].clone(), c1: params[1].clone(), c2: params[2].clone() }
            }
            "bsp" => {
                want(0)?;
                BiquotientKind::Sporadic
            }
            _ => return Err(Error::Precondition(format!("unknown biquotient `{name}`"))),
        };
        Ok(k)
    }

    pub fn check_constraints(&self) -> Result<()> {
        let two = Rational::from_integer(2.into());
        match self {
            BiquotientKind::B1 { c1, c2 } if c1.is_zero() && c2.is_zero() => {
                Err(Error::Constraint("B1 needs (c1, c2) != (0, 0)".into()))
            }
            BiquotientKind::B2 { a3, b3 } if !a3.is_zero() || b3.is_zero() => {
                Err(Error::Constraint("B2 needs a3 = 0 and b3 != 0".into()))
            }
            BiquotientKind::B3 { b1, c1, c2 } if c2.is_zero() || &two * c1 == b1 * c2 => {
                Err(Error::Constraint("B3 needs c2 != 0 and 2 c1 != b1 c2".into()))
            }
            _ => Ok(()),
        }
    }
}

pub fn uvw_ring() -> Arc<PolyRing> {
    PolyRing::new(["u", "v", "w"]).expect("fixed names")
}

/// The three quadric relations among u, v, w.
pub fn biquotient_ring(kind: &BiquotientKind) -> Result<QuadricSubspace<Rational>> {
    kind.check_constraints()?;
    let p = |v: &Rational| format!("({v})");
    let rels: Vec<String> = match kind {
        BiquotientKind::B1 { c1, c2 } => {
            vec!["u^2 + 2*u*v".into(), "v^2 + u*v".into(), format!("w^2 + {}*u*w + {}*v*w", p(c1), p(c2))]
        }
        BiquotientKind::B2 { a3, b3 } => vec![
            format!("u^2 + 2*u*v + {}*u*w", p(a3)),
            format!("v^2 + u*v + {}*v*w", p(b3)),
            "w^2".into(),
        ],
        BiquotientKind::B3 { b1, c1, c2 } => {
            vec!["u^2".into(), format!("v^2 + {}*u*v", p(b1)), format!("w^2 + {}*u*w + {}*v*w", p(c1), p(c2))]
        }
        BiquotientKind::Sporadic => vec!["u^2 + 2*u*v + 2*u*w".into(), "v^2 + u*v + 2*v*w".into(), "w^2 + u*w + v*w".into()],
    };
    let refs: Vec<&str> = rels.iter().map(String::as_str).collect();
    span_of(&uvw_ring(), &refs)
}

/// Rewrites relations in u, v, w through (u, v, w)^T = M (x1, x2, x3)^T.
pub fn pull_back(w: &QuadricSubspace<Rational>, m: &Matrix<Rational>) -> Result<QuadricSubspace<Rational>> {
    let target = quadric_ring(3);
    if w.ring().nvars() != 3 || m.rows() != 3 || m.cols() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: m.rows() });
    }
    let images: Vec<Poly<Rational>> = (0..3)
        .map(|i| (0..3).fold(Poly::zero(&target), |acc, j| &acc + &Poly::var(&target, j).scale(m.get(i, j))))
        .collect();
    let polys = w.basis().iter().map(|f| f.substitute(&target, &images)).collect::<Result<Vec<_>>>()?;
    QuadricSubspace::span(&target, &polys)
}

fn mat(rows: [[Rational; 3]; 3]) -> Matrix<Rational> {
    Matrix::from_rows(rows.into_iter().map(Vec::from).collect()).expect("3x3")
}

/// Change of basis for B1 given α with α^2 = c2^2 + (2 c1 − c2)^2.
pub fn b1_substitution(c1: &Rational, c2: &Rational, alpha: &Rational) -> Result<Matrix<Rational>> {
    let two = Rational::from_integer(2.into());
    if alpha * alpha != c2 * c2 + (&two * c1 - c2) * (&two * c1 - c2) {
        return Err(Error::Constraint(format!("alpha = {alpha} does not square to c2^2 + (2c1 - c2)^2")));
    }
    let z = Rational::zero();
    let o = Rational::one();
    Ok(mat([
        [z.clone(), z.clone(), -&two],
        [z.clone(), o.clone(), o],
        [-(alpha / &two), -(c2 / &two), c1 - c2 / &two],
    ]))
}

/// Change of basis for B2 with b3 = 4 s^3, where all cube roots are rational.
pub fn b2_substitution(s: &Rational) -> Result<Matrix<Rational>> {
    if s.is_zero() {
        return Err(Error::Constraint("s must be nonzero".into()));
    }
    let z = Rational::zero();
    let two = Rational::from_integer(2.into());
    Ok(mat([
        [-(&two * s), &two * s, -s.clone()],
        [z.clone(), -(&two * s), z.clone()],
        [z.clone(), z, Rational::one() / (Rational::from_integer(4.into()) * s * s)],
    ]))
}

/// Change of basis for B3.
pub fn b3_substitution(b1: &Rational, c1: &Rational, c2: &Rational) -> Matrix<Rational> {
    let z = Rational::zero();
    let k = c2 * (b1 * c2 - Rational::from_integer(2.into()) * c1) / Rational::from_integer(2.into());
    mat([[z.clone(), c2.clone(), -c2.clone()], [z.clone(), c1 - b1 * c2, c1.clone()], [k.clone(), k, z]])
}

/// Cubic form of the sporadic biquotient as displayed, up to scale.
pub const SPORADIC_FORM: &str = "4*x^3 + 2*y^3 + z^3 - 6*x^2*y - 3*x*z^2 - 3*y^2*z + 6*x*y*z";

/// Approximate Hesse parameter of the sporadic form.
pub const SPORADIC_SIGMA: f64 = 0.27788;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::cubic_form_of_quadric_ideal;
    use crate::scalar::{q, qf};

    #[test]
    fn table_rows_match_listed_spans() {
        for row in table_one() {
            let f = row.cubic_form().unwrap();
            let w = f.associated_subspace().unwrap();
            assert_eq!(w, row.listed_span().unwrap(), "{}", row.name);
            assert_eq!(f.is_elliptic_form(3).unwrap().elliptic, row.regular, "{}", row.name);
        }
    }

    #[test]
    fn hesse_rows() {
        for s in [q(-1), q(2), qf(1, 3), q(5), q(0), q(1)] {
            let f = CubicForm::hesse(s.clone());
            assert_eq!(f.associated_subspace().unwrap(), hesse_span(&s).unwrap());
        }
    }

    #[test]
    fn substitutions() {
        let (c1, c2) = (q(7), q(6));
        let w = biquotient_ring(&BiquotientKind::B1 { c1: c1.clone(), c2: c2.clone() }).unwrap();
        let m = b1_substitution(&c1, &c2, &q(10)).unwrap();
        let target = span_of(&quadric_ring(3), &["x2*x3", "x1^2 - x2^2", "x1^2 - x3^2"]).unwrap();
        assert_eq!(pull_back(&w, &m).unwrap(), target);
        assert!(b1_substitution(&c1, &c2, &q(9)).is_err());

        let w = biquotient_ring(&BiquotientKind::B2 { a3: q(0), b3: q(4) }).unwrap();
        let target = span_of(&quadric_ring(3), &["x1*x2", "x3^2", "x1^2 + x1*x3 - x2^2"]).unwrap();
        assert_eq!(pull_back(&w, &b2_substitution(&q(1)).unwrap()).unwrap(), target);
        let w = biquotient_ring(&BiquotientKind::B2 { a3: q(0), b3: qf(-4, 27) }).unwrap();
        assert_eq!(pull_back(&w, &b2_substitution(&qf(-1, 3)).unwrap()).unwrap(), target);

        let (b1, c1, c2) = (q(2), q(3), q(5));
        let w = biquotient_ring(&BiquotientKind::B3 { b1: b1.clone(), c1: c1.clone(), c2: c2.clone() }).unwrap();
        let target = span_of(&quadric_ring(3), &["x2*x3", "x1^2 - x2^2", "x1^2 + x3^2"]).unwrap();
        assert_eq!(pull_back(&w, &b3_substitution(&b1, &c1, &c2)).unwrap(), target);
    }

    #[test]
    fn constraints() {
        assert!(biquotient_ring(&BiquotientKind::B1 { c1: q(0), c2: q(0) }).is_err());
        assert!(biquotient_ring(&BiquotientKind::B2 { a3: q(1), b3: q(1) }).is_err());
        assert!(biquotient_ring(&BiquotientKind::B3 { b1: q(2), c1: q(1), c2: q(1) }).is_err());
        assert_eq!(BiquotientKind::parse("Bsp", &[]).unwrap(), BiquotientKind::Sporadic);
        assert!(BiquotientKind::parse("B1", &[q(1)]).is_err());
    }

    #[test]
    fn sporadic_form() {
        let f = cubic_form_of_quadric_ideal(&biquotient_ring(&BiquotientKind::Sporadic).unwrap()).unwrap();
        let want = CubicForm::form_of_polynomial(&parse_poly(SPORADIC_FORM, &form_ring(3)).unwrap()).unwrap();
        assert!(f.is_proportional(&want));
    }
}
