//! Exact computations for rationally elliptic spaces in low dimensions:
//! Sullivan models, elliptic exponents, Gröbner bases and cubic forms.

pub mod algebra;
pub mod catalog;
pub mod cubic;
pub mod error;
pub mod exponents;
pub mod groebner;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod roots;
pub mod scalar;
pub mod sullivan;

pub use algebra::{monomial_basis, AlgebraElement, Degree, GeneratorTable, Monomial};
pub use cubic::{cubic_form_of_quadric_ideal, squarefree_part, BinaryClass, CubicForm, EllipticVerdict, QuadricSubspace};
pub use error::{Error, Result};
pub use exponents::{
    check_constraints, check_sac, enumerate_exponents, exponents_of_model, formal_dimension_from_exponents, ExponentPair,
};
pub use groebner::{buchberger, is_regular_sequence, normal_form, GroebnerBasis};
pub use linalg::{in_span, kernel_basis, rank, Matrix};
pub use poly::{Mono, Poly, PolyRing};
pub use scalar::{Field, OrderedField};
pub use sullivan::{CohomologyReport, SullivanModel, Violation};

/// Arbitrary-precision rationals, always normalized.
pub type Rational = num_rational::BigRational;
pub type RationalElement = AlgebraElement<Rational>;
pub type RationalMatrix = Matrix<Rational>;
pub type RationalPoly = Poly<Rational>;
pub type RationalBasis = GroebnerBasis<Rational>;
pub type RationalModel = SullivanModel<Rational>;
pub type RationalForm = CubicForm<Rational>;
pub type RationalSubspace = QuadricSubspace<Rational>;
