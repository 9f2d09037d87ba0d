//! Binary and ternary cubic forms: coefficient conversions, the associated
//! quadric subspace, ellipticity, real classification of binary forms and
//! Hesse-parameter recovery for ternary ones.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, is_regular_sequence};
use crate::linalg::{canonical_basis, Matrix};
use crate::poly::{Mono, Poly, PolyRing};
use crate::roots::{isolate_real_roots, squarefree_integer, RootInterval, UniPoly};
use crate::scalar::{Field, OrderedField};
use crate::Rational;

const FORM_VARS: [&str; 3] = ["x", "y", "z"];

/// Ring `x, y[, z]` used to display forms.
pub fn form_ring(dim: usize) -> Arc<PolyRing> {
    PolyRing::new(FORM_VARS[..dim].iter().copied()).expect("fixed names")
}

/// Ring `x1, .., xn` used for quadric relations among the basis of H^2.
pub fn quadric_ring(dim: usize) -> Arc<PolyRing> {
    PolyRing::new((1..=dim).map(|i| format!("x{i}"))).expect("fixed names")
}

fn multinomial(i: usize, j: usize, k: usize) -> i64 {
    if i == j && j == k {
        1
    } else if i == j || j == k || i == k {
        3
    } else {
        6
    }
}

/// Symmetric trilinear form F_ijk on a 2- or 3-dimensional space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicForm<F> {
    dim: usize,
    c: Vec<F>,
}

impl<F: Field> CubicForm<F> {
    pub fn zero(dim: usize) -> Result<Self> {
        if dim != 2 && dim != 3 {
            return Err(Error::DimensionMismatch { expected: 3, found: dim });
        }
        Ok(CubicForm { dim, c: vec![F::zero(); dim * dim * dim] })
    }

    /// Form from coefficients F_ijk (0-based indices, any order).
    pub fn from_coefficients(dim: usize, entries: impl IntoIterator<Item = (usize, usize, usize, F)>) -> Result<Self> {
        let mut f = Self::zero(dim)?;
        for (i, j, k, v) in entries {
            if i.max(j).max(k) >= dim {
                return Err(Error::DimensionMismatch { expected: dim, found: i.max(j).max(k) + 1 });
            }
            f.set(i, j, k, v);
        }
        Ok(f)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &F {
        &self.c[self.idx(i, j, k)]
    }

    /// Sets F_ijk and all its permutations.
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: F) {
        for (a, b, c) in [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
            let t = self.idx(a, b, c);
            self.c[t] = v.clone();
        }
    }

    /// Index triples i <= j <= k in lexicographic order.
    pub fn triples(&self) -> Vec<[usize; 3]> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    out.push([i, j, k]);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &F) -> Self {
        CubicForm { dim: self.dim, c: self.c.iter().map(|v| v.clone() * s.clone()).collect() }
    }

    /// The cubic polynomial Σ F_ijk x_i x_j x_k in `ring`.
    pub fn polynomial_in(&self, ring: &Arc<PolyRing>) -> Result<Poly<F>> {
        if ring.nvars() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: ring.nvars() });
        }
        let mut terms = Vec::new();
        for [i, j, k] in self.triples() {
            let mut e = vec![0; self.dim];
            e[i] += 1;
            e[j] += 1;
            e[k] += 1;
            terms.push((e, self.get(i, j, k).clone() * F::from_int(multinomial(i, j, k))));
        }
        Ok(Poly::from_terms(ring, terms))
    }

    pub fn polynomial(&self) -> Poly<F> {
        self.polynomial_in(&form_ring(self.dim)).expect("matching ring")
    }

    /// Inverse of [`CubicForm::polynomial_in`].
    pub fn form_of_polynomial(p: &Poly<F>) -> Result<Self> {
        let n = p.ring().nvars();
        let mut f = Self::zero(n)?;
        if !p.ring().is_standard_graded() {
            return Err(Error::Precondition("cubic forms need unit variable weights".into()));
        }
        if !p.is_zero() && p.homogeneous_degree() != Some(3) {
            return Err(Error::NonHomogeneous(format!("{p} is not a homogeneous cubic")));
        }
        for (m, c) in p.terms() {
            let mut idx = Vec::new();
            for (v, &e) in m.exponents().iter().enumerate() {
                idx.extend(std::iter::repeat_n(v, e as usize));
            }
            let v = c.clone() / F::from_int(multinomial(idx[0], idx[1], idx[2]));
            f.set(idx[0], idx[1], idx[2], v);
        }
        Ok(f)
    }

    /// The form of P(Mx).
    pub fn substitute(&self, m: &Matrix<F>) -> Result<Self> {
        let n = self.dim;
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: m.rows() });
        }
        if m.determinant()?.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let mut out = Self::zero(n)?;
        for [a, b, c] in self.triples() {
            let mut acc = F::zero();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let f = self.get(i, j, k);
                        if f.is_zero() {
                            continue;
                        }
                        acc = acc + f.clone() * m.get(i, a).clone() * m.get(j, b).clone() * m.get(k, c).clone();
                    }
                }
            }
            out.set(a, b, c, acc);
        }
        Ok(out)
    }

    /// Whether the two forms agree up to a nonzero scalar.
    pub fn is_proportional(&self, other: &Self) -> bool {
        if self.dim != other.dim || self.is_zero() != other.is_zero() {
            return false;
        }
        let Some(p) = (0..self.c.len()).find(|&i| !self.c[i].is_zero()) else {
            return true;
        };
        if other.c[p].is_zero() {
            return false;
        }
        let ratio = other.c[p].clone() / self.c[p].clone();
        self.c.iter().zip(&other.c).all(|(a, b)| a.clone() * ratio.clone() == *b)
    }

    /// Rows indexed by the quadric monomials x_i x_j (grevlex descending),
    /// columns by k; entry F_ijk.
    pub fn pairing_matrix(&self) -> Matrix<F> {
        let ring = quadric_ring(self.dim);
        let quads = ring.monomials_of_degree(2);
        let mut m = Matrix::zeros(quads.len(), self.dim);
        for (r, q) in quads.iter().enumerate() {
            let s = q.support();
            let (i, j) = if s.len() == 1 { (s[0], s[0]) } else { (s[0], s[1]) };
            for k in 0..self.dim {
                m.set(r, k, self.get(i, j, k).clone());
            }
        }
        m
    }

    pub fn pairing_rank(&self) -> usize {
        self.pairing_matrix().rank()
    }

    /// Quadrics f with Σ f_ij F_ijk = 0 for every k.
    pub fn associated_subspace(&self) -> Result<QuadricSubspace<F>> {
        if self.dim != 3 {
            return Err(Error::DimensionMismatch { expected: 3, found: self.dim });
        }
        let ring = quadric_ring(3);
        let kernel = self.pairing_matrix().transpose().kernel_basis();
        Ok(QuadricSubspace::from_coordinates(&ring, kernel))
    }

    /// Ellipticity of a cohomology ring with this cup form and b3 = 0.
    pub fn is_elliptic_form(&self, b2: usize) -> Result<EllipticVerdict> {
        if b2 != self.dim {
            return Err(Error::DimensionMismatch { expected: b2, found: self.dim });
        }
        if b2 == 2 {
            let r = self.pairing_rank();
            return Ok(EllipticVerdict {
                elliptic: r == 2,
                reason: format!("H^2 generates H^4 iff the pairing rank is 2; rank {r}"),
            });
        }
        let w = self.associated_subspace()?;
        if w.dim() != 3 {
            return Ok(EllipticVerdict {
                elliptic: false,
                reason: format!("associated quadric subspace has dimension {}", w.dim()),
            });
        }
        let regular = w.is_regular()?;
        Ok(EllipticVerdict {
            elliptic: regular,
            reason: if regular {
                "associated quadrics form a regular sequence".into()
            } else {
                "associated quadrics do not form a regular sequence".into()
            },
        })
    }

    /// Whether the ternary form has a singular point over the algebraic
    /// closure, i.e. its partials have a common nonzero zero.
    pub fn is_singular_ternary(&self) -> Result<bool> {
        if self.dim != 3 {
            return Err(Error::DimensionMismatch { expected: 3, found: self.dim });
        }
        if self.is_zero() {
            return Err(Error::Precondition("zero form".into()));
        }
        let p = self.polynomial();
        let grads: Vec<Poly<F>> = (0..3).map(|v| p.derivative(v)).collect();
        Ok(!buchberger(p.ring(), &grads)?.is_finite_dimensional())
    }

    fn require_binary(&self) -> Result<()> {
        if self.dim != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: self.dim });
        }
        Ok(())
    }

    /// (F111 F222 − F112 F122, F111 F122 − F112², F112 F222 − F122²).
    pub fn wall_invariants(&self) -> Result<[F; 3]> {
        self.require_binary()?;
        let f = |i, j, k| self.get(i, j, k).clone();
        Ok([
            f(0, 0, 0) * f(1, 1, 1) - f(0, 0, 1) * f(0, 1, 1),
            f(0, 0, 0) * f(0, 1, 1) - f(0, 0, 1) * f(0, 0, 1),
            f(0, 0, 1) * f(1, 1, 1) - f(0, 1, 1) * f(0, 1, 1),
        ])
    }

    /// Discriminant of a x³ + b x²y + c xy² + d y³.
    pub fn binary_discriminant(&self) -> Result<F> {
        self.require_binary()?;
        let a = self.get(0, 0, 0).clone();
        let b = self.get(0, 0, 1).clone() * F::from_int(3);
        let c = self.get(0, 1, 1).clone() * F::from_int(3);
        let d = self.get(1, 1, 1).clone();
        let i = F::from_int;
        Ok(b.clone() * b.clone() * c.clone() * c.clone()
            - i(4) * a.clone() * c.clone() * c.clone() * c.clone()
            - i(4) * b.clone() * b.clone() * b.clone() * d.clone()
            - i(27) * a.clone() * a.clone() * d.clone() * d.clone()
            + i(18) * a * b * c * d)
    }

    /// Contraction of copies of the form along ε-brackets; `brackets` lists
    /// the symbols in each bracket and every symbol must occur three times.
    fn bracket_contraction(&self, brackets: &[[usize; 3]], nsym: usize) -> F {
        const PERMS: [([usize; 3], bool); 6] = [
            ([0, 1, 2], false),
            ([1, 2, 0], false),
            ([2, 0, 1], false),
            ([0, 2, 1], true),
            ([2, 1, 0], true),
            ([1, 0, 2], true),
        ];
        let mut occurrences = vec![0usize; nsym];
        for b in brackets {
            for &s in b {
                occurrences[s] += 1;
            }
        }
        assert!(occurrences.iter().all(|&c| c == 3), "each symbol must occur three times");

        fn rec<F: Field>(
            form: &CubicForm<F>,
            brackets: &[[usize; 3]],
            t: usize,
            slots: &mut Vec<Vec<usize>>,
            acc: F,
            total: &mut F,
        ) {
            if t == brackets.len() {
                *total = total.clone() + acc;
                return;
            }
            for (perm, odd) in PERMS {
                let mut value = if odd { -acc.clone() } else { acc.clone() };
                for (pos, &sym) in brackets[t].iter().enumerate() {
                    slots[sym].push(perm[pos]);
                }
                // symbols within one bracket are distinct, so each completes once
                let mut dead = false;
                for &sym in &brackets[t] {
                    let sl = &slots[sym];
                    if sl.len() == 3 {
                        let f = form.get(sl[0], sl[1], sl[2]);
                        if f.is_zero() {
                            dead = true;
                            break;
                        }
                        value = value * f.clone();
                    }
                }
                if !dead {
                    rec(form, brackets, t + 1, slots, value, total);
                }
                for &sym in brackets[t].iter().rev() {
                    slots[sym].pop();
                }
            }
        }

        let mut total = F::zero();
        let mut slots = vec![Vec::new(); nsym];
        rec(self, brackets, 0, &mut slots, F::one(), &mut total);
        total
    }

    /// Degree-4 invariant (abc)(abd)(acd)(bcd) in symbolic notation.
    pub fn aronhold_s(&self) -> Result<F> {
        if self.dim != 3 {
            return Err(Error::DimensionMismatch { expected: 3, found: self.dim });
        }
        Ok(self.bracket_contraction(&[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]], 4))
    }

    /// Degree-6 invariant (abc)(abd)(ace)(bcf)(def)² in symbolic notation.
    pub fn aronhold_t(&self) -> Result<F> {
        if self.dim != 3 {
            return Err(Error::DimensionMismatch { expected: 3, found: self.dim });
        }
        Ok(self.bracket_contraction(&[[0, 1, 2], [0, 1, 3], [0, 2, 4], [1, 2, 5], [3, 4, 5], [3, 4, 5]], 6))
    }

    /// The Hesse form x³ + y³ + z³ + 6σ xyz.
    pub fn hesse(sigma: F) -> Self {
        let mut f = Self::zero(3).expect("dimension 3");
        for i in 0..3 {
            f.set(i, i, i, F::one());
        }
        f.set(0, 1, 2, sigma);
        f
    }
}

impl<F: OrderedField> CubicForm<F> {
    pub fn binary_classify(&self) -> Result<BinaryClass> {
        self.require_binary()?;
        if self.is_zero() {
            return Ok(BinaryClass::Zero);
        }
        if self.wall_invariants()?.iter().all(Zero::is_zero) {
            return Ok(BinaryClass::Cube);
        }
        let disc = self.binary_discriminant()?;
        Ok(if disc.is_zero() {
            BinaryClass::SquareTimesLine
        } else if disc.is_negative() {
            BinaryClass::OneRealRoot
        } else {
            BinaryClass::ThreeRealRoots
        })
    }
}

impl<F: Field> fmt::Display for CubicForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.polynomial())
    }
}

/// Interpolated Aronhold invariants of the Hesse family, as polynomials in σ.
fn hesse_invariants() -> &'static (UniPoly, UniPoly) {
    static CELL: OnceLock<(UniPoly, UniPoly)> = OnceLock::new();
    CELL.get_or_init(|| {
        let sample = |n: i64, f: &dyn Fn(&CubicForm<Rational>) -> Rational| -> UniPoly {
            let pts: Vec<(Rational, Rational)> = (0..n)
                .map(|i| {
                    let s = Rational::from_integer(BigInt::from(i));
                    let v = f(&CubicForm::hesse(s.clone()));
                    (s, v)
                })
                .collect();
            lagrange(&pts)
        };
        let s = sample(5, &|h| h.aronhold_s().expect("ternary"));
        let t = sample(7, &|h| h.aronhold_t().expect("ternary"));
        (s, t)
    })
}

fn lagrange(pts: &[(Rational, Rational)]) -> UniPoly {
    let mut out = UniPoly::new(Vec::new());
    for (i, (xi, yi)) in pts.iter().enumerate() {
        let mut basis = UniPoly::new(vec![Rational::one()]);
        let mut denom = Rational::one();
        for (j, (xj, _)) in pts.iter().enumerate() {
            if i != j {
                basis = basis.mul(&UniPoly::new(vec![-xj.clone(), Rational::one()]));
                denom *= xi - xj;
            }
        }
        out = out.add(&basis.scale(&(yi / denom)));
    }
    out
}

/// Aronhold S and T of x³ + y³ + z³ + 6σ xyz as polynomials in σ.
pub fn hesse_family_invariants() -> (UniPoly, UniPoly) {
    hesse_invariants().clone()
}

impl CubicForm<Rational> {
    /// Integer coefficients with content 1 and the first nonzero F_ijk
    /// (lexicographic) positive.
    pub fn canonical(&self) -> Self {
        let Some(first) = self.triples().into_iter().find(|t| !self.get(t[0], t[1], t[2]).is_zero()) else {
            return self.clone();
        };
        let mut lcm = BigInt::one();
        for v in &self.c {
            lcm = lcm.lcm(v.denom());
        }
        let mut gcd = BigInt::zero();
        for v in &self.c {
            gcd = gcd.gcd(&(v * Rational::from_integer(lcm.clone())).to_integer());
        }
        let mut s = Rational::new(lcm, gcd);
        if self.get(first[0], first[1], first[2]).is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    /// Real roots σ ≠ −1/2 at which the Hesse form has the same absolute
    /// invariant S³ : T² as `self`, isolated to width `tolerance`.
    pub fn hesse_sigma_candidates(&self, tolerance: f64) -> Result<Vec<RootInterval>> {
        if self.is_singular_ternary()? {
            return Err(Error::SingularForm);
        }
        let tol = Rational::from_float(tolerance)
            .filter(|t| t.is_positive())
            .ok_or_else(|| Error::Precondition(format!("tolerance {tolerance} must be positive")))?;
        let s = self.aronhold_s()?;
        let t = self.aronhold_t()?;
        let (hs, ht) = hesse_invariants();
        let lhs = ht.pow(2).scale(&(&s * &s * &s));
        let rhs = hs.pow(3).scale(&(&t * &t));
        let eq = lhs.add(&rhs.scale(&-Rational::one()));
        if eq.is_zero() {
            return Err(Error::SingularForm);
        }
        let excluded = Rational::new(BigInt::from(-1), BigInt::from(2));
        Ok(isolate_real_roots(&eq, &tol).into_iter().filter(|r| !(r.exact && r.lo == excluded)).collect())
    }
}

/// Signed squarefree integer representing the class of `q` in ℚ*/(ℚ*)².
pub fn squarefree_part(q: &Rational) -> Result<BigInt> {
    if q.is_zero() {
        return Err(Error::ZeroSquareClass);
    }
    Ok(squarefree_integer(&(q.numer() * q.denom())))
}

/// Real equivalence classes of binary cubic forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum BinaryClass {
    Zero,
    Cube,
    SquareTimesLine,
    OneRealRoot,
    ThreeRealRoots,
}

impl BinaryClass {
    pub fn normal_form(&self) -> &'static str {
        match self {
            BinaryClass::Zero => "0",
            BinaryClass::Cube => "x^3",
            BinaryClass::SquareTimesLine => "x^2*y",
            BinaryClass::OneRealRoot => "x^3 + y^3",
            BinaryClass::ThreeRealRoots => "x^2*y - x*y^2",
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            BinaryClass::Zero => "zero",
            BinaryClass::Cube => "cube",
            BinaryClass::SquareTimesLine => "square times line",
            BinaryClass::OneRealRoot => "one real root",
            BinaryClass::ThreeRealRoots => "three real roots",
        }
    }
}

impl fmt::Display for BinaryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.normal_form())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct EllipticVerdict {
    pub elliptic: bool,
    pub reason: String,
}

/// A subspace of quadrics, stored as the reduced echelon basis of its
/// coordinate vectors against the descending monomial list.
#[derive(Debug, Clone)]
pub struct QuadricSubspace<F> {
    ring: Arc<PolyRing>,
    basis: Vec<Poly<F>>,
}

impl<F: Field> PartialEq for QuadricSubspace<F> {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.basis == other.basis
    }
}

impl<F: Field> Eq for QuadricSubspace<F> {}

impl<F: Field> QuadricSubspace<F> {
    fn monomials(ring: &PolyRing) -> Vec<Mono> {
        ring.monomials_of_degree(2)
    }

    fn from_coordinates(ring: &Arc<PolyRing>, coords: Vec<Vec<F>>) -> Self {
        let mons = Self::monomials(ring);
        let basis = canonical_basis(&coords).iter().map(|v| Poly::from_coordinates(ring, &mons, v)).collect();
        QuadricSubspace { ring: ring.clone(), basis }
    }

    /// Span of homogeneous quadrics.
    pub fn span(ring: &Arc<PolyRing>, polys: &[Poly<F>]) -> Result<Self> {
        if !ring.is_standard_graded() {
            return Err(Error::Precondition("quadric subspaces need unit variable weights".into()));
        }
        let mons = Self::monomials(ring);
        let mut coords = Vec::new();
        for p in polys {
            if **p.ring() != **ring {
                return Err(Error::RingMismatch);
            }
            if p.is_zero() {
                continue;
            }
            let v = p
                .coordinates(&mons)
                .ok_or_else(|| Error::NonHomogeneous(format!("{p} is not a homogeneous quadric")))?;
            coords.push(v);
        }
        Ok(Self::from_coordinates(ring, coords))
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn basis(&self) -> &[Poly<F>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, p: &Poly<F>) -> bool {
        match Self::span(&self.ring, std::slice::from_ref(p)) {
            Ok(single) if single.dim() == 0 => true,
            Ok(_) => {
                let mut all = self.basis.clone();
                all.push(p.clone());
                Self::span(&self.ring, &all).map(|s| s.dim() == self.dim()).unwrap_or(false)
            }
            Err(_) => false,
        }
    }

    /// The subspace {f(Mx) : f in self}.
    pub fn substitute(&self, m: &Matrix<F>) -> Result<Self> {
        let n = self.ring.nvars();
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: m.rows() });
        }
        let images: Vec<Poly<F>> = (0..n)
            .map(|i| {
                let mut p = Poly::zero(&self.ring);
                for j in 0..n {
                    p = &p + &Poly::var(&self.ring, j).scale(m.get(i, j));
                }
                p
            })
            .collect();
        let polys = self
            .basis
            .iter()
            .map(|f| f.substitute(&self.ring, &images))
            .collect::<Result<Vec<_>>>()?;
        Self::span(&self.ring, &polys)
    }

    pub fn is_regular(&self) -> Result<bool> {
        is_regular_sequence(&self.basis, &self.ring)
    }

    /// The cubic form of the Poincaré-duality ring R/(W), for W three
    /// quadrics in three variables with Hilbert function (1, 3, 3, 1).
    pub fn cubic_form(&self) -> Result<CubicForm<F>> {
        let n = self.ring.nvars();
        if n != 3 {
            return Err(Error::DimensionMismatch { expected: 3, found: n });
        }
        let gb = buchberger(&self.ring, &self.basis)?;
        let hf = gb.hilbert_function(4);
        if hf != [1, 3, 3, 1, 0] {
            return Err(Error::HilbertProfile(hf));
        }
        let top = gb.standard_monomials(3).remove(0);
        let mut form = CubicForm::zero(3)?;
        for [i, j, k] in form.triples() {
            let mut e = vec![0; 3];
            e[i] += 1;
            e[j] += 1;
            e[k] += 1;
            let nf = gb.normal_form(&Poly::monomial(&self.ring, e, F::one()));
            form.set(i, j, k, nf.coefficient(top.exponents()));
        }
        Ok(form)
    }
}

impl<F: Field> fmt::Display for QuadricSubspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.basis.iter().map(|p| p.to_string()).collect();
        write!(f, "span{{{}}}", parts.join(", "))
    }
}

/// Free-function form of [`QuadricSubspace::cubic_form`].
pub fn cubic_form_of_quadric_ideal<F: Field>(w: &QuadricSubspace<F>) -> Result<CubicForm<F>> {
    w.cubic_form()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};
    use crate::RationalPoly as P;

    type Form = CubicForm<Rational>;

    fn parse3(terms: &[(i64, [u32; 3])]) -> Form {
        let r = form_ring(3);
        let p = P::from_terms(&r, terms.iter().map(|(c, e)| (e.to_vec(), q(*c))));
        Form::form_of_polynomial(&p).unwrap()
    }

    fn parse2(terms: &[(i64, [u32; 2])]) -> Form {
        let r = form_ring(2);
        let p = P::from_terms(&r, terms.iter().map(|(c, e)| (e.to_vec(), q(*c))));
        Form::form_of_polynomial(&p).unwrap()
    }

    #[test]
    fn multinomial_normalization() {
        let xyz = parse3(&[(1, [1, 1, 1])]);
        assert_eq!(*xyz.get(0, 1, 2), qf(1, 6));
        assert_eq!(*xyz.get(2, 1, 0), qf(1, 6));
        let x2y = parse3(&[(1, [2, 1, 0])]);
        assert_eq!(*x2y.get(0, 0, 1), qf(1, 3));
        assert_eq!(x2y.polynomial().to_string(), "x^2*y");
    }

    #[test]
    fn pairing_ranks() {
        assert_eq!(parse2(&[(1, [2, 1])]).pairing_rank(), 2);
        assert_eq!(parse2(&[(1, [3, 0])]).pairing_rank(), 1);
        assert_eq!(parse3(&[(1, [1, 1, 1])]).pairing_rank(), 3);
    }

    #[test]
    fn associated_subspaces() {
        let r = quadric_ring(3);
        let x: Vec<P> = (0..3).map(|i| P::var(&r, i)).collect();
        let w = parse3(&[(1, [1, 1, 1])]).associated_subspace().unwrap();
        let want = QuadricSubspace::span(&r, &[&x[0] * &x[0], &x[1] * &x[1], &x[2] * &x[2]]).unwrap();
        assert_eq!(w, want);
        let fermat = parse3(&[(1, [3, 0, 0]), (1, [0, 3, 0]), (1, [0, 0, 3])]);
        let want = QuadricSubspace::span(&r, &[&x[0] * &x[1], &x[0] * &x[2], &x[1] * &x[2]]).unwrap();
        assert_eq!(fermat.associated_subspace().unwrap(), want);
        assert!(!fermat.is_elliptic_form(3).unwrap().elliptic);
    }

    #[test]
    fn binary_classes() {
        assert_eq!(parse2(&[(1, [3, 0]), (1, [0, 3])]).binary_classify().unwrap(), BinaryClass::OneRealRoot);
        assert_eq!(parse2(&[(1, [2, 1]), (-1, [1, 2])]).binary_classify().unwrap(), BinaryClass::ThreeRealRoots);
        assert_eq!(parse2(&[(8, [3, 0])]).binary_classify().unwrap(), BinaryClass::Cube);
        assert_eq!(parse2(&[(1, [2, 1])]).binary_classify().unwrap(), BinaryClass::SquareTimesLine);
        assert_eq!(Form::zero(2).unwrap().binary_classify().unwrap(), BinaryClass::Zero);
    }

    #[test]
    fn wall_invariant_examples() {
        assert_eq!(parse2(&[(1, [3, 0])]).wall_invariants().unwrap(), [q(0), q(0), q(0)]);
        assert_eq!(parse2(&[(1, [3, 0]), (1, [0, 3])]).wall_invariants().unwrap(), [q(1), q(0), q(0)]);
    }

    #[test]
    fn singularity() {
        let cusp = Form::hesse(qf(-1, 2));
        assert!(cusp.is_singular_ternary().unwrap());
        assert!(!Form::hesse(q(0)).is_singular_ternary().unwrap());
        assert!(Form::zero(3).unwrap().is_singular_ternary().is_err());
    }

    #[test]
    fn hesse_invariant_shapes() {
        let (s, t) = hesse_family_invariants();
        // S ∝ σ − σ⁴, T ∝ 1 − 20σ³ − 8σ⁶
        let sc = s.coeffs();
        assert_eq!(sc.len(), 5);
        assert!(sc[0].is_zero() && sc[2].is_zero() && sc[3].is_zero());
        assert_eq!(&sc[4], &-sc[1].clone());
        let tc = t.coeffs();
        assert_eq!(tc.len(), 7);
        assert_eq!(tc[3], &tc[0] * q(-20));
        assert_eq!(tc[6], &tc[0] * q(-8));
        // the discriminant combination vanishes at σ = −1/2
        let h = qf(-1, 2);
        let (sv, tv) = (s.eval(&h), t.eval(&h));
        let ratio = (&tv * &tv) / (&sv * &sv * &sv);
        let f = Form::hesse(h);
        let (fs, ft) = (f.aronhold_s().unwrap(), f.aronhold_t().unwrap());
        assert_eq!((&ft * &ft) / (&fs * &fs * &fs), ratio);
    }

    #[test]
    fn sigma_recovery() {
        for s in [q(2), qf(1, 2), qf(-3, 7)] {
            let roots = Form::hesse(s.clone()).hesse_sigma_candidates(1e-6).unwrap();
            assert!(roots.iter().any(|r| r.exact && r.lo == s), "{s}: {roots:?}");
        }
    }

    #[test]
    fn canonical_scaling() {
        let f = parse3(&[(-2, [3, 0, 0]), (4, [1, 1, 1])]);
        let c = f.canonical();
        assert_eq!(*c.get(0, 0, 0), q(3));
        assert_eq!(*c.get(0, 1, 2), q(-1));
    }

    #[test]
    fn squarefree_classes() {
        assert_eq!(squarefree_part(&q(8)).unwrap(), BigInt::from(2));
        assert_eq!(squarefree_part(&qf(-4, 9)).unwrap(), BigInt::from(-1));
        assert_eq!(squarefree_part(&qf(1, 2)).unwrap(), BigInt::from(2));
        assert!(squarefree_part(&q(0)).is_err());
    }

    #[test]
    fn ideal_to_form() {
        let r = quadric_ring(3);
        let x: Vec<P> = (0..3).map(|i| P::var(&r, i)).collect();
        let w = QuadricSubspace::span(&r, &[&x[0] * &x[0], &x[1] * &x[1], &x[2] * &x[2]]).unwrap();
        assert!(w.cubic_form().unwrap().is_proportional(&parse3(&[(1, [1, 1, 1])])));
        let bad = QuadricSubspace::span(&r, &[&x[0] * &x[1], &x[0] * &x[2], &x[1] * &x[2]]).unwrap();
        assert!(matches!(bad.cubic_form(), Err(Error::HilbertProfile(_))));
    }
}
