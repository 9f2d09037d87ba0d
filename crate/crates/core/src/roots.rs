//! Univariate rational polynomials and exact real-root isolation by Sturm
//! sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Dense coefficients, constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &Rational {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.0.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(BigInt::from(i))).collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let z = Rational::zero();
        UniPoly::new((0..n).map(|i| self.0.get(i).unwrap_or(&z) + other.0.get(i).unwrap_or(&z)).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UniPoly::new(self.0.iter().map(|v| v * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = UniPoly::new(vec![Rational::one()]);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut r = self.0.clone();
        let mut q = vec![Rational::zero(); self.0.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let c = r.last().unwrap() / d.lead();
            for (i, dc) in d.0.iter().enumerate() {
                r[shift + i] -= &c * dc;
            }
            q[shift] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Rational::one() / self.lead()))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// p / gcd(p, p').
    pub fn squarefree(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Sturm chain of a squarefree polynomial.
    pub fn sturm_chain(&self) -> Vec<UniPoly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(r.scale(&-Rational::one()));
        }
        chain
    }

    /// Bound on the absolute value of all roots (Cauchy).
    pub fn root_bound(&self) -> Rational {
        let lead = self.lead().abs();
        let m = self.0[..self.0.len() - 1].iter().map(|c| c.abs() / &lead).fold(Rational::zero(), |a, b| a.max(b));
        m + Rational::one()
    }
}

fn sign_changes(chain: &[UniPoly], x: &Rational) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|p| {
            let v = p.eval(x);
            if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            }
        })
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// The rational with smallest denominator (then numerator) in `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    // continued-fraction descent for 0 < lo <= hi
    let fl = lo.floor();
    if fl < *lo {
        if fl.clone() + Rational::one() <= *hi {
            return fl + Rational::one();
        }
    } else {
        return fl;
    }
    let lo_frac = lo - &fl;
    let hi_frac = hi - &fl;
    let inner = simplest_between(&(Rational::one() / hi_frac), &(Rational::one() / lo_frac));
    fl + Rational::one() / inner
}

/// A real root: either known exactly or bracketed in `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub exact: bool,
}

impl RootInterval {
    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

/// Isolates every real root of `p` (nonzero) to width at most `tol`,
/// recognizing exact rational roots along the way. Sorted ascending.
pub fn isolate_real_roots(p: &UniPoly, tol: &Rational) -> Vec<RootInterval> {
    let sf = p.squarefree();
    if sf.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let chain = sf.sturm_chain();
    let bound = sf.root_bound();
    let mut out = Vec::new();
    // intervals (lo, hi] holding exactly the counted roots
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = sign_changes(&chain, &lo) - sign_changes(&chain, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push(refine(&sf, lo, hi, tol));
            continue;
        }
        let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

fn refine(p: &UniPoly, mut lo: Rational, mut hi: Rational, tol: &Rational) -> RootInterval {
    // the root lies in (lo, hi]; p changes sign only there
    let hi_sign = p.eval(&hi).signum();
    if hi_sign.is_zero() {
        return RootInterval { lo: hi.clone(), hi, exact: true };
    }
    let two = Rational::from_integer(BigInt::from(2));
    loop {
        let s = simplest_between(&lo, &hi);
        if s > lo && p.eval(&s).is_zero() {
            return RootInterval { lo: s.clone(), hi: s, exact: true };
        }
        if &hi - &lo <= *tol {
            return RootInterval { lo, hi, exact: false };
        }
        let mid = (&lo + &hi) / &two;
        let v = p.eval(&mid);
        if v.is_zero() {
            return RootInterval { lo: mid.clone(), hi: mid, exact: true };
        }
        if v.signum() == hi_sign {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Squarefree integer in the class of a nonzero integer.
pub fn squarefree_integer(n: &BigInt) -> BigInt {
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut m = n.abs();
    let mut out = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let mut e = 0;
        while m.is_multiple_of(&p) {
            m /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1;
    }
    out * m * sign
}
