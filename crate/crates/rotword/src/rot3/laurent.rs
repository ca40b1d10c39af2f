//! Laurent polynomials over the Gaussian rationals.
//!
//! For an x-rotation through a formally transcendental angle ω, matrix
//! entries are honest Laurent polynomials in x = e^{iω}: nothing ever
//! collapses, and a nonzero leading term of positive degree is a proof that
//! a product is not the identity.

use super::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A Gaussian rational re + im·i.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "({}{}i)", self.re, self.im)
        } else {
            write!(f, "({}+{}i)", self.re, self.im)
        }
    }
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    /// (rn/rd) + (in_/id)·i from machine integers.
    pub fn new_i64(rn: i64, rd: i64, in_: i64, id: i64) -> Self {
        GaussRat {
            re: BigRational::new(BigInt::from(rn), BigInt::from(rd)),
            im: BigRational::new(BigInt::from(in_), BigInt::from(id)),
        }
    }

    pub fn zero() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussRat {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        GaussRat {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        GaussRat {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    pub fn neg(&self) -> Self {
        GaussRat {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

/// Σ coeff·x^degree with Gaussian-rational coefficients; zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentGaussian {
    terms: BTreeMap<i64, GaussRat>,
}

impl fmt::Debug for LaurentGaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentGaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match deg {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                d => write!(f, "{c}*x^{d}")?,
            }
        }
        Ok(())
    }
}

impl LaurentGaussian {
    pub fn zero() -> Self {
        LaurentGaussian {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, GaussRat::one())
    }

    pub fn from_integer(n: i64) -> Self {
        if n == 0 {
            Self::zero()
        } else {
            Self::monomial(0, GaussRat::new_i64(n, 1, 0, 1))
        }
    }

    pub fn monomial(degree: i64, coeff: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(degree, coeff);
        }
        LaurentGaussian { terms }
    }

    /// (x^c + x^{-c})/2, the formal cosine of cω.
    pub fn formal_cos(c: i64) -> Self {
        if c == 0 {
            return Self::one();
        }
        let half = GaussRat::new_i64(1, 2, 0, 1);
        let mut terms = BTreeMap::new();
        terms.insert(c, half.clone());
        terms.insert(-c, half);
        LaurentGaussian { terms }
    }

    /// (x^c - x^{-c})/2i, the formal sine of cω.
    pub fn formal_sin(c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut terms = BTreeMap::new();
        terms.insert(c, GaussRat::new_i64(0, 1, -1, 2));
        terms.insert(-c, GaussRat::new_i64(0, 1, 1, 2));
        LaurentGaussian { terms }
    }

    /// Highest-degree term.
    pub fn leading(&self) -> Option<(i64, GaussRat)> {
        self.terms
            .iter()
            .next_back()
            .map(|(d, c)| (*d, c.clone()))
    }

    pub fn lowest(&self) -> Option<(i64, GaussRat)> {
        self.terms.iter().next().map(|(d, c)| (*d, c.clone()))
    }

    pub fn coeff(&self, degree: i64) -> GaussRat {
        self.terms.get(&degree).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }
}

impl Scalar for LaurentGaussian {
    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (d, c) in &other.terms {
            let entry = terms.entry(*d).or_insert_with(GaussRat::zero);
            *entry = entry.add(c);
            if entry.is_zero() {
                terms.remove(d);
            }
        }
        LaurentGaussian { terms }
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&Scalar::neg(other))
    }

    fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<i64, GaussRat> = BTreeMap::new();
        for (da, ca) in &self.terms {
            for (db, cb) in &other.terms {
                let d = da + db;
                let prod = ca.mul(cb);
                let entry = terms.entry(d).or_insert_with(GaussRat::zero);
                *entry = entry.add(&prod);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentGaussian { terms }
    }

    fn neg(&self) -> Self {
        LaurentGaussian {
            terms: self.terms.iter().map(|(d, c)| (*d, c.neg())).collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }
}
