//! Cyclotomic integer arithmetic in the power basis.
//!
//! Elements of Z[x], x a primitive m-th root of unity, are stored as
//! coefficient vectors of length deg Φ_m = φ(m) and reduced modulo the m-th
//! cyclotomic polynomial. [`CycloNum`] adjoins a power-of-two denominator,
//! which is all a rotation matrix through 2πa/m ever needs. The [`gf2`]
//! submodule maps these rings onto small characteristic-2 fields; those
//! residues are what the certificate machinery consumes.
//!
//! Conductors are explicit everywhere. Arithmetic between different
//! conductors is a programming error and panics; value-preserving promotion
//! into a larger ring is [`CycloInt::promote_to`].

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};
use thiserror::Error;

pub mod gf2;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycloError {
    #[error("conductor mismatch: {left} vs {right}")]
    ConductorMismatch { left: u64, right: u64 },
    #[error("element is not integral: denominator 2^{two_exp}")]
    NotIntegral { two_exp: u32 },
    #[error("conductor must be at least 1, got {m}")]
    BadConductor { m: u64 },
    #[error("{0} does not divide {1}, cannot promote")]
    BadPromotion(u64, u64),
}

/// Euler's totient.
pub fn phi(m: u64) -> u64 {
    assert!(m >= 1, "phi needs m >= 1");
    let mut result = m;
    for (p, _) in factorize(m) {
        result = result / p * (p - 1);
    }
    result
}

/// Prime factorization by trial division, ascending, as (prime, exponent).
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    assert!(m >= 1, "factorize needs m >= 1");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Divisors of m, ascending.
pub fn divisors(m: u64) -> Vec<u64> {
    assert!(m >= 1);
    let mut out = vec![1u64];
    for (p, e) in factorize(m) {
        let prev = out.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// Inverse of a modulo n (n >= 1, gcd(a, n) = 1). Returns 0 when n = 1.
pub fn mod_inverse(a: u64, n: u64) -> u64 {
    assert!(n >= 1);
    if n == 1 {
        return 0;
    }
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    assert!(r0 == 1, "{a} is not invertible mod {n}");
    s0.rem_euclid(n as i128) as u64
}

fn poly_trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Exact division of integer polynomials (divisor monic); panics on a
/// nonzero remainder. Coefficients ascending.
fn poly_exact_div(mut num: Vec<BigInt>, den: &[BigInt]) -> Vec<BigInt> {
    poly_trim(&mut num);
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    if num.is_empty() {
        return num;
    }
    assert!(num.len() > dd, "degree too small for exact division");
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = num[k + dd].clone();
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                num[k + j] -= &c * dj;
            }
        }
        quot[k] = c;
    }
    assert!(num.iter().all(|c| c.is_zero()), "division was not exact");
    quot
}

static CYCLO_POLY_CACHE: Lazy<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Coefficients of the m-th cyclotomic polynomial, ascending, monic,
/// length φ(m) + 1. Computed by exact division of X^m - 1 by all proper
/// cyclotomic factors; results are cached per conductor.
pub fn cyclotomic_poly(m: u64) -> Arc<Vec<BigInt>> {
    assert!(m >= 1, "conductor must be at least 1");
    if let Some(hit) = CYCLO_POLY_CACHE.lock().unwrap().get(&m) {
        return hit.clone();
    }
    // X^m - 1
    let mut poly = vec![BigInt::zero(); m as usize + 1];
    poly[0] = -BigInt::one();
    poly[m as usize] = BigInt::one();
    for d in divisors(m) {
        if d < m {
            let fd = cyclotomic_poly(d);
            poly = poly_exact_div(poly, &fd);
        }
    }
    assert_eq!(poly.len() as u64, phi(m) + 1);
    let arc = Arc::new(poly);
    CYCLO_POLY_CACHE
        .lock()
        .unwrap()
        .insert(m, arc.clone());
    arc
}

/// Shared per-conductor context: the modulus and the substitution row for
/// x^φ, precomputed once and cached behind an Arc.
#[derive(Debug)]
pub struct CycloRing {
    m: u64,
    degree: usize,
    modulus: Arc<Vec<BigInt>>,
    // x^degree = Σ neg_tail[j] x^j
    neg_tail: Vec<BigInt>,
}

static RING_CACHE: Lazy<Mutex<HashMap<u64, Arc<CycloRing>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The cached ring context for conductor m.
pub fn ring(m: u64) -> Arc<CycloRing> {
    assert!(m >= 1, "conductor must be at least 1");
    if let Some(hit) = RING_CACHE.lock().unwrap().get(&m) {
        return hit.clone();
    }
    let modulus = cyclotomic_poly(m);
    let degree = modulus.len() - 1;
    let neg_tail: Vec<BigInt> = modulus[..degree].iter().map(|c| -c).collect();
    let arc = Arc::new(CycloRing {
        m,
        degree,
        modulus,
        neg_tail,
    });
    RING_CACHE.lock().unwrap().insert(m, arc.clone());
    arc
}

impl CycloRing {
    pub fn conductor(&self) -> u64 {
        self.m
    }

    /// deg Φ_m = φ(m); the power-basis length.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Reduce an arbitrary-degree coefficient buffer into the power basis.
    fn reduce(&self, mut buf: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree;
        for k in (d..buf.len()).rev() {
            if buf[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut buf[k], BigInt::zero());
            let base = k - d;
            for (j, t) in self.neg_tail.iter().enumerate() {
                if !t.is_zero() {
                    buf[base + j] += &c * t;
                }
            }
        }
        buf.truncate(d.max(1).min(buf.len()));
        buf.resize(d, BigInt::zero());
        buf
    }
}

/// A cyclotomic integer at a fixed conductor, in the power basis.
#[derive(Clone)]
pub struct CycloInt {
    ring: Arc<CycloRing>,
    c: Vec<BigInt>,
}

impl PartialEq for CycloInt {
    fn eq(&self, other: &Self) -> bool {
        self.ring.m == other.ring.m && self.c == other.c
    }
}
impl Eq for CycloInt {}

impl std::hash::Hash for CycloInt {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ring.m.hash(state);
        self.c.hash(state);
    }
}

impl fmt::Debug for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloInt(m={}, {})", self.ring.m, self)
    }
}

impl fmt::Display for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (j, cj) in self.c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            let mag = cj.abs();
            if wrote {
                write!(f, " {} ", if cj.is_negative() { "-" } else { "+" })?;
            } else if cj.is_negative() {
                write!(f, "-")?;
            }
            if j == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if j == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{j}")?;
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl CycloInt {
    fn from_ring(ring: Arc<CycloRing>, c: Vec<BigInt>) -> Self {
        debug_assert_eq!(c.len(), ring.degree);
        CycloInt { ring, c }
    }

    pub fn zero(m: u64) -> Self {
        let r = ring(m);
        let d = r.degree;
        CycloInt::from_ring(r, vec![BigInt::zero(); d])
    }

    pub fn one(m: u64) -> Self {
        CycloInt::from_integer(m, BigInt::one())
    }

    pub fn from_integer(m: u64, n: BigInt) -> Self {
        let r = ring(m);
        let d = r.degree;
        let mut c = vec![BigInt::zero(); d];
        // Conductor 1 has degree 1 with modulus X - 1, so constants still
        // occupy coefficient 0.
        c[0] = n;
        CycloInt::from_ring(r, c)
    }

    /// x^a, exponent taken modulo m.
    pub fn root_power(m: u64, a: i64) -> Self {
        let r = ring(m);
        let e = a.rem_euclid(m as i64) as usize;
        let mut buf = vec![BigInt::zero(); e + 1];
        buf[e] = BigInt::one();
        let c = r.reduce(buf);
        CycloInt::from_ring(r, c)
    }

    pub fn conductor(&self) -> u64 {
        self.ring.m
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|c| c.is_zero())
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.ring.m, other.ring.m,
            "conductor mismatch: {} vs {}",
            self.ring.m, other.ring.m
        );
    }

    /// Multiply by x^a: a sparse shift-and-reduce.
    pub fn mul_root_power(&self, a: i64) -> Self {
        let e = a.rem_euclid(self.ring.m as i64) as usize;
        let mut buf = vec![BigInt::zero(); self.c.len() + e];
        for (j, cj) in self.c.iter().enumerate() {
            if !cj.is_zero() {
                buf[j + e] = cj.clone();
            }
        }
        let c = self.ring.reduce(buf);
        CycloInt::from_ring(self.ring.clone(), c)
    }

    /// The ring automorphism x ↦ x^{-1} (complex conjugation on values).
    pub fn conj(&self) -> Self {
        let m = self.ring.m;
        let mut acc = CycloInt::zero(m);
        for (j, cj) in self.c.iter().enumerate() {
            if !cj.is_zero() {
                let mono = CycloInt::root_power(m, -(j as i64));
                acc = &acc + &mono.scale(cj);
            }
        }
        acc
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let c = self.c.iter().map(|cj| cj * k).collect();
        CycloInt::from_ring(self.ring.clone(), c)
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = CycloInt::one(self.ring.m);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value-preserving embedding into conductor n (m | n), via x ↦ x^{n/m}.
    pub fn promote_to(&self, n: u64) -> Self {
        let m = self.ring.m;
        assert!(n % m == 0, "{m} does not divide {n}, cannot promote");
        if n == m {
            return self.clone();
        }
        let k = (n / m) as usize;
        let target = ring(n);
        let mut buf = vec![BigInt::zero(); (self.c.len() - 1) * k + 1];
        for (j, cj) in self.c.iter().enumerate() {
            if !cj.is_zero() {
                buf[j * k] = cj.clone();
            }
        }
        let c = target.reduce(buf);
        CycloInt::from_ring(target, c)
    }

    pub fn all_coeffs_even(&self) -> bool {
        let two = BigInt::from(2);
        self.c.iter().all(|c| (c % &two).is_zero())
    }

    fn half_exact(&self) -> Self {
        assert!(self.all_coeffs_even(), "coefficients are not all even");
        let two = BigInt::from(2);
        let c = self.c.iter().map(|cj| cj / &two).collect();
        CycloInt::from_ring(self.ring.clone(), c)
    }

    /// Numeric value Σ c_j e^{2πij/m}. Sanity checks only; never used for
    /// decisions.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.ring.m as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (j, cj) in self.c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            let c = cj.to_f64().expect("coefficient out of f64 range");
            let ang = 2.0 * std::f64::consts::PI * (j as f64) / m;
            re += c * ang.cos();
            im += c * ang.sin();
        }
        (re, im)
    }
}

fn cyclo_add(a: &CycloInt, b: &CycloInt) -> CycloInt {
    a.check_same(b);
    let c = a
        .c
        .iter()
        .zip(b.c.iter())
        .map(|(x, y)| x + y)
        .collect();
    CycloInt::from_ring(a.ring.clone(), c)
}

fn cyclo_sub(a: &CycloInt, b: &CycloInt) -> CycloInt {
    a.check_same(b);
    let c = a
        .c
        .iter()
        .zip(b.c.iter())
        .map(|(x, y)| x - y)
        .collect();
    CycloInt::from_ring(a.ring.clone(), c)
}

fn cyclo_neg(a: &CycloInt) -> CycloInt {
    let c = a.c.iter().map(|x| -x).collect();
    CycloInt::from_ring(a.ring.clone(), c)
}

fn cyclo_mul(a: &CycloInt, b: &CycloInt) -> CycloInt {
    a.check_same(b);
    let d = a.ring.degree;
    // Iterate over the sparser operand's nonzero coefficients.
    let (sparse, dense) = {
        let na = a.c.iter().filter(|c| !c.is_zero()).count();
        let nb = b.c.iter().filter(|c| !c.is_zero()).count();
        if na <= nb {
            (a, b)
        } else {
            (b, a)
        }
    };
    let mut buf = vec![BigInt::zero(); 2 * d.max(1)];
    for (i, ci) in sparse.c.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        for (j, cj) in dense.c.iter().enumerate() {
            if !cj.is_zero() {
                buf[i + j] += ci * cj;
            }
        }
    }
    let c = a.ring.reduce(buf);
    CycloInt::from_ring(a.ring.clone(), c)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $ty:ty, $func:ident) => {
        impl std::ops::$trait<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                $func(self, rhs)
            }
        }
        impl std::ops::$trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $func(&self, &rhs)
            }
        }
        impl std::ops::$trait<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                $func(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, CycloInt, cyclo_add);
forward_binop!(Sub, sub, CycloInt, cyclo_sub);
forward_binop!(Mul, mul, CycloInt, cyclo_mul);

impl std::ops::Neg for &CycloInt {
    type Output = CycloInt;
    fn neg(self) -> CycloInt {
        cyclo_neg(self)
    }
}
impl std::ops::Neg for CycloInt {
    type Output = CycloInt;
    fn neg(self) -> CycloInt {
        cyclo_neg(&self)
    }
}

/// A cyclotomic integer divided by a power of two, kept normalized: when the
/// denominator exponent is positive, at least one numerator coefficient is
/// odd. Rotation matrix entries (cos and sin of 2πa/m) live here.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNum {
    int: CycloInt,
    two_exp: u32,
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum(m={}, {})", self.int.conductor(), self)
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.two_exp == 0 {
            write!(f, "{}", self.int)
        } else {
            write!(f, "({})/2^{}", self.int, self.two_exp)
        }
    }
}

impl CycloNum {
    pub fn new(int: CycloInt, two_exp: u32) -> Self {
        let mut n = CycloNum { int, two_exp };
        n.normalize();
        n
    }

    pub fn from_int(int: CycloInt) -> Self {
        CycloNum { int, two_exp: 0 }
    }

    pub fn zero(m: u64) -> Self {
        CycloNum::from_int(CycloInt::zero(m))
    }

    pub fn one(m: u64) -> Self {
        CycloNum::from_int(CycloInt::one(m))
    }

    pub fn from_integer(m: u64, n: i64) -> Self {
        CycloNum::from_int(CycloInt::from_integer(m, BigInt::from(n)))
    }

    fn normalize(&mut self) {
        while self.two_exp > 0 && self.int.all_coeffs_even() {
            self.int = self.int.half_exact();
            self.two_exp -= 1;
        }
        if self.int.is_zero() {
            self.two_exp = 0;
        }
    }

    pub fn conductor(&self) -> u64 {
        self.int.conductor()
    }

    /// The numerator; the represented value is `numerator() / 2^two_exp()`.
    pub fn numerator(&self) -> &CycloInt {
        &self.int
    }

    pub fn two_exp(&self) -> u32 {
        self.two_exp
    }

    pub fn is_zero(&self) -> bool {
        self.int.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.two_exp == 0 && self.int.is_one()
    }

    /// The numerator, provided the value is integral.
    pub fn as_integral(&self) -> Result<&CycloInt, CycloError> {
        if self.two_exp == 0 {
            Ok(&self.int)
        } else {
            Err(CycloError::NotIntegral {
                two_exp: self.two_exp,
            })
        }
    }

    pub fn conj(&self) -> Self {
        CycloNum {
            int: self.int.conj(),
            two_exp: self.two_exp,
        }
    }

    pub fn promote_to(&self, n: u64) -> Self {
        CycloNum {
            int: self.int.promote_to(n),
            two_exp: self.two_exp,
        }
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let (re, im) = self.int.to_complex();
        let scale = (self.two_exp as f64).exp2();
        (re / scale, im / scale)
    }
}

fn num_add(a: &CycloNum, b: &CycloNum) -> CycloNum {
    let e = a.two_exp.max(b.two_exp);
    let two = BigInt::from(2);
    let ai = a.int.scale(&two.pow(e - a.two_exp));
    let bi = b.int.scale(&two.pow(e - b.two_exp));
    CycloNum::new(&ai + &bi, e)
}

fn num_sub(a: &CycloNum, b: &CycloNum) -> CycloNum {
    let e = a.two_exp.max(b.two_exp);
    let two = BigInt::from(2);
    let ai = a.int.scale(&two.pow(e - a.two_exp));
    let bi = b.int.scale(&two.pow(e - b.two_exp));
    CycloNum::new(&ai - &bi, e)
}

fn num_mul(a: &CycloNum, b: &CycloNum) -> CycloNum {
    CycloNum::new(&a.int * &b.int, a.two_exp + b.two_exp)
}

forward_binop!(Add, add, CycloNum, num_add);
forward_binop!(Sub, sub, CycloNum, num_sub);
forward_binop!(Mul, mul, CycloNum, num_mul);

impl std::ops::Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            int: -&self.int,
            two_exp: self.two_exp,
        }
    }
}
impl std::ops::Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

/// The splitting m = s·2^t (s odd) together with the unique exponents
/// (u, v) such that x^a = y^u z^v, where y = x^s has order 2^t and
/// z = x^{2^t} has order s. Both follow from the Chinese remainder theorem:
/// u ≡ a·s^{-1} (mod 2^t) and v ≡ a·2^{-t} (mod s).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpDecomp {
    pub s: u64,
    pub t: u32,
    pub u: u64,
    pub v: u64,
}

pub fn decompose_exponent(a: i64, m: u64) -> ExpDecomp {
    assert!(m >= 1);
    let t = m.trailing_zeros();
    let s = m >> t;
    let a = a.rem_euclid(m as i64) as u64;
    let two_t = 1u64 << t;
    let u = if t == 0 {
        0
    } else {
        let inv = mod_inverse(s % two_t, two_t);
        ((a as u128 * inv as u128) % two_t as u128) as u64
    };
    let v = if s == 1 {
        0
    } else {
        let inv = mod_inverse(two_t % s, s);
        ((a as u128 * inv as u128) % s as u128) as u64
    };
    ExpDecomp { s, t, u, v }
}
