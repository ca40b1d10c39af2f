//! Exact 3×3 rotation matrices over pluggable scalar rings.
//!
//! Three scalar families cover every group this crate touches:
//! cyclotomic entries for rotations through 2πa/m ([`rot_axis`]),
//! denominator-5 rationals for rotations through multiples of arctan(4/3)
//! ([`pythagorean_rot`]), and Gaussian-rational Laurent polynomials for a
//! formally transcendental x-rotation ([`formal_rot_x`]).
//!
//! Convention, fixed once and used everywhere: rotations act so that
//!
//! ```text
//! rot_axis(X, a, m) = [[1, 0, 0], [0, c, s], [0, -s, c]]
//! rot_axis(Y, a, m) = [[c, 0, s], [0, 1, 0], [-s, 0, c]]
//! rot_axis(Z, a, m) = [[c, s, 0], [-s, c, 0], [0, 0, 1]]
//! ```
//!
//! with c = cos(2πa/m), s = sin(2πa/m). Under this convention, with
//! S = rot_axis(Y, 1, 4) and T^a = rot_axis(X, a, m), exact computation
//! gives S³·T^a·S = rot_axis(Z, a, m) and S·T^a·S³ = rot_axis(Z, -a, m);
//! the first of these is how z-rotations are spelled from {S, T} words.
//!
//! Entries of `rot_axis` are stored at conductor lcm(4, m): sin(2πa/m)
//! needs a 4th root of unity in the ring, so the angle lattice m and the
//! storage conductor differ whenever 4 ∤ m. Cross-conductor comparisons go
//! through [`matrices_equal_promoted`].

use crate::cyclo::{CycloInt, CycloNum};
use num_integer::Integer;

pub mod laurent;
pub mod rat5;

pub use laurent::{GaussRat, LaurentGaussian};
pub use rat5::Rat5;

/// Ring operations as instance methods, so scalars that carry context (a
/// conductor, say) can supply zeros and ones of their own kind.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
}

impl Scalar for CycloNum {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        CycloNum::is_zero(self)
    }
    fn is_one(&self) -> bool {
        CycloNum::is_one(self)
    }
}

impl Scalar for i64 {
    fn add(&self, other: &Self) -> Self {
        self.checked_add(*other).expect("integer overflow")
    }
    fn sub(&self, other: &Self) -> Self {
        self.checked_sub(*other).expect("integer overflow")
    }
    fn mul(&self, other: &Self) -> Self {
        self.checked_mul(*other).expect("integer overflow")
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
}

/// A 3×3 matrix over a scalar ring; row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat3<S> {
    pub e: [[S; 3]; 3],
}

pub type Mat3i = Mat3<i64>;

impl<S> Mat3<S> {
    pub fn from_rows(e: [[S; 3]; 3]) -> Self {
        Mat3 { e }
    }

    pub fn map<T>(&self, mut f: impl FnMut(&S) -> T) -> Mat3<T> {
        Mat3 {
            e: std::array::from_fn(|i| std::array::from_fn(|j| f(&self.e[i][j]))),
        }
    }
}

impl<S: Scalar> Mat3<S> {
    pub fn identity_with(zero: S, one: S) -> Self {
        Mat3 {
            e: std::array::from_fn(|i| {
                std::array::from_fn(|j| if i == j { one.clone() } else { zero.clone() })
            }),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Mat3 {
            e: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    let mut acc = self.e[i][0].mul(&other.e[0][j]);
                    for k in 1..3 {
                        if !self.e[i][k].is_zero() && !other.e[k][j].is_zero() {
                            acc = acc.add(&self.e[i][k].mul(&other.e[k][j]));
                        }
                    }
                    acc
                })
            }),
        }
    }

    pub fn transpose(&self) -> Self {
        Mat3 {
            e: std::array::from_fn(|i| std::array::from_fn(|j| self.e[j][i].clone())),
        }
    }

    /// Inverse of an orthogonal matrix. Callers are responsible for only
    /// handing rotations to this.
    pub fn inverse_rotation(&self) -> Self {
        self.transpose()
    }

    pub fn is_identity(&self) -> bool {
        (0..3).all(|i| {
            (0..3).all(|j| {
                if i == j {
                    self.e[i][j].is_one()
                } else {
                    self.e[i][j].is_zero()
                }
            })
        })
    }

    pub fn det(&self) -> S {
        let e = &self.e;
        let m01 = e[1][1].mul(&e[2][2]).sub(&e[1][2].mul(&e[2][1]));
        let m11 = e[1][0].mul(&e[2][2]).sub(&e[1][2].mul(&e[2][0]));
        let m21 = e[1][0].mul(&e[2][1]).sub(&e[1][1].mul(&e[2][0]));
        e[0][0].mul(&m01).sub(&e[0][1].mul(&m11)).add(&e[0][2].mul(&m21))
    }

    pub fn pow(&self, n: u32, identity: Self) -> Self {
        let mut acc = identity;
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// Conductor at which entries of a rotation through 2πa/m live: lcm(4, m).
pub fn storage_conductor(m: u64) -> u64 {
    assert!(m >= 1);
    m.lcm(&4)
}

/// The exact rotation through angle 2πa/m about a coordinate axis, entries
/// at conductor lcm(4, m).
pub fn rot_axis(axis: Axis, a: i64, m: u64) -> Mat3<CycloNum> {
    let n = storage_conductor(m);
    let k = (n / m) as i64;
    let ak = a.checked_mul(k).expect("angle exponent overflow");
    let quarter = (n / 4) as i64;
    let c = CycloNum::new(
        &CycloInt::root_power(n, ak) + &CycloInt::root_power(n, -ak),
        1,
    );
    let s = CycloNum::new(
        &CycloInt::root_power(n, ak - quarter) - &CycloInt::root_power(n, -ak - quarter),
        1,
    );
    let zero = CycloNum::zero(n);
    let one = CycloNum::one(n);
    let ns = s.neg();
    match axis {
        Axis::X => Mat3::from_rows([
            [one, zero.clone(), zero.clone()],
            [zero.clone(), c.clone(), s],
            [zero, ns, c],
        ]),
        Axis::Y => Mat3::from_rows([
            [c.clone(), zero.clone(), s],
            [zero.clone(), one, zero.clone()],
            [ns, zero, c],
        ]),
        Axis::Z => Mat3::from_rows([
            [c.clone(), s, zero.clone()],
            [ns, c, zero.clone()],
            [zero.clone(), zero, one],
        ]),
    }
}

/// Identity matrix at the storage conductor for angle lattice m.
pub fn identity_cyclo(m: u64) -> Mat3<CycloNum> {
    let n = storage_conductor(m);
    Mat3::identity_with(CycloNum::zero(n), CycloNum::one(n))
}

/// The exact rotation through c·ν, ν = arctan(4/3), about the x or z axis.
/// cos(cν) and sin(cν) are the real and imaginary parts of (3+4i)^c / 5^|c|.
pub fn pythagorean_rot(axis: Axis, c: i64) -> Mat3<Rat5> {
    use num_bigint::BigInt;
    let n = c.unsigned_abs() as u32;
    let (mut p, mut q) = (BigInt::from(1), BigInt::from(0));
    for _ in 0..n {
        let np = 3 * &p - 4 * &q;
        let nq = 4 * &p + 3 * &q;
        (p, q) = (np, nq);
    }
    if c < 0 {
        q = -q;
    }
    let cos = Rat5::new(p, n);
    let sin = Rat5::new(q, n);
    let zero = Rat5::from_integer(0);
    let one = Rat5::from_integer(1);
    let nsin = sin.neg();
    match axis {
        Axis::X => Mat3::from_rows([
            [one, zero.clone(), zero.clone()],
            [zero.clone(), cos.clone(), sin],
            [zero, nsin, cos],
        ]),
        Axis::Z => Mat3::from_rows([
            [cos.clone(), sin, zero.clone()],
            [nsin, cos, zero.clone()],
            [zero.clone(), zero, one],
        ]),
        Axis::Y => panic!("pythagorean_rot is defined for the x and z axes"),
    }
}

/// The x-rotation through a formally transcendental angle ω: entries are
/// Laurent polynomials in x = e^{iω}, so cos(cω) = (x^c + x^{-c})/2 and
/// sin(cω) = (x^c - x^{-c})/2i stay symbolic.
pub fn formal_rot_x(c: i64) -> Mat3<LaurentGaussian> {
    let cos = LaurentGaussian::formal_cos(c);
    let sin = LaurentGaussian::formal_sin(c);
    let zero = LaurentGaussian::zero();
    let one = LaurentGaussian::one();
    let nsin = Scalar::neg(&sin);
    Mat3::from_rows([
        [one, zero.clone(), zero.clone()],
        [zero.clone(), cos.clone(), sin],
        [zero, nsin, cos],
    ])
}

/// Integer signed-permutation matrices promoted into richer scalar rings.
pub fn int_mat_to_cyclo(mat: &Mat3i, m: u64) -> Mat3<CycloNum> {
    let n = storage_conductor(m);
    mat.map(|v| CycloNum::from_integer(n, *v))
}

pub fn int_mat_to_rat5(mat: &Mat3i) -> Mat3<Rat5> {
    mat.map(|v| Rat5::from_integer(*v))
}

pub fn int_mat_to_laurent(mat: &Mat3i) -> Mat3<LaurentGaussian> {
    mat.map(|v| LaurentGaussian::from_integer(*v))
}

/// Common conductor of all entries; panics on an inconsistent matrix.
pub fn mat_conductor(mat: &Mat3<CycloNum>) -> u64 {
    let m = mat.e[0][0].conductor();
    for row in &mat.e {
        for v in row {
            assert_eq!(v.conductor(), m, "matrix entries at mixed conductors");
        }
    }
    m
}

pub fn promote_mat(mat: &Mat3<CycloNum>, n: u64) -> Mat3<CycloNum> {
    mat.map(|v| v.promote_to(n))
}

/// Exact value equality for cyclotomic matrices at possibly different
/// storage conductors, via promotion to the least common one.
pub fn matrices_equal_promoted(a: &Mat3<CycloNum>, b: &Mat3<CycloNum>) -> bool {
    let (ma, mb) = (mat_conductor(a), mat_conductor(b));
    if ma == mb {
        return a == b;
    }
    let n = ma.lcm(&mb);
    promote_mat(a, n) == promote_mat(b, n)
}

/// f64 view of a cyclotomic matrix; sanity checks only.
pub fn cyclo_mat_to_f64(mat: &Mat3<CycloNum>) -> [[f64; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let (re, im) = mat.e[i][j].to_complex();
            debug_assert!(im.abs() < 1e-6, "rotation entry has imaginary part {im}");
            re
        })
    })
}

pub fn rat5_mat_to_f64(mat: &Mat3<Rat5>) -> [[f64; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| mat.e[i][j].to_f64()))
}
