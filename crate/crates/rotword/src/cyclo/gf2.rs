//! Characteristic-2 residue fields for cyclotomic rings.
//!
//! Write m = s·2^t with s odd, y = x^s, z = x^{2^t}. The ideal generated by
//! 1 + y extends to a maximal ideal I containing 2 (because
//! 2 = (1+y)(1 - y + y² - ... - y^{2^{t-1}-1}) when t ≥ 1, and 1 + y = 2
//! when t = 0), and the quotient is GF(2^d) where d is the multiplicative
//! order of 2 modulo s. Concretely the quotient map sends y ↦ 1 and z ↦ Z,
//! a fixed primitive s-th root of unity in GF(2^d); on the power basis that
//! is x^j ↦ Z^{(j·v0) mod s} with v0 ≡ 2^{-t} (mod s), applied to
//! coefficients mod 2.
//!
//! GF(2) polynomials are bit vectors: bit i is the coefficient of X^i.

use super::{cyclotomic_poly, decompose_exponent, CycloError, CycloInt, CycloNum};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Carry-less product of GF(2) polynomials in bit representation.
pub fn gf2_mul(a: &BigUint, b: &BigUint) -> BigUint {
    let mut acc = BigUint::zero();
    for i in 0..a.bits() {
        if a.bit(i) {
            acc ^= b << i;
        }
    }
    acc
}

/// Remainder of a modulo g (g nonzero) over GF(2).
pub fn gf2_rem(a: &BigUint, g: &BigUint) -> BigUint {
    assert!(!g.is_zero(), "division by the zero polynomial");
    let dg = g.bits();
    let mut r = a.clone();
    while r.bits() >= dg && !r.is_zero() {
        let shift = r.bits() - dg;
        r ^= g << shift;
    }
    r
}

/// The m-th cyclotomic polynomial with coefficients reduced mod 2.
pub fn cyclotomic_poly_mod2(m: u64) -> BigUint {
    let poly = cyclotomic_poly(m);
    let mut bits = BigUint::zero();
    for (j, c) in poly.iter().enumerate() {
        if c.is_odd() {
            bits.set_bit(j as u64, true);
        }
    }
    bits
}

/// Multiplicative order of 2 modulo odd s ≥ 1 (returns 1 for s = 1).
pub fn order_of_two_mod(s: u64) -> u64 {
    assert!(s % 2 == 1 && s >= 1, "order_of_two_mod needs odd s >= 1");
    if s == 1 {
        return 1;
    }
    let mut pow = 2u64 % s;
    let mut d = 1u64;
    while pow != 1 {
        pow = (pow as u128 * 2 % s as u128) as u64;
        d += 1;
        assert!(d <= s, "order search overran the group");
    }
    d
}

/// The irreducible degree-d factor of Φ_s mod 2 whose bit encoding is
/// smallest; every irreducible factor has degree exactly d = ord_s(2), so
/// the first degree-d divisor found in ascending bit order is it.
pub fn least_irreducible_factor(s: u64) -> (u64, BigUint) {
    assert!(s % 2 == 1 && s >= 1);
    if s == 1 {
        // Φ_1 = X - 1 ≡ X + 1.
        return (1, BigUint::from(0b11u32));
    }
    let d = order_of_two_mod(s);
    assert!(
        d <= 20,
        "residue field degree {d} too large for the factor search"
    );
    let f = cyclotomic_poly_mod2(s);
    let lead = BigUint::one() << d;
    for c in 0..(1u64 << d) {
        let g = &lead | &BigUint::from(c);
        if gf2_rem(&f, &g).is_zero() {
            return (d, g);
        }
    }
    unreachable!("Φ_s mod 2 has an irreducible factor of degree ord_s(2)");
}

/// The residue field R/I ≅ GF(2^d) for conductor m, with the quotient map
/// precomputed as a table of the powers of Z.
#[derive(Debug, Clone)]
pub struct ResidueField {
    m: u64,
    s: u64,
    t: u32,
    d: u64,
    g: BigUint,
    v0: u64,
    zpow: Vec<BigUint>,
}

impl ResidueField {
    pub fn new(m: u64) -> ResidueField {
        assert!(m >= 1, "conductor must be at least 1");
        let dec = decompose_exponent(1, m);
        let (s, t) = (dec.s, dec.t);
        let (d, g) = least_irreducible_factor(s);
        let v0 = dec.v;
        let mut zpow = Vec::with_capacity(s as usize);
        let mut zp = BigUint::one();
        for _ in 0..s {
            zpow.push(zp.clone());
            zp = gf2_rem(&(zp << 1), &g);
        }
        let fld = ResidueField {
            m,
            s,
            t,
            d,
            g,
            v0,
            zpow,
        };
        // The map x ↦ Z^{v0} must kill the modulus, or nothing downstream
        // is a ring homomorphism.
        let phim = cyclotomic_poly_mod2(m);
        let mut acc = BigUint::zero();
        for j in 0..phim.bits() {
            if phim.bit(j) {
                acc ^= fld.z_to(j as u128 * v0 as u128);
            }
        }
        assert!(acc.is_zero(), "residue map does not kill the modulus");
        fld
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn odd_part(&self) -> u64 {
        self.s
    }

    pub fn two_adic_exp(&self) -> u32 {
        self.t
    }

    /// Field degree d over GF(2).
    pub fn degree(&self) -> u64 {
        self.d
    }

    /// Bit encoding of the field modulus g.
    pub fn modulus_bits(&self) -> &BigUint {
        &self.g
    }

    fn z_to(&self, e: u128) -> BigUint {
        self.zpow[(e % self.s as u128) as usize].clone()
    }

    /// Residue of a cyclotomic integer at this field.
    pub fn residue_int(&self, e: &CycloInt) -> Result<BigUint, CycloError> {
        if e.conductor() != self.m {
            return Err(CycloError::ConductorMismatch {
                left: e.conductor(),
                right: self.m,
            });
        }
        let mut acc = BigUint::zero();
        for (j, c) in e.coeffs().iter().enumerate() {
            if c.is_odd() {
                acc ^= self.z_to(j as u128 * self.v0 as u128);
            }
        }
        Ok(acc)
    }

    /// Residue of a dyadic cyclotomic number; the value must be integral.
    pub fn residue(&self, e: &CycloNum) -> Result<BigUint, CycloError> {
        self.residue_int(e.as_integral()?)
    }

    /// Product in GF(2^d).
    pub fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        gf2_rem(&gf2_mul(a, b), &self.g)
    }
}

/// Render a GF(2) polynomial's bits as a binary string, highest degree
/// first ("111" is X² + X + 1, "0" is the zero polynomial).
pub fn bits_to_string(bits: &BigUint) -> String {
    if bits.is_zero() {
        return "0".to_string();
    }
    let n = bits.bits();
    (0..n)
        .rev()
        .map(|i| if bits.bit(i) { '1' } else { '0' })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::{phi, CycloNum};
    use num_bigint::BigInt;

    #[test]
    fn order_of_two_known_values() {
        assert_eq!(order_of_two_mod(1), 1);
        assert_eq!(order_of_two_mod(3), 2);
        assert_eq!(order_of_two_mod(5), 4);
        assert_eq!(order_of_two_mod(7), 3);
        assert_eq!(order_of_two_mod(9), 6);
        assert_eq!(order_of_two_mod(45), 12);
    }

    #[test]
    fn gf2_mul_and_rem_basics() {
        // (X+1)^2 = X^2+1 over GF(2)
        let x1 = BigUint::from(0b11u32);
        assert_eq!(gf2_mul(&x1, &x1), BigUint::from(0b101u32));
        // X^3+X+1 divides X^7+1
        let f = BigUint::from(0b1000_0001u32);
        let g = BigUint::from(0b1011u32);
        assert!(gf2_rem(&f, &g).is_zero());
    }

    #[test]
    fn least_factor_of_phi7_is_x3_x_1() {
        // Φ_7 mod 2 = (X^3+X+1)(X^3+X^2+1); the lex-least factor wins.
        let (d, g) = least_irreducible_factor(7);
        assert_eq!(d, 3);
        assert_eq!(g, BigUint::from(0b1011u32));
    }

    #[test]
    fn least_factor_full_polys() {
        // Φ_3, Φ_5, Φ_9 are irreducible mod 2 (d = φ(s)): the factor is the
        // whole polynomial.
        for s in [3u64, 5, 9] {
            let (d, g) = least_irreducible_factor(s);
            assert_eq!(d, phi(s));
            assert_eq!(g, cyclotomic_poly_mod2(s));
        }
    }

    #[test]
    fn residue_field_degrees_for_certificate_conductors() {
        for (m, want_d) in [
            (4u64, 1u64),
            (8, 1),
            (12, 2),
            (16, 1),
            (20, 4),
            (24, 2),
            (36, 6),
            (40, 4),
            (48, 2),
            (64, 1),
        ] {
            let fld = ResidueField::new(m);
            assert_eq!(fld.degree(), want_d, "m={m}");
        }
    }

    #[test]
    fn residue_kills_two_and_one_plus_y() {
        for m in [4u64, 8, 12, 16, 20, 24, 36, 40, 48] {
            let fld = ResidueField::new(m);
            let s = fld.odd_part() as i64;
            for a in [0i64, 1, 2, 5, 7] {
                let e = CycloInt::root_power(m, a).scale(&BigInt::from(2));
                assert!(fld.residue_int(&e).unwrap().is_zero(), "2·x^{a}, m={m}");
            }
            let one_plus_y = &CycloInt::one(m) + &CycloInt::root_power(m, s);
            assert!(fld.residue_int(&one_plus_y).unwrap().is_zero(), "m={m}");
        }
    }

    #[test]
    fn residue_is_a_ring_homomorphism() {
        for m in [12u64, 20, 24, 36, 40] {
            let fld = ResidueField::new(m);
            let elems: Vec<CycloInt> = vec![
                CycloInt::root_power(m, 1),
                &CycloInt::root_power(m, 3) + &CycloInt::one(m),
                &CycloInt::root_power(m, 5) - &CycloInt::root_power(m, 2),
                CycloInt::from_integer(m, BigInt::from(3)),
            ];
            for a in &elems {
                for b in &elems {
                    let ra = fld.residue_int(a).unwrap();
                    let rb = fld.residue_int(b).unwrap();
                    assert_eq!(
                        fld.residue_int(&(a + b)).unwrap(),
                        &ra ^ &rb,
                        "additive, m={m}"
                    );
                    assert_eq!(
                        fld.residue_int(&(a * b)).unwrap(),
                        fld.mul(&ra, &rb),
                        "multiplicative, m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn residue_of_roots_is_invertible() {
        for m in [12u64, 20, 36] {
            let fld = ResidueField::new(m);
            for a in 0..(m as i64) {
                let r = fld.residue_int(&CycloInt::root_power(m, a)).unwrap();
                assert!(!r.is_zero(), "x^{a} must stay a unit, m={m}");
            }
        }
    }

    #[test]
    fn residue_rejects_denominators_and_wrong_conductors() {
        let fld = ResidueField::new(12);
        let half = CycloNum::new(CycloInt::one(12), 1);
        assert!(matches!(
            fld.residue(&half),
            Err(CycloError::NotIntegral { two_exp: 1 })
        ));
        let other = CycloNum::one(24);
        assert!(matches!(
            fld.residue(&other),
            Err(CycloError::ConductorMismatch { .. })
        ));
    }

    #[test]
    fn power_of_two_conductors_collapse_to_parity() {
        // s = 1: the field is GF(2) and the residue is the parity of the
        // number of odd coefficients.
        let fld = ResidueField::new(16);
        assert_eq!(fld.degree(), 1);
        let e = &CycloInt::root_power(16, 1) + &CycloInt::root_power(16, 2);
        assert!(fld.residue_int(&e).unwrap().is_zero());
        let e = &e + &CycloInt::one(16);
        assert_eq!(fld.residue_int(&e).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn bits_render_msb_first() {
        assert_eq!(bits_to_string(&BigUint::from(0b111u32)), "111");
        assert_eq!(bits_to_string(&BigUint::from(0b1011u32)), "1011");
        assert_eq!(bits_to_string(&BigUint::zero()), "0");
    }
}
