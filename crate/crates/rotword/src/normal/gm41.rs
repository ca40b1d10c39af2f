//! Canonical forms for groups generated by S and one x-axis rotation T.
//!
//! Every word over the quarter turn S (about y) and T of order m (about x)
//! reduces to W (S T^{a_1}) ... (S T^{a_n}) E: a short head W, factors with
//! exponents confined to a fundamental interval depending on m mod 4, and a
//! tail E in the finite subgroup reachable by quarter and half turns alone.
//! Each rewrite below preserves the group element, and the resulting triple
//! is unique, so structural equality of forms decides the word problem.

use super::hgroup::{
    h1_decompose, h_contains, h_word, ident, s_mat, s_pow, t_half_mat, u_pow, HCase,
};
use super::sbracket::{cleanup, sigma_walk, wrap_t};
use super::NormalError;
use crate::rot3::Mat3i;
use crate::words::{Gen, GroupSpec, Word};
use std::fmt;

/// Head factor of a canonical form. U only occurs when 4 | m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WHead {
    I,
    S3,
    U,
}

/// Canonical form W (S T^{a_1}) ... (S T^{a_n}) E of a word in G(m,4,1).
///
/// Invariants, with n the factor count:
/// - m odd: a_i in (-m/2, m/2), nonzero; W in {I, S^3}; E in <S>.
/// - m twice odd: a_i in (-m/4, m/4), nonzero; W in {I, S^3};
///   E in <S, T^{m/2}>.
/// - 4 | m: a_i in (-m/4, m/4), nonzero, and a_n in (0, m/4);
///   W in {I, S^3, U}; E among the 24 rotations of the cube.
/// - n = 0 forces W = I.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gm41Form {
    m: u64,
    w: WHead,
    factors: Vec<i64>,
    e: Mat3i,
}

/// The stage of the reduction where the word reads W (S T^{a_1}) ...
/// (S T^{a_n}) E with every 4 a_i nonzero mod m but the intervals not yet
/// swept tight. Ring-theoretic certificates start from here.
pub(crate) struct SandwichStage {
    pub w: Mat3i,
    pub factors: Vec<i64>,
    pub e: Mat3i,
    pub m: u64,
}

/// Cleanup plus, for even m, extraction of T^{m/2} syllables: the half
/// turn commutes with T and inverts S-powers on its way to the tail.
fn stabilize(mut syls: Vec<(Gen, i64)>, m: u64, e_acc: &mut Mat3i) -> Vec<(Gen, i64)> {
    loop {
        syls = cleanup(&syls, Some(m));
        if m % 2 == 1 {
            return syls;
        }
        let half = (m / 2) as i64;
        let mut out: Vec<(Gen, i64)> = Vec::with_capacity(syls.len());
        let mut carry = false;
        let mut removed = false;
        for &(g, e) in &syls {
            match g {
                Gen::T if e == half => {
                    carry = !carry;
                    removed = true;
                }
                Gen::T => out.push((Gen::T, e)),
                Gen::S => out.push((Gen::S, if carry { -e } else { e })),
                _ => unreachable!("stabilize only sees S and T"),
            }
        }
        if carry {
            *e_acc = t_half_mat().mul(e_acc);
        }
        if !removed {
            return out;
        }
        syls = out;
    }
}

/// Reduce to the sandwich stage: stabilize, bracket, and (for 4 | m)
/// eliminate quarter-turn factors inside or at the ends of the word.
pub(crate) fn bracket_stage(word: &Word) -> Result<SandwichStage, NormalError> {
    let m = match word.spec() {
        GroupSpec::Gm41 { m } => m,
        other => {
            return Err(NormalError::WrongFamily {
                expected: "G(m,4,1)",
                found: other.to_string(),
            })
        }
    };
    // U = T^{m/4}; the word constructors only admit U when 4 | m.
    let mut syls: Vec<(Gen, i64)> = Vec::with_capacity(word.syllable_count());
    for &(g, e) in word.syllables() {
        match g {
            Gen::U => syls.push((Gen::T, e * (m / 4) as i64)),
            g => syls.push((g, e)),
        }
    }
    let mut e_acc = ident();
    syls = stabilize(syls, m, &mut e_acc);
    let br = sigma_walk(&syls);
    e_acc = s_pow(i64::from(br.e_pow)).mul(&e_acc);
    let mut w_s3 = br.w_s3;
    let mut factors = br.factors;

    if m % 4 == 0 {
        let quarter = (m / 4) as i64;
        // An interior quarter turn merges into its neighbors:
        // (S T^a)(S T^{sq})(S T^c) = (S T^{a+sq})(S T^{c+sq}), s = +-1.
        // The word shortens every round, so this terminates.
        loop {
            let offender =
                (1..factors.len().saturating_sub(1)).find(|&i| factors[i].abs() == quarter);
            let Some(i) = offender else { break };
            let sgn = factors[i].signum();
            factors[i - 1] += sgn * quarter;
            factors[i + 1] += sgn * quarter;
            factors.remove(i);
            let mut flat: Vec<(Gen, i64)> = Vec::with_capacity(2 * factors.len() + 1);
            if w_s3 {
                flat.push((Gen::S, 3));
            }
            for &a in &factors {
                flat.push((Gen::S, 1));
                flat.push((Gen::T, a));
            }
            let stable = stabilize(flat, m, &mut e_acc);
            let br = sigma_walk(&stable);
            e_acc = s_pow(i64::from(br.e_pow)).mul(&e_acc);
            w_s3 = br.w_s3;
            factors = br.factors;
        }
    }
    let mut w_mat = if w_s3 { s_pow(3) } else { ident() };
    if m % 4 == 0 {
        let quarter = (m / 4) as i64;
        // Quarter turns at either end are tail-group elements:
        // S T^{+-m/4} = S U^{+-1}.
        while factors.first().map_or(false, |a| a.abs() == quarter) {
            let sgn = factors.remove(0).signum();
            w_mat = w_mat.mul(&s_mat()).mul(&u_pow(sgn));
        }
        while factors.last().map_or(false, |a| a.abs() == quarter) {
            let sgn = factors.pop().expect("nonempty by the loop guard").signum();
            e_acc = s_mat().mul(&u_pow(sgn)).mul(&e_acc);
        }
    }
    Ok(SandwichStage {
        w: w_mat,
        factors,
        e: e_acc,
        m,
    })
}

/// Left-to-right sweep forcing every exponent into (-m/4, m/4), pushing
/// the carry C = S^{2 sigma} (T^{m/2})^tau rightward. The carry parts
/// commute, and C (S T^a) = S^{1 + 2 sigma + 2 tau} T^{a + tau m/2}.
fn sweep_into_quarter_interval(factors: &mut [i64], m: u64, e_acc: &mut Mat3i) {
    let half = (m / 2) as i64;
    let m_i = m as i64;
    let mut sigma = false;
    let mut tau = false;
    for a in factors.iter_mut() {
        let pre = wrap_t(*a + if tau { half } else { 0 }, m);
        // Effective S-power 1 passes through; 3 = (S T^-)(S^2) flips the
        // exponent and keeps an S^2 carry.
        let mut v = if sigma == tau { pre } else { -pre };
        sigma = sigma != tau;
        if 4 * v > m_i {
            v -= half;
            tau = true;
        } else if 4 * v < -m_i {
            v += half;
            tau = true;
        } else {
            tau = false;
        }
        *a = v;
    }
    if sigma {
        *e_acc = s_pow(2).mul(e_acc);
    }
    if tau {
        *e_acc = t_half_mat().mul(e_acc);
    }
}

/// Reduce a word in G(m,4,1) to its canonical form.
pub fn normalize_gm41(word: &Word) -> Result<Gm41Form, NormalError> {
    let SandwichStage {
        w: w_mat,
        mut factors,
        e: mut e_acc,
        m,
    } = bracket_stage(word)?;
    let head = if factors.is_empty() {
        // Everything collapsed into the tail group.
        e_acc = w_mat.mul(&e_acc);
        WHead::I
    } else if m % 4 == 0 {
        // Split the head across the cosets H1, S^3 H1, U H1 and push the
        // H1 part through: (S U S^-1)(S T^a) = S T^{a + m/4} and
        // S^2 (S T^a) = (S T^{-a}) S^2.
        let d = h1_decompose(&w_mat).expect("head stays inside the cube group");
        factors[0] = wrap_t(factors[0] + i64::from(d.j) * (m / 4) as i64, m);
        if d.eps == 1 {
            for a in factors.iter_mut() {
                *a = -*a;
            }
            e_acc = s_pow(2).mul(&e_acc);
        }
        match d.x_idx {
            0 => WHead::I,
            1 => WHead::S3,
            _ => WHead::U,
        }
    } else {
        // No absorption happened for odd or twice-odd m, so the head is
        // still I or S^3 from the bracketing.
        if w_mat == ident() {
            WHead::I
        } else {
            debug_assert_eq!(w_mat, s_pow(3));
            WHead::S3
        }
    };
    if m % 2 == 0 {
        sweep_into_quarter_interval(&mut factors, m, &mut e_acc);
    }
    if m % 4 == 0 {
        if let Some(last) = factors.last_mut() {
            // The final interval is one-sided: S T^{-a} = S T^{m/4 - a} U^-1.
            if *last < 0 {
                *last += (m / 4) as i64;
                e_acc = u_pow(3).mul(&e_acc);
            }
        }
    }
    let form = Gm41Form {
        m,
        w: head,
        factors,
        e: e_acc,
    };
    debug_assert_eq!(form.check_invariants(), Ok(()));
    Ok(form)
}

impl Gm41Form {
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn head(&self) -> WHead {
        self.w
    }

    pub fn factors(&self) -> &[i64] {
        &self.factors
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn tail_matrix(&self) -> &Mat3i {
        &self.e
    }

    pub fn is_identity(&self) -> bool {
        self.w == WHead::I && self.factors.is_empty() && self.e == ident()
    }

    /// Spell the tail as a word over the generators available for this m.
    pub fn tail_word(&self) -> Word {
        let tail = h_word(HCase::of(self.m), self.m, &self.e)
            .expect("canonical tail lies in the tail group");
        Word::from_syllables(GroupSpec::Gm41 { m: self.m }, tail)
            .expect("tail syllables form a valid word")
    }

    /// The canonical word W (S T^{a_1}) ... (S T^{a_n}) E itself.
    pub fn to_word(&self) -> Word {
        let mut syls: Vec<(Gen, i64)> = Vec::with_capacity(2 * self.factors.len() + 4);
        match self.w {
            WHead::I => {}
            WHead::S3 => syls.push((Gen::S, 3)),
            WHead::U => syls.push((Gen::U, 1)),
        }
        for &a in &self.factors {
            syls.push((Gen::S, 1));
            syls.push((Gen::T, a));
        }
        let tail = h_word(HCase::of(self.m), self.m, &self.e)
            .expect("canonical tail lies in the tail group");
        syls.extend(tail);
        Word::from_syllables(GroupSpec::Gm41 { m: self.m }, syls)
            .expect("canonical syllables form a valid word")
    }

    /// Check the interval, head, and tail constraints. Returns a
    /// description of the first violation, for tests and debug builds.
    pub fn check_invariants(&self) -> Result<(), String> {
        let m = self.m;
        let case = HCase::of(m);
        let n = self.factors.len();
        if n == 0 && self.w != WHead::I {
            return Err(format!("empty factor list with head {:?}", self.w));
        }
        if self.w == WHead::U && m % 4 != 0 {
            return Err("head U without 4 | m".into());
        }
        for (i, &a) in self.factors.iter().enumerate() {
            if a == 0 {
                return Err(format!("zero exponent at factor {i}"));
            }
            let bound_ok = match case {
                HCase::Odd => 2 * a.abs() < m as i64,
                HCase::TwiceOdd | HCase::DivisibleBy4 => 4 * a.abs() < m as i64,
            };
            if !bound_ok {
                return Err(format!("exponent {a} out of range at factor {i}"));
            }
            if case == HCase::DivisibleBy4 && i == n - 1 && a < 0 {
                return Err(format!("negative final exponent {a}"));
            }
        }
        if !h_contains(case, m, &self.e) {
            return Err("tail outside the tail group".into());
        }
        Ok(())
    }
}

impl fmt::Display for Gm41Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}
