//! Group words over the supported generator alphabets.
//!
//! A [`Word`] is a freely reduced syllable list (generator, exponent) tagged
//! with the [`GroupSpec`] it lives in. The five families:
//!
//! - `Gpq { p, q }`: A = x-rotation by 2π/p, B = z-rotation by 2π/q.
//! - `Gm41 { m }`: S = y-quarter-turn, T = x-rotation by 2π/m, and (when
//!   4 | m) U = T^{m/4}, the x-quarter-turn.
//! - `Gnu41`: S and T = x-rotation by ν = arctan(4/3).
//! - `GnuFree`: T as above and V = S³TS, its z-axis twin, with S itself not
//!   in the alphabet.
//! - `GTrans`: X = x-rotation by a formally transcendental angle and
//!   V = S³XS.
//!
//! Text grammar: whitespace-separated syllables, each a generator letter
//! optionally followed by `^` and a signed decimal exponent ("A^4 B^-1 A").
//! The empty word prints as `ε`, and `ε` parses back to it.

use crate::rot3::{
    self, formal_rot_x, int_mat_to_laurent, int_mat_to_rat5, pythagorean_rot, rot_axis, Axis,
    LaurentGaussian, Mat3, Mat3i, Rat5,
};
use crate::cyclo::CycloNum;
use num_integer::Integer;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown generator '{found}' at byte {offset}")]
    UnknownGenerator { offset: usize, found: char },
    #[error("generator '{gen}' is not in the alphabet of {family} (byte {offset})")]
    GeneratorNotInFamily {
        offset: usize,
        gen: char,
        family: String,
    },
    #[error("malformed exponent at byte {offset}")]
    BadExponent { offset: usize },
    #[error("generator U needs 4 | m, but m = {m}")]
    QuarterTurnUnavailable { m: u64 },
    #[error("word belongs to {found}, expected {expected}")]
    SpecMismatch { expected: String, found: String },
    #[error("rewriting at the lcm needs 4 | p and 4 | q, got ({p}, {q})")]
    RewriteRegime { p: u64, q: u64 },
    #[error("group parameters must be at least 1, got {0}")]
    BadParameter(u64),
}

/// Which group a word lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Gpq { p: u64, q: u64 },
    Gm41 { m: u64 },
    Gnu41,
    GnuFree,
    GTrans,
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Gpq { p, q } => write!(f, "G({p},{q})"),
            GroupSpec::Gm41 { m } => write!(f, "G({m},4,1)"),
            GroupSpec::Gnu41 => write!(f, "G(nu,4,1)"),
            GroupSpec::GnuFree => write!(f, "G(nu,1,nu)"),
            GroupSpec::GTrans => write!(f, "G(trans)"),
        }
    }
}

impl GroupSpec {
    pub fn alphabet(&self) -> &'static [Gen] {
        match self {
            GroupSpec::Gpq { .. } => &[Gen::A, Gen::B],
            GroupSpec::Gm41 { .. } => &[Gen::S, Gen::T, Gen::U],
            GroupSpec::Gnu41 => &[Gen::S, Gen::T],
            GroupSpec::GnuFree => &[Gen::T, Gen::V],
            GroupSpec::GTrans => &[Gen::X, Gen::V],
        }
    }

    fn validate(&self) -> Result<(), WordError> {
        match self {
            GroupSpec::Gpq { p, q } => {
                if *p == 0 || *q == 0 {
                    return Err(WordError::BadParameter(0));
                }
            }
            GroupSpec::Gm41 { m } => {
                if *m == 0 {
                    return Err(WordError::BadParameter(0));
                }
            }
            _ => {}
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    A,
    B,
    S,
    T,
    U,
    V,
    X,
}

impl Gen {
    pub fn letter(&self) -> char {
        match self {
            Gen::A => 'A',
            Gen::B => 'B',
            Gen::S => 'S',
            Gen::T => 'T',
            Gen::U => 'U',
            Gen::V => 'V',
            Gen::X => 'X',
        }
    }

    fn from_char(c: char) -> Option<Gen> {
        match c {
            'A' => Some(Gen::A),
            'B' => Some(Gen::B),
            'S' => Some(Gen::S),
            'T' => Some(Gen::T),
            'U' => Some(Gen::U),
            'V' => Some(Gen::V),
            'X' => Some(Gen::X),
            _ => None,
        }
    }
}

/// A freely reduced word: no zero exponents, no adjacent equal generators,
/// every generator drawn from the family alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    spec: GroupSpec,
    syls: Vec<(Gen, i64)>,
}

fn reduce_syllables(syls: Vec<(Gen, i64)>) -> Vec<(Gen, i64)> {
    let mut out: Vec<(Gen, i64)> = Vec::with_capacity(syls.len());
    for (g, e) in syls {
        if e == 0 {
            continue;
        }
        match out.last_mut() {
            Some((lg, le)) if *lg == g => {
                *le = le.checked_add(e).expect("exponent overflow");
                if *le == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        }
    }
    out
}

impl Word {
    pub fn identity(spec: GroupSpec) -> Word {
        spec.validate().expect("bad group parameters");
        Word { spec, syls: Vec::new() }
    }

    pub fn from_syllables(spec: GroupSpec, syls: Vec<(Gen, i64)>) -> Result<Word, WordError> {
        spec.validate()?;
        for (g, _) in &syls {
            if !spec.alphabet().contains(g) {
                return Err(WordError::GeneratorNotInFamily {
                    offset: 0,
                    gen: g.letter(),
                    family: spec.to_string(),
                });
            }
            if let (Gen::U, GroupSpec::Gm41 { m }) = (g, &spec) {
                if m % 4 != 0 {
                    return Err(WordError::QuarterTurnUnavailable { m: *m });
                }
            }
        }
        Ok(Word {
            spec,
            syls: reduce_syllables(syls),
        })
    }

    /// Parse the whitespace-separated syllable grammar. Errors carry the
    /// byte offset of the offending token.
    pub fn parse(spec: GroupSpec, text: &str) -> Result<Word, WordError> {
        spec.validate()?;
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "ε" {
            return Ok(Word::identity(spec));
        }
        let mut syls = Vec::new();
        let mut chars = text.char_indices().peekable();
        while let Some(&(start, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            chars.next();
            if c == 'ε' {
                return Err(WordError::UnknownGenerator {
                    offset: start,
                    found: c,
                });
            }
            let gen = Gen::from_char(c).ok_or(WordError::UnknownGenerator {
                offset: start,
                found: c,
            })?;
            let mut exp = 1i64;
            if let Some(&(_, '^')) = chars.peek() {
                chars.next();
                let expo_start = chars.peek().map(|&(i, _)| i).unwrap_or(text.len());
                let mut digits = String::new();
                if let Some(&(_, sign)) = chars.peek() {
                    if sign == '-' || sign == '+' {
                        digits.push(sign);
                        chars.next();
                    }
                }
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                if digits.is_empty() || digits == "-" || digits == "+" {
                    return Err(WordError::BadExponent { offset: expo_start });
                }
                exp = digits
                    .parse::<i64>()
                    .map_err(|_| WordError::BadExponent { offset: expo_start })?;
            }
            // A syllable must end at whitespace or end of input.
            if let Some(&(i, nc)) = chars.peek() {
                if !nc.is_whitespace() {
                    return Err(WordError::BadExponent { offset: i });
                }
            }
            syls.push((gen, exp));
        }
        Word::from_syllables(spec, syls)
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn syllables(&self) -> &[(Gen, i64)] {
        &self.syls
    }

    pub fn syllable_count(&self) -> usize {
        self.syls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syls.is_empty()
    }

    pub fn invert(&self) -> Word {
        let syls = self
            .syls
            .iter()
            .rev()
            .map(|(g, e)| (*g, e.checked_neg().expect("exponent overflow")))
            .collect();
        Word {
            spec: self.spec,
            syls,
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if self.spec != other.spec {
            return Err(WordError::SpecMismatch {
                expected: self.spec.to_string(),
                found: other.spec.to_string(),
            });
        }
        let mut syls = self.syls.clone();
        syls.extend_from_slice(&other.syls);
        Ok(Word {
            spec: self.spec,
            syls: reduce_syllables(syls),
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syls.is_empty() {
            return write!(f, "ε");
        }
        let mut first = true;
        for (g, e) in &self.syls {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{}", g.letter())?;
            } else {
                write!(f, "{}^{}", g.letter(), e)?;
            }
        }
        Ok(())
    }
}

/// An exactly evaluated word: which scalar ring depends on the family.
#[derive(Debug, Clone, PartialEq)]
pub enum ExactMatrix {
    Cyclo(Mat3<CycloNum>),
    Pyth(Mat3<Rat5>),
    Formal(Mat3<LaurentGaussian>),
}

impl ExactMatrix {
    pub fn is_identity(&self) -> bool {
        match self {
            ExactMatrix::Cyclo(m) => m.is_identity(),
            ExactMatrix::Pyth(m) => m.is_identity(),
            ExactMatrix::Formal(m) => m.is_identity(),
        }
    }
}

pub(crate) fn s_int_mat() -> Mat3i {
    Mat3::from_rows([[0, 0, 1], [0, 1, 0], [-1, 0, 0]])
}

/// Evaluate a word in its family's exact scalar ring.
pub fn evaluate(w: &Word) -> ExactMatrix {
    match w.spec {
        GroupSpec::Gpq { .. } => ExactMatrix::Cyclo(evaluate_gpq(w).unwrap()),
        GroupSpec::Gm41 { .. } => ExactMatrix::Cyclo(evaluate_gm41(w).unwrap()),
        GroupSpec::Gnu41 | GroupSpec::GnuFree => ExactMatrix::Pyth(evaluate_rat5(w).unwrap()),
        GroupSpec::GTrans => ExactMatrix::Formal(evaluate_formal(w).unwrap()),
    }
}

fn spec_mismatch(expected: &str, w: &Word) -> WordError {
    WordError::SpecMismatch {
        expected: expected.to_string(),
        found: w.spec.to_string(),
    }
}

/// Exact evaluation for two-axis-rotation words. The angle lattice is p·q:
/// A^e is the x-rotation through 2π·eq/(pq) and B^e the z-rotation through
/// 2π·ep/(pq), so entries live at storage conductor lcm(4, pq).
pub fn evaluate_gpq(w: &Word) -> Result<Mat3<CycloNum>, WordError> {
    let GroupSpec::Gpq { p, q } = w.spec else {
        return Err(spec_mismatch("G(p,q)", w));
    };
    let m = p.checked_mul(q).expect("conductor overflow");
    let mut acc = rot3::identity_cyclo(m);
    for (g, e) in &w.syls {
        let syl = match g {
            Gen::A => rot_axis(Axis::X, e * q as i64, m),
            Gen::B => rot_axis(Axis::Z, e * p as i64, m),
            _ => unreachable!("alphabet enforced at construction"),
        };
        acc = acc.mul(&syl);
    }
    Ok(acc)
}

/// Exact evaluation for S/T/U words at angle lattice m, storage lcm(4, m).
pub fn evaluate_gm41(w: &Word) -> Result<Mat3<CycloNum>, WordError> {
    let GroupSpec::Gm41 { m } = w.spec else {
        return Err(spec_mismatch("G(m,4,1)", w));
    };
    let n = rot3::storage_conductor(m);
    let mut acc = rot3::identity_cyclo(m);
    for (g, e) in &w.syls {
        let syl = match g {
            Gen::S => rot_axis(Axis::Y, e * (n / 4) as i64, n),
            Gen::T => rot_axis(Axis::X, e * (n / m) as i64, n),
            Gen::U => rot_axis(Axis::X, e * (n / 4) as i64, n),
            _ => unreachable!("alphabet enforced at construction"),
        };
        acc = acc.mul(&syl);
    }
    Ok(acc)
}

/// Exact evaluation over denominator-5 rationals (ν-rotation families).
pub fn evaluate_rat5(w: &Word) -> Result<Mat3<Rat5>, WordError> {
    if !matches!(w.spec, GroupSpec::Gnu41 | GroupSpec::GnuFree) {
        return Err(spec_mismatch("G(nu,4,1) or G(nu,1,nu)", w));
    }
    let s = int_mat_to_rat5(&s_int_mat());
    let s3 = s.transpose();
    let mut acc = Mat3::identity_with(Rat5::from_integer(0), Rat5::from_integer(1));
    for (g, e) in &w.syls {
        let syl = match g {
            Gen::S => {
                let mut p = Mat3::identity_with(Rat5::from_integer(0), Rat5::from_integer(1));
                for _ in 0..e.rem_euclid(4) {
                    p = p.mul(&s);
                }
                p
            }
            Gen::T => pythagorean_rot(Axis::X, *e),
            // V = S³TS is the same rotation about the z axis.
            Gen::V => s3.mul(&pythagorean_rot(Axis::X, *e)).mul(&s),
            _ => unreachable!("alphabet enforced at construction"),
        };
        acc = acc.mul(&syl);
    }
    Ok(acc)
}

/// Exact evaluation over formal Laurent matrices (transcendental family).
pub fn evaluate_formal(w: &Word) -> Result<Mat3<LaurentGaussian>, WordError> {
    if w.spec != GroupSpec::GTrans {
        return Err(spec_mismatch("G(trans)", w));
    }
    let s = int_mat_to_laurent(&s_int_mat());
    let s3 = s.transpose();
    let mut acc = Mat3::identity_with(LaurentGaussian::zero(), LaurentGaussian::one());
    for (g, e) in &w.syls {
        let syl = match g {
            Gen::X => formal_rot_x(*e),
            Gen::V => s3.mul(&formal_rot_x(*e)).mul(&s),
            _ => unreachable!("alphabet enforced at construction"),
        };
        acc = acc.mul(&syl);
    }
    Ok(acc)
}

/// Where the A/B ↦ S/T translation should land.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteTarget {
    /// m = lcm(p, q); needs 4 | p and 4 | q.
    Lcm,
    /// m = p·q; always available.
    PqProduct,
}

/// Translate an A/B word into the S/T alphabet: with T the x-rotation by
/// 2π/m, A = T^{m/p} and B = S³ T^{m/q} S.
pub fn rewrite_to_gm41(w: &Word, target: RewriteTarget) -> Result<Word, WordError> {
    let GroupSpec::Gpq { p, q } = w.spec else {
        return Err(spec_mismatch("G(p,q)", w));
    };
    let m = match target {
        RewriteTarget::Lcm => {
            if p % 4 != 0 || q % 4 != 0 {
                return Err(WordError::RewriteRegime { p, q });
            }
            p.lcm(&q)
        }
        RewriteTarget::PqProduct => p.checked_mul(q).expect("conductor overflow"),
    };
    let mut syls = Vec::new();
    for (g, e) in &w.syls {
        match g {
            Gen::A => syls.push((Gen::T, e * (m / p) as i64)),
            Gen::B => {
                syls.push((Gen::S, 3));
                syls.push((Gen::T, e * (m / q) as i64));
                syls.push((Gen::S, 1));
            }
            _ => unreachable!(),
        }
    }
    Word::from_syllables(GroupSpec::Gm41 { m }, syls)
}
