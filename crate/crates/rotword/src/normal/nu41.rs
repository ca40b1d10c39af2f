//! Canonical forms for the group generated by S and the rotation about x
//! through the angle with cosine 3/5.
//!
//! That angle is an irrational multiple of a full turn, so T has infinite
//! order and exponents are never wrapped. Cleanup and bracketing alone
//! produce S^{3w} (S T^{a_1}) ... (S T^{a_n}) S^e with nonzero integer
//! exponents, and no nonempty bracketed word is the identity, so the form
//! decides the word problem.

use super::sbracket::{cleanup, sigma_walk};
use super::NormalError;
use crate::words::{Gen, GroupSpec, Word};
use std::fmt;

/// Bracketed form S^{3w} (S T^{a_1}) ... (S T^{a_n}) S^e with each a_i a
/// nonzero integer and e in 0..4. The identity has w false, no factors,
/// and e = 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Nu41Form {
    w_s3: bool,
    factors: Vec<i64>,
    s_tail: u8,
}

/// Reduce a word over S and the infinite-order T to its bracketed form.
pub fn normalize_nu41(word: &Word) -> Result<Nu41Form, NormalError> {
    if word.spec() != GroupSpec::Gnu41 {
        return Err(NormalError::WrongFamily {
            expected: "G(nu,4,1)",
            found: word.spec().to_string(),
        });
    }
    let stable = cleanup(word.syllables(), None);
    let br = sigma_walk(&stable);
    Ok(Nu41Form {
        w_s3: br.w_s3,
        factors: br.factors,
        s_tail: br.e_pow,
    })
}

impl Nu41Form {
    pub fn head_is_s3(&self) -> bool {
        self.w_s3
    }

    pub fn factors(&self) -> &[i64] {
        &self.factors
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn s_tail(&self) -> u8 {
        self.s_tail
    }

    pub fn is_identity(&self) -> bool {
        !self.w_s3 && self.factors.is_empty() && self.s_tail == 0
    }

    pub fn to_word(&self) -> Word {
        let mut syls: Vec<(Gen, i64)> = Vec::with_capacity(2 * self.factors.len() + 2);
        if self.w_s3 {
            syls.push((Gen::S, 3));
        }
        for &a in &self.factors {
            syls.push((Gen::S, 1));
            syls.push((Gen::T, a));
        }
        if self.s_tail != 0 {
            syls.push((Gen::S, i64::from(self.s_tail)));
        }
        Word::from_syllables(GroupSpec::Gnu41, syls)
            .expect("canonical syllables form a valid word")
    }

    pub fn check_invariants(&self) -> Result<(), String> {
        if self.factors.is_empty() && self.w_s3 {
            return Err("head S^3 without factors".into());
        }
        if let Some(i) = self.factors.iter().position(|&a| a == 0) {
            return Err(format!("zero exponent at factor {i}"));
        }
        if self.s_tail > 3 {
            return Err(format!("tail exponent {} out of range", self.s_tail));
        }
        Ok(())
    }
}

impl fmt::Display for Nu41Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::evaluate_rat5;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashMap;

    fn word(text: &str) -> Word {
        Word::parse(GroupSpec::Gnu41, text).expect("test word parses")
    }

    fn random_word(rng: &mut ChaCha8Rng) -> Word {
        let len = rng.gen_range(0..=10);
        let syls = (0..len)
            .map(|_| {
                let g = if rng.gen_bool(0.5) { Gen::S } else { Gen::T };
                let mut e = rng.gen_range(-6i64..=6);
                if e == 0 {
                    e = 1;
                }
                (g, e)
            })
            .collect();
        Word::from_syllables(GroupSpec::Gnu41, syls).expect("random word is valid")
    }

    #[test]
    fn hand_bracketings_are_pinned() {
        let f = normalize_nu41(&word("T^5 S T^-2 S^3")).unwrap();
        assert!(f.head_is_s3());
        assert_eq!(f.factors(), &[5, -2]);
        assert_eq!(f.s_tail(), 3);

        let f = normalize_nu41(&word("S^2 T^4 S^2 T^4")).unwrap();
        assert!(f.is_identity());

        let f = normalize_nu41(&word("S^-1")).unwrap();
        assert!(!f.head_is_s3());
        assert!(f.factors().is_empty());
        assert_eq!(f.s_tail(), 3);
    }

    #[test]
    fn form_preserves_the_matrix_and_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..120 {
            let w = random_word(&mut rng);
            let f = normalize_nu41(&w).unwrap();
            assert_eq!(f.check_invariants(), Ok(()));
            assert_eq!(
                evaluate_rat5(&w).unwrap(),
                evaluate_rat5(&f.to_word()).unwrap(),
                "word {w}"
            );
            assert_eq!(f, normalize_nu41(&f.to_word()).unwrap());
        }
    }

    #[test]
    fn nonempty_bracketed_words_are_never_the_identity() {
        // Spot check against exact rational matrices: a bracketed word with
        // factors always moves some vector.
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let mut distinct = HashMap::new();
        for _ in 0..150 {
            let w = random_word(&mut rng);
            let f = normalize_nu41(&w).unwrap();
            let mat = evaluate_rat5(&w).unwrap();
            if f.factor_count() > 0 {
                assert!(!mat.is_identity(), "word {w} bracketed to {f:?}");
            }
            if let Some(prev) = distinct.insert(mat, f.clone()) {
                assert_eq!(prev, f, "same matrix, different forms");
            }
        }
    }

    #[test]
    fn wrong_family_is_rejected() {
        let w = Word::identity(GroupSpec::Gm41 { m: 8 });
        assert!(matches!(
            normalize_nu41(&w),
            Err(NormalError::WrongFamily { .. })
        ));
    }
}
