//! Alternating canonical words for G(p,q) with both p and q odd.
//!
//! In this regime the only relations are A^p = B^q = 1, so every group
//! element has a unique alternating expression once exponents are wrapped
//! symmetrically around zero and trivial syllables removed. Equality and
//! the word problem reduce to structural comparison of the pair lists.

use super::abpairs::{cleanup_ab, flatten_pairs, pack_pairs};
use super::NormalError;
use crate::words::{Gen, GroupSpec, Word};
use std::fmt;

/// Alternating form A^{a_1} B^{b_1} ... A^{a_n} B^{b_n} with a_i wrapped
/// mod p and b_i mod q into the symmetric window. Only a_1 and b_n may be
/// zero; the identity is the single pair (0, 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeForm {
    p: u64,
    q: u64,
    pairs: Vec<(i64, i64)>,
}

/// Reduce a word to its alternating form. Requires both orders odd.
pub fn normalize_free(word: &Word) -> Result<FreeForm, NormalError> {
    let (p, q) = match word.spec() {
        GroupSpec::Gpq { p, q } => (p, q),
        other => {
            return Err(NormalError::WrongFamily {
                expected: "G(p,q)",
                found: other.to_string(),
            })
        }
    };
    if p < 3 || q < 3 {
        return Err(NormalError::SmallParameters { p, q });
    }
    if p % 2 == 0 || q % 2 == 0 {
        return Err(NormalError::WrongRegime {
            p,
            q,
            needed: "both p and q odd",
        });
    }
    let clean = cleanup_ab(word.syllables(), p, q);
    Ok(FreeForm {
        p,
        q,
        pairs: pack_pairs(&clean),
    })
}

impl FreeForm {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_identity(&self) -> bool {
        self.pairs == [(0, 0)]
    }

    pub fn to_word(&self) -> Word {
        Word::from_syllables(
            GroupSpec::Gpq { p: self.p, q: self.q },
            flatten_pairs(&self.pairs),
        )
        .expect("canonical syllables form a valid word")
    }

    /// Check the wrap and zero-slot constraints, reporting the first
    /// violation.
    pub fn check_invariants(&self) -> Result<(), String> {
        let pi = self.p as i64;
        let qi = self.q as i64;
        let n = self.pairs.len();
        if n == 0 {
            return Err("empty pair list".into());
        }
        for (i, &(a, b)) in self.pairs.iter().enumerate() {
            if !(-pi < 2 * a && 2 * a < pi) {
                return Err(format!("A exponent {a} out of range at pair {i}"));
            }
            if !(-qi < 2 * b && 2 * b < qi) {
                return Err(format!("B exponent {b} out of range at pair {i}"));
            }
            if n > 1 {
                if a == 0 && i > 0 {
                    return Err(format!("interior zero A exponent at pair {i}"));
                }
                if b == 0 && i < n - 1 {
                    return Err(format!("interior zero B exponent at pair {i}"));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for FreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// All forms with exactly `len` pairs, in lexicographic slot order. Length
/// one includes the identity.
pub(crate) fn enumerate_free_forms(p: u64, q: u64, len: usize) -> Vec<FreeForm> {
    assert!(len >= 1);
    let a_full: Vec<i64> = symmetric_window(p).collect();
    let a_nonzero: Vec<i64> = symmetric_window(p).filter(|&v| v != 0).collect();
    let b_full: Vec<i64> = symmetric_window(q).collect();
    let b_nonzero: Vec<i64> = symmetric_window(q).filter(|&v| v != 0).collect();
    let mut slots: Vec<&[i64]> = Vec::with_capacity(2 * len);
    for i in 0..len {
        slots.push(if i == 0 { &a_full } else { &a_nonzero });
        slots.push(if i == len - 1 { &b_full } else { &b_nonzero });
    }
    odometer(&slots)
        .into_iter()
        .map(|flat| FreeForm {
            p,
            q,
            pairs: flat.chunks(2).map(|c| (c[0], c[1])).collect(),
        })
        .collect()
}

fn symmetric_window(order: u64) -> impl Iterator<Item = i64> {
    let half = (order as i64 - 1) / 2;
    -half..=half
}

/// Cartesian product over the slot value lists.
pub(crate) fn odometer(slots: &[&[i64]]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for slot in slots {
        let mut next = Vec::with_capacity(out.len() * slot.len());
        for prefix in &out {
            for &v in *slot {
                let mut row = prefix.clone();
                row.push(v);
                next.push(row);
            }
        }
        out = next;
    }
    out
}
