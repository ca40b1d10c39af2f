//! Shared syllable handling for two-letter A/B words.
//!
//! Both G(p,q) canonical-form families store words as a list of pairs
//! (a_i, b_i) standing for A^{a_1} B^{b_1} ... A^{a_n} B^{b_n}, where only
//! a_1 and b_n may vanish and the identity is the single pair (0, 0).

use super::sbracket::wrap_t;
use crate::words::Gen;

/// Wrap exponents into the symmetric window, drop zeros, and merge
/// adjacent runs until the list is stable.
pub(crate) fn cleanup_ab(syls: &[(Gen, i64)], p: u64, q: u64) -> Vec<(Gen, i64)> {
    let mut cur = syls.to_vec();
    loop {
        let mut merged: Vec<(Gen, i64)> = Vec::with_capacity(cur.len());
        for &(g, e) in &cur {
            let order = match g {
                Gen::A => p,
                Gen::B => q,
                _ => unreachable!("A/B words only"),
            };
            let e = wrap_t(e, order);
            if e == 0 {
                continue;
            }
            match merged.last_mut() {
                Some((lg, le)) if *lg == g => {
                    *le = wrap_t(*le + e, order);
                    if *le == 0 {
                        merged.pop();
                    }
                }
                _ => merged.push((g, e)),
            }
        }
        if merged == cur {
            return merged;
        }
        cur = merged;
    }
}

/// Group a stable alternating list into pairs. The identity packs to the
/// single pair (0, 0).
pub(crate) fn pack_pairs(syls: &[(Gen, i64)]) -> Vec<(i64, i64)> {
    let mut pairs: Vec<(i64, i64)> = Vec::new();
    let mut pending_a: Option<i64> = None;
    for &(g, e) in syls {
        match g {
            Gen::A => {
                debug_assert!(pending_a.is_none(), "adjacent A syllables after cleanup");
                pending_a = Some(e);
            }
            Gen::B => pairs.push((pending_a.take().unwrap_or(0), e)),
            _ => unreachable!("A/B words only"),
        }
    }
    if let Some(a) = pending_a {
        pairs.push((a, 0));
    }
    if pairs.is_empty() {
        pairs.push((0, 0));
    }
    pairs
}

/// Emit the nonzero syllables of a pair list in word order.
pub(crate) fn flatten_pairs(pairs: &[(i64, i64)]) -> Vec<(Gen, i64)> {
    let mut syls = Vec::with_capacity(2 * pairs.len());
    for &(a, b) in pairs {
        if a != 0 {
            syls.push((Gen::A, a));
        }
        if b != 0 {
            syls.push((Gen::B, b));
        }
    }
    syls
}
