//! Shared syllable cleanup and S-power bracketing for S/T alphabets.
//!
//! Words over a quarter-turn S and a one-parameter generator T are first
//! stabilized: exponents wrapped, adjacent syllables merged, and every
//! interior S^2 pushed rightward with S^2 T^a = T^{-a} S^2. A stable list
//! strictly alternates, has interior S-powers in {1, 3}, and can then be
//! bracketed in one pass into W (S T^{a_1}) ... (S T^{a_n}) S^e with
//! W in {I, S^3}.

use crate::words::Gen;

/// Wrap `a` into (-m/2, m/2] modulo m.
pub(crate) fn wrap_t(a: i64, m: u64) -> i64 {
    let m = m as i64;
    let mut r = a.rem_euclid(m);
    if 2 * r > m {
        r -= m;
    }
    r
}

fn wrap_gen(g: Gen, e: i64, t_wrap: Option<u64>) -> i64 {
    match (g, t_wrap) {
        (Gen::S, _) => e.rem_euclid(4),
        (Gen::T, Some(m)) => wrap_t(e, m),
        (Gen::T, None) => e,
        _ => unreachable!("cleanup only sees S and T"),
    }
}

/// Stabilize an S/T syllable list. `t_wrap` gives T's finite order, or
/// None when T has infinite order.
pub(crate) fn cleanup(syls: &[(Gen, i64)], t_wrap: Option<u64>) -> Vec<(Gen, i64)> {
    let mut cur: Vec<(Gen, i64)> = syls.to_vec();
    loop {
        // Wrap, drop zeros, merge adjacent runs (with cascade).
        let mut merged: Vec<(Gen, i64)> = Vec::with_capacity(cur.len());
        for &(g, e) in &cur {
            let e = wrap_gen(g, e, t_wrap);
            if e == 0 {
                continue;
            }
            match merged.last_mut() {
                Some((lg, le)) if *lg == g => {
                    *le = wrap_gen(g, le.checked_add(e).expect("exponent overflow"), t_wrap);
                    if *le == 0 {
                        merged.pop();
                    }
                }
                _ => merged.push((g, e)),
            }
        }
        // Bubble interior S^2 factors to the right, flipping T signs.
        let mut pushed: Vec<(Gen, i64)> = Vec::with_capacity(merged.len());
        let mut pending2 = false;
        for &(g, e) in &merged {
            match g {
                Gen::T => pushed.push((Gen::T, if pending2 { -e } else { e })),
                Gen::S => {
                    let e2 = (e + if pending2 { 2 } else { 0 }).rem_euclid(4);
                    pending2 = false;
                    match e2 {
                        0 => {}
                        2 => pending2 = true,
                        v => pushed.push((Gen::S, v)),
                    }
                }
                _ => unreachable!(),
            }
        }
        if pending2 {
            pushed.push((Gen::S, 2));
        }
        if pushed == cur {
            return pushed;
        }
        cur = pushed;
    }
}

pub(crate) struct Bracket {
    pub w_s3: bool,
    pub factors: Vec<i64>,
    pub e_pow: u8,
}

/// Single left-to-right pass over a cleanup-stable list, carrying the
/// parity of S^2 factors pushed rightward.
pub(crate) fn sigma_walk(syls: &[(Gen, i64)]) -> Bracket {
    let mut w_s3 = false;
    let mut factors: Vec<i64> = Vec::new();
    let mut sigma: i64 = 0;
    let mut pending_s: i64 = 0;
    let mut first = true;
    for &(g, e) in syls {
        match g {
            Gen::S => {
                debug_assert_eq!(pending_s, 0, "adjacent S syllables after cleanup");
                pending_s = e;
            }
            Gen::T => {
                let beff = (pending_s + 2 * sigma).rem_euclid(4);
                pending_s = 0;
                // S^b T^a with b effective: odd b emits S T^{+-a}; even b
                // additionally peels S^3 off the front as W.
                let (neg, new_sigma, w) = match beff {
                    1 => (false, 0, false),
                    3 => (true, 1, false),
                    0 => (false, 0, true),
                    2 => (true, 1, true),
                    _ => unreachable!(),
                };
                if first {
                    w_s3 = w;
                } else {
                    debug_assert!(!w, "interior even S-power after cleanup");
                }
                factors.push(if neg { -e } else { e });
                sigma = new_sigma;
                first = false;
            }
            _ => unreachable!(),
        }
    }
    let e_pow = (pending_s + 2 * sigma).rem_euclid(4) as u8;
    Bracket {
        w_s3,
        factors,
        e_pow,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrap_t_hits_the_half_open_range() {
        assert_eq!(wrap_t(6, 12), 6);
        assert_eq!(wrap_t(7, 12), -5);
        assert_eq!(wrap_t(-6, 12), 6);
        assert_eq!(wrap_t(5, 9), -4);
        assert_eq!(wrap_t(4, 9), 4);
        assert_eq!(wrap_t(-13, 9), -4);
    }

    #[test]
    fn cleanup_reaches_a_stable_alternating_shape() {
        let syls = vec![
            (Gen::S, 5),
            (Gen::T, 3),
            (Gen::T, -3),
            (Gen::S, 2),
            (Gen::T, 4),
            (Gen::S, 1),
        ];
        let out = cleanup(&syls, Some(12));
        // S^5 merges to S, T^3 T^-3 drops, then S S^2 = S^3 pushes nothing:
        // S^3 T^4 S. The interior S stays odd.
        assert_eq!(out, vec![(Gen::S, 3), (Gen::T, 4), (Gen::S, 1)]);

        // An interior S^2 flips the following T and merges into the next S.
        let syls = vec![(Gen::S, 2), (Gen::T, 5), (Gen::S, 1), (Gen::T, 1)];
        let out = cleanup(&syls, Some(12));
        assert_eq!(out, vec![(Gen::T, -5), (Gen::S, 3), (Gen::T, 1)]);
    }

    #[test]
    fn cleanup_cascades_through_vanishing_syllables() {
        // S^2 annihilates with a later S^2, making the T's adjacent.
        let syls = vec![(Gen::T, 2), (Gen::S, 2), (Gen::T, 3), (Gen::S, 2), (Gen::T, 1)];
        let out = cleanup(&syls, Some(12));
        // T^2 [S^2 T^3 S^2] T^1 = T^2 T^-3 T^1 = T^0.
        assert_eq!(out, Vec::<(Gen, i64)>::new());
    }

    #[test]
    fn sigma_walk_matches_hand_bracketings() {
        // T^a = S^3 (S T^a).
        let br = sigma_walk(&cleanup(&[(Gen::T, 4)], Some(12)));
        assert!(br.w_s3);
        assert_eq!(br.factors, vec![4]);
        assert_eq!(br.e_pow, 0);

        // S^3 T^a = (S T^-a) S^2.
        let br = sigma_walk(&cleanup(&[(Gen::S, 3), (Gen::T, 4)], Some(12)));
        assert!(!br.w_s3);
        assert_eq!(br.factors, vec![-4]);
        assert_eq!(br.e_pow, 2);

        // S T^a S T^b is already bracketed.
        let br = sigma_walk(&cleanup(
            &[(Gen::S, 1), (Gen::T, 4), (Gen::S, 1), (Gen::T, -2)],
            Some(12),
        ));
        assert!(!br.w_s3);
        assert_eq!(br.factors, vec![4, -2]);
        assert_eq!(br.e_pow, 0);

        // S^3 T^4 S^3 T^2 S = (S T^-4)(S T^2) S: the first carry is
        // reabsorbed by the second S^3.
        let br = sigma_walk(&cleanup(
            &[(Gen::S, 3), (Gen::T, 4), (Gen::S, 3), (Gen::T, 2), (Gen::S, 1)],
            Some(12),
        ));
        assert!(!br.w_s3);
        assert_eq!(br.factors, vec![-4, 2]);
        assert_eq!(br.e_pow, 1);

        // Pure S-power word: no factors, exponent lands in E.
        let br = sigma_walk(&cleanup(&[(Gen::S, 7)], None));
        assert!(!br.w_s3);
        assert!(br.factors.is_empty());
        assert_eq!(br.e_pow, 3);
    }

    #[test]
    fn infinite_order_t_is_never_wrapped() {
        let br = sigma_walk(&cleanup(&[(Gen::T, 1000), (Gen::S, 1), (Gen::T, -7)], None));
        assert!(br.w_s3);
        assert_eq!(br.factors, vec![1000, -7]);
        assert_eq!(br.e_pow, 0);
    }
}
