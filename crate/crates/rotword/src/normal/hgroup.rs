//! The finite tail groups H that close off a bracketed S/T word.
//!
//! H is the subgroup of elements expressible with quarter turns only; its
//! size depends on the parity of the T-order m:
//!
//! - m odd: H = <S>, four elements.
//! - m twice an odd number: H = <S, T^{m/2}>, eight elements.
//! - m divisible by 4: H = <S, U>, the 24 rotations of the cube.
//!
//! For 4 | m the eight-element subgroup H1 = <S^2, S U S^-1> is the part
//! of H that commutes (or anticommutes) past S T^a factors; the cosets
//! H = H1 u S^3 H1 u U H1 give the three allowed head values. Every
//! element here is an exact integer matrix.

use crate::rot3::{Mat3, Mat3i};
use crate::words::Gen;
use once_cell::sync::Lazy;
use std::collections::HashMap;

pub(crate) fn ident() -> Mat3i {
    Mat3::identity_with(0, 1)
}

pub(crate) fn s_mat() -> Mat3i {
    Mat3::from_rows([[0, 0, 1], [0, 1, 0], [-1, 0, 0]])
}

pub(crate) fn u_mat() -> Mat3i {
    Mat3::from_rows([[1, 0, 0], [0, 0, 1], [0, -1, 0]])
}

/// The half turn about the x axis, T^{m/2} for any even m (also U^2).
pub(crate) fn t_half_mat() -> Mat3i {
    Mat3::from_rows([[1, 0, 0], [0, -1, 0], [0, 0, -1]])
}

pub(crate) fn s_pow(k: i64) -> Mat3i {
    s_mat().pow(k.rem_euclid(4) as u32, ident())
}

pub(crate) fn u_pow(k: i64) -> Mat3i {
    u_mat().pow(k.rem_euclid(4) as u32, ident())
}

/// Parity class of the T-order, which fixes the tail group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HCase {
    Odd,
    TwiceOdd,
    DivisibleBy4,
}

impl HCase {
    pub fn of(m: u64) -> HCase {
        if m % 2 == 1 {
            HCase::Odd
        } else if m % 4 == 2 {
            HCase::TwiceOdd
        } else {
            HCase::DivisibleBy4
        }
    }

    pub fn order(self) -> usize {
        match self {
            HCase::Odd => 4,
            HCase::TwiceOdd => 8,
            HCase::DivisibleBy4 => 24,
        }
    }
}

/// Generator steps for BFS and word spelling. The half turn is spelled
/// T^{m/2} because U is only in the alphabet when 4 | m.
fn h_steps(case: HCase, m: u64) -> Vec<(Mat3i, (Gen, i64))> {
    let mut steps = vec![
        (s_mat(), (Gen::S, 1)),
        (s_pow(3), (Gen::S, -1)),
    ];
    match case {
        HCase::Odd => {}
        HCase::TwiceOdd => steps.push((t_half_mat(), (Gen::T, (m / 2) as i64))),
        HCase::DivisibleBy4 => {
            steps.push((u_mat(), (Gen::U, 1)));
            steps.push((u_pow(3), (Gen::U, -1)));
        }
    }
    steps
}

/// Breadth-first closure of H with a shortest word (in generator steps)
/// for each element. Deterministic: fixed step order, insertion order.
pub fn h_word_table(case: HCase, m: u64) -> Vec<(Mat3i, Vec<(Gen, i64)>)> {
    let steps = h_steps(case, m);
    let mut table: Vec<(Mat3i, Vec<(Gen, i64)>)> = vec![(ident(), Vec::new())];
    let mut seen: HashMap<Mat3i, usize> = HashMap::new();
    seen.insert(ident(), 0);
    let mut frontier = 0;
    while frontier < table.len() {
        let (mat, word) = table[frontier].clone();
        frontier += 1;
        for (step_mat, step_syl) in &steps {
            let next = mat.mul(step_mat);
            if !seen.contains_key(&next) {
                let mut w = word.clone();
                w.push(*step_syl);
                seen.insert(next.clone(), table.len());
                table.push((next, w));
            }
        }
    }
    table
}

pub fn h_elements(case: HCase, m: u64) -> Vec<Mat3i> {
    h_word_table(case, m).into_iter().map(|(mat, _)| mat).collect()
}

pub fn h_contains(case: HCase, m: u64, mat: &Mat3i) -> bool {
    h_elements(case, m).iter().any(|h| h == mat)
}

/// Merged-syllable spelling of a tail element, empty for the identity.
pub fn h_word(case: HCase, m: u64, mat: &Mat3i) -> Option<Vec<(Gen, i64)>> {
    let table = h_word_table(case, m);
    let raw = table.into_iter().find(|(h, _)| h == mat)?.1;
    // Merge adjacent steps of the same generator (S S -> S^2 etc.).
    let mut out: Vec<(Gen, i64)> = Vec::new();
    for (g, e) in raw {
        match out.last_mut() {
            Some((lg, le)) if *lg == g => {
                *le += e;
                if *le == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        }
    }
    Some(out)
}

/// Decomposition of an element of G(4,4,1) as x * S^{2eps} (S U S^-1)^j
/// with x in {I, S^3, U} (encoded 0, 1, 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct H1Decomp {
    pub x_idx: u8,
    pub eps: u8,
    pub j: u8,
}

fn h1_element(eps: u8, j: u8) -> Mat3i {
    // S^{2eps} * S U^j S^3
    s_pow(2 * eps as i64)
        .mul(&s_mat())
        .mul(&u_pow(j as i64))
        .mul(&s_pow(3))
}

static H1_TABLE: Lazy<HashMap<Mat3i, H1Decomp>> = Lazy::new(|| {
    let xs = [ident(), s_pow(3), u_mat()];
    let mut table = HashMap::new();
    for (x_idx, x) in xs.iter().enumerate() {
        for eps in 0..2u8 {
            for j in 0..4u8 {
                let mat = x.mul(&h1_element(eps, j));
                let prev = table.insert(
                    mat,
                    H1Decomp {
                        x_idx: x_idx as u8,
                        eps,
                        j,
                    },
                );
                assert!(prev.is_none(), "coset representatives overlap");
            }
        }
    }
    assert_eq!(table.len(), 24);
    table
});

pub(crate) fn h1_decompose(mat: &Mat3i) -> Option<H1Decomp> {
    H1_TABLE.get(mat).copied()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tail_group_orders_are_4_8_24() {
        assert_eq!(h_elements(HCase::of(5), 5).len(), 4);
        assert_eq!(h_elements(HCase::of(6), 6).len(), 8);
        assert_eq!(h_elements(HCase::of(8), 8).len(), 24);
        assert_eq!(HCase::of(12), HCase::DivisibleBy4);
        assert_eq!(HCase::of(2), HCase::TwiceOdd);
        assert_eq!(HCase::of(1), HCase::Odd);
    }

    #[test]
    fn elements_are_rotations_with_determinant_one() {
        for mat in h_elements(HCase::DivisibleBy4, 8) {
            assert_eq!(mat.det(), 1);
            assert_eq!(mat.mul(&mat.transpose()), ident());
        }
    }

    #[test]
    fn word_table_spells_every_element() {
        for (case, m) in [
            (HCase::Odd, 5),
            (HCase::TwiceOdd, 6),
            (HCase::DivisibleBy4, 12),
        ] {
            for mat in h_elements(case, m) {
                let word = h_word(case, m, &mat).expect("element must have a word");
                let mut acc = ident();
                for (g, e) in word {
                    let step = match g {
                        Gen::S => s_pow(e),
                        Gen::U => u_pow(e),
                        Gen::T => {
                            assert_eq!(e, (m / 2) as i64);
                            t_half_mat()
                        }
                        _ => panic!("unexpected generator"),
                    };
                    acc = acc.mul(&step);
                }
                assert_eq!(acc, mat);
            }
        }
        assert_eq!(h_word(HCase::Odd, 5, &ident()), Some(vec![]));
        assert_eq!(h_word(HCase::Odd, 5, &u_mat()), None);
    }

    #[test]
    fn braid_identities_for_quarter_turns() {
        // S U S = U S U and S U^3 S = U^3 S U^3.
        let s = s_mat();
        let u = u_mat();
        let u3 = u_pow(3);
        assert_eq!(s.mul(&u).mul(&s), u.mul(&s).mul(&u));
        assert_eq!(s.mul(&u3).mul(&s), u3.mul(&s).mul(&u3));
    }

    #[test]
    fn half_turn_facts() {
        assert_eq!(u_mat().mul(&u_mat()), t_half_mat());
        // S (T^{m/2}) S^-1 = S^2 T^{m/2}: conjugating the x half turn by
        // S gives the z half turn.
        let lhs = s_mat().mul(&t_half_mat()).mul(&s_pow(3));
        let rhs = s_pow(2).mul(&t_half_mat());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn h1_is_an_eight_element_subgroup_with_three_cosets() {
        let mut h1: Vec<Mat3i> = Vec::new();
        for eps in 0..2 {
            for j in 0..4 {
                let m = h1_element(eps, j);
                assert!(!h1.contains(&m), "H1 elements must be distinct");
                h1.push(m);
            }
        }
        assert_eq!(h1.len(), 8);
        assert!(h1.contains(&s_pow(2)));
        let sus_inv = s_mat().mul(&u_mat()).mul(&s_pow(3));
        assert!(h1.contains(&sus_inv));
        // Closed under multiplication.
        for a in &h1 {
            for b in &h1 {
                assert!(h1.contains(&a.mul(b)));
            }
        }
        // Every cube rotation decomposes uniquely across the three cosets.
        let all = h_elements(HCase::DivisibleBy4, 8);
        for mat in &all {
            let d = h1_decompose(mat).expect("full coverage");
            let xs = [ident(), s_pow(3), u_mat()];
            let rebuilt = xs[d.x_idx as usize].mul(&h1_element(d.eps, d.j));
            assert_eq!(&rebuilt, mat);
        }
        assert!(h1_decompose(&Mat3::from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 2]])).is_none());
    }

    #[test]
    fn h1_composition_rule_matches_matrices() {
        for e1 in 0..2u8 {
            for j1 in 0..4u8 {
                for e2 in 0..2u8 {
                    for j2 in 0..4u8 {
                        let prod = h1_element(e1, j1).mul(&h1_element(e2, j2));
                        let eps = (e1 + e2) % 2;
                        let j = (if e2 == 1 { -(j1 as i64) } else { j1 as i64 } + j2 as i64)
                            .rem_euclid(4) as u8;
                        assert_eq!(prod, h1_element(eps, j));
                    }
                }
            }
        }
    }
}
