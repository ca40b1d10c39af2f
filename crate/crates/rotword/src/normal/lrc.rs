//! Canonical forms for G(p,q) when one parameter is even and the parameters
//! are not both divisible by four.
//!
//! With p even, A^{p/2} is a half-turn about x and conjugates B to its
//! inverse, and when q is even B^{q/2} likewise inverts A. Those two
//! relations let us merge any interior half-turn into its neighbors and then
//! sweep out-of-range exponents toward one end of the word, paying for each
//! shift with a half-turn carried into the adjacent exponent. A word either
//! collapses to a single pair A^a B^b or reaches an alternating product
//! A^{a_1} B^{b_1} ... A^{a_n} B^{b_n} whose interior exponents sit in
//! quarter-turn windows. Three conventions differ only in where the loose
//! slots sit; each yields one form per group element.
//!
//! If q is even and p is not, the roles of A and B are swapped internally;
//! the reported word is always over the original generators.

use super::abpairs::{cleanup_ab, flatten_pairs, pack_pairs};
use super::free::odometer;
use super::sbracket::wrap_t;
use super::NormalError;
use crate::words::{Gen, GroupSpec, Word};
use std::fmt;

/// Which slots of the alternating product keep the loose half-turn range.
///
/// `L` leaves slack at the left end (a_1 and b_1), `R` at the right end
/// (a_n and b_n), and `C` at the two outer exponents (a_1 and b_n). For odd
/// q the `L` and `C` conventions coincide.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Variant {
    #[default]
    L,
    R,
    C,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::L => "L",
            Variant::R => "R",
            Variant::C => "C",
        })
    }
}

/// Canonical alternating product for the even-parameter regime.
///
/// Exponent pairs are stored over the working generator order (p even);
/// `swapped` records whether A and B were interchanged to get there. The
/// identity is the single pair (0, 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LrcForm {
    p: u64,
    q: u64,
    variant: Variant,
    swapped: bool,
    pairs: Vec<(i64, i64)>,
}

/// Bring a two-generator word to the canonical form of the given variant.
///
/// Requires p, q >= 3, at least one even, and not both divisible by four;
/// other parameters report which regime the word should go through instead.
pub fn normalize_lrc(word: &Word, variant: Variant) -> Result<LrcForm, NormalError> {
    let GroupSpec::Gpq { p, q } = word.spec() else {
        return Err(NormalError::WrongFamily {
            expected: "G(p,q)",
            found: word.spec().to_string(),
        });
    };
    if p < 3 || q < 3 {
        return Err(NormalError::SmallParameters { p, q });
    }
    let swapped = if p % 2 == 0 && q % 4 != 0 {
        false
    } else if q % 2 == 0 && p % 4 != 0 {
        true
    } else if p % 2 == 1 {
        return Err(NormalError::WrongRegime {
            p,
            q,
            needed: "one even parameter",
        });
    } else {
        return Err(NormalError::WrongRegime {
            p,
            q,
            needed: "parameters not both divisible by four",
        });
    };
    let (wp, wq) = if swapped { (q, p) } else { (p, q) };
    let syls = if swapped {
        relabel_ab(word.syllables())
    } else {
        word.syllables().to_vec()
    };
    let mut pairs = pack_pairs(&cleanup_ab(&syls, wp, wq));
    reduce_pairs(&mut pairs, wp, wq);
    if pairs.len() >= 2 {
        if wq % 2 == 0 {
            b_sweep(&mut pairs, wq, variant);
        }
        a_sweep(&mut pairs, wp, variant);
    }
    let form = LrcForm {
        p,
        q,
        variant,
        swapped,
        pairs,
    };
    debug_assert_eq!(form.check_invariants(), Ok(()));
    Ok(form)
}

/// Interchange the two generators of a G(p,q) word.
pub(crate) fn relabel_ab(syls: &[(Gen, i64)]) -> Vec<(Gen, i64)> {
    syls.iter()
        .map(|&(g, e)| match g {
            Gen::A => (Gen::B, e),
            Gen::B => (Gen::A, e),
            other => (other, e),
        })
        .collect()
}

/// Merge every interior half-turn until none remains. Uses
/// A^a B^b A^{p/2} B^c = A^{a+p/2} B^{c-b} and, for even q, the mirrored
/// B^{q/2} elimination. Each merge shortens the product, so this terminates.
fn reduce_pairs(pairs: &mut Vec<(i64, i64)>, p: u64, q: u64) {
    let hp = (p / 2) as i64;
    loop {
        *pairs = pack_pairs(&cleanup_ab(&flatten_pairs(pairs), p, q));
        if let Some(i) = (1..pairs.len()).find(|&i| pairs[i].0 == hp) {
            let (pa, pb) = pairs[i - 1];
            let b = pairs[i].1;
            pairs[i - 1] = (pa + hp, b - pb);
            pairs.remove(i);
            continue;
        }
        if q % 2 == 0 && pairs.len() >= 2 {
            let hq = (q / 2) as i64;
            if let Some(j) = (0..pairs.len() - 1).find(|&j| pairs[j].1 == hq) {
                let (na, nb) = pairs[j + 1];
                pairs[j] = (pairs[j].0 - na, nb + hq);
                pairs.remove(j + 1);
                continue;
            }
        }
        break;
    }
}

/// Sweep B-exponents into the quarter-turn window, carrying B^{q/2} toward
/// the loose end and negating the A-exponent it passes. Entering values are
/// never multiples of q/2 where the window applies, so no slot degenerates.
fn b_sweep(pairs: &mut [(i64, i64)], q: u64, variant: Variant) {
    let hq = (q / 2) as i64;
    let qi = q as i64;
    let shift = |r: i64| {
        if 4 * r >= qi {
            Some(r - hq)
        } else if 4 * r <= -qi {
            Some(r + hq)
        } else {
            None
        }
    };
    match variant {
        Variant::L => {
            for j in (1..pairs.len()).rev() {
                if let Some(nr) = shift(pairs[j].1) {
                    pairs[j].1 = nr;
                    pairs[j].0 = -pairs[j].0;
                    pairs[j - 1].1 = wrap_t(pairs[j - 1].1 + hq, q);
                }
            }
        }
        Variant::R | Variant::C => {
            for j in 0..pairs.len() - 1 {
                if let Some(nr) = shift(pairs[j].1) {
                    pairs[j].1 = nr;
                    pairs[j + 1].0 = -pairs[j + 1].0;
                    pairs[j + 1].1 = wrap_t(pairs[j + 1].1 + hq, q);
                }
            }
        }
    }
}

/// Sweep A-exponents into (-p/4, p/4], carrying A^{p/2} toward the loose end
/// and negating the B-exponent it passes. Runs after the B-sweep so every
/// negated B-exponent sits in a sign-symmetric window.
fn a_sweep(pairs: &mut [(i64, i64)], p: u64, variant: Variant) {
    let hp = (p / 2) as i64;
    let pi = p as i64;
    let shift = |a: i64| {
        if 4 * a > pi {
            Some(a - hp)
        } else if 4 * a <= -pi {
            Some(a + hp)
        } else {
            None
        }
    };
    match variant {
        Variant::L | Variant::C => {
            for i in (1..pairs.len()).rev() {
                if let Some(na) = shift(pairs[i].0) {
                    pairs[i].0 = na;
                    pairs[i - 1].0 = wrap_t(pairs[i - 1].0 + hp, p);
                    pairs[i - 1].1 = -pairs[i - 1].1;
                }
            }
        }
        Variant::R => {
            for i in 0..pairs.len() - 1 {
                if let Some(na) = shift(pairs[i].0) {
                    pairs[i].0 = na;
                    pairs[i].1 = -pairs[i].1;
                    pairs[i + 1].0 = wrap_t(pairs[i + 1].0 + hp, p);
                }
            }
        }
    }
}

impl LrcForm {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// True when the even parameter was q and the generators were swapped
    /// internally; `pairs` then alternate B-then-A in the original word.
    pub fn swapped(&self) -> bool {
        self.swapped
    }

    /// Working parameters with the even one first.
    pub fn working_params(&self) -> (u64, u64) {
        if self.swapped {
            (self.q, self.p)
        } else {
            (self.p, self.q)
        }
    }

    /// Exponent pairs over the working generator order.
    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_identity(&self) -> bool {
        self.pairs == [(0, 0)]
    }

    /// Rebuild the word over the original generators.
    pub fn to_word(&self) -> Word {
        let mut syls = flatten_pairs(&self.pairs);
        if self.swapped {
            syls = relabel_ab(&syls);
        }
        Word::from_syllables(
            GroupSpec::Gpq {
                p: self.p,
                q: self.q,
            },
            syls,
        )
        .expect("canonical syllables form a valid word")
    }

    /// Verify the variant's slot windows and nonzero constraints.
    pub fn check_invariants(&self) -> Result<(), String> {
        let (wp, wq) = self.working_params();
        let (pi, qi) = (wp as i64, wq as i64);
        let n = self.pairs.len();
        if n == 0 {
            return Err("empty pair list".into());
        }
        let loose_a = |a: i64| -pi < 2 * a && 2 * a <= pi;
        let loose_b = |b: i64| -qi < 2 * b && 2 * b <= qi;
        let tight_a = |a: i64| -pi < 4 * a && 4 * a <= pi;
        let tight_b = |b: i64| {
            if wq % 2 == 0 {
                4 * b.abs() < qi
            } else {
                2 * b.abs() < qi
            }
        };
        for (i, &(a, b)) in self.pairs.iter().enumerate() {
            if !loose_a(a) || !loose_b(b) {
                return Err(format!("pair {i} = ({a}, {b}) is not reduced"));
            }
            if n > 1 {
                if i > 0 && a == 0 {
                    return Err(format!("zero A-exponent at interior pair {i}"));
                }
                if i < n - 1 && b == 0 {
                    return Err(format!("zero B-exponent at interior pair {i}"));
                }
            }
        }
        if n == 1 {
            return Ok(());
        }
        for (i, &(a, _)) in self.pairs.iter().enumerate() {
            let ok = match self.variant {
                Variant::L | Variant::C => i == 0 || tight_a(a),
                Variant::R => {
                    if i < n - 1 {
                        tight_a(a)
                    } else {
                        2 * a != pi
                    }
                }
            };
            if !ok {
                return Err(format!("A-exponent {a} out of window at pair {i}"));
            }
        }
        for (j, &(_, b)) in self.pairs.iter().enumerate() {
            let ok = match self.variant {
                Variant::L => {
                    if j == 0 {
                        2 * b != qi
                    } else {
                        tight_b(b)
                    }
                }
                Variant::R | Variant::C => j == n - 1 || tight_b(b),
            };
            if !ok {
                return Err(format!("B-exponent {b} out of window at pair {j}"));
            }
        }
        Ok(())
    }
}

impl fmt::Display for LrcForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// All canonical forms with exactly `len` pairs, working parameters given
/// directly (p even, q not divisible by four). `len == 1` includes the
/// identity pair.
pub(crate) fn enumerate_lrc_forms(p: u64, q: u64, variant: Variant, len: usize) -> Vec<LrcForm> {
    assert!(p % 2 == 0 && q % 4 != 0, "enumeration needs working order");
    assert!(len >= 1);
    let (pi, qi) = (p as i64, q as i64);
    let window = |order: i64| -> Vec<i64> { (-((order - 1) / 2)..=order / 2).collect() };
    let loose_a: Vec<i64> = window(pi);
    let loose_b: Vec<i64> = window(qi);
    let tight_a_z: Vec<i64> = loose_a
        .iter()
        .copied()
        .filter(|&a| -pi < 4 * a && 4 * a <= pi)
        .collect();
    let tight_a: Vec<i64> = tight_a_z.iter().copied().filter(|&a| a != 0).collect();
    let loose_a_m: Vec<i64> = loose_a
        .iter()
        .copied()
        .filter(|&a| a != 0 && 2 * a != pi)
        .collect();
    let loose_b_m: Vec<i64> = loose_b
        .iter()
        .copied()
        .filter(|&b| b != 0 && 2 * b != qi)
        .collect();
    let tight_b_z: Vec<i64> = loose_b
        .iter()
        .copied()
        .filter(|&b| {
            if q % 2 == 0 {
                4 * b.abs() < qi
            } else {
                2 * b.abs() < qi
            }
        })
        .collect();
    let tight_b: Vec<i64> = tight_b_z.iter().copied().filter(|&b| b != 0).collect();

    let mut slots: Vec<&[i64]> = Vec::with_capacity(2 * len);
    if len == 1 {
        slots.push(&loose_a);
        slots.push(&loose_b);
    } else {
        for i in 0..len {
            let a_slot: &[i64] = match self_slot_a(variant, i, len) {
                SlotKind::LooseFull => &loose_a,
                SlotKind::LooseMinus => &loose_a_m,
                SlotKind::TightZero => &tight_a_z,
                SlotKind::Tight => &tight_a,
            };
            let b_slot: &[i64] = match self_slot_b(variant, i, len) {
                SlotKind::LooseFull => &loose_b,
                SlotKind::LooseMinus => &loose_b_m,
                SlotKind::TightZero => &tight_b_z,
                SlotKind::Tight => &tight_b,
            };
            slots.push(a_slot);
            slots.push(b_slot);
        }
    }
    odometer(&slots)
        .into_iter()
        .map(|flat| LrcForm {
            p,
            q,
            variant,
            swapped: false,
            pairs: flat.chunks(2).map(|c| (c[0], c[1])).collect(),
        })
        .collect()
}

enum SlotKind {
    LooseFull,
    LooseMinus,
    TightZero,
    Tight,
}

fn self_slot_a(variant: Variant, i: usize, len: usize) -> SlotKind {
    match variant {
        Variant::L | Variant::C => {
            if i == 0 {
                SlotKind::LooseFull
            } else {
                SlotKind::Tight
            }
        }
        Variant::R => {
            if i == 0 {
                SlotKind::TightZero
            } else if i < len - 1 {
                SlotKind::Tight
            } else {
                SlotKind::LooseMinus
            }
        }
    }
}

fn self_slot_b(variant: Variant, j: usize, len: usize) -> SlotKind {
    match variant {
        Variant::L => {
            if j == 0 {
                SlotKind::LooseMinus
            } else if j < len - 1 {
                SlotKind::Tight
            } else {
                SlotKind::TightZero
            }
        }
        Variant::R | Variant::C => {
            if j < len - 1 {
                SlotKind::Tight
            } else {
                SlotKind::LooseFull
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rot3::int_mat_to_cyclo;
    use crate::words::evaluate_gpq;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::{HashMap, HashSet};

    const VARIANTS: [Variant; 3] = [Variant::L, Variant::R, Variant::C];

    fn word(p: u64, q: u64, text: &str) -> Word {
        Word::parse(GroupSpec::Gpq { p, q }, text).expect("test word parses")
    }

    fn random_word(rng: &mut ChaCha8Rng, p: u64, q: u64) -> Word {
        let len = rng.gen_range(0..=12);
        let syls = (0..len)
            .map(|_| {
                let g = if rng.gen_bool(0.5) { Gen::A } else { Gen::B };
                let mut e = rng.gen_range(-8i64..=8);
                if e == 0 {
                    e = 1;
                }
                (g, e)
            })
            .collect();
        Word::from_syllables(GroupSpec::Gpq { p, q }, syls).expect("random word is valid")
    }

    #[test]
    fn half_turn_conjugations_hold_as_matrices() {
        // The two relations behind every merge and carry in this module.
        for (p, q) in [(4, 6), (6, 10), (4, 3)] {
            let w = word(p, q, &format!("A^{} B A^{} B", p / 2, p / 2));
            assert!(evaluate_gpq(&w).unwrap().is_identity(), "p half-turn at ({p},{q})");
            if q % 2 == 0 {
                let w = word(p, q, &format!("B^{} A B^{} A", q / 2, q / 2));
                assert!(evaluate_gpq(&w).unwrap().is_identity(), "q half-turn at ({p},{q})");
            }
        }
    }

    #[test]
    fn the_g43_collision_lands_on_one_form() {
        // In G(4,3) the words ABA and A^-1 B^-1 A^-1 agree, a genuinely
        // non-free coincidence; both must reach the same form.
        let u = word(4, 3, "A B A");
        let v = word(4, 3, "A^-1 B^-1 A^-1");
        assert_eq!(evaluate_gpq(&u).unwrap(), evaluate_gpq(&v).unwrap());
        let fu = normalize_lrc(&u, Variant::L).unwrap();
        let fv = normalize_lrc(&v, Variant::L).unwrap();
        assert_eq!(fu, fv);
        assert_eq!(fu.pairs(), &[(1, 1), (1, 0)]);
    }

    #[test]
    fn a_pinned_sweep_with_even_q() {
        let w = word(4, 6, "A B^-2 A B^2");
        let f = normalize_lrc(&w, Variant::L).unwrap();
        assert_eq!(f.pairs(), &[(-1, -1), (1, -1)]);
        assert_eq!(
            evaluate_gpq(&w).unwrap(),
            evaluate_gpq(&f.to_word()).unwrap()
        );
    }

    #[test]
    fn relators_collapse_to_the_identity() {
        for (p, q) in [(4, 3), (4, 6), (6, 10), (3, 4), (10, 4), (5, 8)] {
            let mut relators = vec![format!("A^{p}"), format!("B^{q}")];
            if p % 2 == 0 {
                relators.push(format!("A^{} B A^{} B", p / 2, p / 2));
            }
            if q % 2 == 0 {
                relators.push(format!("B^{} A B^{} A", q / 2, q / 2));
            }
            for text in relators {
                for variant in VARIANTS {
                    let f = normalize_lrc(&word(p, q, &text), variant).unwrap();
                    assert!(f.is_identity(), "({p},{q}) {variant}: {text} gave {f:?}");
                }
            }
        }
    }

    #[test]
    fn inserting_relators_anywhere_fixes_the_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for (p, q) in [(4, 3), (4, 5), (6, 5), (4, 6), (6, 10)] {
            let spec = GroupSpec::Gpq { p, q };
            let mut relators = vec![
                Word::parse(spec, &format!("A^{p}")).unwrap(),
                Word::parse(spec, &format!("B^{q}")).unwrap(),
                Word::parse(spec, &format!("A^{} B A^{} B", p / 2, p / 2)).unwrap(),
            ];
            if q % 2 == 0 {
                relators.push(Word::parse(spec, &format!("B^{} A B^{} A", q / 2, q / 2)).unwrap());
            }
            for _ in 0..16 {
                let w = random_word(&mut rng, p, q);
                for variant in VARIANTS {
                    let base = normalize_lrc(&w, variant).unwrap();
                    for rel in &relators {
                        let cut = rng.gen_range(0..=w.syllable_count());
                        let head = Word::from_syllables(spec, w.syllables()[..cut].to_vec()).unwrap();
                        let tail = Word::from_syllables(spec, w.syllables()[cut..].to_vec()).unwrap();
                        let spliced = head.concat(rel).unwrap().concat(&tail).unwrap();
                        assert_eq!(
                            base,
                            normalize_lrc(&spliced, variant).unwrap(),
                            "({p},{q}) {variant}: {w} with {rel} inserted"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn form_preserves_the_matrix_and_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for (p, q) in [(4, 3), (4, 5), (6, 5), (4, 6), (6, 10), (3, 4), (10, 4), (5, 8)] {
            for _ in 0..24 {
                let w = random_word(&mut rng, p, q);
                let mat = evaluate_gpq(&w).unwrap();
                for variant in VARIANTS {
                    let f = normalize_lrc(&w, variant).unwrap();
                    assert_eq!(f.check_invariants(), Ok(()), "({p},{q}) {variant}: {w} -> {f:?}");
                    assert_eq!(
                        mat,
                        evaluate_gpq(&f.to_word()).unwrap(),
                        "({p},{q}) {variant}: {w}"
                    );
                    assert_eq!(f, normalize_lrc(&f.to_word(), variant).unwrap());
                    assert_eq!(mat.is_identity(), f.is_identity(), "({p},{q}) {variant}: {w}");
                }
            }
        }
    }

    #[test]
    fn swapping_relabels_but_preserves_value() {
        // With q even and p odd the generators are swapped internally; the
        // integer matrix J below exchanges the x- and z-axes, so a swapped
        // evaluation is exactly a J-conjugate of the direct one.
        let j = crate::rot3::Mat3::from_rows([[0, 0, 1], [0, -1, 0], [1, 0, 0]]);
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..12 {
            let w = random_word(&mut rng, 3, 4);
            let f = normalize_lrc(&w, Variant::L).unwrap();
            assert!(f.swapped());
            assert_eq!(f.working_params(), (4, 3));
            assert_eq!(f.to_word().spec(), GroupSpec::Gpq { p: 3, q: 4 });

            let relabeled =
                Word::from_syllables(GroupSpec::Gpq { p: 4, q: 3 }, relabel_ab(w.syllables()))
                    .unwrap();
            let jc = int_mat_to_cyclo(&j, 12);
            let conjugated = jc.mul(&evaluate_gpq(&relabeled).unwrap()).mul(&jc);
            assert_eq!(evaluate_gpq(&w).unwrap(), conjugated, "word {w}");
        }
    }

    #[test]
    fn enumeration_counts_match_the_product_formula() {
        // pq forms of one pair, then a factor (p/2 - 1) per extra A-slot and
        // (q - 1) or (q/2 - 1) per extra B-slot depending on parity.
        let expect = |p: u64, q: u64, n: u32| {
            let b = if q % 2 == 0 { q / 2 - 1 } else { q - 1 };
            p * q * (p / 2 - 1).pow(n - 1) * b.pow(n - 1)
        };
        for (p, q) in [(4, 3), (4, 6), (6, 5)] {
            for n in 1..=3usize {
                for variant in VARIANTS {
                    let forms = enumerate_lrc_forms(p, q, variant, n);
                    assert_eq!(
                        forms.len() as u64,
                        expect(p, q, n as u32),
                        "({p},{q}) {variant} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumerated_forms_are_distinct_fixpoints() {
        for variant in VARIANTS {
            let mut seen = HashMap::new();
            for n in 1..=2usize {
                for f in enumerate_lrc_forms(4, 6, variant, n) {
                    assert_eq!(f.check_invariants(), Ok(()), "{f:?}");
                    assert_eq!(f, normalize_lrc(&f.to_word(), variant).unwrap(), "{f:?}");
                    let mat = evaluate_gpq(&f.to_word()).unwrap();
                    if let Some(prev) = seen.insert(mat, f.clone()) {
                        panic!("{variant}: {prev:?} and {f:?} share a matrix");
                    }
                }
            }
            assert_eq!(seen.len(), 24 + 48);
        }
    }

    #[test]
    fn variants_cover_the_same_elements() {
        let collect = |variant: Variant| -> HashSet<_> {
            (1..=2usize)
                .flat_map(|n| enumerate_lrc_forms(4, 6, variant, n))
                .map(|f| evaluate_gpq(&f.to_word()).unwrap())
                .collect()
        };
        let l = collect(Variant::L);
        assert_eq!(l, collect(Variant::R));
        assert_eq!(l, collect(Variant::C));
    }

    #[test]
    fn left_and_centered_coincide_for_odd_q() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for (p, q) in [(4, 3), (6, 5)] {
            for _ in 0..20 {
                let w = random_word(&mut rng, p, q);
                assert_eq!(
                    normalize_lrc(&w, Variant::L).unwrap().pairs(),
                    normalize_lrc(&w, Variant::C).unwrap().pairs(),
                    "word {w}"
                );
            }
        }
    }

    #[test]
    fn regime_errors_are_reported() {
        let id = |p, q| Word::identity(GroupSpec::Gpq { p, q });
        assert!(matches!(
            normalize_lrc(&id(2, 5), Variant::L),
            Err(NormalError::SmallParameters { p: 2, q: 5 })
        ));
        assert!(matches!(
            normalize_lrc(&id(3, 5), Variant::L),
            Err(NormalError::WrongRegime { .. })
        ));
        for (p, q) in [(4, 4), (8, 4), (4, 8), (12, 8)] {
            assert!(
                matches!(
                    normalize_lrc(&id(p, q), Variant::L),
                    Err(NormalError::WrongRegime { .. })
                ),
                "({p},{q})"
            );
        }
        let w = Word::identity(GroupSpec::Gm41 { m: 8 });
        assert!(matches!(
            normalize_lrc(&w, Variant::L),
            Err(NormalError::WrongFamily { .. })
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn random_words_normalize_soundly(
            seed in 0u64..1u64 << 48,
            variant in prop::sample::select(&VARIANTS[..]),
            pq in prop::sample::select(&[(4u64, 6u64), (6, 10), (10, 4)][..]),
        ) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (p, q) = pq;
            let w = random_word(&mut rng, p, q);
            let f = normalize_lrc(&w, variant).unwrap();
            prop_assert_eq!(f.check_invariants(), Ok(()));
            prop_assert_eq!(evaluate_gpq(&w).unwrap(), evaluate_gpq(&f.to_word()).unwrap());
            prop_assert_eq!(&f, &normalize_lrc(&f.to_word(), variant).unwrap());
        }
    }
}
