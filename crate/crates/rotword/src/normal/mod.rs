//! Canonical forms and the word-problem decision procedure.

mod abpairs;
mod free;
mod gm41;
mod hgroup;
mod lrc;
mod nu41;
mod sbracket;

pub use free::{normalize_free, FreeForm};
pub use gm41::{normalize_gm41, Gm41Form, WHead};
pub use hgroup::{h_contains, h_elements, h_word, h_word_table, HCase};
pub use lrc::{normalize_lrc, LrcForm, Variant};
pub use nu41::{normalize_nu41, Nu41Form};

pub(crate) use free::{enumerate_free_forms, odometer};
pub(crate) use gm41::{bracket_stage, SandwichStage};
pub(crate) use lrc::{enumerate_lrc_forms, relabel_ab};
pub(crate) use sbracket::{cleanup, sigma_walk, Bracket};

use thiserror::Error;

/// Reasons a word cannot be brought to a canonical form.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum NormalError {
    /// The word belongs to a different family than the procedure handles.
    #[error("word lives in {found}, expected {expected}")]
    WrongFamily {
        expected: &'static str,
        found: String,
    },
    /// G(p,q) canonical forms need p, q >= 3.
    #[error("G({p},{q}) needs both parameters at least 3")]
    SmallParameters { p: u64, q: u64 },
    /// The parameters fall outside the regime this normalizer covers.
    #[error("G({p},{q}) is outside this regime: {needed}")]
    WrongRegime {
        p: u64,
        q: u64,
        needed: &'static str,
    },
    /// No terminating decision procedure is implemented for this family;
    /// non-identity certificates still apply.
    #[error("no word-problem decision for {family}; use a certificate")]
    UnsupportedFamily { family: String },
}

use crate::words::{rewrite_to_gm41, GroupSpec, RewriteTarget, Word};

/// One canonical object per group element, tagged by the regime that
/// produced it.
///
/// Words over G(p,q) with both parameters divisible by four are rewritten
/// over the quarter-turn family at m = lcm(p, q) first, so their canonical
/// form (and the word it prints) lives in that alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CanonicalForm {
    /// Both parameters odd: the group is a free product and the alternating
    /// word itself is canonical.
    FreeProduct(FreeForm),
    /// One even parameter: quarter-window alternating form.
    Lrc(LrcForm),
    /// Quarter-turn family: head, sandwich factors, and finite tail.
    Gm41(Gm41Form),
    /// The 3-4-5 rotation group: bracketed form over S and T.
    Nu41(Nu41Form),
}

impl CanonicalForm {
    pub fn to_word(&self) -> Word {
        match self {
            CanonicalForm::FreeProduct(f) => f.to_word(),
            CanonicalForm::Lrc(f) => f.to_word(),
            CanonicalForm::Gm41(f) => f.to_word(),
            CanonicalForm::Nu41(f) => f.to_word(),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            CanonicalForm::FreeProduct(f) => f.is_identity(),
            CanonicalForm::Lrc(f) => f.is_identity(),
            CanonicalForm::Gm41(f) => f.is_identity(),
            CanonicalForm::Nu41(f) => f.is_identity(),
        }
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// Canonicalize with the default variant (L) where a variant applies.
pub fn normalize(word: &Word) -> Result<CanonicalForm, NormalError> {
    normalize_with(word, Variant::default())
}

/// Canonicalize, picking the procedure from the word's group parameters.
pub fn normalize_with(word: &Word, variant: Variant) -> Result<CanonicalForm, NormalError> {
    match word.spec() {
        GroupSpec::Gpq { p, q } => {
            if p < 3 || q < 3 {
                return Err(NormalError::SmallParameters { p, q });
            }
            if p % 2 == 1 && q % 2 == 1 {
                return Ok(CanonicalForm::FreeProduct(normalize_free(word)?));
            }
            if p % 4 == 0 && q % 4 == 0 {
                let rewritten = rewrite_to_gm41(word, RewriteTarget::Lcm)
                    .expect("regime checked before rewrite");
                return Ok(CanonicalForm::Gm41(normalize_gm41(&rewritten)?));
            }
            Ok(CanonicalForm::Lrc(normalize_lrc(word, variant)?))
        }
        GroupSpec::Gm41 { .. } => Ok(CanonicalForm::Gm41(normalize_gm41(word)?)),
        GroupSpec::Gnu41 => Ok(CanonicalForm::Nu41(normalize_nu41(word)?)),
        GroupSpec::GnuFree | GroupSpec::GTrans => Err(NormalError::UnsupportedFamily {
            family: word.spec().to_string(),
        }),
    }
}

/// Decide whether two words of the same group name the same rotation.
pub fn equal(a: &Word, b: &Word) -> Result<bool, NormalError> {
    if a.spec() != b.spec() {
        return Err(NormalError::WrongFamily {
            expected: "two words over the same group",
            found: format!("{} and {}", a.spec(), b.spec()),
        });
    }
    Ok(normalize(a)? == normalize(b)?)
}

/// Decide whether a word names the identity rotation.
pub fn is_identity(word: &Word) -> Result<bool, NormalError> {
    Ok(normalize(word)?.is_identity())
}
