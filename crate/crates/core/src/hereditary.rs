//! Hereditary power-series codec over `(N̂ⁿ, Fₙ, Fₙ₊₁)`.
//!
//! An element `b ∈ N̂ⁿ` is written as an `Fₙ`-sum of terms
//! `Fₙ₊₁(êₖ, k̂ⁿ⁺¹)`. Each scale `k` that is at least the base is itself
//! expanded one level up; smaller scales stay literal.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{require_base, Budget, Natural};
use crate::leveled::LeveledNat;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HereditaryTerm {
    pub level: u32,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    #[serde(with = "decimal")]
    pub digit: Natural,
    pub scale: Scale,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scale {
    Literal(u64),
    Nested(Box<HereditaryTerm>),
}

mod decimal {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    use crate::kernel::Natural;

    pub fn serialize<S: Serializer>(value: &Natural, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Natural, D::Error> {
        let text = String::deserialize(d)?;
        if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(D::Error::custom(format!("not a decimal natural: {text:?}")));
        }
        text.parse().map_err(D::Error::custom)
    }
}

/// Base-`w` digits, least significant first, no trailing zeros.
pub fn digits(a: &Natural, w: &Natural) -> Result<Vec<Natural>> {
    require_base(w)?;
    let mut out = Vec::new();
    let mut rest = a.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(w);
        out.push(r);
        rest = q;
    }
    Ok(out)
}

/// Canonical hereditary term for `a`.
pub fn encode(a: &LeveledNat) -> HereditaryTerm {
    let w = a.base();
    let entries = digits(a.coord(), w)
        .expect("LeveledNat bases are validated on construction")
        .into_iter()
        .enumerate()
        .filter(|(_, d)| !d.is_zero())
        .map(|(k, digit)| {
            let k = Natural::from(k);
            let scale = if k < *w {
                Scale::Literal(k.to_u64().expect("digit index fits in u64"))
            } else {
                let nested = LeveledNat::new(a.level() + 1, k, w.clone())
                    .expect("base already validated");
                Scale::Nested(Box::new(encode(&nested)))
            };
            Entry { digit, scale }
        })
        .collect();
    HereditaryTerm {
        level: a.level(),
        entries,
    }
}

/// Folds the term back with `Fₙ`/`Fₙ₊₁`, checking every invariant.
pub fn decode(t: &HereditaryTerm, w: &Natural, budget: &Budget) -> Result<LeveledNat> {
    require_base(w)?;
    let mut acc = LeveledNat::zero(t.level, w)?;
    let mut previous: Option<Natural> = None;
    for entry in &t.entries {
        if entry.digit.is_zero() || entry.digit >= *w {
            return Err(Error::MalformedTerm(format!(
                "digit {} outside (0, {w}) at level {}",
                entry.digit, t.level
            )));
        }
        let scale = match &entry.scale {
            Scale::Literal(k) => {
                let k = Natural::from(*k);
                if k >= *w {
                    return Err(Error::MalformedTerm(format!(
                        "literal scale {k} must be expanded (base {w})"
                    )));
                }
                k
            }
            Scale::Nested(inner) => {
                if inner.level != t.level + 1 {
                    return Err(Error::MalformedTerm(format!(
                        "nested term at level {} under level {}",
                        inner.level, t.level
                    )));
                }
                let k = decode(inner, w, budget)?.coord().clone();
                if k < *w {
                    return Err(Error::MalformedTerm(format!(
                        "scale {k} below base {w} must be literal"
                    )));
                }
                k
            }
        };
        if previous.as_ref().is_some_and(|p| *p >= scale) {
            return Err(Error::MalformedTerm(format!(
                "scales not strictly increasing at {scale}"
            )));
        }
        let digit = LeveledNat::new(t.level, entry.digit.clone(), w.clone())?;
        let unit = LeveledNat::new(t.level + 1, scale.clone(), w.clone())?.lower(budget)?;
        acc = digit.f_mul(&unit)?.f_add(&acc)?;
        previous = Some(scale);
    }
    Ok(acc)
}

impl HereditaryTerm {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("terms always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedTerm(e.to_string()))
    }
}
