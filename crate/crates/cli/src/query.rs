//! Turns command-line representation arguments into validated labels and
//! weights, producing diagnostics that name the violated constraint.

use fundstring::weights::{Family, LieType, StringLabel, Variant, Weight};

use crate::{RepArgs, UsageError};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum VariantArg {
    String,
    SpinPlus,
    SpinMinus,
    /// Both top constituents of the family-D `p = n` case, as a pair.
    SplitPair,
    SplitMinus,
    SplitPlus,
}

pub fn parse_variant(s: &str) -> Result<VariantArg, String> {
    match s {
        "string" => Ok(VariantArg::String),
        "spin+" => Ok(VariantArg::SpinPlus),
        "spin-" => Ok(VariantArg::SpinMinus),
        "split" => Ok(VariantArg::SplitPair),
        "split-" => Ok(VariantArg::SplitMinus),
        "split+" => Ok(VariantArg::SplitPlus),
        other => Err(format!(
            "unknown variant `{other}`; expected string, spin+, spin-, split, split- or split+"
        )),
    }
}

impl VariantArg {
    pub fn tag(self) -> &'static str {
        match self {
            VariantArg::String => "string",
            VariantArg::SpinPlus => "spin+",
            VariantArg::SpinMinus => "spin-",
            VariantArg::SplitPair => "split",
            VariantArg::SplitMinus => "split-",
            VariantArg::SplitPlus => "split+",
        }
    }
}

/// A resolved query target: one label, or the family-D top pair.
pub enum QueryTarget {
    Single(StringLabel),
    /// `(lie, k)`: evaluated through the splitting of the reducible top.
    Pair(LieType, i64),
}

impl QueryTarget {
    pub fn lie(&self) -> LieType {
        match self {
            QueryTarget::Single(label) => label.lie(),
            QueryTarget::Pair(lie, _) => *lie,
        }
    }

    pub fn k(&self) -> i64 {
        match self {
            QueryTarget::Single(label) => label.k(),
            QueryTarget::Pair(_, k) => *k,
        }
    }

    /// The implied fundamental index, reported back in structured output.
    pub fn p(&self) -> usize {
        match self {
            QueryTarget::Single(label) => label.p(),
            QueryTarget::Pair(lie, _) => lie.rank(),
        }
    }

    /// Labels of the irreducible constituents this target covers.
    pub fn component_labels(&self) -> Vec<StringLabel> {
        match self {
            QueryTarget::Single(label) => vec![*label],
            QueryTarget::Pair(lie, k) => vec![
                StringLabel::split_minus(*lie, *k).expect("valid split label"),
                StringLabel::split_plus(*lie, *k).expect("valid split label"),
            ],
        }
    }
}

pub fn resolve_target(rep: &RepArgs) -> Result<QueryTarget, UsageError> {
    let family: Family = rep.family.into();
    let lie = LieType::new(family, rep.rank).map_err(UsageError::from)?;
    let n = lie.rank();
    let implied = |expected: usize, tag: &str| -> Result<(), UsageError> {
        match rep.p {
            None => Ok(()),
            Some(p) if p == expected => Ok(()),
            Some(p) => Err(UsageError(format!(
                "variant {tag} fixes p = {expected} for {lie}, got --p {p}"
            ))),
        }
    };
    match rep.variant {
        VariantArg::String => {
            let p = rep.p.ok_or(UsageError(
                "--p is required for the string variant".to_string(),
            ))?;
            let label = StringLabel::string(lie, rep.k, p).map_err(UsageError::from)?;
            Ok(QueryTarget::Single(label))
        }
        VariantArg::SpinPlus => {
            implied(n, "spin+")?;
            let label = StringLabel::spin_plus(lie, rep.k).map_err(UsageError::from)?;
            Ok(QueryTarget::Single(label))
        }
        VariantArg::SpinMinus => {
            implied(n.saturating_sub(1), "spin-")?;
            let label = StringLabel::spin_minus(lie, rep.k).map_err(UsageError::from)?;
            Ok(QueryTarget::Single(label))
        }
        VariantArg::SplitPair => {
            implied(n, "split")?;
            // constructing a component validates family and k
            StringLabel::split_plus(lie, rep.k).map_err(UsageError::from)?;
            Ok(QueryTarget::Pair(lie, rep.k))
        }
        VariantArg::SplitMinus => {
            implied(n, "split-")?;
            let label = StringLabel::split_minus(lie, rep.k).map_err(UsageError::from)?;
            Ok(QueryTarget::Single(label))
        }
        VariantArg::SplitPlus => {
            implied(n, "split+")?;
            let label = StringLabel::split_plus(lie, rep.k).map_err(UsageError::from)?;
            Ok(QueryTarget::Single(label))
        }
    }
}

/// Parse and rank-check a weight for the given algebra. Family A accepts
/// quotient (`n`) or ambient (`n + 1`) coordinates.
pub fn parse_weight(lie: LieType, text: &str) -> Result<Weight, UsageError> {
    let mu = Weight::parse(text).map_err(UsageError::from)?;
    let n = lie.rank();
    let ok = if lie.family() == Family::A {
        mu.rank() == n || mu.rank() == n + 1
    } else {
        mu.rank() == n
    };
    if !ok {
        let expected = if lie.family() == Family::A {
            format!("{n} or {}", n + 1)
        } else {
            format!("{n}")
        };
        return Err(UsageError(format!(
            "weight has {} coordinates but {lie} expects {expected}",
            mu.rank()
        )));
    }
    Ok(mu)
}

/// Variant tag used by a label in structured output.
pub fn label_tag(label: &StringLabel) -> &'static str {
    match label.variant() {
        Variant::String => "string",
        Variant::SpinPlus => "spin+",
        Variant::SpinMinus => "spin-",
        Variant::SplitMinus => "split-",
        Variant::SplitPlus => "split+",
    }
}
