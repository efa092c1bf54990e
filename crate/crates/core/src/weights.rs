//! Exact weight-lattice arithmetic for the classical families.
//!
//! Weights are stored as doubled integer coordinates (the stored value is
//! twice the coordinate), so both the integer lattice and the half-odd
//! spin coset are represented exactly with no rationals. Every statistic
//! and combinatorial primitive here is exact; no floating point anywhere.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::Error;

/// The four classical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A classical Lie algebra: family plus rank.
///
/// Rank 2 of family D is the non-simple so(4); it is accepted everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let min = match family {
            Family::A => 1,
            Family::B | Family::C | Family::D => 2,
        };
        if rank < min {
            return Err(Error::BadRank {
                family: family.letter(),
                rank,
                reason: if min == 1 {
                    "family A needs rank >= 1"
                } else {
                    "families B, C, D need rank >= 2"
                },
            });
        }
        Ok(LieType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of coordinates weights carry: `rank + 1` for family A
    /// (one coordinate per matrix diagonal entry), `rank` otherwise.
    pub fn ambient_rank(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    pub(crate) fn expect_rank(&self, mu: &Weight) {
        let ok = mu.rank() == self.rank
            || (self.family == Family::A && mu.rank() == self.rank + 1);
        assert!(
            ok,
            "rank mismatch: {} has rank {}, weight has {} coordinates",
            self,
            self.rank,
            mu.rank()
        );
    }

    /// True iff `mu` lies in the integral lattice of the compact group,
    /// i.e. every coordinate is an integer.
    pub fn is_g_integral(&self, mu: &Weight) -> bool {
        self.expect_rank(mu);
        mu.is_integral()
    }

    /// The unique dominant weight in the Weyl orbit of `mu`.
    ///
    /// Family A sorts coordinates; B and C sort absolute values; D sorts
    /// absolute values and pushes any residual odd sign onto the last
    /// coordinate.
    pub fn dominant_representative(&self, mu: &Weight) -> Weight {
        self.expect_rank(mu);
        let mut t = mu.twice().to_vec();
        match self.family {
            Family::A => {
                t.sort_unstable_by(|a, b| b.cmp(a));
            }
            Family::B | Family::C => {
                for v in t.iter_mut() {
                    *v = v.abs();
                }
                t.sort_unstable_by(|a, b| b.cmp(a));
            }
            Family::D => {
                let odd = mu.neg_count() % 2 == 1;
                for v in t.iter_mut() {
                    *v = v.abs();
                }
                t.sort_unstable_by(|a, b| b.cmp(a));
                if odd {
                    let last = t.last_mut().expect("rank >= 1");
                    *last = -*last;
                }
            }
        }
        Weight { twice: t }
    }

    /// True iff `mu` is in the closed fundamental chamber.
    pub fn is_dominant(&self, mu: &Weight) -> bool {
        self.expect_rank(mu);
        let t = mu.twice();
        let n = t.len();
        match self.family {
            Family::A => t.windows(2).all(|w| w[0] >= w[1]),
            Family::B | Family::C => {
                t.windows(2).all(|w| w[0] >= w[1]) && t[n - 1] >= 0
            }
            Family::D => {
                t.windows(2).all(|w| w[0] >= w[1]) && t[n - 2] >= t[n - 1].abs()
            }
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A weight in epsilon coordinates, stored as doubled integers.
///
/// All coordinates share a coset: either all are integers or all are
/// half-odd integers. Mixed inputs are rejected at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    twice: Vec<i64>,
}

impl Weight {
    /// Build from doubled coordinates, validating the coset invariant.
    pub fn from_twice(twice: Vec<i64>) -> Result<Self, Error> {
        if twice.is_empty() {
            return Err(Error::EmptyWeight);
        }
        let parity = twice[0].rem_euclid(2);
        if twice.iter().any(|t| t.rem_euclid(2) != parity) {
            return Err(Error::MixedCoset);
        }
        Ok(Weight { twice })
    }

    /// Build from integer coordinates. Panics on an empty slice.
    pub fn integral(coords: &[i64]) -> Self {
        assert!(!coords.is_empty(), "a weight needs at least one coordinate");
        Weight {
            twice: coords.iter().map(|c| 2 * c).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1);
        Weight {
            twice: vec![0; rank],
        }
    }

    /// Parse the text form: comma-separated integers or halves, e.g.
    /// `2,-1,0` or `1/2,1/2,-1/2`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let mut twice = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let value = if let Some(numer) = tok.strip_suffix("/2") {
                numer
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| Error::BadCoordinate(tok.to_string()))?
            } else {
                tok.parse::<i64>()
                    .map_err(|_| Error::BadCoordinate(tok.to_string()))?
                    .checked_mul(2)
                    .ok_or_else(|| Error::BadCoordinate(tok.to_string()))?
            };
            twice.push(value);
        }
        Weight::from_twice(twice)
    }

    pub fn rank(&self) -> usize {
        self.twice.len()
    }

    /// Doubled coordinates (each stored value is twice the coordinate).
    pub fn twice(&self) -> &[i64] {
        &self.twice
    }

    /// True iff every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.twice[0] % 2 == 0
    }

    /// One-norm as an exact rational: the sum of absolute coordinates.
    pub fn one_norm(&self) -> Ratio<i64> {
        Ratio::new(self.one_norm_twice(), 2)
    }

    /// Twice the one-norm, always an integer.
    pub fn one_norm_twice(&self) -> i64 {
        self.twice.iter().map(|t| t.abs()).sum()
    }

    /// Number of zero coordinates.
    pub fn zero_count(&self) -> usize {
        self.twice.iter().filter(|t| **t == 0).count()
    }

    /// Number of strictly negative coordinates.
    pub fn neg_count(&self) -> usize {
        self.twice.iter().filter(|t| **t < 0).count()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in weight sum");
        Weight {
            twice: self
                .twice
                .iter()
                .zip(&other.twice)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in weight difference");
        Weight {
            twice: self
                .twice
                .iter()
                .zip(&other.twice)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Per-coordinate text, matching the parse format.
    pub fn coordinate_strings(&self) -> Vec<String> {
        self.twice
            .iter()
            .map(|t| {
                if t % 2 == 0 {
                    format!("{}", t / 2)
                } else {
                    format!("{t}/2")
                }
            })
            .collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coordinate_strings().join(","))
    }
}

/// Representation tags within a string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// Highest weight `k w1 + (e1 + ... + ep)`; for family D with `p = n`
    /// this is the reducible sum of the two top exterior constituents.
    String,
    /// Spin representation `k w1 + wn` (families B and D).
    SpinPlus,
    /// Spin representation `k w1 + w(n-1)` (family D).
    SpinMinus,
    /// Irreducible constituent `k w1 + 2 w(n-1)` of the family-D top case.
    SplitMinus,
    /// Irreducible constituent `k w1 + 2 wn` of the family-D top case.
    SplitPlus,
}

impl Variant {
    pub fn tag(self) -> &'static str {
        match self {
            Variant::String => "string",
            Variant::SpinPlus => "spin+",
            Variant::SpinMinus => "spin-",
            Variant::SplitMinus => "split-",
            Variant::SplitPlus => "split+",
        }
    }
}

/// Identifies one representation in a fundamental string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringLabel {
    lie: LieType,
    k: i64,
    p: usize,
    variant: Variant,
}

impl StringLabel {
    /// Validated constructor. `p = 0` is accepted only as the trivial
    /// representation (`k = 0`, variant `String`), which the tensor
    /// decomposition of `sigma_{1,1}` produces.
    pub fn new(lie: LieType, k: i64, p: usize, variant: Variant) -> Result<Self, Error> {
        if k < 0 {
            return Err(Error::BadLabel(format!("k must be non-negative, got {k}")));
        }
        let n = lie.rank();
        match variant {
            Variant::String => {
                if p == 0 {
                    if k != 0 {
                        return Err(Error::BadLabel(
                            "p = 0 is only valid for the trivial representation (k = 0)"
                                .into(),
                        ));
                    }
                } else if p > n {
                    return Err(Error::BadLabel(format!(
                        "p = {p} out of range 1..={n} for {lie}"
                    )));
                }
            }
            Variant::SpinPlus => {
                if !matches!(lie.family(), Family::B | Family::D) {
                    return Err(Error::BadLabel(format!(
                        "variant spin+ needs family B or D, got {}",
                        lie.family()
                    )));
                }
                if p != n {
                    return Err(Error::BadLabel(format!(
                        "variant spin+ fixes p = {n}, got {p}"
                    )));
                }
            }
            Variant::SpinMinus => {
                if lie.family() != Family::D {
                    return Err(Error::BadLabel(format!(
                        "variant spin- needs family D, got {}",
                        lie.family()
                    )));
                }
                if p != n - 1 {
                    return Err(Error::BadLabel(format!(
                        "variant spin- fixes p = {}, got {p}",
                        n - 1
                    )));
                }
            }
            Variant::SplitMinus | Variant::SplitPlus => {
                if lie.family() != Family::D {
                    return Err(Error::BadLabel(format!(
                        "variant {} needs family D, got {}",
                        variant.tag(),
                        lie.family()
                    )));
                }
                if p != n {
                    return Err(Error::BadLabel(format!(
                        "variant {} fixes p = {n}, got {p}",
                        variant.tag()
                    )));
                }
            }
        }
        Ok(StringLabel { lie, k, p, variant })
    }

    pub fn string(lie: LieType, k: i64, p: usize) -> Result<Self, Error> {
        StringLabel::new(lie, k, p, Variant::String)
    }

    pub fn spin_plus(lie: LieType, k: i64) -> Result<Self, Error> {
        StringLabel::new(lie, k, lie.rank(), Variant::SpinPlus)
    }

    pub fn spin_minus(lie: LieType, k: i64) -> Result<Self, Error> {
        StringLabel::new(lie, k, lie.rank() - 1, Variant::SpinMinus)
    }

    pub fn split_minus(lie: LieType, k: i64) -> Result<Self, Error> {
        StringLabel::new(lie, k, lie.rank(), Variant::SplitMinus)
    }

    pub fn split_plus(lie: LieType, k: i64) -> Result<Self, Error> {
        StringLabel::new(lie, k, lie.rank(), Variant::SplitPlus)
    }

    /// The trivial (one-dimensional) representation.
    pub fn trivial(lie: LieType) -> Self {
        StringLabel {
            lie,
            k: 0,
            p: 0,
            variant: Variant::String,
        }
    }

    pub fn lie(&self) -> LieType {
        self.lie
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn is_trivial(&self) -> bool {
        self.variant == Variant::String && self.p == 0
    }

    /// Highest weights of the irreducible constituents, in doubled-last-sign
    /// order for the reducible family-D top case (minus component first).
    pub fn highest_weights(&self) -> Vec<Weight> {
        let n = self.lie.rank();
        let ambient = self.lie.ambient_rank();
        let k = self.k;
        match self.variant {
            Variant::String => {
                if self.p == 0 {
                    return vec![Weight::zero(ambient)];
                }
                let mut twice = vec![0i64; ambient];
                twice[0] = 2 * (k + 1);
                for t in twice.iter_mut().take(self.p).skip(1) {
                    *t = 2;
                }
                if self.lie.family() == Family::D && self.p == n {
                    let mut minus = twice.clone();
                    minus[n - 1] = -2;
                    vec![Weight { twice: minus }, Weight { twice }]
                } else {
                    vec![Weight { twice }]
                }
            }
            Variant::SpinPlus => {
                let mut twice = vec![1i64; n];
                twice[0] = 2 * k + 1;
                vec![Weight { twice }]
            }
            Variant::SpinMinus => {
                let mut twice = vec![1i64; n];
                twice[0] = 2 * k + 1;
                twice[n - 1] = -1;
                vec![Weight { twice }]
            }
            Variant::SplitMinus => {
                let mut twice = vec![2i64; n];
                twice[0] = 2 * (k + 1);
                twice[n - 1] = -2;
                vec![Weight { twice }]
            }
            Variant::SplitPlus => {
                let mut twice = vec![2i64; n];
                twice[0] = 2 * (k + 1);
                vec![Weight { twice }]
            }
        }
    }
}

impl fmt::Display for StringLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            Variant::String => write!(f, "{} pi({},{})", self.lie, self.k, self.p),
            v => write!(f, "{} k={} {}", self.lie, self.k, v.tag()),
        }
    }
}

/// What a weight diagram describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramLabel {
    Label(StringLabel),
    HighestWeight(Weight),
}

/// A finite map from weights to exact multiplicities.
#[derive(Debug, Clone)]
pub struct WeightDiagram {
    lie: LieType,
    label: DiagramLabel,
    entries: BTreeMap<Weight, BigUint>,
}

impl WeightDiagram {
    pub fn new(lie: LieType, label: DiagramLabel) -> Self {
        WeightDiagram {
            lie,
            label,
            entries: BTreeMap::new(),
        }
    }

    pub fn lie(&self) -> LieType {
        self.lie
    }

    pub fn label(&self) -> &DiagramLabel {
        &self.label
    }

    pub fn insert(&mut self, mu: Weight, m: BigUint) {
        if !m.is_zero() {
            self.entries.insert(mu, m);
        }
    }

    pub fn get(&self, mu: &Weight) -> BigUint {
        self.entries.get(mu).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigUint)> {
        self.entries.iter()
    }

    /// Multiplicity-weighted total, i.e. the dimension it should carry.
    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }
}

/// Normalize a family-A weight to ambient coordinates with sum `k + p`.
///
/// Accepts `n` (quotient, last coordinate implicitly zero) or `n + 1`
/// (ambient) coordinates. Returns `None` when no representative with
/// non-negative integer coordinates and the right sum exists; every such
/// weight has multiplicity zero in the `(k, p)` string.
pub fn normalize_a(n: usize, k: i64, p: usize, mu: &Weight) -> Option<Weight> {
    assert!(
        mu.rank() == n || mu.rank() == n + 1,
        "family A rank {n}: weight must have {n} or {} coordinates, got {}",
        n + 1,
        mu.rank()
    );
    if !mu.is_integral() {
        return None;
    }
    let mut coords: Vec<i64> = mu.twice().iter().map(|t| t / 2).collect();
    if coords.len() == n {
        coords.push(0);
    }
    let m = n as i64 + 1;
    let sum: i64 = coords.iter().sum();
    let diff = k + p as i64 - sum;
    if diff.rem_euclid(m) != 0 {
        return None;
    }
    let shift = diff / m;
    for c in coords.iter_mut() {
        *c += shift;
        if *c < 0 {
            return None;
        }
    }
    Some(Weight::integral(&coords))
}

/// Visit every weight of the given rank and coset whose doubled one-norm
/// is at most `budget_twice`, in a deterministic order.
pub fn for_each_lattice_weight(
    rank: usize,
    budget_twice: i64,
    half_odd: bool,
    f: &mut dyn FnMut(&Weight),
) {
    fn rec(
        left: usize,
        budget: i64,
        half_odd: bool,
        acc: &mut Vec<i64>,
        f: &mut dyn FnMut(&Weight),
    ) {
        if left == 0 {
            f(&Weight::from_twice(acc.clone()).expect("uniform coset"));
            return;
        }
        let mut v = if half_odd { 1 } else { 0 };
        while v <= budget {
            for s in [v, -v] {
                acc.push(s);
                rec(left - 1, budget - v, half_odd, acc, f);
                acc.pop();
                if s == 0 {
                    break;
                }
            }
            v += 2;
        }
    }
    assert!(rank >= 1);
    let mut acc = Vec::with_capacity(rank);
    rec(rank, budget_twice, half_odd, &mut acc, f);
}

/// Binomial coefficient with the convention that any `a < 0` or `b < a`
/// (including every negative `b` with `a >= 0`) yields zero.
pub fn binom(b: i64, a: i64) -> BigUint {
    if a < 0 || b < a {
        return BigUint::zero();
    }
    let a = a.min(b - a) as u64;
    let b = b as u64;
    let mut acc = BigUint::one();
    for i in 0..a {
        acc *= b - i;
        acc /= i + 1;
    }
    acc
}

/// Ballot number `(m+1)/(m+t+1) * binom(m+2t, t)`, evaluated exactly as
/// the integer difference `binom(m+2t, t) - binom(m+2t, t-1)`.
///
/// Non-negative whenever `m >= 0`; the signed result is returned so the
/// difference form stays exact on the whole domain.
pub fn ballot(m: i64, t: i64) -> BigInt {
    let top = m + 2 * t;
    BigInt::from(binom(top, t)) - BigInt::from(binom(top, t - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(coords: &[i64]) -> Weight {
        Weight::integral(coords)
    }

    fn half(twice: &[i64]) -> Weight {
        Weight::from_twice(twice.to_vec()).unwrap()
    }

    #[test]
    fn one_norm_examples() {
        assert_eq!(w(&[2, -1, 0]).one_norm(), Ratio::from_integer(3));
        assert_eq!(w(&[0, 0]).one_norm(), Ratio::from_integer(0));
        assert_eq!(half(&[1, 1, -1]).one_norm(), Ratio::new(3, 2));
    }

    #[test]
    fn zero_count_examples() {
        assert_eq!(w(&[2, -1, 0]).zero_count(), 1);
        assert_eq!(w(&[0, 0, 0]).zero_count(), 3);
        assert_eq!(half(&[1, -1]).zero_count(), 0);
    }

    #[test]
    fn neg_count_examples() {
        assert_eq!(half(&[1, -1, -1]).neg_count(), 2);
        assert_eq!(w(&[1, 1, 0]).neg_count(), 0);
        assert_eq!(w(&[-1, -1]).neg_count(), 2);
    }

    #[test]
    fn integrality() {
        let d3 = LieType::new(Family::D, 3).unwrap();
        assert!(d3.is_g_integral(&w(&[1, 1, 0])));
        assert!(!d3.is_g_integral(&half(&[1, 1, 1])));
        let c2 = LieType::new(Family::C, 2).unwrap();
        assert!(c2.is_g_integral(&w(&[2, -1])));
    }

    #[test]
    fn dominant_representative_examples() {
        let c3 = LieType::new(Family::C, 3).unwrap();
        assert_eq!(c3.dominant_representative(&w(&[0, -2, 1])), w(&[2, 1, 0]));
        let d2 = LieType::new(Family::D, 2).unwrap();
        assert_eq!(d2.dominant_representative(&w(&[-1, -1])), w(&[1, 1]));
        assert_eq!(d2.dominant_representative(&w(&[1, -1])), w(&[1, -1]));
        let a2 = LieType::new(Family::A, 2).unwrap();
        assert_eq!(a2.dominant_representative(&w(&[0, 2, 1])), w(&[2, 1, 0]));
    }

    #[test]
    fn normalize_a_examples() {
        assert_eq!(normalize_a(2, 0, 2, &w(&[1, 1, 0])), Some(w(&[1, 1, 0])));
        assert_eq!(normalize_a(2, 0, 2, &w(&[0, 0, -1])), Some(w(&[1, 1, 0])));
        assert_eq!(normalize_a(1, 1, 1, &w(&[1, 0])), None);
        // quotient input is lifted with a trailing zero
        assert_eq!(normalize_a(2, 0, 2, &w(&[1, 1])), Some(w(&[1, 1, 0])));
    }

    #[test]
    fn binom_conventions() {
        assert_eq!(binom(5, 2), BigUint::from(10u32));
        assert_eq!(binom(-3, 2), BigUint::zero());
        assert_eq!(binom(4, -1), BigUint::zero());
        assert_eq!(binom(0, 0), BigUint::one());
        assert_eq!(binom(60, 30), "118264581564861424".parse().unwrap());
    }

    #[test]
    fn ballot_examples() {
        assert_eq!(ballot(1, 1), BigInt::from(2));
        assert_eq!(ballot(0, 2), BigInt::from(2));
        for m in 0..20 {
            assert_eq!(ballot(m, 0), BigInt::one());
        }
    }

    #[test]
    fn ballot_matches_rational_form() {
        for m in 0..=30i64 {
            for t in 0..=30i64 {
                // (m+1) * binom(m+2t, t) must equal ballot * (m+t+1)
                let lhs = BigInt::from(binom(m + 2 * t, t)) * BigInt::from(m + 1);
                let rhs = ballot(m, t) * BigInt::from(m + t + 1);
                assert_eq!(lhs, rhs, "m={m} t={t}");
                assert!(ballot(m, t) >= BigInt::zero());
            }
        }
    }

    #[test]
    fn hockey_stick() {
        for n in 1..=12i64 {
            for r in 0..=12i64 {
                let sum: BigUint = (0..=r).map(|s| binom(s + n - 1, n - 1)).sum();
                assert_eq!(sum, binom(r + n, n));
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let v = Weight::parse("2,-1,0").unwrap();
        assert_eq!(v, w(&[2, -1, 0]));
        let s = Weight::parse("1/2, 1/2, -1/2").unwrap();
        assert_eq!(s, half(&[1, 1, -1]));
        assert_eq!(s.to_string(), "1/2,1/2,-1/2");
        assert_eq!(Weight::parse("1/2,1"), Err(Error::MixedCoset));
        assert!(matches!(
            Weight::parse("1,x"),
            Err(Error::BadCoordinate(_))
        ));
        // a half with an even numerator is just an integer spelled oddly
        assert_eq!(Weight::parse("4/2,1").unwrap(), w(&[2, 1]));
    }

    #[test]
    fn mixed_coset_rejected_at_construction() {
        assert_eq!(Weight::from_twice(vec![1, 2]), Err(Error::MixedCoset));
        assert_eq!(Weight::from_twice(vec![]), Err(Error::EmptyWeight));
    }

    #[test]
    fn label_validation() {
        let b2 = LieType::new(Family::B, 2).unwrap();
        let c2 = LieType::new(Family::C, 2).unwrap();
        let d3 = LieType::new(Family::D, 3).unwrap();
        assert!(StringLabel::string(c2, 3, 2).is_ok());
        assert!(StringLabel::string(c2, 3, 3).is_err());
        assert!(StringLabel::string(c2, -1, 1).is_err());
        assert!(StringLabel::spin_plus(b2, 0).is_ok());
        assert!(StringLabel::new(c2, 0, 2, Variant::SpinPlus).is_err());
        assert!(StringLabel::spin_minus(d3, 1).is_ok());
        assert!(StringLabel::new(b2, 0, 1, Variant::SpinMinus).is_err());
        assert!(StringLabel::split_plus(d3, 2).is_ok());
        assert!(StringLabel::new(c2, 0, 2, Variant::SplitPlus).is_err());
    }

    #[test]
    fn highest_weights_shapes() {
        let d3 = LieType::new(Family::D, 3).unwrap();
        let b2 = LieType::new(Family::B, 2).unwrap();
        let a2 = LieType::new(Family::A, 2).unwrap();
        assert_eq!(
            StringLabel::string(d3, 2, 2).unwrap().highest_weights(),
            vec![w(&[3, 1, 0])]
        );
        assert_eq!(
            StringLabel::string(d3, 1, 3).unwrap().highest_weights(),
            vec![w(&[2, 1, -1]), w(&[2, 1, 1])]
        );
        assert_eq!(
            StringLabel::spin_plus(b2, 1).unwrap().highest_weights(),
            vec![half(&[3, 1])]
        );
        assert_eq!(
            StringLabel::spin_minus(d3, 0).unwrap().highest_weights(),
            vec![half(&[1, 1, -1])]
        );
        assert_eq!(
            StringLabel::string(a2, 1, 2).unwrap().highest_weights(),
            vec![w(&[2, 1, 0])]
        );
        assert_eq!(
            StringLabel::trivial(d3).highest_weights(),
            vec![w(&[0, 0, 0])]
        );
    }

    fn arb_weight(rank: usize) -> impl Strategy<Value = Weight> {
        (
            proptest::collection::vec(-9i64..=9, rank),
            proptest::bool::ANY,
        )
            .prop_map(|(coords, halfodd)| {
                let twice: Vec<i64> = coords
                    .iter()
                    .map(|c| 2 * c + if halfodd { 1 } else { 0 })
                    .collect();
                Weight::from_twice(twice).unwrap()
            })
    }

    proptest! {
        #[test]
        fn dominant_rep_is_idempotent_and_preserves_stats(
            mu in arb_weight(4),
            fam in prop_oneof![Just(Family::B), Just(Family::C), Just(Family::D)],
        ) {
            let lie = LieType::new(fam, 4).unwrap();
            let dom = lie.dominant_representative(&mu);
            prop_assert!(lie.is_dominant(&dom));
            prop_assert_eq!(lie.dominant_representative(&dom).clone(), dom.clone());
            prop_assert_eq!(dom.one_norm_twice(), mu.one_norm_twice());
            prop_assert_eq!(dom.zero_count(), mu.zero_count());
            // a zero coordinate absorbs a sign flip, so the parity of the
            // negative count is only an orbit invariant on zero-free weights
            if fam == Family::D && mu.zero_count() == 0 {
                prop_assert_eq!(dom.neg_count() % 2, mu.neg_count() % 2);
            }
        }

        #[test]
        fn stats_invariant_under_signed_permutation(
            mu in arb_weight(5),
            signs in proptest::collection::vec(proptest::bool::ANY, 5),
        ) {
            let mut twice = mu.twice().to_vec();
            twice.reverse();
            let permuted = Weight::from_twice(twice).unwrap();
            prop_assert_eq!(permuted.one_norm_twice(), mu.one_norm_twice());
            prop_assert_eq!(permuted.zero_count(), mu.zero_count());
            let flipped = Weight::from_twice(
                mu.twice().iter().zip(&signs).map(|(t, s)| if *s { -t } else { *t }).collect()
            ).unwrap();
            prop_assert_eq!(flipped.one_norm_twice(), mu.one_norm_twice());
            prop_assert_eq!(flipped.zero_count(), mu.zero_count());
        }

        #[test]
        fn pascal_recurrence(b in 1i64..=40, a in 1i64..=40) {
            prop_assert_eq!(binom(b, a), binom(b - 1, a - 1) + binom(b - 1, a));
        }

        #[test]
        fn parse_roundtrip(mu in arb_weight(3)) {
            let text = mu.to_string();
            prop_assert_eq!(Weight::parse(&text).unwrap(), mu);
        }
    }
}
