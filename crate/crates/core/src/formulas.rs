//! Closed multiplicity formulas for the fundamental strings: the one-row
//! and exterior extreme cases, the sigma tensor products, the main string
//! formulas for families B, C, D, the family-A formula, the spin cases
//! and the family-D top splitting.
//!
//! Everything is exact big-integer arithmetic. Evaluation cost depends on
//! `p` and the rank only through small nested sums, so large rank and
//! huge `k` stay fast. This module never calls the oracle.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::weights::{
    ballot, binom, normalize_a, Family, LieType, StringLabel, Variant, Weight,
};

/// One signed term of the inversion of a string into sigma tensors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedSigmaTerm {
    /// `+1` or `-1`.
    pub sign: i8,
    /// First index; may be negative, in which case the term vanishes.
    pub k: i64,
    /// Second index; `0` denotes the plain one-row factor.
    pub p: usize,
}

/// Expand `pi_{k,p}` as an alternating sum of sigma tensors in the virtual
/// representation ring: the terms `((-1)^(j-1), k + j - 2i, p - j)` for
/// `1 <= j <= p`, `0 <= i < j`. Terms are emitted even when their first
/// index is negative; consumers treat those as zero.
pub fn string_decomposition(k: i64, p: usize) -> Vec<SignedSigmaTerm> {
    assert!(k >= 0, "k must be non-negative");
    assert!(p >= 1, "p must be at least 1");
    let mut terms = Vec::with_capacity(p * (p + 1) / 2);
    for j in 1..=(p as i64) {
        let sign = if (j - 1) % 2 == 0 { 1 } else { -1 };
        for i in 0..j {
            terms.push(SignedSigmaTerm {
                sign,
                k: k + j - 2 * i,
                p: p - j as usize,
            });
        }
    }
    terms
}

/// Irreducible summands of `sigma_{k,p} = pi_{k w1} (x) pi_{e1+...+ep}`
/// for families B, C, D and `1 <= p <= n-1`.
///
/// The generic four summands are `pi_{k,p}`, `pi_{k-1,p+1}`, `pi_{k-2,p}`
/// and `pi_{k-1,p-1}`. Summands with a negative first index vanish, and a
/// zero second index vanishes except for `k = 1, p = 1`, where the last
/// slot carries the trivial summand (the invariant pairing inside the
/// square of the standard representation).
pub fn sigma_fusion(lie: LieType, k: i64, p: usize) -> Vec<StringLabel> {
    assert!(
        !matches!(lie.family(), Family::A),
        "sigma fusion is defined for families B, C, D"
    );
    assert!(k >= 0, "k must be non-negative");
    let n = lie.rank();
    assert!(
        (1..n).contains(&p),
        "fusion needs 1 <= p <= {} for {lie}, got {p}",
        n - 1
    );
    let candidates: [(i64, i64); 4] = [
        (k, p as i64),
        (k - 1, p as i64 + 1),
        (k - 2, p as i64),
        (k - 1, p as i64 - 1),
    ];
    let mut out = Vec::new();
    for (kk, pp) in candidates {
        if kk < 0 || (pp == 0 && kk > 0) {
            continue;
        }
        out.push(
            StringLabel::string(lie, kk, pp as usize)
                .expect("fusion summands are valid labels"),
        );
    }
    out
}

/// Binomials with a fixed lower index, memoized over the upper index.
struct BinomColumn {
    bottom: i64,
    cache: HashMap<i64, BigUint>,
}

impl BinomColumn {
    fn new(bottom: i64) -> Self {
        BinomColumn {
            bottom,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, top: i64) -> BigUint {
        if top < self.bottom {
            return BigUint::zero();
        }
        self.cache
            .entry(top)
            .or_insert_with(|| binom(top, self.bottom))
            .clone()
    }
}

fn pow2(e: i64) -> BigUint {
    debug_assert!(e >= 0);
    BigUint::one() << (e as usize)
}

fn to_unsigned(value: BigInt, context: &str) -> BigUint {
    assert!(
        !value.is_negative(),
        "negative multiplicity from {context}: formula bug"
    );
    value.to_biguint().unwrap()
}

/// Multiplicity of `mu` in the one-row representation `pi_{k w1}` of a
/// family B, C or D algebra (the harmonic / symmetric-power extreme case).
pub fn mult_sym_power(lie: LieType, k: i64, mu: &Weight) -> BigUint {
    assert!(
        !matches!(lie.family(), Family::A),
        "family A strings go through mult_string"
    );
    assert!(k >= 0, "k must be non-negative");
    lie.expect_rank(mu);
    if !mu.is_integral() {
        return BigUint::zero();
    }
    let n = lie.rank() as i64;
    let gap2 = 2 * k - mu.one_norm_twice();
    match lie.family() {
        Family::C | Family::D => {
            if gap2 < 0 || gap2 % 4 != 0 {
                return BigUint::zero();
            }
            let r = gap2 / 4;
            match lie.family() {
                Family::C => binom(r + n - 1, n - 1),
                _ => binom(r + n - 2, n - 2),
            }
        }
        Family::B => {
            // both parities occur; the floor absorbs the odd case and the
            // binomial convention absorbs k below the one-norm
            let r = (gap2 / 2).div_euclid(2);
            binom(r + n - 1, n - 1)
        }
        Family::A => unreachable!(),
    }
}

/// Multiplicity of `mu` in the exterior-type extreme case with highest
/// weight `e1 + ... + ep`: the irreducible `pi_{wp}` for family C, the
/// p-th exterior power of the standard representation for families B
/// and D (reducible into the two top constituents when `p = n` in D).
pub fn mult_fund_exterior(lie: LieType, p: usize, mu: &Weight) -> BigUint {
    assert!(
        !matches!(lie.family(), Family::A),
        "family A strings go through mult_string"
    );
    let n = lie.rank();
    assert!((1..=n).contains(&p), "p out of range 1..={n}, got {p}");
    lie.expect_rank(mu);
    if !mu.is_integral() || mu.twice().iter().any(|t| t.abs() > 2) {
        return BigUint::zero();
    }
    let n = n as i64;
    let p = p as i64;
    let gap = p - mu.one_norm_twice() / 2;
    match lie.family() {
        Family::C => {
            if gap < 0 || gap % 2 != 0 {
                return BigUint::zero();
            }
            to_unsigned(ballot(n - p, gap / 2), "ballot prefactor")
        }
        Family::D => {
            if gap < 0 || gap % 2 != 0 {
                return BigUint::zero();
            }
            let r = gap / 2;
            binom(n - p + 2 * r, r)
        }
        Family::B => {
            if gap < 0 {
                return BigUint::zero();
            }
            binom(n - p + gap, gap.div_euclid(2))
        }
        Family::A => unreachable!(),
    }
}

/// Multiplicity of `mu` in the tensor product `sigma_{k,p}`, evaluated by
/// the closed triple sums. Defined for families B, C, D with `p < n`.
pub fn mult_sigma(lie: LieType, k: i64, p: usize, mu: &Weight) -> BigUint {
    assert!(
        !matches!(lie.family(), Family::A),
        "sigma tensors are defined for families B, C, D"
    );
    assert!(k >= 0, "k must be non-negative");
    let n = lie.rank();
    assert!(
        (1..n).contains(&p),
        "sigma formulas need 1 <= p <= {} for {lie}, got {p}",
        n - 1
    );
    lie.expect_rank(mu);
    if !mu.is_integral() {
        return BigUint::zero();
    }
    let nn = n as i64;
    let pp = p as i64;
    let z = mu.zero_count() as i64;
    let norm = mu.one_norm_twice() / 2;
    match lie.family() {
        Family::C | Family::D => {
            let gap = k + pp - norm;
            if gap < 0 || gap % 2 != 0 {
                return BigUint::zero();
            }
            let r = gap / 2;
            let bottom = if lie.family() == Family::C { nn - 1 } else { nn - 2 };
            let mut col = BinomColumn::new(bottom);
            let mut acc = BigUint::zero();
            for t in 0..=(pp / 2) {
                let prefactor = if lie.family() == Family::C {
                    to_unsigned(ballot(nn - pp, t), "ballot prefactor")
                } else {
                    binom(nn - pp + 2 * t, t)
                };
                if prefactor.is_zero() {
                    continue;
                }
                acc += prefactor * shell_sum(&mut col, nn, pp, t, z, r, bottom, 0);
            }
            acc
        }
        Family::B => {
            let r = k + pp - norm;
            let mut col = BinomColumn::new(nn - 1);
            let mut acc = BigUint::zero();
            for t in 0..=(pp / 2) {
                let prefactor = binom(nn - pp + 2 * t, t);
                if prefactor.is_zero() {
                    continue;
                }
                acc += prefactor
                    * shell_sum(&mut col, nn, pp, t, z, r.div_euclid(2), nn - 1, 0);
            }
            for t in 0..=((pp - 1) / 2) {
                let prefactor = binom(nn - pp + 1 + 2 * t, t);
                if prefactor.is_zero() {
                    continue;
                }
                acc += prefactor
                    * shell_sum(&mut col, nn, pp - 1, t, z, (r + 1).div_euclid(2), nn - 1, 1);
            }
            acc
        }
        Family::A => unreachable!(),
    }
}

/// Inner `beta`/`alpha` sums shared by the sigma formulas: counts the
/// exterior-shell weights with `q - 2t` non-zero entries, `beta` of them
/// placed on the non-zero coordinates of `mu`, each weighted by a one-row
/// binomial from `col` at offset `half - (q + p_offset) + alpha + t`.
#[allow(clippy::too_many_arguments)]
fn shell_sum(
    col: &mut BinomColumn,
    n: i64,
    q: i64,
    t: i64,
    z: i64,
    half: i64,
    bottom: i64,
    p_offset: i64,
) -> BigUint {
    // the family-B lower layer passes q = p - 1 with p_offset 1, so the
    // column offset still subtracts the full p
    let p_here = q + p_offset;
    let mut acc = BigUint::zero();
    for beta in 0..=(q - 2 * t) {
        let spread = q - 2 * t - beta;
        let count = pow2(spread) * binom(n - z, beta) * binom(z, spread);
        if count.is_zero() {
            continue;
        }
        let mut inner = BigUint::zero();
        for alpha in 0..=beta {
            let choose = binom(beta, alpha);
            if choose.is_zero() {
                continue;
            }
            inner += choose * col.get(half - p_here + alpha + t + bottom);
        }
        acc += count * inner;
    }
    acc
}

fn string_multiplicity_cd(lie: LieType, k: i64, p: usize, mu: &Weight) -> BigUint {
    let n = lie.rank() as i64;
    let pp = p as i64;
    if !mu.is_integral() {
        return BigUint::zero();
    }
    let norm = mu.one_norm_twice() / 2;
    let gap = k + pp - norm;
    if gap < 0 || gap % 2 != 0 {
        return BigUint::zero();
    }
    let r = gap / 2;
    let z = mu.zero_count() as i64;
    let bottom = if lie.family() == Family::C { n - 1 } else { n - 2 };
    let mut col = BinomColumn::new(bottom);
    let mut acc = BigInt::zero();
    for j in 1..=pp {
        let sign = if (j - 1) % 2 == 0 { 1 } else { -1 };
        for t in 0..=((pp - j) / 2) {
            let prefactor = if lie.family() == Family::C {
                to_unsigned(ballot(n - pp + j, t), "ballot prefactor")
            } else {
                binom(n - pp + j + 2 * t, t)
            };
            if prefactor.is_zero() {
                continue;
            }
            let mut layer = BigUint::zero();
            for beta in 0..=(pp - j - 2 * t) {
                let spread = pp - j - 2 * t - beta;
                let count = pow2(spread) * binom(n - z, beta) * binom(z, spread);
                if count.is_zero() {
                    continue;
                }
                let mut inner = BigUint::zero();
                for alpha in 0..=beta {
                    let choose = binom(beta, alpha);
                    if choose.is_zero() {
                        continue;
                    }
                    let mut tops = BigUint::zero();
                    for i in 0..j {
                        tops += col.get(r - i - pp + alpha + t + j + bottom);
                    }
                    inner += choose * tops;
                }
                layer += count * inner;
            }
            let term = BigInt::from(prefactor * layer);
            acc += BigInt::from(sign) * term;
        }
    }
    to_unsigned(acc, "alternating string sum")
}

fn string_multiplicity_b(lie: LieType, k: i64, p: usize, mu: &Weight) -> BigUint {
    let n = lie.rank() as i64;
    let pp = p as i64;
    if !mu.is_integral() {
        return BigUint::zero();
    }
    let norm = mu.one_norm_twice() / 2;
    let r = k + pp - norm;
    let z = mu.zero_count() as i64;
    let mut col = BinomColumn::new(n - 1);
    let mut acc = BigInt::zero();

    // upper layer: shells of the exterior power with the same parity
    for j in 1..=pp {
        let sign = if (j - 1) % 2 == 0 { 1 } else { -1 };
        for t in 0..=((pp - j) / 2) {
            let prefactor = binom(n - pp + j + 2 * t, t);
            if prefactor.is_zero() {
                continue;
            }
            let mut layer = BigUint::zero();
            for beta in 0..=(pp - j - 2 * t) {
                let spread = pp - j - 2 * t - beta;
                let count = pow2(spread) * binom(n - z, beta) * binom(z, spread);
                if count.is_zero() {
                    continue;
                }
                let mut inner = BigUint::zero();
                for alpha in 0..=beta {
                    let choose = binom(beta, alpha);
                    if choose.is_zero() {
                        continue;
                    }
                    let mut tops = BigUint::zero();
                    for i in 0..j {
                        tops += col.get(r.div_euclid(2) - i - pp + j + alpha + t + n - 1);
                    }
                    inner += choose * tops;
                }
                layer += count * inner;
            }
            acc += BigInt::from(sign) * BigInt::from(prefactor * layer);
        }
    }

    // lower layer: shells one step shorter, gap rounded the other way
    for j in 1..=(pp - 1) {
        let sign = if (j - 1) % 2 == 0 { 1 } else { -1 };
        for t in 0..=((pp - j - 1) / 2) {
            let prefactor = binom(n - pp + j + 2 * t + 1, t);
            if prefactor.is_zero() {
                continue;
            }
            let mut layer = BigUint::zero();
            for beta in 0..=(pp - j - 2 * t - 1) {
                let spread = pp - j - 2 * t - beta - 1;
                let count = pow2(spread) * binom(n - z, beta) * binom(z, spread);
                if count.is_zero() {
                    continue;
                }
                let mut inner = BigUint::zero();
                for alpha in 0..=beta {
                    let choose = binom(beta, alpha);
                    if choose.is_zero() {
                        continue;
                    }
                    let mut tops = BigUint::zero();
                    for i in 0..j {
                        tops += col.get((r + 1).div_euclid(2) - i - pp + j + alpha + t + n - 1);
                    }
                    inner += choose * tops;
                }
                layer += count * inner;
            }
            acc += BigInt::from(sign) * BigInt::from(prefactor * layer);
        }
    }
    to_unsigned(acc, "alternating string sum")
}

fn string_multiplicity_a(n: usize, k: i64, p: usize, mu: &Weight) -> BigUint {
    let Some(normalized) = normalize_a(n, k, p, mu) else {
        return BigUint::zero();
    };
    // prefix condition on the coordinates as given; no sorting is needed
    // because the final binomial vanishes whenever orderings could differ
    let coords = normalized.twice();
    let mut prefix = 0i64;
    for (j, t) in coords.iter().take(p).enumerate() {
        prefix += t / 2;
        if prefix > k + j as i64 + 1 {
            return BigUint::zero();
        }
    }
    let z = normalized.zero_count() as i64;
    binom(n as i64 - z, p as i64 - 1)
}

/// Multiplicity of `mu` in the string representation `pi_{k,p}`.
///
/// Family A normalizes `mu` first and counts column fillings; families
/// B, C, D evaluate the alternating closed sums. For family D with
/// `p = n` this is the multiplicity in the reducible sum of the two top
/// constituents; `split_top` separates them.
pub fn mult_string(label: &StringLabel, mu: &Weight) -> BigUint {
    assert_eq!(
        label.variant(),
        Variant::String,
        "mult_string takes string labels; use mult_spin or split_top"
    );
    let lie = label.lie();
    lie.expect_rank(mu);
    if label.is_trivial() {
        let zero = mu.twice().iter().all(|t| *t == 0);
        return if zero { BigUint::one() } else { BigUint::zero() };
    }
    match lie.family() {
        Family::A => string_multiplicity_a(lie.rank(), label.k(), label.p(), mu),
        Family::B => string_multiplicity_b(lie, label.k(), label.p(), mu),
        Family::C | Family::D => string_multiplicity_cd(lie, label.k(), label.p(), mu),
    }
}

/// Multiplicity of `mu` in a spin representation (`k w1 + wn` for B and D,
/// `k w1 + w(n-1)` for D). Zero on the integer lattice.
pub fn mult_spin(label: &StringLabel, mu: &Weight) -> BigUint {
    let lie = label.lie();
    lie.expect_rank(mu);
    if mu.is_integral() {
        return BigUint::zero();
    }
    let n = lie.rank() as i64;
    let k = label.k();
    // r = k + n/2 - |mu|, always an integer on the half-odd coset
    let r2 = 2 * k + n - mu.one_norm_twice();
    debug_assert_eq!(r2 % 2, 0);
    let r = r2 / 2;
    match label.variant() {
        Variant::SpinPlus if lie.family() == Family::B => binom(r + n - 1, n - 1),
        Variant::SpinPlus => {
            if r < 0 || (mu.neg_count() as i64 - r) % 2 != 0 {
                BigUint::zero()
            } else {
                binom(r + n - 2, n - 2)
            }
        }
        Variant::SpinMinus => {
            if r < 0 || (mu.neg_count() as i64 - r - 1) % 2 != 0 {
                BigUint::zero()
            } else {
                binom(r + n - 2, n - 2)
            }
        }
        v => panic!("mult_spin takes spin labels, got {}", v.tag()),
    }
}

/// Split the family-D top multiplicity `pi_{k,n}` into its two irreducible
/// constituents: the pair `(k w1 + 2 w(n-1), k w1 + 2 wn)`.
///
/// On the boundary shell the whole value sits in one constituent selected
/// by the sign parity; strictly inside, both take exactly half.
pub fn split_top(lie: LieType, k: i64, mu: &Weight) -> (BigUint, BigUint) {
    assert_eq!(lie.family(), Family::D, "split_top is a family D operation");
    assert!(k >= 0, "k must be non-negative");
    lie.expect_rank(mu);
    let n = lie.rank();
    if !mu.is_integral() {
        return (BigUint::zero(), BigUint::zero());
    }
    let label = StringLabel::string(lie, k, n).expect("p = n is valid");
    let norm = mu.one_norm_twice() / 2;
    let edge = k + n as i64;
    if norm > edge {
        return (BigUint::zero(), BigUint::zero());
    }
    let total = mult_string(&label, mu);
    if norm == edge {
        if mu.neg_count().is_multiple_of(2) {
            (BigUint::zero(), total)
        } else {
            (total, BigUint::zero())
        }
    } else {
        let two = BigUint::from(2u32);
        let (half, rem) = num_integer::Integer::div_rem(&total, &two);
        assert!(
            rem.is_zero(),
            "interior top multiplicity must be even at {mu}: formula bug"
        );
        (half.clone(), half)
    }
}

/// Dispatch a label to the formula that evaluates it; split labels yield
/// the matching component of `split_top`.
pub fn multiplicity(label: &StringLabel, mu: &Weight) -> BigUint {
    match label.variant() {
        Variant::String => mult_string(label, mu),
        Variant::SpinPlus | Variant::SpinMinus => mult_spin(label, mu),
        Variant::SplitMinus => split_top(label.lie(), label.k(), mu).0,
        Variant::SplitPlus => split_top(label.lie(), label.k(), mu).1,
    }
}

/// Evaluate a string multiplicity through the virtual-ring inversion: the
/// signed sum of sigma multiplicities over `string_decomposition`, with
/// `sigma_{k,0}` read as the one-row representation and negative first
/// indices as zero. Slower than `mult_string`; used to cross-check it.
pub fn mult_string_via_inversion(label: &StringLabel, mu: &Weight) -> BigUint {
    assert_eq!(label.variant(), Variant::String);
    let lie = label.lie();
    assert!(
        !matches!(lie.family(), Family::A),
        "the inversion identity lives in families B, C, D"
    );
    lie.expect_rank(mu);
    let mut acc = BigInt::zero();
    for term in string_decomposition(label.k(), label.p()) {
        if term.k < 0 {
            continue;
        }
        let value = if term.p == 0 {
            mult_sym_power(lie, term.k, mu)
        } else {
            mult_sigma(lie, term.k, term.p, mu)
        };
        acc += BigInt::from(term.sign) * BigInt::from(value);
    }
    to_unsigned(acc, "inversion sum")
}
