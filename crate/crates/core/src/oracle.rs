//! Independent ground truth: root-system data, the Freudenthal recursion,
//! the Weyl dimension formula and the tensor-product multiplicity sum.
//!
//! Nothing on the Freudenthal/tensor path calls the closed formulas; the
//! whole point of this module is that a bug cannot be shared between the
//! two routes. Family A is handled in ambient `n + 1` coordinates so that
//! the inner product stays the plain Euclidean one.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::weights::{
    binom, DiagramLabel, Family, LieType, Weight, WeightDiagram,
};

/// Positive roots, simple roots and the Weyl vector of a classical type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    lie: LieType,
    positive_roots: Vec<Weight>,
    simple_roots: Vec<Weight>,
    rho: Weight,
}

impl RootSystem {
    pub fn lie(&self) -> LieType {
        self.lie
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    /// Half the sum of the positive roots.
    pub fn rho(&self) -> &Weight {
        &self.rho
    }
}

fn unit(dim: usize, i: usize, value: i64) -> Vec<i64> {
    let mut v = vec![0i64; dim];
    v[i] = value;
    v
}

/// Exact root data for `lie`.
pub fn root_system(lie: LieType) -> RootSystem {
    let n = lie.rank();
    let dim = lie.ambient_rank();
    let mut positive: Vec<Vec<i64>> = Vec::new();
    let mut simple: Vec<Vec<i64>> = Vec::new();
    match lie.family() {
        Family::A => {
            for i in 0..dim {
                for j in (i + 1)..dim {
                    let mut v = unit(dim, i, 2);
                    v[j] = -2;
                    positive.push(v);
                }
            }
            for i in 0..n {
                let mut v = unit(dim, i, 2);
                v[i + 1] = -2;
                simple.push(v);
            }
        }
        Family::B | Family::C | Family::D => {
            for i in 0..n {
                for j in (i + 1)..n {
                    let mut v = unit(n, i, 2);
                    v[j] = -2;
                    positive.push(v.clone());
                    v[j] = 2;
                    positive.push(v);
                }
            }
            match lie.family() {
                Family::B => {
                    for i in 0..n {
                        positive.push(unit(n, i, 2));
                    }
                }
                Family::C => {
                    for i in 0..n {
                        positive.push(unit(n, i, 4));
                    }
                }
                _ => {}
            }
            for i in 0..(n - 1) {
                let mut v = unit(n, i, 2);
                v[i + 1] = -2;
                simple.push(v);
            }
            match lie.family() {
                Family::B => simple.push(unit(n, n - 1, 2)),
                Family::C => simple.push(unit(n, n - 1, 4)),
                Family::D => {
                    let mut v = unit(n, n - 2, 2);
                    v[n - 1] = 2;
                    simple.push(v);
                }
                Family::A => unreachable!(),
            }
        }
    }
    let mut rho_twice = vec![0i64; dim];
    for r in &positive {
        for (acc, c) in rho_twice.iter_mut().zip(r) {
            // summing halves of doubled roots gives doubled rho
            *acc += c / 2;
        }
    }
    RootSystem {
        lie,
        positive_roots: positive
            .into_iter()
            .map(|v| Weight::from_twice(v).expect("roots are integral"))
            .collect(),
        simple_roots: simple
            .into_iter()
            .map(|v| Weight::from_twice(v).expect("roots are integral"))
            .collect(),
        rho: Weight::from_twice(rho_twice).expect("rho is lattice-consistent"),
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Coefficients of `diff` (doubled coordinates) over the simple roots.
/// Returns `None` unless all coefficients are non-negative integers.
fn root_coords(lie: LieType, diff: &[i64]) -> Option<Vec<i64>> {
    let n = lie.rank();
    if diff.iter().any(|t| t % 2 != 0) {
        return None;
    }
    let v: Vec<i64> = diff.iter().map(|t| t / 2).collect();
    let mut coords = Vec::with_capacity(n);
    match lie.family() {
        Family::A => {
            if v.iter().sum::<i64>() != 0 {
                return None;
            }
            let mut partial = 0i64;
            for item in v.iter().take(n) {
                partial += item;
                coords.push(partial);
            }
        }
        Family::B => {
            let mut partial = 0i64;
            for item in v.iter().take(n - 1) {
                partial += item;
                coords.push(partial);
            }
            coords.push(partial + v[n - 1]);
        }
        Family::C => {
            let mut partial = 0i64;
            for item in v.iter().take(n - 1) {
                partial += item;
                coords.push(partial);
            }
            let total = partial + v[n - 1];
            if total % 2 != 0 {
                return None;
            }
            coords.push(total / 2);
        }
        Family::D => {
            let mut partial = 0i64;
            for item in v.iter().take(n - 2) {
                partial += item;
                coords.push(partial);
            }
            let head = partial + v[n - 2];
            let minus = head - v[n - 1];
            let plus = head + v[n - 1];
            if minus % 2 != 0 || plus % 2 != 0 {
                return None;
            }
            coords.push(minus / 2);
            coords.push(plus / 2);
        }
    }
    if coords.iter().any(|c| *c < 0) {
        return None;
    }
    Some(coords)
}

fn assert_lattice_weight(lie: LieType, mu: &Weight) {
    lie.expect_rank(mu);
    if matches!(lie.family(), Family::A | Family::C) {
        assert!(
            mu.is_integral(),
            "{lie} weights have integer coordinates, got {mu}"
        );
    }
}

/// Multiplicities of all dominant weights of the irreducible with highest
/// weight `lambda`, computed by the Freudenthal recursion in decreasing
/// level order. Non-dominant multiplicities follow by Weyl symmetry.
#[derive(Debug, Clone)]
pub struct WeightTable {
    lie: LieType,
    lambda: Weight,
    entries: BTreeMap<Weight, BigUint>,
}

impl WeightTable {
    pub fn lie(&self) -> LieType {
        self.lie
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// Multiplicity of an arbitrary weight, via its dominant representative.
    pub fn multiplicity(&self, mu: &Weight) -> BigUint {
        if mu.rank() != self.lambda.rank() || mu.is_integral() != self.lambda.is_integral() {
            return BigUint::zero();
        }
        let dom = self.lie.dominant_representative(mu);
        self.entries.get(&dom).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Dominant weights with non-zero multiplicity.
    pub fn dominant_entries(&self) -> impl Iterator<Item = (&Weight, &BigUint)> {
        self.entries.iter()
    }
}

/// Dominant candidates for the support of `lambda`: dominant lattice
/// points in the coset of `lambda`, below it in the root order, paired
/// with their level (height of the difference).
fn dominant_candidates(lie: LieType, lambda: &Weight) -> Vec<(i64, Weight)> {
    let mut out = Vec::new();
    let lt = lambda.twice();
    let mut push = |twice: Vec<i64>| {
        let diff: Vec<i64> = lt.iter().zip(&twice).map(|(a, b)| a - b).collect();
        if let Some(c) = root_coords(lie, &diff) {
            let level: i64 = c.iter().sum();
            out.push((level, Weight::from_twice(twice).expect("uniform coset")));
        }
    };
    match lie.family() {
        Family::A => {
            let dim = lie.ambient_rank();
            let total: i64 = lt.iter().sum();
            let hi = *lt.iter().max().unwrap();
            let lo = *lt.iter().min().unwrap();
            // non-increasing tuples with the same coordinate sum
            let mut stack: Vec<i64> = Vec::with_capacity(dim);
            fn gen(
                pos: usize,
                dim: usize,
                max: i64,
                lo: i64,
                left: i64,
                stack: &mut Vec<i64>,
                push: &mut dyn FnMut(Vec<i64>),
            ) {
                if pos == dim {
                    if left == 0 {
                        push(stack.clone());
                    }
                    return;
                }
                let remaining = (dim - pos - 1) as i64;
                let mut v = max.min(left - remaining * lo);
                // keep parity of the coset (coordinates step by 2)
                if (v - max).rem_euclid(2) != 0 {
                    v -= 1;
                }
                while v >= lo && left - v >= remaining * lo {
                    stack.push(v);
                    gen(pos + 1, dim, v, lo, left - v, stack, push);
                    stack.pop();
                    v -= 2;
                }
            }
            gen(0, dim, hi, lo, total, &mut stack, &mut push);
        }
        Family::B | Family::C | Family::D => {
            let n = lie.rank();
            let hi = lt[0];
            let budget = lambda.one_norm_twice();
            let parity = lt[0].rem_euclid(2);
            let is_d = lie.family() == Family::D;
            let mut stack: Vec<i64> = Vec::with_capacity(n);
            #[allow(clippy::too_many_arguments)]
            fn gen(
                pos: usize,
                n: usize,
                max: i64,
                budget: i64,
                parity: i64,
                is_d: bool,
                stack: &mut Vec<i64>,
                push: &mut dyn FnMut(Vec<i64>),
            ) {
                if pos == n {
                    push(stack.clone());
                    if is_d && stack[n - 1] > 0 {
                        let mut alt = stack.clone();
                        alt[n - 1] = -alt[n - 1];
                        push(alt);
                    }
                    return;
                }
                let mut v = max.min(budget);
                if v.rem_euclid(2) != parity {
                    v -= 1;
                }
                while v >= parity {
                    stack.push(v);
                    gen(pos + 1, n, v, budget - v, parity, is_d, stack, push);
                    stack.pop();
                    v -= 2;
                }
            }
            gen(0, n, hi, budget, parity, is_d, &mut stack, &mut push);
        }
    }
    out.sort();
    out
}

/// Full dominant multiplicity table of `pi_lambda`.
pub fn dominant_table(lie: LieType, lambda: &Weight) -> WeightTable {
    assert_lattice_weight(lie, lambda);
    assert!(
        lie.is_dominant(lambda),
        "highest weight must be dominant, got {lambda}"
    );
    let rs = root_system(lie);
    let rho_twice = rs.rho().twice().to_vec();
    let lam_rho: Vec<i64> = lambda
        .twice()
        .iter()
        .zip(&rho_twice)
        .map(|(a, b)| a + b)
        .collect();
    let lam_norm = dot(&lam_rho, &lam_rho);
    let root_data: Vec<(&Weight, i64)> = rs
        .positive_roots()
        .iter()
        .map(|alpha| {
            let c = root_coords(lie, alpha.twice()).expect("positive roots lie in the cone");
            (alpha, c.iter().sum())
        })
        .collect();

    let mut entries: BTreeMap<Weight, BigUint> = BTreeMap::new();
    for (level, mu) in dominant_candidates(lie, lambda) {
        if level == 0 {
            entries.insert(mu, BigUint::one());
            continue;
        }
        let mu_rho: Vec<i64> = mu
            .twice()
            .iter()
            .zip(&rho_twice)
            .map(|(a, b)| a + b)
            .collect();
        let denom = lam_norm - dot(&mu_rho, &mu_rho);
        assert!(denom > 0, "degenerate Freudenthal denominator at {mu}");
        let mut numer = BigInt::zero();
        for (alpha, height) in &root_data {
            let mut nu = mu.twice().to_vec();
            for _ in 1..=(level / height) {
                for (c, a) in nu.iter_mut().zip(alpha.twice()) {
                    *c += a;
                }
                let dom = lie.dominant_representative(
                    &Weight::from_twice(nu.clone()).expect("coset preserved"),
                );
                if let Some(m) = entries.get(&dom) {
                    let weight = dot(&nu, alpha.twice());
                    numer += BigInt::from(2 * weight) * BigInt::from(m.clone());
                }
            }
        }
        let (q, r) = numer.div_rem(&BigInt::from(denom));
        assert!(r.is_zero(), "Freudenthal division must be exact at {mu}");
        assert!(!q.is_negative(), "negative multiplicity at {mu}");
        if !q.is_zero() {
            entries.insert(mu, q.to_biguint().unwrap());
        }
    }
    WeightTable {
        lie,
        lambda: lambda.clone(),
        entries,
    }
}

/// Multiplicity of `mu` in `pi_lambda` by the Freudenthal recursion.
pub fn freudenthal(lie: LieType, lambda: &Weight, mu: &Weight) -> BigUint {
    dominant_table(lie, lambda).multiplicity(mu)
}

fn distinct_permutations(values: &[i64]) -> BTreeSet<Vec<i64>> {
    fn rec(current: &mut Vec<i64>, rest: &mut Vec<i64>, out: &mut BTreeSet<Vec<i64>>) {
        if rest.is_empty() {
            out.insert(current.clone());
            return;
        }
        let mut seen = BTreeSet::new();
        for i in 0..rest.len() {
            if !seen.insert(rest[i]) {
                continue;
            }
            let v = rest.remove(i);
            current.push(v);
            rec(current, rest, out);
            current.pop();
            rest.insert(i, v);
        }
    }
    let mut out = BTreeSet::new();
    rec(&mut Vec::new(), &mut values.to_vec(), &mut out);
    out
}

/// All points of the Weyl orbit of `mu`: permutations for family A, signed
/// permutations for B and C, evenly-signed permutations for D (any signs
/// once a zero coordinate can absorb the parity).
pub(crate) fn orbit_points(lie: LieType, mu: &Weight) -> Vec<Weight> {
    let twice = mu.twice();
    if lie.family() == Family::A {
        return distinct_permutations(twice)
            .into_iter()
            .map(|v| Weight::from_twice(v).expect("uniform coset"))
            .collect();
    }
    let abs: Vec<i64> = twice.iter().map(|t| t.abs()).collect();
    let keep_parity = lie.family() == Family::D && mu.zero_count() == 0;
    let parity = mu.neg_count() % 2;
    let mut out = Vec::new();
    for perm in distinct_permutations(&abs) {
        let nonzero: Vec<usize> = (0..perm.len()).filter(|i| perm[*i] != 0).collect();
        for mask in 0..(1u32 << nonzero.len()) {
            if keep_parity && (mask.count_ones() as usize) % 2 != parity {
                continue;
            }
            let mut v = perm.clone();
            for (bit, idx) in nonzero.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    v[*idx] = -v[*idx];
                }
            }
            out.push(Weight::from_twice(v).expect("uniform coset"));
        }
    }
    out
}

/// The complete weight diagram of `pi_lambda`, Weyl-closed.
pub fn weight_diagram(lie: LieType, lambda: &Weight) -> WeightDiagram {
    let table = dominant_table(lie, lambda);
    let mut diagram = WeightDiagram::new(lie, DiagramLabel::HighestWeight(lambda.clone()));
    for (mu, m) in table.dominant_entries() {
        for point in orbit_points(lie, mu) {
            diagram.insert(point, m.clone());
        }
    }
    diagram
}

/// Exact dimension of `pi_lambda` by the Weyl dimension formula.
pub fn weyl_dimension(lie: LieType, lambda: &Weight) -> BigUint {
    assert_lattice_weight(lie, lambda);
    assert!(lie.is_dominant(lambda), "highest weight must be dominant");
    let rs = root_system(lie);
    let rho = rs.rho().twice();
    let lam_rho: Vec<i64> = lambda.twice().iter().zip(rho).map(|(a, b)| a + b).collect();
    let mut numer = BigUint::one();
    let mut denom = BigUint::one();
    for alpha in rs.positive_roots() {
        let a = dot(&lam_rho, alpha.twice());
        let b = dot(rho, alpha.twice());
        assert!(a > 0 && b > 0);
        numer *= BigUint::from(a as u64);
        denom *= BigUint::from(b as u64);
    }
    let (q, r) = numer.div_rem(&denom);
    assert!(r.is_zero(), "Weyl dimension must be an integer");
    q
}

/// Reusable tensor-product oracle for `sigma_{k,p}`: the tensor of the
/// one-row representation `k w1` with the exterior-type `e1 + ... + ep`,
/// with both factors evaluated by the Freudenthal recursion.
#[derive(Debug, Clone)]
pub struct SigmaOracle {
    sym: WeightTable,
    ext: WeightDiagram,
}

impl SigmaOracle {
    pub fn new(lie: LieType, k: i64, p: usize) -> Self {
        let n = lie.rank();
        assert!(
            !matches!(lie.family(), Family::A),
            "sigma tensors are defined for families B, C, D"
        );
        assert!(k >= 0 && (1..=n).contains(&p), "need k >= 0 and 1 <= p <= n");
        let mut sym_top = vec![0i64; n];
        sym_top[0] = 2 * k;
        let mut ext_top = vec![0i64; n];
        for t in ext_top.iter_mut().take(p) {
            *t = 2;
        }
        let sym_lambda = Weight::from_twice(sym_top).unwrap();
        let ext_lambda = Weight::from_twice(ext_top).unwrap();
        SigmaOracle {
            sym: dominant_table(lie, &sym_lambda),
            ext: weight_diagram(lie, &ext_lambda),
        }
    }

    /// Sum over the exterior factor's weights of the paired multiplicities.
    pub fn multiplicity(&self, mu: &Weight) -> BigUint {
        let mut acc = BigUint::zero();
        for (eta, m_eta) in self.ext.iter() {
            let m_sym = self.sym.multiplicity(&mu.sub(eta));
            if !m_sym.is_zero() {
                acc += m_sym * m_eta;
            }
        }
        acc
    }

    /// Total over all weights: the product of the two factor dimensions.
    pub fn total_dimension(&self) -> BigUint {
        weyl_dimension(self.sym.lie(), self.sym.lambda()) * self.ext.total()
    }
}

/// One-shot tensor multiplicity of `mu` in `sigma_{k,p}`.
pub fn tensor_sigma_oracle(lie: LieType, k: i64, p: usize, mu: &Weight) -> BigUint {
    SigmaOracle::new(lie, k, p).multiplicity(mu)
}

/// Series coefficients of `1 / (1 - z^2)^(n-1)` up to degree `max_deg`,
/// computed by repeated convolution.
fn even_geometric_power(n: usize, max_deg: usize) -> Vec<BigUint> {
    let mut coeff = vec![BigUint::zero(); max_deg + 1];
    coeff[0] = BigUint::one();
    for _ in 0..(n - 1) {
        let mut next = vec![BigUint::zero(); max_deg + 1];
        for (d, c) in coeff.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut e = d;
            while e <= max_deg {
                next[e] += c;
                e += 2;
            }
        }
        coeff = next;
    }
    coeff
}

/// Check that, in family D of the given rank, the closed one-row
/// multiplicities of `mu` agree with the coefficients of
/// `z^|mu| / (1 - z^2)^(n-1)` for all `k <= max_k`.
pub fn genfunc_check(n: usize, mu: &Weight, max_k: i64) -> bool {
    let lie = LieType::new(Family::D, n).expect("rank >= 2");
    lie.expect_rank(mu);
    assert!(mu.is_integral(), "the generating function is stated on the integer lattice");
    let norm = mu.one_norm_twice() / 2;
    let series = even_geometric_power(n, (max_k.max(0)) as usize);
    for k in 0..=max_k {
        let coefficient = if k >= norm {
            let shift = (k - norm) as usize;
            let c = series[shift].clone();
            // the closed coefficient of the same series term
            let m = k - norm;
            if m % 2 == 0 {
                debug_assert_eq!(c, binom(m / 2 + n as i64 - 2, n as i64 - 2));
            }
            c
        } else {
            BigUint::zero()
        };
        if crate::formulas::mult_sym_power(lie, k, mu) != coefficient {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::Family;

    fn lie(f: Family, n: usize) -> LieType {
        LieType::new(f, n).unwrap()
    }

    fn w(coords: &[i64]) -> Weight {
        Weight::integral(coords)
    }

    fn half(twice: &[i64]) -> Weight {
        Weight::from_twice(twice.to_vec()).unwrap()
    }

    #[test]
    fn root_counts_and_rho() {
        let c2 = root_system(lie(Family::C, 2));
        assert_eq!(c2.positive_roots().len(), 4);
        assert_eq!(c2.rho(), &w(&[2, 1]));

        let d3 = root_system(lie(Family::D, 3));
        assert_eq!(d3.positive_roots().len(), 6);
        assert_eq!(d3.rho(), &w(&[2, 1, 0]));

        let b2 = root_system(lie(Family::B, 2));
        assert_eq!(b2.positive_roots().len(), 4);
        assert_eq!(b2.rho(), &half(&[3, 1]));

        let a3 = root_system(lie(Family::A, 3));
        assert_eq!(a3.positive_roots().len(), 6);

        let d2 = root_system(lie(Family::D, 2));
        assert_eq!(d2.positive_roots().len(), 2);
        assert_eq!(d2.rho(), &w(&[1, 0]));

        for f in [Family::A, Family::B, Family::C, Family::D] {
            for n in 2..=4 {
                let rs = root_system(lie(f, n));
                let expected = match f {
                    Family::A => n * (n + 1) / 2,
                    Family::B | Family::C => n * n,
                    Family::D => n * (n - 1),
                };
                assert_eq!(rs.positive_roots().len(), expected);
                assert_eq!(rs.simple_roots().len(), n);
                // rho is half the positive-root sum, exactly
                let dim = rs.rho().rank();
                let mut sum = vec![0i64; dim];
                for r in rs.positive_roots() {
                    for (s, c) in sum.iter_mut().zip(r.twice()) {
                        *s += c;
                    }
                }
                let doubled_rho: Vec<i64> = rs.rho().twice().iter().map(|t| 2 * t).collect();
                assert_eq!(sum, doubled_rho);
            }
        }
    }

    #[test]
    fn freudenthal_standard_rep() {
        let c2 = lie(Family::C, 2);
        assert_eq!(
            freudenthal(c2, &w(&[1, 0]), &w(&[0, 1])),
            BigUint::from(1u32)
        );
    }

    #[test]
    fn freudenthal_a1_string() {
        // weights of the (k+1)-dimensional irreducible of rank one
        let a1 = lie(Family::A, 1);
        for k in 0..=6i64 {
            let lambda = w(&[k, 0]);
            let table = dominant_table(a1, &lambda);
            let mut total = BigUint::zero();
            for j in 0..=k {
                let m = table.multiplicity(&w(&[k - j, j]));
                assert_eq!(m, BigUint::from(1u32), "k={k} j={j}");
                total += m;
            }
            assert_eq!(total, weyl_dimension(a1, &lambda));
        }
    }

    #[test]
    fn freudenthal_symmetric_square() {
        // dimension 10 symmetric square of the 4-dim symplectic standard:
        // zero weight comes from the two pairings {1,3}, {2,4}
        let c2 = lie(Family::C, 2);
        assert_eq!(
            freudenthal(c2, &w(&[2, 0]), &w(&[0, 0])),
            BigUint::from(2u32)
        );
    }

    #[test]
    fn diagram_examples() {
        let c2 = lie(Family::C, 2);
        let d = weight_diagram(c2, &w(&[1, 1]));
        assert_eq!(d.len(), 5);
        assert_eq!(d.total(), BigUint::from(5u32));
        assert_eq!(d.get(&w(&[0, 0])), BigUint::from(1u32));

        let b2 = lie(Family::B, 2);
        let spinor = weight_diagram(b2, &half(&[1, 1]));
        assert_eq!(spinor.len(), 4);
        assert_eq!(spinor.total(), BigUint::from(4u32));

        let a2 = lie(Family::A, 2);
        let adjoint = weight_diagram(a2, &w(&[2, 1, 0]));
        assert_eq!(adjoint.total(), BigUint::from(8u32));
        assert_eq!(adjoint.get(&w(&[1, 1, 1])), BigUint::from(2u32));
        assert_eq!(adjoint.get(&w(&[2, 1, 0])), BigUint::from(1u32));
        assert_eq!(adjoint.len(), 7);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(
            weyl_dimension(lie(Family::C, 2), &w(&[1, 0])),
            BigUint::from(4u32)
        );
        assert_eq!(
            weyl_dimension(lie(Family::D, 3), &w(&[1, 0, 0])),
            BigUint::from(6u32)
        );
        assert_eq!(
            weyl_dimension(lie(Family::B, 2), &half(&[1, 1])),
            BigUint::from(4u32)
        );
    }

    #[test]
    fn diagram_total_matches_dimension() {
        for (f, n) in [
            (Family::B, 2),
            (Family::C, 2),
            (Family::D, 2),
            (Family::C, 3),
            (Family::D, 3),
        ] {
            let l = lie(f, n);
            let lambda = w(&[3, 1, 1][..n]);
            let d = weight_diagram(l, &lambda);
            assert_eq!(d.total(), weyl_dimension(l, &lambda), "{l}");
        }
    }

    #[test]
    fn diagram_constant_on_orbits() {
        let d3 = lie(Family::D, 3);
        let d = weight_diagram(d3, &w(&[2, 1, 1]));
        for (mu, m) in d.iter() {
            let dom = d3.dominant_representative(mu);
            assert_eq!(d.get(&dom), m.clone());
        }
    }

    #[test]
    fn highest_weight_multiplicity_one() {
        for (f, n) in [(Family::B, 3), (Family::C, 3), (Family::D, 3), (Family::A, 2)] {
            let l = lie(f, n);
            let lambda = w(&[3, 1, 0]);
            let t = dominant_table(l, &lambda);
            assert_eq!(t.multiplicity(&lambda), BigUint::one());
        }
    }

    #[test]
    fn tensor_oracle_examples() {
        let c2 = lie(Family::C, 2);
        assert_eq!(
            tensor_sigma_oracle(c2, 1, 1, &w(&[0, 0])),
            BigUint::from(4u32)
        );
        assert_eq!(
            tensor_sigma_oracle(c2, 0, 1, &w(&[1, 0])),
            BigUint::from(1u32)
        );
        let b2 = lie(Family::B, 2);
        assert_eq!(
            tensor_sigma_oracle(b2, 1, 1, &w(&[1, 0])),
            BigUint::from(2u32)
        );
        let d3 = lie(Family::D, 3);
        assert_eq!(
            tensor_sigma_oracle(d3, 1, 1, &w(&[0, 0, 0])),
            BigUint::from(6u32)
        );
    }

    #[test]
    fn tensor_oracle_total() {
        for (f, n, k, p) in [
            (Family::B, 2, 2, 1),
            (Family::C, 2, 1, 2),
            (Family::D, 3, 2, 2),
        ] {
            let l = lie(f, n);
            let oracle = SigmaOracle::new(l, k, p);
            let mut total = BigUint::zero();
            // sum over a box certainly containing the support
            let bound = k + p as i64;
            let mut coords = vec![-bound; n];
            loop {
                let mu = w(&coords);
                total += oracle.multiplicity(&mu);
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    coords[i] += 1;
                    if coords[i] <= bound {
                        break;
                    }
                    coords[i] = -bound;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
            assert_eq!(total, oracle.total_dimension(), "{l} k={k} p={p}");
        }
    }

    #[test]
    fn genfunc_examples() {
        assert!(genfunc_check(3, &w(&[1, 0, 0]), 12));
        assert!(genfunc_check(2, &w(&[0, 0]), 12));
        assert!(genfunc_check(3, &w(&[2, 1, 0]), 12));
    }
}
