//! Closed-form predictions for stable generic Jordan types and complexities.
//!
//! Binomials and multinomials with a negative or out-of-range lower index
//! are zero throughout; all arithmetic is exact.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_prime, Error, Result};
use crate::jordan::JordanType;
use crate::partition::{factorial, hook_data, p_core_weight, HookData, Partition};

/// `C(n, k)`, zero unless `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All `(c_1, ..., c_u)` with `0 <= c_i <= n_i` and `Σ c_i = s`, in
/// lexicographically decreasing order.
pub fn lambda_set(ns: &[usize], s: i64) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if s < 0 || s as usize > ns.iter().sum::<usize>() {
        return out;
    }
    fn go(ns: &[usize], left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some((&first, rest)) = ns.split_first() else {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        };
        let room: usize = rest.iter().sum();
        for c in (0..=first.min(left)).rev() {
            if left - c > room {
                break;
            }
            cur.push(c);
            go(rest, left - c, cur, out);
            cur.pop();
        }
    }
    go(ns, s as usize, &mut Vec::new(), &mut out);
    out
}

/// The data of a signed permutation module `M(α|β)` at a prime `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedShape {
    pub alpha: Partition,
    pub beta: Partition,
    pub p: usize,
    /// `p`-residues of `α_1, ..., α_m, β_1, ..., β_k`.
    pub residues: Vec<usize>,
    pub d: usize,
    pub r: usize,
    /// `(Σ residues - r) / p`.
    pub c: usize,
}

impl SignedShape {
    pub fn new(alpha: &Partition, beta: &Partition, p: usize) -> Result<SignedShape> {
        check_prime(p)?;
        let n = alpha.size() + beta.size();
        let residues: Vec<usize> = alpha
            .parts()
            .iter()
            .chain(beta.parts())
            .map(|x| x % p)
            .collect();
        let (d, r) = (n / p, n % p);
        let total: usize = residues.iter().sum();
        // Σ residues ≡ n (mod p), so the excess over r is a multiple of p.
        debug_assert!(total >= r && (total - r).is_multiple_of(p));
        Ok(SignedShape {
            alpha: alpha.clone(),
            beta: beta.clone(),
            p,
            c: (total - r) / p,
            residues,
            d,
            r,
        })
    }

    pub fn n(&self) -> usize {
        self.alpha.size() + self.beta.size()
    }

    fn parts(&self) -> Vec<usize> {
        self.alpha
            .parts()
            .iter()
            .chain(self.beta.parts())
            .copied()
            .collect()
    }

    /// Dimension `n! / (Π α_i! Π β_j!)`.
    pub fn dim(&self) -> BigUint {
        self.parts()
            .iter()
            .fold(factorial(self.n()), |acc, &k| acc / factorial(k))
    }

    /// Complexity `d - c` of the module.
    pub fn complexity(&self) -> usize {
        self.d - self.c
    }
}

/// Number of non-projective (trivial) blocks in the generic Jordan type of
/// `M(α|β)` restricted to `E_s`; zero exactly when `s > d - c`.
pub fn n_signed(shape: &SignedShape, s: usize) -> Result<BigUint> {
    if s > shape.d {
        return Err(Error::InvalidArgument(format!(
            "s = {s} exceeds d = {}",
            shape.d
        )));
    }
    let p = shape.p;
    let parts = shape.parts();
    let ns: Vec<usize> = parts
        .iter()
        .zip(&shape.residues)
        .map(|(&x, &res)| (x - res) / p)
        .collect();
    let rest = (shape.d - s) * p + shape.r;
    let mut total = BigUint::zero();
    for cs in lambda_set(&ns, s as i64) {
        let placements = cs.iter().fold(factorial(s), |acc, &c| acc / factorial(c));
        let fill = parts
            .iter()
            .zip(&cs)
            .fold(factorial(rest), |acc, (&x, &c)| acc / factorial(x - c * p));
        total += placements * fill;
    }
    Ok(total)
}

/// Number of trivial blocks in the stable generic Jordan type of
/// `S^{(a,1^b)}` restricted to `E_s`, for `p ∤ a + b`.
pub fn n_hook(h: &HookData, s: usize) -> Result<BigUint> {
    if h.r == 0 {
        return Err(Error::Hypothesis(format!(
            "(a, b) = ({}, {}): p = {} divides a + b",
            h.a, h.b, h.p
        )));
    }
    if s > h.d {
        return Err(Error::InvalidArgument(format!(
            "s = {s} exceeds d = {}",
            h.d
        )));
    }
    let top = ((h.d - s) * h.p + h.r) as i64 - 1;
    let mut total = BigUint::zero();
    for cs in lambda_set(&[h.u, h.v], s as i64) {
        let c2 = cs[1];
        total += binomial(s as i64, c2 as i64) * binomial(top, h.b as i64 - (c2 * h.p) as i64);
    }
    Ok(total)
}

/// Which of the two cases of the hook corollary applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CorollaryCase {
    /// `r <= b_0`: evaluated at `E_{d-1}`, complexity `d - 1`.
    BelowDefect,
    /// `b_0 < r`: evaluated at `E_d`, complexity `d`.
    FullDefect,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryValue {
    pub case: CorollaryCase,
    /// Rank of the elementary abelian subgroup the value refers to.
    pub s: usize,
    pub value: BigUint,
    pub complexity: usize,
}

/// Product-form value of `N(μ; s)` at the complexity of a hook with `p ∤ n`.
pub fn corollary_values(h: &HookData) -> Result<CorollaryValue> {
    if h.d == 0 || h.r == 0 {
        return Err(Error::Hypothesis(format!(
            "(a, b) = ({}, {}) at p = {}: need d >= 1 and p not dividing a + b",
            h.a, h.b, h.p
        )));
    }
    let (d, v, p, r, b0) = (h.d as i64, h.v as i64, h.p as i64, h.r as i64, h.b0 as i64);
    Ok(if r <= b0 {
        CorollaryValue {
            case: CorollaryCase::BelowDefect,
            s: h.d - 1,
            value: binomial(d - 1, v) * binomial(p + r - 1, b0),
            complexity: h.d - 1,
        }
    } else {
        CorollaryValue {
            case: CorollaryCase::FullDefect,
            s: h.d,
            value: binomial(d, v) * binomial(r - 1, b0),
            complexity: h.d,
        }
    })
}

/// Which closed form produced a prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Source {
    SignedPermutation,
    HookCoprime,
    HookCorollary,
    HookMultiple,
}

/// A predicted stable generic Jordan type on `E_s` and the module's complexity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub stable: JordanType,
    pub s: usize,
    pub complexity: usize,
    pub source: Source,
}

fn small(x: &BigUint) -> Result<usize> {
    x.to_usize()
        .ok_or_else(|| Error::InvalidArgument(format!("block count {x} does not fit in usize")))
}

/// Stable type `(1^{N(α,β,s)})` of `M(α|β)` on `E_s`.
pub fn signed_prediction(shape: &SignedShape, s: usize) -> Result<Prediction> {
    let count = small(&n_signed(shape, s)?)?;
    Ok(Prediction {
        stable: JordanType::uniform(shape.p, 1, count),
        s,
        complexity: shape.complexity(),
        source: Source::SignedPermutation,
    })
}

/// Stable type `(1^{N(μ;s)})` of a hook Specht module with `p ∤ n` on `E_s`.
pub fn hook_prediction(h: &HookData, s: usize) -> Result<Prediction> {
    let count = small(&n_hook(h, s)?)?;
    Ok(Prediction {
        stable: JordanType::uniform(h.p, 1, count),
        s,
        complexity: hook_complexity(h),
        source: Source::HookCoprime,
    })
}

/// The corollary's value as a prediction on `E_{d-1}` or `E_d`.
pub fn corollary_prediction(h: &HookData) -> Result<Prediction> {
    let cv = corollary_values(h)?;
    Ok(Prediction {
        stable: JordanType::uniform(h.p, 1, small(&cv.value)?),
        s: cv.s,
        complexity: cv.complexity,
        source: Source::HookCorollary,
    })
}

/// Stable type of `S^{(a,1^b)}` on `E_d` when `a + b = dp`: with
/// `b = σp + b_0`, it is `(1^k)` for even `b_0` and `((p-1)^k)` for odd
/// `b_0`, where `k = C(d-1, σ)`.
pub fn hook_multiple_prediction(h: &HookData) -> Result<Prediction> {
    if h.r != 0 || h.d == 0 {
        return Err(Error::Hypothesis(format!(
            "(a, b) = ({}, {}): need a + b a positive multiple of p = {}",
            h.a, h.b, h.p
        )));
    }
    let sigma = h.v;
    let k = small(&binomial(h.d as i64 - 1, sigma as i64))?;
    let size = if h.b0.is_multiple_of(2) { 1 } else { h.p - 1 };
    Ok(Prediction {
        stable: JordanType::uniform(h.p, size, k),
        s: h.d,
        complexity: hook_complexity(h),
        source: Source::HookMultiple,
    })
}

fn hook_complexity(h: &HookData) -> usize {
    p_core_weight(&h.partition(), h.p).weight
}

/// Module whose complexity is predicted.
#[derive(Clone, Copy, Debug)]
pub enum ComplexityQuery<'a> {
    /// A hook Specht module: the `p`-weight.
    Hook(&'a Partition, usize),
    /// A signed permutation module: `d - c`.
    Signed(&'a SignedShape),
}

pub fn predicted_complexity(query: ComplexityQuery<'_>) -> Result<usize> {
    match query {
        ComplexityQuery::Hook(mu, p) => {
            hook_data(mu, p)?;
            Ok(p_core_weight(mu, p).weight)
        }
        ComplexityQuery::Signed(shape) => Ok(shape.complexity()),
    }
}

/// Whether the `p`-core of `μ` is larger than `r = n mod p`; then `S^μ`
/// restricted to `E_d` is generically free.
pub fn core_exceeds_remainder(mu: &Partition, p: usize) -> bool {
    p_core_weight(mu, p).core.size() > mu.size() % p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::e_generators;
    use crate::tableau::{enumerate_tabloids, DEFAULT_ENUMERATION_LIMIT};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(5, 0), big(1));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(3, 4), big(0));
        assert_eq!(binomial(3, -1), big(0));
        assert_eq!(binomial(-1, 0), big(0));
        assert_eq!(binomial(40, 20), big(137_846_528_820));
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_set(&[1, 1], 1), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(
            lambda_set(&[2, 0, 1], 2),
            vec![vec![2, 0, 0], vec![1, 0, 1]]
        );
        assert!(lambda_set(&[1, 1], 3).is_empty());
        assert!(lambda_set(&[1, 1], -1).is_empty());
        assert_eq!(lambda_set(&[], 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn signed_examples() {
        let sh = SignedShape::new(&part("2"), &part("2"), 2).unwrap();
        assert_eq!((sh.d, sh.r, sh.c), (2, 0, 0));
        assert_eq!(n_signed(&sh, 1).unwrap(), big(2));
        assert_eq!(sh.dim(), big(6));
        let sh = SignedShape::new(&part("4"), &Partition::empty(), 2).unwrap();
        assert_eq!(n_signed(&sh, 1).unwrap(), big(1));
        // residues 1 and 1 at p = 2: c = 1, so s = 2 > d - c gives zero
        let sh = SignedShape::new(&part("3"), &part("1"), 2).unwrap();
        assert_eq!(sh.c, 1);
        assert_eq!(n_signed(&sh, 2).unwrap(), big(0));
        assert!(n_signed(&sh, 3).is_err());
    }

    /// Tabloids of the concatenated shape fixed by every generator of `E_s`.
    fn fixed_tabloids(alpha: &Partition, beta: &Partition, p: usize, s: usize) -> usize {
        let shape: Vec<usize> = alpha.parts().iter().chain(beta.parts()).copied().collect();
        let n: usize = shape.iter().sum();
        let gens = e_generators(n, p, s).unwrap();
        enumerate_tabloids(&shape, DEFAULT_ENUMERATION_LIMIT)
            .unwrap()
            .into_iter()
            .filter(|t| gens.iter().all(|g| &t.act(g) == t))
            .count()
    }

    #[test]
    fn signed_count_matches_fixed_tabloids() {
        for p in [2usize, 3] {
            for n in 1..=7 {
                for k in 0..=n {
                    for alpha in partitions_or_empty(k) {
                        for beta in partitions_or_empty(n - k) {
                            let sh = SignedShape::new(&alpha, &beta, p).unwrap();
                            for s in 1..=sh.d {
                                assert_eq!(
                                    n_signed(&sh, s).unwrap(),
                                    BigUint::from(fixed_tabloids(&alpha, &beta, p, s)),
                                    "({alpha})|({beta}) p={p} s={s}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    fn partitions_or_empty(k: usize) -> Vec<Partition> {
        if k == 0 {
            vec![Partition::empty()]
        } else {
            Partition::all(k)
        }
    }

    #[test]
    fn hook_examples() {
        for (a, p) in [(4usize, 3usize), (7, 2), (5, 5)] {
            let h = HookData::new(a, 0, p);
            if h.r != 0 {
                for s in 1..=h.d {
                    assert_eq!(n_hook(&h, s).unwrap(), big(1));
                }
            }
        }
        let h = hook_data(&part("5,1,1"), 3).unwrap();
        assert_eq!(n_hook(&h, 1).unwrap(), big(3));
        let h = hook_data(&part("2,1,1"), 3).unwrap();
        assert_eq!(n_hook(&h, 1).unwrap(), big(0));
        let h = hook_data(&part("2,1,1"), 2).unwrap();
        assert!(matches!(n_hook(&h, 1), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn hook_count_at_zero_is_the_dimension() {
        for n in 1..=12 {
            for mu in Partition::hooks(n) {
                let h = hook_data(&mu, 5).unwrap();
                if h.r != 0 {
                    assert_eq!(n_hook(&h, 0).unwrap(), binomial(n as i64 - 1, h.b as i64));
                }
            }
        }
    }

    #[test]
    fn corollary_examples() {
        let cv = corollary_values(&hook_data(&part("5,1,1"), 3).unwrap()).unwrap();
        assert_eq!(cv.case, CorollaryCase::BelowDefect);
        assert_eq!((cv.value.clone(), cv.complexity, cv.s), (big(3), 1, 1));
        let cv = corollary_values(&hook_data(&part("2,1,1"), 3).unwrap()).unwrap();
        assert_eq!((cv.value.clone(), cv.complexity, cv.s), (big(3), 0, 0));
        let cv = corollary_values(&hook_data(&part("4,1"), 3).unwrap()).unwrap();
        assert_eq!(cv.case, CorollaryCase::FullDefect);
        assert_eq!((cv.value.clone(), cv.complexity), (big(1), 1));
        assert!(corollary_values(&hook_data(&part("2,1"), 3).unwrap()).is_err());
        assert!(corollary_values(&hook_data(&part("1,1"), 3).unwrap()).is_err());
    }

    #[test]
    fn corollary_agrees_with_hook_count() {
        for p in [2usize, 3, 5, 7] {
            for n in 1..=40 {
                for mu in Partition::hooks(n) {
                    let h = hook_data(&mu, p).unwrap();
                    if h.d == 0 || h.r == 0 {
                        continue;
                    }
                    let cv = corollary_values(&h).unwrap();
                    assert_eq!(cv.value, n_hook(&h, cv.s).unwrap(), "{mu} p={p}");
                    if h.a > 0 {
                        assert!(!cv.value.is_zero(), "{mu} p={p}");
                    }
                    assert_eq!(cv.complexity, p_core_weight(&mu, p).weight, "{mu} p={p}");
                }
            }
        }
    }

    #[test]
    fn split_identity() {
        // M((a-1)|(b+1)) ≅ S^{(a,1^b)} ⊕ S^{(a-1,1^{b+1})} when p ∤ a + b
        for p in [2usize, 3, 5, 7] {
            for n in 2..=40 {
                if n % p == 0 {
                    continue;
                }
                for b in 0..=n - 2 {
                    let a = n - b;
                    let sh = SignedShape::new(
                        &Partition::new(vec![a - 1]).unwrap(),
                        &Partition::new(vec![b + 1]).unwrap(),
                        p,
                    )
                    .unwrap();
                    let mu = HookData::new(a, b, p);
                    let lambda = HookData::new(a - 1, b + 1, p);
                    for s in 1..=n / p {
                        assert_eq!(
                            n_signed(&sh, s).unwrap(),
                            n_hook(&mu, s).unwrap() + n_hook(&lambda, s).unwrap(),
                            "a={a} b={b} p={p} s={s}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn multiple_of_p_examples() {
        let t = |mu: &str, p| {
            hook_multiple_prediction(&hook_data(&part(mu), p).unwrap())
                .unwrap()
                .stable
                .to_string()
        };
        assert_eq!(t("2,1,1", 2), "(1^1)");
        assert_eq!(t("3,1,1,1", 3), "(1^1)");
        assert_eq!(t("2,1,1,1,1", 3), "(2^1)");
        assert_eq!(t("6", 3), "(1^1)");
        assert!(hook_multiple_prediction(&hook_data(&part("3,1"), 3).unwrap()).is_err());
    }

    #[test]
    fn telescoping_identity() {
        for d in 1..=40i64 {
            for sigma in 0..d {
                assert_eq!(
                    binomial(d, sigma + 1),
                    binomial(d - 1, sigma) + binomial(d - 1, sigma + 1)
                );
            }
        }
    }

    #[test]
    fn complexity_examples() {
        assert_eq!(
            predicted_complexity(ComplexityQuery::Hook(&part("7,1,1,1"), 3)).unwrap(),
            3
        );
        assert_eq!(
            predicted_complexity(ComplexityQuery::Hook(&part("2,1,1"), 3)).unwrap(),
            0
        );
        let sh = SignedShape::new(&part("2"), &part("2"), 2).unwrap();
        assert_eq!(
            predicted_complexity(ComplexityQuery::Signed(&sh)).unwrap(),
            2
        );
        assert!(predicted_complexity(ComplexityQuery::Hook(&part("3,2"), 2)).is_err());
    }

    #[test]
    fn free_criterion_examples() {
        assert!(core_exceeds_remainder(&part("3,2,1"), 2));
        assert!(!core_exceeds_remainder(&part("2,1,1"), 2));
        assert!(!core_exceeds_remainder(&part("1"), 2));
    }
}
