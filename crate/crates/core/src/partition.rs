//! Integer partitions, hook recognition, and p-core / p-weight computations.
//!
//! Partitions serialize as comma-separated parts (`5,1,1`); the empty
//! partition serializes as `-`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{guard, Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    /// Validates `parts` and builds the partition.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|&x| x == 0) {
            return Err(Error::InvalidPartition(format!(
                "part {} of {:?} is not positive",
                i + 1,
                parts
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The hook `(a, 1^b)`. With `a = 0` only `b = 0` is meaningful and gives
    /// the empty partition.
    pub fn hook(a: usize, b: usize) -> Result<Self> {
        if a == 0 {
            return if b == 0 {
                Ok(Partition::empty())
            } else {
                Err(Error::InvalidPartition(format!("(0,1^{b}) has a zero arm")))
            };
        }
        let mut parts = vec![a];
        parts.extend(std::iter::repeat_n(1, b));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True for `(a, 1^b)`, including `(a)`, `(1^b)` and the empty partition.
    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&x| x == 1)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&x| x > j).count())
            .collect();
        Partition::new(parts).expect("conjugate of a partition is a partition")
    }

    /// Hook length of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row)
                    .map(|j| (row - j - 1) + (conj.parts[j] - i - 1) + 1)
                    .collect()
            })
            .collect()
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                    n: prefix.iter().sum(),
                });
                return;
            }
            for x in (1..=rest.min(max)).rev() {
                prefix.push(x);
                go(rest - x, x, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// The hooks of `n`: `(n), (n-1,1), ..., (1^n)`; for `n = 0` the empty partition.
    pub fn hooks(n: usize) -> Vec<Partition> {
        if n == 0 {
            return vec![Partition::empty()];
        }
        (0..n)
            .map(|b| Partition::hook(n - b, b).expect("valid hook"))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for x in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {x:?} in {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The p-adic bookkeeping of a hook `(a, 1^b)`:
/// `a + b = d·p + r`, `a = u·p + a0`, `b = v·p + b0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HookData {
    pub p: usize,
    pub a: usize,
    pub b: usize,
    pub d: usize,
    pub r: usize,
    pub u: usize,
    pub a0: usize,
    pub v: usize,
    pub b0: usize,
}

impl HookData {
    pub fn new(a: usize, b: usize, p: usize) -> HookData {
        assert!(p >= 2, "characteristic must be at least 2");
        HookData {
            p,
            a,
            b,
            d: (a + b) / p,
            r: (a + b) % p,
            u: a / p,
            a0: a % p,
            v: b / p,
            b0: b % p,
        }
    }

    pub fn n(&self) -> usize {
        self.a + self.b
    }

    /// Reassembles `(a, 1^b)`.
    pub fn partition(&self) -> Partition {
        Partition::hook(self.a, self.b).expect("hook data always describes a partition")
    }
}

/// Decomposes a hook partition. Fails when some part after the first exceeds 1.
pub fn hook_data(mu: &Partition, p: usize) -> Result<HookData> {
    if !mu.is_hook() {
        return Err(Error::NotAHook(mu.to_string()));
    }
    let a = mu.parts().first().copied().unwrap_or(0);
    let b = mu.len().saturating_sub(1);
    Ok(HookData::new(a, b, p))
}

/// A p-core together with the number of rim p-hooks removed to reach it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreWeight {
    pub core: Partition,
    pub weight: usize,
}

fn beta_numbers(mu: &Partition) -> Vec<usize> {
    let k = mu.len();
    mu.parts()
        .iter()
        .enumerate()
        .map(|(i, &x)| x + k - 1 - i)
        .collect()
}

fn from_beta_numbers(mut beads: Vec<usize>) -> Partition {
    beads.sort_unstable_by(|x, y| y.cmp(x));
    let k = beads.len();
    let parts = beads
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (k - 1 - i))
        .filter(|&x| x > 0)
        .collect();
    Partition::new(parts).expect("beta-numbers always decode to a partition")
}

/// p-core and p-weight by sliding beads on the p-abacus.
///
/// A bead at position `b` moves to `b - p` whenever that position is
/// nonnegative and vacant; each move removes one rim p-hook.
pub fn p_core_weight(mu: &Partition, p: usize) -> CoreWeight {
    assert!(p >= 2, "characteristic must be at least 2");
    let mut beads = beta_numbers(mu);
    let mut occupied: HashSet<usize> = beads.iter().copied().collect();
    let mut weight = 0;
    while let Some(i) = beads
        .iter()
        .position(|&b| b >= p && !occupied.contains(&(b - p)))
    {
        occupied.remove(&beads[i]);
        beads[i] -= p;
        occupied.insert(beads[i]);
        weight += 1;
    }
    CoreWeight {
        core: from_beta_numbers(beads),
        weight,
    }
}

/// Largest partition size accepted by [`rim_hook_oracle`].
pub const RIM_HOOK_ORACLE_MAX_N: usize = 20;

/// Partitions `nu` contained in `mu` such that `mu / nu` is a rim p-hook:
/// `p` cells, edge-connected, containing no 2x2 square.
pub fn rim_hook_removals(mu: &Partition, p: usize) -> Vec<Partition> {
    let n = mu.size();
    if n < p {
        return Vec::new();
    }
    let target = n - p;
    let rows = mu.parts();
    let mut out = Vec::new();
    let mut nu = Vec::with_capacity(rows.len());

    fn go(
        rows: &[usize],
        i: usize,
        remaining: usize,
        nu: &mut Vec<usize>,
        p: usize,
        out: &mut Vec<Partition>,
    ) {
        if i == rows.len() {
            if remaining == 0 && is_rim_hook(rows, nu, p) {
                let parts = nu.iter().copied().filter(|&x| x > 0).collect();
                out.push(Partition::new(parts).expect("sub-diagram is a partition"));
            }
            return;
        }
        let cap = if i == 0 {
            rows[0]
        } else {
            rows[i].min(nu[i - 1])
        };
        let tail: usize = rows[i + 1..].iter().sum();
        for x in 0..=cap.min(remaining) {
            if x + tail < remaining {
                continue;
            }
            nu.push(x);
            go(rows, i + 1, remaining - x, nu, p, out);
            nu.pop();
        }
    }

    go(rows, 0, target, &mut nu, p, &mut out);
    out
}

fn is_rim_hook(rows: &[usize], nu: &[usize], p: usize) -> bool {
    let cells: BTreeSet<(usize, usize)> = rows
        .iter()
        .zip(nu)
        .enumerate()
        .flat_map(|(i, (&hi, &lo))| (lo..hi).map(move |j| (i, j)))
        .collect();
    if cells.len() != p {
        return false;
    }
    let has = |i: usize, j: usize| cells.contains(&(i, j));
    if cells
        .iter()
        .any(|&(i, j)| has(i, j + 1) && has(i + 1, j) && has(i + 1, j + 1))
    {
        return false;
    }
    let start = *cells.iter().next().expect("nonempty");
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some((i, j)) = stack.pop() {
        let mut nbrs = vec![(i + 1, j), (i, j + 1)];
        if i > 0 {
            nbrs.push((i - 1, j));
        }
        if j > 0 {
            nbrs.push((i, j - 1));
        }
        for c in nbrs {
            if cells.contains(&c) && seen.insert(c) {
                stack.push(c);
            }
        }
    }
    seen.len() == p
}

/// Brute-force p-core: removes rim p-hooks from the Young diagram in every
/// possible order, checks that all terminal diagrams coincide, and reports
/// that diagram together with the number of removals.
pub fn rim_hook_oracle(mu: &Partition, p: usize) -> Result<CoreWeight> {
    assert!(p >= 2, "characteristic must be at least 2");
    guard(
        "partition size for the rim-hook oracle",
        mu.size() as u128,
        RIM_HOOK_ORACLE_MAX_N as u128,
    )?;
    let mut visited = HashSet::new();
    let mut terminals = BTreeSet::new();
    let mut stack = vec![mu.clone()];
    visited.insert(mu.clone());
    while let Some(lam) = stack.pop() {
        let next = rim_hook_removals(&lam, p);
        if next.is_empty() {
            terminals.insert(lam);
            continue;
        }
        for nu in next {
            if visited.insert(nu.clone()) {
                stack.push(nu);
            }
        }
    }
    if terminals.len() != 1 {
        return Err(Error::InvalidArgument(format!(
            "rim-hook removal from ({mu}) ended in {} distinct diagrams",
            terminals.len()
        )));
    }
    let core = terminals.into_iter().next().expect("one terminal");
    let weight = (mu.size() - core.size()) / p;
    Ok(CoreWeight { core, weight })
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// Dimension of the Specht module, i.e. the number of standard tableaux,
/// by the hook-length formula.
pub fn specht_dimension(mu: &Partition) -> BigUint {
    let hooks: BigUint = mu
        .hook_lengths()
        .iter()
        .flatten()
        .fold(BigUint::from(1u32), |acc, &h| acc * h as u64);
    factorial(mu.size()) / hooks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn make_partition_contract() {
        let mu = Partition::new(vec![5, 1, 1]).unwrap();
        assert_eq!(mu.size(), 7);
        assert_eq!(mu.parts(), &[5, 1, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        let empty = Partition::new(vec![]).unwrap();
        assert_eq!(empty.size(), 0);
        assert_eq!(empty.to_string(), "-");
        assert_eq!(part("-"), empty);
    }

    #[test]
    fn serialization_round_trips() {
        for mu in Partition::all(6) {
            assert_eq!(part(&mu.to_string()), mu);
        }
        assert!("3,x".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn hook_data_examples() {
        let h = hook_data(&part("5,1,1"), 3).unwrap();
        assert_eq!(
            (h.a, h.b, h.d, h.r, h.u, h.a0, h.v, h.b0),
            (5, 2, 2, 1, 1, 2, 0, 2)
        );
        let h = hook_data(&part("2,1,1"), 2).unwrap();
        assert_eq!(
            (h.a, h.b, h.d, h.r, h.u, h.a0, h.v, h.b0),
            (2, 2, 2, 0, 1, 0, 1, 0)
        );
        assert_eq!(
            hook_data(&part("3,2,1"), 2),
            Err(Error::NotAHook("3,2,1".into()))
        );
        let h = hook_data(&Partition::empty(), 3).unwrap();
        assert_eq!((h.a, h.b, h.d, h.r), (0, 0, 0, 0));
    }

    #[test]
    fn hook_data_reassembles() {
        for n in 0..12 {
            for mu in Partition::hooks(n) {
                for p in [2, 3, 5] {
                    let h = hook_data(&mu, p).unwrap();
                    assert_eq!(h.partition(), mu);
                    assert_eq!(h.d * p + h.r, h.a + h.b);
                    assert_eq!(h.u * p + h.a0, h.a);
                    assert_eq!(h.v * p + h.b0, h.b);
                }
            }
        }
    }

    #[test]
    fn core_weight_examples() {
        let cw = p_core_weight(&part("7,1,1,1"), 3);
        assert_eq!((cw.core, cw.weight), (part("1"), 3));
        let cw = p_core_weight(&part("2,1,1"), 3);
        assert_eq!((cw.core, cw.weight), (part("2,1,1"), 0));
        let cw = p_core_weight(&part("1"), 2);
        assert_eq!((cw.core, cw.weight), (part("1"), 0));
        let cw = p_core_weight(&part("2,1,1"), 2);
        assert_eq!((cw.core, cw.weight), (Partition::empty(), 2));
    }

    #[test]
    fn oracle_examples() {
        let cw = rim_hook_oracle(&part("2,2"), 2).unwrap();
        assert_eq!((cw.core, cw.weight), (Partition::empty(), 2));
        let cw = rim_hook_oracle(&part("3,2,1"), 2).unwrap();
        assert_eq!((cw.core, cw.weight), (part("3,2,1"), 0));
        let cw = rim_hook_oracle(&part("2"), 2).unwrap();
        assert_eq!((cw.core, cw.weight), (Partition::empty(), 1));
        let cw = rim_hook_oracle(&part("7,1,1,1"), 3).unwrap();
        assert_eq!((cw.core, cw.weight), (part("1"), 3));
        let big = Partition::new(vec![1; 21]).unwrap();
        assert!(matches!(
            rim_hook_oracle(&big, 2),
            Err(Error::ScaleExceeded { .. })
        ));
    }

    #[test]
    fn rim_hooks_of_small_shapes() {
        // (3,1) has one cell of hook length 2, so a single 2-hook.
        assert_eq!(rim_hook_removals(&part("3,1"), 2), vec![part("1,1")]);
        let mut got = rim_hook_removals(&part("3,2,1"), 3);
        got.sort();
        assert_eq!(got, vec![part("1,1,1"), part("3")]);
        // (2,2) has a single 3-hook, leaving (1).
        assert_eq!(rim_hook_removals(&part("2,2"), 3), vec![part("1")]);
    }

    #[test]
    fn abacus_matches_oracle_up_to_ten() {
        for n in 0..=10 {
            for mu in Partition::all(n) {
                for p in [2, 3, 5] {
                    assert_eq!(
                        p_core_weight(&mu, p),
                        rim_hook_oracle(&mu, p).unwrap(),
                        "mu = {mu}, p = {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn specht_dimension_examples() {
        assert_eq!(specht_dimension(&part("5,1,1")), BigUint::from(15u32));
        assert_eq!(specht_dimension(&part("6")), BigUint::from(1u32));
        assert_eq!(specht_dimension(&part("2,2")), BigUint::from(2u32));
        assert_eq!(specht_dimension(&Partition::empty()), BigUint::from(1u32));
        // Sum of squares of dimensions is n!.
        for n in 1..=8 {
            let total: BigUint = Partition::all(n)
                .iter()
                .map(|mu| specht_dimension(mu).pow(2))
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn conjugate_is_involution() {
        for mu in Partition::all(9) {
            assert_eq!(mu.conjugate().conjugate(), mu);
            assert_eq!(mu.conjugate().size(), mu.size());
        }
    }
}
