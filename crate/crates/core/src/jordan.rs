//! Rank sequences of `p`-nilpotent operators and the Jordan types they determine.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ranks `r_0, ..., r_p` of `N^0, ..., N^p` for an operator `N` with `N^p = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct RankSequence {
    ranks: Vec<usize>,
}

impl RankSequence {
    /// Validates `r_p = 0`, monotonicity and convexity. The sequence length is `p + 1`.
    pub fn new(ranks: Vec<usize>) -> Result<RankSequence> {
        if ranks.len() < 2 {
            return Err(Error::InvalidRankSequence(format!(
                "{ranks:?}: need at least r_0 and r_p"
            )));
        }
        if *ranks.last().unwrap() != 0 {
            return Err(Error::InvalidRankSequence(format!(
                "{ranks:?}: the operator is not nilpotent of the given order"
            )));
        }
        if ranks.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidRankSequence(format!(
                "{ranks:?}: not decreasing"
            )));
        }
        if ranks.windows(3).any(|w| w[0] - w[1] < w[1] - w[2]) {
            return Err(Error::InvalidRankSequence(format!("{ranks:?}: not convex")));
        }
        Ok(RankSequence { ranks })
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn dim(&self) -> usize {
        self.ranks[0]
    }

    /// Nilpotency bound `p`.
    pub fn p(&self) -> usize {
        self.ranks.len() - 1
    }
}

impl TryFrom<Vec<usize>> for RankSequence {
    type Error = Error;

    fn try_from(ranks: Vec<usize>) -> Result<RankSequence> {
        RankSequence::new(ranks)
    }
}

impl From<RankSequence> for Vec<usize> {
    fn from(rs: RankSequence) -> Vec<usize> {
        rs.ranks
    }
}

/// Block multiset `(1^{n_1}, ..., p^{n_p})`; `counts[j - 1] = n_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JordanType {
    p: usize,
    counts: Vec<usize>,
}

impl JordanType {
    pub fn new(p: usize, counts: Vec<usize>) -> Result<JordanType> {
        if counts.len() != p {
            return Err(Error::InvalidArgument(format!(
                "Jordan type for p = {p} needs {p} block counts, got {}",
                counts.len()
            )));
        }
        Ok(JordanType { p, counts })
    }

    pub fn empty(p: usize) -> JordanType {
        JordanType {
            p,
            counts: vec![0; p],
        }
    }

    /// `n` blocks of size `size`.
    pub fn uniform(p: usize, size: usize, n: usize) -> JordanType {
        let mut t = JordanType::empty(p);
        if n > 0 {
            t.counts[size - 1] = n;
        }
        t
    }

    pub fn from_blocks(p: usize, blocks: &[usize]) -> Result<JordanType> {
        let mut t = JordanType::empty(p);
        for &b in blocks {
            if b == 0 || b > p {
                return Err(Error::InvalidArgument(format!(
                    "block size {b} outside 1..={p}"
                )));
            }
            t.counts[b - 1] += 1;
        }
        Ok(t)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Number of blocks of size `j`.
    pub fn count(&self, j: usize) -> usize {
        self.counts.get(j.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> usize {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &n)| (i + 1) * n)
            .sum()
    }

    /// Block sizes in decreasing order.
    pub fn blocks(&self) -> Vec<usize> {
        (1..=self.p)
            .rev()
            .flat_map(|j| std::iter::repeat_n(j, self.counts[j - 1]))
            .collect()
    }

    /// Drops the projective blocks of size `p`.
    pub fn stable(&self) -> JordanType {
        let mut t = self.clone();
        if let Some(last) = t.counts.last_mut() {
            *last = 0;
        }
        t
    }

    pub fn is_free(&self) -> bool {
        self.counts[..self.p - 1].iter().all(|&n| n == 0)
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&n| n == 0)
    }

    /// Multiset union.
    pub fn union(&self, other: &JordanType) -> Result<JordanType> {
        if self.p != other.p {
            return Err(Error::DimensionMismatch(format!(
                "Jordan types for p = {} and p = {}",
                self.p, other.p
            )));
        }
        Ok(JordanType {
            p: self.p,
            counts: self
                .counts
                .iter()
                .zip(&other.counts)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Ranks of `N^0, ..., N^p` for a nilpotent operator of this type.
    pub fn rank_sequence(&self) -> RankSequence {
        let ranks = (0..=self.p)
            .map(|i| {
                self.counts
                    .iter()
                    .enumerate()
                    .map(|(j, &n)| (j + 1).saturating_sub(i) * n)
                    .sum()
            })
            .collect();
        RankSequence { ranks }
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .counts
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .map(|(j, n)| format!("{}^{}", j + 1, n))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl JordanType {
    /// Parses the `(1^2, 3^1)` notation; `()` is the empty type.
    pub fn parse(p: usize, s: &str) -> Result<JordanType> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("{s:?}: expected parentheses")))?;
        let mut t = JordanType::empty(p);
        for item in inner.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (size, mult) = item.split_once('^').unwrap_or((item, "1"));
            let size = usize::from_str(size.trim())
                .map_err(|_| Error::Parse(format!("{item:?}: bad block size")))?;
            let mult = usize::from_str(mult.trim())
                .map_err(|_| Error::Parse(format!("{item:?}: bad multiplicity")))?;
            if size == 0 || size > p {
                return Err(Error::Parse(format!(
                    "{item:?}: block size outside 1..={p}"
                )));
            }
            t.counts[size - 1] += mult;
        }
        Ok(t)
    }
}

/// `n_j = r_{j-1} - 2 r_j + r_{j+1}` with `r_{p+1} = 0`.
pub fn jordan_from_ranks(rs: &RankSequence) -> JordanType {
    let r = |i: usize| rs.ranks.get(i).copied().unwrap_or(0);
    let p = rs.p();
    let counts = (1..=p).map(|j| r(j - 1) + r(j + 1) - 2 * r(j)).collect();
    JordanType { p, counts }
}

/// Pointwise maximum of rank sequences, and whether one input attains it everywhere.
///
/// Fails on an empty list, on mixed dimensions or lengths, and if the maximum
/// is not itself a valid rank sequence.
pub fn dominance_max(seqs: &[RankSequence]) -> Result<(RankSequence, bool)> {
    let first = seqs
        .first()
        .ok_or_else(|| Error::InvalidArgument("no rank sequences".into()))?;
    if seqs
        .iter()
        .any(|s| s.ranks.len() != first.ranks.len() || s.dim() != first.dim())
    {
        return Err(Error::DimensionMismatch(
            "rank sequences of different dimensions".into(),
        ));
    }
    let ranks: Vec<usize> = (0..first.ranks.len())
        .map(|i| seqs.iter().map(|s| s.ranks[i]).max().unwrap())
        .collect();
    let attained = seqs.iter().any(|s| s.ranks == ranks);
    Ok((RankSequence::new(ranks)?, attained))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use crate::matrix::MatrixF;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn formula_examples() {
        let t = jordan_from_ranks(&RankSequence::new(vec![3, 1, 0]).unwrap());
        assert_eq!(t.counts(), &[1, 1]);
        assert_eq!(t.to_string(), "(1^1, 2^1)");
        for p in [2usize, 3, 5] {
            let k = 4;
            let ranks = (0..=p).map(|i| (p - i) * k).collect();
            let t = jordan_from_ranks(&RankSequence::new(ranks).unwrap());
            assert_eq!(t, JordanType::uniform(p, p, k));
            assert!(t.is_free());
            assert!(t.stable().is_empty());
        }
        let t = jordan_from_ranks(&RankSequence::new(vec![5, 2, 0, 0]).unwrap());
        assert_eq!(t.counts(), &[1, 2, 0]);
        assert_eq!(t.dim(), 5);
        assert_eq!(
            JordanType::from_blocks(3, &[1, 2, 2])
                .unwrap()
                .rank_sequence()
                .ranks(),
            &[5, 2, 0, 0]
        );
    }

    #[test]
    fn invalid_sequences() {
        assert!(RankSequence::new(vec![3, 1, 1]).is_err());
        assert!(RankSequence::new(vec![3, 4, 0]).is_err());
        assert!(RankSequence::new(vec![4, 1, 1, 0]).is_err());
        assert!(RankSequence::new(vec![4, 2, 0, 0]).is_ok());
        assert!(RankSequence::new(vec![4, 3, 1, 0]).is_err());
        assert!(RankSequence::new(vec![0]).is_err());
    }

    #[test]
    fn dominance_examples() {
        let a = RankSequence::new(vec![3, 1, 0]).unwrap();
        assert_eq!(
            dominance_max(std::slice::from_ref(&a)).unwrap(),
            (a.clone(), true)
        );
        assert_eq!(
            dominance_max(&[a.clone(), a.clone()]).unwrap(),
            (a.clone(), true)
        );
        let b = RankSequence::new(vec![4, 2, 0]).unwrap();
        let c = RankSequence::new(vec![4, 1, 0]).unwrap();
        assert_eq!(
            dominance_max(&[b.clone(), c.clone()]).unwrap(),
            (b.clone(), true)
        );
        let x = RankSequence::new(vec![6, 3, 1, 0]).unwrap();
        let y = RankSequence::new(vec![6, 4, 2, 0]).unwrap();
        assert!(dominance_max(&[x, y]).unwrap().1);
        let u = RankSequence::new(vec![6, 4, 2, 0]).unwrap();
        assert!(dominance_max(&[u, a]).is_err());
        assert!(dominance_max(&[]).is_err());
    }

    #[test]
    fn display_and_parse() {
        let t = JordanType::from_blocks(3, &[2, 1, 1]).unwrap();
        assert_eq!(t.to_string(), "(1^2, 2^1)");
        assert_eq!(JordanType::parse(3, "(1^2, 2^1)").unwrap(), t);
        assert_eq!(JordanType::parse(3, "()").unwrap(), JordanType::empty(3));
        assert_eq!(JordanType::empty(2).to_string(), "()");
        assert!(JordanType::parse(2, "(3^1)").is_err());
    }

    /// Block-diagonal nilpotent matrix with the given blocks.
    fn nilpotent(ctx: &std::sync::Arc<FieldCtx>, blocks: &[usize]) -> MatrixF {
        let d: usize = blocks.iter().sum();
        let mut m = MatrixF::zeros(ctx, d, d);
        let mut off = 0;
        for &b in blocks {
            for k in 0..b.saturating_sub(1) {
                m.set(off + k, off + k + 1, ctx.one());
            }
            off += b;
        }
        m
    }

    fn ranks_of(m: &MatrixF, p: usize) -> RankSequence {
        let mut pow = MatrixF::identity(m.ctx(), m.rows());
        let mut ranks = vec![];
        for _ in 0..=p {
            ranks.push(pow.rank());
            pow = pow.mul(m).unwrap();
        }
        RankSequence::new(ranks).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn conjugated_nilpotent_recovers_type(
            p in prop::sample::select(vec![2usize, 3, 5]),
            raw in prop::collection::vec(1usize..=5, 0..12),
            seed in any::<u64>(),
        ) {
            let mut blocks: Vec<usize> = raw.into_iter().map(|b| (b - 1) % p + 1).collect();
            while blocks.iter().sum::<usize>() > 30 {
                blocks.pop();
            }
            let expected = JordanType::from_blocks(p, &blocks).unwrap();
            let ctx = FieldCtx::new(p as u32, 1).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = nilpotent(&ctx, &blocks);
            let d = n.rows();
            let (q, qinv) = loop {
                let q = MatrixF::from_fn(&ctx, d, d, |_, _| ctx.random(&mut rng));
                if q.rank() == d {
                    let qinv = invert(&q);
                    break (q, qinv);
                }
            };
            let conj = q.mul(&n).unwrap().mul(&qinv).unwrap();
            let rs = ranks_of(&conj, p);
            prop_assert_eq!(&rs, &expected.rank_sequence());
            prop_assert_eq!(jordan_from_ranks(&rs), expected);
        }
    }

    /// Gauss–Jordan inverse over the prime field, test only.
    fn invert(m: &MatrixF) -> MatrixF {
        let ctx = m.ctx().clone();
        let d = m.rows();
        let mut a = MatrixF::from_fn(&ctx, d, 2 * d, |i, j| {
            if j < d {
                m.get(i, j)
            } else if j - d == i {
                ctx.one()
            } else {
                ctx.zero()
            }
        });
        for col in 0..d {
            let piv = (col..d).find(|&r| !a.get(r, col).is_zero()).unwrap();
            for j in 0..2 * d {
                let (x, y) = (a.get(piv, j), a.get(col, j));
                a.set(piv, j, y);
                a.set(col, j, x);
            }
            let inv = ctx.inv(&a.get(col, col)).unwrap();
            for j in 0..2 * d {
                a.set(col, j, ctx.mul(&a.get(col, j), &inv));
            }
            for r in 0..d {
                if r == col {
                    continue;
                }
                let f = a.get(r, col);
                for j in 0..2 * d {
                    let v = ctx.sub(&a.get(r, j), &ctx.mul(&f, &a.get(col, j)));
                    a.set(r, j, v);
                }
            }
        }
        MatrixF::from_fn(&ctx, d, d, |i, j| a.get(i, j + d))
    }
}
