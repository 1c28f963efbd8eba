//! Specht modules restricted to `E_s`.

use std::collections::HashMap;

use num_traits::ToPrimitive;

use super::{e_generators, AmbientEmbedding, Backend, Limits, PointOnE, RepE};
use crate::error::{guard, Error, Result};
use crate::field::FieldElement;
use crate::jordan::RankSequence;
use crate::matrix::{inverse_mod_p, row_reduce_mod_p, MatrixF, SparseMat};
use crate::partition::{specht_dimension, Partition};
use crate::tableau::{
    act_key, enumerate_standard, for_each_polytabloid_term, tabloid_count, Straightener, Tableau,
    TabloidKey, MAX_KEYED_N,
};

fn big_to_u128(x: &num_bigint::BigUint) -> u128 {
    x.to_u128().unwrap_or(u128::MAX)
}

fn standard_basis(mu: &Partition, limits: &Limits) -> Result<Vec<Tableau>> {
    guard(
        "Specht module dimension",
        big_to_u128(&specht_dimension(mu)),
        limits.max_specht_dim,
    )?;
    Ok(enumerate_standard(mu, limits.max_specht_dim)?
        .into_iter()
        .map(|t| t.into_inner())
        .collect())
}

fn label(mu: &Partition, backend: Backend) -> String {
    format!("S^({mu}) {backend}")
}

/// `S^μ` restricted to `E_s` with the chosen backend.
pub fn specht_rep(
    mu: &Partition,
    p: u32,
    s: usize,
    backend: Backend,
    limits: &Limits,
) -> Result<RepE> {
    match backend {
        Backend::Ambient => specht_rep_ambient(mu, p, s, limits),
        Backend::Straightened => specht_rep_straightened(mu, p, s, limits),
        Backend::Wedge => super::specht_rep_wedge(mu, p, s, limits),
        Backend::Auto => {
            let tabloids = big_to_u128(&tabloid_count(mu.parts()));
            if tabloids <= limits.max_tabloids && mu.size() <= MAX_KEYED_N {
                specht_rep_ambient(mu, p, s, limits)
            } else {
                specht_rep_straightened(mu, p, s, limits)
            }
        }
    }
}

/// Generator matrices on the standard polytabloid basis, obtained by
/// expanding each `e_{g_i t}` with Garnir relations.
pub fn specht_rep_straightened(mu: &Partition, p: u32, s: usize, limits: &Limits) -> Result<RepE> {
    let basis = standard_basis(mu, limits)?;
    let gens_perm = e_generators(mu.size(), p as usize, s)?;
    let index: HashMap<&[u8], u32> = basis
        .iter()
        .enumerate()
        .map(|(k, t)| (t.entries(), k as u32))
        .collect();
    let mut straightener = Straightener::new(mu, p);
    let mut gens = Vec::with_capacity(s);
    for g in &gens_perm {
        let mut cols = Vec::with_capacity(basis.len());
        for t in &basis {
            let comb = straightener.straighten(&t.act(g))?;
            cols.push(
                comb.into_iter()
                    .map(|(entries, c)| (index[entries.as_slice()], c as i64))
                    .collect(),
            );
        }
        gens.push(SparseMat::from_columns(p, basis.len(), cols)?);
    }
    RepE::new(p, basis.len(), gens, label(mu, Backend::Straightened))
}

/// The Specht module as the span of standard polytabloids inside the tabloid
/// permutation module.
///
/// The induced action on the standard basis is solved from an invertible set
/// of rows of the basis matrix `B` and checked against every row of
/// `G_i B = B G_i^S`. Rank sequences are measured on `(U - I)^k B` inside
/// the tabloid space.
pub fn specht_rep_ambient(mu: &Partition, p: u32, s: usize, limits: &Limits) -> Result<RepE> {
    let n = mu.size();
    if n > MAX_KEYED_N {
        return Err(Error::ScaleExceeded {
            what: "degree for the ambient backend",
            value: n as u128,
            limit: MAX_KEYED_N as u128,
        });
    }
    guard(
        "number of tabloids",
        big_to_u128(&tabloid_count(mu.parts())),
        limits.max_tabloids,
    )?;
    let basis = standard_basis(mu, limits)?;
    let d = basis.len();
    let gens_perm = e_generators(n, p as usize, s)?;

    // Basis matrix B on the tabloids met by standard polytabloids.
    let mut index: HashMap<TabloidKey, u32> = HashMap::new();
    let mut keys: Vec<TabloidKey> = Vec::new();
    let mut columns: Vec<Vec<(u32, u32)>> = Vec::with_capacity(d);
    for t in &basis {
        let mut col = Vec::new();
        for_each_polytabloid_term(t, |key, sign| {
            let idx = *index.entry(key).or_insert_with(|| {
                keys.push(key);
                (keys.len() - 1) as u32
            });
            col.push((idx, if sign > 0 { 1 % p } else { p - 1 }));
        });
        col.sort_unstable();
        columns.push(col);
    }
    let tabloids = keys.len();
    guard(
        "dense pivot search size",
        (tabloids as u128) * (d as u128),
        50_000_000,
    )?;

    // Tabloid permutations; the support of B is E_s-stable.
    let perms = gens_perm
        .iter()
        .map(|g| {
            keys.iter()
                .map(|&k| {
                    index.get(&act_key(g, k, n)).copied().ok_or_else(|| {
                        Error::InvalidArgument(format!(
                            "support of S^({mu}) is not stable under {g}"
                        ))
                    })
                })
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    // Pivot rows of B: independent columns of B^T.
    let mut bt: Vec<Vec<u32>> = vec![vec![0; tabloids]; d];
    for (k, col) in columns.iter().enumerate() {
        for &(x, v) in col {
            bt[k][x as usize] = v;
        }
    }
    let mut reduced = bt.clone();
    let pivots: Vec<u32> = row_reduce_mod_p(&mut reduced, p)
        .into_iter()
        .map(|x| x as u32)
        .collect();
    if pivots.len() != d {
        return Err(Error::InvalidArgument(format!(
            "standard polytabloids of ({mu}) are dependent mod {p}"
        )));
    }
    let bp: Vec<Vec<u32>> = pivots
        .iter()
        .map(|&x| (0..d).map(|k| bt[k][x as usize]).collect())
        .collect();
    let bp_inv = inverse_mod_p(&bp, p).expect("pivot rows are independent");
    let mut pivot_pos = vec![usize::MAX; tabloids];
    for (r, &x) in pivots.iter().enumerate() {
        pivot_pos[x as usize] = r;
    }

    let pu = p as u64;
    let mut gens = Vec::with_capacity(s);
    for (g, perm) in gens_perm.iter().zip(&perms) {
        // (G B)_P, then G^S = B_P^{-1} (G B)_P
        let mut gb_p = vec![vec![0u32; d]; d];
        let mut gb_cols: Vec<Vec<(u32, u32)>> = Vec::with_capacity(d);
        for (k, col) in columns.iter().enumerate() {
            let mut image: Vec<(u32, u32)> =
                col.iter().map(|&(x, v)| (perm[x as usize], v)).collect();
            image.sort_unstable();
            for &(y, v) in &image {
                let r = pivot_pos[y as usize];
                if r != usize::MAX {
                    gb_p[r][k] = v;
                }
            }
            gb_cols.push(image);
        }
        let induced: Vec<Vec<u32>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|k| {
                        ((0..d)
                            .map(|r| bp_inv[i][r] as u64 * gb_p[r][k] as u64)
                            .sum::<u64>()
                            % pu) as u32
                    })
                    .collect()
            })
            .collect();
        // Full check G B = B G^S.
        for (k, image) in gb_cols.iter().enumerate() {
            let mut acc: HashMap<u32, u64> = HashMap::new();
            for (j, col) in columns.iter().enumerate() {
                let c = induced[j][k] as u64;
                if c == 0 {
                    continue;
                }
                for &(x, v) in col {
                    *acc.entry(x).or_insert(0) += c * v as u64;
                }
            }
            let mut rhs: Vec<(u32, u32)> = acc
                .into_iter()
                .map(|(x, v)| (x, (v % pu) as u32))
                .filter(|&(_, v)| v != 0)
                .collect();
            rhs.sort_unstable();
            if &rhs != image {
                return Err(Error::InvalidArgument(format!(
                    "span of standard polytabloids of ({mu}) is not stable under {g}"
                )));
            }
        }
        gens.push(SparseMat::from_dense(p, &induced)?);
    }

    let rep = RepE::new(p, d, gens, label(mu, Backend::Ambient))?;
    Ok(rep.with_ambient(AmbientEmbedding {
        perms,
        basis: columns,
        pivots,
        tabloids,
    }))
}

/// `(U - I)^k B` restricted to the pivot rows of `B`, for `k = 0..p`.
///
/// Since the polytabloid span is `U`-stable and `B` has full column rank,
/// `(U - I)^k B = B M_k` and the pivot rows `B_P M_k` have the same rank.
pub(crate) fn ambient_ranks(amb: &AmbientEmbedding, p: u32, pt: &PointOnE) -> Vec<usize> {
    let ctx = pt.ctx();
    let p = p as usize;
    let d = amb.basis.len();
    let mut current: Vec<Vec<FieldElement>> = amb
        .basis
        .iter()
        .map(|col| {
            let mut v = vec![ctx.zero(); amb.tabloids];
            for &(x, c) in col {
                v[x as usize] = ctx.from_int(c as i64);
            }
            v
        })
        .collect();
    let mut ranks = vec![d];
    for _ in 1..=p {
        current = current
            .iter()
            .map(|v| apply_nilpotent(amb, pt, v))
            .collect();
        let m = MatrixF::from_fn(ctx, amb.pivots.len(), d, |r, k| {
            current[k][amb.pivots[r] as usize]
        });
        ranks.push(m.rank());
    }
    ranks
}

fn apply_nilpotent(amb: &AmbientEmbedding, pt: &PointOnE, v: &[FieldElement]) -> Vec<FieldElement> {
    let ctx = pt.ctx();
    let total = pt
        .coords()
        .iter()
        .fold(ctx.zero(), |acc, a| ctx.add(&acc, a));
    let mut out: Vec<FieldElement> = v.iter().map(|x| ctx.neg(&ctx.mul(x, &total))).collect();
    for (perm, a) in amb.perms.iter().zip(pt.coords()) {
        for (x, val) in v.iter().enumerate() {
            if val.is_zero() {
                continue;
            }
            let y = perm[x] as usize;
            out[y] = ctx.add(&out[y], &ctx.mul(val, a));
        }
    }
    out
}

/// Ranks of `(U - I)^k B` over the whole tabloid space, with no use of
/// pivot rows. Intended for small cross-checks.
pub fn ambient_rank_sequence_full(rep: &RepE, pt: &PointOnE) -> Result<RankSequence> {
    let amb = rep
        .ambient
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument(format!("{} has no ambient space", rep.label())))?;
    super::check_point(rep, pt)?;
    let ctx = pt.ctx();
    let d = amb.basis.len();
    let mut current: Vec<Vec<FieldElement>> = amb
        .basis
        .iter()
        .map(|col| {
            let mut v = vec![ctx.zero(); amb.tabloids];
            for &(x, c) in col {
                v[x as usize] = ctx.from_int(c as i64);
            }
            v
        })
        .collect();
    let mut ranks = vec![MatrixF::from_fn(ctx, d, amb.tabloids, |k, x| current[k][x]).rank()];
    for _ in 1..=rep.p() {
        current = current
            .iter()
            .map(|v| apply_nilpotent(amb, pt, v))
            .collect();
        ranks.push(MatrixF::from_fn(ctx, d, amb.tabloids, |k, x| current[k][x]).rank());
    }
    RankSequence::new(ranks)
}
