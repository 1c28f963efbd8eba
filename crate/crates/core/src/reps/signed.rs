//! Signed permutation modules `M(α|β)`.

use std::collections::HashMap;

use num_traits::ToPrimitive;

use super::{e_generators, Limits, RepE};
use crate::error::{guard, Result};
use crate::matrix::SparseMat;
use crate::partition::Partition;
use crate::perm::sequence_sign;
use crate::tableau::{enumerate_tabloids, tabloid_count};

/// `M(α|β)`, induced from `trivial ⊠ sign` on `S_α × S_β`, restricted to `E_s`.
///
/// The basis is the set of tabloids with rows `α_1, ..., α_m, β_1, ..., β_k`,
/// each row stored ascending. A permutation sends a basis tabloid to its image
/// tabloid times the product, over the `β`-rows, of the signs of re-sorting the
/// image rows.
pub fn signed_perm_rep(
    alpha: &Partition,
    beta: &Partition,
    p: u32,
    s: usize,
    limits: &Limits,
) -> Result<RepE> {
    let shape: Vec<usize> = alpha.parts().iter().chain(beta.parts()).copied().collect();
    let n = alpha.size() + beta.size();
    guard(
        "signed permutation module dimension",
        tabloid_count(&shape).to_u128().unwrap_or(u128::MAX),
        limits.max_tabloids,
    )?;
    let gens_perm = e_generators(n, p as usize, s)?;
    let tabloids = enumerate_tabloids(&shape, limits.max_tabloids)?;
    let index: HashMap<&[Vec<u8>], u32> = tabloids
        .iter()
        .enumerate()
        .map(|(k, t)| (t.rows(), k as u32))
        .collect();
    let m = alpha.len();
    let mut gens = Vec::with_capacity(s);
    for g in &gens_perm {
        let cols = tabloids
            .iter()
            .map(|t| {
                let mut sign = 1i8;
                let image: Vec<Vec<u8>> = t
                    .rows()
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        let mut r: Vec<u8> = row.iter().map(|&x| g.apply(x)).collect();
                        if i >= m {
                            sign *= sequence_sign(&r);
                        }
                        r.sort_unstable();
                        r
                    })
                    .collect();
                vec![(index[image.as_slice()], sign as i64)]
            })
            .collect();
        gens.push(SparseMat::from_columns(p, tabloids.len(), cols)?);
    }
    let label = format!(
        "M(({})|({}))",
        alpha
            .parts()
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(","),
        beta.parts()
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    );
    RepE::new(p, tabloids.len(), gens, label)
}
