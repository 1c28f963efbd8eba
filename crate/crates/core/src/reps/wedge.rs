//! Hook Specht modules as exterior powers of the natural module.
//!
//! `S^{(a,1^b)}` is realized as `Λ^b V`, where `V` is the sum-zero submodule
//! of the natural permutation module with basis `v_j = x_j - x_1`,
//! `j = 2..n`. The wedge `v_{c_1} ∧ ... ∧ v_{c_b}` corresponds to the standard
//! polytabloid whose first column is `{1, c_1, ..., c_b}`.

use std::collections::HashMap;

use super::{e_generators, Backend, Limits, RepE};
use crate::error::{guard, Error, Result};
use crate::matrix::{det_mod_p, SparseMat};
use crate::partition::{specht_dimension, Partition};
use crate::perm::Perm;
use crate::tableau::enumerate_standard;

/// Largest degree accepted by the exterior power model.
pub const WEDGE_MAX_N: usize = 10;

/// Matrix of `g` on `V` in the basis `v_2, ..., v_n`, as signed entries.
fn natural_action(g: &Perm, n: usize) -> Vec<Vec<i64>> {
    // g v_j = v_{g(j)} - v_{g(1)}, with v_1 = 0
    let mut m = vec![vec![0i64; n - 1]; n - 1];
    let g1 = g.apply(1) as usize;
    for j in 2..=n {
        let gj = g.apply(j as u8) as usize;
        if gj != 1 {
            m[gj - 2][j - 2] += 1;
        }
        if g1 != 1 {
            m[g1 - 2][j - 2] -= 1;
        }
    }
    m
}

/// `S^{(a,1^b)}` restricted to `E_s` via `Λ^b V`, on the basis ordered like
/// the standard tableaux.
pub fn specht_rep_wedge(mu: &Partition, p: u32, s: usize, limits: &Limits) -> Result<RepE> {
    if !mu.is_hook() {
        return Err(Error::NotAHook(mu.to_string()));
    }
    let n = mu.size();
    if n > WEDGE_MAX_N {
        return Err(Error::ScaleExceeded {
            what: "degree for the exterior power model",
            value: n as u128,
            limit: WEDGE_MAX_N as u128,
        });
    }
    guard(
        "Specht module dimension",
        num_traits::ToPrimitive::to_u128(&specht_dimension(mu)).unwrap_or(u128::MAX),
        limits.max_specht_dim,
    )?;
    let b = mu.len() - 1;
    let subsets: Vec<Vec<usize>> = enumerate_standard(mu, limits.max_specht_dim)?
        .iter()
        .map(|t| t.column(0)[1..].iter().map(|&x| x as usize).collect())
        .collect();
    let index: HashMap<&[usize], usize> = subsets
        .iter()
        .enumerate()
        .map(|(k, c)| (c.as_slice(), k))
        .collect();
    let d = subsets.len();
    let pi = p as i64;
    let mut gens = Vec::with_capacity(s);
    for g in e_generators(n, p as usize, s)? {
        let m = natural_action(&g, n);
        let cols = subsets
            .iter()
            .map(|cols_j| {
                subsets
                    .iter()
                    .filter_map(|rows_k| {
                        let minor: Vec<Vec<u32>> = rows_k
                            .iter()
                            .map(|&r| {
                                cols_j
                                    .iter()
                                    .map(|&c| m[r - 2][c - 2].rem_euclid(pi) as u32)
                                    .collect()
                            })
                            .collect();
                        let det = if b == 0 { 1 % p } else { det_mod_p(&minor, p) };
                        (det != 0).then(|| (index[rows_k.as_slice()] as u32, det as i64))
                    })
                    .collect()
            })
            .collect();
        gens.push(SparseMat::from_columns(p, d, cols)?);
    }
    RepE::new(p, d, gens, format!("S^({mu}) {}", Backend::Wedge))
}
