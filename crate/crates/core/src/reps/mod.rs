//! Representations of elementary abelian `p`-subgroups `E_s` of the symmetric
//! group, and generic Jordan types of the units `u_α` acting on them.

mod signed;
mod specht;
mod wedge;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{check_prime, guard, Error, Result};
use crate::field::{FieldCtx, FieldElement, DEFAULT_EXT};
use crate::jordan::{dominance_max, jordan_from_ranks, JordanType, RankSequence};
use crate::matrix::{MatrixF, SparseMat};
use crate::perm::Perm;

pub use signed::signed_perm_rep;
pub use specht::{
    ambient_rank_sequence_full, specht_rep, specht_rep_ambient, specht_rep_straightened,
};
pub use wedge::{specht_rep_wedge, WEDGE_MAX_N};

/// Default number of random points used to estimate a generic Jordan type.
pub const DEFAULT_SAMPLES: usize = 20;

/// Largest dimension for which [`u_alpha_matrix`] builds a dense matrix.
pub const MAX_DENSE_DIM: usize = 2_000;

/// The generators `g_i = ((i-1)p+1, ..., ip)` of `E_s` inside `S_n`.
pub fn e_generators(n: usize, p: usize, s: usize) -> Result<Vec<Perm>> {
    check_prime(p)?;
    if s * p > n {
        return Err(Error::Hypothesis(format!(
            "E_{s} needs {} points but n = {n}",
            s * p
        )));
    }
    if n > u8::MAX as usize {
        return Err(Error::InvalidArgument(format!("degree {n} is too large")));
    }
    (0..s)
        .map(|i| {
            let cycle: Vec<u8> = ((i * p + 1)..=((i + 1) * p)).map(|x| x as u8).collect();
            Perm::from_cycles(n, &[&cycle])
        })
        .collect()
}

/// How the Specht module is realized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Inside the tabloid permutation module, spanned by standard polytabloids.
    Ambient,
    /// On the standard basis, with actions computed by Garnir straightening.
    #[serde(rename = "straight", alias = "straightened")]
    Straightened,
    /// Hooks only: the exterior power of the natural module.
    Wedge,
    /// `Ambient` when the tabloid space is within limits, else `Straightened`.
    Auto,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Ambient => "ambient",
            Backend::Straightened => "straight",
            Backend::Wedge => "wedge",
            Backend::Auto => "auto",
        })
    }
}

impl std::str::FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Backend> {
        match s {
            "ambient" => Ok(Backend::Ambient),
            "straight" | "straightened" => Ok(Backend::Straightened),
            "wedge" => Ok(Backend::Wedge),
            "auto" => Ok(Backend::Auto),
            _ => Err(Error::Parse(format!("unknown backend {s:?}"))),
        }
    }
}

/// Scale guards for module construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Limits {
    /// Largest tabloid space (ambient backend) or signed permutation module.
    pub max_tabloids: u128,
    /// Largest Specht module dimension.
    pub max_specht_dim: u128,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            max_tabloids: 50_000,
            max_specht_dim: 500,
        }
    }
}

/// The E_s-action inside a tabloid space, kept alongside the induced action
/// so ranks can be measured on the polytabloid span directly.
#[derive(Debug)]
pub(crate) struct AmbientEmbedding {
    /// `perms[i][x]` is the index of `g_i` applied to tabloid `x`.
    pub(crate) perms: Vec<Vec<u32>>,
    /// Columns of the basis matrix `B`, entries mod `p`.
    pub(crate) basis: Vec<Vec<(u32, u32)>>,
    /// Tabloid indices whose rows of `B` form an invertible square matrix.
    pub(crate) pivots: Vec<u32>,
    pub(crate) tabloids: usize,
}

#[derive(Clone, Debug)]
struct BlockClass {
    gens: Vec<SparseMat>,
    multiplicity: usize,
}

/// A representation of `E_s` over `GF(p)` by commuting matrices of order `p`.
#[derive(Clone)]
pub struct RepE {
    p: u32,
    s: usize,
    dim: usize,
    gens: Vec<SparseMat>,
    label: String,
    ambient: Option<Arc<AmbientEmbedding>>,
    blocks: OnceLock<Vec<BlockClass>>,
}

impl fmt::Debug for RepE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RepE")
            .field("label", &self.label)
            .field("p", &self.p)
            .field("s", &self.s)
            .field("dim", &self.dim)
            .finish()
    }
}

impl RepE {
    /// Validates `G^p = I` and pairwise commutation.
    pub fn new(p: u32, dim: usize, gens: Vec<SparseMat>, label: impl Into<String>) -> Result<RepE> {
        check_prime(p as usize)?;
        for (i, g) in gens.iter().enumerate() {
            if g.p() != p || g.dim() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "generator {} is {}x{} over GF({}), expected {dim}x{dim} over GF({p})",
                    i + 1,
                    g.dim(),
                    g.dim(),
                    g.p()
                )));
            }
            if !g.pow(p as usize).is_identity() {
                return Err(Error::InvalidArgument(format!(
                    "generator {} does not have order dividing {p}",
                    i + 1
                )));
            }
        }
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if gens[i].compose(&gens[j]) != gens[j].compose(&gens[i]) {
                    return Err(Error::InvalidArgument(format!(
                        "generators {} and {} do not commute",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(RepE {
            p,
            s: gens.len(),
            dim,
            gens,
            label: label.into(),
            ambient: None,
            blocks: OnceLock::new(),
        })
    }

    pub(crate) fn with_ambient(mut self, ambient: AmbientEmbedding) -> RepE {
        self.ambient = Some(Arc::new(ambient));
        self
    }

    /// Forgets the ambient tabloid space, so ranks are taken from the
    /// induced matrices alone.
    pub fn without_ambient(&self) -> RepE {
        RepE {
            ambient: None,
            ..self.clone()
        }
    }

    pub fn has_ambient(&self) -> bool {
        self.ambient.is_some()
    }

    /// Dimension of the ambient tabloid space, if any.
    pub fn ambient_dim(&self) -> Option<usize> {
        self.ambient.as_ref().map(|a| a.tabloids)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[SparseMat] {
        &self.gens
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The trivial one-dimensional module.
    pub fn trivial(p: u32, s: usize) -> Result<RepE> {
        RepE::new(p, 1, vec![SparseMat::identity(p, 1); s], "trivial")
    }

    /// The zero module.
    pub fn zero(p: u32, s: usize) -> Result<RepE> {
        RepE::new(p, 0, vec![SparseMat::identity(p, 0); s], "zero")
    }

    /// The group algebra `GF(p)E_s`.
    pub fn regular(p: u32, s: usize) -> Result<RepE> {
        let pu = p as usize;
        let dim = pu.pow(s as u32);
        let gens = (0..s)
            .map(|i| {
                let stride = pu.pow(i as u32);
                let cols = (0..dim)
                    .map(|x| {
                        let digit = (x / stride) % pu;
                        let y = if digit + 1 == pu {
                            x - digit * stride
                        } else {
                            x + stride
                        };
                        vec![(y as u32, 1)]
                    })
                    .collect();
                SparseMat::from_columns(p, dim, cols)
            })
            .collect::<Result<Vec<_>>>()?;
        RepE::new(p, dim, gens, format!("regular E_{s}"))
    }

    /// Connected components of the generator action, grouped into classes
    /// of identical blocks after canonical renumbering.
    fn block_classes(&self) -> &[BlockClass] {
        self.blocks.get_or_init(|| {
            let mut parent: Vec<usize> = (0..self.dim).collect();
            fn find(parent: &mut [usize], mut x: usize) -> usize {
                while parent[x] != x {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                x
            }
            for g in &self.gens {
                for j in 0..self.dim {
                    for &(i, _) in g.column(j) {
                        let (a, b) = (find(&mut parent, i as usize), find(&mut parent, j));
                        if a != b {
                            parent[a.max(b)] = a.min(b);
                        }
                    }
                }
            }
            let mut members: HashMap<usize, Vec<usize>> = HashMap::new();
            let mut roots = Vec::new();
            for x in 0..self.dim {
                let r = find(&mut parent, x);
                members
                    .entry(r)
                    .or_insert_with(|| {
                        roots.push(r);
                        Vec::new()
                    })
                    .push(x);
            }
            let mut local = vec![0u32; self.dim];
            let mut classes: Vec<BlockClass> = Vec::new();
            let mut index: HashMap<Vec<SparseMat>, usize> = HashMap::new();
            for r in roots {
                let order = self.canonical_order(&members[&r]);
                for (k, &x) in order.iter().enumerate() {
                    local[x] = k as u32;
                }
                let gens: Vec<SparseMat> = self
                    .gens
                    .iter()
                    .map(|g| g.restrict(&order, &local))
                    .collect();
                match index.get(&gens) {
                    Some(&c) => classes[c].multiplicity += 1,
                    None => {
                        index.insert(gens.clone(), classes.len());
                        classes.push(BlockClass {
                            gens,
                            multiplicity: 1,
                        });
                    }
                }
            }
            classes
        })
    }

    /// Breadth-first order from the smallest member, following generators
    /// in order; identical blocks of monomial actions get identical orders.
    fn canonical_order(&self, members: &[usize]) -> Vec<usize> {
        let mut seen: HashMap<usize, ()> = HashMap::with_capacity(members.len());
        let mut order = Vec::with_capacity(members.len());
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(members[0]);
        seen.insert(members[0], ());
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for g in &self.gens {
                for &(i, _) in g.column(x) {
                    let i = i as usize;
                    if seen.insert(i, ()).is_none() {
                        queue.push_back(i);
                    }
                }
            }
        }
        // Entries reachable only through rows (non-monomial blocks).
        if order.len() < members.len() {
            for &x in members {
                if seen.insert(x, ()).is_none() {
                    order.push(x);
                }
            }
        }
        order
    }
}

/// Block-diagonal sum of two representations of the same group.
pub fn direct_sum(a: &RepE, b: &RepE) -> Result<RepE> {
    if a.p != b.p || a.s != b.s {
        return Err(Error::DimensionMismatch(format!(
            "cannot add a module for E_{} at p = {} to one for E_{} at p = {}",
            a.s, a.p, b.s, b.p
        )));
    }
    let gens = a
        .gens
        .iter()
        .zip(&b.gens)
        .map(|(x, y)| x.direct_sum(y))
        .collect();
    RepE::new(
        a.p,
        a.dim + b.dim,
        gens,
        format!("{} + {}", a.label, b.label),
    )
}

/// A point `α` of `GF(p^e)^s`.
#[derive(Clone)]
pub struct PointOnE {
    ctx: Arc<FieldCtx>,
    coords: Vec<FieldElement>,
    seed: Option<u64>,
}

impl fmt::Debug for PointOnE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.ctx.e();
        let coords: Vec<&[u8]> = self.coords.iter().map(|c| c.coefficients(e)).collect();
        f.debug_struct("PointOnE")
            .field("field", &format_args!("GF({}^{})", self.ctx.p(), e))
            .field("coords", &coords)
            .field("seed", &self.seed)
            .finish()
    }
}

impl PointOnE {
    /// Rejects the zero point, except for `s = 0` where the only point is empty.
    pub fn new(ctx: &Arc<FieldCtx>, coords: Vec<FieldElement>) -> Result<PointOnE> {
        if !coords.is_empty() && coords.iter().all(FieldElement::is_zero) {
            return Err(Error::InvalidArgument(
                "the zero point defines no unit".into(),
            ));
        }
        Ok(PointOnE {
            ctx: Arc::clone(ctx),
            coords,
            seed: None,
        })
    }

    /// A point with every coordinate uniformly random and nonzero.
    pub fn random(ctx: &Arc<FieldCtx>, s: usize, seed: u64) -> PointOnE {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        PointOnE {
            ctx: Arc::clone(ctx),
            coords: (0..s).map(|_| ctx.random_nonzero(&mut rng)).collect(),
            seed: Some(seed),
        }
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// `λ · α` for a nonzero scalar `λ`.
    pub fn scaled(&self, lambda: &FieldElement) -> Result<PointOnE> {
        if lambda.is_zero() {
            return Err(Error::InvalidArgument("scaling by zero".into()));
        }
        Ok(PointOnE {
            ctx: Arc::clone(&self.ctx),
            coords: self
                .coords
                .iter()
                .map(|c| self.ctx.mul(c, lambda))
                .collect(),
            seed: None,
        })
    }
}

fn check_point(rep: &RepE, pt: &PointOnE) -> Result<()> {
    if pt.coords.len() != rep.s {
        return Err(Error::DimensionMismatch(format!(
            "point has {} coordinates, module is for E_{}",
            pt.coords.len(),
            rep.s
        )));
    }
    if pt.ctx.p() != rep.p {
        return Err(Error::DimensionMismatch(format!(
            "point over characteristic {}, module over {}",
            pt.ctx.p(),
            rep.p
        )));
    }
    Ok(())
}

/// `N = U - I = Σ α_i (G_i - I)` as a dense matrix.
fn nilpotent_part(
    ctx: &Arc<FieldCtx>,
    gens: &[SparseMat],
    coords: &[FieldElement],
    dim: usize,
) -> MatrixF {
    let mut n = MatrixF::zeros(ctx, dim, dim);
    let total = coords.iter().fold(ctx.zero(), |acc, a| ctx.add(&acc, a));
    for (g, a) in gens.iter().zip(coords) {
        for j in 0..dim {
            for &(i, v) in g.column(j) {
                let (i, j2) = (i as usize, j);
                let cur = n.get(i, j2);
                n.set(i, j2, ctx.add(&cur, &ctx.scale(a, v)));
            }
        }
    }
    for j in 0..dim {
        let cur = n.get(j, j);
        n.set(j, j, ctx.sub(&cur, &total));
    }
    n
}

/// `U = I + Σ α_i (G_i - I)` over the point's field.
pub fn u_alpha_matrix(rep: &RepE, pt: &PointOnE) -> Result<MatrixF> {
    check_point(rep, pt)?;
    guard(
        "dense matrix dimension",
        rep.dim as u128,
        MAX_DENSE_DIM as u128,
    )?;
    let n = nilpotent_part(&pt.ctx, &rep.gens, &pt.coords, rep.dim);
    n.add(&MatrixF::identity(&pt.ctx, rep.dim))
}

fn dense_ranks(n: &MatrixF, p: usize) -> Vec<usize> {
    let mut ranks = Vec::with_capacity(p + 1);
    ranks.push(n.rows());
    let mut power = n.clone();
    for k in 1..=p {
        let r = power.rank();
        ranks.push(r);
        if r == 0 {
            ranks.resize(p + 1, 0);
            break;
        }
        if k < p {
            power = power.mul(n).expect("square");
        }
    }
    ranks
}

/// Ranks of `(U - I)^k`, `k = 0..p`, on the module.
///
/// Modules built inside a tabloid space are measured there, as the ranks of
/// `(U - I)^k B` for the standard polytabloid basis matrix `B`.
pub fn rank_sequence_at_point(rep: &RepE, pt: &PointOnE) -> Result<RankSequence> {
    check_point(rep, pt)?;
    let p = rep.p as usize;
    if let Some(amb) = &rep.ambient {
        return RankSequence::new(specht::ambient_ranks(amb, rep.p, pt));
    }
    let mut total = vec![0usize; p + 1];
    for class in rep.block_classes() {
        let dim = class.gens.first().map_or(0, SparseMat::dim);
        let dim = if class.gens.is_empty() {
            // No generators: every component is a single coordinate.
            1
        } else {
            dim
        };
        let ranks = if rep.s == 0 {
            let mut r = vec![0; p + 1];
            r[0] = dim;
            r
        } else {
            let n = nilpotent_part(&pt.ctx, &class.gens, &pt.coords, dim);
            dense_ranks(&n, p)
        };
        for (t, r) in total.iter_mut().zip(ranks) {
            *t += r * class.multiplicity;
        }
    }
    RankSequence::new(total)
}

/// Jordan type of `U - I` at the point.
pub fn jordan_at_point(rep: &RepE, pt: &PointOnE) -> Result<JordanType> {
    Ok(jordan_from_ranks(&rank_sequence_at_point(rep, pt)?))
}

/// Parameters for estimating a generic Jordan type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct SamplingConfig {
    pub samples: usize,
    /// Extension degree `e` of the sampling field `GF(p^e)`.
    pub ext: usize,
    pub seed: u64,
}

impl Default for SamplingConfig {
    fn default() -> SamplingConfig {
        SamplingConfig {
            samples: DEFAULT_SAMPLES,
            ext: DEFAULT_EXT,
            seed: 0,
        }
    }
}

/// Seed of the `index`-th sample point, derived from the campaign seed.
pub fn sample_seed(seed: u64, index: usize) -> u64 {
    // splitmix64 finalizer over the pair
    let mut z = seed ^ (index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Sampled generic Jordan type of a module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericTypeReport {
    pub jordan: JordanType,
    pub stable: JordanType,
    pub samples: usize,
    pub attained_by_single_sample: bool,
    pub seeds: Vec<u64>,
    pub rank_sequences: Vec<RankSequence>,
}

/// Estimates the generic Jordan type from random points whose coordinates
/// are all nonzero, taking the pointwise maximum of the rank sequences.
pub fn generic_jordan_type(rep: &RepE, cfg: &SamplingConfig) -> Result<GenericTypeReport> {
    if cfg.samples == 0 {
        return Err(Error::InvalidArgument(
            "at least one sample is required".into(),
        ));
    }
    let ctx = FieldCtx::new(rep.p, cfg.ext)?;
    let seeds: Vec<u64> = (0..cfg.samples).map(|i| sample_seed(cfg.seed, i)).collect();
    let rank_sequences = seeds
        .iter()
        .map(|&seed| rank_sequence_at_point(rep, &PointOnE::random(&ctx, rep.s, seed)))
        .collect::<Result<Vec<_>>>()?;
    let (max, attained) = dominance_max(&rank_sequences)?;
    let jordan = jordan_from_ranks(&max);
    Ok(GenericTypeReport {
        stable: jordan.stable(),
        jordan,
        samples: cfg.samples,
        attained_by_single_sample: attained,
        seeds,
        rank_sequences,
    })
}

/// Whether the sampled generic Jordan type consists of blocks of size `p` only.
pub fn is_generically_free(rep: &RepE, cfg: &SamplingConfig) -> Result<bool> {
    Ok(generic_jordan_type(rep, cfg)?.jordan.is_free())
}
