//! Exact generic ranks on tiny modules: the entries of `(U - I)^k` are
//! polynomials in the coordinates `x_1, ..., x_s`, and the generic rank is the
//! size of the largest minor that is a nonzero polynomial over `GF(p)`.

use std::collections::BTreeMap;

use specht_core::reps::{
    generic_jordan_type, signed_perm_rep, specht_rep, Backend, Limits, RepE, SamplingConfig,
};
use specht_core::Partition;

/// Polynomial over `GF(p)` keyed by exponent vectors.
type Poly = BTreeMap<Vec<u8>, u32>;

fn add_into(acc: &mut Poly, other: &Poly, scale: u32, p: u32) {
    for (mono, &c) in other {
        let e = acc.entry(mono.clone()).or_insert(0);
        *e = (*e + c * scale) % p;
        if *e == 0 {
            acc.remove(mono);
        }
    }
}

fn mul(a: &Poly, b: &Poly, p: u32) -> Poly {
    let mut out = Poly::new();
    for (ma, &ca) in a {
        for (mb, &cb) in b {
            let mono: Vec<u8> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            let e = out.entry(mono.clone()).or_insert(0);
            *e = (*e + ca * cb) % p;
            if *e == 0 {
                out.remove(&mono);
            }
        }
    }
    out
}

/// `N = Σ x_i (G_i - I)` with polynomial entries.
fn nilpotent(rep: &RepE) -> Vec<Vec<Poly>> {
    let (p, n, s) = (rep.p(), rep.dim(), rep.s());
    let mut out = vec![vec![Poly::new(); n]; n];
    for (i, g) in rep.gens().iter().enumerate() {
        let dense = g.to_dense_u32();
        let mut mono = vec![0u8; s];
        mono[i] = 1;
        for r in 0..n {
            for c in 0..n {
                let v = (dense[r][c] + if r == c { p - 1 } else { 0 }) % p;
                if v != 0 {
                    add_into(&mut out[r][c], &Poly::from([(mono.clone(), v)]), 1, p);
                }
            }
        }
    }
    out
}

fn mat_mul(a: &[Vec<Poly>], b: &[Vec<Poly>], p: u32) -> Vec<Vec<Poly>> {
    let n = a.len();
    let mut out = vec![vec![Poly::new(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_empty() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_empty() {
                    let prod = mul(&a[i][k], &b[k][j], p);
                    add_into(&mut out[i][j], &prod, 1, p);
                }
            }
        }
    }
    out
}

/// Determinant by cofactor expansion along the first row.
fn det(m: &[Vec<Poly>], rows: &[usize], cols: &[usize], p: u32) -> Poly {
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let mut out = Poly::new();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[rows[0]][c];
        if entry.is_empty() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det(m, &rows[1..], &rest, p);
        let term = mul(entry, &minor, p);
        add_into(&mut out, &term, if k % 2 == 0 { 1 } else { p - 1 }, p);
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn generic_rank(m: &[Vec<Poly>], p: u32) -> usize {
    let n = m.len();
    let mut rank = 0;
    for r in 1..=n {
        let sets = subsets(n, r);
        let found = sets
            .iter()
            .any(|rows| sets.iter().any(|cols| !det(m, rows, cols, p).is_empty()));
        if !found {
            break;
        }
        rank = r;
    }
    rank
}

fn exact_ranks(rep: &RepE) -> Vec<usize> {
    let p = rep.p();
    let n = nilpotent(rep);
    let mut power: Vec<Vec<Poly>> = (0..rep.dim())
        .map(|i| {
            (0..rep.dim())
                .map(|j| {
                    if i == j {
                        Poly::from([(vec![0u8; rep.s()], 1)])
                    } else {
                        Poly::new()
                    }
                })
                .collect()
        })
        .collect();
    let mut ranks = vec![rep.dim()];
    for _ in 0..p {
        power = mat_mul(&power, &n, p);
        ranks.push(generic_rank(&power, p));
    }
    ranks
}

fn sampled_ranks(rep: &RepE) -> Vec<usize> {
    let cfg = SamplingConfig {
        seed: 99,
        ..SamplingConfig::default()
    };
    let report = generic_jordan_type(rep, &cfg).unwrap();
    report.jordan.rank_sequence().ranks().to_vec()
}

#[test]
fn specht_modules_match_exact_generic_ranks() {
    let limits = Limits::default();
    let mut checked = 0;
    for p in [2u32, 3] {
        for n in 2..=5 {
            for mu in Partition::all(n) {
                for s in 1..=(n / p as usize).min(2) {
                    let rep = specht_rep(&mu, p, s, Backend::Straightened, &limits).unwrap();
                    assert_eq!(sampled_ranks(&rep), exact_ranks(&rep), "({mu}) p={p} s={s}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 20);
}

#[test]
fn small_signed_modules_match_exact_generic_ranks() {
    let limits = Limits::default();
    for p in [2u32, 3] {
        for (alpha, beta) in [
            ("2", "1"),
            ("1", "2"),
            ("1,1", "1"),
            ("2", "2"),
            ("3", "1"),
            ("-", "2,1,1"),
        ] {
            let alpha: Partition = alpha.parse().unwrap();
            let beta: Partition = beta.parse().unwrap();
            let n = alpha.size() + beta.size();
            for s in 1..=(n / p as usize).min(2) {
                let rep = signed_perm_rep(&alpha, &beta, p, s, &limits).unwrap();
                assert_eq!(
                    sampled_ranks(&rep),
                    exact_ranks(&rep),
                    "({alpha})|({beta}) p={p} s={s}"
                );
            }
        }
    }
}
