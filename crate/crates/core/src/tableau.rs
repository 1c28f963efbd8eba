//! Tableaux, tabloids, polytabloids, and Garnir straightening.
//!
//! Tableaux serialize row by row: entries separated by commas, rows by
//! semicolons (`1,3;2`). A tabloid is kept in canonical form with every
//! row sorted ascending, and tabloids of one shape are ordered
//! lexicographically by their rows.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Deref;
use std::rc::Rc;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{guard, Error, Result};
use crate::partition::{factorial, specht_dimension, Partition};
use crate::perm::{sequence_sign, Perm};

/// Default cap on enumeration sizes (tableaux, tabloids, column-group orders).
pub const DEFAULT_ENUMERATION_LIMIT: u128 = 4_000_000;

/// Largest `n` for which tabloids have a packed [`TabloidKey`].
pub const MAX_KEYED_N: usize = 16;

/// Row index of each of `1..=n`, four bits per entry.
pub type TabloidKey = u64;

/// An assignment of `1..=n` to the cells of a diagram, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Vec<usize>,
    entries: Vec<u8>,
}

impl Tableau {
    pub fn new(shape: Vec<usize>, entries: Vec<u8>) -> Result<Tableau> {
        let n: usize = shape.iter().sum();
        if entries.len() != n {
            return Err(Error::InvalidArgument(format!(
                "shape {shape:?} has {n} cells but {} entries were given",
                entries.len()
            )));
        }
        if n > u8::MAX as usize {
            return Err(Error::InvalidArgument("tableau too large".into()));
        }
        let mut seen = vec![false; n + 1];
        for &x in &entries {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidArgument(format!(
                    "entries {entries:?} are not a bijection onto 1..={n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Tableau { shape, entries })
    }

    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Tableau> {
        let shape = rows.iter().map(Vec::len).collect();
        Tableau::new(shape, rows.concat())
    }

    /// The row-reading tableau `1, 2, ..., n` of the given shape.
    pub fn initial(shape: &[usize]) -> Tableau {
        let n: usize = shape.iter().sum();
        Tableau {
            shape: shape.to_vec(),
            entries: (1..=n as u8).collect(),
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    fn offset(&self, i: usize) -> usize {
        self.shape[..i].iter().sum()
    }

    pub fn row(&self, i: usize) -> &[u8] {
        let start = self.offset(i);
        &self.entries[start..start + self.shape[i]]
    }

    pub fn rows(&self) -> Vec<&[u8]> {
        (0..self.shape.len()).map(|i| self.row(i)).collect()
    }

    /// Entries of column `j`, top to bottom.
    pub fn column(&self, j: usize) -> Vec<u8> {
        (0..self.shape.len())
            .filter(|&i| self.shape[i] > j)
            .map(|i| self.row(i)[j])
            .collect()
    }

    pub fn num_columns(&self) -> usize {
        self.shape.iter().copied().max().unwrap_or(0)
    }

    pub fn act(&self, g: &Perm) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(|&x| g.apply(x)).collect(),
        }
    }

    fn rows_increase(&self) -> bool {
        self.rows()
            .iter()
            .all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    fn columns_increase(&self) -> bool {
        (0..self.num_columns()).all(|j| self.column(j).windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_standard(&self) -> bool {
        self.rows_increase() && self.columns_increase()
    }

    /// Sorts every column ascending, returning the sign of the column
    /// permutation used. For a partition shape `e_t = sign · e_sorted`.
    pub fn column_sorted(&self) -> (Tableau, i8) {
        let mut out = self.clone();
        let mut sign = 1i8;
        for j in 0..self.num_columns() {
            let cells: Vec<usize> = (0..self.shape.len())
                .filter(|&i| self.shape[i] > j)
                .map(|i| self.offset(i) + j)
                .collect();
            let mut col: Vec<u8> = cells.iter().map(|&c| self.entries[c]).collect();
            sign *= sequence_sign(&col);
            col.sort_unstable();
            for (&c, x) in cells.iter().zip(col) {
                out.entries[c] = x;
            }
        }
        (out, sign)
    }

    pub fn tabloid(&self) -> Tabloid {
        Tabloid::from_rows_unchecked(self.rows().iter().map(|r| r.to_vec()).collect())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tableau> {
        let rows = s
            .trim()
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<u8>()
                            .map_err(|e| Error::Parse(format!("bad entry {x:?}: {e}")))
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::from_rows(rows)
    }
}

/// A tableau of partition shape whose rows and columns increase.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau(Tableau);

impl StandardTableau {
    pub fn into_inner(self) -> Tableau {
        self.0
    }
}

impl TryFrom<Tableau> for StandardTableau {
    type Error = Error;

    fn try_from(t: Tableau) -> Result<StandardTableau> {
        if t.is_standard() && t.shape.windows(2).all(|w| w[0] >= w[1]) {
            Ok(StandardTableau(t))
        } else {
            Err(Error::InvalidArgument(format!("{t} is not standard")))
        }
    }
}

impl Deref for StandardTableau {
    type Target = Tableau;

    fn deref(&self) -> &Tableau {
        &self.0
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A row-equivalence class of tableaux.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    rows: Vec<Vec<u8>>,
}

impl Tabloid {
    /// Builds a tabloid from arbitrary row contents; rows are sorted.
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Tabloid> {
        Tableau::from_rows(rows.clone())?;
        Ok(Tabloid::from_rows_unchecked(rows))
    }

    fn from_rows_unchecked(rows: Vec<Vec<u8>>) -> Tabloid {
        Tabloid { rows }.canonicalize()
    }

    pub fn canonicalize(mut self) -> Tabloid {
        for r in &mut self.rows {
            r.sort_unstable();
        }
        self
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn act(&self, g: &Perm) -> Tabloid {
        act_tabloid(g, self)
    }

    /// Packed row-membership key; requires `n <= 16` and at most 16 rows.
    pub fn key(&self) -> TabloidKey {
        let mut key = 0u64;
        for (i, row) in self.rows.iter().enumerate() {
            for &x in row {
                key |= (i as u64) << (4 * (x as u64 - 1));
            }
        }
        key
    }

    pub fn from_key(key: TabloidKey, shape: &[usize]) -> Tabloid {
        let n: usize = shape.iter().sum();
        let mut rows = vec![Vec::new(); shape.len()];
        for x in 1..=n as u8 {
            rows[key_row(key, x)].push(x);
        }
        Tabloid { rows }
    }
}

#[inline]
pub(crate) fn key_row(key: TabloidKey, x: u8) -> usize {
    ((key >> (4 * (x as u64 - 1))) & 0xf) as usize
}

#[inline]
pub(crate) fn key_with_row(key: TabloidKey, x: u8, row: usize) -> TabloidKey {
    let shift = 4 * (x as u64 - 1);
    (key & !(0xf << shift)) | ((row as u64) << shift)
}

/// Image of a packed tabloid key under `g`.
pub(crate) fn act_key(g: &Perm, key: TabloidKey, n: usize) -> TabloidKey {
    let mut out = 0u64;
    for x in 1..=n as u8 {
        out |= (key_row(key, x) as u64) << (4 * (g.apply(x) as u64 - 1));
    }
    out
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let xs: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", xs.join(","))
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

pub fn act_tabloid(g: &Perm, x: &Tabloid) -> Tabloid {
    Tabloid::from_rows_unchecked(
        x.rows
            .iter()
            .map(|r| r.iter().map(|&y| g.apply(y)).collect())
            .collect(),
    )
}

/// Number of tabloids of a composition: the multinomial `n! / prod(shape_i!)`.
pub fn tabloid_count(shape: &[usize]) -> BigUint {
    let n: usize = shape.iter().sum();
    shape
        .iter()
        .fold(factorial(n), |acc, &k| acc / factorial(k))
}

/// Order of the column stabilizer of a tableau of shape `shape`.
pub fn column_group_order(shape: &[usize]) -> BigUint {
    let cols = shape.iter().copied().max().unwrap_or(0);
    (0..cols)
        .map(|j| factorial(shape.iter().filter(|&&x| x > j).count()))
        .fold(BigUint::from(1u32), |acc, f| acc * f)
}

fn as_u128(x: &BigUint) -> u128 {
    x.to_u128().unwrap_or(u128::MAX)
}

/// All standard tableaux of shape `mu`, in lexicographic order of their
/// row-major entries.
pub fn enumerate_standard(mu: &Partition, limit: u128) -> Result<Vec<StandardTableau>> {
    guard(
        "number of standard tableaux",
        as_u128(&specht_dimension(mu)),
        limit,
    )?;
    let shape = mu.parts().to_vec();
    let n = mu.size();
    let mut filled = vec![0usize; shape.len()];
    let mut rows: Vec<Vec<u8>> = shape.iter().map(|&k| Vec::with_capacity(k)).collect();
    let mut out = Vec::new();

    fn go(
        next: u8,
        n: usize,
        shape: &[usize],
        filled: &mut Vec<usize>,
        rows: &mut Vec<Vec<u8>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if next as usize > n {
            out.push(StandardTableau(Tableau {
                shape: shape.to_vec(),
                entries: rows.concat(),
            }));
            return;
        }
        for i in 0..shape.len() {
            if filled[i] < shape[i] && (i == 0 || filled[i - 1] > filled[i]) {
                filled[i] += 1;
                rows[i].push(next);
                go(next + 1, n, shape, filled, rows, out);
                rows[i].pop();
                filled[i] -= 1;
            }
        }
    }

    go(1, n, &shape, &mut filled, &mut rows, &mut out);
    out.sort();
    Ok(out)
}

/// All tabloids of a composition, lexicographically ordered.
pub fn enumerate_tabloids(shape: &[usize], limit: u128) -> Result<Vec<Tabloid>> {
    guard("number of tabloids", as_u128(&tabloid_count(shape)), limit)?;
    let n: usize = shape.iter().sum();
    let mut out = Vec::new();

    fn choose(pool: &[u8], k: usize, start: usize, chosen: &mut Vec<u8>, f: &mut dyn FnMut(&[u8])) {
        if chosen.len() == k {
            f(chosen);
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - chosen.len() {
                break;
            }
            chosen.push(pool[i]);
            choose(pool, k, i + 1, chosen, f);
            chosen.pop();
        }
    }

    fn go(pool: Vec<u8>, shape: &[usize], prefix: &mut Vec<Vec<u8>>, out: &mut Vec<Tabloid>) {
        let Some((&k, rest)) = shape.split_first() else {
            out.push(Tabloid {
                rows: prefix.clone(),
            });
            return;
        };
        let mut subsets = Vec::new();
        choose(&pool, k, 0, &mut Vec::new(), &mut |c| {
            subsets.push(c.to_vec())
        });
        for row in subsets {
            let remaining: Vec<u8> = pool.iter().copied().filter(|x| !row.contains(x)).collect();
            prefix.push(row);
            go(remaining, rest, prefix, out);
            prefix.pop();
        }
    }

    go((1..=n as u8).collect(), shape, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Sparse integer combination of tabloids; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolytabloidVector {
    terms: BTreeMap<Tabloid, i64>,
}

impl PolytabloidVector {
    pub fn terms(&self) -> &BTreeMap<Tabloid, i64> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, x: &Tabloid) -> i64 {
        self.terms.get(x).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, x: Tabloid, c: i64) {
        let entry = self.terms.entry(x);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                if c != 0 {
                    v.insert(c);
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &PolytabloidVector, c: i64) {
        for (x, &y) in &other.terms {
            self.add_term(x.clone(), c * y);
        }
    }

    /// Coefficients reduced into `[0, p)`, dropping those divisible by `p`.
    pub fn reduce_mod(&self, p: u32) -> PolytabloidVector {
        PolytabloidVector {
            terms: self
                .terms
                .iter()
                .map(|(x, &c)| (x.clone(), c.rem_euclid(p as i64)))
                .filter(|&(_, c)| c != 0)
                .collect(),
        }
    }
}

/// Calls `f(key, sign)` for every `σ` in the column stabilizer of `t`, where
/// `key` is the packed tabloid `{σt}` and `sign = sgn(σ)`.
pub(crate) fn for_each_polytabloid_term(t: &Tableau, mut f: impl FnMut(TabloidKey, i8)) {
    let mut key = 0u64;
    for (i, row) in t.rows().iter().enumerate() {
        for &x in row.iter() {
            key = key_with_row(key, x, i);
        }
    }
    let columns: Vec<(Vec<usize>, Vec<u8>)> = (0..t.num_columns())
        .map(|j| {
            let rows: Vec<usize> = (0..t.shape.len()).filter(|&i| t.shape[i] > j).collect();
            (rows, t.column(j))
        })
        .filter(|(rows, _)| rows.len() > 1)
        .collect();

    fn rec(
        cols: &[(Vec<usize>, Vec<u8>)],
        key: TabloidKey,
        sign: i8,
        f: &mut dyn FnMut(TabloidKey, i8),
    ) {
        let Some(((rows, entries), rest)) = cols.split_first() else {
            f(key, sign);
            return;
        };
        // Heap's algorithm: each step is a single transposition.
        let k = entries.len();
        let mut a = entries.clone();
        let mut c = vec![0usize; k];
        let place = |a: &[u8], key: TabloidKey| {
            a.iter()
                .zip(rows)
                .fold(key, |acc, (&x, &r)| key_with_row(acc, x, r))
        };
        let mut s = sign;
        rec(rest, place(&a, key), s, f);
        let mut i = 0;
        while i < k {
            if c[i] < i {
                if i % 2 == 0 {
                    a.swap(0, i);
                } else {
                    a.swap(c[i], i);
                }
                s = -s;
                rec(rest, place(&a, key), s, f);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
    }

    rec(&columns, key, 1, &mut f);
}

/// The polytabloid `e_t = Σ_{σ ∈ C_t} sgn(σ) {σt}`.
pub fn polytabloid(t: &Tableau, limit: u128) -> Result<PolytabloidVector> {
    guard(
        "column stabilizer order",
        as_u128(&column_group_order(&t.shape)),
        limit,
    )?;
    if t.n() > MAX_KEYED_N || t.shape.len() > 16 {
        let mut out = PolytabloidVector::default();
        polytabloid_slow(t, &mut out);
        return Ok(out);
    }
    let mut out = PolytabloidVector::default();
    for_each_polytabloid_term(t, |key, sign| {
        out.add_term(Tabloid::from_key(key, &t.shape), sign as i64)
    });
    Ok(out)
}

fn polytabloid_slow(t: &Tableau, out: &mut PolytabloidVector) {
    // Enumerate column permutations directly on the tableau.
    let ncols = t.num_columns();
    let mut stack = vec![(0usize, t.clone(), 1i64)];
    while let Some((j, cur, sign)) = stack.pop() {
        if j == ncols {
            out.add_term(cur.tabloid(), sign);
            continue;
        }
        let col = cur.column(j);
        for perm in all_permutations(col.len()) {
            let s = sequence_sign(&perm.iter().map(|&x| x as u8).collect::<Vec<_>>()) as i64;
            let mut next = cur.clone();
            let mut r = 0;
            for i in 0..cur.shape.len() {
                if cur.shape[i] > j {
                    let off = cur.offset(i) + j;
                    next.entries[off] = col[perm[r]];
                    r += 1;
                }
            }
            stack.push((j + 1, next, sign * s));
        }
    }
}

fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(k - 1) {
        for pos in 0..k {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

type Combination = Rc<Vec<(Vec<u8>, u32)>>;

/// Expresses polytabloids of one partition shape in the standard basis by
/// recursive Garnir relations, reducing coefficients mod `p`.
///
/// Results are memoized per column-sorted tableau, so one straightener
/// should be reused for every polytabloid of the same shape.
pub struct Straightener {
    shape: Vec<usize>,
    p: u32,
    memo: HashMap<Vec<u8>, Combination>,
}

impl Straightener {
    pub fn new(mu: &Partition, p: u32) -> Straightener {
        Straightener {
            shape: mu.parts().to_vec(),
            p,
            memo: HashMap::new(),
        }
    }

    /// Coefficients `c_s` (nonzero, in `[0, p)`) with `e_t = Σ c_s e_s` over
    /// standard `s`, keyed by the row-major entries of `s`.
    pub fn straighten(&mut self, t: &Tableau) -> Result<Vec<(Vec<u8>, u32)>> {
        if t.shape != self.shape {
            return Err(Error::DimensionMismatch(format!(
                "tableau of shape {:?} given to a straightener for {:?}",
                t.shape, self.shape
            )));
        }
        let (sorted, sign) = t.column_sorted();
        let comb = self.straighten_sorted(sorted);
        Ok(comb
            .iter()
            .map(|(s, c)| (s.clone(), self.signed(*c, sign)))
            .collect())
    }

    fn signed(&self, c: u32, sign: i8) -> u32 {
        if sign < 0 && c != 0 {
            self.p - c
        } else {
            c
        }
    }

    fn straighten_sorted(&mut self, t: Tableau) -> Combination {
        if let Some(c) = self.memo.get(&t.entries) {
            return Rc::clone(c);
        }
        let result = match first_row_descent(&t) {
            None => Rc::new(vec![(t.entries.clone(), 1 % self.p)]),
            Some((i, j)) => Rc::new(self.garnir_expand(&t, i, j)),
        };
        self.memo.insert(t.entries.clone(), Rc::clone(&result));
        result
    }

    /// Applies the Garnir relation at a row descent `t[i][j] > t[i][j+1]`:
    /// with `A` the entries of column `j` from row `i` down and `B` those of
    /// column `j+1` from the top through row `i`,
    /// `e_t = -Σ sgn(π) e_{πt}` over the non-identity coset representatives
    /// `π` of `S_A × S_B` in `S_{A∪B}`.
    fn garnir_expand(&mut self, t: &Tableau, i: usize, j: usize) -> Vec<(Vec<u8>, u32)> {
        let p = self.p;
        let col_j_len = self.shape.iter().filter(|&&x| x > j).count();
        let offsets: Vec<usize> = (0..self.shape.len()).map(|r| t.offset(r)).collect();
        let a_cells: Vec<usize> = (i..col_j_len).map(|r| offsets[r] + j).collect();
        let b_cells: Vec<usize> = (0..=i).map(|r| offsets[r] + j + 1).collect();
        let cells: Vec<usize> = a_cells.iter().chain(&b_cells).copied().collect();
        let old: Vec<u8> = cells.iter().map(|&c| t.entries[c]).collect();
        let old_sign = sequence_sign(&old);
        let mut pool = old.clone();
        pool.sort_unstable();
        let mut a_set = old[..a_cells.len()].to_vec();
        a_set.sort_unstable();

        let mut acc: HashMap<Vec<u8>, u32> = HashMap::new();
        for mask in subsets_of_size(pool.len(), a_cells.len()) {
            let x: Vec<u8> = mask.iter().map(|&k| pool[k]).collect();
            if x == a_set {
                continue;
            }
            let y: Vec<u8> = pool.iter().copied().filter(|v| !x.contains(v)).collect();
            let new: Vec<u8> = x.iter().chain(&y).copied().collect();
            let pi_sign = old_sign * sequence_sign(&new);
            let mut next = t.clone();
            for (&c, &v) in cells.iter().zip(&new) {
                next.entries[c] = v;
            }
            let (sorted, col_sign) = next.column_sorted();
            // e_t = -Σ sgn(π) e_{πt} and e_{πt} = col_sign · e_sorted.
            let negate = -(pi_sign as i32) * (col_sign as i32) < 0;
            let sub = self.straighten_sorted(sorted);
            for (s, c) in sub.iter() {
                let c = if negate && *c != 0 { p - c } else { *c };
                let e = acc.entry(s.clone()).or_insert(0);
                *e = (*e + c) % p;
            }
        }
        let mut out: Vec<(Vec<u8>, u32)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        out.sort();
        out
    }
}

/// Leftmost column `j`, then topmost row `i`, with `t[i][j] > t[i][j+1]`.
fn first_row_descent(t: &Tableau) -> Option<(usize, usize)> {
    for j in 0..t.num_columns().saturating_sub(1) {
        for i in 0..t.shape.len() {
            if t.shape[i] > j + 1 {
                let row = t.row(i);
                if row[j] > row[j + 1] {
                    return Some((i, j));
                }
            }
        }
    }
    None
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Expresses `e_t` in the standard basis mod `p` by Garnir straightening.
pub fn garnir_straighten(t: &Tableau, p: u32) -> Result<BTreeMap<StandardTableau, u32>> {
    let mu = Partition::new(t.shape.clone())?;
    let mut st = Straightener::new(&mu, p);
    Ok(st
        .straighten(t)?
        .into_iter()
        .map(|(entries, c)| {
            (
                StandardTableau(Tableau {
                    shape: t.shape.clone(),
                    entries,
                }),
                c,
            )
        })
        .collect())
}
