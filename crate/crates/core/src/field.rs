//! Arithmetic in `GF(p^e)`, realized as `GF(p)[x] / (f)` for a fixed monic
//! irreducible `f` of degree `e`.
//!
//! The modulus for each `(p, e)` is the least monic irreducible polynomial
//! when the lower coefficients `c_0 + c_1 p + ... + c_{e-1} p^{e-1}` are read
//! as an integer. Contexts are cached per `(p, e)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rand::Rng;

use crate::error::{check_prime, Error, Result};

/// Largest supported extension degree.
pub const MAX_EXT: usize = 32;

/// Extension degree used for generic-point sampling.
pub const DEFAULT_EXT: usize = 16;

/// Coefficients of a field element in the power basis `1, x, ..., x^{e-1}`.
///
/// Elements carry no reference to their field; arithmetic goes through the
/// owning [`FieldCtx`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FieldElement {
    c: [u8; MAX_EXT],
}

impl FieldElement {
    pub fn coefficients(&self, e: usize) -> &[u8] {
        &self.c[..e]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.c.iter().rposition(|&x| x != 0).map_or(1, |i| i + 1);
        write!(f, "{:?}", &self.c[..last])
    }
}

#[derive(Debug)]
pub struct FieldCtx {
    p: u32,
    e: usize,
    /// Monic modulus, `e + 1` coefficients, lowest degree first.
    modulus: Vec<u32>,
    /// `x^{e+k} mod f` for `k < e - 1`.
    reduction: Vec<[u32; MAX_EXT]>,
    inverses: Vec<u32>,
}

type FieldCache = Mutex<HashMap<(u32, usize), Arc<FieldCtx>>>;

fn field_cache() -> &'static FieldCache {
    static CACHE: OnceLock<FieldCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl FieldCtx {
    /// The field with `p^e` elements, using the canonical modulus.
    pub fn new(p: u32, e: usize) -> Result<Arc<FieldCtx>> {
        check_prime(p as usize)?;
        if e == 0 || e > MAX_EXT {
            return Err(Error::InvalidArgument(format!(
                "extension degree {e} outside 1..={MAX_EXT}"
            )));
        }
        if (p as f64).log2() * e as f64 >= 120.0 {
            return Err(Error::InvalidArgument(format!(
                "GF({p}^{e}) is too large for this implementation"
            )));
        }
        let mut cache = field_cache().lock().expect("field cache poisoned");
        if let Some(ctx) = cache.get(&(p, e)) {
            return Ok(Arc::clone(ctx));
        }
        let modulus = least_irreducible(p, e);
        let ctx = Arc::new(FieldCtx::build(p, modulus));
        cache.insert((p, e), Arc::clone(&ctx));
        Ok(ctx)
    }

    /// A field with an explicit monic modulus (lowest coefficient first),
    /// which must be irreducible over `GF(p)`.
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<FieldCtx> {
        check_prime(p as usize)?;
        let e = modulus.len().saturating_sub(1);
        if e == 0 || e > MAX_EXT || modulus[e] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidArgument(format!(
                "{modulus:?} is not a monic polynomial over GF({p}) of degree 1..={MAX_EXT}"
            )));
        }
        let irreducible = if (p as f64).powi((e / 2) as i32) <= 20_000.0 {
            is_irreducible_bruteforce(p, modulus)
        } else {
            is_irreducible(p, modulus)
        };
        if !irreducible {
            return Err(Error::InvalidArgument(format!(
                "{modulus:?} is reducible over GF({p})"
            )));
        }
        Ok(FieldCtx::build(p, modulus.to_vec()))
    }

    fn build(p: u32, modulus: Vec<u32>) -> FieldCtx {
        let e = modulus.len() - 1;
        let mut reduction = Vec::with_capacity(e.saturating_sub(1));
        // x^e = -(c_0 + ... + c_{e-1} x^{e-1})
        let mut cur = [0u32; MAX_EXT];
        for i in 0..e {
            cur[i] = (p - modulus[i]) % p;
        }
        for _ in 0..e.saturating_sub(1) {
            reduction.push(cur);
            // multiply by x
            let top = cur[e - 1];
            for i in (1..e).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            for i in 0..e {
                cur[i] = (cur[i] + top * ((p - modulus[i]) % p)) % p;
            }
        }
        let inverses = (0..p)
            .map(|x| {
                if x == 0 {
                    0
                } else {
                    (1..p).find(|&y| x * y % p == 1).expect("prime field")
                }
            })
            .collect();
        FieldCtx {
            p,
            e,
            modulus,
            reduction,
            inverses,
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Number of elements, `p^e`.
    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.e as u32)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::default()
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Image of an integer under `Z -> GF(p) -> GF(p^e)`.
    pub fn from_int(&self, x: i64) -> FieldElement {
        let mut out = FieldElement::default();
        out.c[0] = x.rem_euclid(self.p as i64) as u8;
        out
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.e || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidArgument(format!(
                "{coeffs:?} is not an element of GF({}^{})",
                self.p, self.e
            )));
        }
        let mut out = FieldElement::default();
        for (i, &c) in coeffs.iter().enumerate() {
            out.c[i] = c as u8;
        }
        Ok(out)
    }

    /// The class of `x` (requires `e >= 2`).
    pub fn generator(&self) -> FieldElement {
        let mut out = FieldElement::default();
        if self.e >= 2 {
            out.c[1] = 1;
        } else {
            out.c[0] = ((self.p - self.modulus[0]) % self.p) as u8;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let mut out = FieldElement::default();
        for i in 0..self.e {
            let s = a.c[i] as u32 + b.c[i] as u32;
            out.c[i] = if s >= self.p { s - self.p } else { s } as u8;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let mut out = FieldElement::default();
        for i in 0..self.e {
            let x = a.c[i] as u32;
            out.c[i] = if x == 0 { 0 } else { self.p - x } as u8;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let mut out = FieldElement::default();
        for i in 0..self.e {
            let s = a.c[i] as u32 + self.p - b.c[i] as u32;
            out.c[i] = if s >= self.p { s - self.p } else { s } as u8;
        }
        out
    }

    /// Multiplication by an element of the prime field.
    #[inline]
    pub fn scale(&self, a: &FieldElement, k: u32) -> FieldElement {
        let mut out = FieldElement::default();
        let k = k % self.p;
        if k == 0 {
            return out;
        }
        for i in 0..self.e {
            out.c[i] = (a.c[i] as u32 * k % self.p) as u8;
        }
        out
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let e = self.e;
        let p = self.p;
        let mut prod = [0u32; 2 * MAX_EXT];
        for i in 0..e {
            let ai = a.c[i] as u32;
            if ai == 0 {
                continue;
            }
            for j in 0..e {
                prod[i + j] += ai * b.c[j] as u32;
            }
        }
        for k in (e..2 * e - 1).rev() {
            let c = prod[k] % p;
            if c == 0 {
                continue;
            }
            let row = &self.reduction[k - e];
            for i in 0..e {
                prod[i] += c * row[i];
            }
        }
        let mut out = FieldElement::default();
        for i in 0..e {
            out.c[i] = (prod[i] % p) as u8;
        }
        out
    }

    /// `dst += f * src`, elementwise.
    pub fn axpy(&self, dst: &mut [FieldElement], f: &FieldElement, src: &[FieldElement]) {
        if f.is_zero() {
            return;
        }
        for (d, s) in dst.iter_mut().zip(src) {
            if !s.is_zero() {
                *d = self.add(d, &self.mul(f, s));
            }
        }
    }

    pub fn pow(&self, a: &FieldElement, mut k: u128) -> FieldElement {
        let mut base = *a;
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        if self.e == 1 {
            return Ok(self.from_int(self.inverses[a.c[0] as usize] as i64));
        }
        Ok(self.pow(a, self.order() - 2))
    }

    pub fn frobenius(&self, a: &FieldElement) -> FieldElement {
        self.pow(a, self.p as u128)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        let mut out = FieldElement::default();
        for i in 0..self.e {
            out.c[i] = rng.gen_range(0..self.p) as u8;
        }
        out
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        loop {
            let x = self.random(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }
}

// Dense polynomials over GF(p), lowest degree first, no trailing zeros.

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let m = trim(m.to_vec());
    let dm = m.len() - 1;
    let lead_inv = (1..p).find(|&y| m[dm] * y % p == 1).expect("nonzero lead");
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let f = r[r.len() - 1] * lead_inv % p;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - f * c % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_rem(&out, m, p)
}

fn poly_powmod(a: &[u32], mut k: u128, m: &[u32], p: u32) -> Vec<u32> {
    let mut base = poly_rem(a, m, p);
    let mut acc = vec![1u32];
    while k > 0 {
        if k & 1 == 1 {
            acc = poly_mulmod(&acc, &base, m, p);
        }
        base = poly_mulmod(&base, &base, m, p);
        k >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test for a monic polynomial of degree `e >= 1`.
pub fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let f = trim(f.to_vec());
    let e = f.len() - 1;
    if e == 0 {
        return false;
    }
    if e == 1 {
        return true;
    }
    let x = vec![0, 1];
    // x^{p^k} mod f by repeated p-th powers
    let frob = |k: usize| {
        let mut h = poly_rem(&x, &f, p);
        for _ in 0..k {
            h = poly_powmod(&h, p as u128, &f, p);
        }
        h
    };
    let minus_x = |h: Vec<u32>| {
        let mut h = h;
        if h.len() < 2 {
            h.resize(2, 0);
        }
        h[1] = (h[1] + p - 1) % p;
        trim(h)
    };
    if !minus_x(frob(e)).is_empty() {
        return false;
    }
    prime_factors(e).into_iter().all(|q| {
        let g = poly_gcd(&f, &minus_x(frob(e / q)), p);
        g.len() == 1
    })
}

/// Irreducibility by trial division by every monic polynomial of degree
/// `1..=e/2`.
pub fn is_irreducible_bruteforce(p: u32, f: &[u32]) -> bool {
    let f = trim(f.to_vec());
    let e = f.len() - 1;
    if e == 0 {
        return false;
    }
    for deg in 1..=e / 2 {
        let count = (p as u64).pow(deg as u32);
        for idx in 0..count {
            let mut g = Vec::with_capacity(deg + 1);
            let mut v = idx;
            for _ in 0..deg {
                g.push((v % p as u64) as u32);
                v /= p as u64;
            }
            g.push(1);
            if poly_rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn least_irreducible(p: u32, e: usize) -> Vec<u32> {
    let mut idx: u128 = 0;
    loop {
        let mut f = Vec::with_capacity(e + 1);
        let mut v = idx;
        for _ in 0..e {
            f.push((v % p as u128) as u32);
            v /= p as u128;
        }
        f.push(1);
        if is_irreducible(p, &f) {
            return f;
        }
        idx += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_field_examples() {
        let f2 = FieldCtx::new(2, 1).unwrap();
        assert!(f2.add(&f2.one(), &f2.one()).is_zero());

        let f3 = FieldCtx::new(3, 1).unwrap();
        assert_eq!(f3.inv(&f3.from_int(2)).unwrap(), f3.from_int(2));
        assert_eq!(f3.inv(&f3.zero()), Err(Error::ZeroInverse));

        let f4 = FieldCtx::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let x = f4.generator();
        let xx = f4.mul(&x, &x);
        assert_eq!(xx, f4.from_coefficients(&[1, 1]).unwrap());
    }

    #[test]
    fn canonical_moduli_are_least_irreducible() {
        for (p, e) in [(2u32, 3usize), (2, 8), (3, 4), (5, 3), (3, 6)] {
            let ctx = FieldCtx::new(p, e).unwrap();
            let m = ctx.modulus().to_vec();
            assert!(is_irreducible_bruteforce(p, &m));
            // Every smaller candidate is reducible.
            let idx_of = |f: &[u32]| {
                f[..e]
                    .iter()
                    .rev()
                    .fold(0u64, |acc, &c| acc * p as u64 + c as u64)
            };
            for idx in 0..idx_of(&m) {
                let mut f = Vec::new();
                let mut v = idx;
                for _ in 0..e {
                    f.push((v % p as u64) as u32);
                    v /= p as u64;
                }
                f.push(1);
                assert!(!is_irreducible_bruteforce(p, &f), "{f:?}");
            }
        }
        assert_eq!(FieldCtx::new(2, 16).unwrap().modulus().len(), 17);
    }

    #[test]
    fn rabin_agrees_with_trial_division() {
        for p in [2u32, 3, 5] {
            for e in 1..=5usize {
                let count = (p as u64).pow(e as u32);
                for idx in 0..count {
                    let mut f = Vec::new();
                    let mut v = idx;
                    for _ in 0..e {
                        f.push((v % p as u64) as u32);
                        v /= p as u64;
                    }
                    f.push(1);
                    assert_eq!(
                        is_irreducible(p, &f),
                        is_irreducible_bruteforce(p, &f),
                        "{f:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn explicit_moduli_are_validated() {
        assert!(FieldCtx::with_modulus(2, &[1, 1, 1]).is_ok());
        assert!(FieldCtx::with_modulus(2, &[1, 0, 1]).is_err());
        assert!(FieldCtx::with_modulus(4, &[1, 1]).is_err());
    }

    #[test]
    fn multiplicative_group_has_the_right_order() {
        for (p, e) in [(2u32, 16usize), (3, 16), (5, 7)] {
            let ctx = FieldCtx::new(p, e).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..5 {
                let a = ctx.random_nonzero(&mut rng);
                assert_eq!(ctx.pow(&a, ctx.order() - 1), ctx.one());
                assert_eq!(ctx.mul(&a, &ctx.inv(&a).unwrap()), ctx.one());
            }
        }
    }

    fn triple(
        p: u32,
        e: usize,
    ) -> impl Strategy<Value = (Arc<FieldCtx>, FieldElement, FieldElement, FieldElement)> {
        any::<u64>().prop_map(move |seed| {
            let ctx = FieldCtx::new(p, e).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (a, b, c) = (
                ctx.random(&mut rng),
                ctx.random(&mut rng),
                ctx.random(&mut rng),
            );
            (ctx, a, b, c)
        })
    }

    proptest! {
        #[test]
        fn ring_axioms_gf3_16((ctx, a, b, c) in triple(3, 16)) {
            prop_assert_eq!(ctx.mul(&ctx.mul(&a, &b), &c), ctx.mul(&a, &ctx.mul(&b, &c)));
            prop_assert_eq!(ctx.mul(&a, &ctx.add(&b, &c)), ctx.add(&ctx.mul(&a, &b), &ctx.mul(&a, &c)));
            prop_assert_eq!(ctx.mul(&a, &b), ctx.mul(&b, &a));
            prop_assert_eq!(ctx.add(&ctx.sub(&a, &b), &b), a);
            prop_assert_eq!(ctx.frobenius(&ctx.add(&a, &b)), ctx.add(&ctx.frobenius(&a), &ctx.frobenius(&b)));
        }

        #[test]
        fn ring_axioms_gf2_16((ctx, a, b, c) in triple(2, 16)) {
            prop_assert_eq!(ctx.mul(&ctx.mul(&a, &b), &c), ctx.mul(&a, &ctx.mul(&b, &c)));
            prop_assert_eq!(ctx.mul(&a, &ctx.add(&b, &c)), ctx.add(&ctx.mul(&a, &b), &ctx.mul(&a, &c)));
            prop_assert_eq!(ctx.frobenius(&ctx.add(&a, &b)), ctx.add(&ctx.frobenius(&a), &ctx.frobenius(&b)));
        }

        #[test]
        fn ring_axioms_gf5_9((ctx, a, b, c) in triple(5, 9)) {
            prop_assert_eq!(ctx.mul(&ctx.mul(&a, &b), &c), ctx.mul(&a, &ctx.mul(&b, &c)));
            prop_assert_eq!(ctx.mul(&a, &ctx.add(&b, &c)), ctx.add(&ctx.mul(&a, &b), &ctx.mul(&a, &c)));
            prop_assert_eq!(ctx.frobenius(&ctx.add(&a, &b)), ctx.add(&ctx.frobenius(&a), &ctx.frobenius(&b)));
        }
    }
}
