use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (1..=n as u8).collect(),
        }
    }

    /// `images[x - 1]` is the image of `x`.
    pub fn from_images(images: Vec<u8>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// Product of the given cycles (each maps an entry to the next, the last back to the first).
    pub fn from_cycles(n: usize, cycles: &[&[u8]]) -> Result<Perm> {
        let mut images: Vec<u8> = (1..=n as u8).collect();
        let mut used = vec![false; n + 1];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let xi = x as usize;
                if xi == 0 || xi > n || used[xi] {
                    return Err(Error::InvalidArgument(format!(
                        "cycles {cycles:?} are not disjoint cycles on 1..={n}"
                    )));
                }
                used[xi] = true;
                images[xi - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: u8) -> u8 {
        self.images[x as usize - 1]
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = i as u8 + 1;
        }
        Perm { images }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Perm {
        (0..k).fold(Perm::identity(self.degree()), |acc, _| self.compose(&acc))
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut even_cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize - 1;
                len += 1;
            }
            if len % 2 == 0 {
                even_cycles += 1;
            }
        }
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> Vec<u8> {
        (1..=self.degree() as u8)
            .filter(|&x| self.apply(x) != x)
            .collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start + 1 {
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{}", x + 1)?;
                x = self.images[x] as usize - 1;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Parity of a sequence of distinct values: `+1` for an even number of inversions.
pub(crate) fn sequence_sign(seq: &[u8]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
