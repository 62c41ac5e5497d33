use std::fmt;

use crate::error::{Error, Result};

/// An element of `Σ_n`, stored 0-based: `images[i]` is the image of `i`.
///
/// Products compose right to left: `(a * b)(i) = a(b(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<usize> = self.images.iter().map(|i| i + 1).collect();
        write!(f, "Perm{one_based:?}")
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidInput(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Self { images })
    }

    /// From the 1-based image list used in the interchange format.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidInput("permutation images start at 1".into()));
        }
        Self::new(images.iter().map(|i| i - 1).collect())
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// The adjacent transposition swapping `j` and `j + 1` (0-based).
    pub fn transposition(n: usize, j: usize) -> Self {
        assert!(j + 1 < n, "no transposition s_{j} in Σ_{n}");
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(j, j + 1);
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    pub fn sign(&self) -> i64 {
        let inversions = self.reduced_word().len();
        if inversions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// A reduced word in application order: `self = s_{w[r-1]} ∘ ... ∘ s_{w[0]}`,
    /// so acting by `self` means acting by `s_{w[0]}` first.
    pub fn reduced_word(&self) -> Vec<usize> {
        // bubble sort by right multiplication: self ∘ s_j swaps entries j, j+1
        let mut a = self.images.clone();
        let mut word = Vec::new();
        let n = a.len();
        for end in (1..n).rev() {
            for j in 0..end {
                if a[j] > a[j + 1] {
                    a.swap(j, j + 1);
                    word.push(j);
                }
            }
        }
        word
    }

    /// `β × γ`: `β` on the first `p` points and `γ` shifted onto the rest.
    pub fn block_embed(beta: &Permutation, gamma: &Permutation) -> Permutation {
        Self::block_sum(&[beta, gamma])
    }

    pub fn block_sum(parts: &[&Permutation]) -> Permutation {
        let mut images = Vec::new();
        for p in parts {
            let off = images.len();
            images.extend(p.images.iter().map(|i| i + off));
        }
        Permutation { images }
    }

    /// Restriction of a block-preserving permutation to one block, as a
    /// permutation of that block.
    pub fn block_part(&self, offset: usize, len: usize) -> Permutation {
        Permutation {
            images: self.images[offset..offset + len]
                .iter()
                .map(|i| i - offset)
                .collect(),
        }
    }

    /// `ρ_{q,p}` in `Σ_{p+q}` (1-based): `i ↦ i + p` for `i ≤ q`, `i ↦ i − q`
    /// otherwise.
    pub fn shuffle_rho(q: usize, p: usize) -> Permutation {
        let images = (0..p + q)
            .map(|i| if i < q { i + p } else { i - q })
            .collect();
        Permutation { images }
    }

    /// Every element of `Σ_n` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// True if `self` maps each block of `blocks` onto itself.
    pub fn preserves_blocks(&self, blocks: &[usize]) -> bool {
        let mut off = 0;
        for &b in blocks {
            if self.images[off..off + b].iter().any(|&v| v < off || v >= off + b) {
                return false;
            }
            off += b;
        }
        true
    }
}

/// `n!`.
pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
