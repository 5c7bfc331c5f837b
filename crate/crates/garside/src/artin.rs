//! The classical Garside structure on the braid group B_n.
//!
//! Simple elements are permutation braids, identified with permutations of the
//! n strands.  A positive word maps to a permutation by acting on the right:
//! the word is read left to right, and `mul(a, b)[i] = b[a[i]]`.  The length of
//! a permutation braid is the inversion count of its permutation, Δ is the
//! half twist (the order-reversing permutation), and left divisibility is the
//! weak Bruhat order.

use crate::error::{Error, Result};
use crate::monoid::GarsideStructure;

/// A permutation braid on n strands, stored as the image table of its
/// permutation: strand i ends at `images[i]` (0-based).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PermutationSimple {
    images: Vec<u8>,
}

impl PermutationSimple {
    pub fn images(&self) -> &[u8] {
        &self.images
    }

    fn identity(n: usize) -> Self {
        PermutationSimple {
            images: (0..n as u8).collect(),
        }
    }

    fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        PermutationSimple { images: inv }
    }

    fn inversions(&self) -> usize {
        let v = &self.images;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Composition under the right action: (a·b)[i] = b[a[i]].
    fn compose(&self, other: &Self) -> Self {
        PermutationSimple {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }
}

/// B_n with the permutation-braid Garside structure.  Atoms are the Artin
/// generators σ₁, …, σ_{n−1} in index order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ArtinMonoid {
    n: usize,
}

impl ArtinMonoid {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=16).contains(&n) {
            return Err(Error::InvalidStrandCount(n));
        }
        Ok(ArtinMonoid { n })
    }

    pub fn strands(&self) -> usize {
        self.n
    }
}

impl GarsideStructure for ArtinMonoid {
    type Simple = PermutationSimple;

    fn atom_count(&self) -> usize {
        self.n - 1
    }

    fn atom(&self, index: usize) -> PermutationSimple {
        debug_assert!(index < self.n - 1);
        let mut s = PermutationSimple::identity(self.n);
        s.images.swap(index, index + 1);
        s
    }

    fn atom_name(&self, index: usize) -> String {
        format!("s{}", index + 1)
    }

    fn parse_atom(&self, token: &str) -> Option<usize> {
        let digits = token.strip_prefix('s')?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let k: usize = digits.parse().ok()?;
        (1..self.n).contains(&k).then(|| k - 1)
    }

    fn one(&self) -> PermutationSimple {
        PermutationSimple::identity(self.n)
    }

    fn delta(&self) -> PermutationSimple {
        PermutationSimple {
            images: (0..self.n as u8).rev().collect(),
        }
    }

    fn delta_len(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    fn tau_order(&self) -> usize {
        // Δ² is central; for n = 2 already Δ is.
        if self.n <= 2 {
            1
        } else {
            2
        }
    }

    fn simple_len(&self, s: &PermutationSimple) -> usize {
        s.inversions()
    }

    fn left_divides(&self, a: &PermutationSimple, b: &PermutationSimple) -> bool {
        // a ≺ b ⟺ lengths add along a, a⁻¹b.
        let q = a.inverse().compose(b);
        a.inversions() + q.inversions() == b.inversions()
    }

    fn left_quotient(&self, a: &PermutationSimple, b: &PermutationSimple) -> PermutationSimple {
        debug_assert!(self.left_divides(a, b));
        a.inverse().compose(b)
    }

    fn right_divides(&self, a: &PermutationSimple, b: &PermutationSimple) -> bool {
        let q = b.compose(&a.inverse());
        q.inversions() + a.inversions() == b.inversions()
    }

    fn right_quotient(&self, b: &PermutationSimple, a: &PermutationSimple) -> PermutationSimple {
        debug_assert!(self.right_divides(a, b));
        b.compose(&a.inverse())
    }

    fn mul_simples(&self, a: &PermutationSimple, b: &PermutationSimple) -> Option<PermutationSimple> {
        let q = a.compose(b);
        (q.inversions() == a.inversions() + b.inversions()).then_some(q)
    }

    fn tau(&self, s: &PermutationSimple) -> PermutationSimple {
        // Conjugation by the reversal: flip positions and values.
        let n = self.n;
        let mut images = vec![0u8; n];
        for i in 0..n {
            images[i] = (n - 1) as u8 - s.images[n - 1 - i];
        }
        PermutationSimple { images }
    }

    fn simples(&self) -> Option<Vec<PermutationSimple>> {
        if self.n > 7 {
            return None;
        }
        let mut all = Vec::new();
        let mut images: Vec<u8> = (0..self.n as u8).collect();
        permutations(&mut images, 0, &mut all);
        let mut all: Vec<PermutationSimple> =
            all.into_iter().map(|images| PermutationSimple { images }).collect();
        all.sort_by(|a, b| self.simple_cmp(a, b));
        Some(all)
    }

    fn atom_left_divides(&self, index: usize, s: &PermutationSimple) -> bool {
        // σ_{index+1} ≺ s ⟺ descent at position index.
        s.images[index] > s.images[index + 1]
    }

    fn atom_right_divides(&self, index: usize, s: &PermutationSimple) -> bool {
        // s ends with σ_{index+1} ⟺ value index+1 appears before value index.
        let inv = s.inverse();
        inv.images[index] > inv.images[index + 1]
    }
}

fn permutations(images: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
    if k == images.len() {
        out.push(images.clone());
        return;
    }
    for i in k..images.len() {
        images.swap(k, i);
        permutations(images, k + 1, out);
        images.swap(k, i);
    }
}
