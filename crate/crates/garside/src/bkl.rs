//! The band-generator (Birman–Ko–Lee) Garside structure on B_n.
//!
//! Atoms are the bands a(t,s) for n ≥ t > s ≥ 1; simple elements correspond to
//! non-crossing partitions of {1..n}, with δ = a(n,n−1)⋯a(2,1) the full block.
//! The permutation of a simple cycles each block ascendingly (every element to
//! the next larger one, the maximum back to the minimum); left and right
//! divisibility both coincide with partition refinement.

use crate::error::{Error, Result};
use crate::monoid::GarsideStructure;

/// A non-crossing partition of {0..n−1} (0-based internally, 1-based in
/// names): `mins[i]` is the smallest element of the block containing i.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NonCrossingSimple {
    mins: Vec<u8>,
}

impl NonCrossingSimple {
    pub fn mins(&self) -> &[u8] {
        &self.mins
    }

    fn identity(n: usize) -> Self {
        NonCrossingSimple {
            mins: (0..n as u8).collect(),
        }
    }

    fn block_count(&self) -> usize {
        self.mins
            .iter()
            .enumerate()
            .filter(|&(i, &m)| m as usize == i)
            .count()
    }

    /// Permutation of the underlying braid: ascending cycle on each block.
    fn to_perm(&self) -> Vec<u8> {
        let n = self.mins.len();
        let mut perm: Vec<u8> = (0..n as u8).collect();
        for i in 0..n {
            // Next element of i's block above i, else the block minimum.
            let mut next = None;
            for j in i + 1..n {
                if self.mins[j] == self.mins[i] {
                    next = Some(j as u8);
                    break;
                }
            }
            perm[i] = next.unwrap_or(self.mins[i]);
        }
        perm
    }

    /// Rebuild from a permutation; `None` unless every cycle is ascending and
    /// the resulting blocks are non-crossing.
    fn from_perm(perm: &[u8]) -> Option<Self> {
        let n = perm.len();
        let mut mins = vec![u8::MAX; n];
        for start in 0..n {
            if mins[start] != u8::MAX {
                continue;
            }
            // `start` is the smallest unvisited element, hence its cycle's min.
            let mut cur = start;
            loop {
                mins[cur] = start as u8;
                let nxt = perm[cur] as usize;
                if nxt == start {
                    break;
                }
                if nxt <= cur || mins[nxt] != u8::MAX {
                    return None; // not an ascending cycle
                }
                cur = nxt;
            }
        }
        let s = NonCrossingSimple { mins };
        s.is_non_crossing().then_some(s)
    }

    /// Parenthesis test: scanning left to right, a block may only continue
    /// when it is the innermost open one.
    fn is_non_crossing(&self) -> bool {
        let n = self.mins.len();
        let mut max_of = vec![0u8; n];
        for i in 0..n {
            max_of[self.mins[i] as usize] = i as u8;
        }
        let mut stack: Vec<u8> = Vec::new();
        for i in 0..n {
            let b = self.mins[i];
            if b as usize == i {
                stack.push(b);
            } else if stack.last() != Some(&b) {
                return false;
            }
            if max_of[b as usize] as usize == i {
                stack.pop();
            }
        }
        true
    }
}

fn compose(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().map(|&i| b[i as usize]).collect()
}

fn invert(p: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v as usize] = i as u8;
    }
    inv
}

/// B_n with the band-generator Garside structure.  Atoms are ordered
/// lexicographically by (t, s): a(2,1), a(3,1), a(3,2), a(4,1), …
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BklMonoid {
    n: usize,
}

impl BklMonoid {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=16).contains(&n) {
            return Err(Error::InvalidStrandCount(n));
        }
        Ok(BklMonoid { n })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    /// 1-based band indices (t, s) of an atom, t > s.
    pub fn atom_pair(&self, index: usize) -> (usize, usize) {
        debug_assert!(index < self.atom_count());
        let mut t = 2;
        let mut base = 0;
        while base + (t - 1) <= index {
            base += t - 1;
            t += 1;
        }
        (t, index - base + 1)
    }

    pub fn atom_index(&self, t: usize, s: usize) -> Option<usize> {
        (1 <= s && s < t && t <= self.n).then(|| (t - 1) * (t - 2) / 2 + (s - 1))
    }

    /// Index of the band a(i+2, i+1) that the Artin generator σ_{i+1} maps to.
    pub fn sigma_atom(&self, artin_index: usize) -> usize {
        self.atom_index(artin_index + 2, artin_index + 1)
            .expect("Artin generator index in range")
    }

    /// Meet = greatest common refinement; blocks are the pairwise
    /// intersections of blocks of a and b, which stay non-crossing.
    pub fn nc_meet(&self, a: &NonCrossingSimple, b: &NonCrossingSimple) -> NonCrossingSimple {
        let n = self.n;
        let mut mins = vec![0u8; n];
        for i in 0..n {
            let key = (a.mins[i], b.mins[i]);
            let first = (0..=i)
                .find(|&j| (a.mins[j], b.mins[j]) == key)
                .expect("i itself matches");
            mins[i] = first as u8;
        }
        NonCrossingSimple { mins }
    }

    /// Join: merge the two partitions, then keep merging any pair of blocks
    /// that interleave until non-crossing.  Each merge is forced in any
    /// non-crossing upper bound, so the result is the least one.
    pub fn nc_join(&self, a: &NonCrossingSimple, b: &NonCrossingSimple) -> NonCrossingSimple {
        let n = self.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
            }
            parent[i]
        }
        fn union(parent: &mut Vec<usize>, i: usize, j: usize) {
            let (ri, rj) = (find(parent, i), find(parent, j));
            if ri != rj {
                let (lo, hi) = if ri < rj { (ri, rj) } else { (rj, ri) };
                parent[hi] = lo;
            }
        }
        for i in 0..n {
            union(&mut parent, i, a.mins[i] as usize);
            union(&mut parent, i, b.mins[i] as usize);
        }
        'merge: loop {
            let roots: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
            let blocks: Vec<usize> = (0..n).filter(|&i| roots[i] == i).collect();
            for (bi, &p) in blocks.iter().enumerate() {
                for &q in &blocks[bi + 1..] {
                    // Interleaved ⟺ the merged scan switches blocks ≥ 3 times.
                    let mut switches = 0;
                    let mut last = None;
                    for i in 0..n {
                        if roots[i] == p || roots[i] == q {
                            if last.is_some() && last != Some(roots[i]) {
                                switches += 1;
                            }
                            last = Some(roots[i]);
                        }
                    }
                    if switches >= 3 {
                        union(&mut parent, p, q);
                        continue 'merge;
                    }
                }
            }
            break;
        }
        let mins: Vec<u8> = (0..n).map(|i| find(&mut parent, i) as u8).collect();
        let s = NonCrossingSimple { mins };
        debug_assert!(s.is_non_crossing());
        s
    }
}

impl GarsideStructure for BklMonoid {
    type Simple = NonCrossingSimple;

    fn atom_count(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    fn atom(&self, index: usize) -> NonCrossingSimple {
        let (t, s) = self.atom_pair(index);
        let mut simple = NonCrossingSimple::identity(self.n);
        simple.mins[t - 1] = (s - 1) as u8;
        simple
    }

    fn atom_name(&self, index: usize) -> String {
        let (t, s) = self.atom_pair(index);
        format!("a({t},{s})")
    }

    fn parse_atom(&self, token: &str) -> Option<usize> {
        let inner = token.strip_prefix("a(")?.strip_suffix(')')?;
        let (t, s) = inner.split_once(',')?;
        let digits = |x: &str| !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit());
        if !digits(t) || !digits(s) {
            return None;
        }
        self.atom_index(t.parse().ok()?, s.parse().ok()?)
    }

    fn one(&self) -> NonCrossingSimple {
        NonCrossingSimple::identity(self.n)
    }

    fn delta(&self) -> NonCrossingSimple {
        NonCrossingSimple {
            mins: vec![0; self.n],
        }
    }

    fn delta_len(&self) -> usize {
        self.n - 1
    }

    fn tau_order(&self) -> usize {
        // δ^n is central; for n = 2, δ itself is.
        if self.n <= 2 {
            1
        } else {
            self.n
        }
    }

    fn simple_len(&self, s: &NonCrossingSimple) -> usize {
        self.n - s.block_count()
    }

    fn left_divides(&self, a: &NonCrossingSimple, b: &NonCrossingSimple) -> bool {
        // Refinement: every block of a sits inside a block of b.
        (0..self.n).all(|i| b.mins[a.mins[i] as usize] == b.mins[i])
    }

    fn left_quotient(&self, a: &NonCrossingSimple, b: &NonCrossingSimple) -> NonCrossingSimple {
        debug_assert!(self.left_divides(a, b));
        let q = compose(&invert(&a.to_perm()), &b.to_perm());
        NonCrossingSimple::from_perm(&q).expect("quotient of simples is simple")
    }

    fn right_divides(&self, a: &NonCrossingSimple, b: &NonCrossingSimple) -> bool {
        self.left_divides(a, b)
    }

    fn right_quotient(&self, b: &NonCrossingSimple, a: &NonCrossingSimple) -> NonCrossingSimple {
        debug_assert!(self.right_divides(a, b));
        let q = compose(&b.to_perm(), &invert(&a.to_perm()));
        NonCrossingSimple::from_perm(&q).expect("quotient of simples is simple")
    }

    fn mul_simples(&self, a: &NonCrossingSimple, b: &NonCrossingSimple) -> Option<NonCrossingSimple> {
        // a·b ≺ δ ⟺ b ≺ ∂a.
        if !self.left_divides(b, &self.right_complement(a)) {
            return None;
        }
        let p = compose(&a.to_perm(), &b.to_perm());
        Some(NonCrossingSimple::from_perm(&p).expect("product below δ is simple"))
    }

    fn tau(&self, s: &NonCrossingSimple) -> NonCrossingSimple {
        // Conjugation by δ shifts every block by +1 mod n.
        let delta_perm = self.delta().to_perm();
        let q = compose(&invert(&delta_perm), &compose(&s.to_perm(), &delta_perm));
        NonCrossingSimple::from_perm(&q).expect("τ preserves simples")
    }

    fn simples(&self) -> Option<Vec<NonCrossingSimple>> {
        if self.n > 10 {
            return None;
        }
        let mut all = Vec::new();
        let mut mins = vec![0u8; self.n];
        partitions(&mut mins, 1, self.n, &mut all);
        let mut all: Vec<NonCrossingSimple> = all
            .into_iter()
            .map(|mins| NonCrossingSimple { mins })
            .filter(|s| s.is_non_crossing())
            .collect();
        all.sort_by(|a, b| self.simple_cmp(a, b));
        Some(all)
    }

    fn atom_left_divides(&self, index: usize, s: &NonCrossingSimple) -> bool {
        let (t, s0) = self.atom_pair(index);
        s.mins[t - 1] == s.mins[s0 - 1]
    }

    fn atom_right_divides(&self, index: usize, s: &NonCrossingSimple) -> bool {
        self.atom_left_divides(index, s)
    }

    fn gcd(&self, a: &NonCrossingSimple, b: &NonCrossingSimple) -> NonCrossingSimple {
        self.nc_meet(a, b)
    }

    fn lcm(&self, a: &NonCrossingSimple, b: &NonCrossingSimple) -> NonCrossingSimple {
        self.nc_join(a, b)
    }

    fn right_gcd(&self, a: &NonCrossingSimple, b: &NonCrossingSimple) -> NonCrossingSimple {
        self.nc_meet(a, b)
    }
}

/// Enumerate set partitions as canonical min-labelled vectors: element i joins
/// an existing block (copying its min) or opens its own.
fn partitions(mins: &mut Vec<u8>, i: usize, n: usize, out: &mut Vec<Vec<u8>>) {
    if i == n {
        out.push(mins.clone());
        return;
    }
    let existing: Vec<u8> = (0..i as u8).filter(|&j| mins[j as usize] == j).collect();
    for m in existing {
        mins[i] = m;
        partitions(mins, i + 1, n, out);
    }
    mins[i] = i as u8;
    partitions(mins, i + 1, n, out);
}
