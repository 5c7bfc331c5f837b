//! The Garside-structure interface and the generic lattice algorithms built on it.
//!
//! A Garside structure describes an atomic monoid with a distinguished element
//! Δ whose left divisors coincide with its right divisors.  Those divisors, the
//! *simple* elements, form a finite lattice under left divisibility, with the
//! identity at the bottom and Δ at the top.  Everything the rest of the crate
//! does — greedy normal forms, conjugacy search, centralizer graphs — reduces
//! to a small set of primitives on simple elements, collected in
//! [`GarsideStructure`].
//!
//! Divisibility is left divisibility throughout: `a` divides `b` when `b = a·c`
//! for some `c` in the monoid.  The right-handed duals exist as primitives
//! because the lcm computation needs them, but no public operation is phrased
//! in terms of them.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::hash::Hash;

/// Primitives every Garside instance must supply, plus generic algorithms
/// derived from them.
///
/// Implementations must guarantee:
/// - `atoms` are the minimal nontrivial elements, listed in a fixed canonical
///   order;
/// - `mul_simples(a, b)` returns `Some` exactly when the monoid product `a·b`
///   is again a divisor of Δ;
/// - quotients are only called when the corresponding divisibility holds
///   (checked with `debug_assert!` where cheap).
pub trait GarsideStructure: Clone + PartialEq + Eq + Hash + Debug + Send + Sync {
    type Simple: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn atom_count(&self) -> usize;
    fn atom(&self, index: usize) -> Self::Simple;
    /// Printable name of an atom, e.g. `s2` or `a(3,1)`.
    fn atom_name(&self, index: usize) -> String;
    /// Parse a printable atom name back to its index.
    fn parse_atom(&self, token: &str) -> Option<usize>;

    fn one(&self) -> Self::Simple;
    fn delta(&self) -> Self::Simple;
    /// Atom length of Δ.
    fn delta_len(&self) -> usize;
    /// Smallest e ≥ 1 with Δ^e central.
    fn tau_order(&self) -> usize;

    /// Atom length of a simple element.
    fn simple_len(&self, s: &Self::Simple) -> usize;

    fn left_divides(&self, a: &Self::Simple, b: &Self::Simple) -> bool;
    /// The `c` with `a·c = b`.  Precondition: `left_divides(a, b)`.
    fn left_quotient(&self, a: &Self::Simple, b: &Self::Simple) -> Self::Simple;
    /// Whether `b = c·a` for some simple `c`.
    fn right_divides(&self, a: &Self::Simple, b: &Self::Simple) -> bool;
    /// The `c` with `c·a = b`.  Precondition: `right_divides(a, b)`.
    fn right_quotient(&self, b: &Self::Simple, a: &Self::Simple) -> Self::Simple;

    /// Monoid product, if it is still simple.
    fn mul_simples(&self, a: &Self::Simple, b: &Self::Simple) -> Option<Self::Simple>;

    /// τ(s) = Δ⁻¹ s Δ.
    fn tau(&self, s: &Self::Simple) -> Self::Simple;

    /// Every simple element in canonical order, or `None` when the lattice is
    /// too large to enumerate comfortably.
    fn simples(&self) -> Option<Vec<Self::Simple>>;

    // ---- provided ----

    fn is_one(&self, s: &Self::Simple) -> bool {
        self.simple_len(s) == 0
    }

    fn is_delta(&self, s: &Self::Simple) -> bool {
        self.simple_len(s) == self.delta_len()
    }

    /// Fast path for `left_divides(atom(i), s)`; instances usually override.
    fn atom_left_divides(&self, index: usize, s: &Self::Simple) -> bool {
        self.left_divides(&self.atom(index), s)
    }

    /// Fast path for `right_divides(atom(i), s)`.
    fn atom_right_divides(&self, index: usize, s: &Self::Simple) -> bool {
        self.right_divides(&self.atom(index), s)
    }

    /// τ^e with e of either sign.
    fn tau_pow(&self, s: &Self::Simple, e: i64) -> Self::Simple {
        let order = self.tau_order() as i64;
        let reps = e.rem_euclid(order);
        let mut out = s.clone();
        for _ in 0..reps {
            out = self.tau(&out);
        }
        out
    }

    /// ∂s, the simple with `s·∂s = Δ`.
    fn right_complement(&self, s: &Self::Simple) -> Self::Simple {
        self.left_quotient(s, &self.delta())
    }

    /// The simple with `(left_complement s)·s = Δ`.
    fn left_complement(&self, s: &Self::Simple) -> Self::Simple {
        self.right_quotient(&self.delta(), s)
    }

    /// Greatest common left divisor.  Instances may override with a direct
    /// method; the generic greedy absorption stays available as
    /// [`generic_gcd`] for cross-checking.
    fn gcd(&self, a: &Self::Simple, b: &Self::Simple) -> Self::Simple {
        generic_gcd(self, a, b)
    }

    /// Least common right multiple (the join of the divisibility lattice).
    fn lcm(&self, a: &Self::Simple, b: &Self::Simple) -> Self::Simple {
        generic_lcm(self, a, b)
    }

    /// Greatest common right divisor; internal helper for the lcm.
    fn right_gcd(&self, a: &Self::Simple, b: &Self::Simple) -> Self::Simple {
        generic_right_gcd(self, a, b)
    }

    /// Canonical reduced word for a simple: repeatedly peel off the smallest
    /// atom that left-divides the remainder.  This is the lexicographically
    /// least reduced word under the canonical atom order.
    fn atom_word(&self, s: &Self::Simple) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.simple_len(s));
        let mut rest = s.clone();
        while !self.is_one(&rest) {
            let i = (0..self.atom_count())
                .find(|&i| self.atom_left_divides(i, &rest))
                .expect("a nontrivial simple is divisible by some atom");
            word.push(i);
            rest = self.left_quotient(&self.atom(i), &rest);
        }
        word
    }

    /// Total order on simples: by length, then by canonical word.  Used for
    /// deterministic output everywhere.
    fn simple_cmp(&self, a: &Self::Simple, b: &Self::Simple) -> Ordering {
        self.simple_len(a)
            .cmp(&self.simple_len(b))
            .then_with(|| self.atom_word(a).cmp(&self.atom_word(b)))
    }
}

/// Greedy common-divisor absorption: grow `d` by any atom dividing both
/// residuals `d⁻¹a` and `d⁻¹b` until none is left.  At that point `d` is the
/// meet: if it were a proper divisor of gcd(a, b), the residual of the gcd
/// would still contain an absorbable atom.
pub fn generic_gcd<G: GarsideStructure + ?Sized>(
    g: &G,
    a: &G::Simple,
    b: &G::Simple,
) -> G::Simple {
    let mut d = g.one();
    let mut ra = a.clone();
    let mut rb = b.clone();
    'grow: loop {
        for i in 0..g.atom_count() {
            if g.atom_left_divides(i, &ra) && g.atom_left_divides(i, &rb) {
                let x = g.atom(i);
                d = g.mul_simples(&d, &x).expect("divisor of a simple is simple");
                ra = g.left_quotient(&x, &ra);
                rb = g.left_quotient(&x, &rb);
                continue 'grow;
            }
        }
        return d;
    }
}

/// Right-handed dual of [`generic_gcd`], absorbing atoms on the right.
pub fn generic_right_gcd<G: GarsideStructure + ?Sized>(
    g: &G,
    a: &G::Simple,
    b: &G::Simple,
) -> G::Simple {
    let mut d = g.one();
    let mut ra = a.clone();
    let mut rb = b.clone();
    'grow: loop {
        for i in 0..g.atom_count() {
            if g.atom_right_divides(i, &ra) && g.atom_right_divides(i, &rb) {
                let x = g.atom(i);
                d = g.mul_simples(&x, &d).expect("divisor of a simple is simple");
                ra = g.right_quotient(&ra, &x);
                rb = g.right_quotient(&rb, &x);
                continue 'grow;
            }
        }
        return d;
    }
}

/// Join via complement duality: `a` divides `m` iff `∂m` right-divides `∂a`,
/// so the complement of the join is the right gcd of the complements.
pub fn generic_lcm<G: GarsideStructure + ?Sized>(
    g: &G,
    a: &G::Simple,
    b: &G::Simple,
) -> G::Simple {
    let ca = g.right_complement(a);
    let cb = g.right_complement(b);
    let common = generic_right_gcd(g, &ca, &cb);
    g.right_quotient(&g.delta(), &common)
}

/// Residue of a simple `x` past a sequence of simples `ys` (the factors of a
/// positive element): the simple `r` with `x ∨ y₁⋯y_j = y₁⋯y_j · r`.
/// Computed by folding `z ← y\(z ∨ y)`; the residue of a simple is simple.
pub fn residue<G: GarsideStructure + ?Sized>(
    g: &G,
    x: &G::Simple,
    ys: &[G::Simple],
) -> G::Simple {
    let mut z = x.clone();
    for y in ys {
        let join = g.lcm(&z, y);
        z = g.left_quotient(y, &join);
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::ArtinMonoid;

    fn b(n: usize) -> ArtinMonoid {
        ArtinMonoid::new(n).unwrap()
    }

    #[test]
    fn complements_multiply_to_delta() {
        for n in [3, 4] {
            let g = b(n);
            for s in g.simples().unwrap() {
                let rc = g.right_complement(&s);
                assert_eq!(g.mul_simples(&s, &rc), Some(g.delta()));
                let lc = g.left_complement(&s);
                assert_eq!(g.mul_simples(&lc, &s), Some(g.delta()));
            }
        }
    }

    #[test]
    fn complement_edge_cases() {
        let g = b(3);
        assert_eq!(g.right_complement(&g.one()), g.delta());
        assert_eq!(g.right_complement(&g.delta()), g.one());
        // ∂σ₁ = σ₂σ₁ in B₃.
        let s1 = g.atom(0);
        let rc = g.right_complement(&s1);
        assert_eq!(g.atom_word(&rc), vec![1, 0]);
    }

    #[test]
    fn tau_is_an_involution_on_artin_simples() {
        let g = b(4);
        for s in g.simples().unwrap() {
            assert_eq!(g.tau(&g.tau(&s)), s);
        }
        assert_eq!(g.tau(&g.delta()), g.delta());
        assert_eq!(g.tau(&g.atom(0)), g.atom(2)); // τ(σ₁) = σ₃
    }

    #[test]
    fn gcd_lcm_match_exhaustive_search() {
        for n in [3, 4] {
            let g = b(n);
            let all = g.simples().unwrap();
            for a in &all {
                for b in &all {
                    let meet = g.gcd(a, b);
                    let join = g.lcm(a, b);
                    // Exhaustive: maximal common divisor / minimal common multiple.
                    let common_divs: Vec<_> = all
                        .iter()
                        .filter(|s| g.left_divides(s, a) && g.left_divides(s, b))
                        .collect();
                    let best = common_divs
                        .iter()
                        .max_by_key(|s| g.simple_len(s))
                        .unwrap();
                    assert_eq!(&&meet, best);
                    assert!(common_divs.iter().all(|s| g.left_divides(s, &meet)));

                    let common_mults: Vec<_> = all
                        .iter()
                        .filter(|s| g.left_divides(a, s) && g.left_divides(b, s))
                        .collect();
                    let best = common_mults
                        .iter()
                        .min_by_key(|s| g.simple_len(s))
                        .unwrap();
                    assert_eq!(&&join, best);
                    assert!(common_mults.iter().all(|s| g.left_divides(&join, s)));
                }
            }
        }
    }

    #[test]
    fn lattice_laws() {
        let g = b(4);
        let all = g.simples().unwrap();
        for a in &all {
            assert_eq!(g.gcd(a, a), *a);
            assert_eq!(g.lcm(a, a), *a);
            assert_eq!(g.lcm(a, &g.one()), *a);
            assert_eq!(g.gcd(a, &g.delta()), *a);
            for b in &all {
                assert_eq!(g.gcd(a, b), g.gcd(b, a));
                assert_eq!(g.lcm(a, b), g.lcm(b, a));
                assert_eq!(g.lcm(a, &g.gcd(a, b)), *a);
                assert_eq!(g.gcd(a, &g.lcm(a, b)), *a);
            }
        }
    }

    #[test]
    fn lcm_of_neighbouring_atoms_is_their_braid() {
        let g = b(3);
        let join = g.lcm(&g.atom(0), &g.atom(1));
        assert_eq!(join, g.delta());

        let g = b(4);
        // σ₁ and σ₃ commute, so their join has length 2.
        let join = g.lcm(&g.atom(0), &g.atom(2));
        assert_eq!(g.simple_len(&join), 2);
        assert_eq!(g.atom_word(&join), vec![0, 2]);
    }

    #[test]
    fn gcd_of_example_pairs() {
        let g = b(4);
        let s1s2 = g.mul_simples(&g.atom(0), &g.atom(1)).unwrap();
        let s1s3 = g.mul_simples(&g.atom(0), &g.atom(2)).unwrap();
        assert_eq!(g.gcd(&s1s2, &s1s3), g.atom(0));
        assert_eq!(g.gcd(&g.atom(0), &g.atom(1)), g.one());
    }

    #[test]
    fn residue_laws_sampled() {
        let g = b(4);
        let all = g.simples().unwrap();
        // x divides y·z  ⟺  residue of x past [y] divides z.
        for x in all.iter().step_by(3) {
            for y in all.iter().step_by(5) {
                for z in all.iter().step_by(7) {
                    let r = residue(&g, x, std::slice::from_ref(y));
                    let yz_div = match g.mul_simples(y, z) {
                        Some(yz) => g.left_divides(x, &yz),
                        None => continue,
                    };
                    assert_eq!(yz_div, g.left_divides(&r, z));
                }
            }
        }
    }
}
