//! Group elements in left-greedy normal form Δ^p · f₁ ⋯ f_k.
//!
//! The factors are proper simples (neither trivial nor Δ) and each adjacent
//! pair is left-weighted: gcd(∂fᵢ, fᵢ₊₁) = 1, i.e. fᵢ has absorbed everything
//! simple it can from the right.  This form is unique, so element equality is
//! plain structural equality.

use std::cmp::Ordering;

use crate::monoid::GarsideStructure;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement<G: GarsideStructure> {
    structure: G,
    inf: i64,
    factors: Vec<G::Simple>,
}

impl<G: GarsideStructure> GroupElement<G> {
    pub fn identity(structure: G) -> Self {
        GroupElement {
            structure,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(structure: G, p: i64) -> Self {
        GroupElement {
            structure,
            inf: p,
            factors: Vec::new(),
        }
    }

    pub fn atom(structure: G, index: usize) -> Self {
        let s = structure.atom(index);
        Self::from_simple(structure, s)
    }

    pub fn from_simple(structure: G, s: G::Simple) -> Self {
        if structure.is_one(&s) {
            Self::identity(structure)
        } else if structure.is_delta(&s) {
            Self::delta_power(structure, 1)
        } else {
            GroupElement {
                structure,
                inf: 0,
                factors: vec![s],
            }
        }
    }

    /// Build from an arbitrary factor list (entries may be trivial, Δ, or not
    /// left-weighted); the representation is normalized here.
    pub fn from_parts(structure: G, inf: i64, factors: Vec<G::Simple>) -> Self {
        let (shift, factors) = normalize(&structure, factors);
        GroupElement {
            structure,
            inf: inf + shift,
            factors,
        }
    }

    pub fn structure(&self) -> &G {
        &self.structure
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[G::Simple] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn is_delta_power(&self) -> bool {
        self.factors.is_empty()
    }

    /// Whether the element lies in the positive monoid.
    pub fn is_positive(&self) -> bool {
        self.inf >= 0
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.structure, other.structure);
        let g = &self.structure;
        // Δ^p A · Δ^q B = Δ^{p+q} τ^q(A) B.
        let mut factors: Vec<G::Simple> = self
            .factors
            .iter()
            .map(|f| g.tau_pow(f, other.inf))
            .collect();
        factors.extend(other.factors.iter().cloned());
        Self::from_parts(g.clone(), self.inf + other.inf, factors)
    }

    pub fn inverse(&self) -> Self {
        let g = &self.structure;
        let p = self.inf;
        let k = self.factors.len() as i64;
        // (Δ^p f₁⋯f_k)⁻¹ = Δ^{−p−k} · τ^{−(p+k)}(∂f_k) ⋯ τ^{−(p+1)}(∂f₁).
        let factors: Vec<G::Simple> = (0..self.factors.len())
            .rev()
            .map(|i| {
                let comp = g.right_complement(&self.factors[i]);
                g.tau_pow(&comp, -(p + i as i64 + 1))
            })
            .collect();
        Self::from_parts(g.clone(), -p - k, factors)
    }

    /// x⁻¹ · self · x.
    pub fn conjugate_by(&self, x: &Self) -> Self {
        x.inverse().mul(self).mul(x)
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inverse().pow(-e);
        }
        let mut acc = Self::identity(self.structure.clone());
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// g ∧ Δ for a positive element: Δ when inf ≥ 1, otherwise the first
    /// factor (or the identity simple).
    pub fn max_simple_prefix(&self) -> G::Simple {
        debug_assert!(self.is_positive());
        let g = &self.structure;
        if self.inf >= 1 {
            g.delta()
        } else {
            self.factors.first().cloned().unwrap_or_else(|| g.one())
        }
    }

    /// Deterministic total order: by inf, then canonical length, then the
    /// factors' canonical words.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.structure, other.structure);
        let g = &self.structure;
        self.inf
            .cmp(&other.inf)
            .then_with(|| self.factors.len().cmp(&other.factors.len()))
            .then_with(|| {
                for (a, b) in self.factors.iter().zip(&other.factors) {
                    let ord = g.atom_word(a).cmp(&g.atom_word(b));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
                Ordering::Equal
            })
    }

    /// Validity check on the representation; all public constructors maintain
    /// this, so it only appears in assertions.
    pub fn is_normal_form(&self) -> bool {
        let g = &self.structure;
        for f in &self.factors {
            if g.is_one(f) || g.is_delta(f) {
                return false;
            }
        }
        self.factors.windows(2).all(|w| {
            let head = g.gcd(&g.right_complement(&w[0]), &w[1]);
            g.is_one(&head)
        })
    }
}

/// Left-greedy normalization by local moves: while some adjacent pair (a, b)
/// has t = gcd(∂a, b) ≠ 1, replace it with (a·t, t⁻¹b).  Each move pushes
/// length leftward, so the loop terminates; in the stable state Δ-factors form
/// a prefix and trivial factors a suffix, which are stripped off.
fn normalize<G: GarsideStructure>(g: &G, mut fs: Vec<G::Simple>) -> (i64, Vec<G::Simple>) {
    loop {
        let mut changed = false;
        for i in 0..fs.len().saturating_sub(1) {
            if g.is_delta(&fs[i]) || g.is_one(&fs[i + 1]) {
                continue;
            }
            let t = g.gcd(&g.right_complement(&fs[i]), &fs[i + 1]);
            if !g.is_one(&t) {
                fs[i] = g
                    .mul_simples(&fs[i], &t)
                    .expect("t divides the complement of fs[i]");
                fs[i + 1] = g.left_quotient(&t, &fs[i + 1]);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut shift = 0i64;
    let mut out = Vec::with_capacity(fs.len());
    for f in fs {
        if g.is_delta(&f) {
            debug_assert!(out.is_empty(), "Δ after a proper factor in stable state");
            shift += 1;
        } else if !g.is_one(&f) {
            out.push(f);
        }
    }
    (shift, out)
}
