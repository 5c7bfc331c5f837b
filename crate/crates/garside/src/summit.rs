//! Summit classes: the conjugates of an element with maximal inf and minimal
//! sup, reached by cycling and decycling, plus the minimal simple conjugators
//! that connect summit elements to each other.

use std::collections::{HashMap, HashSet};

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::monoid::{residue, GarsideStructure};

/// The summit data of a conjugacy class, anchored at one representative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SummitProfile<G: GarsideStructure> {
    summit_inf: i64,
    summit_sup: i64,
    representative: GroupElement<G>,
    witness: GroupElement<G>,
}

impl<G: GarsideStructure> SummitProfile<G> {
    pub fn summit_inf(&self) -> i64 {
        self.summit_inf
    }

    pub fn summit_sup(&self) -> i64 {
        self.summit_sup
    }

    pub fn representative(&self) -> &GroupElement<G> {
        &self.representative
    }

    /// The x with x⁻¹·a·x = representative, for the original input a.
    pub fn witness(&self) -> &GroupElement<G> {
        &self.witness
    }
}

/// One cycling step: Δ^p f₁⋯f_k ↦ Δ^p f₂⋯f_k τ^{−p}(f₁), i.e. conjugation by
/// τ^{−p}(f₁).  Returns the new element and the conjugator (trivial for pure
/// Δ-powers, which are fixed).
pub fn cycling<G: GarsideStructure>(v: &GroupElement<G>) -> (GroupElement<G>, G::Simple) {
    let g = v.structure().clone();
    let fs = v.factors();
    if fs.is_empty() {
        return (v.clone(), g.one());
    }
    let p = v.inf();
    let conj = g.tau_pow(&fs[0], -p);
    let mut factors: Vec<G::Simple> = fs[1..].to_vec();
    factors.push(conj.clone());
    (GroupElement::from_parts(g, p, factors), conj)
}

/// One decycling step: Δ^p f₁⋯f_k ↦ Δ^p τ^p(f_k) f₁⋯f_{k−1}, i.e. conjugation
/// by f_k⁻¹.  Returns the new element and f_k (the inverse of the conjugator).
pub fn decycling<G: GarsideStructure>(v: &GroupElement<G>) -> (GroupElement<G>, G::Simple) {
    let g = v.structure().clone();
    let fs = v.factors();
    if fs.is_empty() {
        return (v.clone(), g.one());
    }
    let p = v.inf();
    let last = fs[fs.len() - 1].clone();
    let mut factors = vec![g.tau_pow(&last, p)];
    factors.extend_from_slice(&fs[..fs.len() - 1]);
    (GroupElement::from_parts(g, p, factors), last)
}

/// Compute a summit element conjugate to `a`, with the conjugating witness.
///
/// Cycling never decreases inf and never increases sup; decycling likewise.
/// Iterating cycling on the finite orbit either raises inf or closes a cycle,
/// and a closed cycle with no gain means inf is already maximal (cycling is
/// deterministic, so no further iterate can improve).  The same argument
/// applied to decycling settles sup.
pub fn summit_representative<G: GarsideStructure>(a: &GroupElement<G>) -> SummitProfile<G> {
    let g = a.structure().clone();
    let mut v = a.clone();
    let mut x = GroupElement::identity(g.clone());
    loop {
        let mut improved = false;
        // Raise inf by cycling.
        loop {
            let target = v.inf();
            let mut seen = HashSet::new();
            let mut cur = v.clone();
            let mut cx = x.clone();
            let mut gained = false;
            while seen.insert(cur.clone()) {
                let (next, c) = cycling(&cur);
                cx = cx.mul(&GroupElement::from_simple(g.clone(), c));
                cur = next;
                if cur.inf() > target {
                    gained = true;
                    break;
                }
            }
            if gained {
                v = cur;
                x = cx;
                improved = true;
            } else {
                break;
            }
        }
        // Lower sup by decycling.
        loop {
            let target = v.sup();
            let mut seen = HashSet::new();
            let mut cur = v.clone();
            let mut cx = x.clone();
            let mut gained = false;
            while seen.insert(cur.clone()) {
                let (next, s) = decycling(&cur);
                cx = cx.mul(&GroupElement::from_simple(g.clone(), s).inverse());
                cur = next;
                if cur.sup() < target {
                    gained = true;
                    break;
                }
            }
            if gained {
                v = cur;
                x = cx;
                improved = true;
            } else {
                break;
            }
        }
        if !improved {
            break;
        }
    }
    debug_assert_eq!(a.conjugate_by(&x), v);
    SummitProfile {
        summit_inf: v.inf(),
        summit_sup: v.sup(),
        representative: v,
        witness: x,
    }
}

/// Membership in the summit class: extremal inf and sup.
pub fn in_summit<G: GarsideStructure>(v: &GroupElement<G>, profile: &SummitProfile<G>) -> bool {
    v.inf() == profile.summit_inf && v.sup() == profile.summit_sup
}

/// How minimal simple conjugators are computed.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ConjugatorMethod {
    /// Enumerate when the simple-element lattice is small, ascend otherwise.
    #[default]
    Auto,
    /// Filter every nontrivial simple element; the reference method.
    Enumerate,
    /// Per-atom monotone fixpoint ascent; no lattice enumeration needed.
    Ascent,
}

/// Above this many simples, Auto switches from enumeration to ascent.
const ENUMERATION_LIMIT: usize = 5000;

/// Reusable resolver for S_v^sum queries against one structure.
pub struct ConjugatorEngine<G: GarsideStructure> {
    g: G,
    simples: Option<Vec<G::Simple>>,
}

impl<G: GarsideStructure> ConjugatorEngine<G> {
    pub fn new(g: &G, method: ConjugatorMethod) -> Result<Self> {
        let simples = match method {
            ConjugatorMethod::Ascent => None,
            ConjugatorMethod::Enumerate => match g.simples() {
                Some(all) => Some(all),
                None => {
                    return Err(Error::Unsupported(
                        "simple-element enumeration is unavailable at this size".to_string(),
                    ))
                }
            },
            ConjugatorMethod::Auto => g.simples().filter(|all| all.len() <= ENUMERATION_LIMIT),
        };
        Ok(ConjugatorEngine {
            g: g.clone(),
            simples,
        })
    }

    /// S_v^sum: the ≺-minimal nontrivial simples s with s⁻¹vs still in the
    /// summit class, in canonical order.
    pub fn minimal_conjugators(
        &self,
        v: &GroupElement<G>,
        profile: &SummitProfile<G>,
    ) -> Vec<G::Simple> {
        debug_assert!(in_summit(v, profile));
        let candidates = match &self.simples {
            Some(all) => self.candidates_by_enumeration(v, profile, all),
            None => self.candidates_by_ascent(v),
        };
        minimal_filter(&self.g, candidates)
    }

    fn candidates_by_enumeration(
        &self,
        v: &GroupElement<G>,
        profile: &SummitProfile<G>,
        all: &[G::Simple],
    ) -> Vec<G::Simple> {
        let g = &self.g;
        all.iter()
            .filter(|s| !g.is_one(s))
            .filter(|s| {
                let conj = v.conjugate_by(&GroupElement::from_simple(g.clone(), (*s).clone()));
                in_summit(&conj, profile)
            })
            .cloned()
            .collect()
    }

    /// For each atom x, ascend t ↦ t ∨ r(t) ∨ q(t) from x to the least simple
    /// above x that keeps both inf and sup intact under conjugation:
    ///   inf(t⁻¹vt) ≥ p   ⟺  r(t) = (τ^{−p}t)^{Δ^{−p}v} ≺ t,
    ///   sup(t⁻¹vt) ≤ p+k ⟺  q(t) = τ^{−(p+k)}(t^{v⁻¹Δ^{p+k}}) ≺ t,
    /// where x^w is the residue of x past the factors of w.  Both maps are
    /// monotone, so the iteration reaches the least fixpoint above x, and the
    /// fixpoints are exactly the conjugators preserving the summit class.
    fn candidates_by_ascent(&self, v: &GroupElement<G>) -> Vec<G::Simple> {
        let g = &self.g;
        let p = v.inf();
        let sup = v.sup();
        let pos_factors = v.factors();
        let neg = v.inverse().mul(&GroupElement::delta_power(g.clone(), sup));
        debug_assert_eq!(neg.inf(), 0);
        let neg_factors = neg.factors();
        (0..g.atom_count())
            .map(|i| {
                let mut t = g.atom(i);
                loop {
                    let r = residue(g, &g.tau_pow(&t, -p), pos_factors);
                    let q = g.tau_pow(&residue(g, &t, neg_factors), -sup);
                    let next = g.lcm(&g.lcm(&t, &r), &q);
                    if next == t {
                        break;
                    }
                    t = next;
                }
                t
            })
            .collect()
    }
}

/// Keep the ≺-minimal elements, deduplicated, in canonical order.
fn minimal_filter<G: GarsideStructure>(g: &G, mut candidates: Vec<G::Simple>) -> Vec<G::Simple> {
    candidates.sort_by(|a, b| g.simple_cmp(a, b));
    candidates.dedup();
    let minimal: Vec<G::Simple> = candidates
        .iter()
        .filter(|s| {
            !candidates
                .iter()
                .any(|t| t != *s && g.left_divides(t, s))
        })
        .cloned()
        .collect();
    minimal
}

/// Convenience wrapper using the Auto method.
pub fn minimal_simple_conjugators<G: GarsideStructure>(
    v: &GroupElement<G>,
    profile: &SummitProfile<G>,
) -> Vec<G::Simple> {
    ConjugatorEngine::new(v.structure(), ConjugatorMethod::Auto)
        .expect("Auto construction cannot fail")
        .minimal_conjugators(v, profile)
}

/// Decompose a positive conjugator x (with u and x⁻¹ux both in the summit
/// class) into a chain of minimal simple conjugators: repeatedly take the
/// maximal simple prefix x∧Δ of the remainder and peel off the first minimal
/// conjugator of the current vertex dividing it.  Such a divisor always
/// exists: the prefix itself conjugates into the class, and any ≺-minimal
/// element of {t ≺ prefix : t conjugates into the class} is minimal globally
/// because the set of such t is closed under divisors of the prefix.
pub fn chain_decompose<G: GarsideStructure>(
    u: &GroupElement<G>,
    x: &GroupElement<G>,
    profile: &SummitProfile<G>,
) -> Result<Vec<(G::Simple, GroupElement<G>)>> {
    let g = u.structure().clone();
    if !in_summit(u, profile) {
        return Err(Error::Precondition("u is not in the summit class".into()));
    }
    if !x.is_positive() {
        return Err(Error::Precondition("conjugator x is not positive".into()));
    }
    if !in_summit(&u.conjugate_by(x), profile) {
        return Err(Error::Precondition(
            "x⁻¹ux is not in the summit class".into(),
        ));
    }
    let engine = ConjugatorEngine::new(&g, ConjugatorMethod::Auto)?;
    let mut mins_cache: HashMap<GroupElement<G>, Vec<G::Simple>> = HashMap::new();
    let mut chain = Vec::new();
    let mut cur = u.clone();
    let mut rem = x.clone();
    while !rem.is_identity() {
        let prefix = rem.max_simple_prefix();
        let mins = mins_cache
            .entry(cur.clone())
            .or_insert_with(|| engine.minimal_conjugators(&cur, profile));
        let r = mins
            .iter()
            .find(|r| g.left_divides(r, &prefix))
            .cloned()
            .expect("some minimal conjugator divides the maximal simple prefix");
        let step = GroupElement::from_simple(g.clone(), r.clone());
        cur = cur.conjugate_by(&step);
        rem = step.inverse().mul(&rem);
        chain.push((r, cur.clone()));
    }
    Ok(chain)
}

/// Exhaustive summit-class oracle: close {a} under conjugation by every
/// nontrivial simple, keeping only conjugates with inf ≥ inf(a) and
/// sup ≤ sup(a) (cycling/decycling trajectories and in-class chains never
/// leave that window), then pick the extremal layer.  Exponential; for
/// validation only.
pub fn brute_force_summit_class<G: GarsideStructure>(
    a: &GroupElement<G>,
) -> Result<Vec<GroupElement<G>>> {
    let g = a.structure().clone();
    let all = g.simples().ok_or_else(|| {
        Error::Unsupported("simple-element enumeration is unavailable at this size".to_string())
    })?;
    let conjugators: Vec<GroupElement<G>> = all
        .iter()
        .filter(|s| !g.is_one(s))
        .map(|s| GroupElement::from_simple(g.clone(), s.clone()))
        .collect();
    let lo = a.inf();
    let hi = a.sup();
    let mut seen: HashSet<GroupElement<G>> = HashSet::new();
    let mut queue = vec![a.clone()];
    seen.insert(a.clone());
    while let Some(v) = queue.pop() {
        for c in &conjugators {
            let w = v.conjugate_by(c);
            if w.inf() >= lo && w.sup() <= hi && seen.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    let best_inf = seen.iter().map(|v| v.inf()).max().expect("nonempty");
    let best_sup = seen
        .iter()
        .filter(|v| v.inf() == best_inf)
        .map(|v| v.sup())
        .min()
        .expect("nonempty");
    let mut summit: Vec<GroupElement<G>> = seen
        .into_iter()
        .filter(|v| v.inf() == best_inf && v.sup() == best_sup)
        .collect();
    summit.sort_by(|a, b| a.canonical_cmp(b));
    Ok(summit)
}
