//! Randomized law checking across both Garside structures: normal-form
//! soundness, group axioms, summit invariance, and defining-relation rewrites
//! that must never change a normal form.

use garside::{
    chain_decompose, in_summit, minimal_simple_conjugators, parse_element, summit_representative,
    ArtinMonoid, BklMonoid, GarsideStructure, GroupElement,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn artin(n: usize) -> ArtinMonoid {
    ArtinMonoid::new(n).unwrap()
}

fn bkl(n: usize) -> BklMonoid {
    BklMonoid::new(n).unwrap()
}

fn element_from_letters<G: GarsideStructure>(g: &G, letters: &[(usize, bool)]) -> GroupElement<G> {
    let mut e = GroupElement::identity(g.clone());
    for &(atom, positive) in letters {
        let a = GroupElement::atom(g.clone(), atom);
        e = if positive { e.mul(&a) } else { e.mul(&a.inverse()) };
    }
    e
}

fn signed_word(atoms: usize, max_len: usize) -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0..atoms, any::<bool>()), 0..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn normal_forms_are_normal_and_round_trip(letters in signed_word(3, 12)) {
        let g = artin(4);
        let e = element_from_letters(&g, &letters);
        prop_assert!(e.is_normal_form());
        let printed = garside::element_to_string(&e);
        prop_assert_eq!(parse_element(&g, &printed).unwrap(), e);
    }

    #[test]
    fn group_laws_hold(
        a in signed_word(3, 8),
        b in signed_word(3, 8),
        c in signed_word(3, 8),
    ) {
        let g = artin(4);
        let (a, b, c) = (
            element_from_letters(&g, &a),
            element_from_letters(&g, &b),
            element_from_letters(&g, &c),
        );
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b).inverse(), b.inverse().mul(&a.inverse()));
        prop_assert!(a.mul(&a.inverse()).is_identity());
    }

    #[test]
    fn powers_match_repeated_multiplication(letters in signed_word(3, 6), k in -3i64..=3) {
        let g = artin(4);
        let e = element_from_letters(&g, &letters);
        let mut expected = GroupElement::identity(g.clone());
        let step = if k >= 0 { e.clone() } else { e.inverse() };
        for _ in 0..k.abs() {
            expected = expected.mul(&step);
        }
        prop_assert_eq!(e.pow(k), expected);
    }

    #[test]
    fn reversed_inverted_word_is_the_inverse(letters in signed_word(3, 10)) {
        let g = artin(4);
        let e = element_from_letters(&g, &letters);
        let reversed: Vec<(usize, bool)> =
            letters.iter().rev().map(|&(a, s)| (a, !s)).collect();
        prop_assert_eq!(element_from_letters(&g, &reversed), e.inverse());
    }

    #[test]
    fn summit_invariants_survive_conjugation(
        a in signed_word(3, 8),
        c in signed_word(3, 6),
    ) {
        let g = artin(4);
        let a = element_from_letters(&g, &a);
        let c = element_from_letters(&g, &c);
        let pa = summit_representative(&a);
        let pb = summit_representative(&a.conjugate_by(&c));
        prop_assert_eq!(pa.summit_inf(), pb.summit_inf());
        prop_assert_eq!(pa.summit_sup(), pb.summit_sup());
    }

    #[test]
    fn bkl_group_laws_hold(a in signed_word(6, 8), b in signed_word(6, 8)) {
        let g = bkl(4);
        let a = element_from_letters(&g, &a);
        let b = element_from_letters(&g, &b);
        prop_assert_eq!(a.mul(&b).inverse(), b.inverse().mul(&a.inverse()));
        prop_assert!(a.mul(&a.inverse()).is_identity());
        prop_assert!(a.is_normal_form());
    }
}

/// One rewriting step by a defining relation of the classical presentation,
/// applied at a random position if any position admits one.
fn artin_rewrite(word: &mut [usize], rng: &mut ChaCha8Rng) -> bool {
    let mut candidates = Vec::new();
    for i in 0..word.len().saturating_sub(1) {
        let (a, b) = (word[i], word[i + 1]);
        if a.abs_diff(b) >= 2 {
            candidates.push((i, 0));
        }
        if i + 2 < word.len() {
            let c = word[i + 2];
            if a == c && a.abs_diff(b) == 1 {
                candidates.push((i, 1));
            }
        }
    }
    let Some(&(i, kind)) = candidates.choose(rng) else {
        return false;
    };
    if kind == 0 {
        word.swap(i, i + 1);
    } else {
        let (a, b) = (word[i], word[i + 1]);
        word[i] = b;
        word[i + 1] = a;
        word[i + 2] = b;
    }
    true
}

#[test]
fn artin_relation_rewrites_never_change_the_normal_form() {
    let g = artin(4);
    let mut rng = ChaCha8Rng::seed_from_u64(0x6172_7469);
    let mut rewritten = 0usize;
    for _ in 0..1000 {
        let len = rng.gen_range(2..=14);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..3)).collect();
        let mut other = word.clone();
        let steps = rng.gen_range(1..=20);
        let mut changed = false;
        for _ in 0..steps {
            changed |= artin_rewrite(&mut other, &mut rng);
        }
        let e1 = element_from_letters(&g, &word.iter().map(|&a| (a, true)).collect::<Vec<_>>());
        let e2 = element_from_letters(&g, &other.iter().map(|&a| (a, true)).collect::<Vec<_>>());
        assert_eq!(e1, e2, "words {word:?} and {other:?} must agree");
        if changed {
            rewritten += 1;
        }
    }
    assert!(rewritten > 800, "rewrites fired on only {rewritten} samples");
}

/// One rewriting step by a defining relation of the band presentation:
/// either a commutation of non-interleaved bands or a rotation of the
/// triangle relation a(t,s)a(s,r) = a(t,r)a(t,s) = a(s,r)a(t,r).
fn bkl_rewrite(g: &BklMonoid, word: &mut [usize], rng: &mut ChaCha8Rng) -> bool {
    #[derive(Clone, Copy)]
    enum Step {
        Swap,
        Replace(usize, usize),
    }
    let mut candidates = Vec::new();
    for i in 0..word.len().saturating_sub(1) {
        let (t, s) = g.atom_pair(word[i]);
        let (r, q) = g.atom_pair(word[i + 1]);
        let sign = (t as i64 - r as i64)
            * (t as i64 - q as i64)
            * (s as i64 - r as i64)
            * (s as i64 - q as i64);
        // Strictly nested or disjoint bands commute; a shared endpoint
        // (sign 0) is a triangle case, not a commutation.
        if sign > 0 {
            candidates.push((i, Step::Swap));
        }
        // a(t,s)·a(s,q) → a(t,q)·a(t,s)
        if s == r {
            let (x, y) = (g.atom_index(t, q).unwrap(), g.atom_index(t, s).unwrap());
            candidates.push((i, Step::Replace(x, y)));
        }
        // a(t,s)·a(t,q) with q > s: → a(q,s)·a(t,s)
        if t == r && q > s {
            let (x, y) = (g.atom_index(q, s).unwrap(), g.atom_index(t, s).unwrap());
            candidates.push((i, Step::Replace(x, y)));
        }
    }
    let Some(&(i, step)) = candidates.choose(rng) else {
        return false;
    };
    match step {
        Step::Swap => word.swap(i, i + 1),
        Step::Replace(x, y) => {
            word[i] = x;
            word[i + 1] = y;
        }
    }
    true
}

#[test]
fn bkl_relation_rewrites_never_change_the_normal_form() {
    for n in [4usize, 5] {
        let g = bkl(n);
        let t = g.atom_count();
        let mut rng = ChaCha8Rng::seed_from_u64(0x626b_6c00 + n as u64);
        let mut rewritten = 0usize;
        for _ in 0..500 {
            let len = rng.gen_range(2..=12);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..t)).collect();
            let mut other = word.clone();
            let steps = rng.gen_range(1..=15);
            let mut changed = false;
            for _ in 0..steps {
                changed |= bkl_rewrite(&g, &mut other, &mut rng);
            }
            let e1 = element_from_letters(&g, &word.iter().map(|&a| (a, true)).collect::<Vec<_>>());
            let e2 =
                element_from_letters(&g, &other.iter().map(|&a| (a, true)).collect::<Vec<_>>());
            assert_eq!(e1, e2, "band words {word:?} and {other:?} must agree");
            if changed {
                rewritten += 1;
            }
        }
        assert!(rewritten > 350, "rewrites fired on only {rewritten} samples");
    }
}

#[test]
fn random_graph_walks_decompose_into_minimal_chains() {
    let g = artin(4);
    let mut rng = ChaCha8Rng::seed_from_u64(0x636861_696e);
    for _ in 0..60 {
        let len = rng.gen_range(1..=6);
        let letters: Vec<(usize, bool)> =
            (0..len).map(|_| (rng.gen_range(0..3), true)).collect();
        let start = element_from_letters(&g, &letters);
        let profile = summit_representative(&start);
        let mut u = profile.representative().clone();
        // A walk along summit arrows gives a conjugator that provably keeps
        // every intermediate point inside the summit class.
        let mut x = GroupElement::identity(g.clone());
        for _ in 0..rng.gen_range(1..=4) {
            let moves = minimal_simple_conjugators(&u, &profile);
            let s = moves.choose(&mut rng).unwrap().clone();
            let step = GroupElement::from_simple(g.clone(), s);
            u = u.conjugate_by(&step);
            x = x.mul(&step);
        }
        let u0 = profile.representative().clone();
        let chain = chain_decompose(&u0, &x, &profile).unwrap();
        let mut acc = GroupElement::identity(g.clone());
        let mut cur = u0.clone();
        for (label, vertex) in &chain {
            let step = GroupElement::from_simple(g.clone(), label.clone());
            acc = acc.mul(&step);
            cur = cur.conjugate_by(&step);
            assert_eq!(&cur, vertex);
            assert!(in_summit(vertex, &profile));
        }
        assert_eq!(acc, x);
        assert_eq!(cur, u0.conjugate_by(&x));
    }
}
