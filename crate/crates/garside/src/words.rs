//! Parsing and printing of group elements and simple elements.
//!
//! Grammar: a word is a whitespace-separated list of tokens, each an atom name
//! (`s2`, `a(3,1)`), `D` for Δ, or `1` for the identity, optionally followed by
//! `^<exponent>` with an optional leading minus.  Printing uses the same
//! grammar, so every printed element parses back to itself.

use std::fmt;

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::monoid::GarsideStructure;

fn parse_token<G: GarsideStructure>(
    g: &G,
    index: usize,
    token: &str,
) -> Result<GroupElement<G>> {
    let err = |reason: &str| Error::WordParse {
        index,
        token: token.to_string(),
        reason: reason.to_string(),
    };
    let (base, exp) = match token.split_once('^') {
        None => (token, 1i64),
        Some((base, exp)) => {
            let ok = !exp.is_empty()
                && exp.strip_prefix('-').unwrap_or(exp).bytes().all(|b| b.is_ascii_digit())
                && !exp.strip_prefix('-').unwrap_or(exp).is_empty();
            if !ok {
                return Err(err("exponent must be an optionally negated integer"));
            }
            let e: i64 = exp.parse().map_err(|_| err("exponent out of range"))?;
            (base, e)
        }
    };
    let unit = match base {
        "D" => GroupElement::delta_power(g.clone(), 1),
        "1" => GroupElement::identity(g.clone()),
        _ => match g.parse_atom(base) {
            Some(i) => GroupElement::atom(g.clone(), i),
            None => return Err(err("unknown atom")),
        },
    };
    Ok(unit.pow(exp))
}

/// Parse a group-element word; the empty word is the identity.
pub fn parse_element<G: GarsideStructure>(g: &G, input: &str) -> Result<GroupElement<G>> {
    let mut acc = GroupElement::identity(g.clone());
    for (index, token) in input.split_whitespace().enumerate() {
        acc = acc.mul(&parse_token(g, index, token)?);
    }
    Ok(acc)
}

/// Parse an atom word that must denote a simple element (a divisor of Δ).
/// Only plain atom tokens and `1` are accepted — no exponents, no `D`.
pub fn parse_simple<G: GarsideStructure>(g: &G, input: &str) -> Result<G::Simple> {
    let mut acc = g.one();
    for (index, token) in input.split_whitespace().enumerate() {
        if token == "1" {
            continue;
        }
        let i = g.parse_atom(token).ok_or_else(|| Error::WordParse {
            index,
            token: token.to_string(),
            reason: "expected an atom".to_string(),
        })?;
        acc = g
            .mul_simples(&acc, &g.atom(i))
            .ok_or_else(|| Error::NotSimple(input.trim().to_string()))?;
    }
    Ok(acc)
}

/// Canonical word of a simple element: its lexicographically least reduced
/// atom word, or `1` for the trivial simple.
pub fn simple_to_string<G: GarsideStructure>(g: &G, s: &G::Simple) -> String {
    if g.is_one(s) {
        return "1".to_string();
    }
    let names: Vec<String> = g.atom_word(s).iter().map(|&i| g.atom_name(i)).collect();
    names.join(" ")
}

/// Canonical word of a group element: `D^p` followed by the factors' words.
pub fn element_to_string<G: GarsideStructure>(e: &GroupElement<G>) -> String {
    let g = e.structure();
    let mut parts = Vec::new();
    match e.inf() {
        0 => {}
        1 => parts.push("D".to_string()),
        p => parts.push(format!("D^{p}")),
    }
    for f in e.factors() {
        parts.push(simple_to_string(g, f));
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

impl<G: GarsideStructure> fmt::Display for GroupElement<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&element_to_string(self))
    }
}
