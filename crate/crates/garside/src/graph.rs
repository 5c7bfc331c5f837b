//! The minimal summit graph Γ, its maximal tree T, and the centralizer
//! generating set read off from the non-tree arrows.
//!
//! Vertices are the summit-class elements; each vertex v carries one arrow
//! (v, s, s⁻¹vs) per minimal simple conjugator s.  Breadth-first discovery in
//! canonical label order fixes Γ, T, and the tree paths γ_v deterministically.
//! Every loop γ_v·s·γ_w⁻¹ conjugates the base to itself; conjugating those
//! loops by the summit witness yields elements of Z(a), and the loops over the
//! non-tree arrows generate the whole centralizer.

use std::collections::HashMap;

use indexmap::IndexSet;
use serde::{Deserialize, Serialize};

use crate::artin::ArtinMonoid;
use crate::bkl::BklMonoid;
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::monoid::GarsideStructure;
use crate::summit::{in_summit, ConjugatorEngine, ConjugatorMethod, SummitProfile};
use crate::words::{element_to_string, parse_element, parse_simple, simple_to_string};

/// Structure naming for file formats: a tag plus the strand count is enough to
/// reconstruct either braid instance.
pub trait StructureId: GarsideStructure {
    fn kind(&self) -> &'static str;
    fn strands(&self) -> usize;
}

impl StructureId for ArtinMonoid {
    fn kind(&self) -> &'static str {
        "artin"
    }
    fn strands(&self) -> usize {
        ArtinMonoid::strands(self)
    }
}

impl StructureId for BklMonoid {
    fn kind(&self) -> &'static str {
        "bkl"
    }
    fn strands(&self) -> usize {
        BklMonoid::strands(self)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arrow<G: GarsideStructure> {
    pub from: usize,
    pub label: G::Simple,
    pub to: usize,
    pub in_tree: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SummitGraph<G: GarsideStructure> {
    structure: G,
    vertices: Vec<GroupElement<G>>,
    arrows: Vec<Arrow<G>>,
}

impl<G: GarsideStructure> SummitGraph<G> {
    pub fn structure(&self) -> &G {
        &self.structure
    }

    /// The base vertex a′ is always discovered first.
    pub fn base(&self) -> usize {
        0
    }

    pub fn vertices(&self) -> &[GroupElement<G>] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow<G>] {
        &self.arrows
    }

    pub fn vertex_index(&self, v: &GroupElement<G>) -> Option<usize> {
        self.vertices.iter().position(|u| u == v)
    }
}

/// The maximal tree: one parent arrow per non-base vertex, plus the composed
/// path products γ_v (γ of the base is trivial).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpanningTree<G: GarsideStructure> {
    parent_arrow: Vec<Option<usize>>,
    paths: Vec<GroupElement<G>>,
}

impl<G: GarsideStructure> SpanningTree<G> {
    /// Arrow indices of the tree edges, in creation order.
    pub fn edges(&self) -> Vec<usize> {
        let mut e: Vec<usize> = self.parent_arrow.iter().flatten().copied().collect();
        e.sort_unstable();
        e
    }

    /// γ_v as a group element: the product of the labels from the base to v.
    pub fn gamma(&self, v: usize) -> &GroupElement<G> {
        &self.paths[v]
    }

    /// γ_v as the arrow-index path from the base to v.
    pub fn path_arrows(&self, v: usize, graph: &SummitGraph<G>) -> Vec<usize> {
        let mut path = Vec::new();
        let mut cur = v;
        while let Some(a) = self.parent_arrow[cur] {
            path.push(a);
            cur = graph.arrows[a].from;
        }
        path.reverse();
        path
    }
}

#[derive(Clone, Debug)]
pub struct BuildOptions {
    /// Hard cap on the vertex count; exceeding it is an error, not silence.
    pub max_vertices: usize,
    /// Worker threads for frontier expansion; 1 = serial.
    pub threads: usize,
    pub method: ConjugatorMethod,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_vertices: 100_000,
            threads: 1,
            method: ConjugatorMethod::Auto,
        }
    }
}

/// Close the summit class under minimal simple conjugators.
///
/// Vertices are processed FIFO; within a vertex, arrows follow the canonical
/// order of S_v^sum.  The first arrow reaching a vertex is its tree arrow.
/// Expansion may fan out over threads, but results are merged in frontier
/// order, so the output never depends on the schedule.
pub fn build_graph<G: GarsideStructure>(
    profile: &SummitProfile<G>,
    options: &BuildOptions,
) -> Result<(SummitGraph<G>, SpanningTree<G>)> {
    let base = profile.representative().clone();
    let g = base.structure().clone();
    let engine = ConjugatorEngine::new(&g, options.method)?;

    let expand = |v: &GroupElement<G>| -> Vec<(G::Simple, GroupElement<G>)> {
        engine
            .minimal_conjugators(v, profile)
            .into_iter()
            .map(|s| {
                let target = v.conjugate_by(&GroupElement::from_simple(g.clone(), s.clone()));
                (s, target)
            })
            .collect()
    };

    let mut vertices = vec![base.clone()];
    let mut index: HashMap<GroupElement<G>, usize> = HashMap::new();
    index.insert(base, 0);
    let mut arrows: Vec<Arrow<G>> = Vec::new();
    let mut parent_arrow: Vec<Option<usize>> = vec![None];
    let mut paths = vec![GroupElement::identity(g.clone())];

    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let expansions: Vec<Vec<(G::Simple, GroupElement<G>)>> = if options.threads > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(options.threads)
                .build()
                .expect("thread pool");
            pool.install(|| {
                use rayon::prelude::*;
                frontier.par_iter().map(|&v| expand(&vertices[v])).collect()
            })
        } else {
            frontier.iter().map(|&v| expand(&vertices[v])).collect()
        };

        let mut next = Vec::new();
        for (&v, outs) in frontier.iter().zip(expansions) {
            for (s, target) in outs {
                let (to, first_arrival) = match index.get(&target) {
                    Some(&w) => (w, false),
                    None => {
                        if vertices.len() >= options.max_vertices {
                            return Err(Error::VertexCapExceeded {
                                cap: options.max_vertices,
                            });
                        }
                        let w = vertices.len();
                        index.insert(target.clone(), w);
                        vertices.push(target);
                        parent_arrow.push(Some(arrows.len()));
                        let gamma = paths[v].mul(&GroupElement::from_simple(g.clone(), s.clone()));
                        paths.push(gamma);
                        next.push(w);
                        (w, true)
                    }
                };
                arrows.push(Arrow {
                    from: v,
                    label: s,
                    to,
                    in_tree: first_arrival,
                });
            }
        }
        frontier = next;
    }

    let graph = SummitGraph {
        structure: g,
        vertices,
        arrows,
    };
    let tree = SpanningTree {
        parent_arrow,
        paths,
    };
    debug_assert!(validate_graph(&graph, &tree, profile).is_ok());
    Ok((graph, tree))
}

/// Structural invariants: arrows conjugate correctly, the tree has exactly one
/// parent per non-base vertex, paths compose, and everything is reachable.
pub fn validate_graph<G: GarsideStructure>(
    graph: &SummitGraph<G>,
    tree: &SpanningTree<G>,
    profile: &SummitProfile<G>,
) -> Result<()> {
    let g = &graph.structure;
    let n = graph.vertices.len();
    let fail = |msg: String| Err(Error::InvalidGraph(msg));
    if n == 0 || graph.vertices[0] != *profile.representative() {
        return fail("base vertex is not the summit representative".to_string());
    }
    if tree.parent_arrow.len() != n || tree.paths.len() != n {
        return fail("tree tables do not match the vertex count".to_string());
    }
    if graph.arrows.len() > n * g.atom_count().max(1) {
        return fail("arrow count exceeds t·|V|".to_string());
    }
    for (i, v) in graph.vertices.iter().enumerate() {
        if !in_summit(v, profile) {
            return fail(format!("vertex {i} is outside the summit class"));
        }
        if graph.vertices.iter().skip(i + 1).any(|u| u == v) {
            return fail(format!("vertex {i} duplicated"));
        }
    }
    let mut tree_edges = 0;
    for (i, a) in graph.arrows.iter().enumerate() {
        if a.from >= n || a.to >= n {
            return fail(format!("arrow {i} out of range"));
        }
        let conj = graph.vertices[a.from]
            .conjugate_by(&GroupElement::from_simple(g.clone(), a.label.clone()));
        if conj != graph.vertices[a.to] {
            return fail(format!("arrow {i} does not conjugate its source to its target"));
        }
        if a.in_tree {
            tree_edges += 1;
            if tree.parent_arrow[a.to] != Some(i) {
                return fail(format!("tree arrow {i} not recorded as parent of {}", a.to));
            }
        }
    }
    if tree_edges + 1 != n {
        return fail(format!("{tree_edges} tree edges for {n} vertices"));
    }
    if tree.parent_arrow[0].is_some() {
        return fail("base vertex has a parent".to_string());
    }
    if !tree.paths[0].is_identity() {
        return fail("γ of the base is not trivial".to_string());
    }
    for v in 1..n {
        let Some(a) = tree.parent_arrow[v] else {
            return fail(format!("vertex {v} has no tree arrow"));
        };
        let arrow = &graph.arrows[a];
        if !arrow.in_tree || arrow.to != v {
            return fail(format!("parent arrow of {v} is inconsistent"));
        }
        let expected = tree.paths[arrow.from]
            .mul(&GroupElement::from_simple(g.clone(), arrow.label.clone()));
        if expected != tree.paths[v] {
            return fail(format!("γ of vertex {v} does not extend its parent's"));
        }
        // Walking parents must reach the base (acyclicity + connectivity).
        let mut cur = v;
        let mut steps = 0;
        while let Some(p) = tree.parent_arrow[cur] {
            cur = graph.arrows[p].from;
            steps += 1;
            if steps > n {
                return fail(format!("parent chain from {v} does not terminate"));
            }
        }
        if cur != 0 {
            return fail(format!("vertex {v} is not connected to the base"));
        }
        // Chain soundness: γ_v conjugates the base to v.
        if graph.vertices[0].conjugate_by(&tree.paths[v]) != graph.vertices[v] {
            return fail(format!("γ of vertex {v} does not conjugate the base to it"));
        }
    }
    Ok(())
}

/// A finite generating set of a centralizer Z(a), in discovery order, with the
/// witness x (x⁻¹·a·x = summit representative) used to pull loops back to a.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorSet<G: GarsideStructure> {
    generators: Vec<GroupElement<G>>,
    witness: GroupElement<G>,
}

impl<G: GarsideStructure> GeneratorSet<G> {
    pub fn generators(&self) -> &[GroupElement<G>] {
        &self.generators
    }

    pub fn witness(&self) -> &GroupElement<G> {
        &self.witness
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// One centralizer generator per non-tree arrow, x(γ_v·s·γ_w⁻¹)x⁻¹,
/// deduplicated in creation order.
pub fn generators_from_graph<G: GarsideStructure>(
    profile: &SummitProfile<G>,
    graph: &SummitGraph<G>,
    tree: &SpanningTree<G>,
) -> GeneratorSet<G> {
    let g = graph.structure.clone();
    let x = profile.witness().clone();
    let x_inv = x.inverse();
    let mut set: IndexSet<GroupElement<G>> = IndexSet::new();
    for arrow in &graph.arrows {
        if arrow.in_tree {
            continue;
        }
        let loop_elem = tree.paths[arrow.from]
            .mul(&GroupElement::from_simple(g.clone(), arrow.label.clone()))
            .mul(&tree.paths[arrow.to].inverse());
        let gen = x.mul(&loop_elem).mul(&x_inv);
        if !gen.is_identity() {
            set.insert(gen);
        }
    }
    GeneratorSet {
        generators: set.into_iter().collect(),
        witness: x,
    }
}

/// Profile a, build its graph, and read off generators of Z(a).
pub fn centralizer_generators<G: GarsideStructure>(
    a: &GroupElement<G>,
    options: &BuildOptions,
) -> Result<GeneratorSet<G>> {
    let profile = crate::summit::summit_representative(a);
    let (graph, tree) = build_graph(&profile, options)?;
    Ok(generators_from_graph(&profile, &graph, &tree))
}

/// Weight of the canonical word: |p|·len(Δ) plus the factor lengths.  Used to
/// decide which of two interchangeable generators to discard.
fn word_weight<G: GarsideStructure>(e: &GroupElement<G>) -> usize {
    let g = e.structure();
    e.inf().unsigned_abs() as usize * g.delta_len()
        + e.factors().iter().map(|f| g.simple_len(f)).sum::<usize>()
}

/// Conservative reduction: drop the identity, duplicates, inverses of
/// retained elements, and any g with g = w⁻¹hw for a retained h ≠ g and a
/// word w of length ≤ 2 over the other retained elements.  Each removal is
/// justified by an exact equality, so the generated subgroup is unchanged.
/// Among removable elements, the heaviest canonical word goes first, so the
/// simplest spellings survive.
pub fn reduce_generators<G: GarsideStructure>(gs: &GeneratorSet<G>) -> GeneratorSet<G> {
    let mut retained: Vec<GroupElement<G>> = Vec::new();
    for gen in &gs.generators {
        if gen.is_identity() {
            continue;
        }
        if retained.contains(gen) || retained.iter().any(|h| &h.inverse() == gen) {
            continue;
        }
        retained.push(gen.clone());
    }
    loop {
        let mut removable: Vec<usize> = Vec::new();
        for i in 0..retained.len() {
            if is_redundant(&retained[i], &retained) {
                removable.push(i);
            }
        }
        let Some(&victim) = removable.iter().max_by(|&&i, &&j| {
            word_weight(&retained[i])
                .cmp(&word_weight(&retained[j]))
                .then_with(|| retained[i].canonical_cmp(&retained[j]))
        }) else {
            break;
        };
        retained.remove(victim);
    }
    GeneratorSet {
        generators: retained,
        witness: gs.witness.clone(),
    }
}

/// Is g = w⁻¹hw for some retained h ≠ g and word w of length ≤ 2 over the
/// retained elements other than g?
fn is_redundant<G: GarsideStructure>(g: &GroupElement<G>, retained: &[GroupElement<G>]) -> bool {
    let others: Vec<&GroupElement<G>> = retained.iter().filter(|h| *h != g).collect();
    let mut letters: Vec<GroupElement<G>> = Vec::new();
    for h in &others {
        letters.push((*h).clone());
        letters.push(h.inverse());
    }
    let mut conjugators = vec![GroupElement::identity(g.structure().clone())];
    for l in &letters {
        conjugators.push(l.clone());
    }
    for l1 in &letters {
        for l2 in &letters {
            conjugators.push(l1.mul(l2));
        }
    }
    for h in &others {
        for w in &conjugators {
            if h.conjugate_by(w) == *g {
                return true;
            }
        }
    }
    false
}

/// Outcome of a conjugacy test: either a witness c with c⁻¹·a·c = b together
/// with generators of Z(b) (so the full conjugator set is c·Z(b)), or a
/// definitive refusal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConjugacyResult<G: GarsideStructure> {
    Conjugate {
        witness: GroupElement<G>,
        centralizer: GeneratorSet<G>,
    },
    NotConjugate,
}

/// Decide conjugacy by intersecting summit data: a and b are conjugate iff
/// b's summit representative is a vertex of a's summit graph.
pub fn conjugator_coset<G: GarsideStructure>(
    a: &GroupElement<G>,
    b: &GroupElement<G>,
    options: &BuildOptions,
) -> Result<ConjugacyResult<G>> {
    let pa = crate::summit::summit_representative(a);
    let pb = crate::summit::summit_representative(b);
    if pa.summit_inf() != pb.summit_inf() || pa.summit_sup() != pb.summit_sup() {
        return Ok(ConjugacyResult::NotConjugate);
    }
    let (graph_a, tree_a) = build_graph(&pa, options)?;
    let Some(vb) = graph_a.vertex_index(pb.representative()) else {
        return Ok(ConjugacyResult::NotConjugate);
    };
    let witness = pa
        .witness()
        .mul(tree_a.gamma(vb))
        .mul(&pb.witness().inverse());
    debug_assert_eq!(&a.conjugate_by(&witness), b);
    let (graph_b, tree_b) = build_graph(&pb, options)?;
    let centralizer = generators_from_graph(&pb, &graph_b, &tree_b);
    Ok(ConjugacyResult::Conjugate {
        witness,
        centralizer,
    })
}

/// DOT rendering: vertices labeled by normal-form words, arrows by the
/// canonical words of their labels, tree arrows bold.
pub fn to_dot<G: GarsideStructure>(graph: &SummitGraph<G>) -> String {
    let g = &graph.structure;
    let mut out = String::from("digraph summit {\n  rankdir=LR;\n");
    for (i, v) in graph.vertices.iter().enumerate() {
        out.push_str(&format!("  v{} [label=\"{}\"];\n", i, element_to_string(v)));
    }
    for a in &graph.arrows {
        let style = if a.in_tree { " style=bold" } else { "" };
        out.push_str(&format!(
            "  v{} -> v{} [label=\"{}\"{}];\n",
            a.from,
            a.to,
            simple_to_string(g, &a.label),
            style
        ));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct ArrowDoc {
    v: usize,
    s: String,
    w: usize,
    in_tree: bool,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    schema: String,
    structure: String,
    n: usize,
    base: String,
    vertices: Vec<String>,
    arrows: Vec<ArrowDoc>,
    generators: Vec<String>,
}

const GRAPH_SCHEMA: &str = "summit-graph/1";

/// JSON export of a graph plus its generator set.
pub fn graph_to_json<G: StructureId>(
    graph: &SummitGraph<G>,
    generators: &GeneratorSet<G>,
) -> String {
    let g = &graph.structure;
    let doc = GraphDoc {
        schema: GRAPH_SCHEMA.to_string(),
        structure: g.kind().to_string(),
        n: g.strands(),
        base: element_to_string(&graph.vertices[0]),
        vertices: graph.vertices.iter().map(element_to_string).collect(),
        arrows: graph
            .arrows
            .iter()
            .map(|a| ArrowDoc {
                v: a.from,
                s: simple_to_string(g, &a.label),
                w: a.to,
                in_tree: a.in_tree,
            })
            .collect(),
        generators: generators.generators.iter().map(element_to_string).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

/// Re-import a JSON graph, rebuilding the spanning tree and re-checking the
/// structural invariants.
pub fn graph_from_json<G: StructureId>(
    g: &G,
    input: &str,
) -> Result<(SummitGraph<G>, SpanningTree<G>, Vec<GroupElement<G>>)> {
    let doc: GraphDoc = serde_json::from_str(input)?;
    let invalid = |msg: &str| Error::InvalidGraph(msg.to_string());
    if doc.schema != GRAPH_SCHEMA {
        return Err(invalid("unrecognized schema tag"));
    }
    if doc.structure != g.kind() || doc.n != g.strands() {
        return Err(invalid("structure tag does not match this instance"));
    }
    if doc.vertices.is_empty() {
        return Err(invalid("no vertices"));
    }
    if doc.base != doc.vertices[0] {
        return Err(invalid("base is not the first vertex"));
    }
    let vertices: Vec<GroupElement<G>> = doc
        .vertices
        .iter()
        .map(|w| parse_element(g, w))
        .collect::<Result<_>>()?;
    let mut arrows = Vec::with_capacity(doc.arrows.len());
    let mut parent_arrow: Vec<Option<usize>> = vec![None; vertices.len()];
    for (i, a) in doc.arrows.iter().enumerate() {
        if a.v >= vertices.len() || a.w >= vertices.len() {
            return Err(invalid("arrow endpoint out of range"));
        }
        if a.in_tree {
            if a.w == 0 || parent_arrow[a.w].is_some() {
                return Err(invalid("tree arrow targets the base or a doubly-parented vertex"));
            }
            parent_arrow[a.w] = Some(i);
        }
        arrows.push(Arrow {
            from: a.v,
            label: parse_simple(g, &a.s)?,
            to: a.w,
            in_tree: a.in_tree,
        });
    }
    let graph = SummitGraph {
        structure: g.clone(),
        vertices,
        arrows,
    };
    // Rebuild γ paths; parents must form a rooted tree.
    let mut paths: Vec<Option<GroupElement<G>>> = vec![None; graph.vertices.len()];
    paths[0] = Some(GroupElement::identity(g.clone()));
    fn resolve<G: GarsideStructure>(
        v: usize,
        graph: &SummitGraph<G>,
        parent_arrow: &[Option<usize>],
        paths: &mut Vec<Option<GroupElement<G>>>,
        depth: usize,
    ) -> Result<GroupElement<G>> {
        if depth > graph.vertices().len() {
            return Err(Error::InvalidGraph("cyclic tree arrows".to_string()));
        }
        if let Some(p) = &paths[v] {
            return Ok(p.clone());
        }
        let a = parent_arrow[v]
            .ok_or_else(|| Error::InvalidGraph(format!("vertex {v} has no tree arrow")))?;
        let (from, label) = {
            let arrow = &graph.arrows()[a];
            (arrow.from, arrow.label.clone())
        };
        let parent = resolve(from, graph, parent_arrow, paths, depth + 1)?;
        let gamma = parent.mul(&GroupElement::from_simple(
            graph.structure().clone(),
            label,
        ));
        paths[v] = Some(gamma.clone());
        Ok(gamma)
    }
    for v in 0..graph.vertices.len() {
        resolve(v, &graph, &parent_arrow, &mut paths, 0)?;
    }
    let tree = SpanningTree {
        parent_arrow,
        paths: paths.into_iter().map(|p| p.expect("resolved")).collect(),
    };
    for (i, a) in graph.arrows.iter().enumerate() {
        let conj = graph.vertices[a.from]
            .conjugate_by(&GroupElement::from_simple(g.clone(), a.label.clone()));
        if conj != graph.vertices[a.to] {
            return Err(Error::InvalidGraph(format!(
                "arrow {i} does not conjugate its source to its target"
            )));
        }
    }
    let generators = doc
        .generators
        .iter()
        .map(|w| parse_element(g, w))
        .collect::<Result<_>>()?;
    Ok((graph, tree, generators))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::summit::summit_representative;
    use crate::words::parse_element;

    fn b(n: usize) -> ArtinMonoid {
        ArtinMonoid::new(n).unwrap()
    }

    fn el(g: &ArtinMonoid, w: &str) -> GroupElement<ArtinMonoid> {
        parse_element(g, w).unwrap()
    }

    fn words<G: GarsideStructure>(es: &[GroupElement<G>]) -> Vec<String> {
        es.iter().map(element_to_string).collect()
    }

    #[test]
    fn graph_of_sigma1_in_b4() {
        let g = b(4);
        let p = summit_representative(&el(&g, "s1"));
        let (graph, tree) = build_graph(&p, &BuildOptions::default()).unwrap();
        assert_eq!(words(graph.vertices()), ["s1", "s2", "s3"]);
        assert_eq!(graph.arrows().len(), 9);
        assert_eq!(tree.edges().len(), 2);
        assert_eq!(element_to_string(tree.gamma(1)), "s2 s1");
        assert_eq!(element_to_string(tree.gamma(2)), "s2 s1 s3 s2");
        validate_graph(&graph, &tree, &p).unwrap();
    }

    #[test]
    fn graph_of_sigma1_sigma2_in_b4() {
        let g = b(4);
        let p = summit_representative(&el(&g, "s1 s2"));
        let (graph, tree) = build_graph(&p, &BuildOptions::default()).unwrap();
        let mut vs = words(graph.vertices());
        vs.sort();
        assert_eq!(vs, ["s1 s2", "s2 s1", "s2 s3", "s3 s2"]);
        validate_graph(&graph, &tree, &p).unwrap();
    }

    #[test]
    fn graph_of_delta_in_b4_is_a_point_with_loops() {
        let g = b(4);
        let p = summit_representative(&GroupElement::delta_power(g.clone(), 1));
        let (graph, tree) = build_graph(&p, &BuildOptions::default()).unwrap();
        assert_eq!(graph.vertices().len(), 1);
        assert!(tree.edges().is_empty());
        let labels: Vec<String> = graph
            .arrows()
            .iter()
            .map(|a| simple_to_string(&g, &a.label))
            .collect();
        assert_eq!(labels, ["s2", "s1 s3"]);
        assert!(graph.arrows().iter().all(|a| !a.in_tree && a.from == 0 && a.to == 0));
    }

    #[test]
    fn vertex_cap_is_enforced() {
        let g = b(4);
        let p = summit_representative(&el(&g, "s1"));
        let opts = BuildOptions {
            max_vertices: 2,
            ..BuildOptions::default()
        };
        assert!(matches!(
            build_graph(&p, &opts),
            Err(Error::VertexCapExceeded { cap: 2 })
        ));
    }

    #[test]
    fn centralizer_of_sigma1_in_b4_matches_known_set() {
        let g = b(4);
        let a = el(&g, "s1");
        let gens = centralizer_generators(&a, &BuildOptions::default()).unwrap();
        assert!(gens.witness().is_identity());
        let expected: Vec<GroupElement<ArtinMonoid>> = [
            "s1",
            "s3",
            "s2 s1 s1 s2",
            "s2 s1 s3 s2 s2 s3 s1^-1 s2^-1",
        ]
        .iter()
        .map(|w| el(&g, w))
        .collect();
        assert_eq!(gens.generators(), expected.as_slice());
        for x in gens.generators() {
            assert_eq!(a.conjugate_by(x), a);
        }
        let reduced = reduce_generators(&gens);
        let expected_reduced: Vec<GroupElement<ArtinMonoid>> =
            ["s1", "s3", "s2 s1 s1 s2"].iter().map(|w| el(&g, w)).collect();
        assert_eq!(reduced.generators(), expected_reduced.as_slice());
    }

    #[test]
    fn centralizer_of_central_element_yields_the_atoms() {
        let g = b(4);
        let a = GroupElement::delta_power(g.clone(), 2);
        let gens = centralizer_generators(&a, &BuildOptions::default()).unwrap();
        assert_eq!(words(gens.generators()), ["s1", "s2", "s3"]);
        for x in gens.generators() {
            assert_eq!(a.conjugate_by(x), a);
        }
    }

    #[test]
    fn centralizer_of_sigma1_power_in_b3() {
        let g = b(3);
        let a = el(&g, "s1^11");
        let gens = centralizer_generators(&a, &BuildOptions::default()).unwrap();
        for x in gens.generators() {
            assert_eq!(a.conjugate_by(x), a);
        }
        let reduced = reduce_generators(&gens);
        assert_eq!(words(reduced.generators()), ["s1", "s2 s1 s1 s2"]);
    }

    #[test]
    fn reduction_drops_identity_duplicates_and_inverses() {
        let g = b(3);
        let gens = GeneratorSet {
            generators: vec![
                GroupElement::identity(g.clone()),
                el(&g, "s1"),
                el(&g, "s1"),
                el(&g, "s1^-1"),
                el(&g, "s2"),
            ],
            witness: GroupElement::identity(g.clone()),
        };
        let reduced = reduce_generators(&gens);
        assert_eq!(words(reduced.generators()), ["s1", "s2"]);
    }

    #[test]
    fn conjugator_coset_finds_witnesses() {
        let g = b(4);
        let a = el(&g, "s1");
        let b4 = el(&g, "s3");
        match conjugator_coset(&a, &b4, &BuildOptions::default()).unwrap() {
            ConjugacyResult::Conjugate {
                witness,
                centralizer,
            } => {
                assert_eq!(element_to_string(&witness), "s2 s1 s3 s2");
                assert_eq!(a.conjugate_by(&witness), b4);
                for z in centralizer.generators() {
                    assert_eq!(b4.conjugate_by(z), b4);
                }
                // Any coset element conjugates a to b as well.
                for z in centralizer.generators() {
                    assert_eq!(a.conjugate_by(&witness.mul(z)), b4);
                }
            }
            other => panic!("expected conjugate, got {other:?}"),
        }
    }

    #[test]
    fn conjugator_coset_rejects_non_conjugates() {
        let g = b(4);
        let r = conjugator_coset(&el(&g, "s1"), &el(&g, "s1 s1"), &BuildOptions::default());
        assert_eq!(r.unwrap(), ConjugacyResult::NotConjugate);
        // Same inf/sup but different classes: matched only via the vertex set.
        let r = conjugator_coset(&el(&g, "s1 s3"), &el(&g, "s1 s2"), &BuildOptions::default());
        assert_eq!(r.unwrap(), ConjugacyResult::NotConjugate);
    }

    #[test]
    fn self_conjugacy_yields_identity_witness() {
        let g = b(4);
        let a = el(&g, "s1 s2 s3 s2");
        match conjugator_coset(&a, &a, &BuildOptions::default()).unwrap() {
            ConjugacyResult::Conjugate { witness, .. } => {
                assert_eq!(a.conjugate_by(&witness), a);
                assert!(witness.is_identity());
            }
            other => panic!("expected conjugate, got {other:?}"),
        }
    }

    #[test]
    fn dot_output_is_pinned() {
        let g = b(3);
        let p = summit_representative(&el(&g, "s1"));
        let (graph, _tree) = build_graph(&p, &BuildOptions::default()).unwrap();
        let dot = to_dot(&graph);
        let expected = "digraph summit {\n  rankdir=LR;\n  v0 [label=\"s1\"];\n  v1 [label=\"s2\"];\n  v0 -> v0 [label=\"s1\"];\n  v0 -> v1 [label=\"s2 s1\" style=bold];\n  v1 -> v1 [label=\"s2\"];\n  v1 -> v0 [label=\"s1 s2\"];\n}\n";
        assert_eq!(dot, expected);
    }

    #[test]
    fn json_round_trips() {
        let g = b(4);
        let a = el(&g, "s1 s2");
        let p = summit_representative(&a);
        let (graph, tree) = build_graph(&p, &BuildOptions::default()).unwrap();
        let gens = generators_from_graph(&p, &graph, &tree);
        let json = graph_to_json(&graph, &gens);
        let (graph2, tree2, gens2) = graph_from_json(&g, &json).unwrap();
        assert_eq!(graph, graph2);
        assert_eq!(tree, tree2);
        assert_eq!(gens.generators(), gens2.as_slice());
        assert_eq!(graph_to_json(&graph2, &gens), json);
    }

    #[test]
    fn json_import_rejects_corruption() {
        let g = b(4);
        let p = summit_representative(&el(&g, "s1"));
        let (graph, tree) = build_graph(&p, &BuildOptions::default()).unwrap();
        let gens = generators_from_graph(&p, &graph, &tree);
        let json = graph_to_json(&graph, &gens);
        let tampered = json.replace("\"s2\"", "\"s3\"");
        assert!(graph_from_json(&g, &tampered).is_err());
        assert!(graph_from_json(&b(5), &json).is_err());
        let wrong_schema = json.replace("summit-graph/1", "summit-graph/9");
        assert!(graph_from_json(&g, &wrong_schema).is_err());
    }

    #[test]
    fn parallel_build_matches_serial() {
        let g = b(4);
        for w in ["s1", "s1 s2", "s1 s2 s3 s1 s2"] {
            let p = summit_representative(&el(&g, w));
            let serial = build_graph(&p, &BuildOptions::default()).unwrap();
            let parallel = build_graph(
                &p,
                &BuildOptions {
                    threads: 4,
                    ..BuildOptions::default()
                },
            )
            .unwrap();
            assert_eq!(serial.0, parallel.0);
            assert_eq!(serial.1, parallel.1);
        }
    }

    #[test]
    fn loop_elements_centralize_the_base() {
        let g = b(4);
        for w in ["s1 s2", "s1 s2 s3", "s2 s1 s1 s2"] {
            let p = summit_representative(&el(&g, w));
            let (graph, tree) = build_graph(&p, &BuildOptions::default()).unwrap();
            let base = &graph.vertices()[0];
            for a in graph.arrows().iter().filter(|a| !a.in_tree) {
                let loop_elem = tree.paths[a.from]
                    .mul(&GroupElement::from_simple(g.clone(), a.label.clone()))
                    .mul(&tree.paths[a.to].inverse());
                assert_eq!(&base.conjugate_by(&loop_elem), base);
            }
        }
    }
}
