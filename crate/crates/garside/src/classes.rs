//! Conjugacy classes of positive words of a fixed length.
//!
//! All tⁿ positive words of the given length are enumerated and bucketed by
//! conjugacy.  Class membership is decided through the summit machinery: an
//! element belongs to the class whose summit set contains its summit
//! representative, so each new class costs one summit-graph build and every
//! later member only a lookup.  A class is keyed by its canonically least
//! summit vertex, which is intrinsic to the class; that makes chunked and
//! parallel runs merge deterministically.

use std::collections::HashMap;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::graph::{
    build_graph, generators_from_graph, reduce_generators, BuildOptions, StructureId,
};
use crate::monoid::GarsideStructure;
use crate::summit::summit_representative;
use crate::words::{element_to_string, parse_element};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassRow<G: GarsideStructure> {
    /// Canonically least element of the summit class.
    pub representative: GroupElement<G>,
    /// Number of positive words of the sweep length in this class.
    pub class_size: u64,
    /// Number of vertices of the minimal summit graph.
    pub summit_size: usize,
    /// Distinct loop generators of the centralizer of the representative.
    pub raw_generators: usize,
    /// Generators surviving the conservative reduction.
    pub reduced_generators: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassTable<G: GarsideStructure> {
    structure: G,
    length: usize,
    rows: Vec<ClassRow<G>>,
}

impl<G: GarsideStructure> ClassTable<G> {
    pub fn structure(&self) -> &G {
        &self.structure
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn rows(&self) -> &[ClassRow<G>] {
        &self.rows
    }

    /// CSV with a fixed header; fields containing commas or quotes are quoted.
    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("representative,class_size,summit_size,raw_generators,reduced_generators\n");
        for row in &self.rows {
            let word = element_to_string(&row.representative);
            let field = if word.contains(',') || word.contains('"') {
                format!("\"{}\"", word.replace('"', "\"\""))
            } else {
                word
            };
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                field, row.class_size, row.summit_size, row.raw_generators, row.reduced_generators
            ));
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct ClassOptions {
    /// Chunks processed concurrently; 1 = serial.
    pub threads: usize,
    /// Override the automatic chunk count (must be a power of the atom count).
    pub chunk_count: Option<usize>,
    pub build: BuildOptions,
}

impl Default for ClassOptions {
    fn default() -> Self {
        ClassOptions {
            threads: 1,
            chunk_count: None,
            build: BuildOptions::default(),
        }
    }
}

#[derive(Clone, PartialEq, Serialize, Deserialize, Debug)]
struct ClassData {
    class_size: u64,
    summit_size: usize,
    raw_generators: usize,
    reduced_generators: usize,
}

#[derive(Serialize, Deserialize)]
struct CheckpointDoc {
    schema: String,
    structure: String,
    n: usize,
    length: usize,
    chunk_count: usize,
    next_chunk: usize,
    classes: IndexMap<String, ClassData>,
}

const CHECKPOINT_SCHEMA: &str = "classes-checkpoint/1";

/// A resumable sweep over the positive words of one length.  The word space is
/// split into `chunk_count` prefix-defined chunks; chunks are merged strictly
/// in index order, so the resulting table is independent of thread count and
/// chunking.
pub struct ClassSweep<G: GarsideStructure> {
    structure: G,
    length: usize,
    options: ClassOptions,
    chunk_count: usize,
    prefix_len: usize,
    next_chunk: usize,
    classes: IndexMap<String, ClassData>,
}

impl<G: GarsideStructure> ClassSweep<G> {
    pub fn new(structure: G, length: usize, options: ClassOptions) -> Result<Self> {
        let t = structure.atom_count();
        let chunk_count = match options.chunk_count {
            Some(c) => c,
            None if options.threads <= 1 => 1,
            None => {
                let mut c = 1usize;
                while c < 2 * options.threads && c < t.pow(length.min(8) as u32) {
                    c *= t;
                }
                c
            }
        };
        let prefix_len = prefix_len_for(t, chunk_count, length).ok_or_else(|| {
            Error::Precondition(format!(
                "chunk count {chunk_count} is not a power of {t} within length {length}"
            ))
        })?;
        Ok(ClassSweep {
            structure,
            length,
            options,
            chunk_count,
            prefix_len,
            next_chunk: 0,
            classes: IndexMap::new(),
        })
    }

    pub fn is_done(&self) -> bool {
        self.next_chunk >= self.chunk_count
    }

    pub fn chunk_count(&self) -> usize {
        self.chunk_count
    }

    pub fn next_chunk(&self) -> usize {
        self.next_chunk
    }

    /// Process up to `threads` further chunks (in parallel if more than one)
    /// and fold their results in, in chunk order.
    pub fn run_next_batch(&mut self) -> Result<()> {
        if self.is_done() {
            return Ok(());
        }
        let end = (self.next_chunk + self.options.threads.max(1)).min(self.chunk_count);
        let ids: Vec<usize> = (self.next_chunk..end).collect();
        let this: &Self = self;
        let results: Vec<Result<IndexMap<String, ClassData>>> = if ids.len() > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(this.options.threads)
                .build()
                .expect("thread pool");
            pool.install(|| {
                use rayon::prelude::*;
                ids.par_iter().map(|&c| this.process_chunk(c)).collect()
            })
        } else {
            ids.iter().map(|&c| this.process_chunk(c)).collect()
        };
        for chunk in results {
            for (key, data) in chunk? {
                match self.classes.get_mut(&key) {
                    Some(existing) => {
                        debug_assert_eq!(existing.summit_size, data.summit_size);
                        existing.class_size += data.class_size;
                    }
                    None => {
                        self.classes.insert(key, data);
                    }
                }
            }
        }
        self.next_chunk = end;
        Ok(())
    }

    pub fn run_to_completion(&mut self) -> Result<()> {
        while !self.is_done() {
            self.run_next_batch()?;
        }
        Ok(())
    }

    /// Rows in canonical order of their representatives.
    pub fn finish(self) -> Result<ClassTable<G>> {
        if !self.is_done() {
            return Err(Error::Precondition(
                "sweep still has unprocessed chunks".to_string(),
            ));
        }
        let mut rows = Vec::with_capacity(self.classes.len());
        for (key, data) in &self.classes {
            rows.push(ClassRow {
                representative: parse_element(&self.structure, key)?,
                class_size: data.class_size,
                summit_size: data.summit_size,
                raw_generators: data.raw_generators,
                reduced_generators: data.reduced_generators,
            });
        }
        rows.sort_by(|a, b| a.representative.canonical_cmp(&b.representative));
        Ok(ClassTable {
            structure: self.structure,
            length: self.length,
            rows,
        })
    }

    /// One chunk: the words with a fixed base-t prefix.  Elements repeat
    /// heavily across words, and classes across elements, so both layers are
    /// memoized; a class is examined once per chunk at most.
    fn process_chunk(&self, chunk: usize) -> Result<IndexMap<String, ClassData>> {
        let g = &self.structure;
        let t = g.atom_count();
        let atoms: Vec<GroupElement<G>> = (0..t)
            .map(|i| GroupElement::atom(g.clone(), i))
            .collect();

        let mut counts: IndexMap<String, ClassData> = IndexMap::new();
        let mut elem_class: HashMap<GroupElement<G>, String> = HashMap::new();
        let mut vertex_class: HashMap<GroupElement<G>, String> = HashMap::new();

        let mut prefix = GroupElement::identity(g.clone());
        let mut c = chunk;
        let mut digits = vec![0usize; self.prefix_len];
        for d in (0..self.prefix_len).rev() {
            digits[d] = c % t;
            c /= t;
        }
        for &d in &digits {
            prefix = prefix.mul(&atoms[d]);
        }

        let mut stack = vec![(prefix, self.length - self.prefix_len)];
        while let Some((e, remaining)) = stack.pop() {
            if remaining > 0 {
                // Reverse push order keeps visitation lexicographic.
                for a in atoms.iter().rev() {
                    stack.push((e.mul(a), remaining - 1));
                }
                continue;
            }
            let key = match elem_class.get(&e) {
                Some(k) => k.clone(),
                None => {
                    let profile = summit_representative(&e);
                    let k = match vertex_class.get(profile.representative()) {
                        Some(k) => k.clone(),
                        None => {
                            let (graph, _tree) = build_graph(&profile, &self.options.build)?;
                            let rep = graph
                                .vertices()
                                .iter()
                                .min_by(|a, b| a.canonical_cmp(b))
                                .expect("non-empty graph")
                                .clone();
                            let rep_profile = summit_representative(&rep);
                            let (rep_graph, rep_tree) =
                                build_graph(&rep_profile, &self.options.build)?;
                            let gens = generators_from_graph(&rep_profile, &rep_graph, &rep_tree);
                            let reduced = reduce_generators(&gens);
                            let k = element_to_string(&rep);
                            counts.insert(
                                k.clone(),
                                ClassData {
                                    class_size: 0,
                                    summit_size: rep_graph.vertices().len(),
                                    raw_generators: gens.len(),
                                    reduced_generators: reduced.len(),
                                },
                            );
                            for v in rep_graph.vertices() {
                                vertex_class.insert(v.clone(), k.clone());
                            }
                            k
                        }
                    };
                    elem_class.insert(e.clone(), k.clone());
                    k
                }
            };
            counts
                .get_mut(&key)
                .expect("class registered before counting")
                .class_size += 1;
        }
        Ok(counts)
    }
}

impl<G: StructureId> ClassSweep<G> {
    pub fn checkpoint_json(&self) -> String {
        let doc = CheckpointDoc {
            schema: CHECKPOINT_SCHEMA.to_string(),
            structure: self.structure.kind().to_string(),
            n: self.structure.strands(),
            length: self.length,
            chunk_count: self.chunk_count,
            next_chunk: self.next_chunk,
            classes: self.classes.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
    }

    pub fn from_checkpoint(structure: G, input: &str, options: ClassOptions) -> Result<Self> {
        let doc: CheckpointDoc = serde_json::from_str(input)?;
        let invalid = |msg: &str| Error::InvalidCheckpoint(msg.to_string());
        if doc.schema != CHECKPOINT_SCHEMA {
            return Err(invalid("unrecognized schema tag"));
        }
        if doc.structure != structure.kind() || doc.n != structure.strands() {
            return Err(invalid("structure tag does not match this instance"));
        }
        let prefix_len = prefix_len_for(structure.atom_count(), doc.chunk_count, doc.length)
            .ok_or_else(|| invalid("chunk count is not a power of the atom count"))?;
        if doc.next_chunk > doc.chunk_count {
            return Err(invalid("cursor beyond the last chunk"));
        }
        for key in doc.classes.keys() {
            parse_element(&structure, key)
                .map_err(|_| invalid("unparsable class representative"))?;
        }
        Ok(ClassSweep {
            structure,
            length: doc.length,
            options,
            chunk_count: doc.chunk_count,
            prefix_len,
            next_chunk: doc.next_chunk,
            classes: doc.classes,
        })
    }
}

fn prefix_len_for(t: usize, chunk_count: usize, length: usize) -> Option<usize> {
    let mut c = 1usize;
    for d in 0..=length {
        if c == chunk_count {
            return Some(d);
        }
        c = c.checked_mul(t)?;
    }
    None
}

/// Run a whole sweep in one call.
pub fn conjugacy_classes<G: GarsideStructure>(
    structure: &G,
    length: usize,
    options: &ClassOptions,
) -> Result<ClassTable<G>> {
    let mut sweep = ClassSweep::new(structure.clone(), length, options.clone())?;
    sweep.run_to_completion()?;
    sweep.finish()
}
