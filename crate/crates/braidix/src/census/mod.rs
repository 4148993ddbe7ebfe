//! Positive braid census: canonical enumeration, closure classification,
//! reduction searches, irreducibility certificates, the `d_n` pipeline and
//! the two exhaustive word-search procedures.
//!
//! `d_n` is the minimal crossing number of an irreducible positive
//! `n`-braid: a positive braid word whose closure is a prime knot and which
//! no positive braid on fewer strands (equivalently, with fewer crossings)
//! represents.

mod canonical;
mod exhaust;
mod families;
mod pipeline;
pub(crate) mod reduce;
mod subwords;

pub use canonical::{
    canonicalize, enumerate_positive, is_canonical, CanonicalPolicy, IndexSum, PositiveWords,
};
pub use exhaust::{exhaust_length9, square_eliminates_letter, Exhaust9Options, Exhaust9Report};
pub use families::{dn_upper_family, dn_upper_length, rigid_family};
pub use pipeline::{dn_pipeline, DnOptions, DnReport, LayerOutcome};
pub use reduce::{
    irreducible_certificate, markov_reduction_search, reduction_search, three_move_reduce,
    three_move_reduce_with, ReductionResult,
};
pub use subwords::{compose_profiles_17, subword_compose, subword_split};

use crate::error::{Error, Result};
use crate::word::BraidWord;
use rayon::prelude::*;
use std::collections::{HashSet, VecDeque};
use std::fmt;

/// How a positive word's closure is classified by the cheap filters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureClass {
    /// Closure permutation has one cycle and no syntactic split was found.
    Knot,
    /// Closure has more than one component.
    NonKnot,
    /// A conjugate word isolates a generator or splits into blocks with
    /// separated generator supports: the closure is a connected sum (or the
    /// word destabilizes), so it cannot witness irreducibility.
    Composite,
}

/// Classify the closure of a positive word. The connected-sum verdict wins
/// over the component count, so destabilizable words (an isolated generator
/// whose closure may still be a link) are flagged composite/reducible; the
/// composite verdict is a semidecision searched over a bounded Yang-Baxter
/// orbit of cyclic words.
pub fn classify_closure(w: &BraidWord, budget: usize) -> Result<ClosureClass> {
    if !w.is_positive() {
        return Err(Error::Unsupported(
            "classification expects positive words".into(),
        ));
    }
    let knot = w.closure_components() == 1;
    if !knot {
        // non-knots only get the cheap single-word shape check, which is
        // what flags destabilizable link words like σ1²σ2 as composite
        if connected_sum_shape(&w.min_rotation()) {
            return Ok(ClosureClass::Composite);
        }
        return Ok(ClosureClass::NonKnot);
    }
    if syntactic_composite(w, budget) {
        return Ok(ClosureClass::Composite);
    }
    Ok(ClosureClass::Knot)
}

/// Search the Yang-Baxter orbit (cyclic words, bounded by `budget` states)
/// for a connected-sum shape: an isolated generator, or a rotation into two
/// blocks whose generator supports are adjacent (`max(prefix) + 1 =
/// min(suffix)`). A gap between the supports means a split link instead and
/// is left to the component count.
pub(crate) fn syntactic_composite(w: &BraidWord, budget: usize) -> bool {
    let start = w.min_rotation();
    let mut seen: HashSet<Vec<i16>> = HashSet::new();
    let mut queue: VecDeque<BraidWord> = VecDeque::new();
    seen.insert(start.values());
    queue.push_back(start);
    let mut visited = 0usize;
    while let Some(word) = queue.pop_front() {
        visited += 1;
        if connected_sum_shape(&word) {
            return true;
        }
        if visited > budget {
            return false;
        }
        for rot in 0..word.len() {
            let r = word.rotated(rot);
            let mut candidates: [Option<BraidWord>; 3] = [None, None, None];
            if r.len() >= 3 {
                candidates[0] = r.yb_at(0, true);
                candidates[1] = r.yb_at(0, false);
            }
            if r.len() >= 2 {
                candidates[2] = r.commute_at(0);
            }
            for n in candidates.into_iter().flatten() {
                let normal = n.min_rotation();
                if seen.insert(normal.values()) {
                    queue.push_back(normal);
                }
            }
        }
    }
    false
}

fn connected_sum_shape(w: &BraidWord) -> bool {
    let counts = w.letter_counts();
    if counts.iter().skip(1).any(|&c| c == 1) {
        return true;
    }
    // rotation into two blocks with adjacent generator supports
    let n = w.len();
    if n < 2 {
        return false;
    }
    let idx: Vec<usize> = w.letters().iter().map(|l| l.index()).collect();
    for start in 0..n {
        let mut prefix_max = 0usize;
        for k in 0..n - 1 {
            let a = idx[(start + k) % n];
            prefix_max = prefix_max.max(a);
            let suffix_min = (k + 1..n).map(|j| idx[(start + j) % n]).min().unwrap();
            if prefix_max + 1 == suffix_min {
                return true;
            }
        }
    }
    false
}

/// One census line: a canonical positive word with its closure statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub word: BraidWord,
    pub crossings: usize,
    pub strands: usize,
    pub is_knot: bool,
    pub composite: bool,
    /// A strictly smaller positive representation found by the bounded
    /// reduction search: `(strands, crossings, word)`.
    pub reduction: Option<(usize, usize, BraidWord)>,
    pub irreducible_certified: bool,
}

impl fmt::Display for CensusRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let reduction = match &self.reduction {
            Some((s, c, w)) => format!("{s},{c},{w}"),
            None => "-".into(),
        };
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.strands,
            self.crossings,
            self.word,
            if self.is_knot { "knot" } else { "non-knot" },
            if self.composite { "composite" } else { "prime" },
            if self.irreducible_certified {
                "irreducible"
            } else {
                "open"
            },
            reduction,
        )
    }
}

impl CensusRecord {
    /// Parse one tab-separated census line.
    pub fn parse_line(line: &str) -> Result<CensusRecord> {
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 7 {
            return Err(Error::Parse {
                what: "census record",
                text: line.into(),
            });
        }
        let strands: usize = fields[0].parse().map_err(|_| Error::Parse {
            what: "strand count",
            text: fields[0].into(),
        })?;
        let crossings: usize = fields[1].parse().map_err(|_| Error::Parse {
            what: "crossing count",
            text: fields[1].into(),
        })?;
        let word = BraidWord::parse(fields[2], Some(strands))?;
        let reduction = if fields[6] == "-" {
            None
        } else {
            let parts: Vec<&str> = fields[6].splitn(3, ',').collect();
            if parts.len() != 3 {
                return Err(Error::Parse {
                    what: "reduction field",
                    text: fields[6].into(),
                });
            }
            let s: usize = parts[0].parse().map_err(|_| Error::Parse {
                what: "reduction strands",
                text: parts[0].into(),
            })?;
            let c: usize = parts[1].parse().map_err(|_| Error::Parse {
                what: "reduction crossings",
                text: parts[1].into(),
            })?;
            Some((s, c, BraidWord::parse(parts[2], Some(s))?))
        };
        Ok(CensusRecord {
            word,
            crossings,
            strands,
            is_knot: fields[3] == "knot",
            composite: fields[4] == "composite",
            reduction,
            irreducible_certified: fields[5] == "irreducible",
        })
    }
}

/// Census options: budgets for the per-word searches.
#[derive(Debug, Clone, Copy)]
pub struct CensusOptions {
    pub policy: CanonicalPolicy,
    pub classify_budget: usize,
    pub reduction_budget: usize,
    /// Compute certificates for knots only when true (they cost a bracket
    /// evaluation per word).
    pub certify: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            policy: CanonicalPolicy::default(),
            classify_budget: 2_000,
            reduction_budget: 4_000,
            certify: true,
        }
    }
}

fn record_for(word: BraidWord, opts: &CensusOptions) -> Result<CensusRecord> {
    let class = classify_closure(&word, opts.classify_budget)?;
    let is_knot = class != ClosureClass::NonKnot;
    let composite = class == ClosureClass::Composite;
    let mut irreducible_certified = false;
    let mut reduction = None;
    if class == ClosureClass::Knot {
        if opts.certify {
            irreducible_certified = irreducible_certificate(&word)?;
        }
        if !irreducible_certified {
            let found = reduction_search(&word, opts.reduction_budget)?;
            if (found.best_word.strands(), found.best_word.len()) < (word.strands(), word.len()) {
                reduction = Some((
                    found.best_word.strands(),
                    found.best_word.len(),
                    found.best_word,
                ));
            }
        }
    }
    Ok(CensusRecord {
        crossings: word.len(),
        strands: word.strands(),
        is_knot,
        composite,
        reduction,
        irreducible_certified,
        word,
    })
}

/// Run a census over every canonical positive word of the given size.
/// Work is partitioned by word prefix across the rayon pool; the result is
/// sorted by `(strands, crossings, word)` and therefore identical for every
/// worker count.
pub fn run_census(
    strands: usize,
    crossings: usize,
    opts: &CensusOptions,
) -> Result<Vec<CensusRecord>> {
    let words: Vec<BraidWord> = enumerate_positive(strands, crossings, opts.policy);
    let mut records = words
        .into_par_iter()
        .map(|w| record_for(w, opts))
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| {
        (a.strands, a.crossings, a.word.values()).cmp(&(b.strands, b.crossings, b.word.values()))
    });
    Ok(records)
}
