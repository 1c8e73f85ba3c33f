//! Right cells of the affine Temperley–Lieb algebra of type `Ã`, realized as
//! fibers of the reduction map on fully commutative heaps.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::{CoxeterGraph, Family, Gen, Word};
use crate::enumerate::{enumerate_fc, Filter};
use crate::error::{Error, Result};
use crate::heap::{is_reduced_fc, is_self_dual, maximal_labels, Heap};

fn check_affine_a(g: &CoxeterGraph) -> Result<()> {
    match g.family() {
        Family::AffA => Ok(()),
        f => Err(Error::UnsupportedFamily(f)),
    }
}

/// Generators `s_i` such that removing the top `s_i` element exposes a
/// neighbor of `s_i` as a new maximal element.
pub fn reduction_moves(h: &Heap, g: &CoxeterGraph) -> Result<Vec<Gen>> {
    check_affine_a(g)?;
    Ok(moves_unchecked(h, g))
}

fn moves_unchecked(h: &Heap, g: &CoxeterGraph) -> Vec<Gen> {
    maximal_labels(h)
        .into_iter()
        .filter(|&s| {
            let rest = h.without(h.top(s).expect("descent occurs in the heap"), g);
            let exposed = maximal_labels(&rest);
            g.neighbors(s).iter().any(|t| exposed.contains(t))
        })
        .collect()
}

/// Order in which available moves are taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Policy {
    Smallest,
    Random(u64),
}

/// Applies reduction moves until none is available.
pub fn reduce_fully(h: &Heap, g: &CoxeterGraph, policy: Policy) -> Result<Heap> {
    check_affine_a(g)?;
    let mut rng = match policy {
        Policy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        Policy::Smallest => None,
    };
    let mut cur = h.clone();
    loop {
        let moves = moves_unchecked(&cur, g);
        let pick = match rng.as_mut() {
            Some(r) => moves.choose(r).copied(),
            None => moves.first().copied(),
        };
        match pick {
            Some(s) => cur = cur.without(cur.top(s).expect("descent occurs in the heap"), g),
            None => return Ok(cur),
        }
    }
}

/// `top(a) > top(b)` in the heap.
fn top_above(h: &Heap, a: Gen, b: Gen) -> bool {
    match (h.top(a), h.top(b)) {
        (Some(i), Some(j)) => h.less(j, i),
        _ => false,
    }
}

/// Tops of `start, start+1, …, start+len-1` (cyclically) alternate
/// down, up, down, … starting from a peak at `start`.
fn zigzag(h: &Heap, n: usize, start: usize, len: usize) -> bool {
    (0..len - 1).all(|k| {
        let a = ((start + k) % n) as Gen;
        let b = ((start + k + 1) % n) as Gen;
        if k % 2 == 0 {
            top_above(h, a, b)
        } else {
            top_above(h, b, a)
        }
    })
}

/// Irreducibility read off the zigzag pattern of top elements over the
/// support. Singleton support intervals carry no condition.
pub fn is_irreducible_structural(h: &Heap, g: &CoxeterGraph) -> Result<bool> {
    check_affine_a(g)?;
    let n = g.len();
    let present: Vec<bool> = (0..n).map(|i| h.count(i as Gen) > 0).collect();
    if present.iter().all(|&p| p) {
        return Ok(n.is_multiple_of(2) && (zigzag(h, n, 0, n + 1) || zigzag(h, n, 1, n + 1)));
    }
    for start in (0..n).filter(|&i| present[i] && !present[(i + n - 1) % n]) {
        let len = (0..n).take_while(|&k| present[(start + k) % n]).count();
        if len % 2 == 0 || !zigzag(h, n, start, len) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The selected upper ideal of an irreducible heap and its complement, as
/// element indices of the heap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopBottomSplit {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
    /// Number of alternating parity layers, for full support only.
    pub factors: Option<usize>,
}

pub fn split_top_bottom(h: &Heap, g: &CoxeterGraph) -> Result<TopBottomSplit> {
    check_affine_a(g)?;
    if !moves_unchecked(h, g).is_empty() {
        return Err(Error::Domain("heap is reducible".into()));
    }
    let n = g.len();
    let full = (0..n).all(|i| h.count(i as Gen) > 0);
    let mut in_top = vec![false; h.len()];
    let mut factors = 0;
    if full {
        let mut parity: Option<usize> = None;
        loop {
            let layer: Vec<usize> = (0..h.len())
                .filter(|&i| !in_top[i] && (i + 1..h.len()).all(|j| in_top[j] || !h.less(i, j)))
                .collect();
            let mut labels: Vec<usize> = layer.iter().map(|&i| h.label(i) as usize).collect();
            labels.sort_unstable();
            let eps = match labels.first() {
                Some(&l) => l % 2,
                None => break,
            };
            let class: Vec<usize> = (eps..n).step_by(2).collect();
            if labels != class || parity == Some(eps) {
                break;
            }
            for &i in &layer {
                in_top[i] = true;
            }
            parity = Some(eps);
            factors += 1;
        }
    } else {
        for i in h.maximal_elements() {
            in_top[i] = true;
        }
    }
    let (top, bottom) = (0..h.len()).partition(|&i| in_top[i]);
    Ok(TopBottomSplit { top, bottom, factors: full.then_some(factors) })
}

/// The involution of the cell of an irreducible heap: the dual of the bottom
/// part stacked above the heap. `None` when the top part has full support and
/// an even number of layers.
pub fn involution_of(h: &Heap, g: &CoxeterGraph) -> Result<Option<Heap>> {
    let split = split_top_bottom(h, g)?;
    if split.factors.is_some_and(|f| f % 2 == 0) {
        return Ok(None);
    }
    let mut letters = h.labels().to_vec();
    letters.extend(split.bottom.iter().rev().map(|&i| h.label(i)));
    Ok(Some(Heap::build(&letters, g)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellRecord {
    pub irreducible: String,
    pub size: usize,
    pub members: Vec<String>,
    pub involution_members: Vec<String>,
    /// The reconstructed involution, when the cell has one.
    pub involution_of_irreducible: Option<String>,
}

impl CellRecord {
    pub fn involution_member(&self) -> Option<&str> {
        self.involution_members.first().map(String::as_str)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CellAudit {
    /// Fibers holding two or more involutions.
    pub multiple_involutions: Vec<String>,
    /// Irreducibles without involution while `n` is odd.
    pub odd_rank_without_involution: Vec<String>,
    /// Representatives failing either irreducibility test.
    pub not_irreducible: Vec<String>,
    /// Involution members that differ from the reconstruction.
    pub reconstruction_mismatch: Vec<String>,
}

impl CellAudit {
    pub fn passed(&self) -> bool {
        self.multiple_involutions.is_empty()
            && self.odd_rank_without_involution.is_empty()
            && self.not_irreducible.is_empty()
            && self.reconstruction_mismatch.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellsReport {
    pub rank: usize,
    pub max_length: usize,
    pub elements: usize,
    pub cells: Vec<CellRecord>,
    pub audit: CellAudit,
    pub passed: bool,
}

/// Groups every FC element of length `≤ max_length` by its irreducible and
/// audits the cell/involution correspondence.
pub fn cells_report(g: &CoxeterGraph, max_length: usize) -> Result<CellsReport> {
    check_affine_a(g)?;
    let n = g.len();
    let all = enumerate_fc(g, max_length, Filter::All, true)?;
    let words: Vec<Word> = all.elements.expect("elements kept").into_iter().flatten().collect();
    let reduced: Vec<(Word, Heap, Heap)> = words
        .into_par_iter()
        .map(|w| {
            let h = Heap::from_canonical(w.0.clone(), g);
            let r = reduce_fully(&h, g, Policy::Smallest)?;
            Ok((w, h, r))
        })
        .collect::<Result<_>>()?;

    let mut fibers: BTreeMap<Word, (Heap, Vec<Word>, Vec<Word>)> = BTreeMap::new();
    for (w, h, r) in reduced {
        let entry = fibers.entry(r.word()).or_insert_with(|| (r, Vec::new(), Vec::new()));
        if is_self_dual(&h, g) {
            entry.2.push(w.clone());
        }
        entry.1.push(w);
    }

    let mut audit = CellAudit::default();
    let mut cells = Vec::with_capacity(fibers.len());
    for (key, (rep, members, involutions)) in fibers {
        let name = g.format_word(&key);
        let inv = involution_of(&rep, g)?;
        if involutions.len() > 1 {
            audit.multiple_involutions.push(name.clone());
        }
        if inv.is_none() && n % 2 == 1 {
            audit.odd_rank_without_involution.push(name.clone());
        }
        if !moves_unchecked(&rep, g).is_empty() || !is_irreducible_structural(&rep, g)? {
            audit.not_irreducible.push(name.clone());
        }
        let rebuilt = inv.as_ref().filter(|v| is_reduced_fc(v, g) && is_self_dual(v, g));
        for v in &involutions {
            if rebuilt.is_none_or(|r| r.word() != *v) {
                audit.reconstruction_mismatch.push(g.format_word(v));
            }
        }
        cells.push(CellRecord {
            irreducible: name,
            size: members.len(),
            members: members.iter().map(|w| g.format_word(w)).collect(),
            involution_members: involutions.iter().map(|w| g.format_word(w)).collect(),
            involution_of_irreducible: inv.map(|v| g.format_word(&v.word())),
        });
    }
    let passed = audit.passed();
    Ok(CellsReport { rank: n, max_length, elements: all.counts.iter().sum::<u64>() as usize, cells, audit, passed })
}
