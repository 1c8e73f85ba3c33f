//! Brute-force enumeration of fully commutative elements by breadth-first
//! search over canonical words.

use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::{CoxeterGraph, Gen, Word};
use crate::error::{Error, Result};
use crate::heap::{in_alternating_class, is_self_dual, major_index, Heap};
use crate::poly::TPoly;

/// Default cap on the number of elements in one BFS layer.
pub const DEFAULT_LAYER_BOUND: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Filter {
    All,
    Involutions,
    AlternatingInvolutions,
}

impl Filter {
    pub fn accepts(self, h: &Heap, g: &CoxeterGraph) -> bool {
        match self {
            Filter::All => true,
            Filter::Involutions => is_self_dual(h, g),
            Filter::AlternatingInvolutions => in_alternating_class(h, g),
        }
    }
}

/// Iterator over the layers `ℓ = 0, 1, …` of fully commutative elements,
/// each layer sorted by canonical word.
pub struct FcLayers<'g> {
    g: &'g CoxeterGraph,
    current: Option<Vec<Vec<Gen>>>,
    length: usize,
    bound: usize,
}

impl<'g> FcLayers<'g> {
    pub fn new(g: &'g CoxeterGraph) -> Self {
        FcLayers { g, current: None, length: 0, bound: DEFAULT_LAYER_BOUND }
    }

    pub fn with_bound(mut self, bound: usize) -> Self {
        self.bound = bound;
        self
    }
}

impl Iterator for FcLayers<'_> {
    type Item = Result<Vec<Vec<Gen>>>;

    fn next(&mut self) -> Option<Self::Item> {
        let next = match &self.current {
            None => vec![Vec::new()],
            Some(layer) if layer.is_empty() => return None,
            Some(layer) => {
                self.length += 1;
                let next = grow(layer, self.g);
                if next.len() > self.bound {
                    self.current = Some(Vec::new());
                    return Some(Err(Error::LayerOverflow { length: self.length, bound: self.bound }));
                }
                next
            }
        };
        self.current = Some(next.clone());
        Some(Ok(next))
    }
}

/// Right extensions `w·s` of a layer that stay fully commutative, as sorted
/// distinct canonical words.
fn grow(layer: &[Vec<Gen>], g: &CoxeterGraph) -> Vec<Vec<Gen>> {
    let mut out: Vec<Vec<Gen>> = layer
        .par_iter()
        .flat_map_iter(|w| {
            let h = Heap::from_canonical(w.clone(), g);
            let levels = g.foata_levels(w);
            let mut last_level = vec![0usize; g.len()];
            for (&s, &l) in w.iter().zip(&levels) {
                last_level[s as usize] = l;
            }
            g.generators()
                .filter(|&s| h.top(s).is_none_or(|i| !h.is_maximal(i)))
                .filter(|&s| h.extends_fc(s, g))
                .map(|s| {
                    let level = g
                        .neighbors(s)
                        .iter()
                        .map(|&t| last_level[t as usize])
                        .fold(last_level[s as usize], usize::max)
                        + 1;
                    let pos = w
                        .iter()
                        .zip(&levels)
                        .position(|(&t, &l)| (l, t) > (level, s))
                        .unwrap_or(w.len());
                    let mut v = Vec::with_capacity(w.len() + 1);
                    v.extend_from_slice(&w[..pos]);
                    v.push(s);
                    v.extend_from_slice(&w[pos..]);
                    v
                })
                .collect::<Vec<_>>()
        })
        .collect();
    out.par_sort_unstable();
    out.dedup();
    out
}

/// Per-length counts, optionally with the accepted elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub filter: Filter,
    pub max_length: usize,
    /// `counts[ℓ]` for `ℓ = 0..=max_length`.
    pub counts: Vec<u64>,
    /// Accepted canonical words per length, when requested.
    #[serde(skip)]
    pub elements: Option<Vec<Vec<Word>>>,
    /// Length at which the BFS ran dry (the group has no longer FC elements).
    pub exhausted_at: Option<usize>,
}

impl Enumeration {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn length_poly(&self) -> TPoly {
        TPoly::from_u64s(&self.counts).truncated(self.max_length)
    }
}

/// Counts fully commutative elements of each length `≤ max_length` passing
/// `filter`.
pub fn enumerate_fc(g: &CoxeterGraph, max_length: usize, filter: Filter, keep: bool) -> Result<Enumeration> {
    enumerate_fc_bounded(g, max_length, filter, keep, DEFAULT_LAYER_BOUND)
}

pub fn enumerate_fc_bounded(
    g: &CoxeterGraph,
    max_length: usize,
    filter: Filter,
    keep: bool,
    bound: usize,
) -> Result<Enumeration> {
    let mut counts = vec![0u64; max_length + 1];
    let mut elements = keep.then(|| vec![Vec::new(); max_length + 1]);
    let mut exhausted_at = None;
    for (len, layer) in FcLayers::new(g).with_bound(bound).enumerate().take(max_length + 1) {
        let layer = layer?;
        if layer.is_empty() {
            exhausted_at = Some(len);
            break;
        }
        let accepted: Vec<Word> = layer
            .into_par_iter()
            .filter(|w| filter.accepts(&Heap::from_canonical(w.clone(), g), g))
            .map(Word)
            .collect();
        counts[len] = accepted.len() as u64;
        if let Some(e) = elements.as_mut() {
            e[len] = accepted;
        }
    }
    Ok(Enumeration { filter, max_length, counts, elements, exhausted_at })
}

/// Every fully commutative involution of a finite group.
pub fn all_involutions(g: &CoxeterGraph) -> Result<Vec<Heap>> {
    if g.family().is_affine() {
        return Err(Error::UnsupportedFamily(g.family()));
    }
    let mut out = Vec::new();
    for layer in FcLayers::new(g) {
        out.extend(
            layer?
                .into_iter()
                .map(|w| Heap::from_canonical(w, g))
                .filter(|h| is_self_dual(h, g)),
        );
    }
    Ok(out)
}

/// `Σ q^{maj}` over the fully commutative involutions of a finite group.
pub fn maj_profile(g: &CoxeterGraph) -> Result<TPoly> {
    if !g.has_maj() {
        return Err(Error::MajUndefined(g.family()));
    }
    let mut acc = TPoly::zero();
    for h in all_involutions(g)? {
        acc += &TPoly::monomial(major_index(&h, g)? as usize, 1u32);
    }
    Ok(acc)
}

/// Length polynomial of the fully commutative involutions of a finite group.
pub fn length_profile(g: &CoxeterGraph) -> Result<TPoly> {
    Ok(all_involutions(g)?.iter().map(|h| TPoly::monomial(h.len(), 1u32)).sum())
}
