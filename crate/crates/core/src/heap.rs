//! Heaps of words: the labeled posets that encode commutation classes.
//!
//! A [`Heap`] is always stored through the Cartier–Foata normal form of its
//! commutation class, so two heaps over the same graph are isomorphic exactly
//! when they compare equal.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{canonical_unchecked, CoxeterGraph, Family, Gen, Word};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn intersects(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn meet_count(&self, other: &Bits) -> usize {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }
}

/// Heap of a word: elements are the letters of the canonical word, ordered by
/// the transitive closure of "earlier and not commuting".
#[derive(Clone)]
pub struct Heap {
    labels: Vec<Gen>,
    below: Vec<Bits>,
    above: Vec<Bits>,
}

impl PartialEq for Heap {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for Heap {}

impl std::hash::Hash for Heap {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.labels.hash(state);
    }
}

impl fmt::Debug for Heap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Heap").field(&self.labels).finish()
    }
}

/// Builds `H(w)`.
pub fn heap_from_word(w: &Word, g: &CoxeterGraph) -> Result<Heap> {
    g.check_word(w)?;
    Ok(Heap::build(w.letters(), g))
}

impl Heap {
    pub(crate) fn build(letters: &[Gen], g: &CoxeterGraph) -> Heap {
        let labels = canonical_unchecked(letters, g).0;
        Heap::from_canonical(labels, g)
    }

    /// `labels` must already be in canonical order.
    pub(crate) fn from_canonical(labels: Vec<Gen>, g: &CoxeterGraph) -> Heap {
        let n = labels.len();
        let mut below: Vec<Bits> = Vec::with_capacity(n);
        // last occurrence of each generator so far
        let mut last: Vec<Option<usize>> = vec![None; g.len()];
        for (j, &s) in labels.iter().enumerate() {
            let mut b = Bits::new(n);
            let covers = std::iter::once(s).chain(g.neighbors(s).iter().copied());
            for t in covers {
                if let Some(i) = last[t as usize] {
                    b.set(i);
                    let prev = below[i].clone();
                    b.union_with(&prev);
                }
            }
            below.push(b);
            last[s as usize] = Some(j);
        }
        let mut above = vec![Bits::new(n); n];
        for (j, b) in below.iter().enumerate() {
            for (i, row) in above.iter_mut().enumerate().take(j) {
                if b.get(i) {
                    row.set(j);
                }
            }
        }
        Heap { labels, below, above }
    }

    pub fn empty() -> Heap {
        Heap { labels: Vec::new(), below: Vec::new(), above: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Label of element `i`.
    pub fn label(&self, i: usize) -> Gen {
        self.labels[i]
    }

    /// The canonical (Cartier–Foata) word of the heap.
    pub fn word(&self) -> Word {
        Word(self.labels.clone())
    }

    pub fn labels(&self) -> &[Gen] {
        &self.labels
    }

    /// Strict order `i < j`.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.below[j].get(i)
    }

    /// Number of elements labeled `s`, i.e. `|H_s|`.
    pub fn count(&self, s: Gen) -> usize {
        self.labels.iter().filter(|&&x| x == s).count()
    }

    /// The chain `H_S` for a set of labels, bottom to top.
    pub fn chain(&self, labels: &[Gen]) -> Vec<usize> {
        (0..self.len()).filter(|&i| labels.contains(&self.labels[i])).collect()
    }

    /// True when some element lies strictly between `i` and `j`.
    pub fn has_between(&self, i: usize, j: usize) -> bool {
        self.above[i].intersects(&self.below[j])
    }

    /// Number of elements strictly between `i` and `j`.
    pub fn between_count(&self, i: usize, j: usize) -> usize {
        self.above[i].meet_count(&self.below[j])
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.above[i].is_empty()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_maximal(i)).collect()
    }

    /// Topmost element labeled `s`.
    pub fn top(&self, s: Gen) -> Option<usize> {
        self.labels.iter().rposition(|&x| x == s)
    }

    /// Subword of the canonical word keeping the given labels; this is the
    /// heap `H_I` when `I` is cut off from the rest of the graph by a single
    /// vertex or is an order ideal.
    pub fn restrict(&self, labels: &[Gen]) -> Word {
        Word(self.labels.iter().copied().filter(|s| labels.contains(s)).collect())
    }

    /// Heap with element `i` removed (meaningful for maximal or minimal `i`).
    pub fn without(&self, i: usize, g: &CoxeterGraph) -> Heap {
        let mut letters = self.labels.clone();
        letters.remove(i);
        Heap::build(&letters, g)
    }

    /// Heap obtained by keeping the elements selected by `keep`.
    pub fn subheap(&self, keep: impl Fn(usize) -> bool, g: &CoxeterGraph) -> Heap {
        let letters: Vec<Gen> = (0..self.len()).filter(|&i| keep(i)).map(|i| self.labels[i]).collect();
        Heap::build(&letters, g)
    }

    /// For a reduced FC heap, whether stacking a new maximal element labeled
    /// `s` on top keeps it reduced FC. Any new convex `ss` or braid chain has
    /// to end at the new element, so only those chains are checked.
    pub(crate) fn extends_fc(&self, s: Gen, g: &CoxeterGraph) -> bool {
        let n = self.len();
        let mut under = Bits::new(n);
        for t in std::iter::once(s).chain(g.neighbors(s).iter().copied()) {
            if let Some(i) = self.top(t) {
                under.set(i);
                under.union_with(&self.below[i]);
            }
        }
        let inside = |i: usize| self.above[i].meet_count(&under);
        if let Some(i) = self.top(s) {
            if inside(i) == 0 {
                return false;
            }
        }
        for &t in g.neighbors(s) {
            let Some(m) = g.m(s, t) else { continue };
            let m = m as usize;
            let chain = self.chain(&[s, t]);
            if chain.len() + 1 < m {
                continue;
            }
            let tail = &chain[chain.len() + 1 - m..];
            let mut want = t;
            let alternates = tail.iter().rev().all(|&i| {
                let ok = self.labels[i] == want;
                want = if want == s { t } else { s };
                ok
            });
            if alternates && inside(tail[0]) == m - 2 {
                return false;
            }
        }
        true
    }

    pub fn display<'a>(&'a self, g: &'a CoxeterGraph) -> impl fmt::Display + 'a {
        HeapDisplay(self, g)
    }
}

struct HeapDisplay<'a>(&'a Heap, &'a CoxeterGraph);

impl fmt::Display for HeapDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.1.format_word(&self.0.word()))
    }
}

/// Class of a fully commutative involution in type `B` or `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FiniteInvolutionClass {
    Alternating,
    /// Self-dual right-peak with its (unique) index `j`.
    RightPeak(usize),
}

/// Reduced and fully commutative: no convex chain `s s` and no convex
/// alternating chain `s t s ⋯` of length `m_st` for finite `m_st ≥ 3`.
pub fn is_reduced_fc(h: &Heap, g: &CoxeterGraph) -> bool {
    for s in g.generators() {
        let chain = h.chain(&[s]);
        if chain.windows(2).any(|p| !h.has_between(p[0], p[1])) {
            return false;
        }
    }
    for (s, t) in g.edges() {
        let Some(m) = g.m(s, t) else { continue };
        let m = m as usize;
        let chain = h.chain(&[s, t]);
        if chain.len() < m {
            continue;
        }
        // a braid chain: m alternating labels whose interval holds nothing else
        for win in chain.windows(m) {
            let alternates = win.windows(2).all(|p| h.labels[p[0]] != h.labels[p[1]]);
            if alternates && h.between_count(win[0], win[m - 1]) == m - 2 {
                return false;
            }
        }
    }
    true
}

/// The dual heap (reversed order, same labels).
pub fn dual(h: &Heap, g: &CoxeterGraph) -> Heap {
    Heap::build(&h.word().reversed().0, g)
}

pub fn is_self_dual(h: &Heap, g: &CoxeterGraph) -> bool {
    canonical_unchecked(&h.word().reversed().0, g).0 == h.labels
}

/// Labels of the maximal elements, which are the right descents of the
/// fully commutative element.
pub fn right_descents(h: &Heap, g: &CoxeterGraph) -> Result<Vec<Gen>> {
    if !is_reduced_fc(h, g) {
        return Err(Error::NotFullyCommutative);
    }
    Ok(maximal_labels(h))
}

pub(crate) fn maximal_labels(h: &Heap) -> Vec<Gen> {
    let mut out: Vec<Gen> = h.maximal_elements().into_iter().map(|i| h.label(i)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn major_index(h: &Heap, g: &CoxeterGraph) -> Result<u32> {
    if !g.has_maj() {
        return Err(Error::MajUndefined(g.family()));
    }
    Ok(right_descents(h, g)?.into_iter().filter_map(|s| g.maj_weight(s)).sum())
}

/// Every edge chain `H_{s,t}` alternates its labels. Along a fork, the two
/// leaves act jointly as the partner of the hub: between two hub elements
/// there is a single leaf or the commuting pair of both leaves.
pub fn is_alternating(h: &Heap, g: &CoxeterGraph) -> bool {
    let in_fork = |s: Gen, t: Gen| {
        g.forks().iter().any(|f| {
            (f.hub == s && f.leaves.contains(&t)) || (f.hub == t && f.leaves.contains(&s))
        })
    };
    for (s, t) in g.edges() {
        if in_fork(s, t) {
            continue;
        }
        let chain = h.chain(&[s, t]);
        if chain.windows(2).any(|p| h.label(p[0]) == h.label(p[1])) {
            return false;
        }
    }
    g.forks().iter().all(|f| fork_alternates(h, f.hub, f.leaves))
}

/// Fork chain read as a `B`-type edge chain hub / leaf: hubs and leaf groups
/// alternate, consecutive leaves swap labels, and the commuting pair of both
/// leaves is allowed only as the sole leaf group.
fn fork_alternates(h: &Heap, hub: Gen, leaves: [Gen; 2]) -> bool {
    let chain = h.chain(&[hub, leaves[0], leaves[1]]);
    let mut groups: Vec<Vec<Gen>> = vec![Vec::new()];
    for &i in &chain {
        let s = h.label(i);
        if s == hub {
            groups.push(Vec::new());
        } else {
            groups.last_mut().expect("nonempty").push(s);
        }
    }
    // groups strictly between two hubs
    let last = groups.len() - 1;
    if groups.iter().enumerate().any(|(k, g)| k > 0 && k < last && g.is_empty()) {
        return false;
    }
    if !groups.iter().all(|g| leaf_group_ok(g)) {
        return false;
    }
    let nonempty: Vec<&Vec<Gen>> = groups.iter().filter(|g| !g.is_empty()).collect();
    if nonempty.len() > 1 && nonempty.iter().any(|g| g.len() == 2) {
        return false;
    }
    nonempty.windows(2).all(|p| p[0][0] != p[1][0])
}

fn leaf_group_ok(group: &[Gen]) -> bool {
    match group {
        [] | [_] => true,
        [a, b] => a != b,
        _ => false,
    }
}

/// Self-dual heap in the alternating class. For types `B` and `D` a heap that
/// also reads as a right-peak (such as `s_1 s_2 s_1` on `B_2`) belongs to the
/// right-peak class instead, so the two classes partition the involutions.
pub fn in_alternating_class(h: &Heap, g: &CoxeterGraph) -> bool {
    if !is_self_dual(h, g) {
        return false;
    }
    match g.family() {
        Family::B | Family::D => {
            matches!(classify_involution(h, g), Ok(FiniteInvolutionClass::Alternating))
        }
        _ => is_alternating(h, g),
    }
}

/// Sorts a self-dual fully commutative heap of type `B_n` or `D_{n+1}` into
/// the alternating class or a right-peak with its index `j`.
pub fn classify_involution(h: &Heap, g: &CoxeterGraph) -> Result<FiniteInvolutionClass> {
    let fam = g.family();
    if !matches!(fam, Family::B | Family::D) {
        return Err(Error::UnsupportedFamily(fam));
    }
    let n = g.rank();
    // s_i has id i - 1 in both families
    let id = |i: usize| (i - 1) as Gen;
    let mut found = Vec::new();
    for j in 1..n {
        let peak_labels: Vec<Gen> = match fam {
            Family::B => (j..=n).map(id).collect(),
            _ => (j..=n + 1).map(id).collect(),
        };
        let mut template: Vec<Gen> = (j..n).map(id).collect();
        template.push(id(n));
        if fam == Family::D {
            template.push(id(n + 1));
        }
        template.extend((j..n).rev().map(id));
        // (a) / (a')
        if canonical_unchecked(&h.restrict(&peak_labels).0, g).0
            != canonical_unchecked(&template, g).0
        {
            continue;
        }
        // (b)
        if j > 1 {
            let pair = h.restrict(&[id(j - 1), id(j)]).0;
            let (sj, sp) = (id(j), id(j - 1));
            if pair != [sj, sj] && pair != [sp, sj, sj, sp] {
                continue;
            }
        }
        // (c)
        let low: Vec<Gen> = (1..=j).map(id).collect();
        let mut rest = h.restrict(&low).0;
        if let Some(pos) = rest.iter().rposition(|&s| s == id(j)) {
            rest.remove(pos);
        }
        let rest = Heap::build(&rest, g);
        // the rest must itself be a fully commutative heap; without this a
        // peak can be read at two indices (s_1 s_2 s_3 s_2 s_1 on B_3)
        if is_reduced_fc(&rest, g) && is_self_dual(&rest, g) && is_alternating(&rest, g) {
            found.push(j);
        }
    }
    match found.as_slice() {
        [j] => Ok(FiniteInvolutionClass::RightPeak(*j)),
        [] if is_alternating(h, g) => Ok(FiniteInvolutionClass::Alternating),
        [] => Err(Error::Classification(g.format_word(&h.word()))),
        _ => Err(Error::Classification(format!(
            "several right-peak indices {found:?} for {}",
            g.format_word(&h.word())
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_graph, GroupType};

    fn graph(f: Family, n: usize) -> CoxeterGraph {
        build_graph(GroupType::new(f, n).unwrap()).unwrap()
    }

    fn heap(g: &CoxeterGraph, w: &str) -> Heap {
        heap_from_word(&g.parse_word(w).unwrap(), g).unwrap()
    }

    #[test]
    fn heap_shapes() {
        let a4 = graph(Family::A, 5);
        let h = heap(&a4, "s_1 s_3");
        assert_eq!(h.len(), 2);
        assert!(!h.less(0, 1) && !h.less(1, 0));

        let a3 = graph(Family::A, 4);
        let h = heap(&a3, "s_1 s_2 s_1");
        assert!(h.less(0, 1) && h.less(1, 2) && h.less(0, 2));

        let h = heap(&a3, "s_2 s_1 s_3 s_2");
        assert_eq!(a3.format_word(&h.word()), "s_2 s_1 s_3 s_2");
        assert!(h.less(0, 1) && h.less(0, 2) && h.less(1, 3) && h.less(2, 3));
        assert!(!h.less(1, 2) && !h.less(2, 1));
        assert_eq!(h.maximal_elements(), [3]);
    }

    #[test]
    fn fc_examples() {
        let a3 = graph(Family::A, 4);
        let b2 = graph(Family::B, 2);
        assert!(!is_reduced_fc(&heap(&a3, "s_1 s_2 s_1"), &a3));
        assert!(is_reduced_fc(&heap(&b2, "s_1 s_2 s_1"), &b2));
        assert!(!is_reduced_fc(&heap(&b2, "s_1 s_2 s_1 s_2"), &b2));
        assert!(is_reduced_fc(&heap(&a3, "s_2 s_1 s_3 s_2"), &a3));
        assert!(!is_reduced_fc(&heap(&a3, "s_1 s_3 s_1"), &a3));
        // s_2 between the two s_1 blocks the square
        assert!(!is_reduced_fc(&heap(&a3, "s_1 s_2 s_3 s_2"), &a3));
        assert!(is_reduced_fc(&heap(&a3, "s_1 s_2 s_3"), &a3));
    }

    #[test]
    fn duality_examples() {
        let a3 = graph(Family::A, 4);
        let a4 = graph(Family::A, 5);
        let h = heap(&a3, "s_1 s_2");
        assert!(!is_self_dual(&h, &a3));
        assert_eq!(dual(&h, &a3), heap(&a3, "s_2 s_1"));
        assert!(is_self_dual(&heap(&a4, "s_1 s_3"), &a4));
        assert!(is_self_dual(&heap(&a3, "s_2 s_1 s_3 s_2"), &a3));
    }

    #[test]
    fn descents_and_maj() {
        let b2 = graph(Family::B, 2);
        let a3 = graph(Family::A, 4);
        let a4 = graph(Family::A, 5);
        assert_eq!(right_descents(&heap(&b2, "s_1 s_2 s_1"), &b2).unwrap(), [0]);
        assert!(right_descents(&Heap::empty(), &b2).unwrap().is_empty());
        assert_eq!(right_descents(&heap(&a4, "s_1 s_3"), &a4).unwrap(), [0, 2]);
        assert_eq!(major_index(&Heap::empty(), &a3).unwrap(), 0);
        assert_eq!(major_index(&heap(&a3, "s_2"), &a3).unwrap(), 2);
        assert_eq!(major_index(&heap(&a3, "s_2 s_1 s_3 s_2"), &a3).unwrap(), 2);
        assert_eq!(
            right_descents(&heap(&a3, "s_1 s_2 s_1"), &a3),
            Err(Error::NotFullyCommutative)
        );
        let c = graph(Family::AffC, 2);
        assert_eq!(major_index(&heap(&c, "s_0"), &c), Err(Error::MajUndefined(Family::AffC)));
    }

    #[test]
    fn alternation() {
        let b2 = graph(Family::B, 2);
        let b3 = graph(Family::B, 3);
        assert!(is_alternating(&heap(&b2, "s_1 s_2 s_1"), &b2));
        assert!(!is_alternating(&heap(&b3, "s_1 s_2 s_3 s_2 s_1"), &b3));
        assert!(is_alternating(&Heap::empty(), &b3));
        let d4 = graph(Family::D, 3);
        // fork leaves s_3, s_4 hang off s_2
        assert!(is_alternating(&heap(&d4, "s_3 s_4"), &d4));
        assert!(is_alternating(&heap(&d4, "s_3 s_2 s_1 s_4 s_2 s_3"), &d4));
        assert!(is_alternating(&heap(&d4, "s_3 s_2 s_4"), &d4));
        // H_{s_1,s_2} reads s_2 s_2
        assert!(!is_alternating(&heap(&d4, "s_3 s_2 s_4 s_2 s_3"), &d4));
        assert!(!is_alternating(&heap(&d4, "s_2 s_3 s_4 s_2"), &d4));
        // leaves must swap
        assert!(!is_alternating(&heap(&d4, "s_3 s_2 s_1 s_3 s_2 s_4"), &d4));
        assert!(!is_alternating(&heap(&d4, "s_3 s_4 s_2 s_1 s_3"), &d4));
        assert!(!is_alternating(&heap(&d4, "s_3 s_2 s_1 s_2 s_3"), &d4));
        assert!(!is_alternating(&heap(&d4, "s_2 s_3 s_3 s_2"), &d4));
    }

    #[test]
    fn classification_examples() {
        let b2 = graph(Family::B, 2);
        let b3 = graph(Family::B, 3);
        assert_eq!(
            classify_involution(&heap(&b2, "s_2 s_1 s_2"), &b2).unwrap(),
            FiniteInvolutionClass::Alternating
        );
        assert_eq!(
            classify_involution(&heap(&b2, "s_1 s_2 s_1"), &b2).unwrap(),
            FiniteInvolutionClass::RightPeak(1)
        );
        assert_eq!(
            classify_involution(&heap(&b3, "s_1 s_2 s_3 s_2 s_1"), &b3).unwrap(),
            FiniteInvolutionClass::RightPeak(1)
        );
        assert_eq!(
            classify_involution(&heap(&b3, "s_2 s_3 s_2"), &b3).unwrap(),
            FiniteInvolutionClass::RightPeak(2)
        );
        assert!(classify_involution(&heap(&b3, "s_1 s_2 s_3 s_2 s_1 s_2"), &b3).is_err());
        let d3 = graph(Family::D, 2);
        assert_eq!(
            classify_involution(&heap(&d3, "s_1 s_2 s_3 s_1"), &d3).unwrap(),
            FiniteInvolutionClass::RightPeak(1)
        );
        assert_eq!(
            classify_involution(&heap(&d3, "s_2 s_3"), &d3).unwrap(),
            FiniteInvolutionClass::Alternating
        );
    }
}
