//! Coxeter graphs of the classical finite and affine families, words over
//! their generators and commutation classes.
//!
//! Generators are small integer ids. The display names follow the indexing in
//! which the major index of a finite-type element is the sum of the indices of
//! its right descents: `s_1..s_{n-1}` for `A_{n-1}`, `s_1..s_n` for `B_n` (with
//! the 4-bond at the high end), `s_1..s_{n+1}` for `D_{n+1}` (fork at the high
//! end), `s_0..s_{n-1}` for the cycle `Ã_{n-1}`, `s_0..s_n` for `C̃_n`,
//! `s_0..s_{n+1}` for `B̃_{n+1}`, and `u_0, u_1, s_1..s_{n+1}` for `D̃_{n+2}`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Generator id inside a [`CoxeterGraph`].
pub type Gen = u8;

/// The seven classical families handled by the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
    AffA,
    AffC,
    AffB,
    AffD,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::D,
        Family::AffA,
        Family::AffC,
        Family::AffB,
        Family::AffD,
    ];

    pub fn min_rank(self) -> usize {
        match self {
            Family::AffA => 3,
            _ => 2,
        }
    }

    pub fn is_affine(self) -> bool {
        matches!(self, Family::AffA | Family::AffC | Family::AffB | Family::AffD)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
            Family::AffA => "affA",
            Family::AffC => "affC",
            Family::AffB => "affB",
            Family::AffD => "affD",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(Family::A),
            "b" => Ok(Family::B),
            "d" => Ok(Family::D),
            "affa" | "aff-a" | "atilde" => Ok(Family::AffA),
            "affc" | "aff-c" | "ctilde" => Ok(Family::AffC),
            "affb" | "aff-b" | "btilde" => Ok(Family::AffB),
            "affd" | "aff-d" | "dtilde" => Ok(Family::AffD),
            _ => Err(Error::Domain(format!("unknown family {s:?}"))),
        }
    }
}

/// A family together with its rank parameter `n`.
///
/// The parameter is read as in `A_{n-1}`, `B_n`, `D_{n+1}`, `Ã_{n-1}`, `C̃_n`,
/// `B̃_{n+1}` and `D̃_{n+2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupType {
    pub family: Family,
    pub rank: usize,
}

impl GroupType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = family.min_rank();
        if rank < min {
            return Err(Error::InvalidRank { family, rank, min });
        }
        Ok(GroupType { family, rank })
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank;
        match self.family {
            Family::A => write!(f, "A_{}", n - 1),
            Family::B => write!(f, "B_{n}"),
            Family::D => write!(f, "D_{}", n + 1),
            Family::AffA => write!(f, "affA_{}", n - 1),
            Family::AffC => write!(f, "affC_{n}"),
            Family::AffB => write!(f, "affB_{}", n + 1),
            Family::AffD => write!(f, "affD_{}", n + 2),
        }
    }
}

/// Two leaves attached to a common hub by simple bonds. Alternation along the
/// hub edges treats the two leaves as a single partner of the hub.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fork {
    pub hub: Gen,
    pub leaves: [Gen; 2],
}

/// A word in the free monoid on the generators.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn new(letters: Vec<Gen>) -> Self {
        Word(letters)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn push(&mut self, s: Gen) {
        self.0.push(s);
    }
}

impl From<Vec<Gen>> for Word {
    fn from(v: Vec<Gen>) -> Self {
        Word(v)
    }
}

/// Coxeter graph of a classical type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterGraph {
    group: GroupType,
    names: Vec<String>,
    /// `bonds[s][t]`: `None` encodes `m = ∞`; the diagonal holds `Some(1)`.
    bonds: Vec<Vec<Option<u32>>>,
    maj_weight: Option<Vec<u32>>,
    cyclic: bool,
    forks: Vec<Fork>,
    neighbors: Vec<Vec<Gen>>,
}

/// Builds the Coxeter graph of a classical type.
pub fn build_graph(t: GroupType) -> Result<CoxeterGraph> {
    let t = GroupType::new(t.family, t.rank)?;
    let n = t.rank;
    let s = |i: usize| format!("s_{i}");
    let mut edges: Vec<(usize, usize, u32)> = Vec::new();
    let mut forks = Vec::new();
    let names: Vec<String>;
    let mut maj = None;
    match t.family {
        Family::A => {
            names = (1..n).map(s).collect();
            edges.extend((0..n.saturating_sub(2)).map(|i| (i, i + 1, 3)));
            maj = Some((1..n as u32).collect());
        }
        Family::B => {
            names = (1..=n).map(s).collect();
            edges.extend((0..n - 1).map(|i| (i, i + 1, if i + 2 == n { 4 } else { 3 })));
            maj = Some((1..=n as u32).collect());
        }
        Family::D => {
            // s_1..s_{n-1} is the path, s_n and s_{n+1} hang off s_{n-1}.
            names = (1..=n + 1).map(s).collect();
            edges.extend((0..n - 2).map(|i| (i, i + 1, 3)));
            edges.push((n - 2, n - 1, 3));
            edges.push((n - 2, n, 3));
            forks.push(Fork { hub: (n - 2) as Gen, leaves: [(n - 1) as Gen, n as Gen] });
            maj = Some((1..=n as u32 + 1).collect());
        }
        Family::AffA => {
            names = (0..n).map(s).collect();
            edges.extend((0..n).map(|i| (i, (i + 1) % n, 3)));
        }
        Family::AffC => {
            names = (0..=n).map(s).collect();
            edges.extend((0..n).map(|i| (i, i + 1, if i == 0 || i + 1 == n { 4 } else { 3 })));
        }
        Family::AffB => {
            names = (0..=n + 1).map(s).collect();
            edges.extend((0..n - 1).map(|i| (i, i + 1, if i == 0 { 4 } else { 3 })));
            edges.push((n - 1, n, 3));
            edges.push((n - 1, n + 1, 3));
            forks.push(Fork { hub: (n - 1) as Gen, leaves: [n as Gen, (n + 1) as Gen] });
        }
        Family::AffD => {
            // ids: u_0 = 0, u_1 = 1, s_i = i + 1.
            names = ["u_0".to_string(), "u_1".to_string()]
                .into_iter()
                .chain((1..=n + 1).map(s))
                .collect();
            let sid = |i: usize| i + 1;
            edges.push((0, sid(1), 3));
            edges.push((1, sid(1), 3));
            edges.extend((1..n - 1).map(|i| (sid(i), sid(i + 1), 3)));
            edges.push((sid(n - 1), sid(n), 3));
            edges.push((sid(n - 1), sid(n + 1), 3));
            forks.push(Fork { hub: sid(1) as Gen, leaves: [0, 1] });
            forks.push(Fork {
                hub: sid(n - 1) as Gen,
                leaves: [sid(n) as Gen, sid(n + 1) as Gen],
            });
        }
    }
    let k = names.len();
    let mut bonds = vec![vec![Some(2); k]; k];
    for (i, row) in bonds.iter_mut().enumerate() {
        row[i] = Some(1);
    }
    for &(a, b, m) in &edges {
        bonds[a][b] = Some(m);
        bonds[b][a] = Some(m);
    }
    let neighbors = (0..k)
        .map(|a| (0..k).filter(|&b| b != a && bonds[a][b] != Some(2)).map(|b| b as Gen).collect())
        .collect();
    Ok(CoxeterGraph {
        group: t,
        names,
        bonds,
        maj_weight: maj,
        cyclic: t.family == Family::AffA,
        forks,
        neighbors,
    })
}

impl CoxeterGraph {
    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn family(&self) -> Family {
        self.group.family
    }

    pub fn rank(&self) -> usize {
        self.group.rank
    }

    /// Number of generators.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> {
        (0..self.names.len()).map(|i| i as Gen)
    }

    pub fn name(&self, s: Gen) -> &str {
        &self.names[s as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn forks(&self) -> &[Fork] {
        &self.forks
    }

    /// `m_st`, with `None` standing for `∞`.
    pub fn m(&self, s: Gen, t: Gen) -> Option<u32> {
        self.bonds[s as usize][t as usize]
    }

    /// True when `s ≠ t` and `m_st ≥ 3`.
    pub fn adjacent(&self, s: Gen, t: Gen) -> bool {
        s != t && self.m(s, t) != Some(2)
    }

    /// True when `s == t` or `s` and `t` are joined by an edge, i.e. the two
    /// letters do not commute in a word.
    pub fn linked(&self, s: Gen, t: Gen) -> bool {
        self.m(s, t) != Some(2)
    }

    pub fn neighbors(&self, s: Gen) -> &[Gen] {
        &self.neighbors[s as usize]
    }

    pub fn edges(&self) -> impl Iterator<Item = (Gen, Gen)> + '_ {
        self.generators()
            .flat_map(move |a| self.neighbors(a).iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    /// Weight used by the major index; `None` for affine families.
    pub fn maj_weight(&self, s: Gen) -> Option<u32> {
        self.maj_weight.as_ref().map(|w| w[s as usize])
    }

    pub fn has_maj(&self) -> bool {
        self.maj_weight.is_some()
    }

    /// Generator id for the display name `s_i` / `u_i` (also accepts `s3`).
    pub fn gen_by_name(&self, name: &str) -> Result<Gen> {
        let norm = |x: &str| x.replace('_', "");
        let key = norm(name.trim());
        self.names
            .iter()
            .position(|n| norm(n) == key)
            .map(|i| i as Gen)
            .ok_or_else(|| Error::UnknownGeneratorName(name.to_string()))
    }

    /// Parses a whitespace separated word such as `"s_2 s_1 s_3 s_2"`; the
    /// empty string and `"e"` denote the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "e" {
            return Ok(Word::default());
        }
        text.split(|c: char| c.is_whitespace() || c == '*' || c == '·')
            .filter(|tok| !tok.is_empty())
            .map(|tok| self.gen_by_name(tok))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "e".to_string();
        }
        w.letters().iter().map(|&s| self.name(s)).collect::<Vec<_>>().join(" ")
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|&&s| s as usize >= self.len()) {
            Some(&s) => Err(Error::InvalidGenerator(s as usize)),
            None => Ok(()),
        }
    }

    /// Cartier–Foata layer of every letter: one more than the deepest earlier
    /// letter that does not commute with it.
    pub(crate) fn foata_levels(&self, letters: &[Gen]) -> Vec<usize> {
        let mut last = vec![0usize; self.len()];
        letters
            .iter()
            .map(|&s| {
                let below = self
                    .neighbors(s)
                    .iter()
                    .map(|&t| last[t as usize])
                    .fold(last[s as usize], usize::max);
                last[s as usize] = below + 1;
                below + 1
            })
            .collect()
    }
}

/// Cartier–Foata normal form of `w`: layers of pairwise commuting letters,
/// each sorted by generator id. Two words share a normal form exactly when
/// they are related by commutation moves.
pub fn canonical_form(w: &Word, g: &CoxeterGraph) -> Result<Word> {
    g.check_word(w)?;
    Ok(canonical_unchecked(w.letters(), g))
}

pub(crate) fn canonical_unchecked(letters: &[Gen], g: &CoxeterGraph) -> Word {
    let levels = g.foata_levels(letters);
    let mut keyed: Vec<(usize, Gen)> = levels.into_iter().zip(letters.iter().copied()).collect();
    keyed.sort_unstable();
    Word(keyed.into_iter().map(|(_, s)| s).collect())
}

/// Closure of `w` under swaps of adjacent commuting letters. Fails when the
/// class holds more than `cap` words.
pub fn commutation_class(w: &Word, g: &CoxeterGraph, cap: usize) -> Result<HashSet<Word>> {
    g.check_word(w)?;
    if cap == 0 {
        return Err(Error::Domain("cap must be positive".into()));
    }
    let mut seen = HashSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len().saturating_sub(1) {
            let (a, b) = (cur.0[i], cur.0[i + 1]);
            if a == b || g.linked(a, b) {
                continue;
            }
            let mut next = cur.clone();
            next.0.swap(i, i + 1);
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::ClassOverflow(cap));
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// One-line notation of the permutation `s_{i_1} ⋯ s_{i_k}` of `{1..n}` in
/// type `A_{n-1}`, where each `s_i` swaps the entries in positions `i, i+1`.
pub fn realize_permutation(w: &Word, g: &CoxeterGraph) -> Result<Vec<usize>> {
    if g.family() != Family::A {
        return Err(Error::UnsupportedFamily(g.family()));
    }
    g.check_word(w)?;
    let mut perm: Vec<usize> = (1..=g.rank()).collect();
    for &s in w.letters() {
        perm.swap(s as usize, s as usize + 1);
    }
    Ok(perm)
}
