//! Motzkin-type lattice walks, their encoding of self-dual alternating heaps,
//! generating polynomials of walk families and the map to Frobenius symbols.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterGraph, Family, Gen};
use crate::error::{Error, Result};
use crate::heap::{is_alternating, is_self_dual, Heap};
use crate::poly::TPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    Up,
    Down,
    Horiz,
}

impl Step {
    fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            Step::Horiz => 0,
        }
    }

    fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
            Step::Horiz => 'H',
        }
    }
}

/// A walk: a start height and a sequence of steps. Heights stay nonnegative
/// and horizontal steps only join points on the axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Walk {
    start: usize,
    steps: Vec<Step>,
}

impl Walk {
    pub fn new(start: usize, steps: Vec<Step>) -> Result<Walk> {
        let w = Walk { start, steps };
        let mut h = start as i64;
        for (i, &s) in w.steps.iter().enumerate() {
            let next = h + s.delta();
            if next < 0 {
                return Err(Error::Decoding(format!("step {i} goes below the axis")));
            }
            if s == Step::Horiz && h != 0 {
                return Err(Error::Decoding(format!("horizontal step {i} at height {h}")));
            }
            h = next;
        }
        Ok(w)
    }

    /// Walk through the given point heights; consecutive heights must differ
    /// by at most one and may only be equal at zero.
    pub fn from_heights(heights: &[usize]) -> Result<Walk> {
        let (&first, _) = heights
            .split_first()
            .ok_or_else(|| Error::Encoding("a walk has at least one point".into()))?;
        let steps = heights
            .windows(2)
            .map(|p| match (p[0], p[1]) {
                (0, 0) => Ok(Step::Horiz),
                (a, b) if b == a + 1 => Ok(Step::Up),
                (a, b) if a == b + 1 => Ok(Step::Down),
                (a, b) => Err(Error::Encoding(format!("heights {a} and {b} are not joined by a step"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Walk::new(first, steps)
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights `h_0, …, h_n` of the points.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = self.start as i64;
        std::iter::once(self.start)
            .chain(self.steps.iter().map(|s| {
                h += s.delta();
                h as usize
            }))
            .collect()
    }

    pub fn end(&self) -> usize {
        *self.heights().last().expect("at least one point")
    }

    pub fn touches_axis(&self) -> bool {
        self.heights().contains(&0)
    }

    pub fn map_steps(&self, f: impl Fn(Step) -> Step) -> Walk {
        Walk { start: self.start, steps: self.steps.iter().map(|&s| f(s)).collect() }
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.start != 0 {
            write!(f, "{}:", self.start)?;
        }
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

/// Parses `UDH…`, optionally prefixed by `h:` for a start height `h`.
impl FromStr for Walk {
    type Err = Error;

    fn from_str(s: &str) -> Result<Walk> {
        let (start, body) = match s.split_once(':') {
            Some((h, rest)) => {
                (h.trim().parse().map_err(|_| Error::Decoding(format!("bad start height {h:?}")))?, rest)
            }
            None => (0, s),
        };
        let steps = body
            .trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                'H' => Ok(Step::Horiz),
                _ => Err(Error::Decoding(format!("unknown step {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Walk::new(start, steps)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeightMode {
    /// `Σ_{i=0}^{n} h_i`.
    AllPoints,
    /// `Σ_{i=1}^{n} h_i`, the area below the walk.
    ExcludeStart,
}

pub fn total_height(w: &Walk, mode: WeightMode) -> usize {
    let hs = w.heights();
    let skip = usize::from(mode == WeightMode::ExcludeStart);
    hs[skip..].iter().sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HeightConstraint {
    Exactly(usize),
    Any,
    Even,
    Odd,
    AtMostOne,
}

impl HeightConstraint {
    pub fn admits(self, h: usize) -> bool {
        match self {
            HeightConstraint::Exactly(x) => h == x,
            HeightConstraint::Any => true,
            HeightConstraint::Even => h.is_multiple_of(2),
            HeightConstraint::Odd => h % 2 == 1,
            HeightConstraint::AtMostOne => h <= 1,
        }
    }

    fn is_bounded(self) -> bool {
        matches!(self, HeightConstraint::Exactly(_) | HeightConstraint::AtMostOne)
    }
}

impl FromStr for HeightConstraint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "any" => HeightConstraint::Any,
            "even" => HeightConstraint::Even,
            "odd" => HeightConstraint::Odd,
            "le1" | "<=1" | "atmostone" => HeightConstraint::AtMostOne,
            x => HeightConstraint::Exactly(
                x.parse().map_err(|_| Error::WalkSpec(format!("unknown height constraint {s:?}")))?,
            ),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EndConstraint {
    Height(HeightConstraint),
    EqualsStart,
}

impl FromStr for EndConstraint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "start" | "same" => Ok(EndConstraint::EqualsStart),
            _ => s.parse().map(EndConstraint::Height),
        }
    }
}

/// A family of walks of a fixed length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WalkFamilySpec {
    pub n: usize,
    pub allow_horiz: bool,
    pub start: HeightConstraint,
    pub end: EndConstraint,
    pub require_touch: bool,
    pub strictly_positive: bool,
    pub weight: WeightMode,
}

impl WalkFamilySpec {
    fn base(n: usize, allow_horiz: bool, start: HeightConstraint, end: EndConstraint) -> Self {
        WalkFamilySpec {
            n,
            allow_horiz,
            start,
            end,
            require_touch: false,
            strictly_positive: false,
            weight: WeightMode::AllPoints,
        }
    }

    /// Walks from the origin back to the axis.
    pub fn m_star(n: usize) -> Self {
        Self::base(n, true, HeightConstraint::Exactly(0), EndConstraint::Height(HeightConstraint::Exactly(0)))
    }

    /// Walks from the origin.
    pub fn q_star(n: usize) -> Self {
        Self::base(n, true, HeightConstraint::Exactly(0), EndConstraint::Height(HeightConstraint::Any))
    }

    /// All walks.
    pub fn g_star(n: usize) -> Self {
        Self::base(n, true, HeightConstraint::Any, EndConstraint::Height(HeightConstraint::Any))
    }

    /// Same family without horizontal steps.
    pub fn no_horiz(mut self) -> Self {
        self.allow_horiz = false;
        self
    }

    /// Same family restricted to walks meeting the axis.
    pub fn touching(mut self) -> Self {
        self.require_touch = true;
        self
    }

    pub fn with_start(mut self, start: HeightConstraint) -> Self {
        self.start = start;
        self
    }

    pub fn with_end(mut self, end: EndConstraint) -> Self {
        self.end = end;
        self
    }

    pub fn with_weight(mut self, weight: WeightMode) -> Self {
        self.weight = weight;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.strictly_positive && self.require_touch {
            return Err(Error::WalkSpec("a strictly positive walk cannot touch the axis".into()));
        }
        if self.strictly_positive && self.start == HeightConstraint::Exactly(0) {
            return Err(Error::WalkSpec("a strictly positive walk cannot start at 0".into()));
        }
        if self.n == 0 && self.weight == WeightMode::ExcludeStart && !self.start.is_bounded() {
            return Err(Error::WalkSpec("empty walks with free start all have area 0".into()));
        }
        Ok(())
    }

    pub fn contains(&self, w: &Walk) -> bool {
        let hs = w.heights();
        let end = *hs.last().expect("at least one point");
        w.len() == self.n
            && (self.allow_horiz || !w.steps.contains(&Step::Horiz))
            && self.start.admits(w.start)
            && match self.end {
                EndConstraint::Height(c) => c.admits(end),
                EndConstraint::EqualsStart => end == w.start,
            }
            && (!self.require_touch || hs.contains(&0))
            && (!self.strictly_positive || !hs.contains(&0))
    }
}

/// Generating polynomial `Σ t^{weight}` of a walk family, truncated at
/// degree `tmax`.
pub fn family_poly(spec: &WalkFamilySpec, tmax: usize) -> Result<TPoly> {
    spec.validate()?;
    let start_cap = match spec.weight {
        WeightMode::AllPoints => tmax,
        WeightMode::ExcludeStart => tmax + 1,
    };
    let mut total = vec![BigUint::zero(); tmax + 1];
    for s in (0..=start_cap).filter(|&s| spec.start.admits(s)) {
        walks_from(spec, s, tmax, &mut total);
    }
    Ok(TPoly::from_coeffs(total).truncated(tmax))
}

/// Adds the weights of the family's walks starting at height `s` into `acc`.
fn walks_from(spec: &WalkFamilySpec, s: usize, tmax: usize, acc: &mut [BigUint]) {
    let w0 = if spec.weight == WeightMode::AllPoints { s } else { 0 };
    if w0 > tmax || (spec.strictly_positive && s == 0) {
        return;
    }
    let hcap = tmax.max(s) + 1;
    // state[touched][height] = coefficient vector by weight
    let mut state = vec![vec![Vec::<BigUint>::new(); hcap + 1]; 2];
    let mut init = vec![BigUint::zero(); tmax + 1];
    init[w0] = BigUint::from(1u32);
    state[usize::from(s == 0)][s] = init;
    for _ in 0..spec.n {
        let mut next = vec![vec![Vec::<BigUint>::new(); hcap + 1]; 2];
        for (touched, row) in state.iter().enumerate() {
            for (h, coeffs) in row.iter().enumerate() {
                if coeffs.is_empty() {
                    continue;
                }
                let moves = [
                    (h.checked_add(1), true),
                    (h.checked_sub(1), true),
                    (Some(h), spec.allow_horiz && h == 0),
                ];
                for (target, ok) in moves {
                    let Some(nh) = target.filter(|&x| ok && x <= hcap && x <= tmax) else { continue };
                    if spec.strictly_positive && nh == 0 {
                        continue;
                    }
                    let slot = &mut next[touched | usize::from(nh == 0)][nh];
                    if slot.is_empty() {
                        *slot = vec![BigUint::zero(); tmax + 1];
                    }
                    for (i, c) in coeffs.iter().enumerate() {
                        if i + nh > tmax {
                            break;
                        }
                        if !c.is_zero() {
                            slot[i + nh] += c;
                        }
                    }
                }
            }
        }
        state = next;
    }
    for (touched, row) in state.iter().enumerate() {
        if spec.require_touch && touched == 0 {
            continue;
        }
        for (h, coeffs) in row.iter().enumerate() {
            let end_ok = match spec.end {
                EndConstraint::Height(c) => c.admits(h),
                EndConstraint::EqualsStart => h == s,
            };
            if !end_ok {
                continue;
            }
            for (a, c) in acc.iter_mut().zip(coeffs) {
                *a += c;
            }
        }
    }
}

/// How a heap's generator counts are read as walk heights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scheme {
    /// `P_i = |H_{v_i}|` along a linear graph (types `A`, `B`, affine `C`).
    Linear,
    /// `0, |H_{s_1}|, …, |H_{s_{n-1}}|, 0` for `A_{n-1}`.
    TypeA,
    /// `0, |H_{s_1}|, …, |H_{s_n}|` for `B_n`.
    TypeB,
    /// `|H_{s_0}|, …, |H_{s_{n-1}}|, |H_{s_0}|` for affine `A_{n-1}`.
    AffineA,
}

impl Scheme {
    /// Weight under which heap size equals walk weight.
    pub fn weight(self) -> WeightMode {
        match self {
            Scheme::AffineA => WeightMode::ExcludeStart,
            _ => WeightMode::AllPoints,
        }
    }

    fn check_graph(self, g: &CoxeterGraph) -> Result<()> {
        let ok = match self {
            Scheme::Linear => matches!(g.family(), Family::A | Family::B | Family::AffC),
            Scheme::TypeA => g.family() == Family::A,
            Scheme::TypeB => g.family() == Family::B,
            Scheme::AffineA => g.family() == Family::AffA,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedFamily(g.family()))
        }
    }

    /// The walk family the scheme maps onto.
    pub fn family(self, g: &CoxeterGraph) -> WalkFamilySpec {
        let k = g.len();
        match self {
            Scheme::Linear => WalkFamilySpec::g_star(k - 1),
            Scheme::TypeA => WalkFamilySpec::m_star(k + 1),
            Scheme::TypeB => WalkFamilySpec::q_star(k),
            Scheme::AffineA => WalkFamilySpec::g_star(k)
                .with_end(EndConstraint::EqualsStart)
                .with_weight(WeightMode::ExcludeStart),
        }
    }
}

/// The walk of a self-dual alternating heap.
pub fn encode_walk(h: &Heap, scheme: Scheme, g: &CoxeterGraph) -> Result<Walk> {
    scheme.check_graph(g)?;
    if !is_self_dual(h, g) {
        return Err(Error::Encoding("heap is not self-dual".into()));
    }
    if !is_alternating(h, g) {
        return Err(Error::Encoding("heap is not alternating".into()));
    }
    let counts: Vec<usize> = g.generators().map(|s| h.count(s)).collect();
    let heights: Vec<usize> = match scheme {
        Scheme::Linear => counts,
        Scheme::TypeA => std::iter::once(0).chain(counts).chain(std::iter::once(0)).collect(),
        Scheme::TypeB => std::iter::once(0).chain(counts).collect(),
        Scheme::AffineA => {
            let c0 = counts[0];
            counts.into_iter().chain(std::iter::once(c0)).collect()
        }
    };
    Walk::from_heights(&heights)
}

/// Inverse of [`encode_walk`].
pub fn decode_walk(w: &Walk, scheme: Scheme, g: &CoxeterGraph) -> Result<Heap> {
    scheme.check_graph(g)?;
    if !scheme.family(g).contains(w) {
        return Err(Error::Decoding(format!("walk {w} is outside the family of the scheme")));
    }
    let hs = w.heights();
    let counts: Vec<usize> = match scheme {
        Scheme::Linear | Scheme::AffineA => hs[..g.len()].to_vec(),
        Scheme::TypeA => hs[1..hs.len() - 1].to_vec(),
        Scheme::TypeB => hs[1..].to_vec(),
    };
    let k = counts.len();
    let mut pairs: Vec<(usize, usize)> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    if scheme == Scheme::AffineA {
        pairs.push((k - 1, 0));
    }
    // element (v, j) is the j-th occurrence of generator v, bottom to top
    let offset: Vec<usize> = counts
        .iter()
        .scan(0, |acc, &c| {
            let o = *acc;
            *acc += c;
            Some(o)
        })
        .collect();
    let total: usize = counts.iter().sum();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut indeg = vec![0usize; total];
    let mut link = |a: usize, b: usize| {
        succ[a].push(b);
        indeg[b] += 1;
    };
    for &(a, b) in &pairs {
        let (ca, cb) = (counts[a], counts[b]);
        if ca == 0 && cb == 0 {
            continue;
        }
        // the generator with more occurrences sits at both ends of the chain
        let (outer, inner, co) = if cb > ca { (b, a, cb) } else { (a, b, ca) };
        if co != counts[inner] + 1 {
            return Err(Error::Decoding(format!("counts {ca}, {cb} cannot alternate")));
        }
        for j in 0..counts[inner] {
            link(offset[outer] + j, offset[inner] + j);
            link(offset[inner] + j, offset[outer] + j + 1);
        }
    }
    for (v, &c) in counts.iter().enumerate() {
        for j in 1..c {
            link(offset[v] + j - 1, offset[v] + j);
        }
    }
    let label: Vec<Gen> = (0..k).flat_map(|v| std::iter::repeat_n(v as Gen, counts[v])).collect();
    let mut ready: Vec<usize> = (0..total).filter(|&e| indeg[e] == 0).collect();
    let mut word = Vec::with_capacity(total);
    while let Some(e) = ready.pop() {
        word.push(label[e]);
        for &f in &succ[e] {
            indeg[f] -= 1;
            if indeg[f] == 0 {
                ready.push(f);
            }
        }
    }
    if word.len() != total {
        return Err(Error::Decoding(format!("walk {w} gives cyclic chain relations")));
    }
    Ok(Heap::build(&word, g))
}

/// Partition in Frobenius coordinates: columns `(a_i | b_i - 1)` with both
/// rows strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusSymbol {
    pub top: Vec<usize>,
    /// `b_i ≥ 1`; the leg lengths are `b_i - 1`.
    pub bottom: Vec<usize>,
}

impl FrobeniusSymbol {
    /// Durfee rank.
    pub fn rank(&self) -> usize {
        self.top.len()
    }

    pub fn weight(&self) -> usize {
        self.top.iter().chain(&self.bottom).sum()
    }

    pub fn is_valid(&self) -> bool {
        self.top.len() == self.bottom.len()
            && self.top.windows(2).all(|p| p[0] > p[1])
            && self.bottom.windows(2).all(|p| p[0] > p[1])
            && self.bottom.iter().all(|&b| b > 0)
    }

    /// Parts of the partition, largest first.
    pub fn partition(&self) -> Vec<usize> {
        let j = self.rank();
        let mut parts: Vec<usize> = (0..j).map(|i| self.top[i] + i + 1).collect();
        // column lengths inside the first j columns
        let cols: Vec<usize> = (0..j).map(|i| self.bottom[i] + i).collect();
        let longest = cols.first().copied().unwrap_or(0);
        parts.extend((j + 1..=longest).map(|r| cols.iter().filter(|&&c| c >= r).count()));
        parts
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FrobeniusMode {
    A,
    B,
}

/// Reads a walk as a lattice path and returns the Frobenius symbol of its
/// corner points.
pub fn walk_to_frobenius(w: &Walk, mode: FrobeniusMode) -> Result<FrobeniusSymbol> {
    let fam = match mode {
        FrobeniusMode::A => WalkFamilySpec::m_star(w.len()),
        FrobeniusMode::B => WalkFamilySpec::q_star(w.len()),
    };
    if !fam.contains(w) {
        return Err(Error::Domain(format!("walk {w} is not in the family required by mode {mode:?}")));
    }
    let k = w.steps.iter().filter(|&&s| s == Step::Horiz).count();
    let to_down = match mode {
        FrobeniusMode::A => k / 2,
        FrobeniusMode::B => k,
    };
    let mut seen = 0;
    let steps: Vec<Step> = w
        .steps
        .iter()
        .map(|&s| match s {
            Step::Horiz => {
                seen += 1;
                if seen <= to_down {
                    Step::Down
                } else {
                    Step::Up
                }
            }
            s => s,
        })
        .collect();
    // Down is a unit step along x, Up along y
    let (mut x, mut y) = (0usize, 0usize);
    let mut corners = Vec::new();
    for (i, &s) in steps.iter().enumerate() {
        match s {
            Step::Down => x += 1,
            _ => y += 1,
        }
        let corner = s == Step::Up
            && match steps.get(i + 1) {
                Some(&next) => next == Step::Down,
                None => mode == FrobeniusMode::B,
            };
        if corner {
            corners.push((x, y));
        }
    }
    corners.reverse();
    Ok(FrobeniusSymbol {
        top: corners.iter().map(|c| c.0).collect(),
        bottom: corners.iter().map(|c| c.1).collect(),
    })
}
