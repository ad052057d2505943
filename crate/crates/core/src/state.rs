//! Kauffman states, state circles, regions and state graphs.
//!
//! The `A`-smoothing at a crossing joins slots `a`–`d` and `b`–`c`, so the
//! corners `ab` and `cd` open into one region. The `B`-smoothing joins
//! `a`–`b` and `c`–`d`, opening `bc` into `da`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::diagram::{LinkDiagram, Quadrant, Sign, SLOT_A, SLOT_B, SLOT_C, SLOT_D};
use crate::error::{Error, Result};
use crate::union_find::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Resolution {
    A,
    B,
}

impl Resolution {
    pub fn flip(self) -> Self {
        match self {
            Resolution::A => Resolution::B,
            Resolution::B => Resolution::A,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Resolution::A => 'A',
            Resolution::B => 'B',
        }
    }

    /// The two slot pairs joined by this smoothing.
    pub fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Resolution::A => [(SLOT_A, SLOT_D), (SLOT_B, SLOT_C)],
            Resolution::B => [(SLOT_A, SLOT_B), (SLOT_C, SLOT_D)],
        }
    }

    /// The two corners merged into one region by this smoothing.
    pub fn merged_quadrants(self) -> (Quadrant, Quadrant) {
        match self {
            Resolution::A => (Quadrant::Ab, Quadrant::Cd),
            Resolution::B => (Quadrant::Bc, Quadrant::Da),
        }
    }
}

impl fmt::Display for Resolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A choice of resolution at every crossing, indexed by crossing position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KauffmanState {
    choices: Vec<Resolution>,
}

impl KauffmanState {
    pub fn new(choices: Vec<Resolution>) -> Self {
        KauffmanState { choices }
    }

    pub fn constant(n: usize, r: Resolution) -> Self {
        KauffmanState {
            choices: vec![r; n],
        }
    }

    pub fn all_a(d: &LinkDiagram) -> Self {
        Self::constant(d.crossing_count(), Resolution::A)
    }

    pub fn all_b(d: &LinkDiagram) -> Self {
        Self::constant(d.crossing_count(), Resolution::B)
    }

    /// The orientation-following smoothing: `A` at positive crossings and
    /// `B` at negative ones.
    pub fn seifert(d: &LinkDiagram) -> Result<Self> {
        let choices = (0..d.crossing_count())
            .map(|i| {
                d.crossing_sign(i).map(|s| match s {
                    Sign::Positive => Resolution::A,
                    Sign::Negative => Resolution::B,
                })
            })
            .collect::<Result<_>>()?;
        Ok(KauffmanState { choices })
    }

    /// State whose crossing `i` is `B` exactly when bit `i` of `mask` is set.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        KauffmanState {
            choices: (0..n)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Resolution::B
                    } else {
                        Resolution::A
                    }
                })
                .collect(),
        }
    }

    /// Resolves a state selector: `all-a`, `all-b`, `seifert` or a literal
    /// such as `AAB`.
    pub fn select(d: &LinkDiagram, selector: &str) -> Result<Self> {
        let s = match selector.to_ascii_lowercase().as_str() {
            "all-a" => Self::all_a(d),
            "all-b" => Self::all_b(d),
            "seifert" => Self::seifert(d)?,
            _ => selector.parse()?,
        };
        s.check(d)?;
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.choices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }

    pub fn choices(&self) -> &[Resolution] {
        &self.choices
    }

    pub fn at(&self, crossing: usize) -> Resolution {
        self.choices[crossing]
    }

    pub fn with_flipped(&self, crossing: usize) -> Self {
        let mut s = self.clone();
        s.choices[crossing] = s.choices[crossing].flip();
        s
    }

    pub fn is_constant(&self) -> bool {
        self.choices.windows(2).all(|w| w[0] == w[1])
    }

    pub fn count(&self, r: Resolution) -> usize {
        self.choices.iter().filter(|&&c| c == r).count()
    }

    pub fn check(&self, d: &LinkDiagram) -> Result<()> {
        if self.choices.len() != d.crossing_count() {
            return Err(Error::StateSize {
                got: self.choices.len(),
                expected: d.crossing_count(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for KauffmanState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.choices {
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for KauffmanState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'A' | 'a' => Ok(Resolution::A),
                'B' | 'b' => Ok(Resolution::B),
                _ => Err(Error::InvalidState(s.to_string())),
            })
            .collect::<Result<_>>()
            .map(KauffmanState::new)
    }
}

/// The circles produced by resolving every crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateCircles {
    /// Circle of each arc, by dense arc index.
    pub circle_of_arc: Vec<usize>,
    /// Number of circles, free loops included.
    pub count: usize,
}

impl StateCircles {
    /// Circle containing the arc in the given slot.
    pub fn circle_at(&self, d: &LinkDiagram, crossing: usize, slot: usize) -> usize {
        self.circle_of_arc[d.slot_arc(crossing, slot)]
    }

    /// The two circles met by the smoothing arcs at a crossing.
    pub fn ends_at(&self, d: &LinkDiagram, crossing: usize, r: Resolution) -> (usize, usize) {
        let [(p, _), (q, _)] = r.pairs();
        (
            self.circle_at(d, crossing, p),
            self.circle_at(d, crossing, q),
        )
    }
}

fn union_smoothings(d: &LinkDiagram, res: impl Fn(usize) -> Resolution) -> UnionFind {
    let mut uf = UnionFind::new(d.arc_count());
    for x in 0..d.crossing_count() {
        for (p, q) in res(x).pairs() {
            uf.union(d.slot_arc(x, p), d.slot_arc(x, q));
        }
    }
    uf
}

pub fn resolve(d: &LinkDiagram, sigma: &KauffmanState) -> Result<StateCircles> {
    sigma.check(d)?;
    let mut uf = union_smoothings(d, |x| sigma.at(x));
    let (circle_of_arc, k) = uf.labels();
    Ok(StateCircles {
        circle_of_arc,
        count: k + d.free_loops(),
    })
}

/// Circle count of the state encoded by `mask` (see [`KauffmanState::from_mask`]).
pub fn circle_count_of_mask(d: &LinkDiagram, mask: u64) -> usize {
    let mut uf = union_smoothings(d, |x| {
        if mask >> x & 1 == 1 {
            Resolution::B
        } else {
            Resolution::A
        }
    });
    let mut k = 0;
    for a in 0..d.arc_count() {
        if uf.find(a) == a {
            k += 1;
        }
    }
    k + d.free_loops()
}

/// Partition of the crossings into the regions cut out by the state circles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegionAssignment {
    pub region_of_crossing: Vec<usize>,
    pub region_count: usize,
}

impl RegionAssignment {
    /// The first region holding crossings of both resolutions, with its
    /// crossings.
    pub fn mixed_region(&self, sigma: &KauffmanState) -> Option<(usize, Vec<usize>)> {
        let mut labels: BTreeMap<usize, (bool, bool)> = BTreeMap::new();
        for (x, &r) in self.region_of_crossing.iter().enumerate() {
            let e = labels.entry(r).or_default();
            match sigma.at(x) {
                Resolution::A => e.0 = true,
                Resolution::B => e.1 = true,
            }
        }
        let (&region, _) = labels.iter().find(|(_, &(a, b))| a && b)?;
        let crossings = (0..self.region_of_crossing.len())
            .filter(|&x| self.region_of_crossing[x] == region)
            .collect();
        Some((region, crossings))
    }
}

pub fn regions(d: &LinkDiagram, sigma: &KauffmanState) -> Result<RegionAssignment> {
    sigma.check(d)?;
    if !d.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = d.crossing_count();
    if n == 0 {
        return Ok(RegionAssignment {
            region_of_crossing: Vec::new(),
            region_count: d.free_loops() + 1,
        });
    }
    let mut uf = UnionFind::new(d.faces().len());
    for x in 0..n {
        let (p, q) = sigma.at(x).merged_quadrants();
        uf.union(d.face_at(x, p), d.face_at(x, q));
    }
    let (class, region_count) = uf.labels();
    let region_of_crossing = (0..n)
        .map(|x| class[d.face_at(x, sigma.at(x).merged_quadrants().0)])
        .collect();
    Ok(RegionAssignment {
        region_of_crossing,
        region_count,
    })
}

pub fn is_homogeneous(d: &LinkDiagram, sigma: &KauffmanState) -> Result<bool> {
    Ok(regions(d, sigma)?.mixed_region(sigma).is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StateEdge {
    pub crossing: usize,
    pub ends: (usize, usize),
    pub label: Resolution,
}

impl StateEdge {
    pub fn is_loop(&self) -> bool {
        self.ends.0 == self.ends.1
    }
}

/// One vertex per state circle and one labelled edge per crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateGraph {
    pub vertex_count: usize,
    pub edges: Vec<StateEdge>,
}

/// A state graph with parallel edges collapsed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedEdge {
    pub ends: (usize, usize),
    pub multiplicity: usize,
    pub labels: Vec<Resolution>,
    pub crossings: Vec<usize>,
}

impl ReducedEdge {
    pub fn is_loop(&self) -> bool {
        self.ends.0 == self.ends.1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedStateGraph {
    pub vertex_count: usize,
    pub edges: Vec<ReducedEdge>,
}

impl StateGraph {
    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(StateEdge::is_loop)
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.vertex_count);
        let mut parts = self.vertex_count;
        for e in &self.edges {
            if uf.union(e.ends.0, e.ends.1) {
                parts -= 1;
            }
        }
        parts <= 1
    }

    pub fn reduce(&self) -> ReducedStateGraph {
        let mut by_pair: BTreeMap<(usize, usize), ReducedEdge> = BTreeMap::new();
        for e in &self.edges {
            let r = by_pair.entry(e.ends).or_insert_with(|| ReducedEdge {
                ends: e.ends,
                multiplicity: 0,
                labels: Vec::new(),
                crossings: Vec::new(),
            });
            r.multiplicity += 1;
            r.labels.push(e.label);
            r.crossings.push(e.crossing);
        }
        ReducedStateGraph {
            vertex_count: self.vertex_count,
            edges: by_pair.into_values().collect(),
        }
    }
}

impl ReducedStateGraph {
    /// `|V| - |E|` of the reduced graph.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(ReducedEdge::is_loop)
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.vertex_count);
        let mut parts = self.vertex_count;
        for e in &self.edges {
            if uf.union(e.ends.0, e.ends.1) {
                parts -= 1;
            }
        }
        parts <= 1
    }

    pub fn neighbours(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            if !e.is_loop() {
                adj[e.ends.0].push((e.ends.1, i));
                adj[e.ends.1].push((e.ends.0, i));
            }
        }
        adj
    }
}

pub fn state_graph(d: &LinkDiagram, sigma: &KauffmanState) -> Result<StateGraph> {
    let circles = resolve(d, sigma)?;
    Ok(state_graph_from_circles(d, sigma, &circles))
}

pub fn state_graph_from_circles(
    d: &LinkDiagram,
    sigma: &KauffmanState,
    circles: &StateCircles,
) -> StateGraph {
    let edges = (0..d.crossing_count())
        .map(|x| {
            let (p, q) = circles.ends_at(d, x, sigma.at(x));
            StateEdge {
                crossing: x,
                ends: (p.min(q), p.max(q)),
                label: sigma.at(x),
            }
        })
        .collect();
    StateGraph {
        vertex_count: circles.count,
        edges,
    }
}

pub fn reduce(g: &StateGraph) -> ReducedStateGraph {
    g.reduce()
}

pub fn is_adequate(d: &LinkDiagram, sigma: &KauffmanState) -> Result<bool> {
    Ok(!state_graph(d, sigma)?.has_loop())
}

/// Euler characteristic of the state surface: one disk per circle, one band
/// per crossing.
pub fn euler_characteristic_of_surface(d: &LinkDiagram, sigma: &KauffmanState) -> Result<i64> {
    Ok(resolve(d, sigma)?.count as i64 - d.crossing_count() as i64)
}

/// Every state of a diagram, in binary order of [`KauffmanState::from_mask`].
pub fn enumerate_states(d: &LinkDiagram, cap: usize) -> Result<StateIter> {
    let n = d.crossing_count();
    if n > cap || n >= 64 {
        return Err(Error::CapExceeded { crossings: n, cap });
    }
    Ok(StateIter {
        n,
        next: 0,
        end: 1u64 << n,
    })
}

#[derive(Clone, Debug)]
pub struct StateIter {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for StateIter {
    type Item = KauffmanState;

    fn next(&mut self) -> Option<KauffmanState> {
        (self.next < self.end).then(|| {
            self.next += 1;
            KauffmanState::from_mask(self.n, self.next - 1)
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for StateIter {}
