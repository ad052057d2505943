//! Fiber detection for homogeneous states.
//!
//! For a homogeneous state of a connected diagram the state surface is a
//! fiber exactly when the reduced state graph is a tree. Split diagrams never
//! give fibers, and non-homogeneous states are outside the reach of the test.
//! Cutting the state graph at its cut vertices splits the surface into a
//! Murasugi sum whose summands can be judged block by block.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::state::{self, KauffmanState, ReducedStateGraph, Resolution, StateEdge, StateGraph};
use crate::union_find::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NotFiberReason {
    Split,
    GraphNotTree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InapplicableReason {
    StateNotHomogeneous,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Witness {
    /// Crossings along a cycle of the reduced graph; a single crossing for a loop.
    Cycle(Vec<usize>),
    /// Crossings of each split component; free loops give empty lists.
    Disconnection(Vec<Vec<usize>>),
    MixedRegion {
        region: usize,
        crossings: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum FiberVerdict {
    Fiber,
    NotFiber {
        reason: NotFiberReason,
        witness: Witness,
    },
    TheoremInapplicable {
        reason: InapplicableReason,
        witness: Witness,
    },
}

/// Verdict without its evidence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    Fiber,
    NotFiberSplit,
    NotFiberGraph,
    Inapplicable,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::Fiber => "fiber",
            VerdictKind::NotFiberSplit => "not-fiber-split",
            VerdictKind::NotFiberGraph => "not-fiber-graph",
            VerdictKind::Inapplicable => "inapplicable",
        }
    }
}

impl FiberVerdict {
    pub fn is_fiber(&self) -> bool {
        matches!(self, FiberVerdict::Fiber)
    }

    pub fn kind(&self) -> VerdictKind {
        match self {
            FiberVerdict::Fiber => VerdictKind::Fiber,
            FiberVerdict::NotFiber {
                reason: NotFiberReason::Split,
                ..
            } => VerdictKind::NotFiberSplit,
            FiberVerdict::NotFiber { .. } => VerdictKind::NotFiberGraph,
            FiberVerdict::TheoremInapplicable { .. } => VerdictKind::Inapplicable,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            FiberVerdict::Fiber => None,
            FiberVerdict::NotFiber { witness, .. }
            | FiberVerdict::TheoremInapplicable { witness, .. } => Some(witness),
        }
    }
}

pub fn is_tree(g: &ReducedStateGraph) -> bool {
    g.vertex_count > 0 && g.edges.len() + 1 == g.vertex_count && !g.has_loop() && g.is_connected()
}

/// A cycle of the reduced graph as the crossings of its edges, or `None` if
/// the graph is a forest without loops.
pub fn find_cycle(g: &ReducedStateGraph) -> Option<Vec<usize>> {
    if let Some(e) = g.edges.iter().find(|e| e.is_loop()) {
        return Some(vec![e.crossings[0]]);
    }
    let mut uf = UnionFind::new(g.vertex_count);
    let mut tree: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.vertex_count];
    for (i, e) in g.edges.iter().enumerate() {
        let (u, v) = e.ends;
        if uf.union(u, v) {
            tree[u].push((v, i));
            tree[v].push((u, i));
            continue;
        }
        // Tree path from v back to u closes the cycle.
        let mut via: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count];
        let mut queue = VecDeque::from([u]);
        let mut seen = vec![false; g.vertex_count];
        seen[u] = true;
        while let Some(x) = queue.pop_front() {
            for &(y, j) in &tree[x] {
                if !seen[y] {
                    seen[y] = true;
                    via[y] = Some((x, j));
                    queue.push_back(y);
                }
            }
        }
        let mut cycle = vec![e.crossings[0]];
        let mut x = v;
        while let Some((prev, j)) = via[x] {
            cycle.push(g.edges[j].crossings[0]);
            x = prev;
        }
        return Some(cycle);
    }
    None
}

/// Decides whether the state surface of `sigma` is a fiber.
pub fn detect_fiber(d: &LinkDiagram, sigma: &KauffmanState) -> Result<FiberVerdict> {
    sigma.check(d)?;
    if let Some(v) = precondition_verdict(d, sigma)? {
        return Ok(v);
    }
    let g = state::state_graph(d, sigma)?.reduce();
    Ok(match find_cycle(&g) {
        None if is_tree(&g) => FiberVerdict::Fiber,
        cycle => FiberVerdict::NotFiber {
            reason: NotFiberReason::GraphNotTree,
            witness: Witness::Cycle(cycle.unwrap_or_default()),
        },
    })
}

fn precondition_verdict(d: &LinkDiagram, sigma: &KauffmanState) -> Result<Option<FiberVerdict>> {
    if !d.is_connected() {
        return Ok(Some(FiberVerdict::NotFiber {
            reason: NotFiberReason::Split,
            witness: Witness::Disconnection(d.split_crossing_sets()),
        }));
    }
    let regions = state::regions(d, sigma)?;
    Ok(regions
        .mixed_region(sigma)
        .map(|(region, crossings)| FiberVerdict::TheoremInapplicable {
            reason: InapplicableReason::StateNotHomogeneous,
            witness: Witness::MixedRegion { region, crossings },
        }))
}

/// Cut vertices of a reduced state graph, ascending.
pub fn cut_vertices(g: &ReducedStateGraph) -> Vec<usize> {
    let adj = g.neighbours();
    let n = g.vertex_count;
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut cut = vec![false; n];
    let mut time = 0;

    fn visit(
        u: usize,
        parent: Option<usize>,
        adj: &[Vec<(usize, usize)>],
        disc: &mut [usize],
        low: &mut [usize],
        cut: &mut [bool],
        time: &mut usize,
    ) {
        disc[u] = *time;
        low[u] = *time;
        *time += 1;
        let mut children = 0;
        for &(v, e) in &adj[u] {
            if Some(e) == parent {
                continue;
            }
            if disc[v] == usize::MAX {
                children += 1;
                visit(v, Some(e), adj, disc, low, cut, time);
                low[u] = low[u].min(low[v]);
                if parent.is_some() && low[v] >= disc[u] {
                    cut[u] = true;
                }
            } else {
                low[u] = low[u].min(disc[v]);
            }
        }
        if parent.is_none() && children > 1 {
            cut[u] = true;
        }
    }

    for s in 0..n {
        if disc[s] == usize::MAX {
            visit(s, None, &adj, &mut disc, &mut low, &mut cut, &mut time);
        }
    }
    (0..n).filter(|&v| cut[v]).collect()
}

/// Edge sets of the blocks of a multigraph. Every loop is its own block.
fn blocks_of(vertex_count: usize, edges: &[StateEdge]) -> Vec<Vec<usize>> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertex_count];
    let mut blocks = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        if e.is_loop() {
            blocks.push(vec![i]);
        } else {
            adj[e.ends.0].push((e.ends.1, i));
            adj[e.ends.1].push((e.ends.0, i));
        }
    }

    struct Walk<'a> {
        adj: &'a [Vec<(usize, usize)>],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<usize>,
        blocks: Vec<Vec<usize>>,
    }

    impl Walk<'_> {
        fn visit(&mut self, u: usize, parent: Option<usize>) {
            self.disc[u] = self.time;
            self.low[u] = self.time;
            self.time += 1;
            for &(v, e) in &self.adj[u] {
                if Some(e) == parent {
                    continue;
                }
                if self.disc[v] == usize::MAX {
                    self.stack.push(e);
                    self.visit(v, Some(e));
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        let mut block = Vec::new();
                        while let Some(f) = self.stack.pop() {
                            block.push(f);
                            if f == e {
                                break;
                            }
                        }
                        self.blocks.push(block);
                    }
                } else if self.disc[v] < self.disc[u] {
                    self.stack.push(e);
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
        }
    }

    let mut walk = Walk {
        adj: &adj,
        disc: vec![usize::MAX; vertex_count],
        low: vec![0; vertex_count],
        time: 0,
        stack: Vec::new(),
        blocks,
    };
    for s in 0..vertex_count {
        if walk.disc[s] == usize::MAX {
            walk.visit(s, None);
        }
    }
    walk.blocks
}

/// One Murasugi summand: a block of the state graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub crossings: Vec<usize>,
    /// Global circle ids of the block's vertices; local vertex `i` of
    /// `reduced` is `circles[i]`.
    pub circles: Vec<usize>,
    pub labels: Vec<Resolution>,
    pub reduced: ReducedStateGraph,
}

impl Block {
    pub fn is_tree(&self) -> bool {
        is_tree(&self.reduced)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MurasugiDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
    /// Set when the diagram is split or the state is not homogeneous, in
    /// which case the blocks carry no fibering information.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precondition: Option<FiberVerdict>,
}

pub fn murasugi_decompose(d: &LinkDiagram, sigma: &KauffmanState) -> Result<MurasugiDecomposition> {
    sigma.check(d)?;
    let precondition = precondition_verdict(d, sigma)?;
    let g = state::state_graph(d, sigma)?;
    let cut = cut_vertices(&g.reduce());

    let mut blocks: Vec<Block> = blocks_of(g.vertex_count, &g.edges)
        .into_iter()
        .map(|edge_ids| block_from_edges(&g, edge_ids))
        .collect();
    blocks.sort_by_key(|b| b.crossings[0]);

    Ok(MurasugiDecomposition {
        blocks,
        cut_vertices: cut,
        precondition,
    })
}

fn block_from_edges(g: &StateGraph, mut edge_ids: Vec<usize>) -> Block {
    edge_ids.sort_unstable();
    let circles: Vec<usize> = edge_ids
        .iter()
        .flat_map(|&i| [g.edges[i].ends.0, g.edges[i].ends.1])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let local: BTreeMap<usize, usize> = circles.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let edges: Vec<StateEdge> = edge_ids
        .iter()
        .map(|&i| {
            let e = g.edges[i];
            StateEdge {
                ends: (local[&e.ends.0], local[&e.ends.1]),
                ..e
            }
        })
        .collect();
    let labels = edges
        .iter()
        .map(|e| e.label)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let sub = StateGraph {
        vertex_count: circles.len(),
        edges,
    };
    Block {
        crossings: sub.edges.iter().map(|e| e.crossing).collect(),
        circles,
        labels,
        reduced: sub.reduce(),
    }
}

/// Combines the summands: the whole surface is a fiber exactly when every
/// block's reduced graph is a tree, i.e. a single edge.
pub fn compose_verdicts(dec: &MurasugiDecomposition) -> FiberVerdict {
    if let Some(v) = &dec.precondition {
        return v.clone();
    }
    match dec.blocks.iter().find(|b| !b.is_tree()) {
        None => FiberVerdict::Fiber,
        Some(b) => FiberVerdict::NotFiber {
            reason: NotFiberReason::GraphNotTree,
            witness: Witness::Cycle(find_cycle(&b.reduced).unwrap_or_default()),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutVertexLemmaReport {
    pub cut_vertices: Vec<usize>,
    pub prime: bool,
    pub alternating: bool,
    pub extreme_state: bool,
    /// `no cut vertices` agrees with `prime && alternating && extreme_state`.
    pub consistent: bool,
}

/// Checks that the reduced graph has no cut vertices exactly when the diagram
/// is prime and alternating and the state is all-`A` or all-`B`.
pub fn check_lemma_cut_vertices(
    d: &LinkDiagram,
    sigma: &KauffmanState,
) -> Result<CutVertexLemmaReport> {
    sigma.check(d)?;
    if !d.is_connected() || d.crossing_count() == 0 {
        return Err(Error::Preconditions(
            "lemma needs a connected diagram with a crossing".into(),
        ));
    }
    if !state::is_homogeneous(d, sigma)? || !state::is_adequate(d, sigma)? {
        return Err(Error::Preconditions(
            "lemma needs a homogeneous adequate state".into(),
        ));
    }
    let cut = cut_vertices(&state::state_graph(d, sigma)?.reduce());
    let prime = d.is_prime()?;
    let alternating = d.is_alternating();
    let extreme_state = sigma.is_constant();
    Ok(CutVertexLemmaReport {
        consistent: cut.is_empty() == (prime && alternating && extreme_state),
        cut_vertices: cut,
        prime,
        alternating,
        extreme_state,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseCaseSide {
    pub reduced_is_tree: bool,
    pub two_vertices: bool,
    /// Every crossing joins the same two distinct state circles.
    pub two_braid: bool,
    pub fiber: bool,
}

impl BaseCaseSide {
    pub fn consistent(&self) -> bool {
        let v = self.reduced_is_tree;
        self.two_vertices == v && self.two_braid == v && self.fiber == v
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseCaseReport {
    /// Positive 2-braid side, all-`A` state.
    pub a: BaseCaseSide,
    /// Negative 2-braid side, all-`B` state.
    pub b: BaseCaseSide,
}

impl BaseCaseReport {
    pub fn consistent(&self) -> bool {
        self.a.consistent() && self.b.consistent()
    }
}

/// Evaluates the four equivalent base-case conditions for a prime
/// alternating diagram, for both checkerboard states.
pub fn classify_base_case(d: &LinkDiagram) -> Result<BaseCaseReport> {
    if !d.is_connected() || d.crossing_count() == 0 {
        return Err(Error::Preconditions(
            "base case needs a connected diagram with a crossing".into(),
        ));
    }
    if !d.is_prime()? || !d.is_alternating() {
        return Err(Error::Preconditions(
            "base case needs a prime alternating diagram".into(),
        ));
    }
    let side = |r: Resolution| -> Result<BaseCaseSide> {
        let sigma = KauffmanState::constant(d.crossing_count(), r);
        let circles = state::resolve(d, &sigma)?;
        let g = state::state_graph_from_circles(d, &sigma, &circles);
        let ends: BTreeSet<(usize, usize)> = (0..d.crossing_count())
            .map(|x| {
                let (p, q) = circles.ends_at(d, x, r);
                (p.min(q), p.max(q))
            })
            .collect();
        Ok(BaseCaseSide {
            reduced_is_tree: is_tree(&g.reduce()),
            two_vertices: g.vertex_count == 2,
            two_braid: ends.len() == 1 && ends.iter().all(|&(p, q)| p != q),
            fiber: detect_fiber(d, &sigma)?.is_fiber(),
        })
    };
    Ok(BaseCaseReport {
        a: side(Resolution::A)?,
        b: side(Resolution::B)?,
    })
}
