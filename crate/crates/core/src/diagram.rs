//! Link diagrams in PD notation.
//!
//! Each crossing lists the four arcs meeting it, starting from the incoming
//! under-strand and proceeding around the crossing. The under-strand runs from
//! slot `a` to slot `c`; the over-strand joins `b` and `d`. A crossing is
//! positive when the over-strand runs from `b` to `d`, so that
//! `X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)` is the positive (right-handed) trefoil.
//! Orientation is recovered from the under-strand passages and the
//! consecutive arc numbering of each link component.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::union_find::UnionFind;

pub type ArcId = u32;

pub const SLOT_A: usize = 0;
pub const SLOT_B: usize = 1;
pub const SLOT_C: usize = 2;
pub const SLOT_D: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Crossing {
    pub slots: [ArcId; 4],
}

impl Crossing {
    pub fn new(a: ArcId, b: ArcId, c: ArcId, d: ArcId) -> Self {
        Crossing {
            slots: [a, b, c, d],
        }
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.slots;
        write!(f, "X({a},{b},{c},{d})")
    }
}

/// One end of an arc: a slot position at a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlotRef {
    pub crossing: usize,
    pub slot: usize,
}

/// The corner of a crossing lying between two cyclically adjacent slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quadrant {
    Ab,
    Bc,
    Cd,
    Da,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::Ab, Quadrant::Bc, Quadrant::Cd, Quadrant::Da];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i % 4]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Corner {
    pub crossing: usize,
    pub quadrant: Quadrant,
}

/// A complementary region of the projection, as its cyclic list of corners.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub id: usize,
    pub corners: Vec<Corner>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// Passage of a link component through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Passage {
    pub crossing: usize,
    pub enter: usize,
    pub exit: usize,
}

impl Passage {
    pub fn is_under(&self) -> bool {
        self.enter.is_multiple_of(2)
    }
}

#[derive(Clone, Debug)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
    /// Sorted distinct arc labels; dense arc indices refer into this.
    arcs: Vec<ArcId>,
    slot_arc: Vec<[usize; 4]>,
    ends: Vec<[SlotRef; 2]>,
    faces: Vec<Face>,
    face_of: Vec<[usize; 4]>,
    crossing_component: Vec<usize>,
    crossing_component_count: usize,
    strands: Vec<Vec<Passage>>,
    /// Per crossing, whether the over-strand runs from `b` to `d`.
    over_forward: Result<Vec<bool>, String>,
}

impl PartialEq for LinkDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings && self.free_loops == other.free_loops
    }
}

impl Eq for LinkDiagram {}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    crossings: Vec<[ArcId; 4]>,
    free_loops: usize,
}

impl LinkDiagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self> {
        let mut count: BTreeMap<ArcId, usize> = BTreeMap::new();
        for x in &crossings {
            for &arc in &x.slots {
                *count.entry(arc).or_default() += 1;
            }
        }
        if let Some((&arc, &c)) = count.iter().find(|(_, &c)| c != 2) {
            return Err(Error::ArcCount { arc, count: c });
        }
        let arcs: Vec<ArcId> = count.keys().copied().collect();

        let mut ends: Vec<Vec<SlotRef>> = vec![Vec::with_capacity(2); arcs.len()];
        let mut slot_arc = Vec::with_capacity(crossings.len());
        for (i, x) in crossings.iter().enumerate() {
            let mut dense = [0; 4];
            for (s, arc) in x.slots.iter().enumerate() {
                let k = arcs.binary_search(arc).unwrap();
                dense[s] = k;
                ends[k].push(SlotRef {
                    crossing: i,
                    slot: s,
                });
            }
            slot_arc.push(dense);
        }
        let ends: Vec<[SlotRef; 2]> = ends.into_iter().map(|e| [e[0], e[1]]).collect();

        let mut uf = UnionFind::new(crossings.len());
        for [p, q] in &ends {
            uf.union(p.crossing, q.crossing);
        }
        let (crossing_component, crossing_component_count) = uf.labels();

        let mut d = LinkDiagram {
            crossings,
            free_loops,
            arcs,
            slot_arc,
            ends,
            faces: Vec::new(),
            face_of: Vec::new(),
            crossing_component,
            crossing_component_count,
            strands: Vec::new(),
            over_forward: Ok(Vec::new()),
        };
        d.trace_faces();
        d.check_euler()?;
        d.trace_strands();
        Ok(d)
    }

    pub fn unknot() -> Self {
        LinkDiagram::new(Vec::new(), 1).unwrap()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Sorted labels of all arcs meeting a crossing.
    pub fn arcs(&self) -> &[ArcId] {
        &self.arcs
    }

    /// Dense index of the arc occupying a slot.
    pub fn slot_arc(&self, crossing: usize, slot: usize) -> usize {
        self.slot_arc[crossing][slot]
    }

    pub fn arc_index(&self, arc: ArcId) -> Option<usize> {
        self.arcs.binary_search(&arc).ok()
    }

    pub fn arc_ends(&self, dense: usize) -> [SlotRef; 2] {
        self.ends[dense]
    }

    pub fn other_end(&self, s: SlotRef) -> SlotRef {
        let [p, q] = self.ends[self.slot_arc[s.crossing][s.slot]];
        if p == s {
            q
        } else {
            p
        }
    }

    /// Number of link components, free loops included.
    pub fn link_components(&self) -> usize {
        self.strands.len() + self.free_loops
    }

    /// The crossing passages of each link component that meets a crossing.
    pub fn strands(&self) -> &[Vec<Passage>] {
        &self.strands
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_at(&self, crossing: usize, quadrant: Quadrant) -> usize {
        self.face_of[crossing][quadrant.index()]
    }

    /// Index of the connected piece of the projection containing a crossing.
    pub fn crossing_component(&self, crossing: usize) -> usize {
        self.crossing_component[crossing]
    }

    pub fn is_connected(&self) -> bool {
        self.crossing_component_count + self.free_loops <= 1
    }

    /// Connected pieces of the diagram (in order of their first crossing),
    /// followed by one single-loop diagram per free loop.
    pub fn split_components(&self) -> Vec<LinkDiagram> {
        let mut pieces: Vec<Vec<Crossing>> = vec![Vec::new(); self.crossing_component_count];
        for (i, x) in self.crossings.iter().enumerate() {
            pieces[self.crossing_component[i]].push(*x);
        }
        let mut out: Vec<LinkDiagram> = pieces
            .into_iter()
            .map(|xs| LinkDiagram::new(xs, 0).expect("sub-diagram of a valid diagram"))
            .collect();
        out.extend((0..self.free_loops).map(|_| LinkDiagram::unknot()));
        out
    }

    /// Crossing indices of each split component; free loops give empty lists.
    pub fn split_crossing_sets(&self) -> Vec<Vec<usize>> {
        let mut sets = vec![Vec::new(); self.crossing_component_count];
        for i in 0..self.crossings.len() {
            sets[self.crossing_component[i]].push(i);
        }
        sets.extend((0..self.free_loops).map(|_| Vec::new()));
        sets
    }

    pub fn is_alternating(&self) -> bool {
        self.strands.iter().all(|strand| {
            let n = strand.len();
            (0..n).all(|i| strand[i].is_under() != strand[(i + 1) % n].is_under())
        })
    }

    /// Decides primeness through 2-arc cuts of the projection graph.
    pub fn is_prime(&self) -> Result<bool> {
        if !self.is_connected() {
            return Err(Error::Preconditions(
                "primeness needs a connected diagram".into(),
            ));
        }
        if self.crossings.is_empty() {
            return Err(Error::Preconditions(
                "primeness needs at least one crossing".into(),
            ));
        }
        let m = self.arcs.len();
        for i in 0..m {
            for j in i + 1..m {
                let mut uf = UnionFind::new(self.crossings.len());
                let mut parts = self.crossings.len();
                for (k, [p, q]) in self.ends.iter().enumerate() {
                    if k != i && k != j && uf.union(p.crossing, q.crossing) {
                        parts -= 1;
                    }
                }
                if parts > 1 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn over_forward(&self) -> Result<&[bool]> {
        self.over_forward
            .as_deref()
            .map_err(|e| Error::Orientation(e.clone()))
    }

    pub fn is_oriented(&self) -> bool {
        self.over_forward.is_ok()
    }

    pub fn crossing_sign(&self, crossing: usize) -> Result<Sign> {
        let fwd = self.over_forward()?;
        Ok(if fwd[crossing] {
            Sign::Positive
        } else {
            Sign::Negative
        })
    }

    pub fn writhe(&self) -> Result<i32> {
        let fwd = self.over_forward()?;
        Ok(fwd.iter().map(|&f| if f { 1 } else { -1 }).sum())
    }

    /// Swaps over and under at every crossing by rotating each slot tuple so
    /// that it starts at the incoming end of the former over-strand.
    pub fn mirror(&self) -> LinkDiagram {
        let fwd = self.over_forward.as_ref().ok();
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let [a, b, c, d] = x.slots;
                if fwd.is_none_or(|f| f[i]) {
                    Crossing::new(b, c, d, a)
                } else {
                    Crossing::new(d, a, b, c)
                }
            })
            .collect();
        LinkDiagram::new(crossings, self.free_loops).expect("mirror preserves validity")
    }

    /// Arc ids addressing the free loops, numbered after the largest arc label.
    pub fn free_loop_arcs(&self) -> Vec<ArcId> {
        let top = self.arcs.last().copied().unwrap_or(0);
        (0..self.free_loops as ArcId).map(|i| top + 1 + i).collect()
    }

    /// Inserts a Reidemeister-I kink of the given sign on an arc.
    pub fn add_r1_kink(&self, arc: ArcId, sign: Sign) -> Result<LinkDiagram> {
        let top = self.arcs.last().copied().unwrap_or(0);
        let kink = |first: ArcId, loop_arc: ArcId, last: ArcId| match sign {
            Sign::Positive => Crossing::new(first, loop_arc, loop_arc, last),
            Sign::Negative => Crossing::new(first, last, loop_arc, loop_arc),
        };

        if arc > top && ((arc - top) as usize) <= self.free_loops {
            let mut crossings = self.crossings.clone();
            crossings.push(kink(top + 1, top + 2, top + 1));
            return LinkDiagram::new(crossings, self.free_loops - 1);
        }

        let dense = self.arc_index(arc).ok_or(Error::InvalidArc(arc))?;
        let fwd = self.over_forward()?;
        let incoming = |s: &SlotRef| match s.slot {
            SLOT_A => true,
            SLOT_B => fwd[s.crossing],
            SLOT_D => !fwd[s.crossing],
            _ => false,
        };
        let head = *self.ends[dense]
            .iter()
            .find(|s| incoming(s))
            .ok_or_else(|| Error::Orientation(format!("arc {arc} has no incoming end")))?;

        let mut crossings: Vec<Crossing> = self
            .crossings
            .iter()
            .map(|x| Crossing {
                slots: x.slots.map(|l| if l > arc { l + 2 } else { l }),
            })
            .collect();
        crossings[head.crossing].slots[head.slot] = arc + 2;
        crossings.push(kink(arc, arc + 1, arc + 2));
        LinkDiagram::new(crossings, self.free_loops)
    }

    pub fn to_json(&self) -> String {
        let j = DiagramJson {
            crossings: self.crossings.iter().map(|x| x.slots).collect(),
            free_loops: self.free_loops,
        };
        serde_json::to_string(&j).expect("diagram JSON serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: DiagramJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let crossings = j
            .crossings
            .into_iter()
            .map(|slots| Crossing { slots })
            .collect();
        LinkDiagram::new(crossings, j.free_loops)
    }

    /// Accepts either PD text or the JSON diagram schema.
    pub fn parse_any(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            parse_pd(text)
        }
    }

    fn trace_faces(&mut self) {
        let n = self.crossings.len();
        let mut face_of = vec![[usize::MAX; 4]; n];
        let mut faces = Vec::new();
        for x in 0..n {
            for q in 0..4 {
                if face_of[x][q] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut corners = Vec::new();
                let (mut cx, mut cq) = (x, q);
                while face_of[cx][cq] == usize::MAX {
                    face_of[cx][cq] = id;
                    corners.push(Corner {
                        crossing: cx,
                        quadrant: Quadrant::from_index(cq),
                    });
                    let next = self.other_end(SlotRef {
                        crossing: cx,
                        slot: (cq + 1) % 4,
                    });
                    cx = next.crossing;
                    cq = next.slot;
                }
                faces.push(Face { id, corners });
            }
        }
        self.faces = faces;
        self.face_of = face_of;
    }

    fn check_euler(&self) -> Result<()> {
        let k = self.crossing_component_count;
        let mut crossings = vec![0usize; k];
        let mut first = vec![usize::MAX; k];
        for (i, &c) in self.crossing_component.iter().enumerate() {
            crossings[c] += 1;
            first[c] = first[c].min(i);
        }
        let mut faces = vec![0usize; k];
        for f in &self.faces {
            faces[self.crossing_component[f.corners[0].crossing]] += 1;
        }
        for c in 0..k {
            if faces[c] != crossings[c] + 2 {
                return Err(Error::NonPlanar {
                    crossing: first[c],
                    faces: faces[c],
                    expected: crossings[c] + 2,
                });
            }
        }
        Ok(())
    }

    fn trace_strands(&mut self) {
        let mut visited = vec![false; self.arcs.len()];
        let mut strands = Vec::new();
        let mut over_forward = vec![false; self.crossings.len()];
        let mut problem: Option<String> = None;

        for start in 0..self.arcs.len() {
            if visited[start] {
                continue;
            }
            let mut passages = Vec::new();
            let mut labels = Vec::new();
            let first = self.ends[start][0];
            let mut arrive = first;
            loop {
                let arc = self.slot_arc[arrive.crossing][arrive.slot];
                visited[arc] = true;
                labels.push(self.arcs[arc]);
                let exit = (arrive.slot + 2) % 4;
                passages.push(Passage {
                    crossing: arrive.crossing,
                    enter: arrive.slot,
                    exit,
                });
                arrive = self.other_end(SlotRef {
                    crossing: arrive.crossing,
                    slot: exit,
                });
                if arrive == first {
                    break;
                }
            }

            match orient_strand(&passages, &labels) {
                Ok(reverse) => {
                    if reverse {
                        passages.reverse();
                        for p in &mut passages {
                            std::mem::swap(&mut p.enter, &mut p.exit);
                        }
                    }
                    for p in passages.iter().filter(|p| !p.is_under()) {
                        over_forward[p.crossing] = p.enter == SLOT_B;
                    }
                }
                Err(e) => {
                    problem.get_or_insert(format!("{e} (component through arc {})", labels[0]));
                }
            }
            strands.push(passages);
        }

        self.strands = strands;
        self.over_forward = match problem {
            None => Ok(over_forward),
            Some(e) => Err(e),
        };
    }
}

/// Decides whether a traced component must be reversed. `labels[i]` is the
/// arc along which the trace arrives at `passages[i]`.
fn orient_strand(passages: &[Passage], labels: &[ArcId]) -> Result<bool, String> {
    let mut lo = labels.to_vec();
    lo.sort_unstable();
    let (min, max) = (lo[0], lo[lo.len() - 1]);
    if lo.windows(2).any(|w| w[1] != w[0] + 1) {
        return Err("arc numbering is not consecutive".into());
    }
    let succ = |l: ArcId| if l == max { min } else { l + 1 };

    let n = labels.len();
    // labels[i] arrives at passages[i]; the next arc leaves it.
    let ascending = (0..n).all(|i| labels[(i + 1) % n] == succ(labels[i]));
    let descending = (0..n).all(|i| labels[i] == succ(labels[(i + 1) % n]));

    let mut under = passages.iter().filter(|p| p.is_under());
    let reverse = match under.next() {
        Some(p) => {
            let backward = p.enter == SLOT_C;
            if under.any(|q| (q.enter == SLOT_C) != backward) {
                return Err("under-strand directions disagree".into());
            }
            backward
        }
        None => !ascending,
    };
    let numbered_ok = if reverse { descending } else { ascending };
    if !numbered_ok {
        return Err("arc numbering does not follow the strand direction".into());
    }
    Ok(reverse)
}

/// Parses whitespace-separated `X(a,b,c,d)` tokens and `O` free-loop tokens.
pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    let mut crossings = Vec::new();
    let mut free_loops = 0;
    let mut rest = text.trim_start();
    if rest.is_empty() {
        return Err(Error::Malformed {
            token: String::new(),
            reason: "empty diagram".into(),
        });
    }
    while !rest.is_empty() {
        let (token, tail) = if rest.starts_with("X(") || rest.starts_with("X (") {
            match rest.find(')') {
                Some(end) => rest.split_at(end + 1),
                None => {
                    return Err(Error::Malformed {
                        token: rest.to_string(),
                        reason: "missing `)`".into(),
                    })
                }
            }
        } else {
            rest.split_at(rest.find(char::is_whitespace).unwrap_or(rest.len()))
        };
        if token == "O" {
            free_loops += 1;
        } else {
            crossings.push(parse_crossing(token)?);
        }
        rest = tail.trim_start();
    }
    LinkDiagram::new(crossings, free_loops)
}

fn parse_crossing(token: &str) -> Result<Crossing> {
    let bad = |reason: &str| Error::Malformed {
        token: token.to_string(),
        reason: reason.to_string(),
    };
    let inner = token
        .strip_prefix('X')
        .map(str::trim_start)
        .and_then(|t| t.strip_prefix('('))
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| bad("expected `X(a,b,c,d)` or `O`"))?;
    let ids: Vec<ArcId> = inner
        .split(',')
        .map(|s| s.trim().parse::<ArcId>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| bad("arc ids must be non-negative integers"))?;
    let slots: [ArcId; 4] = ids
        .try_into()
        .map_err(|_| bad("a crossing has exactly four slots"))?;
    Ok(Crossing { slots })
}

impl FromStr for LinkDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pd(s)
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.crossings {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        for _ in 0..self.free_loops {
            if !first {
                f.write_str(" ")?;
            }
            f.write_str("O")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    const FIGURE8: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
    const GRANNY: &str = "X(12,3,1,4) X(10,1,11,2) X(2,11,3,12) X(7,4,8,5) X(9,6,10,7) X(5,8,6,9)";

    fn pd(s: &str) -> LinkDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn parses_trefoil() {
        let d = pd(TREFOIL);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.arc_count(), 6);
        assert_eq!(d.free_loops(), 0);
        assert!(d.is_connected());
        assert_eq!(d.link_components(), 1);
        assert_eq!(d.to_string(), TREFOIL);
    }

    #[test]
    fn parses_free_loops() {
        let d = pd("O");
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.free_loops(), 1);
        assert!(d.is_connected());
        assert!(d.is_alternating());

        let u = pd("O O");
        assert!(!u.is_connected());
        assert_eq!(u.split_components().len(), 2);
    }

    #[test]
    fn kink_is_accepted() {
        let d = pd("X(1,2,2,1)");
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.faces().len(), 3);
        assert_eq!(d.writhe().unwrap(), 1);
        assert!(d.is_prime().unwrap());
        assert!(d.is_alternating());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_pd("X(1,2,3)"), Err(Error::Malformed { .. })));
        assert!(matches!(
            parse_pd("Y(1,2,3,4)"),
            Err(Error::Malformed { .. })
        ));
        assert!(matches!(
            parse_pd("X(1,2,3,4"),
            Err(Error::Malformed { .. })
        ));
        assert!(matches!(parse_pd("  "), Err(Error::Malformed { .. })));
        assert_eq!(
            parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,7)").unwrap_err(),
            Error::ArcCount { arc: 3, count: 1 }
        );
    }

    #[test]
    fn rejects_non_planar_pairing() {
        // Pairs like a trefoil but with one crossing's slots permuted so the
        // rotation system no longer embeds in the sphere.
        let err = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,6,2,3)").unwrap_err();
        assert!(matches!(err, Error::NonPlanar { .. }), "{err:?}");
    }

    #[test]
    fn face_counts() {
        assert_eq!(pd(TREFOIL).faces().len(), 5);
        assert_eq!(pd(FIGURE8).faces().len(), 6);
        let d = pd(GRANNY);
        assert_eq!(d.faces().len(), 8);
        let mut seen = std::collections::HashSet::new();
        for f in d.faces() {
            for c in &f.corners {
                assert!(seen.insert((c.crossing, c.quadrant)));
            }
        }
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn writhe_and_mirror() {
        let t = pd(TREFOIL);
        assert_eq!(t.writhe().unwrap(), 3);
        let m = t.mirror();
        assert_eq!(m.writhe().unwrap(), -3);
        assert_eq!(m.mirror(), t);
        assert_eq!(pd(FIGURE8).writhe().unwrap(), 0);
        for i in 0..3 {
            assert_eq!(m.crossing_sign(i).unwrap(), Sign::Negative);
        }
    }

    #[test]
    fn orientation_errors_are_reported() {
        // Valid planar pairing, but the arc labels skip around the component.
        let d = pd("X(1,6,2,5) X(3,4,6,1) X(5,2,4,3)");
        assert!(matches!(d.writhe(), Err(Error::Orientation(_))));
    }

    #[test]
    fn alternation() {
        assert!(pd(TREFOIL).is_alternating());
        assert!(pd(FIGURE8).is_alternating());
        // Trefoil with one crossing switched.
        assert!(!pd("X(4,2,5,1) X(3,6,4,1) X(5,2,6,3)").is_alternating());
    }

    #[test]
    fn primeness() {
        assert!(pd(TREFOIL).is_prime().unwrap());
        assert!(pd(FIGURE8).is_prime().unwrap());
        assert!(!pd(GRANNY).is_prime().unwrap());
        assert!(pd("O").is_prime().is_err());
        assert_eq!(
            pd(TREFOIL).is_prime().unwrap(),
            pd(TREFOIL).mirror().is_prime().unwrap()
        );
    }

    #[test]
    fn kinks() {
        let u = LinkDiagram::unknot();
        let k = u
            .add_r1_kink(u.free_loop_arcs()[0], Sign::Positive)
            .unwrap();
        assert_eq!(k, pd("X(1,2,2,1)"));
        let k = u.add_r1_kink(1, Sign::Negative).unwrap();
        assert_eq!(k.writhe().unwrap(), -1);

        let t = pd(TREFOIL);
        for arc in 1..=6 {
            for sign in [Sign::Positive, Sign::Negative] {
                let k = t.add_r1_kink(arc, sign).unwrap();
                assert_eq!(k.crossing_count(), 4);
                assert_eq!(k.writhe().unwrap(), 3 + sign.value());
            }
        }
        assert_eq!(t.add_r1_kink(9, Sign::Positive), Err(Error::InvalidArc(9)));
    }

    #[test]
    fn json_roundtrip_is_stable() {
        let d = pd(&format!("{TREFOIL} O"));
        let j = d.to_json();
        assert_eq!(
            j,
            r#"{"crossings":[[1,4,2,5],[3,6,4,1],[5,2,6,3]],"free_loops":1}"#
        );
        assert_eq!(LinkDiagram::parse_any(&j).unwrap(), d);
        assert!(matches!(LinkDiagram::from_json("{"), Err(Error::Json(_))));
    }

    #[test]
    fn split_components_keep_pieces() {
        let d = pd(&format!("{TREFOIL} O"));
        assert!(!d.is_connected());
        let parts = d.split_components();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], pd(TREFOIL));
        assert_eq!(parts[1], pd("O"));
    }
}
