//! Brute-force reference computations that share no code with the library.
//!
//! Everything here works straight from the PD text: circles are counted by
//! walking smoothing arcs, faces are traced dart by dart, and the Jones
//! polynomial is a plain sum over all states.

use std::collections::{BTreeMap, BTreeSet, HashMap};

/// A PD code as raw slot tuples plus free loops.
#[derive(Clone, Debug)]
pub struct Pd {
    pub x: Vec<[u32; 4]>,
    pub loops: usize,
}

pub fn parse(text: &str) -> Pd {
    let mut x = Vec::new();
    let mut loops = 0;
    let mut rest = text.trim();
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix('O') {
            loops += 1;
            rest = r.trim_start();
            continue;
        }
        let r = rest.strip_prefix("X(").expect("token");
        let close = r.find(')').expect("closing paren");
        let nums: Vec<u32> = r[..close]
            .split(',')
            .map(|s| s.trim().parse().unwrap())
            .collect();
        x.push([nums[0], nums[1], nums[2], nums[3]]);
        rest = r[close + 1..].trim_start();
    }
    Pd { x, loops }
}

impl Pd {
    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// The slot at the far end of the arc leaving `(c, s)`.
    pub fn far(&self, c: usize, s: usize) -> (usize, usize) {
        let label = self.x[c][s];
        for (c2, t) in self.x.iter().enumerate() {
            for (s2, &l) in t.iter().enumerate() {
                if l == label && (c2, s2) != (c, s) {
                    return (c2, s2);
                }
            }
        }
        panic!("arc {label} has one end");
    }

    /// `true` at crossing `c` means the `B` smoothing.
    fn partner(b: bool, s: usize) -> usize {
        if b {
            // a-b, c-d
            [1, 0, 3, 2][s]
        } else {
            // a-d, b-c
            [3, 2, 1, 0][s]
        }
    }

    /// Circle label of every slot under the state, and the circle count
    /// including free loops.
    pub fn circles(&self, state: &[bool]) -> (Vec<[usize; 4]>, usize) {
        let mut label = vec![[usize::MAX; 4]; self.n()];
        let mut k = 0;
        for c0 in 0..self.n() {
            for s0 in 0..4 {
                if label[c0][s0] != usize::MAX {
                    continue;
                }
                let (mut c, mut s) = (c0, s0);
                loop {
                    label[c][s] = k;
                    let p = Self::partner(state[c], s);
                    label[c][p] = k;
                    let (c2, s2) = self.far(c, p);
                    if label[c2][s2] != usize::MAX {
                        break;
                    }
                    (c, s) = (c2, s2);
                }
                k += 1;
            }
        }
        (label, k + self.loops)
    }

    /// Signs from walking each link component along under-passages `a -> c`.
    pub fn signs(&self) -> Vec<i32> {
        let mut sign = vec![0; self.n()];
        let mut seen = vec![[false; 4]; self.n()];
        for c0 in 0..self.n() {
            if seen[c0][0] {
                continue;
            }
            // Enter at slot a of c0 and follow the strand.
            let (mut c, mut s) = (c0, 0);
            while !seen[c][s] {
                seen[c][s] = true;
                let out = (s + 2) % 4;
                seen[c][out] = true;
                match s {
                    1 => sign[c] = 1,
                    3 => sign[c] = -1,
                    _ => {}
                }
                (c, s) = self.far(c, out);
            }
        }
        assert!(
            sign.iter().all(|&v| v != 0),
            "component without under-passage"
        );
        sign
    }

    pub fn writhe(&self) -> i32 {
        self.signs().iter().sum()
    }

    pub fn components(&self) -> usize {
        let mut seen = vec![[false; 4]; self.n()];
        let mut k = 0;
        for c0 in 0..self.n() {
            for s0 in 0..4 {
                if seen[c0][s0] {
                    continue;
                }
                k += 1;
                let (mut c, mut s) = (c0, s0);
                while !seen[c][s] {
                    seen[c][s] = true;
                    let out = (s + 2) % 4;
                    seen[c][out] = true;
                    (c, s) = self.far(c, out);
                }
            }
        }
        k + self.loops
    }

    /// Connected pieces of the projection, free loops included.
    pub fn pieces(&self) -> usize {
        let mut comp = vec![usize::MAX; self.n()];
        let mut k = 0;
        for start in 0..self.n() {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = k;
            while let Some(c) = stack.pop() {
                for s in 0..4 {
                    let (c2, _) = self.far(c, s);
                    if comp[c2] == usize::MAX {
                        comp[c2] = k;
                        stack.push(c2);
                    }
                }
            }
            k += 1;
        }
        k + self.loops
    }

    pub fn connected(&self) -> bool {
        self.pieces() == 1
    }

    pub fn alternating(&self) -> bool {
        // Along each strand, an under-passage (entry at a or c) must be
        // followed by an over-passage (entry at b or d).
        for c0 in 0..self.n() {
            for s0 in 0..4 {
                let out = (s0 + 2) % 4;
                let (_, s2) = self.far(c0, out);
                if s0 % 2 == s2 % 2 {
                    return false;
                }
            }
        }
        true
    }

    /// No two arcs whose removal separates the crossings.
    pub fn prime(&self) -> bool {
        let mut arcs: Vec<(usize, usize, usize, usize)> = Vec::new();
        for c in 0..self.n() {
            for s in 0..4 {
                let (c2, s2) = self.far(c, s);
                if (c, s) < (c2, s2) {
                    arcs.push((c, s, c2, s2));
                }
            }
        }
        for i in 0..arcs.len() {
            for j in i + 1..arcs.len() {
                let mut reach = vec![false; self.n()];
                reach[0] = true;
                let mut stack = vec![0];
                while let Some(c) = stack.pop() {
                    for (k, &(a, _, b, _)) in arcs.iter().enumerate() {
                        if k == i || k == j {
                            continue;
                        }
                        for (u, v) in [(a, b), (b, a)] {
                            if u == c && !reach[v] {
                                reach[v] = true;
                                stack.push(v);
                            }
                        }
                    }
                }
                if reach.iter().any(|r| !r) {
                    return false;
                }
            }
        }
        true
    }

    /// Faces as lists of `(crossing, quadrant)` with quadrant `q` between
    /// slots `q` and `q + 1`.
    pub fn faces(&self) -> Vec<Vec<(usize, usize)>> {
        let mut used = vec![[false; 4]; self.n()];
        let mut faces = Vec::new();
        for c0 in 0..self.n() {
            for q0 in 0..4 {
                if used[c0][q0] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut c, mut q) = (c0, q0);
                while !used[c][q] {
                    used[c][q] = true;
                    face.push((c, q));
                    // Leave along slot q + 1 and arrive at (c2, s2); the
                    // face continues in the corner just before s2.
                    let (c2, s2) = self.far(c, (q + 1) % 4);
                    (c, q) = (c2, s2);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Region of every crossing and whether each region carries one label.
    pub fn homogeneous(&self, state: &[bool]) -> bool {
        let faces = self.faces();
        let mut face_of = HashMap::new();
        for (f, corners) in faces.iter().enumerate() {
            for &cq in corners {
                face_of.insert(cq, f);
            }
        }
        let mut parent: Vec<usize> = (0..faces.len()).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                x = p[x];
            }
            x
        }
        for c in 0..self.n() {
            let (q1, q2) = if state[c] { (1, 3) } else { (0, 2) };
            let (f1, f2) = (face_of[&(c, q1)], face_of[&(c, q2)]);
            let (r1, r2) = (root(&mut parent, f1), root(&mut parent, f2));
            parent[r1] = r2;
        }
        let mut labels: HashMap<usize, BTreeSet<bool>> = HashMap::new();
        for c in 0..self.n() {
            let q = if state[c] { 1 } else { 0 };
            let r = root(&mut parent, face_of[&(c, q)]);
            labels.entry(r).or_default().insert(state[c]);
        }
        labels.values().all(|s| s.len() == 1)
    }

    /// State graph as `(ends, crossing)` edges over `circles` vertices.
    pub fn graph(&self, state: &[bool]) -> (usize, Vec<(usize, usize)>) {
        let (label, k) = self.circles(state);
        let edges = (0..self.n())
            .map(|c| {
                let u = label[c][0];
                let v = if state[c] { label[c][2] } else { label[c][1] };
                (u.min(v), u.max(v))
            })
            .collect();
        (k, edges)
    }

    pub fn state_report(&self, state: &[bool]) -> StateFacts {
        let (v, edges) = self.graph(state);
        let adequate = edges.iter().all(|(u, w)| u != w);
        let reduced: BTreeSet<(usize, usize)> = edges.iter().copied().collect();
        let mut comp: Vec<usize> = (0..v).collect();
        for &(u, w) in &reduced {
            let (a, b) = (find(&comp, u), find(&comp, w));
            comp[a] = b;
        }
        let graph_connected = (0..v)
            .map(|x| find(&comp, x))
            .collect::<BTreeSet<_>>()
            .len()
            == 1;
        let tree = graph_connected && reduced.len() + 1 == v && reduced.iter().all(|(u, w)| u != w);
        let homogeneous = if self.connected() {
            Some(self.homogeneous(state))
        } else {
            None
        };
        let fiber = if !self.connected() {
            "not-fiber-split"
        } else if homogeneous == Some(false) {
            "inapplicable"
        } else if tree {
            "fiber"
        } else {
            "not-fiber-graph"
        };
        StateFacts {
            circles: v,
            adequate,
            homogeneous,
            tree,
            reduced_chi: v as i64 - reduced.len() as i64,
            fiber,
        }
    }

    /// Kauffman bracket as A-exponent -> coefficient.
    pub fn bracket(&self) -> BTreeMap<i64, i128> {
        let n = self.n();
        let mut out: BTreeMap<i64, i128> = BTreeMap::new();
        for mask in 0..1u64 << n {
            let state: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            let b = state.iter().filter(|&&s| s).count() as i64;
            let (_, k) = self.circles(&state);
            // A^(#A - #B) (-A^2 - A^-2)^(k - 1)
            let mut term: BTreeMap<i64, i128> = BTreeMap::from([(n as i64 - 2 * b, 1)]);
            for _ in 1..k {
                let mut next = BTreeMap::new();
                for (&e, &c) in &term {
                    *next.entry(e + 2).or_insert(0) -= c;
                    *next.entry(e - 2).or_insert(0) -= c;
                }
                term = next;
            }
            for (e, c) in term {
                *out.entry(e).or_insert(0) += c;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Jones polynomial as `t^(1/2)`-exponent -> coefficient.
    pub fn jones(&self) -> BTreeMap<i64, i128> {
        let w = self.writhe() as i64;
        let sign = if w % 2 == 0 { 1 } else { -1 };
        self.bracket()
            .into_iter()
            .map(|(e, c)| (-(e - 3 * w) / 2, sign * c))
            .collect()
    }
}

fn find(p: &[usize], mut x: usize) -> usize {
    while p[x] != x {
        x = p[x];
    }
    x
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateFacts {
    pub circles: usize,
    pub adequate: bool,
    pub homogeneous: Option<bool>,
    pub tree: bool,
    pub reduced_chi: i64,
    pub fiber: &'static str,
}

/// Canonical text of a `t^(1/2)` polynomial.
pub fn canonical(p: &BTreeMap<i64, i128>) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.iter()
        .map(|(e, c)| format!("{c}*t^({e}/2)"))
        .collect::<Vec<_>>()
        .join(",")
}

/// `(alpha, beta, beta', alpha')` of a nonzero Jones polynomial.
pub fn extremes(p: &BTreeMap<i64, i128>) -> (i128, i128, i128, i128) {
    let k = *p.keys().next_back().unwrap();
    let m = *p.keys().next().unwrap();
    let at = |e: i64| p.get(&e).copied().unwrap_or(0);
    (at(k), at(k - 2), at(m + 2), at(m))
}

pub fn all_states(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0..1u64 << n).map(move |m| (0..n).map(|i| m >> i & 1 == 1).collect())
}
