//! Exact solvers for 3-dimensional matching and vertex cover, used as ground
//! truth for the reductions. Both return certificates.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// One triple `(r, b, y)`, coordinates 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub r: usize,
    pub b: usize,
    pub y: usize,
}

impl Triple {
    pub fn new(r: usize, b: usize, y: usize) -> Self {
        Triple { r, b, y }
    }

    /// Element indices into `W = R ∪ B ∪ Y`, 0-based, laid out as
    /// `R = 0..n`, `B = n..2n`, `Y = 2n..3n`.
    pub fn elements(&self, n: usize) -> [usize; 3] {
        [self.r - 1, n + self.b - 1, 2 * n + self.y - 1]
    }
}

/// Ground sets `R`, `B`, `Y` of size `n` each and a list of triples.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThreeDmInstance {
    pub n: usize,
    pub triples: Vec<Triple>,
}

impl ThreeDmInstance {
    pub fn new(n: usize, triples: Vec<Triple>) -> Self {
        ThreeDmInstance { n, triples }
    }

    /// `q`, the number of triples a perfect matching uses.
    pub fn q(&self) -> usize {
        self.n
    }

    /// How often each of the `3n` elements occurs across all triples.
    /// Out-of-range coordinates are ignored.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut occ = vec![0; 3 * self.n];
        for t in self.triples.iter().filter(|t| self.in_range(t)) {
            for e in t.elements(self.n) {
                occ[e] += 1;
            }
        }
        occ
    }

    fn in_range(&self, t: &Triple) -> bool {
        let ok = |x: usize| (1..=self.n).contains(&x);
        ok(t.r) && ok(t.b) && ok(t.y)
    }

    /// Coordinates in range and triples pairwise distinct.
    pub fn is_well_formed(&self) -> bool {
        let mut sorted = self.triples.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == self.triples.len() && self.triples.iter().all(|t| self.in_range(t))
    }

    /// Every element occurs in two or three triples; the degree-2 and
    /// degree-3 counts then satisfy `2·m + 3·n₃ = 3|T|`.
    pub fn is_restricted(&self) -> bool {
        let occ = self.occurrences();
        if !occ.iter().all(|&c| c == 2 || c == 3) {
            return false;
        }
        let twos = occ.iter().filter(|&&c| c == 2).count();
        let threes = occ.len() - twos;
        2 * twos + 3 * threes == 3 * self.triples.len()
    }

    /// Checks that `chosen` (indices into `triples`) is a perfect matching:
    /// exactly `n` distinct triples covering every element once.
    pub fn verify_matching(&self, chosen: &[usize]) -> Result<()> {
        if chosen.len() != self.n {
            return Err(Error::InvalidMatching(format!(
                "{} triples chosen, {} needed",
                chosen.len(),
                self.n
            )));
        }
        let mut covered = vec![false; 3 * self.n];
        for &i in chosen {
            let t = self
                .triples
                .get(i)
                .ok_or_else(|| Error::InvalidMatching(format!("no triple with index {i}")))?;
            if !self.in_range(t) {
                return Err(Error::InvalidMatching(format!(
                    "triple {i} is out of range"
                )));
            }
            for e in t.elements(self.n) {
                if covered[e] {
                    return Err(Error::InvalidMatching(format!(
                        "element {} is covered twice",
                        e + 1
                    )));
                }
                covered[e] = true;
            }
        }
        Ok(())
    }
}

/// Structural checks, plus the two-or-three-occurrence restriction when
/// `enforce_restriction` is set.
pub fn validate_3dm(inst: &ThreeDmInstance, enforce_restriction: bool) -> bool {
    inst.is_well_formed() && (!enforce_restriction || inst.is_restricted())
}

/// A perfect 3-dimensional matching as sorted triple indices, or `None`.
///
/// Backtracks over the `R` elements in order; candidate triples for each are
/// tried rarest-element first.
pub fn solve_3dm(inst: &ThreeDmInstance) -> Option<Vec<usize>> {
    let n = inst.n;
    if !inst.is_well_formed() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let occ = inst.occurrences();
    let scarcity = |i: &usize| {
        let t = inst.triples[*i];
        t.elements(n).iter().map(|&e| occ[e]).min().unwrap_or(0)
    };
    let mut by_r: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, t) in inst.triples.iter().enumerate() {
        by_r[t.r - 1].push(i);
    }
    for list in &mut by_r {
        list.sort_by_key(|i| (scarcity(i), *i));
    }
    let mut used_b = vec![false; n];
    let mut used_y = vec![false; n];
    let mut chosen = Vec::with_capacity(n);
    fn go(
        r: usize,
        inst: &ThreeDmInstance,
        by_r: &[Vec<usize>],
        used_b: &mut [bool],
        used_y: &mut [bool],
        chosen: &mut Vec<usize>,
    ) -> bool {
        if r == by_r.len() {
            return true;
        }
        for &i in &by_r[r] {
            let t = inst.triples[i];
            if used_b[t.b - 1] || used_y[t.y - 1] {
                continue;
            }
            used_b[t.b - 1] = true;
            used_y[t.y - 1] = true;
            chosen.push(i);
            if go(r + 1, inst, by_r, used_b, used_y, chosen) {
                return true;
            }
            chosen.pop();
            used_b[t.b - 1] = false;
            used_y[t.y - 1] = false;
        }
        false
    }
    if go(0, inst, &by_r, &mut used_b, &mut used_y, &mut chosen) {
        chosen.sort_unstable();
        Some(chosen)
    } else {
        None
    }
}

/// A graph and a cover budget `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCoverInstance {
    pub graph: Graph,
    pub k: usize,
}

impl VertexCoverInstance {
    pub fn new(graph: Graph, k: usize) -> Result<Self> {
        if k >= graph.vertex_count() {
            return Err(Error::Parameter(format!(
                "budget k = {k} must be below the vertex count {}",
                graph.vertex_count()
            )));
        }
        Ok(VertexCoverInstance { graph, k })
    }
}

/// `Ok(())` iff every edge of `g` has an endpoint in `cover`.
pub fn check_cover(g: &Graph, cover: &VertexSet) -> Result<()> {
    match g
        .edges()
        .find(|&(u, v)| !cover.contains(u) && !cover.contains(v))
    {
        Some((u, v)) => Err(Error::NotACover(u, v)),
        None => Ok(()),
    }
}

/// A vertex cover of size at most `k`, or `None`.
///
/// Branch and bound: take a maximum-degree vertex `v` of the remaining
/// graph and either put `v` in the cover or all of its remaining neighbors.
pub fn solve_vertex_cover(inst: &VertexCoverInstance) -> Option<VertexSet> {
    let g = &inst.graph;
    let mut removed = vec![false; g.vertex_count()];
    let mut cover = Vec::new();
    fn go(g: &Graph, removed: &mut [bool], cover: &mut Vec<usize>, budget: usize) -> bool {
        let live_deg =
            |v: usize, removed: &[bool]| g.neighbors(v).iter().filter(|&&w| !removed[w]).count();
        let pick = (0..g.vertex_count())
            .filter(|&v| !removed[v])
            .map(|v| (live_deg(v, removed), v))
            .filter(|&(d, _)| d > 0)
            .max_by_key(|&(d, v)| (d, std::cmp::Reverse(v)));
        let Some((deg, v)) = pick else {
            return true;
        };
        if budget == 0 {
            return false;
        }
        // remaining edges need at least edges / max-degree cover vertices
        let edges: usize = (0..g.vertex_count())
            .filter(|&u| !removed[u])
            .map(|u| live_deg(u, removed))
            .sum::<usize>()
            / 2;
        if edges > budget * deg {
            return false;
        }
        removed[v] = true;
        cover.push(v);
        if go(g, removed, cover, budget - 1) {
            return true;
        }
        cover.pop();
        removed[v] = false;

        let nbrs: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| !removed[w])
            .collect();
        if nbrs.len() <= budget {
            for &w in &nbrs {
                removed[w] = true;
                cover.push(w);
            }
            if go(g, removed, cover, budget - nbrs.len()) {
                return true;
            }
            for &w in &nbrs {
                removed[w] = false;
                cover.pop();
            }
        }
        false
    }
    if go(g, &mut removed, &mut cover, inst.k) {
        let cover: VertexSet = cover.into_iter().collect();
        debug_assert!(check_cover(g, &cover).is_ok());
        Some(cover)
    } else {
        None
    }
}
