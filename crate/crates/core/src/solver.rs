//! Exact `κ(G; K_{1,M})` and `κ^s(G; K_{1,M})`.
//!
//! The search runs iterative deepening on the family size `t`. For each `t`
//! it walks families `s_1 < s_2 < ... < s_t` of pairwise disjoint stars in
//! canonical lexicographic order (centers strictly increase, leaves are
//! compared as sorted lists), so the first family that cuts the graph is
//! the lexicographically least certificate of minimum size.
//!
//! Two correctness-preserving prunings can be switched off for testing:
//!
//! * the *center filter* skips a center at the last level when nothing its
//!   star can delete would separate the graph: the vertices outside its
//!   closed neighborhood stay connected, and every neighbor that might
//!   survive either touches them or needs more than `M` further deletions
//!   to be cut loose;
//! * *symmetry* skips a star whose vertex set is also the vertex set of a
//!   star with a smaller center (only vertex sets matter for cutting, and the
//!   smaller-center copy is the lexicographically smaller choice).
//!
//! [`Oracle`] recomputes the same quantities by enumerating every vertex
//! subset whose removal disconnects the graph and partitioning it into
//! stars; it shares no code with the search beyond the graph type.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bitset::{BitGraph, Bits};
use crate::cut::{CutFamily, CutKind, Star, Triviality};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub triviality: Triviality,
    pub center_filter: bool,
    pub symmetry: bool,
    /// Worker threads for the first search level; 1 runs sequentially.
    pub threads: usize,
    /// Wall-clock budget. When it runs out the result reports the largest
    /// family size that was fully explored.
    pub time_limit: Option<Duration>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            triviality: Triviality::AtMostOne,
            center_filter: true,
            symmetry: true,
            threads: 1,
            time_limit: None,
        }
    }
}

impl SolveOptions {
    pub fn with_triviality(mut self, triviality: Triviality) -> Self {
        self.triviality = triviality;
        self
    }

    /// All prunings off: plain lexicographic enumeration.
    pub fn unpruned(mut self) -> Self {
        self.center_filter = false;
        self.symmetry = false;
        self
    }
}

/// Outcome of a bounded connectivity computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub kind: CutKind,
    pub m: usize,
    pub t_max: usize,
    /// The connectivity, if a cut with at most `t_max` elements exists.
    pub value: Option<usize>,
    /// A minimum cut when `value` is present.
    pub certificate: Option<CutFamily>,
    /// Largest family size searched exhaustively.
    pub bound: usize,
}

impl SolveResult {
    /// False only when the time limit stopped the search before `t_max`.
    pub fn is_complete(&self) -> bool {
        self.value.is_some() || self.bound >= self.t_max
    }

    /// Answer to "is the connectivity at most `t_max`?", or `None` when the
    /// search was cut short.
    pub fn decision(&self) -> Option<bool> {
        match (self.value, self.is_complete()) {
            (Some(_), _) => Some(true),
            (None, true) => Some(false),
            (None, false) => None,
        }
    }
}

/// Visits leaf index sets in lexicographic order: all `m`-subsets of `0..k`
/// when `exact`, otherwise every subset of size at most `m` in preorder
/// (`[]`, `[0]`, `[0,1]`, ..., `[1]`, ...).
struct LeafSubsets {
    k: usize,
    m: usize,
    exact: bool,
    cur: Vec<usize>,
    started: bool,
    done: bool,
}

impl LeafSubsets {
    fn new(k: usize, m: usize, exact: bool) -> Self {
        LeafSubsets {
            k,
            m,
            exact,
            cur: Vec::with_capacity(m),
            started: false,
            done: exact && m > k,
        }
    }

    fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.exact {
                self.cur.extend(0..self.m);
            }
            return Some(&self.cur);
        }
        if self.exact {
            // rightmost position that can still move
            let (k, m) = (self.k, self.m);
            let Some(i) = (0..m).rev().find(|&i| self.cur[i] < k - m + i) else {
                self.done = true;
                return None;
            };
            self.cur[i] += 1;
            for j in i + 1..m {
                self.cur[j] = self.cur[j - 1] + 1;
            }
        } else {
            let next = self.cur.last().map_or(0, |&x| x + 1);
            if self.cur.len() < self.m && next < self.k {
                self.cur.push(next);
            } else {
                loop {
                    match self.cur.pop() {
                        None => {
                            self.done = true;
                            return None;
                        }
                        Some(x) if x + 1 < self.k => {
                            self.cur.push(x + 1);
                            break;
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Some(&self.cur)
    }
}

/// All stars usable as cut elements, canonical and in lexicographic order.
/// With `exact` only `K_{1,M}` copies are listed (centers of degree at least
/// `M`); otherwise every star with at most `M` leaves, including `K_1`.
pub fn enumerate_stars(g: &Graph, m: usize, exact: bool) -> Vec<Star> {
    let mut out = Vec::new();
    for c in 0..g.vertex_count() {
        let nbrs = g.neighbors(c);
        let mut subsets = LeafSubsets::new(nbrs.len(), m, exact);
        while let Some(idx) = subsets.advance() {
            if idx.len() == 1 && nbrs[idx[0]] < c {
                continue;
            }
            let star =
                Star::new(c, idx.iter().map(|&i| nbrs[i])).expect("a neighbor is never the center");
            out.push(star);
        }
    }
    out
}

enum Outcome {
    Found(Vec<Star>),
    NotFound,
    Aborted,
}

struct Search<'a> {
    g: &'a Graph,
    bits: BitGraph,
    kind: CutKind,
    m: usize,
    opts: &'a SolveOptions,
    deadline: Option<Instant>,
    abort: AtomicBool,
}

const TICKS_PER_CLOCK_CHECK: u64 = 2048;

impl<'a> Search<'a> {
    fn exact(&self) -> bool {
        self.kind == CutKind::Structure
    }

    fn tick(&self, ticks: &mut u64) -> bool {
        *ticks += 1;
        if (*ticks).is_multiple_of(TICKS_PER_CLOCK_CHECK) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.abort.store(true, Ordering::Relaxed);
                }
            }
        }
        self.abort.load(Ordering::Relaxed)
    }

    fn is_cut(&self, alive: &Bits) -> bool {
        let left = alive.count();
        if self.opts.triviality.is_trivial(left) {
            return true;
        }
        left >= 2 && !self.bits.is_connected_within(alive)
    }

    /// Last-level pruning for center `c`; true means no star centered at `c`
    /// can finish a cut from the current `alive` set.
    fn skip_center(&self, c: usize, alive: &Bits, cand: &[usize]) -> bool {
        let mut outside = alive.clone();
        outside.clear(c);
        for &v in cand {
            outside.clear(v);
        }
        // at least two survivors no matter which leaves are taken
        if outside.count() < 2 || !self.bits.is_connected_within(&outside) {
            return false;
        }
        let mut attached = Bits::zeros(self.bits.n());
        let mut private = Vec::new();
        for &v in cand {
            if self.bits.row(v).intersects(&outside) {
                attached.set(v);
            } else {
                private.push(v);
            }
        }
        // A survivor can only be cut loose from the connected outside if it
        // is private and all of its attached neighbors become leaves.
        private.iter().all(|&p| {
            let hit = self.bits.row(p).iter().filter(|&v| attached.get(v)).count();
            hit > self.m
        })
    }

    /// Whether some star with smaller center spans the same vertex set.
    fn has_smaller_twin(&self, c: usize, leaves: &[usize], span: &Bits) -> bool {
        leaves.iter().any(|&l| {
            l < c && {
                let mut rest = span.clone();
                rest.clear(l);
                rest.is_subset(self.bits.row(l))
            }
        })
    }

    fn subtree(
        &self,
        c: usize,
        depth: usize,
        t: usize,
        alive: &Bits,
        chosen: &mut Vec<Star>,
        ticks: &mut u64,
    ) -> Option<Vec<Star>> {
        let nbrs: Vec<usize> = self
            .g
            .neighbors(c)
            .iter()
            .copied()
            .filter(|&v| alive.get(v))
            .collect();
        let exact = self.exact();
        if exact && nbrs.len() < self.m {
            return None;
        }
        let last = depth + 1 == t;
        if last && self.opts.center_filter && self.skip_center(c, alive, &nbrs) {
            return None;
        }
        let mut subsets = LeafSubsets::new(nbrs.len(), self.m, exact);
        while let Some(idx) = subsets.advance() {
            if idx.len() == 1 && nbrs[idx[0]] < c {
                continue;
            }
            let leaves: Vec<usize> = idx.iter().map(|&i| nbrs[i]).collect();
            let mut span = Bits::zeros(self.bits.n());
            span.set(c);
            leaves.iter().for_each(|&l| span.set(l));
            if self.opts.symmetry && leaves.len() >= 2 && self.has_smaller_twin(c, &leaves, &span) {
                continue;
            }
            let mut rest = alive.clone();
            rest.difference_with(&span);
            let star = Star::new(c, leaves).expect("a neighbor is never the center");
            if last {
                if self.tick(ticks) {
                    return None;
                }
                if self.is_cut(&rest) {
                    let mut fam = chosen.clone();
                    fam.push(star);
                    return Some(fam);
                }
            } else {
                chosen.push(star);
                let found = self.level(depth + 1, t, c + 1, &rest, chosen, ticks);
                chosen.pop();
                if found.is_some() {
                    return found;
                }
                if self.abort.load(Ordering::Relaxed) {
                    return None;
                }
            }
        }
        None
    }

    fn level(
        &self,
        depth: usize,
        t: usize,
        min_center: usize,
        alive: &Bits,
        chosen: &mut Vec<Star>,
        ticks: &mut u64,
    ) -> Option<Vec<Star>> {
        for c in min_center..self.g.vertex_count() {
            if !alive.get(c) {
                continue;
            }
            if let Some(f) = self.subtree(c, depth, t, alive, chosen, ticks) {
                return Some(f);
            }
            if self.abort.load(Ordering::Relaxed) {
                return None;
            }
        }
        None
    }

    fn run(&self, t: usize) -> Outcome {
        let n = self.g.vertex_count();
        let alive = Bits::ones(n);
        let found = if self.opts.threads <= 1 {
            let mut ticks = 0;
            self.level(0, t, 0, &alive, &mut Vec::new(), &mut ticks)
        } else {
            // Subtrees are keyed by first center; taking the first hit in
            // center order keeps the certificate independent of scheduling.
            (0..n).into_par_iter().find_map_first(|c| {
                let mut ticks = 0;
                self.subtree(c, 0, t, &alive, &mut Vec::new(), &mut ticks)
            })
        };
        if self.abort.load(Ordering::Relaxed) {
            Outcome::Aborted
        } else {
            match found {
                Some(f) => Outcome::Found(f),
                None => Outcome::NotFound,
            }
        }
    }
}

fn check_input(g: &Graph, t_max: usize) -> Result<()> {
    if g.vertex_count() < 2 || !g.is_connected() {
        return Err(Error::DegenerateInput);
    }
    if t_max == 0 {
        return Err(Error::Parameter("t_max must be at least 1".into()));
    }
    Ok(())
}

/// Exact connectivity of the requested kind, searching families of up to
/// `t_max` stars.
pub fn solve(
    g: &Graph,
    kind: CutKind,
    m: usize,
    t_max: usize,
    opts: &SolveOptions,
) -> Result<SolveResult> {
    check_input(g, t_max)?;
    let search = Search {
        g,
        bits: BitGraph::new(g),
        kind,
        m,
        opts,
        deadline: opts.time_limit.map(|d| Instant::now() + d),
        abort: AtomicBool::new(false),
    };
    let pool = if opts.threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.threads)
                .build()
                .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?,
        )
    } else {
        None
    };
    let mut result = SolveResult {
        kind,
        m,
        t_max,
        value: None,
        certificate: None,
        bound: 0,
    };
    for t in 1..=t_max {
        if search.deadline.is_some_and(|d| Instant::now() >= d) {
            return Ok(result);
        }
        let outcome = match &pool {
            Some(p) => p.install(|| search.run(t)),
            None => search.run(t),
        };
        match outcome {
            Outcome::Found(stars) => {
                result.value = Some(t);
                result.certificate = Some(CutFamily::new(kind, m, stars)?);
                result.bound = t;
                return Ok(result);
            }
            Outcome::NotFound => result.bound = t,
            Outcome::Aborted => return Ok(result),
        }
    }
    Ok(result)
}

/// `κ(G; K_{1,M})` within `t_max` elements. `M = 0` degenerates to the
/// minimum vertex cut.
pub fn structure_connectivity(
    g: &Graph,
    m: usize,
    t_max: usize,
    opts: &SolveOptions,
) -> Result<SolveResult> {
    solve(g, CutKind::Structure, m, t_max, opts)
}

/// `κ^s(G; K_{1,M})` within `t_max` elements.
pub fn substructure_connectivity(
    g: &Graph,
    m: usize,
    t_max: usize,
    opts: &SolveOptions,
) -> Result<SolveResult> {
    solve(g, CutKind::Substructure, m, t_max, opts)
}

/// Brute-force reference for the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    /// Largest graph the oracle accepts.
    pub cap: usize,
    pub triviality: Triviality,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            cap: 14,
            triviality: Triviality::AtMostOne,
        }
    }
}

impl Oracle {
    pub fn with_triviality(triviality: Triviality) -> Self {
        Oracle {
            triviality,
            ..Oracle::default()
        }
    }

    /// Minimum over all disconnecting (or trivializing) vertex sets `X` of
    /// the fewest disjoint stars partitioning `X`.
    pub fn connectivity(
        &self,
        g: &Graph,
        m: usize,
        kind: CutKind,
        t_max: usize,
    ) -> Result<SolveResult> {
        let n = g.vertex_count();
        if n > self.cap || n > 63 {
            return Err(Error::OracleCap { n, cap: self.cap });
        }
        check_input(g, t_max)?;
        let exact = kind == CutKind::Structure;
        let mut memo = PartitionMemo::new(g, m, exact);
        let mut best: Option<(usize, u64)> = None;
        for mask in 0u64..(1 << n) {
            let x: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let rest = g.remove_vertices(&x)?.graph;
            let cut = self.triviality.is_trivial(rest.vertex_count()) || !rest.is_connected();
            if !cut {
                continue;
            }
            if let Some(k) = memo.min(mask) {
                if best.is_none_or(|(b, _)| k < b) {
                    best = Some((k, mask));
                }
            }
        }
        let mut result = SolveResult {
            kind,
            m,
            t_max,
            value: None,
            certificate: None,
            bound: t_max,
        };
        if let Some((k, mask)) = best.filter(|&(k, _)| k <= t_max) {
            let stars = memo.reconstruct(mask);
            result.value = Some(k);
            result.certificate = Some(CutFamily::new(kind, m, stars)?);
        }
        Ok(result)
    }
}

/// Fewest pairwise disjoint stars of `g` (exactly `M` leaves when `exact`,
/// otherwise at most `M`) whose vertex sets partition `x`; `None` when no
/// such partition exists. Supports `|x| <= 64`.
pub fn min_star_partition(g: &Graph, x: &VertexSet, m: usize, exact: bool) -> Option<usize> {
    let local: Vec<usize> = x.iter().collect();
    assert!(
        local.len() <= 64,
        "partition search supports at most 64 vertices"
    );
    let sub = g.remove_vertices(&(0..g.vertex_count()).filter(|&v| !x.contains(v)).collect());
    let sub = sub.expect("complement of x is in range").graph;
    let full = if local.len() == 64 {
        u64::MAX
    } else {
        (1u64 << local.len()) - 1
    };
    PartitionMemo::new(&sub, m, exact).min(full)
}

/// Memoized exact cover of a vertex mask by stars.
struct PartitionMemo {
    adj: Vec<u64>,
    m: usize,
    exact: bool,
    memo: HashMap<u64, Option<(usize, u64, usize)>>,
}

impl PartitionMemo {
    fn new(g: &Graph, m: usize, exact: bool) -> Self {
        let adj = (0..g.vertex_count())
            .map(|v| g.neighbors(v).iter().fold(0u64, |a, &w| a | 1 << w))
            .collect();
        PartitionMemo {
            adj,
            m,
            exact,
            memo: HashMap::new(),
        }
    }

    fn admits(&self, leaves: u32) -> bool {
        let leaves = leaves as usize;
        if self.exact {
            leaves == self.m
        } else {
            leaves <= self.m
        }
    }

    /// Submasks of `pool` in arbitrary order (including 0).
    fn submasks(pool: u64) -> impl Iterator<Item = u64> {
        let mut s = pool;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = s;
            if s == 0 {
                done = true;
            } else {
                s = (s - 1) & pool;
            }
            Some(cur)
        })
    }

    fn min(&mut self, mask: u64) -> Option<usize> {
        self.solve(mask).map(|(k, _, _)| k)
    }

    /// Returns (count, first star's vertex mask, its center).
    fn solve(&mut self, mask: u64) -> Option<(usize, u64, usize)> {
        if mask == 0 {
            return Some((0, 0, 0));
        }
        if let Some(&r) = self.memo.get(&mask) {
            return r;
        }
        let v = mask.trailing_zeros() as usize;
        let mut best: Option<(usize, u64, usize)> = None;
        let mut consider = |this: &mut Self, center: usize, star: u64| {
            if let Some((k, _, _)) = this.solve(mask & !star) {
                if best.is_none_or(|(b, _, _)| k + 1 < b) {
                    best = Some((k + 1, star, center));
                }
            }
        };
        // v as the center
        let pool = self.adj[v] & mask;
        for leaves in Self::submasks(pool) {
            if self.admits(leaves.count_ones()) {
                consider(self, v, leaves | 1 << v);
            }
        }
        // v as a leaf of a neighbor's star
        let mut centers = self.adj[v] & mask;
        while centers != 0 {
            let u = centers.trailing_zeros() as usize;
            centers &= centers - 1;
            let pool = self.adj[u] & mask & !(1 << v);
            for others in Self::submasks(pool) {
                if self.admits(others.count_ones() + 1) {
                    consider(self, u, others | 1 << v | 1 << u);
                }
            }
        }
        self.memo.insert(mask, best);
        best
    }

    fn reconstruct(&mut self, mut mask: u64) -> Vec<Star> {
        let mut stars = Vec::new();
        while mask != 0 {
            let (_, star, center) = self.solve(mask).expect("mask was solvable");
            let leaves = (0..64).filter(|&b| star >> b & 1 == 1 && b != center);
            stars.push(Star::new(center, leaves).expect("center excluded from leaves"));
            mask &= !star;
        }
        stars.sort();
        stars
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::is_kind_cut;

    fn bowtie() -> Graph {
        Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    fn star(c: usize, leaves: &[usize]) -> Star {
        Star::new(c, leaves.iter().copied()).unwrap()
    }

    fn opts() -> SolveOptions {
        SolveOptions::default()
    }

    #[test]
    fn leaf_subsets_order() {
        let mut s = LeafSubsets::new(3, 2, false);
        let mut seen = Vec::new();
        while let Some(x) = s.advance() {
            seen.push(x.to_vec());
        }
        let expect: Vec<Vec<usize>> = vec![
            vec![],
            vec![0],
            vec![0, 1],
            vec![0, 2],
            vec![1],
            vec![1, 2],
            vec![2],
        ];
        assert_eq!(seen, expect);

        let mut s = LeafSubsets::new(4, 2, true);
        let mut count = 0;
        let mut prev: Option<Vec<usize>> = None;
        while let Some(x) = s.advance() {
            if let Some(p) = &prev {
                assert!(p.as_slice() < x);
            }
            prev = Some(x.to_vec());
            count += 1;
        }
        assert_eq!(count, 6);
        assert!(LeafSubsets::new(2, 3, true).advance().is_none());
        assert_eq!(LeafSubsets::new(2, 0, true).advance(), Some(&[][..]));
    }

    #[test]
    fn enumerate_stars_examples() {
        assert_eq!(
            enumerate_stars(&Graph::path(3), 2, true),
            vec![star(1, &[0, 2])]
        );
        assert_eq!(enumerate_stars(&Graph::complete(4), 3, true).len(), 4);
        assert_eq!(
            enumerate_stars(&Graph::complete(1), 0, false),
            vec![Star::trivial(0)]
        );
    }

    #[test]
    fn enumerate_stars_is_sorted_and_canonical() {
        let g = bowtie();
        for exact in [true, false] {
            for m in 0..4 {
                let stars = enumerate_stars(&g, m, exact);
                assert!(stars.windows(2).all(|w| w[0] < w[1]));
                for s in &stars {
                    assert_eq!(s.is_valid_in(&g), Ok(true));
                    if s.leaf_count() == 1 {
                        assert!(s.center() < s.leaves()[0]);
                    }
                }
            }
        }
        // K_{1,1} appears once per edge
        assert_eq!(enumerate_stars(&g, 1, true).len(), g.edge_count());
    }

    #[test]
    fn structure_examples() {
        let r = structure_connectivity(&Graph::path(4), 1, 2, &opts()).unwrap();
        assert_eq!(r.value, Some(1));
        assert_eq!(r.certificate.unwrap().stars(), &[star(1, &[2])]);

        let r = structure_connectivity(&bowtie(), 2, 2, &opts()).unwrap();
        assert_eq!(r.value, Some(1));

        let r = structure_connectivity(&Graph::cycle(5), 2, 2, &opts()).unwrap();
        assert_eq!(r.value, None);
        assert_eq!(r.bound, 2);
        assert_eq!(r.decision(), Some(false));
    }

    #[test]
    fn substructure_examples() {
        let r = substructure_connectivity(&Graph::complete(4), 2, 2, &opts()).unwrap();
        assert_eq!(r.value, Some(1));
        let r = substructure_connectivity(&Graph::cycle(5), 1, 3, &opts()).unwrap();
        assert_eq!(r.value, Some(2));
        assert_eq!(
            r.certificate.unwrap().stars(),
            &[Star::trivial(0), Star::trivial(2)]
        );
        let r = substructure_connectivity(&Graph::path(3), 1, 1, &opts()).unwrap();
        assert_eq!(r.value, Some(1));
    }

    #[test]
    fn degenerate_inputs_rejected() {
        let two = Graph::disjoint_union(&Graph::path(2), &Graph::path(2));
        assert_eq!(
            structure_connectivity(&two, 1, 2, &opts()),
            Err(Error::DegenerateInput)
        );
        assert_eq!(
            substructure_connectivity(&Graph::complete(1), 1, 2, &opts()),
            Err(Error::DegenerateInput)
        );
        assert!(matches!(
            substructure_connectivity(&Graph::path(3), 1, 0, &opts()),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn m_zero_is_vertex_cut() {
        // C_6 has vertex connectivity 2
        let r = structure_connectivity(&Graph::cycle(6), 0, 6, &opts()).unwrap();
        assert_eq!(r.value, Some(2));
        let r = substructure_connectivity(&Graph::cycle(6), 0, 6, &opts()).unwrap();
        assert_eq!(r.value, Some(2));
    }

    #[test]
    fn oracle_examples() {
        let o = Oracle::default();
        let r = o
            .connectivity(&Graph::path(4), 1, CutKind::Structure, 4)
            .unwrap();
        assert_eq!(r.value, Some(1));
        let r = o
            .connectivity(&Graph::complete(4), 2, CutKind::Substructure, 4)
            .unwrap();
        assert_eq!(r.value, Some(1));
        let r = o
            .connectivity(&Graph::cycle(6), 2, CutKind::Structure, 6)
            .unwrap();
        assert_eq!(r.value, Some(2));
        let strict = Oracle::with_triviality(Triviality::ExactlyOne);
        let r = strict
            .connectivity(&Graph::cycle(6), 2, CutKind::Structure, 6)
            .unwrap();
        assert_eq!(r.value, None);
        // and the search agrees on both readings
        let r = structure_connectivity(&Graph::cycle(6), 2, 6, &opts()).unwrap();
        assert_eq!(r.value, Some(2));
        let r = structure_connectivity(
            &Graph::cycle(6),
            2,
            6,
            &opts().with_triviality(Triviality::ExactlyOne),
        )
        .unwrap();
        assert_eq!(r.value, None);
    }

    #[test]
    fn oracle_cap() {
        let o = Oracle {
            cap: 5,
            ..Oracle::default()
        };
        assert_eq!(
            o.connectivity(&Graph::cycle(6), 1, CutKind::Structure, 3),
            Err(Error::OracleCap { n: 6, cap: 5 })
        );
    }

    #[test]
    fn min_star_partition_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(
            min_star_partition(&k4, &VertexSet::from([0, 1, 2, 3]), 1, true),
            Some(2)
        );
        assert_eq!(
            min_star_partition(&Graph::path(3), &VertexSet::from([0, 2]), 1, true),
            None
        );
        assert_eq!(min_star_partition(&k4, &VertexSet::new(), 3, true), Some(0));
        // one K_{1,3} covers K_4
        assert_eq!(
            min_star_partition(&k4, &VertexSet::from([0, 1, 2, 3]), 3, false),
            Some(1)
        );
        // exact sizes must divide |X|
        assert_eq!(
            min_star_partition(&k4, &VertexSet::from([0, 1, 2]), 1, true),
            None
        );
    }

    #[test]
    fn time_limit_reports_inconclusive() {
        let o = SolveOptions {
            time_limit: Some(Duration::ZERO),
            ..opts()
        };
        let r = substructure_connectivity(&Graph::cycle(12), 1, 3, &o).unwrap();
        assert_eq!(r.value, None);
        assert_eq!(r.bound, 0);
        assert_eq!(r.decision(), None);
        assert!(!r.is_complete());
    }

    #[test]
    fn certificates_verify() {
        let g = bowtie();
        for kind in [CutKind::Structure, CutKind::Substructure] {
            for m in 0..4 {
                let r = solve(&g, kind, m, 5, &opts()).unwrap();
                if let Some(cert) = &r.certificate {
                    assert_eq!(cert.len(), r.value.unwrap());
                    assert_eq!(
                        is_kind_cut(&g, cert.stars(), kind, m, Triviality::AtMostOne),
                        Ok(true)
                    );
                }
            }
        }
    }
}
