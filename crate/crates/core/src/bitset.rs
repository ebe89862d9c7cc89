//! Word-packed vertex sets and a bit-parallel adjacency matrix used on the
//! solver's hot path.

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn zeros(n: usize) -> Self {
        Bits {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn ones(n: usize) -> Self {
        let mut b = Bits::zeros(n);
        for v in 0..n {
            b.set(v);
        }
        b
    }

    #[inline]
    pub fn set(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn clear(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn get(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn intersects(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn difference_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }
}

/// Adjacency rows as bitsets.
pub(crate) struct BitGraph {
    n: usize,
    rows: Vec<Bits>,
}

impl BitGraph {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let rows = (0..n)
            .map(|v| {
                let mut b = Bits::zeros(n);
                for &w in g.neighbors(v) {
                    b.set(w);
                }
                b
            })
            .collect();
        BitGraph { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, v: usize) -> &Bits {
        &self.rows[v]
    }

    /// Vertices of `within` reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: &Bits) -> Bits {
        let mut seen = Bits::zeros(self.n);
        seen.set(start);
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for (i, (&r, &w)) in self.rows[v].words.iter().zip(&within.words).enumerate() {
                let mut fresh = r & w & !seen.words[i];
                if fresh != 0 {
                    seen.words[i] |= fresh;
                    while fresh != 0 {
                        let b = fresh.trailing_zeros() as usize;
                        fresh &= fresh - 1;
                        frontier.push(i * 64 + b);
                    }
                }
            }
        }
        seen
    }

    /// True iff the subgraph induced by `alive` has at most one component.
    pub fn is_connected_within(&self, alive: &Bits) -> bool {
        match alive.first() {
            None => true,
            Some(s) => self.reach(s, alive) == *alive,
        }
    }
}
