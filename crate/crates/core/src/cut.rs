//! Stars, families of disjoint stars, and the cut certificate checks.
//!
//! A family is a *subgraph cut* when deleting all of its vertices leaves the
//! graph disconnected or trivial. Structure cuts require every element to be
//! `K_{1,M}`; substructure cuts accept any star with at most `M` leaves
//! (including the bare center, `K_1`).

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// How "trivial" is read in "disconnected or trivial".
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Triviality {
    /// At most one vertex remains (the empty remainder counts as trivial).
    #[default]
    AtMostOne,
    /// Exactly one vertex remains.
    ExactlyOne,
}

impl Triviality {
    pub fn is_trivial(self, remaining: usize) -> bool {
        match self {
            Triviality::AtMostOne => remaining <= 1,
            Triviality::ExactlyOne => remaining == 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CutKind {
    Structure,
    Substructure,
}

impl CutKind {
    /// Whether a star with `leaves` leaves is an admissible element.
    pub fn admits(self, leaves: usize, m: usize) -> bool {
        match self {
            CutKind::Structure => leaves == m,
            CutKind::Substructure => leaves <= m,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CutKind::Structure => "structure",
            CutKind::Substructure => "substructure",
        }
    }
}

impl fmt::Display for CutKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A center plus a sorted leaf set. A star with `j` leaves models `K_{1,j}`.
///
/// `K_{1,1}` is stored with the smaller endpoint as center so that the same
/// edge always produces the same star.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Star {
    center: usize,
    leaves: Vec<usize>,
}

impl Star {
    pub fn new<I: IntoIterator<Item = usize>>(center: usize, leaves: I) -> Result<Star> {
        let mut leaves: Vec<usize> = leaves.into_iter().collect();
        leaves.sort_unstable();
        leaves.dedup();
        if leaves.binary_search(&center).is_ok() {
            return Err(Error::CenterIsLeaf(center));
        }
        let mut center = center;
        if leaves.len() == 1 && leaves[0] < center {
            std::mem::swap(&mut center, &mut leaves[0]);
        }
        Ok(Star { center, leaves })
    }

    /// The one-vertex star `K_1`.
    pub fn trivial(center: usize) -> Star {
        Star {
            center,
            leaves: Vec::new(),
        }
    }

    pub fn center(&self) -> usize {
        self.center
    }

    pub fn leaves(&self) -> &[usize] {
        &self.leaves
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn vertices(&self) -> VertexSet {
        std::iter::once(self.center)
            .chain(self.leaves.iter().copied())
            .collect()
    }

    /// True iff every leaf is adjacent to the center in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> Result<bool> {
        let n = g.vertex_count();
        for v in std::iter::once(self.center).chain(self.leaves.iter().copied()) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        Ok(self.leaves.iter().all(|&l| g.has_edge(self.center, l)))
    }
}

/// Checks that `stars` are valid subgraphs of `g` and pairwise disjoint.
fn check_family(g: &Graph, stars: &[Star]) -> Result<VertexSet> {
    let mut owner = vec![usize::MAX; g.vertex_count()];
    for (i, s) in stars.iter().enumerate() {
        if !s.is_valid_in(g)? {
            let leaf = *s
                .leaves
                .iter()
                .find(|&&l| !g.has_edge(s.center, l))
                .expect("an invalid star has a non-adjacent leaf");
            return Err(Error::InvalidStar {
                center: s.center,
                leaf,
            });
        }
        for v in s.vertices() {
            if owner[v] != usize::MAX {
                return Err(Error::OverlappingStars {
                    first: owner[v],
                    second: i,
                    vertex: v,
                });
            }
            owner[v] = i;
        }
    }
    Ok((0..g.vertex_count())
        .filter(|&v| owner[v] != usize::MAX)
        .collect())
}

/// True iff deleting every vertex of `stars` leaves `g` disconnected or
/// trivial. Invalid or overlapping elements are errors.
pub fn is_subgraph_cut(g: &Graph, stars: &[Star], triviality: Triviality) -> Result<bool> {
    let removed = check_family(g, stars)?;
    let rest = g.remove_vertices(&removed)?.graph;
    Ok(triviality.is_trivial(rest.vertex_count()) || !rest.is_connected())
}

pub fn is_structure_cut(
    g: &Graph,
    stars: &[Star],
    m: usize,
    triviality: Triviality,
) -> Result<bool> {
    is_kind_cut(g, stars, CutKind::Structure, m, triviality)
}

pub fn is_substructure_cut(
    g: &Graph,
    stars: &[Star],
    m: usize,
    triviality: Triviality,
) -> Result<bool> {
    is_kind_cut(g, stars, CutKind::Substructure, m, triviality)
}

pub fn is_kind_cut(
    g: &Graph,
    stars: &[Star],
    kind: CutKind,
    m: usize,
    triviality: Triviality,
) -> Result<bool> {
    let cut = is_subgraph_cut(g, stars, triviality)?;
    Ok(cut && stars.iter().all(|s| kind.admits(s.leaf_count(), m)))
}

/// An ordered list of pairwise disjoint stars, each admissible for `kind`
/// with parameter `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CutFamily {
    kind: CutKind,
    m: usize,
    stars: Vec<Star>,
}

impl CutFamily {
    pub fn new(kind: CutKind, m: usize, stars: Vec<Star>) -> Result<CutFamily> {
        let mut seen: Vec<(usize, usize)> = Vec::new();
        for (i, s) in stars.iter().enumerate() {
            if !kind.admits(s.leaf_count(), m) {
                return Err(Error::LeafCount {
                    kind,
                    index: i,
                    leaves: s.leaf_count(),
                    m,
                });
            }
            for v in s.vertices() {
                if let Some(&(_, first)) = seen.iter().find(|(w, _)| *w == v) {
                    return Err(Error::OverlappingStars {
                        first,
                        second: i,
                        vertex: v,
                    });
                }
                seen.push((v, i));
            }
        }
        Ok(CutFamily { kind, m, stars })
    }

    pub fn kind(&self) -> CutKind {
        self.kind
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn stars(&self) -> &[Star] {
        &self.stars
    }

    pub fn len(&self) -> usize {
        self.stars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stars.is_empty()
    }

    /// `V(F)`.
    pub fn vertices(&self) -> VertexSet {
        self.stars.iter().flat_map(|s| s.vertices()).collect()
    }

    /// Checks the family against `g` using its own kind and `M`.
    pub fn verify(&self, g: &Graph, triviality: Triviality) -> Result<bool> {
        is_kind_cut(g, &self.stars, self.kind, self.m, triviality)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(c: usize, leaves: &[usize]) -> Star {
        Star::new(c, leaves.iter().copied()).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    const DEF: Triviality = Triviality::AtMostOne;

    #[test]
    fn star_vertices_examples() {
        assert_eq!(Star::trivial(3).vertices(), VertexSet::from([3]));
        assert_eq!(star(0, &[1, 2]).vertices(), VertexSet::from([0, 1, 2]));
        assert_eq!(star(5, &[1, 2, 3, 4, 6]).vertices().len(), 6);
    }

    #[test]
    fn star_canonical_orientation() {
        let s = star(4, &[2]);
        assert_eq!(s.center(), 2);
        assert_eq!(s.leaves(), &[4]);
        assert_eq!(Star::new(1, [1, 2]), Err(Error::CenterIsLeaf(1)));
    }

    #[test]
    fn star_valid_in_examples() {
        let p3 = Graph::path(3);
        assert_eq!(star(1, &[0, 2]).is_valid_in(&p3), Ok(true));
        assert_eq!(star(0, &[2]).is_valid_in(&p3), Ok(false));
        assert_eq!(
            star(0, &[1, 2, 3]).is_valid_in(&Graph::complete(4)),
            Ok(true)
        );
        assert!(star(0, &[7]).is_valid_in(&p3).is_err());
    }

    #[test]
    fn subgraph_cut_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(
            is_subgraph_cut(&c4, &[Star::trivial(0), Star::trivial(2)], DEF),
            Ok(true)
        );
        assert_eq!(
            is_subgraph_cut(&Graph::complete(4), &[Star::trivial(0)], DEF),
            Ok(false)
        );
        assert_eq!(
            is_subgraph_cut(&Graph::path(3), &[star(0, &[1])], DEF),
            Ok(true)
        );
    }

    #[test]
    fn subgraph_cut_errors() {
        let c4 = Graph::cycle(4);
        assert!(matches!(
            is_subgraph_cut(&c4, &[star(0, &[1]), Star::trivial(1)], DEF),
            Err(Error::OverlappingStars { .. })
        ));
        assert_eq!(
            is_subgraph_cut(&c4, &[star(0, &[2])], DEF),
            Err(Error::InvalidStar { center: 0, leaf: 2 })
        );
    }

    #[test]
    fn structure_cut_examples() {
        assert_eq!(
            is_structure_cut(&bowtie(), &[star(2, &[0, 3])], 2, DEF),
            Ok(true)
        );
        assert_eq!(
            is_structure_cut(&Graph::cycle(6), &[star(1, &[0, 2])], 2, DEF),
            Ok(false)
        );
        assert_eq!(
            is_structure_cut(&Graph::path(4), &[star(1, &[2])], 1, DEF),
            Ok(true)
        );
        // right vertex count removed, wrong shape
        assert_eq!(
            is_structure_cut(&bowtie(), &[star(2, &[0, 3])], 1, DEF),
            Ok(false)
        );
    }

    #[test]
    fn substructure_cut_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(
            is_substructure_cut(&c5, &[Star::trivial(0), Star::trivial(2)], 1, DEF),
            Ok(true)
        );
        assert_eq!(
            is_substructure_cut(&c5, &[star(0, &[1])], 1, DEF),
            Ok(false)
        );
        // disconnecting, but one element exceeds M leaves
        assert_eq!(
            is_substructure_cut(&bowtie(), &[star(2, &[0, 3])], 1, DEF),
            Ok(false)
        );
    }

    #[test]
    fn whole_graph_removal_is_trivial_by_default() {
        let k3 = Graph::complete(3);
        let f = [star(0, &[1, 2])];
        assert_eq!(is_subgraph_cut(&k3, &f, DEF), Ok(true));
        assert_eq!(is_subgraph_cut(&k3, &f, Triviality::ExactlyOne), Ok(false));
    }

    #[test]
    fn family_constructor_enforces_invariants() {
        assert!(matches!(
            CutFamily::new(CutKind::Structure, 2, vec![star(0, &[1])]),
            Err(Error::LeafCount {
                index: 0,
                leaves: 1,
                m: 2,
                ..
            })
        ));
        assert!(matches!(
            CutFamily::new(
                CutKind::Substructure,
                2,
                vec![star(0, &[1]), star(2, &[1, 3])]
            ),
            Err(Error::OverlappingStars {
                first: 0,
                second: 1,
                vertex: 1
            })
        ));
        let f = CutFamily::new(CutKind::Substructure, 3, vec![star(2, &[0, 3])]).unwrap();
        assert_eq!(f.vertices(), VertexSet::from([0, 2, 3]));
        assert_eq!(f.verify(&bowtie(), DEF), Ok(true));
    }

    #[test]
    fn element_order_is_irrelevant() {
        let c6 = Graph::cycle(6);
        let a = [Star::trivial(0), Star::trivial(3)];
        let b = [Star::trivial(3), Star::trivial(0)];
        assert_eq!(
            is_substructure_cut(&c6, &a, 1, DEF),
            is_substructure_cut(&c6, &b, 1, DEF)
        );
        assert_eq!(is_substructure_cut(&c6, &a, 1, DEF), Ok(true));
    }
}
