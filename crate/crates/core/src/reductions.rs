//! Gadget graphs for 3DM → `κ(G; K_{1,M})` and vertex cover →
//! `κ^s(G; K_{1,M})`, with encoders and validating decoders.
//!
//! Vertex ids of the 3DM gadget, in order: triples `t_1..t_|T|`, elements
//! `w_1..w_3q` (`R`, then `B`, then `Y`), the `M - 3` cliques `V_1..V_{M-3}`
//! of `(M+1)|T|` vertices each (clique by clique, `v_{1j}` first), then
//! `u_1..u_{3qM}` and `u'_1..u'_{3qM}`. `U` is split into `3q` consecutive
//! blocks of `M` vertices, block `l` being `u_{(l-1)M+1}..u_{lM}`, and `w_l`
//! attaches to the last vertex of its block.
//!
//! The vertex-cover gadget keeps the source graph on ids `0..|V|` and appends
//! `k + 2` cliques `K_{|V|}`, clique by clique; `v_{ij}` is joined to `v_i`.
//!
//! Decoders never trust a cut: they rebuild a candidate solution from the
//! star centers and check it against the source instance.

use std::fmt;

use crate::cut::{is_structure_cut, is_substructure_cut, CutFamily, CutKind, Star, Triviality};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::npo::{check_cover, ThreeDmInstance, VertexCoverInstance};

/// Gadget provenance of a vertex. All indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexRole {
    /// `t_k`
    Triple(usize),
    /// `w_l`
    Element(usize),
    /// `v_{ij}`: position `i` of clique `V_j`
    CliqueV { i: usize, j: usize },
    /// `u_index`, a member of block `block`
    UBlock { block: usize, index: usize },
    /// `u'_i`
    UPrime(usize),
    /// `v_i` of the source graph
    Original(usize),
}

impl VertexRole {
    pub fn tag(&self) -> &'static str {
        match self {
            VertexRole::Triple(_) => "TRIPLE",
            VertexRole::Element(_) => "ELEM",
            VertexRole::CliqueV { .. } => "CLIQ",
            VertexRole::UBlock { .. } => "UBLK",
            VertexRole::UPrime(_) => "UPRM",
            VertexRole::Original(_) => "ORIG",
        }
    }
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VertexRole::Triple(k) => write!(f, "TRIPLE {k}"),
            VertexRole::Element(l) => write!(f, "ELEM {l}"),
            VertexRole::CliqueV { i, j } => write!(f, "CLIQ {i} {j}"),
            VertexRole::UBlock { block, index } => write!(f, "UBLK {index} {block}"),
            VertexRole::UPrime(i) => write!(f, "UPRM {i}"),
            VertexRole::Original(i) => write!(f, "ORIG {i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    ThreeDm(ThreeDmInstance),
    VertexCover(VertexCoverInstance),
}

/// Output of a reduction: the gadget, per-vertex roles, the decision bound
/// (`q` or `k`), the star size `M`, and the source instance for decoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedInstance {
    pub graph: Graph,
    pub roles: Vec<VertexRole>,
    pub parameter: usize,
    pub m: usize,
    pub source: Source,
}

impl ReducedInstance {
    /// The cut kind whose connectivity the gadget's decision question asks
    /// about.
    pub fn kind(&self) -> CutKind {
        match self.source {
            Source::ThreeDm(_) => CutKind::Structure,
            Source::VertexCover(_) => CutKind::Substructure,
        }
    }

    pub fn vertex_of(&self, role: VertexRole) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }
}

/// Result of a validating decoder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decode<T> {
    Solution(T),
    /// No verified solution could be rebuilt; the string says why.
    Absent(String),
}

impl<T> Decode<T> {
    pub fn solution(&self) -> Option<&T> {
        match self {
            Decode::Solution(s) => Some(s),
            Decode::Absent(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Reduce3dmOptions {
    /// Accept `M = 4`; outside the range the construction is argued for.
    pub allow_small_m: bool,
    /// Accept instances whose elements do not all occur two or three times.
    pub allow_unrestricted: bool,
}

/// Vertex count of the 3DM gadget: `|T| + 3q + (M-3)(M+1)|T| + 6qM`.
pub fn gadget_3dm_size(triples: usize, q: usize, m: usize) -> usize {
    triples + 3 * q + (m - 3) * (m + 1) * triples + 6 * q * m
}

struct Layout3dm {
    t: usize,
    q: usize,
    m: usize,
}

impl Layout3dm {
    fn triple(&self, k: usize) -> usize {
        k - 1
    }
    fn element(&self, l: usize) -> usize {
        self.t + l - 1
    }
    fn clique_size(&self) -> usize {
        (self.m + 1) * self.t
    }
    fn clique(&self, i: usize, j: usize) -> usize {
        self.t + 3 * self.q + (j - 1) * self.clique_size() + i - 1
    }
    fn u(&self, i: usize) -> usize {
        self.t + 3 * self.q + (self.m - 3) * self.clique_size() + i - 1
    }
    fn u_prime(&self, i: usize) -> usize {
        self.u(1) + 3 * self.q * self.m + i - 1
    }
}

fn push_clique(edges: &mut Vec<(usize, usize)>, members: &[usize]) {
    for (a, &u) in members.iter().enumerate() {
        for &v in &members[a + 1..] {
            edges.push((u, v));
        }
    }
}

/// Builds the structure-connectivity gadget for `inst` with star size `m`.
pub fn reduce_3dm(
    inst: &ThreeDmInstance,
    m: usize,
    opts: Reduce3dmOptions,
) -> Result<ReducedInstance> {
    let min_m = if opts.allow_small_m { 4 } else { 5 };
    if m < min_m {
        return Err(Error::Parameter(format!("M = {m} is below {min_m}")));
    }
    if inst.triples.is_empty() || inst.n == 0 {
        return Err(Error::Parameter(
            "the instance needs n >= 1 and at least one triple".into(),
        ));
    }
    if !inst.is_well_formed() {
        return Err(Error::Parameter(
            "triples must be distinct with coordinates in 1..=n".into(),
        ));
    }
    if !opts.allow_unrestricted && !inst.is_restricted() {
        return Err(Error::Parameter(
            "some element does not occur in exactly two or three triples".into(),
        ));
    }
    let lay = Layout3dm {
        t: inst.triples.len(),
        q: inst.q(),
        m,
    };
    let (tn, q) = (lay.t, lay.q);
    let total = gadget_3dm_size(tn, q, m);
    let mut roles = Vec::with_capacity(total);
    roles.extend((1..=tn).map(VertexRole::Triple));
    roles.extend((1..=3 * q).map(VertexRole::Element));
    for j in 1..=m - 3 {
        roles.extend((1..=lay.clique_size()).map(|i| VertexRole::CliqueV { i, j }));
    }
    roles.extend((1..=3 * q * m).map(|i| VertexRole::UBlock {
        block: (i - 1) / m + 1,
        index: i,
    }));
    roles.extend((1..=3 * q * m).map(VertexRole::UPrime));
    debug_assert_eq!(roles.len(), total);

    let mut edges = Vec::new();
    // G_b
    for (k, t) in inst.triples.iter().enumerate() {
        for e in t.elements(q) {
            edges.push((lay.triple(k + 1), lay.element(e + 1)));
        }
    }
    for j in 1..=m - 3 {
        let members: Vec<usize> = (1..=lay.clique_size()).map(|i| lay.clique(i, j)).collect();
        push_clique(&mut edges, &members);
        // E_t
        for k in 1..=tn {
            edges.push((lay.triple(k), lay.clique(k, j)));
        }
    }
    for l in 1..=3 * q {
        let block: Vec<usize> = ((l - 1) * m + 1..=l * m).map(|i| lay.u(i)).collect();
        push_clique(&mut edges, &block);
        // E_w
        edges.push((lay.element(l), lay.u(l * m)));
    }
    let primes: Vec<usize> = (1..=3 * q * m).map(|i| lay.u_prime(i)).collect();
    push_clique(&mut edges, &primes);
    // E_z
    for i in 1..=3 * q * m {
        edges.push((lay.u(i), lay.u_prime(i)));
    }
    let graph = Graph::new(total, edges)?;
    Ok(ReducedInstance {
        graph,
        roles,
        parameter: q,
        m,
        source: Source::ThreeDm(inst.clone()),
    })
}

fn source_3dm(red: &ReducedInstance) -> Result<&ThreeDmInstance> {
    match &red.source {
        Source::ThreeDm(inst) => Ok(inst),
        Source::VertexCover(_) => Err(Error::Parameter(
            "expected a 3DM gadget, got a vertex-cover gadget".into(),
        )),
    }
}

fn source_vc(red: &ReducedInstance) -> Result<&VertexCoverInstance> {
    match &red.source {
        Source::VertexCover(inst) => Ok(inst),
        Source::ThreeDm(_) => Err(Error::Parameter(
            "expected a vertex-cover gadget, got a 3DM gadget".into(),
        )),
    }
}

/// Size and degree checks for a 3DM gadget.
pub fn audit_3dm(red: &ReducedInstance) -> std::result::Result<(), String> {
    let inst = source_3dm(red).map_err(|e| e.to_string())?;
    let (tn, q, m) = (inst.triples.len(), inst.q(), red.m);
    let g = &red.graph;
    g.audit()?;
    let expect = gadget_3dm_size(tn, q, m);
    if g.vertex_count() != expect || red.roles.len() != expect {
        return Err(format!(
            "gadget has {} vertices and {} roles, expected {expect}",
            g.vertex_count(),
            red.roles.len()
        ));
    }
    let occ = inst.occurrences();
    for (v, role) in red.roles.iter().enumerate() {
        let d = g.neighbors(v).len();
        let want = match *role {
            VertexRole::Triple(_) => m,
            VertexRole::Element(l) => {
                if d > 4 {
                    return Err(format!("element w_{l} has degree {d} > 4"));
                }
                occ[l - 1] + 1
            }
            VertexRole::CliqueV { i, .. } => (m + 1) * tn - 1 + usize::from(i <= tn),
            VertexRole::UBlock { index, .. } => m + usize::from(index % m == 0),
            VertexRole::UPrime(_) => 3 * q * m,
            VertexRole::Original(_) => return Err("3DM gadget has an ORIG vertex".into()),
        };
        if d != want {
            return Err(format!(
                "{role} (vertex {v}) has degree {d}, expected {want}"
            ));
        }
    }
    Ok(())
}

/// One star per chosen triple: center `t_k`, leaves its whole neighborhood.
pub fn matching_to_cut(red: &ReducedInstance, chosen: &[usize]) -> Result<CutFamily> {
    let inst = source_3dm(red)?;
    inst.verify_matching(chosen)?;
    let mut sorted = chosen.to_vec();
    sorted.sort_unstable();
    let stars = sorted
        .iter()
        .map(|&k| {
            let c = red
                .vertex_of(VertexRole::Triple(k + 1))
                .expect("every triple has a vertex");
            Star::new(c, red.graph.neighbors(c).iter().copied())
        })
        .collect::<Result<Vec<_>>>()?;
    CutFamily::new(CutKind::Structure, red.m, stars)
}

/// Recovers a matching from a structure cut whose centers are all triple
/// vertices. Returns 0-based triple indices.
pub fn extract_matching(
    red: &ReducedInstance,
    cut: &CutFamily,
    triviality: Triviality,
) -> Result<Decode<Vec<usize>>> {
    let inst = source_3dm(red)?;
    if !is_structure_cut(&red.graph, cut.stars(), red.m, triviality)? {
        return Err(Error::NotACut(CutKind::Structure));
    }
    let mut chosen = Vec::new();
    for s in cut.stars() {
        match red.roles[s.center()] {
            VertexRole::Triple(k) => chosen.push(k - 1),
            role => {
                return Ok(Decode::Absent(format!(
                    "star centered at vertex {} has role {role}, not a triple",
                    s.center() + 1
                )))
            }
        }
    }
    chosen.sort_unstable();
    Ok(match inst.verify_matching(&chosen) {
        Ok(()) => Decode::Solution(chosen),
        Err(e) => Decode::Absent(e.to_string()),
    })
}

/// Builds the substructure gadget. `M` is always `Δ(G)`; passing a
/// different `requested_m` is an error.
pub fn reduce_vertex_cover(
    inst: &VertexCoverInstance,
    requested_m: Option<usize>,
) -> Result<ReducedInstance> {
    let g = &inst.graph;
    let n = g.vertex_count();
    let k = inst.k;
    if n == 0 {
        return Err(Error::Parameter("the source graph is empty".into()));
    }
    if k == 0 || k >= n {
        return Err(Error::Parameter(format!(
            "k = {k} must satisfy 1 <= k < {n}"
        )));
    }
    let m = g.max_degree();
    if let Some(r) = requested_m.filter(|&r| r != m) {
        return Err(Error::Parameter(format!(
            "M is fixed to the maximum degree {m}, got {r}"
        )));
    }
    let cliques = k + 2;
    let at = |i: usize, j: usize| n + (j - 1) * n + (i - 1);
    let mut roles: Vec<VertexRole> = (1..=n).map(VertexRole::Original).collect();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for j in 1..=cliques {
        roles.extend((1..=n).map(|i| VertexRole::CliqueV { i, j }));
        let members: Vec<usize> = (1..=n).map(|i| at(i, j)).collect();
        push_clique(&mut edges, &members);
        for i in 1..=n {
            edges.push((i - 1, at(i, j)));
        }
    }
    let graph = Graph::new(n * (k + 3), edges)?;
    Ok(ReducedInstance {
        graph,
        roles,
        parameter: k,
        m,
        source: Source::VertexCover(inst.clone()),
    })
}

/// Size and degree checks for a vertex-cover gadget.
pub fn audit_vc(red: &ReducedInstance) -> std::result::Result<(), String> {
    let inst = source_vc(red).map_err(|e| e.to_string())?;
    let (n, k) = (inst.graph.vertex_count(), inst.k);
    let g = &red.graph;
    g.audit()?;
    if g.vertex_count() != n * (k + 3) || red.roles.len() != n * (k + 3) {
        return Err(format!(
            "gadget has {} vertices, expected {}",
            g.vertex_count(),
            n * (k + 3)
        ));
    }
    for (v, role) in red.roles.iter().enumerate() {
        match *role {
            VertexRole::Original(i) => {
                let want = inst.graph.neighbors(i - 1).len() + k + 2;
                if g.neighbors(v).len() != want {
                    return Err(format!(
                        "v_{i} has degree {}, expected {want}",
                        g.neighbors(v).len()
                    ));
                }
            }
            VertexRole::CliqueV { i, j } => {
                let outside: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(
                        |&w| !matches!(red.roles[w], VertexRole::CliqueV { j: jj, .. } if jj == j),
                    )
                    .collect();
                if outside != [i - 1] {
                    return Err(format!("v_{i}{j} has outside neighbors {outside:?}"));
                }
                if g.neighbors(v).len() != n {
                    return Err(format!(
                        "v_{i}{j} has degree {}, expected {n}",
                        g.neighbors(v).len()
                    ));
                }
            }
            other => return Err(format!("vertex-cover gadget has a {} vertex", other.tag())),
        }
    }
    Ok(())
}

/// For each `x` in the cover (increasing), a star centered at `x` whose
/// leaves are its source neighbors outside the cover not already used.
pub fn cover_to_cut(red: &ReducedInstance, cover: &VertexSet) -> Result<CutFamily> {
    let inst = source_vc(red)?;
    if cover.len() > inst.k {
        return Err(Error::Parameter(format!(
            "cover has {} vertices, budget is {}",
            cover.len(),
            inst.k
        )));
    }
    check_cover(&inst.graph, cover)?;
    let mut used = cover.clone();
    let mut stars = Vec::with_capacity(cover.len());
    for x in cover.iter() {
        let leaves: Vec<usize> = inst
            .graph
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&w| !used.contains(w))
            .collect();
        for &w in &leaves {
            used.insert(w);
        }
        stars.push(Star::new(x, leaves)?);
    }
    CutFamily::new(CutKind::Substructure, red.m, stars)
}

/// Rebuilds a cover from a substructure cut: centers on source vertices,
/// plus `v_i` for every star centered at a clique vertex `v_{ij}`.
pub fn extract_cover(
    red: &ReducedInstance,
    cut: &CutFamily,
    triviality: Triviality,
) -> Result<Decode<VertexSet>> {
    let inst = source_vc(red)?;
    if !is_substructure_cut(&red.graph, cut.stars(), red.m, triviality)? {
        return Err(Error::NotACut(CutKind::Substructure));
    }
    let candidate: VertexSet = cut
        .stars()
        .iter()
        .filter_map(|s| match red.roles[s.center()] {
            VertexRole::Original(i) | VertexRole::CliqueV { i, .. } => Some(i - 1),
            _ => None,
        })
        .collect();
    if let Err(e) = check_cover(&inst.graph, &candidate) {
        return Ok(Decode::Absent(e.to_string()));
    }
    if candidate.len() > inst.k {
        return Ok(Decode::Absent(format!(
            "rebuilt cover has {} vertices, budget is {}",
            candidate.len(),
            inst.k
        )));
    }
    Ok(Decode::Solution(candidate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::npo::{solve_3dm, solve_vertex_cover, Triple};

    const DEF: Triviality = Triviality::AtMostOne;
    const LOOSE: Reduce3dmOptions = Reduce3dmOptions {
        allow_small_m: false,
        allow_unrestricted: true,
    };

    fn inst(n: usize, ts: &[(usize, usize, usize)]) -> ThreeDmInstance {
        ThreeDmInstance::new(
            n,
            ts.iter().map(|&(r, b, y)| Triple::new(r, b, y)).collect(),
        )
    }

    fn vc(g: Graph, k: usize) -> VertexCoverInstance {
        VertexCoverInstance::new(g, k).unwrap()
    }

    #[test]
    fn single_triple_gadget() {
        let red = reduce_3dm(&inst(1, &[(1, 1, 1)]), 5, LOOSE).unwrap();
        assert_eq!(red.graph.vertex_count(), 46);
        assert_eq!(red.graph.degree(0), Ok(5));
        for l in 1..=3 {
            let w = red.vertex_of(VertexRole::Element(l)).unwrap();
            assert_eq!(red.graph.degree(w), Ok(2));
        }
        assert_eq!(audit_3dm(&red), Ok(()));
        assert_eq!(red.kind(), CutKind::Structure);
        assert_eq!(red.parameter, 1);
    }

    #[test]
    fn reduce_3dm_rejects_bad_parameters() {
        let one = inst(1, &[(1, 1, 1)]);
        assert!(reduce_3dm(&one, 4, LOOSE).is_err());
        let small = Reduce3dmOptions {
            allow_small_m: true,
            ..LOOSE
        };
        assert!(reduce_3dm(&one, 4, small).is_ok());
        assert!(reduce_3dm(&one, 3, small).is_err());
        // restriction is enforced unless waived
        assert!(reduce_3dm(&one, 5, Reduce3dmOptions::default()).is_err());
        assert!(reduce_3dm(&inst(1, &[]), 5, LOOSE).is_err());
        assert!(reduce_3dm(&inst(1, &[(1, 1, 2)]), 5, LOOSE).is_err());
    }

    #[test]
    fn restricted_gadget_audits() {
        let i = inst(2, &[(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)]);
        for m in [5, 6, 7] {
            let red = reduce_3dm(&i, m, Reduce3dmOptions::default()).unwrap();
            assert_eq!(red.graph.vertex_count(), gadget_3dm_size(4, 2, m));
            assert_eq!(audit_3dm(&red), Ok(()));
            assert!(red.graph.is_connected());
        }
    }

    #[test]
    fn matching_encodes_and_decodes() {
        let red = reduce_3dm(&inst(1, &[(1, 1, 1)]), 5, LOOSE).unwrap();
        let cut = matching_to_cut(&red, &[0]).unwrap();
        assert_eq!(cut.len(), 1);
        let star = &cut.stars()[0];
        assert_eq!(star.center(), 0);
        let leaves: Vec<VertexRole> = star.leaves().iter().map(|&v| red.roles[v]).collect();
        assert_eq!(
            leaves,
            vec![
                VertexRole::Element(1),
                VertexRole::Element(2),
                VertexRole::Element(3),
                VertexRole::CliqueV { i: 1, j: 1 },
                VertexRole::CliqueV { i: 1, j: 2 },
            ]
        );
        assert_eq!(cut.verify(&red.graph, DEF), Ok(true));
        assert_eq!(
            extract_matching(&red, &cut, DEF).unwrap(),
            Decode::Solution(vec![0])
        );
        assert!(matching_to_cut(&red, &[]).is_err());
    }

    #[test]
    fn planted_matching_round_trips() {
        let i = inst(2, &[(1, 2, 1), (2, 1, 2), (1, 1, 1)]);
        let red = reduce_3dm(&i, 5, LOOSE).unwrap();
        let sol = solve_3dm(&i).unwrap();
        let cut = matching_to_cut(&red, &sol).unwrap();
        assert_eq!(cut.len(), 2);
        assert_eq!(is_structure_cut(&red.graph, cut.stars(), 5, DEF), Ok(true));
        assert_eq!(
            extract_matching(&red, &cut, DEF).unwrap(),
            Decode::Solution(sol)
        );
    }

    /// One star centered at the partner of the last vertex of a `U` block,
    /// taking the block's other partners and that last vertex as leaves,
    /// strands the rest of the block. This happens on every 3DM gadget,
    /// including ones built from unsolvable instances.
    #[test]
    fn u_prime_star_strands_a_block() {
        let i = inst(2, &[(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)]);
        assert!(solve_3dm(&i).is_none());
        let m = 5;
        let red = reduce_3dm(&i, m, Reduce3dmOptions::default()).unwrap();
        let center = red.vertex_of(VertexRole::UPrime(m)).unwrap();
        let mut leaves: Vec<usize> = (1..m)
            .map(|x| red.vertex_of(VertexRole::UPrime(x)).unwrap())
            .collect();
        leaves.push(
            red.vertex_of(VertexRole::UBlock { block: 1, index: m })
                .unwrap(),
        );
        let star = Star::new(center, leaves).unwrap();
        assert_eq!(
            is_structure_cut(&red.graph, std::slice::from_ref(&star), m, DEF),
            Ok(true)
        );
        let cut = CutFamily::new(CutKind::Structure, m, vec![star]).unwrap();
        assert!(matches!(
            extract_matching(&red, &cut, DEF).unwrap(),
            Decode::Absent(_)
        ));
    }

    /// When `|T| <= M + 1` a star inside `V_1` can contain every vertex of
    /// `V_1` that is attached to a triple, cutting the rest of `V_1` off.
    #[test]
    fn star_over_clique_taps_strands_the_clique() {
        let i = inst(2, &[(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)]);
        let red = reduce_3dm(&i, 5, Reduce3dmOptions::default()).unwrap();
        let v = |i| red.vertex_of(VertexRole::CliqueV { i, j: 1 }).unwrap();
        let star = Star::new(v(1), [0, v(2), v(3), v(4), v(5)]).unwrap();
        assert_eq!(is_structure_cut(&red.graph, &[star], 5, DEF), Ok(true));
    }

    #[test]
    fn extract_matching_rejects_non_cuts() {
        let red = reduce_3dm(&inst(1, &[(1, 1, 1)]), 5, LOOSE).unwrap();
        let c = red.vertex_of(VertexRole::CliqueV { i: 3, j: 1 }).unwrap();
        let leaves: Vec<usize> = (4..=6)
            .chain([2])
            .map(|i| red.vertex_of(VertexRole::CliqueV { i, j: 1 }).unwrap())
            .chain([red.vertex_of(VertexRole::CliqueV { i: 1, j: 1 }).unwrap()])
            .collect();
        // removing all of V_1 leaves the rest connected
        let whole =
            CutFamily::new(CutKind::Structure, 5, vec![Star::new(c, leaves).unwrap()]).unwrap();
        assert_eq!(
            extract_matching(&red, &whole, DEF),
            Err(Error::NotACut(CutKind::Structure))
        );
    }

    #[test]
    fn vertex_cover_gadget_sizes() {
        let red = reduce_vertex_cover(&vc(Graph::path(3), 1), None).unwrap();
        assert_eq!(red.graph.vertex_count(), 12);
        assert_eq!(red.m, 2);
        for i in 0..3 {
            assert_eq!(
                red.graph.degree(i).unwrap(),
                Graph::path(3).degree(i).unwrap() + 3
            );
        }
        assert_eq!(audit_vc(&red), Ok(()));
        let red = reduce_vertex_cover(&vc(Graph::complete(3), 1), None).unwrap();
        assert_eq!(red.graph.vertex_count(), 12);
        assert_eq!(red.m, 2);
        assert_eq!(audit_vc(&red), Ok(()));
        assert!(reduce_vertex_cover(&vc(Graph::complete(3), 1), Some(3)).is_err());
        assert!(reduce_vertex_cover(&vc(Graph::complete(3), 1), Some(2)).is_ok());
        assert!(reduce_vertex_cover(&vc(Graph::complete(3), 0), None).is_err());
    }

    #[test]
    fn cover_encodes_and_decodes() {
        let red = reduce_vertex_cover(&vc(Graph::path(3), 1), None).unwrap();
        let cut = cover_to_cut(&red, &VertexSet::from([1])).unwrap();
        assert_eq!(cut.stars(), &[Star::new(1, [0, 2]).unwrap()]);
        assert_eq!(cut.verify(&red.graph, DEF), Ok(true));
        let rest = red.graph.remove_vertices(&cut.vertices()).unwrap().graph;
        assert_eq!(rest.components().len(), 3);
        assert!(rest.components().iter().all(|c| c.len() == 3));
        assert_eq!(
            extract_cover(&red, &cut, DEF).unwrap(),
            Decode::Solution(VertexSet::from([1]))
        );

        let red = reduce_vertex_cover(&vc(Graph::path(4), 2), None).unwrap();
        let cut = cover_to_cut(&red, &VertexSet::from([1, 2])).unwrap();
        assert_eq!(
            cut.stars(),
            &[Star::new(1, [0]).unwrap(), Star::new(2, [3]).unwrap()]
        );
        assert_eq!(cut.verify(&red.graph, DEF), Ok(true));
        assert!(cover_to_cut(&red, &VertexSet::from([0, 3])).is_err());
        assert!(cover_to_cut(&red, &VertexSet::from([0, 1, 2])).is_err());
    }

    #[test]
    fn extract_cover_rejects_in_clique_families() {
        let red = reduce_vertex_cover(&vc(Graph::path(4), 2), None).unwrap();
        let v = |i, j| red.vertex_of(VertexRole::CliqueV { i, j }).unwrap();
        let cut = CutFamily::new(
            CutKind::Substructure,
            red.m,
            vec![
                Star::new(v(1, 1), [v(2, 1)]).unwrap(),
                Star::new(v(3, 1), [v(4, 1)]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(
            extract_cover(&red, &cut, DEF),
            Err(Error::NotACut(CutKind::Substructure))
        );
    }

    /// A star with `Δ(G)` leaves is allowed to cover every source vertex
    /// whenever one vertex dominates the source graph, so `K_3` with `k = 1`
    /// has a one-element cut although it has no cover of size one.
    #[test]
    fn dominating_star_cuts_vertex_cover_gadget() {
        let inst = vc(Graph::complete(3), 1);
        assert!(solve_vertex_cover(&inst).is_none());
        let red = reduce_vertex_cover(&inst, None).unwrap();
        let cut = CutFamily::new(
            CutKind::Substructure,
            2,
            vec![Star::new(0, [1, 2]).unwrap()],
        )
        .unwrap();
        assert_eq!(cut.verify(&red.graph, DEF), Ok(true));
        assert!(matches!(
            extract_cover(&red, &cut, DEF).unwrap(),
            Decode::Absent(_)
        ));
    }

    /// Two stars strand one clique vertex `v_{1j}` of the `K_4` gadget with
    /// `k = 2`, while `K_4` needs three cover vertices.
    #[test]
    fn clique_vertex_can_be_stranded() {
        let inst = vc(Graph::complete(4), 2);
        assert!(solve_vertex_cover(&inst).is_none());
        let red = reduce_vertex_cover(&inst, None).unwrap();
        let v = |i, j| red.vertex_of(VertexRole::CliqueV { i, j }).unwrap();
        let stars = vec![
            Star::new(0, []).unwrap(),
            Star::new(v(2, 1), [v(3, 1), v(4, 1)]).unwrap(),
        ];
        assert_eq!(
            is_substructure_cut(&red.graph, &stars, red.m, DEF),
            Ok(true)
        );
    }
}
