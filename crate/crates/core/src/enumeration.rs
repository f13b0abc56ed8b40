//! Pointed pseudo-triangulations: the flip operation, breadth-first
//! enumeration of the flip graph, expansive one-degree-of-freedom mechanisms
//! obtained by removing a hull edge, and their collapse along rigid
//! subcomponents.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec;
use crate::geometry::PointSet;
use crate::graph::{hull_edges, Edge, EmbeddedGraph};
use crate::rational::Rational;
use crate::rigidity::{flex_space, pair_strain, Motion, Normalization};

/// A validated pointed pseudo-triangulation. Identity is the sorted edge
/// list, which doubles as the canonical key in the flip graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Ppt {
    graph: EmbeddedGraph,
}

impl Ppt {
    pub fn new(ps: &PointSet, graph: EmbeddedGraph) -> Result<Self> {
        if graph.n() != ps.len() {
            return Err(Error::precondition("graph and point set sizes differ"));
        }
        if !graph.is_pointed_pseudo_triangulation(ps) {
            return Err(Error::precondition(
                "graph is not a pointed pseudo-triangulation",
            ));
        }
        Ok(Ppt { graph })
    }

    pub fn graph(&self) -> &EmbeddedGraph {
        &self.graph
    }

    pub fn key(&self) -> Vec<Edge> {
        self.graph.canonical_key()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.graph.contains(e)
    }

    pub fn interior_edges(&self, ps: &PointSet) -> Vec<Edge> {
        let hull = hull_edges(ps);
        self.graph.edges().filter(|e| !hull.contains(e)).collect()
    }
}

/// Removes an interior edge and inserts the unique other edge that restores
/// a pointed pseudo-triangulation. The merged face is checked to be a
/// pseudo-quadrilateral and the replacement is checked to be unique; both
/// are guaranteed structurally, so a failure signals a geometry bug.
pub fn flip(ps: &PointSet, t: &Ppt, interior_edge: Edge) -> Result<Ppt> {
    if !t.contains(interior_edge) {
        return Err(Error::precondition(format!(
            "edge {interior_edge} is not in the pseudo-triangulation"
        )));
    }
    if hull_edges(ps).contains(&interior_edge) {
        return Err(Error::precondition(format!(
            "edge {interior_edge} is on the convex hull and cannot be flipped"
        )));
    }
    let reduced = t.graph.without_edge(interior_edge);
    let faces = reduced.faces(ps)?;
    let mut quad_walks = Vec::new();
    for f in faces.bounded() {
        match f.convex_corners {
            3 => {}
            4 => quad_walks.push(f),
            c => {
                return Err(Error::invariant(format!(
                    "bounded face with {c} convex corners after edge removal"
                )))
            }
        }
    }
    if quad_walks.len() != 1 {
        return Err(Error::invariant(format!(
            "{} pseudo-quadrilateral faces after removing {interior_edge}",
            quad_walks.len()
        )));
    }
    // the merged face may pinch along a spur (a degenerate chain); corner
    // counts still identify it and the replacement stays unique
    let quad = quad_walks[0];
    let mut verts: Vec<usize> = quad.walk.clone();
    verts.sort_unstable();
    verts.dedup();
    let mut replacements = Vec::new();
    for (a, &u) in verts.iter().enumerate() {
        for &v in &verts[a + 1..] {
            let cand = Edge::new(u, v);
            if cand == interior_edge || reduced.contains(cand) {
                continue;
            }
            // any pointedness- and crossing-preserving addition restores the
            // 2n-3 edge count, hence a pointed pseudo-triangulation
            if reduced.can_add_edge(ps, cand) {
                replacements.push(cand);
            }
        }
    }
    if replacements.len() != 1 {
        return Err(Error::invariant(format!(
            "flip of {interior_edge} found {} replacements: {:?}",
            replacements.len(),
            replacements
        )));
    }
    Ppt::new(ps, reduced.with_edge(replacements[0]))
}

/// One flip-graph neighbor: the edge leaving the pseudo-triangulation and
/// the edge replacing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FlipNeighbor {
    pub node: usize,
    pub removed: Edge,
    pub inserted: Edge,
}

/// All pointed pseudo-triangulations of a point set with their flip
/// adjacency. Node order is breadth-first discovery order from a
/// deterministic greedy seed, so it is reproducible across runs and
/// independent of thread count.
#[derive(Clone, Debug)]
pub struct FlipGraph {
    pub nodes: Vec<Ppt>,
    pub adjacency: Vec<Vec<FlipNeighbor>>,
}

impl FlipGraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node_index(&self, key: &[Edge]) -> Option<usize> {
        self.nodes.iter().position(|p| p.key() == key)
    }

    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for nb in &self.adjacency[v] {
                if !seen[nb.node] {
                    seen[nb.node] = true;
                    stack.push(nb.node);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Breadth-first enumeration over interior-edge flips, starting from the
/// greedy completion of the empty graph. Frontier levels expand in parallel;
/// canonical keys make the merge order-independent.
pub fn enumerate_ppts(ps: &PointSet) -> Result<FlipGraph> {
    let seed = Ppt::new(ps, EmbeddedGraph::empty(ps.len()).complete_to_ppt(ps)?)?;
    let mut index: BTreeMap<Vec<Edge>, usize> = BTreeMap::new();
    index.insert(seed.key(), 0);
    let mut nodes = vec![seed];
    let mut adjacency: Vec<Vec<FlipNeighbor>> = vec![Vec::new()];
    let mut frontier = vec![0usize];

    while !frontier.is_empty() {
        let snapshot: Vec<(usize, Ppt)> =
            frontier.iter().map(|&ix| (ix, nodes[ix].clone())).collect();
        let expanded: Vec<(usize, Vec<(Edge, Ppt)>)> = exec::map_collect(snapshot, |(node, t)| {
            let flips = t
                .interior_edges(ps)
                .into_iter()
                .map(|e| {
                    let flipped = flip(ps, &t, e).expect("flip of an interior edge");
                    (e, flipped)
                })
                .collect();
            (node, flips)
        });

        let mut next = Vec::new();
        for (node, flips) in expanded {
            for (removed, flipped) in flips {
                let inserted = *flipped
                    .graph()
                    .edge_set()
                    .difference(nodes[node].graph().edge_set())
                    .next()
                    .expect("flip inserts an edge");
                let key = flipped.key();
                let target = match index.get(&key) {
                    Some(&ix) => ix,
                    None => {
                        let ix = nodes.len();
                        index.insert(key, ix);
                        nodes.push(flipped);
                        adjacency.push(Vec::new());
                        next.push(ix);
                        ix
                    }
                };
                adjacency[node].push(FlipNeighbor {
                    node: target,
                    removed,
                    inserted,
                });
            }
        }
        frontier = next;
    }

    Ok(FlipGraph { nodes, adjacency })
}

/// A pointed pseudo-triangulation with one convex hull edge removed: an
/// expansive mechanism with exactly one degree of freedom. The stored flex
/// is normalized and oriented so the removed edge expands.
#[derive(Clone, Debug, Serialize)]
pub struct PteMechanism {
    pub graph: EmbeddedGraph,
    pub removed_hull_edge: Edge,
    pub flex: Motion,
}

pub fn pte_mechanism(
    ps: &PointSet,
    t: &Ppt,
    hull_edge: Edge,
    norm: &Normalization,
) -> Result<PteMechanism> {
    if !t.contains(hull_edge) {
        return Err(Error::precondition(format!(
            "edge {hull_edge} is not in the pseudo-triangulation"
        )));
    }
    if !hull_edges(ps).contains(&hull_edge) {
        return Err(Error::precondition(format!(
            "edge {hull_edge} is not a convex hull edge"
        )));
    }
    let graph = t.graph.without_edge(hull_edge);
    let basis = flex_space(ps, &graph, norm);
    if basis.len() != 1 {
        return Err(Error::invariant(format!(
            "mechanism flex space has dimension {}",
            basis.len()
        )));
    }
    let mut flex = basis.into_iter().next().unwrap();
    let s = pair_strain(ps, &flex, hull_edge.lo(), hull_edge.hi());
    if s.is_zero() {
        return Err(Error::invariant(
            "mechanism flex leaves the removed hull edge tight",
        ));
    }
    if s.is_negative() {
        flex = flex.scale(&Rational::from_int(-1));
    }
    // expansiveness on every pair, not only on graph edges
    for e in Edge::all_pairs(ps.len()) {
        if pair_strain(ps, &flex, e.lo(), e.hi()).is_negative() {
            return Err(Error::invariant(format!(
                "mechanism flex contracts pair {e}"
            )));
        }
    }
    Ok(PteMechanism {
        graph,
        removed_hull_edge: hull_edge,
        flex,
    })
}

/// Tight pairs of a mechanism flex: the complete graphs on its rigid
/// components plus the remaining mechanism edges. Labels an extreme ray of
/// the expansion cone.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct CollapsedMechanism {
    pub tight_pairs: BTreeSet<Edge>,
}

/// All pairs whose strain vanishes under the mechanism flex, with the
/// closure structure checked: crossing tight pairs and non-pointed tight
/// stars force complete graphs, and every rigid component spans a convex
/// subpolygon containing every enclosed point.
pub fn collapse(ps: &PointSet, m: &PteMechanism) -> Result<CollapsedMechanism> {
    let tight_pairs: BTreeSet<Edge> = Edge::all_pairs(ps.len())
        .filter(|e| pair_strain(ps, &m.flex, e.lo(), e.hi()).is_zero())
        .collect();

    for e in m.graph.edges() {
        if !tight_pairs.contains(&e) {
            return Err(Error::invariant(format!("mechanism edge {e} is not tight")));
        }
    }

    let tight = EmbeddedGraph::new(ps.len(), tight_pairs.iter().copied())?;

    // crossing tight pairs force the complete quadruple
    let list: Vec<Edge> = tight_pairs.iter().copied().collect();
    for (a, e1) in list.iter().enumerate() {
        for e2 in &list[a + 1..] {
            if crate::graph::edges_cross(ps, *e1, *e2) {
                let quad = [e1.lo(), e1.hi(), e2.lo(), e2.hi()];
                for x in 0..4 {
                    for y in (x + 1)..4 {
                        let e = Edge::new(quad[x], quad[y]);
                        if !tight_pairs.contains(&e) {
                            return Err(Error::invariant(format!(
                                "crossing tight pairs {e1}, {e2} but {e} is slack"
                            )));
                        }
                    }
                }
            }
        }
    }

    // a non-pointed tight star forces the complete graph on the star
    for v in 0..ps.len() {
        if tight.degree(v) >= 3 && !tight.is_pointed_at(ps, v) {
            let mut star = tight.neighbors(v);
            star.push(v);
            for (a, &x) in star.iter().enumerate() {
                for &y in &star[a + 1..] {
                    if !tight_pairs.contains(&Edge::new(x, y)) {
                        return Err(Error::invariant(format!(
                            "non-pointed tight star at {v} but {x}-{y} is slack"
                        )));
                    }
                }
            }
        }
    }

    // rigid components contain everything inside their hull
    for comp in maximal_cliques(ps.len(), &tight) {
        if comp.len() < 3 {
            continue;
        }
        for p in points_strictly_inside_hull(ps, &comp) {
            if !comp.contains(&p) {
                return Err(Error::invariant(format!(
                    "point {p} lies inside a rigid component but is not part of it"
                )));
            }
        }
    }

    Ok(CollapsedMechanism { tight_pairs })
}

/// Maximal subsets of vertices all of whose pairs are tight under the
/// mechanism flex. Size-two components are exactly the mechanism bars that
/// belong to no larger rigid block; together the components cover every
/// vertex.
pub fn rigid_components(ps: &PointSet, m: &PteMechanism) -> Result<Vec<BTreeSet<usize>>> {
    let collapsed = collapse(ps, m)?;
    let tight = EmbeddedGraph::new(ps.len(), collapsed.tight_pairs.iter().copied())?;
    let comps = maximal_cliques(ps.len(), &tight);

    let mut covered = vec![false; ps.len()];
    for c in &comps {
        for &v in c {
            covered[v] = true;
        }
    }
    if !covered.iter().all(|&c| c) {
        return Err(Error::invariant(
            "rigid components do not cover all vertices",
        ));
    }
    // a pair not inside any larger component must be an actual bar
    for c in &comps {
        if c.len() == 2 {
            let mut it = c.iter();
            let e = Edge::new(*it.next().unwrap(), *it.next().unwrap());
            if !m.graph.contains(e) {
                return Err(Error::invariant(format!(
                    "isolated tight pair {e} is not a mechanism edge"
                )));
            }
        }
    }
    Ok(comps)
}

/// Maximal mutually-tight vertex subsets of an arbitrary tight-pair set;
/// the shaded blocks when drawing a collapsed mechanism.
pub fn tight_components(n: usize, tight_pairs: &BTreeSet<Edge>) -> Result<Vec<BTreeSet<usize>>> {
    let g = EmbeddedGraph::new(n, tight_pairs.iter().copied())?;
    Ok(maximal_cliques(n, &g))
}

/// Maximal cliques of size >= 2, Bron-Kerbosch, deterministic order.
fn maximal_cliques(n: usize, g: &EmbeddedGraph) -> Vec<BTreeSet<usize>> {
    let adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).into_iter().collect())
        .collect();
    let mut out: Vec<BTreeSet<usize>> = Vec::new();
    fn extend(
        r: &mut BTreeSet<usize>,
        mut p: BTreeSet<usize>,
        mut x: BTreeSet<usize>,
        adj: &[BTreeSet<usize>],
        out: &mut Vec<BTreeSet<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            if r.len() >= 2 {
                out.push(r.clone());
            }
            return;
        }
        while let Some(&v) = p.iter().next() {
            r.insert(v);
            extend(
                r,
                p.intersection(&adj[v]).copied().collect(),
                x.intersection(&adj[v]).copied().collect(),
                adj,
                out,
            );
            r.remove(&v);
            p.remove(&v);
            x.insert(v);
        }
    }
    extend(
        &mut BTreeSet::new(),
        (0..n).filter(|&v| !adj[v].is_empty()).collect(),
        BTreeSet::new(),
        &adj,
        &mut out,
    );
    out.sort();
    out
}

fn points_strictly_inside_hull(ps: &PointSet, subset: &BTreeSet<usize>) -> Vec<usize> {
    let coords: Vec<usize> = subset.iter().copied().collect();
    let sub_points =
        crate::geometry::PointSet::new(coords.iter().map(|&i| ps.point(i).clone()).collect());
    let Ok(sub) = sub_points else {
        return Vec::new();
    };
    let hull_local = crate::geometry::convex_hull(&sub);
    let hull: Vec<usize> = hull_local.into_iter().map(|i| coords[i]).collect();
    (0..ps.len())
        .filter(|&p| {
            (0..hull.len()).all(|k| ps.orientation_idx(hull[k], hull[(k + 1) % hull.len()], p) > 0)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> PointSet {
        PointSet::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap()
    }

    fn pentagon() -> PointSet {
        PointSet::from_ints(&[(0, 0), (4, -1), (6, 2), (3, 5), (-1, 3)]).unwrap()
    }

    fn ppt(ps: &PointSet, pairs: &[(usize, usize)]) -> Ppt {
        Ppt::new(ps, EmbeddedGraph::from_pairs(ps.len(), pairs).unwrap()).unwrap()
    }

    #[test]
    fn square_flip_swaps_diagonals() {
        let ps = square();
        let t = ppt(&ps, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]);
        let flipped = flip(&ps, &t, Edge::new(0, 2)).unwrap();
        assert!(flipped.contains(Edge::new(1, 3)));
        assert!(!flipped.contains(Edge::new(0, 2)));
        // involution
        let back = flip(&ps, &flipped, Edge::new(1, 3)).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn flip_preconditions() {
        let ps = square();
        let t = ppt(&ps, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]);
        assert!(flip(&ps, &t, Edge::new(0, 1)).is_err()); // hull edge
        assert!(flip(&ps, &t, Edge::new(1, 3)).is_err()); // absent edge
    }

    #[test]
    fn enumerate_square() {
        let ps = square();
        let fg = enumerate_ppts(&ps).unwrap();
        assert_eq!(fg.len(), 2);
        assert_eq!(fg.adjacency[0].len(), 1);
        assert_eq!(fg.adjacency[1].len(), 1);
        assert!(fg.is_connected());
    }

    #[test]
    fn enumerate_triangle_plus_interior_point() {
        let ps = PointSet::from_ints(&[(0, 0), (4, 0), (0, 4), (1, 1)]).unwrap();
        let fg = enumerate_ppts(&ps).unwrap();
        assert_eq!(fg.len(), 3);
        // exactly the complete graph minus each spoke to the interior point
        let spokes = [Edge::new(0, 3), Edge::new(1, 3), Edge::new(2, 3)];
        for t in &fg.nodes {
            let missing: Vec<Edge> = Edge::all_pairs(4).filter(|e| !t.contains(*e)).collect();
            assert_eq!(missing.len(), 1);
            assert!(spokes.contains(&missing[0]));
        }
    }

    #[test]
    fn enumerate_pentagon_catalan() {
        let fg = enumerate_ppts(&pentagon()).unwrap();
        assert_eq!(fg.len(), 5);
        for adj in &fg.adjacency {
            assert_eq!(adj.len(), 2); // n - 3 interior edges in convex position
        }
    }

    #[test]
    fn mechanism_pentagon_fan() {
        let ps = pentagon();
        let norm = Normalization::default_for(&ps);
        // fan from vertex 0: hull plus diagonals 0-2, 0-3
        let fan = ppt(
            &ps,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2), (0, 3)],
        );

        // removing hull edge 1-2 leaves the rigid quad {0,2,3,4} plus bar 0-1
        let m = pte_mechanism(&ps, &fan, Edge::new(1, 2), &norm).unwrap();
        assert!(pair_strain(&ps, &m.flex, 1, 2).is_positive());
        let c = collapse(&ps, &m).unwrap();
        let mut expected: BTreeSet<Edge> = [(0, 2), (0, 3), (0, 4), (2, 3), (2, 4), (3, 4)]
            .iter()
            .map(|&(i, j)| Edge::new(i, j))
            .collect();
        expected.insert(Edge::new(0, 1));
        assert_eq!(c.tight_pairs, expected);
        let comps = rigid_components(&ps, &m).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.contains(&BTreeSet::from([0, 2, 3, 4])));
        assert!(comps.contains(&BTreeSet::from([0, 1])));
        // strains vanish exactly on the tight pairs within {0,2,3,4}
        for e in Edge::all_pairs(5) {
            let s = pair_strain(&ps, &m.flex, e.lo(), e.hi());
            assert_eq!(s.is_zero(), c.tight_pairs.contains(&e));
            assert!(!s.is_negative());
        }

        // removing hull edge 2-3 leaves two triangles hinged at 0
        let m = pte_mechanism(&ps, &fan, Edge::new(2, 3), &norm).unwrap();
        let c = collapse(&ps, &m).unwrap();
        let expected: BTreeSet<Edge> = [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]
            .iter()
            .map(|&(i, j)| Edge::new(i, j))
            .collect();
        assert_eq!(c.tight_pairs, expected);
        let comps = rigid_components(&ps, &m).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.contains(&BTreeSet::from([0, 1, 2])));
        assert!(comps.contains(&BTreeSet::from([0, 3, 4])));
    }

    #[test]
    fn mechanism_triangle() {
        let ps = PointSet::from_ints(&[(0, 0), (1, 0), (0, 1)]).unwrap();
        let norm = Normalization::default_for(&ps);
        let t = ppt(&ps, &[(0, 1), (1, 2), (0, 2)]);
        let m = pte_mechanism(&ps, &t, Edge::new(1, 2), &norm).unwrap();
        assert!(pair_strain(&ps, &m.flex, 1, 2).is_positive());
        let c = collapse(&ps, &m).unwrap();
        assert_eq!(
            c.tight_pairs,
            BTreeSet::from([Edge::new(0, 1), Edge::new(0, 2)])
        );
    }

    #[test]
    fn mechanism_rejects_interior_edge() {
        let ps = square();
        let norm = Normalization::default_for(&ps);
        let t = ppt(&ps, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]);
        assert!(pte_mechanism(&ps, &t, Edge::new(0, 2), &norm).is_err());
    }

    #[test]
    fn two_mechanisms_same_collapse() {
        // guaranteed to exist on a convex pentagon: the rigid quad block can
        // be triangulated two ways
        let ps = pentagon();
        let norm = Normalization::default_for(&ps);
        let fg = enumerate_ppts(&ps).unwrap();
        let hull: Vec<Edge> = hull_edges(&ps).into_iter().collect();
        let mut seen: BTreeMap<CollapsedMechanism, Vec<(usize, Edge)>> = BTreeMap::new();
        for (ti, t) in fg.nodes.iter().enumerate() {
            for &h in &hull {
                let m = pte_mechanism(&ps, t, h, &norm).unwrap();
                let c = collapse(&ps, &m).unwrap();
                seen.entry(c).or_default().push((ti, h));
            }
        }
        assert!(
            seen.values().any(|v| v.len() >= 2),
            "expected two mechanisms with the same collapse"
        );
    }

    #[test]
    fn hull_vertex_flip_inserts_away() {
        // flipping an interior edge incident to a hull vertex yields an edge
        // not incident to that vertex
        let ps = pentagon();
        let fg = enumerate_ppts(&ps).unwrap();
        for t in &fg.nodes {
            for e in t.interior_edges(&ps) {
                let f = flip(&ps, t, e).unwrap();
                let inserted = *f
                    .graph()
                    .edge_set()
                    .difference(t.graph().edge_set())
                    .next()
                    .unwrap();
                // all five pentagon vertices are hull vertices
                for v in [e.lo(), e.hi()] {
                    assert!(!inserted.contains(v));
                }
            }
        }
    }

    #[test]
    fn shared_vertex_flip_witness_exists() {
        // a flip where the removed and inserted edges share a vertex, which
        // can only happen at an interior reflex vertex of the merged face
        let mut found = None;
        'outer: for &q in &[(4, 3), (5, 4), (3, 5), (6, 4), (5, 2)] {
            let ps = PointSet::from_ints(&[(0, 0), (10, 0), (10, 10), (0, 10), q]).unwrap();
            let fg = enumerate_ppts(&ps).unwrap();
            for t in &fg.nodes {
                for e in t.interior_edges(&ps) {
                    let f = flip(&ps, t, e).unwrap();
                    let inserted = *f
                        .graph()
                        .edge_set()
                        .difference(t.graph().edge_set())
                        .next()
                        .unwrap();
                    if inserted.shares_vertex(&e) {
                        found = Some((ps.clone(), t.clone(), e, inserted));
                        break 'outer;
                    }
                }
            }
        }
        let (ps, t, e, inserted) = found.expect("no shared-vertex flip found in search family");
        // involution still holds there
        let back = flip(&ps, &flip(&ps, &t, e).unwrap(), inserted).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn flip_involution_everywhere() {
        for coords in [
            vec![(0, 0), (4, -1), (6, 2), (3, 5), (-1, 3)],
            vec![(0, 0), (10, 0), (10, 10), (0, 10), (4, 3)],
            vec![(0, 0), (9, 1), (7, 8), (2, 7), (4, 4)],
        ] {
            let ps = PointSet::from_ints(&coords).unwrap();
            let fg = enumerate_ppts(&ps).unwrap();
            for t in &fg.nodes {
                for e in t.interior_edges(&ps) {
                    let f = flip(&ps, t, e).unwrap();
                    let inserted = *f
                        .graph()
                        .edge_set()
                        .difference(t.graph().edge_set())
                        .next()
                        .unwrap();
                    assert_eq!(flip(&ps, &f, inserted).unwrap(), *t);
                }
            }
        }
    }
}
