//! Straight-line graphs on a point set: crossing and pointedness predicates,
//! exact rotation systems, face traversal, pseudo-triangulation recognition
//! and greedy completion to a pointed pseudo-triangulation.
//!
//! Angular order never uses trigonometry: directions are compared by
//! half-plane index and an exact cross product, which is a strict total
//! order under general position.

use std::collections::BTreeSet;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geometry::{convex_hull, orientation, segments_properly_cross, Point, PointSet};

/// Unordered pair of vertex indices, stored with the smaller index first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    /// Panics if `i == j`.
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i != j, "self-loop edge ({i}, {i})");
        if i < j {
            Edge(i, j)
        } else {
            Edge(j, i)
        }
    }

    pub fn lo(&self) -> usize {
        self.0
    }

    pub fn hi(&self) -> usize {
        self.1
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn other(&self, v: usize) -> usize {
        debug_assert!(self.contains(v));
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.contains(other.0) || self.contains(other.1)
    }

    /// All pairs `(i, j)` with `i < j < n`.
    pub fn all_pairs(n: usize) -> impl Iterator<Item = Edge> {
        (0..n).flat_map(move |i| ((i + 1)..n).map(move |j| Edge(i, j)))
    }
}

impl std::fmt::Debug for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.0, self.1).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (i, j) = <(usize, usize)>::deserialize(d)?;
        if i == j {
            return Err(D::Error::custom(format!("self-loop edge ({i}, {j})")));
        }
        Ok(Edge::new(i, j))
    }
}

/// True iff the open segments of the two edges properly cross.
pub fn edges_cross(ps: &PointSet, e1: Edge, e2: Edge) -> bool {
    if e1 == e2 || e1.shares_vertex(&e2) {
        return false;
    }
    segments_properly_cross(
        ps.point(e1.0),
        ps.point(e1.1),
        ps.point(e2.0),
        ps.point(e2.1),
    )
}

/// One face of a non-crossing graph: the closed walk of vertices with the
/// face interior on its left, plus exact corner counts.
#[derive(Clone, Debug)]
pub struct Face {
    pub walk: Vec<usize>,
    pub is_outer: bool,
    pub convex_corners: usize,
    pub reflex_corners: usize,
    /// Whether the walk is a simple cycle (no repeated vertex). Pseudo-triangle
    /// faces are always simple; spurs and cut vertices are not.
    pub is_simple: bool,
}

#[derive(Clone, Debug)]
pub struct FaceDecomposition {
    pub faces: Vec<Face>,
}

impl FaceDecomposition {
    pub fn outer(&self) -> &Face {
        self.faces.iter().find(|f| f.is_outer).expect("outer face")
    }

    pub fn bounded(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| !f.is_outer)
    }

    pub fn bounded_count(&self) -> usize {
        self.faces.iter().filter(|f| !f.is_outer).count()
    }
}

/// Edge set over point indices, no geometry of its own; all predicates take
/// the underlying [`PointSet`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EmbeddedGraph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl EmbeddedGraph {
    pub fn empty(n: usize) -> Self {
        EmbeddedGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut g = EmbeddedGraph::empty(n);
        for e in edges {
            if e.1 >= n {
                return Err(Error::InvalidEdge(e.0, e.1));
            }
            g.edges.insert(e);
        }
        Ok(g)
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        for &(i, j) in pairs {
            if i == j || i >= n || j >= n {
                return Err(Error::InvalidEdge(i, j));
            }
        }
        EmbeddedGraph::new(n, pairs.iter().map(|&(i, j)| Edge::new(i, j)))
    }

    pub fn complete(n: usize) -> Self {
        EmbeddedGraph {
            n,
            edges: Edge::all_pairs(n).collect(),
        }
    }

    /// The convex hull cycle as a graph.
    pub fn hull_graph(ps: &PointSet) -> Self {
        let hull = convex_hull(ps);
        let edges = (0..hull.len()).map(|i| Edge::new(hull[i], hull[(i + 1) % hull.len()]));
        EmbeddedGraph {
            n: ps.len(),
            edges: edges.collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        assert!(e.1 < self.n, "edge {e} out of range");
        self.edges.insert(e)
    }

    pub fn remove(&mut self, e: Edge) -> bool {
        self.edges.remove(&e)
    }

    pub fn with_edge(&self, e: Edge) -> Self {
        let mut g = self.clone();
        g.insert(e);
        g
    }

    pub fn without_edge(&self, e: Edge) -> Self {
        let mut g = self.clone();
        g.remove(e);
        g
    }

    pub fn is_subgraph_of(&self, other: &EmbeddedGraph) -> bool {
        self.edges.is_subset(&other.edges)
    }

    /// Sorted edge list; the canonical identity of the graph.
    pub fn canonical_key(&self) -> Vec<Edge> {
        self.edges.iter().copied().collect()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|e| e.contains(v))
            .map(|e| e.other(v))
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn is_noncrossing(&self, ps: &PointSet) -> bool {
        let edges: Vec<Edge> = self.edges.iter().copied().collect();
        for (a, e1) in edges.iter().enumerate() {
            for e2 in &edges[a + 1..] {
                if edges_cross(ps, *e1, *e2) {
                    return false;
                }
            }
        }
        true
    }

    /// Neighbors of `v` in counter-clockwise angular order, starting from the
    /// positive x direction.
    pub fn angular_order(&self, ps: &PointSet, v: usize) -> Vec<usize> {
        let mut nbrs = self.neighbors(v);
        let pv = ps.point(v).clone();
        nbrs.sort_by(|&a, &b| compare_directions(&ps.point(a).sub(&pv), &ps.point(b).sub(&pv)));
        nbrs
    }

    /// A vertex is pointed when some angular gap between consecutive incident
    /// edges exceeds pi. Vertices of degree at most two are always pointed
    /// under general position.
    pub fn is_pointed_at(&self, ps: &PointSet, v: usize) -> bool {
        let nbrs = self.angular_order(ps, v);
        if nbrs.len() <= 2 {
            return true;
        }
        let pv = ps.point(v);
        let dirs: Vec<Point> = nbrs.iter().map(|&u| ps.point(u).sub(pv)).collect();
        (0..dirs.len()).any(|k| {
            let next = &dirs[(k + 1) % dirs.len()];
            dirs[k].cross(next).is_negative()
        })
    }

    pub fn is_pointed(&self, ps: &PointSet) -> bool {
        (0..self.n).all(|v| self.is_pointed_at(ps, v))
    }

    /// Face decomposition from the exact rotation system.
    ///
    /// Requires a connected non-crossing graph with at least one edge.
    pub fn faces(&self, ps: &PointSet) -> Result<FaceDecomposition> {
        if !self.is_noncrossing(ps) {
            return Err(Error::precondition("faces: graph has crossing edges"));
        }
        if self.edges.is_empty() {
            return Err(Error::precondition("faces: graph has no edges"));
        }
        if !self.is_connected() {
            return Err(Error::precondition("faces: graph is not connected"));
        }

        let rotation: Vec<Vec<usize>> = (0..self.n).map(|v| self.angular_order(ps, v)).collect();
        let pos_in_rotation = |v: usize, u: usize| {
            rotation[v]
                .iter()
                .position(|&x| x == u)
                .expect("neighbor in rotation")
        };

        let mut darts: BTreeSet<(usize, usize)> = self
            .edges
            .iter()
            .flat_map(|e| [(e.0, e.1), (e.1, e.0)])
            .collect();
        let mut faces = Vec::new();
        while let Some(&start) = darts.iter().next() {
            let mut walk = Vec::new();
            let mut dart = start;
            loop {
                darts.remove(&dart);
                walk.push(dart.0);
                let (u, v) = dart;
                // interior kept on the left: continue with the rotation
                // predecessor of the reversed dart
                let k = pos_in_rotation(v, u);
                let m = rotation[v].len();
                let w = rotation[v][(k + m - 1) % m];
                dart = (v, w);
                if dart == start {
                    break;
                }
            }
            faces.push(walk);
        }

        let mut decomposed: Vec<Face> = faces
            .into_iter()
            .map(|walk| {
                let k = walk.len();
                let mut convex = 0;
                let mut reflex = 0;
                for i in 0..k {
                    let prev = walk[(i + k - 1) % k];
                    let cur = walk[i];
                    let next = walk[(i + 1) % k];
                    if prev == next {
                        reflex += 1; // spur tip, full-turn angle
                        continue;
                    }
                    match orientation(ps.point(prev), ps.point(cur), ps.point(next)) {
                        1 => convex += 1,
                        -1 => reflex += 1,
                        _ => unreachable!("collinear triple in validated point set"),
                    }
                }
                let mut seen = walk.clone();
                seen.sort_unstable();
                seen.dedup();
                let is_simple = seen.len() == walk.len();
                Face {
                    walk,
                    is_outer: false,
                    convex_corners: convex,
                    reflex_corners: reflex,
                    is_simple,
                }
            })
            .collect();

        if decomposed.len() == 1 {
            decomposed[0].is_outer = true;
        } else {
            let mut outer = Vec::new();
            for (i, f) in decomposed.iter().enumerate() {
                if walk_twice_area(ps, &f.walk).is_negative() {
                    outer.push(i);
                }
            }
            if outer.len() != 1 {
                return Err(Error::invariant(format!(
                    "face traversal found {} outer faces",
                    outer.len()
                )));
            }
            decomposed[outer[0]].is_outer = true;
        }
        Ok(FaceDecomposition { faces: decomposed })
    }

    /// Pseudo-triangulation: non-crossing, contains the hull, connected, and
    /// every bounded face is a simple polygon with exactly three convex
    /// corners.
    pub fn is_pseudo_triangulation(&self, ps: &PointSet) -> bool {
        if !self.is_noncrossing(ps) || !self.is_connected() {
            return false;
        }
        let hull = EmbeddedGraph::hull_graph(ps);
        if !hull.is_subgraph_of(self) {
            return false;
        }
        let faces = self.faces(ps).expect("non-crossing connected graph");
        let ok = faces
            .bounded()
            .all(|f| f.is_simple && f.convex_corners == 3);
        ok
    }

    /// Pointed pseudo-triangulation. Also cross-checks the edge-count
    /// shortcut: a pointed non-crossing graph with 2n-3 edges must be a
    /// pseudo-triangulation, and conversely.
    pub fn is_pointed_pseudo_triangulation(&self, ps: &PointSet) -> bool {
        let pointed = self.is_pointed(ps);
        let full = pointed && self.is_pseudo_triangulation(ps);
        let shortcut = pointed && self.is_noncrossing(ps) && self.edge_count() == 2 * self.n - 3;
        assert_eq!(
            full, shortcut,
            "edge-count shortcut disagrees with the face-based route"
        );
        full
    }

    /// Whether `e` can be added keeping the graph non-crossing and pointed.
    pub fn can_add_edge(&self, ps: &PointSet, e: Edge) -> bool {
        if self.contains(e) {
            return false;
        }
        if self.edges.iter().any(|&f| edges_cross(ps, e, f)) {
            return false;
        }
        let g = self.with_edge(e);
        g.is_pointed_at(ps, e.0) && g.is_pointed_at(ps, e.1)
    }

    /// Greedy completion to a pointed pseudo-triangulation: scan candidate
    /// pairs in lexicographic order, add whatever fits, rescan until no edge
    /// can be added. Deterministic.
    pub fn complete_to_ppt(&self, ps: &PointSet) -> Result<EmbeddedGraph> {
        if self.n != ps.len() {
            return Err(Error::precondition("graph and point set sizes differ"));
        }
        if !self.is_noncrossing(ps) || !self.is_pointed(ps) {
            return Err(Error::precondition(
                "complete_to_ppt requires a pointed non-crossing graph",
            ));
        }
        let mut g = self.clone();
        loop {
            let mut added = false;
            for e in Edge::all_pairs(self.n) {
                if g.can_add_edge(ps, e) {
                    g.insert(e);
                    added = true;
                }
            }
            if !added {
                break;
            }
        }
        if !g.is_pointed_pseudo_triangulation(ps) {
            return Err(Error::invariant(
                "greedy completion did not reach a pointed pseudo-triangulation",
            ));
        }
        Ok(g)
    }
}

impl std::fmt::Debug for EmbeddedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "EmbeddedGraph(n={}, {:?})", self.n, self.edges)
    }
}

impl Serialize for EmbeddedGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("EmbeddedGraph", 1)?;
        st.serialize_field("edges", &self.canonical_key())?;
        st.end()
    }
}

/// Total counter-clockwise order on nonzero directions, starting at the
/// positive x axis. Ties are impossible under general position.
fn compare_directions(a: &Point, b: &Point) -> std::cmp::Ordering {
    let half = |d: &Point| -> u8 {
        if d.y.is_positive() || (d.y.is_zero() && d.x.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let c = a.cross(b);
        if c.is_positive() {
            std::cmp::Ordering::Less
        } else if c.is_negative() {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    })
}

/// Twice the signed area of a closed walk. Spur edges cancel; the outer face
/// of a connected graph is the unique walk with negative area.
fn walk_twice_area(ps: &PointSet, walk: &[usize]) -> crate::rational::Rational {
    let k = walk.len();
    (0..k)
        .map(|i| ps.point(walk[i]).cross(ps.point(walk[(i + 1) % k])))
        .sum()
}

/// Hull edges of the point set.
pub fn hull_edges(ps: &PointSet) -> BTreeSet<Edge> {
    EmbeddedGraph::hull_graph(ps).edge_set().clone()
}
