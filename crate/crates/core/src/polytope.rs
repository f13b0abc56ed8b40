//! The polyhedron of constrained expansive motions.
//!
//! For a perturbation table f the feasible set is
//! `strain_ij(v) >= f_ij` for every pair, pinned by the normalization rows.
//! A valid f realizes every pointed pseudo-triangulation as a simple vertex,
//! flips as bounded edges and hull-edge removals as extreme rays; validity is
//! a quadruple-wise sign condition through the canonical four-point stress.
//! The homogeneous case f = 0 is the expansion cone, whose extreme rays are
//! recovered both from collapsed mechanisms and from an independent
//! constraint-subset oracle.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::Serialize;

use crate::enumeration::{collapse, enumerate_ppts, pte_mechanism, FlipGraph, Ppt};
use crate::error::{Error, Result};
use crate::exec;
use crate::geometry::{det3, Point, PointSet};
use crate::graph::{hull_edges, Edge, EmbeddedGraph};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::rigidity::{
    four_point_stress, pair_strain, rigidity_matrix, total_strains, Motion, Normalization,
    StrainVector,
};

/// Right-hand sides of the expansion constraints, one per unordered pair.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PerturbationTable {
    n: usize,
    f: BTreeMap<Edge, Rational>,
}

impl PerturbationTable {
    pub fn new(n: usize, f: BTreeMap<Edge, Rational>) -> Result<Self> {
        for e in Edge::all_pairs(n) {
            if !f.contains_key(&e) {
                return Err(Error::precondition(format!("missing table entry for {e}")));
            }
        }
        if f.len() != n * (n - 1) / 2 {
            return Err(Error::precondition("table has extra entries"));
        }
        Ok(PerturbationTable { n, f })
    }

    pub fn zero(n: usize) -> Self {
        PerturbationTable {
            n,
            f: Edge::all_pairs(n).map(|e| (e, Rational::zero())).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, e: Edge) -> &Rational {
        &self.f[&e]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, &Rational)> {
        self.f.iter().map(|(e, r)| (*e, r))
    }
}

/// How the table is produced.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum FScheme {
    /// f_ij = det(a, p_i, p_j) * det(b, p_i, p_j) for fixed points a, b.
    DetProduct {
        a: Point,
        b: Point,
    },
    /// f_ij = (|p_i|^2 + |p_j|^2 + <p_i, p_j>) |p_i - p_j|^2 / 2.
    NormHeuristic,
    Explicit(PerturbationTable),
}

impl FScheme {
    /// Deterministic default: the determinant product with both reference
    /// points at the centroid.
    pub fn det_product_centroid(ps: &PointSet) -> FScheme {
        let c = ps.centroid();
        FScheme::DetProduct { a: c.clone(), b: c }
    }
}

pub fn make_f(ps: &PointSet, scheme: &FScheme) -> Result<PerturbationTable> {
    let n = ps.len();
    match scheme {
        FScheme::DetProduct { a, b } => {
            let f = Edge::all_pairs(n)
                .map(|e| {
                    let (i, j) = e.endpoints();
                    let v = det3(a, ps.point(i), ps.point(j)) * det3(b, ps.point(i), ps.point(j));
                    (e, v)
                })
                .collect();
            PerturbationTable::new(n, f)
        }
        FScheme::NormHeuristic => {
            let half = Rational::new(1, 2);
            let f = Edge::all_pairs(n)
                .map(|e| {
                    let (pi, pj) = (ps.point(e.lo()), ps.point(e.hi()));
                    let weight = pi.norm_squared() + pj.norm_squared() + pi.dot(pj);
                    let v = &half * &weight * pi.sub(pj).norm_squared();
                    (e, v)
                })
                .collect();
            PerturbationTable::new(n, f)
        }
        FScheme::Explicit(t) => {
            if t.n() != n {
                return Err(Error::precondition("explicit table size differs"));
            }
            Ok(t.clone())
        }
    }
}

/// Per-quadruple weighted sums R = sum w_ij f_ij. The table is valid exactly
/// when every R is positive; `witnesses` lists the offending quadruples.
#[derive(Clone, Debug, Serialize)]
pub struct ValidityReport {
    pub valid: bool,
    pub witnesses: Vec<([usize; 4], Rational)>,
}

/// The weighted sum over one quadruple with the canonical four-point stress.
pub fn quadruple_weighted_sum(
    ps: &PointSet,
    table: &dyn Fn(Edge) -> Rational,
    quad: [usize; 4],
) -> Result<Rational> {
    let w = four_point_stress(ps, quad)?;
    Ok(w.iter().map(|(e, wij)| wij * &table(e)).sum())
}

pub fn check_validity(ps: &PointSet, f: &PerturbationTable) -> Result<ValidityReport> {
    if f.n() != ps.len() {
        return Err(Error::precondition("table size differs from point count"));
    }
    let quads: Vec<[usize; 4]> = (0..ps.len())
        .combinations(4)
        .map(|q| [q[0], q[1], q[2], q[3]])
        .collect();
    let sums = exec::map_collect(quads, |quad| {
        let r = quadruple_weighted_sum(ps, &|e| f.get(e).clone(), quad)
            .expect("general position quadruple");
        (quad, r)
    });
    let witnesses: Vec<([usize; 4], Rational)> =
        sums.into_iter().filter(|(_, r)| !r.is_positive()).collect();
    Ok(ValidityReport {
        valid: witnesses.is_empty(),
        witnesses,
    })
}

/// A vertex of the polyhedron: the unique motion that is tight exactly on
/// the edges of one pointed pseudo-triangulation.
#[derive(Clone, Debug, Serialize)]
pub struct PolyhedronVertex {
    pub ppt: Ppt,
    pub motion: Motion,
    pub tight_edges: Vec<Edge>,
}

/// Solves the tight system of one pseudo-triangulation and checks that every
/// other constraint holds strictly. A non-unique solve or a strictness
/// failure means the table is not valid (or the geometry broke).
pub fn vertex_for_ppt(
    ps: &PointSet,
    f: &PerturbationTable,
    t: &Ppt,
    norm: &Normalization,
) -> Result<PolyhedronVertex> {
    let system = rigidity_matrix(ps, t.graph()).stack(&norm.rows(ps.len()))?;
    let mut rhs: Vec<Rational> = t.graph().edges().map(|e| f.get(e).clone()).collect();
    rhs.extend([Rational::zero(), Rational::zero(), Rational::zero()]);
    let motion = match system.solve(&rhs)? {
        crate::matrix::LinearSolution::Unique(x) => Motion::from_flat(&x),
        _ => {
            return Err(Error::invariant(
                "tight system is not uniquely solvable; table invalid or graph not rigid",
            ))
        }
    };
    for e in Edge::all_pairs(ps.len()) {
        if t.contains(e) {
            continue;
        }
        let s = pair_strain(ps, &motion, e.lo(), e.hi());
        if &s <= f.get(e) {
            return Err(Error::invariant(format!(
                "slack constraint {e} is not strictly satisfied; perturbation table invalid"
            )));
        }
    }
    Ok(PolyhedronVertex {
        tight_edges: t.key(),
        ppt: t.clone(),
        motion,
    })
}

/// One unbounded direction of the polyhedron, attached at a vertex.
#[derive(Clone, Debug, Serialize)]
pub struct PolytopeRay {
    pub vertex: usize,
    pub hull_edge: Edge,
    pub direction: Motion,
    pub tight_pairs: BTreeSet<Edge>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundedEdge {
    pub from: usize,
    pub to: usize,
    pub removed: Edge,
    pub inserted: Edge,
}

/// The full vertex/edge/ray layer of the polyhedron.
#[derive(Clone, Debug)]
pub struct RealizedPolytope {
    pub flip_graph: FlipGraph,
    pub vertices: Vec<PolyhedronVertex>,
    pub bounded_edges: Vec<BoundedEdge>,
    pub rays: Vec<PolytopeRay>,
}

pub fn realize_polytope(
    ps: &PointSet,
    f: &PerturbationTable,
    norm: &Normalization,
) -> Result<RealizedPolytope> {
    let fg = enumerate_ppts(ps)?;
    let vertices: Vec<PolyhedronVertex> =
        exec::map_collect(fg.nodes.clone(), |t| vertex_for_ppt(ps, f, &t, norm))
            .into_iter()
            .collect::<Result<_>>()?;

    let mut bounded_edges = Vec::new();
    for (u, nbrs) in fg.adjacency.iter().enumerate() {
        for nb in nbrs {
            if nb.node <= u {
                continue;
            }
            let shared: BTreeSet<Edge> = fg.nodes[u]
                .graph()
                .edge_set()
                .intersection(fg.nodes[nb.node].graph().edge_set())
                .copied()
                .collect();
            if shared.len() != 2 * ps.len() - 4 {
                return Err(Error::invariant(format!(
                    "flip pair shares {} edges, expected {}",
                    shared.len(),
                    2 * ps.len() - 4
                )));
            }
            let mid = vertices[u]
                .motion
                .add(&vertices[nb.node].motion)
                .scale(&Rational::new(1, 2));
            for e in Edge::all_pairs(ps.len()) {
                let s = pair_strain(ps, &mid, e.lo(), e.hi());
                let bound = f.get(e);
                let ok = if shared.contains(&e) {
                    &s == bound
                } else {
                    &s > bound
                };
                if !ok {
                    return Err(Error::invariant(format!(
                        "midpoint of flip edge {u}-{} infeasible at {e}",
                        nb.node
                    )));
                }
            }
            bounded_edges.push(BoundedEdge {
                from: u,
                to: nb.node,
                removed: nb.removed,
                inserted: nb.inserted,
            });
        }
    }

    let hull: Vec<Edge> = hull_edges(ps).into_iter().collect();
    let jobs: Vec<(usize, Edge)> = (0..fg.nodes.len())
        .flat_map(|vi| hull.iter().map(move |&h| (vi, h)))
        .collect();
    let rays: Vec<PolytopeRay> = exec::map_collect(jobs, |(vi, h)| -> Result<PolytopeRay> {
        let mech = pte_mechanism(ps, &fg.nodes[vi], h, norm)?;
        let tight = collapse(ps, &mech)?.tight_pairs;
        // spot-check feasibility along the ray
        for lambda in [Rational::from_int(1), Rational::from_int(10)] {
            let probe = vertices[vi].motion.add(&mech.flex.scale(&lambda));
            for e in Edge::all_pairs(ps.len()) {
                if &pair_strain(ps, &probe, e.lo(), e.hi()) < f.get(e) {
                    return Err(Error::invariant(format!(
                        "ray at vertex {vi} (hull edge {h}) leaves the polyhedron at {e}"
                    )));
                }
            }
        }
        Ok(PolytopeRay {
            vertex: vi,
            hull_edge: h,
            direction: mech.flex,
            tight_pairs: tight,
        })
    })
    .into_iter()
    .collect::<Result<_>>()?;

    Ok(RealizedPolytope {
        flip_graph: fg,
        vertices,
        bounded_edges,
        rays,
    })
}

/// Index of the vertex minimizing sum <p_i, v_i>; exact comparison, first
/// minimizer on ties. Demo objective for selecting one pseudo-triangulation.
pub fn min_objective_vertex(ps: &PointSet, poly: &RealizedPolytope) -> Option<usize> {
    let objective = |v: &PolyhedronVertex| -> Rational {
        (0..ps.len())
            .map(|i| ps.point(i).dot(v.motion.velocity(i)))
            .sum()
    };
    (0..poly.vertices.len()).min_by_key(|&i| objective(&poly.vertices[i]))
}

/// An extreme ray of the expansion cone, identified by its tight pairs (the
/// collapsed mechanism) and carrying one canonical generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremeRay {
    pub direction: Motion,
    pub tight_pairs: BTreeSet<Edge>,
}

/// Scales a nonzero motion so its first nonzero coordinate has absolute
/// value one. Rays agree as sets exactly when their canonical forms agree.
pub fn canonical_direction(m: &Motion) -> Motion {
    let flat = m.to_flat();
    let c = flat
        .iter()
        .find(|x| !x.is_zero())
        .expect("nonzero direction");
    m.scale(&c.abs().recip())
}

/// Extreme rays of the expansion cone via collapsed mechanisms: every
/// (pseudo-triangulation, hull edge) pair yields a mechanism; mechanisms
/// with the same collapse carry the same motion and are merged.
pub fn cone_extreme_rays(ps: &PointSet, norm: &Normalization) -> Result<Vec<ExtremeRay>> {
    let fg = enumerate_ppts(ps)?;
    let hull: Vec<Edge> = hull_edges(ps).into_iter().collect();
    let jobs: Vec<(Ppt, Edge)> = fg
        .nodes
        .into_iter()
        .flat_map(|t| hull.iter().map(move |&h| (t.clone(), h)))
        .collect();
    let produced = exec::map_collect(jobs, |(t, h)| -> Result<(BTreeSet<Edge>, Motion)> {
        let mech = pte_mechanism(ps, &t, h, norm)?;
        let tight = collapse(ps, &mech)?.tight_pairs;
        Ok((tight, canonical_direction(&mech.flex)))
    });

    let mut rays: BTreeMap<BTreeSet<Edge>, Motion> = BTreeMap::new();
    for item in produced {
        let (tight, dir) = item?;
        match rays.get(&tight) {
            Some(existing) => {
                if *existing != dir {
                    return Err(Error::invariant(
                        "equal collapsed mechanisms with different ray directions",
                    ));
                }
            }
            None => {
                rays.insert(tight, dir);
            }
        }
    }
    Ok(rays
        .into_iter()
        .map(|(tight_pairs, direction)| ExtremeRay {
            direction,
            tight_pairs,
        })
        .collect())
}

/// Independent oracle for the expansion-cone rays: sweep all constraint
/// subsets of size 2n-4, keep those whose equality set pins a line, and test
/// the generator against every remaining constraint. Exponential; refuses
/// n > 6.
pub fn brute_force_rays(ps: &PointSet, norm: &Normalization) -> Result<Vec<ExtremeRay>> {
    let n = ps.len();
    if n > 6 {
        return Err(Error::TooLarge { n, limit: 6 });
    }
    let pairs: Vec<Edge> = Edge::all_pairs(n).collect();
    let target = 2 * n - 4;
    let norm_rows = norm.rows(n);
    let subsets: Vec<Vec<Edge>> = pairs.iter().copied().combinations(target).collect();

    let found = exec::map_collect(subsets, |subset| -> Option<(BTreeSet<Edge>, Motion)> {
        let g = EmbeddedGraph::new(n, subset).expect("valid edges");
        let stacked = rigidity_matrix(ps, &g).stack(&norm_rows).expect("widths");
        let kernel = stacked.nullspace();
        if kernel.len() != 1 {
            return None;
        }
        let candidate = Motion::from_flat(&kernel[0]);
        for dir in [candidate.scale(&Rational::from_int(-1)), candidate] {
            let feasible =
                Edge::all_pairs(n).all(|e| !pair_strain(ps, &dir, e.lo(), e.hi()).is_negative());
            if feasible && !dir.is_zero() {
                let tight: BTreeSet<Edge> = Edge::all_pairs(n)
                    .filter(|e| pair_strain(ps, &dir, e.lo(), e.hi()).is_zero())
                    .collect();
                return Some((tight, canonical_direction(&dir)));
            }
        }
        None
    });

    let mut rays: BTreeMap<BTreeSet<Edge>, Motion> = BTreeMap::new();
    for (tight, dir) in found.into_iter().flatten() {
        match rays.get(&tight) {
            Some(existing) => {
                if *existing != dir {
                    return Err(Error::invariant(
                        "oracle found one tight set with two directions",
                    ));
                }
            }
            None => {
                rays.insert(tight, dir);
            }
        }
    }
    Ok(rays
        .into_iter()
        .map(|(tight_pairs, direction)| ExtremeRay {
            direction,
            tight_pairs,
        })
        .collect())
}

/// Expansive flex of a pointed non-crossing framework: `None` exactly when
/// the graph already contains every hull edge; otherwise a motion with zero
/// strain on the graph, nonnegative strain on all pairs and strictly
/// positive strain on every missing hull edge.
pub fn expansive_flex(
    ps: &PointSet,
    g: &EmbeddedGraph,
    norm: &Normalization,
) -> Result<Option<Motion>> {
    if g.n() != ps.len() {
        return Err(Error::precondition("graph and point set sizes differ"));
    }
    if !g.is_noncrossing(ps) || !g.is_pointed(ps) {
        return Err(Error::precondition(
            "expansive_flex requires a pointed non-crossing graph",
        ));
    }
    let missing: Vec<Edge> = hull_edges(ps)
        .into_iter()
        .filter(|h| !g.contains(*h))
        .collect();
    if missing.is_empty() {
        return Ok(None);
    }
    let mut total = Motion::zero(ps.len());
    for &h in &missing {
        // adding a hull edge keeps the graph pointed and non-crossing
        let completed = g.with_edge(h).complete_to_ppt(ps)?;
        let mech = pte_mechanism(ps, &Ppt::new(ps, completed)?, h, norm)?;
        total = total.add(&mech.flex);
    }
    for e in g.edges() {
        if !pair_strain(ps, &total, e.lo(), e.hi()).is_zero() {
            return Err(Error::invariant(format!("graph edge {e} is strained")));
        }
    }
    for e in Edge::all_pairs(ps.len()) {
        if pair_strain(ps, &total, e.lo(), e.hi()).is_negative() {
            return Err(Error::invariant(format!("pair {e} contracts")));
        }
    }
    for &h in &missing {
        if !pair_strain(ps, &total, h.lo(), h.hi()).is_positive() {
            return Err(Error::invariant(format!(
                "missing hull edge {h} is not strictly expansive"
            )));
        }
    }
    Ok(Some(total))
}

/// Strains of a motion on all pairs; the coordinates of the image of the
/// rigidity map of the complete graph.
pub fn delta_of_motion(ps: &PointSet, m: &Motion) -> StrainVector {
    total_strains(ps, m)
}

/// Residuals sum w_ij delta_ij per quadruple; all zero exactly when delta is
/// in the image of the rigidity map.
#[derive(Clone, Debug)]
pub struct QuadrupleResiduals {
    pub residuals: Vec<([usize; 4], Rational)>,
}

impl QuadrupleResiduals {
    pub fn all_zero(&self) -> bool {
        self.residuals.iter().all(|(_, r)| r.is_zero())
    }

    pub fn nonzero(&self) -> Vec<&([usize; 4], Rational)> {
        self.residuals
            .iter()
            .filter(|(_, r)| !r.is_zero())
            .collect()
    }
}

pub fn check_quadruple_equations(
    ps: &PointSet,
    delta: &StrainVector,
) -> Result<QuadrupleResiduals> {
    let n = ps.len();
    for e in Edge::all_pairs(n) {
        if delta.get(e).is_none() {
            return Err(Error::precondition(format!("delta misses pair {e}")));
        }
    }
    let quads: Vec<[usize; 4]> = (0..n)
        .combinations(4)
        .map(|q| [q[0], q[1], q[2], q[3]])
        .collect();
    let residuals = exec::map_collect(quads, |quad| {
        let r = quadruple_weighted_sum(ps, &|e| delta.get(e).cloned().unwrap(), quad)
            .expect("general position quadruple");
        (quad, r)
    });
    Ok(QuadrupleResiduals { residuals })
}

/// Rebuilds a motion from a total strain table: anchors first, then each
/// remaining vertex from its two anchor equations, then an exactness check
/// on every other pair. Fails with `NotInImage` when the table is not a
/// strain table of any motion.
pub fn reconstruct_motion(
    ps: &PointSet,
    delta: &StrainVector,
    norm: &Normalization,
) -> Result<Motion> {
    let n = ps.len();
    for e in Edge::all_pairs(n) {
        if delta.get(e).is_none() {
            return Err(Error::precondition(format!("delta misses pair {e}")));
        }
    }
    let a = norm.anchor_a;
    let b = norm.anchor_b;
    let pa = ps.point(a);
    let pb = ps.point(b);

    let mut velocities = vec![Point::new(Rational::zero(), Rational::zero()); n];
    // v_a = 0; v_b = (0, t) with strain_ab = <p_a - p_b, v_a - v_b> = t (y_b - y_a)
    let t = delta.get(Edge::new(a, b)).unwrap() / &(&pb.y - &pa.y);
    velocities[b] = Point::new(Rational::zero(), t);

    for i in 0..n {
        if i == a || i == b {
            continue;
        }
        let pi = ps.point(i);
        // <p_a - p_i, v_a - v_i> = delta_ai and likewise for b
        let da = pa.sub(pi);
        let db = pb.sub(pi);
        let rhs_a = da.dot(&velocities[a]) - delta.get(Edge::new(a, i)).unwrap();
        let rhs_b = db.dot(&velocities[b]) - delta.get(Edge::new(b, i)).unwrap();
        let system = Matrix::from_rows(vec![
            vec![da.x.clone(), da.y.clone()],
            vec![db.x.clone(), db.y.clone()],
        ])?;
        match system.solve(&[rhs_a, rhs_b])? {
            crate::matrix::LinearSolution::Unique(x) => {
                velocities[i] = Point::new(x[0].clone(), x[1].clone());
            }
            _ => {
                return Err(Error::invariant(
                    "anchor directions are parallel; general position violated",
                ))
            }
        }
    }

    let m = Motion(velocities);
    for e in Edge::all_pairs(n) {
        if &pair_strain(ps, &m, e.lo(), e.hi()) != delta.get(e).unwrap() {
            return Err(Error::NotInImage(e.lo(), e.hi()));
        }
    }
    Ok(m)
}

/// The parameter-free coordinates of a realized vertex: d_ij = f_ij -
/// strain_ij. True when every d is nonpositive, vanishes exactly on the
/// pseudo-triangulation edges, and every quadruple sums to one under the
/// canonical stress.
pub fn delta_space_check(ps: &PointSet, f: &PerturbationTable, vertex: &PolyhedronVertex) -> bool {
    let n = ps.len();
    let d: BTreeMap<Edge, Rational> = Edge::all_pairs(n)
        .map(|e| {
            let s = pair_strain(ps, &vertex.motion, e.lo(), e.hi());
            (e, f.get(e) - &s)
        })
        .collect();
    for (e, dij) in &d {
        if dij.is_positive() {
            return false;
        }
        if dij.is_zero() != vertex.ppt.contains(*e) {
            return false;
        }
    }
    let one = Rational::one();
    (0..n).combinations(4).all(|q| {
        let quad = [q[0], q[1], q[2], q[3]];
        quadruple_weighted_sum(ps, &|e| d[&e].clone(), quad)
            .map(|r| r == one)
            .unwrap_or(false)
    })
}
