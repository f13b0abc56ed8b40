//! Secondary-polytope coordinates for convex position and the affine map
//! identifying them with the realized polytope vertices.
//!
//! Areas are normalized: the area of a triangle (p, q, r) is |det(p, q, r)|,
//! twice the Euclidean area.

use serde::Serialize;

use crate::enumeration::Ppt;
use crate::error::{Error, Result};
use crate::geometry::PointSet;
use crate::graph::Edge;
use crate::matrix::Matrix;
use crate::polytope::{realize_polytope, PerturbationTable, PolyhedronVertex, RealizedPolytope};
use crate::rational::Rational;
use crate::rigidity::{pair_strain, Motion, Normalization};

/// Per-point sums of incident triangle areas of one triangulation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GkzVector(pub Vec<Rational>);

/// The points must be the convex hull cycle in counter-clockwise order.
pub fn assert_ccw_convex_position(ps: &PointSet) -> Result<()> {
    let hull = crate::geometry::convex_hull(ps);
    if hull.len() != ps.len() {
        return Err(Error::precondition("point set is not in convex position"));
    }
    let start = hull.iter().position(|&i| i == 0).expect("0 on hull");
    let rotated: Vec<usize> = (0..hull.len())
        .map(|k| hull[(start + k) % hull.len()])
        .collect();
    if rotated != (0..ps.len()).collect::<Vec<_>>() {
        return Err(Error::precondition(
            "points are not ordered counter-clockwise along the hull",
        ));
    }
    Ok(())
}

/// a_i = total normalized area of the triangles of `t` incident to p_i,
/// summed over the fan of neighbors ordered around the polygon.
pub fn gkz_vector(ps: &PointSet, t: &Ppt) -> Result<GkzVector> {
    assert_ccw_convex_position(ps)?;
    let n = ps.len();
    let mut a = Vec::with_capacity(n);
    for i in 0..n {
        let mut nbrs = t.graph().neighbors(i);
        // cyclic order around the polygon, starting just after i
        nbrs.sort_by_key(|&j| (j + n - i) % n);
        let area: Rational = nbrs.windows(2).map(|w| ps.det3_idx(i, w[0], w[1])).sum();
        a.push(area);
    }
    Ok(GkzVector(a))
}

/// d coordinate of an almost-hull edge (i-1, i+1) at a feasible motion.
fn almost_hull_d(ps: &PointSet, f: &PerturbationTable, motion: &Motion, i: usize) -> Rational {
    let n = ps.len();
    let prev = (i + n - 1) % n;
    let next = (i + 1) % n;
    f.get(Edge::new(prev, next)) - &pair_strain(ps, motion, prev, next)
}

/// Verifies at every index the closed form
/// d_{i-1,i+1} = -det(p_{i-1}, p_i, p_{i+1}) (Area_T(p_i) - det(p_{i-1}, p_i, p_{i+1})).
pub fn almost_hull_delta_check(
    ps: &PointSet,
    f: &PerturbationTable,
    vertex: &PolyhedronVertex,
) -> Result<()> {
    let gkz = gkz_vector(ps, &vertex.ppt)?;
    let n = ps.len();
    for i in 0..n {
        let prev = (i + n - 1) % n;
        let next = (i + 1) % n;
        let det = ps.det3_idx(prev, i, next);
        let expected = -&det * (&gkz.0[i] - &det);
        let actual = almost_hull_d(ps, f, &vertex.motion, i);
        if actual != expected {
            return Err(Error::invariant(format!(
                "almost-hull coordinate at index {i}: got {actual}, expected {expected}"
            )));
        }
    }
    Ok(())
}

/// The affine map from motions to secondary-polytope coordinates:
/// a_i = -d_{i-1,i+1} / det(p_{i-1}, p_i, p_{i+1}) + det(p_{i-1}, p_i, p_{i+1}).
pub fn affine_map_motion(ps: &PointSet, f: &PerturbationTable, motion: &Motion) -> GkzVector {
    let n = ps.len();
    let a = (0..n)
        .map(|i| {
            let prev = (i + n - 1) % n;
            let next = (i + 1) % n;
            let det = ps.det3_idx(prev, i, next);
            -&almost_hull_d(ps, f, motion, i) / &det + det
        })
        .collect();
    GkzVector(a)
}

/// Checks, over the whole realized polytope of a convex point set, that the
/// affine map reproduces the secondary-polytope coordinates exactly at every
/// vertex, and behaves affinely on bounded-edge midpoints.
pub fn affine_map_check(
    ps: &PointSet,
    f: &PerturbationTable,
    norm: &Normalization,
) -> Result<bool> {
    assert_ccw_convex_position(ps)?;
    let poly = realize_polytope(ps, f, norm)?;
    Ok(affine_map_check_on(ps, f, &poly))
}

/// Same check against an already realized polytope.
pub fn affine_map_check_on(ps: &PointSet, f: &PerturbationTable, poly: &RealizedPolytope) -> bool {
    let half = Rational::new(1, 2);
    for v in &poly.vertices {
        let direct = gkz_vector(ps, &v.ppt).expect("convex position");
        let mapped = affine_map_motion(ps, f, &v.motion);
        if direct != mapped {
            return false;
        }
        if almost_hull_delta_check(ps, f, v).is_err() {
            return false;
        }
    }
    for be in &poly.bounded_edges {
        let mu = &poly.vertices[be.from].motion;
        let mw = &poly.vertices[be.to].motion;
        let mid = mu.add(mw).scale(&half);
        let mapped_mid = affine_map_motion(ps, f, &mid);
        let au = affine_map_motion(ps, f, mu);
        let aw = affine_map_motion(ps, f, mw);
        let average: Vec<Rational> =
            au.0.iter()
                .zip(&aw.0)
                .map(|(x, y)| (x + y) * &half)
                .collect();
        if mapped_mid.0 != average {
            return false;
        }
    }
    true
}

/// Rank of the span of GKZ differences; n - 3 for a convex n-gon.
pub fn gkz_span_rank(vectors: &[GkzVector]) -> usize {
    if vectors.len() < 2 {
        return 0;
    }
    let base = &vectors[0];
    let rows: Vec<Vec<Rational>> = vectors[1..]
        .iter()
        .map(|v| v.0.iter().zip(&base.0).map(|(a, b)| a - b).collect())
        .collect();
    Matrix::from_rows(rows).expect("equal lengths").rank()
}
