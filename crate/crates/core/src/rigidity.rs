//! Infinitesimal rigidity over exact rationals: the rigidity map and matrix,
//! flex and self-stress spaces, the explicit four-point stress, and the
//! Laman count condition.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geometry::{Point, PointSet};
use crate::graph::{Edge, EmbeddedGraph};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// One velocity vector per point.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Motion(pub Vec<Point>);

impl Motion {
    pub fn zero(n: usize) -> Self {
        Motion(vec![Point::new(Rational::zero(), Rational::zero()); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn velocity(&self, i: usize) -> &Point {
        &self.0[i]
    }

    pub fn add(&self, other: &Motion) -> Motion {
        assert_eq!(self.len(), other.len());
        Motion(self.0.iter().zip(&other.0).map(|(a, b)| a.add(b)).collect())
    }

    pub fn sub(&self, other: &Motion) -> Motion {
        assert_eq!(self.len(), other.len());
        Motion(self.0.iter().zip(&other.0).map(|(a, b)| a.sub(b)).collect())
    }

    pub fn scale(&self, k: &Rational) -> Motion {
        Motion(self.0.iter().map(|p| p.scale(k)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Point::is_zero)
    }

    /// Flat coordinate vector (v_0^x, v_0^y, v_1^x, ...).
    pub fn to_flat(&self) -> Vec<Rational> {
        self.0
            .iter()
            .flat_map(|p| [p.x.clone(), p.y.clone()])
            .collect()
    }

    pub fn from_flat(flat: &[Rational]) -> Motion {
        assert!(flat.len().is_multiple_of(2));
        Motion(
            flat.chunks(2)
                .map(|c| Point::new(c[0].clone(), c[1].clone()))
                .collect(),
        )
    }

    /// Uniform translation.
    pub fn translation(n: usize, d: &Point) -> Motion {
        Motion(vec![d.clone(); n])
    }

    /// Rotation about the origin: v_i = perp(p_i).
    pub fn rotation(ps: &PointSet) -> Motion {
        Motion(ps.points().iter().map(Point::perp).collect())
    }

    /// Dilation from the origin: v_i = p_i. Strictly expansive.
    pub fn dilation(ps: &PointSet) -> Motion {
        Motion(ps.points().to_vec())
    }
}

/// Pinning rule that kills the three trivial degrees of freedom:
/// v_a = (0, 0) and the x-component of v_b = 0, where the anchor points
/// must differ in y-coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Normalization {
    pub anchor_a: usize,
    pub anchor_b: usize,
}

impl Normalization {
    pub fn new(ps: &PointSet, anchor_a: usize, anchor_b: usize) -> Result<Self> {
        if anchor_a >= ps.len() || anchor_b >= ps.len() || anchor_a == anchor_b {
            return Err(Error::precondition("normalization anchors out of range"));
        }
        if ps.point(anchor_a).y == ps.point(anchor_b).y {
            return Err(Error::precondition(
                "normalization anchors must differ in y-coordinate",
            ));
        }
        Ok(Normalization { anchor_a, anchor_b })
    }

    /// Deterministic default: the lowest index, paired with the lowest index
    /// whose y-coordinate differs. Exists for every valid point set.
    pub fn default_for(ps: &PointSet) -> Self {
        let a = 0;
        let b = (1..ps.len())
            .find(|&i| ps.point(i).y != ps.point(a).y)
            .expect("general position guarantees a second y value");
        Normalization {
            anchor_a: a,
            anchor_b: b,
        }
    }

    /// Three constraint rows over the 2n motion coordinates.
    pub fn rows(&self, n: usize) -> Matrix {
        let mut m = Matrix::zeros(3, 2 * n);
        *m.at_mut(0, 2 * self.anchor_a) = Rational::one();
        *m.at_mut(1, 2 * self.anchor_a + 1) = Rational::one();
        *m.at_mut(2, 2 * self.anchor_b) = Rational::one();
        m
    }

    pub fn satisfied_by(&self, m: &Motion) -> bool {
        m.velocity(self.anchor_a).is_zero() && m.velocity(self.anchor_b).x.is_zero()
    }
}

/// Per-edge strain values, keyed by unordered pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StrainVector {
    strains: BTreeMap<Edge, Rational>,
}

impl StrainVector {
    pub fn new(strains: BTreeMap<Edge, Rational>) -> Self {
        StrainVector { strains }
    }

    pub fn get(&self, e: Edge) -> Option<&Rational> {
        self.strains.get(&e)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, &Rational)> {
        self.strains.iter().map(|(e, r)| (*e, r))
    }

    pub fn len(&self) -> usize {
        self.strains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strains.is_empty()
    }
}

/// Edge weights in equilibrium at every vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Stress {
    weights: BTreeMap<Edge, Rational>,
}

impl Stress {
    pub fn new(weights: BTreeMap<Edge, Rational>) -> Self {
        Stress { weights }
    }

    pub fn get(&self, e: Edge) -> Option<&Rational> {
        self.weights.get(&e)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, &Rational)> {
        self.weights.iter().map(|(e, r)| (*e, r))
    }

    pub fn is_zero(&self) -> bool {
        self.weights.values().all(Rational::is_zero)
    }

    /// Exact equilibrium at every vertex: sum of w_ij (p_i - p_j) over
    /// incident edges vanishes.
    pub fn in_equilibrium(&self, ps: &PointSet) -> bool {
        for i in 0..ps.len() {
            let mut fx = Rational::zero();
            let mut fy = Rational::zero();
            for (e, w) in &self.weights {
                if !e.contains(i) {
                    continue;
                }
                let j = e.other(i);
                let d = ps.point(i).sub(ps.point(j));
                fx += &(w * &d.x);
                fy += &(w * &d.y);
            }
            if !fx.is_zero() || !fy.is_zero() {
                return false;
            }
        }
        true
    }
}

fn serialize_edge_map<S: Serializer>(
    map: &BTreeMap<Edge, Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut m = s.serialize_map(Some(map.len()))?;
    for (e, v) in map {
        m.serialize_entry(&format!("{}-{}", e.lo(), e.hi()), v)?;
    }
    m.end()
}

impl Serialize for StrainVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_edge_map(&self.strains, s)
    }
}

impl Serialize for Stress {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_edge_map(&self.weights, s)
    }
}

/// Strain of the pair (i, j): the first-order increase of |p_i - p_j|^2 / 2,
/// i.e. <p_i - p_j, v_i - v_j>.
pub fn pair_strain(ps: &PointSet, m: &Motion, i: usize, j: usize) -> Rational {
    ps.point(i)
        .sub(ps.point(j))
        .dot(&m.velocity(i).sub(m.velocity(j)))
}

/// The rigidity map: strains of all graph edges under the motion.
pub fn strains(ps: &PointSet, g: &EmbeddedGraph, m: &Motion) -> Result<StrainVector> {
    if m.len() != ps.len() {
        return Err(Error::precondition(
            "motion length differs from point count",
        ));
    }
    Ok(StrainVector::new(
        g.edges()
            .map(|e| (e, pair_strain(ps, m, e.lo(), e.hi())))
            .collect(),
    ))
}

/// Strains on all pairs of the complete graph.
pub fn total_strains(ps: &PointSet, m: &Motion) -> StrainVector {
    StrainVector::new(
        Edge::all_pairs(ps.len())
            .map(|e| (e, pair_strain(ps, m, e.lo(), e.hi())))
            .collect(),
    )
}

/// |E| x 2n matrix: the row of edge ij carries p_i - p_j in the columns of i
/// and p_j - p_i in the columns of j.
pub fn rigidity_matrix(ps: &PointSet, g: &EmbeddedGraph) -> Matrix {
    let mut m = Matrix::zeros(g.edge_count(), 2 * ps.len());
    for (r, e) in g.edges().enumerate() {
        let (i, j) = e.endpoints();
        let d = ps.point(i).sub(ps.point(j));
        *m.at_mut(r, 2 * i) = d.x.clone();
        *m.at_mut(r, 2 * i + 1) = d.y.clone();
        *m.at_mut(r, 2 * j) = -&d.x;
        *m.at_mut(r, 2 * j + 1) = -&d.y;
    }
    m
}

/// Basis of the normalized flex space: motions with zero strain on every
/// graph edge that also satisfy the pinning rows. Its dimension is the
/// degree of freedom of the framework.
pub fn flex_space(ps: &PointSet, g: &EmbeddedGraph, norm: &Normalization) -> Vec<Motion> {
    let stacked = rigidity_matrix(ps, g)
        .stack(&norm.rows(ps.len()))
        .expect("matching widths");
    stacked
        .nullspace()
        .into_iter()
        .map(|v| Motion::from_flat(&v))
        .collect()
}

/// Basis of self-stresses: the row dependences of the rigidity matrix,
/// re-keyed by edge.
pub fn stress_space(ps: &PointSet, g: &EmbeddedGraph) -> Vec<Stress> {
    let edges: Vec<Edge> = g.edges().collect();
    rigidity_matrix(ps, g)
        .transpose()
        .nullspace()
        .into_iter()
        .map(|v| {
            let s = Stress::new(edges.iter().copied().zip(v).collect());
            debug_assert!(s.in_equilibrium(ps));
            s
        })
        .collect()
}

/// Self-stress of the complete graph induced by an affine dependence:
/// w_ij = alpha_i * alpha_j. The dependence (sum alpha_i p_i = 0,
/// sum alpha_i = 0) is checked.
pub fn stress_from_affine_dependence(ps: &PointSet, alpha: &[Rational]) -> Result<Stress> {
    if alpha.len() != ps.len() {
        return Err(Error::precondition("alpha length differs from point count"));
    }
    let total: Rational = alpha.iter().cloned().sum();
    let mut px = Rational::zero();
    let mut py = Rational::zero();
    for (a, p) in alpha.iter().zip(ps.points()) {
        px += &(a * &p.x);
        py += &(a * &p.y);
    }
    if !total.is_zero() || !px.is_zero() || !py.is_zero() {
        return Err(Error::precondition(
            "coefficients are not an affine dependence",
        ));
    }
    let s = Stress::new(
        Edge::all_pairs(ps.len())
            .map(|e| (e, &alpha[e.lo()] * &alpha[e.hi()]))
            .collect(),
    );
    if !s.in_equilibrium(ps) {
        return Err(Error::invariant("dependence stress fails equilibrium"));
    }
    Ok(s)
}

/// The canonical self-stress on four points:
/// w_ij = 1 / (det(p_i, p_j, p_k) det(p_i, p_j, p_l)) with {k, l} the other
/// two indices. Positive exactly on the hull edges of the quadruple and
/// negative on its interior edges.
pub fn four_point_stress(ps: &PointSet, quad: [usize; 4]) -> Result<Stress> {
    let mut sorted = quad;
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) || sorted[3] >= ps.len() {
        return Err(Error::precondition(
            "four distinct in-range indices required",
        ));
    }
    let mut weights = BTreeMap::new();
    for a in 0..4 {
        for b in (a + 1)..4 {
            let (i, j) = (sorted[a], sorted[b]);
            let others: Vec<usize> = sorted
                .iter()
                .copied()
                .filter(|&x| x != i && x != j)
                .collect();
            let (k, l) = (others[0], others[1]);
            let d1 = ps.det3_idx(i, j, k);
            let d2 = ps.det3_idx(i, j, l);
            if d1.is_zero() || d2.is_zero() {
                return Err(Error::CollinearTriple(
                    i,
                    j,
                    if d1.is_zero() { k } else { l },
                ));
            }
            weights.insert(Edge::new(i, j), (d1 * d2).recip());
        }
    }
    let s = Stress::new(weights);
    if !s.in_equilibrium(ps) {
        return Err(Error::invariant("four-point stress fails equilibrium"));
    }
    // sign law: positive iff both remaining points lie on the same side
    for (e, w) in s.iter() {
        let others: Vec<usize> = sorted.iter().copied().filter(|&x| !e.contains(x)).collect();
        let same_side = ps.orientation_idx(e.lo(), e.hi(), others[0])
            == ps.orientation_idx(e.lo(), e.hi(), others[1]);
        if same_side != w.is_positive() {
            return Err(Error::invariant("four-point stress sign law violated"));
        }
    }
    Ok(s)
}

/// Laman count condition: 2n-3 edges and every induced subgraph on k
/// vertices has at most 2k-3 edges. Exhaustive over subsets; intended for
/// desk-scale n.
pub fn is_laman(g: &EmbeddedGraph) -> bool {
    let n = g.n();
    if g.edge_count() != 2 * n - 3 {
        return false;
    }
    let edges: Vec<Edge> = g.edges().collect();
    for mask in 1u64..(1 << n) {
        let k = mask.count_ones() as usize;
        if k < 2 {
            continue;
        }
        let induced = edges
            .iter()
            .filter(|e| mask & (1 << e.lo()) != 0 && mask & (1 << e.hi()) != 0)
            .count();
        if induced > 2 * k - 3 {
            return false;
        }
    }
    true
}

/// Subtracts the trivial motion (translation plus rotation) that makes the
/// result satisfy the normalization rows. The strains are unchanged.
pub fn normalize_motion(ps: &PointSet, norm: &Normalization, m: &Motion) -> Motion {
    let pa = ps.point(norm.anchor_a);
    let pb = ps.point(norm.anchor_b);
    let va = m.velocity(norm.anchor_a);
    let vb = m.velocity(norm.anchor_b);
    // rotation coefficient from the x-pinning of anchor_b
    let omega = (&vb.x - &va.x) / (&pa.y - &pb.y);
    let c = va.sub(&pa.perp().scale(&omega));
    let trivial = Motion(
        ps.points()
            .iter()
            .map(|p| c.add(&p.perp().scale(&omega)))
            .collect(),
    );
    let out = m.sub(&trivial);
    debug_assert!(norm.satisfied_by(&out));
    out
}
