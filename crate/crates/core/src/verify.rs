//! Invariant suite over a single point set: counting identities, rigidity
//! and stress orthogonality, polytope structure, cone rays with oracle
//! agreement, expansive flexes, and the secondary-polytope map on convex
//! inputs. Every check is exact; randomized sweeps use a fixed-seed
//! generator so reports are reproducible.

use itertools::Itertools;
use serde::Serialize;

use crate::enumeration::{enumerate_ppts, flip};
use crate::error::Result;
use crate::geometry::{Point, PointSet};
use crate::graph::{hull_edges, Edge, EmbeddedGraph};
use crate::polytope::{
    brute_force_rays, check_validity, cone_extreme_rays, delta_of_motion, delta_space_check,
    expansive_flex, make_f, quadruple_weighted_sum, realize_polytope, reconstruct_motion, FScheme,
};
use crate::rational::Rational;
use crate::rigidity::{
    four_point_stress, is_laman, normalize_motion, pair_strain, Motion, Normalization,
};
use crate::secondary::{affine_map_check_on, assert_ccw_convex_position};

#[derive(Clone, Debug, Serialize)]
pub struct VerifyEntry {
    pub id: &'static str,
    pub passed: bool,
    pub details: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub entries: Vec<VerifyEntry>,
}

impl VerifyReport {
    fn push(&mut self, id: &'static str, passed: bool, details: impl Into<String>) {
        self.entries.push(VerifyEntry {
            id,
            passed,
            details: details.into(),
        });
    }

    fn check(&mut self, id: &'static str, outcome: Result<String>) {
        match outcome {
            Ok(details) => self.push(id, true, details),
            Err(e) => self.push(id, false, e.to_string()),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }
}

/// Small deterministic generator; keeps the library free of RNG deps.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }

    fn motion(&mut self, n: usize) -> Motion {
        Motion(
            (0..n)
                .map(|_| Point::from_ints(self.int(-9, 9), self.int(-9, 9)))
                .collect(),
        )
    }
}

fn fail(msg: String) -> crate::error::Error {
    crate::error::Error::invariant(msg)
}

/// Runs every applicable invariant on one point set and reports each check
/// by a stable identifier. The whole suite is pure and deterministic.
pub fn verify_point_set(ps: &PointSet) -> VerifyReport {
    let mut report = VerifyReport::default();
    let n = ps.len();
    let norm = Normalization::default_for(ps);
    let mut rng = SplitMix(0x5eed_1d2d);

    // edge-count bound: pointed non-crossing graphs have at most 2n-3 edges,
    // with equality exactly for pseudo-triangulations
    report.check("edge-count-bound", {
        let outcome = (|| {
            let pairs: Vec<Edge> = Edge::all_pairs(n).collect();
            let mut checked = 0usize;
            let mut sample = |edges: Vec<Edge>| -> Result<()> {
                let g = EmbeddedGraph::new(n, edges)?;
                if g.is_pointed(ps) && g.is_noncrossing(ps) {
                    checked += 1;
                    if g.edge_count() > 2 * n - 3 {
                        return Err(fail(format!(
                            "pointed non-crossing graph with {} edges",
                            g.edge_count()
                        )));
                    }
                    let eq = g.edge_count() == 2 * n - 3;
                    // recognition asserts the face-based route agrees
                    if eq != g.is_pointed_pseudo_triangulation(ps) {
                        return Err(fail("edge-count equality mismatch".into()));
                    }
                }
                Ok(())
            };
            if n <= 5 {
                for mask in 0u32..(1 << pairs.len()) {
                    let edges: Vec<Edge> = pairs
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| mask & (1 << k) != 0)
                        .map(|(_, &e)| e)
                        .collect();
                    sample(edges)?;
                }
            } else {
                for _ in 0..400 {
                    let edges: Vec<Edge> = pairs
                        .iter()
                        .filter(|_| rng.next().is_multiple_of(2))
                        .copied()
                        .collect();
                    sample(edges)?;
                }
            }
            Ok(format!("{checked} pointed non-crossing graphs checked"))
        })();
        outcome
    });

    let fg = match enumerate_ppts(ps) {
        Ok(fg) => fg,
        Err(e) => {
            report.push("ppt-enumeration", false, e.to_string());
            return report;
        }
    };
    report.push(
        "ppt-enumeration",
        true,
        format!("{} pointed pseudo-triangulations", fg.len()),
    );

    report.check("face-angle-counts", {
        (|| {
            for t in &fg.nodes {
                let faces = t.graph().faces(ps)?;
                let convex: usize = faces.faces.iter().map(|f| f.convex_corners).sum();
                let reflex: usize = faces.faces.iter().map(|f| f.reflex_corners).sum();
                if convex != 3 * faces.bounded_count() {
                    return Err(fail(format!("convex angle count {convex}")));
                }
                if reflex != n {
                    return Err(fail(format!("reflex angle count {reflex}")));
                }
                if t.graph().edge_count() != n + faces.bounded_count() - 1 {
                    return Err(fail("Euler relation failed".into()));
                }
            }
            Ok(format!("{} pseudo-triangulations", fg.len()))
        })()
    });

    report.check("laman-property", {
        (|| {
            for t in &fg.nodes {
                if !is_laman(t.graph()) {
                    return Err(fail(format!("{:?} is not Laman", t.key())));
                }
                let rank = crate::rigidity::rigidity_matrix(ps, t.graph()).rank();
                if rank != 2 * n - 3 {
                    return Err(fail(format!("rigidity rank {rank}")));
                }
            }
            Ok(format!("{} graphs", fg.len()))
        })()
    });

    report.check("flip-involution", {
        (|| {
            let hull = hull_edges(ps);
            let mut flips = 0usize;
            for t in &fg.nodes {
                let interior = t.interior_edges(ps);
                if interior.len() != 2 * n - 3 - hull.len() {
                    return Err(fail("interior edge count".into()));
                }
                for e in interior {
                    let f = flip(ps, t, e)?;
                    let inserted = *f
                        .graph()
                        .edge_set()
                        .difference(t.graph().edge_set())
                        .next()
                        .expect("inserted edge");
                    if flip(ps, &f, inserted)? != *t {
                        return Err(fail(format!("flip of {e} is not an involution")));
                    }
                    // an interior edge at a hull vertex flips away from it
                    for v in [e.lo(), e.hi()] {
                        let on_hull = hull.iter().any(|h| h.contains(v));
                        if on_hull && inserted.contains(v) {
                            return Err(fail(format!("flip at hull vertex {v} stayed incident")));
                        }
                    }
                    flips += 1;
                }
            }
            Ok(format!("{flips} flips"))
        })()
    });

    report.check("flip-graph-connected", {
        if fg.is_connected() {
            Ok(format!("{} nodes", fg.len()))
        } else {
            Err(fail("flip graph disconnected".into()))
        }
    });

    report.check("stress-motion-orthogonality", {
        (|| {
            let mut cases = 0usize;
            for quad in (0..n).combinations(4).take(24) {
                let quad = [quad[0], quad[1], quad[2], quad[3]];
                let w = four_point_stress(ps, quad)?;
                for _ in 0..6 {
                    let m = rng.motion(n);
                    let total: Rational = w
                        .iter()
                        .map(|(e, wij)| wij * &pair_strain(ps, &m, e.lo(), e.hi()))
                        .sum();
                    if !total.is_zero() {
                        return Err(fail(format!("nonzero pairing on {quad:?}")));
                    }
                    cases += 1;
                }
            }
            Ok(format!("{cases} stress/motion pairings"))
        })()
    });

    let det_f = make_f(ps, &FScheme::det_product_centroid(ps)).expect("table");
    report.check("quadruple-identity-det-product", {
        (|| {
            let rep = check_validity(ps, &det_f)?;
            if !rep.valid {
                return Err(fail(format!("{} violations", rep.witnesses.len())));
            }
            for q in (0..n).combinations(4) {
                let quad = [q[0], q[1], q[2], q[3]];
                let r = quadruple_weighted_sum(ps, &|e| det_f.get(e).clone(), quad)?;
                if r != Rational::one() {
                    return Err(fail(format!("sum {r} on {quad:?}")));
                }
            }
            Ok("all quadruple sums equal one".into())
        })()
    });

    report.check("quadruple-identity-norm-heuristic", {
        (|| {
            let f = make_f(ps, &FScheme::NormHeuristic)?;
            for q in (0..n).combinations(4) {
                let quad = [q[0], q[1], q[2], q[3]];
                let r = quadruple_weighted_sum(ps, &|e| f.get(e).clone(), quad)?;
                if r != Rational::one() {
                    return Err(fail(format!("sum {r} on {quad:?}")));
                }
            }
            Ok("all quadruple sums equal one".into())
        })()
    });

    // vertex realization: unique tight solves, strictness, midpoint
    // feasibility of bounded edges and feasibility along rays are all
    // asserted inside realize_polytope
    let poly = match realize_polytope(ps, &det_f, &norm) {
        Ok(p) => {
            report.push(
                "vertex-correspondence",
                true,
                format!(
                    "{} vertices, {} bounded edges, {} rays",
                    p.vertices.len(),
                    p.bounded_edges.len(),
                    p.rays.len()
                ),
            );
            Some(p)
        }
        Err(e) => {
            report.push("vertex-correspondence", false, e.to_string());
            None
        }
    };

    if let Some(poly) = &poly {
        report.check("vertex-simplicity", {
            (|| {
                let hull = hull_edges(ps);
                for (vi, v) in poly.vertices.iter().enumerate() {
                    let tight = Edge::all_pairs(n)
                        .filter(|e| pair_strain(ps, &v.motion, e.lo(), e.hi()) == *det_f.get(*e))
                        .count();
                    if tight != 2 * n - 3 {
                        return Err(fail(format!("vertex {vi} has {tight} tight pairs")));
                    }
                    let neighbors = poly.flip_graph.adjacency[vi].len();
                    if neighbors + hull.len() != 2 * n - 3 {
                        return Err(fail(format!(
                            "vertex {vi}: {neighbors} flips + {} hull rays",
                            hull.len()
                        )));
                    }
                }
                Ok(format!("{} vertices", poly.vertices.len()))
            })()
        });

        report.check("maximal-bounded-face", {
            (|| {
                let hull = hull_edges(ps);
                for v in &poly.vertices {
                    for h in &hull {
                        if pair_strain(ps, &v.motion, h.lo(), h.hi()) != *det_f.get(*h) {
                            return Err(fail(format!("hull edge {h} slack at a vertex")));
                        }
                    }
                }
                for ray in &poly.rays {
                    let all_tight = hull
                        .iter()
                        .all(|h| pair_strain(ps, &ray.direction, h.lo(), h.hi()).is_zero());
                    if all_tight {
                        return Err(fail("a ray keeps every hull edge tight".into()));
                    }
                }
                Ok("hull edges tight at vertices, slack along rays".into())
            })()
        });

        report.check("recession-cone", {
            (|| {
                for ray in &poly.rays {
                    for e in Edge::all_pairs(n) {
                        if pair_strain(ps, &ray.direction, e.lo(), e.hi()).is_negative() {
                            return Err(fail(format!("ray direction contracts {e}")));
                        }
                    }
                }
                Ok(format!("{} rays expansive", poly.rays.len()))
            })()
        });

        report.check("delta-space-identity", {
            (|| {
                for v in &poly.vertices {
                    if !delta_space_check(ps, &det_f, v) {
                        return Err(fail("delta-space conditions failed".into()));
                    }
                }
                Ok(format!("{} vertices", poly.vertices.len()))
            })()
        });
    }

    // collapse closure is asserted inside cone_extreme_rays
    let rays = match cone_extreme_rays(ps, &norm) {
        Ok(r) => {
            report.push(
                "cone-rays-collapse-closure",
                true,
                format!("{} extreme rays", r.len()),
            );
            Some(r)
        }
        Err(e) => {
            report.push("cone-rays-collapse-closure", false, e.to_string());
            None
        }
    };

    if let Some(rays) = &rays {
        if n <= 6 {
            report.check("cone-rays-oracle-agreement", {
                (|| {
                    let oracle = brute_force_rays(ps, &norm)?;
                    if *rays != oracle {
                        return Err(fail(format!(
                            "{} rays vs oracle {}",
                            rays.len(),
                            oracle.len()
                        )));
                    }
                    Ok(format!("{} rays agree", rays.len()))
                })()
            });
        } else {
            report.push(
                "cone-rays-oracle-agreement",
                true,
                "skipped: oracle limited to n <= 6".to_string(),
            );
        }
    }

    report.check("expansive-flex", {
        (|| {
            // all hull edges present: no expansive flex
            let hull_graph = EmbeddedGraph::hull_graph(ps);
            if expansive_flex(ps, &hull_graph, &norm)?.is_some() {
                return Err(fail("hull cycle admitted an expansive flex".into()));
            }
            // hull minus one edge flexes, strictly on the missing edge
            let h = *hull_edges(ps).iter().next().expect("hull edge");
            let open = hull_graph.without_edge(h);
            let m = expansive_flex(ps, &open, &norm)?
                .ok_or_else(|| fail("open hull cycle did not flex".into()))?;
            if !pair_strain(ps, &m, h.lo(), h.hi()).is_positive() {
                return Err(fail("missing hull edge not strictly expansive".into()));
            }
            Ok("hull cycle rigid, open chain flexes".into())
        })()
    });

    report.check("strain-reconstruction", {
        (|| {
            for _ in 0..8 {
                let m = rng.motion(n);
                let delta = delta_of_motion(ps, &m);
                let rebuilt = reconstruct_motion(ps, &delta, &norm)?;
                if rebuilt != normalize_motion(ps, &norm, &m) {
                    return Err(fail("round trip differs".into()));
                }
            }
            Ok("8 random motions".into())
        })()
    });

    if assert_ccw_convex_position(ps).is_ok() {
        if let Some(poly) = &poly {
            report.check("secondary-affine-map", {
                if affine_map_check_on(ps, &det_f, poly) {
                    Ok("exact at every vertex and midpoint".into())
                } else {
                    Err(fail("affine map mismatch".into()))
                }
            });
        }
    }

    report
}
