//! The one-dimensional polytope of constrained expansions.
//!
//! Constraints `v_j - v_i >= g_ij` for `1 <= i < j <= n` with `v_1 = 0`.
//! For tables satisfying the strict triple and quadruple inequalities the
//! bounded face is an associahedron: vertices are the non-crossing
//! alternating trees on `{1..n}`, edges are single-edge exchanges, and the
//! expansion cone (`g = 0`) has the `n - 1` staircase rays.
//!
//! Vertices here are 1-based to match the linear order; serialized tables
//! use `"i-j"` keys in the same convention.

use std::collections::{BTreeMap, BTreeSet};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// Right-hand sides g_ij for all 1 <= i < j <= n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GTable {
    n: usize,
    g: BTreeMap<(usize, usize), Rational>,
}

impl GTable {
    pub fn explicit(n: usize, g: BTreeMap<(usize, usize), Rational>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewPoints { need: 2, got: n });
        }
        for i in 1..=n {
            for j in (i + 1)..=n {
                if !g.contains_key(&(i, j)) {
                    return Err(Error::precondition(format!("missing g entry {i}-{j}")));
                }
            }
        }
        if g.len() != n * (n - 1) / 2 {
            return Err(Error::precondition("table has extra entries"));
        }
        Ok(GTable { n, g })
    }

    /// g_ij = (i - j)^2, the simplest strictly convex choice.
    pub fn square(n: usize) -> Result<Self> {
        let t: Vec<Rational> = (1..=n as i64).map(Rational::from_int).collect();
        GTable::from_t_values(&t)
    }

    /// g_ij = (t_j - t_i)^2 for strictly increasing parameters t.
    pub fn from_t_values(t: &[Rational]) -> Result<Self> {
        let n = t.len();
        if n < 2 {
            return Err(Error::TooFewPoints { need: 2, got: n });
        }
        if t.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::precondition("t values must be strictly increasing"));
        }
        let mut g = BTreeMap::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                let d = &t[j - 1] - &t[i - 1];
                g.insert((i, j), &d * &d);
            }
        }
        Ok(GTable { n, g })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Requires 1 <= i < j <= n.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.g[&(i, j)]
    }
}

impl Serialize for GTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GTable", 2)?;
        st.serialize_field("n", &self.n)?;
        let g: BTreeMap<String, &Rational> = self
            .g
            .iter()
            .map(|(&(i, j), v)| (format!("{i}-{j}"), v))
            .collect();
        st.serialize_field("g", &g)?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GSchemeRepr {
    Name(String),
    TValues {
        t: Vec<Rational>,
        #[serde(default)]
        h: Option<String>,
    },
}

#[derive(Deserialize)]
struct GTableRepr {
    n: usize,
    #[serde(default)]
    scheme: Option<GSchemeRepr>,
    #[serde(default)]
    g: Option<BTreeMap<String, Rational>>,
}

impl<'de> Deserialize<'de> for GTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GTableRepr::deserialize(d)?;
        let fail = |e: Error| D::Error::custom(e.to_string());
        match (repr.scheme, repr.g) {
            (Some(GSchemeRepr::Name(name)), None) if name == "square" => {
                GTable::square(repr.n).map_err(fail)
            }
            (Some(GSchemeRepr::Name(name)), None) => {
                Err(D::Error::custom(format!("unknown scheme {name:?}")))
            }
            (Some(GSchemeRepr::TValues { t, h }), None) => {
                if let Some(h) = h {
                    if h != "square" {
                        return Err(D::Error::custom(format!("unknown h {h:?}")));
                    }
                }
                if t.len() != repr.n {
                    return Err(D::Error::custom("t length differs from n"));
                }
                GTable::from_t_values(&t).map_err(fail)
            }
            (None, Some(g)) => {
                let mut map = BTreeMap::new();
                for (k, v) in g {
                    let (i, j) = k
                        .split_once('-')
                        .ok_or_else(|| D::Error::custom(format!("bad key {k:?}")))?;
                    let i: usize = i.parse().map_err(|_| D::Error::custom("bad index"))?;
                    let j: usize = j.parse().map_err(|_| D::Error::custom("bad index"))?;
                    if !(1 <= i && i < j && j <= repr.n) {
                        return Err(D::Error::custom(format!("key {k:?} out of range")));
                    }
                    map.insert((i, j), v);
                }
                GTable::explicit(repr.n, map).map_err(fail)
            }
            _ => Err(D::Error::custom("expected either \"scheme\" or \"g\"")),
        }
    }
}

/// A violated table inequality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GViolation {
    /// g_il + g_jk <= g_ik + g_jl for i < j <= k < l with j < k.
    Quadruple {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },
    /// g_il <= g_ik + g_kl for i < k < l (the j = k case).
    Triple { i: usize, k: usize, l: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct GValidityReport {
    pub valid: bool,
    pub violations: Vec<GViolation>,
}

/// Checks both inequality families and reports every violation.
pub fn check_g_validity(g: &GTable) -> GValidityReport {
    let n = g.n();
    let mut violations = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in j..=n {
                for l in (k + 1)..=n {
                    if j == k {
                        // g_il > g_ik + g_kl
                        if *g.get(i, l) <= g.get(i, k) + g.get(k, l) {
                            violations.push(GViolation::Triple { i, k, l });
                        }
                    } else {
                        // g_il + g_jk > g_ik + g_jl
                        if g.get(i, l) + g.get(j, k) <= g.get(i, k) + g.get(j, l) {
                            violations.push(GViolation::Quadruple { i, j, k, l });
                        }
                    }
                }
            }
        }
    }
    GValidityReport {
        valid: violations.is_empty(),
        violations,
    }
}

/// Non-crossing alternating spanning tree on `{1..n}`: no pair of edges
/// (i,j),(j,k) with i < j < k, no pair (i,k),(j,l) with i < j < k < l, and
/// necessarily containing the edge (1,n).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Tree1D {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

fn transitive(a: (usize, usize), b: (usize, usize)) -> bool {
    a.1 == b.0 || b.1 == a.0
}

fn crossing(a: (usize, usize), b: (usize, usize)) -> bool {
    let (a, b) = if a.0 <= b.0 { (a, b) } else { (b, a) };
    a.0 < b.0 && b.0 < a.1 && a.1 < b.1
}

impl Tree1D {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let edges: BTreeSet<(usize, usize)> = edges.into_iter().collect();
        if n < 2 {
            return Err(Error::TooFewPoints { need: 2, got: n });
        }
        for &(i, j) in &edges {
            if !(1 <= i && i < j && j <= n) {
                return Err(Error::InvalidEdge(i, j));
            }
        }
        if edges.len() != n - 1 {
            return Err(Error::precondition(format!(
                "a spanning tree on {n} vertices has {} edges, got {}",
                n - 1,
                edges.len()
            )));
        }
        // connectivity: n - 1 edges and connected means spanning tree
        let mut seen = vec![false; n + 1];
        let mut stack = vec![1usize];
        seen[1] = true;
        while let Some(v) = stack.pop() {
            for &(i, j) in &edges {
                let u = if i == v {
                    j
                } else if j == v {
                    i
                } else {
                    continue;
                };
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if !seen[1..=n].iter().all(|&s| s) {
            return Err(Error::precondition("edge set is not a spanning tree"));
        }
        let list: Vec<(usize, usize)> = edges.iter().copied().collect();
        for (a, &e1) in list.iter().enumerate() {
            for &e2 in &list[a + 1..] {
                if transitive(e1, e2) {
                    return Err(Error::precondition(format!(
                        "transitive edge pair {e1:?}, {e2:?}"
                    )));
                }
                if crossing(e1, e2) {
                    return Err(Error::precondition(format!(
                        "crossing edge pair {e1:?}, {e2:?}"
                    )));
                }
            }
        }
        if !edges.contains(&(1, n)) {
            return Err(Error::invariant(
                "non-crossing alternating tree without the long edge",
            ));
        }
        Ok(Tree1D { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains(&self, e: (usize, usize)) -> bool {
        self.edges.contains(&e)
    }
}

/// All non-crossing alternating trees on `{1..n}` in lexicographic order of
/// their edge lists. Their number is the Catalan number C(n-1).
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree1D>> {
    if n < 2 {
        return Err(Error::TooFewPoints { need: 2, got: n });
    }
    let candidates: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<(usize, usize)> = Vec::new();

    // acyclicity via union-find over 1..=n
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            parent[x] = find(parent, parent[x]);
        }
        parent[x]
    }

    fn recurse(
        pos: usize,
        candidates: &[(usize, usize)],
        chosen: &mut Vec<(usize, usize)>,
        parent: &mut Vec<usize>,
        n: usize,
        out: &mut Vec<Tree1D>,
    ) {
        if chosen.len() == n - 1 {
            out.push(Tree1D::new(n, chosen.iter().copied()).expect("pruned to validity"));
            return;
        }
        if pos == candidates.len() || candidates.len() - pos < (n - 1) - chosen.len() {
            return;
        }
        let e = candidates[pos];
        let ok = chosen.iter().all(|&f| !transitive(e, f) && !crossing(e, f));
        if ok {
            let (ri, rj) = (find(parent, e.0), find(parent, e.1));
            if ri != rj {
                let saved = parent.clone();
                parent[ri] = rj;
                chosen.push(e);
                recurse(pos + 1, candidates, chosen, parent, n, out);
                chosen.pop();
                *parent = saved;
            }
        }
        recurse(pos + 1, candidates, chosen, parent, n, out);
    }

    let mut parent: Vec<usize> = (0..=n).collect();
    recurse(0, &candidates, &mut chosen, &mut parent, n, &mut out);
    out.sort();
    Ok(out)
}

/// Shape of a full binary tree; leaves correspond to the letters 1..n in
/// in-order, internal nodes to tree edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn leaves(&self) -> usize {
        match self {
            BinaryTree::Leaf => 1,
            BinaryTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }
}

/// Splits at the long edge: the part containing 1 spans an interval [1, m],
/// the rest spans [m+1, n]; both halves recurse.
pub fn tree_to_binary(t: &Tree1D) -> Result<BinaryTree> {
    fn build(lo: usize, hi: usize, edges: &BTreeSet<(usize, usize)>) -> Result<BinaryTree> {
        if lo == hi {
            return Ok(BinaryTree::Leaf);
        }
        if !edges.contains(&(lo, hi)) {
            return Err(Error::invariant(format!(
                "interval [{lo}, {hi}] lacks its long edge"
            )));
        }
        // component of lo after removing (lo, hi) must be a prefix interval
        let sub: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&e| e != (lo, hi) && lo <= e.0 && e.1 <= hi)
            .collect();
        let mut reach: BTreeSet<usize> = BTreeSet::from([lo]);
        loop {
            let before = reach.len();
            for &(i, j) in &sub {
                if reach.contains(&i) {
                    reach.insert(j);
                }
                if reach.contains(&j) {
                    reach.insert(i);
                }
            }
            if reach.len() == before {
                break;
            }
        }
        let m = *reach.iter().max().unwrap();
        if reach.len() != m - lo + 1 {
            return Err(Error::invariant("split component is not an interval"));
        }
        let left = build(lo, m, edges)?;
        let right = build(m + 1, hi, edges)?;
        Ok(BinaryTree::Node(Box::new(left), Box::new(right)))
    }
    build(1, t.n(), &t.edges)
}

/// Inverse of [`tree_to_binary`]: in-order leaf positions become vertices,
/// each internal node becomes the edge spanning its leaf interval.
pub fn binary_to_tree(bt: &BinaryTree) -> Result<Tree1D> {
    fn assign(bt: &BinaryTree, lo: usize, edges: &mut BTreeSet<(usize, usize)>) -> usize {
        match bt {
            BinaryTree::Leaf => lo,
            BinaryTree::Node(l, r) => {
                let left_hi = assign(l, lo, edges);
                let hi = assign(r, left_hi + 1, edges);
                edges.insert((lo, hi));
                hi
            }
        }
    }
    let mut edges = BTreeSet::new();
    let n = assign(bt, 1, &mut edges);
    Tree1D::new(n, edges)
}

/// Bracketing over the letters a, b, c, ...: each tree edge (i, j) is a
/// parenthesis pair enclosing letters i through j.
pub fn tree_to_bracketing(t: &Tree1D) -> Result<String> {
    if t.n() > 26 {
        return Err(Error::TooLarge {
            n: t.n(),
            limit: 26,
        });
    }
    fn render(bt: &BinaryTree, next: &mut u8, out: &mut String) {
        match bt {
            BinaryTree::Leaf => {
                out.push((b'a' + *next) as char);
                *next += 1;
            }
            BinaryTree::Node(l, r) => {
                out.push('(');
                render(l, next, out);
                render(r, next, out);
                out.push(')');
            }
        }
    }
    let bt = tree_to_binary(t)?;
    let mut out = String::new();
    let mut next = 0u8;
    render(&bt, &mut next, &mut out);
    Ok(out)
}

pub fn bracketing_to_tree(s: &str) -> Result<Tree1D> {
    fn parse(chars: &[char], pos: &mut usize, expected: &mut u8) -> Result<BinaryTree> {
        match chars.get(*pos) {
            Some('(') => {
                *pos += 1;
                let l = parse(chars, pos, expected)?;
                let r = parse(chars, pos, expected)?;
                if chars.get(*pos) != Some(&')') {
                    return Err(Error::Parse("expected ')'".into()));
                }
                *pos += 1;
                Ok(BinaryTree::Node(Box::new(l), Box::new(r)))
            }
            Some(&c) if c.is_ascii_lowercase() => {
                if c as u8 != b'a' + *expected {
                    return Err(Error::Parse(format!("unexpected letter {c:?}")));
                }
                *expected += 1;
                *pos += 1;
                Ok(BinaryTree::Leaf)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
    let chars: Vec<char> = s.trim().chars().collect();
    let mut pos = 0;
    let mut expected = 0u8;
    let bt = parse(&chars, &mut pos, &mut expected)?;
    if pos != chars.len() {
        return Err(Error::Parse("trailing input".into()));
    }
    if matches!(bt, BinaryTree::Leaf) {
        return Err(Error::Parse("a single letter is not a bracketing".into()));
    }
    binary_to_tree(&bt)
}

/// A vertex of the 1D polyhedron: values propagated along the tree from
/// v_1 = 0, strictly feasible on every non-edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex1D {
    pub tree: Tree1D,
    pub v: Vec<Rational>,
}

pub fn vertex_for_tree(g: &GTable, t: &Tree1D) -> Result<Vertex1D> {
    let n = g.n();
    if t.n() != n {
        return Err(Error::precondition("tree size differs from table size"));
    }
    let mut v: Vec<Option<Rational>> = vec![None; n + 1];
    v[1] = Some(Rational::zero());
    loop {
        let mut progressed = false;
        for (i, j) in t.edges() {
            match (v[i].clone(), v[j].clone()) {
                (Some(vi), None) => {
                    v[j] = Some(vi + g.get(i, j));
                    progressed = true;
                }
                (None, Some(vj)) => {
                    v[i] = Some(vj - g.get(i, j));
                    progressed = true;
                }
                _ => {}
            }
        }
        if !progressed {
            break;
        }
    }
    let v: Vec<Rational> = v
        .into_iter()
        .skip(1)
        .map(|x| x.expect("spanning"))
        .collect();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if t.contains((i, j)) {
                continue;
            }
            if &(&v[j - 1] - &v[i - 1]) <= g.get(i, j) {
                return Err(Error::invariant(format!(
                    "non-edge {i}-{j} is not strictly feasible; table invalid"
                )));
            }
        }
    }
    Ok(Vertex1D { tree: t.clone(), v })
}

/// Exchanges one edge (other than the long edge) for the unique alternative
/// that yields another non-crossing alternating tree.
pub fn flip_tree(t: &Tree1D, e: (usize, usize)) -> Result<Tree1D> {
    if !t.contains(e) {
        return Err(Error::precondition(format!("edge {e:?} not in tree")));
    }
    if e == (1, t.n()) {
        return Err(Error::precondition("the long edge cannot be exchanged"));
    }
    let rest: Vec<(usize, usize)> = t.edges().filter(|&f| f != e).collect();
    let mut found = Vec::new();
    for i in 1..=t.n() {
        for j in (i + 1)..=t.n() {
            let cand = (i, j);
            if cand == e || rest.contains(&cand) {
                continue;
            }
            let mut edges = rest.clone();
            edges.push(cand);
            if Tree1D::new(t.n(), edges).is_ok() {
                found.push(cand);
            }
        }
    }
    if found.len() != 1 {
        return Err(Error::invariant(format!(
            "flip of {e:?} found {} replacements",
            found.len()
        )));
    }
    let mut edges = rest;
    edges.push(found[0]);
    Tree1D::new(t.n(), edges)
}

/// All trees with their exchange adjacency; (n-2)-regular and connected.
pub fn tree_flip_graph(n: usize) -> Result<(Vec<Tree1D>, Vec<Vec<usize>>)> {
    let trees = enumerate_trees(n)?;
    let index: BTreeMap<&Tree1D, usize> = trees.iter().zip(0..).collect();
    let mut adjacency = vec![Vec::new(); trees.len()];
    for (ti, t) in trees.iter().enumerate() {
        for e in t.edges() {
            if e == (1, n) {
                continue;
            }
            let flipped = flip_tree(t, e)?;
            adjacency[ti].push(index[&flipped]);
        }
    }
    Ok((trees, adjacency))
}

/// The n-1 staircase generators of the 1D expansion cone: i leading zeros
/// followed by ones.
pub fn cone_rays_1d(n: usize) -> Result<Vec<Vec<Rational>>> {
    if n < 2 {
        return Err(Error::TooFewPoints { need: 2, got: n });
    }
    Ok((1..n)
        .map(|i| {
            (0..n)
                .map(|k| {
                    if k < i {
                        Rational::zero()
                    } else {
                        Rational::one()
                    }
                })
                .collect()
        })
        .collect())
}

/// Independent oracle: sweep all (n-2)-subsets of the difference constraints
/// that form two-component forests; each pins a line whose generator is
/// checked against every remaining constraint.
pub fn brute_force_rays_1d(n: usize) -> Result<Vec<Vec<Rational>>> {
    if n < 2 {
        return Err(Error::TooFewPoints { need: 2, got: n });
    }
    use itertools::Itertools;
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
        .collect();
    let mut rays: BTreeSet<Vec<Rational>> = BTreeSet::new();
    for subset in pairs.iter().copied().combinations(n - 2) {
        // union-find: acyclic subsets of size n-2 leave exactly 2 components
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                p[x] = find(p, p[x]);
            }
            p[x]
        }
        let mut acyclic = true;
        for &(i, j) in &subset {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri == rj {
                acyclic = false;
                break;
            }
            parent[ri] = rj;
        }
        if !acyclic {
            continue;
        }
        let root1 = find(&mut parent, 1);
        // generator: 0 on the component of vertex 1, c on the other
        for c in [Rational::one(), -Rational::one()] {
            let v: Vec<Rational> = (1..=n)
                .map(|x| {
                    if find(&mut parent, x) == root1 {
                        Rational::zero()
                    } else {
                        c.clone()
                    }
                })
                .collect();
            let feasible = pairs
                .iter()
                .all(|&(i, j)| !(&v[j - 1] - &v[i - 1]).is_negative());
            if feasible && v.iter().any(|x| !x.is_zero()) {
                rays.insert(v);
                break;
            }
        }
    }
    Ok(rays.into_iter().collect())
}

/// One of the n-2 parallel facet pairs of the bounded face, keyed by the
/// middle vertex: the constraints (1, i) and (i, n).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParallelFacetPair {
    pub i: usize,
    pub lower: (usize, usize),
    pub upper: (usize, usize),
}

/// Finds the parallel facet pairs of the bounded face (long edge tight) by
/// exact normal-vector proportionality in the reduced coordinates
/// v_2, ..., v_{n-1}, and checks there are no others. Each constraint of a
/// reported pair is verified to be tight at some enumerated vertex.
pub fn facet_parallel_report(g: &GTable) -> Result<Vec<ParallelFacetPair>> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooFewPoints { need: 3, got: n });
    }
    if !check_g_validity(g).valid {
        return Err(Error::precondition("table violates the validity inequalities"));
    }
    let constraints: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
        .filter(|&e| e != (1, n))
        .collect();
    // restricted row of v_j - v_i over the free coordinates v_2..v_{n-1}
    let restricted = |(i, j): (usize, usize)| -> Vec<Rational> {
        let mut row = vec![Rational::zero(); n - 2];
        if (2..n).contains(&j) {
            row[j - 2] = Rational::one();
        }
        if (2..n).contains(&i) {
            row[i - 2] = -Rational::one();
        }
        row
    };
    let parallel = |a: &[Rational], b: &[Rational]| -> bool {
        // nonzero rows u, w are parallel iff the 2 x (n-2) stack has rank 1
        let m = Matrix::from_rows(vec![a.to_vec(), b.to_vec()]).expect("shapes");
        m.rank() == 1
    };

    let trees = enumerate_trees(n)?;
    let is_facet = |e: (usize, usize)| trees.iter().any(|t| t.contains(e));

    let mut pairs = Vec::new();
    let mut count = 0usize;
    for (a, &e1) in constraints.iter().enumerate() {
        for &e2 in &constraints[a + 1..] {
            if parallel(&restricted(e1), &restricted(e2)) {
                count += 1;
                let (lower, upper) = if e1.0 == 1 { (e1, e2) } else { (e2, e1) };
                if lower.0 != 1 || upper.1 != n || lower.1 != upper.0 {
                    return Err(Error::invariant(format!(
                        "unexpected parallel facet pair {e1:?}, {e2:?}"
                    )));
                }
                if !is_facet(lower) || !is_facet(upper) {
                    return Err(Error::invariant(format!(
                        "parallel pair {e1:?}, {e2:?} contains a non-facet"
                    )));
                }
                pairs.push(ParallelFacetPair {
                    i: lower.1,
                    lower,
                    upper,
                });
            }
        }
    }
    if count != n - 2 {
        return Err(Error::invariant(format!(
            "found {count} parallel facet pairs, expected {}",
            n - 2
        )));
    }
    pairs.sort_by_key(|p| p.i);
    Ok(pairs)
}
