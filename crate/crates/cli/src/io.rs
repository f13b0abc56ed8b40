//! File formats and JSON assembly shared by the subcommands.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};

use pptope_core::assoc1d::GTable;
use pptope_core::graph::{Edge, EmbeddedGraph};
use pptope_core::polytope::PerturbationTable;
use pptope_core::rational::Rational;
use pptope_core::rigidity::Motion;
use pptope_core::{Error as CoreError, Point, PointSet};

/// A failure with the process exit code it maps to: 2 for malformed input,
/// 1 for violated invariants (including failed verification).
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn invariant(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::Invariant(_) | CoreError::NotInImage(_, _) => 1,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::input(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

pub fn load_points(path: &Path) -> CliResult<PointSet> {
    #[derive(Deserialize)]
    struct PointsFile {
        points: Vec<(Rational, Rational)>,
    }
    let file: PointsFile = read_json(path)?;
    let points = file
        .points
        .into_iter()
        .map(|(x, y)| Point::new(x, y))
        .collect();
    Ok(PointSet::new(points)?)
}

pub fn load_graph(path: &Path, n: usize) -> CliResult<EmbeddedGraph> {
    #[derive(Deserialize)]
    struct GraphFile {
        edges: Vec<(usize, usize)>,
    }
    let file: GraphFile = read_json(path)?;
    Ok(EmbeddedGraph::from_pairs(n, &file.edges)?)
}

pub fn load_gtable(path: &Path) -> CliResult<GTable> {
    read_json(path)
}

pub fn load_perturbation_table(path: &Path, n: usize) -> CliResult<PerturbationTable> {
    #[derive(Deserialize)]
    struct TableFile {
        f: BTreeMap<String, Rational>,
    }
    let file: TableFile = read_json(path)?;
    let mut map = BTreeMap::new();
    for (key, value) in file.f {
        let (i, j) = key
            .split_once('-')
            .ok_or_else(|| CliError::input(format!("bad pair key {key:?}")))?;
        let i: usize = i
            .parse()
            .map_err(|_| CliError::input(format!("bad index in {key:?}")))?;
        let j: usize = j
            .parse()
            .map_err(|_| CliError::input(format!("bad index in {key:?}")))?;
        if i == j || i >= n || j >= n {
            return Err(CliError::input(format!("pair {key:?} out of range")));
        }
        map.insert(Edge::new(i, j), value);
    }
    Ok(PerturbationTable::new(n, map)?)
}

pub fn load_overlay(path: &Path) -> CliResult<Vec<Vec<usize>>> {
    #[derive(Deserialize)]
    struct OverlayFile {
        components: Vec<Vec<usize>>,
    }
    let file: OverlayFile = read_json(path)?;
    Ok(file.components)
}

/// "x,y" with exact rational components.
pub fn parse_point_flag(text: &str) -> CliResult<Point> {
    let (x, y) = text
        .split_once(',')
        .ok_or_else(|| CliError::input(format!("expected \"x,y\", got {text:?}")))?;
    let x: Rational = x
        .parse()
        .map_err(|e: CoreError| CliError::input(e.to_string()))?;
    let y: Rational = y
        .parse()
        .map_err(|e: CoreError| CliError::input(e.to_string()))?;
    Ok(Point::new(x, y))
}

/// "i,j" anchor indices.
pub fn parse_norm_flag(text: &str) -> CliResult<(usize, usize)> {
    let (i, j) = text
        .split_once(',')
        .ok_or_else(|| CliError::input(format!("expected \"i,j\", got {text:?}")))?;
    let i = i
        .trim()
        .parse()
        .map_err(|_| CliError::input(format!("bad index in {text:?}")))?;
    let j = j
        .trim()
        .parse()
        .map_err(|_| CliError::input(format!("bad index in {text:?}")))?;
    Ok((i, j))
}

pub fn edge_json(e: Edge) -> Value {
    json!([e.lo(), e.hi()])
}

pub fn edges_json<I: IntoIterator<Item = Edge>>(edges: I) -> Value {
    Value::Array(edges.into_iter().map(edge_json).collect())
}

pub fn motion_json(m: &Motion) -> Value {
    serde_json::to_value(m).expect("motion serializes")
}

/// Canonical key string of a sorted edge list: "0-1,0-2,...".
pub fn key_string(edges: &[Edge]) -> String {
    edges
        .iter()
        .map(|e| format!("{}-{}", e.lo(), e.hi()))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn strain_map_json<I: IntoIterator<Item = (Edge, Rational)>>(entries: I) -> Value {
    let map: serde_json::Map<String, Value> = entries
        .into_iter()
        .map(|(e, r)| {
            (
                format!("{}-{}", e.lo(), e.hi()),
                serde_json::to_value(&r).expect("rational serializes"),
            )
        })
        .collect();
    Value::Object(map)
}
