//! Link graphs `L_S[B]`: which elements of `B` can join a fixed sum-free `S`
//! together, and which cannot join it at all.
//!
//! Vertices are the members of `B`. Distinct `x, y` are adjacent when some
//! `s ∈ S` completes `{x, y, s}` to a Schur triple (`x + y = s` or
//! `|x − y| = s`). `x` carries a loop when `2x ∈ S`, `x ∈ S + S`, or
//! `x + s ∈ S` for some `s ∈ S`.

use std::collections::BTreeMap;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groundset::{GroundInterval, IntSet};
use crate::mis::LoopedGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeColor {
    #[serde(rename = "BLUE")]
    Blue,
    #[serde(rename = "RED")]
    Red,
}

#[derive(Clone, Debug)]
pub struct LinkGraph {
    source: IntSet,
    base: IntSet,
    n: usize,
    graph: LoopedGraph,
    colors: Option<BTreeMap<(usize, usize), EdgeColor>>,
}

impl LinkGraph {
    pub fn source(&self) -> &IntSet {
        &self.source
    }

    pub fn base(&self) -> &IntSet {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> &LoopedGraph {
        &self.graph
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges()
    }

    pub fn loops(&self) -> Vec<usize> {
        self.graph.loops()
    }

    pub fn is_colored(&self) -> bool {
        self.colors.is_some()
    }

    /// Color of the edge `{x, y}` when the graph has been colored.
    pub fn color(&self, x: usize, y: usize) -> Option<EdgeColor> {
        let key = if x < y { (x, y) } else { (y, x) };
        self.colors.as_ref()?.get(&key).copied()
    }
}

impl Serialize for LinkGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Colors<'a>(&'a BTreeMap<(usize, usize), EdgeColor>);
        impl Serialize for Colors<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for ((x, y), c) in self.0 {
                    m.serialize_entry(&format!("{x}-{y}"), c)?;
                }
                m.end()
            }
        }
        let edges: Vec<[usize; 2]> = self.edges().into_iter().map(|(x, y)| [x, y]).collect();
        let mut st = s.serialize_struct("LinkGraph", 6)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("S", &self.source)?;
        st.serialize_field("B", &self.base)?;
        st.serialize_field("edges", &edges)?;
        st.serialize_field("loops", &self.loops())?;
        st.serialize_field("colors", &self.colors.as_ref().map(Colors))?;
        st.end()
    }
}

fn fit(set: &IntSet, g: GroundInterval) -> Result<IntSet> {
    if set.universe() == g.n() {
        Ok(set.clone())
    } else {
        set.with_universe(g.n())
    }
}

/// Builds `L_S[B]` over `[1..n]`. `S` and `B` must be disjoint.
pub fn build_link_graph(s: &IntSet, b: &IntSet, g: GroundInterval) -> Result<LinkGraph> {
    let s = fit(s, g)?;
    let b = fit(b, g)?;
    if let Some(common) = s.intersection(&b).min_element() {
        return Err(Error::Overlap(common));
    }
    let mut graph = LoopedGraph::new(b.to_vec());
    let sums = s.sumset();
    let diffs = s.positive_differences();
    for x in b.iter() {
        if s.contains(2 * x) || sums.contains(x) || diffs.contains(x) {
            graph.add_loop(x)?;
        }
        for z in s.iter() {
            // partners y > x: y = x + z, or y = z − x
            for y in [x + z, z.saturating_sub(x)] {
                if y > x && b.contains(y) {
                    graph.add_edge(x, y)?;
                }
            }
        }
    }
    Ok(LinkGraph {
        source: s,
        base: b,
        n: g.n(),
        graph,
        colors: None,
    })
}

/// Colors every non-loop edge: BLUE when `|x − y| ∈ S`, otherwise RED.
///
/// Only defined when `B` holds odd numbers and `S` even ones.
pub fn color_edges(l: &LinkGraph) -> Result<LinkGraph> {
    if l.base.iter().any(|x| x % 2 == 0) {
        return Err(Error::InvalidArgument(
            "edge coloring needs an all-odd base set".into(),
        ));
    }
    if l.source.iter().any(|x| x % 2 == 1) {
        return Err(Error::InvalidArgument(
            "edge coloring needs an all-even source set".into(),
        ));
    }
    let colors = l
        .edges()
        .into_iter()
        .map(|(x, y)| {
            let c = if l.source.contains(y - x) {
                EdgeColor::Blue
            } else {
                EdgeColor::Red
            };
            ((x, y), c)
        })
        .collect();
    Ok(LinkGraph {
        colors: Some(colors),
        ..l.clone()
    })
}

/// The four admissible triangle patterns on `x < y < z`, named by their RED edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "u8")]
pub enum TriangleType {
    /// Every edge RED.
    AllRed = 1,
    /// Only `xy` RED.
    LowRed = 2,
    /// Only `yz` RED.
    HighRed = 3,
    /// Only `xz` RED.
    OuterRed = 4,
}

impl From<TriangleType> for u8 {
    fn from(t: TriangleType) -> u8 {
        t as u8
    }
}

impl TriangleType {
    pub const ALL: [TriangleType; 4] = [
        TriangleType::AllRed,
        TriangleType::LowRed,
        TriangleType::HighRed,
        TriangleType::OuterRed,
    ];

    /// Coefficients of `(x, y, z)` in the equations for edges `xy`, `yz`, `xz`.
    /// A RED edge contributes its sum, a BLUE edge its (positive) difference.
    pub fn matrix(self) -> [[i64; 3]; 3] {
        let (xy_red, yz_red, xz_red) = match self {
            TriangleType::AllRed => (true, true, true),
            TriangleType::LowRed => (true, false, false),
            TriangleType::HighRed => (false, true, false),
            TriangleType::OuterRed => (false, false, true),
        };
        let row = |red: bool, lo: usize, hi: usize| {
            let mut r = [0i64; 3];
            r[lo] = if red { 1 } else { -1 };
            r[hi] = 1;
            r
        };
        [row(xy_red, 0, 1), row(yz_red, 1, 2), row(xz_red, 0, 2)]
    }

    pub fn blue_edges(self) -> u8 {
        match self {
            TriangleType::AllRed => 0,
            _ => 2,
        }
    }

    fn from_red_pattern(xy_red: bool, yz_red: bool, xz_red: bool) -> Option<Self> {
        match (xy_red, yz_red, xz_red) {
            (true, true, true) => Some(TriangleType::AllRed),
            (true, false, false) => Some(TriangleType::LowRed),
            (false, true, false) => Some(TriangleType::HighRed),
            (false, false, true) => Some(TriangleType::OuterRed),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TriangleRecord {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    /// Number of BLUE edges; absent for uncolored graphs.
    pub blue_count: Option<u8>,
    pub type_tag: Option<TriangleType>,
}

/// Every triangle of `L`, ascending, each once. Colored graphs also get the
/// BLUE count and the pattern type (absent for 1 or 3 BLUE edges).
pub fn list_triangles(l: &LinkGraph) -> Vec<TriangleRecord> {
    l.graph
        .triangles()
        .into_iter()
        .map(|(x, y, z)| {
            let (blue_count, type_tag) = match &l.colors {
                None => (None, None),
                Some(_) => {
                    let red = |a, b| l.color(a, b) == Some(EdgeColor::Red);
                    let (xy, yz, xz) = (red(x, y), red(y, z), red(x, z));
                    let blue = 3 - (xy as u8 + yz as u8 + xz as u8);
                    (Some(blue), TriangleType::from_red_pattern(xy, yz, xz))
                }
            };
            TriangleRecord {
                x,
                y,
                z,
                blue_count,
                type_tag,
            }
        })
        .collect()
}

fn det3(m: &[[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Integer solution of `M·u = s`, if `M` is invertible and the solution is integral.
pub fn solve_integral(m: &[[i64; 3]; 3], s: [i64; 3]) -> Option<[i64; 3]> {
    let det = det3(m);
    if det == 0 {
        return None;
    }
    let mut u = [0i64; 3];
    for (col, slot) in u.iter_mut().enumerate() {
        let mut mc = *m;
        for (row, &val) in s.iter().enumerate() {
            mc[row][col] = val;
        }
        let num = det3(&mc);
        if num % det != 0 {
            return None;
        }
        *slot = num / det;
    }
    Some(u)
}

pub fn determinant(t: TriangleType) -> i64 {
    det3(&t.matrix())
}

fn distinct_permutations(s: [usize; 3]) -> Vec<[usize; 3]> {
    const ORDERS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut out: Vec<[usize; 3]> = Vec::with_capacity(6);
    for o in ORDERS {
        let p = [s[o[0]], s[o[1]], s[o[2]]];
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Triangles `x < y < z` in `B` whose edges `xy`, `yz`, `xz` are completed to
/// Schur triples by `s1`, `s2`, `s3` in some order.
///
/// Each of the 4 patterns and 6 assignments gives one linear system with
/// determinant `±2`, hence at most one candidate, so at most 24 triangles.
pub fn forced_triangles(
    s1: usize,
    s2: usize,
    s3: usize,
    b: &IntSet,
    g: GroundInterval,
) -> Vec<TriangleRecord> {
    let mut out: Vec<TriangleRecord> = Vec::new();
    let perms = distinct_permutations([s1, s2, s3]);
    for t in TriangleType::ALL {
        let m = t.matrix();
        for p in &perms {
            let rhs = [p[0] as i64, p[1] as i64, p[2] as i64];
            let Some([x, y, z]) = solve_integral(&m, rhs) else {
                continue;
            };
            if !(1 <= x && x < y && y < z && z <= g.n() as i64) {
                continue;
            }
            let (x, y, z) = (x as usize, y as usize, z as usize);
            if !(b.contains(x) && b.contains(y) && b.contains(z)) {
                continue;
            }
            if out.iter().any(|r| (r.x, r.y, r.z) == (x, y, z)) {
                continue;
            }
            out.push(TriangleRecord {
                x,
                y,
                z,
                blue_count: Some(t.blue_edges()),
                type_tag: Some(t),
            });
        }
    }
    out
}

/// `(δ, Δ)` of the link graph, loops counting two.
pub fn degree_profile(l: &LinkGraph) -> (usize, usize) {
    l.graph.degree_bounds()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, xs: &[usize]) -> IntSet {
        IntSet::from_elements(n, xs.iter().copied()).unwrap()
    }

    fn g(n: usize) -> GroundInterval {
        GroundInterval::new(n).unwrap()
    }

    #[test]
    fn build_examples() {
        let l = build_link_graph(&set(7, &[2]), &set(7, &[1, 3, 5, 7]), g(7)).unwrap();
        assert_eq!(l.edges(), vec![(1, 3), (3, 5), (5, 7)]);
        assert_eq!(l.loops(), vec![1]);
        assert_eq!(degree_profile(&l), (1, 3));

        let l = build_link_graph(&set(4, &[1, 3]), &set(4, &[2, 4]), g(4)).unwrap();
        assert!(l.edges().is_empty());
        assert_eq!(l.loops(), vec![2, 4]);

        let l = build_link_graph(&IntSet::empty(9), &IntSet::full(9), g(9)).unwrap();
        assert!(l.edges().is_empty() && l.loops().is_empty());
        assert_eq!(degree_profile(&l), (0, 0));
    }

    #[test]
    fn overlap_rejected() {
        let err = build_link_graph(&set(5, &[2, 3]), &set(5, &[3]), g(5)).unwrap_err();
        assert_eq!(err, Error::Overlap(3));
    }

    #[test]
    fn coloring_examples() {
        let l = color_edges(&build_link_graph(&set(10, &[2, 10]), &set(10, &[3, 5, 7]), g(10)).unwrap()).unwrap();
        assert_eq!(l.color(3, 5), Some(EdgeColor::Blue));
        assert_eq!(l.color(5, 7), Some(EdgeColor::Blue));
        assert_eq!(l.color(3, 7), Some(EdgeColor::Red));
        let tris = list_triangles(&l);
        assert_eq!(tris.len(), 1);
        assert_eq!((tris[0].x, tris[0].y, tris[0].z), (3, 5, 7));
        assert_eq!(tris[0].blue_count, Some(2));
        assert_eq!(tris[0].type_tag, Some(TriangleType::OuterRed));

        let l = color_edges(&build_link_graph(&set(7, &[2]), &set(7, &[1, 3, 5, 7]), g(7)).unwrap()).unwrap();
        assert!(l.edges().iter().all(|&(x, y)| l.color(x, y) == Some(EdgeColor::Blue)));

        let l = color_edges(&build_link_graph(&set(14, &[6, 10, 14]), &set(14, &[1, 5, 9]), g(14)).unwrap()).unwrap();
        assert_eq!(l.edges(), vec![(1, 5), (1, 9), (5, 9)]);
        assert!(l.edges().iter().all(|&(x, y)| l.color(x, y) == Some(EdgeColor::Red)));
    }

    #[test]
    fn coloring_needs_parity_setting() {
        let l = build_link_graph(&set(6, &[3]), &set(6, &[1, 5]), g(6)).unwrap();
        assert!(color_edges(&l).is_err());
        let l = build_link_graph(&set(6, &[2]), &set(6, &[4, 6]), g(6)).unwrap();
        assert!(color_edges(&l).is_err());
    }

    #[test]
    fn determinants_are_two() {
        for t in TriangleType::ALL {
            assert_eq!(determinant(t).abs(), 2, "{t:?}");
        }
    }

    #[test]
    fn forced_examples() {
        let odds = IntSet::odds(15);
        let f = forced_triangles(6, 10, 14, &odds, g(15));
        assert!(f.iter().any(|r| (r.x, r.y, r.z) == (1, 5, 9) && r.type_tag == Some(TriangleType::AllRed)));
        assert!(f.len() <= 24);
        assert!(forced_triangles(2, 2, 2, &IntSet::odds(40), g(40)).is_empty());
    }

    #[test]
    fn serializes_in_ascending_order() {
        let l = color_edges(&build_link_graph(&set(12, &[2, 10]), &set(12, &[1, 3, 5, 7, 9, 11]), g(12)).unwrap()).unwrap();
        let js = serde_json::to_string(&l).unwrap();
        assert!(js.contains(r#""S":[2,10]"#), "{js}");
        assert!(js.contains(r#""colors":{"1-3":"BLUE","1-9":"RED","1-11":"BLUE","#), "{js}");
        let plain = build_link_graph(&set(7, &[2]), &set(7, &[1, 3]), g(7)).unwrap();
        assert_eq!(
            serde_json::to_string(&plain).unwrap(),
            r#"{"n":7,"S":[2],"B":[1,3],"edges":[[1,3]],"loops":[1],"colors":null}"#
        );
    }
}
