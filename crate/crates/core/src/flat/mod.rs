//! Half-translation surfaces glued from polygons.
//!
//! A [`FlatSurface`] is a list of faces, each a closed cycle of edge
//! vectors read counterclockwise, and a perfect matching of the edges. Two
//! paired edges are glued by a translation (their vectors are opposite) or
//! by a half-turn (their vectors are equal).
//!
//! Corners are keyed `(face, j)`: the corner at the start of edge `j`,
//! between the incoming edge `j - 1` and the outgoing edge `j`. Turning
//! around a vertex, the corner `(f, j)` is followed by `(f', j' + 1)`, where
//! edge `j'` of face `f'` is the partner of edge `j` of face `f`.

mod analysis;
mod cover;
mod examples;
mod io;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::SurfaceError;
use crate::scalar::Scalar;

pub use analysis::{analyze, SurfaceAnalysis, VertexClass, ANGLE_TOLERANCE};
pub use cover::{canonical_cover_spec, cover_type, double_cover, gl2_act, CoverSpec, DoubleCover};
pub use examples::{example, EXAMPLE_NAMES};
pub use io::{from_json, to_json};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Vector2<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(T::from_i64(x), T::from_i64(y))
    }

    pub fn is_zero(&self) -> bool {
        self.x.negligible() && self.y.negligible()
    }

    /// Equal coordinates, up to the scalar's tolerance.
    pub fn near(&self, other: &Self) -> bool {
        self.x.near(&other.x) && self.y.near(&other.y)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.x.clone(), -self.y.clone())
    }

    pub fn approx(&self) -> (f64, f64) {
        (self.x.approx(), self.y.approx())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Edge<T> {
    pub id: String,
    pub vec: Vector2<T>,
}

impl<T: Scalar> Edge<T> {
    pub fn new(id: impl Into<String>, x: T, y: T) -> Self {
        Self {
            id: id.into(),
            vec: Vector2::new(x, y),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlanarFace<T> {
    pub edges: Vec<Edge<T>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Gluing {
    Translation,
    HalfTurn,
}

impl Gluing {
    /// Crossing sign: `+1` for translations, `-1` for half-turns.
    pub fn sign(self) -> i8 {
        match self {
            Gluing::Translation => 1,
            Gluing::HalfTurn => -1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgePairing {
    pub edges: [String; 2],
    #[serde(rename = "type")]
    pub gluing: Gluing,
}

impl EdgePairing {
    pub fn new(a: impl Into<String>, b: impl Into<String>, gluing: Gluing) -> Self {
        let (a, b) = (a.into(), b.into());
        let edges = if a <= b { [a, b] } else { [b, a] };
        Self { edges, gluing }
    }
}

/// Problems found by [`FlatSurface::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NoFaces,
    TooFewEdges { face: usize },
    ZeroVector { edge: String },
    NotClosed { face: usize },
    DuplicateEdgeId { edge: String },
    UnknownEdge { edge: String },
    UnpairedEdge { edge: String },
    PairedTwice { edge: String },
    SelfPaired { edge: String },
    VectorMismatch { edges: [String; 2], gluing: Gluing },
    ComponentCount { count: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoFaces => write!(f, "surface has no faces"),
            Violation::TooFewEdges { face } => write!(f, "face {face} has fewer than 2 edges"),
            Violation::ZeroVector { edge } => write!(f, "edge {edge} is the zero vector"),
            Violation::NotClosed { face } => write!(f, "boundary of face {face} does not close"),
            Violation::DuplicateEdgeId { edge } => write!(f, "edge id {edge} is used twice"),
            Violation::UnknownEdge { edge } => write!(f, "pairing names unknown edge {edge}"),
            Violation::UnpairedEdge { edge } => write!(f, "edge {edge} is not paired"),
            Violation::PairedTwice { edge } => write!(f, "edge {edge} is in several pairings"),
            Violation::SelfPaired { edge } => write!(f, "edge {edge} is paired with itself"),
            Violation::VectorMismatch { edges, gluing } => write!(
                f,
                "edges {} and {} do not fit a {:?} gluing",
                edges[0], edges[1], gluing
            ),
            Violation::ComponentCount { count } => write!(f, "surface has {count} components"),
        }
    }
}

/// Position of an edge: `(face, index in face)`.
pub type EdgeRef = (usize, usize);

/// Polygons with paired edges. Pairings are kept in canonical order (sorted
/// by first edge id) and a pairing's id is its index in that order.
#[derive(Debug, Clone, PartialEq)]
pub struct FlatSurface<T> {
    faces: Vec<PlanarFace<T>>,
    pairings: Vec<EdgePairing>,
}

/// Edge adjacency of a validated surface.
#[derive(Debug, Clone)]
pub(crate) struct Links {
    /// For each face and edge: partner position and pairing id.
    pub partner: Vec<Vec<(EdgeRef, usize)>>,
    pub position: HashMap<String, EdgeRef>,
}

impl<T: Scalar> FlatSurface<T> {
    /// Assembles a surface without checking it; see [`FlatSurface::validate`].
    pub fn new(faces: Vec<PlanarFace<T>>, pairings: Vec<EdgePairing>) -> Self {
        let mut pairings: Vec<EdgePairing> = pairings
            .into_iter()
            .map(|p| {
                let [a, b] = p.edges;
                EdgePairing::new(a, b, p.gluing)
            })
            .collect();
        pairings.sort_by(|a, b| a.edges.cmp(&b.edges));
        Self { faces, pairings }
    }

    pub fn faces(&self) -> &[PlanarFace<T>] {
        &self.faces
    }

    pub fn pairings(&self) -> &[EdgePairing] {
        &self.pairings
    }

    pub fn edge_count(&self) -> usize {
        self.faces.iter().map(|f| f.edges.len()).sum()
    }

    pub fn edge(&self, (f, j): EdgeRef) -> &Edge<T> {
        &self.faces[f].edges[j]
    }

    /// Every violated invariant; empty for a valid surface.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.faces.is_empty() {
            out.push(Violation::NoFaces);
        }
        let mut position: HashMap<&str, EdgeRef> = HashMap::new();
        for (fi, face) in self.faces.iter().enumerate() {
            if face.edges.len() < 2 {
                out.push(Violation::TooFewEdges { face: fi });
            }
            let mut sx = T::zero();
            let mut sy = T::zero();
            for (j, e) in face.edges.iter().enumerate() {
                if e.vec.is_zero() {
                    out.push(Violation::ZeroVector { edge: e.id.clone() });
                }
                sx = sx + e.vec.x.clone();
                sy = sy + e.vec.y.clone();
                if position.insert(&e.id, (fi, j)).is_some() {
                    out.push(Violation::DuplicateEdgeId { edge: e.id.clone() });
                }
            }
            if !(sx.negligible() && sy.negligible()) {
                out.push(Violation::NotClosed { face: fi });
            }
        }

        let mut uses: HashMap<&str, usize> = HashMap::new();
        for p in &self.pairings {
            let [a, b] = &p.edges;
            if a == b {
                out.push(Violation::SelfPaired { edge: a.clone() });
            }
            for id in [a, b] {
                *uses.entry(id).or_default() += 1;
                if !position.contains_key(id.as_str()) {
                    out.push(Violation::UnknownEdge { edge: id.clone() });
                }
            }
            if let (Some(&ra), Some(&rb)) = (position.get(a.as_str()), position.get(b.as_str())) {
                let (va, vb) = (&self.edge(ra).vec, &self.edge(rb).vec);
                let fits = match p.gluing {
                    Gluing::Translation => vb.near(&va.neg()),
                    Gluing::HalfTurn => vb.near(va),
                };
                if !fits {
                    out.push(Violation::VectorMismatch {
                        edges: p.edges.clone(),
                        gluing: p.gluing,
                    });
                }
            }
        }
        for face in &self.faces {
            for e in &face.edges {
                match uses.get(e.id.as_str()).copied().unwrap_or(0) {
                    0 => out.push(Violation::UnpairedEdge { edge: e.id.clone() }),
                    1 => {}
                    _ => out.push(Violation::PairedTwice { edge: e.id.clone() }),
                }
            }
        }
        out.dedup();

        if out.is_empty() {
            let count = self.component_count_unchecked();
            if count != 1 {
                out.push(Violation::ComponentCount { count });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Validates and builds the edge adjacency.
    pub(crate) fn links(&self) -> Result<Links, SurfaceError> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(SurfaceError::Invalid(violations));
        }
        Ok(self.links_unchecked())
    }

    fn links_unchecked(&self) -> Links {
        let mut position = HashMap::new();
        for (fi, face) in self.faces.iter().enumerate() {
            for (j, e) in face.edges.iter().enumerate() {
                position.insert(e.id.clone(), (fi, j));
            }
        }
        let mut partner: Vec<Vec<(EdgeRef, usize)>> = self
            .faces
            .iter()
            .map(|f| vec![((usize::MAX, usize::MAX), usize::MAX); f.edges.len()])
            .collect();
        for (pid, p) in self.pairings.iter().enumerate() {
            let (Some(&a), Some(&b)) = (position.get(&p.edges[0]), position.get(&p.edges[1]))
            else {
                continue;
            };
            partner[a.0][a.1] = (b, pid);
            partner[b.0][b.1] = (a, pid);
        }
        Links { partner, position }
    }

    /// Number of connected components of the face adjacency graph, ignoring
    /// pairings that name unknown edges.
    fn component_count_unchecked(&self) -> usize {
        let links = self.links_unchecked();
        let n = self.faces.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(f) = stack.pop() {
                for &((g, _), pid) in &links.partner[f] {
                    if pid != usize::MAX && !seen[g] {
                        seen[g] = true;
                        stack.push(g);
                    }
                }
            }
        }
        count
    }

    /// Connected components, for a surface that is otherwise valid.
    pub fn component_count(&self) -> usize {
        self.component_count_unchecked()
    }

    /// Same surface with every coordinate converted.
    pub fn map_scalar<U: Scalar>(&self, f: impl Fn(&T) -> U) -> FlatSurface<U> {
        FlatSurface {
            faces: self
                .faces
                .iter()
                .map(|face| PlanarFace {
                    edges: face
                        .edges
                        .iter()
                        .map(|e| Edge {
                            id: e.id.clone(),
                            vec: Vector2::new(f(&e.vec.x), f(&e.vec.y)),
                        })
                        .collect(),
                })
                .collect(),
            pairings: self.pairings.clone(),
        }
    }
}
