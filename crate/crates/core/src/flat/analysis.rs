use std::collections::VecDeque;
use std::f64::consts::PI;

use serde::Serialize;

use crate::error::SurfaceError;
use crate::flat::{EdgeRef, FlatSurface, Links};
use crate::pattern::SingularityPattern;
use crate::scalar::Scalar;

/// Absolute tolerance when rounding a vertex's total angle to a multiple of π.
pub const ANGLE_TOLERANCE: f64 = 1e-6;

/// A vertex of the surface: its corners in turning order and its cone
/// angle `angle_multiple · π`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexClass {
    pub corners: Vec<EdgeRef>,
    pub angle_multiple: u32,
    pub order: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurfaceAnalysis {
    pub faces: usize,
    pub edges: usize,
    pub pairings: usize,
    pub vertex_classes: Vec<VertexClass>,
    pub pattern: SingularityPattern,
    pub genus: u32,
    pub euler_characteristic: i64,
    pub is_square: bool,
}

pub fn analyze<T: Scalar>(surface: &FlatSurface<T>) -> Result<SurfaceAnalysis, SurfaceError> {
    let vertex_classes = surface.vertex_classes()?;
    let chi = euler_characteristic(surface, vertex_classes.len());
    Ok(SurfaceAnalysis {
        faces: surface.faces().len(),
        edges: surface.edge_count(),
        pairings: surface.pairings().len(),
        pattern: pattern_from(&vertex_classes, chi)?,
        genus: genus_from(chi)?,
        euler_characteristic: chi,
        is_square: surface.is_square()?,
        vertex_classes,
    })
}

fn euler_characteristic<T: Scalar>(surface: &FlatSurface<T>, vertices: usize) -> i64 {
    vertices as i64 - surface.pairings().len() as i64 + surface.faces().len() as i64
}

fn genus_from(chi: i64) -> Result<u32, SurfaceError> {
    if chi > 2 || chi % 2 != 0 {
        return Err(SurfaceError::BadEulerCharacteristic(chi));
    }
    Ok(((2 - chi) / 2) as u32)
}

fn pattern_from(classes: &[VertexClass], chi: i64) -> Result<SingularityPattern, SurfaceError> {
    SingularityPattern::new(classes.iter().map(|c| c.order).collect())
        .map_err(|_| SurfaceError::BadEulerCharacteristic(chi))
}

/// Counterclockwise angle from `v` to `-u`, in `(0, 2π)`.
fn corner_angle<T: Scalar>(
    u: &crate::flat::Vector2<T>,
    v: &crate::flat::Vector2<T>,
) -> Option<f64> {
    let w = u.neg();
    let cross = v.x.clone() * w.y.clone() - v.y.clone() * w.x.clone();
    let dot = v.x.clone() * w.x.clone() + v.y.clone() * w.y.clone();
    if cross.negligible() {
        return (dot < T::zero()).then_some(PI);
    }
    let a = cross.approx().atan2(dot.approx());
    Some(if a < 0.0 { a + 2.0 * PI } else { a })
}

impl<T: Scalar> FlatSurface<T> {
    fn next_corner(&self, links: &Links, (f, j): EdgeRef) -> EdgeRef {
        let ((g, k), _) = links.partner[f][j];
        (g, (k + 1) % self.faces()[g].edges.len())
    }

    /// Vertices of the surface, ordered by their first corner.
    pub fn vertex_classes(&self) -> Result<Vec<VertexClass>, SurfaceError> {
        let links = self.links()?;
        let faces = self.faces();
        let mut seen: Vec<Vec<bool>> = faces.iter().map(|f| vec![false; f.edges.len()]).collect();
        let mut out = Vec::new();
        for (f, face) in faces.iter().enumerate() {
            for j in 0..face.edges.len() {
                if seen[f][j] {
                    continue;
                }
                let mut corners = Vec::new();
                let mut total = 0.0;
                let mut c = (f, j);
                while !seen[c.0][c.1] {
                    seen[c.0][c.1] = true;
                    let edges = &faces[c.0].edges;
                    let u = &edges[(c.1 + edges.len() - 1) % edges.len()].vec;
                    let v = &edges[c.1].vec;
                    total += corner_angle(u, v).ok_or(SurfaceError::DegenerateCorner {
                        face: c.0,
                        corner: c.1,
                    })?;
                    corners.push(c);
                    c = self.next_corner(&links, c);
                }
                let m = (total / PI).round();
                if (total - m * PI).abs() >= ANGLE_TOLERANCE || m < 1.0 {
                    return Err(SurfaceError::AngleNotMultipleOfPi { angle: total });
                }
                out.push(VertexClass {
                    corners,
                    angle_multiple: m as u32,
                    order: m as i64 - 2,
                });
            }
        }
        Ok(out)
    }

    /// Orders of all vertices, regular ones included as `0`.
    pub fn pattern(&self) -> Result<SingularityPattern, SurfaceError> {
        let classes = self.vertex_classes()?;
        pattern_from(&classes, euler_characteristic(self, classes.len()))
    }

    /// Genus from `V - E + F = 2 - 2g`.
    pub fn genus(&self) -> Result<u32, SurfaceError> {
        let classes = self.vertex_classes()?;
        genus_from(euler_characteristic(self, classes.len()))
    }

    /// Face signs propagated along a spanning tree from face 0, and for each
    /// pairing whether its sign relation `s1 · σ · s2 = 1` fails.
    pub(crate) fn sign_defects(&self, links: &Links) -> (Vec<i8>, Vec<bool>) {
        let n = self.faces().len();
        let mut sign = vec![0i8; n];
        sign[0] = 1;
        let mut queue = VecDeque::from([0usize]);
        while let Some(f) = queue.pop_front() {
            for &((g, _), pid) in &links.partner[f] {
                if sign[g] == 0 {
                    sign[g] = sign[f] * self.pairings()[pid].gluing.sign();
                    queue.push_back(g);
                }
            }
        }
        let defects = self
            .pairings()
            .iter()
            .map(|p| {
                let (fa, _) = links.position[&p.edges[0]];
                let (fb, _) = links.position[&p.edges[1]];
                sign[fa] * p.gluing.sign() * sign[fb] != 1
            })
            .collect();
        (sign, defects)
    }

    /// True iff the differential is the square of an Abelian differential,
    /// i.e. the faces can be signed so that every gluing becomes a translation.
    pub fn is_square(&self) -> Result<bool, SurfaceError> {
        let links = self.links()?;
        let (_, defects) = self.sign_defects(&links);
        Ok(!defects.iter().any(|&d| d))
    }

    /// Holonomy sign of a closed walk given by the edge ids it crosses, each
    /// read from the face the walk is currently in.
    pub fn loop_holonomy<S: AsRef<str>>(&self, crossings: &[S]) -> Result<i8, SurfaceError> {
        let links = self.links()?;
        let Some(first) = crossings.first() else {
            return Ok(1);
        };
        let locate = |id: &str| {
            links
                .position
                .get(id)
                .copied()
                .ok_or_else(|| SurfaceError::UnknownEdge(id.to_string()))
        };
        let start = locate(first.as_ref())?.0;
        let mut face = start;
        let mut sign = 1i8;
        for id in crossings {
            let (f, j) = locate(id.as_ref())?;
            if f != face {
                return Err(SurfaceError::NotAClosedWalk(format!(
                    "edge {} is not on face {face}",
                    id.as_ref()
                )));
            }
            let ((g, _), pid) = links.partner[f][j];
            sign *= self.pairings()[pid].gluing.sign();
            face = g;
        }
        if face != start {
            return Err(SurfaceError::NotAClosedWalk(format!(
                "walk ends on face {face}, started on face {start}"
            )));
        }
        Ok(sign)
    }

    /// Edge ids crossed by a small loop around the vertex.
    pub fn corner_loop(&self, class: &VertexClass) -> Vec<String> {
        class
            .corners
            .iter()
            .map(|&c| self.edge(c).id.clone())
            .collect()
    }
}
