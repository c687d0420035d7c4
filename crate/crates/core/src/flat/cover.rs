use serde::{Deserialize, Serialize};

use crate::covering::{CoveringType, FiberProfile};
use crate::error::SurfaceError;
use crate::flat::{Edge, EdgePairing, FlatSurface, PlanarFace, Vector2};
use crate::scalar::Scalar;

/// Monodromy of a double cover: for each pairing id, whether crossing that
/// pairing exchanges the two sheets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoverSpec {
    pub swaps: Vec<bool>,
}

impl CoverSpec {
    pub fn new(swaps: Vec<bool>) -> Self {
        Self { swaps }
    }

    pub fn trivial(pairings: usize) -> Self {
        Self::new(vec![false; pairings])
    }

    pub fn swapped(&self) -> usize {
        self.swaps.iter().filter(|&&s| s).count()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DoubleCover<T> {
    pub surface: FlatSurface<T>,
    pub connected: bool,
    /// Indices into the base's vertex classes of the branch points.
    pub branch_vertices: Vec<usize>,
}

/// Swaps exactly on the pairings that break the face-sign propagation: the
/// holonomy character of the surface.
pub fn canonical_cover_spec<T: Scalar>(
    surface: &FlatSurface<T>,
) -> Result<CoverSpec, SurfaceError> {
    let links = surface.links()?;
    let (_, defects) = surface.sign_defects(&links);
    if !defects.iter().any(|&d| d) {
        return Err(SurfaceError::AlreadySquare);
    }
    Ok(CoverSpec::new(defects))
}

fn sheet_id(id: &str, sheet: usize) -> String {
    format!("{id}~{sheet}")
}

/// Two copies of every face; the pairing of `a` and `b` with swap flag `c`
/// glues `a` on sheet `s` to `b` on sheet `s xor c`.
///
/// Faces of sheet 0 come first, then those of sheet 1. Edge ids get the
/// suffix `~0` or `~1`.
pub fn double_cover<T: Scalar>(
    surface: &FlatSurface<T>,
    spec: &CoverSpec,
) -> Result<DoubleCover<T>, SurfaceError> {
    surface.links()?;
    if spec.swaps.len() != surface.pairings().len() {
        return Err(SurfaceError::SpecMismatch {
            expected: surface.pairings().len(),
            got: spec.swaps.len(),
        });
    }
    let classes = surface.vertex_classes()?;

    let faces = (0..2)
        .flat_map(|sheet| {
            surface.faces().iter().map(move |f| PlanarFace {
                edges: f
                    .edges
                    .iter()
                    .map(|e| Edge {
                        id: sheet_id(&e.id, sheet),
                        vec: e.vec.clone(),
                    })
                    .collect(),
            })
        })
        .collect();
    let pairings = surface
        .pairings()
        .iter()
        .zip(&spec.swaps)
        .flat_map(|(p, &swap)| {
            let [a, b] = &p.edges;
            (0..2).map(move |s| {
                EdgePairing::new(sheet_id(a, s), sheet_id(b, s ^ swap as usize), p.gluing)
            })
        })
        .collect();
    let cover = FlatSurface::new(faces, pairings);

    let pid_of = |c: (usize, usize)| {
        let id = &surface.edge(c).id;
        surface
            .pairings()
            .iter()
            .position(|p| p.edges.contains(id))
            .expect("validated surface")
    };
    let branch_vertices = classes
        .iter()
        .enumerate()
        .filter(|(_, class)| {
            class
                .corners
                .iter()
                .filter(|&&c| spec.swaps[pid_of(c)])
                .count()
                % 2
                == 1
        })
        .map(|(i, _)| i)
        .collect();
    Ok(DoubleCover {
        connected: cover.component_count() == 1,
        surface: cover,
        branch_vertices,
    })
}

/// The covering type of a connected double cover: index 2 over branch
/// vertices, two unramified points elsewhere.
pub fn cover_type<T: Scalar>(
    surface: &FlatSurface<T>,
    cover: &DoubleCover<T>,
) -> Result<CoveringType, SurfaceError> {
    let classes = surface.vertex_classes()?;
    let genus = surface.genus()?;
    let fibers = classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let e = if cover.branch_vertices.contains(&i) {
                vec![2]
            } else {
                vec![1, 1]
            };
            FiberProfile::new(c.order, e)
        })
        .collect();
    Ok(CoveringType::allowing_unramified_marked(2, genus, fibers)?)
}

/// Applies `[[a, b], [c, d]]` to every edge vector.
pub fn gl2_act<T: Scalar>(
    surface: &FlatSurface<T>,
    [a, b, c, d]: [T; 4],
) -> Result<FlatSurface<T>, SurfaceError> {
    let det = a.clone() * d.clone() - b.clone() * c.clone();
    if det.negligible() {
        return Err(SurfaceError::SingularMatrix);
    }
    if det < T::zero() {
        return Err(SurfaceError::OrientationReversing);
    }
    let faces = surface
        .faces()
        .iter()
        .map(|f| PlanarFace {
            edges: f
                .edges
                .iter()
                .map(|e| {
                    let (x, y) = (&e.vec.x, &e.vec.y);
                    Edge {
                        id: e.id.clone(),
                        vec: Vector2::new(
                            a.clone() * x.clone() + b.clone() * y.clone(),
                            c.clone() * x.clone() + d.clone() * y.clone(),
                        ),
                    }
                })
                .collect(),
        })
        .collect();
    Ok(FlatSurface::new(faces, surface.pairings().to_vec()))
}
