//! JSON surface files.
//!
//! ```json
//! {"faces": [{"edges": [{"id": "b", "vec": ["1/1", "0/1"]}, ...]}],
//!  "pairings": [{"edges": ["b", "t"], "type": "translation"}]}
//! ```
//!
//! Coordinates are written as `"p/q"` strings. On input, `"p"` and plain
//! JSON integers are accepted too.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::SurfaceError;
use crate::flat::{Edge, EdgePairing, PlanarFace, Vector2};
use crate::{Rational, Surface};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coord {
    Text(String),
    Int(i64),
}

impl Coord {
    fn parse(&self) -> Result<Rational, SurfaceError> {
        match self {
            Coord::Int(v) => Ok(Rational::from_integer(BigInt::from(*v))),
            Coord::Text(s) => s
                .trim()
                .parse()
                .map_err(|e| SurfaceError::Format(format!("bad rational {s:?}: {e}"))),
        }
    }

    fn write(r: &Rational) -> Self {
        Coord::Text(format!("{}/{}", r.numer(), r.denom()))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileEdge {
    id: String,
    vec: [Coord; 2],
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileFace {
    edges: Vec<FileEdge>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileSurface {
    faces: Vec<FileFace>,
    pairings: Vec<EdgePairing>,
}

pub fn from_json(text: &str) -> Result<Surface, SurfaceError> {
    let file: FileSurface =
        serde_json::from_str(text).map_err(|e| SurfaceError::Format(e.to_string()))?;
    let faces = file
        .faces
        .into_iter()
        .map(|f| {
            let edges = f
                .edges
                .into_iter()
                .map(|e| {
                    Ok(Edge {
                        id: e.id,
                        vec: Vector2::new(e.vec[0].parse()?, e.vec[1].parse()?),
                    })
                })
                .collect::<Result<_, SurfaceError>>()?;
            Ok(PlanarFace { edges })
        })
        .collect::<Result<_, SurfaceError>>()?;
    Ok(Surface::new(faces, file.pairings))
}

/// Pretty-printed JSON; faces in their given order, pairings canonical.
pub fn to_json(surface: &Surface) -> String {
    let file = FileSurface {
        faces: surface
            .faces()
            .iter()
            .map(|f| FileFace {
                edges: f
                    .edges
                    .iter()
                    .map(|e| FileEdge {
                        id: e.id.clone(),
                        vec: [Coord::write(&e.vec.x), Coord::write(&e.vec.y)],
                    })
                    .collect(),
            })
            .collect(),
        pairings: surface.pairings().to_vec(),
    };
    serde_json::to_string_pretty(&file).expect("surface serializes")
}
