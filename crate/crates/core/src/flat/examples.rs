use crate::error::SurfaceError;
use crate::flat::{Edge, EdgePairing, FlatSurface, Gluing, PlanarFace, Vector2};
use crate::scalar::Scalar;

pub const EXAMPLE_NAMES: [&str; 3] = ["torus", "pillowcase", "figure2"];

/// A decagon with three pairs of sides glued by translations (`a`, `b`, `c`)
/// and two glued by half-turns (`d`, `e`). Genus 2 with two zeros of order
/// 2, not a global square.
const FIGURE2: [(&str, i64, i64); 10] = [
    ("a1", -2, 0),
    ("c1", -1, -3),
    ("d1", 3, 2),
    ("b1", -2, -3),
    ("d2", 3, 2),
    ("b2", 2, 3),
    ("c2", 1, 3),
    ("e1", -3, -2),
    ("a2", 2, 0),
    ("e2", -3, -2),
];

fn single_face<T: Scalar>(
    edges: &[(&str, i64, i64)],
    pairs: &[(&str, &str, Gluing)],
) -> FlatSurface<T> {
    let face = PlanarFace {
        edges: edges
            .iter()
            .map(|&(id, x, y)| Edge {
                id: id.to_string(),
                vec: Vector2::from_ints(x, y),
            })
            .collect(),
    };
    let pairings = pairs
        .iter()
        .map(|&(a, b, g)| EdgePairing::new(a, b, g))
        .collect();
    FlatSurface::new(vec![face], pairings)
}

/// Reference surfaces: `torus` (unit square, opposite sides glued),
/// `pillowcase` and `figure2`.
///
/// The pillowcase is a 2 by 1 rectangle: the bottom and top sides are each
/// folded at their midpoints by a half-turn and the vertical sides are glued
/// by a translation. Its four vertices are the four poles.
pub fn example<T: Scalar>(name: &str) -> Result<FlatSurface<T>, SurfaceError> {
    use Gluing::*;
    let surface = match name {
        "torus" => single_face(
            &[("b", 1, 0), ("r", 0, 1), ("t", -1, 0), ("l", 0, -1)],
            &[("b", "t", Translation), ("l", "r", Translation)],
        ),
        "pillowcase" => single_face(
            &[
                ("b1", 1, 0),
                ("b2", 1, 0),
                ("r", 0, 1),
                ("t1", -1, 0),
                ("t2", -1, 0),
                ("l", 0, -1),
            ],
            &[
                ("b1", "b2", HalfTurn),
                ("t1", "t2", HalfTurn),
                ("l", "r", Translation),
            ],
        ),
        "figure2" => single_face(
            &FIGURE2,
            &[
                ("a1", "a2", Translation),
                ("b1", "b2", Translation),
                ("c1", "c2", Translation),
                ("d1", "d2", HalfTurn),
                ("e1", "e2", HalfTurn),
            ],
        ),
        other => return Err(SurfaceError::UnknownExample(other.to_string())),
    };
    Ok(surface)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Surface, SurfaceF64};

    #[test]
    fn examples_are_valid() {
        for name in EXAMPLE_NAMES {
            let s: Surface = example(name).unwrap();
            assert_eq!(s.validate(), vec![], "{name}");
        }
        assert_eq!(
            example::<f64>("klein").unwrap_err(),
            SurfaceError::UnknownExample("klein".into())
        );
    }

    #[test]
    fn float_instantiation_agrees() {
        for name in EXAMPLE_NAMES {
            let exact: Surface = example(name).unwrap();
            let float: SurfaceF64 = example(name).unwrap();
            assert_eq!(exact.pattern(), float.pattern());
            assert_eq!(exact.genus(), float.genus());
            assert_eq!(exact.is_square(), float.is_square());
        }
    }
}
