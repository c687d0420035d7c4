//! Random generators shared by the property tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use qdiff::covering::{CoveringType, FiberProfile};
use qdiff::flat::{Edge, EdgePairing, FlatSurface, Gluing, PlanarFace, Vector2};
use qdiff::strata::enumerate_patterns;
use qdiff::{Rational, SingularityPattern, Surface};
use rand::seq::SliceRandom;
use rand::Rng;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn random_vector(rng: &mut impl Rng) -> (Rational, Rational) {
    loop {
        let (a, b) = (rng.gen_range(-4i64..=4), rng.gen_range(-4i64..=4));
        if (a, b) != (0, 0) {
            let d = rng.gen_range(1i64..=3);
            return (q(a, d), q(b, d));
        }
    }
}

fn parallel(u: &(Rational, Rational), v: &(Rational, Rational)) -> bool {
    (u.0.clone() * v.1.clone() - u.1.clone() * v.0.clone()) == q(0, 1)
}

/// A connected half-translation surface made of 1 to 3 convex polygons.
///
/// Each polygon is a sum of "atoms" `{w, -w}` drawn from a small palette of
/// pairwise non-parallel vectors, sorted by angle. Edges along the same
/// palette direction are matched at random; equal vectors are glued by a
/// half-turn and opposite ones by a translation.
pub fn random_surface(rng: &mut impl Rng) -> Surface {
    loop {
        let mut palette: Vec<(Rational, Rational)> = Vec::new();
        let size = rng.gen_range(2..=4);
        while palette.len() < size {
            let v = random_vector(rng);
            if !palette.iter().any(|w| parallel(w, &v)) {
                palette.push(v);
            }
        }

        let face_count = rng.gen_range(1..=3);
        let mut faces = Vec::new();
        let mut by_direction: Vec<Vec<(String, (Rational, Rational))>> = vec![Vec::new(); size];
        for f in 0..face_count {
            let mut atoms: Vec<usize> = (0..size).collect();
            atoms.shuffle(rng);
            atoms.truncate(rng.gen_range(2..=size));
            for _ in 0..rng.gen_range(0..=2) {
                atoms.push(rng.gen_range(0..size));
            }
            let mut vecs: Vec<(usize, (Rational, Rational))> = Vec::new();
            for &a in &atoms {
                let (x, y) = palette[a].clone();
                vecs.push((a, (-x.clone(), -y.clone())));
                vecs.push((a, (x, y)));
            }
            vecs.sort_by(|(_, u), (_, v)| {
                let au = angle(u);
                let av = angle(v);
                au.partial_cmp(&av).unwrap()
            });
            let start = rng.gen_range(0..vecs.len());
            vecs.rotate_left(start);
            let edges = vecs
                .into_iter()
                .enumerate()
                .map(|(j, (a, (x, y)))| {
                    let id = format!("f{f}e{j}");
                    by_direction[a].push((id.clone(), (x.clone(), y.clone())));
                    Edge {
                        id,
                        vec: Vector2::new(x, y),
                    }
                })
                .collect();
            faces.push(PlanarFace { edges });
        }

        let mut pairings = Vec::new();
        for mut group in by_direction {
            group.shuffle(rng);
            for pair in group.chunks(2) {
                let (a, va) = &pair[0];
                let (b, vb) = &pair[1];
                let gluing = if va == vb {
                    Gluing::HalfTurn
                } else {
                    Gluing::Translation
                };
                pairings.push(EdgePairing::new(a.clone(), b.clone(), gluing));
            }
        }
        let surface = FlatSurface::new(faces, pairings);
        if surface.is_valid() {
            return surface;
        }
    }
}

fn angle(v: &(Rational, Rational)) -> f64 {
    use num_traits::ToPrimitive;
    v.1.to_f64().unwrap().atan2(v.0.to_f64().unwrap())
}

/// A random positive-determinant rational matrix `[a, b, c, d]`.
pub fn random_matrix(rng: &mut impl Rng) -> [Rational; 4] {
    loop {
        let m: Vec<Rational> = (0..4)
            .map(|_| q(rng.gen_range(-5..=5), rng.gen_range(1..=4)))
            .collect();
        let det = m[0].clone() * m[3].clone() - m[1].clone() * m[2].clone();
        if det > q(0, 1) {
            return [m[0].clone(), m[1].clone(), m[2].clone(), m[3].clone()];
        }
    }
}

/// A random partition of `d`, not all ones when `ramified`.
pub fn random_partition(rng: &mut impl Rng, d: u32, ramified: bool) -> Vec<u32> {
    loop {
        let mut parts = Vec::new();
        let mut rest = d;
        while rest > 0 {
            let p = if rng.gen_bool(0.5) {
                1
            } else {
                rng.gen_range(1..=rest)
            };
            parts.push(p);
            rest -= p;
        }
        if !ramified || parts.iter().any(|&p| p > 1) {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            return parts;
        }
    }
}

/// Random covering types over patterns of genus at most 2.
pub struct CoveringGen {
    patterns: Vec<Vec<SingularityPattern>>,
}

impl CoveringGen {
    pub fn new() -> Self {
        Self {
            patterns: (0..=2).map(|g| enumerate_patterns(g, 8, 7, true)).collect(),
        }
    }

    pub fn sample(&self, rng: &mut impl Rng) -> CoveringType {
        let genus = rng.gen_range(0..self.patterns.len());
        let base = self.patterns[genus].choose(rng).unwrap();
        let degree = rng.gen_range(2..=6);
        let fibers = base
            .orders()
            .iter()
            .map(|&k| FiberProfile::new(k, random_partition(rng, degree, k == 0)))
            .collect();
        CoveringType::new(degree, genus as u32, fibers).expect("generated covering is well formed")
    }
}
