//! Named test complexes.

use crate::complex::SimplicialComplex;

/// The 6-vertex triangulation of the real projective plane.
pub fn rp2_6() -> SimplicialComplex {
    SimplicialComplex::from_atoms(
        1..=6,
        &[
            [1, 2, 4],
            [1, 2, 6],
            [1, 3, 5],
            [1, 3, 6],
            [1, 4, 5],
            [2, 3, 4],
            [2, 3, 5],
            [2, 5, 6],
            [3, 4, 6],
            [4, 5, 6],
        ],
    )
    .expect("valid triangulation")
}

/// Edges `{1,2}` and `{3,4}` on `[4]`.
pub fn two_disjoint_edges() -> SimplicialComplex {
    SimplicialComplex::from_atoms(1..=4, &[[1, 2], [3, 4]]).expect("valid")
}

/// Two disjoint triangle boundaries on `[6]`.
pub fn two_disjoint_circles() -> SimplicialComplex {
    SimplicialComplex::from_atoms(1..=6, &[[1, 2], [2, 3], [1, 3], [4, 5], [5, 6], [4, 6]]).expect("valid")
}

/// The boundary of a 5-gon, a 1-neighborly circle that is not a simplex
/// boundary.
pub fn pentagon() -> SimplicialComplex {
    SimplicialComplex::from_atoms(1..=5, &[[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]]).expect("valid")
}

/// Every catalog entry by name. `sphere-k` is `∂Δᵏ⁺¹`, `points-n` is `n`
/// isolated points.
pub fn by_name(name: &str) -> Option<SimplicialComplex> {
    if let Some(k) = name.strip_prefix("sphere-") {
        return k.parse::<usize>().ok().filter(|&k| k <= 10).map(|k| SimplicialComplex::simplex_boundary(k + 2));
    }
    if let Some(n) = name.strip_prefix("points-") {
        return n.parse::<usize>().ok().filter(|&n| (1..=20).contains(&n)).map(SimplicialComplex::points);
    }
    match name {
        "rp2" => Some(rp2_6()),
        "two-edges" => Some(two_disjoint_edges()),
        "two-circles" => Some(two_disjoint_circles()),
        "pentagon" => Some(pentagon()),
        "empty" => Some(SimplicialComplex::empty_on(Vec::new()).expect("valid")),
        _ => None,
    }
}

/// Names of the files shipped in the `catalog/` directory.
pub const NAMES: &[&str] = &[
    "empty",
    "points-2",
    "points-3",
    "sphere-0",
    "sphere-1",
    "sphere-2",
    "sphere-3",
    "pentagon",
    "two-edges",
    "two-circles",
    "rp2",
];
