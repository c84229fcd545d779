//! Seeded random and exhaustive populations of complexes on `[n]`.

use rand::seq::index;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{SimplicialComplex, VertexLabel, Vx};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn atoms(n: usize) -> Vec<VertexLabel> {
    (1..=n as i64).map(VertexLabel::Atom).collect()
}

fn random_facet<R: Rng>(rng: &mut R, n: usize, max_size: usize) -> Vec<Vx> {
    let size = rng.gen_range(1..=max_size.min(n));
    let mut f: Vec<Vx> = index::sample(rng, n, size).into_iter().map(|i| i as Vx).collect();
    f.sort_unstable();
    f
}

/// Up to `max_facets` random faces of size at most `max_size` on `[n]`.
/// Ghost vertices are likely; the result may be `{∅}` only if `n = 0`.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize, max_facets: usize, max_size: usize) -> SimplicialComplex {
    if n == 0 || max_facets == 0 {
        return SimplicialComplex::from_indexed(atoms(n), vec![vec![]]);
    }
    let count = rng.gen_range(1..=max_facets);
    let facets = (0..count).map(|_| random_facet(rng, n, max_size.max(1))).collect();
    SimplicialComplex::from_indexed(atoms(n), facets)
}

/// A random 1-neighborly complex on `[n]` other than the full simplex,
/// `n ≥ 2`.
pub fn random_neighborly<R: Rng>(rng: &mut R, n: usize) -> SimplicialComplex {
    assert!(n >= 2, "need two vertices for a proper 1-neighborly complex");
    let count = rng.gen_range(0..=2 * n);
    let mut facets: Vec<Vec<Vx>> = (0..n as Vx).map(|v| vec![v]).collect();
    facets.extend((0..count).map(|_| random_facet(rng, n, n - 1)));
    SimplicialComplex::from_indexed(atoms(n), facets)
}

/// Every 1-neighborly complex on `[n]` other than the full simplex, for
/// `1 ≤ n ≤ 4`, in a fixed order.
pub fn all_neighborly(n: usize) -> Vec<SimplicialComplex> {
    assert!((1..=4).contains(&n), "exhaustive enumeration only for n ≤ 4");
    let full = (1u32 << n) - 1;
    let big: Vec<u32> = (1..full).filter(|m| m.count_ones() >= 2).collect();
    let mut out = Vec::new();
    for family in 0u32..(1 << big.len()) {
        let chosen: Vec<u32> = (0..big.len()).filter(|b| family >> b & 1 == 1).map(|b| big[b]).collect();
        // Downward closed among the faces of size ≥ 2.
        let closed = chosen.iter().all(|&s| {
            (0..n).filter(|b| s >> b & 1 == 1).all(|b| {
                let t = s & !(1 << b);
                t.count_ones() < 2 || chosen.contains(&t)
            })
        });
        if !closed {
            continue;
        }
        let mut facets: Vec<Vec<Vx>> = (0..n as Vx).map(|v| vec![v]).collect();
        facets.extend(chosen.iter().map(|&s| (0..n as Vx).filter(|b| s >> b & 1 == 1).collect()));
        let k = SimplicialComplex::from_indexed(atoms(n), facets);
        if !k.is_full_simplex() {
            out.push(k);
        }
    }
    out
}
