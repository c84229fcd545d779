//! Independent oracles and generators shared by the integration tests.
//!
//! Nothing here calls into the library's face enumeration, boundary
//! matrices or Smith reduction; complexes are handled as plain sets of
//! atom-id sets.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use qtorbit_core::complex::{SimplicialComplex, VertexLabel};

pub type Face = BTreeSet<i64>;

/// Every face (including ∅) of a complex on atoms, by brute force.
pub fn all_faces(k: &SimplicialComplex) -> BTreeSet<Face> {
    let mut out = BTreeSet::new();
    for f in k.facets() {
        let ids: Vec<i64> = f.iter().map(atom).collect();
        for mask in 0u32..(1 << ids.len()) {
            out.insert((0..ids.len()).filter(|b| mask >> b & 1 == 1).map(|b| ids[b]).collect());
        }
    }
    out
}

pub fn atom(l: &VertexLabel) -> i64 {
    match l {
        VertexLabel::Atom(i) => *i,
        other => panic!("expected an atom label, got {other}"),
    }
}

/// Rank over ℚ by fraction-free Gaussian elimination.
pub fn rational_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            for cc in c + 1..ncols {
                let v = (&m[rank][c] * &m[r][cc] - &m[r][c] * &m[rank][cc]) / &prev;
                m[r][cc] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers (degrees −1 ..= dim) from ranks over ℚ of
/// boundary maps built here from scratch.
pub fn rational_betti(k: &SimplicialComplex) -> Vec<usize> {
    let faces = all_faces(k);
    let top = faces.iter().map(BTreeSet::len).max().unwrap_or(0);
    let by_size: Vec<Vec<&Face>> = (0..=top).map(|s| faces.iter().filter(|f| f.len() == s).collect()).collect();
    // rank_d[s] = rank of the boundary from size-s faces to size-(s-1) faces.
    let mut rank_d = vec![0usize; top + 2];
    for s in 1..=top {
        let rows: Vec<Vec<BigInt>> = by_size[s - 1]
            .iter()
            .map(|low| {
                by_size[s]
                    .iter()
                    .map(|high| {
                        if !low.is_subset(high) {
                            return BigInt::zero();
                        }
                        let missing = high.difference(low).next().unwrap();
                        let pos = high.iter().position(|v| v == missing).unwrap();
                        BigInt::from(if pos % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        rank_d[s] = rational_rank(&rows);
    }
    (0..=top).map(|s| by_size[s].len() - rank_d[s] - rank_d[s + 1]).collect()
}

/// Number of nonempty chains of nonempty faces.
pub fn chain_count(k: &SimplicialComplex) -> u64 {
    let faces: Vec<Face> = all_faces(k).into_iter().filter(|f| !f.is_empty()).collect();
    // chains ending at face i = 1 + sum over proper subfaces j.
    let mut order: Vec<usize> = (0..faces.len()).collect();
    order.sort_by_key(|&i| faces[i].len());
    let mut ending = vec![0u64; faces.len()];
    for &i in &order {
        ending[i] = 1 + order
            .iter()
            .filter(|&&j| faces[j].len() < faces[i].len() && faces[j].is_subset(&faces[i]))
            .map(|&j| ending[j])
            .sum::<u64>();
    }
    ending.iter().sum()
}

pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    // Laplace expansion; only used for small minors.
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][c] * determinant(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n)).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|b| m >> b & 1 == 1).collect()).collect()
}

/// gcd of all `r × r` minors.
pub fn minor_gcd(a: &[Vec<BigInt>], r: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rows in subsets(a.len(), r) {
        for cols in subsets(a[0].len(), r) {
            let m: Vec<Vec<BigInt>> = rows.iter().map(|&i| cols.iter().map(|&j| a[i][j].clone()).collect()).collect();
            g = g.gcd(&determinant(&m));
        }
    }
    g.abs()
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// A complex on `[n]` from facet bitmasks; ghosts appear naturally.
pub fn from_masks(n: usize, masks: &[u32]) -> SimplicialComplex {
    let facets: Vec<Vec<i64>> = masks
        .iter()
        .map(|m| (0..n).filter(|b| m >> b & 1 == 1).map(|b| b as i64 + 1).collect())
        .collect();
    let facets = if facets.is_empty() { vec![vec![]] } else { facets };
    SimplicialComplex::from_atoms(1..=n as i64, &facets).unwrap()
}

/// Arbitrary complex on `[n]`, `lo ≤ n ≤ hi`, ghosts allowed.
pub fn arb_complex(lo: usize, hi: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    (lo..=hi).prop_flat_map(move |n| {
        prop::collection::vec(0u32..(1 << n), 0..=max_facets).prop_map(move |m| from_masks(n, &m))
    })
}

/// Arbitrary 1-neighborly complex on `[n]` other than the full simplex.
pub fn arb_neighborly(lo: usize, hi: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    (lo.max(2)..=hi).prop_flat_map(move |n| {
        let full = (1u32 << n) - 1;
        prop::collection::vec(1u32..full, 0..=max_facets).prop_map(move |mut m| {
            m.extend((0..n).map(|b| 1u32 << b));
            from_masks(n, &m)
        })
    })
}
