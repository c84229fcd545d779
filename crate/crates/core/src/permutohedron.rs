//! The permutohedron `Peⁿ⁻¹`: its dual sphere, its facet normals, and the
//! nerve of the prism `Peⁿ⁻¹ × I`.
//!
//! Facets of the permutohedron are indexed by proper nonempty `S ⊂ [n]`; the
//! corresponding nerve vertex is labelled `Bary(S)`. The prism bases are the
//! apexes `North 0` (`F_a`) and `South 0` (`F_b`).

use num_rational::BigRational;
use num_traits::Zero;

use crate::complex::{ApexTag, SimplicialComplex, VertexLabel, Vx};
use crate::error::{Error, Result};

/// The chain complex of proper nonempty subsets of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutohedralSphere {
    pub n: usize,
    pub complex: SimplicialComplex,
}

/// Label of the nerve vertex for the facet `F_S`.
pub fn subset_label(s: &[usize]) -> VertexLabel {
    VertexLabel::bary_atoms(s.iter().map(|&i| i as i64)).expect("subset is nonempty and duplicate-free")
}

/// The prism base `F_a`.
pub fn base_a() -> VertexLabel {
    VertexLabel::apex(ApexTag::North, 0)
}

/// The prism base `F_b`.
pub fn base_b() -> VertexLabel {
    VertexLabel::apex(ApexTag::South, 0)
}

/// Subset named by a side-facet label, if it is one.
pub fn label_subset(l: &VertexLabel) -> Option<Vec<usize>> {
    l.atom_members()?.into_iter().map(|i| usize::try_from(i).ok()).collect()
}

fn mask_to_subset(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

pub fn permutohedral_sphere(n: usize) -> Result<PermutohedralSphere> {
    if !(2..=20).contains(&n) {
        return Err(Error::BadDimension(n));
    }
    let full = (1u64 << n) - 1;
    let mut masks: Vec<u64> = (1..full).collect();
    let mut labelled: Vec<(VertexLabel, u64)> =
        masks.drain(..).map(|m| (subset_label(&mask_to_subset(m, n)), m)).collect();
    labelled.sort();
    let mut index = std::collections::HashMap::with_capacity(labelled.len());
    for (pos, (_, m)) in labelled.iter().enumerate() {
        index.insert(*m, pos as Vx);
    }
    let ground: Vec<VertexLabel> = labelled.into_iter().map(|(l, _)| l).collect();

    // One facet per permutation: the chain of its proper prefixes.
    let mut facets = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut mask = 0u64;
        let chain: Vec<Vx> = perm[..n - 1]
            .iter()
            .map(|&b| {
                mask |= 1 << b;
                index[&mask]
            })
            .collect();
        facets.push(chain);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(PermutohedralSphere { n, complex: SimplicialComplex::from_indexed(ground, facets) })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists since p[i-1] < p[i]");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// `ν_S = Σ_{i∈S} eᵢ` in `ℤⁿ⁻¹`, with `eₙ = −(e₁ + ⋯ + eₙ₋₁)`.
pub fn normal_vector(s: &[usize], n: usize) -> Result<Vec<i64>> {
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let proper = !sorted.is_empty()
        && sorted.len() < n
        && sorted.len() == s.len()
        && sorted.iter().all(|&i| (1..=n).contains(&i));
    if !proper {
        return Err(Error::ImproperSubset(s.to_vec(), n));
    }
    let mut v = vec![0i64; n - 1];
    for &i in &sorted {
        if i < n {
            v[i - 1] += 1;
        } else {
            v.iter_mut().for_each(|x| *x -= 1);
        }
    }
    Ok(v)
}

/// `Σ(∂Δⁿ⁻¹)′`, the nerve of `Peⁿ⁻¹ × I`.
pub fn prism_nerve(n: usize) -> Result<SimplicialComplex> {
    let sphere = permutohedral_sphere(n)?;
    Ok(sphere.complex.suspension(1))
}

/// Rado's description: `x ∈ Peⁿ⁻¹(b)` iff `Σxᵢ = Σbᵢ` and, for every proper
/// nonempty `S`, `Σ_S xᵢ` is at most the sum of the `|S|` largest `bᵢ`.
pub fn rado_contains(x: &[BigRational], b: &[BigRational]) -> Result<bool> {
    if x.len() != b.len() {
        return Err(Error::LengthMismatch { expected: b.len(), got: x.len() });
    }
    if b.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NonIncreasingB);
    }
    let total_x: BigRational = x.iter().sum();
    let total_b: BigRational = b.iter().sum();
    if total_x != total_b {
        return Ok(false);
    }
    // The binding subset of each size takes the largest coordinates of x.
    let mut xs = x.to_vec();
    xs.sort_by(|a, c| c.cmp(a));
    let mut lhs = BigRational::zero();
    let mut rhs = BigRational::zero();
    for k in 0..x.len().saturating_sub(1) {
        lhs += &xs[k];
        rhs += &b[b.len() - 1 - k];
        if lhs > rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Integer convenience wrapper around [`rado_contains`].
pub fn rado_contains_int(x: &[i64], b: &[i64]) -> Result<bool> {
    let q = |v: &[i64]| v.iter().map(|&a| BigRational::from_integer(a.into())).collect::<Vec<_>>();
    rado_contains(&q(x), &q(b))
}
