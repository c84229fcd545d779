//! Reduced integral (co)homology of simplicial complexes.
//!
//! Chains are augmented: degree −1 is spanned by the empty face, so
//! `H̃₋₁({∅}) = ℤ` and `H̃₋₁` vanishes for every nonempty complex.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::complex::{FaceLevel, SimplicialComplex};
use crate::lattice::SparseMatrix;

/// Finitely generated abelian group `ℤ^rank ⊕ ⨁ ℤ/dᵢ` with `d₁ | d₂ | …`,
/// every `dᵢ ≥ 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup { rank, torsion: Vec::new() }
    }

    /// `torsion` must already be a divisibility chain of entries ≥ 2.
    pub fn new(rank: usize, torsion: Vec<BigInt>) -> Self {
        debug_assert!(torsion.iter().all(|d| *d >= BigInt::from(2)));
        debug_assert!(torsion.windows(2).all(|w| (&w[1] % &w[0]) == BigInt::from(0)));
        AbelianGroup { rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Abelian groups indexed by degree (≥ −1). Trivial degrees are never
/// stored, so derived equality is group isomorphism degree by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedAbelianGroup {
    entries: BTreeMap<i64, AbelianGroup>,
}

impl GradedAbelianGroup {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, degree: i64, group: AbelianGroup) {
        if group.is_trivial() {
            self.entries.remove(&degree);
        } else {
            self.entries.insert(degree, group);
        }
    }

    pub fn with(mut self, degree: i64, group: AbelianGroup) -> Self {
        self.set(degree, group);
        self
    }

    /// Homology of a sphere of dimension `d ≥ −1`.
    pub fn sphere(d: i64) -> Self {
        Self::new().with(d, AbelianGroup::free(1))
    }

    pub fn get(&self, degree: i64) -> AbelianGroup {
        self.entries.get(&degree).cloned().unwrap_or_default()
    }

    pub fn rank(&self, degree: i64) -> usize {
        self.entries.get(&degree).map_or(0, |g| g.rank)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nontrivial degrees, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &AbelianGroup)> {
        self.entries.iter().map(|(&k, g)| (k, g))
    }

    pub fn top_degree(&self) -> Option<i64> {
        self.entries.keys().next_back().copied()
    }

    /// Moves every degree up by `by`.
    pub fn shifted(&self, by: i64) -> Self {
        GradedAbelianGroup { entries: self.entries.iter().map(|(&k, g)| (k + by, g.clone())).collect() }
    }

    /// Dense table from degree −1 to the highest nontrivial degree.
    pub fn table(&self) -> Vec<HomologyRow> {
        let top = self.top_degree().unwrap_or(-1).max(-1);
        let bottom = self.entries.keys().next().copied().unwrap_or(-1).min(-1);
        (bottom..=top)
            .map(|d| {
                let g = self.get(d);
                HomologyRow { degree: d, rank: g.rank, torsion: g.torsion }
            })
            .collect()
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for row in self.table() {
            let g = AbelianGroup { rank: row.rank, torsion: row.torsion };
            s.push_str(&format!("H~{:<3} = {}\n", row.degree, g));
        }
        s
    }
}

/// True iff `a` in degree `i + shift` equals `b` in degree `i` for all `i`.
pub fn groups_equal(a: &GradedAbelianGroup, b: &GradedAbelianGroup, shift: i64) -> bool {
    *a == b.shifted(shift)
}

/// One line of a rendered homology table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyRow {
    pub degree: i64,
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl Serialize for HomologyRow {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("degree", &self.degree)?;
        m.serialize_entry("rank", &self.rank)?;
        let torsion: Vec<serde_json::Value> = self
            .torsion
            .iter()
            .map(|d| match d.to_u64() {
                Some(x) => serde_json::Value::from(x),
                None => serde_json::Value::from(d.to_string()),
            })
            .collect();
        m.serialize_entry("torsion", &torsion)?;
        m.end()
    }
}

impl Serialize for GradedAbelianGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.table().serialize(s)
    }
}

/// Augmented simplicial chain complex with deterministic bases.
#[derive(Clone, Debug)]
pub struct ChainBoundaryData {
    /// `bases[k + 1]` lists the `k`-faces (sorted vertex indices) in order;
    /// `bases[0]` holds only the empty face.
    pub bases: Vec<FaceLevel>,
    /// `boundaries[k]` is `∂ₖ : Cₖ → Cₖ₋₁` for `k ≥ 0`; `∂₀` is the
    /// augmentation.
    pub boundaries: Vec<SparseMatrix>,
}

impl ChainBoundaryData {
    /// `∂ₖ`, or a zero map for degrees outside the complex.
    pub fn boundary(&self, k: i64) -> SparseMatrix {
        if k >= 0 && (k as usize) < self.boundaries.len() {
            self.boundaries[k as usize].clone()
        } else {
            SparseMatrix::zeros(self.rank(k - 1), self.rank(k))
        }
    }

    /// Number of `k`-faces.
    pub fn rank(&self, k: i64) -> usize {
        if k < -1 {
            return 0;
        }
        self.bases.get((k + 1) as usize).map_or(0, FaceLevel::len)
    }

    pub fn top_degree(&self) -> i64 {
        self.bases.len() as i64 - 2
    }
}

/// Boundary matrices with signs `(−1)^position` in the sorted vertex order.
pub fn boundary_data(k: &SimplicialComplex) -> ChainBoundaryData {
    let bases = k.face_levels();
    let mut boundaries = Vec::with_capacity(bases.len().saturating_sub(1));
    for size in 1..bases.len() {
        let lower = &bases[size - 1];
        let mut buf = Vec::with_capacity(size);
        let cols = bases[size]
            .iter()
            .map(|face| {
                (0..size)
                    .map(|drop| {
                        buf.clear();
                        buf.extend_from_slice(&face[..drop]);
                        buf.extend_from_slice(&face[drop + 1..]);
                        let row = lower.position(&buf).expect("faces are closed under removal");
                        (row as u32, if drop % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        boundaries.push(SparseMatrix::from_columns(lower.len(), cols));
    }
    let data = ChainBoundaryData { bases, boundaries };
    // Sanity check, skipped on large inputs where it dominates the cost.
    #[cfg(debug_assertions)]
    for k in (1..data.boundaries.len()).filter(|&k| data.boundaries[k].nnz() <= 20_000) {
        debug_assert!(data.boundaries[k - 1].compose(&data.boundaries[k]).is_zero(), "∂∂ ≠ 0");
    }
    data
}

/// Reduced homology from the Smith forms of consecutive boundary maps.
pub fn reduced_homology(k: &SimplicialComplex) -> GradedAbelianGroup {
    homology_of_chains(&boundary_data(k))
}

pub fn homology_of_chains(data: &ChainBoundaryData) -> GradedAbelianGroup {
    let top = data.top_degree();
    // factors[k + 1] = invariant factors of ∂ₖ, for k = -1 ..= top + 1.
    // Working downwards, columns of ∂ₖ that were unit pivot rows of ∂ₖ₊₁
    // lie in the span of the remaining columns and are skipped.
    let mut factors: Vec<Vec<BigInt>> = vec![Vec::new(); (top + 3) as usize];
    let mut cleared: Vec<u32> = Vec::new();
    for k in (0..=top).rev() {
        let d = &data.boundaries[k as usize];
        let (f, pivots) =
            if cleared.is_empty() { d.invariant_factors_with_pivots() } else { d.without_columns(&cleared).invariant_factors_with_pivots() };
        factors[(k + 1) as usize] = f;
        cleared = pivots;
    }
    let mut h = GradedAbelianGroup::new();
    for k in -1..=top {
        let out_rank = factors[(k + 1) as usize].len();
        let incoming = &factors[(k + 2) as usize];
        let rank = data.rank(k) - out_rank - incoming.len();
        let torsion = incoming.iter().filter(|d| !d.is_one()).cloned().collect();
        h.set(k, AbelianGroup::new(rank, torsion));
    }
    h
}

/// Universal coefficients: `H̃ᵏ = free(H̃ₖ) ⊕ torsion(H̃ₖ₋₁)`.
pub fn cohomology_from_homology(h: &GradedAbelianGroup) -> GradedAbelianGroup {
    let mut c = GradedAbelianGroup::new();
    for (k, g) in h.iter() {
        let mut here = c.get(k);
        here.rank = g.rank;
        c.set(k, here);
        if !g.torsion.is_empty() {
            let mut above = c.get(k + 1);
            above.torsion = g.torsion.clone();
            c.set(k + 1, above);
        }
    }
    c
}

pub fn reduced_cohomology(k: &SimplicialComplex) -> GradedAbelianGroup {
    cohomology_from_homology(&reduced_homology(k))
}
