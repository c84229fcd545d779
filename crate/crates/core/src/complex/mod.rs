//! Abstract finite simplicial complexes stored by their maximal faces.
//!
//! A complex keeps a sorted ground set of [`VertexLabel`]s and its facets as
//! sorted index lists into that ground set. Because the ground set is sorted,
//! comparing index lists is the same as comparing label lists, so the
//! canonical form (sorted ground, facets sorted lexicographically) makes
//! derived equality structural equality.
//!
//! Ground elements that lie in no facet are ghost vertices. The complex
//! `{∅}` has `facets == [[]]`; a complex with no faces at all cannot be built.

mod label;
mod ops;

use serde::{Deserialize, Serialize};

pub use label::{ApexTag, VertexLabel};
pub use ops::fresh_apex_level;

use crate::error::{Error, Result};

/// Vertex index into a complex's ground set.
pub type Vx = u32;

/// Sorted, duplicate-free faces of one size, stored contiguously.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLevel {
    size: usize,
    data: Vec<Vx>,
    len: usize,
    /// Packed faces, when they fit in 128 bits, for fast lookup.
    keys: Option<(u32, Vec<u128>)>,
}

impl FaceLevel {
    fn normalize(size: usize, data: Vec<Vx>, bits: u32) -> Self {
        let count = data.len() / size;
        let mut out = Vec::with_capacity(data.len());
        if size as u32 * bits <= 128 {
            // Packing most-significant-first keeps lexicographic order.
            let mut keys: Vec<u128> = data
                .chunks_exact(size)
                .map(|c| c.iter().fold(0u128, |k, &v| k << bits | v as u128))
                .collect();
            keys.sort_unstable();
            keys.dedup();
            let mask = (1u128 << bits) - 1;
            for &k in &keys {
                for i in (0..size).rev() {
                    out.push((k >> (i as u32 * bits) & mask) as Vx);
                }
            }
            let len = keys.len();
            return FaceLevel { size, data: out, len, keys: Some((bits, keys)) };
        } else {
            let mut idx: Vec<usize> = (0..count).collect();
            let chunk = |i: usize| &data[i * size..(i + 1) * size];
            idx.sort_unstable_by(|&a, &b| chunk(a).cmp(chunk(b)));
            idx.dedup_by(|a, b| chunk(*a) == chunk(*b));
            for i in idx {
                out.extend_from_slice(chunk(i));
            }
        }
        let len = out.len() / size;
        FaceLevel { size, data: out, len, keys: None }
    }

    /// Number of vertices in each face.
    pub fn face_size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> &[Vx] {
        &self.data[i * self.size..(i + 1) * self.size]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Vx]> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    pub fn position(&self, face: &[Vx]) -> Option<usize> {
        if let Some((bits, keys)) = &self.keys {
            if face.len() != self.size || face.iter().any(|&v| (v as u128) >> bits != 0) {
                return None;
            }
            let k = face.iter().fold(0u128, |k, &v| k << bits | v as u128);
            return keys.binary_search(&k).ok();
        }
        let (mut lo, mut hi) = (0, self.len);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(face) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }
}

/// Face counts by dimension, starting at dimension 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: Vec<VertexLabel>,
    facets: Vec<Vec<Vx>>,
}

impl SimplicialComplex {
    /// Builds and normalizes a complex from labelled facets.
    pub fn new(ground: Vec<VertexLabel>, facets: Vec<Vec<VertexLabel>>) -> Result<Self> {
        let mut sorted = ground;
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].clone()));
        }
        if facets.is_empty() {
            return Err(Error::VoidComplex);
        }
        let facets = facets
            .into_iter()
            .map(|f| {
                f.into_iter()
                    .map(|l| match sorted.binary_search(&l) {
                        Ok(i) => Ok(i as Vx),
                        Err(_) => Err(Error::FacetOutsideGround(l)),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_indexed(sorted, facets))
    }

    /// Atom-labelled convenience constructor.
    pub fn from_atoms<G, F>(ground: G, facets: &[F]) -> Result<Self>
    where
        G: IntoIterator<Item = i64>,
        F: AsRef<[i64]>,
    {
        Self::new(
            ground.into_iter().map(VertexLabel::Atom).collect(),
            facets
                .iter()
                .map(|f| f.as_ref().iter().map(|&i| VertexLabel::Atom(i)).collect())
                .collect(),
        )
    }

    /// `ground` must already be sorted and duplicate-free; facets may be in
    /// any order and need not be maximal.
    pub(crate) fn from_indexed(ground: Vec<VertexLabel>, facets: Vec<Vec<Vx>>) -> Self {
        debug_assert!(ground.windows(2).all(|w| w[0] < w[1]));
        let facets = maximal_only(facets, ground.len());
        SimplicialComplex { ground, facets }
    }

    /// `{∅}` on the given ground set (all vertices are ghosts).
    pub fn empty_on(ground: Vec<VertexLabel>) -> Result<Self> {
        Self::new(ground, vec![vec![]])
    }

    /// The full simplex on `[n]`.
    pub fn simplex(n: usize) -> Self {
        let ground = (1..=n as i64).map(VertexLabel::Atom).collect();
        Self::from_indexed(ground, vec![(0..n as Vx).collect()])
    }

    /// `∂Δⁿ⁻¹` on `[n]`, `n ≥ 1` (for `n = 1` this is `{∅}` with one ghost).
    pub fn simplex_boundary(n: usize) -> Self {
        let ground = (1..=n as i64).map(VertexLabel::Atom).collect();
        let facets = (0..n as Vx)
            .map(|skip| (0..n as Vx).filter(|&v| v != skip).collect())
            .collect();
        Self::from_indexed(ground, facets)
    }

    /// `n` isolated points on `[n]`.
    pub fn points(n: usize) -> Self {
        let ground = (1..=n as i64).map(VertexLabel::Atom).collect();
        let facets = if n == 0 { vec![vec![]] } else { (0..n as Vx).map(|v| vec![v]).collect() };
        Self::from_indexed(ground, facets)
    }

    pub fn ground(&self) -> &[VertexLabel] {
        &self.ground
    }

    pub fn n_vertices(&self) -> usize {
        self.ground.len()
    }

    /// Facets as index lists into [`Self::ground`].
    pub fn facet_indices(&self) -> &[Vec<Vx>] {
        &self.facets
    }

    pub fn facets(&self) -> Vec<Vec<VertexLabel>> {
        self.facets.iter().map(|f| self.labels_of(f)).collect()
    }

    pub fn labels_of(&self, face: &[Vx]) -> Vec<VertexLabel> {
        face.iter().map(|&v| self.ground[v as usize].clone()).collect()
    }

    pub fn index_of(&self, label: &VertexLabel) -> Option<Vx> {
        self.ground.binary_search(label).ok().map(|i| i as Vx)
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].len() == self.ground.len()
    }

    pub fn is_face(&self, face: &[VertexLabel]) -> bool {
        let mut idx = Vec::with_capacity(face.len());
        for l in face {
            match self.index_of(l) {
                Some(i) => idx.push(i),
                None => return false,
            }
        }
        idx.sort_unstable();
        idx.dedup();
        self.is_face_indexed(&idx)
    }

    /// `face` must be sorted.
    pub fn is_face_indexed(&self, face: &[Vx]) -> bool {
        self.facets.iter().any(|f| is_subset(face, f))
    }

    pub fn ghost_indices(&self) -> Vec<Vx> {
        let mut used = vec![false; self.ground.len()];
        for f in &self.facets {
            for &v in f {
                used[v as usize] = true;
            }
        }
        (0..self.ground.len() as Vx).filter(|&v| !used[v as usize]).collect()
    }

    pub fn ghost_vertices(&self) -> Vec<VertexLabel> {
        self.labels_of(&self.ghost_indices())
    }

    /// All faces grouped by size: entry `k` holds the faces with `k`
    /// vertices (dimension `k - 1`), each level sorted.
    pub fn faces_by_size(&self) -> Vec<Vec<Vec<Vx>>> {
        self.face_levels().iter().map(|l| l.iter().map(<[Vx]>::to_vec).collect()).collect()
    }

    /// Same as [`faces_by_size`](Self::faces_by_size), stored flat.
    pub fn face_levels(&self) -> Vec<FaceLevel> {
        let top = self.facets.iter().map(Vec::len).max().unwrap_or(0);
        let bits = (usize::BITS - self.ground.len().leading_zeros()).max(1);
        let mut raw: Vec<Vec<Vx>> = vec![Vec::new(); top + 1];
        for f in &self.facets {
            raw[f.len()].extend_from_slice(f);
        }
        let mut levels = vec![FaceLevel { size: 0, data: Vec::new(), len: 1, keys: None }; top + 1];
        // Top down: each level is its own facets plus the codimension-one
        // faces of the level above.
        for size in (1..=top).rev() {
            let level = FaceLevel::normalize(size, std::mem::take(&mut raw[size]), bits);
            if size > 1 {
                let below = &mut raw[size - 1];
                below.reserve(level.len() * size * (size - 1));
                for f in level.iter() {
                    for drop in 0..size {
                        below.extend_from_slice(&f[..drop]);
                        below.extend_from_slice(&f[drop + 1..]);
                    }
                }
            }
            levels[size] = level;
        }
        levels
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts: Vec<u64> =
            self.faces_by_size().iter().skip(1).map(|l| l.len() as u64).collect();
        while counts.last() == Some(&0) {
            counts.pop();
        }
        FVector(counts)
    }

    /// Renames the ground set to atoms `1..=n` in ground order.
    pub fn relabel_to_atoms(&self) -> Self {
        SimplicialComplex {
            ground: (1..=self.ground.len() as i64).map(VertexLabel::Atom).collect(),
            facets: self.facets.clone(),
        }
    }

    /// Applies an injective relabeling; the result is renormalized.
    pub fn relabel<F: FnMut(&VertexLabel) -> VertexLabel>(&self, mut f: F) -> Result<Self> {
        let ground: Vec<VertexLabel> = self.ground.iter().map(&mut f).collect();
        let facets = self.facets.iter().map(|fc| fc.iter().map(|&v| ground[v as usize].clone()).collect()).collect();
        Self::new(ground, facets)
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            ground: &'a [VertexLabel],
            facets: Vec<Vec<VertexLabel>>,
        }
        Repr { ground: &self.ground, facets: self.facets() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Repr {
            ground: Vec<VertexLabel>,
            facets: Vec<Vec<VertexLabel>>,
        }
        let r = Repr::deserialize(d)?;
        SimplicialComplex::new(r.ground, r.facets).map_err(serde::de::Error::custom)
    }
}

/// Subset test on sorted slices.
pub(crate) fn is_subset(small: &[Vx], big: &[Vx]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let mut it = big.iter();
    'outer: for x in small {
        for y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

/// Sorts, deduplicates and drops non-maximal faces.
fn maximal_only(mut faces: Vec<Vec<Vx>>, n_vertices: usize) -> Vec<Vec<Vx>> {
    for f in faces.iter_mut() {
        f.sort_unstable();
        f.dedup();
    }
    faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Vec<Vx>> = Vec::new();
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); n_vertices];
    for f in faces {
        let covered = match f.iter().min_by_key(|&&v| containing[v as usize].len()) {
            None => !kept.is_empty(),
            Some(&pivot) => containing[pivot as usize]
                .iter()
                .any(|&k| kept[k].len() > f.len() && is_subset(&f, &kept[k])),
        };
        if !covered {
            for &v in &f {
                containing[v as usize].push(kept.len());
            }
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}
