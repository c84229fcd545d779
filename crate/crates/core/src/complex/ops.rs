use std::collections::HashMap;

use super::{ApexTag, SimplicialComplex, VertexLabel, Vx};
use crate::error::{Error, Result};

/// Smallest apex level above every apex already in `ground`.
pub fn fresh_apex_level(ground: &[VertexLabel]) -> u32 {
    ground.iter().filter_map(VertexLabel::apex_level).max().map_or(0, |l| l + 1)
}

/// Merges new labels into a sorted ground set. Returns the new ground, the
/// remapping of old indices and the indices of the added labels.
fn extend_ground(
    ground: &[VertexLabel],
    added: &[VertexLabel],
) -> Result<(Vec<VertexLabel>, Vec<Vx>, Vec<Vx>)> {
    for a in added {
        if ground.binary_search(a).is_ok() {
            return Err(Error::ApexCollision(a.clone()));
        }
    }
    let mut all: Vec<(VertexLabel, Option<usize>, Option<usize>)> = ground
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), Some(i), None))
        .chain(added.iter().enumerate().map(|(i, l)| (l.clone(), None, Some(i))))
        .collect();
    all.sort_by(|a, b| a.0.cmp(&b.0));
    if let Some(w) = all.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::DuplicateVertex(w[0].0.clone()));
    }
    let mut old_map = vec![0; ground.len()];
    let mut new_idx = vec![0; added.len()];
    for (pos, (_, old, new)) in all.iter().enumerate() {
        if let Some(o) = old {
            old_map[*o] = pos as Vx;
        }
        if let Some(n) = new {
            new_idx[*n] = pos as Vx;
        }
    }
    Ok((all.into_iter().map(|t| t.0).collect(), old_map, new_idx))
}

impl SimplicialComplex {
    /// Cone with the given apex; the cone over `{∅}` is a single point.
    pub fn cone(&self, apex: VertexLabel) -> Result<Self> {
        let (ground, map, new) = extend_ground(&self.ground, std::slice::from_ref(&apex))?;
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().map(|&v| map[v as usize]).chain([new[0]]).collect())
            .collect();
        Ok(Self::from_indexed(ground, facets))
    }

    /// `k`-fold suspension, i.e. the join with `k` copies of `S⁰`. Apex
    /// pairs get fresh levels above any apex already present.
    pub fn suspension(&self, k: u32) -> Self {
        let base = fresh_apex_level(&self.ground);
        let added: Vec<VertexLabel> = (0..k)
            .flat_map(|i| {
                [VertexLabel::apex(ApexTag::North, base + i), VertexLabel::apex(ApexTag::South, base + i)]
            })
            .collect();
        let (ground, map, new) =
            extend_ground(&self.ground, &added).expect("fresh apex levels never collide");
        let mut facets: Vec<Vec<Vx>> =
            self.facets.iter().map(|f| f.iter().map(|&v| map[v as usize]).collect()).collect();
        for pair in new.chunks(2) {
            facets = facets
                .into_iter()
                .flat_map(|f| {
                    let mut n = f.clone();
                    n.push(pair[0]);
                    let mut s = f;
                    s.push(pair[1]);
                    [n, s]
                })
                .collect();
        }
        Self::from_indexed(ground, facets)
    }

    /// Barycentric subdivision: one vertex `Bary(σ)` per nonempty face and
    /// one facet per maximal chain of faces. Ghost vertices disappear.
    pub fn barycentric_subdivision(&self) -> Self {
        if self.is_empty_complex() {
            return Self::from_indexed(Vec::new(), vec![vec![]]);
        }
        let faces: Vec<Vec<Vx>> = self.faces_by_size().into_iter().skip(1).flatten().collect();
        let mut labelled: Vec<(VertexLabel, usize)> = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (VertexLabel::Bary(self.labels_of(f)), i))
            .collect();
        labelled.sort();
        let mut position = vec![0 as Vx; faces.len()];
        for (pos, (_, i)) in labelled.iter().enumerate() {
            position[*i] = pos as Vx;
        }
        let index: HashMap<&[Vx], Vx> =
            faces.iter().enumerate().map(|(i, f)| (f.as_slice(), position[i])).collect();
        let ground: Vec<VertexLabel> = labelled.into_iter().map(|(l, _)| l).collect();

        // Each facet F contributes the |F|! saturated chains ending at F;
        // a chain is an ordering of F's vertices read as growing prefixes.
        let mut facets = Vec::new();
        let mut prefix = Vec::new();
        for f in &self.facets {
            for_each_permutation(f, &mut |perm| {
                let mut chain = Vec::with_capacity(perm.len());
                for k in 1..=perm.len() {
                    prefix.clear();
                    prefix.extend_from_slice(&perm[..k]);
                    prefix.sort_unstable();
                    chain.push(index[prefix.as_slice()]);
                }
                facets.push(chain);
            });
        }
        Self::from_indexed(ground, facets)
    }

    /// Induced subcomplex on `w`; the result's ground set is exactly `w`.
    pub fn full_subcomplex(&self, w: &[VertexLabel]) -> Result<Self> {
        let mut keep = vec![None; self.ground.len()];
        let mut sorted = w.to_vec();
        sorted.sort();
        sorted.dedup();
        for (pos, l) in sorted.iter().enumerate() {
            match self.index_of(l) {
                Some(i) => keep[i as usize] = Some(pos as Vx),
                None => return Err(Error::VertexNotInGround(l.clone())),
            }
        }
        Ok(self.restrict_indexed(sorted, &keep))
    }

    /// `keep[v]` is the new index of old vertex `v`, if kept.
    pub(crate) fn restrict_indexed(&self, ground: Vec<VertexLabel>, keep: &[Option<Vx>]) -> Self {
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().filter_map(|&v| keep[v as usize]).collect())
            .collect();
        Self::from_indexed(ground, facets)
    }

    fn facet_masks(&self) -> Result<Vec<u64>> {
        if self.ground.len() > 63 {
            return Err(Error::GroundTooLarge(self.ground.len()));
        }
        Ok(self.facets.iter().map(|f| f.iter().fold(0u64, |m, &v| m | 1 << v)).collect())
    }

    /// Combinatorial Alexander dual `{I : ground \ I ∉ K}` on the same
    /// ground set. Its facets are the complements of the minimal non-faces.
    pub fn alexander_dual(&self) -> Result<Self> {
        let n = self.ground.len();
        if self.is_full_simplex() {
            return Err(Error::FullSimplexInput);
        }
        let masks = self.facet_masks()?;
        let is_face = |s: u64| masks.iter().any(|&m| s & !m == 0);
        let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut facets = Vec::new();
        for s in 0..=full {
            if is_face(s) {
                continue;
            }
            let minimal = (0..n).filter(|&b| s >> b & 1 == 1).all(|b| is_face(s & !(1 << b)));
            if minimal {
                let comp = full & !s;
                facets.push((0..n as Vx).filter(|&b| comp >> b & 1 == 1).collect());
            }
        }
        Ok(Self::from_indexed(self.ground.clone(), facets))
    }

    /// Whether every `j`-subset of the ground set is a face.
    pub fn is_j_neighborly(&self, j: usize) -> bool {
        let n = self.ground.len();
        if j > n {
            return true;
        }
        let mut comb: Vec<Vx> = (0..j as Vx).collect();
        loop {
            if !self.is_face_indexed(&comb) {
                return false;
            }
            // next combination in lexicographic order
            let mut i = j;
            while i > 0 && comb[i - 1] as usize == n - j + i - 1 {
                i -= 1;
            }
            if i == 0 {
                return true;
            }
            comb[i - 1] += 1;
            for k in i..j {
                comb[k] = comb[k - 1] + 1;
            }
        }
    }

    /// Largest `j` for which the complex is `j`-neighborly.
    pub fn neighborliness(&self) -> usize {
        (0..=self.ground.len()).take_while(|&j| self.is_j_neighborly(j)).last().unwrap_or(0)
    }

    /// `s(K) = Cone K ∪ Δ_V`, applied `times` times, with fresh cone apexes.
    pub fn s_operation(&self, times: u32) -> Result<Self> {
        if let Some(&g) = self.ghost_indices().first() {
            return Err(Error::GhostVertexInput(self.ground[g as usize].clone()));
        }
        let mut k = self.clone();
        for _ in 0..times {
            let apex = VertexLabel::apex(ApexTag::Cone, fresh_apex_level(&k.ground));
            let (ground, map, new) = extend_ground(&k.ground, std::slice::from_ref(&apex))?;
            let mut facets: Vec<Vec<Vx>> = k
                .facets
                .iter()
                .map(|f| f.iter().map(|&v| map[v as usize]).chain([new[0]]).collect())
                .collect();
            facets.push(map.clone());
            k = Self::from_indexed(ground, facets);
        }
        Ok(k)
    }
}

/// Heap's algorithm over a copy of `items`.
fn for_each_permutation<F: FnMut(&[Vx])>(items: &[Vx], f: &mut F) {
    let mut a = items.to_vec();
    let n = a.len();
    let mut c = vec![0usize; n];
    f(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}
