//! Characteristic pairs over a simplicial nerve, the subtorus data that
//! restricts them, and the hypothesis checks for the restricted action.
//!
//! A nerve vertex is a facet of the simple polytope; a nerve facet is a
//! vertex of the polytope, i.e. a torus-fixed point of the quasitoric
//! manifold. A facet is *special* when its characteristic vector lies in
//! the hyperplane `Π = Ker p` of the subtorus.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, VertexLabel, Vx};
use crate::error::{Error, Result};
use crate::lattice::{
    intersect_with_hyperplane, is_unimodular_basis, to_big, torsion_free_quotient, Covector, IntegerMatrix,
};
use crate::permutohedron::{base_a, base_b, label_subset, normal_vector, prism_nerve};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicPair {
    n: usize,
    nerve: SimplicialComplex,
    /// Indexed like `nerve.ground()`.
    lambda: Vec<Vec<i64>>,
}

impl CharacteristicPair {
    pub fn new(n: usize, nerve: SimplicialComplex, lambda: BTreeMap<VertexLabel, Vec<i64>>) -> Result<Self> {
        for (l, v) in &lambda {
            if nerve.index_of(l).is_none() {
                return Err(Error::VertexNotInGround(l.clone()));
            }
            if v.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: v.len() });
            }
        }
        let lambda = nerve
            .ground()
            .iter()
            .map(|l| lambda.get(l).cloned().ok_or_else(|| Error::MissingLambda(l.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(CharacteristicPair { n, nerve, lambda })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nerve(&self) -> &SimplicialComplex {
        &self.nerve
    }

    pub fn lambda(&self, label: &VertexLabel) -> Option<&[i64]> {
        self.nerve.index_of(label).map(|i| self.lambda[i as usize].as_slice())
    }

    pub fn lambda_at(&self, v: Vx) -> &[i64] {
        &self.lambda[v as usize]
    }

    pub fn lambda_map(&self) -> BTreeMap<VertexLabel, Vec<i64>> {
        self.nerve.ground().iter().cloned().zip(self.lambda.iter().cloned()).collect()
    }

    /// Copy with one characteristic vector replaced.
    pub fn with_lambda(&self, label: &VertexLabel, value: Vec<i64>) -> Result<Self> {
        let mut map = self.lambda_map();
        if !map.contains_key(label) {
            return Err(Error::VertexNotInGround(label.clone()));
        }
        map.insert(label.clone(), value);
        Self::new(self.n, self.nerve.clone(), map)
    }
}

/// Subtorus `Tⁿ⁻¹ ⊂ Tⁿ`, given by the primitive covector `p` with `Π = Ker p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtorusSpec(pub Covector);

impl SubtorusSpec {
    pub fn new(p: Vec<i64>) -> Result<Self> {
        Covector::new(p).map(SubtorusSpec)
    }

    /// `p = (0, …, 0, 1)`, i.e. `Π = ℤⁿ⁻¹ × {0}`.
    pub fn standard(n: usize) -> Self {
        SubtorusSpec(Covector::last_coordinate(n))
    }

    pub fn covector(&self) -> &Covector {
        &self.0
    }

    fn check_len(&self, pair: &CharacteristicPair) -> Result<()> {
        if self.0.len() != pair.n {
            return Err(Error::LengthMismatch { expected: pair.n, got: self.0.len() });
        }
        Ok(())
    }
}

/// The characteristic pair over `Peⁿ⁻¹ × I` whose special subcomplex is the
/// subdivided Alexander dual of `L`.
///
/// `L` is read on `[n]` in ground order. The side facet `F_S` gets
/// `(ν_S, 0)` when it is special and `(ν_S, 1)` otherwise; `F_S` is special
/// iff `[n] \ S` is a face of `L̂`, which unfolds to `S ∉ L`.
pub fn build_lambda_hat(l: &SimplicialComplex) -> Result<CharacteristicPair> {
    if let Some(g) = l.ghost_vertices().into_iter().next() {
        return Err(Error::GhostVertexInput(g));
    }
    if l.is_full_simplex() {
        return Err(Error::FullSimplexInput);
    }
    let n = l.n_vertices();
    let l = l.relabel_to_atoms();
    build_with(n, |s| {
        let face: Vec<VertexLabel> = s.iter().map(|&i| VertexLabel::Atom(i as i64)).collect();
        !l.is_face(&face)
    })
}

/// Same pair, built literally: subdivide `L̂` and embed its vertices by
/// complementation `I ↦ [n] \ I`.
pub fn build_lambda_hat_from_dual(l: &SimplicialComplex) -> Result<CharacteristicPair> {
    if let Some(g) = l.ghost_vertices().into_iter().next() {
        return Err(Error::GhostVertexInput(g));
    }
    let n = l.n_vertices();
    let dual_sub = l.relabel_to_atoms().alexander_dual()?.barycentric_subdivision();
    build_with(n, |s| {
        let comp: Vec<i64> = (1..=n).filter(|i| !s.contains(i)).map(|i| i as i64).collect();
        let label = VertexLabel::bary_atoms(comp).expect("complement of a proper subset is nonempty");
        dual_sub.index_of(&label).is_some()
    })
}

fn build_with<F: Fn(&[usize]) -> bool>(n: usize, special: F) -> Result<CharacteristicPair> {
    let nerve = prism_nerve(n)?;
    let mut up = vec![0i64; n];
    up[n - 1] = 1;
    let down: Vec<i64> = up.iter().map(|x| -x).collect();
    let mut lambda = BTreeMap::new();
    for label in nerve.ground() {
        let value = if *label == base_a() {
            up.clone()
        } else if *label == base_b() {
            down.clone()
        } else {
            let s = label_subset(label).expect("side vertices are subset barycenters");
            let mut v = normal_vector(&s, n)?;
            v.push(if special(&s) { 0 } else { 1 });
            v
        };
        lambda.insert(label.clone(), value);
    }
    CharacteristicPair::new(n, nerve, lambda)
}

/// The (*)-condition: characteristic vectors at every nerve facet form a
/// basis of `ℤⁿ`.
pub fn check_star_condition(pair: &CharacteristicPair) -> bool {
    pair.nerve.facet_indices().iter().all(|f| {
        let vs: Vec<Vec<BigInt>> = f.iter().map(|&v| to_big(pair.lambda_at(v))).collect();
        is_unimodular_basis(&vs, pair.n)
    })
}

fn special_mask(pair: &CharacteristicPair, sub: &SubtorusSpec) -> Vec<bool> {
    pair.lambda.iter().map(|v| sub.0.contains(&to_big(v))).collect()
}

pub fn special_vertices(pair: &CharacteristicPair, sub: &SubtorusSpec) -> Result<Vec<VertexLabel>> {
    sub.check_len(pair)?;
    let mask = special_mask(pair, sub);
    Ok(pair.nerve.ground().iter().zip(mask).filter(|(_, s)| *s).map(|(l, _)| l.clone()).collect())
}

/// Full subcomplex of the nerve on the special vertices.
pub fn kspec(pair: &CharacteristicPair, sub: &SubtorusSpec) -> Result<SimplicialComplex> {
    pair.nerve.full_subcomplex(&special_vertices(pair, sub)?)
}

/// Tangent representation at a fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentData {
    pub vertices: Vec<VertexLabel>,
    /// `λ₁ … λₙ`, one per facet vertex.
    pub lambdas: Vec<Vec<BigInt>>,
    /// `α̂₁ … α̂ₙ` with `⟨λᵢ, α̂ⱼ⟩ = δᵢⱼ`.
    pub weights: Vec<Vec<BigInt>>,
    /// `αⱼ = α̂ⱼ|_Π` in the coordinates of the subtorus basis of `Π`.
    pub restricted: Vec<Vec<BigInt>>,
}

impl TangentData {
    /// Matrix of `⟨λᵢ, α̂ⱼ⟩`.
    pub fn pairing(&self) -> IntegerMatrix {
        let n = self.lambdas.len();
        &IntegerMatrix::from_rows(&self.lambdas, n) * &IntegerMatrix::from_rows(&self.weights, n).transpose()
    }

    /// Indices `j` whose restricted weight vanishes.
    pub fn vanishing(&self) -> Vec<usize> {
        (0..self.restricted.len()).filter(|&j| self.restricted[j].iter().all(Zero::is_zero)).collect()
    }
}

pub fn tangent_data(pair: &CharacteristicPair, facet: &[VertexLabel], sub: &SubtorusSpec) -> Result<TangentData> {
    sub.check_len(pair)?;
    let mut idx: Vec<Vx> = facet
        .iter()
        .map(|l| pair.nerve.index_of(l).ok_or_else(|| Error::NotAFacet(facet.to_vec())))
        .collect::<Result<_>>()?;
    idx.sort_unstable();
    if pair.nerve.facet_indices().binary_search(&idx).is_err() {
        return Err(Error::NotAFacet(facet.to_vec()));
    }
    tangent_at(pair, &idx, sub)
}

fn tangent_at(pair: &CharacteristicPair, idx: &[Vx], sub: &SubtorusSpec) -> Result<TangentData> {
    let n = pair.n;
    let vertices = pair.nerve.labels_of(idx);
    let lambdas: Vec<Vec<BigInt>> = idx.iter().map(|&v| to_big(pair.lambda_at(v))).collect();
    if !is_unimodular_basis(&lambdas, n) {
        return Err(Error::StarConditionViolated(vertices));
    }
    // Rows of the weight matrix are the columns of Λ⁻¹.
    let inv = IntegerMatrix::from_rows(&lambdas, n).unimodular_inverse().expect("unimodular");
    let weights: Vec<Vec<BigInt>> = (0..n).map(|j| inv.column(j)).collect();
    let basis = sub.0.hyperplane_basis();
    let restricted = weights
        .iter()
        .map(|w| basis.iter().map(|b| crate::lattice::dot(w, b)).collect())
        .collect();
    Ok(TangentData { vertices, lambdas, weights, restricted })
}

/// Largest number of special vertices on one nerve facet.
fn max_special_on_facet(pair: &CharacteristicPair, sub: &SubtorusSpec) -> usize {
    let mask = special_mask(pair, sub);
    pair.nerve
        .facet_indices()
        .iter()
        .map(|f| f.iter().filter(|&&v| mask[v as usize]).count())
        .max()
        .unwrap_or(0)
}

/// No fixed point has `n − 1` characteristic vectors in `Π`.
pub fn has_isolated_fixed_points(pair: &CharacteristicPair, sub: &SubtorusSpec) -> bool {
    sub.check_len(pair).is_ok() && max_special_on_facet(pair, sub) + 1 < pair.n
}

/// Same property read off the tangent weights: every restricted weight is
/// nonzero at every fixed point.
pub fn isolated_by_weights(pair: &CharacteristicPair, sub: &SubtorusSpec) -> Result<bool> {
    for f in pair.nerve.facet_indices() {
        if !tangent_at(pair, f, sub)?.vanishing().is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Nonempty nerve faces `τ` for which `⟨λ(τ)⟩ ∩ Π` is not saturated in `Π`.
pub fn connected_stabilizer_failures(
    pair: &CharacteristicPair,
    sub: &SubtorusSpec,
) -> Result<Vec<Vec<VertexLabel>>> {
    sub.check_len(pair)?;
    let mut bad = Vec::new();
    for level in pair.nerve.faces_by_size().iter().skip(1) {
        for face in level {
            let vs: Vec<Vec<BigInt>> = face.iter().map(|&v| to_big(pair.lambda_at(v))).collect();
            let w = intersect_with_hyperplane(&vs, &sub.0)?;
            if !torsion_free_quotient(&w, &sub.0)? {
                bad.push(pair.nerve.labels_of(face));
            }
        }
    }
    Ok(bad)
}

pub fn has_connected_stabilizers(pair: &CharacteristicPair, sub: &SubtorusSpec) -> bool {
    connected_stabilizer_failures(pair, sub).map_or(false, |b| b.is_empty())
}

/// `j* = n − 2 − dim K_spec`: the largest `j` with the restricted action in
/// `j`-general position.
pub fn general_position_degree(pair: &CharacteristicPair, sub: &SubtorusSpec) -> Result<i64> {
    let k = kspec(pair, sub)?;
    Ok(pair.n as i64 - 2 - k.dim() as i64)
}

/// `j*` read pointwise: the largest `j` such that at every fixed point any
/// `n − j` characteristic vectors include one outside `Π`.
pub fn general_position_degree_local(pair: &CharacteristicPair, sub: &SubtorusSpec) -> Result<i64> {
    sub.check_len(pair)?;
    Ok(pair.n as i64 - 1 - max_special_on_facet(pair, sub) as i64)
}

/// On-disk form of a characteristic pair with its subtorus.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    pub n: usize,
    pub nerve: SimplicialComplex,
    pub lambda: Vec<LambdaEntry>,
    pub subtorus: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LambdaEntry {
    pub vertex: VertexLabel,
    pub value: Vec<i64>,
}

impl PairFile {
    pub fn new(pair: &CharacteristicPair, sub: &SubtorusSpec) -> Self {
        PairFile {
            n: pair.n,
            nerve: pair.nerve.clone(),
            lambda: pair
                .lambda_map()
                .into_iter()
                .map(|(vertex, value)| LambdaEntry { vertex, value })
                .collect(),
            subtorus: sub.0.to_i64(),
        }
    }

    pub fn into_parts(self) -> Result<(CharacteristicPair, SubtorusSpec)> {
        let mut map = BTreeMap::new();
        for e in self.lambda {
            if map.insert(e.vertex.clone(), e.value).is_some() {
                return Err(Error::DuplicateVertex(e.vertex));
            }
        }
        let pair = CharacteristicPair::new(self.n, self.nerve, map)?;
        let sub = SubtorusSpec::new(self.subtorus)?;
        sub.check_len(&pair)?;
        Ok((pair, sub))
    }
}
