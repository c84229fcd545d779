//! Homology of the orbit space `Qⁿ⁺¹ = X²ⁿ / Tⁿ⁻¹` by two independent
//! routes, and end-to-end verification reports.
//!
//! Route (a) dualizes the special subcomplex: `H̃ᵢ(Q) ≅ H̃ⁿ⁻ⁱ(K_spec)`.
//! Route (b) builds a simplicial model of the non-special part `Y_non` of
//! the polytope boundary (the complement of `K_spec` in the nerve sphere)
//! and double-suspends it: `H̃ᵢ(Q) ≅ H̃ᵢ₋₂(Y_non)`.

use serde::Serialize;

use crate::charpair::{
    build_lambda_hat, check_star_condition, connected_stabilizer_failures, general_position_degree,
    has_isolated_fixed_points, isolated_by_weights, kspec, CharacteristicPair, SubtorusSpec,
};
use crate::complex::{FVector, SimplicialComplex, VertexLabel, Vx};
use crate::error::{Error, Result};
use crate::homology::{groups_equal, reduced_cohomology, reduced_homology, GradedAbelianGroup};

fn require_hypotheses(pair: &CharacteristicPair, sub: &SubtorusSpec) -> Result<()> {
    if !has_isolated_fixed_points(pair, sub) {
        return Err(Error::HypothesisFailed("fixed points of the subtorus are not isolated".into()));
    }
    if !connected_stabilizer_failures(pair, sub)?.is_empty() {
        return Err(Error::HypothesisFailed("stabilizers of the subtorus are not connected".into()));
    }
    Ok(())
}

/// Route (a): `H̃ᵢ(Q) := H̃ⁿ⁻ⁱ(K_spec)` for `0 ≤ i ≤ n + 1`.
pub fn orbit_homology_alexander(pair: &CharacteristicPair, sub: &SubtorusSpec) -> Result<GradedAbelianGroup> {
    require_hypotheses(pair, sub)?;
    Ok(alexander_route(pair, sub)?.1)
}

fn alexander_route(pair: &CharacteristicPair, sub: &SubtorusSpec) -> Result<(SimplicialComplex, GradedAbelianGroup)> {
    let k = kspec(pair, sub)?;
    let n = pair.n() as i64;
    let mut h = GradedAbelianGroup::new();
    for (deg, g) in reduced_cohomology(&k).iter() {
        let i = n - deg;
        debug_assert!((0..=n + 1).contains(&i), "cohomology of K_spec outside [−1, n]");
        h.set(i, g.clone());
    }
    Ok((k, h))
}

/// Full subcomplex of the subdivided nerve on the barycenters of faces that
/// are not in `K_spec`: the complement of `K_spec` in the nerve sphere, up
/// to homotopy.
pub fn ynon_model(pair: &CharacteristicPair, sub: &SubtorusSpec) -> Result<SimplicialComplex> {
    let special: Vec<VertexLabel> = crate::charpair::special_vertices(pair, sub)?;
    let sd = pair.nerve().barycentric_subdivision();
    let mut keep = vec![None; sd.n_vertices()];
    let mut ground = Vec::new();
    for (i, l) in sd.ground().iter().enumerate() {
        let VertexLabel::Bary(members) = l else { unreachable!("subdivision vertices are barycenters") };
        if members.iter().any(|m| special.binary_search(m).is_err()) {
            keep[i] = Some(ground.len() as Vx);
            ground.push(l.clone());
        }
    }
    Ok(sd.restrict_indexed(ground, &keep))
}

/// Route (b): `H̃ᵢ(Q) := H̃ᵢ(Σ² Y_non)`.
pub fn orbit_homology_direct(pair: &CharacteristicPair, sub: &SubtorusSpec) -> Result<GradedAbelianGroup> {
    require_hypotheses(pair, sub)?;
    direct_route(pair, sub)
}

fn direct_route(pair: &CharacteristicPair, sub: &SubtorusSpec) -> Result<GradedAbelianGroup> {
    let y = ynon_model(pair, sub)?;
    Ok(reduced_homology(&y.suspension(2)))
}

/// Knobs for [`verify_theorem1`] and [`verify_theorem5`].
#[derive(Clone, Debug)]
pub struct OrbitOptions {
    /// Subtorus covector; `None` means `(0, …, 0, 1)`.
    pub subtorus: Option<Vec<i64>>,
    /// Route (b) runs only for `n` up to this bound.
    pub direct_max_n: usize,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions { subtorus: None, direct_max_n: 5 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportInput {
    #[serde(rename = "L")]
    pub l: SimplicialComplex,
    pub n: usize,
    #[serde(rename = "M")]
    pub m: Option<SimplicialComplex>,
    pub j: Option<u32>,
    pub subtorus: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairSummary {
    pub nerve_f: FVector,
    pub special_vertices: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Checks {
    pub star_condition: bool,
    pub isolated_fixed_points: bool,
    pub isolated_by_weights: bool,
    pub connected_stabilizers: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct KspecSummary {
    pub dim: isize,
    pub f: FVector,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyTables {
    #[serde(rename = "L")]
    pub l: GradedAbelianGroup,
    pub alexander: Option<GradedAbelianGroup>,
    pub direct: Option<GradedAbelianGroup>,
    /// Homology of `Σ³L`.
    #[serde(rename = "sigma3_L")]
    pub sigma3_l: GradedAbelianGroup,
    /// Homology of `Σʲ⁺²M`, for the `j`-general variant.
    #[serde(rename = "sigma_j2_M", skip_serializing_if = "Option::is_none")]
    pub sigma_j2_m: Option<GradedAbelianGroup>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdicts {
    /// `None` when route (b) was skipped.
    pub routes_agree: Option<bool>,
    /// `H̃ᵢ₊₃(Q) ≅ H̃ᵢ(L)` for all `i`, and `H̃₀ = H̃₁ = H̃₂ = 0`.
    pub theorem1_holds: bool,
    pub vanishing_low_degrees: bool,
    /// `H̃ᵢ(Q) = 0` for `i ≤ j* + 1`.
    pub vanishing_through_j_star: bool,
    /// Homology of `Q` equals the homology of `Σ³L`.
    pub sigma3_homology_matches: bool,
    pub theorem5_holds: Option<bool>,
}

/// Full verification record; serializes with a stable key order.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub input: ReportInput,
    pub pair: PairSummary,
    pub checks: Checks,
    pub kspec: KspecSummary,
    pub j_star: i64,
    pub homology: HomologyTables,
    pub verdicts: Verdicts,
}

impl OrbitReport {
    /// Every check and every computed verdict is true.
    pub fn verified(&self) -> bool {
        let c = &self.checks;
        let v = &self.verdicts;
        c.star_condition
            && c.isolated_fixed_points
            && c.isolated_by_weights
            && c.connected_stabilizers
            && v.routes_agree != Some(false)
            && v.theorem1_holds
            && v.vanishing_low_degrees
            && v.vanishing_through_j_star
            && v.sigma3_homology_matches
            && v.theorem5_holds != Some(false)
    }

    /// The orbit-space homology used for the verdicts (route (a)).
    pub fn orbit_homology(&self) -> Option<&GradedAbelianGroup> {
        self.homology.alexander.as_ref()
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("n = {}, subtorus = {:?}\n", self.input.n, self.input.subtorus));
        if let Some(j) = self.input.j {
            s.push_str(&format!("j = {j} (L = s^{}(M))\n", j - 1));
        }
        let c = &self.checks;
        s.push_str(&format!(
            "checks: star={} isolated={} isolated(weights)={} connected={}\n",
            c.star_condition, c.isolated_fixed_points, c.isolated_by_weights, c.connected_stabilizers
        ));
        s.push_str(&format!("K_spec: dim {} f = {:?}\nj* = {}\n", self.kspec.dim, self.kspec.f.0, self.j_star));
        s.push_str("homology of L:\n");
        s.push_str(&indent(&self.homology.l.render_text()));
        match &self.homology.alexander {
            Some(h) => {
                s.push_str("homology of Q (Alexander route):\n");
                s.push_str(&indent(&h.render_text()));
            }
            None => s.push_str("homology of Q: not computed (hypotheses failed)\n"),
        }
        match &self.homology.direct {
            Some(h) => {
                s.push_str("homology of Q (direct route):\n");
                s.push_str(&indent(&h.render_text()));
            }
            None => s.push_str("direct route: skipped\n"),
        }
        s.push_str("homology of Σ³L:\n");
        s.push_str(&indent(&self.homology.sigma3_l.render_text()));
        let v = &self.verdicts;
        s.push_str(&format!(
            "verdicts: routes_agree={} theorem1={} vanishing(0..2)={} vanishing(..j*+1)={} sigma3={}",
            v.routes_agree.map_or("skipped".to_string(), |b| b.to_string()),
            v.theorem1_holds,
            v.vanishing_low_degrees,
            v.vanishing_through_j_star,
            v.sigma3_homology_matches
        ));
        if let Some(t) = v.theorem5_holds {
            s.push_str(&format!(" theorem5={t}"));
        }
        s.push('\n');
        s.push_str(if self.verified() { "VERIFIED\n" } else { "NOT VERIFIED\n" });
        s
    }
}

fn indent(t: &str) -> String {
    t.lines().map(|l| format!("  {l}\n")).collect()
}

fn subtorus_for(n: usize, opts: &OrbitOptions) -> Result<SubtorusSpec> {
    match &opts.subtorus {
        None => Ok(SubtorusSpec::standard(n)),
        Some(p) if p.len() != n => Err(Error::LengthMismatch { expected: n, got: p.len() }),
        Some(p) => SubtorusSpec::new(p.clone()),
    }
}

/// Builds the pair for `L`, runs every hypothesis check, computes both
/// routes and `H̃(Σ³L)`, and records the verdicts.
pub fn verify_theorem1(l: &SimplicialComplex, opts: &OrbitOptions) -> Result<OrbitReport> {
    verify(l, None, opts)
}

/// `L := s^{j−1}(M)`; verifies Theorem-1 data for `L` plus `j* ≥ j` and
/// `H̃(Q) ≅ H̃(Σʲ⁺²M)`.
pub fn verify_theorem5(m: &SimplicialComplex, j: u32, opts: &OrbitOptions) -> Result<OrbitReport> {
    if j == 0 {
        return Err(Error::InvalidArgument("j must be at least 1".into()));
    }
    let l = m.s_operation(j - 1)?;
    verify(&l, Some((m, j)), opts)
}

fn verify(l: &SimplicialComplex, seed: Option<(&SimplicialComplex, u32)>, opts: &OrbitOptions) -> Result<OrbitReport> {
    let pair = build_lambda_hat(l)?;
    let n = pair.n();
    let sub = subtorus_for(n, opts)?;

    let star = check_star_condition(&pair);
    let isolated = has_isolated_fixed_points(&pair, &sub);
    let by_weights = star && isolated_by_weights(&pair, &sub)?;
    let connected = connected_stabilizer_failures(&pair, &sub)?.is_empty();
    let hypotheses = isolated && connected;

    let (k, alexander) = alexander_route(&pair, &sub)?;
    let alexander = hypotheses.then_some(alexander);
    let direct = if hypotheses && n <= opts.direct_max_n { Some(direct_route(&pair, &sub)?) } else { None };
    let j_star = general_position_degree(&pair, &sub)?;

    let h_l = reduced_homology(l);
    let sigma3 = reduced_homology(&l.suspension(3));
    let sigma_m = seed.map(|(m, j)| reduced_homology(&m.suspension(j + 2)));

    let routes_agree = match (&alexander, &direct) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let (low, through, t1, s3) = match &alexander {
        Some(q) => {
            let low = (0..=2).all(|i| q.get(i).is_trivial());
            let through = (0..=j_star + 1).all(|i| q.get(i).is_trivial());
            (low, through, low && groups_equal(q, &h_l, 3), q == &sigma3)
        }
        None => (false, false, false, false),
    };
    let theorem5 = seed.map(|(_, j)| {
        t1 && j_star >= j as i64 && alexander.as_ref().zip(sigma_m.as_ref()).map_or(false, |(q, s)| q == s)
    });

    Ok(OrbitReport {
        input: ReportInput {
            l: l.clone(),
            n,
            m: seed.map(|(m, _)| m.clone()),
            j: seed.map(|(_, j)| j),
            subtorus: sub.covector().to_i64(),
        },
        pair: PairSummary {
            nerve_f: pair.nerve().f_vector(),
            special_vertices: crate::charpair::special_vertices(&pair, &sub)?.len(),
        },
        checks: Checks {
            star_condition: star,
            isolated_fixed_points: isolated,
            isolated_by_weights: by_weights,
            connected_stabilizers: connected,
        },
        kspec: KspecSummary { dim: k.dim(), f: k.f_vector() },
        j_star,
        homology: HomologyTables { l: h_l, alexander, direct, sigma3_l: sigma3, sigma_j2_m: sigma_m },
        verdicts: Verdicts {
            routes_agree,
            theorem1_holds: t1,
            vanishing_low_degrees: low,
            vanishing_through_j_star: through,
            sigma3_homology_matches: s3,
            theorem5_holds: theorem5,
        },
    })
}
