//! End-to-end acceptance run. Prints one line per criterion and exits
//! nonzero if any criterion fails or exceeds its time budget.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use qtorbit_core::catalog;
use qtorbit_core::charpair::*;
use qtorbit_core::complex::SimplicialComplex;
use qtorbit_core::homology::{groups_equal, reduced_cohomology, reduced_homology, AbelianGroup, GradedAbelianGroup};
use qtorbit_core::lattice::{is_unimodular_basis, smith_normal_form, IntegerMatrix};
use qtorbit_core::orbit::*;
use qtorbit_core::permutohedron::{label_subset, normal_vector, permutohedral_sphere, rado_contains_int, subset_label};
use qtorbit_core::sample;
use rand::Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// All 1-neighborly `L ≠ Δ` on `n ≤ 4` vertices, then 100 seeded random
/// ones on five vertices.
fn population() -> Vec<SimplicialComplex> {
    let mut out: Vec<SimplicialComplex> = (2..=4).flat_map(sample::all_neighborly).collect();
    let mut rng = sample::rng(2024);
    out.extend((0..100).map(|_| sample::random_neighborly(&mut rng, 5)));
    out
}

fn sphere_case() -> Outcome {
    for n in 3..=5 {
        let r = verify_theorem1(&SimplicialComplex::simplex_boundary(n), &OrbitOptions::default())
            .map_err(|e| e.to_string())?;
        let q = r.orbit_homology().ok_or("no orbit homology")?;
        ensure(*q == GradedAbelianGroup::sphere(n as i64 + 1), || format!("n = {n}: got {}", q.render_text()))?;
        ensure(r.j_star == n as i64 - 1, || format!("n = {n}: j* = {}", r.j_star))?;
        ensure(r.verified(), || format!("n = {n}: report not verified"))?;
    }
    Ok("∂Δⁿ⁻¹ gives a homology (n+1)-sphere with j* = n−1 for n = 3, 4, 5".into())
}

fn torsion_transport() -> Outcome {
    let l = catalog::rp2_6();
    let pair = build_lambda_hat(&l).map_err(|e| e.to_string())?;
    let sub = SubtorusSpec::standard(6);
    let q = orbit_homology_alexander(&pair, &sub).map_err(|e| e.to_string())?;
    let z2 = AbelianGroup::new(0, vec![BigInt::from(2)]);
    ensure(q == GradedAbelianGroup::new().with(4, z2), || format!("got {}", q.render_text()))?;
    ensure(groups_equal(&q, &reduced_homology(&l), 3), || "not H(RP²) shifted by 3".into())?;
    Ok("RP²₆ gives H̃₄(Q⁷) = Z/2 and nothing else".into())
}

fn route_agreement(pop: &[SimplicialComplex]) -> Outcome {
    for l in pop {
        let pair = build_lambda_hat(l).map_err(|e| e.to_string())?;
        let sub = SubtorusSpec::standard(pair.n());
        let a = orbit_homology_alexander(&pair, &sub).map_err(|e| e.to_string())?;
        let b = orbit_homology_direct(&pair, &sub).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("routes differ on {l:?}"))?;
        ensure(groups_equal(&a, &reduced_homology(l), 3), || format!("shift fails on {l:?}"))?;
        ensure((0..=2).all(|i| a.get(i).is_trivial()), || format!("low degrees on {l:?}"))?;
    }
    Ok(format!("{} complexes, both routes equal H(L) shifted by 3", pop.len()))
}

fn three_claims(pop: &[SimplicialComplex]) -> Outcome {
    for l in pop {
        let pair = build_lambda_hat(l).map_err(|e| e.to_string())?;
        let sub = SubtorusSpec::standard(pair.n());
        ensure(check_star_condition(&pair), || format!("(*) fails on {l:?}"))?;
        ensure(has_isolated_fixed_points(&pair, &sub), || format!("isolation fails on {l:?}"))?;
        ensure(has_connected_stabilizers(&pair, &sub), || format!("connectedness fails on {l:?}"))?;
    }
    let pair = build_lambda_hat(&SimplicialComplex::points(3)).map_err(|e| e.to_string())?;
    let sub = SubtorusSpec::standard(3);
    let star = pair.with_lambda(&subset_label(&[1, 2]), vec![2, 2, 0]).map_err(|e| e.to_string())?;
    ensure(!check_star_condition(&star), || "star mutation not caught".into())?;
    let iso = pair.with_lambda(&subset_label(&[1]), vec![1, 0, 0]).map_err(|e| e.to_string())?;
    ensure(!has_isolated_fixed_points(&iso, &sub), || "isolation mutation not caught".into())?;
    let conn = pair.with_lambda(&subset_label(&[2, 3]), vec![2, 0, 0]).map_err(|e| e.to_string())?;
    ensure(!has_connected_stabilizers(&conn, &sub), || "connectedness mutation not caught".into())?;
    Ok(format!("{} pairs pass all three checks; 3 mutations rejected", pop.len()))
}

fn j_general(pop: &[SimplicialComplex]) -> Outcome {
    let opts = OrbitOptions::default();
    let r = verify_theorem5(&SimplicialComplex::points(2), 3, &opts).map_err(|e| e.to_string())?;
    ensure(r.orbit_homology() == Some(&GradedAbelianGroup::sphere(5)), || "S⁰, j = 3: not S⁵".into())?;
    ensure(r.j_star == 3, || format!("S⁰, j = 3: j* = {}", r.j_star))?;
    ensure(r.verdicts.theorem5_holds == Some(true), || "S⁰, j = 3: verdict false".into())?;
    let r = verify_theorem5(&SimplicialComplex::points(3), 2, &opts).map_err(|e| e.to_string())?;
    let expect = GradedAbelianGroup::new().with(4, AbelianGroup::free(2));
    ensure(r.orbit_homology() == Some(&expect), || "3 points, j = 2: wrong homology".into())?;
    ensure(r.j_star >= 2, || format!("3 points, j = 2: j* = {}", r.j_star))?;
    ensure(r.verdicts.theorem5_holds == Some(true), || "3 points, j = 2: verdict false".into())?;
    let mut checked = 0;
    for l in pop {
        let pair = build_lambda_hat(l).map_err(|e| e.to_string())?;
        let js = general_position_degree(&pair, &SubtorusSpec::standard(pair.n())).map_err(|e| e.to_string())?;
        for j in 1..l.n_vertices() {
            ensure(l.is_j_neighborly(j) == (js >= j as i64), || format!("j = {j} on {l:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("both seeds verified; neighborliness matches j* in {checked} cases"))
}

fn alexander_duality() -> Outcome {
    let mut rng = sample::rng(6);
    let (mut done, mut ghosts) = (0, 0);
    while done < 200 {
        let n = rng.gen_range(2..=7);
        let l = sample::random_complex(&mut rng, n, 6, n);
        if l.is_full_simplex() {
            continue;
        }
        let dual = l.alexander_dual().map_err(|e| e.to_string())?;
        ghosts += usize::from(!dual.ghost_vertices().is_empty());
        let h = reduced_homology(&l);
        let co = reduced_cohomology(&dual);
        let n = n as i64;
        ensure((-1..=n).all(|i| h.get(i) == co.get(n - 3 - i)), || format!("duality fails on {l:?}"))?;
        done += 1;
    }
    ensure(ghosts > 0, || "no dual had ghost vertices".into())?;
    Ok(format!("200 complexes, {ghosts} duals with ghost vertices"))
}

fn linear_algebra() -> Outcome {
    let mut rng = sample::rng(7);
    for _ in 0..1000 {
        let (m, n) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let rows: Vec<Vec<i64>> = (0..m).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let a = IntegerMatrix::from_rows(&rows, n);
        let s = smith_normal_form(&a);
        ensure(&(&s.u * &a) * &s.v == s.d, || format!("UAV ≠ D for {rows:?}"))?;
        ensure(s.u.determinant().abs().is_one() && s.v.determinant().abs().is_one(), || "not unimodular".into())?;
        let f = s.invariant_factors();
        ensure(s.d.is_diagonal() && f.windows(2).all(|w| w[1].is_multiple_of(&w[0])), || "divisibility".into())?;
    }
    let mut done = 0;
    while done < 100 {
        let n = rng.gen_range(1..=8);
        let l = sample::random_complex(&mut rng, n, 8, 5);
        if common::all_faces(&l).len() > 200 {
            continue;
        }
        let h = reduced_homology(&l);
        let betti = common::rational_betti(&l);
        ensure(betti.iter().enumerate().all(|(i, &b)| h.rank(i as i64 - 1) == b), || format!("Betti mismatch on {l:?}"))?;
        done += 1;
    }
    Ok("1000 Smith forms checked; 100 complexes match the rational oracle".into())
}

fn permutohedral() -> Outcome {
    for n in 2..=6 {
        let s = permutohedral_sphere(n).map_err(|e| e.to_string())?.complex;
        ensure(s.n_vertices() == (1 << n) - 2, || format!("n = {n}: vertex count"))?;
        ensure(s.facet_indices().len() == (1..=n).product::<usize>(), || format!("n = {n}: facet count"))?;
    }
    for n in 2..=5 {
        let s = permutohedral_sphere(n).map_err(|e| e.to_string())?.complex;
        for f in s.facets() {
            let normals: Vec<Vec<BigInt>> = f
                .iter()
                .map(|l| normal_vector(&label_subset(l).unwrap(), n).unwrap().into_iter().map(BigInt::from).collect())
                .collect();
            ensure(is_unimodular_basis(&normals, n - 1), || format!("chain {f:?} not unimodular"))?;
        }
        let b: Vec<i64> = (1..=n as i64).collect();
        for x in b.iter().copied().permutations(n) {
            ensure(rado_contains_int(&x, &b).map_err(|e| e.to_string())?, || format!("{x:?} rejected"))?;
            // Raising the largest coordinate breaks its singleton bound.
            let (hi, lo) = (x.iter().position(|&v| v == n as i64).unwrap(), x.iter().position(|&v| v == 1).unwrap());
            let mut out = x.clone();
            out[hi] += 1;
            out[lo] -= 1;
            ensure(!rado_contains_int(&out, &b).unwrap(), || format!("{out:?} accepted"))?;
        }
    }
    Ok("counts for n ≤ 6; unimodular chains and Rado vertices for n ≤ 5".into())
}

fn main() -> ExitCode {
    let pop = population();
    let criteria: Vec<(&str, Duration, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("sphere case", Duration::from_secs(10), Box::new(sphere_case)),
        ("torsion transport", Duration::from_secs(30), Box::new(torsion_transport)),
        ("route agreement", Duration::from_secs(300), Box::new(|| route_agreement(&pop))),
        ("three claims", Duration::from_secs(60), Box::new(|| three_claims(&pop))),
        ("j-general position", Duration::from_secs(60), Box::new(|| j_general(&pop))),
        ("combinatorial Alexander duality", Duration::from_secs(120), Box::new(alexander_duality)),
        ("linear-algebra contracts", Duration::from_secs(120), Box::new(linear_algebra)),
        ("permutohedral combinatorics", Duration::from_secs(60), Box::new(permutohedral)),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > *budget => Err(format!("{msg}, but over the {budget:?} budget")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {}: PASS  {name} ({:.1}s): {msg}", i + 1, took.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({:.1}s): {msg}", i + 1, took.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
