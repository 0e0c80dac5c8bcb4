//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::BTreeSet;
use std::time::Instant;

use ellbott::cli::{analyze_input, ModelInput};
use ellbott::criteria::{decide_bott, decide_h1, BottState, H1State};
use ellbott::exactpoly::{Order, Place, UniPoly};
use ellbott::families::{build_summary, polarization_numbers, Census, FamilySpec, SurfaceSummary};
use ellbott::intersect::{intersection_number, CycleClass, SubvarietySpec};
use ellbott::localgeom::{
    jacobian_scheme_degree, restriction_rank, LocalEquation, SectionSpaceModel,
};
use ellbott::weierstrass::{
    classify_fibers, is_minimal, KodairaType, WeierstrassData, WeierstrassError,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn cusp_example() -> Check {
    for beta in 1..=3u32 {
        let w = WeierstrassData::cusp_example(beta).map_err(|e| e.to_string())?;
        let min = is_minimal(&w).map_err(|e| e.to_string())?;
        ensure!(
            min.minimal,
            "beta={beta}: not minimal at {:?}",
            min.offending
        );
        let census = classify_fibers(&w).map_err(|e| e.to_string())?;
        let at_t = census
            .fibers
            .iter()
            .find(|f| f.cluster.place == Place::Finite(UniPoly::t()))
            .ok_or(format!("beta={beta}: no fiber at (t)"))?;
        let got = (
            at_t.kodaira_type,
            at_t.cluster.lambda,
            at_t.cluster.mu,
            at_t.cluster.delta,
        );
        let want = (
            KodairaType::II,
            Order::Finite(4 * beta),
            Order::Finite(1),
            2,
        );
        ensure!(
            got == want,
            "beta={beta}: fiber at (t) is {got:?}, want {want:?}"
        );
        let report = analyze_input(
            ModelInput::Weierstrass {
                w,
                m: Some(11 * beta as i64),
            },
            None,
        )
        .map_err(|e| e.to_string())?;
        let bott = report.verdict.map(|v| v.bott);
        ensure!(
            bott == Some(BottState::Fails),
            "beta={beta}: analyze gave {bott:?}"
        );
    }
    Ok(
        "beta 1..=3: minimal, II at (t) with (4beta, 1, 2), Bott vanishing fails at m = 11beta"
            .into(),
    )
}

fn jacobian_degrees() -> Check {
    let types = [
        KodairaType::I(1),
        KodairaType::II,
        KodairaType::III,
        KodairaType::IV,
        KodairaType::I(2),
    ];
    let mut got = Vec::new();
    for t in types {
        let eq = LocalEquation::model(t).map_err(|e| e.to_string())?;
        got.push(jacobian_scheme_degree(&eq, 6).map_err(|e| e.to_string())?);
    }
    ensure!(got == [1, 2, 3, 4, 1], "degrees {got:?}");
    Ok(format!("I1, II, III, IV, node: {got:?}"))
}

fn census_sums() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b077);
    let (mut checked, mut non_minimal, mut non_reduced) = (0u32, 0u32, 0u32);
    let mut attempts = 0u32;
    while checked < 120 {
        attempts += 1;
        ensure!(
            attempts < 2000,
            "only {checked} minimal models after {attempts} draws"
        );
        let beta: u32 = rng.gen_range(1..=3);
        let mut coeffs = |n: u32| {
            UniPoly::from_ints(
                &(0..=n)
                    .map(|_| rng.gen_range(-5i64..=5))
                    .collect::<Vec<_>>(),
            )
        };
        let (lambda, mu) = (coeffs(4 * beta), coeffs(6 * beta));
        let Ok(w) = WeierstrassData::new(beta, lambda, mu) else {
            continue;
        };
        if !is_minimal(&w).map_err(|e| e.to_string())?.minimal {
            non_minimal += 1;
            continue;
        }
        let census = match classify_fibers(&w) {
            Ok(c) => c,
            Err(WeierstrassError::NonReducedFiber { .. }) => {
                non_reduced += 1;
                continue;
            }
            Err(e) => return Err(format!("draw {attempts}: {e}")),
        };
        let delta: u64 = census
            .fibers
            .iter()
            .map(|f| u64::from(f.count * f.cluster.delta))
            .sum();
        let euler: u64 = census
            .fibers
            .iter()
            .map(|f| u64::from(f.count * f.kodaira_type.euler_number()))
            .sum();
        let want = 12 * u64::from(beta);
        ensure!(
            delta == want && euler == want,
            "draw {attempts}: sums ({delta}, {euler}), want {want}"
        );
        checked += 1;
    }
    Ok(format!(
        "{checked} minimal models, sums equal 12beta ({non_minimal} non-minimal and {non_reduced} non-reduced draws skipped)"
    ))
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return if total >= 1 {
            vec![vec![total]]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 1..total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn bounded_splits(parts: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..parts {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (1..=max).map(move |d| {
                    let mut q = p.clone();
                    q.push(d);
                    q
                })
            })
            .collect();
    }
    out
}

fn restriction_suite() -> Check {
    let mut cases: Vec<(KodairaType, Vec<u32>, bool)> = Vec::new();
    for r in 2..=4 {
        cases.push((KodairaType::II, vec![r], true));
    }
    for r in 3..=5 {
        cases.extend(
            compositions(r, 2)
                .into_iter()
                .map(|d| (KodairaType::III, d, true)),
        );
    }
    for r in 4..=5 {
        cases.extend(
            compositions(r, 3)
                .into_iter()
                .map(|d| (KodairaType::IV, d, true)),
        );
    }
    for n in 1..=5 {
        cases.extend(
            bounded_splits(n as usize, 3)
                .into_iter()
                .map(|d| (KodairaType::I(n), d, true)),
        );
    }
    cases.push((KodairaType::II, vec![1], false));
    cases.push((KodairaType::III, vec![1, 1], false));
    cases.push((KodairaType::IV, vec![1, 1, 1], false));

    for (t, degrees, surjective) in &cases {
        let model = SectionSpaceModel::new(*t, degrees.clone()).map_err(|e| e.to_string())?;
        let got = restriction_rank(&model).map_err(|e| format!("{t} {degrees:?}: {e}"))?;
        let r: u32 = degrees.iter().sum();
        ensure!(
            got.h0_fiber == r as usize,
            "{t} {degrees:?}: h0_fiber {} != {r}",
            got.h0_fiber
        );
        if *surjective {
            ensure!(
                got.is_surjective(),
                "{t} {degrees:?}: not surjective {got:?}"
            );
        } else {
            let want = (r as usize, r as usize + 1);
            ensure!(
                (got.rank, got.h0_s0) == want && !got.is_surjective(),
                "{t} {degrees:?}: (rank, target) {:?}, want {want:?}",
                (got.rank, got.h0_s0)
            );
        }
    }
    Ok(format!("{} splits, 3 non-surjective", cases.len()))
}

fn intersections() -> Check {
    let e = CycleClass::d();
    let mut count = 0;
    for m in 1..=5i64 {
        let a = CycleClass::divisor(m, 1);
        for l in 1..=5u32 {
            let spec = SubvarietySpec::double_cover_p1xp1();
            let got = (
                intersection_number(&spec, &a, &e),
                intersection_number(&spec, &a, &a),
            );
            ensure!(
                got == (Ok(2), Ok(4 * m)),
                "double cover l={l} m={m}: {got:?}"
            );
            let fam = polarization_numbers(&FamilySpec::DoubleCover {
                l,
                m,
                declared: None,
            });
            ensure!(
                fam == Ok((2, 4 * m)),
                "double cover family l={l} m={m}: {fam:?}"
            );
            count += 1;
        }
        for x in 1..=5i64 {
            let spec = SubvarietySpec::hypersurface(x);
            let got = (
                intersection_number(&spec, &a, &e),
                intersection_number(&spec, &a, &a),
            );
            ensure!(
                got == (Ok(3), Ok(6 * m + x)),
                "hypersurface a={x} m={m}: {got:?}"
            );
            count += 1;
            for y in 1..=5i64 {
                let spec = SubvarietySpec::complete_intersection(x, y);
                let got = (
                    intersection_number(&spec, &a, &e),
                    intersection_number(&spec, &a, &a),
                );
                ensure!(
                    got == (Ok(4), Ok(2 * x + 2 * y + 8 * m)),
                    "complete intersection a={x} b={y} m={m}: {got:?}"
                );
                count += 1;
            }
        }
    }
    Ok(format!("{count} parameter choices"))
}

fn r1_boundaries() -> Check {
    let mut count = 0;
    for beta in 1..=3u32 {
        let bound = 21 * beta as i64 - 3;
        let without = Census::Declared([KodairaType::I(1)].into_iter().collect());
        let with = Census::Declared([KodairaType::I(1), KodairaType::II].into_iter().collect());
        for a_sq in -50..=21 * beta as i64 + 10 {
            let got = decide_h1(&SurfaceSummary::declared(beta, 1, a_sq, without.clone()))
                .map_err(|e| e.to_string())?
                .0;
            let want = if a_sq <= bound {
                H1State::Nonzero
            } else {
                H1State::Zero
            };
            ensure!(got == want, "beta={beta} A^2={a_sq} without II: {got:?}");
            let got = decide_h1(&SurfaceSummary::declared(beta, 1, a_sq, with.clone()))
                .map_err(|e| e.to_string())?
                .0;
            ensure!(
                got == H1State::Nonzero,
                "beta={beta} A^2={a_sq} with II: {got:?}"
            );
            count += 2;
        }
    }
    Ok(format!("{count} summaries, boundary at 21beta - 3"))
}

fn types(ts: &[KodairaType]) -> Option<BTreeSet<KodairaType>> {
    Some(ts.iter().copied().collect())
}

fn verdict(spec: FamilySpec) -> Result<BottState, String> {
    let s = build_summary(&spec).map_err(|e| e.to_string())?;
    decide_bott(&s).map(|v| v.bott).map_err(|e| e.to_string())
}

fn family_end_to_end() -> Check {
    use KodairaType::*;
    let cases = [
        (
            FamilySpec::DoubleCover {
                l: 1,
                m: 10,
                declared: types(&[I(1)]),
            },
            BottState::Holds,
        ),
        (
            FamilySpec::DoubleCover {
                l: 1,
                m: 10,
                declared: types(&[I(1), II, I(2)]),
            },
            BottState::Holds,
        ),
        (
            FamilySpec::DoubleCover {
                l: 1,
                m: 10,
                declared: types(&[I(1), III]),
            },
            BottState::Fails,
        ),
        (
            FamilySpec::Hypersurface {
                a: 1,
                m: 10,
                declared: types(&[I(1)]),
            },
            BottState::Holds,
        ),
        (
            FamilySpec::Hypersurface {
                a: 1,
                m: 10,
                declared: types(&[I(1), II, III, I(3)]),
            },
            BottState::Holds,
        ),
        (
            FamilySpec::Hypersurface {
                a: 1,
                m: 10,
                declared: types(&[I(1), IV]),
            },
            BottState::Fails,
        ),
        (
            FamilySpec::CompleteIntersection {
                a: 1,
                b: 1,
                m: 23,
                declared: None,
            },
            BottState::Holds,
        ),
        (
            FamilySpec::CompleteIntersection {
                a: 1,
                b: 1,
                m: 23,
                declared: types(&[I(1)]),
            },
            BottState::Holds,
        ),
        (
            FamilySpec::CompleteIntersection {
                a: 1,
                b: 1,
                m: 23,
                declared: types(&[I(1), II, III, IV, I(4)]),
            },
            BottState::Holds,
        ),
    ];
    let n = cases.len();
    for (spec, want) in cases {
        let label = format!("{spec:?}");
        let got = verdict(spec)?;
        ensure!(got == want, "{label}: {got:?}, want {want:?}");
    }
    Ok(format!("{n} family verdicts"))
}

fn chi_soundness() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc41_5011d);
    let all = [
        KodairaType::I(1),
        KodairaType::I(2),
        KodairaType::I(3),
        KodairaType::I(5),
        KodairaType::II,
        KodairaType::III,
        KodairaType::IV,
    ];
    let (mut zeros, mut rejected) = (0, 0);
    for _ in 0..1000 {
        let beta = rng.gen_range(0..=6u32);
        let r = rng.gen_range(1..=6u32);
        let a_sq = rng.gen_range(-100i64..=3000);
        let census = if rng.gen_bool(0.2) {
            Census::Unknown
        } else {
            Census::Declared(all.iter().copied().filter(|_| rng.gen_bool(0.3)).collect())
        };
        let s = SurfaceSummary::declared(beta, r, a_sq, census);
        match decide_h1(&s) {
            Ok((H1State::Zero, _)) => {
                zeros += 1;
                ensure!(
                    a_sq >= 10 * beta as i64,
                    "Zero with A^2 = {a_sq} < 10beta, beta = {beta}, r = {r}"
                );
            }
            Ok(_) => {}
            Err(_) => rejected += 1,
        }
    }
    Ok(format!(
        "1000 summaries, {zeros} vanishing verdicts, {rejected} inconsistent summaries rejected"
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1 cusp example", cusp_example),
        ("AC2 jacobian degrees", jacobian_degrees),
        ("AC3 census sums", census_sums),
        ("AC4 restriction ranks", restriction_suite),
        ("AC5 intersection numbers", intersections),
        ("AC6 r = 1 boundary", r1_boundaries),
        ("AC7 family verdicts", family_end_to_end),
        ("AC8 chi soundness", chi_soundness),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {name} ({secs:.2}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name} ({secs:.2}s): {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} of 8 criteria failed");
        std::process::exit(1);
    }
    println!("8 of 8 criteria passed");
}
