//! Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact.

use std::thread;

use gspheres::catalog::{self, NamedSphere, LEVEL_VERTEX_CAP};
use gspheres::enumeration::{self, InvariantVectors};
use gspheres::graphs::{self, DEFAULT_ALPHA_CAP, STMT_FLAG_G2, STMT_G_I_ALPHA};
use gspheres::sequences::{self, Condition};
use gspheres::stress::{self, Embedding};
use gspheres::{s24, Error};

/// Integer invariants are compared with zero tolerance.
const TOLERANCE: i64 = 0;
const SEED: u64 = 1;

fn close(a: i64, b: i64) -> bool {
    (a - b).abs() <= TOLERANCE
}

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib(e: Error) -> String {
    e.to_string()
}

/// Octahedron, cross-polytopes up to d = 6, K(2,4), K(2,5) and the suspended cycle joins.
fn small_catalog(all: &[NamedSphere]) -> Vec<&NamedSphere> {
    all.iter()
        .filter(|s| {
            matches!(
                s.name.as_str(),
                "cross-2" | "cross-3" | "cross-4" | "cross-5" | "cross-6" | "K(2,4)" | "K(2,5)"
            ) || s.name.starts_with("S0*C")
        })
        .collect()
}

fn criterion_1(all: &[NamedSphere]) -> Outcome {
    for d in 2..=8 {
        let s = catalog::boundary_simplex(d).map_err(lib)?;
        let h = InvariantVectors::of(&s.complex).map_err(lib)?.h;
        ensure(h == vec![1; d + 1], || format!("bd-simplex-{d}: h = {h:?}"))?;
    }
    for s in all {
        let inv = InvariantVectors::of(&s.complex).map_err(lib)?;
        let back = enumeration::f_from_h(&inv.h, inv.d).map_err(lib)?;
        ensure(back == inv.f, || {
            format!("{}: f -> h -> f gives {back:?}, not {:?}", s.name, inv.f)
        })?;
        ensure(s.matches_expected().map_err(lib)?, || {
            format!("{}: invariants differ from the h-product oracle", s.name)
        })?;
    }
    Ok(())
}

fn criterion_2(all: &[NamedSphere]) -> Outcome {
    for s in all {
        let inv = InvariantVectors::of(&s.complex).map_err(lib)?;
        ensure(enumeration::check_dehn_sommerville(&inv.h), || {
            format!("{}: h = {:?} not symmetric", s.name, inv.h)
        })?;
        if inv.d % 2 == 1 {
            let top = inv.g_at(inv.d.div_ceil(2));
            ensure(close(top, 0), || format!("{}: g_(d+1)/2 = {top}", s.name))?;
        }
    }
    Ok(())
}

fn criterion_3(all: &[NamedSphere]) -> Outcome {
    for s in small_catalog(all) {
        let d = s.complex.rank();
        for k in 0..=(d - 1) / 2 {
            let r = enumeration::mcmullen_residual(&s.complex, k).map_err(lib)?;
            ensure(close(r, 0), || {
                format!("{}: McMullen residual {r} at k = {k}", s.name)
            })?;
            let r = enumeration::gamma_mcmullen_residual(&s.complex, k).map_err(lib)?;
            ensure(close(r, 0), || {
                format!("{}: γ-residual {r} at i = {k}", s.name)
            })?;
        }
    }
    Ok(())
}

fn criterion_4(all: &[NamedSphere]) -> Outcome {
    let spheres = small_catalog(all);
    let results: Vec<Outcome> = thread::scope(|scope| {
        let handles: Vec<_> = spheres
            .iter()
            .map(|s| {
                scope.spawn(move || {
                    let inv = InvariantVectors::of(&s.complex).map_err(lib)?;
                    let degrees: Vec<usize> = (1..=inv.d / 2).collect();
                    let dims =
                        stress::certified_generic_dims(&s.complex, SEED, &degrees).map_err(lib)?;
                    let g: Vec<i64> = degrees.iter().map(|&k| inv.g_at(k)).collect();
                    let dims: Vec<i64> = dims.into_iter().map(|x| x as i64).collect();
                    ensure(dims == g, || {
                        format!("{}: dim S_k = {dims:?}, g = {g:?}", s.name)
                    })
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    results.into_iter().collect::<Outcome>()?;

    let s = catalog::counterexample_polytope(1).map_err(lib)?;
    let e = s
        .natural_coords
        .as_ref()
        .ok_or("counterexample-1 has no coordinates")?;
    let dims = stress::stress_dims(&s.complex, e).map_err(lib)?;
    ensure(dims == [2, 3, 1], || {
        format!("counterexample-1 natural dims {dims:?}")
    })
}

fn criterion_5(all: &[NamedSphere]) -> Outcome {
    let results: Vec<Outcome> = thread::scope(|scope| {
        let handles: Vec<_> = all
            .iter()
            .map(|s| {
                scope.spawn(move || {
                    let d = s.complex.rank();
                    let e = Embedding::generic(&s.complex, SEED);
                    let below = d.saturating_sub(1) / 2;
                    let socle = stress::socle_dims_below(&s.complex, &e, below).map_err(lib)?;
                    let m = s.complex.missing_face_counts();
                    for (k, &have) in socle.iter().enumerate() {
                        let want = m.get(d - k).copied().unwrap_or(0);
                        ensure(have == want, || {
                            format!("{}: socle_{k} = {have}, m_(d-k) = {want}", s.name)
                        })?;
                    }
                    Ok(())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    results.into_iter().collect::<Outcome>()?;

    let k = catalog::build_k(2, 5).map_err(lib)?;
    let ut = enumeration::u_tilde(&k.complex).ok_or("K(2,4) has no missing faces")?;
    ensure(ut == 2, || format!("K(2,4): u~ = {ut}"))?;
    let e = Embedding::generic(&k.complex, SEED);
    let v = stress::is_level(&k.complex, &e, ut).map_err(lib)?;
    ensure(v.holds, || {
        format!("K(2,4) not level up to {ut}: {:?}", v.failures)
    })
}

fn criterion_6() -> Outcome {
    let r = catalog::verify_counterexample_level(3, 1, SEED, LEVEL_VERTEX_CAP).map_err(lib)?;
    ensure(r.name == "K(2,5)", || format!("built {}", r.name))?;
    ensure(r.g == [1, 2, 3, 1], || format!("g = {:?}", r.g))?;
    ensure(r.formula_matches, || {
        format!("g = {:?}, formula {:?}", r.g, r.formula)
    })?;
    ensure(close(r.g_u, 1), || format!("g_u = {}", r.g_u))?;
    ensure(close(r.g[1], 2) && close(r.g[r.u - 1], 3), || {
        format!("g_1 = {}, g_(u-1) = {}", r.g[1], r.g[r.u - 1])
    })?;
    ensure(!r.level_conditions.holds, || {
        "level conditions accepted".into()
    })?;
    ensure(
        r.level_conditions.failure(Condition::Symmetry).is_some(),
        || "no symmetry failure".into(),
    )
}

fn criterion_7() -> Outcome {
    let r = catalog::verify_counterexample_support(1).map_err(lib)?;
    ensure(r.face_supported, || "f is not face supported".into())?;
    ensure(
        r.operator_equations == 7 && r.operator_equations_hold,
        || {
            format!(
                "{} operator equations, hold = {}",
                r.operator_equations, r.operator_equations_hold
            )
        },
    )?;
    ensure(
        r.stress_dim == Some(1) && r.spans_stress_space == Some(true),
        || {
            format!(
                "dim S_3 = {:?}, spans = {:?}",
                r.stress_dim, r.spans_stress_space
            )
        },
    )?;
    ensure(r.coefficient == "0", || {
        format!("coefficient {}", r.coefficient)
    })?;
    ensure(r.unsupported_faces == 27 && r.candidate_faces == 27, || {
        format!(
            "{} of {} faces unsupported",
            r.unsupported_faces, r.candidate_faces
        )
    })?;
    ensure(
        r.derivative_span == Some(2) && close(r.g_u_minus_1, 3),
        || {
            format!(
                "derivative span {:?}, g_2 = {}",
                r.derivative_span, r.g_u_minus_1
            )
        },
    )
}

fn criterion_8(all: &[NamedSphere]) -> Outcome {
    let k24 = catalog::build_k(2, 5).map_err(lib)?.complex;
    let mut seen = Vec::new();
    for s in all {
        if s24::require_s24(&s.complex).is_err() {
            continue;
        }
        let b = s24::verify_theorem_main_s24(&s.complex).map_err(lib)?;
        ensure(b.holds && b.weak_holds, || {
            format!(
                "{}: g2 = {}, bounds {} and {}",
                s.name, b.g2, b.bound, b.weak_bound
            )
        })?;
        ensure(b.tight == s24::is_isomorphic(&s.complex, &k24), || {
            format!("{}: tight = {}", s.name, b.tight)
        })?;
        seen.push(s.name.as_str());
    }
    ensure(seen.contains(&"K(2,4)") && seen.len() > 1, || {
        format!("S(2,4) spheres checked: {seen:?}")
    })
}

fn criterion_9(all: &[NamedSphere]) -> Outcome {
    let (mut flag_rows, mut alpha_rows) = (0, 0);
    for s in all {
        let r = match graphs::verify_alpha_inequalities(&s.complex, DEFAULT_ALPHA_CAP) {
            Ok(r) => r,
            Err(Error::CapExceeded { .. }) => continue,
            Err(e) => return Err(lib(e)),
        };
        ensure(r.all_hold(), || {
            format!(
                "{}: {:?}",
                s.name,
                r.checks
                    .iter()
                    .filter(|c| c.holds == Some(false))
                    .collect::<Vec<_>>()
            )
        })?;
        alpha_rows += r
            .applied()
            .filter(|c| c.statement == STMT_G_I_ALPHA)
            .count();
        if s.complex.is_flag() && r.d >= 5 {
            let row = r
                .applied()
                .find(|c| c.statement == STMT_FLAG_G2)
                .ok_or_else(|| format!("{}: flag row skipped", s.name))?;
            flag_rows += 1;
            if s.name.starts_with("cross-") {
                let d = r.d as i64;
                ensure(
                    close(row.lhs, d * (d - 3) / 2) && close(row.rhs, (d - 4) * 2),
                    || format!("{}: g2 = {} vs {}", s.name, row.lhs, row.rhs),
                )?;
            }
        }
    }
    ensure(flag_rows > 0 && alpha_rows > 0, || {
        format!("{alpha_rows} g_i >= alpha rows, {flag_rows} flag rows")
    })
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// `a^<i>` by taking the largest binomial that fits at each step.
fn greedy_upper(mut a: u64, i: u64) -> u64 {
    let mut total = 0;
    let mut j = i;
    while a > 0 && j > 0 {
        let mut n = j;
        while binom(n + 1, j) <= a {
            n += 1;
        }
        a -= binom(n, j);
        total += binom(n + 1, j + 1);
        j -= 1;
    }
    total
}

fn criterion_10(all: &[NamedSphere]) -> Outcome {
    for a in 0..=50 {
        for i in 1..=6 {
            let (lib_value, oracle) =
                (sequences::macaulay_upper(a, i as usize), greedy_upper(a, i));
            ensure(lib_value == oracle, || {
                format!("{a}^<{i}>: {lib_value} vs {oracle}")
            })?;
        }
    }
    ensure(!sequences::is_m_sequence(&[1, 2, 4]).holds, || {
        "(1,2,4) accepted".into()
    })?;
    for s in all {
        let inv = InvariantVectors::of(&s.complex).map_err(lib)?;
        let g: Vec<u64> = inv
            .g
            .iter()
            .map(|&x| u64::try_from(x).map_err(|_| format!("{}: g = {:?}", s.name, inv.g)))
            .collect::<Result<_, _>>()?;
        let v = sequences::is_m_sequence(&g);
        ensure(v.holds, || {
            format!("{}: g = {g:?} rejected: {:?}", s.name, v.failures)
        })?;
        if let Some(ut) = enumeration::u_tilde(&s.complex) {
            let v = sequences::corollary_level_g_check(&g, ut);
            ensure(v.holds, || {
                format!("{}: truncation at {ut} fails: {:?}", s.name, v.failures)
            })?;
        }
    }
    Ok(())
}

fn main() {
    let all = catalog::catalog().expect("catalog builds");
    let criteria: [(&str, &dyn Fn() -> Outcome); 10] = [
        ("h of bd-simplex and f/h round trip", &|| criterion_1(&all)),
        ("Dehn-Sommerville symmetry", &|| criterion_2(&all)),
        ("McMullen and gamma residuals vanish", &|| criterion_3(&all)),
        ("stress dimensions equal g_k", &|| criterion_4(&all)),
        ("socle dimensions equal missing-face counts", &|| {
            criterion_5(&all)
        }),
        ("non-level g-vector of K(2,5)", &criterion_6),
        ("unsupported face-supported stress, m = 1", &criterion_7),
        ("g2 lower bound on S(2,4)", &|| criterion_8(&all)),
        ("independence-number bounds", &|| criterion_9(&all)),
        ("M-sequence and level checks", &|| criterion_10(&all)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({ms} ms): {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
