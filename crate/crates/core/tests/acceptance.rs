// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Tolerances and time limits are pinned below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use drg_distortion::certify::{
    class_certificate_ratio, compute_alpha, srg_bound, theorem1_bound, ClassMatrix,
};
use drg_distortion::exact_lp::faithful_lp;
use drg_distortion::graph_lab::{
    all_pairs_bfs, build_hamming, build_johnson, build_named, class_averages, embed_hamming, embed_johnson,
    expand_class_matrix, extract_intersection_array, faithful_project, matrix_certificate_ratio,
    measure_distortion, measure_distortion_gram, psd_min_eig, DistanceMatrix, ExplicitGraph, GramMatrix,
    DEFAULT_SEED, VERTEX_CAP,
};
use drg_distortion::scheme::{hamming_array, johnson_array, srg_array, IntersectionArray};
use drg_distortion::spectral::{eberlein, eigenvalues, full_spectrum, krawtchouk, Spectrum};
use rand::SeedableRng;
use rand_distr::{Distribution, StandardNormal};
use rand_xoshiro::SplitMix64;

const SRG_LIST: [(u64, u64, u64, u64); 6] = [
    (10, 3, 0, 1),
    (5, 2, 0, 1),
    (6, 3, 0, 3),
    (9, 4, 1, 2),
    (13, 6, 2, 3),
    (16, 5, 0, 2),
];

type Check = Result<String, String>;

fn hamming_grid() -> impl Iterator<Item = (u64, u64)> {
    (2..=5).flat_map(|q| (1..=6).map(move |n| (q, n)))
}

fn johnson_grid() -> impl Iterator<Item = (u64, u64)> {
    (2..=14).flat_map(|v| (1..=v / 2).map(move |n| (v, n)))
}

fn binom(n: u64, k: u64) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn spectrum(ia: &IntersectionArray) -> Result<Spectrum, String> {
    full_spectrum(ia).map_err(|e| format!("{ia}: {e}"))
}

/// Every instance of criteria 1, 2 and 5, with a name and its array.
fn all_instances() -> Vec<(String, IntersectionArray)> {
    let mut out = Vec::new();
    for (q, n) in hamming_grid() {
        out.push((format!("H({q},{n})"), hamming_array(q, n).unwrap()));
    }
    for (v, n) in johnson_grid() {
        out.push((format!("J({v},{n})"), johnson_array(v, n).unwrap()));
    }
    for (nu, k, l, m) in SRG_LIST {
        out.push((format!("SRG({nu},{k},{l},{m})"), srg_array(nu, k, l, m).unwrap()));
    }
    out
}

fn c1_hamming_distortion() -> Check {
    let mut count = 0;
    for (q, n) in hamming_grid() {
        let sp = spectrum(&hamming_array(q, n).unwrap())?;
        let bound = theorem1_bound(&sp).map_err(|e| e.to_string())?.bound_sq;
        let exact = faithful_lp(&sp).map_err(|e| e.to_string())?.c2_sq;
        let nf = n as f64;
        if (bound - nf).abs() > 1e-9 || (exact - nf).abs() > 1e-9 {
            return Err(format!("H({q},{n}): bound_sq {bound}, c2_sq {exact}, expected {n}"));
        }
        count += 1;
    }
    Ok(format!("{count} instances, bound_sq = c2_sq = n within 1e-9"))
}

fn c2_johnson_distortion() -> Check {
    let mut count = 0;
    for (v, n) in johnson_grid() {
        let sp = spectrum(&johnson_array(v, n).unwrap())?;
        let bound = theorem1_bound(&sp).map_err(|e| e.to_string())?.bound_sq;
        let exact = faithful_lp(&sp).map_err(|e| e.to_string())?.c2_sq;
        let nf = n as f64;
        if (bound - nf).abs() > 1e-9 || (exact - nf).abs() > 1e-9 {
            return Err(format!("J({v},{n}): bound_sq {bound}, c2_sq {exact}, expected {n}"));
        }
        count += 1;
    }
    Ok(format!("{count} instances, bound_sq = c2_sq = n within 1e-9"))
}

fn c3_hamming_alpha() -> Check {
    let mut worst: f64 = 0.0;
    for (q, n) in hamming_grid() {
        let sp = spectrum(&hamming_array(q, n).unwrap())?;
        let alpha = compute_alpha(&sp).map_err(|e| e.to_string())?.alpha;
        let want = 1.0 / ((q - 1) as f64).powi(n as i32 - 1);
        let err = rel_err(alpha, want);
        if err > 1e-12 {
            return Err(format!("H({q},{n}): alpha {alpha}, expected {want}"));
        }
        worst = worst.max(err);
    }
    Ok(format!("max relative error {worst:.1e} (limit 1e-12)"))
}

fn c4_johnson_alpha() -> Check {
    let mut worst: f64 = 0.0;
    for (v, n) in johnson_grid() {
        let sp = spectrum(&johnson_array(v, n).unwrap())?;
        let alpha = compute_alpha(&sp).map_err(|e| e.to_string())?.alpha;
        let want = v as f64 / (binom(v - n, n) + binom(v - n - 1, n - 1));
        let err = rel_err(alpha, want);
        if err > 1e-12 {
            return Err(format!("J({v},{n}): alpha {alpha}, expected {want}"));
        }
        worst = worst.max(err);
    }
    Ok(format!("max relative error {worst:.1e} (limit 1e-12)"))
}

fn c5_srg_closed_form() -> Check {
    let mut worst: f64 = 0.0;
    for (nu, k, l, m) in SRG_LIST {
        let closed = srg_bound(nu, k, l, m).map_err(|e| e.to_string())?;
        let sp = spectrum(&srg_array(nu, k, l, m).unwrap())?;
        let spectral = theorem1_bound(&sp).map_err(|e| e.to_string())?.bound_sq;
        let err = rel_err(closed, spectral);
        if err > 1e-9 {
            return Err(format!("SRG({nu},{k},{l},{m}): closed form {closed}, spectral {spectral}"));
        }
        worst = worst.max(err);
    }
    let petersen = srg_bound(10, 3, 0, 1).map_err(|e| e.to_string())?;
    if petersen != 2.0 {
        return Err(format!("Petersen closed form {petersen}, expected exactly 2"));
    }
    Ok(format!("6 parameter sets, max relative error {worst:.1e}; Petersen = 2 exactly"))
}

fn c6_tightness() -> Check {
    let mut gaps = Vec::new();
    let mut count = 0;
    let mut worst: f64 = 0.0;
    for (name, ia) in all_instances() {
        let sp = spectrum(&ia)?;
        let bound = theorem1_bound(&sp).map_err(|e| e.to_string())?.bound_sq;
        let exact = faithful_lp(&sp).map_err(|e| e.to_string())?.c2_sq;
        let gap = exact - bound;
        worst = worst.max(gap.abs());
        if gap.abs() > 1e-7 {
            gaps.push(format!("{name}: c2_sq {exact} - bound_sq {bound} = {gap:e}"));
        }
        count += 1;
    }
    for g in &gaps {
        println!("    DIAGNOSTIC nonzero gap: {g}");
    }
    if gaps.is_empty() {
        Ok(format!("{count} instances, max |gap| {worst:.1e} (limit 1e-7)"))
    } else {
        Err(format!("{} of {count} instances have gap above 1e-7", gaps.len()))
    }
}

fn check_embedding(name: &str, g: &ExplicitGraph, coords: &drg_distortion::graph_lab::Coordinates, n: u64) -> Check {
    let dm = all_pairs_bfs(g);
    let report = measure_distortion(&dm, coords).map_err(|e| e.to_string())?;
    let nf = n as f64;
    if (report.distortion - nf.sqrt()).abs() > 1e-9 {
        return Err(format!("{name}: distortion {}, expected sqrt({n})", report.distortion));
    }
    for x in 0..dm.n() {
        for y in x + 1..dm.n() {
            let i = dm.get(x, y) as f64;
            let norm = coords.squared_distance(x, y).sqrt();
            if (norm - (nf * i).sqrt()).abs() > 1e-12 {
                return Err(format!("{name}: |rho({x}) - rho({y})| = {norm}, expected sqrt({})", nf * i));
            }
        }
    }
    if report.most_expanded_distance != 1 || report.most_contracted_distance != n as usize {
        return Err(format!(
            "{name}: most expanded at {}, most contracted at {}",
            report.most_expanded_distance, report.most_contracted_distance
        ));
    }
    Ok(format!("{name} distortion {:.15}", report.distortion))
}

fn c7_explicit_embeddings() -> Check {
    let h = check_embedding(
        "H(3,3)",
        &build_hamming(3, 3).unwrap(),
        &embed_hamming(3, 3).unwrap(),
        3,
    )?;
    let j = check_embedding(
        "J(6,3)",
        &build_johnson(6, 3).unwrap(),
        &embed_johnson(6, 3).unwrap(),
        3,
    )?;
    Ok(format!("{h}; {j}"))
}

fn explicit_graph(name: &str) -> Option<ExplicitGraph> {
    let inner = |s: &str| -> Vec<u64> { s.split(',').map(|t| t.parse().unwrap()).collect() };
    let args = name.split_once('(')?.1.trim_end_matches(')');
    let p = inner(args);
    if name.starts_with('H') {
        if (p[0] as u128).pow(p[1] as u32) > VERTEX_CAP as u128 {
            return None;
        }
        build_hamming(p[0], p[1]).ok()
    } else if name.starts_with('J') {
        build_johnson(p[0], p[1]).ok()
    } else {
        let named = match (p[0], p[1], p[2], p[3]) {
            (10, 3, 0, 1) => "petersen",
            (5, 2, 0, 1) => "c5",
            (6, 3, 0, 3) => "k33",
            (9, 4, 1, 2) => "paley9",
            (13, 6, 2, 3) => "paley13",
            (16, 5, 0, 2) => "clebsch",
            _ => return None,
        };
        if named == "paley9" {
            // 9 is not prime; the rook's graph H(3,2) has these parameters
            return build_hamming(3, 2).ok();
        }
        build_named(named).ok()
    }
}

fn c8_certificates() -> Check {
    let mut checked = 0;
    let mut skipped_ratio = Vec::new();
    for (name, ia) in all_instances() {
        let Some(g) = explicit_graph(&name) else {
            continue;
        };
        let dm = all_pairs_bfs(&g);
        let sp = spectrum(&ia)?;
        let bound = theorem1_bound(&sp).map_err(|e| e.to_string())?;
        let cm = ClassMatrix::new(bound.certificate_coef.clone()).unwrap();
        let q = expand_class_matrix(&cm, &dm).map_err(|e| format!("{name}: {e}"))?;
        let norm = q.norm();
        let min_eig = psd_min_eig(&q).map_err(|e| format!("{name}: {e}"))?;
        if min_eig < -1e-9 * norm {
            return Err(format!("{name}: min eigenvalue {min_eig:e} below -1e-9 * {norm}"));
        }
        let max_row = q.row_sums().iter().fold(0.0f64, |m, s| m.max(s.abs()));
        if max_row > 1e-9 {
            return Err(format!("{name}: row sum {max_row:e} above 1e-9"));
        }
        checked += 1;
        if sp.diameter() == 1 {
            // Q_alpha is the zero matrix on K_n, so the ratio is 0/0
            if (bound.bound_sq - 1.0).abs() > 1e-9 || norm != 0.0 {
                return Err(format!("{name}: diameter 1 but bound_sq {}", bound.bound_sq));
            }
            skipped_ratio.push(name);
            continue;
        }
        let explicit = matrix_certificate_ratio(&q, &dm, 1e-9).map_err(|e| format!("{name}: {e}"))?;
        let classwise = class_certificate_ratio(&cm, &sp, 1e-9).map_err(|e| format!("{name}: {e}"))?;
        if rel_err(explicit, bound.bound_sq) > 1e-9 {
            return Err(format!("{name}: explicit ratio {explicit}, bound_sq {}", bound.bound_sq));
        }
        if rel_err(classwise, explicit) > 1e-9 {
            return Err(format!("{name}: classwise {classwise} vs explicit {explicit}"));
        }
    }
    println!(
        "    NOTE ratio comparison skipped on {} diameter-1 instances (zero certificate, bound_sq = 1 checked): {}",
        skipped_ratio.len(),
        skipped_ratio.join(" ")
    );
    Ok(format!("{checked} explicit instances: PSD, zero row sums, ratio = bound_sq"))
}

fn random_psd(n: usize, rng: &mut SplitMix64) -> GramMatrix {
    let x: Vec<f64> = (0..n * n).map(|_| StandardNormal.sample(rng)).collect();
    GramMatrix::from_fn(n, |i, j| (0..n).map(|t| x[i * n + t] * x[j * n + t]).sum())
}

fn projection_trials(name: &str, dm: &DistanceMatrix, rng: &mut SplitMix64) -> Result<f64, String> {
    let mut worst_gain: f64 = f64::INFINITY;
    for trial in 0..100 {
        let q = random_psd(dm.n(), rng);
        let before = measure_distortion_gram(dm, &q).map_err(|e| e.to_string())?.distortion;
        let cm = faithful_project(&q, dm).map_err(|e| e.to_string())?;
        let projected = expand_class_matrix(&cm, dm).map_err(|e| e.to_string())?;
        let after = measure_distortion_gram(dm, &projected).map_err(|e| e.to_string())?.distortion;
        if after > before * (1.0 + 1e-12) {
            return Err(format!("{name} trial {trial}: distortion {before} -> {after}"));
        }
        worst_gain = worst_gain.min(before - after);
        // each entry of the projection is the mean of q over its class
        let means = class_averages(&q, dm).map_err(|e| e.to_string())?;
        for x in 0..dm.n() {
            for y in 0..dm.n() {
                if (projected.get(x, y) - means.coef[dm.get(x, y)]).abs() > 1e-12 {
                    return Err(format!("{name} trial {trial}: entry ({x},{y}) is not its class mean"));
                }
            }
        }
        let again = faithful_project(&projected, dm).map_err(|e| e.to_string())?;
        for (a, b) in again.coef.iter().zip(&cm.coef) {
            if (a - b).abs() > 1e-12 {
                return Err(format!("{name} trial {trial}: projection not idempotent ({a} vs {b})"));
            }
        }
    }
    Ok(worst_gain)
}

fn c9_projection() -> Check {
    let mut rng = SplitMix64::seed_from_u64(DEFAULT_SEED);
    let petersen = all_pairs_bfs(&build_named("petersen").unwrap());
    let cube = all_pairs_bfs(&build_hamming(2, 4).unwrap());
    let a = projection_trials("Petersen", &petersen, &mut rng)?;
    let b = projection_trials("H(2,4)", &cube, &mut rng)?;
    Ok(format!(
        "200 seeded trials (SplitMix64 seed {DEFAULT_SEED:#x}); smallest distortion decrease {:.3e}",
        a.min(b)
    ))
}

fn c10_spectral() -> Check {
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-9 * b.abs().max(1.0);
    let mut count = 0;
    let mut check = |name: String, ia: IntersectionArray, theta: &dyn Fn(u64) -> f64, poly: &dyn Fn(u64, u64) -> f64| -> Result<(), String> {
        let got = eigenvalues(&ia).map_err(|e| format!("{name}: {e}"))?;
        for (j, &t) in got.iter().enumerate() {
            if (t - theta(j as u64)).abs() > 1e-10 {
                return Err(format!("{name}: theta_{j} = {t}, expected {}", theta(j as u64)));
            }
        }
        let sp = spectrum(&ia)?;
        let d = sp.diameter();
        for i in 0..=d {
            for j in 0..=d {
                let want = poly(i as u64, j as u64);
                if !close(sp.p[i][j], want) {
                    return Err(format!("{name}: P[{i}][{j}] = {}, expected {want}", sp.p[i][j]));
                }
            }
        }
        let mut total = 0.0;
        for (j, &m) in sp.m.iter().enumerate() {
            if (m - m.round()).abs() > 1e-6 {
                return Err(format!("{name}: multiplicity m_{j} = {m} is not integral"));
            }
            total += m.round();
        }
        if total != sp.n_vertices() as f64 {
            return Err(format!("{name}: multiplicities sum to {total}, not {}", sp.n_vertices()));
        }
        count += 1;
        Ok(())
    };
    for (q, n) in hamming_grid() {
        check(
            format!("H({q},{n})"),
            hamming_array(q, n).unwrap(),
            &|j| (n * (q - 1)) as f64 - (q * j) as f64,
            &|i, j| krawtchouk(q, n, i, j as f64),
        )?;
    }
    for (v, n) in johnson_grid() {
        check(
            format!("J({v},{n})"),
            johnson_array(v, n).unwrap(),
            &|j| (j * j) as f64 - ((v + 1) * j) as f64 + (n * (v - n)) as f64,
            &|i, j| eberlein(v, n, i, j as f64),
        )?;
    }
    Ok(format!(
        "{count} arrays: eigenvalues within 1e-10, P within 1e-9 relative (floor 1), integral multiplicities"
    ))
}

fn c11_round_trip() -> Check {
    let mut count = 0;
    let mut compare = |name: String, g: ExplicitGraph, want: IntersectionArray| -> Result<(), String> {
        let dm = all_pairs_bfs(&g);
        let got = extract_intersection_array(&g, &dm).map_err(|e| format!("{name}: {e}"))?;
        if got != want {
            return Err(format!("{name}: extracted {got}, constructor {want}"));
        }
        count += 1;
        Ok(())
    };
    for (q, n) in hamming_grid() {
        if (q as u128).pow(n as u32) <= VERTEX_CAP as u128 {
            compare(format!("H({q},{n})"), build_hamming(q, n).unwrap(), hamming_array(q, n).unwrap())?;
        }
    }
    for (v, n) in johnson_grid() {
        compare(format!("J({v},{n})"), build_johnson(v, n).unwrap(), johnson_array(v, n).unwrap())?;
    }
    for (name, params) in [
        ("petersen", (10, 3, 0, 1)),
        ("c5", (5, 2, 0, 1)),
        ("k33", (6, 3, 0, 3)),
        ("clebsch", (16, 5, 0, 2)),
    ] {
        let (nu, k, l, m) = params;
        compare(name.into(), build_named(name).unwrap(), srg_array(nu, k, l, m).unwrap())?;
    }
    for p in (5..=101u64).filter(|p| p % 4 == 1 && (2..*p).take_while(|d| d * d <= *p).all(|d| p % d != 0)) {
        let want = srg_array(p, (p - 1) / 2, (p - 5) / 4, (p - 1) / 4).unwrap();
        compare(format!("paley{p}"), build_named(&format!("paley{p}")).unwrap(), want)?;
    }
    Ok(format!("{count} explicit graphs reproduce their arrays"))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Duration, fn() -> Check); 11] = [
        (1, "Hamming distortion", Duration::from_secs(1), c1_hamming_distortion),
        (2, "Johnson distortion", Duration::from_secs(1), c2_johnson_distortion),
        (3, "Hamming alpha", Duration::from_secs(1), c3_hamming_alpha),
        (4, "Johnson alpha", Duration::from_secs(1), c4_johnson_alpha),
        (5, "SRG closed form", Duration::from_secs(1), c5_srg_closed_form),
        (6, "tightness", Duration::from_secs(5), c6_tightness),
        (7, "explicit embeddings", Duration::from_secs(2), c7_explicit_embeddings),
        (8, "certificate suite", Duration::from_secs(10), c8_certificates),
        (9, "faithful projection", Duration::from_secs(5), c9_projection),
        (10, "spectral cross-checks", Duration::from_secs(1), c10_spectral),
        (11, "round-trip oracle", Duration::from_secs(10), c11_round_trip),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(detail) if elapsed <= limit => format!("PASS {detail}"),
            Ok(detail) => format!("FAIL over time limit {limit:?}: {detail}"),
            Err(why) => format!("FAIL {why}"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!("criterion {id:>2} [{name}] {verdict} ({:.3} s)", elapsed.as_secs_f64());
    }
    println!("acceptance: {} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
