//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line.

use lspace::calculus::{random_blowups, random_decoration, random_site};
use lspace::classify::{classify_torus, is_lspace_oracle, linking_det};
use lspace::rationality::fundamental_cycle_with;
use lspace::surgery::{surgery_graph, torus_resolution, ResolutionData};
use lspace::{
    atlas, blow_down, Error, normalize, poincare_graph, random_smooth_decorated, is_lspace_star, is_rational, H1Order,
    MoveSite, PlumbingGraph, SurgerySpec, Verdict, VertexId,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

const TORI: [(i64, i64); 4] = [(2, 3), (2, 5), (3, 4), (3, 5)];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], summary: String) -> Outcome {
    let detail = match failures.first() {
        None => summary,
        Some(first) => format!("{summary}; {} failure(s), first: {first}", failures.len()),
    };
    Outcome {
        pass: failures.is_empty(),
        detail,
    }
}

fn spec(p: i64, q: i64, d: &[i64]) -> SurgerySpec {
    SurgerySpec::new(p, q, d.to_vec()).unwrap()
}

fn oracle(spec: &SurgerySpec) -> Verdict {
    let res = torus_resolution(spec.p, spec.q, spec.r()).unwrap();
    is_lspace_oracle(&surgery_graph(&res, &spec.d).unwrap()).unwrap()
}

/// Laplace expansion along the first row.
fn cofactor_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * cofactor_det(&minor)
        })
        .sum()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for (p, q) in TORI {
        let pq = p * q;
        for d in pq - 15..=pq + 15 {
            if d == pq - 1 || d == pq + 1 {
                continue;
            }
            let got = classify_torus(&spec(p, q, &[d]));
            let want = if d == 0 {
                Verdict::NotQHS
            } else if d >= pq - p - q {
                Verdict::LSpace
            } else {
                Verdict::NotLSpace
            };
            checked += 1;
            if got != want {
                failures.push(format!("T({p},{q}) d={d}: {got} != {want}"));
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 1.0 {
        failures.push(format!("took {elapsed:.2}s"));
    }
    outcome(&failures, format!("{checked} coefficients in {elapsed:.3}s"))
}

/// Criterion 2 also yields the homology cross-check used by criterion 8.
fn criterion_2(h1_failures: &mut Vec<String>, h1_checked: &mut usize) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cells = 0;
    for (p, q) in TORI {
        let pq = p * q;
        let range: Vec<i64> = (pq - 10..=pq + 10).filter(|d| (d - pq).abs() != 1).collect();
        for r in [2usize, 3] {
            let res = torus_resolution(p, q, r).unwrap();
            let mut d = vec![0; r];
            let mut index = vec![0usize; r];
            loop {
                for i in 0..r {
                    d[i] = range[index[i]];
                }
                let s = spec(p, q, &d);
                let graph = surgery_graph(&res, &d).unwrap();
                let classifier = classify_torus(&s);
                let oracle = is_lspace_oracle(&graph).unwrap();
                cells += 1;
                if classifier != oracle || oracle == Verdict::Unknown {
                    failures.push(format!("T({p},{q}) d={d:?}: classifier {classifier}, oracle {oracle}"));
                }
                let h1 = graph.h1_order();
                if h1 != H1Order::from_determinant(linking_det(&s)) {
                    h1_failures.push(format!("T({p},{q}) d={d:?}: h1 {h1}, linking det {}", linking_det(&s)));
                }
                *h1_checked += 1;

                let mut i = 0;
                while i < r {
                    index[i] += 1;
                    if index[i] < range.len() {
                        break;
                    }
                    index[i] = 0;
                    i += 1;
                }
                if i == r {
                    break;
                }
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 60.0 {
        failures.push(format!("took {elapsed:.1}s"));
    }
    outcome(&failures, format!("{cells} cells agree in {elapsed:.1}s"))
}

fn criterion_3() -> Outcome {
    let (lo, hi) = (-6i64, 12i64);
    let grid = atlas(2, 3, lo, hi, false).unwrap();
    let mut failures = Vec::new();
    let mut expected_pixels = Vec::new();
    for d1 in lo..=hi {
        for d2 in lo..=hi {
            let (k1, k2) = (d1 - 6, d2 - 6);
            let det = d1 * d2 - 36;
            let want = if k1.abs() == 1 || k2.abs() == 1 {
                Verdict::BoundaryCase
            } else if (k1 == 0) != (k2 == 0) || (k1 >= 2 && k2 >= 2) || (k1 <= -2 && k2 <= -2 && k1.max(k2) >= -5) {
                Verdict::LSpace
            } else if det == 0 {
                Verdict::NotQHS
            } else {
                Verdict::NotLSpace
            };
            let got = grid.cell(d1, d2).unwrap().verdict;
            if got != want {
                failures.push(format!("({d1},{d2}): {got} != {want}"));
            }
            expected_pixels.push(match want {
                Verdict::LSpace => 160u8,
                Verdict::NotLSpace => 255,
                Verdict::NotQHS => 0,
                Verdict::BoundaryCase => 64,
                Verdict::Unknown => 32,
            });
        }
    }
    if grid.cell(6, 6).unwrap().verdict != Verdict::NotQHS {
        failures.push("(6,6) is not NOT_QHS".into());
    }

    let pgm = grid.to_pgm();
    let body: Vec<&str> = pgm.lines().filter(|l| !l.starts_with('#')).collect();
    let side = (hi - lo + 1) as usize;
    if body.first() != Some(&"P2") || body.get(1) != Some(&format!("{side} {side}").as_str()) || body.get(2) != Some(&"255")
    {
        failures.push(format!("bad PGM header {:?}", &body[..body.len().min(3)]));
    }
    let pixels: Vec<u8> = body.iter().skip(3).flat_map(|l| l.split_whitespace()).map(|t| t.parse().unwrap()).collect();
    if pixels != expected_pixels {
        failures.push("PGM pixels differ from mask".into());
    }
    outcome(&failures, format!("{}x{} grid and PGM match mask", side, side))
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    for seed in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(10_000 + seed);
        let steps = rng.gen_range(0..=12);
        let arrows = rng.gen_range(1..=3);
        let dg = random_smooth_decorated(seed, steps, arrows);
        let res = ResolutionData::from_decorated(dg).unwrap();
        let d: Vec<i64> = res
            .decorated
            .arrow_sites()
            .iter()
            .map(|&v| res.own_multiplicity(v).unwrap() + rng.gen_range(1..=5))
            .collect();
        let graph = surgery_graph(&res, &d).unwrap();
        let ok = normalize(&graph).and_then(|n| Ok(n.is_negative_definite() && is_rational(&n)?));
        match ok {
            Ok(true) => {}
            Ok(false) => failures.push(format!("seed {seed}: normalized graph not negative definite rational")),
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    outcome(&failures, "200 seeds".into())
}

fn random_star(rng: &mut ChaCha8Rng) -> PlumbingGraph {
    let legs: Vec<Vec<i64>> = (0..rng.gen_range(3..=5))
        .map(|_| (0..rng.gen_range(1..=3)).map(|_| -rng.gen_range(2..=6)).collect())
        .collect();
    let legs: Vec<&[i64]> = legs.iter().map(Vec::as_slice).collect();
    PlumbingGraph::star(-rng.gen_range(1..=5), &legs)
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut failures = Vec::new();
    let (mut count, mut rational) = (0, 0);
    while count < 500 {
        let g = random_star(&mut rng);
        if !g.is_negative_definite() {
            continue;
        }
        count += 1;
        let r = is_rational(&g).unwrap();
        let ls = is_lspace_star(&g).unwrap() == Verdict::LSpace;
        rational += r as usize;
        if r != ls {
            failures.push(format!("{:?}: rational {r}, L-space {ls}", g.weighted_vertices().collect::<Vec<_>>()));
        }
    }
    outcome(&failures, format!("500 stars, {rational} rational"))
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let range = -6i64..=12;
    for t in range.clone() {
        for d in [vec![6, 6], vec![6, 6, t], vec![6, t, 6], vec![t, 6, 6]] {
            let s = spec(2, 3, &d);
            let v = oracle(&s);
            if linking_det(&s) != 0 || v != Verdict::NotQHS {
                failures.push(format!("d={d:?}: det {}, oracle {v}", linking_det(&s)));
            }
        }
    }
    for d1 in [5, 7] {
        for d2 in range.clone() {
            let v = oracle(&spec(2, 3, &[d1, d2]));
            if v != Verdict::LSpace {
                failures.push(format!("d=({d1},{d2}): oracle {v}"));
            }
        }
    }
    for t in range.filter(|t| *t != 5 && *t != 7) {
        let v = oracle(&spec(2, 3, &[7, 5, t]));
        let want = classify_torus(&spec(2, 3, &[t]));
        if v != want {
            failures.push(format!("d=(7,5,{t}): oracle {v}, knot surgery {want}"));
        }
    }
    outcome(&failures, "zero-determinant, pq±1 and reduction checks".into())
}

fn random_tree(rng: &mut ChaCha8Rng, n: usize, weight: impl Fn(&mut ChaCha8Rng, bool) -> i64) -> PlumbingGraph {
    let mut parents = vec![None];
    for i in 1..n {
        parents.push(Some(rng.gen_range(0..i)));
    }
    let mut valency = vec![0usize; n];
    for (i, p) in parents.iter().enumerate() {
        if let Some(p) = *p {
            valency[i] += 1;
            valency[p] += 1;
        }
    }
    let vertices: Vec<(u32, i64)> = (0..n).map(|i| (i as u32, weight(rng, valency[i] <= 1))).collect();
    let edges: Vec<(u32, u32)> = parents
        .iter()
        .enumerate()
        .filter_map(|(i, p)| p.map(|p| (p as u32, i as u32)))
        .collect();
    PlumbingGraph::from_parts(vertices, edges).unwrap()
}

fn random_moves(g: &mut PlumbingGraph, rng: &mut ChaCha8Rng, count: usize) -> Result<(), String> {
    let h1 = g.h1_order();
    for _ in 0..count {
        let down: Vec<VertexId> = g
            .vertices()
            .filter(|&v| g.weight(v).unwrap().abs() == 1 && g.valency(v) <= 2)
            .collect();
        if !down.is_empty() && rng.gen_bool(0.4) {
            let v = *down.choose(rng).unwrap();
            *g = blow_down(g, v).map_err(|e| e.to_string())?;
        } else {
            let site: MoveSite = random_site(g, rng).unwrap_or(MoveSite::AtVertex(VertexId(0)));
            if g.is_empty() {
                g.add_vertex(VertexId(0), -1).unwrap();
                continue;
            }
            g.blow_up(site).map_err(|e| e.to_string())?;
        }
        if g.h1_order() != h1 {
            return Err(format!("h1 changed from {h1} to {}", g.h1_order()));
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let (mut normalized, mut refused) = (0, 0);
    for seed in 0..1000u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(70_000 + seed);
        let n = rng.gen_range(1..=6);

        // leaves may be positive, interior vertices stay non-positive
        let g0 = random_tree(&mut rng, n, |r, leaf| if leaf { r.gen_range(-4..=3) } else { r.gen_range(-4..=0) });
        let rows: Vec<Vec<i128>> = g0
            .intersection_matrix()
            .rows()
            .into_iter()
            .map(|row| row.into_iter().map(i128::from).collect())
            .collect();
        if g0.determinant() != cofactor_det(&rows) {
            failures.push(format!("seed {seed}: Bareiss {} != cofactor {}", g0.determinant(), cofactor_det(&rows)));
        }

        let mut g = g0.clone();
        let moves = rng.gen_range(1..=8);
        if let Err(e) = random_moves(&mut g, &mut rng, moves) {
            failures.push(format!("seed {seed}: {e}"));
            continue;
        }
        match normalize(&g) {
            Ok(n) if n.h1_order() == g0.h1_order() => normalized += 1,
            Ok(n) => failures.push(format!("seed {seed}: normalize changed h1 {} -> {}", g0.h1_order(), n.h1_order())),
            // outside the class normalize accepts; not an invariance violation
            Err(Error::PositiveInterior { .. }) => refused += 1,
            Err(e) => failures.push(format!("seed {seed}: normalize failed: {e}")),
        }

        let mut nd = random_tree(&mut rng, n, |r, _| -r.gen_range(3..=6));
        random_blowups(&mut nd, rng.gen_range(0..=6), &mut rng);
        let mut r1 = ChaCha8Rng::seed_from_u64(seed);
        let mut r2 = ChaCha8Rng::seed_from_u64(seed + 1);
        let z1 = fundamental_cycle_with(&nd, |c| r1.gen_range(0..c.len()));
        let z2 = fundamental_cycle_with(&nd, |c| r2.gen_range(0..c.len()));
        match (z1, z2) {
            (Ok(a), Ok(b)) if a == b => {}
            (a, b) => failures.push(format!("seed {seed}: Laufer orders disagree: {a:?} vs {b:?}")),
        }
    }
    outcome(
        &failures,
        format!("1000 graph/move pairs, normalize checked on {normalized}, {refused} refused with a positive interior vertex"),
    )
}

fn criterion_8(h1_failures: &[String], h1_checked: usize) -> Outcome {
    let mut failures: Vec<String> = h1_failures.to_vec();
    let known = [
        ("E8", poincare_graph(), Verdict::LSpace),
        ("star(-1;-2,-3,-7)", PlumbingGraph::star(-1, &[&[-2], &[-3], &[-7]]), Verdict::NotLSpace),
        ("star(-1;-2,-3,-5)", PlumbingGraph::star(-1, &[&[-2], &[-3], &[-5]]), Verdict::LSpace),
    ];
    for (name, g, want) in known {
        let v = is_lspace_oracle(&g).unwrap();
        if v != want || g.h1_order() != H1Order::Finite(1) {
            failures.push(format!("{name}: {v}, h1 {}", g.h1_order()));
        }
    }
    outcome(&failures, format!("3 manifolds, {h1_checked} homology cross-checks"))
}

fn criterion_9() -> Outcome {
    let mut failures = Vec::new();
    for seed in 0..50u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(90_000 + seed);
        let mut g = poincare_graph();
        random_blowups(&mut g, 5, &mut rng);
        let arrows = rng.gen_range(1..=2);
        let res = ResolutionData::from_decorated(random_decoration(g, arrows, &mut rng)).unwrap();
        let d: Vec<i64> = res
            .decorated
            .arrow_sites()
            .iter()
            .map(|&v| res.own_multiplicity(v).unwrap() + rng.gen_range(1..=3))
            .collect();
        match is_lspace_oracle(&surgery_graph(&res, &d).unwrap()) {
            Ok(Verdict::LSpace) => {}
            Ok(v) => failures.push(format!("seed {seed}: {v}")),
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    outcome(&failures, "50 runs".into())
}

fn main() {
    let mut h1_failures = Vec::new();
    let mut h1_checked = 0;
    let results = [
        ("1 knot surgery half-line", criterion_1()),
        ("2 classifier vs oracle", criterion_2(&mut h1_failures, &mut h1_checked)),
        ("3 (4,6) atlas and PGM", criterion_3()),
        ("4 positive surgery on smooth graphs", criterion_4()),
        ("5 rationality vs Seifert test", criterion_5()),
        ("6 degenerate coefficients", criterion_6()),
        ("7 move invariance", criterion_7()),
        ("8 known manifolds and homology", criterion_8(&h1_failures, h1_checked)),
        ("9 large surgery on E8 blow-ups", criterion_9()),
    ];
    let mut all = true;
    for (name, o) in &results {
        println!("{} criterion {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        all &= o.pass;
    }
    if !all {
        std::process::exit(1);
    }
}
