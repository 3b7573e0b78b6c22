//! One test per acceptance criterion. Each prints a single `PASS`/`FAIL`
//! line straight to standard output so it shows without `--nocapture`.

use std::collections::BTreeMap;
use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use quartic_core::blocks::floor_log;
use quartic_core::oracle::{
    brute_assign, brute_distinct_quartics, brute_extreme_occurrences, constant_grid, corpus, is_thick, random_grid,
    same_inventory, triangle_grid, CorpusGrid,
};
use quartic_core::thick::candidate_set;
use quartic_core::thin::thin_at;
use quartic_core::{count_quartics, enumerate, CanonicalPair, Grid, GridIndex, Mode, Options};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn report(id: u32, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    writeln!(out, "criterion {id}: {verdict} {detail}").unwrap();
    out.flush().unwrap();
}

fn thin_corpus() -> Vec<CorpusGrid> {
    corpus(2, 200, 4, 16)
}

fn thick_corpus() -> Vec<CorpusGrid> {
    corpus(3, 200, 4, 24)
}

#[test]
fn criterion_1_oracle_equivalence() {
    let start = Instant::now();
    let grids = corpus(1, 500, 4, 24);
    let failures: Vec<String> = grids
        .iter()
        .filter(|cg| {
            let want = brute_distinct_quartics(&cg.grid, 32).unwrap();
            let got = enumerate(&cg.grid, &Options::default()).unwrap().quartics;
            !same_inventory(&cg.grid, &got, &want)
        })
        .map(|cg| cg.name.clone())
        .collect();
    let pass = failures.is_empty();
    report(1, pass, &format!("{} grids, {} mismatches, {:.1?}", grids.len(), failures.len(), start.elapsed()));
    assert!(pass, "mismatches: {failures:?}");
}

#[test]
fn criterion_2_constant_grids() {
    let got: Vec<(usize, usize)> = [4usize, 8, 16, 32, 64].iter().map(|&n| (n, count_quartics(&constant_grid(n, n)))).collect();
    let pass = got.iter().all(|&(n, c)| c == (n / 2) * (n / 2));
    report(2, pass, &format!("{got:?}"));
    assert!(pass);
}

#[test]
fn criterion_3_triangle_grids() {
    let mut details = Vec::new();
    let mut pass = true;
    for n in [6usize, 8, 12] {
        let g = triangle_grid(n);
        let zero = g.get(0, 0);
        let extreme = brute_extreme_occurrences(&g, 32)
            .unwrap()
            .into_iter()
            .filter(|e| {
                let q = e.quartic;
                q.height == 2 && q.width == 2 && g.block(e.row, e.col, 2, 2).iter().flatten().all(|&x| x == zero)
            })
            .count();
        let same = same_inventory(&g, &enumerate(&g, &Options::default()).unwrap().quartics, &brute_distinct_quartics(&g, 32).unwrap());
        pass &= extreme == n - 2 && same;
        details.push(format!("n={n}: {extreme} extreme, sets {}", if same { "equal" } else { "differ" }));
    }
    report(3, pass, &details.join("; "));
    assert!(pass);
}

#[test]
fn criterion_4_thin_bound() {
    let (mut oracle_max, mut engine_max) = (0, 0);
    for cg in thin_corpus() {
        let g = &cg.grid;
        let mut per: BTreeMap<(usize, usize, CanonicalPair), usize> = BTreeMap::new();
        for e in brute_extreme_occurrences(g, 32).unwrap() {
            let q = e.quartic;
            if !is_thick(&g.block(e.row, e.col, q.height, q.width)) {
                *per.entry((e.row, e.col, CanonicalPair::of(q.height, q.width))).or_default() += 1;
            }
        }
        oracle_max = oracle_max.max(per.values().copied().max().unwrap_or(0));
        let ix = GridIndex::build(g);
        for view in [ix.view(), ix.transposed()] {
            for i in 0..view.rows() {
                for j in 0..view.cols() {
                    for (_, found) in thin_at(&view, i, j) {
                        engine_max = engine_max.max(found.len());
                    }
                }
            }
        }
    }
    let pass = oracle_max <= 10 && engine_max <= 10;
    report(4, pass, &format!("max thin extreme per (position, class): oracle {oracle_max}, engine {engine_max}"));
    assert!(pass);
}

#[test]
fn criterion_5_unique_root_per_class() {
    let mut worst = 0;
    let mut anchors = 0;
    for cg in thick_corpus() {
        for (_, roots) in brute_assign(&cg.grid, 32).unwrap() {
            anchors += 1;
            let mut per: BTreeMap<CanonicalPair, usize> = BTreeMap::new();
            for &(h, w) in &roots {
                *per.entry(CanonicalPair::of(h, w)).or_default() += 1;
            }
            worst = worst.max(per.values().copied().max().unwrap_or(0));
        }
    }
    let pass = worst <= 1;
    report(5, pass, &format!("{anchors} anchors, max roots per class {worst}"));
    assert!(pass);
}

#[test]
fn criterion_6_candidate_superset() {
    let grids = thick_corpus();
    let mut missing = 0;
    let mut ratios = [0f64; 2];
    let mut largest = 0;
    for (k, cg) in grids.iter().enumerate() {
        let g = &cg.grid;
        let assign = brute_assign(g, 32).unwrap();
        let ix = GridIndex::build(g);
        let view = ix.view();
        let levels = (floor_log(g.rows().max(g.cols())) + 1) as f64;
        for i in 0..g.rows() {
            for j in 0..g.cols() {
                let cs = candidate_set(&view, i, j, Mode::Reference);
                largest = largest.max(cs.pairs.len());
                let half = &mut ratios[(2 * k) / grids.len()];
                *half = half.max(cs.pairs.len() as f64 / levels);
                if let Some(roots) = assign.get(&(i, j)) {
                    missing += roots.iter().filter(|&&(h, w)| !cs.pairs.contains(&CanonicalPair::of(h, w))).count();
                }
            }
        }
    }
    let c = ratios[0].max(ratios[1]);
    let stable = ratios[0] <= 2.0 * ratios[1] && ratios[1] <= 2.0 * ratios[0];
    let pass = missing == 0 && stable && c <= C_BOUND;
    report(
        6,
        pass,
        &format!(
            "{missing} assigned classes missing; c = {c:.2} (halves {:.2} / {:.2}), largest set {largest}",
            ratios[0], ratios[1]
        ),
    );
    assert!(pass);
}

/// Largest accepted `|pairs| / (floor(log n) + 1)`.
const C_BOUND: f64 = 8.0;

#[test]
fn criterion_7_runs_below_length() {
    let (mut strings, mut worst) = (0usize, 0f64);
    let mut pass = true;
    for cg in corpus(4, 200, 4, 24) {
        let ix = GridIndex::build(&cg.grid);
        for (_, _, _, s) in ix.all() {
            strings += 1;
            pass &= s.runs().len() < s.len();
            worst = worst.max(s.runs().len() as f64 / s.len() as f64);
        }
    }
    report(7, pass, &format!("{strings} metastrings, max runs/length {worst:.3}"));
    assert!(pass);
}

fn best_of(g: &Grid, tries: usize) -> Duration {
    (0..tries)
        .map(|_| {
            let start = Instant::now();
            enumerate(g, &Options { threads: 1, mode: Mode::Reference }).unwrap();
            start.elapsed()
        })
        .min()
        .unwrap()
}

#[test]
fn criterion_8_performance() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let small = random_grid(&mut rng, 256, 256, 2);
    let large = random_grid(&mut rng, 512, 512, 2);
    let t256 = best_of(&small, 3);
    let t512 = best_of(&large, 3);
    let ratio = t512.as_secs_f64() / t256.as_secs_f64();
    let pass = t256 < Duration::from_secs(60) && ratio <= 10.0;
    let within = if ratio <= 6.0 { "within 6" } else { "above 6" };
    report(8, pass, &format!("256: {t256:.2?}, 512: {t512:.2?}, ratio {ratio:.2} ({within})"));
    assert!(pass);
}

#[test]
fn criterion_9_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let mut differing = Vec::new();
    for (k, cg) in corpus(9, 50, 4, 24).iter().enumerate() {
        let path = dir.path().join(format!("g{k}.txt"));
        std::fs::write(&path, cg.grid.to_int_text()).unwrap();
        let list = |threads: &str| {
            let o = Command::new(env!("CARGO_BIN_EXE_quartic"))
                .args(["list", "--threads", threads, path.to_str().unwrap()])
                .output()
                .unwrap();
            assert!(o.status.success());
            o.stdout
        };
        if list("1") != list("4") {
            differing.push(cg.name.clone());
        }
    }
    let pass = differing.is_empty();
    report(9, pass, &format!("50 grids, {} differ between 1 and 4 threads", differing.len()));
    assert!(pass, "{differing:?}");
}
