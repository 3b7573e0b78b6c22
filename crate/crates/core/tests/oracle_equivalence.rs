use quartic_core::oracle::{brute_distinct_quartics, corpus, random_grid, same_inventory};
use quartic_core::{enumerate, Mode, Options};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn corpus_matches_oracle() {
    let mut thick_grids = 0;
    for cg in corpus(2024, 300, 1, 24) {
        let want = brute_distinct_quartics(&cg.grid, 32).unwrap();
        for mode in [Mode::Reference, Mode::Tabulated] {
            let inv = enumerate(&cg.grid, &Options { threads: 1, mode }).unwrap();
            assert!(same_inventory(&cg.grid, &inv.quartics, &want), "{} ({:?})", cg.name, mode);
            if mode == Mode::Reference && inv.anchored_roots > 0 {
                thick_grids += 1;
            }
        }
    }
    assert!(thick_grids > 50, "only {thick_grids} grids exercised the thick engine");
}

#[test]
fn rectangular_grids_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for rows in 1..=14 {
        for cols in [1usize, 3, 8, 17, 26] {
            for sigma in [1u32, 2, 3] {
                let g = random_grid(&mut rng, rows, cols, sigma);
                let inv = enumerate(&g, &Options::default()).unwrap();
                assert!(same_inventory(&g, &inv.quartics, &brute_distinct_quartics(&g, 32).unwrap()), "{rows}x{cols} sigma {sigma}");
            }
        }
    }
}
