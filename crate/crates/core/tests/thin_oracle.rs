use std::collections::BTreeSet;

use quartic_core::oracle::{brute_quartic_occurrences, corpus, is_thick};
use quartic_core::thin::collect_thin;
use quartic_core::GridIndex;

#[test]
fn thin_engine_finds_every_thin_quartic() {
    for cg in corpus(7, 200, 4, 20) {
        let g = &cg.grid;
        let ix = GridIndex::build(g);
        let mut got = BTreeSet::new();
        for view in [ix.view(), ix.transposed()] {
            for c in collect_thin(&view) {
                got.insert((c.height, c.width, g.block(c.row, c.col, c.height, c.width)));
            }
        }
        for q in brute_quartic_occurrences(g, 32).unwrap() {
            let k = q.key;
            let block = g.block(k.row, k.col, k.height, k.width);
            if is_thick(&block) {
                continue;
            }
            assert!(got.contains(&(k.height, k.width, block)), "{}: missing thin {}", cg.name, k);
        }
    }
}
