#![no_main]

use ect_core::{apply_ect, color_classes, is_proper, Coloring, Graph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(c) = serde_json::from_slice::<Coloring>(data) else {
        return;
    };
    assert!(c.colors().iter().all(|&x| x < c.k()));
    let again: Coloring = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
    assert_eq!(again, c);
    if c.len() <= 64 {
        let g = Graph::path(c.len()).unwrap();
        if is_proper(&g, &c).unwrap() {
            let p = color_classes(&g, &c).unwrap();
            let q = apply_ect(&g, &p).unwrap();
            assert_eq!(q.graph.n(), c.k());
        }
    }
});
