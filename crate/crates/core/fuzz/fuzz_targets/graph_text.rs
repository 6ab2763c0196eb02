#![no_main]

use ect_core::{is_planar, parse_dimacs, parse_graph, write_dimacs};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(g) = parse_graph(text) else {
        return;
    };
    let back = parse_dimacs(&write_dimacs(&g)).expect("written DIMACS must parse");
    assert_eq!(back, g);
    let json = serde_json::to_string(&g).unwrap();
    assert_eq!(parse_graph(&json).unwrap(), g);
    if g.n() <= 16 {
        let v = is_planar(&g);
        v.validate(&g).expect("planarity witness must validate");
    }
});
