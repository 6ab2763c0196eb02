#![no_main]

use ect_core::{named_graph, PlanarityVerdict};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<PlanarityVerdict>(data) else {
        return;
    };
    // Validation of arbitrary witnesses must return, never panic.
    for name in ["K5", "K3,3", "petersen", "C6", "K1"] {
        let _ = v.validate(&named_graph(name).unwrap());
    }
});
