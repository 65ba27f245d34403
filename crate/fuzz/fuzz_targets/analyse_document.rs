#![no_main]

use bidikl_cli::verify::run_checks;
use bidikl_cli::{export_dot, load_graph_file};
use bidikl_core::{circular_components, kl_decomposition, Sign};
use libfuzzer_sys::fuzz_target;

// Exact searches are exponential; stay where a run takes milliseconds.
const MAX_VERTICES: usize = 7;
const MAX_EDGES: usize = 9;

fuzz_target!(|data: &[u8]| {
    let Ok(loaded) = load_graph_file(data) else {
        return;
    };
    let g = &loaded.graph;
    if g.vertex_count() > MAX_VERTICES || g.edge_count() > MAX_EDGES {
        return;
    }
    let structure = circular_components(g);
    for sign in Sign::BOTH {
        let kl = kl_decomposition(g, sign);
        assert!(kl.partition.refines(&structure.components));
        export_dot(g, Some(&kl)).expect("partition of g");
    }
    for check in run_checks(&loaded) {
        assert!(check.passed(), "{check:?}");
    }
});
