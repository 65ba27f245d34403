#![no_main]

use bidikl_cli::{load_graph_file, parse_graph_file};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let parsed = parse_graph_file(data);
    let loaded = load_graph_file(data);
    assert_eq!(parsed.is_ok(), loaded.is_ok());
    if let Ok(doc) = parsed {
        // a valid document survives a round trip unchanged
        let again = parse_graph_file(doc.to_json().as_bytes()).expect("re-serialized document parses");
        assert_eq!(again, doc);
    }
});
