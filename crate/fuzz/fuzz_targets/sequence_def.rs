//! Fuzzes the sequence definition parser and the exactness validator.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(def) = serde_json::from_str::<nach1::defs::SequenceDef>(text) else { return };
    if let Ok(ses) = def.build(None, 32) {
        // anything accepted really is short exact
        let orders = (
            ses.module_a().coeff().order(),
            ses.module_b().coeff().order(),
            ses.module_c().coeff().order(),
        );
        assert_eq!(orders.0 * orders.2, orders.1);
    }
});
