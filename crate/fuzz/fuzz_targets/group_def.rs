//! Fuzzes the group definition parser and constructor: arbitrary bytes must
//! either fail cleanly or produce a validated group.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(def) = serde_json::from_str::<nach1::defs::GroupDef>(text) else { return };
    if let Ok(g) = def.build(64) {
        // whatever survives validation must behave like a group
        assert!(g.order() > 0);
        for x in g.elements() {
            assert_eq!(g.mul(x, g.inv(x)), 0);
            assert_eq!(g.mul(0, x), x);
        }
    }
});
