//! Fuzzes the module definition parser: file references are disabled, so
//! only inline definitions are exercised.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(def) = serde_json::from_str::<nach1::defs::ModuleDef>(text) else { return };
    if let Ok(m) = def.build(None, 64) {
        // a validated action fixes 1 and is a bijection in each slot
        for g in m.group().elements() {
            assert_eq!(m.act(g, 0), 0);
            let mut seen = vec![false; m.coeff().order()];
            for a in m.coeff().elements() {
                seen[m.act(g, a)] = true;
            }
            assert!(seen.into_iter().all(|s| s));
        }
    }
});
