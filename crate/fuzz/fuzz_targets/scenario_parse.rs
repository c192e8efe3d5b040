#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // The scenario parser must reject, never panic on, arbitrary input.
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = tworay::scenario::Scenario::parse(text);
    }
});
