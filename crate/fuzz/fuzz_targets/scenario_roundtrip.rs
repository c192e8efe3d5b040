#![no_main]

use libfuzzer_sys::fuzz_target;
use tworay::scenario::Scenario;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(scenario) = Scenario::parse(text) else {
        return;
    };
    // Whatever parses must serialize to a canonical form that reparses to
    // the same value.
    let serialized = scenario.serialize();
    let reparsed = Scenario::parse(&serialized).expect("canonical form reparses");
    assert_eq!(scenario, reparsed);
    assert_eq!(serialized, reparsed.serialize());
});
