//! One line per acceptance criterion, then a hard failure if any missed.

use cubek3::verify::Registry;

#[test]
fn acceptance() {
    let registry = Registry::default();
    let result = registry.run(&[], true);
    let mut criteria: Vec<u8> = result.checks.iter().map(|c| c.criterion).collect();
    criteria.dedup();
    assert_eq!(criteria, (1..=11).collect::<Vec<u8>>());
    for c in &result.checks {
        println!(
            "criterion {:>2} [{}] {}: {} (expected {}; computed {}; {} ms)",
            c.criterion,
            c.name,
            if c.outcome.pass { "PASS" } else { "FAIL" },
            c.description,
            c.outcome.expected,
            c.outcome.computed,
            c.millis.unwrap_or(0),
        );
    }
    println!("{} passed, {} failed", result.passed, result.failed);
    assert!(result.pass, "failing criteria: {:?}",
        result.checks.iter().filter(|c| !c.outcome.pass).map(|c| c.name).collect::<Vec<_>>());
}
