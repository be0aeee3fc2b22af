//! Every property suite over a batch of random configurations.

use std::env;

use veritas::suites::{random_configs, run, Suite, SuiteOptions};

fn main() -> veritas::Result<()> {
    let seed = env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let configs = random_configs(seed, 50, 10);
    let opts = SuiteOptions {
        rng_seed: seed,
        ..SuiteOptions::default()
    };
    for suite in Suite::ALL {
        let r = run(suite, &configs, &opts)?;
        println!("{:<14} {:>6} checks  {}", suite.name(), r.checked, if r.pass { "pass" } else { "FAIL" });
    }
    Ok(())
}
