//! Developer utility: run one suite with explicit bounds and print the
//! JSON report, for timing populations before pinning test defaults.
//!
//! Usage: `measure <suite> [max_n] [samples]`

use ae_core::harness::{verify_suite, Bounds, Suite};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let Some(name) = args.first() else {
        eprintln!("usage: measure <suite> [max_n] [samples]");
        std::process::exit(2);
    };
    let suite: Suite = match name.parse() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let bounds = Bounds {
        max_n: args.get(1).and_then(|s| s.parse().ok()),
        samples: args.get(2).and_then(|s| s.parse().ok()),
        jobs: 1,
    };
    let report = verify_suite(suite, &bounds, 0);
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
