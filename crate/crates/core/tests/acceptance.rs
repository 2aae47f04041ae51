use std::process::ExitCode;

use partition_genus::config::Config;
use partition_genus::verify::Verifier;

fn main() -> ExitCode {
    let cfg = Config::from_env().expect("valid configuration");
    cfg.install_workers();
    let verifier = Verifier::new(cfg);
    let mut failed = 0;
    for i in 1..=10 {
        let outcome = verifier.criterion(i);
        println!("criterion {outcome}");
        if !outcome.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
