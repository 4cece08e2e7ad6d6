//! Runs a verification suite and prints the summary.

use branchkit::verify::run_suite;

fn main() -> branchkit::Result<()> {
    let suite = std::env::args().nth(1).unwrap_or_else(|| "lfactors".into());
    let report = run_suite(&suite, 8, 1, None)?;
    for s in &report.suites {
        println!("{}: {}/{}", s.suite, s.pass, s.count);
    }
    for f in &report.failures {
        println!("FAIL {} [{}]: expected {}, got {}", f.case, f.inputs, f.expected, f.actual);
    }
    std::process::exit(report.exit_code());
}
