use crate::fail::Failure;
use serde_json::json;
use snarklab::suites::{run_criterion, Suite, SuiteOptions};
use std::io::Write;

pub fn run(
    suite: Suite,
    opts: &SuiteOptions,
    json_out: bool,
    timings: bool,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let mut failed = Vec::new();
    for id in suite.criteria() {
        let r = run_criterion(*id, opts)?;
        let ok = r.passed() && r.within_budget();
        if !ok {
            failed.push(r.id);
        }
        let line = if json_out {
            let checks: Vec<_> = r
                .checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect();
            let mut v =
                json!({"criterion": r.id, "title": r.title, "passed": ok, "checks": checks});
            if timings {
                v["seconds"] = json!(r.seconds);
                v["budget_seconds"] = json!(r.budget_seconds);
            }
            format!("{v}\n")
        } else {
            let mut s = format!(
                "{} {:>2} {}",
                if ok { "PASS" } else { "FAIL" },
                r.id,
                r.title
            );
            if timings {
                s.push_str(&format!(" ({:.2} s)", r.seconds));
            }
            s.push('\n');
            for c in &r.checks {
                let detail = if c.detail.is_empty() {
                    String::new()
                } else {
                    format!(": {}", c.detail)
                };
                s.push_str(&format!(
                    "    {} {}{}\n",
                    if c.passed { "ok  " } else { "FAIL" },
                    c.name,
                    detail
                ));
            }
            if !r.within_budget() {
                s.push_str("    FAIL time budget exceeded\n");
            }
            s
        };
        out.write_all(line.as_bytes())
            .map_err(|e| Failure::Io(format!("stdout: {e}")))?;
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verify(format!("criteria {failed:?} failed")))
    }
}
