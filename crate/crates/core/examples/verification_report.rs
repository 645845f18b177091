//! Running a verification suite from code and rendering its report.
//!
//! ```text
//! cargo run --release --example verification_report -- singular
//! ```

use hyperell::verify::{run_suite, Config, Report, Suite};

fn main() -> hyperell::Result<()> {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("pi").parse()?;
    let report = run_suite(
        suite,
        Config {
            jobs: 2,
            ..Config::default()
        },
    )?;
    print!("{}", report.to_text());

    let json = report.to_json();
    let back = Report::from_json(&json)?;
    println!("\nJSON round trip preserved the report: {}", back == report);
    println!("first CSV rows:");
    for line in report.to_csv().lines().take(3) {
        println!("  {line}");
    }
    Ok(())
}
