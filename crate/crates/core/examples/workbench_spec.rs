//! Runs a declarative spec through the workbench and prints the report.

use sigma_noether::workbench::{execute, parse_spec, render_text, Options};

const SPEC: &str = r#"{
  "task": "partition",
  "ring": {"product": [{"zmod": 4}, {"zmod": 9}]},
  "filter": {"prime_complement": {"ideal_gens": ["(2,1)"]}}
}"#;

fn main() -> sigma_noether::Result<()> {
    let text = std::env::args().nth(1).map(std::fs::read_to_string).transpose().expect("readable spec").unwrap_or_else(|| SPEC.to_string());
    let spec = parse_spec(&text)?;
    let outcome = execute(&spec, &Options::default())?;
    print!("{}", render_text(&outcome.report));
    println!("{}", outcome.report.to_json());
    println!("exit code {}", outcome.exit_code);
    Ok(())
}
