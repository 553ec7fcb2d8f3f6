//! Replays the built-in reference tables.

use reftype::golden::{builtin, verify_table};

fn main() -> reftype::Result<()> {
    let mut failures = 0;
    for table in builtin() {
        let report = verify_table(&table)?;
        println!(
            "{:<8} {} classes, {:>4} entries, {} mismatches",
            report.group,
            table.classes.len(),
            report.checked,
            report.mismatches.len()
        );
        for m in &report.mismatches {
            println!("  {m}");
        }
        failures += report.mismatches.len();
    }
    std::process::exit(i32::from(failures > 0));
}
