//! Shared output helpers: deterministic float formatting and file writing.

use std::path::Path;

use anyhow::Context;

/// Scientific notation with 15 significant digits; the fixed width keeps
/// CSV output byte-stable across runs.
pub fn sci(x: f64) -> String {
    format!("{x:.14e}")
}

pub fn write_text(path: &Path, content: &str) -> anyhow::Result<()> {
    std::fs::write(path, content).with_context(|| format!("cannot write {}", path.display()))
}

pub fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report values serialize")
    );
}
