//! Bit-stable CSV and JSON emission: fixed 17-significant-digit scientific
//! notation, '.' decimal separator, '\n' line ends, rows ordered by input
//! index.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

/// 17 significant digits; identical inputs give byte-identical text.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        // normalize -0.0
        return "0.0000000000000000e0".to_string();
    }
    format!("{x:.16e}")
}

pub struct CsvWriter {
    out: BufWriter<File>,
}

impl CsvWriter {
    pub fn create(path: &Path, header: &str) -> std::io::Result<Self> {
        let mut out = BufWriter::new(File::create(path)?);
        out.write_all(header.as_bytes())?;
        out.write_all(b"\n")?;
        Ok(CsvWriter { out })
    }

    pub fn row(&mut self, fields: &[String]) -> std::io::Result<()> {
        self.out.write_all(fields.join(",").as_bytes())?;
        self.out.write_all(b"\n")
    }

    pub fn finish(mut self) -> std::io::Result<()> {
        self.out.flush()
    }
}

/// Compact check serialization for the verify report.
pub fn check_json(name: &str, max_error: f64, tolerance: f64, pass: bool) -> serde_json::Value {
    serde_json::json!({
        "name": name,
        "max_error": max_error,
        "tolerance": tolerance,
        "pass": pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_is_stable() {
        assert_eq!(fmt_f64(0.25), "2.5000000000000000e-1");
        assert_eq!(fmt_f64(-1.0 / 3.0), "-3.3333333333333331e-1");
        assert_eq!(fmt_f64(0.0), "0.0000000000000000e0");
        assert_eq!(fmt_f64(-0.0), "0.0000000000000000e0");
        assert_eq!(fmt_f64(1024.0), "1.0240000000000000e3");
    }
}
