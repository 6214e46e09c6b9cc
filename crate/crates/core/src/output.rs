//! Deterministic CSV, gnuplot and JSON writers and the run manifest.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::classify::Classification;
use crate::error::Result;
use crate::lattice::LatticeConfig;
use crate::pwe::BandStructure;

pub const BANDS_CSV_HEADER: &str = "segment,k_index,kx,ky,band,re_omega,im_omega,pair_id,corep_label";

/// 17 significant digits in lowercase e-notation.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputFile {
    pub path: String,
    pub sha256: String,
    pub bytes: usize,
}

/// Directory that records a digest of every file written through it.
#[derive(Debug)]
pub struct OutputDir {
    root: PathBuf,
    files: Vec<OutputFile>,
}

impl OutputDir {
    pub fn create(root: &Path) -> Result<Self> {
        fs::create_dir_all(root)?;
        Ok(OutputDir { root: root.to_path_buf(), files: Vec::new() })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn write(&mut self, name: &str, contents: &[u8]) -> Result<()> {
        fs::write(self.root.join(name), contents)?;
        self.files.push(OutputFile { path: name.to_string(), sha256: sha256_hex(contents), bytes: contents.len() });
        Ok(())
    }

    pub fn write_json<T: Serialize>(&mut self, name: &str, value: &T) -> Result<()> {
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        self.write(name, text.as_bytes())
    }

    pub fn files(&self) -> &[OutputFile] {
        &self.files
    }

    /// Writes `manifest.json` listing every file written so far.
    pub fn finish(self, subcommand: &str, arguments: &[String], config: &LatticeConfig) -> Result<RunManifest> {
        let manifest = RunManifest {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            subcommand: subcommand.to_string(),
            arguments: arguments.to_vec(),
            config: config.clone(),
            timestamp: manifest_timestamp(),
            outputs: self.files,
        };
        let mut text = serde_json::to_string_pretty(&manifest)?;
        text.push('\n');
        fs::write(self.root.join("manifest.json"), text)?;
        Ok(manifest)
    }
}

/// Seconds since the epoch, taken from SOURCE_DATE_EPOCH when set.
pub fn manifest_timestamp() -> u64 {
    std::env::var("SOURCE_DATE_EPOCH").ok().and_then(|s| s.trim().parse().ok()).unwrap_or_else(|| {
        std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub subcommand: String,
    pub arguments: Vec<String>,
    pub config: LatticeConfig,
    pub timestamp: u64,
    pub outputs: Vec<OutputFile>,
}

/// One CSV row per (sample, band). `classes[j]` holds the classification of sample j.
pub fn bands_csv(bs: &BandStructure, classes: &[Classification]) -> String {
    let mut out = String::from(BANDS_CSV_HEADER);
    out.push('\n');
    for ((s, sol), class) in bs.samples.iter().zip(&bs.solutions).zip(classes) {
        for (b, m) in sol.modes.iter().enumerate() {
            let cm = class.modes.iter().find(|c| c.band == b);
            let pair = cm.and_then(|c| c.pair_id).map_or("-1".to_string(), |p| p.to_string());
            let label = cm.and_then(|c| c.label.clone()).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                s.segment,
                s.index,
                fmt_f64(s.k.x()),
                fmt_f64(s.k.y()),
                b,
                fmt_f64(m.omega.re),
                fmt_f64(m.omega.im),
                pair,
                label
            ));
        }
    }
    out
}

/// gnuplot data for one segment: one block per band (separated by two blank lines)
/// with columns cumulative distance, fractional position, kx, ky, Re omega, Im omega.
pub fn segment_dat(bs: &BandStructure, segment: usize, bands: usize) -> String {
    let idx: Vec<usize> = (0..bs.samples.len()).filter(|&j| bs.samples[j].segment == segment).collect();
    let len = idx.last().map_or(1.0, |&j| bs.samples[j].local).max(f64::MIN_POSITIVE);
    let mut out = String::from("# cumulative local_fraction kx ky re_omega im_omega\n");
    for b in 0..bands {
        out.push_str(&format!("# band {b}\n"));
        for &j in &idx {
            let (s, sol) = (&bs.samples[j], &bs.solutions[j]);
            if let Some(m) = sol.modes.get(b) {
                out.push_str(&format!(
                    "{} {} {} {} {} {}\n",
                    fmt_f64(s.cumulative),
                    fmt_f64(s.local / len),
                    fmt_f64(s.k.x()),
                    fmt_f64(s.k.y()),
                    fmt_f64(m.omega.re),
                    fmt_f64(m.omega.im)
                ));
            }
        }
        out.push_str("\n\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_and_digest() {
        assert_eq!(fmt_f64(0.25), "2.5000000000000000e-1");
        assert_eq!(fmt_f64(-1.0), "-1.0000000000000000e0");
        assert_eq!(sha256_hex(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }
}
