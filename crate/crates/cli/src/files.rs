//! On-disk formats: instances and packings as structured JSON with integer
//! heights and an explicit denominator, so nothing persisted is floating
//! point.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use twobar_core::{Chart, Instance, SequencePacking};

use crate::error::{CliError, Result};

fn default_denominator() -> u32 {
    Instance::DEFAULT_DENOMINATOR
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartEntry {
    pub a: u32,
    pub b: u32,
}

/// Serialized instance. Parses back to a valid [`Instance`] and round-trips
/// bit-exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub name: String,
    #[serde(default = "default_denominator")]
    pub denominator: u32,
    pub charts: Vec<ChartEntry>,
}

impl InstanceFile {
    pub fn from_instance(s: &Instance) -> InstanceFile {
        InstanceFile {
            name: s.name().to_string(),
            denominator: s.denominator(),
            charts: s
                .charts()
                .iter()
                .map(|c| ChartEntry { a: c.a(), b: c.b() })
                .collect(),
        }
    }

    pub fn to_instance(&self) -> Result<Instance> {
        let charts = self.charts.iter().map(|e| Chart::new(e.a, e.b)).collect();
        Ok(Instance::with_denominator(
            &self.name,
            charts,
            self.denominator,
        )?)
    }

    pub fn load(path: &Path) -> Result<InstanceFile> {
        Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        Ok(fs::write(path, text)?)
    }
}

/// Serialized solver output: the chart order, the union level between each
/// adjacent pair, and the resulting cell positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingFile {
    pub instance: String,
    pub algorithm: String,
    pub order: Vec<usize>,
    pub overlaps: Vec<u8>,
    pub positions: Vec<u32>,
    pub length: usize,
}

impl PackingFile {
    pub fn from_packing(s: &Instance, algorithm: &str, p: &SequencePacking) -> PackingFile {
        PackingFile {
            instance: s.name().to_string(),
            algorithm: algorithm.to_string(),
            order: p.order().to_vec(),
            overlaps: p.overlaps().to_vec(),
            positions: p.cell_packing().positions().to_vec(),
            length: p.length(),
        }
    }

    /// Rebuild the packing against its instance, re-running every validity
    /// check; the stored positions and length must match.
    pub fn to_packing(&self, s: &Instance) -> Result<SequencePacking> {
        let p = SequencePacking::new(s, self.order.clone(), self.overlaps.clone())?;
        if p.cell_packing().positions() != self.positions || p.length() != self.length {
            return Err(CliError::Internal(format!(
                "packing file for {} disagrees with its own order and overlaps",
                self.instance
            )));
        }
        Ok(p)
    }

    pub fn load(path: &Path) -> Result<PackingFile> {
        Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        Ok(fs::write(path, text)?)
    }
}
