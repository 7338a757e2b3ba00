//! Experiment configuration: a flat TOML file of key/value pairs and
//! arrays, with samplers given as compact spec strings like
//! `"forestfire:pf=0.7"`.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::HarnessError;

/// One sampler plus its parameters, parsed from a spec string:
/// `mrw`, `snowball`, `tse`, `brwfb:alpha=<a>`, `forestfire[:pf=<p>]`
/// (pf defaults to 0.7).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SamplerSpec {
    Mrw,
    Brwfb { alpha: f64 },
    Snowball,
    ForestFire { pf: f64 },
    Tse,
}

impl SamplerSpec {
    pub fn parse(spec: &str) -> Result<SamplerSpec, HarnessError> {
        let mut parts = spec.splitn(2, ':');
        let name = parts.next().unwrap_or("").trim();
        let params = parts.next().map(str::trim);
        match (name, params) {
            ("mrw", None) => Ok(SamplerSpec::Mrw),
            ("snowball", None) => Ok(SamplerSpec::Snowball),
            ("tse", None) => Ok(SamplerSpec::Tse),
            ("brwfb", Some(p)) => Ok(SamplerSpec::Brwfb {
                alpha: parse_param(spec, p, "alpha")?,
            }),
            ("brwfb", None) => Err(HarnessError::Config(format!(
                "sampler '{spec}': brwfb requires an alpha, e.g. 'brwfb:alpha=0.5'"
            ))),
            ("forestfire", None) => Ok(SamplerSpec::ForestFire { pf: 0.7 }),
            ("forestfire", Some(p)) => Ok(SamplerSpec::ForestFire {
                pf: parse_param(spec, p, "pf")?,
            }),
            _ => Err(HarnessError::Config(format!(
                "unknown sampler spec '{spec}' (expected mrw, brwfb:alpha=A, snowball, forestfire[:pf=P], or tse)"
            ))),
        }
    }

    /// Canonical label used in CSV output and sorting.
    pub fn label(&self) -> String {
        match self {
            SamplerSpec::Mrw => "mrw".to_string(),
            SamplerSpec::Brwfb { alpha } => format!("brwfb:alpha={alpha}"),
            SamplerSpec::Snowball => "snowball".to_string(),
            SamplerSpec::ForestFire { pf } => format!("forestfire:pf={pf}"),
            SamplerSpec::Tse => "tse".to_string(),
        }
    }
}

fn parse_param(spec: &str, params: &str, key: &str) -> Result<f64, HarnessError> {
    let mut split = params.splitn(2, '=');
    let k = split.next().unwrap_or("").trim();
    let v = split.next().map(str::trim);
    if k != key {
        return Err(HarnessError::Config(format!(
            "sampler '{spec}': expected parameter '{key}', got '{k}'"
        )));
    }
    v.ok_or_else(|| HarnessError::Config(format!("sampler '{spec}': missing value for '{key}'")))?
        .parse::<f64>()
        .map_err(|e| HarnessError::Config(format!("sampler '{spec}': bad {key} value: {e}")))
}

/// Default growth checkpoints: 0.5% steps up to 2%, then 1% steps up to
/// `max_fraction`.
pub fn default_checkpoints(max_fraction: f64) -> Vec<f64> {
    let max_milli = (max_fraction * 1000.0).round() as u64;
    let mut milli: Vec<u64> = [5u64, 10, 15, 20]
        .into_iter()
        .filter(|&m| m <= max_milli)
        .collect();
    let mut next = 30;
    while next <= max_milli {
        milli.push(next);
        next += 10;
    }
    milli.into_iter().map(|m| m as f64 / 1000.0).collect()
}

/// Default alpha sweep: -2.0 to 1.0 in steps of 0.25.
pub fn default_alpha_sweep() -> Vec<f64> {
    (0..=12).map(|i| -2.0 + 0.25 * i as f64).collect()
}

fn default_max_fraction() -> f64 {
    0.20
}

fn default_seeds() -> Vec<u64> {
    (0..10).collect()
}

fn default_parallelism() -> usize {
    std::thread::available_parallelism().map_or(1, |p| p.get())
}

/// Declarative description of an experiment. Field names match the TOML
/// schema one to one.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub graph_path: PathBuf,
    /// Sampler spec strings, e.g. `["tse", "forestfire:pf=0.7"]`.
    pub samplers: Vec<String>,
    /// Replicate seeds, one independent run per seed; ten by default.
    #[serde(default = "default_seeds")]
    pub seeds: Vec<u64>,
    #[serde(default = "default_max_fraction")]
    pub max_fraction: f64,
    /// Growth checkpoints as fractions of the node count; defaults to
    /// 0.5% steps to 2% then 1% steps to `max_fraction`.
    #[serde(default)]
    pub checkpoints: Option<Vec<f64>>,
    /// Alpha values for the sweep command; defaults to -2.0..=1.0 in
    /// 0.25 steps.
    #[serde(default)]
    pub alpha_sweep: Option<Vec<f64>>,
    #[serde(default = "default_parallelism")]
    pub parallelism: usize,
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<ExperimentConfig, HarnessError> {
        let cfg: ExperimentConfig = toml::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<ExperimentConfig, HarnessError> {
        let text = std::fs::read_to_string(path)?;
        ExperimentConfig::from_toml(&text)
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.samplers.is_empty() {
            return Err(HarnessError::Config("no samplers listed".into()));
        }
        if self.seeds.is_empty() {
            return Err(HarnessError::Config("no seeds listed".into()));
        }
        if !(self.max_fraction > 0.0 && self.max_fraction <= 1.0) {
            return Err(HarnessError::Config(format!(
                "max_fraction must be in (0, 1], got {}",
                self.max_fraction
            )));
        }
        if self.parallelism == 0 {
            return Err(HarnessError::Config("parallelism must be positive".into()));
        }
        for spec in &self.samplers {
            SamplerSpec::parse(spec)?;
        }
        let checkpoints = self.resolved_checkpoints();
        if checkpoints.is_empty() {
            return Err(HarnessError::Config("no checkpoints".into()));
        }
        let mut prev = 0.0;
        for &f in &checkpoints {
            if !(f > 0.0 && f <= 1.0) {
                return Err(HarnessError::Config(format!(
                    "checkpoint fraction {f} outside (0, 1]"
                )));
            }
            if f <= prev {
                return Err(HarnessError::Config(
                    "checkpoints must be strictly increasing".into(),
                ));
            }
            if f > self.max_fraction + 1e-12 {
                return Err(HarnessError::Config(format!(
                    "checkpoint {f} exceeds max_fraction {}",
                    self.max_fraction
                )));
            }
            prev = f;
        }
        if let Some(sweep) = &self.alpha_sweep {
            if sweep.is_empty() {
                return Err(HarnessError::Config("alpha_sweep is empty".into()));
            }
        }
        Ok(())
    }

    pub fn resolved_checkpoints(&self) -> Vec<f64> {
        self.checkpoints
            .clone()
            .unwrap_or_else(|| default_checkpoints(self.max_fraction))
    }

    pub fn resolved_alpha_sweep(&self) -> Vec<f64> {
        self.alpha_sweep.clone().unwrap_or_else(default_alpha_sweep)
    }

    pub fn sampler_specs(&self) -> Result<Vec<SamplerSpec>, HarnessError> {
        self.samplers.iter().map(|s| SamplerSpec::parse(s)).collect()
    }
}
