//! Command-line arguments and the optional TOML config file.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

pub const CACHE_ENV: &str = "PUREBRAID_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "purebraid", version, about = "Exact computations in the graded Lie algebra of the pure braid group")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Default, Clone)]
pub struct Common {
    /// Number of strands.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Highest degree to compute.
    #[arg(long, global = true)]
    pub max_degree: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Directory of the basis/matrix cache.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Largest degree any computation may reach.
    #[arg(long, global = true)]
    pub degree_cap: Option<usize>,
    /// Key-value config file (TOML) supplying defaults for these flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Also write `<command>.txt` and `<command>.json` into this directory.
    #[arg(long, global = true)]
    pub report_dir: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Ranks of the graded pieces, split by free factor.
    Dims,
    /// Lyndon basis elements per degree.
    Basis,
    /// Evaluates a bracket expression and prints its canonical form.
    Bracket {
        /// e.g. "[B(1,2), B(1,4)]" or "2*B(1,3) - [B(1,3), B(2,3)]".
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Checks the relations, Lie axioms and the centralizer theorem.
    Verify,
    /// Degreewise centralizer of the top free factor or of an element.
    Centralizer {
        /// Degree-one element to centralize instead of the top generators.
        #[arg(long)]
        element: Option<String>,
    },
    /// Degreewise kernel of the adjoint representation.
    AdjointKernel,
    /// Tests the faithfulness criterion for a representation.
    Criterion {
        /// `burau`, `gassner`, or a path to a TOML representation spec.
        #[arg(long)]
        rep: Option<String>,
    },
    /// Manages the on-disk cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Dims => "dims",
            Command::Basis => "basis",
            Command::Bracket { .. } => "bracket",
            Command::Verify => "verify",
            Command::Centralizer { .. } => "centralizer",
            Command::AdjointKernel => "adjoint-kernel",
            Command::Criterion { .. } => "criterion",
            Command::Cache { action } => match action {
                CacheAction::Build => "cache-build",
                CacheAction::Inspect => "cache-inspect",
                CacheAction::Clear => "cache-clear",
            },
        }
    }
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum CacheAction {
    /// Precomputes bases and bracket matrices up to --max-degree.
    Build,
    /// Lists cache entries and flags invalid ones.
    Inspect,
    /// Deletes all cache entries.
    Clear,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

/// Config file keys; flags given on the command line win.
#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub n: Option<usize>,
    pub max_degree: Option<usize>,
    pub format: Option<Format>,
    pub cache_dir: Option<PathBuf>,
    pub degree_cap: Option<usize>,
    pub report_dir: Option<PathBuf>,
    pub rep: Option<String>,
    pub element: Option<String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))
    }
}

/// Effective settings after merging flags, config file and environment.
#[derive(Debug, Clone)]
pub struct Settings {
    pub n: Option<usize>,
    pub max_degree: Option<usize>,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
    pub degree_cap: usize,
    pub report_dir: Option<PathBuf>,
    pub rep: Option<String>,
    pub element: Option<String>,
    /// Directory relative paths in the config file are resolved against.
    pub config_base: Option<PathBuf>,
}

impl Settings {
    pub fn resolve(common: &Common, command: &Command, env_cache: Option<PathBuf>) -> Result<Self, String> {
        let config = match &common.config {
            Some(p) => ConfigFile::load(p)?,
            None => ConfigFile::default(),
        };
        let base = common.config.as_ref().and_then(|p| p.parent().map(Path::to_path_buf));
        let rebase = |p: PathBuf| match &base {
            Some(b) if p.is_relative() => b.join(p),
            _ => p,
        };
        let (rep_flag, element_flag) = match command {
            Command::Criterion { rep } => (rep.clone(), None),
            Command::Centralizer { element } => (None, element.clone()),
            _ => (None, None),
        };
        let rep = rep_flag.or_else(|| {
            config.rep.clone().map(|r| match r.as_str() {
                "burau" | "gassner" => r,
                path => rebase(PathBuf::from(path)).to_string_lossy().into_owned(),
            })
        });
        let settings = Settings {
            n: common.n.or(config.n),
            max_degree: common.max_degree.or(config.max_degree),
            format: common.format.or(config.format).unwrap_or(Format::Text),
            cache_dir: common.cache_dir.clone().or(config.cache_dir.map(rebase)).or(env_cache),
            degree_cap: common.degree_cap.or(config.degree_cap).unwrap_or(purebraid::DEFAULT_DEGREE_CAP),
            report_dir: common.report_dir.clone().or(config.report_dir.map(rebase)),
            rep,
            element: element_flag.or(config.element),
            config_base: base,
        };
        if let Some(q) = settings.max_degree {
            if q == 0 {
                return Err("--max-degree must be at least 1".into());
            }
            if q > settings.degree_cap {
                return Err(format!("--max-degree {q} exceeds the degree cap {}", settings.degree_cap));
            }
        }
        Ok(settings)
    }

    pub fn require_n(&self) -> Result<usize, String> {
        self.n.ok_or_else(|| "--n is required".to_string())
    }

    pub fn require_max_degree(&self) -> Result<usize, String> {
        self.max_degree.ok_or_else(|| "--max-degree is required".to_string())
    }
}
