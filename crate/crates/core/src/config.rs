use serde::Serialize;

/// Resource limits shared by the verification pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    /// Largest coset space that will be enumerated.
    pub vertex_budget: usize,
    /// Largest graph handed to the automorphism search.
    pub aut_vertex_limit: usize,
    /// Largest group whose elements are listed explicitly.
    pub enumeration_bound: usize,
    /// Largest group tested for simplicity by walking its conjugacy classes.
    pub simplicity_budget: usize,
    /// Worker threads; `None` means one per core.
    pub threads: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            vertex_budget: 500_000,
            aut_vertex_limit: 10_000,
            enumeration_bound: 1_000_000,
            simplicity_budget: 100_000,
            threads: None,
        }
    }
}

impl RunConfig {
    pub const THREADS_VAR: &'static str = "PGV_THREADS";

    /// Defaults, with the thread count taken from `PGV_THREADS` when set.
    pub fn from_env() -> Result<Self, crate::Error> {
        let mut config = RunConfig::default();
        if let Ok(raw) = std::env::var(Self::THREADS_VAR) {
            config.threads = Some(parse_threads(&raw)?);
        }
        Ok(config)
    }
}

fn parse_threads(raw: &str) -> Result<usize, crate::Error> {
    match raw.trim().parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(crate::Error::Invalid(format!(
            "{} must be a positive integer, got {raw:?}",
            RunConfig::THREADS_VAR
        ))),
    }
}
