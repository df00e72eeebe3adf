use thiserror::Error;

#[derive(Debug, Error)]
pub enum AoError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("size guard exceeded: {needed} vertices over limit {limit}")]
    SizeGuard { needed: u128, limit: u128 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Outcome of a certificate check. `Fail` carries the first violation found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn fail(reason: impl Into<String>) -> Self {
        Verdict::Fail(reason.into())
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(r) => Some(r),
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail(r) => write!(f, "fail: {r}"),
        }
    }
}

/// Cap on enumeration work. Algorithms that must visit every vertex of an
/// implicit graph refuse to start when `d^k` exceeds the limit.
#[derive(Debug, Clone, Copy)]
pub struct SizeGuard {
    pub max_vertices: u128,
}

pub const DEFAULT_MAX_VERTICES: u128 = 1 << 20;

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl SizeGuard {
    pub fn new(max_vertices: u128) -> Self {
        SizeGuard { max_vertices }
    }

    pub fn unlimited() -> Self {
        SizeGuard {
            max_vertices: u128::MAX,
        }
    }

    /// Reads `AOGLAB_MAX_VERTICES` if set, else the default limit.
    pub fn from_env() -> Self {
        match std::env::var("AOGLAB_MAX_VERTICES") {
            Ok(v) => match v.parse::<u128>() {
                Ok(n) => SizeGuard::new(n),
                Err(_) => SizeGuard::default(),
            },
            Err(_) => SizeGuard::default(),
        }
    }

    pub fn check(&self, needed: u128) -> Result<(), AoError> {
        if needed > self.max_vertices {
            Err(AoError::SizeGuard {
                needed,
                limit: self.max_vertices,
            })
        } else {
            Ok(())
        }
    }
}
