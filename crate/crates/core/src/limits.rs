use crate::composition::WeakComposition;
use crate::error::{Error, Result};

/// Upper bounds on the size of indices accepted by enumerating operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_sum: Option<usize>,
    pub max_len: Option<usize>,
}

impl Limits {
    pub const DEFAULT_MAX_SUM: usize = 24;
    pub const DEFAULT_MAX_LEN: usize = 12;

    pub const fn unbounded() -> Self {
        Limits {
            max_sum: None,
            max_len: None,
        }
    }

    pub fn with_max_sum(mut self, max_sum: usize) -> Self {
        self.max_sum = Some(max_sum);
        self
    }

    pub fn with_max_len(mut self, max_len: usize) -> Self {
        self.max_len = Some(max_len);
        self
    }

    pub fn check_sum(&self, sum: usize) -> Result<()> {
        match self.max_sum {
            Some(limit) if sum > limit => Err(Error::BoundExceeded {
                bound: "sum",
                limit,
                actual: sum,
            }),
            _ => Ok(()),
        }
    }

    pub fn check_len(&self, len: usize) -> Result<()> {
        match self.max_len {
            Some(limit) if len > limit => Err(Error::BoundExceeded {
                bound: "length",
                limit,
                actual: len,
            }),
            _ => Ok(()),
        }
    }

    pub fn check(&self, a: &WeakComposition) -> Result<()> {
        self.check_sum(a.sum())?;
        self.check_len(a.len())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_sum: Some(Self::DEFAULT_MAX_SUM),
            max_len: Some(Self::DEFAULT_MAX_LEN),
        }
    }
}
