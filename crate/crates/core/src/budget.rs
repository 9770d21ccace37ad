//! Cooperative wall-clock budgets for long computations.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { deadline: None };

    pub fn with_timeout(limit: Duration) -> Self {
        Budget { deadline: Some(Instant::now() + limit) }
    }

    pub fn check(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::Timeout),
            _ => Ok(()),
        }
    }

    pub fn is_unlimited(&self) -> bool {
        self.deadline.is_none()
    }
}
