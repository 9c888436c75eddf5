//! Work budget for exhaustive routines.
//!
//! Every operation that enumerates a space checks its step count against an
//! [`EnumBudget`] first and refuses with [`Error::BudgetExceeded`] instead of
//! silently sampling. The budget is expressed in bits: a routine needing
//! about 2^b elementary steps requires `b <= max_bits`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBudget {
    pub max_bits: u32,
}

impl EnumBudget {
    pub const DEFAULT_BITS: u32 = 24;

    pub fn bits(max_bits: u32) -> Self {
        EnumBudget { max_bits }
    }

    pub fn check(&self, needed_bits: u32) -> Result<()> {
        if needed_bits <= self.max_bits {
            Ok(())
        } else {
            Err(Error::BudgetExceeded { needed_bits, max_bits: self.max_bits })
        }
    }
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget { max_bits: Self::DEFAULT_BITS }
    }
}
