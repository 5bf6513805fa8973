use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a partition (parts must be positive and weakly decreasing): {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("modulus r must be at least 2, got {0}")]
    InvalidModulus(usize),
    #[error("{core} is not a {r}-core")]
    NotACore { core: Partition, r: usize },
    #[error("quotient has {got} components, expected {r}")]
    QuotientArity { got: usize, r: usize },
    #[error("{lambda} has nonempty 0-th {r}-quotient component and is not a basis label")]
    NotBasic { lambda: Partition, r: usize },
    #[error("size mismatch: partition of {partition} cells against cycle type of {cycles}")]
    SizeMismatch { partition: usize, cycles: usize },
}

pub(crate) fn check_modulus(r: usize) -> Result<(), Error> {
    if r < 2 {
        Err(Error::InvalidModulus(r))
    } else {
        Ok(())
    }
}
