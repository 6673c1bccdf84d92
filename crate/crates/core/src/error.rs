use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("order {0} exceeds the supported maximum of {max}", max = crate::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("expected {expected} entries for order {order}, found {found}")]
    LengthMismatch {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("entry {value} at position {position} is out of range for order {order}")]
    EntryOutOfRange {
        order: usize,
        position: usize,
        value: usize,
    },
    #[error("element {element} is out of range for order {order}")]
    ElementOutOfRange { order: usize, element: usize },
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("({0}, {0}) is not a pair of distinct elements")]
    DiagonalPair(usize),
    #[error("groupoid is not locally-zero")]
    NotLocallyZero,
    #[error("groupoid does not have the orientation property")]
    NotOriented,
    #[error("mask for order {order} needs {expected} flags, found {found}")]
    MaskLength {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("invalid mask flag {0:?}, expected 'L' or 'R'")]
    MaskFlag(char),
    #[error("{operation} is limited to order {limit}, got {order}")]
    GuardExceeded {
        operation: &'static str,
        order: usize,
        limit: usize,
    },
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("{id} has no {mode} check at order {order}")]
    Infeasible {
        id: crate::TheoremId,
        mode: crate::Mode,
        order: usize,
    },
    #[error("sampled checks need a budget of at least 1")]
    EmptyBudget,
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
}
