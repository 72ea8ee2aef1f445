use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph6: empty input")]
    Empty,
    #[error("graph6: character {0:?} at byte {1} outside the printable range 63..=126")]
    BadChar(char, usize),
    #[error("graph6: malformed size prefix")]
    BadSize,
    #[error("graph6: expected {expected} data bytes, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("graph6: nonzero padding bits in the final byte")]
    TrailingBits,
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForcingError {
    #[error("set is not a PSD forcing set")]
    NotForcing,
    #[error("the white subgraph G - B is disconnected")]
    DisconnectedRemainder,
    #[error("propagation time is zero; nothing to reduce")]
    NothingToReduce,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {order} exceeds the exhaustive cap of {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("no minimum PSD forcing set leaves a connected remainder")]
    NoConnectedRemainder,
    #[error("graph order {0} is below the minimum of 2")]
    OrderTooSmall(usize),
}
