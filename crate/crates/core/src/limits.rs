use crate::error::SearchError;

/// Default largest order for exhaustive subset scans.
pub const DEFAULT_CAP: usize = 20;

/// Absolute ceiling for exhaustive scans: the per-subset table needs
/// `2^n` bytes.
pub const HARD_CAP: usize = 26;

/// Largest graph order an exhaustive routine will accept.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cap(usize);

impl Cap {
    /// Clamped to [`HARD_CAP`].
    pub fn new(max_order: usize) -> Self {
        Cap(max_order.min(HARD_CAP))
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn check(self, order: usize) -> Result<(), SearchError> {
        if order > self.0 {
            Err(SearchError::CapExceeded { order, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Cap {
    fn default() -> Self {
        Cap(DEFAULT_CAP)
    }
}
