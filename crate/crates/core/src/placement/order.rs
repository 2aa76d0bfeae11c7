use crate::error::{Error, Result};

/// Direction a PA is deployed in relative to the central PA.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

/// One-based index of the central PA: `⌈N/2⌉`, i.e. `N/2` for even `N`.
pub fn center_index(pa_count: usize) -> usize {
    pa_count.div_ceil(2)
}

/// Deployment sequence of one-based PA indices: the center, then rightward to
/// `N`, then leftward down to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeploymentOrder(Vec<usize>);

impl DeploymentOrder {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn center(&self) -> usize {
        self.0[0]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn deployment_order(pa_count: usize) -> Result<DeploymentOrder> {
    if pa_count == 0 {
        return Err(Error::arg("pa_count", "must be at least 1"));
    }
    let c = center_index(pa_count);
    Ok(DeploymentOrder((c..=pa_count).chain((1..c).rev()).collect()))
}
