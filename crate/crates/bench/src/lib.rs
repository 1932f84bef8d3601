//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use pisys_core::gcm::named_diagram;
use pisys_core::{Gcm, RootSystem};

pub fn diagram(name: &str) -> Gcm {
    named_diagram(name).expect("catalog name")
}

pub fn ambient(name: &str) -> Arc<RootSystem> {
    Arc::new(RootSystem::new(diagram(name)).expect("valid diagram"))
}
