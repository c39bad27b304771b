//! The identity catalog: one entry per verified statement, grouped by
//! family. Entry ids are stable and used by the CLI.

mod base;
mod bt;
mod harmonic;
mod knuth;
mod props;
mod reductions;
mod stirling;
mod util;

use std::collections::HashSet;
use std::sync::OnceLock;

use super::IdentityEntry;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown identity id: {0}")]
pub struct UnknownIdError(pub String);

static CATALOG: OnceLock<Vec<IdentityEntry>> = OnceLock::new();

/// All entries, hidden ones included, in catalog order.
pub fn catalog() -> &'static [IdentityEntry] {
    CATALOG.get_or_init(|| {
        let mut entries = Vec::new();
        entries.extend(base::entries());
        entries.extend(props::entries());
        entries.extend(harmonic::entries());
        entries.extend(stirling::entries());
        entries.extend(bt::entries());
        entries.extend(knuth::entries());
        entries.extend(reductions::entries());
        let mut seen = HashSet::new();
        for e in &entries {
            assert!(seen.insert(e.id), "duplicate identity id: {}", e.id);
        }
        entries
    })
}

pub fn lookup(id: &str) -> Result<&'static IdentityEntry, UnknownIdError> {
    catalog()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| UnknownIdError(id.to_string()))
}
