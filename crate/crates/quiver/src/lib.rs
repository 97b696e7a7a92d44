//! Labeled quivers with exact mutation, seed charts, and Casimir transport.

pub mod casimir;
pub mod error;
pub mod graph;
pub mod mutation;

pub use error::QuiverError;
pub use graph::Quiver;
pub use mutation::Seed;

pub type Result<T> = std::result::Result<T, QuiverError>;

/// Reads a file from the workspace fixtures directory.
pub fn fixture_text(name: &str) -> String {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

/// Parses a quiver fixture by file name.
pub fn fixture_quiver(name: &str) -> Quiver {
    Quiver::parse(&fixture_text(name)).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}
