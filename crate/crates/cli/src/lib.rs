//! torsion-lab: a batch CLI for homological computations over standard graded
//! rings, plus a scenario runner that re-verifies the statements its bundled
//! example rings were chosen to exhibit.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod report;
pub mod scenario;
pub mod workspace;

pub use error::{CliError, Result};
pub use workspace::{parse_workspace, Workspace};
