//! The bundled example rings, embedded so the binary is relocatable. The same
//! files ship under `data/`.

use crate::error::{CliError, Result};
use crate::workspace::{parse_workspace, Workspace};

pub const RING_IDS: [&str; 7] = [
    "ring_S", "ring_R1", "ring_R2", "ring_R3", "ring_R4", "ring_R5", "ring_R6",
];

pub fn ring_source(id: &str) -> Option<&'static str> {
    match id {
        "ring_S" => Some(include_str!("../data/ring_S.ring")),
        "ring_R1" => Some(include_str!("../data/ring_R1.ring")),
        "ring_R2" => Some(include_str!("../data/ring_R2.ring")),
        "ring_R3" => Some(include_str!("../data/ring_R3.ring")),
        "ring_R4" => Some(include_str!("../data/ring_R4.ring")),
        "ring_R5" => Some(include_str!("../data/ring_R5.ring")),
        "ring_R6" => Some(include_str!("../data/ring_R6.ring")),
        _ => None,
    }
}

pub fn load_ring(id: &str) -> Result<Workspace> {
    let src = ring_source(id).ok_or_else(|| CliError::UnknownRing(id.to_string()))?;
    parse_workspace(src)
}

pub fn load_all() -> Result<Vec<(String, Workspace)>> {
    RING_IDS
        .iter()
        .map(|id| Ok((id.to_string(), load_ring(id)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_bundled_ring_parses() {
        for id in RING_IDS {
            let ws = load_ring(id).unwrap();
            assert!(ws.ring.nvars() >= 2, "{id}");
        }
    }

    #[test]
    fn embedded_sources_match_the_shipped_files() {
        for id in RING_IDS {
            let path = format!("{}/data/{}.ring", env!("CARGO_MANIFEST_DIR"), id);
            let on_disk = std::fs::read_to_string(path).unwrap();
            assert_eq!(ring_source(id).unwrap(), on_disk, "{id}");
        }
    }
}
