use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use super::characters::{install_character_table, CharacterTable};
use crate::error::{Result, WgError};

/// Path of the cached table of `S_n` inside `dir`.
pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("characters-n{n}.json"))
}

/// Loads the table of `S_n` from `dir`, or computes and writes it when the
/// file is missing, unreadable, or carries another schema version.
/// The result is also installed into the shared registry.
pub fn load_or_compute(dir: &Path, n: usize) -> Result<Arc<CharacterTable>> {
    let path = cache_path(dir, n);
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(table) = CharacterTable::from_json(&text) {
            if table.n() == n {
                return Ok(install_character_table(table));
            }
        }
    }
    refresh(dir, n)
}

/// Recomputes the table of `S_n` and overwrites the cache file.
pub fn refresh(dir: &Path, n: usize) -> Result<Arc<CharacterTable>> {
    let table = CharacterTable::compute(n)?;
    fs::create_dir_all(dir).map_err(|e| WgError::Io(format!("{}: {e}", dir.display())))?;
    let path = cache_path(dir, n);
    fs::write(&path, table.to_json()).map_err(|e| WgError::Io(format!("{}: {e}", path.display())))?;
    Ok(install_character_table(table))
}
