//! File-backed caches for expensive exact values.
//!
//! The cache root is taken from the `STICKELBERGER_CACHE_DIR` environment
//! variable and defaults to `$HOME/.stickelberger`. Every cache file is a
//! versioned text file whose records are decimal integer strings, so a cache
//! can be audited with a pager. Corrupt files are discarded wholesale, never
//! partially trusted. Writes go through a temporary file followed by a
//! rename, so a concurrent reader only ever sees a complete file.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Environment variable naming the cache root directory.
pub const CACHE_DIR_ENV: &str = "STICKELBERGER_CACHE_DIR";

/// Resolve the cache root: `$STICKELBERGER_CACHE_DIR`, else
/// `$HOME/.stickelberger`, else `None` (caching disabled).
pub fn cache_dir() -> Option<PathBuf> {
    if let Ok(dir) = std::env::var(CACHE_DIR_ENV) {
        if !dir.is_empty() {
            return Some(PathBuf::from(dir));
        }
    }
    std::env::var("HOME")
        .ok()
        .filter(|h| !h.is_empty())
        .map(|h| Path::new(&h).join(".stickelberger"))
}

/// Read a versioned cache file. Returns the record lines if and only if the
/// file exists and its first line equals `header`.
pub fn read_versioned(path: &Path, header: &str) -> Option<Vec<String>> {
    let text = fs::read_to_string(path).ok()?;
    let mut lines = text.lines();
    if lines.next()? != header {
        return None;
    }
    Some(lines.map(str::to_owned).collect())
}

/// Atomically write a versioned cache file: temp file in the same directory,
/// then rename over the destination.
pub fn write_versioned(path: &Path, header: &str, records: &[String]) -> std::io::Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.tmp.{}",
        path.file_name().and_then(|n| n.to_str()).unwrap_or("cache"),
        std::process::id()
    ));
    {
        let mut f = fs::File::create(&tmp)?;
        writeln!(f, "{header}")?;
        for r in records {
            writeln!(f, "{r}")?;
        }
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn versioned_roundtrip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("b.txt");
        write_versioned(&path, "test v1", &["1 2 3".into()]).unwrap();
        assert_eq!(read_versioned(&path, "test v1").unwrap(), vec!["1 2 3"]);
        // wrong header invalidates the whole file
        assert!(read_versioned(&path, "test v2").is_none());
    }
}
