//! Content-addressed on-disk cache of Poincaré polynomials.
//!
//! Each entry is `<sha256(key)>.json` holding `{"key": …, "coeffs": […]}` with
//! key `n=<n>;h=<h>;nu=<ν>`. The stored key is compared on read, so a damaged
//! or colliding file is ignored and recomputed. The cache is best-effort: an
//! I/O failure only costs the recomputation.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use hessdot::{poincare, Composition, DecompositionCache, GradedPolynomial, HessenbergFunction};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

static TEMP_COUNTER: AtomicUsize = AtomicUsize::new(0);

fn key(nu: &Composition, h: &HessenbergFunction) -> String {
    let values: Vec<String> = h.values().iter().map(ToString::to_string).collect();
    format!("n={};h={};nu={nu}", h.n(), values.join(","))
}

fn entry_path(dir: &Path, key: &str) -> PathBuf {
    let digest = Sha256::digest(key.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    dir.join(format!("{hex}.json"))
}

fn read(path: &Path, key: &str) -> Option<GradedPolynomial> {
    let text = fs::read_to_string(path).ok()?;
    let value: Value = serde_json::from_str(&text).ok()?;
    if value.get("key")?.as_str()? != key {
        return None;
    }
    let coeffs = serde_json::from_value(value.get("coeffs")?.clone()).ok()?;
    Some(GradedPolynomial { coeffs })
}

fn write(path: &Path, key: &str, poly: &GradedPolynomial) -> std::io::Result<()> {
    let body = json!({ "key": key, "coeffs": poly.coeffs });
    let temp = path.with_extension(format!(
        "{}.{}.tmp",
        std::process::id(),
        TEMP_COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    fs::write(&temp, body.to_string())?;
    // Rename is atomic, so concurrent readers never see a partial file.
    fs::rename(&temp, path)
}

/// A [`DecompositionCache`] backed by `dir`, created if missing.
pub fn disk_cache(dir: &Path) -> std::io::Result<DecompositionCache> {
    fs::create_dir_all(dir)?;
    let dir = dir.to_path_buf();
    Ok(DecompositionCache::new(Box::new(move |nu, h| {
        let key = key(nu, h);
        let path = entry_path(&dir, &key);
        if let Some(poly) = read(&path, &key) {
            return Ok(poly);
        }
        let poly = poincare(nu, h)?;
        if let Err(e) = write(&path, &key, &poly) {
            eprintln!(
                "warning: could not write cache entry {}: {e}",
                path.display()
            );
        }
        Ok(poly)
    })))
}
