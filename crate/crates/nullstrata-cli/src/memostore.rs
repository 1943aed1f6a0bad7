//! Optional on-disk persistence of the engine memo table.
//!
//! When `NULLSTRATA_MEMO_DIR` points at a directory, every memoized
//! sub-nullcone polynomial is stored content-addressed: the file name is
//! the FNV-1a hash of the canonical subproblem key, the body carries a
//! versioned header, the full key, and the coefficients. Entries whose
//! stored key does not match on load are ignored, so a hash collision can
//! only cost a recomputation, never poison a result.

use std::fs;
use std::path::{Path, PathBuf};

use nullstrata_core::poly::IntPoly;
use nullstrata_core::strata::Engine;

use num_bigint::BigInt;

const HEADER: &str = "NULLSTRATA-MEMO v1";

pub fn memo_dir() -> Option<PathBuf> {
    std::env::var_os("NULLSTRATA_MEMO_DIR").map(PathBuf::from)
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100_0000_01b3);
    }
    hash
}

/// Load every valid entry from the directory into the engine.
pub fn load(engine: &mut Engine, dir: &Path) {
    let Ok(entries) = fs::read_dir(dir) else { return };
    for entry in entries.flatten() {
        let path = entry.path();
        if path.extension().is_none_or(|e| e != "memo") {
            continue;
        }
        let Ok(body) = fs::read_to_string(&path) else { continue };
        let mut lines = body.lines();
        if lines.next() != Some(HEADER) {
            continue;
        }
        let Some(key) = lines.next() else { continue };
        let Some(coeff_line) = lines.next() else { continue };
        let coeffs: Option<Vec<BigInt>> = coeff_line
            .split_whitespace()
            .map(|c| c.parse::<BigInt>().ok())
            .collect();
        if let Some(coeffs) = coeffs {
            engine.import_memo(key.to_string(), IntPoly::from_coeffs(coeffs));
        }
    }
}

/// Write entries that are not on disk yet.
pub fn save(engine: &Engine, dir: &Path) {
    if fs::create_dir_all(dir).is_err() {
        return;
    }
    for (key, poly) in engine.export_memo() {
        let name = format!("{:016x}.memo", fnv1a64(key.as_bytes()));
        let path = dir.join(name);
        if path.exists() {
            continue;
        }
        let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
        let body = format!("{HEADER}\n{key}\n{}\n", coeffs.join(" "));
        let _ = fs::write(path, body);
    }
}
