use sha2::{Digest, Sha256};

/// Per-run seed from the master seed, the problem name and the run index.
///
/// The solver and line search are deliberately not inputs, so every method
/// starts run `r` of a problem from the same point.
pub fn derive_run_seed(master: u64, problem: &str, run: usize) -> u64 {
    let mut h = Sha256::new();
    h.update(master.to_le_bytes());
    h.update((problem.len() as u64).to_le_bytes());
    h.update(problem.as_bytes());
    h.update((run as u64).to_le_bytes());
    let digest = h.finalize();
    u64::from_le_bytes(digest[..8].try_into().expect("digest has 32 bytes"))
}
