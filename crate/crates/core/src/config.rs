/// Size caps and worker count shared by the heavier operations.
///
/// The free functions in this crate use [`Config::default`]; call the
/// `*_with` variants to override caps or enable worker threads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Largest `n` accepted by `permanent`.
    pub permanent_cap: usize,
    /// Largest `n` accepted by `perm_poly` (cost grows as `3^n`).
    pub perm_poly_cap: usize,
    /// Largest `n` for full principal-subset enumeration.
    pub subset_cap: usize,
    /// Largest `n` for brute-force orbit and stabilizer enumeration.
    pub orbit_cap: usize,
    /// Worker threads; 1 runs everything on the calling thread.
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { permanent_cap: 20, perm_poly_cap: 12, subset_cap: 16, orbit_cap: 12, threads: 1 }
    }
}

impl Config {
    pub fn with_threads(self, threads: usize) -> Self {
        Config { threads: threads.max(1), ..self }
    }
}
