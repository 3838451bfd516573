//! Orbit and stabilizer of a matrix under the sign maps.
//!
//! `φ_c(A) = φ_d(A)` iff `c_i·c_j = d_i·d_j` on every edge of the graph with
//! an edge `{i, j}` whenever `a_ij ≠ 0` or `a_ji ≠ 0`, i.e. iff `c·d` is
//! constant on each connected component. With `t` components there are
//! `2^(t−1)` admissible sign vectors fixing `A` and `2^(n−t)` distinct images.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::par;
use crate::signs::{apply_phi, SignVector};

/// Union by rank with path compression.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n] }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            cur = std::mem::replace(&mut self.parent[cur], root);
        }
        root
    }

    /// Returns false if `x` and `y` were already joined.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        match self.rank[rx].cmp(&self.rank[ry]) {
            std::cmp::Ordering::Less => self.parent[rx] = ry,
            std::cmp::Ordering::Greater => self.parent[ry] = rx,
            std::cmp::Ordering::Equal => {
                self.parent[ry] = rx;
                self.rank[rx] += 1;
            }
        }
        true
    }
}

/// Component ids `1..=t`, numbered in order of each component's lowest
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    pub labels: Vec<usize>,
    pub t: usize,
}

/// Connected components of the simple graph of `a`. Diagonal entries never
/// create edges.
pub fn graph_components(a: &Matrix) -> Result<ComponentLabeling> {
    let n = a.square_dim()?;
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if !a.get(i, j).is_zero() || !a.get(j, i).is_zero() {
                uf.union(i, j);
            }
        }
    }
    let mut root_label = vec![0usize; n];
    let mut labels = Vec::with_capacity(n);
    let mut t = 0;
    for v in 0..n {
        let root = uf.find(v);
        if root_label[root] == 0 {
            t += 1;
            root_label[root] = t;
        }
        labels.push(root_label[root]);
    }
    Ok(ComponentLabeling { labels, t })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub labeling: ComponentLabeling,
    pub t: usize,
    /// `2^(n−t)`.
    pub orbit_size: BigUint,
    /// `2^(t−1)`.
    pub stabilizer_size: BigUint,
    /// Distinct `φ_c(A)` in ascending order, when `n` is within the
    /// enumeration cap.
    pub enumerated: Option<Vec<Matrix>>,
}

impl OrbitReport {
    /// Whether the brute-force enumeration, if any, has `orbit_size` members.
    pub fn enumeration_matches(&self) -> bool {
        self.enumerated.as_ref().is_none_or(|e| BigUint::from(e.len()) == self.orbit_size)
    }
}

fn nonempty(a: &Matrix) -> Result<usize> {
    match a.square_dim()? {
        0 => Err(Error::Empty),
        n => Ok(n),
    }
}

pub fn orbit_size(a: &Matrix) -> Result<OrbitReport> {
    orbit_size_with(a, &Config::default())
}

/// Component count, orbit and stabilizer sizes, and (for `n ≤ orbit_cap`)
/// the enumerated orbit.
pub fn orbit_size_with(a: &Matrix, cfg: &Config) -> Result<OrbitReport> {
    let n = nonempty(a)?;
    let labeling = graph_components(a)?;
    let t = labeling.t;
    let enumerated = if n <= cfg.orbit_cap { Some(enumerate_orbit_with(a, cfg)?) } else { None };
    Ok(OrbitReport {
        t,
        orbit_size: BigUint::one() << (n - t),
        stabilizer_size: BigUint::one() << (t - 1),
        labeling,
        enumerated,
    })
}

/// Every distinct `φ_c(A)` over all admissible `c`, sorted.
pub fn enumerate_orbit_with(a: &Matrix, cfg: &Config) -> Result<Vec<Matrix>> {
    let n = nonempty(a)?;
    if n > cfg.orbit_cap {
        return Err(Error::SizeCapExceeded { what: "orbit enumeration", n, cap: cfg.orbit_cap });
    }
    let ranges = par::split(1u64 << (n - 1), par::chunk_count(cfg.threads));
    let parts = par::run(cfg.threads, ranges.len(), |t| {
        ranges[t].clone().map(|m| apply_phi(a, &SignVector::from_mask(n, m))).collect::<Result<BTreeSet<Matrix>>>()
    });
    let mut all = BTreeSet::new();
    for p in parts {
        all.extend(p?);
    }
    Ok(all.into_iter().collect())
}

pub fn stabilizer_elements(a: &Matrix) -> Result<Vec<SignVector>> {
    stabilizer_elements_with(a, &Config::default())
}

/// Admissible `c` with `φ_c(A) = A`, built from the components: `c` is
/// constant on each component, `+1` on the one holding vertex 1 and free on
/// the others. Sorted by bit mask.
pub fn stabilizer_elements_with(a: &Matrix, cfg: &Config) -> Result<Vec<SignVector>> {
    let n = nonempty(a)?;
    if n > cfg.orbit_cap {
        return Err(Error::SizeCapExceeded { what: "stabilizer enumeration", n, cap: cfg.orbit_cap });
    }
    let ComponentLabeling { labels, t } = graph_components(a)?;
    // label 1 always holds vertex 1; labels 2..=t are free
    let mut out: Vec<SignVector> = (0..1u64 << (t - 1))
        .map(|choice| {
            let signs = labels.iter().map(|&l| if l > 1 && (choice >> (l - 2)) & 1 == 1 { -1 } else { 1 }).collect();
            SignVector::new(signs).expect("vertex 1 keeps +1")
        })
        .collect();
    out.sort_by_key(SignVector::to_mask);
    Ok(out)
}

/// Admissible `c` with `φ_c(A) = A`, found by trying all of them.
pub fn stabilizer_brute_force(a: &Matrix, cfg: &Config) -> Result<Vec<SignVector>> {
    let n = nonempty(a)?;
    if n > cfg.orbit_cap {
        return Err(Error::SizeCapExceeded { what: "stabilizer enumeration", n, cap: cfg.orbit_cap });
    }
    let mut out = Vec::new();
    for c in SignVector::all(n) {
        if apply_phi(a, &c)? == *a {
            out.push(c);
        }
    }
    Ok(out)
}
