//! Brute-force sampling of the negative region in logarithmic coordinates.
//!
//! The orthant is mapped to ℝⁿ by y = log x, a box in y-space is sampled on
//! a uniform grid, and negative grid nodes are joined to their negative
//! axis neighbours. The result approximates the number of connected
//! components of f⁻¹(ℝ₋) and depends on the box and the resolution, both
//! of which are echoed in the report.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signomial::{FloatSignomial, Sign, Signomial, DEFAULT_REL_TOL};

/// Environment variable capping the number of evaluation threads.
pub const THREADS_ENV: &str = "DESC_REGIONS_THREADS";
pub const DEFAULT_HALF_WIDTH: f64 = 8.0;
pub const DEFAULT_CELL_CAP: usize = 50_000_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    /// Per-axis `[lo, hi]` in log coordinates.
    pub bounds: Vec<(f64, f64)>,
    /// Samples per axis, endpoints included.
    pub resolution: usize,
    /// Relative tolerance for sign decisions.
    pub rel_tol: f64,
    pub cell_cap: usize,
}

/// Samples per axis used when no resolution is given.
pub fn default_resolution(n: usize) -> usize {
    match n {
        1 => 100_000,
        2 => 400,
        3 => 60,
        4 => 24,
        _ => 8,
    }
}

impl GridSpec {
    /// `[-8, 8]ⁿ` at the default resolution for `n`.
    pub fn default_for(n: usize) -> Self {
        Self::cube(n, -DEFAULT_HALF_WIDTH, DEFAULT_HALF_WIDTH, default_resolution(n))
    }

    pub fn cube(n: usize, lo: f64, hi: f64, resolution: usize) -> Self {
        GridSpec {
            bounds: vec![(lo, hi); n],
            resolution,
            rel_tol: DEFAULT_REL_TOL,
            cell_cap: DEFAULT_CELL_CAP,
        }
    }

    pub fn dim(&self) -> usize {
        self.bounds.len()
    }

    pub fn node_count(&self) -> Option<usize> {
        let mut total: usize = 1;
        for _ in 0..self.dim() {
            total = total.checked_mul(self.resolution)?;
        }
        Some(total)
    }

    fn validate(&self, n: usize) -> Result<usize> {
        if self.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: self.dim(),
            });
        }
        if self.resolution < 2 || self.bounds.iter().any(|(lo, hi)| !(lo < hi) || !lo.is_finite() || !hi.is_finite()) {
            return Err(Error::Unsupported(
                "grid needs resolution >= 2 and finite lo < hi on every axis".into(),
            ));
        }
        match self.node_count() {
            Some(c) if c <= self.cell_cap => Ok(c),
            _ => Err(Error::BudgetExceeded {
                what: "grid cell",
                limit: self.cell_cap,
            }),
        }
    }

    /// Log-coordinates of the node with the given flat index (axis 0 varies fastest).
    pub fn point(&self, mut index: usize) -> Vec<f64> {
        let r = self.resolution;
        self.bounds
            .iter()
            .map(|&(lo, hi)| {
                let k = index % r;
                index /= r;
                lo + (hi - lo) * k as f64 / (r - 1) as f64
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub component_count: usize,
    pub negative_cell_count: usize,
    /// One node per component (log coordinates), ordered by first node index.
    pub witnesses: Vec<Vec<f64>>,
    pub grid: GridSpec,
}

fn thread_count() -> usize {
    if cfg!(target_arch = "wasm32") {
        return 1;
    }
    let available = std::thread::available_parallelism().map_or(1, |n| n.get());
    match std::env::var(THREADS_ENV).ok().and_then(|s| s.trim().parse::<usize>().ok()) {
        Some(cap) if cap >= 1 => cap.min(available),
        _ => available,
    }
}

/// Evaluates `pred` at every node, in parallel chunks.
fn sample(grid: &GridSpec, total: usize, pred: &(dyn Fn(&[f64]) -> bool + Sync)) -> Vec<bool> {
    let threads = thread_count().min(total.div_ceil(4096)).max(1);
    let mut out = vec![false; total];
    if threads == 1 {
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = pred(&grid.point(i));
        }
        return out;
    }
    let chunk = total.div_ceil(threads);
    std::thread::scope(|s| {
        for (c, part) in out.chunks_mut(chunk).enumerate() {
            s.spawn(move || {
                for (k, slot) in part.iter_mut().enumerate() {
                    *slot = pred(&grid.point(c * chunk + k));
                }
            });
        }
    });
    out
}

fn is_negative(f: &FloatSignomial, y: &[f64], tol: f64) -> bool {
    f.sign_log_tol(y, tol) == Some(Sign::Neg)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so witnesses are first nodes
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Counts connected components of negative grid nodes under axis adjacency.
pub fn count_negative_components(f: &Signomial, grid: &GridSpec) -> Result<ComponentReport> {
    let total = grid.validate(f.dimension())?;
    let ff = f.to_float();
    let tol = grid.rel_tol;
    let neg = sample(grid, total, &|y| is_negative(&ff, y, tol));
    let r = grid.resolution;
    let n = grid.dim();
    let mut uf = UnionFind::new(total);
    for i in 0..total {
        if !neg[i] {
            continue;
        }
        let mut stride = 1;
        for _ in 0..n {
            if (i / stride) % r > 0 && neg[i - stride] {
                uf.union(i, i - stride);
            }
            stride *= r;
        }
    }
    let mut witnesses = Vec::new();
    let mut count = 0;
    for i in 0..total {
        if neg[i] {
            count += 1;
            if uf.find(i) == i {
                witnesses.push(grid.point(i));
            }
        }
    }
    Ok(ComponentReport {
        component_count: witnesses.len(),
        negative_cell_count: count,
        witnesses,
        grid: grid.clone(),
    })
}

/// First grid node (in index order) where f is negative beyond tolerance.
pub fn negativity_witness(f: &Signomial, grid: &GridSpec) -> Result<Option<Vec<f64>>> {
    let total = grid.validate(f.dimension())?;
    let ff = f.to_float();
    Ok((0..total)
        .map(|i| grid.point(i))
        .find(|y| is_negative(&ff, y, grid.rel_tol)))
}

/// First grid node where both f and g are negative beyond tolerance.
pub fn intersection_witness(f: &Signomial, g: &Signomial, grid: &GridSpec) -> Result<Option<Vec<f64>>> {
    if f.dimension() != g.dimension() {
        return Err(Error::DimensionMismatch {
            expected: f.dimension(),
            got: g.dimension(),
        });
    }
    let total = grid.validate(f.dimension())?;
    let (ff, gf) = (f.to_float(), g.to_float());
    Ok((0..total)
        .map(|i| grid.point(i))
        .find(|y| is_negative(&ff, y, grid.rel_tol) && is_negative(&gf, y, grid.rel_tol)))
}

/// Per-node negativity mask, for plotting.
pub fn negative_mask(f: &Signomial, grid: &GridSpec) -> Result<Vec<bool>> {
    let total = grid.validate(f.dimension())?;
    let ff = f.to_float();
    let tol = grid.rel_tol;
    Ok(sample(grid, total, &|y| is_negative(&ff, y, tol)))
}
