//! Depth of Stanley–Reisner rings.
//!
//! Multigraded Betti numbers come from Hochster's formula
//! `β_{i,W} = dim H̃_{|W|-i-1}(K_W; F)`, projective dimension is the largest
//! `i` with a nonzero entry, and depth is `n - pdim`. Reisner's link
//! criterion gives an independent test for the Cohen–Macaulay property.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{reduced_homology_field, FieldSpec};

/// Default ceiling on `n` for a full Hochster table (`2^n` homology
/// computations).
pub const DEFAULT_VERTEX_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub w: Simplex,
    pub beta: usize,
}

/// Nonzero multigraded Betti numbers `β_{i,W}` of `S/I(K)`, including the
/// conventional `β_{0,∅} = 1`. Entries are ordered by `i`, then `|W|`, then
/// `W` lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub n: usize,
    pub field: FieldSpec,
    pub entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn get(&self, i: usize, w: &Simplex) -> usize {
        self.entries
            .iter()
            .find(|e| e.i == i && &e.w == w)
            .map_or(0, |e| e.beta)
    }

    /// Projective dimension: largest `i ≥ 1` with a nonzero entry, else 0.
    pub fn projective_dimension(&self) -> usize {
        self.entries.iter().filter(|e| e.i >= 1).map(|e| e.i).max().unwrap_or(0)
    }

    /// Total Betti number `β_i = Σ_W β_{i,W}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|e| e.i == i).map(|e| e.beta).sum()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "i  W  beta")?;
        for e in &self.entries {
            writeln!(f, "{}  {}  {}", e.i, e.w, e.beta)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthReport {
    pub field: FieldSpec,
    pub n: usize,
    pub pdim: usize,
    pub depth: usize,
    pub krull_dim: usize,
    pub cohen_macaulay: bool,
}

impl fmt::Display for DepthReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pdim={} depth={} dim={} CM={}",
            self.pdim, self.depth, self.krull_dim, self.cohen_macaulay
        )
    }
}

fn require_field(f: FieldSpec) -> Result<()> {
    if f.is_field() {
        Ok(())
    } else {
        Err(Error::NotAField(f.to_string()))
    }
}

fn mask_to_simplex(mask: u32, n: usize) -> Simplex {
    Simplex::new((0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1))
}

pub fn hochster_betti_table(k: &SimplicialComplex, f: FieldSpec) -> Result<BettiTable> {
    hochster_betti_table_capped(k, f, DEFAULT_VERTEX_CAP)
}

pub fn hochster_betti_table_capped(
    k: &SimplicialComplex,
    f: FieldSpec,
    cap: usize,
) -> Result<BettiTable> {
    require_field(f)?;
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    let n = k.n();
    if n > cap || n >= 32 {
        return Err(Error::TooManyVertices { n, cap });
    }
    let per_subset: Vec<Vec<BettiEntry>> = (0u32..1 << n)
        .into_par_iter()
        .map(|mask| {
            let w = mask_to_simplex(mask, n);
            let kw = k.restriction(&w).expect("W lies in the ambient set");
            let h = reduced_homology_field(&kw, f).expect("coefficients checked above");
            let size = w.len() as isize;
            (h.min_degree..=h.max_degree())
                .filter_map(|j| {
                    let beta = h.betti(j);
                    let i = size - j - 1;
                    (beta > 0 && (i >= 1 || w.is_empty()))
                        .then(|| BettiEntry { i: i as usize, w: w.clone(), beta })
                })
                .collect()
        })
        .collect();
    let mut entries: Vec<BettiEntry> = per_subset.into_iter().flatten().collect();
    entries.sort_by(|a, b| (a.i, a.w.len(), &a.w).cmp(&(b.i, b.w.len(), &b.w)));
    Ok(BettiTable { n, field: f, entries })
}

/// Depth via Hochster's formula and Auslander–Buchsbaum.
pub fn depth(k: &SimplicialComplex, f: FieldSpec) -> Result<DepthReport> {
    depth_capped(k, f, DEFAULT_VERTEX_CAP)
}

pub fn depth_capped(k: &SimplicialComplex, f: FieldSpec, cap: usize) -> Result<DepthReport> {
    let table = hochster_betti_table_capped(k, f, cap)?;
    Ok(depth_from_table(k, &table))
}

pub fn depth_from_table(k: &SimplicialComplex, table: &BettiTable) -> DepthReport {
    let pdim = table.projective_dimension();
    let n = k.n();
    let depth = n - pdim;
    let krull_dim = (k.dim() + 1) as usize;
    DepthReport {
        field: table.field,
        n,
        pdim,
        depth,
        krull_dim,
        cohen_macaulay: depth == krull_dim,
    }
}

/// Reisner's criterion: every link `lk(σ)`, including `lk(∅) = K`, has
/// vanishing reduced homology below its top dimension.
pub fn is_cohen_macaulay_reisner(k: &SimplicialComplex, f: FieldSpec) -> Result<bool> {
    require_field(f)?;
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    for level in k.faces_by_dim() {
        for sigma in level {
            let lk = k.link(&sigma).expect("sigma is a face");
            let h = reduced_homology_field(&lk, f)?;
            if (-1..lk.dim()).any(|i| h.betti(i) != 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
