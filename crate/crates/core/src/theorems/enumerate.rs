//! Exhaustive and random generation of complexes.

use rand::Rng;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

pub const MAX_EXHAUSTIVE_N: usize = 5;

fn mask_simplex(mask: u64, n: usize) -> Simplex {
    Simplex::new((0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1))
}

/// Every non-void complex on `{1, …, n}`, one per antichain of nonempty
/// subsets (the empty antichain gives `{∅}`), in depth-first order.
pub fn enumerate_complexes(n: usize) -> Result<Vec<SimplicialComplex>> {
    if n == 0 || n > MAX_EXHAUSTIVE_N {
        return Err(Error::ExhaustiveTooLarge(n));
    }
    let top = 1u64 << n;
    let mut out = Vec::new();
    let mut chosen: Vec<u64> = Vec::new();
    fn walk(
        start: u64,
        top: u64,
        n: usize,
        chosen: &mut Vec<u64>,
        out: &mut Vec<SimplicialComplex>,
    ) {
        let faces = chosen.iter().map(|&m| mask_simplex(m, n)).collect();
        out.push(SimplicialComplex::from_faces_unchecked(n, faces, true));
        for m in start..top {
            let incomparable = chosen.iter().all(|&c| c & m != c && c & m != m);
            if incomparable {
                chosen.push(m);
                walk(m + 1, top, n, chosen, out);
                chosen.pop();
            }
        }
    }
    walk(1, top, n, &mut chosen, &mut out);
    Ok(out)
}

/// Random complex: facet count uniform in `1..=n+2`, each facet uniform among
/// the nonempty subsets of `{1, …, n}`, then canonicalised.
pub fn random_complex<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SimplicialComplex {
    assert!((1..64).contains(&n), "random complexes need 1 <= n < 64");
    let count = rng.gen_range(1..=n + 2);
    let top = 1u64 << n;
    let faces = (0..count).map(|_| mask_simplex(rng.gen_range(1..top), n)).collect();
    SimplicialComplex::from_faces_unchecked(n, faces, true)
}
