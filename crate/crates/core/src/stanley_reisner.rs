//! The Stanley–Reisner dictionary and the minimal-prime complex Δ.
//!
//! For squarefree monomial primes the radical of a sum of primes is the prime
//! on the union of their variable sets, so "the radical is not the maximal
//! ideal" becomes "the union is not all of `{1, …, n}`".

use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Minimal primes of a squarefree monomial ideal, each given by its set of
/// variables. The empty set is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeFamily {
    ambient: usize,
    primes: Vec<Simplex>,
}

/// Supports of the minimal monomial generators of a Stanley–Reisner ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SRGenerators {
    ambient: usize,
    generators: Vec<Simplex>,
}

fn check_vertices(n: usize, sets: &[Simplex]) -> Result<()> {
    for s in sets {
        if let Some(&v) = s.vertices().iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    Ok(())
}

fn find_containment(sets: &[Simplex]) -> Option<(usize, usize)> {
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate() {
            if i != j && a.is_subset(b) {
                return Some((j, i));
            }
        }
    }
    None
}

impl PrimeFamily {
    /// Validates the family; list order is kept because it fixes the vertex
    /// labels of Δ.
    pub fn new(ambient: usize, primes: Vec<Simplex>) -> Result<Self> {
        check_vertices(ambient, &primes)?;
        if let Some((big, small)) = find_containment(&primes) {
            return Err(Error::NotAntichain(primes[big].to_string(), primes[small].to_string()));
        }
        Ok(PrimeFamily { ambient, primes })
    }

    /// Same family, sorted lexicographically.
    pub fn canonical(mut self) -> Self {
        self.primes.sort_unstable();
        self
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn primes(&self) -> &[Simplex] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }
}

impl SRGenerators {
    pub fn new(ambient: usize, mut generators: Vec<Simplex>) -> Result<Self> {
        check_vertices(ambient, &generators)?;
        if generators.iter().any(Simplex::is_empty) {
            return Err(Error::InvalidGenerators("the unit ideal is excluded".into()));
        }
        if let Some((big, small)) = find_containment(&generators) {
            return Err(Error::InvalidGenerators(format!(
                "{} contains {}",
                generators[big], generators[small]
            )));
        }
        generators.sort_unstable();
        Ok(SRGenerators { ambient, generators })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Simplex] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Minimal non-faces of `k`: the supports of the generators of `I(k)`.
pub fn sr_generators(k: &SimplicialComplex) -> Result<SRGenerators> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    Ok(SRGenerators { ambient: k.n(), generators: k.minimal_nonfaces() })
}

/// The complex whose faces contain no generator.
pub fn complex_from_generators(g: &SRGenerators) -> SimplicialComplex {
    let n = g.ambient;
    if g.generators.is_empty() {
        return SimplicialComplex::full_simplex(n);
    }
    // The complements of the generators are the facets of the Alexander dual.
    let full = Simplex::full(n);
    let dual_facets = g.generators.iter().map(|m| full.difference(m)).collect();
    SimplicialComplex::from_faces_unchecked(n, dual_facets, false)
        .alexander_dual()
        .complex
}

/// Minimal primes of `I(k)`: the complement of each facet, in facet order.
pub fn minimal_primes(k: &SimplicialComplex) -> Result<PrimeFamily> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    let full = Simplex::full(k.n());
    Ok(PrimeFamily {
        ambient: k.n(),
        primes: k.facets().iter().map(|f| full.difference(f)).collect(),
    })
}

/// Δ on the primes: vertex `i` is `primes[i-1]`, and an index set is a face
/// iff the union of its primes is not the full variable set.
pub fn delta_of_primes(p: &PrimeFamily) -> SimplicialComplex {
    let t = p.primes.len();
    if p.ambient == 0 {
        return SimplicialComplex::void(t);
    }
    // Index sets avoiding a fixed variable x are exactly the faces missing x.
    let avoiding = (1..=p.ambient)
        .map(|x| {
            Simplex::new(
                p.primes
                    .iter()
                    .enumerate()
                    .filter(|(_, q)| !q.contains(x))
                    .map(|(i, _)| i + 1),
            )
        })
        .collect();
    SimplicialComplex::from_faces_unchecked(t, avoiding, true)
}

/// Δ(S/I(k)), with vertex `i` the prime complementary to the `i`-th facet.
pub fn delta_of_complex(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    Ok(delta_of_primes(&minimal_primes(k)?))
}
