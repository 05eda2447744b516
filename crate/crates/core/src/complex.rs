//! Abstract simplicial complexes on the labelled vertex set `{1, …, n}`.
//!
//! A complex is stored by its facets. Every constructor prunes the input to
//! an antichain and sorts it lexicographically, so two complexes with the same
//! faces compare equal.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A face: a strictly increasing list of 1-based vertex labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    /// The full vertex set `{1, …, n}`.
    pub fn full(n: usize) -> Self {
        Simplex((1..=n).collect())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Simplex) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        !self.0.iter().any(|v| other.contains(*v))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        Simplex::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn intersection(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn difference(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    /// The face obtained by deleting the `j`-th smallest vertex (0-based).
    pub fn without_index(&self, j: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(j);
        Simplex(v)
    }

    /// All `2^len` subsets, in no particular order.
    pub fn subsets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let k = self.0.len();
        assert!(k < usize::BITS as usize, "simplex too large to enumerate");
        (0usize..(1 << k)).map(move |mask| {
            Simplex(
                (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl From<Vec<usize>> for Simplex {
    fn from(v: Vec<usize>) -> Self {
        Simplex::new(v)
    }
}

impl<const N: usize> From<[usize; N]> for Simplex {
    fn from(v: [usize; N]) -> Self {
        Simplex::new(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    /// No faces at all, not even the empty face.
    Void,
    /// Only the empty face.
    Irrelevant,
    /// At least one vertex.
    Nonempty,
}

/// An abstract simplicial complex on `{1, …, n}`, stored by its facets.
///
/// Vertices of the ambient set need not occur in any face.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Simplex>,
}

/// Output of [`SimplicialComplex::alexander_dual`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderDual {
    pub complex: SimplicialComplex,
    /// Set when the input was void or the full simplex; the set formula still
    /// applies but duality statements do not.
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVector {
    /// `counts[k]` is the number of faces of dimension `k - 1`, so `counts[0]`
    /// is `f_{-1}`.
    pub counts: Vec<usize>,
}

impl FVector {
    pub fn f(&self, dim: isize) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.counts.get(k).copied())
            .unwrap_or(0)
    }
}

fn maximal_elements(mut sets: Vec<Simplex>) -> Vec<Simplex> {
    sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<Simplex> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces`. With no generating faces the
    /// result is the irrelevant complex when `include_empty` is set and the
    /// void complex otherwise.
    pub fn new(n: usize, faces: Vec<Simplex>, include_empty: bool) -> Result<Self> {
        for f in &faces {
            if let Some(&v) = f.vertices().iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        Ok(Self::from_faces_unchecked(n, faces, include_empty))
    }

    pub(crate) fn from_faces_unchecked(n: usize, faces: Vec<Simplex>, include_empty: bool) -> Self {
        let mut facets = maximal_elements(faces);
        if facets.is_empty() && include_empty {
            facets.push(Simplex::empty());
        }
        SimplicialComplex { n, facets }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![Simplex::empty()] }
    }

    pub fn full_simplex(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![Simplex::full(n)] }
    }

    /// Ambient vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn kind(&self) -> ComplexKind {
        match self.facets.as_slice() {
            [] => ComplexKind::Void,
            [f] if f.is_empty() => ComplexKind::Irrelevant,
            _ => ComplexKind::Nonempty,
        }
    }

    pub fn is_void(&self) -> bool {
        self.kind() == ComplexKind::Void
    }

    pub fn is_irrelevant(&self) -> bool {
        self.kind() == ComplexKind::Irrelevant
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].len() == self.n
    }

    /// Dimension of the largest facet; `-1` for both the void and the
    /// irrelevant complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(Simplex::dim).max().unwrap_or(-1)
    }

    /// Vertices that belong to some face.
    pub fn vertex_support(&self) -> Simplex {
        Simplex::new(self.facets.iter().flat_map(|f| f.vertices().iter().copied()))
    }

    fn check_range(&self, s: &Simplex) -> Result<()> {
        match s.vertices().iter().find(|&&v| v == 0 || v > self.n) {
            Some(&v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    pub fn is_face(&self, s: &Simplex) -> Result<bool> {
        self.check_range(s)?;
        Ok(self.contains_face(s))
    }

    /// Unchecked membership: `s` lies in some facet.
    pub fn contains_face(&self, s: &Simplex) -> bool {
        self.facets.iter().any(|f| s.is_subset(f))
    }

    /// Every face grouped by size: entry `k` holds the faces of dimension
    /// `k - 1` in lexicographic order. Empty for the void complex.
    pub fn faces_by_dim(&self) -> Vec<Vec<Simplex>> {
        if self.is_void() {
            return Vec::new();
        }
        let top = self.facets.iter().map(Simplex::len).max().unwrap_or(0);
        let mut levels: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); top + 1];
        for f in &self.facets {
            for s in f.subsets() {
                levels[s.len()].insert(s);
            }
        }
        levels.into_iter().map(|l| l.into_iter().collect()).collect()
    }

    pub fn f_vector(&self) -> FVector {
        FVector { counts: self.faces_by_dim().iter().map(Vec::len).collect() }
    }

    /// Unreduced Euler characteristic `Σ_{i≥0} (-1)^i f_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .counts
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| if k % 2 == 1 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// `χ - 1` for non-void complexes, `0` for the void complex.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        if self.is_void() {
            0
        } else {
            self.euler_characteristic() - 1
        }
    }

    /// The induced subcomplex on `w`, relabelled to `{1, …, |w|}` in
    /// increasing order.
    pub fn restriction(&self, w: &Simplex) -> Result<SimplicialComplex> {
        self.check_range(w)?;
        let relabel = |s: Simplex| -> Simplex {
            Simplex(
                s.vertices()
                    .iter()
                    .map(|v| w.vertices().binary_search(v).unwrap() + 1)
                    .collect(),
            )
        };
        if self.is_void() {
            return Ok(SimplicialComplex::void(w.len()));
        }
        let faces = self.facets.iter().map(|f| relabel(f.intersection(w))).collect();
        Ok(Self::from_faces_unchecked(w.len(), faces, true))
    }

    /// Minimal subsets of `{1, …, n}` that are not faces. For the void complex
    /// this is the empty set alone.
    pub fn minimal_nonfaces(&self) -> Vec<Simplex> {
        if self.is_void() {
            return vec![Simplex::empty()];
        }
        let mut out = BTreeSet::new();
        for level in self.faces_by_dim() {
            for tau in level {
                for v in 1..=self.n {
                    if tau.contains(v) {
                        continue;
                    }
                    let cand = tau.union(&Simplex(vec![v]));
                    if self.contains_face(&cand) || out.contains(&cand) {
                        continue;
                    }
                    let minimal = (0..cand.len())
                        .all(|j| self.contains_face(&cand.without_index(j)));
                    if minimal {
                        out.insert(cand);
                    }
                }
            }
        }
        let mut v: Vec<Simplex> = out.into_iter().collect();
        v.sort_unstable();
        v
    }

    /// The Alexander dual `{σ ⊆ V : V∖σ ∉ K}` on the same ambient set.
    pub fn alexander_dual(&self) -> AlexanderDual {
        let full = Simplex::full(self.n);
        let degenerate = self.is_void() || self.is_full_simplex();
        let faces = self
            .minimal_nonfaces()
            .iter()
            .map(|m| full.difference(m))
            .collect();
        AlexanderDual {
            complex: Self::from_faces_unchecked(self.n, faces, false),
            degenerate,
        }
    }

    /// `lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}`, relabelled onto `V ∖ σ`.
    pub fn link(&self, s: &Simplex) -> Result<SimplicialComplex> {
        self.check_range(s)?;
        if !self.contains_face(s) {
            return Err(Error::NotAFace(s.to_string()));
        }
        let rest = Simplex::full(self.n).difference(s);
        let faces: Vec<Simplex> = self
            .facets
            .iter()
            .filter(|f| s.is_subset(f))
            .map(|f| f.difference(s))
            .collect();
        let star = Self::from_faces_unchecked(self.n, faces, true);
        star.restriction(&rest)
    }
}

/// Nerve of a cover: vertex `i` stands for `cover[i-1]`, and an index set is a
/// face iff the corresponding members share a vertex.
pub fn nerve(cover: &[Simplex]) -> Result<SimplicialComplex> {
    if cover.is_empty() {
        return Err(Error::EmptyCover);
    }
    let ground = Simplex::new(cover.iter().flat_map(|c| c.vertices().iter().copied()));
    // Faces of the nerve are exactly the subsets of the vertex stars.
    let stars = ground
        .vertices()
        .iter()
        .map(|&v| {
            Simplex(
                cover
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.contains(v))
                    .map(|(i, _)| i + 1)
                    .collect(),
            )
        })
        .collect();
    Ok(SimplicialComplex::from_faces_unchecked(cover.len(), stars, true))
}
