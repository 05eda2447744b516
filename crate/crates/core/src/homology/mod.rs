//! Exact simplicial homology: reduced homology of a complex and homology of
//! a pair, over ℤ (Smith normal form) or over ℚ and 𝔽_p (rank computation).

mod matrix;
mod rank;
mod snf;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

pub use matrix::IntegerMatrix;
pub use snf::{invariant_factors, smith_normal_form, verify_snf, SnfResult};

use matrix::SparseMatrix;

/// Coefficients for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Integers,
    Rationals,
    /// 𝔽_p with `p` prime and `p < 2^31`.
    PrimeField(u32),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    pub fn is_field(self) -> bool {
        !matches!(self, FieldSpec::Integers)
    }

    /// Characteristic; zero for ℤ and ℚ.
    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::PrimeField(p) => p,
            _ => 0,
        }
    }

    /// Field used for depth when coefficients are ℤ: ℚ stands in for ℤ.
    pub fn depth_field(self) -> FieldSpec {
        match self {
            FieldSpec::Integers => FieldSpec::Rationals,
            f => f,
        }
    }

    /// Short mathematical symbol: `Z`, `Q`, `F2`, …
    pub fn symbol(self) -> String {
        match self {
            FieldSpec::Integers => "Z".into(),
            FieldSpec::Rationals => "Q".into(),
            FieldSpec::PrimeField(p) => format!("F{p}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Integers => write!(f, "z"),
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::PrimeField(p) => write!(f, "f{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `z`, `q`, `f<p>` and `fp:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "z" => return Ok(FieldSpec::Integers),
            "q" => return Ok(FieldSpec::Rationals),
            _ => {}
        }
        let digits = t.strip_prefix("fp:").or_else(|| t.strip_prefix('f'));
        match digits.and_then(|d| d.parse::<u64>().ok()) {
            Some(p) => FieldSpec::prime(p),
            None => Err(Error::UnknownField(s.to_string())),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn serialize_torsion<S: Serializer>(
    t: &[BigUint],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(t.len()))?;
    for x in t {
        match u64::try_from(x) {
            Ok(v) => seq.serialize_element(&v)?,
            Err(_) => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

/// One homology group: `ℤ^free ⊕ ⊕ ℤ/t` over the integers, or `F^free` over
/// a field (torsion always empty).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub free_rank: usize,
    /// Elementary divisors `≥ 2`, each dividing the next.
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of torsion coefficients divisible by `p`.
    pub fn p_torsion_count(&self, p: u32) -> usize {
        let p = BigUint::from(p);
        self.torsion.iter().filter(|t| (*t % &p).is_zero()).count()
    }

    pub fn render(&self, coeff: FieldSpec) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push(coeff.symbol()),
            r => parts.push(format!("{}^{r}", coeff.symbol())),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        parts.join(" + ")
    }
}

/// Homology in consecutive degrees starting at `min_degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub coefficients: FieldSpec,
    /// Augmented chain complex (degree -1 present) versus plain pair homology.
    pub reduced: bool,
    pub min_degree: isize,
    pub groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    fn zero(coefficients: FieldSpec, reduced: bool) -> Self {
        HomologyProfile {
            coefficients,
            reduced,
            min_degree: if reduced { -1 } else { 0 },
            groups: vec![HomologyGroup::default()],
        }
    }

    /// The group in `degree`; zero outside the stored range.
    pub fn group(&self, degree: isize) -> HomologyGroup {
        usize::try_from(degree - self.min_degree)
            .ok()
            .and_then(|k| self.groups.get(k).cloned())
            .unwrap_or_default()
    }

    /// Free rank in `degree`, i.e. the Betti number over a field.
    pub fn betti(&self, degree: isize) -> usize {
        self.group(degree).free_rank
    }

    pub fn max_degree(&self) -> isize {
        self.min_degree + self.groups.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_zero)
    }

    /// Degrees carrying a nonzero group.
    pub fn nonzero_degrees(&self) -> Vec<isize> {
        (self.min_degree..=self.max_degree())
            .filter(|&d| !self.group(d).is_zero())
            .collect()
    }

    /// Degree-wise equality of groups, ignoring stored ranges and the
    /// coefficient tag.
    pub fn same_groups(&self, other: &HomologyProfile) -> bool {
        let lo = self.min_degree.min(other.min_degree);
        let hi = self.max_degree().max(other.max_degree());
        (lo..=hi).all(|d| self.group(d) == other.group(d))
    }

    /// Alternating sum of free ranks.
    pub fn euler_characteristic(&self) -> i64 {
        (self.min_degree..=self.max_degree())
            .map(|d| {
                let b = self.betti(d) as i64;
                if d.rem_euclid(2) == 0 {
                    b
                } else {
                    -b
                }
            })
            .sum()
    }
}

impl fmt::Display for HomologyProfile {
    /// `H~0: 0, H~1: Z/2, H~2: 0`; degree -1 is listed only when nonzero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.reduced { "H~" } else { "H" };
        let lo = if self.group(-1).is_zero() { 0 } else { -1 };
        let hi = self.max_degree().max(0);
        let parts: Vec<String> = (lo..=hi)
            .map(|d| format!("{tag}{d}: {}", self.group(d).render(self.coefficients)))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Chain complex with bases indexed from `min_degree`; `boundaries[k]` maps
/// degree `min_degree + k` to the degree below.
struct ChainComplex {
    min_degree: isize,
    dims: Vec<usize>,
    boundaries: Vec<SparseMatrix>,
}

fn boundary_between(lower: &[Simplex], upper: &[Simplex]) -> SparseMatrix {
    let index: HashMap<&Simplex, usize> = lower.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = SparseMatrix::empty(lower.len(), upper.len());
    for (c, sigma) in upper.iter().enumerate() {
        if sigma.is_empty() {
            continue;
        }
        for j in 0..sigma.len() {
            if let Some(&r) = index.get(&sigma.without_index(j)) {
                m.columns[c].push((r, if j % 2 == 0 { 1 } else { -1 }));
            }
        }
    }
    m
}

impl ChainComplex {
    /// Augmented simplicial chain complex; degree -1 is spanned by the empty
    /// face.
    fn reduced(k: &SimplicialComplex) -> Self {
        Self::from_levels(k.faces_by_dim(), -1)
    }

    fn from_levels(levels: Vec<Vec<Simplex>>, min_degree: isize) -> Self {
        let mut boundaries = Vec::with_capacity(levels.len());
        for (k, level) in levels.iter().enumerate() {
            let lower: &[Simplex] = if k == 0 { &[] } else { &levels[k - 1] };
            boundaries.push(boundary_between(lower, level));
        }
        ChainComplex { min_degree, dims: levels.iter().map(Vec::len).collect(), boundaries }
    }

    fn homology(&self, coeff: FieldSpec, reduced: bool) -> HomologyProfile {
        let len = self.dims.len();
        if len == 0 {
            return HomologyProfile::zero(coeff, reduced);
        }
        // ranks[k] = rank of boundaries[k]; torsion[k] = factors > 1 of it.
        let mut ranks = vec![0usize; len + 1];
        let mut torsion: Vec<Vec<BigUint>> = vec![Vec::new(); len + 1];
        for (k, b) in self.boundaries.iter().enumerate() {
            if b.rows == 0 || b.cols == 0 || b.nnz() == 0 {
                continue;
            }
            let dense = b.to_dense_i64();
            match coeff {
                FieldSpec::Rationals => ranks[k] = rank::rank_rational(dense),
                FieldSpec::PrimeField(p) => ranks[k] = rank::rank_mod_p(&dense, p),
                FieldSpec::Integers => {
                    let f = snf::invariant_factors_dense(dense);
                    ranks[k] = f.len();
                    torsion[k] = f
                        .into_iter()
                        .filter(|x| *x > BigInt::from(1))
                        .map(|x| x.magnitude().clone())
                        .collect();
                }
            }
        }
        let groups = (0..len)
            .map(|k| HomologyGroup {
                free_rank: self.dims[k] - ranks[k] - ranks[k + 1],
                torsion: std::mem::take(&mut torsion[k + 1]),
            })
            .collect();
        HomologyProfile { coefficients: coeff, reduced, min_degree: self.min_degree, groups }
    }
}

/// Boundary map from `i`-faces to `(i-1)`-faces of the augmented chain
/// complex, rows and columns in canonical face order. `i = 0` is the
/// augmentation row. Degrees outside `-1..=dim+1` give a `0×0` matrix.
pub fn boundary_matrix(k: &SimplicialComplex, i: isize) -> IntegerMatrix {
    if k.is_void() || i < -1 || i > k.dim() + 1 {
        return IntegerMatrix::zeros(0, 0);
    }
    let levels = k.faces_by_dim();
    let at = |d: isize| -> &[Simplex] {
        usize::try_from(d + 1)
            .ok()
            .and_then(|x| levels.get(x))
            .map_or(&[], Vec::as_slice)
    };
    boundary_between(at(i - 1), at(i)).to_integer_matrix()
}

/// Reduced integral homology via Smith normal form.
pub fn reduced_homology_z(k: &SimplicialComplex) -> HomologyProfile {
    ChainComplex::reduced(k).homology(FieldSpec::Integers, true)
}

/// Reduced homology over ℚ or 𝔽_p.
pub fn reduced_homology_field(k: &SimplicialComplex, f: FieldSpec) -> Result<HomologyProfile> {
    if !f.is_field() {
        return Err(Error::NotAField(f.to_string()));
    }
    Ok(ChainComplex::reduced(k).homology(f, true))
}

/// Reduced homology with any coefficients.
pub fn reduced_homology(k: &SimplicialComplex, coeff: FieldSpec) -> HomologyProfile {
    ChainComplex::reduced(k).homology(coeff, true)
}

/// Homology of the pair `(l, k)`: the quotient chain complex `C(l)/C(k)`,
/// unreduced.
pub fn relative_homology(
    l: &SimplicialComplex,
    k: &SimplicialComplex,
    coeff: FieldSpec,
) -> Result<HomologyProfile> {
    if l.n() != k.n() {
        return Err(Error::AmbientMismatch(l.n(), k.n()));
    }
    if !k.facets().iter().all(|f| l.contains_face(f)) {
        return Err(Error::NotSubcomplex);
    }
    let mut levels: Vec<Vec<Simplex>> = l
        .faces_by_dim()
        .into_iter()
        .skip(1)
        .map(|level| level.into_iter().filter(|s| !k.contains_face(s)).collect())
        .collect();
    while levels.last().is_some_and(Vec::is_empty) {
        levels.pop();
    }
    Ok(ChainComplex::from_levels(levels, 0).homology(coeff, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s<const N: usize>(v: [usize; N]) -> Simplex {
        Simplex::from(v)
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::new(3, vec![s([1, 2]), s([1, 3]), s([2, 3])], false).unwrap()
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("z".parse::<FieldSpec>().unwrap(), FieldSpec::Integers);
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("f2".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(2));
        assert_eq!("fp:7".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(7));
        assert_eq!("fp:4".parse::<FieldSpec>().unwrap_err(), Error::InvalidPrime(4));
        assert!("fp:2147483659".parse::<FieldSpec>().is_err());
        assert!("r".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::PrimeField(3).to_string(), "f3");
    }

    #[test]
    fn boundary_matrix_examples() {
        let k = hollow_triangle();
        let d1 = boundary_matrix(&k, 1);
        assert_eq!((d1.rows(), d1.cols()), (3, 3));
        assert_eq!(invariant_factors(&d1).len(), 2);
        // Edge {1,2} has boundary {2} - {1}.
        assert_eq!(d1.get(0, 0), &BigInt::from(-1));
        assert_eq!(d1.get(1, 0), &BigInt::from(1));

        let d0 = boundary_matrix(&k, 0);
        assert_eq!(d0, IntegerMatrix::from_rows(&[[1, 1, 1]]));

        let dm1 = boundary_matrix(&k, -1);
        assert_eq!((dm1.rows(), dm1.cols()), (0, 1));
        let top = boundary_matrix(&k, 2);
        assert_eq!((top.rows(), top.cols()), (3, 0));
        let out = boundary_matrix(&k, 7);
        assert_eq!((out.rows(), out.cols()), (0, 0));
    }

    #[test]
    fn consecutive_boundaries_compose_to_zero() {
        let k = SimplicialComplex::full_simplex(5);
        for i in 0..=k.dim() {
            let prod = boundary_matrix(&k, i).mul(&boundary_matrix(&k, i + 1));
            assert!(prod.is_zero(), "degree {i}");
        }
    }

    #[test]
    fn hollow_triangle_homology() {
        let h = reduced_homology_z(&hollow_triangle());
        assert!(h.group(0).is_zero());
        assert_eq!(h.group(1), HomologyGroup { free_rank: 1, torsion: vec![] });
        assert_eq!(h.to_string(), "H~0: 0, H~1: Z");
    }

    #[test]
    fn full_simplex_is_acyclic() {
        for n in 1..=6 {
            assert!(reduced_homology_z(&SimplicialComplex::full_simplex(n)).is_zero());
        }
    }

    #[test]
    fn conventions_for_void_and_irrelevant() {
        let h = reduced_homology_z(&SimplicialComplex::void(3));
        assert!(h.is_zero());
        let h = reduced_homology_z(&SimplicialComplex::irrelevant(3));
        assert_eq!(h.betti(-1), 1);
        assert_eq!(h.nonzero_degrees(), vec![-1]);
        assert_eq!(h.to_string(), "H~-1: Z, H~0: 0");
    }

    #[test]
    fn field_homology_rejects_integers() {
        let err = reduced_homology_field(&hollow_triangle(), FieldSpec::Integers).unwrap_err();
        assert!(matches!(err, Error::NotAField(_)));
    }

    #[test]
    fn two_points_over_any_field() {
        let k = SimplicialComplex::new(2, vec![s([1]), s([2])], false).unwrap();
        for f in [FieldSpec::Rationals, FieldSpec::PrimeField(2), FieldSpec::PrimeField(5)] {
            let h = reduced_homology_field(&k, f).unwrap();
            assert_eq!(h.betti(0), 1);
            assert_eq!(h.nonzero_degrees(), vec![0]);
        }
    }

    #[test]
    fn relative_homology_examples() {
        let l = hollow_triangle();
        assert!(relative_homology(&l, &l, FieldSpec::Integers).unwrap().is_zero());

        let full = SimplicialComplex::full_simplex(3);
        let h = relative_homology(&full, &l, FieldSpec::Integers).unwrap();
        assert_eq!(h.nonzero_degrees(), vec![2]);
        assert_eq!(h.group(2), HomologyGroup { free_rank: 1, torsion: vec![] });
        assert!(!h.reduced);

        let err = relative_homology(&l, &full, FieldSpec::Rationals).unwrap_err();
        assert_eq!(err, Error::NotSubcomplex);
        let other = SimplicialComplex::full_simplex(4);
        assert!(relative_homology(&other, &l, FieldSpec::Rationals).is_err());
    }

    #[test]
    fn pair_with_void_is_unreduced_homology() {
        let l = hollow_triangle();
        let h = relative_homology(&l, &SimplicialComplex::void(3), FieldSpec::Integers).unwrap();
        assert_eq!(h.betti(0), 1);
        assert_eq!(h.betti(1), 1);
    }

    #[test]
    fn profile_serializes_to_json() {
        let h = reduced_homology_z(&hollow_triangle());
        let json = serde_json::to_value(&h).unwrap();
        assert_eq!(json["coefficients"], "z");
        assert_eq!(json["groups"][2]["free_rank"], 1);
    }
}
