//! Bundled example complexes.

use num_bigint::BigUint;
use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex};
use crate::format::parse_complex;
use crate::homology::{reduced_homology_z, HomologyGroup};

pub const RP2_SOURCE: &str = include_str!("../data/rp2.cplx");

/// Six-vertex real projective plane.
pub fn reisner_rp2() -> SimplicialComplex {
    parse_complex(RP2_SOURCE).expect("bundled fixture parses").value
}

pub fn hollow_triangle() -> SimplicialComplex {
    SimplicialComplex::new(
        3,
        vec![Simplex::from([1, 2]), Simplex::from([1, 3]), Simplex::from([2, 3])],
        false,
    )
    .expect("vertices in range")
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureReport {
    pub checks: Vec<FixtureCheck>,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Structural self-check of a candidate RP² triangulation: 6 vertices, 10
/// triangles, 15 edges each in exactly two triangles, χ = 1 and
/// `H̃_1(·; ℤ) = ℤ/2`.
pub fn verify_rp2(k: &SimplicialComplex) -> FixtureReport {
    let mut checks = Vec::new();
    let mut push = |name, passed, detail: String| checks.push(FixtureCheck { name, passed, detail });

    let f = k.f_vector();
    push("six vertices", k.n() == 6 && f.f(0) == 6, format!("n={} f0={}", k.n(), f.f(0)));
    let triangles = k.facets().iter().filter(|s| s.len() == 3).count();
    push(
        "ten triangular facets",
        k.facets().len() == 10 && triangles == 10,
        format!("{} facets, {} of size 3", k.facets().len(), triangles),
    );
    push("fifteen edges", f.f(1) == 15, format!("f1={}", f.f(1)));

    let edges = k.faces_by_dim().get(2).cloned().unwrap_or_default();
    let bad: Vec<String> = edges
        .iter()
        .filter(|e| k.facets().iter().filter(|t| e.is_subset(t)).count() != 2)
        .map(|e| e.to_string())
        .collect();
    let detail = if bad.is_empty() {
        format!("all {} edges", edges.len())
    } else {
        format!("offending edges: {}", bad.join(" "))
    };
    push("every edge in two facets", bad.is_empty(), detail);

    let chi = k.euler_characteristic();
    push("euler characteristic 1", chi == 1, format!("chi={chi}"));

    let h = reduced_homology_z(k);
    let z2 = HomologyGroup { free_rank: 0, torsion: vec![BigUint::from(2u32)] };
    push(
        "H~1(Z) = Z/2, H~0 = H~2 = 0",
        h.group(1) == z2 && h.group(0).is_zero() && h.group(2).is_zero(),
        h.to_string(),
    );
    FixtureReport { checks }
}
