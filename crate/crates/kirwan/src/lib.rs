//! Exact facet inequalities of Kirwan polyhedra for holomorphic coadjoint
//! orbits of the classical Hermitian groups.
//!
//! For a noncompact simple group `G` in one of the families `Sp(ℝ^{2n})`,
//! `SU(p,q)`, `SO*(2n)`, `SO₀(p,2)` with maximal compact `K`, the projection
//! of a holomorphic coadjoint orbit `G·Λ` to `𝔨*` meets the positive Weyl
//! chamber of `K` in a convex polyhedron. This crate computes that
//! polyhedron symbolically in `Λ`:
//!
//! * [`rootdata`] builds the exact root system of the pair `(𝔤, 𝔨)`,
//!   including the compact/noncompact split and the holomorphic chamber;
//! * [`weyl`] enumerates the Weyl group of `K` with lengths, stabilizers
//!   and maximal-length coset representatives;
//! * [`schubert`] implements the integral cohomology ring of the flag
//!   variety of `K_ℂ` in the Schubert basis, with Chevalley multiplication
//!   by degree-2 classes and general cup products;
//! * [`pairs`] enumerates the finite set of well-covering triples
//!   `(w, w′, λ)` whose inequalities `⟨wλ, ξ⟩ ≤ ⟨w₀w′λ, Λ⟩` cut out the
//!   polyhedron;
//! * [`polyhedron`] assembles, instantiates, prunes (exact rational LP) and
//!   inspects the resulting H-representations;
//! * [`oracle`] is an independent floating-point moment-map sampler used to
//!   cross-validate every emitted inequality.
//!
//! All symbolic computation is exact (arbitrary-precision rationals); floats
//! appear only in the sampling oracle.

pub mod cli;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod pairs;
pub mod polyhedron;
pub mod rootdata;
pub mod schubert;
pub mod simplex;
pub mod weyl;

pub use error::KirwanError;
pub use linalg::Q;
pub use rootdata::{Coweight, Family, HermitianPair, Weight};

use std::sync::Arc;

/// Everything derived from one Hermitian pair: the Weyl group and the
/// Schubert ring, shared by the triple enumeration and the polyhedron
/// assembly. Immutable after construction.
pub struct Engine {
    pub pair: Arc<HermitianPair>,
    pub group: Arc<weyl::WeylGroup>,
    pub ring: schubert::SchubertRing,
}

impl Engine {
    pub fn new(pair: HermitianPair) -> Result<Self, KirwanError> {
        let pair = Arc::new(pair);
        let group = Arc::new(weyl::WeylGroup::enumerate(pair.clone())?);
        let ring = schubert::SchubertRing::new(group.clone());
        Ok(Engine { pair, group, ring })
    }

    /// Parse a group spec such as `sp:n=2`, `su:p=2,q=2`, `so_star:n=4`,
    /// `so:p=5,q=2` and build the engine for it.
    pub fn from_spec(spec: &str) -> Result<Self, KirwanError> {
        Engine::new(rootdata::parse_pair_spec(spec)?)
    }
}
