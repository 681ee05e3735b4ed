//! Root data of the classical Hermitian pairs `(𝔤, 𝔨)`.
//!
//! Each pair carries a fixed coordinate model of `𝔱*`:
//!
//! * `Sp(ℝ^{2n})`, `K = U(n)`: coordinates `e₁*, …, e_n*` of the diagonal
//!   torus of `U(n)`; noncompact positive roots `e_i* + e_j*` (`i ≤ j`).
//! * `SU(p,q)`, `K = S(U(p)×U(q))`: full `p+q` coordinates modulo the trace
//!   direction; weights canonicalize to sum-zero representatives, coweights
//!   are sum-zero integer vectors. Noncompact positive roots `e_i* − e_j*`
//!   with `i ≤ p < j`.
//! * `SO*(2n)`, `K = U(n)`: as for `Sp` but with noncompact positive roots
//!   `e_i* + e_j*` (`i < j`).
//! * `SO₀(p,2)`, `K = SO(p)×SO(2)`: coordinates `x₁, …, x_m, y` with
//!   `m = ⌊p/2⌋`; noncompact positive roots `y ± x_i` (and `y` for odd `p`).
//!
//! The central element `z₀` satisfies `α(z₀) = 0` on compact and
//! `β(z₀) = 1` on noncompact positive roots; the holomorphic chamber is the
//! part of the positive chamber where `(β, ξ) > 0` for every noncompact
//! positive root, the inner product coming from the Killing form (stored up
//! to a positive scalar, which only sign tests ever use).

use crate::error::KirwanError;
use crate::linalg::{self, dot_iq, Q};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    SpR,
    SUpq,
    SOstar,
    SOp2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::SpR => write!(f, "sp"),
            Family::SUpq => write!(f, "su"),
            Family::SOstar => write!(f, "so_star"),
            Family::SOp2 => write!(f, "so"),
        }
    }
}

/// Coordinate lattice of the torus model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lattice {
    /// `ℤ^rank`.
    Standard,
    /// Sum-zero sublattice of `ℤ^rank` (the `SU(p,q)` torus); weights are
    /// classes modulo the all-ones direction.
    SumZero,
}

/// Element of `𝔱*` in the `e_i*` coordinates. Exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Q>,
}

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Weight { coords }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight { coords: v.iter().map(|&x| linalg::q(x)).collect() }
    }

    pub fn zero(rank: usize) -> Self {
        Weight { coords: vec![Q::zero(); rank] }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight { coords: linalg::add(&self.coords, &other.coords) }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight { coords: linalg::sub(&self.coords, &other.coords) }
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight { coords: linalg::scale(&self.coords, c) }
    }

    pub fn neg(&self) -> Weight {
        self.scale(&linalg::q(-1))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(linalg::q_to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Integer coweight in the `e_i` coordinates; sum-zero for `SU(p,q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight {
    pub coords: Vec<i64>,
}

impl Coweight {
    pub fn new(coords: Vec<i64>) -> Self {
        Coweight { coords }
    }

    pub fn neg(&self) -> Coweight {
        Coweight { coords: self.coords.iter().map(|x| -x).collect() }
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }

    pub fn to_weight(&self) -> Weight {
        Weight::from_ints(&self.coords)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Full root datum of one Hermitian pair. Immutable after construction and
/// safe to share across threads.
#[derive(Clone, Debug)]
pub struct HermitianPair {
    pub family: Family,
    /// `(n, 0)` for `sp`/`so_star`, `(p, q)` for `su`, `(p, 2)` for `so`.
    pub params: (usize, usize),
    /// Number of stored coordinates of `𝔱*` (for `SU(p,q)` this is `p+q`,
    /// one more than `dim 𝔱`).
    pub rank: usize,
    pub lattice: Lattice,
    pub compact_pos_roots: Vec<Weight>,
    pub noncompact_pos_roots: Vec<Weight>,
    pub simple_compact_roots: Vec<Weight>,
    /// Half sum of the compact positive roots.
    pub rho: Weight,
    /// Central element of `𝔨` with `ad(z₀)² = −id` on `𝔭`; rational coords.
    pub z0: Vec<Q>,
    /// Gram matrix of the Killing-induced form on `𝔱*`, up to a positive
    /// scalar; for `SU(p,q)` the projection along the trace direction.
    pub killing_gram: Vec<Vec<Q>>,
}

pub fn build_pair(family: Family, params: (usize, usize)) -> Result<HermitianPair, KirwanError> {
    let invalid = |constraint: &str| KirwanError::InvalidParams {
        family: family.to_string(),
        constraint: constraint.to_string(),
    };
    match family {
        Family::SpR => {
            let n = params.0;
            if n < 1 {
                return Err(invalid("n >= 1"));
            }
            Ok(build_type_a_pair(family, n, /*noncompact_diag=*/ true))
        }
        Family::SOstar => {
            let n = params.0;
            if n < 3 {
                return Err(invalid("n >= 3"));
            }
            Ok(build_type_a_pair(family, n, false))
        }
        Family::SUpq => {
            let (p, q) = params;
            if !(p >= q && q >= 1) {
                return Err(invalid("p >= q >= 1"));
            }
            Ok(build_su_pair(p, q))
        }
        Family::SOp2 => {
            let (p, q) = params;
            if p < 3 {
                return Err(invalid("p >= 3"));
            }
            if q != 2 {
                return Err(invalid("q == 2"));
            }
            Ok(build_so_pair(p))
        }
    }
}

fn unit_weight(rank: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); rank];
    v[i] = linalg::q(1);
    v
}

fn identity_gram(rank: usize) -> Vec<Vec<Q>> {
    (0..rank).map(|i| unit_weight(rank, i)).collect()
}

fn half_sum(roots: &[Weight], rank: usize) -> Weight {
    let mut acc = Weight::zero(rank);
    for r in roots {
        acc = acc.add(r);
    }
    acc.scale(&linalg::q_ratio(1, 2))
}

/// `K = U(n)` with compact roots `e_i* − e_j*`; noncompact positive roots
/// are `e_i* + e_j*` with `i ≤ j` for `Sp(ℝ^{2n})` and `i < j` for `SO*(2n)`.
fn build_type_a_pair(family: Family, n: usize, noncompact_diag: bool) -> HermitianPair {
    let mut compact = Vec::new();
    let mut simple = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut c = vec![0i64; n];
            c[i] = 1;
            c[j] = -1;
            compact.push(Weight::from_ints(&c));
            if j == i + 1 {
                simple.push(Weight::from_ints(&c));
            }
        }
    }
    let mut noncompact = Vec::new();
    for i in 0..n {
        for j in i..n {
            if i == j && !noncompact_diag {
                continue;
            }
            let mut c = vec![0i64; n];
            c[i] += 1;
            c[j] += 1;
            noncompact.push(Weight::from_ints(&c));
        }
    }
    let rho = half_sum(&compact, n);
    HermitianPair {
        family,
        params: (n, 0),
        rank: n,
        lattice: Lattice::Standard,
        compact_pos_roots: compact,
        noncompact_pos_roots: noncompact,
        simple_compact_roots: simple,
        rho,
        z0: vec![linalg::q_ratio(1, 2); n],
        killing_gram: identity_gram(n),
    }
}

fn build_su_pair(p: usize, q: usize) -> HermitianPair {
    let rank = p + q;
    let root = |i: usize, j: usize| {
        let mut c = vec![0i64; rank];
        c[i] = 1;
        c[j] = -1;
        Weight::from_ints(&c)
    };
    let mut compact = Vec::new();
    let mut simple = Vec::new();
    for block in [(0, p), (p, p + q)] {
        for i in block.0..block.1 {
            for j in (i + 1)..block.1 {
                compact.push(root(i, j));
                if j == i + 1 {
                    simple.push(root(i, j));
                }
            }
        }
    }
    let mut noncompact = Vec::new();
    for i in 0..p {
        for j in p..(p + q) {
            noncompact.push(root(i, j));
        }
    }
    let rho = half_sum(&compact, rank);
    let mut z0 = vec![linalg::q_ratio(q as i64, rank as i64); rank];
    for entry in z0.iter_mut().skip(p) {
        *entry = linalg::q_ratio(-(p as i64), rank as i64);
    }
    // Projection along the all-ones direction: acts as the Euclidean form
    // on sum-zero representatives.
    let mut gram = identity_gram(rank);
    let shift = linalg::q_ratio(-1, rank as i64);
    for (i, row) in gram.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            if i == j {
                *x += &shift;
            } else {
                *x = shift.clone();
            }
        }
    }
    HermitianPair {
        family: Family::SUpq,
        params: (p, q),
        rank,
        lattice: Lattice::SumZero,
        compact_pos_roots: compact,
        noncompact_pos_roots: noncompact,
        simple_compact_roots: simple,
        rho,
        z0,
        killing_gram: gram,
    }
}

fn build_so_pair(p: usize) -> HermitianPair {
    let m = p / 2;
    let odd = p % 2 == 1;
    let rank = m + 1; // x_1..x_m, y
    let mut compact = Vec::new();
    let mut simple = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            for sign in [-1i64, 1] {
                let mut c = vec![0i64; rank];
                c[i] = 1;
                c[j] = sign;
                compact.push(Weight::from_ints(&c));
            }
        }
    }
    if odd {
        for i in 0..m {
            let mut c = vec![0i64; rank];
            c[i] = 1;
            compact.push(Weight::from_ints(&c));
        }
    }
    // Simple system: x_i − x_{i+1} plus x_m (odd) or x_{m−1} + x_m (even).
    for i in 0..m.saturating_sub(1) {
        let mut c = vec![0i64; rank];
        c[i] = 1;
        c[i + 1] = -1;
        simple.push(Weight::from_ints(&c));
    }
    if odd {
        let mut c = vec![0i64; rank];
        c[m - 1] = 1;
        simple.push(Weight::from_ints(&c));
    } else if m >= 2 {
        let mut c = vec![0i64; rank];
        c[m - 2] = 1;
        c[m - 1] = 1;
        simple.push(Weight::from_ints(&c));
    }
    let mut noncompact = Vec::new();
    for i in 0..m {
        for sign in [-1i64, 1] {
            let mut c = vec![0i64; rank];
            c[m] = 1;
            c[i] = sign;
            noncompact.push(Weight::from_ints(&c));
        }
    }
    if odd {
        let mut c = vec![0i64; rank];
        c[m] = 1;
        noncompact.push(Weight::from_ints(&c));
    }
    let rho = half_sum(&compact, rank);
    let mut z0 = vec![Q::zero(); rank];
    z0[m] = linalg::q(1);
    HermitianPair {
        family: Family::SOp2,
        params: (p, 2),
        rank,
        lattice: Lattice::Standard,
        compact_pos_roots: compact,
        noncompact_pos_roots: noncompact,
        simple_compact_roots: simple,
        rho,
        z0,
        killing_gram: identity_gram(rank),
    }
}

impl HermitianPair {
    /// Canonical representative of a weight class: identity for standard
    /// lattices, sum-zero representative for `SU(p,q)`.
    pub fn canonicalize_weight(&self, w: &Weight) -> Weight {
        match self.lattice {
            Lattice::Standard => w.clone(),
            Lattice::SumZero => {
                let total: Q = w.coords.iter().sum();
                let shift = total / linalg::q(self.rank as i64);
                Weight { coords: w.coords.iter().map(|c| c - &shift).collect() }
            }
        }
    }

    /// Checks rank and (for sum-zero lattices) the lattice constraint.
    pub fn check_coweight(&self, l: &Coweight) -> Result<(), KirwanError> {
        if l.coords.len() != self.rank {
            return Err(KirwanError::RankMismatch { expected: self.rank, got: l.coords.len() });
        }
        if self.lattice == Lattice::SumZero && l.coords.iter().sum::<i64>() != 0 {
            return Err(KirwanError::DimMismatch(format!(
                "coweight {l} is not in the sum-zero lattice"
            )));
        }
        Ok(())
    }

    /// Canonical pairing `⟨λ, μ⟩` of a coweight with a weight. For sum-zero
    /// coweights the value is independent of the weight representative.
    pub fn pairing(&self, l: &Coweight, w: &Weight) -> Result<Q, KirwanError> {
        if l.coords.len() != w.coords.len() || w.coords.len() != self.rank {
            return Err(KirwanError::RankMismatch { expected: self.rank, got: w.coords.len() });
        }
        Ok(dot_iq(&l.coords, &w.coords))
    }

    /// Killing-induced inner product on `𝔱*` (up to the fixed positive
    /// scalar), via the stored Gram matrix.
    pub fn killing_inner(&self, a: &Weight, b: &Weight) -> Q {
        let gb: Vec<Q> = self.killing_gram.iter().map(|row| linalg::dot(row, &b.coords)).collect();
        linalg::dot(&a.coords, &gb)
    }

    /// Coroot `α^∨` of a compact root, normalized so `⟨α^∨, α⟩ = 2`.
    pub fn coroot(&self, alpha: &Weight) -> Result<Coweight, KirwanError> {
        let is_root = self
            .compact_pos_roots
            .iter()
            .any(|r| r == alpha || r == &alpha.neg());
        if !is_root {
            return Err(KirwanError::NotACompactRoot(alpha.to_string()));
        }
        let norm = self.killing_inner(alpha, alpha);
        let two = linalg::q(2);
        let ga: Vec<Q> = self.killing_gram.iter().map(|row| linalg::dot(row, &alpha.coords)).collect();
        let coords: Vec<i64> = ga
            .iter()
            .map(|x| {
                let v = x * &two / &norm;
                assert!(v.denom().is_one() || v.is_zero(), "coroot must be integral");
                i64::try_from(v.numer()).expect("coroot entry fits i64")
            })
            .collect();
        Ok(Coweight::new(coords))
    }

    /// `⟨α^∨, ξ⟩ ≥ 0` against every simple compact root.
    pub fn in_positive_chamber(&self, xi: &Weight) -> bool {
        self.simple_compact_roots.iter().all(|alpha| {
            let cv = self.coroot(alpha).expect("simple roots are compact");
            dot_iq(&cv.coords, &xi.coords) >= Q::zero()
        })
    }

    /// Positive chamber plus `(β, ξ) > 0` for every noncompact positive root.
    pub fn in_holomorphic_chamber(&self, xi: &Weight) -> bool {
        let xi = self.canonicalize_weight(xi);
        self.in_positive_chamber(&xi)
            && self
                .noncompact_pos_roots
                .iter()
                .all(|beta| self.killing_inner(beta, &xi).is_positive())
    }

    /// Coweight dominance: `⟨λ, α⟩ ≥ 0` against simple compact roots.
    pub fn coweight_dominant(&self, l: &Coweight) -> bool {
        self.simple_compact_roots
            .iter()
            .all(|alpha| dot_iq(&l.coords, &alpha.coords) >= Q::zero())
    }

    /// A generator of the central direction of `𝔨*` (fixed by the Weyl
    /// group): the trace direction for `U(n)`-type pairs, `z₀`-dual for the
    /// rest.
    pub fn central_direction(&self) -> Weight {
        Weight { coords: self.z0.clone() }
    }
}

/// Parse `"sp:n=3"`, `"su:p=2,q=2"`, `"so_star:n=4"`, `"so:p=5,q=2"`.
pub fn parse_pair_spec(spec: &str) -> Result<HermitianPair, KirwanError> {
    let err = |pos: usize, msg: &str| KirwanError::Parse { pos, msg: msg.to_string() };
    let colon = spec.find(':').ok_or_else(|| err(spec.len(), "expected ':' after family name"))?;
    let (fam_str, rest) = (&spec[..colon], &spec[colon + 1..]);
    let family = match fam_str {
        "sp" => Family::SpR,
        "su" => Family::SUpq,
        "so_star" => Family::SOstar,
        "so" => Family::SOp2,
        _ => return Err(err(0, "unknown family (expected sp, su, so_star or so)")),
    };
    let mut kv = std::collections::HashMap::new();
    let mut pos = colon + 1;
    for part in rest.split(',') {
        let eq = part
            .find('=')
            .ok_or_else(|| err(pos, "expected key=value"))?;
        let key = part[..eq].trim();
        let value: usize = part[eq + 1..]
            .trim()
            .parse()
            .map_err(|_| err(pos + eq + 1, "expected a positive integer"))?;
        kv.insert(key.to_string(), value);
        pos += part.len() + 1;
    }
    let get = |k: &str| kv.get(k).copied().ok_or_else(|| err(spec.len(), "missing parameter"));
    let params = match family {
        Family::SpR | Family::SOstar => (get("n")?, 0),
        Family::SUpq => (get("p")?, get("q")?),
        Family::SOp2 => (get("p")?, get("q")?),
    };
    build_pair(family, params)
}
