//! Enumeration of the finite set of well-covering triples `(w, w′, λ)`.
//!
//! A dominant indivisible one-parameter subgroup `λ` qualifies when its
//! complex line is an intersection of kernels of noncompact positive roots.
//! For each such `λ`, a pair `(w, w′)` of maximal-length coset
//! representatives in `W^λ × W^λ` is kept when all three of
//!
//! 1. `l(w) + l(w′) = l(w₀) + l(w_λ) + #{β ∈ R_n⁺ : ⟨λ, β⟩ > 0}`,
//! 2. `σ_{w₀w} · σ_{w₀w′} · ∏_{⟨λ,β⟩>0} Θ(β) = σ_{w₀w_λ}`,
//! 3. `⟨wλ + w′λ, ρ⟩ + Σ_{⟨λ,β⟩>0} ⟨λ, β⟩ = 0`
//!
//! hold (products over the multiset of noncompact positive roots below the
//! wall, empty product = 1). Each triple contributes the facet inequality
//! `⟨wλ, ξ⟩ ≤ ⟨w₀w′λ, Λ⟩` downstream.

use crate::linalg::{self, Q};
use crate::rootdata::{Coweight, Weight};
use crate::schubert::CohClass;
use crate::weyl::EltId;
use crate::Engine;
use num_traits::{Signed, Zero};
use std::collections::{HashSet, VecDeque};

/// Dominant indivisible admissible one-parameter subgroup with its kernel
/// data and the multiset of noncompact positive roots it moves below zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneParamSubgroup {
    pub lambda: Coweight,
    /// Indices into `pair.noncompact_pos_roots` of the roots vanishing on
    /// `λ`; their kernels intersect exactly in the line of `λ`.
    pub defining_set: Vec<usize>,
    /// `(root index, ⟨λ, β⟩)` for the roots with strictly positive pairing.
    pub below: Vec<(usize, Q)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WellCoveringTriple {
    pub w: EltId,
    pub w_prime: EltId,
    pub ops: OneParamSubgroup,
}

/// All admissible lines: subspaces reachable from `𝔱` by intersecting
/// kernels of noncompact positive roots, kept when the dimension is exactly
/// one. Both primitive generators are tested for dominance.
pub fn enumerate_admissible(engine: &Engine) -> Vec<OneParamSubgroup> {
    let pair = &engine.pair;
    let rank = pair.rank;
    let ambient = match pair.lattice {
        crate::rootdata::Lattice::Standard => linalg::Subspace::full(rank),
        crate::rootdata::Lattice::SumZero => {
            linalg::Subspace::full(rank).intersect_kernel(&vec![linalg::q(1); rank])
        }
    };
    let kernels: Vec<Vec<Q>> =
        pair.noncompact_pos_roots.iter().map(|b| b.coords.clone()).collect();

    // Closure of {𝔱} under kernel intersections.
    let mut seen: Vec<linalg::Subspace> = vec![ambient.clone()];
    let mut queue: VecDeque<linalg::Subspace> = VecDeque::from([ambient]);
    while let Some(s) = queue.pop_front() {
        if s.dim() <= 1 {
            continue;
        }
        for f in &kernels {
            let t = s.intersect_kernel(f);
            if !seen.contains(&t) {
                seen.push(t.clone());
                queue.push_back(t);
            }
        }
    }

    let mut found: HashSet<Vec<i64>> = HashSet::new();
    let mut out = Vec::new();
    for s in seen.iter().filter(|s| s.dim() == 1) {
        let gen = linalg::primitive_integer(&s.basis()[0]);
        for cand in [gen.clone(), gen.iter().map(|x| -x).collect::<Vec<i64>>()] {
            let lambda = Coweight::new(cand);
            if !pair.coweight_dominant(&lambda) || found.contains(&lambda.coords) {
                continue;
            }
            found.insert(lambda.coords.clone());
            let mut defining = Vec::new();
            let mut below = Vec::new();
            for (i, beta) in pair.noncompact_pos_roots.iter().enumerate() {
                let v = pair.pairing(&lambda, beta).expect("rank-checked");
                if v.is_zero() {
                    defining.push(i);
                } else if v.is_positive() {
                    below.push((i, v));
                }
            }
            out.push(OneParamSubgroup { lambda, defining_set: defining, below });
        }
    }
    out.sort_by(|a, b| a.lambda.coords.cmp(&b.lambda.coords));
    out
}

/// Degree bookkeeping: a pair can only qualify when the Schubert degrees
/// add up, which prunes most of `W^λ × W^λ` before any ring work.
pub fn length_prefilter(engine: &Engine, ops: &OneParamSubgroup, w: EltId, w_prime: EltId) -> bool {
    let g = &engine.group;
    let (_, w_lambda) = g.stabilizer(&ops.lambda);
    let lhs = g.length(w) + g.length(w_prime);
    let rhs = g.length(g.longest()) + g.length(w_lambda) + ops.below.len() as u32;
    lhs == rhs
}

/// `⟨wλ + w′λ, ρ⟩ + Σ ⟨λ, β⟩ = 0` over the below multiset, exactly.
pub fn trace_condition(engine: &Engine, ops: &OneParamSubgroup, w: EltId, w_prime: EltId) -> bool {
    trace_sum(engine, ops, w, w_prime).is_zero()
}

pub fn trace_sum(engine: &Engine, ops: &OneParamSubgroup, w: EltId, w_prime: EltId) -> Q {
    let g = &engine.group;
    let pair = &engine.pair;
    let moved = g.act_co(w, &ops.lambda).add(&g.act_co(w_prime, &ops.lambda));
    let mut total = pair.pairing(&moved, &pair.rho).expect("rank-checked");
    for (_, v) in &ops.below {
        total += v;
    }
    total
}

/// `σ_{w₀w} · σ_{w₀w′} · ∏ Θ(β) = σ_{w₀w_λ}` with the empty product equal
/// to `σ_id`.
pub fn cohomology_condition(
    engine: &Engine,
    ops: &OneParamSubgroup,
    w: EltId,
    w_prime: EltId,
) -> bool {
    let g = &engine.group;
    let ring = &engine.ring;
    let w0 = g.longest();
    let mut acc = CohClass::single(g.mult(w0, w_prime));
    for (i, _) in &ops.below {
        acc = ring.chevalley_mult(&engine.pair.noncompact_pos_roots[*i], &acc);
        if acc.is_zero() {
            return false;
        }
    }
    let prod = ring.cup(&CohClass::single(g.mult(w0, w)), &acc);
    let target = ring.j_star_point(&ops.lambda).expect("admissible λ is dominant");
    prod == target
}

/// Generalized conditions at an arbitrary wall height `m`, over the full
/// weight multiset of `𝔭⁻ ⊕ ℂ` (the negatives of the noncompact positive
/// roots plus the zero weight). Only the `m = 0` slice feeds the public
/// pipeline; this entry point exists so the `m ≤ 0` obstruction is testable.
pub(crate) fn conditions_at_m(
    engine: &Engine,
    ops: &OneParamSubgroup,
    w: EltId,
    w_prime: EltId,
    m: i64,
) -> (bool, bool, bool) {
    let g = &engine.group;
    let pair = &engine.pair;
    let ring = &engine.ring;
    let mq = linalg::q(m);

    let mut module_weights: Vec<Weight> =
        pair.noncompact_pos_roots.iter().map(|b| b.neg()).collect();
    module_weights.push(Weight::zero(pair.rank));

    let below: Vec<(&Weight, Q)> = module_weights
        .iter()
        .filter_map(|mu| {
            let v = pair.pairing(&ops.lambda, mu).expect("rank-checked");
            (v < mq).then_some((mu, v))
        })
        .collect();

    let (_, w_lambda) = g.stabilizer(&ops.lambda);
    let len_ok = g.length(w) + g.length(w_prime)
        == g.length(g.longest()) + g.length(w_lambda) + below.len() as u32;

    let moved = g.act_co(w, &ops.lambda).add(&g.act_co(w_prime, &ops.lambda));
    let mut trace = pair.pairing(&moved, &pair.rho).expect("rank-checked");
    for (_, v) in &below {
        trace += &mq - v;
    }
    let trace_ok = trace.is_zero();

    let w0 = g.longest();
    let mut acc = CohClass::single(g.mult(w0, w_prime));
    for (mu, _) in &below {
        acc = ring.chevalley_mult(&mu.neg(), &acc);
        if acc.is_zero() {
            break;
        }
    }
    let prod = ring.cup(&CohClass::single(g.mult(w0, w)), &acc);
    let cohom_ok = prod == ring.j_star_point(&ops.lambda).expect("dominant");

    (len_ok, cohom_ok, trace_ok)
}

/// The full set of well-covering triples, deterministically ordered:
/// `λ` ascending lexicographically, then pairs by `(l(w), l(w′))`.
pub fn enumerate_triples(engine: &Engine) -> Vec<WellCoveringTriple> {
    let g = &engine.group;
    let mut out = Vec::new();
    for ops in enumerate_admissible(engine) {
        let reps = g.max_coset_reps(&ops.lambda).expect("admissible λ is dominant");
        for &w in &reps {
            for &w_prime in &reps {
                if !length_prefilter(engine, &ops, w, w_prime) {
                    continue;
                }
                if !trace_condition(engine, &ops, w, w_prime) {
                    continue;
                }
                if !cohomology_condition(engine, &ops, w, w_prime) {
                    continue;
                }
                out.push(WellCoveringTriple { w, w_prime, ops: ops.clone() });
            }
        }
    }
    out.sort_by(|a, b| {
        a.ops
            .lambda
            .coords
            .cmp(&b.ops.lambda.coords)
            .then_with(|| (g.length(a.w), g.length(a.w_prime)).cmp(&(g.length(b.w), g.length(b.w_prime))))
            .then_with(|| g.elt(a.w).code.cmp(&g.elt(b.w).code))
            .then_with(|| g.elt(a.w_prime).code.cmp(&g.elt(b.w_prime).code))
    });
    out
}

/// Hilbert–Mumford style numeric value `⟨wλ, μ⟩ + ⟨w′λ, ν⟩ + m·r`.
pub fn mu_numeric(
    engine: &Engine,
    w: EltId,
    w_prime: EltId,
    m: i64,
    lambda: &Coweight,
    mu: &Weight,
    nu: &Weight,
    r: &Q,
) -> Result<Q, crate::KirwanError> {
    let g = &engine.group;
    let pair = &engine.pair;
    let a = pair.pairing(&g.act_co(w, lambda), mu)?;
    let b = pair.pairing(&g.act_co(w_prime, lambda), nu)?;
    Ok(a + b + linalg::q(m) * r)
}

impl WellCoveringTriple {
    pub fn to_json(&self, engine: &Engine) -> serde_json::Value {
        let g = &engine.group;
        let pair = &engine.pair;
        serde_json::json!({
            "lambda": self.ops.lambda.coords.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "w": g.word_string(self.w),
            "w_prime": g.word_string(self.w_prime),
            "defining_roots": self.ops.defining_set.iter().map(|&i| {
                pair.noncompact_pos_roots[i].coords.iter().map(linalg::q_to_string).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}
