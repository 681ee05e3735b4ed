//! Finite Weyl group of `W = W(T, K)` as signed permutations of the
//! coordinate model, enumerated once per pair and immutable afterwards.
//!
//! Elements are encoded by their action on the coordinate basis
//! (`code[i] = ±(j+1)` means `e_i ↦ ±e_j`), which gives `O(rank)` products,
//! inverses and actions. Lengths are inversion counts over the compact
//! positive roots. Reduced words are derived on demand.

use crate::error::KirwanError;
use crate::linalg::Q;
use crate::rootdata::{Coweight, HermitianPair, Weight};
use num_traits::Zero;
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

pub type EltId = u32;

pub const DEFAULT_MAX_ORDER: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElt {
    /// Signed images of the basis: `code[i] = ±(j+1)` for `e_i ↦ ±e_j`.
    pub code: Vec<i16>,
}

impl WeylElt {
    pub fn identity(rank: usize) -> Self {
        WeylElt { code: (0..rank).map(|i| (i + 1) as i16).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.code.iter().enumerate().all(|(i, &c)| c == (i + 1) as i16)
    }

    fn compose(&self, other: &WeylElt) -> WeylElt {
        // (self · other): apply `other` first.
        let code = other
            .code
            .iter()
            .map(|&c| {
                let j = (c.unsigned_abs() as usize) - 1;
                if c > 0 {
                    self.code[j]
                } else {
                    -self.code[j]
                }
            })
            .collect();
        WeylElt { code }
    }

    fn invert(&self) -> WeylElt {
        let mut code = vec![0i16; self.code.len()];
        for (i, &c) in self.code.iter().enumerate() {
            let j = (c.unsigned_abs() as usize) - 1;
            code[j] = if c > 0 { (i + 1) as i16 } else { -((i + 1) as i16) };
        }
        WeylElt { code }
    }

    fn act_int(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; v.len()];
        for (i, &c) in self.code.iter().enumerate() {
            let j = (c.unsigned_abs() as usize) - 1;
            out[j] = if c > 0 { v[i] } else { -v[i] };
        }
        out
    }

    fn act_q(&self, v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); v.len()];
        for (i, &c) in self.code.iter().enumerate() {
            let j = (c.unsigned_abs() as usize) - 1;
            out[j] = if c > 0 { v[i].clone() } else { -v[i].clone() };
        }
        out
    }
}

pub struct WeylGroup {
    pub pair: Arc<HermitianPair>,
    elements: Vec<WeylElt>,
    index: HashMap<Vec<i16>, EltId>,
    lengths: Vec<u32>,
    /// Reflection per simple compact root, in the pair's simple-root order.
    simple: Vec<EltId>,
    /// Reflection per compact positive root.
    reflections: Vec<EltId>,
    w0: EltId,
}

impl WeylGroup {
    pub fn enumerate(pair: Arc<HermitianPair>) -> Result<Self, KirwanError> {
        Self::enumerate_bounded(pair, DEFAULT_MAX_ORDER)
    }

    pub fn enumerate_bounded(pair: Arc<HermitianPair>, bound: usize) -> Result<Self, KirwanError> {
        let rank = pair.rank;
        let simple_codes: Vec<WeylElt> =
            pair.simple_compact_roots.iter().map(|a| reflection_code(&pair, a)).collect();

        let id = WeylElt::identity(rank);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id.code.clone(), 0u32);
        let mut queue: VecDeque<u32> = VecDeque::from([0u32]);
        while let Some(cur) = queue.pop_front() {
            for s in &simple_codes {
                let next = s.compose(&elements[cur as usize]);
                if !index.contains_key(&next.code) {
                    if elements.len() >= bound {
                        return Err(KirwanError::WeylBoundExceeded { bound });
                    }
                    let nid = elements.len() as u32;
                    index.insert(next.code.clone(), nid);
                    elements.push(next);
                    queue.push_back(nid);
                }
            }
        }

        let pos_set: HashSet<Vec<i64>> = pair
            .compact_pos_roots
            .iter()
            .map(|r| weight_int_coords(r))
            .collect();
        let lengths: Vec<u32> = elements
            .iter()
            .map(|w| {
                pair.compact_pos_roots
                    .iter()
                    .filter(|a| {
                        let img = w.act_int(&weight_int_coords(a));
                        let neg: Vec<i64> = img.iter().map(|x| -x).collect();
                        pos_set.contains(&neg)
                    })
                    .count() as u32
            })
            .collect();

        let simple = simple_codes.iter().map(|s| index[&s.code]).collect();
        let reflections = pair
            .compact_pos_roots
            .iter()
            .map(|a| {
                let s = reflection_code(&pair, a);
                index[&s.code]
            })
            .collect();
        let w0 = (0..elements.len() as u32)
            .max_by_key(|&i| lengths[i as usize])
            .unwrap_or(0);

        Ok(WeylGroup { pair, elements, index, lengths, simple, reflections, w0 })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> EltId {
        0
    }

    pub fn elt(&self, id: EltId) -> &WeylElt {
        &self.elements[id as usize]
    }

    pub fn ids(&self) -> impl Iterator<Item = EltId> {
        0..self.elements.len() as EltId
    }

    pub fn length(&self, id: EltId) -> u32 {
        self.lengths[id as usize]
    }

    pub fn longest(&self) -> EltId {
        self.w0
    }

    /// Reflections indexed like `pair.simple_compact_roots`.
    pub fn simple_reflections(&self) -> &[EltId] {
        &self.simple
    }

    /// Reflections indexed like `pair.compact_pos_roots`.
    pub fn root_reflections(&self) -> &[EltId] {
        &self.reflections
    }

    pub fn mult(&self, a: EltId, b: EltId) -> EltId {
        let c = self.elements[a as usize].compose(&self.elements[b as usize]);
        self.index[&c.code]
    }

    pub fn inverse(&self, a: EltId) -> EltId {
        self.index[&self.elements[a as usize].invert().code]
    }

    pub fn act(&self, w: EltId, mu: &Weight) -> Weight {
        Weight::new(self.elements[w as usize].act_q(&mu.coords))
    }

    pub fn act_co(&self, w: EltId, l: &Coweight) -> Coweight {
        Coweight::new(self.elements[w as usize].act_int(&l.coords))
    }

    /// Stabilizer `W_λ` (all elements fixing `λ`) and its longest element.
    pub fn stabilizer(&self, l: &Coweight) -> (Vec<EltId>, EltId) {
        let mut members = Vec::new();
        let mut w_lambda = self.identity();
        for id in self.ids() {
            if self.act_co(id, l) == *l {
                if self.length(id) > self.length(w_lambda) {
                    w_lambda = id;
                }
                members.push(id);
            }
        }
        (members, w_lambda)
    }

    /// `W^λ`: maximal-length representatives of `W/W_λ`, for dominant `λ`.
    /// One per coset, found by grouping over the orbit of `λ`.
    pub fn max_coset_reps(&self, l: &Coweight) -> Result<Vec<EltId>, KirwanError> {
        if !self.pair.coweight_dominant(l) {
            return Err(KirwanError::NotDominant(l.to_string()));
        }
        let mut best: HashMap<Vec<i64>, EltId> = HashMap::new();
        for id in self.ids() {
            let img = self.act_co(id, l).coords;
            match best.get(&img) {
                Some(&cur) if self.length(cur) >= self.length(id) => {}
                _ => {
                    best.insert(img, id);
                }
            }
        }
        let mut reps: Vec<EltId> = best.into_values().collect();
        reps.sort_by_key(|&id| (self.length(id), self.elements[id as usize].code.clone()));
        Ok(reps)
    }

    /// Minimal-length representative of the coset `w·W_λ`.
    pub fn min_coset_rep(&self, w: EltId, stab: &[EltId]) -> EltId {
        stab.iter()
            .map(|&u| self.mult(w, u))
            .min_by_key(|&x| (self.length(x), self.elements[x as usize].code.clone()))
            .unwrap_or(w)
    }

    /// Reduced word of `w` as simple-reflection indices (0-based).
    pub fn word(&self, w: EltId) -> Vec<usize> {
        let mut v = w;
        let mut out = Vec::with_capacity(self.length(w) as usize);
        while self.length(v) > 0 {
            let i = (0..self.simple.len())
                .find(|&i| self.length(self.mult(self.simple[i], v)) < self.length(v))
                .expect("a length-reducing simple reflection exists");
            out.push(i);
            v = self.mult(self.simple[i], v);
        }
        out
    }

    /// One-line word form, e.g. `"s1*s3*s2"`; `"id"` for the identity.
    pub fn word_string(&self, w: EltId) -> String {
        let word = self.word(w);
        if word.is_empty() {
            "id".to_string()
        } else {
            word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join("*")
        }
    }

    /// Signed one-line permutation form, e.g. `"[2,-1,3]"`.
    pub fn perm_string(&self, w: EltId) -> String {
        let parts: Vec<String> =
            self.elements[w as usize].code.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Accepts both `"s1*s3"` words and `"[2,-1,3]"` permutation arrays.
    pub fn parse_elt(&self, s: &str) -> Result<EltId, KirwanError> {
        let s = s.trim();
        if s == "id" || s == "e" || s.is_empty() {
            return Ok(self.identity());
        }
        if s.starts_with('[') {
            let inner = s.trim_start_matches('[').trim_end_matches(']');
            let code: Result<Vec<i16>, _> =
                inner.split(',').map(|p| p.trim().parse::<i16>()).collect();
            let code = code.map_err(|_| KirwanError::Parse {
                pos: 0,
                msg: format!("bad permutation array {s:?}"),
            })?;
            return self.index.get(&code).copied().ok_or_else(|| KirwanError::Parse {
                pos: 0,
                msg: format!("{s:?} is not an element of this Weyl group"),
            });
        }
        let mut acc = self.identity();
        for (k, part) in s.split('*').enumerate() {
            let part = part.trim();
            let idx: usize = part
                .strip_prefix('s')
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| KirwanError::Parse { pos: k, msg: format!("bad factor {part:?}") })?;
            if idx == 0 || idx > self.simple.len() {
                return Err(KirwanError::Parse {
                    pos: k,
                    msg: format!("s{idx} out of range (1..={})", self.simple.len()),
                });
            }
            acc = self.mult(acc, self.simple[idx - 1]);
        }
        Ok(acc)
    }
}

fn weight_int_coords(w: &Weight) -> Vec<i64> {
    w.coords
        .iter()
        .map(|c| {
            assert!(c.denom() == &num_bigint::BigInt::from(1), "root coordinates are integral");
            i64::try_from(c.numer()).expect("root coordinate fits i64")
        })
        .collect()
}

/// Signed-permutation code of the reflection in a compact root.
fn reflection_code(pair: &HermitianPair, alpha: &Weight) -> WeylElt {
    let coroot = pair.coroot(alpha).expect("reflection roots are compact");
    let rank = pair.rank;
    let mut code = vec![0i16; rank];
    for i in 0..rank {
        // s_α(e_i*) = e_i* − ⟨α^∨, e_i*⟩ α, which is ± a basis vector for
        // the signed-permutation root systems handled here.
        let mut img: Vec<Q> = vec![Q::zero(); rank];
        img[i] = Q::from_integer(1.into());
        let coef = Q::from_integer(coroot.coords[i].into());
        for (k, a) in alpha.coords.iter().enumerate() {
            img[k] -= &coef * a;
        }
        let nonzero: Vec<usize> = (0..rank).filter(|&k| !img[k].is_zero()).collect();
        assert_eq!(nonzero.len(), 1, "reflection image must be a signed basis vector");
        let j = nonzero[0];
        let one = Q::from_integer(1.into());
        code[i] = if img[j] == one {
            (j + 1) as i16
        } else {
            assert_eq!(img[j], -one);
            -((j + 1) as i16)
        };
    }
    WeylElt { code }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::parse_pair_spec;

    fn group(spec: &str) -> WeylGroup {
        let pair = Arc::new(parse_pair_spec(spec).unwrap());
        WeylGroup::enumerate(pair).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(group("sp:n=1").order(), 1);
        assert_eq!(group("sp:n=2").order(), 2);
        assert_eq!(group("sp:n=4").order(), 24);
        assert_eq!(group("su:p=2,q=1").order(), 2);
        assert_eq!(group("su:p=2,q=2").order(), 4);
        assert_eq!(group("su:p=3,q=2").order(), 12);
        assert_eq!(group("so_star:n=4").order(), 24);
        assert_eq!(group("so:p=3,q=2").order(), 2); // W(SO(3)) x {1}
        assert_eq!(group("so:p=4,q=2").order(), 4); // W(SO(4)) x {1}
        assert_eq!(group("so:p=5,q=2").order(), 8); // W(SO(5)) x {1}
    }

    #[test]
    fn bound_is_enforced() {
        let pair = Arc::new(parse_pair_spec("sp:n=4").unwrap());
        assert!(matches!(
            WeylGroup::enumerate_bounded(pair, 10),
            Err(KirwanError::WeylBoundExceeded { bound: 10 })
        ));
    }

    #[test]
    fn lengths_and_longest() {
        let g = group("sp:n=3"); // S_3
        assert_eq!(g.length(g.identity()), 0);
        assert_eq!(g.length(g.longest()), 3);
        for w in g.ids() {
            assert_eq!(g.length(g.mult(g.longest(), w)), g.length(g.longest()) - g.length(w));
        }
    }

    #[test]
    fn action_is_a_group_action() {
        for spec in ["sp:n=3", "su:p=2,q=2", "so:p=5,q=2"] {
            let g = group(spec);
            let mu = Weight::from_ints(
                &(0..g.pair.rank).map(|i| 3 - (i as i64) * 2).collect::<Vec<_>>(),
            );
            for u in g.ids() {
                for v in g.ids() {
                    let lhs = g.act(g.mult(u, v), &mu);
                    let rhs = g.act(u, &g.act(v, &mu));
                    assert_eq!(lhs, rhs);
                }
                assert_eq!(g.mult(u, g.inverse(u)), g.identity());
            }
        }
    }

    #[test]
    fn pairing_equivariance() {
        let g = group("su:p=2,q=2");
        let l = Coweight::new(vec![1, -3, 1, 1]);
        let mu = Weight::from_ints(&[2, 0, -1, -1]);
        for w in g.ids() {
            let lhs = g.pair.pairing(&g.act_co(w, &l), &mu).unwrap();
            let rhs = g.pair.pairing(&l, &g.act(g.inverse(w), &mu)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn simple_swap_on_coweights() {
        let g = group("sp:n=2");
        let s = g.simple_reflections()[0];
        assert_eq!(g.act_co(s, &Coweight::new(vec![0, -1])), Coweight::new(vec![-1, 0]));
    }

    #[test]
    fn stabilizers() {
        let g = group("sp:n=2");
        let (stab, w_l) = g.stabilizer(&Coweight::new(vec![0, -1]));
        assert_eq!(stab, vec![g.identity()]);
        assert_eq!(w_l, g.identity());

        let g = group("su:p=2,q=1");
        let (stab, _) = g.stabilizer(&Coweight::new(vec![2, -1, -1]));
        assert_eq!(stab, vec![g.identity()]);

        // λ = 0 is stabilized by all of W.
        let g = group("sp:n=3");
        let (stab, w_l) = g.stabilizer(&Coweight::new(vec![0, 0, 0]));
        assert_eq!(stab.len(), 6);
        assert_eq!(w_l, g.longest());
    }

    #[test]
    fn coset_reps() {
        let g = group("sp:n=2");
        let reps = g.max_coset_reps(&Coweight::new(vec![0, -1])).unwrap();
        assert_eq!(reps.len(), 2);

        let g = group("sp:n=3");
        let lam = Coweight::new(vec![0, 0, -1]);
        let reps = g.max_coset_reps(&lam).unwrap();
        let (stab, _) = g.stabilizer(&lam);
        assert_eq!(reps.len() * stab.len(), g.order());
        // Each rep is the unique longest in its coset.
        for &r in &reps {
            for &u in &stab {
                let other = g.mult(r, u);
                if other != r {
                    assert!(g.length(other) < g.length(r));
                }
            }
        }
        assert!(g.max_coset_reps(&Coweight::new(vec![-1, 0, 0])).is_err());
    }

    #[test]
    fn w0_negates_rho_for_type_a() {
        for spec in ["sp:n=2", "sp:n=4", "su:p=2,q=2"] {
            let g = group(spec);
            let rho = g.pair.rho.clone();
            assert_eq!(g.act(g.longest(), &rho), rho.neg(), "{spec}");
        }
    }

    #[test]
    fn words_and_parsing() {
        let g = group("sp:n=3");
        for w in g.ids() {
            let s = g.word_string(w);
            assert_eq!(g.parse_elt(&s).unwrap(), w, "{s}");
            let p = g.perm_string(w);
            assert_eq!(g.parse_elt(&p).unwrap(), w, "{p}");
            assert_eq!(g.word(w).len() as u32, g.length(w));
        }
        assert!(g.parse_elt("s9").is_err());
        assert!(g.parse_elt("[1,2]").is_err());
    }

    #[test]
    fn su_n1_coset_action_reaches_all_lambdas() {
        // ŵ_k⁻¹ λ₁ = λ_k in SU(n,1): the orbit of λ₁ under prefix words.
        let g = group("su:p=3,q=1");
        let l1 = Coweight::new(vec![3, -1, -1, -1]);
        let s = g.simple_reflections();
        // ŵ₂⁻¹ = s1, ŵ₃⁻¹ = s2*s1, ŵ₄⁻¹ = s3*s2*s1.
        let w2 = s[0];
        let w3 = g.mult(s[1], s[0]);
        let w4 = g.mult(s[2], w3);
        assert_eq!(g.act_co(w2, &l1), Coweight::new(vec![-1, 3, -1, -1]));
        assert_eq!(g.act_co(w3, &l1), Coweight::new(vec![-1, -1, 3, -1]));
        assert_eq!(g.act_co(w4, &l1), Coweight::new(vec![-1, -1, -1, 3]));
    }
}
