//! Integral cohomology of the flag variety `K_ℂ/B` in the Schubert basis
//! `{σ_w}`, graded by length.
//!
//! Degree-2 multiplication is the Chevalley rule
//! `Θ(μ)·σ_w = Σ μ(α^∨) σ_{w s_α}` over compact positive roots `α` with
//! `l(w s_α) = l(w) + 1`. General cup products reduce to it: the rational
//! cohomology is generated in degree 2, so each `σ_u` of degree `d` is
//! expressed (once, cached) as a rational combination of monomials
//! `Θ(α_{i₁})⋯Θ(α_{i_d})·1` in the simple compact roots, and that operator
//! combination is applied to the other factor. Products of integral classes
//! are checked to come out integral.

use crate::linalg::{self, Q};
use crate::rootdata::{Coweight, Weight};
use crate::weyl::{EltId, WeylGroup};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

/// Cohomology class as a finite sum `Σ c_w σ_w`. Rational coefficients are
/// allowed internally; ring products of integral classes stay integral.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CohClass {
    pub terms: BTreeMap<EltId, Q>,
}

impl CohClass {
    pub fn zero() -> Self {
        CohClass::default()
    }

    pub fn single(w: EltId) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, Q::one());
        CohClass { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: EltId, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &CohClass) -> CohClass {
        let mut out = self.clone();
        for (&w, c) in &other.terms {
            out.add_term(w, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> CohClass {
        if c.is_zero() {
            return CohClass::zero();
        }
        CohClass { terms: self.terms.iter().map(|(&w, x)| (w, x * c)).collect() }
    }

    pub fn coeff(&self, w: EltId) -> Q {
        self.terms.get(&w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }
}

struct DegreeTable {
    /// Nondecreasing index multisets into the simple compact roots.
    monomials: Vec<Vec<usize>>,
    /// For each class of this degree (position in `classes_by_len[d]`), a
    /// sparse combination of monomials expressing it.
    decomp: Vec<Vec<(usize, Q)>>,
}

pub struct SchubertRing {
    pub group: Arc<WeylGroup>,
    /// Coroot per compact positive root, aligned with the pair's root list.
    coroots: Vec<Coweight>,
    /// Element ids of each degree, ascending id order.
    classes_by_len: Vec<Vec<EltId>>,
    /// Position of an element inside its degree slice.
    pos_in_degree: Vec<usize>,
    tables: Vec<OnceLock<DegreeTable>>,
}

impl SchubertRing {
    pub fn new(group: Arc<WeylGroup>) -> Self {
        let pair = group.pair.clone();
        let coroots = pair
            .compact_pos_roots
            .iter()
            .map(|a| pair.coroot(a).expect("compact roots have coroots"))
            .collect();
        let max_len = group.length(group.longest()) as usize;
        let mut classes_by_len = vec![Vec::new(); max_len + 1];
        let mut pos_in_degree = vec![0usize; group.order()];
        for w in group.ids() {
            let d = group.length(w) as usize;
            pos_in_degree[w as usize] = classes_by_len[d].len();
            classes_by_len[d].push(w);
        }
        let tables = (0..=max_len).map(|_| OnceLock::new()).collect();
        SchubertRing { group, coroots, classes_by_len, pos_in_degree, tables }
    }

    pub fn one(&self) -> CohClass {
        CohClass::single(self.group.identity())
    }

    pub fn point_class(&self) -> CohClass {
        CohClass::single(self.group.longest())
    }

    pub fn top_degree(&self) -> usize {
        self.classes_by_len.len() - 1
    }

    /// Common degree of a homogeneous class; `None` for 0 or mixed classes.
    pub fn degree(&self, c: &CohClass) -> Option<usize> {
        let mut deg = None;
        for &w in c.terms.keys() {
            let d = self.group.length(w) as usize;
            match deg {
                None => deg = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        deg
    }

    /// Chevalley rule, extended linearly. Degree rises by one.
    pub fn chevalley_mult(&self, mu: &Weight, c: &CohClass) -> CohClass {
        let mut out = CohClass::zero();
        let refl = self.group.root_reflections();
        for (&w, coeff) in &c.terms {
            let lw = self.group.length(w);
            for (ri, coroot) in self.coroots.iter().enumerate() {
                let ws = self.group.mult(w, refl[ri]);
                if self.group.length(ws) == lw + 1 {
                    let factor = linalg::dot_iq(&coroot.coords, &mu.coords);
                    if !factor.is_zero() {
                        out.add_term(ws, coeff * &factor);
                    }
                }
            }
        }
        out
    }

    /// Degree-2 class of a weight: `Θ(μ) = chevalley_mult(μ, 1)`.
    pub fn theta(&self, mu: &Weight) -> CohClass {
        self.chevalley_mult(mu, &self.one())
    }

    /// `ȷ*([pt])` for the parabolic of a dominant `λ`: the single class
    /// `σ_{w₀ w_λ}`.
    pub fn j_star_point(&self, lambda: &Coweight) -> Result<CohClass, crate::KirwanError> {
        if !self.group.pair.coweight_dominant(lambda) {
            return Err(crate::KirwanError::NotDominant(lambda.to_string()));
        }
        let (_, w_lambda) = self.group.stabilizer(lambda);
        Ok(CohClass::single(self.group.mult(self.group.longest(), w_lambda)))
    }

    /// Coefficient of the point class `σ_{w₀}`.
    pub fn poincare_coeff(&self, c: &CohClass) -> Q {
        c.coeff(self.group.longest())
    }

    fn table(&self, d: usize) -> &DegreeTable {
        self.tables[d].get_or_init(|| self.build_table(d))
    }

    fn build_table(&self, d: usize) -> DegreeTable {
        let simple = &self.group.pair.simple_compact_roots;
        let monomials = multisets(simple.len(), d);
        let classes = &self.classes_by_len[d];
        // Expansion of each monomial applied to 1, as a vector over the
        // degree-d classes.
        let mut rows: Vec<Vec<Q>> = Vec::with_capacity(monomials.len());
        for mono in &monomials {
            let mut acc = self.one();
            for &i in mono {
                acc = self.chevalley_mult(&simple[i], &acc);
            }
            let mut row = vec![Q::zero(); classes.len()];
            for (&w, c) in &acc.terms {
                row[self.pos_in_degree[w as usize]] = c.clone();
            }
            rows.push(row);
        }
        // Solve Mᵀ x = e_j per class: x expresses σ_{class j} over monomials.
        let mt: Vec<Vec<Q>> = (0..classes.len())
            .map(|j| rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        let mut decomp = Vec::with_capacity(classes.len());
        for j in 0..classes.len() {
            let mut e = vec![Q::zero(); classes.len()];
            e[j] = Q::one();
            let x = linalg::solve(&mt, &e)
                .expect("degree-2 classes generate the rational cohomology");
            decomp.push(
                x.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect::<Vec<(usize, Q)>>(),
            );
        }
        DegreeTable { monomials, decomp }
    }

    /// Cup product of homogeneous classes. Panics on mixed-degree input;
    /// returns 0 past the top degree. Integral inputs give integral output.
    pub fn cup(&self, a: &CohClass, b: &CohClass) -> CohClass {
        if a.is_zero() || b.is_zero() {
            return CohClass::zero();
        }
        let da = self.degree(a).expect("cup requires homogeneous classes");
        let db = self.degree(b).expect("cup requires homogeneous classes");
        if da + db > self.top_degree() {
            return CohClass::zero();
        }
        let table = self.table(da);
        let simple = &self.group.pair.simple_compact_roots;
        let mut out = CohClass::zero();
        for (&u, cu) in &a.terms {
            let pos = self.pos_in_degree[u as usize];
            for (mono_idx, coef) in &table.decomp[pos] {
                let mut acc = b.scale(&(cu * coef));
                for &i in &table.monomials[*mono_idx] {
                    acc = self.chevalley_mult(&simple[i], &acc);
                    if acc.is_zero() {
                        break;
                    }
                }
                out = out.add(&acc);
            }
        }
        if a.is_integral() && b.is_integral() {
            assert!(out.is_integral(), "cup of integral classes must be integral");
        }
        out
    }

    /// Pretty form like `2*s[s1] + 1*s[s2*s1]`.
    pub fn format(&self, c: &CohClass) -> String {
        if c.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(&EltId, &Q)> = c.terms.iter().collect();
        terms.sort_by_key(|(w, _)| (self.group.length(**w), **w));
        terms
            .iter()
            .map(|(w, coeff)| {
                format!("{}*s[{}]", linalg::q_to_string(coeff), self.group.word_string(**w))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Nondecreasing index multisets of size `d` over `0..n`.
fn multisets(n: usize, d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![vec![]];
    }
    if n == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(n: usize, d: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, d, i, cur, out);
            cur.pop();
        }
    }
    rec(n, d, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::rootdata::parse_pair_spec;
    use crate::weyl::WeylGroup;

    fn ring(spec: &str) -> SchubertRing {
        let pair = Arc::new(parse_pair_spec(spec).unwrap());
        SchubertRing::new(Arc::new(WeylGroup::enumerate(pair).unwrap()))
    }

    #[test]
    fn theta_in_sp2() {
        // Θ(2e₁*) = 2σ_{s₁} in the U(2) flag ring.
        let r = ring("sp:n=2");
        let t = r.theta(&Weight::from_ints(&[2, 0]));
        let s1 = r.group.simple_reflections()[0];
        assert_eq!(t, CohClass::single(s1).scale(&q(2)));
        assert!(r.theta(&Weight::zero(2)).is_zero());
    }

    #[test]
    fn theta_and_products_in_su22() {
        let r = ring("su:p=2,q=2");
        let s1 = r.group.simple_reflections()[0]; // (s₁, id)
        let s2 = r.group.simple_reflections()[1]; // (id, s₁)
        let alpha14 = Weight::from_ints(&[1, 0, 0, -1]);
        let t = r.theta(&alpha14);
        assert_eq!(t, CohClass::single(s1).add(&CohClass::single(s2)));

        let prod = r.cup(&CohClass::single(s1), &CohClass::single(s2));
        assert_eq!(prod, CohClass::single(r.group.mult(s1, s2)));
        assert!(r.cup(&CohClass::single(s1), &CohClass::single(s1)).is_zero());
        assert!(r.cup(&CohClass::single(s2), &CohClass::single(s2)).is_zero());

        // Θ(α₁,₄)·Θ(α₂,₄) = 0, which rules the λ₄ direction out downstream.
        let alpha24 = Weight::from_ints(&[0, 1, 0, -1]);
        assert!(r.cup(&r.theta(&alpha14), &r.theta(&alpha24)).is_zero());
    }

    #[test]
    fn sigma_s1_powers_in_su_n1() {
        // (σ_{s₁})^k = σ_{s_k…s_1} for k < n and (σ_{s₁})^n = 0.
        for n in 2..=5usize {
            let r = ring(&format!("su:p={n},q=1"));
            let s = r.group.simple_reflections().to_vec();
            let mut acc = CohClass::single(s[0]);
            for k in 2..n {
                acc = r.cup(&acc, &CohClass::single(s[0]));
                let mut expect = s[0];
                for &si in s.iter().take(k).skip(1) {
                    expect = r.group.mult(si, expect);
                }
                assert_eq!(acc, CohClass::single(expect), "n={n} k={k}");
            }
            acc = r.cup(&acc, &CohClass::single(s[0]));
            assert!(acc.is_zero(), "n={n}: (σ_s1)^n");
        }
    }

    #[test]
    fn duality_against_point_class() {
        for spec in ["sp:n=2", "sp:n=3", "su:p=2,q=2", "so:p=5,q=2", "so_star:n=3"] {
            let r = ring(spec);
            let w0 = r.group.longest();
            for u in r.group.ids() {
                let v = r.group.mult(w0, u);
                let prod = r.cup(&CohClass::single(u), &CohClass::single(v));
                assert_eq!(r.poincare_coeff(&prod), q(1), "{spec}: u={}", r.group.word_string(u));
            }
        }
    }

    #[test]
    fn duality_kronecker() {
        // For l(u)+l(v) = l(w₀), the point coefficient is δ_{v, w₀u}.
        for spec in ["sp:n=3", "su:p=2,q=2", "so:p=4,q=2"] {
            let r = ring(spec);
            let w0 = r.group.longest();
            let top = r.group.length(w0);
            for u in r.group.ids() {
                for v in r.group.ids() {
                    if r.group.length(u) + r.group.length(v) != top {
                        continue;
                    }
                    let prod = r.cup(&CohClass::single(u), &CohClass::single(v));
                    let want = if v == r.group.mult(w0, u) { q(1) } else { q(0) };
                    assert_eq!(r.poincare_coeff(&prod), want, "{spec}");
                }
            }
        }
    }

    #[test]
    fn chevalley_agrees_with_cup_by_theta() {
        let r = ring("so:p=5,q=2");
        let mu = Weight::from_ints(&[3, -1, 2]);
        for w in r.group.ids() {
            let c = CohClass::single(w);
            assert_eq!(r.cup(&r.theta(&mu), &c), r.chevalley_mult(&mu, &c));
        }
    }

    #[test]
    fn cup_commutes_and_associates() {
        let r = ring("sp:n=3");
        let ids: Vec<EltId> = r.group.ids().collect();
        for &a in &ids {
            for &b in &ids {
                let ab = r.cup(&CohClass::single(a), &CohClass::single(b));
                let ba = r.cup(&CohClass::single(b), &CohClass::single(a));
                assert_eq!(ab, ba);
            }
        }
        for &a in &ids {
            for &b in &ids {
                for &c in &ids {
                    if r.group.length(a) + r.group.length(b) + r.group.length(c) > 3 {
                        continue;
                    }
                    let left = r.cup(&r.cup(&CohClass::single(a), &CohClass::single(b)), &CohClass::single(c));
                    let right = r.cup(&CohClass::single(a), &r.cup(&CohClass::single(b), &CohClass::single(c)));
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn j_star_point_cases() {
        let r = ring("sp:n=2");
        // W_λ trivial for λ = (0,−1): ȷ*[pt] = σ_{w₀}.
        let c = r.j_star_point(&Coweight::new(vec![0, -1])).unwrap();
        assert_eq!(c, r.point_class());
        // λ = 0: w₀w₀ = id.
        let c = r.j_star_point(&Coweight::new(vec![0, 0])).unwrap();
        assert_eq!(c, r.one());
        assert!(r.j_star_point(&Coweight::new(vec![-1, 0])).is_err());
    }

    #[test]
    fn poincare_trivialities() {
        let r = ring("sp:n=2");
        assert_eq!(r.poincare_coeff(&r.point_class()), q(1));
        assert_eq!(r.poincare_coeff(&r.one()), q(0));
    }

    #[test]
    fn formatting() {
        let r = ring("sp:n=3");
        let s1 = r.group.simple_reflections()[0];
        let s2 = r.group.simple_reflections()[1];
        let c = CohClass::single(s1).scale(&q(2)).add(&CohClass::single(r.group.mult(s2, s1)));
        assert_eq!(r.format(&c), "2*s[s1] + 1*s[s2*s1]");
        assert_eq!(r.format(&CohClass::zero()), "0");
    }
}
