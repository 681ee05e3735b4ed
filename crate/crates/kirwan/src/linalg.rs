//! Small exact-rational linear algebra toolkit shared by the root-data,
//! Schubert and polyhedron modules. Everything is dense and desk-scale.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar used throughout the symbolic pipeline.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_ratio(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"3"`, `"-4/7"` or `"0.25"` into an exact rational.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Q::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let i: BigInt = if int.is_empty() || int == "-" { BigInt::zero() } else { int.parse().ok()? };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let f: BigInt = frac.parse().ok()?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part = Q::new(f, den);
        let int_part = Q::from_integer(i);
        return Some(if neg { int_part - frac_part } else { int_part + frac_part });
    }
    let n: BigInt = s.parse().ok()?;
    Some(Q::from_integer(n))
}

/// Decimal-string form used in all JSON output (`"3"`, `"-7/2"`).
pub fn q_to_string(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_iq(a: &[i64], b: &[Q]) -> Q {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| Q::from_integer(BigInt::from(*x)) * y).sum()
}

pub fn scale(a: &[Q], c: &Q) -> Vec<Q> {
    a.iter().map(|x| x * c).collect()
}

pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn is_zero_vec(a: &[Q]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Scale a nonzero rational vector to the primitive integer vector on the
/// same ray (positive multiple); first nonzero entry keeps its sign.
pub fn primitive_integer(v: &[Q]) -> Vec<i64> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return vec![0; v.len()];
    }
    ints.iter()
        .map(|x| {
            let r = x / &g;
            i64::try_from(&r).expect("primitive vector entry exceeds i64")
        })
        .collect()
}

/// Reduced row echelon form in place. Returns pivot column per pivot row.
pub fn rref(m: &mut Vec<Vec<Q>>) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for c2 in 0..cols {
                    let t = &m[r][c2] * &f;
                    m[i][c2] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(m: &[Vec<Q>]) -> usize {
    let mut copy = m.to_vec();
    rref(&mut copy).len()
}

/// Solve `A x = b` exactly; `None` if inconsistent. Free variables are 0.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    // Inconsistent iff a pivot lands in the augmented column.
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][cols].clone();
    }
    Some(x)
}

/// Basis of the nullspace of `A` (columns = unknowns).
pub fn kernel_basis(a: &[Vec<Q>]) -> Vec<Vec<Q>> {
    if a.is_empty() {
        return vec![];
    }
    let cols = a[0].len();
    let mut m = a.to_vec();
    let pivots = rref(&mut m);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Q::zero(); cols];
        v[free] = Q::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Subspace of `Q^n` kept as a row-reduced basis; supports intersecting
/// with kernels of functionals, which is how admissible lines are found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: Vec<Vec<Q>>,
}

impl Subspace {
    pub fn full(n: usize) -> Self {
        let mut basis = Vec::with_capacity(n);
        for i in 0..n {
            let mut v = vec![Q::zero(); n];
            v[i] = Q::one();
            basis.push(v);
        }
        Subspace { basis }
    }

    pub fn from_basis(mut basis: Vec<Vec<Q>>) -> Self {
        rref(&mut basis);
        basis.retain(|v| !is_zero_vec(v));
        Subspace { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        // v is in the span iff appending it does not raise the rank.
        let mut m = self.basis.clone();
        m.push(v.to_vec());
        rank(&m) == self.dim()
    }

    /// Intersect with `ker f` where `f` acts by the coordinate pairing.
    pub fn intersect_kernel(&self, f: &[Q]) -> Subspace {
        let vals: Vec<Q> = self.basis.iter().map(|v| dot(v, f)).collect();
        let Some(p) = vals.iter().position(|x| !x.is_zero()) else {
            return self.clone();
        };
        let mut new_basis = Vec::with_capacity(self.dim() - 1);
        for (i, v) in self.basis.iter().enumerate() {
            if i == p {
                continue;
            }
            let coef = &vals[i] / &vals[p];
            new_basis.push(sub(v, &scale(&self.basis[p], &coef)));
        }
        Subspace::from_basis(new_basis)
    }
}
