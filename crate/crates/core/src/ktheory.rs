//! Equivariant K-theory of the Frobenius pushforward at torus fixed points,
//! and the Chern-character pushforward formula on an abstract graded ring.
//!
//! The fixed locus of the double torus action is the finite set `W × W`. At
//! a fixed point `(y, w)` the class of `Fr* Fr_* O_X(λ)` factors as a base
//! character times one truncated geometric series per tangent direction —
//! `dim G` directions in all, so the expanded class has exactly `p^{dim G}`
//! character terms, matching the rank of the pushforward bundle.

use crate::root_system::{RootSystemData, Weight};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

/// A character of the double torus `T̃ × T̃`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CharacterPair {
    pub left: Weight,
    pub right: Weight,
}

impl CharacterPair {
    pub fn add(&self, other: &CharacterPair) -> CharacterPair {
        CharacterPair {
            left: self.left.add(&other.left),
            right: self.right.add(&other.right),
        }
    }

    pub fn scale(&self, k: i64) -> CharacterPair {
        CharacterPair {
            left: self.left.scale(k),
            right: self.right.scale(k),
        }
    }
}

/// Factored localized class at one fixed point: `base ⊗ Π_χ (1+χ+⋯+χ^{p−1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointClass {
    pub base: CharacterPair,
    /// `|Φ⁺|` left-only, `|Φ⁺|` right-only, and `ℓ` diagonal directions.
    pub tangent: Vec<CharacterPair>,
    /// Geometric series truncate at exponent `p−1`.
    pub truncation: i64,
}

/// All `|W|²` fixed points as index pairs into `rs.weyl()`.
pub fn fixed_points(rs: &RootSystemData) -> Result<Vec<(usize, usize)>> {
    let n = rs.weyl()?.len();
    let mut out = Vec::with_capacity(n * n);
    for y in 0..n {
        for w in 0..n {
            out.push((y, w));
        }
    }
    Ok(out)
}

/// Localized class of `Fr* Fr_* O_X(λ)` at the fixed point `(y, w)`.
pub fn localized_class(
    rs: &RootSystemData,
    lambda: &Weight,
    p: i64,
    y: usize,
    w: usize,
) -> Result<FixedPointClass> {
    rs.check_weight(lambda)?;
    let weyl = rs.weyl()?;
    let (ye, we) = (&weyl[y], &weyl[w]);
    let w0 = rs.longest()?;
    let base = CharacterPair {
        left: ye.apply(lambda).neg(),
        right: we.apply(&w0.apply(lambda)),
    };
    let l = rs.rank;
    let mut tangent = Vec::with_capacity(rs.group_dimension() as usize);
    for root in &rs.positive_roots {
        tangent.push(CharacterPair {
            left: ye.apply(&root.weight),
            right: Weight::zero(l),
        });
    }
    for root in &rs.positive_roots {
        tangent.push(CharacterPair {
            left: Weight::zero(l),
            right: we.apply(&root.weight).neg(),
        });
    }
    for i in 0..l {
        let alpha = rs.simple_root(i);
        tangent.push(CharacterPair {
            left: ye.apply(&alpha),
            right: we.apply(&alpha).neg(),
        });
    }
    debug_assert_eq!(tangent.len() as i64, rs.group_dimension());
    Ok(FixedPointClass {
        base,
        tangent,
        truncation: p,
    })
}

/// Full expansion into `p^{dim G}` character terms (sorted, with repeats).
pub fn expand_class(fpc: &FixedPointClass, limit: u128) -> Result<Vec<CharacterPair>> {
    let n = fpc.tangent.len() as u32;
    let terms = (fpc.truncation as u128)
        .checked_pow(n)
        .ok_or(Error::ExpansionTooLarge {
            terms: u128::MAX,
            limit,
        })?;
    if terms > limit {
        return Err(Error::ExpansionTooLarge { terms, limit });
    }
    let mut out = vec![fpc.base.clone()];
    for chi in &fpc.tangent {
        let mut next = Vec::with_capacity(out.len() * fpc.truncation as usize);
        for term in &out {
            for a in 0..fpc.truncation {
                next.push(term.add(&chi.scale(a)));
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// Evaluation point: a nonzero rational per fundamental character of each
/// torus factor. A pair `(u, v)` evaluates to `Π xᵢ^{uᵢ} · Π yᵢ^{vᵢ}`.
#[derive(Clone, Debug)]
pub struct Assignment {
    pub left: Vec<BigRational>,
    pub right: Vec<BigRational>,
}

impl Assignment {
    pub fn new(left: Vec<BigRational>, right: Vec<BigRational>) -> Result<Assignment> {
        if left.iter().chain(&right).any(|x| x.is_zero()) {
            return Err(Error::ZeroAssignment);
        }
        Ok(Assignment { left, right })
    }

    pub fn value(&self, pair: &CharacterPair) -> BigRational {
        let mut acc = BigRational::one();
        for (x, &e) in self.left.iter().zip(&pair.left.0) {
            acc *= int_pow(x, e);
        }
        for (x, &e) in self.right.iter().zip(&pair.right.0) {
            acc *= int_pow(x, e);
        }
        acc
    }
}

fn int_pow(x: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let mut acc = BigRational::one();
    let base = if e > 0 { x.clone() } else { x.recip() };
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// Evaluate the factored class: base value times one truncated geometric
/// factor per tangent direction — `(z^p − 1)/(z − 1)`, or `p` at `z = 1`.
pub fn evaluate_class(fpc: &FixedPointClass, at: &Assignment) -> BigRational {
    let mut acc = at.value(&fpc.base);
    let p = fpc.truncation;
    for chi in &fpc.tangent {
        let z = at.value(chi);
        if z.is_one() {
            acc *= BigRational::from(BigInt::from(p));
        } else {
            let zp = int_pow(&z, p);
            acc *= (zp - BigRational::one()) / (z - BigRational::one());
        }
    }
    acc
}

// ---------------------------------------------------------------------------
// Graded rings (truncated Chow rings) and the Chern-character pushforward.
// ---------------------------------------------------------------------------

/// A finite graded commutative ring presented by a basis with degrees and a
/// multiplication table. Index 0 is the unit, in degree 0.
#[derive(Clone, Debug)]
pub struct GradedRingDescriptor {
    pub labels: Vec<String>,
    pub degrees: Vec<usize>,
    pub top_degree: usize,
    /// `table[i][j]` lists `(k, coeff)` terms of `basis_i · basis_j`.
    table: Vec<Vec<Vec<(usize, BigRational)>>>,
}

/// Element of a graded ring: one rational coefficient per basis label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement {
    pub coeffs: Vec<BigRational>,
}

impl GradedRingDescriptor {
    /// The Chow ring of `ℙ^m`: basis `1, h, …, h^m` with `h^{m+1} = 0`.
    pub fn projective_space(m: usize) -> GradedRingDescriptor {
        let n = m + 1;
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "h".to_string(),
                k => format!("h^{k}"),
            })
            .collect();
        let mut table = vec![vec![Vec::new(); n]; n];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                if i + j < n {
                    cell.push((i + j, BigRational::one()));
                }
            }
        }
        GradedRingDescriptor {
            labels,
            degrees: (0..n).collect(),
            top_degree: m,
            table,
        }
    }

    pub fn zero(&self) -> GradedElement {
        GradedElement {
            coeffs: vec![BigRational::zero(); self.labels.len()],
        }
    }

    pub fn one(&self) -> GradedElement {
        let mut x = self.zero();
        x.coeffs[0] = BigRational::one();
        x
    }

    pub fn add(&self, a: &GradedElement, b: &GradedElement) -> GradedElement {
        GradedElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigRational, a: &GradedElement) -> GradedElement {
        GradedElement {
            coeffs: a.coeffs.iter().map(|x| x * k).collect(),
        }
    }

    pub fn mul(&self, a: &GradedElement, b: &GradedElement) -> GradedElement {
        let mut out = self.zero();
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.table[i][j] {
                    out.coeffs[*k] += &xy * c;
                }
            }
        }
        out
    }

    /// Degree-wise scaling `a_i ↦ k^i a_i` (the Adams operation on the Chow
    /// ring).
    pub fn adams(&self, k: i64, a: &GradedElement) -> GradedElement {
        let kq = BigRational::from(BigInt::from(k));
        GradedElement {
            coeffs: a
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, x)| x * int_pow(&kq, self.degrees[i] as i64))
                .collect(),
        }
    }

    pub fn adams_inverse(&self, k: i64, a: &GradedElement) -> GradedElement {
        let kq = BigRational::from(BigInt::from(k));
        GradedElement {
            coeffs: a
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, x)| x * int_pow(&kq, -(self.degrees[i] as i64)))
                .collect(),
        }
    }

    /// Multiplicative inverse by truncated power series: requires a nonzero
    /// degree-0 part.
    pub fn invert(&self, a: &GradedElement) -> Result<GradedElement> {
        let c0 = a.coeffs[0].clone();
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        // a = c0 (1 + n) with n nilpotent; a^{-1} = c0^{-1} Σ (−n)^k.
        let mut nil = self.scale(&c0.recip(), a);
        nil.coeffs[0] -= BigRational::one();
        let mut acc = self.one();
        let mut pow = self.one();
        for _ in 0..self.top_degree {
            pow = self.mul(&pow, &nil);
            pow = self.scale(&(-BigRational::one()), &pow);
            acc = self.add(&acc, &pow);
        }
        Ok(self.scale(&c0.recip(), &acc))
    }

    /// `ch(Fr_* L) = p^{dimX} · ψ_p^{-1}(ch(L) · td) / td`.
    pub fn chern_pushforward(
        &self,
        ch_l: &GradedElement,
        td: &GradedElement,
        p: i64,
        dim_x: usize,
    ) -> Result<GradedElement> {
        let td_inv = self.invert(td)?;
        let pulled = self.adams_inverse(p, &self.mul(ch_l, td));
        let scale = int_pow(&BigRational::from(BigInt::from(p)), dim_x as i64);
        Ok(self.scale(&scale, &self.mul(&pulled, &td_inv)))
    }
}

/// `ch(O(d)) = e^{dh}` on `ℙ^m`, truncated.
pub fn ch_line_pm(ring: &GradedRingDescriptor, d: i64) -> GradedElement {
    let mut x = ring.zero();
    let dq = BigRational::from(BigInt::from(d));
    let mut term = BigRational::one();
    for k in 0..=ring.top_degree {
        if k > 0 {
            term = &term * &dq / BigRational::from(BigInt::from(k as i64));
        }
        x.coeffs[k] = term.clone();
    }
    x
}

/// `td_{ℙ^m} = (h / (1 − e^{−h}))^{m+1}`, truncated.
pub fn todd_pm(ring: &GradedRingDescriptor) -> Result<GradedElement> {
    let m = ring.top_degree;
    // (1 − e^{−h})/h = Σ_k (−1)^k h^k / (k+1)!.
    let mut g = ring.zero();
    let mut factorial = BigRational::one();
    for k in 0..=m {
        factorial = &factorial * BigRational::from(BigInt::from(k as i64 + 1));
        let mut c = factorial.recip();
        if k % 2 == 1 {
            c = -c;
        }
        g.coeffs[k] = c;
    }
    let inv = ring.invert(&g)?;
    let mut td = ring.one();
    for _ in 0..=m {
        td = ring.mul(&td, &inv);
    }
    Ok(td)
}
