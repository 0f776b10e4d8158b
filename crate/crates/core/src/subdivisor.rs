//! Counting effective subdivisors of `(p−1)K̃_X` in a fixed Picard class.
//!
//! The boundary of the wonderful compactification contributes `3ℓ` divisor
//! classes: `D_i ↦ ω_i`, `D̃_i ↦ ω_i` and `X_i ↦ α_i`. A subdivisor of
//! `(p−1)K̃_X` is a choice of exponents in `[0, p−1]` for each, and we count
//! the choices hitting a prescribed class `λ`.
//!
//! The count is a coefficient of a product of truncated geometric series, so
//! it is computed by a bounded-knapsack DP over the class lattice. States are
//! indexed by scaled simple-root coordinates (multiplying by `det(Cartan)`
//! makes them integral), which confines the walk to the box `[0, coords(λ)]`
//! because every generator has nonnegative root coordinates.

use crate::root_system::{RootSystemData, Weight};
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Exponent vector of an effective boundary divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryDivisor {
    /// Coefficients of the closures `D_i`.
    pub c: Vec<i64>,
    /// Coefficients of the opposite closures `D̃_i`.
    pub c_tilde: Vec<i64>,
    /// Coefficients of the root divisors `X_i`.
    pub b: Vec<i64>,
}

/// Class of a boundary divisor: `Σ (c_i + c̃_i) ω_i + Σ b_i α_i`.
pub fn picard_class(rs: &RootSystemData, d: &BoundaryDivisor) -> Weight {
    let mut out = Weight::zero(rs.rank);
    for i in 0..rs.rank {
        out.0[i] += d.c[i] + d.c_tilde[i];
    }
    for i in 0..rs.rank {
        out = out.add(&rs.simple_root(i).scale(d.b[i]));
    }
    out
}

/// Default ceiling on DP grid cells; override with `WF_DP_STATE_LIMIT`.
pub const DEFAULT_STATE_LIMIT: usize = 64_000_000;

fn state_limit() -> usize {
    std::env::var("WF_DP_STATE_LIMIT")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_STATE_LIMIT)
}

/// The `3ℓ` generator classes in scaled root coordinates (entries are
/// `det(A)` times the rational root coordinates, hence integers ≥ 0).
fn scaled_generators(rs: &RootSystemData) -> Result<(i64, Vec<Vec<i64>>)> {
    let l = rs.rank;
    // det(A) obtained from the scaled coordinates of ω₁: the smallest common
    // denominator of Cartan-inverse columns divides det, and using det itself
    // keeps everything uniform.
    let det = cartan_determinant(rs);
    let mut gens = Vec::with_capacity(3 * l);
    for i in 0..l {
        let mut e = Weight::zero(l);
        e.0[i] = 1;
        let rc = rs.root_coords(&e)?;
        let scaled: Vec<i64> = rc
            .iter()
            .map(|x| {
                let y = x * num_rational::Rational64::from_integer(det);
                debug_assert!(y.is_integer());
                y.to_integer()
            })
            .collect();
        gens.push(scaled.clone()); // D_i
        gens.push(scaled); // D̃_i
    }
    for i in 0..l {
        let mut g = vec![0i64; l];
        g[i] = det;
        gens.push(g); // X_i
    }
    Ok((det, gens))
}

fn cartan_determinant(rs: &RootSystemData) -> i64 {
    // Bareiss elimination on the integer Cartan matrix.
    let n = rs.rank;
    let mut m: Vec<Vec<i64>> = rs.cartan.clone();
    let mut prev = 1i64;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let swap = (k + 1..n).find(|&r| m[r][k] != 0).unwrap();
            m.swap(k, swap);
            for row in m.iter_mut().skip(k) {
                for x in row.iter_mut() {
                    *x = -*x;
                }
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    m[n - 1][n - 1]
}

/// Scaled root coordinates of `λ`, or `None` if any is negative or
/// non-integral after scaling (then no effective decomposition exists).
fn scaled_target(rs: &RootSystemData, lambda: &Weight, det: i64) -> Result<Option<Vec<i64>>> {
    let rc = rs.root_coords(lambda)?;
    let mut t = Vec::with_capacity(rs.rank);
    for x in &rc {
        let y = x * num_rational::Rational64::from_integer(det);
        if !y.is_integer() || y.is_negative() {
            return Ok(None);
        }
        t.push(y.to_integer());
    }
    Ok(Some(t))
}

/// Count exponent vectors with entries in `[0, cap]` per generator hitting
/// class `λ`; `cap = None` means unbounded (the grid bound saturates anyway).
fn count_with_cap(rs: &RootSystemData, lambda: &Weight, cap: Option<i64>) -> Result<BigUint> {
    rs.check_weight(lambda)?;
    let (det, gens) = scaled_generators(rs)?;
    let target = match scaled_target(rs, lambda, det)? {
        Some(t) => t,
        None => return Ok(BigUint::zero()),
    };
    let dims: Vec<usize> = target.iter().map(|&t| (t + 1) as usize).collect();
    let cells: usize = dims.iter().try_fold(1usize, |a, &d| a.checked_mul(d))
        .ok_or(Error::DpStateLimit { limit: state_limit() })?;
    if cells > state_limit() {
        return Err(Error::DpStateLimit { limit: state_limit() });
    }
    let strides: Vec<usize> = {
        let mut s = vec![1; dims.len()];
        for i in (0..dims.len().saturating_sub(1)).rev() {
            s[i] = s[i + 1] * dims[i + 1];
        }
        s
    };
    let offset_of = |g: &[i64]| -> i64 {
        g.iter()
            .zip(&strides)
            .map(|(&x, &s)| x * s as i64)
            .sum()
    };
    // Whether cell index `idx` minus generator `g` stays inside the box.
    let in_box_after_sub = |idx: usize, g: &[i64]| -> bool {
        let mut rem = idx;
        for (k, &s) in strides.iter().enumerate() {
            let coord = (rem / s) as i64;
            rem %= s;
            if coord < g[k] {
                return false;
            }
        }
        true
    };

    let mut old: Vec<BigUint> = vec![BigUint::zero(); cells];
    old[0] = BigUint::one();
    let mut new: Vec<BigUint> = vec![BigUint::zero(); cells];
    for g in &gens {
        let gstep = offset_of(g) as usize;
        // Cells in row-major order: subtracting a nonnegative generator moves
        // strictly earlier, so `new` is available when needed.
        for idx in 0..cells {
            let mut acc = old[idx].clone();
            if in_box_after_sub(idx, g) {
                acc += &new[idx - gstep];
                if let Some(c) = cap {
                    // Remove the overshoot: exponents above `cap` correspond
                    // to cells a further (cap+1)·g back.
                    let mut over = g.to_vec();
                    for x in over.iter_mut() {
                        *x *= c + 1;
                    }
                    if in_box_after_sub(idx, &over) {
                        let far = idx - (gstep * (c as usize + 1));
                        acc -= &old[far];
                    }
                }
            }
            new[idx] = acc;
        }
        std::mem::swap(&mut old, &mut new);
    }
    Ok(old[cells - 1].clone())
}

/// Exact number of effective subdivisors of `(p−1)K̃_X` with class `λ`
/// (all `3ℓ` exponents in `[0, p−1]`).
pub fn count_subdivisors(rs: &RootSystemData, lambda: &Weight, p: i64) -> Result<BigUint> {
    if p < 2 {
        return Err(Error::InvalidArgument(format!("p = {p} must be ≥ 2")));
    }
    count_with_cap(rs, lambda, Some(p - 1))
}

/// Count report including whether the `[0, p−1]` exponent caps actually
/// exclude decompositions of `λ` (i.e. the count is still growing in `p`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisorReport {
    pub count: BigUint,
    /// Count with unbounded exponents — the value the capped count
    /// stabilizes to for all large `p`.
    pub stabilized_count: BigUint,
    /// True when the caps exclude at least one decomposition at this `p`.
    pub caps_bind: bool,
}

pub fn count_subdivisors_report(
    rs: &RootSystemData,
    lambda: &Weight,
    p: i64,
) -> Result<SubdivisorReport> {
    let count = count_subdivisors(rs, lambda, p)?;
    let stabilized_count = count_with_cap(rs, lambda, None)?;
    let caps_bind = count != stabilized_count;
    Ok(SubdivisorReport {
        count,
        stabilized_count,
        caps_bind,
    })
}

/// Theorem-B lower bound for the multiplicity of `O_X(μ)` in `Fr_* O_X(λ)`:
/// the subdivisor count of `λ − pμ`. Established for type A only; other
/// types are conjectural and rejected.
pub fn multiplicity_lower_bound(
    rs: &RootSystemData,
    lambda: &Weight,
    mu: &Weight,
    p: i64,
) -> Result<BigUint> {
    use crate::root_system::TypeTag;
    if !matches!(rs.type_tag, TypeTag::A(_)) {
        return Err(Error::LowerBoundUnavailable(rs.type_tag.to_string()));
    }
    crate::summand::check_prime(rs, p)?;
    count_subdivisors(rs, &lambda.sub(&mu.scale(p)), p)
}

/// Multiplicity of `O(e)` in `Fr_* O(d)` on `ℙ^m`:
/// `Σ_i (−1)^i C(m+1, i) C(d − pe + m − ip, m)`, with `C(a, b) = 0` for
/// `a < b`. Equals the coefficient of `x^{d−pe}` in `(1+x+⋯+x^{p−1})^{m+1}`.
pub fn thomsen_multiplicity(m: i64, d: i64, e: i64, p: i64) -> Result<BigUint> {
    if m < 1 || p < 2 {
        return Err(Error::InvalidArgument(format!(
            "need m ≥ 1 and p ≥ 2, got m={m} p={p}"
        )));
    }
    let choose = |a: i64, b: i64| -> BigInt {
        if a < b || b < 0 || a < 0 {
            return BigInt::zero();
        }
        let mut acc = BigInt::one();
        for i in 0..b {
            acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
        }
        acc
    };
    let mut total = BigInt::zero();
    for i in 0..=(m + 1) {
        let term = choose(m + 1, i) * choose(d - p * e + m - i * p, m);
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    debug_assert!(!total.is_negative(), "coefficient of a power series with nonnegative coefficients");
    Ok(total.to_biguint().unwrap_or_else(BigUint::zero))
}
