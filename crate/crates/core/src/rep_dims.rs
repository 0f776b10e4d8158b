//! Dimension counts: the Weyl dimension formula, the Steinberg module, and
//! the graded dimension of the section spaces `F_{≤λ} = Γ(X, O_X(λ))`.

use crate::root_system::{RootSystemData, Weight};
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `∏_{γ∈Φ⁺} ⟨λ+ρ, γ∨⟩ / ⟨ρ, γ∨⟩`, exact and asserted integral.
pub fn weyl_dimension(rs: &RootSystemData, lambda: &Weight) -> Result<BigUint> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant);
    }
    if let Some(hit) = rs.dim_cache.lock().unwrap().get(lambda) {
        return Ok(hit.clone());
    }
    let shifted = lambda.add(&rs.rho);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for idx in 0..rs.num_positive_roots() {
        num *= BigUint::from(rs.pairing(&shifted, idx) as u64);
        den *= BigUint::from(rs.pairing(&rs.rho, idx) as u64);
    }
    debug_assert!((&num % &den).is_zero(), "Weyl product must be integral");
    let dim = num / den;
    rs.dim_cache
        .lock()
        .unwrap()
        .insert(lambda.clone(), dim.clone());
    Ok(dim)
}

/// Dimension of the Steinberg module: `p^{|Φ⁺|}`.
pub fn steinberg_dimension(rs: &RootSystemData, p: i64) -> BigUint {
    BigUint::from(p as u64).pow(rs.num_positive_roots() as u32)
}

/// All dominant `μ ≤ λ` in root order, i.e. `λ − μ ∈ Σ Z_{≥0} α_i`.
pub fn dominant_weights_below(rs: &RootSystemData, lambda: &Weight) -> Result<Vec<Weight>> {
    rs.check_weight(lambda)?;
    let rc = rs.root_coords(lambda)?;
    // A dominant weight has nonnegative root-basis coordinates, so the
    // subtraction multiplicities c_i are confined to [0, ⌊rc_i⌋].
    let mut caps = Vec::with_capacity(rs.rank);
    for x in &rc {
        if x.is_negative() {
            return Ok(Vec::new());
        }
        caps.push(x.floor().to_integer().to_i64().unwrap());
    }
    let mut out = Vec::new();
    let mut c = vec![0i64; rs.rank];
    loop {
        let mut mu = lambda.clone();
        for i in 0..rs.rank {
            for k in 0..rs.rank {
                mu.0[k] -= c[i] * rs.cartan[k][i];
            }
        }
        if mu.is_dominant() {
            out.push(mu);
        }
        // Odometer over the box.
        let mut i = 0;
        loop {
            if i == rs.rank {
                out.sort();
                return Ok(out);
            }
            c[i] += 1;
            if c[i] <= caps[i] {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// `dim F_{≤λ}`: the section space of `O_X(λ)` has composition factors
/// `M_μ ⊗ M_{−w₀μ}` over dominant `μ ≤ λ`, so its dimension is the sum of
/// squared Weyl dimensions. Returns 0 when no dominant `μ ≤ λ` exists.
pub fn filtration_dimension(rs: &RootSystemData, lambda: &Weight) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for mu in dominant_weights_below(rs, lambda)? {
        let d = weyl_dimension(rs, &mu)?;
        total += &d * &d;
    }
    Ok(total)
}

/// Signed helper used by bounds: `⌊a / b⌋` with `b > 0`.
pub fn floor_div(a: &BigUint, b: &BigUint) -> BigUint {
    debug_assert!(!b.is_zero());
    a / b
}

/// Exact rational height check used by callers before expensive work.
pub fn height_floor(rs: &RootSystemData, lambda: &Weight) -> Result<i64> {
    let h: Rational64 = rs.height(lambda)?;
    Ok(h.floor().to_integer().to_i64().unwrap())
}

/// Convert a `BigUint` into a `BigInt` (used by the K-theory module).
pub fn to_bigint(x: &BigUint) -> BigInt {
    BigInt::from(x.clone())
}
