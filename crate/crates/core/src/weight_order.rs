//! The two partial orders on the weight lattice.
//!
//! * **Root order** `λ ≥ μ`: the difference is a nonnegative integer
//!   combination of simple roots.
//! * **Dominance-augmented order** `λ ⪰ μ`: the difference is a nonnegative
//!   integer combination of simple roots *plus* a dominant weight. This is
//!   the order that controls which twists can appear inside a Frobenius
//!   pushforward.

use crate::root_system::{RootSystemData, Weight};
use crate::Result;
use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive};

/// `λ ≥ μ` in root order.
pub fn root_order_geq(rs: &RootSystemData, lambda: &Weight, mu: &Weight) -> Result<bool> {
    rs.check_weight(lambda)?;
    rs.check_weight(mu)?;
    let coords = rs.root_coords(&lambda.sub(mu))?;
    Ok(coords
        .iter()
        .all(|c| !c.is_negative() && c.is_integer()))
}

/// `v ⪰ 0`: there exist `b ∈ Z_{≥0}^ℓ` with `v − Σ b_i α_i` dominant.
///
/// The search is finite: subtracting simple roots cannot increase the
/// root-basis height, and a dominant weight has nonnegative height, so
/// `Σ b_i` is bounded by `⌊height(v)⌋`.
pub fn is_succeq_zero(rs: &RootSystemData, v: &Weight) -> Result<bool> {
    rs.check_weight(v)?;
    let h: Rational64 = rs.height(v)?;
    if h.is_negative() {
        return Ok(false);
    }
    let budget = h.floor().to_integer().to_i64().unwrap();
    Ok(search(rs, 0, budget, &mut v.0.clone()))
}

fn search(rs: &RootSystemData, i: usize, budget: i64, cur: &mut Vec<i64>) -> bool {
    if i == rs.rank {
        return cur.iter().all(|&x| x >= 0);
    }
    // cur already reflects b_0..b_{i-1}; try each multiple of α_i.
    for b in 0..=budget {
        if b > 0 {
            for k in 0..rs.rank {
                cur[k] -= rs.cartan[k][i];
            }
        }
        if search(rs, i + 1, budget - b, cur) {
            // Undo before returning so the caller's state is intact.
            for k in 0..rs.rank {
                cur[k] += b * rs.cartan[k][i];
            }
            return true;
        }
    }
    for k in 0..rs.rank {
        cur[k] += budget * rs.cartan[k][i];
    }
    false
}

/// `λ ⪰ μ`.
pub fn succeq(rs: &RootSystemData, lambda: &Weight, mu: &Weight) -> Result<bool> {
    is_succeq_zero(rs, &lambda.sub(mu))
}

/// Convenience: is `height(v)` a nonnegative value at all (cheap necessary
/// condition used by hot loops before the full search).
pub fn height_nonnegative(rs: &RootSystemData, v: &Weight) -> Result<bool> {
    Ok(!rs.height(v)?.is_negative())
}
