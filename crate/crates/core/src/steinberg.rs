//! Identify the line-bundle twist of the Steinberg-block projection of
//! `Fr_* O_X(λ)`: the unique ⪰-maximal `μ` with `λ − pμ − (p−1)ρ` a
//! nonnegative integer combination of simple roots.

use crate::root_system::{RootSystemData, Weight};
use crate::summand::check_prime;
use crate::weight_order::succeq;
use crate::{Error, Result};

/// Candidate set: every `μ` with `λ − pμ ≥ (p−1)ρ` in root order is
/// dominated (in root order, hence in ⪰) by one of the returned weights,
/// obtained by reducing the root-basis multiplicities modulo `p`.
fn maximal_candidates(rs: &RootSystemData, lambda: &Weight, p: i64) -> Result<Vec<Weight>> {
    let l = rs.rank;
    let v = lambda.sub(&rs.rho.scale(p - 1));
    let mut cands: Vec<Weight> = Vec::new();
    let mut n = vec![0i64; l];
    loop {
        // μ = (v − Σ n_i α_i) / p whenever the division is exact.
        let mut num = v.clone();
        for i in 0..l {
            for k in 0..l {
                num.0[k] -= n[i] * rs.cartan[k][i];
            }
        }
        if num.0.iter().all(|&x| x.rem_euclid(p) == 0) {
            cands.push(Weight(num.0.iter().map(|&x| x / p).collect()));
        }
        let mut i = 0;
        loop {
            if i == l {
                cands.sort();
                cands.dedup();
                return Ok(cands);
            }
            n[i] += 1;
            if n[i] < p {
                break;
            }
            n[i] = 0;
            i += 1;
        }
    }
}

/// The weight `μ` with `π_{(p−1)ρ} Fr_* O_X(λ) ≅ St ⊗ St ⊗ O_X(μ)`.
///
/// Maximality is verified against the entire candidate set; a tie would
/// contradict the underlying decomposition theorem and is a hard error.
pub fn steinberg_block_weight(rs: &RootSystemData, lambda: &Weight, p: i64) -> Result<Weight> {
    check_prime(rs, p)?;
    rs.check_weight(lambda)?;
    let cands = maximal_candidates(rs, lambda, p)?;
    if cands.is_empty() {
        return Err(Error::NoSteinbergCandidate);
    }
    let mut maximal = Vec::new();
    for mu in &cands {
        let mut dominated = false;
        for other in &cands {
            if other != mu && succeq(rs, other, mu)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            maximal.push(mu.clone());
        }
    }
    if maximal.len() != 1 {
        return Err(Error::AmbiguousSteinbergWeight(maximal.len()));
    }
    Ok(maximal.remove(0))
}
