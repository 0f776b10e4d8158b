//! Linkage classes on `Λ/pΛ` under the dot action, alcove signatures with
//! the upper-closure convention, the hard-coded `d_λ` tables, block
//! dimensions, and the ranks `a_λ · d_λ · d_μ` of the vector-bundle summands
//! of `Fr_* O_X(λ)`.

use crate::root_system::{RootSystemData, TypeTag, Weight};
use crate::summand::check_prime;
use crate::{Error, Result};
use num_bigint::BigUint;
use std::collections::BTreeSet;

/// Alcove position of a restricted weight: for each positive root `α`,
/// `m_α` is the unique integer with `(m_α − 1)p < ⟨λ+ρ, α∨⟩ ≤ m_α p`, so
/// weights on a wall are counted with the lower alcove.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlcoveSignature {
    /// Indexed like `rs.positive_roots`.
    pub m: Vec<i64>,
}

/// Number of affine hyperplanes separating the alcove from the bottom one.
pub fn separation_count(sig: &AlcoveSignature) -> i64 {
    sig.m.iter().map(|&m| m - 1).sum()
}

/// Dot-action orbit of a restricted weight inside `Λ_p = [0, p−1]^ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkageClass {
    /// Lexicographically smallest orbit member.
    pub representative: Weight,
    /// Sorted orbit.
    pub orbit: Vec<Weight>,
    pub a_lambda: usize,
}

/// All `p^ℓ` restricted weights in lexicographic order.
pub fn restricted_weights(rs: &RootSystemData, p: i64) -> impl Iterator<Item = Weight> + '_ {
    let l = rs.rank;
    let total = (p as u64).pow(l as u32);
    (0..total).map(move |code| {
        let mut c = code;
        let mut v = vec![0i64; l];
        // Lexicographic: first coordinate is the most significant digit.
        for i in (0..l).rev() {
            v[i] = (c % p as u64) as i64;
            c /= p as u64;
        }
        Weight(v)
    })
}

/// Orbit of `λ` under `w·λ = w(λ+ρ) − ρ` composed with reduction mod `pΛ`.
/// General `λ` are first reduced to their `Λ_p` representative.
pub fn linkage_class(rs: &RootSystemData, lambda: &Weight, p: i64) -> Result<LinkageClass> {
    check_prime(rs, p)?;
    rs.check_weight(lambda)?;
    let lam = lambda.mod_p(p);
    let mut orbit: BTreeSet<Weight> = BTreeSet::new();
    for w in rs.weyl()? {
        orbit.insert(rs.dot_action(w, &lam).mod_p(p));
    }
    debug_assert!(orbit.contains(&lam));
    let orbit: Vec<Weight> = orbit.into_iter().collect();
    Ok(LinkageClass {
        representative: orbit[0].clone(),
        a_lambda: orbit.len(),
        orbit,
    })
}

pub fn a_lambda(rs: &RootSystemData, lambda: &Weight, p: i64) -> Result<usize> {
    Ok(linkage_class(rs, lambda, p)?.a_lambda)
}

/// All linkage classes, ordered by representative.
pub fn linkage_classes(rs: &RootSystemData, p: i64) -> Result<Vec<LinkageClass>> {
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    let mut out = Vec::new();
    for lam in restricted_weights(rs, p) {
        if seen.contains(&lam) {
            continue;
        }
        let class = linkage_class(rs, &lam, p)?;
        for m in &class.orbit {
            seen.insert(m.clone());
        }
        out.push(class);
    }
    Ok(out)
}

/// Multiplicity profile of the ε-coordinates of `λ+ρ` mod `p` for `PSL_n`:
/// the vector `(Σ_{j≥1} c_j + n−1, Σ_{j≥2} c_j + n−2, …, c_{n−1}+1, 0)`
/// reduced mod `p`, returned as the sorted multiplicities of its entries.
pub fn psln_type(n: usize, lambda: &Weight, p: i64) -> Result<Vec<usize>> {
    if lambda.rank() != n - 1 {
        return Err(Error::BadWeightLength {
            got: lambda.rank(),
            expected: n - 1,
        });
    }
    if n as i64 % p == 0 {
        return Err(Error::BadPrime { p, h: n as i64 });
    }
    let mut entries = Vec::with_capacity(n);
    for i in 0..n {
        let tail: i64 = lambda.0[i..].iter().sum();
        entries.push((tail + (n - 1 - i) as i64).rem_euclid(p));
    }
    let mut counts = std::collections::HashMap::new();
    for e in entries {
        *counts.entry(e).or_insert(0usize) += 1;
    }
    let mut profile: Vec<usize> = counts.into_values().collect();
    profile.sort_unstable_by(|a, b| b.cmp(a));
    Ok(profile)
}

/// `a_λ` from the type profile: `n! / (n₁! ⋯ n_k!)`.
pub fn a_lambda_from_type(n: usize, profile: &[usize]) -> usize {
    let fact = |k: usize| -> usize { (1..=k).product() };
    profile.iter().fold(fact(n), |acc, &ni| acc / fact(ni))
}

/// Dimension of the block of `λ`: `a_λ · p^{2|Φ⁺|}`.
pub fn block_dimension(rs: &RootSystemData, lambda: &Weight, p: i64) -> Result<BigUint> {
    let a = a_lambda(rs, lambda, p)?;
    Ok(BigUint::from(a) * BigUint::from(p as u64).pow(2 * rs.num_positive_roots() as u32))
}

/// Alcove signature of a restricted weight.
pub fn alcove_signature(rs: &RootSystemData, lambda: &Weight, p: i64) -> Result<AlcoveSignature> {
    rs.check_weight(lambda)?;
    let shifted = lambda.add(&rs.rho);
    let m = (0..rs.num_positive_roots())
        .map(|idx| {
            let x = rs.pairing(&shifted, idx);
            // Unique m with (m−1)p < x ≤ mp: walls join the lower alcove.
            let m = x.div_euclid(p) + i64::from(x.rem_euclid(p) != 0);
            debug_assert!((m - 1) * p < x && x <= m * p);
            m
        })
        .collect();
    Ok(AlcoveSignature { m })
}

/// `d_λ` table for one type, indexed by separation count (0 = bottom
/// alcove). Alcoves sharing a separation count share their `d` value, which
/// is what makes the flat table safe.
fn d_table(tag: TypeTag) -> Result<&'static [i64]> {
    match tag {
        TypeTag::A(1) => Ok(&[1]),
        TypeTag::A(2) => Ok(&[2, 1]),
        TypeTag::A(3) => Ok(&[11, 6, 3, 2, 1]),
        TypeTag::B2 => Ok(&[4, 3, 2, 1]),
        TypeTag::G2 => Ok(&[29, 16, 17, 18, 12, 6, 5, 4, 3, 2, 1]),
        other => Err(Error::NoRankTable(other.to_string())),
    }
}

/// Multiplicity of the irreducible `L_λ` in the Weyl module `Δ_λ`'s block
/// bookkeeping: constant on alcoves, looked up by separation count.
/// Requires `p ≥ h` for the tables to apply.
pub fn d_lambda(rs: &RootSystemData, lambda: &Weight, p: i64) -> Result<i64> {
    check_prime(rs, p)?;
    if p < rs.coxeter_number {
        return Err(Error::PrimeTooSmall {
            p,
            h: rs.coxeter_number,
        });
    }
    let table = d_table(rs.type_tag)?;
    let sep = separation_count(&alcove_signature(rs, lambda, p)?) as usize;
    assert!(
        sep < table.len(),
        "restricted weights stay within the tabulated alcoves"
    );
    Ok(table[sep])
}

/// Rank of the summand of `Fr_* O_X(λ)` attached to `μ`: `a_λ d_λ d_μ` when
/// `μ` is linked to `λ`, else 0.
pub fn rank_of_summand(rs: &RootSystemData, lambda: &Weight, mu: &Weight, p: i64) -> Result<i64> {
    let class = linkage_class(rs, lambda, p)?;
    let mu = mu.mod_p(p);
    if !class.orbit.contains(&mu) {
        return Ok(0);
    }
    let dl = d_lambda(rs, lambda, p)?;
    let dm = d_lambda(rs, &mu, p)?;
    Ok(class.a_lambda as i64 * dl * dm)
}

/// All nonzero summand ranks over `λ ∈ Λ_p` and `μ` in the class of `λ`.
pub fn rank_set(rs: &RootSystemData, p: i64) -> Result<BTreeSet<i64>> {
    check_prime(rs, p)?;
    if p < rs.coxeter_number {
        return Err(Error::PrimeTooSmall {
            p,
            h: rs.coxeter_number,
        });
    }
    let mut out = BTreeSet::new();
    for class in linkage_classes(rs, p)? {
        let ds: BTreeSet<i64> = class
            .orbit
            .iter()
            .map(|m| d_lambda(rs, m, p))
            .collect::<Result<_>>()?;
        for &d1 in &ds {
            for &d2 in &ds {
                out.insert(class.a_lambda as i64 * d1 * d2);
            }
        }
    }
    Ok(out)
}
