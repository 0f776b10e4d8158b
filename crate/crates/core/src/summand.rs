//! Direct-summand machinery for `Fr_* O_X(λ)`: Hom-nonvanishing tests, the
//! necessary and sufficient conditions for `O_X(μ)` to split off, candidate-μ
//! enumeration, and the filtration-dimension multiplicity upper bound.

use crate::rep_dims::{filtration_dimension, height_floor};
use crate::root_system::{RootSystemData, Weight};
use crate::weight_order::is_succeq_zero;
use crate::{is_prime, Error, Result};
use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

/// Verdict of the split-off test for one pair `(λ, μ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummandVerdict {
    /// Both Hom spaces are nonzero: `λ−pμ ⪰ 0` and `(1−p)K_X − (λ−pμ) ⪰ 0`.
    pub necessary: bool,
    /// A lattice witness `λ−pμ = Σ a_i ω_i + Σ b_i α_i` exists with
    /// `0 ≤ a_i ≤ 2(p−1)` and `0 ≤ b_i ≤ p−1`.
    pub sufficient: bool,
    /// The `(a, b)` witness when `sufficient` holds.
    pub witness: Option<(Vec<i64>, Vec<i64>)>,
}

/// Validate the standing hypothesis: `p` prime and `p ∤ h`.
pub fn check_prime(rs: &RootSystemData, p: i64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if rs.coxeter_number % p == 0 {
        return Err(Error::BadPrime {
            p,
            h: rs.coxeter_number,
        });
    }
    Ok(())
}

/// `(1−p)K_X` in ω-coordinates.
pub fn twisted_anticanonical(rs: &RootSystemData, p: i64) -> Weight {
    rs.canonical_class().scale(1 - p)
}

/// `Hom(O_X(μ), Fr_* O_X(λ)) ≠ 0 ⟺ λ − pμ ⪰ 0`.
pub fn hom_into_nonzero(rs: &RootSystemData, lambda: &Weight, mu: &Weight, p: i64) -> Result<bool> {
    check_prime(rs, p)?;
    is_succeq_zero(rs, &lambda.sub(&mu.scale(p)))
}

/// `Hom(Fr_* O_X(λ), O_X(μ)) ≠ 0 ⟺ (1−p)K_X − (λ − pμ) ⪰ 0`.
pub fn hom_from_nonzero(rs: &RootSystemData, lambda: &Weight, mu: &Weight, p: i64) -> Result<bool> {
    check_prime(rs, p)?;
    let v = lambda.sub(&mu.scale(p));
    is_succeq_zero(rs, &twisted_anticanonical(rs, p).sub(&v))
}

/// Full verdict: Hom-based necessary condition plus the lattice-point
/// sufficient condition with an explicit witness.
pub fn check_summand(
    rs: &RootSystemData,
    lambda: &Weight,
    mu: &Weight,
    p: i64,
) -> Result<SummandVerdict> {
    check_prime(rs, p)?;
    rs.check_weight(lambda)?;
    rs.check_weight(mu)?;
    let v = lambda.sub(&mu.scale(p));
    let necessary = is_succeq_zero(rs, &v)?
        && is_succeq_zero(rs, &twisted_anticanonical(rs, p).sub(&v))?;
    let witness = find_witness(rs, &v, p)?;
    Ok(SummandVerdict {
        necessary,
        sufficient: witness.is_some(),
        witness,
    })
}

/// Search `b ∈ [0, p−1]^ℓ` (with `Σ b_i` bounded by the root-basis height of
/// `v`) for which `a = v_ω − A·b` lands in `[0, 2(p−1)]^ℓ`.
fn find_witness(rs: &RootSystemData, v: &Weight, p: i64) -> Result<Option<(Vec<i64>, Vec<i64>)>> {
    let h = rs.height(v)?;
    if h < Rational64::zero() {
        return Ok(None);
    }
    let budget = h.floor().to_integer().to_i64().unwrap();
    let l = rs.rank;
    let mut b = vec![0i64; l];
    let mut cur = v.0.clone();
    fn rec(
        rs: &RootSystemData,
        i: usize,
        budget: i64,
        p: i64,
        b: &mut Vec<i64>,
        cur: &mut Vec<i64>,
    ) -> Option<(Vec<i64>, Vec<i64>)> {
        let l = rs.rank;
        if i == l {
            if cur.iter().all(|&a| 0 <= a && a <= 2 * (p - 1)) {
                return Some((cur.clone(), b.clone()));
            }
            return None;
        }
        let cap = budget.min(p - 1);
        for t in 0..=cap {
            b[i] = t;
            if t > 0 {
                for k in 0..l {
                    cur[k] -= rs.cartan[k][i];
                }
            }
            if let Some(w) = rec(rs, i + 1, budget - t, p, b, cur) {
                for k in 0..l {
                    cur[k] += t * rs.cartan[k][i];
                }
                b[i] = 0;
                return Some(w);
            }
        }
        for k in 0..l {
            cur[k] += cap * rs.cartan[k][i];
        }
        b[i] = 0;
        None
    }
    Ok(rec(rs, 0, budget, p, &mut b, &mut cur))
}

/// All `μ` passing the necessary condition `(1−p)K_X ⪰ λ−pμ ⪰ 0`,
/// lexicographically sorted.
///
/// Both `⪰` facts force the root-basis coordinates of `v = λ−pμ` into the box
/// `[0, α-coords((1−p)K_X)]`, which translates into a finite ω-coordinate box
/// for `μ` via interval arithmetic through the Cartan matrix.
pub fn enumerate_candidate_mu(rs: &RootSystemData, lambda: &Weight, p: i64) -> Result<Vec<Weight>> {
    check_prime(rs, p)?;
    rs.check_weight(lambda)?;
    let neg_k = twisted_anticanonical(rs, p);
    let ac_k = rs.root_coords(&neg_k)?;
    let ac_lam = rs.root_coords(lambda)?;
    let l = rs.rank;
    let p_rat = Rational64::from_integer(p);
    // μ's root coordinates lie in [(ac_lam − ac_k)/p, ac_lam/p].
    let lo: Vec<Rational64> = (0..l).map(|i| (ac_lam[i] - ac_k[i]) / p_rat).collect();
    let hi: Vec<Rational64> = (0..l).map(|i| ac_lam[i] / p_rat).collect();
    // ω-coordinate bounds of μ follow by pushing the interval box through the
    // Cartan matrix rows.
    let mut boxes = Vec::with_capacity(l);
    for i in 0..l {
        let mut mn = Rational64::zero();
        let mut mx = Rational64::zero();
        for j in 0..l {
            let a = Rational64::from_integer(rs.cartan[i][j]);
            let (x, y) = (a * lo[j], a * hi[j]);
            mn += x.min(y);
            mx += x.max(y);
        }
        boxes.push((
            mn.ceil().to_integer().to_i64().unwrap(),
            mx.floor().to_integer().to_i64().unwrap(),
        ));
    }
    let mut out = Vec::new();
    let mut mu = boxes.iter().map(|b| b.0).collect::<Vec<i64>>();
    if boxes.iter().any(|b| b.0 > b.1) {
        return Ok(out);
    }
    loop {
        let m = Weight(mu.clone());
        let v = lambda.sub(&m.scale(p));
        if is_succeq_zero(rs, &v)? && is_succeq_zero(rs, &neg_k.sub(&v))? {
            out.push(m);
        }
        let mut i = 0;
        loop {
            if i == l {
                out.sort();
                return Ok(out);
            }
            mu[i] += 1;
            if mu[i] <= boxes[i].1 {
                break;
            }
            mu[i] = boxes[i].0;
            i += 1;
        }
    }
}

/// The subset of [`enumerate_candidate_mu`] whose verdict is sufficient.
pub fn enumerate_guaranteed_mu(rs: &RootSystemData, lambda: &Weight, p: i64) -> Result<Vec<Weight>> {
    let mut out = Vec::new();
    for mu in enumerate_candidate_mu(rs, lambda, p)? {
        if check_summand(rs, lambda, &mu, p)?.sufficient {
            out.push(mu);
        }
    }
    Ok(out)
}

/// Direct lattice scan of the PSL₃ candidate region: integer points
/// `(x₁, x₂)` with `−x₁/2 ≤ x₂ ≤ −x₁/2 + 9(p−1)/2` and
/// `−2x₁ ≤ x₂ ≤ −2x₁ + 9(p−1)`. The count must match `27(p−1)² + 1 + 6(p−1)`.
pub fn psl3_lattice_point_count(p: i64) -> i64 {
    let mut count = 0i64;
    for x1 in -3 * (p - 1)..=6 * (p - 1) {
        for x2 in -2 * (p - 1) * 3..=9 * (p - 1) {
            // Clear denominators: −x₁ ≤ 2x₂ ≤ −x₁ + 9(p−1).
            let ok = 2 * x2 >= -x1
                && 2 * x2 <= -x1 + 9 * (p - 1)
                && x2 >= -2 * x1
                && x2 <= -2 * x1 + 9 * (p - 1);
            if ok {
                count += 1;
            }
        }
    }
    count
}

/// Closed form for the PSL₃ region's lattice-point count.
pub fn psl3_lattice_point_formula(p: i64) -> i64 {
    27 * (p - 1) * (p - 1) + 1 + 6 * (p - 1)
}

/// `min(⌊dim F_{≤λ}/dim F_{≤μ}⌋, dim F_{≤λ−pμ}, dim F_{≤(1−p)K_X−(λ−pμ)})`,
/// omitting the first term when `dim F_{≤μ} = 0`.
pub fn multiplicity_upper_bound(
    rs: &RootSystemData,
    lambda: &Weight,
    mu: &Weight,
    p: i64,
) -> Result<BigUint> {
    check_prime(rs, p)?;
    let v = lambda.sub(&mu.scale(p));
    let mid = filtration_dimension(rs, &v)?;
    let far = filtration_dimension(rs, &twisted_anticanonical(rs, p).sub(&v))?;
    let mut bound = mid.min(far);
    let dim_mu = filtration_dimension(rs, mu)?;
    if !dim_mu.is_zero() {
        let dim_lam = filtration_dimension(rs, lambda)?;
        bound = bound.min(&dim_lam / &dim_mu);
    }
    let _ = height_floor(rs, &v)?; // weight-length sanity, cheap
    Ok(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::TypeTag;
    use num_traits::One;

    fn a1() -> RootSystemData {
        RootSystemData::build(TypeTag::A(1)).unwrap()
    }
    fn a2() -> RootSystemData {
        RootSystemData::build(TypeTag::A(2)).unwrap()
    }

    #[test]
    fn prime_hypothesis_enforced() {
        let rs = a2();
        assert!(matches!(check_prime(&rs, 9), Err(Error::NotPrime(9))));
        assert!(matches!(check_prime(&rs, 3), Err(Error::BadPrime { .. })));
        assert!(check_prime(&rs, 5).is_ok());
        let g2 = RootSystemData::build(TypeTag::G2).unwrap();
        assert!(matches!(check_prime(&g2, 3), Err(Error::BadPrime { .. })));
        assert!(check_prime(&g2, 7).is_ok());
    }

    #[test]
    fn hom_conditions_basic() {
        let rs = a1();
        let p = 5;
        // λ = pμ: into-direction Hom is nonzero.
        assert!(hom_into_nonzero(&rs, &Weight(vec![10]), &Weight(vec![2]), p).unwrap());
        // λ−pμ = (1−p)K_X: from-direction Hom is nonzero.
        let lam = twisted_anticanonical(&rs, p);
        assert!(hom_from_nonzero(&rs, &lam, &Weight::zero(1), p).unwrap());
        // λ−pμ = (4p−3)ω exceeds (1−p)K_X = (4p−4)ω by ω.
        assert!(!hom_from_nonzero(&rs, &Weight(vec![4 * p - 3]), &Weight::zero(1), p).unwrap());
    }

    #[test]
    fn witness_extremes() {
        let rs = a2();
        let p = 5;
        // λ−pμ = 0: witness (0, 0).
        let v = check_summand(&rs, &Weight::zero(2), &Weight::zero(2), p).unwrap();
        assert!(v.sufficient && v.necessary);
        assert_eq!(v.witness, Some((vec![0, 0], vec![0, 0])));
        // λ−pμ = (1−p)K_X: witness a_i = 2(p−1), b_i = p−1.
        let lam = twisted_anticanonical(&rs, p);
        let v = check_summand(&rs, &lam, &Weight::zero(2), p).unwrap();
        let (a, b) = v.witness.expect("extreme corner splits");
        assert_eq!(a, vec![2 * (p - 1); 2]);
        assert_eq!(b, vec![p - 1; 2]);
    }

    #[test]
    fn witness_reconstructs_difference() {
        let rs = a2();
        let p = 11;
        let lam = Weight(vec![6, 6]);
        let v = check_summand(&rs, &lam, &Weight::zero(2), p).unwrap();
        assert!(v.sufficient);
        let (a, b) = v.witness.unwrap();
        let mut recon = Weight(a.clone());
        for i in 0..2 {
            recon = recon.add(&rs.simple_root(i).scale(b[i]));
        }
        assert_eq!(recon, lam);
        assert!(a.iter().all(|&x| (0..=2 * (p - 1)).contains(&x)));
        assert!(b.iter().all(|&x| (0..p).contains(&x)));
    }

    #[test]
    fn a1_candidate_interval_closed_form() {
        let rs = a1();
        for p in [5i64, 7] {
            for n in [0i64, 3, 10, 25] {
                let got = enumerate_candidate_mu(&rs, &Weight(vec![n]), p).unwrap();
                let lo = -(-(4 + n)).div_euclid(p) - 4; // ⌈(4+n)/p⌉ − 4
                let hi = n.div_euclid(p);
                let expect: Vec<Weight> = (lo..=hi).map(|k| Weight(vec![k])).collect();
                assert_eq!(got, expect, "p={p} n={n}");
            }
        }
    }

    #[test]
    fn guaranteed_is_subset_and_contains_trivial_cases() {
        let rs = a2();
        let p = 5;
        for lam in [Weight(vec![0, 0]), Weight(vec![3, 1]), Weight(vec![4, 4])] {
            let cand = enumerate_candidate_mu(&rs, &lam, p).unwrap();
            let guar = enumerate_guaranteed_mu(&rs, &lam, p).unwrap();
            for g in &guar {
                assert!(cand.contains(g));
            }
        }
        // λ = pν and λ = pν + (p−1)ρ both guarantee ν.
        let nu = Weight(vec![1, -2]);
        for extra in [Weight::zero(2), rs.rho.scale(p - 1)] {
            let lam = nu.scale(p).add(&extra);
            let guar = enumerate_guaranteed_mu(&rs, &lam, p).unwrap();
            assert!(guar.contains(&nu), "extra={extra}");
        }
    }

    #[test]
    fn candidate_enumeration_translation_equivariant() {
        let rs = a2();
        let p = 5;
        let lam = Weight(vec![2, 3]);
        let nu = Weight(vec![-1, 2]);
        let base = enumerate_candidate_mu(&rs, &lam, p).unwrap();
        let shifted = enumerate_candidate_mu(&rs, &lam.add(&nu.scale(p)), p).unwrap();
        let translated: Vec<Weight> = base.iter().map(|m| m.add(&nu)).collect();
        assert_eq!(shifted, translated);
    }

    #[test]
    fn psl3_scan_matches_formula() {
        for p in [2i64, 5, 11] {
            assert_eq!(psl3_lattice_point_count(p), psl3_lattice_point_formula(p), "p={p}");
        }
        assert_eq!(psl3_lattice_point_formula(5), 457);
        assert_eq!(psl3_lattice_point_formula(11), 2761);
        assert_eq!(psl3_lattice_point_formula(2), 34);
    }

    #[test]
    fn upper_bound_exact_multiplicity_cases() {
        let rs = a2();
        let p = 5;
        let mu = Weight(vec![1, 0]);
        // λ = pμ → exactly one copy.
        assert_eq!(
            multiplicity_upper_bound(&rs, &mu.scale(p), &mu, p).unwrap(),
            BigUint::one()
        );
        // λ = pμ + α_i → 1 (α_i is not dominant in rank ≥ 2).
        let lam = mu.scale(p).add(&rs.simple_root(0));
        assert_eq!(multiplicity_upper_bound(&rs, &lam, &mu, p).unwrap(), BigUint::one());
        // λ = (1−p)K_X + pμ → 1.
        let lam = twisted_anticanonical(&rs, p).add(&mu.scale(p));
        assert_eq!(multiplicity_upper_bound(&rs, &lam, &mu, p).unwrap(), BigUint::one());
        // Failing the necessary condition forces 0.
        let bad = Weight(vec![0, -1]);
        assert_eq!(
            multiplicity_upper_bound(&rs, &bad, &Weight::zero(2), p).unwrap(),
            BigUint::zero()
        );
    }

    #[test]
    fn sufficient_implies_necessary_on_grid() {
        let rs = a2();
        let p = 5;
        for a in -2..=6i64 {
            for b in -2..=6i64 {
                let lam = Weight(vec![a, b]);
                for ma in -1..=1i64 {
                    for mb in -1..=1i64 {
                        let v = check_summand(&rs, &lam, &Weight(vec![ma, mb]), p).unwrap();
                        assert!(!v.sufficient || v.necessary, "λ={lam} μ=({ma},{mb})");
                        assert_eq!(v.sufficient, v.witness.is_some());
                    }
                }
            }
        }
    }
}
