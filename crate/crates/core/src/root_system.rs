//! Root-system and Weyl-group arithmetic.
//!
//! Weights are stored in fundamental-weight (ω) coordinates throughout the
//! crate; the simple-root (α) basis appears only as exact rationals returned
//! by [`RootSystemData::root_coords`]. The Cartan matrix convention is
//! `cartan[i][j] = ⟨α_j, α_i∨⟩`, so the ω-coordinates of α_j form column `j`.

use crate::{Error, Result};
use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigUint;

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| k * a).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    /// Coordinate-wise reduction modulo `p` into `[0, p)^ℓ`.
    pub fn mod_p(&self, p: i64) -> Weight {
        Weight(self.0.iter().map(|a| a.rem_euclid(p)).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Weight> {
        let coords: std::result::Result<Vec<i64>, _> =
            s.split(',').map(|t| t.trim().parse::<i64>()).collect();
        coords
            .map(Weight)
            .map_err(|e| Error::InvalidArgument(format!("bad weight '{s}': {e}")))
    }
}

/// Supported Dynkin types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeTag {
    /// A_n, n ≥ 1.
    A(usize),
    B2,
    G2,
}

impl TypeTag {
    pub fn rank(&self) -> usize {
        match self {
            TypeTag::A(n) => *n,
            TypeTag::B2 | TypeTag::G2 => 2,
        }
    }

    /// Parse names like `A2`, `a3`, `B2`, `G2`.
    pub fn parse(s: &str) -> Result<TypeTag> {
        let s = s.trim();
        let bad = || Error::UnsupportedType(s.to_string());
        let (head, tail) = s.split_at(1);
        match head.to_ascii_uppercase().as_str() {
            "A" => {
                let n: usize = tail.parse().map_err(|_| bad())?;
                if n == 0 {
                    return Err(Error::RankOutOfRange(n, "A".into()));
                }
                Ok(TypeTag::A(n))
            }
            "B" if tail == "2" => Ok(TypeTag::B2),
            "G" if tail == "2" => Ok(TypeTag::G2),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeTag::A(n) => write!(f, "A{n}"),
            TypeTag::B2 => write!(f, "B2"),
            TypeTag::G2 => write!(f, "G2"),
        }
    }
}

/// A positive root, carried in all three encodings used downstream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRoot {
    /// Coefficients over the simple roots (all ≥ 0).
    pub root_coeffs: Vec<i64>,
    /// ω-coordinates of the root itself.
    pub weight: Weight,
    /// Coefficients of the coroot over the simple coroots; pairing a weight
    /// against this coroot is the dot product with the ω-coordinates.
    pub coroot_coeffs: Vec<i64>,
}

impl PositiveRoot {
    /// Height of the coroot (sum of its simple-coroot coefficients).
    pub fn coroot_height(&self) -> i64 {
        self.coroot_coeffs.iter().sum()
    }
}

/// An orthogonal Weyl-group element as an integer matrix acting on
/// ω-coordinates (row-major, rank × rank).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: usize,
    entries: Vec<i64>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut entries = vec![0; rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = 1;
        }
        WeylElement { rank, entries }
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let n = self.rank;
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| self.entries[i * n + j] * w.0[j]).sum())
                .collect(),
        )
    }

    /// Matrix product `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = (0..n)
                    .map(|k| self.entries[i * n + k] * other.entries[k * n + j])
                    .sum();
            }
        }
        WeylElement { rank: n, entries }
    }
}

/// Largest rank of A_n for which the Weyl group is enumerated eagerly.
pub const MAX_ENUMERATED_A_RANK: usize = 5;

/// All structural data for one root system.
///
/// Built once by [`RootSystemData::build`] and treated as immutable; the only
/// interior mutability is a dimension-count cache used by [`crate::rep_dims`].
pub struct RootSystemData {
    pub type_tag: TypeTag,
    pub rank: usize,
    /// `cartan[i][j] = ⟨α_j, α_i∨⟩`.
    pub cartan: Vec<Vec<i64>>,
    /// Symmetrizer: `d[i] * cartan[i][j]` is symmetric; short roots have d = 1.
    pub symmetrizer: Vec<i64>,
    pub positive_roots: Vec<PositiveRoot>,
    /// Half-sum of positive roots; equals (1,…,1) in ω-coordinates.
    pub rho: Weight,
    /// Weyl group elements, identity first, BFS-by-length order; `None` when
    /// enumeration is gated off (A_n with n > [`MAX_ENUMERATED_A_RANK`]).
    pub weyl_elements: Option<Vec<WeylElement>>,
    /// Index of the longest element in `weyl_elements`.
    pub longest_element: Option<usize>,
    pub coxeter_number: i64,
    pub(crate) dim_cache: Mutex<HashMap<Weight, BigUint>>,
}

impl fmt::Debug for RootSystemData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystemData")
            .field("type_tag", &self.type_tag)
            .field("rank", &self.rank)
            .field("num_positive_roots", &self.positive_roots.len())
            .finish()
    }
}

impl RootSystemData {
    pub fn build(tag: TypeTag) -> Result<RootSystemData> {
        let (rank, cartan, symmetrizer): (usize, Vec<Vec<i64>>, Vec<i64>) = match tag {
            TypeTag::A(n) => {
                if n == 0 || n > 64 {
                    return Err(Error::RankOutOfRange(n, "A".into()));
                }
                let cartan = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                if i == j {
                                    2
                                } else if i.abs_diff(j) == 1 {
                                    -1
                                } else {
                                    0
                                }
                            })
                            .collect()
                    })
                    .collect();
                (n, cartan, vec![1; n])
            }
            TypeTag::B2 => (2, vec![vec![2, -2], vec![-1, 2]], vec![1, 2]),
            TypeTag::G2 => (2, vec![vec![2, -3], vec![-1, 2]], vec![1, 3]),
        };

        let positive_roots = positive_roots(rank, &cartan, &symmetrizer);
        let num_pos = positive_roots.len();
        let coxeter_number = 2 * num_pos as i64 / rank as i64;

        let enumerate = !matches!(tag, TypeTag::A(n) if n > MAX_ENUMERATED_A_RANK);
        let (weyl_elements, longest_element) = if enumerate {
            let elements = enumerate_weyl(rank, &cartan);
            let rho = Weight(vec![1; rank]);
            let neg_rho = rho.neg();
            let w0 = elements
                .iter()
                .position(|w| w.apply(&rho) == neg_rho)
                .expect("every finite Weyl group has a longest element");
            (Some(elements), Some(w0))
        } else {
            (None, None)
        };

        Ok(RootSystemData {
            type_tag: tag,
            rank,
            cartan,
            symmetrizer,
            positive_roots,
            rho: Weight(vec![1; rank]),
            weyl_elements,
            longest_element,
            coxeter_number,
            dim_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Dimension of the adjoint group: rank + number of roots.
    pub fn group_dimension(&self) -> i64 {
        self.rank as i64 + 2 * self.positive_roots.len() as i64
    }

    /// ω-coordinates of the simple root α_i (column `i` of the Cartan matrix).
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight((0..self.rank).map(|k| self.cartan[k][i]).collect())
    }

    /// ⟨λ, γ∨⟩ for the positive root with index `root_idx`.
    pub fn pairing(&self, lambda: &Weight, root_idx: usize) -> i64 {
        self.positive_roots[root_idx]
            .coroot_coeffs
            .iter()
            .zip(&lambda.0)
            .map(|(c, x)| c * x)
            .sum()
    }

    /// Enumerated Weyl group, or an error for gated-off ranks.
    pub fn weyl(&self) -> Result<&[WeylElement]> {
        self.weyl_elements.as_deref().ok_or(Error::WeylUnavailable {
            n: self.rank,
            max: MAX_ENUMERATED_A_RANK,
        })
    }

    pub fn longest(&self) -> Result<&WeylElement> {
        let w = self.weyl()?;
        Ok(&w[self.longest_element.expect("set whenever weyl_elements is")])
    }

    /// Ordinary (linear) Weyl action.
    pub fn weyl_apply(&self, w: &WeylElement, lambda: &Weight) -> Weight {
        w.apply(lambda)
    }

    /// Dot action `w·λ = w(λ+ρ) − ρ`.
    pub fn dot_action(&self, w: &WeylElement, lambda: &Weight) -> Weight {
        w.apply(&lambda.add(&self.rho)).sub(&self.rho)
    }

    /// Coordinates of `lambda` in the simple-root basis (exact rationals),
    /// i.e. the solution of `cartan · x = lambda`.
    pub fn root_coords(&self, lambda: &Weight) -> Result<Vec<Rational64>> {
        if lambda.rank() != self.rank {
            return Err(Error::BadWeightLength {
                got: lambda.rank(),
                expected: self.rank,
            });
        }
        let n = self.rank;
        let mut m: Vec<Vec<Rational64>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational64> = self.cartan[i]
                    .iter()
                    .map(|&a| Rational64::from_integer(a))
                    .collect();
                row.push(Rational64::from_integer(lambda.0[i]));
                row
            })
            .collect();
        for c in 0..n {
            let piv = (c..n)
                .find(|&r| !m[r][c].is_zero())
                .expect("Cartan matrices are invertible");
            m.swap(c, piv);
            let inv = m[c][c];
            for x in m[c].iter_mut() {
                *x /= inv;
            }
            for r in 0..n {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c];
                    for j in 0..=n {
                        let v = m[c][j];
                        m[r][j] -= f * v;
                    }
                }
            }
        }
        Ok((0..n).map(|i| m[i][n]).collect())
    }

    /// Sum of the simple-root coordinates of `lambda`.
    pub fn height(&self, lambda: &Weight) -> Result<Rational64> {
        Ok(self.root_coords(lambda)?.into_iter().sum())
    }

    /// The anticanonical-style combination `-K_X = 2ρ + Σ α_i` appears all
    /// over; this returns `K_X = -2ρ - Σ α_i` in ω-coordinates.
    pub fn canonical_class(&self) -> Weight {
        let mut k = vec![-2i64; self.rank];
        for j in 0..self.rank {
            for i in 0..self.rank {
                k[i] -= self.cartan[i][j];
            }
        }
        Weight(k)
    }

    /// Check that `lambda` has the right number of coordinates.
    pub fn check_weight(&self, lambda: &Weight) -> Result<()> {
        if lambda.rank() == self.rank {
            Ok(())
        } else {
            Err(Error::BadWeightLength {
                got: lambda.rank(),
                expected: self.rank,
            })
        }
    }
}

fn positive_roots(rank: usize, cartan: &[Vec<i64>], symmetrizer: &[i64]) -> Vec<PositiveRoot> {
    // Close the simple roots (in root coordinates) under all simple
    // reflections, then keep the nonnegative orthant.
    let pair_root = |c: &[i64], i: usize| -> i64 {
        (0..rank).map(|j| c[j] * cartan[i][j]).sum()
    };
    let mut all: HashSet<Vec<i64>> = HashSet::new();
    for i in 0..rank {
        let mut s = vec![0i64; rank];
        s[i] = 1;
        all.insert(s.clone());
        all.insert(s.iter().map(|x| -x).collect());
    }
    let mut changed = true;
    while changed {
        changed = false;
        for b in all.clone() {
            for i in 0..rank {
                let k = pair_root(&b, i);
                let mut nb = b.clone();
                nb[i] -= k;
                if all.insert(nb) {
                    changed = true;
                }
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = all
        .into_iter()
        .filter(|r| r.iter().all(|&x| x >= 0))
        .collect();
    pos.sort();

    pos.into_iter()
        .map(|c| {
            let weight = Weight(
                (0..rank)
                    .map(|i| (0..rank).map(|j| cartan[i][j] * c[j]).sum())
                    .collect(),
            );
            // (γ, γ)/2 in the normalization where short simple roots have
            // squared length 2; always divides c_i * d_i exactly.
            let mut halfnorm = 0i64;
            for i in 0..rank {
                for j in 0..rank {
                    halfnorm += c[i] * c[j] * symmetrizer[j] * cartan[j][i];
                }
            }
            debug_assert_eq!(halfnorm % 2, 0);
            halfnorm /= 2;
            let coroot_coeffs = (0..rank)
                .map(|i| {
                    let num = c[i] * symmetrizer[i];
                    debug_assert_eq!(num % halfnorm, 0);
                    num / halfnorm
                })
                .collect();
            PositiveRoot {
                root_coeffs: c,
                weight,
                coroot_coeffs,
            }
        })
        .collect()
}

fn enumerate_weyl(rank: usize, cartan: &[Vec<i64>]) -> Vec<WeylElement> {
    // Simple reflection on ω-coordinates: s_i(λ)_k = λ_k − λ_i · A[k][i].
    let simples: Vec<WeylElement> = (0..rank)
        .map(|i| {
            let mut entries = vec![0i64; rank * rank];
            for k in 0..rank {
                for j in 0..rank {
                    let mut e = if k == j { 1 } else { 0 };
                    if j == i {
                        e -= cartan[k][i];
                    }
                    entries[k * rank + j] = e;
                }
            }
            WeylElement { rank, entries }
        })
        .collect();

    let id = WeylElement::identity(rank);
    let mut seen: HashSet<WeylElement> = HashSet::new();
    seen.insert(id.clone());
    let mut out = vec![id.clone()];
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for s in &simples {
                let nw = s.compose(w);
                if seen.insert(nw.clone()) {
                    out.push(nw.clone());
                    next.push(nw);
                }
            }
        }
        frontier = next;
    }
    out
}
