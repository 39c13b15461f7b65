//! The Sp(2n,R) families X(p,q,eps,eta) and X'(p,q,eps,eta): parameter
//! validation, singular infinitesimal characters, enumeration of the
//! k-dominant regular conjugates (the tau-candidates), K-type membership by
//! deterministic pattern inversion, and the associated-cycle tableau labels.

use crate::error::{Error, Result};
use crate::weights::{rho_vectors, FamilyKind, Weight};

/// X(p,q,eps,eta): theta lift of the character det^eps x det^eta of O(p,q)
/// to Sp(2n,R), with p + q = 2k <= n. The relabeled parity convention is
/// used throughout: K-type entries are congruent to eps respectively eta.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpXSpec {
    pub n: usize,
    pub k: usize,
    pub p: usize,
    pub q: usize,
    pub eps: u8,
    pub eta: u8,
}

impl SpXSpec {
    pub fn new(n: usize, k: usize, p: usize, q: usize, eps: u8, eta: u8) -> Result<Self> {
        if k == 0 {
            return Err(Error::Param("X(p,q,eps,eta) needs k >= 1".into()));
        }
        if p + q != 2 * k {
            return Err(Error::Param(format!("p + q = {} must equal 2k = {}", p + q, 2 * k)));
        }
        if 2 * k > n {
            return Err(Error::Param(format!("2k = {} must be <= n = {n}", 2 * k)));
        }
        if eps > 1 || eta > 1 {
            return Err(Error::Param("eps and eta must be 0 or 1".into()));
        }
        if p == 0 && eps != 0 {
            return Err(Error::Param("p = 0 forces eps = 0".into()));
        }
        if q == 0 && eta != 0 {
            return Err(Error::Param("q = 0 forces eta = 0".into()));
        }
        Ok(SpXSpec { n, k, p, q, eps, eta })
    }

    pub fn family(&self) -> FamilyKind {
        FamilyKind::Sp { n: self.n }
    }

    /// Associated-cycle label: p plus-rows and q minus-rows of size 2.
    pub fn tableau(&self) -> SignedTableau {
        SignedTableau::Single {
            plus_rows: self.p,
            minus_rows: self.q,
        }
    }
}

/// X'(p,q,eps,eta): the extra series for n odd, p + q = 2k = n + 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpXPrimeSpec {
    pub n: usize,
    pub k: usize,
    pub p: usize,
    pub q: usize,
    pub eps: u8,
    pub eta: u8,
}

impl SpXPrimeSpec {
    pub fn new(n: usize, p: usize, q: usize, eps: u8, eta: u8) -> Result<Self> {
        if n.is_multiple_of(2) {
            return Err(Error::Param(format!("X' needs n odd, got n = {n}")));
        }
        let k = n.div_ceil(2);
        if p + q != n + 1 {
            return Err(Error::Param(format!(
                "p + q = {} must equal n + 1 = {}",
                p + q,
                n + 1
            )));
        }
        if !matches!((eps, eta), (0, 0) | (0, 1) | (1, 0)) {
            return Err(Error::Param(
                "(eps,eta) must be one of (0,0), (0,1), (1,0)".into(),
            ));
        }
        if (p == 0 || q == 0) && (eps, eta) != (0, 0) {
            return Err(Error::Param(
                "p = 0 or q = 0 forces (eps,eta) = (0,0)".into(),
            ));
        }
        Ok(SpXPrimeSpec { n, k, p, q, eps, eta })
    }

    pub fn family(&self) -> FamilyKind {
        FamilyKind::Sp { n: self.n }
    }

    /// Associated-cycle label: p pluses and q-1 minuses, except (0,0) which
    /// is the union of (p, q-1) and (p-1, q). Degenerate p or q zero specs
    /// are canonicalized first.
    pub fn tableau(&self) -> SignedTableau {
        let c = identify_xprime(self);
        if (c.eps, c.eta) == (0, 0) {
            SignedTableau::Union {
                parts: [(c.p, c.q - 1), (c.p - 1, c.q)],
            }
        } else {
            SignedTableau::Single {
                plus_rows: c.p,
                minus_rows: c.q - 1,
            }
        }
    }
}

/// Signed tableau label of the associated nilpotent orbit (metadata only;
/// rows counted here all have size 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignedTableau {
    Single { plus_rows: usize, minus_rows: usize },
    Union { parts: [(usize, usize); 2] },
}

/// A k-dominant regular conjugate of the infinitesimal character, together
/// with its tau = x Lambda - rho_k and tail statistics.
///
/// `u` and `v` count the tail entries of x Lambda (absolute value >= k+1)
/// that are positive respectively negative; `special` records whether the
/// core values k, k-1, ..., -k+1 all survive with unchanged sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpTauCandidate {
    pub x_lambda: Weight,
    pub tau: Weight,
    pub u: usize,
    pub v: usize,
    pub special: bool,
    pub sign_pattern: Vec<i8>,
}

/// Lambda_k = (n-k, n-k-1, ..., 1, 0, -1, ..., -k+1), one block of length n.
pub fn infchar_sp(n: usize, k: usize) -> Result<Weight> {
    if k == 0 || 2 * k > n + 1 {
        return Err(Error::Param(format!(
            "need 1 <= k <= floor((n+1)/2), got n = {n}, k = {k}"
        )));
    }
    let coords: Vec<i64> = (0..n as i64).map(|i| n as i64 - k as i64 - i).collect();
    Weight::integral_single(&coords)
}

/// All k-dominant regular conjugates of Lambda_k, exactly 2^(n-2k+1) of
/// them, ordered descending-lexicographically by x Lambda.
///
/// Every sign vector is tried (skipping flips of the zero coordinate, which
/// act trivially); results that are not strictly decreasing after sorting
/// are discarded and duplicates keep their first sign pattern.
pub fn tau_candidates_sp(n: usize, k: usize) -> Result<Vec<SpTauCandidate>> {
    let lambda = infchar_sp(n, k)?;
    let rho_k = rho_vectors(&FamilyKind::Sp { n }).rho_k;
    let lam = lambda.doubled().to_vec();
    let zero_pos = lam.iter().position(|&d| d == 0);

    let mut seen: Vec<Vec<i64>> = Vec::new();
    let mut cands: Vec<SpTauCandidate> = Vec::new();
    'mask: for mask in 0u64..(1u64 << n) {
        if let Some(z) = zero_pos {
            if mask >> (n - 1 - z) & 1 == 1 {
                continue;
            }
        }
        let signs: Vec<i8> = (0..n)
            .map(|i| if mask >> (n - 1 - i) & 1 == 1 { -1 } else { 1 })
            .collect();
        let mut flipped: Vec<i64> = lam
            .iter()
            .zip(&signs)
            .map(|(&d, &s)| i64::from(s) * d)
            .collect();
        flipped.sort_unstable_by(|a, b| b.cmp(a));
        for pair in flipped.windows(2) {
            if pair[0] <= pair[1] {
                continue 'mask;
            }
        }
        if seen.contains(&flipped) {
            continue;
        }
        seen.push(flipped.clone());

        let x_lambda = Weight::new(flipped, vec![n]).expect("sorted flip is well formed");
        let tau = x_lambda.sub(&rho_k).expect("same blocks");
        let bound = 2 * (k as i64 + 1);
        let u = x_lambda.doubled().iter().filter(|&&d| d >= bound).count();
        let v = x_lambda.doubled().iter().filter(|&&d| d <= -bound).count();
        // core values of Lambda_k: everything <= k
        let special = lam
            .iter()
            .filter(|&&d| d <= 2 * k as i64)
            .all(|d| x_lambda.doubled().contains(d));
        cands.push(SpTauCandidate {
            x_lambda,
            tau,
            u,
            v,
            special,
            sign_pattern: signs,
        });
    }
    cands.sort_by(|a, b| b.x_lambda.doubled().cmp(a.x_lambda.doubled()));
    debug_assert_eq!(cands.len(), 1usize << (n + 1 - 2 * k));
    Ok(cands)
}

/// The candidate whose x Lambda is the descending sort of -x Lambda; swaps
/// special with non-special and (u, v) with (v, u).
pub fn mirror_candidate_sp(n: usize, k: usize, cand: &SpTauCandidate) -> Result<SpTauCandidate> {
    let target = cand.x_lambda.negated_sorted();
    tau_candidates_sp(n, k)?
        .into_iter()
        .find(|c| c.x_lambda == target)
        .ok_or_else(|| Error::Param("mirror candidate not found".into()))
}

/// Membership of `highest` in the K-type lattice of X(p,q,eps,eta):
/// highest = ((p-q)/2,...,(p-q)/2) + (a_1,...,a_p, 0,...,0, -b_q,...,-b_1)
/// with a_i >= 0 congruent to eps and b_j >= 0 congruent to eta (mod 2),
/// both non-increasing. Returns false on any structural failure.
pub fn ktype_member_x(spec: &SpXSpec, highest: &Weight) -> bool {
    if highest.blocks() != [spec.n] {
        return false;
    }
    ktype_member_x_doubled(spec, highest.doubled())
}

pub(crate) fn ktype_member_x_doubled(spec: &SpXSpec, d: &[i64]) -> bool {
    let shift = spec.p as i64 - spec.q as i64;
    affine_pattern_member(
        d,
        shift,
        spec.p,
        spec.q,
        i64::from(spec.eps),
        i64::from(spec.eta),
    )
}

/// Subtract a constant doubled shift, halve, and check the
/// (front slack, zeros, back slack) shape with parity constraints.
fn affine_pattern_member(
    d: &[i64],
    shift_doubled: i64,
    front: usize,
    back: usize,
    front_parity: i64,
    back_parity: i64,
) -> bool {
    let n = d.len();
    debug_assert!(front + back <= n);
    let mut prev = i64::MAX;
    for (i, &di) in d.iter().enumerate() {
        let e = di - shift_doubled;
        if e % 2 != 0 {
            return false;
        }
        let v = e / 2;
        if i < front {
            if v < 0 || v > prev || (v - front_parity).rem_euclid(2) != 0 {
                return false;
            }
            prev = v;
        } else if i < n - back {
            if v != 0 {
                return false;
            }
        } else {
            if i == n - back {
                prev = i64::MAX;
            }
            if v > 0 || v > prev || (v - back_parity).rem_euclid(2) != 0 {
                return false;
            }
            prev = v;
        }
    }
    true
}

/// Canonical representative among the identified X' modules:
/// X'(p,q,0,1) = X'(p-1,q+1,1,0) for p >= 2, X'(2k,0,0,0) = X'(2k-1,1,1,0),
/// X'(0,2k,0,0) = X'(1,2k-1,0,1); anything else is already canonical.
pub fn identify_xprime(spec: &SpXPrimeSpec) -> SpXPrimeSpec {
    let mk = |p, q, eps, eta| {
        SpXPrimeSpec::new(spec.n, p, q, eps, eta).expect("identified spec is valid")
    };
    match (spec.eps, spec.eta) {
        (0, 1) if spec.p >= 2 => mk(spec.p - 1, spec.q + 1, 1, 0),
        (0, 0) if spec.q == 0 => mk(spec.p - 1, 1, 1, 0),
        (0, 0) if spec.p == 0 => mk(1, spec.q - 1, 0, 1),
        _ => *spec,
    }
}

/// Membership of `highest` in the K-type lattice of X'(p,q,eps,eta), per the
/// (eps,eta)-indexed rows; (0,0) is the union of its two branches. The spec
/// is canonicalized first, so the degenerate p or q zero lattices are
/// reached through their identified (1,0)/(0,1) forms.
pub fn ktype_member_xprime(spec: &SpXPrimeSpec, highest: &Weight) -> bool {
    if highest.blocks() != [spec.n] {
        return false;
    }
    ktype_member_xprime_doubled(spec, highest.doubled())
}

pub(crate) fn ktype_member_xprime_doubled(spec: &SpXPrimeSpec, d: &[i64]) -> bool {
    let c = identify_xprime(spec);
    let n = c.n;
    let shift = c.p as i64 - c.q as i64;
    // rows differ only in the base vector and the (front, back) slot counts
    let row = |base_front: i64, base_back: i64, front: usize, back: usize| {
        debug_assert_eq!(front + back, n);
        let shifted: Vec<i64> = d
            .iter()
            .enumerate()
            .map(|(i, &di)| if i < front { di - base_front } else { di - base_back })
            .collect();
        affine_pattern_member(&shifted, 0, front, back, 0, 0)
    };
    match (c.eps, c.eta) {
        (1, 0) => row(shift + 2, shift, c.p, c.q - 1),
        (0, 1) => row(shift, shift - 2, c.p - 1, c.q),
        (0, 0) => row(shift, shift, c.p, c.q - 1) || row(shift, shift, c.p - 1, c.q),
        _ => unreachable!("validated eps/eta"),
    }
}
