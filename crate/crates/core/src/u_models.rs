//! The U(p,q) modules X(p1,q1,xi), cohomologically induced from a character
//! of U(p1,q1) x U(p2,q2): validation of the good-range/unipotence interval,
//! the infinitesimal character, the case-split lowest K-type, K-type
//! membership, and enumeration of the k-dominant regular conjugates via
//! multiset splitting.

use crate::error::{Error, Result};
use crate::weights::{
    combinations, half_string, is_k_dominant_regular, rho_vectors, FamilyKind, Weight,
};

/// Parameters (p1, q1, p2, q2, xi) with p1 >= q2, q1 >= p2, p = p1 + p2 and
/// q = q1 + q2 of the same parity, and xi an integer in the closed interval
/// [-(a+b), a+b] where a = (p1-q2)/2 and b = (q1-p2)/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UpqSpec {
    pub p1: usize,
    pub q1: usize,
    pub p2: usize,
    pub q2: usize,
    pub xi: i64,
}

impl UpqSpec {
    pub fn p(&self) -> usize {
        self.p1 + self.p2
    }

    pub fn q(&self) -> usize {
        self.q1 + self.q2
    }

    pub fn n1(&self) -> usize {
        self.p1 + self.q1
    }

    pub fn n2(&self) -> usize {
        self.p2 + self.q2
    }

    /// 2a = p1 - q2.
    pub fn shift_a_doubled(&self) -> i64 {
        self.p1 as i64 - self.q2 as i64
    }

    /// 2b = q1 - p2.
    pub fn shift_b_doubled(&self) -> i64 {
        self.q1 as i64 - self.p2 as i64
    }

    pub fn family(&self) -> FamilyKind {
        FamilyKind::U {
            p: self.p(),
            q: self.q(),
        }
    }
}

/// Validate and build a spec; errors name the violated constraint.
pub fn validate_u(p1: usize, q1: usize, p2: usize, q2: usize, xi: i64) -> Result<UpqSpec> {
    if p1 < q2 {
        return Err(Error::Param(format!("p1 >= q2 fails: p1 = {p1}, q2 = {q2}")));
    }
    if q1 < p2 {
        return Err(Error::Param(format!("q1 >= p2 fails: q1 = {q1}, p2 = {p2}")));
    }
    let spec = UpqSpec { p1, q1, p2, q2, xi };
    if !(spec.p() + spec.q()).is_multiple_of(2) {
        return Err(Error::Param(format!(
            "p = {} and q = {} must have the same parity",
            spec.p(),
            spec.q()
        )));
    }
    // both halves of a+b >= xi >= -(a+b), exact in doubled coordinates
    let two_ab = spec.shift_a_doubled() + spec.shift_b_doubled();
    if 2 * xi > two_ab {
        return Err(Error::Param(format!(
            "good range violated: xi = {xi} > a+b = {}",
            half_string(two_ab)
        )));
    }
    if 2 * xi < -two_ab {
        return Err(Error::Param(format!(
            "good range violated: xi = {xi} < -(a+b) = {}",
            half_string(-two_ab)
        )));
    }
    Ok(spec)
}

/// Lambda = ((p1+q1-1)/2 + xi, ..., -(p1+q1-1)/2 + xi,
///           (p2+q2-1)/2, ..., -(p2+q2-1)/2),
/// a length-(p+q) multiset carried with blocks (p, q) for later splitting.
pub fn infchar_u(spec: &UpqSpec) -> Weight {
    let mut doubled = first_string(spec);
    doubled.extend(second_string(spec));
    Weight::new(doubled, vec![spec.p(), spec.q()]).expect("strings share parity")
}

fn first_string(spec: &UpqSpec) -> Vec<i64> {
    let n1 = spec.n1() as i64;
    (0..n1).map(|i| 2 * spec.xi + (n1 - 1) - 2 * i).collect()
}

fn second_string(spec: &UpqSpec) -> Vec<i64> {
    let n2 = spec.n2() as i64;
    (0..n2).map(|i| (n2 - 1) - 2 * i).collect()
}

/// The lowest K-type mu_0, selected among the four sign regimes of
/// xi against +/-(a - b).
pub fn lowest_ktype_u(spec: &UpqSpec) -> Weight {
    let (p1, q1, p2, q2) = (
        spec.p1 as i64,
        spec.q1 as i64,
        spec.p2 as i64,
        spec.q2 as i64,
    );
    let txi = 2 * spec.xi;
    let d = spec.shift_a_doubled() - spec.shift_b_doubled(); // 2(a-b) = p - q
    let lo_left = txi + q2 - p2; // xi + (q2-p2)/2, doubled
    let lo_right = txi + p2 - q2;
    let hi_left = 2 * (q2 - p2) + q1 - p1; // q2-p2 + (q1-p1)/2, doubled
    let hi_right = 2 * (p2 - q2) + p1 - q1;
    let tail_left = p1 - q1; // (p1-q1)/2, doubled
    let tail_right = q1 - p1;

    let mut left: Vec<i64> = Vec::with_capacity(spec.p());
    let mut right: Vec<i64> = Vec::with_capacity(spec.q());
    let run = |side: &mut Vec<i64>, val: i64, count: i64| {
        for _ in 0..count {
            side.push(val);
        }
    };
    if txi >= d.abs() {
        run(&mut left, lo_left, p1);
        run(&mut left, tail_left, p2);
        run(&mut right, lo_right, q1);
        run(&mut right, tail_right, q2);
    } else if d > 0 && txi >= -d {
        run(&mut left, lo_left, p1 + p2);
        run(&mut right, hi_right, p2);
        run(&mut right, lo_right, q1 - p2);
        run(&mut right, tail_right, q2);
    } else if d < 0 && txi >= d {
        run(&mut left, hi_left, q2);
        run(&mut left, lo_left, p1 - q2);
        run(&mut left, tail_left, p2);
        run(&mut right, lo_right, q1 + q2);
    } else {
        run(&mut left, hi_left, q2);
        run(&mut left, lo_left, p1 + p2 - q2);
        run(&mut right, hi_right, p2);
        run(&mut right, lo_right, q1 + q2 - p2);
    }
    left.extend(right);
    let mu0 = Weight::new(left, vec![spec.p(), spec.q()]).expect("mu0 well formed");
    debug_assert!(is_k_dominant_regular(&mu0).0, "mu0 must be dominant");
    mu0
}

/// Membership of `highest` in the K-type lattice of X(p1,q1,xi):
/// highest = mu_0 + (a_1..a_{q2}, 0..0, -b_{p2}..-b_1 |
///                   b_1..b_{p2}, 0..0, -a_{q2}..-a_1)
/// with non-increasing nonnegative integers a_i, b_j whose left and right
/// occurrences agree. Returns false on any structural failure.
pub fn ktype_member_u(spec: &UpqSpec, highest: &Weight) -> bool {
    if highest.blocks() != [spec.p(), spec.q()] {
        return false;
    }
    ktype_member_u_doubled(spec, &lowest_ktype_u(spec), highest.doubled())
}

pub(crate) fn ktype_member_u_doubled(spec: &UpqSpec, mu0: &Weight, d: &[i64]) -> bool {
    let (p, q, p2, q2) = (spec.p(), spec.q(), spec.p2, spec.q2);
    let m0 = mu0.doubled();
    let mut v = Vec::with_capacity(p + q);
    for i in 0..p + q {
        let e = d[i] - m0[i];
        if e % 2 != 0 {
            return false;
        }
        v.push(e / 2);
    }
    let (left, right) = v.split_at(p);
    // left: (a_1..a_{q2}, zeros, -b_{p2}..-b_1)
    let a_seg = &left[..q2];
    if !non_increasing(a_seg) || a_seg.last().is_some_and(|&x| x < 0) {
        return false;
    }
    if left[q2..p - p2].iter().any(|&x| x != 0) {
        return false;
    }
    // right: (b_1..b_{p2}, zeros, -a_{q2}..-a_1)
    let b_seg = &right[..p2];
    if !non_increasing(b_seg) || b_seg.last().is_some_and(|&x| x < 0) {
        return false;
    }
    if right[p2..q - q2].iter().any(|&x| x != 0) {
        return false;
    }
    // cross-block consistency of the same a's and b's
    for (j, &b) in b_seg.iter().enumerate() {
        if left[p - 1 - j] != -b {
            return false;
        }
    }
    for (i, &a) in a_seg.iter().enumerate() {
        if right[q - 1 - i] != -a {
            return false;
        }
    }
    true
}

fn non_increasing(seg: &[i64]) -> bool {
    seg.windows(2).all(|w| w[0] >= w[1])
}

/// Which tail values of the infinitesimal character were routed to the
/// first block (indices into the descending upper and lower tails).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleWitness {
    pub upper_left: Vec<usize>,
    pub lower_left: Vec<usize>,
}

/// A k-dominant regular conjugate of the infinitesimal character with its
/// tau and the (r, s, t, u) shuffle statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UTauCandidate {
    pub x_lambda: Weight,
    pub tau: Weight,
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub u: usize,
    pub shuffle: ShuffleWitness,
}

/// Enumerate all splittings of the infinitesimal character multiset into a
/// strictly decreasing length-p and length-q pair. Duplicated core values
/// are forced one per block; the tail values shuffle freely subject to the
/// block sizes. The (r, s, t, u) counts are read off and re-verified against
/// their four defining linear relations.
pub fn tau_candidates_u(spec: &UpqSpec) -> Result<Vec<UTauCandidate>> {
    let (p, q) = (spec.p(), spec.q());
    let core = second_string(spec);
    let s1 = first_string(spec);
    let n1 = spec.n1();
    let n2 = spec.n2();
    // upper tail: entries of the first string above the core; lower: below
    let upper_len = (2 * spec.xi + n1 as i64 - n2 as i64) / 2;
    let lower_len = (n1 as i64 - n2 as i64 - 2 * spec.xi) / 2;
    debug_assert!(upper_len >= 0 && lower_len >= 0, "good range guarantees tails");
    let upper = &s1[..upper_len as usize];
    let lower = &s1[n1 - lower_len as usize..];
    let left_count = p - n2; // = p1 - q2 >= 0

    let rho_k = rho_vectors(&spec.family()).rho_k;
    let mut out = Vec::new();
    for chosen in combinations(upper.len() + lower.len(), left_count) {
        let upper_left: Vec<usize> = chosen.iter().copied().filter(|&i| i < upper.len()).collect();
        let lower_left: Vec<usize> = chosen
            .iter()
            .copied()
            .filter(|&i| i >= upper.len())
            .map(|i| i - upper.len())
            .collect();
        let (r, s) = (upper_left.len(), lower_left.len());
        let (t, u) = (upper.len() - r, lower.len() - s);

        let pick = |idx: &[usize], from: &[i64]| -> Vec<i64> {
            idx.iter().map(|&i| from[i]).collect()
        };
        let rest = |idx: &[usize], from: &[i64]| -> Vec<i64> {
            (0..from.len()).filter(|i| !idx.contains(i)).map(|i| from[i]).collect()
        };
        let mut left = pick(&upper_left, upper);
        left.extend_from_slice(&core);
        left.extend(pick(&lower_left, lower));
        let mut right = rest(&upper_left, upper);
        right.extend_from_slice(&core);
        right.extend(rest(&lower_left, lower));
        left.extend(right);
        let x_lambda = Weight::new(left, vec![p, q])?;

        if is_k_dominant_regular(&x_lambda) != (true, true) {
            return Err(Error::Param(format!(
                "enumerated conjugate {x_lambda} is not dominant regular"
            )));
        }
        verify_rstu(spec, r, s, t, u)?;
        let tau = x_lambda.sub(&rho_k)?;
        out.push(UTauCandidate {
            x_lambda,
            tau,
            r,
            s,
            t,
            u,
            shuffle: ShuffleWitness { upper_left, lower_left },
        });
    }
    Ok(out)
}

/// The four linear relations tying (r, s, t, u) to the parameters.
pub fn verify_rstu(spec: &UpqSpec, r: usize, s: usize, t: usize, u: usize) -> Result<()> {
    let half = |x: i64| x / 2;
    let n1 = spec.n1() as i64;
    let n2 = spec.n2() as i64;
    let checks = [
        (r as i64 + t as i64, half(n1 - n2) + spec.xi, "r + t"),
        (s as i64 + u as i64, half(n1 - n2) - spec.xi, "s + u"),
        (r as i64 + s as i64, spec.p1 as i64 - spec.q2 as i64, "r + s"),
        (t as i64 + u as i64, spec.q1 as i64 - spec.p2 as i64, "t + u"),
    ];
    for (got, want, name) in checks {
        if got != want {
            return Err(Error::Param(format!("{name} = {got}, expected {want}")));
        }
    }
    Ok(())
}
