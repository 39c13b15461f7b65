//! The two independent multiplicity computations and their cross-check:
//! brute-force counting of solutions (sigma, mu) of the weight equation
//! w tau = sigma rho_g - rho_k + mu^-, the closed-form binomial evaluations,
//! and a tensor-product oracle for tiny rank that recomputes the same
//! multiplicities from the K-type decomposition of mu (x) Spin.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::sp_models::{
    identify_xprime, infchar_sp, ktype_member_x_doubled, ktype_member_xprime_doubled,
    mirror_candidate_sp, tau_candidates_sp, SpTauCandidate, SpXPrimeSpec, SpXSpec,
};
use crate::spin::spin_weights;
use crate::u_models::{
    infchar_u, ktype_member_u_doubled, lowest_ktype_u, tau_candidates_u, UTauCandidate, UpqSpec,
};
use crate::weights::{
    binomial, k_orbit, lowest_weight, rho_vectors, w1_enumerate, weyl_apply, FamilyKind, Weight,
    WeylElem,
};

/// One of the representation families under study.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelSpec {
    SpX(SpXSpec),
    SpXPrime(SpXPrimeSpec),
    Upq(UpqSpec),
}

impl ModelSpec {
    pub fn family(&self) -> FamilyKind {
        match self {
            ModelSpec::SpX(s) => s.family(),
            ModelSpec::SpXPrime(s) => s.family(),
            ModelSpec::Upq(s) => s.family(),
        }
    }

    pub fn infchar(&self) -> Weight {
        match self {
            ModelSpec::SpX(s) => infchar_sp(s.n, s.k).expect("validated spec"),
            ModelSpec::SpXPrime(s) => infchar_sp(s.n, s.k).expect("validated spec"),
            ModelSpec::Upq(s) => infchar_u(s),
        }
    }

    pub fn ktype_member(&self, highest: &Weight) -> bool {
        if highest.blocks() != self.family().blocks() {
            return false;
        }
        Membership::new(self).check(highest.doubled())
    }
}

impl std::fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModelSpec::SpX(s) => write!(
                f,
                "X(p={},q={},eps={},eta={}) in Sp(2n), n={}, k={}",
                s.p, s.q, s.eps, s.eta, s.n, s.k
            ),
            ModelSpec::SpXPrime(s) => write!(
                f,
                "X'(p={},q={},eps={},eta={}) in Sp(2n), n={}, k={}",
                s.p, s.q, s.eps, s.eta, s.n, s.k
            ),
            ModelSpec::Upq(s) => write!(
                f,
                "X(p1={},q1={},p2={},q2={},xi={}) in U({},{})",
                s.p1,
                s.q1,
                s.p2,
                s.q2,
                s.xi,
                s.p(),
                s.q()
            ),
        }
    }
}

/// K-type membership with the per-model precomputation hoisted out of the
/// search loop.
enum Membership<'a> {
    SpX(&'a SpXSpec),
    SpXPrime(&'a SpXPrimeSpec),
    Upq(&'a UpqSpec, Weight),
}

impl<'a> Membership<'a> {
    fn new(model: &'a ModelSpec) -> Self {
        match model {
            ModelSpec::SpX(s) => Membership::SpX(s),
            ModelSpec::SpXPrime(s) => Membership::SpXPrime(s),
            ModelSpec::Upq(s) => Membership::Upq(s, lowest_ktype_u(s)),
        }
    }

    fn check(&self, d: &[i64]) -> bool {
        match self {
            Membership::SpX(s) => ktype_member_x_doubled(s, d),
            Membership::SpXPrime(s) => ktype_member_xprime_doubled(s, d),
            Membership::Upq(s, mu0) => ktype_member_u_doubled(s, mu0, d),
        }
    }
}

/// A tau-candidate of whichever family the model belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Candidate {
    Sp(SpTauCandidate),
    U(UTauCandidate),
}

impl Candidate {
    pub fn x_lambda(&self) -> &Weight {
        match self {
            Candidate::Sp(c) => &c.x_lambda,
            Candidate::U(c) => &c.x_lambda,
        }
    }

    pub fn tau(&self) -> &Weight {
        match self {
            Candidate::Sp(c) => &c.tau,
            Candidate::U(c) => &c.tau,
        }
    }
}

/// One equation solution: sigma in W1 and the K-type mu whose lowest weight
/// closes the equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub sigma: WeylElem,
    pub mu_highest: Weight,
}

#[derive(Clone, Debug)]
pub struct ReportEntry {
    pub candidate: Candidate,
    pub brute: u64,
    pub closed: u64,
    pub matches: bool,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug)]
pub struct MultiplicityReport {
    pub model: ModelSpec,
    pub entries: Vec<ReportEntry>,
    pub all_match: bool,
}

fn check_candidate(model: &ModelSpec, cand: &Candidate) -> Result<()> {
    match (model, cand) {
        (ModelSpec::SpX(_) | ModelSpec::SpXPrime(_), Candidate::Sp(_)) => {}
        (ModelSpec::Upq(_), Candidate::U(_)) => {}
        _ => {
            return Err(Error::Param(
                "candidate family does not match the model".into(),
            ))
        }
    }
    let lambda = model.infchar();
    if cand.x_lambda().blocks() != lambda.blocks() {
        return Err(Error::Param("candidate has wrong block structure".into()));
    }
    // type C conjugacy allows sign changes, type A only rearrangements
    let canon = |w: &Weight| -> Vec<i64> {
        let mut v: Vec<i64> = match model.family() {
            FamilyKind::Sp { .. } => w.doubled().iter().map(|d| d.abs()).collect(),
            FamilyKind::U { .. } => w.doubled().to_vec(),
        };
        v.sort_unstable();
        v
    };
    if canon(cand.x_lambda()) != canon(&lambda) {
        return Err(Error::Param(format!(
            "candidate {} is not conjugate to the infinitesimal character {lambda}",
            cand.x_lambda()
        )));
    }
    Ok(())
}

/// Count the pairs (sigma, mu), sigma in W1 and mu a K-type of the model,
/// with sigma rho_g - rho_k + mu^- in the orbit of tau under the compact
/// Weyl group. Witnesses are listed with sigma in enumeration order.
///
/// The search runs sigma outermost and, for each orbit point omega, inverts
/// mu^- = omega - sigma rho_g + rho_k; tau's constant core keeps the orbit
/// small, so this stays cheap even at rank 8-9.
pub fn brute_multiplicity(model: &ModelSpec, cand: &Candidate) -> Result<(u64, Vec<Witness>)> {
    check_candidate(model, cand)?;
    let family = model.family();
    let rho = rho_vectors(&family);
    let rho_k = rho.rho_k.doubled().to_vec();
    let member = Membership::new(model);

    let sigmas = w1_enumerate(&family);
    let sigma_rho: Vec<Vec<i64>> = sigmas
        .iter()
        .map(|s| weyl_apply(s, &rho.rho_g).expect("rank matches").doubled().to_vec())
        .collect();
    let orbit: Vec<Vec<i64>> = k_orbit(cand.tau())
        .into_iter()
        .map(|w| w.doubled().to_vec())
        .collect();

    let blocks = family.blocks();
    let n = family.rank();
    let mut mu_minus = vec![0i64; n];
    let mut mu = vec![0i64; n];
    let mut witnesses = Vec::new();
    for (si, srg) in sigma_rho.iter().enumerate() {
        'omega: for omega in &orbit {
            for i in 0..n {
                mu_minus[i] = omega[i] - srg[i] + rho_k[i];
            }
            // mu^- must be antidominant per block; reverse to get mu
            let mut start = 0;
            for &len in &blocks {
                let seg = &mu_minus[start..start + len];
                if seg.windows(2).any(|w| w[0] > w[1]) {
                    continue 'omega;
                }
                for (j, &x) in seg.iter().rev().enumerate() {
                    mu[start + j] = x;
                }
                start += len;
            }
            if member.check(&mu) {
                witnesses.push(Witness {
                    sigma: sigmas[si].clone(),
                    mu_highest: Weight::new(mu.clone(), blocks.clone())
                        .expect("blockwise parity is uniform"),
                });
            }
        }
    }
    Ok((witnesses.len() as u64, witnesses))
}

/// Closed-form multiplicity of a candidate in X(p,q,eps,eta).
///
/// Special candidates evaluate the binomial case table directly (with the
/// one-or-zero rule when p or q vanishes); non-special candidates reduce to
/// the mirrored special candidate of X(q,p,eta,eps).
pub fn closed_form_sp(spec: &SpXSpec, cand: &SpTauCandidate) -> Result<u64> {
    if !cand.special {
        let mirror_spec = SpXSpec::new(spec.n, spec.k, spec.q, spec.p, spec.eta, spec.eps)?;
        let mirror = mirror_candidate_sp(spec.n, spec.k, cand)?;
        debug_assert!(mirror.special);
        return closed_form_sp(&mirror_spec, &mirror);
    }
    let k = spec.k as i64;
    let p = spec.p as i64;
    let same = |a: usize, b: usize| a % 2 == b % 2;
    Ok(if spec.p == 0 {
        u64::from(same(cand.v, spec.eta as usize))
    } else if spec.q == 0 {
        u64::from(same(cand.u, spec.eps as usize + 1))
    } else if spec.p.is_multiple_of(2) {
        let first = same(spec.eps as usize + spec.eta as usize, spec.n);
        let u_eps = same(cand.u, spec.eps as usize);
        match (first, u_eps) {
            (true, true) => binomial(k - 1, p / 2),
            (true, false) => binomial(k - 1, (p - 2) / 2),
            (false, false) => binomial(k, p / 2),
            (false, true) => 0,
        }
    } else {
        if same(spec.eps as usize + spec.eta as usize, spec.n) {
            binomial(k - 1, (p - 1) / 2)
        } else {
            0
        }
    })
}

/// Closed-form multiplicity of the trivial candidate E_0 in X'(p,q,eps,eta).
pub fn closed_form_xprime(spec: &SpXPrimeSpec) -> u64 {
    let c = identify_xprime(spec);
    let k = c.k as i64;
    let (p, q) = (c.p as i64, c.q as i64);
    if c.p.is_multiple_of(2) {
        match (c.eps, c.eta) {
            (1, 0) => binomial(k - 1, p / 2),
            (0, 0) => binomial(k, p / 2),
            (0, 1) => binomial(k - 1, q / 2),
            _ => unreachable!("validated eps/eta"),
        }
    } else {
        match (c.eps, c.eta) {
            (1, 0) | (0, 1) => binomial(k - 1, (p - 1) / 2),
            (0, 0) => 0,
            _ => unreachable!("validated eps/eta"),
        }
    }
}

/// Closed-form multiplicity for U(p,q): C(p2+q2, p2), the same for every
/// candidate of the model.
pub fn closed_form_u(spec: &UpqSpec) -> u64 {
    binomial(spec.n2() as i64, spec.p2 as i64)
}

/// Enumerate the model's candidates, run both computations on each, and
/// assemble the comparison report.
pub fn cross_check(model: &ModelSpec) -> Result<MultiplicityReport> {
    let entries: Vec<ReportEntry> = match model {
        ModelSpec::SpX(spec) => tau_candidates_sp(spec.n, spec.k)?
            .into_iter()
            .map(|c| {
                let closed = closed_form_sp(spec, &c)?;
                entry(model, Candidate::Sp(c), closed)
            })
            .collect::<Result<_>>()?,
        ModelSpec::SpXPrime(spec) => tau_candidates_sp(spec.n, spec.k)?
            .into_iter()
            .map(|c| entry(model, Candidate::Sp(c), closed_form_xprime(spec)))
            .collect::<Result<_>>()?,
        ModelSpec::Upq(spec) => tau_candidates_u(spec)?
            .into_iter()
            .map(|c| entry(model, Candidate::U(c), closed_form_u(spec)))
            .collect::<Result<_>>()?,
    };
    let all_match = entries.iter().all(|e| e.matches);
    Ok(MultiplicityReport {
        model: *model,
        entries,
        all_match,
    })
}

fn entry(model: &ModelSpec, candidate: Candidate, closed: u64) -> Result<ReportEntry> {
    let (brute, witnesses) = brute_multiplicity(model, &candidate)?;
    Ok(ReportEntry {
        candidate,
        brute,
        closed,
        matches: brute == closed,
        witnesses,
    })
}

// ---------------------------------------------------------------------------
// Model sweeps
// ---------------------------------------------------------------------------

/// Every valid X(p,q,eps,eta) with n <= max_n, in canonical order
/// (n, k, p ascending, then eps, eta).
pub fn sp_specs(max_n: usize) -> Vec<SpXSpec> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for k in 1..=n / 2 {
            for p in 0..=2 * k {
                let q = 2 * k - p;
                for eps in 0..=u8::from(p > 0) {
                    for eta in 0..=u8::from(q > 0) {
                        out.push(SpXSpec::new(n, k, p, q, eps, eta).expect("sweep spec valid"));
                    }
                }
            }
        }
    }
    out
}

/// Every valid X'(p,q,eps,eta) with odd n <= max_n, in canonical order.
pub fn sp_prime_specs(max_n: usize) -> Vec<SpXPrimeSpec> {
    let mut out = Vec::new();
    for n in (1..=max_n).step_by(2) {
        for p in 0..=n + 1 {
            let q = n + 1 - p;
            let pairs: &[(u8, u8)] = if p > 0 && q > 0 {
                &[(0, 0), (0, 1), (1, 0)]
            } else {
                &[(0, 0)]
            };
            for &(eps, eta) in pairs {
                out.push(SpXPrimeSpec::new(n, p, q, eps, eta).expect("sweep spec valid"));
            }
        }
    }
    out
}

/// Every valid U(p,q) spec with 1 <= p + q <= max_pq, each paired with
/// every integer xi in the good range, in canonical order.
pub fn u_specs(max_pq: usize) -> Vec<UpqSpec> {
    let mut out = Vec::new();
    for p1 in 0..=max_pq {
        for q1 in 0..=max_pq.saturating_sub(p1) {
            for p2 in 0..=max_pq.saturating_sub(p1 + q1) {
                for q2 in 0..=max_pq.saturating_sub(p1 + q1 + p2) {
                    let (p, q) = (p1 + p2, q1 + q2);
                    if p + q == 0 || (p + q) % 2 != 0 || p1 < q2 || q1 < p2 {
                        continue;
                    }
                    let a_plus_b = (p1 + q1) as i64 - (p2 + q2) as i64;
                    for xi in -a_plus_b / 2..=a_plus_b / 2 {
                        out.push(crate::u_models::validate_u(p1, q1, p2, q2, xi)
                            .expect("sweep spec valid"));
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Witness screens
// ---------------------------------------------------------------------------

/// The equation piece sigma rho_g - rho_k + mu^- a witness solves.
fn witness_omega(family: &FamilyKind, w: &Witness) -> Result<Weight> {
    let rho = rho_vectors(family);
    let srg = weyl_apply(&w.sigma, &rho.rho_g)?;
    let mu_minus = lowest_weight(&w.mu_highest)?;
    srg.sub(&rho.rho_k)?.add(&mu_minus)
}

fn alternating_parity(seg: &[i64]) -> bool {
    // doubled integral entries; consecutive true coordinates differ in parity
    seg.windows(2).all(|w| (w[0] - w[1]) / 2 % 2 != 0)
}

/// Structural checks on the witness list of one Sp candidate: positivity and
/// alternating parity of sigma rho_g around the bar (only defined when both
/// p and q are positive), tail rigidity of the solved equation, and
/// uniqueness of sigma across witnesses.
pub fn sp_witness_screens(
    spec: &SpXSpec,
    cand: &SpTauCandidate,
    witnesses: &[Witness],
) -> Result<()> {
    let family = spec.family();
    let rho_g = rho_vectors(&family).rho_g;
    let n = spec.n;
    let (u, v) = (cand.u, cand.v);
    for w in witnesses {
        let srg = weyl_apply(&w.sigma, &rho_g)?;
        let d = srg.doubled();
        if spec.p > 0 && spec.q > 0 {
            let front = &d[..spec.q];
            let back = &d[n - spec.p..];
            if front.iter().any(|&x| x <= 0) || back.iter().any(|&x| x >= 0) {
                return Err(Error::Param(format!(
                    "sign screen failed: sigma rho_g = {srg}"
                )));
            }
            if !alternating_parity(front) || !alternating_parity(back) {
                return Err(Error::Param(format!(
                    "parity screen failed: sigma rho_g = {srg}"
                )));
            }
        }
        let omega = witness_omega(&family, w)?;
        let mid = &omega.doubled()[spec.q..spec.q + u + v];
        let tau = cand.tau.doubled();
        let expected: Vec<i64> = tau[..u].iter().chain(&tau[n - v..]).copied().collect();
        if mid != expected {
            return Err(Error::Param(format!(
                "tail screen failed: omega = {omega}, tau = {}",
                cand.tau
            )));
        }
    }
    distinct_sigmas(witnesses)
}

/// Tail rigidity and sigma-uniqueness for the witness list of one U(p,q)
/// candidate.
pub fn u_witness_screens(
    spec: &UpqSpec,
    cand: &UTauCandidate,
    witnesses: &[Witness],
) -> Result<()> {
    let family = spec.family();
    let (p, q) = (spec.p(), spec.q());
    let (p2, q2) = (spec.p2, spec.q2);
    let tau = cand.tau.doubled();
    let (tl, tr) = tau.split_at(p);
    for w in witnesses {
        let omega = witness_omega(&family, w)?;
        let (ol, or) = omega.doubled().split_at(p);
        let left_expected: Vec<i64> = tl[..cand.r]
            .iter()
            .chain(&tl[p - cand.s..])
            .copied()
            .collect();
        let right_expected: Vec<i64> = tr[..cand.t]
            .iter()
            .chain(&tr[q - cand.u..])
            .copied()
            .collect();
        if ol[p2..p - q2] != left_expected[..] || or[q2..q - p2] != right_expected[..] {
            return Err(Error::Param(format!("tail screen failed: omega = {omega}")));
        }
    }
    distinct_sigmas(witnesses)
}

/// No two witnesses of one candidate may share sigma.
pub fn sigma_uniqueness_screen(witnesses: &[Witness]) -> Result<()> {
    distinct_sigmas(witnesses)
}

fn distinct_sigmas(witnesses: &[Witness]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for w in witnesses {
        if !seen.insert(&w.sigma) {
            return Err(Error::Param(format!(
                "two witnesses share sigma = {}",
                w.sigma
            )));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Tensor-product oracle
// ---------------------------------------------------------------------------

/// Multiplicity of E_tau inside E_mu (x) E_gamma for a product of general
/// linear blocks, by the signed weight-shift rule: sum over the weights nu
/// of E_gamma of sign(w) where w sorts mu + rho_k + nu strictly within each
/// block onto tau + rho_k (zero contribution when that vector is singular).
pub fn tensor_multiplicity(mu: &Weight, gamma: &Weight, tau: &Weight) -> Result<u64> {
    if mu.blocks() != gamma.blocks() || mu.blocks() != tau.blocks() {
        return Err(Error::Shape {
            expected: mu.len(),
            got: gamma.len().max(tau.len()),
        });
    }
    let family_blocks = mu.blocks().to_vec();
    let rho_k = standard_rho_k(&family_blocks);
    let gamma_weights = block_weights(gamma);
    signed_shift_count(
        mu.doubled(),
        &gamma_weights,
        tau.doubled(),
        &rho_k,
        &family_blocks,
    )
}

fn standard_rho_k(blocks: &[usize]) -> Vec<i64> {
    let mut out = Vec::new();
    for &len in blocks {
        out.extend((0..len as i64).map(|i| (len as i64 - 1) - 2 * i));
    }
    out
}

fn signed_shift_count(
    mu: &[i64],
    gamma_weights: &[(Vec<i64>, u64)],
    tau: &[i64],
    rho_k: &[i64],
    blocks: &[usize],
) -> Result<u64> {
    let n = mu.len();
    let target: Vec<i64> = tau.iter().zip(rho_k).map(|(a, b)| a + b).collect();
    let mut acc: i64 = 0;
    let mut zeta = vec![0i64; n];
    'nu: for (nu, mult) in gamma_weights {
        for i in 0..n {
            zeta[i] = mu[i] + rho_k[i] + nu[i];
        }
        let mut sign = 1i64;
        let mut start = 0;
        for &len in blocks {
            match sort_desc_with_sign(&mut zeta[start..start + len]) {
                Some(s) => sign *= s,
                None => continue 'nu,
            }
            start += len;
        }
        if zeta == target {
            acc += sign * *mult as i64;
        }
    }
    if acc < 0 {
        return Err(Error::Param(format!(
            "negative multiplicity {acc} from signed shifts"
        )));
    }
    Ok(acc as u64)
}

/// Insertion sort to descending order, tracking the permutation sign;
/// None when two entries coincide.
fn sort_desc_with_sign(v: &mut [i64]) -> Option<i64> {
    let mut sign = 1i64;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j] > v[j - 1] {
            v.swap(j, j - 1);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j] == v[j - 1] {
            return None;
        }
    }
    Some(sign)
}

/// Full weight system of the irreducible with the given highest weight,
/// as a product over blocks; entries doubled, with multiplicities.
fn block_weights(gamma: &Weight) -> Vec<(Vec<i64>, u64)> {
    let mut acc: Vec<(Vec<i64>, u64)> = vec![(Vec::new(), 1)];
    for r in gamma.block_ranges() {
        let block = gl_weights_doubled(&gamma.doubled()[r]);
        let mut next = Vec::with_capacity(acc.len() * block.len());
        for (w0, m0) in &acc {
            for (w1, m1) in &block {
                let mut w = w0.clone();
                w.extend_from_slice(w1);
                next.push((w, m0 * m1));
            }
        }
        acc = next;
    }
    acc
}

/// Weights of the gl(m) irreducible with highest weight `lambda` (doubled,
/// non-increasing), via Gelfand-Tsetlin interleaving. Half-integral weights
/// are handled by twisting with the half-determinant.
fn gl_weights_doubled(lambda_d: &[i64]) -> Vec<(Vec<i64>, u64)> {
    if lambda_d.is_empty() {
        return vec![(Vec::new(), 1)];
    }
    let off = lambda_d[0].rem_euclid(2);
    let lam: Vec<i64> = lambda_d.iter().map(|d| (d - off) / 2).collect();
    gt_weights(&lam)
        .into_iter()
        .map(|(w, m)| (w.into_iter().map(|x| 2 * x + off).collect(), m))
        .collect()
}

fn gt_weights(lam: &[i64]) -> HashMap<Vec<i64>, u64> {
    let mut out = HashMap::new();
    if lam.len() == 1 {
        out.insert(vec![lam[0]], 1);
        return out;
    }
    let top_sum: i64 = lam.iter().sum();
    let mut row = vec![0i64; lam.len() - 1];
    interleavings(lam, 0, &mut row, &mut |row| {
        let row_sum: i64 = row.iter().sum();
        for (w, m) in gt_weights(row) {
            let mut full = w;
            full.push(top_sum - row_sum);
            *out.entry(full).or_insert(0) += m;
        }
    });
    out
}

fn interleavings(lam: &[i64], i: usize, row: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
    if i == lam.len() - 1 {
        f(row);
        return;
    }
    for v in lam[i + 1]..=lam[i] {
        row[i] = v;
        interleavings(lam, i + 1, row, f);
    }
}

/// Smallest K-type box bound that makes the oracle conclusive for this
/// candidate: max |tau_i| plus the largest spin-summand coordinate.
pub fn tensor_oracle_required_bound(model: &ModelSpec, cand: &Candidate) -> Result<i64> {
    check_candidate(model, cand)?;
    let spin = spin_weights(&model.family());
    let tau_max = cand.tau().doubled().iter().map(|d| d.abs()).max().unwrap_or(0);
    let gamma_max = spin
        .summands
        .iter()
        .flat_map(|(_, g)| g.doubled().iter().map(|d| d.abs()))
        .max()
        .unwrap_or(0);
    Ok((tau_max + gamma_max + 1) / 2)
}

/// Multiplicity of E_tau in the sum of E_mu (x) Spin over the model's
/// K-types mu with coordinates bounded by `ktype_bound` -- an independent
/// recomputation of the brute count. K-types outside the box provably
/// cannot contribute once the bound dominates max |tau_i| plus the largest
/// spin coordinate; a smaller bound is an explicit error, never a silent 0.
pub fn tensor_oracle_multiplicity(
    model: &ModelSpec,
    cand: &Candidate,
    ktype_bound: i64,
) -> Result<u64> {
    let family = model.family();
    match family {
        FamilyKind::Sp { n } if n > 4 => {
            return Err(Error::RankGuard(format!("oracle limited to n <= 4, got n = {n}")))
        }
        FamilyKind::U { p, q } if p + q > 4 => {
            return Err(Error::RankGuard(format!(
                "oracle limited to p + q <= 4, got {}",
                p + q
            )))
        }
        _ => {}
    }
    let needed = tensor_oracle_required_bound(model, cand)?;
    if ktype_bound < needed {
        return Err(Error::InsufficientBound {
            needed,
            got: ktype_bound,
        });
    }

    let blocks = family.blocks();
    let rho_k = standard_rho_k(&blocks);
    let spin = spin_weights(&family);
    let spin_weight_systems: Vec<Vec<(Vec<i64>, u64)>> = spin
        .summands
        .iter()
        .map(|(_, gamma)| block_weights(gamma))
        .collect();
    let member = Membership::new(model);
    let parities = ktype_parities(model, &blocks);

    // all dominant lattice points of the model's K-type parity class in the box
    let per_block: Vec<Vec<Vec<i64>>> = blocks
        .iter()
        .zip(&parities)
        .map(|(&len, &par)| dominant_box(len, 2 * ktype_bound, par))
        .collect();

    let tau_d = cand.tau().doubled();
    let mut total: u64 = 0;
    let mut mu = Vec::with_capacity(family.rank());
    let mut idx = vec![0usize; blocks.len()];
    loop {
        mu.clear();
        for (b, options) in per_block.iter().enumerate() {
            mu.extend_from_slice(&options[idx[b]]);
        }
        if member.check(&mu) {
            for ws in &spin_weight_systems {
                total += signed_shift_count(&mu, ws, tau_d, &rho_k, &blocks)?;
            }
        }
        let mut b = blocks.len();
        loop {
            if b == 0 {
                return Ok(total);
            }
            b -= 1;
            idx[b] += 1;
            if idx[b] < per_block[b].len() {
                break;
            }
            idx[b] = 0;
        }
    }
}

/// Doubled parity of the model's K-type entries in each block.
fn ktype_parities(model: &ModelSpec, blocks: &[usize]) -> Vec<i64> {
    match model {
        // p + q = 2k, so the (p-q)/2 shift is integral
        ModelSpec::SpX(_) | ModelSpec::SpXPrime(_) => vec![0; blocks.len()],
        ModelSpec::Upq(s) => {
            let mu0 = lowest_ktype_u(s);
            let mut out = Vec::new();
            for r in mu0.block_ranges() {
                out.push(mu0.doubled()[r].first().map_or(0, |d| d.rem_euclid(2)));
            }
            out
        }
    }
}

/// Non-increasing doubled vectors of the given length with entries of the
/// given parity in [-bound_d, bound_d].
fn dominant_box(len: usize, bound_d: i64, parity: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    let hi = bound_d - (bound_d - parity).rem_euclid(2);
    fn rec(out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>, len: usize, lo: i64, top: i64) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let mut v = top;
        while v >= lo {
            cur.push(v);
            rec(out, cur, len, lo, v);
            cur.pop();
            v -= 2;
        }
    }
    rec(&mut out, &mut cur, len, -bound_d, hi);
    out
}
