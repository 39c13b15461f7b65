//! Acceptance suite: one test per criterion, exact integer equality
//! throughout (tolerance zero). Each test prints a PASS line with its
//! elapsed time; a failure pinpoints the first offending model/candidate.

use std::time::Instant;

use diracmult_core::solver::{
    brute_multiplicity, closed_form_sp, closed_form_u, closed_form_xprime, cross_check,
    sigma_uniqueness_screen, sp_prime_specs, sp_specs, sp_witness_screens,
    tensor_oracle_multiplicity, tensor_oracle_required_bound, u_specs, u_witness_screens,
    Candidate, ModelSpec,
};
use diracmult_core::sp_models::{
    infchar_sp, mirror_candidate_sp, tau_candidates_sp, SpXSpec,
};
use diracmult_core::spin::spin_dimension_check;
use diracmult_core::u_models::{infchar_u, tau_candidates_u};
use diracmult_core::weights::{binomial, norm2x4, rho_vectors, FamilyKind};

#[test]
fn criterion_1_sp_exhaustive_sweep() {
    let start = Instant::now();
    let mut candidates = 0usize;
    for spec in sp_specs(7) {
        for cand in tau_candidates_sp(spec.n, spec.k).unwrap() {
            let closed = closed_form_sp(&spec, &cand).unwrap();
            let (brute, _) =
                brute_multiplicity(&ModelSpec::SpX(spec), &Candidate::Sp(cand.clone())).unwrap();
            assert_eq!(
                brute, closed,
                "mismatch at {spec:?}, x_lambda = {}",
                cand.x_lambda
            );
            candidates += 1;
        }
    }
    println!(
        "criterion 1 (Sp sweep, n <= 7, {candidates} candidates): PASS in {:.1?}",
        start.elapsed()
    );
}

#[test]
fn criterion_2_xprime_sweep() {
    let start = Instant::now();
    let mut models = 0usize;
    for spec in sp_prime_specs(9) {
        let cands = tau_candidates_sp(spec.n, spec.k).unwrap();
        assert_eq!(cands.len(), 1, "enumerator must yield only tau = 0 at {spec:?}");
        assert!(
            cands[0].tau.doubled().iter().all(|&d| d == 0),
            "sole candidate must be tau = 0 at {spec:?}"
        );
        let closed = closed_form_xprime(&spec);
        let (brute, _) = brute_multiplicity(
            &ModelSpec::SpXPrime(spec),
            &Candidate::Sp(cands[0].clone()),
        )
        .unwrap();
        assert_eq!(brute, closed, "mismatch at {spec:?}");
        models += 1;
    }
    println!(
        "criterion 2 (X' sweep, odd n <= 9, {models} models): PASS in {:.1?}",
        start.elapsed()
    );
}

#[test]
fn criterion_3_u_sweep() {
    let start = Instant::now();
    let mut candidates = 0usize;
    for spec in u_specs(8) {
        let cands = tau_candidates_u(&spec).unwrap();
        // candidate count must match the shuffle enumeration of the
        // (r,s,t,u) template: sum over r of C(A, r) C(B, left - r)
        let a_len = (spec.n1() as i64 - spec.n2() as i64) / 2 + spec.xi;
        let b_len = (spec.n1() as i64 - spec.n2() as i64) / 2 - spec.xi;
        let left = spec.p() as i64 - spec.n2() as i64;
        let expected_count: u64 = (0..=left.max(0))
            .map(|r| binomial(a_len, r) * binomial(b_len, left - r))
            .sum();
        assert_eq!(cands.len() as u64, expected_count, "count mismatch at {spec:?}");

        let closed = closed_form_u(&spec);
        for cand in cands {
            let (brute, _) =
                brute_multiplicity(&ModelSpec::Upq(spec), &Candidate::U(cand.clone())).unwrap();
            assert_eq!(
                brute, closed,
                "mismatch at {spec:?}, x_lambda = {}",
                cand.x_lambda
            );
            candidates += 1;
        }
    }
    println!(
        "criterion 3 (U sweep, p + q <= 8, {candidates} candidates): PASS in {:.1?}",
        start.elapsed()
    );
}

#[test]
fn criterion_4_spin_identity() {
    let start = Instant::now();
    for n in 1..=6 {
        let c = spin_dimension_check(&FamilyKind::sp(n).unwrap()).unwrap();
        assert!(c.ok, "Sp({n}): total {} expected {}", c.total, c.expected);
    }
    for p in 0..=6usize {
        for q in 0..=6 - p {
            if p + q == 0 {
                continue;
            }
            let c = spin_dimension_check(&FamilyKind::u(p, q).unwrap()).unwrap();
            assert!(c.ok, "U({p},{q}): total {} expected {}", c.total, c.expected);
        }
    }
    println!(
        "criterion 4 (spin dimension identity, n <= 6 and p + q <= 6): PASS in {:.1?}",
        start.elapsed()
    );
}

#[test]
fn criterion_5_norm_identity() {
    let start = Instant::now();
    let mut checked = 0usize;
    for n in 2..=7 {
        for k in 1..=n / 2 {
            let lambda_norm = norm2x4(&infchar_sp(n, k).unwrap());
            let rho_k = rho_vectors(&FamilyKind::sp(n).unwrap()).rho_k;
            for cand in tau_candidates_sp(n, k).unwrap() {
                assert_eq!(norm2x4(&cand.tau.add(&rho_k).unwrap()), lambda_norm);
                checked += 1;
            }
        }
    }
    for spec in sp_prime_specs(9) {
        let lambda_norm = norm2x4(&infchar_sp(spec.n, spec.k).unwrap());
        let rho_k = rho_vectors(&spec.family()).rho_k;
        for cand in tau_candidates_sp(spec.n, spec.k).unwrap() {
            assert_eq!(norm2x4(&cand.tau.add(&rho_k).unwrap()), lambda_norm);
            checked += 1;
        }
    }
    for spec in u_specs(8) {
        let lambda_norm = norm2x4(&infchar_u(&spec));
        let rho_k = rho_vectors(&spec.family()).rho_k;
        for cand in tau_candidates_u(&spec).unwrap() {
            assert_eq!(
                norm2x4(&cand.tau.add(&rho_k).unwrap()),
                lambda_norm,
                "norm mismatch at {spec:?}"
            );
            checked += 1;
        }
    }
    println!(
        "criterion 5 (norm identity over {checked} candidates): PASS in {:.1?}",
        start.elapsed()
    );
}

#[test]
fn criterion_6_symmetry_involution() {
    let start = Instant::now();
    let mut checked = 0usize;
    for spec in sp_specs(6) {
        let mirror_spec =
            SpXSpec::new(spec.n, spec.k, spec.q, spec.p, spec.eta, spec.eps).unwrap();
        for cand in tau_candidates_sp(spec.n, spec.k).unwrap() {
            let mirror = mirror_candidate_sp(spec.n, spec.k, &cand).unwrap();
            assert_eq!(mirror.special, !cand.special);
            assert_eq!((mirror.u, mirror.v), (cand.v, cand.u));
            let (b1, _) =
                brute_multiplicity(&ModelSpec::SpX(spec), &Candidate::Sp(cand)).unwrap();
            let (b2, _) =
                brute_multiplicity(&ModelSpec::SpX(mirror_spec), &Candidate::Sp(mirror)).unwrap();
            assert_eq!(b1, b2, "involution mismatch at {spec:?}");
            checked += 1;
        }
    }
    println!(
        "criterion 6 (symmetry involution, n <= 6, {checked} pairs): PASS in {:.1?}",
        start.elapsed()
    );
}

#[test]
fn criterion_7_independent_oracle() {
    let start = Instant::now();
    let mut checked = 0usize;
    let mut run = |model: ModelSpec, cand: Candidate| {
        let bound = tensor_oracle_required_bound(&model, &cand).unwrap();
        let oracle = tensor_oracle_multiplicity(&model, &cand, bound).unwrap();
        let (brute, _) = brute_multiplicity(&model, &cand).unwrap();
        assert_eq!(oracle, brute, "oracle disagrees at {model}");
        checked += 1;
    };
    for spec in sp_specs(3) {
        for cand in tau_candidates_sp(spec.n, spec.k).unwrap() {
            run(ModelSpec::SpX(spec), Candidate::Sp(cand));
        }
    }
    for spec in sp_prime_specs(3) {
        for cand in tau_candidates_sp(spec.n, spec.k).unwrap() {
            run(ModelSpec::SpXPrime(spec), Candidate::Sp(cand));
        }
    }
    for spec in u_specs(4) {
        for cand in tau_candidates_u(&spec).unwrap() {
            run(ModelSpec::Upq(spec), Candidate::U(cand));
        }
    }
    println!(
        "criterion 7 (tensor oracle, {checked} candidates): PASS in {:.1?}",
        start.elapsed()
    );
}

#[test]
fn criterion_8_witness_structure() {
    let start = Instant::now();
    let mut witnesses = 0usize;
    for spec in sp_specs(7) {
        let report = cross_check(&ModelSpec::SpX(spec)).unwrap();
        for e in &report.entries {
            let Candidate::Sp(c) = &e.candidate else { unreachable!() };
            sp_witness_screens(&spec, c, &e.witnesses)
                .unwrap_or_else(|err| panic!("{spec:?}: {err}"));
            witnesses += e.witnesses.len();
        }
    }
    for spec in sp_prime_specs(9) {
        let report = cross_check(&ModelSpec::SpXPrime(spec)).unwrap();
        for e in &report.entries {
            sigma_uniqueness_screen(&e.witnesses)
                .unwrap_or_else(|err| panic!("{spec:?}: {err}"));
            witnesses += e.witnesses.len();
        }
    }
    for spec in u_specs(8) {
        let report = cross_check(&ModelSpec::Upq(spec)).unwrap();
        for e in &report.entries {
            let Candidate::U(c) = &e.candidate else { unreachable!() };
            u_witness_screens(&spec, c, &e.witnesses)
                .unwrap_or_else(|err| panic!("{spec:?}: {err}"));
            witnesses += e.witnesses.len();
        }
    }
    println!(
        "criterion 8 (witness screens over {witnesses} witnesses): PASS in {:.1?}",
        start.elapsed()
    );
}
