//! Decomposition of the spin module into K-types and the dimension identity
//! that checks it: the summands are E_{sigma rho_g - rho_k} over sigma in W1,
//! and their dimensions must add up to 2^(dim s / 2).

use crate::error::{Error, Result};
use crate::weights::{
    is_k_dominant_regular, rho_vectors, w1_enumerate, weyl_apply, weyl_dim, FamilyKind, Weight,
    WeylElem,
};

/// The spin module as a multiplicity-free sum of K-types, one per W1 element.
#[derive(Clone, Debug)]
pub struct SpinDecomposition {
    pub family: FamilyKind,
    pub summands: Vec<(WeylElem, Weight)>,
}

/// summands = { (sigma, sigma rho_g - rho_k) : sigma in W1 }, in the
/// deterministic order of `w1_enumerate`.
pub fn spin_weights(family: &FamilyKind) -> SpinDecomposition {
    let rho = rho_vectors(family);
    let summands = w1_enumerate(family)
        .into_iter()
        .map(|sigma| {
            let img = weyl_apply(&sigma, &rho.rho_g).expect("W1 element matches family rank");
            let highest = img.sub(&rho.rho_k).expect("same blocks");
            debug_assert!(is_k_dominant_regular(&highest).0);
            (sigma, highest)
        })
        .collect();
    SpinDecomposition {
        family: *family,
        summands,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpinDimCheck {
    pub total: u128,
    pub expected: u128,
    pub ok: bool,
}

/// Sum of Weyl dimensions of the spin summands against 2^(dim s / 2):
/// dim s = n(n+1) for sp(2n), 2pq for u(p,q), so the exponent is
/// n(n+1)/2 respectively pq.
pub fn spin_dimension_check(family: &FamilyKind) -> Result<SpinDimCheck> {
    let exponent = match *family {
        FamilyKind::Sp { n } => n * (n + 1) / 2,
        FamilyKind::U { p, q } => p * q,
    };
    if exponent >= 128 {
        return Err(Error::Param(format!(
            "spin dimension 2^{exponent} exceeds u128"
        )));
    }
    let expected = 1u128 << exponent;
    let mut total: u128 = 0;
    for (_, highest) in spin_weights(family).summands {
        total = total
            .checked_add(weyl_dim(&highest)?)
            .ok_or_else(|| Error::Param("spin dimension total exceeds u128".into()))?;
    }
    Ok(SpinDimCheck {
        total,
        expected,
        ok: total == expected,
    })
}
