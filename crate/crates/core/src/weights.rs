//! Exact half-integer weight vectors with block structure, rho-constants,
//! dominance tests, Weyl elements (signed permutations and shuffles), the
//! minimal-length coset representatives `W1`, orbit iteration under the
//! compact Weyl group, and the Weyl dimension formula for products of
//! general linear blocks.
//!
//! Coordinates are stored doubled (`3/2` is stored as `3`) so that every
//! comparison and equality test is exact integer arithmetic.

use std::fmt;

use crate::error::{Error, Result};

/// A weight vector with exact half-integer entries and a block structure.
///
/// Each entry of `doubled` is twice the true coordinate. `blocks` splits the
/// vector into consecutive runs: one block for type C root data (K = U(n)),
/// two blocks (p, q) for type A with K = U(p) x U(q). Within a block all
/// entries have the same parity (all integral or all half-integral).
/// Zero-length blocks are permitted so that degenerate U(p, 0) families work.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    doubled: Vec<i64>,
    blocks: Vec<usize>,
}

impl Weight {
    pub fn new(doubled: Vec<i64>, blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Param("blocks must be non-empty".into()));
        }
        let total: usize = blocks.iter().sum();
        if total != doubled.len() {
            return Err(Error::Shape {
                expected: total,
                got: doubled.len(),
            });
        }
        let w = Weight { doubled, blocks };
        for r in w.block_ranges() {
            let seg = &w.doubled[r];
            if let Some(first) = seg.first() {
                if seg.iter().any(|d| (d - first) % 2 != 0) {
                    return Err(Error::Param(
                        "mixed integral/half-integral entries within a block".into(),
                    ));
                }
            }
        }
        Ok(w)
    }

    /// Build from true integer coordinates (doubles them).
    pub fn integral(coords: &[i64], blocks: &[usize]) -> Result<Self> {
        Weight::new(coords.iter().map(|c| 2 * c).collect(), blocks.to_vec())
    }

    /// Single-block weight from true integer coordinates.
    pub fn integral_single(coords: &[i64]) -> Result<Self> {
        Weight::integral(coords, &[coords.len()])
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doubled.is_empty()
    }

    pub fn block_ranges(&self) -> impl Iterator<Item = std::ops::Range<usize>> + '_ {
        self.blocks.iter().scan(0usize, |acc, &len| {
            let start = *acc;
            *acc += len;
            Some(start..*acc)
        })
    }

    /// Entrywise sum; blocks must agree.
    pub fn add(&self, other: &Weight) -> Result<Weight> {
        self.zip_with(other, |a, b| a + b)
    }

    /// Entrywise difference; blocks must agree.
    pub fn sub(&self, other: &Weight) -> Result<Weight> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Weight, f: impl Fn(i64, i64) -> i64) -> Result<Weight> {
        if self.blocks != other.blocks {
            return Err(Error::Shape {
                expected: self.len(),
                got: other.len(),
            });
        }
        let doubled = self
            .doubled
            .iter()
            .zip(&other.doubled)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Weight::new(doubled, self.blocks.clone())
    }

    /// Same multiset of entries, per-block sort descending.
    pub fn sorted_descending(&self) -> Weight {
        let mut doubled = self.doubled.clone();
        let mut start = 0;
        for &len in &self.blocks {
            doubled[start..start + len].sort_unstable_by(|a, b| b.cmp(a));
            start += len;
        }
        Weight {
            doubled,
            blocks: self.blocks.clone(),
        }
    }

    /// Entrywise negation followed by per-block descending sort.
    pub fn negated_sorted(&self) -> Weight {
        let negated = Weight {
            doubled: self.doubled.iter().map(|d| -d).collect(),
            blocks: self.blocks.clone(),
        };
        negated.sorted_descending()
    }

    /// Exact rendering of each coordinate: `"2"`, `"3/2"`, `"-1/2"`.
    pub fn coord_strings(&self) -> Vec<String> {
        self.doubled.iter().map(|&d| half_string(d)).collect()
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first_block = true;
        for r in self.block_ranges() {
            if !first_block {
                write!(f, " | ")?;
            }
            first_block = false;
            let seg = &self.doubled[r];
            for (i, &d) in seg.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", half_string(d))?;
            }
        }
        Ok(())
    }
}

/// Render a doubled coordinate exactly.
pub fn half_string(doubled: i64) -> String {
    if doubled % 2 == 0 {
        format!("{}", doubled / 2)
    } else {
        format!("{doubled}/2")
    }
}

/// Which equal-rank family a computation runs in.
///
/// `Sp(n)` is Sp(2n, R) with K = U(n); `U(p, q)` has K = U(p) x U(q).
/// The models impose the same-parity assumption on (p, q); the weight
/// machinery itself works for any p, q >= 0 with p + q >= 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Sp { n: usize },
    U { p: usize, q: usize },
}

impl FamilyKind {
    pub fn sp(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Param("Sp family needs n >= 1".into()));
        }
        Ok(FamilyKind::Sp { n })
    }

    pub fn u(p: usize, q: usize) -> Result<Self> {
        if p + q == 0 {
            return Err(Error::Param("U family needs p + q >= 1".into()));
        }
        Ok(FamilyKind::U { p, q })
    }

    pub fn rank(&self) -> usize {
        match *self {
            FamilyKind::Sp { n } => n,
            FamilyKind::U { p, q } => p + q,
        }
    }

    pub fn blocks(&self) -> Vec<usize> {
        match *self {
            FamilyKind::Sp { n } => vec![n],
            FamilyKind::U { p, q } => vec![p, q],
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyKind::Sp { n } => write!(f, "Sp({n})"),
            FamilyKind::U { p, q } => write!(f, "U({p},{q})"),
        }
    }
}

/// The half-sums of positive roots for g, k and their difference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoTriple {
    pub rho_g: Weight,
    pub rho_k: Weight,
    pub rho_n: Weight,
}

/// rho-vectors of the family.
///
/// Sp(n): rho_g = (n,...,1), rho_k = ((n-1)/2,...,-(n-1)/2),
/// rho_n = ((n+1)/2,...,(n+1)/2), all in one block.
/// U(p,q): rho_g = ((p+q-1)/2,...,-(p+q-1)/2) carried with blocks (p,q),
/// rho_k = ((p-1)/2,...,-(p-1)/2 | (q-1)/2,...,-(q-1)/2).
pub fn rho_vectors(family: &FamilyKind) -> RhoTriple {
    match *family {
        FamilyKind::Sp { n } => {
            let n_i = n as i64;
            let rho_g: Vec<i64> = (1..=n_i).rev().map(|i| 2 * i).collect();
            let rho_k: Vec<i64> = (0..n_i).map(|i| (n_i - 1) - 2 * i).collect();
            let rho_n: Vec<i64> = rho_g.iter().zip(&rho_k).map(|(g, k)| g - k).collect();
            RhoTriple {
                rho_g: Weight::new(rho_g, vec![n]).expect("rho_g well formed"),
                rho_k: Weight::new(rho_k, vec![n]).expect("rho_k well formed"),
                rho_n: Weight::new(rho_n, vec![n]).expect("rho_n well formed"),
            }
        }
        FamilyKind::U { p, q } => {
            let m = (p + q) as i64;
            let rho_g: Vec<i64> = (0..m).map(|i| (m - 1) - 2 * i).collect();
            let mut rho_k: Vec<i64> = (0..p as i64).map(|i| (p as i64 - 1) - 2 * i).collect();
            rho_k.extend((0..q as i64).map(|i| (q as i64 - 1) - 2 * i));
            let rho_n: Vec<i64> = rho_g.iter().zip(&rho_k).map(|(g, k)| g - k).collect();
            let blocks = vec![p, q];
            RhoTriple {
                rho_g: Weight::new(rho_g, blocks.clone()).expect("rho_g well formed"),
                rho_k: Weight::new(rho_k, blocks.clone()).expect("rho_k well formed"),
                rho_n: Weight::new(rho_n, blocks).expect("rho_n well formed"),
            }
        }
    }
}

/// (dominant, regular): entries non-increasing / strictly decreasing within
/// each block.
pub fn is_k_dominant_regular(w: &Weight) -> (bool, bool) {
    let mut dominant = true;
    let mut regular = true;
    for r in w.block_ranges() {
        for pair in w.doubled()[r].windows(2) {
            if pair[0] < pair[1] {
                dominant = false;
            }
            if pair[0] <= pair[1] {
                regular = false;
            }
        }
    }
    (dominant, regular)
}

/// An element of the Weyl group, materialized as the data needed to act on
/// coordinates.
///
/// Type C elements carry a sign vector and the permutation that re-sorts a
/// dominant vector after the sign flips. Type A elements are plain index
/// permutations; the W1 representatives among them are the (p,q)-shuffles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WeylElem {
    /// out[j] = signs[perm[j]] * w[perm[j]]
    SignedPerm { signs: Vec<i8>, perm: Vec<usize> },
    /// out[j] = w[perm[j]]
    Perm { perm: Vec<usize> },
}

impl WeylElem {
    pub fn len(&self) -> usize {
        match self {
            WeylElem::SignedPerm { perm, .. } | WeylElem::Perm { perm } => perm.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The sign vector of a type C element, if any.
    pub fn signs(&self) -> Option<&[i8]> {
        match self {
            WeylElem::SignedPerm { signs, .. } => Some(signs),
            WeylElem::Perm { .. } => None,
        }
    }
}

impl fmt::Display for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylElem::SignedPerm { signs, .. } => {
                write!(f, "eps=")?;
                for s in signs {
                    write!(f, "{}", if *s > 0 { '+' } else { '-' })?;
                }
                Ok(())
            }
            WeylElem::Perm { perm } => write!(f, "shuffle{perm:?}"),
        }
    }
}

/// Apply a Weyl element to a weight. Blocks are preserved.
pub fn weyl_apply(e: &WeylElem, w: &Weight) -> Result<Weight> {
    if e.len() != w.len() {
        return Err(Error::Shape {
            expected: e.len(),
            got: w.len(),
        });
    }
    let d = w.doubled();
    let out: Vec<i64> = match e {
        WeylElem::SignedPerm { signs, perm } => perm
            .iter()
            .map(|&i| i64::from(signs[i]) * d[i])
            .collect(),
        WeylElem::Perm { perm } => perm.iter().map(|&i| d[i]).collect(),
    };
    Weight::new(out, w.blocks().to_vec())
}

/// The minimal-length representatives W1 = { w : w(rho_g) is k-dominant }.
///
/// Sp(n): one element per sign vector in {+,-}^n, 2^n elements, ordered
/// lexicographically with + before -. The permutation component places the
/// unflipped coordinates first (in order) and the flipped ones last
/// (reversed), which sorts any g-dominant vector after the sign flips.
///
/// U(p,q): one element per (p,q)-shuffle, C(p+q, p) elements, ordered
/// lexicographically on the left index set.
pub fn w1_enumerate(family: &FamilyKind) -> Vec<WeylElem> {
    match *family {
        FamilyKind::Sp { n } => {
            let mut out = Vec::with_capacity(1usize << n);
            for mask in 0u64..(1u64 << n) {
                let signs: Vec<i8> = (0..n)
                    .map(|i| if mask >> (n - 1 - i) & 1 == 1 { -1 } else { 1 })
                    .collect();
                let mut perm: Vec<usize> = (0..n).filter(|&i| signs[i] > 0).collect();
                perm.extend((0..n).rev().filter(|&i| signs[i] < 0));
                out.push(WeylElem::SignedPerm { signs, perm });
            }
            out
        }
        FamilyKind::U { p, q } => {
            let mut out = Vec::new();
            for left in combinations(p + q, p) {
                let mut perm = left.clone();
                perm.extend((0..p + q).filter(|i| !left.contains(i)));
                out.push(WeylElem::Perm { perm });
            }
            out
        }
    }
}

/// All k-subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Binomial coefficient with the convention C(n, k) = 0 for k < 0 or k > n.
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The orbit of `w` under independent permutations within each block:
/// all distinct rearrangements, deduplicated, each block enumerated in
/// decreasing lexicographic order, first block varying slowest.
pub fn k_orbit(w: &Weight) -> Vec<Weight> {
    let block_perms: Vec<Vec<Vec<i64>>> = w
        .block_ranges()
        .map(|r| multiset_permutations_desc(&w.doubled()[r]))
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; block_perms.len()];
    loop {
        let mut doubled = Vec::with_capacity(w.len());
        for (b, perms) in block_perms.iter().enumerate() {
            doubled.extend_from_slice(&perms[idx[b]]);
        }
        out.push(Weight {
            doubled,
            blocks: w.blocks().to_vec(),
        });
        // odometer increment, last block fastest
        let mut b = block_perms.len();
        loop {
            if b == 0 {
                return out;
            }
            b -= 1;
            idx[b] += 1;
            if idx[b] < block_perms[b].len() {
                break;
            }
            idx[b] = 0;
        }
    }
}

/// Distinct permutations of a multiset in decreasing lexicographic order.
fn multiset_permutations_desc(entries: &[i64]) -> Vec<Vec<i64>> {
    let mut cur = entries.to_vec();
    cur.sort_unstable();
    if cur.is_empty() {
        return vec![vec![]];
    }
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out.reverse();
    out
}

/// Classic next-permutation step; returns false at the last (descending)
/// arrangement. Handles repeated entries.
fn next_permutation(v: &mut [i64]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Lowest weight of the irreducible with the given highest weight, for a
/// product of general linear blocks: per-block reversal.
pub fn lowest_weight(highest: &Weight) -> Result<Weight> {
    let (dominant, _) = is_k_dominant_regular(highest);
    if !dominant {
        return Err(Error::NotDominant(format!("{highest}")));
    }
    let mut doubled = highest.doubled().to_vec();
    let mut start = 0;
    for &len in highest.blocks() {
        doubled[start..start + len].reverse();
        start += len;
    }
    Weight::new(doubled, highest.blocks().to_vec())
}

/// Weyl dimension formula for a product of general linear blocks:
/// product over each block of prod_{i<j} (l_i - l_j + j - i) / (j - i).
pub fn weyl_dim(highest: &Weight) -> Result<u128> {
    let (dominant, _) = is_k_dominant_regular(highest);
    if !dominant {
        return Err(Error::NotDominant(format!("{highest}")));
    }
    let mut num: Vec<u128> = Vec::new();
    let mut den: Vec<u128> = Vec::new();
    for r in highest.block_ranges() {
        let seg = &highest.doubled()[r];
        for i in 0..seg.len() {
            for j in i + 1..seg.len() {
                // entries in one block share parity, so the difference halves exactly
                num.push(((seg[i] - seg[j]) / 2 + (j - i) as i64) as u128);
                den.push((j - i) as u128);
            }
        }
    }
    // cancel denominators into the numerator factors; the quotient is an integer
    for mut d in den {
        for n in num.iter_mut() {
            if d == 1 {
                break;
            }
            let g = gcd(*n, d);
            *n /= g;
            d /= g;
        }
        debug_assert_eq!(d, 1, "Weyl dimension must be an integer");
    }
    let mut acc: u128 = 1;
    for n in num {
        acc = acc.checked_mul(n).ok_or_else(|| {
            Error::Param("Weyl dimension overflows u128".into())
        })?;
    }
    Ok(acc)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// 4 * ||w||^2 = sum of squared doubled entries; exact and invariant under
/// permutations and sign changes.
pub fn norm2x4(w: &Weight) -> u64 {
    w.doubled().iter().map(|&d| (d * d) as u64).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn wt(coords: &[i64]) -> Weight {
        Weight::integral_single(coords).unwrap()
    }

    #[test]
    fn rho_sp3() {
        let r = rho_vectors(&FamilyKind::sp(3).unwrap());
        assert_eq!(r.rho_g, wt(&[3, 2, 1]));
        assert_eq!(r.rho_k, wt(&[1, 0, -1]));
        assert_eq!(r.rho_n, wt(&[2, 2, 2]));
    }

    #[test]
    fn rho_sp1_degenerate() {
        let r = rho_vectors(&FamilyKind::sp(1).unwrap());
        assert_eq!(r.rho_g, wt(&[1]));
        assert_eq!(r.rho_k, wt(&[0]));
        assert_eq!(r.rho_n, wt(&[1]));
    }

    #[test]
    fn rho_u21() {
        let r = rho_vectors(&FamilyKind::u(2, 1).unwrap());
        assert_eq!(r.rho_g, Weight::new(vec![2, 0, -2], vec![2, 1]).unwrap());
        assert_eq!(r.rho_k, Weight::new(vec![1, -1, 0], vec![2, 1]).unwrap());
    }

    #[test]
    fn rho_entries_decrease_by_one() {
        for fam in [
            FamilyKind::sp(5).unwrap(),
            FamilyKind::u(3, 3).unwrap(),
            FamilyKind::u(4, 2).unwrap(),
        ] {
            let r = rho_vectors(&fam);
            let (_, reg) = is_k_dominant_regular(&r.rho_k);
            assert!(reg);
            for w in [&r.rho_g, &r.rho_k] {
                for range in w.block_ranges() {
                    for pair in w.doubled()[range].windows(2) {
                        assert_eq!(pair[0] - pair[1], 2);
                    }
                }
            }
            assert_eq!(r.rho_n, r.rho_g.sub(&r.rho_k).unwrap());
        }
    }

    #[test]
    fn dominance_tests() {
        assert_eq!(is_k_dominant_regular(&wt(&[2, 1, 0])), (true, true));
        assert_eq!(is_k_dominant_regular(&wt(&[1, 1, 0])), (true, false));
        let two_blocks = Weight::new(vec![1, -1, 3], vec![2, 1]).unwrap();
        assert_eq!(is_k_dominant_regular(&two_blocks), (true, true));
    }

    #[test]
    fn w1_counts() {
        assert_eq!(w1_enumerate(&FamilyKind::sp(2).unwrap()).len(), 4);
        assert_eq!(w1_enumerate(&FamilyKind::u(1, 1).unwrap()).len(), 2);
        assert_eq!(w1_enumerate(&FamilyKind::u(3, 2).unwrap()).len(), 10);
    }

    #[test]
    fn w1_sign_pattern_sp3() {
        // eps = (+,-,+) applied to rho_g = (3,2,1) sorts {3,-2,1} descending
        let elems = w1_enumerate(&FamilyKind::sp(3).unwrap());
        let target = elems
            .iter()
            .find(|e| e.signs() == Some(&[1, -1, 1][..]))
            .unwrap();
        let rho_g = rho_vectors(&FamilyKind::sp(3).unwrap()).rho_g;
        assert_eq!(weyl_apply(target, &rho_g).unwrap(), wt(&[3, 1, -2]));
    }

    #[test]
    fn w1_images_dominant_regular_and_distinct() {
        for fam in [
            FamilyKind::sp(4).unwrap(),
            FamilyKind::u(2, 2).unwrap(),
            FamilyKind::u(3, 1).unwrap(),
        ] {
            let rho_g = rho_vectors(&fam).rho_g;
            let mut seen = std::collections::BTreeSet::new();
            for e in w1_enumerate(&fam) {
                let img = weyl_apply(&e, &rho_g).unwrap();
                assert_eq!(is_k_dominant_regular(&img), (true, true), "{fam} {e}");
                assert!(seen.insert(img), "duplicate W1 image for {fam}");
            }
        }
    }

    #[test]
    fn weyl_apply_examples() {
        let id = WeylElem::SignedPerm {
            signs: vec![1, 1, 1],
            perm: vec![0, 1, 2],
        };
        assert_eq!(weyl_apply(&id, &wt(&[2, 1, 0])).unwrap(), wt(&[2, 1, 0]));

        // flip the first coordinate of (2,1,0), then sort: (1,0,-2)
        let flip = WeylElem::SignedPerm {
            signs: vec![-1, 1, 1],
            perm: vec![1, 2, 0],
        };
        assert_eq!(weyl_apply(&flip, &wt(&[2, 1, 0])).unwrap(), wt(&[1, 0, -2]));

        let swap = WeylElem::Perm { perm: vec![1, 0] };
        let ab = Weight::integral(&[5, 7], &[1, 1]).unwrap();
        assert_eq!(
            weyl_apply(&swap, &ab).unwrap(),
            Weight::integral(&[7, 5], &[1, 1]).unwrap()
        );

        let short = WeylElem::Perm { perm: vec![0] };
        assert!(weyl_apply(&short, &ab).is_err());
    }

    #[test]
    fn k_orbit_examples() {
        assert_eq!(k_orbit(&wt(&[1, 1, 1])).len(), 1);
        let orb = k_orbit(&wt(&[1, 0]));
        assert_eq!(orb, vec![wt(&[1, 0]), wt(&[0, 1])]);
        // constant core: orbit of (1/2,1/2,1/2,1/2) is a single point
        let half = Weight::new(vec![1, 1, 1, 1], vec![4]).unwrap();
        assert_eq!(k_orbit(&half).len(), 1);
    }

    #[test]
    fn k_orbit_two_blocks() {
        let w = Weight::integral(&[1, 0, 2, 2], &[2, 2]).unwrap();
        let orb = k_orbit(&w);
        assert_eq!(orb.len(), 2);
        assert!(orb.iter().all(|o| o.blocks() == w.blocks()));
    }

    #[test]
    fn lowest_weight_examples() {
        assert_eq!(lowest_weight(&wt(&[2, 0, -1])).unwrap(), wt(&[-1, 0, 2]));
        let two = Weight::integral(&[1, 0, 0, -1], &[2, 2]).unwrap();
        assert_eq!(
            lowest_weight(&two).unwrap(),
            Weight::integral(&[0, 1, -1, 0], &[2, 2]).unwrap()
        );
        assert!(lowest_weight(&wt(&[0, 1])).is_err());
    }

    #[test]
    fn lowest_weight_ktype_shape() {
        // (a1..ap, 0..0, -bq..-b1) + c reverses to (-b1..-bq, 0..0, ap..a1) + c
        let hw = Weight::new(vec![7, 3, 1, 1, -3, -9], vec![6]).unwrap();
        let lw = lowest_weight(&hw).unwrap();
        assert_eq!(lw, Weight::new(vec![-9, -3, 1, 1, 3, 7], vec![6]).unwrap());
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(weyl_dim(&wt(&[0, 0, 0])).unwrap(), 1);
        assert_eq!(weyl_dim(&wt(&[1, 0])).unwrap(), 2);
        assert_eq!(weyl_dim(&wt(&[2, 1, 0])).unwrap(), 8);
        assert!(weyl_dim(&wt(&[0, 1])).is_err());
    }

    #[test]
    fn norm_examples() {
        assert_eq!(norm2x4(&wt(&[0, 0])), 0);
        assert_eq!(norm2x4(&Weight::new(vec![1, -1], vec![2]).unwrap()), 2);
        assert_eq!(norm2x4(&wt(&[2, 1])), 20);
    }

    #[test]
    fn combinations_lex() {
        assert_eq!(
            combinations(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(3, -1), 0);
    }

    #[test]
    fn mixed_parity_block_rejected() {
        assert!(Weight::new(vec![1, 2], vec![2]).is_err());
        assert!(Weight::new(vec![1, 2], vec![1, 1]).is_ok());
    }

    fn multinomial_of(entries: &[i64]) -> u64 {
        let mut counts = std::collections::HashMap::new();
        for e in entries {
            *counts.entry(*e).or_insert(0u64) += 1;
        }
        let fact = |m: u64| (1..=m).product::<u64>();
        counts
            .values()
            .fold(fact(entries.len() as u64), |acc, &c| acc / fact(c))
    }

    proptest! {
        #[test]
        fn norm_invariant_under_w1(coords in proptest::collection::vec(-6i64..=6, 1..=6), mask in 0usize..64) {
            let n = coords.len();
            let w = wt(&coords);
            let elems = w1_enumerate(&FamilyKind::sp(n).unwrap());
            let e = &elems[mask % elems.len()];
            prop_assert_eq!(norm2x4(&weyl_apply(e, &w).unwrap()), norm2x4(&w));
        }

        #[test]
        fn orbit_size_is_multinomial(coords in proptest::collection::vec(-3i64..=3, 1..=6)) {
            let w = wt(&coords);
            let orb = k_orbit(&w);
            prop_assert_eq!(orb.len() as u64, multinomial_of(&coords));
            let mut sorted = coords.clone();
            sorted.sort_unstable();
            for o in &orb {
                let mut got: Vec<i64> = o.doubled().iter().map(|d| d / 2).collect();
                got.sort_unstable();
                prop_assert_eq!(&got, &sorted);
            }
        }

        #[test]
        fn lowest_weight_block_reversal_involution(mut coords in proptest::collection::vec(-5i64..=5, 1..=6)) {
            coords.sort_unstable_by(|a, b| b.cmp(a));
            let w = wt(&coords);
            let lw = lowest_weight(&w).unwrap();
            let mut rev = lw.doubled().to_vec();
            rev.reverse();
            prop_assert_eq!(rev, w.doubled().to_vec());
        }

        #[test]
        fn weyl_dim_duality(mut coords in proptest::collection::vec(-4i64..=4, 1..=5)) {
            coords.sort_unstable_by(|a, b| b.cmp(a));
            let w = wt(&coords);
            let dual = w.negated_sorted();
            prop_assert_eq!(weyl_dim(&w).unwrap(), weyl_dim(&dual).unwrap());
            prop_assert!(weyl_dim(&w).unwrap() >= 1);
        }
    }
}
