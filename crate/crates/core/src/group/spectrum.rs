//! Element-order spectra per group family, and partition-based order
//! supports for symmetric and alternating groups.
//!
//! Permutation orders are the lcm of their cycle type, so the order support
//! of S_n is the set of partition lcms — no need to touch n! elements.

use std::collections::{BTreeMap, BTreeSet};

use crate::arith::{divisors, euler_phi, lcm};

use super::{concrete, GroupError, GroupSpec};

/// Degrees up to this use exact multiplicities for S_n / A_n; above, only
/// the order support is produced.
const EXACT_SYMMETRIC_DEGREE: u32 = 8;

pub(super) fn order_spectrum(spec: &GroupSpec, cap: usize) -> Result<super::OrderSpectrum, GroupError> {
    spec.validate()?;
    let source = spec.to_string();
    match spec {
        GroupSpec::Cyclic(n) => super::OrderSpectrum::exact(cyclic_counts(*n), source),
        GroupSpec::Dihedral(n) => {
            // rotations form Z_n; the n reflections are involutions
            let mut counts = cyclic_counts(*n);
            *counts.entry(2).or_insert(0) += *n;
            super::OrderSpectrum::exact(counts, source)
        }
        GroupSpec::Dicyclic(t) => {
            // <x> is Z_{2t}; the 2t elements outside have order 4
            let mut counts = cyclic_counts(2 * t);
            *counts.entry(4).or_insert(0) += 2 * t;
            super::OrderSpectrum::exact(counts, source)
        }
        GroupSpec::Symmetric(n) => {
            if *n <= EXACT_SYMMETRIC_DEGREE {
                super::OrderSpectrum::exact(permutation_counts(*n, Parity::All), source)
            } else {
                let pi_e = strip_identity(partition_orders(*n, Parity::All)?);
                super::OrderSpectrum::support_only(pi_e, source)
            }
        }
        GroupSpec::Alternating(n) => {
            if *n <= EXACT_SYMMETRIC_DEGREE {
                super::OrderSpectrum::exact(permutation_counts(*n, Parity::Even), source)
            } else {
                let pi_e = strip_identity(partition_orders(*n, Parity::Even)?);
                super::OrderSpectrum::support_only(pi_e, source)
            }
        }
        GroupSpec::DirectProduct(left, right) => {
            let ls = order_spectrum(left, cap)?;
            let rs = order_spectrum(right, cap)?;
            match (ls.counts(), rs.counts()) {
                (Some(lc), Some(rc)) => {
                    let mut counts = BTreeMap::new();
                    for (&a, &ca) in lc {
                        for (&b, &cb) in rc {
                            *counts.entry(lcm(a, b)).or_insert(0) += ca * cb;
                        }
                    }
                    super::OrderSpectrum::exact(counts, source)
                }
                _ => {
                    let mut pi_e = BTreeSet::new();
                    for &a in ls.support() {
                        for &b in rs.support() {
                            let m = lcm(a, b);
                            if m > 1 {
                                pi_e.insert(m);
                            }
                        }
                    }
                    super::OrderSpectrum::support_only(pi_e, source)
                }
            }
        }
        GroupSpec::PermGroup { .. } => {
            let group = concrete::enumerate(spec, cap)?;
            let mut counts = BTreeMap::new();
            for i in 0..group.order() {
                *counts.entry(group.element_order(i)).or_insert(0) += 1;
            }
            super::OrderSpectrum::exact(counts, source)
        }
        GroupSpec::SpectrumGroup { pi_e, .. } => {
            super::OrderSpectrum::support_only(pi_e.clone(), source)
        }
    }
}

/// Counts of element orders in Z_n: phi(d) elements of order d per divisor d.
fn cyclic_counts(n: u64) -> BTreeMap<u64, u64> {
    divisors(n).into_iter().map(|d| (d, euler_phi(d))).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// All permutations (symmetric group).
    All,
    /// Even permutations only (alternating group).
    Even,
}

/// Orders realized by (even) permutations of n points: lcms over partitions
/// of n, restricted for the alternating case to partitions with an even
/// number of even parts. Includes 1. Accepts 1 <= n <= 64.
pub fn partition_orders(n: u32, parity: Parity) -> Result<BTreeSet<u64>, GroupError> {
    if !(1..=64).contains(&n) {
        return Err(GroupError::BadParameter(format!(
            "partition degree must be in 1..=64, got {n}"
        )));
    }
    let mut orders = BTreeSet::new();
    visit_partitions(n, &mut |parts| {
        if parity == Parity::Even && parts.iter().filter(|&&p| p % 2 == 0).count() % 2 != 0 {
            return;
        }
        orders.insert(parts.iter().fold(1u64, |acc, &p| lcm(acc, p as u64)));
    });
    Ok(orders)
}

/// Exact order multiplicities for S_n / A_n via cycle-type counting:
/// a partition with m_c parts of size c accounts for n! / prod(c^m_c m_c!)
/// permutations.
fn permutation_counts(n: u32, parity: Parity) -> BTreeMap<u64, u64> {
    let mut counts = BTreeMap::new();
    visit_partitions(n, &mut |parts| {
        if parity == Parity::Even && parts.iter().filter(|&&p| p % 2 == 0).count() % 2 != 0 {
            return;
        }
        let order = parts.iter().fold(1u64, |acc, &p| lcm(acc, p as u64));
        *counts.entry(order).or_insert(0) += cycle_type_size(n, parts);
    });
    counts
}

fn cycle_type_size(n: u32, parts: &[u32]) -> u64 {
    let mut z = 1u128;
    let mut run = 0u128;
    let mut prev = 0u32;
    for &p in parts {
        if p == prev {
            run += 1;
        } else {
            run = 1;
            prev = p;
        }
        z *= u128::from(p) * run;
    }
    let fact: u128 = (1..=u128::from(n)).product();
    u64::try_from(fact / z).expect("class size fits u64 for n <= 20")
}

/// Visits every partition of `n` with parts ascending.
fn visit_partitions(n: u32, visit: &mut impl FnMut(&[u32])) {
    let mut parts = Vec::new();
    descend(n, 1, &mut parts, visit);
}

fn descend(remaining: u32, min_part: u32, parts: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    if remaining == 0 {
        visit(parts);
        return;
    }
    for part in min_part..=remaining {
        parts.push(part);
        descend(remaining - part, part, parts, visit);
        parts.pop();
    }
}

fn strip_identity(mut orders: BTreeSet<u64>) -> BTreeSet<u64> {
    orders.remove(&1);
    orders
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vals: &[u64]) -> BTreeSet<u64> {
        vals.iter().copied().collect()
    }

    #[test]
    fn partition_orders_s7_a8() {
        assert_eq!(
            partition_orders(7, Parity::All).unwrap(),
            set(&[1, 2, 3, 4, 5, 6, 7, 10, 12])
        );
        assert_eq!(
            partition_orders(8, Parity::Even).unwrap(),
            set(&[1, 2, 3, 4, 5, 6, 7, 15])
        );
        assert_eq!(partition_orders(1, Parity::All).unwrap(), set(&[1]));
        assert!(partition_orders(0, Parity::All).is_err());
        assert!(partition_orders(65, Parity::All).is_err());
    }

    #[test]
    fn dihedral_6_counts() {
        let spec: GroupSpec = "D 12".parse().unwrap();
        let spectrum = spec.order_spectrum().unwrap();
        let counts = spectrum.counts().unwrap();
        let expect: BTreeMap<u64, u64> = [(1, 1), (2, 7), (3, 2), (6, 2)].into();
        assert_eq!(counts, &expect);
        assert_eq!(spectrum.total(), Some(12));
    }

    #[test]
    fn symmetric_7_support_matches_partitions() {
        let spectrum = GroupSpec::Symmetric(7).order_spectrum().unwrap();
        assert_eq!(spectrum.pi_e(), set(&[2, 3, 4, 5, 6, 7, 10, 12]));
        assert_eq!(spectrum.total(), Some(5040));
        // beyond the exact cutoff only the support is retained
        let big = GroupSpec::Symmetric(12).order_spectrum().unwrap();
        assert!(big.counts().is_none());
        assert!(big.support().contains(&60));
    }

    #[test]
    fn alternating_8_support() {
        let spectrum = GroupSpec::Alternating(8).order_spectrum().unwrap();
        assert_eq!(spectrum.pi_e(), set(&[2, 3, 4, 5, 6, 7, 15]));
        assert_eq!(spectrum.total(), Some(20160));
    }

    #[test]
    fn partition_orders_match_enumeration_up_to_degree_7() {
        for n in 1..=7u32 {
            for (parity, spec) in [
                (Parity::All, GroupSpec::Symmetric(n)),
                (Parity::Even, GroupSpec::Alternating(n)),
            ] {
                let group = spec.enumerate().unwrap();
                let observed: BTreeSet<u64> =
                    (0..group.order()).map(|i| group.element_order(i)).collect();
                assert_eq!(partition_orders(n, parity).unwrap(), observed, "{spec} degree {n}");
            }
        }
    }

    #[test]
    fn dicyclic_spectrum() {
        let q12 = GroupSpec::Dicyclic(3).order_spectrum().unwrap();
        // Z_6 orders {1,2,3,6} plus 6 extra elements of order 4
        let expect: BTreeMap<u64, u64> = [(1, 1), (2, 1), (3, 2), (4, 6), (6, 2)].into();
        assert_eq!(q12.counts().unwrap(), &expect);
        assert_eq!(q12.total(), Some(12));
    }

    #[test]
    fn direct_product_convolution() {
        let spec: GroupSpec = "DP (Z 2) (Z 3)".parse().unwrap();
        let spectrum = spec.order_spectrum().unwrap();
        let expect: BTreeMap<u64, u64> = [(1, 1), (2, 1), (3, 2), (6, 2)].into();
        assert_eq!(spectrum.counts().unwrap(), &expect);

        // support-only factor forces a support-only product
        let mixed: GroupSpec = "DP (SPEC X : 2) (Z 3)".parse().unwrap();
        let ms = mixed.order_spectrum().unwrap();
        assert!(ms.counts().is_none());
        assert_eq!(ms.pi_e(), set(&[2, 3, 6]));
    }

    #[test]
    fn perm_group_spectrum_via_closure() {
        let spec: GroupSpec = "PERM 3 ; (1 2) ; (1 2 3)".parse().unwrap();
        let spectrum = spec.order_spectrum().unwrap();
        let expect: BTreeMap<u64, u64> = [(1, 1), (2, 3), (3, 2)].into();
        assert_eq!(spectrum.counts().unwrap(), &expect);
    }

    #[test]
    fn supports_are_divisor_closed() {
        for text in ["Z 360", "D 60", "Q 24", "S 8", "A 8", "DP (D 12) (Z 35)"] {
            let spectrum = text.parse::<GroupSpec>().unwrap().order_spectrum().unwrap();
            for &m in spectrum.support() {
                for d in crate::arith::divisors(m) {
                    assert!(
                        spectrum.support().contains(&d),
                        "{text}: {m} in support but divisor {d} missing"
                    );
                }
            }
        }
    }
}
