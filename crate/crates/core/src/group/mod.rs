//! Symbolic finite groups, their element-order spectra, and exact
//! enumeration for group families at desk scale.

mod concrete;
mod parse;
mod perm;
mod spectrum;

pub use concrete::{ConcreteGroup, DEFAULT_ELEMENT_CAP};
pub use perm::Permutation;
pub use spectrum::{partition_orders, Parity};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::arith::{is_prime_power, prime_divisors, MAX_ORDER};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("parameter out of bounds: {0}")]
    BadParameter(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("order spectrum not divisor-closed: {member} is present but its divisor {missing} is not")]
    NotDivisorClosed { member: u64, missing: u64 },
    #[error("group too large: needs more than {cap} elements")]
    ElementCapExceeded { cap: usize },
    #[error("spectrum-only group `{0}` cannot be enumerated")]
    SpectrumOnly(String),
    #[error("operation needs element multiplicities, but the spectrum of `{0}` is support-only")]
    SupportOnly(String),
}

/// Symbolic description of a finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// Cyclic group of order `n >= 1`.
    Cyclic(u64),
    /// Dihedral group `D_{2n}` of order `2n`, `n >= 3`.
    Dihedral(u64),
    /// Dicyclic (generalized quaternion) group `Q_{4t}` of order `4t`, `t >= 2`.
    Dicyclic(u64),
    /// Symmetric group on `n >= 1` points.
    Symmetric(u32),
    /// Alternating group on `n >= 1` points.
    Alternating(u32),
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    /// Subgroup of the symmetric group generated by explicit permutations.
    PermGroup { points: usize, generators: Vec<Permutation> },
    /// A group known only through its set of non-identity element orders.
    SpectrumGroup { name: String, pi_e: BTreeSet<u64> },
}

impl GroupSpec {
    /// Validates parameter bounds and, for spectrum groups, divisor closure.
    pub fn validate(&self) -> Result<(), GroupError> {
        match self {
            GroupSpec::Cyclic(n) => {
                if *n < 1 || *n > MAX_ORDER {
                    return Err(GroupError::BadParameter(format!(
                        "cyclic order must be in 1..={MAX_ORDER}, got {n}"
                    )));
                }
            }
            GroupSpec::Dihedral(n) => {
                if *n < 3 || *n > MAX_ORDER / 2 {
                    return Err(GroupError::BadParameter(format!(
                        "dihedral parameter must be in 3..={}, got {n}",
                        MAX_ORDER / 2
                    )));
                }
            }
            GroupSpec::Dicyclic(t) => {
                if *t < 2 || *t > MAX_ORDER / 4 {
                    return Err(GroupError::BadParameter(format!(
                        "dicyclic parameter must be in 2..={}, got {t}",
                        MAX_ORDER / 4
                    )));
                }
            }
            GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) => {
                if *n < 1 || *n > 64 {
                    return Err(GroupError::BadParameter(format!(
                        "symmetric/alternating degree must be in 1..=64, got {n}"
                    )));
                }
            }
            GroupSpec::DirectProduct(left, right) => {
                left.validate()?;
                right.validate()?;
            }
            GroupSpec::PermGroup { points, generators } => {
                for g in generators {
                    if g.degree() != *points {
                        return Err(GroupError::InvalidPermutation(format!(
                            "generator degree {} does not match point count {points}",
                            g.degree()
                        )));
                    }
                }
            }
            GroupSpec::SpectrumGroup { pi_e, .. } => {
                check_divisor_closed(pi_e)?;
            }
        }
        Ok(())
    }

    /// The exact multiset of element orders, or the support alone when only
    /// that is knowable (spectrum groups, large symmetric/alternating).
    pub fn order_spectrum(&self) -> Result<OrderSpectrum, GroupError> {
        spectrum::order_spectrum(self, DEFAULT_ELEMENT_CAP)
    }

    /// As `order_spectrum`, with a custom enumeration cap for generated
    /// permutation groups.
    pub fn order_spectrum_with_cap(&self, cap: usize) -> Result<OrderSpectrum, GroupError> {
        spectrum::order_spectrum(self, cap)
    }

    /// Enumerates the group with the default element cap.
    pub fn enumerate(&self) -> Result<ConcreteGroup, GroupError> {
        concrete::enumerate(self, DEFAULT_ELEMENT_CAP)
    }

    pub fn enumerate_with_cap(&self, cap: usize) -> Result<ConcreteGroup, GroupError> {
        concrete::enumerate(self, cap)
    }

    /// Prime divisors of |G|, read off the order spectrum.
    pub fn prime_set(&self) -> Result<BTreeSet<u64>, GroupError> {
        Ok(self.order_spectrum()?.prime_set())
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        parse::parse_group_spec(text)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z {n}"),
            GroupSpec::Dihedral(n) => write!(f, "D {}", 2 * n),
            GroupSpec::Dicyclic(t) => write!(f, "Q {}", 4 * t),
            GroupSpec::Symmetric(n) => write!(f, "S {n}"),
            GroupSpec::Alternating(n) => write!(f, "A {n}"),
            GroupSpec::DirectProduct(l, r) => write!(f, "DP ({l}) ({r})"),
            GroupSpec::PermGroup { points, generators } => {
                write!(f, "PERM {points}")?;
                for g in generators {
                    write!(f, " ; {g}")?;
                }
                Ok(())
            }
            GroupSpec::SpectrumGroup { name, pi_e } => {
                let list: Vec<String> = pi_e.iter().map(u64::to_string).collect();
                write!(f, "SPEC {name} : {}", list.join(","))
            }
        }
    }
}

fn check_divisor_closed(support: &BTreeSet<u64>) -> Result<(), GroupError> {
    for &m in support {
        if m < 2 {
            return Err(GroupError::BadParameter(format!(
                "spectrum members must exceed 1, got {m}"
            )));
        }
        if m > MAX_ORDER {
            return Err(GroupError::BadParameter(format!(
                "spectrum member {m} exceeds the order cap {MAX_ORDER}"
            )));
        }
        for d in crate::arith::divisors(m) {
            if d > 1 && d < m && !support.contains(&d) {
                return Err(GroupError::NotDivisorClosed { member: m, missing: d });
            }
        }
    }
    Ok(())
}

/// The multiset of element orders of a finite group. Multiplicities are
/// exact when the group was enumerable or has a closed form; spectrum-only
/// groups carry the support alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSpectrum {
    support: BTreeSet<u64>,
    counts: Option<std::collections::BTreeMap<u64, u64>>,
    total: Option<u64>,
    source: String,
}

impl OrderSpectrum {
    /// Exact spectrum from a counts map (must include the identity, order 1).
    pub fn exact(
        counts: std::collections::BTreeMap<u64, u64>,
        source: impl Into<String>,
    ) -> Result<Self, GroupError> {
        if counts.get(&1) != Some(&1) {
            return Err(GroupError::BadParameter(
                "exact spectrum must count exactly one identity element".into(),
            ));
        }
        let support: BTreeSet<u64> = counts.keys().copied().collect();
        let pi_e: BTreeSet<u64> = support.iter().copied().filter(|&m| m > 1).collect();
        check_divisor_closed(&pi_e)?;
        let total = counts.values().sum();
        Ok(Self { support, counts: Some(counts), total: Some(total), source: source.into() })
    }

    /// Support-only spectrum from π_e (orders of non-identity elements).
    pub fn support_only(
        pi_e: BTreeSet<u64>,
        source: impl Into<String>,
    ) -> Result<Self, GroupError> {
        check_divisor_closed(&pi_e)?;
        let mut support = pi_e;
        support.insert(1);
        Ok(Self { support, counts: None, total: None, source: source.into() })
    }

    /// All element orders including 1.
    pub fn support(&self) -> &BTreeSet<u64> {
        &self.support
    }

    /// π_e: orders of non-identity elements.
    pub fn pi_e(&self) -> BTreeSet<u64> {
        self.support.iter().copied().filter(|&m| m > 1).collect()
    }

    /// Exact counts per order, when known.
    pub fn counts(&self) -> Option<&std::collections::BTreeMap<u64, u64>> {
        self.counts.as_ref()
    }

    /// |G| when multiplicities are known.
    pub fn total(&self) -> Option<u64> {
        self.total
    }

    /// Which group this spectrum was computed from (display form).
    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn has_multiplicities(&self) -> bool {
        self.counts.is_some()
    }

    /// π(G): primes dividing some element order (equals the primes dividing
    /// |G| for honest groups, by Cauchy's theorem).
    pub fn prime_set(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for &m in &self.support {
            out.extend(prime_divisors(m));
        }
        out
    }

    /// Distinct radicals of the non-identity orders.
    pub fn radicals(&self) -> BTreeSet<u64> {
        self.pi_e().iter().map(|&m| crate::arith::radical(m)).collect()
    }

    /// Number of elements per order radical, when multiplicities are known.
    pub fn class_sizes_by_radical(&self) -> Option<std::collections::BTreeMap<u64, u64>> {
        let counts = self.counts.as_ref()?;
        let mut sizes = std::collections::BTreeMap::new();
        for (&order, &count) in counts {
            if order > 1 {
                *sizes.entry(crate::arith::radical(order)).or_insert(0) += count;
            }
        }
        Some(sizes)
    }
}

/// True when every non-identity element order is a prime power.
pub fn is_cp_group(spectrum: &OrderSpectrum) -> bool {
    spectrum.pi_e().iter().all(|&m| is_prime_power(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn support(vals: &[u64]) -> BTreeSet<u64> {
        vals.iter().copied().collect()
    }

    #[test]
    fn spectrum_group_requires_divisor_closure() {
        let bad = GroupSpec::SpectrumGroup { name: "X".into(), pi_e: support(&[6]) };
        assert_eq!(
            bad.validate(),
            Err(GroupError::NotDivisorClosed { member: 6, missing: 2 })
        );
        let good = GroupSpec::SpectrumGroup { name: "X".into(), pi_e: support(&[2, 3, 6]) };
        assert!(good.validate().is_ok());
    }

    #[test]
    fn parameter_bounds() {
        assert!(GroupSpec::Dihedral(2).validate().is_err());
        assert!(GroupSpec::Dihedral(3).validate().is_ok());
        assert!(GroupSpec::Dicyclic(1).validate().is_err());
        assert!(GroupSpec::Cyclic(0).validate().is_err());
        assert!(GroupSpec::Symmetric(65).validate().is_err());
    }

    #[test]
    fn cp_group_check() {
        let a5 = OrderSpectrum::support_only(support(&[2, 3, 5]), "A 5").unwrap();
        assert!(is_cp_group(&a5));
        let d12 = OrderSpectrum::support_only(support(&[2, 3, 6]), "D 12").unwrap();
        assert!(!is_cp_group(&d12));
        let trivial = OrderSpectrum::support_only(support(&[]), "Z 1").unwrap();
        assert!(is_cp_group(&trivial));
    }

    #[test]
    fn prime_set_and_radicals() {
        let s7 = OrderSpectrum::support_only(support(&[2, 3, 4, 5, 6, 7, 10, 12]), "S 7").unwrap();
        assert_eq!(s7.prime_set(), support(&[2, 3, 5, 7]));
        assert_eq!(s7.radicals(), support(&[2, 3, 5, 6, 7, 10]));
        let trivial = OrderSpectrum::support_only(support(&[]), "Z 1").unwrap();
        assert!(trivial.prime_set().is_empty());
    }

    #[test]
    fn display_round_trip() {
        let spec: GroupSpec = "DP (Z 4) (S 3)".parse().unwrap();
        assert_eq!(spec.to_string(), "DP (Z 4) (S 3)");
        assert_eq!(spec.to_string().parse::<GroupSpec>().unwrap(), spec);
    }
}
