//! Verdicts for the 26 sporadic simple groups.
//!
//! Exactly the Mathieu groups M11, M12, M22, M23 have divisor coprime
//! graphs. Those four ship with their full element-order spectra and are
//! re-certified by the recognizer. M24, McL, J3, Fi23, and Fi24' carry the
//! partial-spectrum witness {6, 10, 15}, which alone forces the negative
//! answer. The rest are recorded negative through published subgroup
//! containments and are not recomputed here.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{obstruction_scan, ClassifyError};
use crate::group::OrderSpectrum;
use crate::recognize::{Method, Obstruction, Verdict};

/// Canonical names of the 26 sporadic simple groups.
pub const SPORADIC_NAMES: [&str; 26] = [
    "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4", "Co1", "Co2", "Co3", "Fi22",
    "Fi23", "Fi24'", "HS", "McL", "He", "Ru", "Suz", "ON", "HN", "Ly", "Th", "B", "M",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Full spectrum embedded; verdict re-derived by the recognizer.
    Spectrum,
    /// Partial spectrum witness {6,10,15}; forces the verdict by itself.
    Witness,
    /// Published subgroup containment; recorded, not recomputed.
    Paper,
}

/// Classification record for one sporadic simple group.
#[derive(Debug, Clone)]
pub struct SporadicOutcome {
    pub name: &'static str,
    pub is_divisor: bool,
    pub provenance: Provenance,
    /// Full π_e for the spectrum-backed entries.
    pub pi_e: Option<BTreeSet<u64>>,
    /// Partial-spectrum witness members.
    pub witness: Option<BTreeSet<u64>>,
    /// For paper records, the containment that settles the question.
    pub reason: &'static str,
    /// Evidence-backed verdict: recognizer certificate, spectrum
    /// obstruction, or the recorded negative.
    pub verdict: Verdict,
}

struct TableEntry {
    name: &'static str,
    kind: EntryKind,
}

enum EntryKind {
    FullSpectrum { pi_e: &'static [u64], expect: bool },
    Witness,
    Paper { reason: &'static str },
}

const WITNESS_SET: [u64; 3] = [6, 10, 15];

fn table() -> Vec<TableEntry> {
    use EntryKind::*;
    vec![
        TableEntry {
            name: "M11",
            kind: FullSpectrum { pi_e: &[2, 3, 4, 5, 6, 8, 11], expect: true },
        },
        TableEntry {
            name: "M12",
            kind: FullSpectrum { pi_e: &[2, 3, 4, 5, 6, 8, 10, 11], expect: true },
        },
        TableEntry {
            name: "M22",
            kind: FullSpectrum { pi_e: &[2, 3, 4, 5, 6, 7, 8, 11], expect: true },
        },
        TableEntry {
            name: "M23",
            kind: FullSpectrum { pi_e: &[2, 3, 4, 5, 6, 7, 8, 11, 14, 15, 23], expect: true },
        },
        TableEntry { name: "M24", kind: Witness },
        TableEntry { name: "McL", kind: Witness },
        TableEntry { name: "J3", kind: Witness },
        TableEntry { name: "Fi23", kind: Witness },
        TableEntry { name: "Fi24'", kind: Witness },
        TableEntry { name: "J1", kind: Paper { reason: "contains D6 x D10" } },
        TableEntry { name: "J2", kind: Paper { reason: "contains A5 x D10" } },
        TableEntry { name: "J4", kind: Paper { reason: "contains M24" } },
        TableEntry { name: "He", kind: Paper { reason: "contains S4 x L3(2)" } },
        TableEntry { name: "HN", kind: Paper { reason: "contains A12" } },
        TableEntry { name: "Th", kind: Paper { reason: "contains Z3 x G2(3)" } },
        TableEntry { name: "B", kind: Paper { reason: "contains Th" } },
        TableEntry { name: "M", kind: Paper { reason: "contains A12" } },
        TableEntry { name: "ON", kind: Paper { reason: "contains J1" } },
        TableEntry { name: "Ly", kind: Paper { reason: "contains Z2 x M11" } },
        TableEntry { name: "Ru", kind: Paper { reason: "contains Z2 x Z2 x Sz(8)" } },
        TableEntry { name: "Suz", kind: Paper { reason: "contains S3 x A5" } },
        TableEntry { name: "Fi22", kind: Paper { reason: "contains S10" } },
        TableEntry { name: "HS", kind: Paper { reason: "contains S8" } },
        TableEntry { name: "Co1", kind: Paper { reason: "contains McL" } },
        TableEntry { name: "Co2", kind: Paper { reason: "contains McL" } },
        TableEntry { name: "Co3", kind: Paper { reason: "contains McL" } },
    ]
}

fn canonical_name(raw: &str) -> Option<&'static str> {
    let squashed: String = raw
        .chars()
        .filter(|c| c.is_ascii_alphanumeric())
        .collect::<String>()
        .to_ascii_lowercase();
    let target = match squashed.as_str() {
        "m11" => "M11",
        "m12" => "M12",
        "m22" => "M22",
        "m23" => "M23",
        "m24" => "M24",
        "j1" => "J1",
        "j2" => "J2",
        "j3" => "J3",
        "j4" => "J4",
        "co1" => "Co1",
        "co2" => "Co2",
        "co3" => "Co3",
        "fi22" => "Fi22",
        "fi23" => "Fi23",
        "fi24" => "Fi24'",
        "hs" => "HS",
        "mcl" => "McL",
        "he" => "He",
        "ru" => "Ru",
        "suz" => "Suz",
        "on" => "ON",
        "hn" => "HN",
        "ly" => "Ly",
        "th" => "Th",
        "b" => "B",
        "m" => "M",
        _ => return None,
    };
    Some(target)
}

/// Verdict for a sporadic simple group by name (case-insensitive; `O'N` and
/// `Fi24` style aliases accepted).
pub fn sporadic_verdict(name: &str) -> Result<SporadicOutcome, ClassifyError> {
    let canonical =
        canonical_name(name).ok_or_else(|| ClassifyError::UnknownSporadic(name.to_owned()))?;
    let entry = table()
        .into_iter()
        .find(|e| e.name == canonical)
        .expect("every canonical name is in the table");
    Ok(outcome(entry))
}

/// All 26 records in table order.
pub fn sporadic_catalogue() -> Vec<SporadicOutcome> {
    table().into_iter().map(outcome).collect()
}

fn outcome(entry: TableEntry) -> SporadicOutcome {
    match entry.kind {
        EntryKind::FullSpectrum { pi_e, expect } => {
            let set: BTreeSet<u64> = pi_e.iter().copied().collect();
            let spectrum = OrderSpectrum::support_only(set.clone(), entry.name)
                .expect("embedded spectra are divisor-closed");
            let verdict = super::coprime_is_divisor_from_spectrum(&spectrum);
            debug_assert_eq!(verdict.is_divisor, expect, "{} spectrum verdict", entry.name);
            SporadicOutcome {
                name: entry.name,
                is_divisor: verdict.is_divisor,
                provenance: Provenance::Spectrum,
                pi_e: Some(set),
                witness: None,
                reason: "",
                verdict,
            }
        }
        EntryKind::Witness => {
            let witness: BTreeSet<u64> = WITNESS_SET.into();
            let closure = divisor_closure(&witness);
            let obstruction = obstruction_scan(&closure)
                .expect("the {6,10,15} witness always yields a prime triangle");
            SporadicOutcome {
                name: entry.name,
                is_divisor: false,
                provenance: Provenance::Witness,
                pi_e: None,
                witness: Some(witness),
                reason: "{6,10,15} lies in the element-order spectrum",
                verdict: Verdict::negative(Method::ObstructionScan, obstruction),
            }
        }
        EntryKind::Paper { reason } => SporadicOutcome {
            name: entry.name,
            is_divisor: false,
            provenance: Provenance::Paper,
            pi_e: None,
            witness: None,
            reason,
            verdict: Verdict::negative(
                Method::PaperRecord,
                Obstruction::PaperRecord { name: entry.name.to_owned(), reason: reason.to_owned() },
            ),
        },
    }
}

/// Closes a partial order set under divisors above 1, so witness sets can be
/// treated as honest (partial) spectra.
pub fn divisor_closure(partial: &BTreeSet<u64>) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for &m in partial {
        for d in crate::arith::divisors(m) {
            if d > 1 {
                out.insert(d);
            }
        }
    }
    out
}

/// The four Mathieu groups the classification certifies positive.
pub fn sporadic_predicate(name: &str) -> Result<bool, ClassifyError> {
    let canonical =
        canonical_name(name).ok_or_else(|| ClassifyError::UnknownSporadic(name.to_owned()))?;
    Ok(matches!(canonical, "M11" | "M12" | "M22" | "M23"))
}
