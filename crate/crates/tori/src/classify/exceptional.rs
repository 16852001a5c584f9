//! Degeneracy tables for the exceptional groups.
//!
//! Classes of maximal tori are labeled by admissible diagrams, treated here
//! as opaque strings; each group ships its full label universe plus the list
//! of labels that are degenerate at q = 2. For every q beyond the tabulated
//! range the verdict is nondegenerate, backed by the q-bounds of
//! [`crate::rootsys::q_bound`].
//!
//! Conventions carried by the labels: for the twisted E6 groups, "w is of
//! type X" means w0*w lies in the class labeled X; the starred 3D4 labels
//! name the F4-classes containing the corresponding coset classes; the
//! Suzuki labels are the W-parts of the standard coset representatives.

use super::{DegeneracyVerdict, Status};
use crate::weylclass::prime_power;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum ExceptionalGroup {
    G2,
    F4,
    E6,
    E7,
    E8,
    TwistedE6,
    TripleD4,
    Suzuki,
}

impl ExceptionalGroup {
    pub const ALL: [ExceptionalGroup; 8] = [
        ExceptionalGroup::G2,
        ExceptionalGroup::F4,
        ExceptionalGroup::E6,
        ExceptionalGroup::E7,
        ExceptionalGroup::E8,
        ExceptionalGroup::TwistedE6,
        ExceptionalGroup::TripleD4,
        ExceptionalGroup::Suzuki,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExceptionalGroup::G2 => "G2",
            ExceptionalGroup::F4 => "F4",
            ExceptionalGroup::E6 => "E6",
            ExceptionalGroup::E7 => "E7",
            ExceptionalGroup::E8 => "E8",
            ExceptionalGroup::TwistedE6 => "2E6",
            ExceptionalGroup::TripleD4 => "3D4",
            ExceptionalGroup::Suzuki => "2B2",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        ExceptionalGroup::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::parameter(format!("unknown exceptional group {s:?}")))
    }
}

const G2_UNIVERSE: &[&str] = &["∅", "A_1", "Ã_1", "A_1×Ã_1", "A_2", "G_2"];
const G2_DEGENERATE: &[&str] = &["∅", "A_1", "Ã_1"];

const F4_UNIVERSE: &[&str] = &[
    "∅",
    "A_1",
    "Ã_1",
    "A_1^2",
    "A_1×Ã_1",
    "A_1^3",
    "A_1^2×Ã_1",
    "A_1^4",
    "A_2",
    "Ã_2",
    "A_2×Ã_1",
    "Ã_2×A_1",
    "A_2×Ã_2",
    "B_2",
    "B_2×A_1",
    "B_2×Ã_1",
    "A_3",
    "D_4(a_1)",
    "D_4",
    "C_3",
    "B_3",
    "C_3×A_1",
    "B_4",
    "F_4",
    "F_4(a_1)",
];
const F4_DEGENERATE: &[&str] = &[
    "∅",
    "A_1",
    "Ã_1",
    "A_1^2",
    "A_1×Ã_1",
    "A_2",
    "Ã_2",
    "B_2",
    "A_1^3",
    "A_1^2×Ã_1",
    "A_3",
    "B_2×A_1",
    "C_3",
    "B_3",
];

const E6_UNIVERSE: &[&str] = &[
    "∅",
    "A_1",
    "A_1^2",
    "A_1^3",
    "A_1^4",
    "A_2",
    "A_2×A_1",
    "A_2×A_1^2",
    "A_2^2",
    "A_2^2×A_1",
    "A_2^3",
    "A_3",
    "A_3×A_1",
    "A_3×A_1^2",
    "A_4",
    "A_4×A_1",
    "A_5",
    "A_5×A_1",
    "D_4",
    "D_4(a_1)",
    "D_5",
    "D_5(a_1)",
    "E_6",
    "E_6(a_1)",
    "E_6(a_2)",
];
const E6_DEGENERATE: &[&str] = &[
    "∅",
    "A_1",
    "A_1^2",
    "A_2",
    "A_1^3",
    "A_2×A_1",
    "A_3",
    "A_2^2",
    "A_3×A_1",
    "A_4",
    "A_5",
];

const E7_UNIVERSE: &[&str] = &[
    "∅",
    "A_1",
    "A_1^2",
    "(A_1^3)'",
    "(A_1^3)''",
    "(A_1^4)'",
    "(A_1^4)''",
    "A_1^5",
    "A_1^6",
    "A_1^7",
    "A_2",
    "A_2×A_1",
    "A_2×A_1^2",
    "A_2×A_1^3",
    "A_2^2",
    "A_2^2×A_1",
    "A_2^3",
    "A_3",
    "(A_3×A_1)'",
    "(A_3×A_1)''",
    "(A_3×A_1^2)'",
    "(A_3×A_1^2)''",
    "A_3×A_1^3",
    "A_3×A_2",
    "A_3×A_2×A_1",
    "A_3^2",
    "A_3^2×A_1",
    "A_4",
    "A_4×A_1",
    "A_4×A_2",
    "(A_5)'",
    "(A_5)''",
    "A_5×A_1",
    "A_5×A_2",
    "A_6",
    "A_7",
    "D_4",
    "D_4(a_1)",
    "D_4×A_1",
    "D_4(a_1)×A_1",
    "D_4×A_1^2",
    "D_4(a_1)×A_1^2",
    "D_4×A_1^3",
    "D_5",
    "D_5(a_1)",
    "D_5×A_1",
    "D_5(a_1)×A_1",
    "D_6",
    "D_6(a_1)",
    "D_6(a_2)",
    "D_6×A_1",
    "D_6(a_2)×A_1",
    "E_6",
    "E_6(a_1)",
    "E_6(a_2)",
    "E_7",
    "E_7(a_1)",
    "E_7(a_2)",
    "E_7(a_3)",
    "E_7(a_4)",
];
const E7_DEGENERATE: &[&str] = &[
    "∅",
    "A_1",
    "A_1^2",
    "A_2",
    "(A_1^3)'",
    "(A_1^3)''",
    "A_2×A_1",
    "A_3",
    "(A_1^4)'",
    "(A_1^4)''",
    "A_2×A_1^2",
    "A_2^2",
    "(A_3×A_1)'",
    "(A_3×A_1)''",
    "A_4",
    "D_4",
    "D_4(a_1)",
    "A_1^5",
    "(A_3×A_1^2)'",
    "(A_3×A_1^2)''",
    "A_3×A_2",
    "(A_5)'",
    "(A_5)''",
    "D_4×A_1",
    "D_4(a_1)×A_1",
    "D_5",
    "D_5(a_1)",
    "A_1^6",
    "A_3^2",
    "D_4×A_1^2",
    "D_6",
    "D_6(a_1)",
    "D_6(a_2)",
];

const E8_UNIVERSE: &[&str] = &[
    "∅",
    "A_1",
    "A_1^2",
    "A_1^3",
    "(A_1^4)'",
    "(A_1^4)''",
    "A_1^5",
    "A_1^6",
    "A_1^7",
    "A_1^8",
    "A_2",
    "A_2×A_1",
    "A_2×A_1^2",
    "A_2×A_1^3",
    "A_2×A_1^4",
    "A_2^2",
    "A_2^2×A_1",
    "A_2^2×A_1^2",
    "A_2^3",
    "A_2^3×A_1",
    "A_2^4",
    "A_3",
    "A_3×A_1",
    "(A_3×A_1^2)'",
    "(A_3×A_1^2)''",
    "A_3×A_1^3",
    "A_3×A_2",
    "A_3×A_2×A_1",
    "A_3×A_2×A_1^2",
    "(A_3^2)'",
    "(A_3^2)''",
    "A_3^2×A_1",
    "A_3^2×A_1^2",
    "A_4",
    "A_4×A_1",
    "A_4×A_1^2",
    "A_4×A_2",
    "A_4×A_2×A_1",
    "A_4×A_3",
    "A_4^2",
    "A_5",
    "(A_5×A_1)'",
    "(A_5×A_1)''",
    "A_5×A_2",
    "A_5×A_2×A_1",
    "A_6",
    "A_6×A_1",
    "A_7",
    "A_7×A_1",
    "A_8",
    "D_4",
    "D_4(a_1)",
    "D_4×A_1",
    "D_4(a_1)×A_1",
    "D_4×A_1^2",
    "D_4(a_1)×A_1^2",
    "D_4×A_1^3",
    "D_4×A_2",
    "D_4×A_3",
    "D_4×D_4(a_1)",
    "D_4(a_1)^2",
    "D_4^2",
    "D_5",
    "D_5(a_1)",
    "D_5×A_1",
    "D_5(a_1)×A_1",
    "D_5×A_2",
    "D_5×A_3",
    "D_6",
    "D_6(a_1)",
    "D_6(a_2)",
    "D_6×A_1",
    "D_6(a_2)×A_1",
    "D_6×A_1^2",
    "D_7",
    "D_7(a_1)",
    "D_7(a_2)",
    "D_8",
    "D_8(a_1)",
    "D_8(a_2)",
    "D_8(a_3)",
    "E_6",
    "E_6(a_1)",
    "E_6(a_2)",
    "E_6×A_1",
    "E_6(a_1)×A_1",
    "E_6(a_2)×A_1",
    "E_6×A_2",
    "E_6(a_1)×A_2",
    "E_6(a_2)×A_2",
    "E_7",
    "E_7(a_1)",
    "E_7(a_2)",
    "E_7(a_3)",
    "E_7(a_4)",
    "E_7×A_1",
    "E_7(a_1)×A_1",
    "E_7(a_2)×A_1",
    "E_7(a_3)×A_1",
    "E_7(a_4)×A_1",
    "E_8",
    "E_8(a_1)",
    "E_8(a_2)",
    "E_8(a_3)",
    "E_8(a_4)",
    "E_8(a_5)",
    "E_8(a_6)",
    "E_8(a_7)",
    "E_8(a_8)",
    "E_8(b_4)",
    "E_8(b_5)",
    "E_8(b_6)",
];
const E8_DEGENERATE: &[&str] = &[
    "∅",
    "A_1",
    "A_1^2",
    "A_2",
    "A_1^3",
    "A_2×A_1",
    "A_3",
    "(A_1^4)'",
    "(A_1^4)''",
    "A_2×A_1^2",
    "A_2^2",
    "A_3×A_1",
    "A_4",
    "D_4",
    "D_4(a_1)",
    "A_1^5",
    "A_2×A_1^3",
    "A_2^2×A_1",
    "(A_3×A_1^2)'",
    "(A_3×A_1^2)''",
    "A_3×A_2",
    "A_4×A_1",
    "A_5",
    "D_4×A_1",
    "D_4(a_1)×A_1",
    "D_5",
    "D_5(a_1)",
    "A_1^6",
    "A_2^2×A_1^2",
    "A_2^3",
    "A_3×A_1^3",
    "A_3×A_2×A_1",
    "(A_3^2)'",
    "A_4×A_2",
    "(A_5×A_1)'",
    "(A_5×A_1)''",
    "A_6",
    "D_4×A_1^2",
    "D_5×A_1",
    "D_5(a_1)×A_1",
    "D_6",
    "D_6(a_1)",
    "D_6(a_2)",
    "E_6",
    "E_6(a_1)",
    "E_6(a_2)",
    "A_1^7",
    "A_3^2×A_1",
    "D_4×A_1^3",
    "D_6×A_1",
    "D_6(a_2)×A_1",
    "E_7",
    "E_7(a_1)",
    "E_7(a_2)",
    "E_7(a_3)",
    "D_4^2",
];

const TWISTED_E6_DEGENERATE: &[&str] = &[
    "A_1",
    "A_1^2",
    "A_1^3",
    "A_2×A_1",
    "A_1^4",
    "A_2×A_1^2",
    "A_3×A_1",
    "A_4",
    "A_2^2×A_1",
    "A_3×A_1^2",
    "A_5×A_1",
];

const TRIPLE_D4_UNIVERSE: &[&str] = &[
    "(Ã_2)*",
    "(C_3)*",
    "(Ã_2×A_1)*",
    "(A_2×Ã_2)*",
    "(C_3×A_1)*",
    "(F_4)*",
    "(F_4(a_1))*",
];
const TRIPLE_D4_DEGENERATE: &[&str] = &["(Ã_2)*", "(C_3)*"];

const SUZUKI_UNIVERSE: &[&str] = &["1", "w_a", "w_aw_bw_a"];
const SUZUKI_DEGENERATE: &[&str] = &[];

/// The complete label universe for a group; labels are opaque strings.
pub fn label_universe(group: ExceptionalGroup) -> &'static [&'static str] {
    match group {
        ExceptionalGroup::G2 => G2_UNIVERSE,
        ExceptionalGroup::F4 => F4_UNIVERSE,
        ExceptionalGroup::E6 | ExceptionalGroup::TwistedE6 => E6_UNIVERSE,
        ExceptionalGroup::E7 => E7_UNIVERSE,
        ExceptionalGroup::E8 => E8_UNIVERSE,
        ExceptionalGroup::TripleD4 => TRIPLE_D4_UNIVERSE,
        ExceptionalGroup::Suzuki => SUZUKI_UNIVERSE,
    }
}

/// The labels degenerate at q = 2.
pub fn degenerate_labels(group: ExceptionalGroup) -> &'static [&'static str] {
    match group {
        ExceptionalGroup::G2 => G2_DEGENERATE,
        ExceptionalGroup::F4 => F4_DEGENERATE,
        ExceptionalGroup::E6 => E6_DEGENERATE,
        ExceptionalGroup::E7 => E7_DEGENERATE,
        ExceptionalGroup::E8 => E8_DEGENERATE,
        ExceptionalGroup::TwistedE6 => TWISTED_E6_DEGENERATE,
        ExceptionalGroup::TripleD4 => TRIPLE_D4_DEGENERATE,
        ExceptionalGroup::Suzuki => SUZUKI_DEGENERATE,
    }
}

/// The q values the table was computed at; everything above the family's
/// q-bound (which the tabulated ranges reach) is nondegenerate.
pub fn tabulated_q(group: ExceptionalGroup) -> &'static [u64] {
    match group {
        ExceptionalGroup::G2 => &[2, 3],
        ExceptionalGroup::F4 => &[2],
        ExceptionalGroup::E6 | ExceptionalGroup::TwistedE6 => &[2, 3, 4],
        ExceptionalGroup::E7 => &[2, 3],
        ExceptionalGroup::E8 => &[2],
        ExceptionalGroup::TripleD4 => &[2, 3, 4, 5],
        ExceptionalGroup::Suzuki => &[8],
    }
}

fn validate_q(group: ExceptionalGroup, q: u64) -> Result<()> {
    match group {
        ExceptionalGroup::Suzuki => {
            // q = 2^(2a+1) with a >= 1.
            match prime_power(q) {
                Some((2, k)) if k >= 3 && k % 2 == 1 => Ok(()),
                _ => Err(Error::parameter(format!(
                    "2B2 takes q = 2^(2a+1) with a >= 1, got {q}"
                ))),
            }
        }
        _ => {
            prime_power(q)
                .map(|_| ())
                .ok_or_else(|| Error::parameter(format!("q = {q} is not a prime power")))
        }
    }
}

/// Table lookup: degenerate exactly when q = 2 and the label is in the
/// group's degenerate list. Unknown labels are parameter errors.
pub fn classify_exceptional(
    group: ExceptionalGroup,
    label: &str,
    q: u64,
) -> Result<DegeneracyVerdict> {
    validate_q(group, q)?;
    if !label_universe(group).contains(&label) {
        return Err(Error::parameter(format!(
            "unknown class label {label:?} for {}",
            group.name()
        )));
    }
    let degenerate = q == 2 && degenerate_labels(group).contains(&label);
    Ok(DegeneracyVerdict {
        status: if degenerate {
            Status::Degenerate
        } else {
            Status::Nondegenerate
        },
        clauses: Default::default(),
        witness_roots: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_sizes_match_the_class_counts() {
        assert_eq!(label_universe(ExceptionalGroup::G2).len(), 6);
        assert_eq!(label_universe(ExceptionalGroup::F4).len(), 25);
        assert_eq!(label_universe(ExceptionalGroup::E6).len(), 25);
        assert_eq!(label_universe(ExceptionalGroup::E7).len(), 60);
        assert_eq!(label_universe(ExceptionalGroup::E8).len(), 112);
        assert_eq!(label_universe(ExceptionalGroup::TwistedE6).len(), 25);
        assert_eq!(label_universe(ExceptionalGroup::TripleD4).len(), 7);
        assert_eq!(label_universe(ExceptionalGroup::Suzuki).len(), 3);
    }

    #[test]
    fn universes_have_no_duplicates_and_contain_the_degenerate_labels() {
        for group in ExceptionalGroup::ALL {
            let universe = label_universe(group);
            let mut dedup: Vec<_> = universe.to_vec();
            dedup.sort_unstable();
            dedup.dedup();
            assert_eq!(dedup.len(), universe.len(), "{} has duplicates", group.name());
            for label in degenerate_labels(group) {
                assert!(
                    universe.contains(label),
                    "{}: degenerate label {label} not in universe",
                    group.name()
                );
            }
        }
    }

    #[test]
    fn degenerate_counts() {
        let expected = [
            (ExceptionalGroup::G2, 3),
            (ExceptionalGroup::F4, 14),
            (ExceptionalGroup::E6, 11),
            (ExceptionalGroup::E7, 33),
            (ExceptionalGroup::E8, 56),
            (ExceptionalGroup::TwistedE6, 11),
            (ExceptionalGroup::TripleD4, 2),
            (ExceptionalGroup::Suzuki, 0),
        ];
        let mut total = 0;
        for (g, n) in expected {
            assert_eq!(degenerate_labels(g).len(), n, "{}", g.name());
            total += n;
        }
        assert_eq!(total, 130);
    }

    #[test]
    fn lookup_examples() {
        assert!(classify_exceptional(ExceptionalGroup::G2, "Ã_1", 2)
            .unwrap()
            .is_degenerate());
        assert!(classify_exceptional(ExceptionalGroup::E8, "D_4^2", 2)
            .unwrap()
            .is_degenerate());
        assert!(!classify_exceptional(ExceptionalGroup::TripleD4, "(C_3)*", 3)
            .unwrap()
            .is_degenerate());
        assert!(!classify_exceptional(ExceptionalGroup::G2, "A_1", 3)
            .unwrap()
            .is_degenerate());
        assert!(!classify_exceptional(ExceptionalGroup::E7, "D_6", 4)
            .unwrap()
            .is_degenerate());
        assert!(classify_exceptional(ExceptionalGroup::E7, "no-such-label", 2).is_err());
        assert!(classify_exceptional(ExceptionalGroup::Suzuki, "w_a", 8).is_ok());
        assert!(classify_exceptional(ExceptionalGroup::Suzuki, "w_a", 4).is_err());
        assert!(classify_exceptional(ExceptionalGroup::Suzuki, "w_a", 2).is_err());
    }
}
