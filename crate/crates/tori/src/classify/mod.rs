//! The closed-form answer: for each torus class, does the full normalizer
//! exceed the algebraic normalizer?
//!
//! Classical families are decided by clause tests on the cycle type and q;
//! exceptional groups are decided by table lookup. The clause identifiers
//! name vanishing patterns after their symplectic exemplars:
//!
//! * `A1` — a difference root `a_i - a_j` vanishes in a linear or unitary
//!   family (two trivial 1-blocks at q = 2, or a unitary 2-block at q = 2,
//!   where q^2 - 1 = q + 1 forces the block's two eigenvalues equal),
//! * `Sp-a` / `Om-a` — difference-root vanishing from two positive 1-cycles,
//! * `Sp-b` / `Om-b` — sum-root vanishing from a positive 2-cycle (or the
//!   rank-2 odd-q coincidences),
//! * `Sp-c` — a single-coordinate root (`2a_i` symplectic, `a_i` odd
//!   orthogonal) vanishes.

mod exceptional;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

pub use exceptional::{
    classify_exceptional, degenerate_labels, label_universe, tabulated_q, ExceptionalGroup,
};

use crate::torus::{algebraic_normaliser_order, torus_factor_orders, TorusStructure};
use crate::weylclass::{enumerate_torus_classes, ClassicalFamily, TorusClassDescriptor};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Nondegenerate,
    Degenerate,
}

/// Clause identifiers; see the module docs for what each one detects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Clause {
    #[serde(rename = "A1")]
    A1,
    #[serde(rename = "Sp-a")]
    SpA,
    #[serde(rename = "Sp-b")]
    SpB,
    #[serde(rename = "Sp-c")]
    SpC,
    #[serde(rename = "Om-a")]
    OmA,
    #[serde(rename = "Om-b")]
    OmB,
}

impl Clause {
    pub fn name(self) -> &'static str {
        match self {
            Clause::A1 => "A1",
            Clause::SpA => "Sp-a",
            Clause::SpB => "Sp-b",
            Clause::SpC => "Sp-c",
            Clause::OmA => "Om-a",
            Clause::OmB => "Om-b",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An abstract root named by its shape on the diagonal torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WitnessRoot {
    /// a_i - a_j (value h_i^-1 h_j).
    Diff(u32, u32),
    /// a_i + a_j (value h_i h_j).
    Sum(u32, u32),
    /// a_i (value h_i; odd orthogonal short root).
    Single(u32),
    /// 2 a_i (value h_i^2; symplectic long root).
    Double(u32),
}

impl Serialize for WitnessRoot {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Display for WitnessRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessRoot::Diff(i, j) => write!(f, "a_{i}-a_{j}"),
            WitnessRoot::Sum(i, j) => write!(f, "a_{i}+a_{j}"),
            WitnessRoot::Single(i) => write!(f, "a_{i}"),
            WitnessRoot::Double(i) => write!(f, "2a_{i}"),
        }
    }
}

/// The verdict for one torus class. For classical classes, `status` is
/// `Degenerate` exactly when `clauses` (and `witness_roots`) are nonempty;
/// exceptional table rows carry no clause data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegeneracyVerdict {
    pub status: Status,
    pub clauses: BTreeSet<Clause>,
    pub witness_roots: Vec<WitnessRoot>,
}

impl DegeneracyVerdict {
    pub fn is_degenerate(&self) -> bool {
        self.status == Status::Degenerate
    }
}

/// 1-based offset of the first positive cycle of the given length in the
/// standard block layout (positive cycles ascending first).
fn block_offset_of_first_positive(d: &TorusClassDescriptor, len: u32) -> u32 {
    let mut offset = 1;
    for &p in d.cycle_type.positive() {
        if p == len {
            return offset;
        }
        offset += p;
    }
    unreachable!("caller checks the cycle exists")
}

/// Decides degeneracy for a classical descriptor.
///
/// The twisted linear family carries one clause beyond the headline
/// statements: at q = 2 a unitary block of length 2 has eigenvalue orders
/// dividing q^2 - 1 = q + 1, so its two diagonal slots agree identically and
/// the difference root between them vanishes. The matrix oracle (and a
/// brute-force normalizer run over SU_4(2)) confirms the full normalizer
/// strictly exceeds the algebraic one for such classes.
pub fn classify_classical(d: &TorusClassDescriptor) -> Result<DegeneracyVerdict> {
    let mut clauses = BTreeSet::new();
    let mut witnesses = Vec::new();
    let q = d.q;
    let ct = &d.cycle_type;
    match d.effective_family() {
        ClassicalFamily::A => {
            if q == 2 && ct.count_positive_ones() >= 2 {
                clauses.insert(Clause::A1);
                witnesses.push(WitnessRoot::Diff(1, 2));
            }
        }
        ClassicalFamily::TwistedA => {
            if q == 2 && ct.has_positive_cycle_of_length(2) {
                clauses.insert(Clause::A1);
                let j = block_offset_of_first_positive(d, 2);
                witnesses.push(WitnessRoot::Diff(j, j + 1));
            }
        }
        ClassicalFamily::C => {
            if q == 2 && ct.count_positive_ones() >= 2 {
                clauses.insert(Clause::SpA);
                witnesses.push(WitnessRoot::Diff(1, 2));
            }
            if q == 2 && ct.has_positive_cycle_of_length(2) {
                clauses.insert(Clause::SpB);
                let j = block_offset_of_first_positive(d, 2);
                witnesses.push(WitnessRoot::Sum(j, j + 1));
            }
            if (q == 2 || q == 3) && ct.count_positive_ones() >= 1 {
                clauses.insert(Clause::SpC);
                witnesses.push(WitnessRoot::Double(1));
            }
        }
        ClassicalFamily::B => {
            // Odd characteristic (the even case was rewritten to C above).
            // Degenerate only in the rank <= 2 cases reached with the
            // simple-range filter off.
            if q == 3 {
                if ct.positive() == [1, 1] && ct.negative().is_empty() {
                    clauses.insert(Clause::OmA);
                    witnesses.push(WitnessRoot::Diff(1, 2));
                    clauses.insert(Clause::OmB);
                    witnesses.push(WitnessRoot::Sum(1, 2));
                } else if ct.positive() == [2] && ct.negative().is_empty() {
                    clauses.insert(Clause::OmB);
                    witnesses.push(WitnessRoot::Sum(1, 2));
                } else if ct.positive() == [1] && ct.negative().is_empty() {
                    clauses.insert(Clause::SpC);
                    witnesses.push(WitnessRoot::Single(1));
                }
            }
        }
        ClassicalFamily::D | ClassicalFamily::TwistedD => {
            if d.characteristic() == 2 {
                if q == 2 && ct.count_positive_ones() >= 2 {
                    clauses.insert(Clause::OmA);
                    witnesses.push(WitnessRoot::Diff(1, 2));
                }
                if q == 2 && ct.has_positive_cycle_of_length(2) {
                    clauses.insert(Clause::OmB);
                    let j = block_offset_of_first_positive(d, 2);
                    witnesses.push(WitnessRoot::Sum(j, j + 1));
                }
            } else if q == 3 && d.effective_family() == ClassicalFamily::D {
                // Rank-2 cases below the simple range; the twisted family
                // cannot reach these types (odd negative-cycle count).
                if ct.positive() == [1, 1] && ct.negative().is_empty() {
                    clauses.insert(Clause::OmA);
                    witnesses.push(WitnessRoot::Diff(1, 2));
                    clauses.insert(Clause::OmB);
                    witnesses.push(WitnessRoot::Sum(1, 2));
                } else if ct.positive() == [2] && ct.negative().is_empty() {
                    clauses.insert(Clause::OmB);
                    witnesses.push(WitnessRoot::Sum(1, 2));
                }
            }
        }
    }
    let status = if clauses.is_empty() {
        Status::Nondegenerate
    } else {
        Status::Degenerate
    };
    witnesses.sort();
    witnesses.dedup();
    Ok(DegeneracyVerdict {
        status,
        clauses,
        witness_roots: witnesses,
    })
}

/// True when (family, n, q) parameterizes a simple group. The handful of
/// non-simple points inside the small-parameter region are where the
/// classification theorems do not apply (their tori can collapse into the
/// center, making every root vanish without any normalizer statement).
pub fn is_simple_group_parameter(family: ClassicalFamily, n: u32, q: u64) -> bool {
    if n < family.min_simple_n() {
        return false;
    }
    match family {
        ClassicalFamily::A => !(n == 2 && (q == 2 || q == 3)),
        ClassicalFamily::TwistedA => !(n == 3 && q == 2),
        // PSp_4(2)' is handled by the same clauses per the classification.
        _ => true,
    }
}

/// One row of a classical census.
#[derive(Debug, Clone, Serialize)]
pub struct ClassicalCensusRow {
    pub family: &'static str,
    pub n: u32,
    pub q: u64,
    pub class: String,
    #[serde(skip)]
    pub descriptor: TorusClassDescriptor,
    pub verdict: DegeneracyVerdict,
    pub torus: TorusStructure,
    pub algebraic_normaliser_order: Option<u64>,
}

/// Classifies every class of a family over rectangular (n, q) ranges.
pub fn census_classical(
    family: ClassicalFamily,
    n_range: (u32, u32),
    q_values: &[u64],
    simple_filter: bool,
) -> Result<Vec<ClassicalCensusRow>> {
    let mut rows = Vec::new();
    for n in n_range.0..=n_range.1 {
        for &q in q_values {
            for d in enumerate_torus_classes(family, n, q, simple_filter)? {
                rows.push(census_row(&d)?);
            }
        }
    }
    Ok(rows)
}

pub fn census_row(d: &TorusClassDescriptor) -> Result<ClassicalCensusRow> {
    let verdict = classify_classical(d)?;
    let torus = torus_factor_orders(d)?;
    let algebraic = algebraic_normaliser_order(d).ok();
    Ok(ClassicalCensusRow {
        family: d.family.name(),
        n: d.n,
        q: d.q,
        class: d.class_string(),
        descriptor: d.clone(),
        verdict,
        torus,
        algebraic_normaliser_order: algebraic,
    })
}

/// One row of the exceptional census.
#[derive(Debug, Clone, Serialize)]
pub struct ExceptionalCensusRow {
    pub group: &'static str,
    pub q: u64,
    pub label: &'static str,
    pub degenerate: bool,
}

/// Classifies every label of every exceptional group at every tabulated q.
/// Returns the rows plus the per-group degenerate counts in table order.
pub fn census_exceptional_all() -> (Vec<ExceptionalCensusRow>, Vec<(&'static str, u64)>, u64) {
    let mut rows = Vec::new();
    let mut counts = Vec::new();
    let mut total = 0u64;
    for group in ExceptionalGroup::ALL {
        let mut group_count = 0u64;
        for &q in tabulated_q(group) {
            for &label in label_universe(group) {
                let verdict = classify_exceptional(group, label, q)
                    .expect("universe labels and tabulated q are valid");
                let degenerate = verdict.is_degenerate();
                if degenerate {
                    group_count += 1;
                    total += 1;
                }
                rows.push(ExceptionalCensusRow {
                    group: group.name(),
                    q,
                    label,
                    degenerate,
                });
            }
        }
        counts.push((group.name(), group_count));
    }
    (rows, counts, total)
}

/// Census over a single exceptional group at one q.
pub fn census_exceptional_group(
    group: ExceptionalGroup,
    q: u64,
) -> Result<Vec<ExceptionalCensusRow>> {
    label_universe(group)
        .iter()
        .map(|&label| {
            classify_exceptional(group, label, q).map(|v| ExceptionalCensusRow {
                group: group.name(),
                q,
                label,
                degenerate: v.is_degenerate(),
            })
        })
        .collect()
}

/// Guard used by CLI paths: classical families must not be routed to the
/// exceptional classifier and vice versa.
pub fn reject_exceptional_family(name: &str) -> Result<()> {
    if ExceptionalGroup::parse(name).is_ok() {
        return Err(Error::parameter(format!(
            "{name} is an exceptional group; use the exceptional classifier"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylclass::SignedCycleType;

    fn desc(
        family: ClassicalFamily,
        n: u32,
        q: u64,
        pos: &[u32],
        neg: &[u32],
    ) -> TorusClassDescriptor {
        TorusClassDescriptor::new(
            family,
            n,
            q,
            SignedCycleType::new(pos.to_vec(), neg.to_vec()).unwrap(),
            None,
        )
        .unwrap()
    }

    #[test]
    fn linear_clause_fires_at_q2_with_two_unit_parts() {
        let v = classify_classical(&desc(ClassicalFamily::A, 4, 2, &[1, 1, 2], &[])).unwrap();
        assert!(v.is_degenerate());
        assert_eq!(v.clauses.iter().copied().collect::<Vec<_>>(), vec![Clause::A1]);
        assert_eq!(v.witness_roots, vec![WitnessRoot::Diff(1, 2)]);

        let v = classify_classical(&desc(ClassicalFamily::A, 4, 3, &[1, 1, 2], &[])).unwrap();
        assert!(!v.is_degenerate());
        let v = classify_classical(&desc(ClassicalFamily::A, 4, 2, &[1, 3], &[])).unwrap();
        assert!(!v.is_degenerate());
    }

    #[test]
    fn symplectic_clauses() {
        // (C, n=3, q=3, (1)(2-)): only Sp-c.
        let v = classify_classical(&desc(ClassicalFamily::C, 3, 3, &[1], &[2])).unwrap();
        assert!(v.is_degenerate());
        assert_eq!(v.clauses.iter().copied().collect::<Vec<_>>(), vec![Clause::SpC]);
        assert_eq!(v.witness_roots, vec![WitnessRoot::Double(1)]);

        // (C, n=3, q=2, (1)(2)): Sp-b and Sp-c.
        let v = classify_classical(&desc(ClassicalFamily::C, 3, 2, &[1, 2], &[])).unwrap();
        let clauses: Vec<_> = v.clauses.iter().copied().collect();
        assert_eq!(clauses, vec![Clause::SpB, Clause::SpC]);
        // The 2-cycle sits after the single 1-cycle: offset j = 2.
        assert!(v.witness_roots.contains(&WitnessRoot::Sum(2, 3)));

        // Sp-a implies Sp-c at q=2: both reported.
        let v = classify_classical(&desc(ClassicalFamily::C, 2, 2, &[1, 1], &[])).unwrap();
        let clauses: Vec<_> = v.clauses.iter().copied().collect();
        assert_eq!(clauses, vec![Clause::SpA, Clause::SpC]);
    }

    #[test]
    fn unitary_is_nondegenerate_except_the_two_block_coincidence() {
        let v =
            classify_classical(&desc(ClassicalFamily::TwistedA, 4, 2, &[1, 1, 2], &[])).unwrap();
        assert!(v.is_degenerate());
        assert_eq!(v.witness_roots, vec![WitnessRoot::Diff(3, 4)]);

        for (pos, q) in [(vec![1, 1, 2], 3u64), (vec![1, 3], 2), (vec![4], 2), (vec![1, 1, 1, 1], 2)]
        {
            let v = classify_classical(&desc(
                ClassicalFamily::TwistedA,
                pos.iter().sum(),
                q,
                &pos,
                &[],
            ))
            .unwrap();
            assert!(!v.is_degenerate(), "2A {:?} q={}", pos, q);
        }
    }

    #[test]
    fn twisted_d_reads_the_w0w_type() {
        // (2D, n=4, q=2, w0w of type (2)(2-)): positive 2-cycle present.
        let v = classify_classical(&desc(ClassicalFamily::TwistedD, 4, 2, &[2], &[2])).unwrap();
        assert!(v.is_degenerate());
        assert!(v.clauses.contains(&Clause::OmB));
        assert_eq!(v.witness_roots, vec![WitnessRoot::Sum(1, 2)]);

        let v = classify_classical(&desc(ClassicalFamily::TwistedD, 4, 2, &[1], &[3])).unwrap();
        assert!(!v.is_degenerate());
    }

    #[test]
    fn odd_q_orthogonal_rank_two_cases() {
        let v = classify_classical(&desc(ClassicalFamily::D, 2, 3, &[1, 1], &[])).unwrap();
        assert!(v.is_degenerate());
        assert!(v.clauses.contains(&Clause::OmA) && v.clauses.contains(&Clause::OmB));

        let v = classify_classical(&desc(ClassicalFamily::D, 2, 3, &[2], &[])).unwrap();
        assert_eq!(v.clauses.iter().copied().collect::<Vec<_>>(), vec![Clause::OmB]);

        let v = classify_classical(&desc(ClassicalFamily::D, 2, 5, &[1, 1], &[])).unwrap();
        assert!(!v.is_degenerate());

        let v = classify_classical(&desc(ClassicalFamily::B, 1, 3, &[1], &[])).unwrap();
        assert!(v.is_degenerate());
        assert_eq!(v.witness_roots, vec![WitnessRoot::Single(1)]);

        // In the simple range odd-q orthogonal classes never degenerate.
        let v = classify_classical(&desc(ClassicalFamily::D, 4, 3, &[1, 1, 2], &[])).unwrap();
        assert!(!v.is_degenerate());
        let v = classify_classical(&desc(ClassicalFamily::B, 3, 3, &[1, 1, 1], &[])).unwrap();
        assert!(!v.is_degenerate());
    }

    #[test]
    fn characteristic_two_b_classifies_as_c() {
        let b = classify_classical(&desc(ClassicalFamily::B, 3, 2, &[1, 2], &[])).unwrap();
        let c = classify_classical(&desc(ClassicalFamily::C, 3, 2, &[1, 2], &[])).unwrap();
        assert_eq!(b, c);
        // And at q = 8 > q_bound there is nothing degenerate.
        let b8 = classify_classical(&desc(ClassicalFamily::B, 3, 8, &[1, 1, 1], &[])).unwrap();
        assert!(!b8.is_degenerate());
    }

    #[test]
    fn clause_witness_invariant() {
        for fam in [
            ClassicalFamily::A,
            ClassicalFamily::TwistedA,
            ClassicalFamily::C,
        ] {
            for n in fam.min_simple_n()..=5 {
                for q in [2u64, 3, 4, 5] {
                    for d in enumerate_torus_classes(fam, n, q, true).unwrap() {
                        let v = classify_classical(&d).unwrap();
                        assert_eq!(v.is_degenerate(), !v.clauses.is_empty());
                        assert_eq!(v.is_degenerate(), !v.witness_roots.is_empty());
                    }
                }
            }
        }
    }

    #[test]
    fn census_c3_q2_has_six_degenerate_of_ten() {
        let rows = census_classical(ClassicalFamily::C, (3, 3), &[2], true).unwrap();
        assert_eq!(rows.len(), 10);
        let degenerate = rows.iter().filter(|r| r.verdict.is_degenerate()).count();
        assert_eq!(degenerate, 6);
    }

    #[test]
    fn split_classes_share_the_verdict() {
        let rows = census_classical(ClassicalFamily::D, (4, 4), &[2], true).unwrap();
        for pair in rows.chunks(1) {
            let _ = pair;
        }
        let split_rows: Vec<_> = rows
            .iter()
            .filter(|r| r.class.starts_with("(2)(2)"))
            .collect();
        assert_eq!(split_rows.len(), 2);
        assert_eq!(split_rows[0].verdict, split_rows[1].verdict);
    }

    #[test]
    fn simple_parameter_filter() {
        assert!(!is_simple_group_parameter(ClassicalFamily::A, 2, 2));
        assert!(!is_simple_group_parameter(ClassicalFamily::A, 2, 3));
        assert!(is_simple_group_parameter(ClassicalFamily::A, 2, 4));
        assert!(!is_simple_group_parameter(ClassicalFamily::TwistedA, 3, 2));
        assert!(is_simple_group_parameter(ClassicalFamily::TwistedA, 4, 2));
        assert!(is_simple_group_parameter(ClassicalFamily::C, 2, 2));
        assert!(!is_simple_group_parameter(ClassicalFamily::D, 3, 2));
    }
}
