//! Finite matrix groups given by generators and a membership predicate,
//! enumerated by breadth-first closure.
//!
//! Elements are stored as canonical 64-bit encodings, which covers the whole
//! enumeration tier (GF(2) up to 8x8, GF(3)/GF(4) 4x4, GF(2) 6x6). Larger
//! groups are deliberately out of range and fail with a budget error.

use std::collections::HashSet;
use std::sync::Arc;

use super::field::{field, FieldElt, FieldSpec};
use super::matrix::GFMatrix;
use crate::{Error, Result};

/// What it means to belong to the group (used to sanity-check generators).
#[derive(Debug, Clone)]
pub enum Membership {
    /// SL_n: determinant one.
    DeterminantOne,
    /// Preserves the bilinear form with this Gram matrix (symplectic or
    /// odd-orthogonal).
    FormPreserving { gram: GFMatrix },
    /// Characteristic-2 orthogonal: preserves the polarization Gram, fixes
    /// the quadratic form (recorded by its index pairing), and has even
    /// Dickson invariant.
    FormPreservingDicksonEven { gram: GFMatrix },
}

/// A finite matrix group presented by generators.
#[derive(Debug, Clone)]
pub struct GroupSpec {
    pub name: String,
    pub dim: usize,
    pub field: Arc<FieldSpec>,
    pub membership: Membership,
    pub generators: Vec<GFMatrix>,
}

impl GroupSpec {
    /// Checks one matrix against the membership predicate.
    pub fn is_member(&self, m: &GFMatrix) -> bool {
        match &self.membership {
            Membership::DeterminantOne => m.det() == 1,
            Membership::FormPreserving { gram } => {
                m.transpose().mul(gram).mul(m) == *gram
            }
            Membership::FormPreservingDicksonEven { gram } => {
                if m.transpose().mul(gram).mul(m) != *gram {
                    return false;
                }
                let n = self.dim / 2;
                let f = &m.field;
                // Quadratic form sum_i x_i x_{-i}: columns must have Q = 0.
                for col in 0..self.dim {
                    let mut q: FieldElt = 0;
                    for i in 0..n {
                        q = f.add(q, f.mul(m.get(i, col), m.get(n + i, col)));
                    }
                    if q != 0 {
                        return false;
                    }
                }
                super::matrix::dickson_even(m)
            }
        }
    }
}

/// An enumerated group: every element as a canonical 64-bit code.
#[derive(Debug)]
pub struct GroupHandle {
    pub spec: GroupSpec,
    pub codes: HashSet<u64>,
    bits: u32,
}

impl GroupHandle {
    pub fn order(&self) -> u64 {
        self.codes.len() as u64
    }

    pub fn contains(&self, m: &GFMatrix) -> bool {
        match m.encode_u64() {
            Some(c) => self.codes.contains(&c),
            None => false,
        }
    }

    pub fn decode(&self, code: u64) -> GFMatrix {
        let dim = self.spec.dim;
        let mask = (1u64 << self.bits) - 1;
        let mut data = vec![0 as FieldElt; dim * dim];
        let mut c = code;
        for i in (0..dim * dim).rev() {
            data[i] = (c & mask) as FieldElt;
            c >>= self.bits;
        }
        GFMatrix {
            rows: dim,
            cols: dim,
            data,
            field: self.spec.field.clone(),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = GFMatrix> + '_ {
        self.codes.iter().map(move |&c| self.decode(c))
    }

    /// Derived subgroup by commutator closure over all element pairs.
    pub fn derived_subgroup(&self, budget: usize) -> Result<GroupHandle> {
        let elems: Vec<GFMatrix> = self.elements().collect();
        let inverses: Vec<GFMatrix> =
            elems.iter().map(|m| m.inverse().expect("group element")).collect();
        let mut commutators: Vec<GFMatrix> = Vec::new();
        let mut seen = HashSet::new();
        for (g, gi) in elems.iter().zip(&inverses) {
            for (h, hi) in elems.iter().zip(&inverses) {
                let c = g.mul(h).mul(gi).mul(hi);
                if seen.insert(c.encode_u64().expect("fits by construction")) {
                    commutators.push(c);
                }
            }
        }
        let spec = GroupSpec {
            name: format!("{}'", self.spec.name),
            generators: commutators,
            ..self.spec.clone()
        };
        enumerate_group(&spec, budget)
    }
}

/// Breadth-first closure of the generators. Errors when the group exceeds
/// `budget` elements or the encoding does not fit in 64 bits.
pub fn enumerate_group(spec: &GroupSpec, budget: usize) -> Result<GroupHandle> {
    let bits = 64 - (spec.field.q - 1).leading_zeros();
    if spec.dim * spec.dim * bits as usize > 64 {
        return Err(Error::budget(format!(
            "{}x{} matrices over GF({}) do not fit the 64-bit element encoding",
            spec.dim, spec.dim, spec.field.q
        )));
    }
    for g in &spec.generators {
        if !spec.is_member(g) {
            return Err(Error::verification(format!(
                "generator violates the membership predicate of {}",
                spec.name
            )));
        }
    }
    let id = GFMatrix::identity(spec.field.clone(), spec.dim);
    let mut codes = HashSet::new();
    codes.insert(id.encode_u64().unwrap());
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in &spec.generators {
            let y = x.mul(g);
            let code = y.encode_u64().unwrap();
            if codes.insert(code) {
                if codes.len() > budget {
                    return Err(Error::budget(format!(
                        "group {} exceeds enumeration budget {} (partial count {})",
                        spec.name,
                        budget,
                        codes.len()
                    )));
                }
                frontier.push(y);
            }
        }
    }
    Ok(GroupHandle {
        spec: spec.clone(),
        codes,
        bits,
    })
}

/// Order of the normalizer of the subgroup generated by `subgroup_gens`
/// inside the enumerated group: counts g with g S g^-1 = S.
pub fn subgroup_normalizer_order(group: &GroupHandle, subgroup_gens: &[GFMatrix]) -> Result<u64> {
    let sub = enumerate_subgroup(group, subgroup_gens)?;
    let gens: Vec<GFMatrix> = subgroup_gens.to_vec();
    let mut count = 0u64;
    for g in group.elements() {
        let gi = g.inverse().expect("group element");
        if gens.iter().all(|s| {
            let conj = g.mul(s).mul(&gi);
            sub.contains(&conj.encode_u64().expect("fits"))
        }) {
            count += 1;
        }
    }
    Ok(count)
}

/// Normalizer order for a subgroup given as an explicit element list (no
/// generating-set assumption).
pub fn subgroup_normalizer_order_set(
    group: &GroupHandle,
    elements: &[GFMatrix],
) -> Result<u64> {
    let codes: HashSet<u64> = elements
        .iter()
        .map(|m| {
            m.encode_u64()
                .ok_or_else(|| Error::budget("subgroup element exceeds the 64-bit encoding"))
        })
        .collect::<Result<_>>()?;
    let mut count = 0u64;
    for g in group.elements() {
        let gi = g.inverse().expect("group element");
        if elements
            .iter()
            .all(|s| codes.contains(&g.mul(s).mul(&gi).encode_u64().expect("fits")))
        {
            count += 1;
        }
    }
    Ok(count)
}

/// Closure of a generator list into a full element list, independent of any
/// enumerated ambient group.
pub fn close_matrices(
    field: &Arc<FieldSpec>,
    dim: usize,
    gens: &[GFMatrix],
    cap: usize,
) -> Result<Vec<GFMatrix>> {
    let id = GFMatrix::identity(field.clone(), dim);
    let mut seen: HashSet<u64> = HashSet::new();
    seen.insert(
        id.encode_u64()
            .ok_or_else(|| Error::budget("matrix exceeds the 64-bit encoding"))?,
    );
    let mut out = vec![id.clone()];
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.mul(g);
            let code = y
                .encode_u64()
                .ok_or_else(|| Error::budget("matrix exceeds the 64-bit encoding"))?;
            if seen.insert(code) {
                if seen.len() > cap {
                    return Err(Error::budget("subgroup closure exceeds cap"));
                }
                out.push(y.clone());
                frontier.push(y);
            }
        }
    }
    Ok(out)
}

/// Order of the centralizer of the generated subgroup.
pub fn subgroup_centralizer_order(group: &GroupHandle, subgroup_gens: &[GFMatrix]) -> u64 {
    group
        .elements()
        .filter(|g| subgroup_gens.iter().all(|s| g.commutes_with(s)))
        .count() as u64
}

/// Enumerates the subgroup generated by the given matrices, as codes.
pub fn enumerate_subgroup(group: &GroupHandle, gens: &[GFMatrix]) -> Result<HashSet<u64>> {
    for g in gens {
        if !group.contains(g) {
            return Err(Error::verification(
                "subgroup generator lies outside the enumerated group",
            ));
        }
    }
    let id = GFMatrix::identity(group.spec.field.clone(), group.spec.dim);
    let mut codes = HashSet::new();
    codes.insert(id.encode_u64().unwrap());
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.mul(g);
            if codes.insert(y.encode_u64().unwrap()) {
                frontier.push(y);
            }
        }
    }
    Ok(codes)
}

/// A GF(p)-spanning set of the field: 1, g, g^2, ..., g^(k-1).
fn field_basis(f: &Arc<FieldSpec>) -> Vec<FieldElt> {
    let g = f.primitive_element();
    let mut out = Vec::with_capacity(f.k as usize);
    let mut acc: FieldElt = 1;
    for _ in 0..f.k {
        out.push(acc);
        acc = f.mul(acc, g);
    }
    out
}

/// SL_n(q), generated by the elementary transvections E + t e_{i,i+1} and
/// E + t e_{i+1,i} for t in a field basis.
pub fn sl_group(n: usize, q: u64) -> Result<GroupSpec> {
    let f = field(q)?;
    let mut generators = Vec::new();
    for i in 0..n - 1 {
        for &t in &field_basis(&f) {
            for (r, c) in [(i, i + 1), (i + 1, i)] {
                let mut m = GFMatrix::identity(f.clone(), n);
                m.set(r, c, t);
                generators.push(m);
            }
        }
    }
    Ok(GroupSpec {
        name: format!("SL{n}({q})"),
        dim: n,
        field: f,
        membership: Membership::DeterminantOne,
        generators,
    })
}

/// Gram matrix of the standard symplectic form in the (1..n, -1..-n) row
/// order: J[i, n+i] = 1, J[n+i, i] = -1.
pub fn symplectic_gram(f: &Arc<FieldSpec>, n: usize) -> GFMatrix {
    let mut j = GFMatrix::zero(f.clone(), 2 * n, 2 * n);
    for i in 0..n {
        j.set(i, n + i, 1);
        j.set(n + i, i, f.neg(1));
    }
    j
}

/// The symplectic root elements x_alpha(t) in the paper's coordinates,
/// for all roots of C_n and the given t. Indices i < j are 1-based.
pub fn symplectic_root_elements(f: &Arc<FieldSpec>, n: usize, t: FieldElt) -> Vec<GFMatrix> {
    let mut out = Vec::new();
    let idx = |signed: i64| -> usize {
        if signed > 0 {
            (signed - 1) as usize
        } else {
            n + (-signed - 1) as usize
        }
    };
    let mut push = |entries: &[(i64, i64, bool)]| {
        let mut m = GFMatrix::identity(f.clone(), 2 * n);
        for &(r, c, minus) in entries {
            let v = if minus { f.neg(t) } else { t };
            m.set(idx(r), idx(c), v);
        }
        out.push(m);
    };
    for i in 1..=n as i64 {
        for j in (i + 1)..=n as i64 {
            // a_i - a_j and its negative.
            push(&[(i, j, false), (-j, -i, true)]);
            push(&[(-i, -j, true), (j, i, false)]);
            // a_i + a_j and its negative. The paired entries carry the same
            // sign here: the symmetric version preserves the alternating
            // form (the antisymmetric one belongs to the orthogonal family;
            // the two coincide in characteristic 2).
            push(&[(i, -j, false), (j, -i, false)]);
            push(&[(-i, j, false), (-j, i, false)]);
        }
        // 2 a_i and its negative.
        push(&[(i, -i, false)]);
        push(&[(-i, i, false)]);
    }
    out
}

/// Sp_2n(q), generated by the root elements over a field basis.
pub fn sp_group(n: usize, q: u64) -> Result<GroupSpec> {
    let f = field(q)?;
    let mut generators = Vec::new();
    for &t in &field_basis(&f) {
        generators.extend(symplectic_root_elements(&f, n, t));
    }
    Ok(GroupSpec {
        name: format!("Sp{}({q})", 2 * n),
        dim: 2 * n,
        field: f.clone(),
        membership: Membership::FormPreserving {
            gram: symplectic_gram(&f, n),
        },
        generators,
    })
}

/// The split orthogonal root elements (type D_n, quadratic form
/// sum x_i x_{-i}) for all roots and the given t.
pub fn orthogonal_root_elements(f: &Arc<FieldSpec>, n: usize, t: FieldElt) -> Vec<GFMatrix> {
    let mut out = Vec::new();
    let idx = |signed: i64| -> usize {
        if signed > 0 {
            (signed - 1) as usize
        } else {
            n + (-signed - 1) as usize
        }
    };
    let mut push = |entries: &[(i64, i64, bool)]| {
        let mut m = GFMatrix::identity(f.clone(), 2 * n);
        for &(r, c, minus) in entries {
            let v = if minus { f.neg(t) } else { t };
            m.set(idx(r), idx(c), v);
        }
        out.push(m);
    };
    for i in 1..=n as i64 {
        for j in (i + 1)..=n as i64 {
            push(&[(i, j, false), (-j, -i, true)]);
            push(&[(-i, -j, true), (j, i, false)]);
            push(&[(i, -j, false), (j, -i, true)]);
            push(&[(-i, j, true), (-j, i, false)]);
        }
    }
    out
}

/// Omega_2n^+(2^a): the characteristic-2 split orthogonal group, generated
/// by the D_n root elements.
pub fn omega_plus_group(n: usize, q: u64) -> Result<GroupSpec> {
    let f = field(q)?;
    if f.p != 2 {
        return Err(Error::parameter(
            "omega_plus_group models the characteristic-2 case only",
        ));
    }
    let mut generators = Vec::new();
    for &t in &field_basis(&f) {
        generators.extend(orthogonal_root_elements(&f, n, t));
    }
    Ok(GroupSpec {
        name: format!("Omega{}+({q})", 2 * n),
        dim: 2 * n,
        field: f.clone(),
        membership: Membership::FormPreservingDicksonEven {
            gram: symplectic_gram(&f, n),
        },
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl3_2_has_order_168() {
        let g = enumerate_group(&sl_group(3, 2).unwrap(), 10_000).unwrap();
        assert_eq!(g.order(), 168);
    }

    #[test]
    fn sl3_2_from_two_standard_generators() {
        let f = field(2).unwrap();
        let mut x = GFMatrix::identity(f.clone(), 3);
        x.set(0, 1, 1);
        let mut y = GFMatrix::zero(f.clone(), 3, 3);
        y.set(0, 2, 1);
        y.set(1, 0, 1);
        y.set(2, 1, 1);
        let spec = GroupSpec {
            name: "SL3(2)".into(),
            dim: 3,
            field: f,
            membership: Membership::DeterminantOne,
            generators: vec![x, y],
        };
        assert_eq!(enumerate_group(&spec, 10_000).unwrap().order(), 168);
    }

    #[test]
    fn symplectic_group_orders() {
        let g = enumerate_group(&sp_group(2, 2).unwrap(), 10_000).unwrap();
        assert_eq!(g.order(), 720);
        let g = enumerate_group(&sp_group(2, 3).unwrap(), 100_000).unwrap();
        assert_eq!(g.order(), 51840);
    }

    #[test]
    fn classical_order_formulas() {
        // |SL_n(q)| = q^(n(n-1)/2) prod_{i=2..n} (q^i - 1).
        let sl_order = |n: u32, q: u64| -> u64 {
            let mut o = q.pow(n * (n - 1) / 2);
            for i in 2..=n {
                o *= q.pow(i) - 1;
            }
            o
        };
        assert_eq!(
            enumerate_group(&sl_group(4, 2).unwrap(), 100_000).unwrap().order(),
            sl_order(4, 2)
        );
        assert_eq!(
            enumerate_group(&sl_group(3, 3).unwrap(), 100_000).unwrap().order(),
            sl_order(3, 3)
        );
        // |Sp_2n(q)| = q^(n^2) prod_{i=1..n} (q^2i - 1).
        let sp_order = |n: u32, q: u64| -> u64 {
            let mut o = q.pow(n * n);
            for i in 1..=n {
                o *= q.pow(2 * i) - 1;
            }
            o
        };
        assert_eq!(
            enumerate_group(&sp_group(2, 2).unwrap(), 10_000).unwrap().order(),
            sp_order(2, 2)
        );
        assert_eq!(
            enumerate_group(&omega_plus_group(3, 2).unwrap(), 100_000)
                .unwrap()
                .order(),
            20160 // Omega_6^+(2), isomorphic to SL_4(2)
        );
    }

    #[test]
    fn generators_preserve_their_forms() {
        for (n, q) in [(2usize, 2u64), (2, 3), (3, 2)] {
            let spec = sp_group(n, q).unwrap();
            for g in &spec.generators {
                assert!(spec.is_member(g));
            }
        }
        let spec = omega_plus_group(3, 2).unwrap();
        for g in &spec.generators {
            assert!(spec.is_member(g));
        }
    }

    #[test]
    fn normalizer_of_trivial_subgroup_is_the_whole_group() {
        let g = enumerate_group(&sl_group(3, 2).unwrap(), 10_000).unwrap();
        assert_eq!(subgroup_normalizer_order(&g, &[]).unwrap(), 168);
    }

    #[test]
    fn budget_errors() {
        let err = enumerate_group(&sp_group(2, 3).unwrap(), 100).unwrap_err();
        assert!(matches!(err, Error::Budget(_)));
        // 5x5 over GF(16) does not fit the 64-bit encoding.
        let err = enumerate_group(
            &GroupSpec {
                name: "big".into(),
                dim: 5,
                field: field(16).unwrap(),
                membership: Membership::DeterminantOne,
                generators: vec![],
            },
            100,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Budget(_)));
    }

    #[test]
    fn derived_subgroup_of_sp4_2_has_index_2() {
        let g = enumerate_group(&sp_group(2, 2).unwrap(), 10_000).unwrap();
        let d = g.derived_subgroup(10_000).unwrap();
        assert_eq!(d.order(), 360);
    }
}
