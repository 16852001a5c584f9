//! The independent oracle: realize each torus as explicit matrices, evaluate
//! root values on it, confirm the classifier's witnesses, and — in ambient
//! groups small enough to enumerate — compute normalizers by brute force.
//!
//! Two realizations are used. The *diagonal* realization places the torus
//! inside the diagonal subgroup over an extension GF(q^L); root values are
//! then literal products of diagonal entries, which is what
//! [`vanishing_roots`] evaluates. The *in-group* realization transports the
//! same torus into matrices over GF(q) itself (companion blocks for the
//! cyclic factors), which is what the brute-force normalizer runs on.

use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::classify::{classify_classical, Clause, WitnessRoot};
use crate::gfmat::{
    element_of_order, enumerate_group, field, sl_group, sp_group, FieldElt, FieldSpec, GFMatrix,
    GroupHandle,
};
use crate::torus::{torus_factor_orders, Constraint, TorusStructure};
use crate::weylclass::{
    centralizer_order, standard_representative, ClassicalFamily, SignedPermutation,
    TorusClassDescriptor,
};
use crate::{Error, Result};

const MAX_MATRIX_DIM: usize = 64;
const TUPLE_ENUM_CAP: u64 = 2_000_000;

/// Positions and sizes of the cycle blocks in the standard layout.
#[derive(Debug, Clone, Copy)]
struct CycleBlock {
    /// 1-based offset of the block among the coordinates 1..n.
    offset: u32,
    len: u32,
    sign: i8,
}

fn cycle_blocks(d: &TorusClassDescriptor) -> Vec<CycleBlock> {
    let mut out = Vec::new();
    let mut offset = 1;
    for (len, sign) in d.cycle_type.cycles() {
        out.push(CycleBlock { offset, len, sign });
        offset += len;
    }
    out
}

/// Extension degree needed so every eigenvalue order divides q^L - 1.
fn ambient_degree(d: &TorusClassDescriptor) -> u32 {
    let unitary = d.effective_family() == ClassicalFamily::TwistedA;
    let mut l = 1u32;
    for (len, sign) in d.cycle_type.cycles() {
        let need = if unitary {
            if len % 2 == 0 {
                len
            } else {
                2 * len
            }
        } else if sign > 0 {
            len
        } else {
            2 * len
        };
        l = num_integer::lcm(l, need);
    }
    l
}

fn matrix_dim(d: &TorusClassDescriptor) -> usize {
    let n = d.n as usize;
    match d.effective_family() {
        ClassicalFamily::A | ClassicalFamily::TwistedA => n,
        ClassicalFamily::B => 2 * n + 1,
        _ => 2 * n,
    }
}

/// A torus realized as diagonal matrices over GF(q^L).
pub struct TorusRealization {
    pub descriptor: TorusClassDescriptor,
    pub ambient_field: Arc<FieldSpec>,
    pub structure: TorusStructure,
    /// One generator per cyclic factor.
    pub generators: Vec<GFMatrix>,
    /// Generators of the intersection with the simple group.
    pub intersected_generators: Vec<GFMatrix>,
    /// Diagonal profiles (h_1..h_n) of the intersected generators.
    intersected_profiles: Vec<Vec<FieldElt>>,
}

impl TorusRealization {
    pub fn intersected_profiles(&self) -> &[Vec<FieldElt>] {
        &self.intersected_profiles
    }
}

/// Diagonal profile (h_1..h_n) of the factor generator `u_i` with eigenvalue
/// `lambda`: identity outside block i.
fn factor_profile(
    f: &Arc<FieldSpec>,
    d: &TorusClassDescriptor,
    blocks: &[CycleBlock],
    i: usize,
    lambda: FieldElt,
    lambda_order: u64,
) -> Vec<FieldElt> {
    let n = d.n as usize;
    let q = d.q as i128;
    let unitary = d.effective_family() == ClassicalFamily::TwistedA;
    let mut h = vec![1 as FieldElt; n];
    let b = blocks[i];
    for j in 0..b.len {
        let exp: i128 = if unitary {
            // (-q)^j mod the eigenvalue order.
            let mut e: i128 = 1;
            for _ in 0..j {
                e = (e * (-q)).rem_euclid(lambda_order as i128);
            }
            e
        } else {
            let mut e: i128 = 1;
            for _ in 0..j {
                e = (e * q).rem_euclid(lambda_order as i128);
            }
            e
        };
        h[(b.offset - 1 + j) as usize] = f.pow(lambda, exp as i64);
    }
    h
}

/// Builds the full diagonal matrix from an h-profile, mirroring into the
/// paired coordinates for the signed families.
fn profile_to_matrix(
    f: &Arc<FieldSpec>,
    d: &TorusClassDescriptor,
    h: &[FieldElt],
) -> GFMatrix {
    let n = d.n as usize;
    match d.effective_family() {
        ClassicalFamily::A | ClassicalFamily::TwistedA => GFMatrix::diagonal(f.clone(), h),
        ClassicalFamily::B => {
            let mut entries = Vec::with_capacity(2 * n + 1);
            entries.push(1);
            entries.extend_from_slice(h);
            for &x in h {
                entries.push(f.inv(x).expect("torus entries are units"));
            }
            GFMatrix::diagonal(f.clone(), &entries)
        }
        _ => {
            let mut entries = Vec::with_capacity(2 * n);
            entries.extend_from_slice(h);
            for &x in h {
                entries.push(f.inv(x).expect("torus entries are units"));
            }
            GFMatrix::diagonal(f.clone(), &entries)
        }
    }
}

fn combine_profiles(f: &Arc<FieldSpec>, profiles: &[Vec<FieldElt>], exps: &[u64]) -> Vec<FieldElt> {
    let n = profiles[0].len();
    let mut out = vec![1 as FieldElt; n];
    for (p, &e) in profiles.iter().zip(exps) {
        if e == 0 {
            continue;
        }
        for k in 0..n {
            out[k] = f.mul(out[k], f.pow(p[k], e as i64));
        }
    }
    out
}

/// Enumerates the subgroup of the exponent group sum Z/d_i generated by the
/// given tuples (componentwise addition mod d_i).
fn tuple_subgroup(gens: &[Vec<u64>], d: &[u64], cap: u64) -> Result<Vec<Vec<u64>>> {
    let zero = vec![0u64; d.len()];
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    seen.insert(zero.clone());
    let mut frontier = vec![zero];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y: Vec<u64> = x
                .iter()
                .zip(g)
                .zip(d)
                .map(|((&a, &b), &m)| (a + b) % m)
                .collect();
            if seen.insert(y.clone()) {
                if seen.len() as u64 > cap {
                    return Err(Error::budget("exponent-group enumeration exceeds cap"));
                }
                frontier.push(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Greedy generating set for a subgroup given as an element list.
fn greedy_generators(elements: &[Vec<u64>], d: &[u64]) -> Vec<Vec<u64>> {
    let mut sorted = elements.to_vec();
    sorted.sort();
    let mut gens: Vec<Vec<u64>> = Vec::new();
    let mut span: HashSet<Vec<u64>> = HashSet::new();
    span.insert(vec![0u64; d.len()]);
    for e in sorted {
        if span.contains(&e) {
            continue;
        }
        gens.push(e.clone());
        let closure = tuple_subgroup(&gens, d, TUPLE_ENUM_CAP).expect("bounded by parent");
        span = closure.into_iter().collect();
        if span.len() == elements.len() {
            break;
        }
    }
    gens
}

/// Exponent tuples of the determinant kernel: tuples k with
/// sum k_i * det_log_i = 0 mod `modulus`, where det_log_i is the discrete
/// log of the determinant of the i-th factor generator.
fn det_kernel_tuples(d: &[u64], det_logs: &[u64], modulus: u64) -> Result<Vec<Vec<u64>>> {
    let total: u64 = d.iter().product();
    if total > TUPLE_ENUM_CAP {
        return Err(Error::budget(
            "determinant-kernel enumeration exceeds the desk-scale cap",
        ));
    }
    let mut out = Vec::new();
    let mut tuple = vec![0u64; d.len()];
    loop {
        let s: u128 = tuple
            .iter()
            .zip(det_logs)
            .map(|(&k, &l)| k as u128 * l as u128)
            .sum();
        if s % modulus as u128 == 0 {
            out.push(tuple.clone());
        }
        let mut i = 0;
        loop {
            if i == d.len() {
                return Ok(out);
            }
            tuple[i] += 1;
            if tuple[i] < d[i] {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
}

/// Realizes the torus of a descriptor as diagonal matrices over GF(q^L),
/// with generators of exact factor orders and intersected generators
/// implementing the determinant-kernel or even-exponent-sum constraint.
/// Generated orders are verified against the abstract structure.
pub fn realize_torus(d: &TorusClassDescriptor) -> Result<TorusRealization> {
    let dim = matrix_dim(d);
    if dim > MAX_MATRIX_DIM {
        return Err(Error::budget(format!(
            "matrix dimension {dim} exceeds the cap {MAX_MATRIX_DIM}"
        )));
    }
    let l = ambient_degree(d);
    let qq = (d.q as u128).checked_pow(l).and_then(|v| u64::try_from(v).ok());
    let qq = qq.ok_or_else(|| Error::budget("ambient field exceeds 2^64"))?;
    let f = field(qq)?; // errors beyond 2^16
    let structure = torus_factor_orders(d)?;
    let blocks = cycle_blocks(d);
    let orders: Vec<u64> = structure.factors.iter().map(|x| x.order).collect();

    let mut profiles = Vec::new();
    for (i, &ord) in orders.iter().enumerate() {
        let lambda = element_of_order(&f, ord)?;
        profiles.push(factor_profile(&f, d, &blocks, i, lambda, ord));
    }

    // Intersected generators as exponent tuples over the factor group.
    let m = orders.len();
    let unit = |i: usize| -> Vec<u64> {
        let mut v = vec![0u64; m];
        v[i] = 1;
        v
    };
    let intersected_tuples: Vec<Vec<u64>> = match structure.constraint {
        Constraint::None => (0..m).map(unit).collect(),
        Constraint::EvenExponentSum => {
            let mut gens = Vec::new();
            for i in 0..m {
                let mut v = vec![0u64; m];
                v[i] = 2 % orders[i];
                gens.push(v);
            }
            for i in 0..m.saturating_sub(1) {
                let mut v = vec![0u64; m];
                v[i] = 1 % orders[i];
                v[i + 1] = 1 % orders[i + 1];
                gens.push(v);
            }
            gens
        }
        Constraint::DeterminantOne => {
            // det(u_i) lives in the cyclic group GF(q^L)^*; work with logs of
            // the determinant of each profile.
            let modulus = f.q - 1;
            let det_logs: Vec<u64> = profiles
                .iter()
                .map(|p| {
                    let mut det: FieldElt = 1;
                    for &h in p {
                        det = f.mul(det, h);
                    }
                    if det == 1 {
                        0
                    } else {
                        // log base the primitive element.
                        let g = f.primitive_element();
                        let mut acc: FieldElt = 1;
                        let mut log = 0u64;
                        while acc != det {
                            acc = f.mul(acc, g);
                            log += 1;
                        }
                        log
                    }
                })
                .collect();
            let kernel = det_kernel_tuples(&orders, &det_logs, modulus)?;
            greedy_generators(&kernel, &orders)
        }
    };

    // Verify generated orders against the abstract structure.
    let full = tuple_subgroup(&(0..m).map(unit).collect::<Vec<_>>(), &orders, TUPLE_ENUM_CAP);
    if let Ok(elems) = &full {
        if elems.len() as u64 != structure.full_order {
            return Err(Error::verification(format!(
                "realized full torus order {} does not match structure {}",
                elems.len(),
                structure.full_order
            )));
        }
    }
    let inter = tuple_subgroup(&intersected_tuples, &orders, TUPLE_ENUM_CAP);
    if let Ok(elems) = &inter {
        if elems.len() as u64 != structure.intersected_order {
            return Err(Error::verification(format!(
                "realized intersected torus order {} does not match structure {}",
                elems.len(),
                structure.intersected_order
            )));
        }
    }

    let generators: Vec<GFMatrix> = profiles
        .iter()
        .map(|p| profile_to_matrix(&f, d, p))
        .collect();
    let intersected_profiles: Vec<Vec<FieldElt>> = intersected_tuples
        .iter()
        .map(|t| combine_profiles(&f, &profiles, t))
        .collect();
    let intersected_generators: Vec<GFMatrix> = intersected_profiles
        .iter()
        .map(|p| profile_to_matrix(&f, d, p))
        .collect();

    Ok(TorusRealization {
        descriptor: d.clone(),
        ambient_field: f,
        structure,
        generators,
        intersected_generators,
        intersected_profiles,
    })
}

/// The positive roots of the family, as abstract descriptors.
fn positive_roots(d: &TorusClassDescriptor) -> Vec<WitnessRoot> {
    let n = d.n;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push(WitnessRoot::Diff(i, j));
        }
    }
    match d.effective_family() {
        ClassicalFamily::A | ClassicalFamily::TwistedA => {}
        ClassicalFamily::C => {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    out.push(WitnessRoot::Sum(i, j));
                }
                out.push(WitnessRoot::Double(i));
            }
        }
        ClassicalFamily::B => {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    out.push(WitnessRoot::Sum(i, j));
                }
                out.push(WitnessRoot::Single(i));
            }
        }
        ClassicalFamily::D | ClassicalFamily::TwistedD => {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    out.push(WitnessRoot::Sum(i, j));
                }
            }
        }
    }
    out.sort();
    out
}

fn root_value(f: &FieldSpec, root: WitnessRoot, h: &[FieldElt]) -> FieldElt {
    let at = |i: u32| h[(i - 1) as usize];
    match root {
        WitnessRoot::Diff(i, j) => f.mul(f.inv(at(i)).unwrap(), at(j)),
        WitnessRoot::Sum(i, j) => f.mul(at(i), at(j)),
        WitnessRoot::Single(i) => at(i),
        WitnessRoot::Double(i) => f.mul(at(i), at(i)),
    }
}

/// All roots that take the value 1 on every intersected torus generator.
pub fn vanishing_roots(d: &TorusClassDescriptor) -> Result<Vec<WitnessRoot>> {
    let r = realize_torus(d)?;
    let f = &r.ambient_field;
    Ok(positive_roots(d)
        .into_iter()
        .filter(|&root| {
            r.intersected_profiles
                .iter()
                .all(|h| root_value(f, root, h) == 1)
        })
        .collect())
}

/// Index map for the paper's coordinates: i -> i-1, -j -> n+j-1 (plus a
/// leading 0 slot for the odd orthogonal family).
fn coord_index(d: &TorusClassDescriptor, signed: i64) -> usize {
    let n = d.n as i64;
    let shift = if d.effective_family() == ClassicalFamily::B {
        1
    } else {
        0
    };
    if signed == 0 {
        0
    } else if signed > 0 {
        (signed - 1 + shift) as usize
    } else {
        (n + (-signed) - 1 + shift) as usize
    }
}

fn witness_matrix(
    f: &Arc<FieldSpec>,
    d: &TorusClassDescriptor,
    clause: Clause,
    root: WitnessRoot,
) -> GFMatrix {
    let dim = matrix_dim(d);
    let mut m = GFMatrix::identity(f.clone(), dim);
    let one: FieldElt = 1;
    let neg_one = f.neg(1);
    let mut set = |r: i64, c: i64, v: FieldElt| {
        let (ri, ci) = (coord_index(d, r), coord_index(d, c));
        m.set(ri, ci, v);
    };
    match (d.effective_family(), clause, root) {
        (ClassicalFamily::A | ClassicalFamily::TwistedA, _, WitnessRoot::Diff(i, j)) => {
            set(i as i64, j as i64, one);
        }
        (ClassicalFamily::C, Clause::SpA, WitnessRoot::Diff(i, j)) => {
            set(i as i64, j as i64, one);
            set(-(j as i64), -(i as i64), neg_one);
        }
        (ClassicalFamily::C, Clause::SpB, WitnessRoot::Sum(i, j)) => {
            // Symmetric pairing for the symplectic form; identical to the
            // antisymmetric orthogonal version in the q = 2 cases where this
            // clause fires.
            set(i as i64, -(j as i64), one);
            set(j as i64, -(i as i64), one);
        }
        (ClassicalFamily::C, Clause::SpC, WitnessRoot::Double(i)) => {
            set(i as i64, -(i as i64), one);
        }
        (ClassicalFamily::B, Clause::SpC, WitnessRoot::Single(i)) => {
            // E + t(2 e_{i0} - e_{0,-i}) - t^2 e_{i,-i} at t = 1.
            let two = f.add(1, 1);
            set(i as i64, 0, two);
            set(0, -(i as i64), neg_one);
            set(i as i64, -(i as i64), neg_one);
        }
        (
            ClassicalFamily::B | ClassicalFamily::D | ClassicalFamily::TwistedD,
            Clause::OmA,
            WitnessRoot::Diff(i, j),
        ) => {
            set(i as i64, j as i64, one);
            set(-(j as i64), -(i as i64), neg_one);
        }
        (
            ClassicalFamily::B | ClassicalFamily::D | ClassicalFamily::TwistedD,
            Clause::OmB,
            WitnessRoot::Sum(i, j),
        ) => {
            set(i as i64, -(j as i64), one);
            set(j as i64, -(i as i64), neg_one);
        }
        other => unreachable!("no witness pattern for {other:?}"),
    }
    m
}

/// The explicit unipotent witness for a triggered clause, at t = 1, over
/// GF(q). Errors when the clause is not triggered for the descriptor.
pub fn witness_element(d: &TorusClassDescriptor, clause: Clause) -> Result<GFMatrix> {
    let verdict = classify_classical(d)?;
    if !verdict.clauses.contains(&clause) {
        return Err(Error::parameter(format!(
            "clause {clause} is not triggered for {d}"
        )));
    }
    let root = clause_witness_root(d, clause)?;
    let f = field(d.q)?;
    Ok(witness_matrix(&f, d, clause, root))
}

fn clause_witness_root(d: &TorusClassDescriptor, clause: Clause) -> Result<WitnessRoot> {
    let verdict = classify_classical(d)?;
    // The verdict lists witnesses in the same order the clauses fire; find
    // the root whose shape matches the clause.
    let root = verdict
        .witness_roots
        .iter()
        .copied()
        .find(|r| match clause {
            Clause::A1 | Clause::SpA | Clause::OmA => matches!(r, WitnessRoot::Diff(_, _)),
            Clause::SpB | Clause::OmB => matches!(r, WitnessRoot::Sum(_, _)),
            Clause::SpC => matches!(r, WitnessRoot::Double(_) | WitnessRoot::Single(_)),
        })
        .ok_or_else(|| Error::parameter(format!("clause {clause} has no witness root")))?;
    Ok(root)
}

/// The monomial matrix of the standard representative, with all nonzero
/// entries +1 (signs are irrelevant for conjugating diagonal matrices).
fn permutation_matrix(
    f: &Arc<FieldSpec>,
    d: &TorusClassDescriptor,
    w: &SignedPermutation,
) -> GFMatrix {
    let dim = matrix_dim(d);
    let mut m = GFMatrix::zero(f.clone(), dim, dim);
    if d.effective_family() == ClassicalFamily::B {
        m.set(0, 0, 1);
    }
    let n = d.n as i32;
    let signedly = |v: i32| -> i64 { v as i64 };
    for i in 1..=n {
        let img = w.image(i);
        m.set(coord_index(d, signedly(img)), coord_index(d, signedly(i)), 1);
        if matches!(
            d.effective_family(),
            ClassicalFamily::B | ClassicalFamily::C | ClassicalFamily::D | ClassicalFamily::TwistedD
        ) {
            m.set(
                coord_index(d, -signedly(img)),
                coord_index(d, -signedly(i)),
                1,
            );
        }
    }
    m
}

/// Applies the sigma * w twist to a matrix: the q-power Frobenius (composed
/// with inverse-transpose for the unitary family), then conjugation by the
/// permutation matrix of the stored representative.
fn sigma_w_image(
    d: &TorusClassDescriptor,
    p_w: &GFMatrix,
    p_w_inv: &GFMatrix,
    x: &GFMatrix,
) -> Result<GFMatrix> {
    let frob = x.entrywise_pow(d.q);
    let twisted = if d.effective_family() == ClassicalFamily::TwistedA {
        frob.transpose().inverse()?
    } else {
        frob
    };
    Ok(p_w.mul(&twisted).mul(p_w_inv))
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessCheck {
    pub clause: String,
    pub root: String,
    /// Form / determinant / Dickson conditions at matrix level.
    pub preserves_structure: bool,
    /// The root subgroup is sigma-w stable with a nontrivial fixed element.
    pub stable_with_fixed_points: bool,
    /// Commutes with every intersected torus generator.
    pub centralizes_torus: bool,
    /// Conjugating a regular diagonal element yields a non-diagonal result.
    pub moves_maximal_torus: bool,
}

impl WitnessCheck {
    pub fn all_pass(&self) -> bool {
        self.preserves_structure
            && self.stable_with_fixed_points
            && self.centralizes_torus
            && self.moves_maximal_torus
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub descriptor: String,
    pub checks: Vec<WitnessCheck>,
}

impl WitnessReport {
    pub fn all_pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(WitnessCheck::all_pass)
    }
}

fn structure_conditions(d: &TorusClassDescriptor, m: &GFMatrix) -> bool {
    let f = &m.field;
    let n = d.n as usize;
    match d.effective_family() {
        ClassicalFamily::A | ClassicalFamily::TwistedA => m.det() == 1,
        ClassicalFamily::C => {
            let gram = crate::gfmat::symplectic_gram(f, n);
            m.transpose().mul(&gram).mul(m) == gram
        }
        ClassicalFamily::B => {
            // Symmetric Gram of Q = x_0^2 + sum x_i x_{-i} (odd q).
            let dim = 2 * n + 1;
            let mut gram = GFMatrix::zero(f.clone(), dim, dim);
            gram.set(0, 0, f.add(1, 1));
            for i in 0..n {
                gram.set(1 + i, 1 + n + i, 1);
                gram.set(1 + n + i, 1 + i, 1);
            }
            m.transpose().mul(&gram).mul(m) == gram && m.det() == 1
        }
        ClassicalFamily::D | ClassicalFamily::TwistedD => {
            if f.p == 2 {
                // Bilinear polarization plus quadratic values plus Dickson.
                let mut gram = GFMatrix::zero(f.clone(), 2 * n, 2 * n);
                for i in 0..n {
                    gram.set(i, n + i, 1);
                    gram.set(n + i, i, 1);
                }
                if m.transpose().mul(&gram).mul(m) != gram {
                    return false;
                }
                for col in 0..2 * n {
                    let mut qv: FieldElt = 0;
                    for i in 0..n {
                        qv = f.add(qv, f.mul(m.get(i, col), m.get(n + i, col)));
                    }
                    if qv != 0 {
                        return false;
                    }
                }
                crate::gfmat::dickson_even(m)
            } else {
                let mut gram = GFMatrix::zero(f.clone(), 2 * n, 2 * n);
                for i in 0..n {
                    gram.set(i, n + i, 1);
                    gram.set(n + i, i, 1);
                }
                m.transpose().mul(&gram).mul(m) == gram
            }
        }
    }
}

fn gcd64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd64(b, a % b)
    }
}

/// Checks that the sigma-w image of the witness's root subgroup is the same
/// root subgroup, with a nonzero fixed parameter.
///
/// The twist acts on the parametrization as t -> c * t^e; the constants are
/// read off from the images of t = 1 and t = g, cross-checked at t = g^2,
/// and the fixed-point equation t^(e-1) = c^-1 is solved by order
/// arithmetic in the cyclic group.
fn root_subgroup_stable(
    d: &TorusClassDescriptor,
    f: &Arc<FieldSpec>,
    clause: Clause,
    root: WitnessRoot,
) -> Result<bool> {
    let w = standard_representative(&d.cycle_type);
    let p_w = permutation_matrix(f, d, &w);
    let p_w_inv = p_w.inverse()?;
    let id = GFMatrix::identity(f.clone(), matrix_dim(d));
    let g = f.primitive_element();
    let x1 = x_alpha_at(f, d, clause, root, 1);
    let xg = x_alpha_at(f, d, clause, root, g);
    // A position whose entry is linear in t.
    let lin_pos = (0..x1.data.len()).find(|&k| {
        x1.data[k] != id.data[k] && xg.data[k] == f.mul(x1.data[k], g)
    });
    let Some(lin_pos) = lin_pos else {
        return Ok(false);
    };
    let coeff_inv = f.inv(x1.data[lin_pos])?;
    let extract = |y: &GFMatrix| -> Option<FieldElt> {
        let t = f.mul(y.data[lin_pos], coeff_inv);
        let expected = x_alpha_at(f, d, clause, root, t);
        (*y == expected).then_some(t)
    };
    let y1 = sigma_w_image(d, &p_w, &p_w_inv, &x1)?;
    let yg = sigma_w_image(d, &p_w, &p_w_inv, &xg)?;
    let (Some(c), Some(dg)) = (extract(&y1), extract(&yg)) else {
        return Ok(false);
    };
    if c == 0 {
        return Ok(false);
    }
    // g^e = dg / c.
    let ratio = f.mul(dg, f.inv(c)?);
    let m = f.q - 1;
    let mut e = 0u64;
    let mut acc: FieldElt = 1;
    while acc != ratio {
        acc = f.mul(acc, g);
        e += 1;
        if e > m {
            return Ok(false);
        }
    }
    // Confirm the inferred monomial map at an independent sample.
    let t2 = f.mul(g, g);
    let y2 = sigma_w_image(&*d, &p_w, &p_w_inv, &x_alpha_at(f, d, clause, root, t2))?;
    let expected = f.mul(c, f.pow(t2, e as i64));
    if extract(&y2) != Some(expected) {
        return Ok(false);
    }
    // Nonzero fixed parameter: t^(e-1) = c^-1 has a solution iff c^-1 lies
    // in the (e-1)-power subgroup.
    let em1 = ((e as i128 - 1).rem_euclid(m as i128)) as u64;
    let subgroup_index = m / gcd64(em1, m).max(1);
    let solvable = if em1 == 0 {
        c == 1
    } else {
        f.pow(f.inv(c)?, subgroup_index as i64) == 1
    };
    Ok(solvable)
}

/// x_alpha(t) for the clause's root, arbitrary t.
fn x_alpha_at(
    f: &Arc<FieldSpec>,
    d: &TorusClassDescriptor,
    clause: Clause,
    root: WitnessRoot,
    t: FieldElt,
) -> GFMatrix {
    // Build from the t = 1 pattern by scaling: entries linear in t, except
    // the B-family short root which carries a -t^2 term.
    let dim = matrix_dim(d);
    let one = witness_matrix(f, d, clause, root);
    let id = GFMatrix::identity(f.clone(), dim);
    if d.effective_family() == ClassicalFamily::B && matches!(root, WitnessRoot::Single(_)) {
        let i = match root {
            WitnessRoot::Single(i) => i as i64,
            _ => unreachable!(),
        };
        let mut m = id;
        let two = f.add(1, 1);
        m.set(coord_index(d, i), coord_index(d, 0), f.mul(two, t));
        m.set(coord_index(d, 0), coord_index(d, -i), f.neg(t));
        m.set(
            coord_index(d, i),
            coord_index(d, -i),
            f.neg(f.mul(t, t)),
        );
        return m;
    }
    let mut m = id.clone();
    for (k, (&a, &b)) in one.data.iter().zip(&id.data).enumerate() {
        if a != b {
            m.data[k] = f.mul(a, t);
        }
    }
    m
}

/// The smallest extension with a regular diagonal element: q^L - 1 must
/// exceed twice the coordinate count.
fn regular_field_degree(d: &TorusClassDescriptor) -> Result<u32> {
    let need = 2 * d.n as u64 + 2;
    let mut l = 1u32;
    loop {
        let size = (d.q as u128).pow(l);
        if size > (1 << 16) {
            return Err(Error::budget(
                "no regular diagonal element within the field cap",
            ));
        }
        if size - 1 > need as u128 {
            return Ok(l);
        }
        l += 1;
    }
}

fn regular_diagonal(d: &TorusClassDescriptor, f: &Arc<FieldSpec>) -> GFMatrix {
    let n = d.n as usize;
    let g = f.primitive_element();
    let h: Vec<FieldElt> = (1..=n).map(|i| f.pow(g, i as i64)).collect();
    profile_to_matrix(f, d, &h)
}

/// Runs the three witness checks for every clause of a degenerate
/// descriptor. Errors when the descriptor is nondegenerate.
pub fn verify_witness(d: &TorusClassDescriptor) -> Result<WitnessReport> {
    let verdict = classify_classical(d)?;
    if !verdict.is_degenerate() {
        return Err(Error::parameter(format!(
            "{d} is nondegenerate; nothing to verify"
        )));
    }
    let realization = realize_torus(d)?;
    let f = &realization.ambient_field;
    let mut checks = Vec::new();
    for &clause in &verdict.clauses {
        let root = clause_witness_root(d, clause)?;
        let witness = witness_matrix(f, d, clause, root);
        let preserves = structure_conditions(d, &witness);
        let stable = root_subgroup_stable(d, f, clause, root)?;
        let centralizes = realization
            .intersected_generators
            .iter()
            .all(|t| witness.commutes_with(t));
        // Non-normalization over a field with a regular diagonal element.
        let lreg = regular_field_degree(d)?;
        let freg = field((d.q as u128).pow(lreg) as u64)?;
        let wreg = witness_matrix(&freg, d, clause, root);
        let dreg = regular_diagonal(d, &freg);
        let conj = wreg.mul(&dreg).mul(&wreg.inverse()?);
        let moves = !conj.is_diagonal();
        checks.push(WitnessCheck {
            clause: clause.name().to_string(),
            root: root.to_string(),
            preserves_structure: preserves,
            stable_with_fixed_points: stable,
            centralizes_torus: centralizes,
            moves_maximal_torus: moves,
        });
    }
    Ok(WitnessReport {
        descriptor: d.to_string(),
        checks,
    })
}

/// Searches for a monic polynomial of the given degree over GF(q) whose
/// companion matrix has exactly the requested multiplicative order; the
/// companion matrix is returned. Deterministic: lowest coefficient vector
/// wins.
fn companion_of_order(q: u64, degree: u32, order: u64) -> Result<GFMatrix> {
    let f = field(q)?;
    let deg = degree as usize;
    let count = q.pow(degree);
    'candidates: for c in 0..count {
        // Coefficient vector of the candidate monic polynomial.
        let mut coeffs = Vec::with_capacity(deg);
        let mut v = c;
        for _ in 0..deg {
            coeffs.push((v % q) as FieldElt);
            v /= q;
        }
        if coeffs[0] == 0 {
            continue; // singular companion
        }
        let mut m = GFMatrix::zero(f.clone(), deg, deg);
        for r in 1..deg {
            m.set(r, r - 1, 1);
        }
        for (r, &cf) in coeffs.iter().enumerate() {
            m.set(r, deg - 1, f.neg(cf));
        }
        // Multiplicative order must be exactly `order`.
        let id = GFMatrix::identity(f.clone(), deg);
        let mut acc = m.clone();
        let mut ord = 1u64;
        let actual = loop {
            if acc == id {
                break ord;
            }
            if ord > order {
                break 0;
            }
            acc = acc.mul(&m);
            ord += 1;
        };
        if actual == order {
            return Ok(m);
        }
        continue 'candidates;
    }
    Err(Error::verification(format!(
        "no degree-{degree} companion matrix of order {order} over GF({q})"
    )))
}

/// Solves C^T G C = G for an invertible alternating G (the form the cyclic
/// block preserves), then returns the symplectic base change S with
/// S^T G S = J.
fn symplectic_standardization(c: &GFMatrix) -> Result<GFMatrix> {
    let f = c.field.clone();
    let n = c.rows;
    // Unknown G as n^2 variables; constraints: C^T G C - G = 0 and
    // G^T + G = 0 (alternating includes zero diagonal, enforced below).
    let vars = n * n;
    let mut rows: Vec<Vec<FieldElt>> = Vec::new();
    let ct = c.transpose();
    // (C^T G C)_{ab} = sum_{i,j} C^T_{ai} G_{ij} C_{jb}.
    for a in 0..n {
        for b in 0..n {
            let mut row = vec![0 as FieldElt; vars];
            for i in 0..n {
                for j in 0..n {
                    let coef = f.mul(ct.get(a, i), c.get(j, b));
                    let idx = i * n + j;
                    row[idx] = f.add(row[idx], coef);
                }
            }
            // minus G_{ab}
            row[a * n + b] = f.sub(row[a * n + b], 1);
            rows.push(row);
        }
    }
    // Antisymmetry: G_{ab} + G_{ba} = 0; zero diagonal: G_{aa} = 0.
    for a in 0..n {
        for b in 0..n {
            let mut row = vec![0 as FieldElt; vars];
            if a == b {
                row[a * n + b] = 1;
            } else {
                row[a * n + b] = f.add(row[a * n + b], 1);
                let idx = b * n + a;
                row[idx] = f.add(row[idx], 1);
            }
            rows.push(row);
        }
    }
    let basis = nullspace(&f, &rows, vars);
    // Pick a nondegenerate combination; try basis vectors then pair sums.
    let mut candidates: Vec<Vec<FieldElt>> = basis.clone();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let sum: Vec<FieldElt> = basis[i]
                .iter()
                .zip(&basis[j])
                .map(|(&x, &y)| f.add(x, y))
                .collect();
            candidates.push(sum);
        }
    }
    for cand in candidates {
        let mut g = GFMatrix::zero(f.clone(), n, n);
        g.data = cand;
        if g.det() != 0 {
            let s = symplectic_basis(&g)?;
            return Ok(s);
        }
    }
    Err(Error::verification(
        "no invariant nondegenerate alternating form for the cyclic block",
    ))
}

/// Nullspace basis of a homogeneous system over the field.
fn nullspace(f: &Arc<FieldSpec>, rows: &[Vec<FieldElt>], vars: usize) -> Vec<Vec<FieldElt>> {
    let mut m: Vec<Vec<FieldElt>> = rows.to_vec();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0;
    for col in 0..vars {
        let pivot = (rank..m.len()).find(|&r| m[r][col] != 0);
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let inv = f.inv(m[rank][col]).unwrap();
        for v in m[rank].iter_mut() {
            *v = f.mul(*v, inv);
        }
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col];
                for k in 0..vars {
                    let sub = f.mul(factor, m[rank][k]);
                    m[r][k] = f.sub(m[r][k], sub);
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut out = Vec::new();
    for free in 0..vars {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![0 as FieldElt; vars];
        v[free] = 1;
        for &(r, c) in &pivots {
            v[c] = f.neg(m[r][free]);
        }
        out.push(v);
    }
    out
}

/// Gram-Schmidt for an alternating nondegenerate form: returns S whose
/// columns are a symplectic basis (e_1..e_m, f_1..f_m) with
/// S^T G S = [[0, I], [-I, 0]].
fn symplectic_basis(g: &GFMatrix) -> Result<GFMatrix> {
    let f = g.field.clone();
    let n = g.rows;
    let b = |u: &[FieldElt], v: &[FieldElt]| -> FieldElt {
        let mut acc: FieldElt = 0;
        for i in 0..n {
            if u[i] == 0 {
                continue;
            }
            for j in 0..n {
                if v[j] != 0 {
                    acc = f.add(acc, f.mul(u[i], f.mul(g.get(i, j), v[j])));
                }
            }
        }
        acc
    };
    let mut remaining: Vec<Vec<FieldElt>> = (0..n)
        .map(|i| {
            let mut v = vec![0 as FieldElt; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut es: Vec<Vec<FieldElt>> = Vec::new();
    let mut fs: Vec<Vec<FieldElt>> = Vec::new();
    while !remaining.is_empty() {
        let e = remaining.remove(0);
        // Find a partner with b(e, partner) != 0.
        let partner_idx = remaining.iter().position(|v| b(&e, v) != 0);
        let Some(pi) = partner_idx else {
            // e is in the radical of the remaining space; for a
            // nondegenerate form this cannot happen once projected.
            return Err(Error::verification("degenerate form in Gram-Schmidt"));
        };
        let mut fvec = remaining.remove(pi);
        let scale = f.inv(b(&e, &fvec))?;
        for v in fvec.iter_mut() {
            *v = f.mul(*v, scale);
        }
        // Project the rest: v -> v - b(v, f) e + ... careful with signs:
        // v' = v - b(v, f)/b(e, f) * e - b(e, v)/b(e, f) * f with b(e,f)=1:
        // v' = v - b(v, f) e + b(v, e) f  (using alternating b).
        for v in remaining.iter_mut() {
            let ce = b(v, &fvec);
            let cf = b(&e, v);
            for k in 0..n {
                let mut x = v[k];
                x = f.sub(x, f.mul(ce, e[k]));
                x = f.sub(x, f.mul(cf, fvec[k]));
                v[k] = x;
            }
        }
        // Drop zero vectors created by the projection.
        remaining.retain(|v| v.iter().any(|&x| x != 0));
        es.push(e);
        fs.push(fvec);
    }
    let m = es.len();
    let mut s = GFMatrix::zero(f.clone(), n, n);
    for (col, v) in es.iter().chain(fs.iter()).enumerate() {
        for row in 0..n {
            s.set(row, col, v[row]);
        }
    }
    // Sanity: S^T G S = standard J of size 2m = n.
    let mut j = GFMatrix::zero(f.clone(), n, n);
    for i in 0..m {
        j.set(i, m + i, 1);
        j.set(m + i, i, f.neg(1));
    }
    if s.transpose().mul(g).mul(&s) != j {
        return Err(Error::verification("symplectic Gram-Schmidt failed"));
    }
    Ok(s)
}

/// Generators of the torus inside the finite matrix group over GF(q):
/// companion blocks for the linear family (intersected with SL by exponent
/// arithmetic), GL-pair and norm-circle blocks for the symplectic family.
pub fn in_group_torus_generators(d: &TorusClassDescriptor) -> Result<Vec<GFMatrix>> {
    let f = field(d.q)?;
    let n = d.n as usize;
    let blocks = cycle_blocks(d);
    let structure = torus_factor_orders(d)?;
    match d.effective_family() {
        ClassicalFamily::A => {
            // Per-part companion matrices, then the determinant kernel.
            let mut factor_mats = Vec::new();
            for b in &blocks {
                let order = d.q.pow(b.len) - 1;
                let c = if b.len == 1 {
                    GFMatrix::diagonal(f.clone(), &[element_of_order(&f, order)?])
                } else {
                    companion_of_order(d.q, b.len, order)?
                };
                factor_mats.push(c);
            }
            let orders: Vec<u64> = structure.factors.iter().map(|x| x.order).collect();
            let det_logs: Vec<u64> = factor_mats
                .iter()
                .map(|c| {
                    let det = c.det();
                    let g = f.primitive_element();
                    let mut acc: FieldElt = 1;
                    let mut log = 0u64;
                    while acc != det {
                        acc = f.mul(acc, g);
                        log += 1;
                    }
                    log
                })
                .collect();
            let kernel = det_kernel_tuples(&orders, &det_logs, d.q - 1)?;
            let kernel_gens = greedy_generators(&kernel, &orders);
            let mut out = Vec::new();
            for tuple in kernel_gens {
                let mut m = GFMatrix::identity(f.clone(), n);
                for ((b, c), &e) in blocks.iter().zip(&factor_mats).zip(&tuple) {
                    let mut power = GFMatrix::identity(f.clone(), b.len as usize);
                    for _ in 0..e {
                        power = power.mul(c);
                    }
                    let off = (b.offset - 1) as usize;
                    for r in 0..b.len as usize {
                        for cc in 0..b.len as usize {
                            m.set(off + r, off + cc, power.get(r, cc));
                        }
                    }
                }
                out.push(m);
            }
            Ok(out)
        }
        ClassicalFamily::C => {
            let dim = 2 * n;
            let mut out = Vec::new();
            for b in &blocks {
                let mut m = GFMatrix::identity(f.clone(), dim);
                let off = (b.offset - 1) as usize;
                if b.sign > 0 {
                    let order = d.q.pow(b.len) - 1;
                    if order == 1 {
                        continue;
                    }
                    let c = if b.len == 1 {
                        GFMatrix::diagonal(f.clone(), &[element_of_order(&f, order)?])
                    } else {
                        companion_of_order(d.q, b.len, order)?
                    };
                    let cinvt = c.inverse()?.transpose();
                    for r in 0..b.len as usize {
                        for cc in 0..b.len as usize {
                            m.set(off + r, off + cc, c.get(r, cc));
                            m.set(n + off + r, n + off + cc, cinvt.get(r, cc));
                        }
                    }
                } else {
                    // Norm-one circle of order q^len + 1 inside Sp_{2 len}.
                    let order = d.q.pow(b.len) + 1;
                    let c = companion_of_order(d.q, 2 * b.len, order)?;
                    let s = symplectic_standardization(&c)?;
                    let block = s.inverse()?.mul(&c).mul(&s);
                    let half = b.len as usize;
                    // block is 2*len x 2*len in (e, f) order; scatter into
                    // the big matrix at (off..off+len, n+off..n+off+len).
                    let big_index = |k: usize| if k < half { off + k } else { n + off + (k - half) };
                    for r in 0..2 * half {
                        for cc in 0..2 * half {
                            m.set(big_index(r), big_index(cc), block.get(r, cc));
                        }
                    }
                }
                out.push(m);
            }
            Ok(out)
        }
        other => Err(Error::unsupported(format!(
            "in-group torus realization is provided for the enumerable \
             ambient groups (families A and C); got {}",
            other.name()
        ))),
    }
}

/// Result of a brute-force normalizer run.
#[derive(Debug, Clone, Serialize)]
pub struct NormalizerReport {
    pub descriptor: String,
    pub ambient: String,
    pub torus_order: u64,
    pub algebraic_order: u64,
    pub full_normalizer_order: u64,
    pub degenerate: bool,
}

/// Enumerates the ambient group of the descriptor, realizes the torus inside
/// it, and compares |N_G(S)| with the algebraic order |S| * |C_W(w)|.
///
/// With `derived_ambient` the derived subgroup is used instead (the
/// PSp_4(2)' case); the torus is intersected with it.
pub fn brute_force_normalizer_report(
    d: &TorusClassDescriptor,
    budget: usize,
    derived_ambient: bool,
) -> Result<NormalizerReport> {
    let full_group = ambient_group(d, budget)?;
    let torus_gens = in_group_torus_generators(d)?;
    for g in &torus_gens {
        if !full_group.contains(g) {
            return Err(Error::verification(
                "realized torus generator lies outside the enumerated group",
            ));
        }
    }
    let f = field(d.q)?;
    let dim = matrix_dim(d);
    let torus_elems =
        crate::gfmat::close_matrices(&f, dim, &torus_gens, TUPLE_ENUM_CAP as usize)?;
    // Cross-check the in-group torus order against the abstract structure.
    let expected = torus_factor_orders(d)?.intersected_order;
    if torus_elems.len() as u64 != expected {
        return Err(Error::verification(format!(
            "in-group torus order {} does not match structure {expected}",
            torus_elems.len()
        )));
    }
    let (ambient, torus_set) = if derived_ambient {
        let derived = full_group.derived_subgroup(budget)?;
        let inside: Vec<GFMatrix> = torus_elems
            .into_iter()
            .filter(|m| derived.contains(m))
            .collect();
        (derived, inside)
    } else {
        (full_group, torus_elems)
    };
    let torus_order = torus_set.len() as u64;
    let c_w = centralizer_order(d.family, d.n, &d.cycle_type, d.split)?;
    let algebraic_order = torus_order * c_w;
    let full = crate::gfmat::subgroup_normalizer_order_set(&ambient, &torus_set)?;
    Ok(NormalizerReport {
        descriptor: d.to_string(),
        ambient: ambient.spec.name.clone(),
        torus_order,
        algebraic_order,
        full_normalizer_order: full,
        degenerate: full > algebraic_order,
    })
}

fn ambient_group(d: &TorusClassDescriptor, budget: usize) -> Result<GroupHandle> {
    match d.effective_family() {
        ClassicalFamily::A => enumerate_group(&sl_group(d.n as usize, d.q)?, budget),
        ClassicalFamily::C => enumerate_group(&sp_group(d.n as usize, d.q)?, budget),
        other => Err(Error::unsupported(format!(
            "no enumerable ambient group for family {}",
            other.name()
        ))),
    }
}

/// True when the descriptor fits the desk-scale caps of the diagonal
/// realization (field within 2^16, matrix dimension within 64).
pub fn realizable(d: &TorusClassDescriptor) -> bool {
    if matrix_dim(d) > MAX_MATRIX_DIM {
        return false;
    }
    let l = ambient_degree(d);
    match (d.q as u128).checked_pow(l) {
        Some(size) => size <= (1 << 16),
        None => false,
    }
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
    fn realize_symplectic_negative_pair() {
        // (C, n=2, q=2, (1-)(1-)): two generators of order 3 in Sp_4(GF(4)),
        // group of order 9.
        let d = desc(ClassicalFamily::C, 2, 2, &[], &[1, 1]);
        let r = realize_torus(&d).unwrap();
        assert_eq!(r.ambient_field.q, 4);
        assert_eq!(r.structure.full_order, 9);
        assert_eq!(r.generators.len(), 2);
    }

    #[test]
    fn realize_singer_block() {
        // (A, n=3, q=2, (3)): diag(l, l^2, l^4) with l of order 7 in GF(8).
        let d = desc(ClassicalFamily::A, 3, 2, &[3], &[]);
        let r = realize_torus(&d).unwrap();
        assert_eq!(r.ambient_field.q, 8);
        assert_eq!(r.structure.intersected_order, 7);
        let h = &r.intersected_profiles()[0];
        let f = &r.ambient_field;
        assert_eq!(h[1], f.mul(h[0], h[0]));
        assert_eq!(h[2], f.mul(h[1], h[1]));
    }

    #[test]
    fn realize_even_sum_pattern() {
        let d = desc(ClassicalFamily::D, 2, 3, &[1, 1], &[]);
        let r = realize_torus(&d).unwrap();
        assert_eq!(r.structure.intersected_order, 2);
        // Every intersected profile has h_1 = h_2 = +-1 with product 1.
        for h in r.intersected_profiles() {
            assert_eq!(h[0], h[1]);
        }
    }

    #[test]
    fn vanishing_roots_examples() {
        let v = vanishing_roots(&desc(ClassicalFamily::A, 4, 2, &[1, 1, 2], &[])).unwrap();
        assert!(v.contains(&WitnessRoot::Diff(1, 2)));

        let v = vanishing_roots(&desc(ClassicalFamily::C, 2, 3, &[1], &[1])).unwrap();
        assert!(v.contains(&WitnessRoot::Double(1)));
        assert!(!v.contains(&WitnessRoot::Diff(1, 2)));

        let v = vanishing_roots(&desc(ClassicalFamily::A, 3, 3, &[1, 1, 1], &[])).unwrap();
        assert!(v.is_empty());
    }

    #[test]
    fn unitary_two_block_vanishes_at_q2() {
        let v =
            vanishing_roots(&desc(ClassicalFamily::TwistedA, 4, 2, &[1, 1, 2], &[])).unwrap();
        assert_eq!(v, vec![WitnessRoot::Diff(3, 4)]);
        // And not at q = 3.
        let v =
            vanishing_roots(&desc(ClassicalFamily::TwistedA, 4, 3, &[1, 1, 2], &[])).unwrap();
        assert!(v.is_empty());
    }

    #[test]
    fn witness_elements() {
        let d = desc(ClassicalFamily::A, 4, 2, &[1, 1, 2], &[]);
        let w = witness_element(&d, Clause::A1).unwrap();
        assert_eq!(w.get(0, 1), 1);
        let d = desc(ClassicalFamily::C, 2, 3, &[1], &[1]);
        let w = witness_element(&d, Clause::SpC).unwrap();
        assert_eq!(w.get(0, 2), 1); // e_{1,-1}
        assert!(witness_element(&d, Clause::SpA).is_err());
        // Nondegenerate: parameter error.
        let d = desc(ClassicalFamily::A, 3, 3, &[1, 1, 1], &[]);
        assert!(matches!(verify_witness(&d), Err(Error::Parameter(_))));
    }

    #[test]
    fn witness_checks_pass_for_examples() {
        for d in [
            desc(ClassicalFamily::A, 4, 2, &[1, 1, 2], &[]),
            desc(ClassicalFamily::C, 2, 2, &[1, 1], &[]),
            desc(ClassicalFamily::C, 3, 3, &[1], &[2]),
            desc(ClassicalFamily::D, 4, 2, &[1, 1, 2], &[]),
            desc(ClassicalFamily::TwistedD, 4, 2, &[2], &[2]),
            desc(ClassicalFamily::D, 2, 3, &[1, 1], &[]),
            desc(ClassicalFamily::B, 1, 3, &[1], &[]),
            desc(ClassicalFamily::B, 2, 3, &[2], &[]),
            desc(ClassicalFamily::TwistedA, 4, 2, &[1, 1, 2], &[]),
        ] {
            let report = verify_witness(&d).unwrap();
            assert!(report.all_pass(), "witness checks failed: {report:?}");
        }
    }

    #[test]
    fn companion_search_finds_primitive_blocks() {
        // Degree 3 of order 2^3 - 1 (a primitive polynomial block).
        let c = companion_of_order(2, 3, 7).unwrap();
        assert_eq!(c.rows, 3);
        // Degree 2 of order q + 1 = 3 (the norm-one circle of a negative
        // 1-cycle at q = 2).
        let c = companion_of_order(2, 2, 3).unwrap();
        assert_eq!(c.rows, 2);
        let c = companion_of_order(3, 2, 4).unwrap();
        let mut acc = c.clone();
        let id = GFMatrix::identity(c.field.clone(), 2);
        let mut order = 1;
        while acc != id {
            acc = acc.mul(&c);
            order += 1;
        }
        assert_eq!(order, 4);
    }

    #[test]
    fn brute_force_sl3_2_reports() {
        let d = desc(ClassicalFamily::A, 3, 2, &[1, 1, 1], &[]);
        let r = brute_force_normalizer_report(&d, 10_000, false).unwrap();
        assert_eq!(
            (r.torus_order, r.algebraic_order, r.full_normalizer_order, r.degenerate),
            (1, 6, 168, true)
        );
        let d = desc(ClassicalFamily::A, 3, 2, &[3], &[]);
        let r = brute_force_normalizer_report(&d, 10_000, false).unwrap();
        assert_eq!(
            (r.torus_order, r.algebraic_order, r.full_normalizer_order, r.degenerate),
            (7, 21, 21, false)
        );
        let d = desc(ClassicalFamily::A, 3, 2, &[1, 2], &[]);
        let r = brute_force_normalizer_report(&d, 10_000, false).unwrap();
        assert_eq!(r.torus_order, 3);
        assert_eq!(r.algebraic_order, 6);
        assert_eq!(r.full_normalizer_order, 6);
    }

    #[test]
    fn realizable_respects_caps() {
        assert!(realizable(&desc(ClassicalFamily::C, 5, 3, &[], &[5])));
        // lcm(4, 6) = 12 needs GF(3^12) > 2^16.
        assert!(!realizable(&desc(ClassicalFamily::C, 5, 3, &[], &[2, 3])));
    }
}
