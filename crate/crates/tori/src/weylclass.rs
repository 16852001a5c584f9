//! Torus class descriptors for the classical families and the Weyl-group
//! combinatorics attached to them.
//!
//! Classes of maximal tori are keyed by signed cycle types: a partition for
//! the linear families, a pair of partitions (positive and negative cycle
//! lengths) for the symplectic and orthogonal ones. Type-D carries one extra
//! wrinkle: inside the even-negative-cycle subgroup, classes whose cycles are
//! all positive of even length split in two, so those descriptors carry a
//! split tag. Twisted type-D descriptors store the cycle type of `w0*w`
//! directly, which must have an odd number of negative cycles.
//!
//! A brute-force oracle enumerates the actual Weyl groups for small `n` and
//! computes class sizes and centralizer orders by orbit counting; the closed
//! formulas used elsewhere are validated against it in the tests.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::{Error, Result};

/// The classical families of finite simple groups handled descriptor-wise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ClassicalFamily {
    /// PSL_n(q); descriptors are partitions of the matrix size n.
    A,
    /// PSU_n(q).
    TwistedA,
    /// Odd-dimensional orthogonal groups (odd q); coincides with C in
    /// characteristic 2.
    B,
    /// PSp_2n(q).
    C,
    /// Split even-dimensional orthogonal groups.
    D,
    /// Non-split (twisted) even-dimensional orthogonal groups.
    TwistedD,
}

impl ClassicalFamily {
    pub fn name(self) -> &'static str {
        match self {
            ClassicalFamily::A => "A",
            ClassicalFamily::TwistedA => "2A",
            ClassicalFamily::B => "B",
            ClassicalFamily::C => "C",
            ClassicalFamily::D => "D",
            ClassicalFamily::TwistedD => "2D",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(ClassicalFamily::A),
            "2A" => Ok(ClassicalFamily::TwistedA),
            "B" => Ok(ClassicalFamily::B),
            "C" => Ok(ClassicalFamily::C),
            "D" => Ok(ClassicalFamily::D),
            "2D" => Ok(ClassicalFamily::TwistedD),
            _ => Err(Error::parameter(format!("unknown classical family {s:?}"))),
        }
    }

    /// Whether descriptors of this family use signed (hyperoctahedral) types.
    pub fn signed(self) -> bool {
        !matches!(self, ClassicalFamily::A | ClassicalFamily::TwistedA)
    }

    /// Smallest n for which the associated finite group is in the simple
    /// range (A: PSL_n with n >= 2, 2A: n >= 3, B: dimension 2n+1 >= 7,
    /// C: 2n >= 4, D/2D: 2n >= 8).
    pub fn min_simple_n(self) -> u32 {
        match self {
            ClassicalFamily::A => 2,
            ClassicalFamily::TwistedA => 3,
            ClassicalFamily::B => 3,
            ClassicalFamily::C => 2,
            ClassicalFamily::D | ClassicalFamily::TwistedD => 4,
        }
    }

    /// Smallest n the descriptor machinery accepts at all (with the
    /// simple-range filter switched off).
    pub fn min_n(self) -> u32 {
        match self {
            ClassicalFamily::A | ClassicalFamily::TwistedA => 2,
            ClassicalFamily::B => 1,
            _ => 2,
        }
    }
}

/// Returns `(p, k)` when `q = p^k` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut n = q;
    let mut p = 0u64;
    for cand in 2..=q {
        if cand * cand > q {
            break;
        }
        if n % cand == 0 {
            p = cand;
            break;
        }
    }
    if p == 0 {
        return Some((q, 1)); // q itself is prime
    }
    let mut k = 0;
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    if n == 1 {
        Some((p, k))
    } else {
        None
    }
}

/// A signed cycle type: two multisets of cycle lengths, each kept sorted
/// ascending. For type-A usage the negative multiset is empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SignedCycleType {
    positive: Vec<u32>,
    negative: Vec<u32>,
}

impl SignedCycleType {
    pub fn new(mut positive: Vec<u32>, mut negative: Vec<u32>) -> Result<Self> {
        if positive.iter().chain(&negative).any(|&p| p == 0) {
            return Err(Error::parameter("cycle lengths must be positive"));
        }
        positive.sort_unstable();
        negative.sort_unstable();
        Ok(SignedCycleType { positive, negative })
    }

    pub fn positive(&self) -> &[u32] {
        &self.positive
    }

    pub fn negative(&self) -> &[u32] {
        &self.negative
    }

    /// Sum of all cycle lengths.
    pub fn total(&self) -> u32 {
        self.positive.iter().chain(&self.negative).sum()
    }

    /// All cycles in standard order: positive ascending, then negative
    /// ascending, with their signs (+1 / -1).
    pub fn cycles(&self) -> impl Iterator<Item = (u32, i8)> + '_ {
        self.positive
            .iter()
            .map(|&n| (n, 1i8))
            .chain(self.negative.iter().map(|&n| (n, -1i8)))
    }

    pub fn count_positive_ones(&self) -> usize {
        self.positive.iter().filter(|&&p| p == 1).count()
    }

    pub fn has_positive_cycle_of_length(&self, len: u32) -> bool {
        self.positive.contains(&len)
    }

    /// True when every cycle is positive of even length — the condition for
    /// a type-D class to split in two.
    pub fn splits_in_d(&self) -> bool {
        self.negative.is_empty() && self.positive.iter().all(|&p| p % 2 == 0)
    }
}

impl fmt::Display for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.positive {
            write!(f, "({p})")?;
        }
        for n in &self.negative {
            write!(f, "({n}-)")?;
        }
        Ok(())
    }
}

impl FromStr for SignedCycleType {
    type Err = Error;

    /// Parses the class grammar: `(3)(2)(1-)` is a positive 3-cycle, a
    /// positive 2-cycle and a negative 1-cycle. Whitespace-free; parts may
    /// appear in any order and are canonicalized to ascending order within
    /// each sign.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parameter(format!("malformed cycle type {s:?}"));
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        let mut rest = s;
        if rest.is_empty() {
            return Err(bad());
        }
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(bad());
            }
            let close = rest.find(')').ok_or_else(bad)?;
            let inner = &rest[1..close];
            let (digits, neg) = match inner.strip_suffix('-') {
                Some(d) => (d, true),
                None => (inner, false),
            };
            let len: u32 = digits.parse().map_err(|_| bad())?;
            if len == 0 {
                return Err(bad());
            }
            if neg {
                negative.push(len);
            } else {
                positive.push(len);
            }
            rest = &rest[close + 1..];
        }
        SignedCycleType::new(positive, negative)
    }
}

/// Distinguishes the two classes of a split type-D cycle type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum DSplit {
    First,
    Second,
}

/// The key for every classification and verification query: family, rank
/// parameter, field size, and the cycle type (for twisted D, the type of
/// `w0*w`). `split` is set only for the split type-D classes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TorusClassDescriptor {
    pub family: ClassicalFamily,
    pub n: u32,
    pub q: u64,
    pub cycle_type: SignedCycleType,
    pub split: Option<DSplit>,
}

impl TorusClassDescriptor {
    pub fn new(
        family: ClassicalFamily,
        n: u32,
        q: u64,
        cycle_type: SignedCycleType,
        split: Option<DSplit>,
    ) -> Result<Self> {
        let (p, _) = prime_power(q)
            .ok_or_else(|| Error::parameter(format!("q = {q} is not a prime power")))?;
        if cycle_type.total() != n {
            return Err(Error::parameter(format!(
                "cycle type {cycle_type} has total {} but n = {n}",
                cycle_type.total()
            )));
        }
        if !family.signed() && !cycle_type.negative().is_empty() {
            return Err(Error::parameter(format!(
                "family {} takes unsigned cycle types",
                family.name()
            )));
        }
        match family {
            ClassicalFamily::D => {
                if cycle_type.negative().len() % 2 != 0 {
                    return Err(Error::parameter(
                        "family D requires an even number of negative cycles",
                    ));
                }
            }
            ClassicalFamily::TwistedD => {
                if cycle_type.negative().len() % 2 != 1 {
                    return Err(Error::parameter(
                        "family 2D stores the type of w0*w, which has an odd number \
                         of negative cycles",
                    ));
                }
            }
            _ => {}
        }
        if split.is_some() {
            let splittable = family == ClassicalFamily::D && cycle_type.splits_in_d();
            if !splittable {
                return Err(Error::parameter(
                    "split tag is only valid for type-D classes with all cycles \
                     positive of even length",
                ));
            }
        }
        if family == ClassicalFamily::B && p == 2 {
            // In characteristic 2 the B and C groups coincide; descriptors are
            // accepted and downstream modules treat them as family C.
        }
        Ok(TorusClassDescriptor {
            family,
            n,
            q,
            cycle_type,
            split,
        })
    }

    /// Class string under the published grammar, `#2` marking the second
    /// member of a split pair.
    pub fn class_string(&self) -> String {
        match self.split {
            Some(DSplit::Second) => format!("{}#2", self.cycle_type),
            _ => self.cycle_type.to_string(),
        }
    }

    /// Parses a class string (inverse of [`Self::class_string`]).
    pub fn parse_class(family: ClassicalFamily, n: u32, q: u64, s: &str) -> Result<Self> {
        let (body, split) = match s.strip_suffix("#2") {
            Some(b) => (b, Some(DSplit::Second)),
            None => (s, None),
        };
        let ct: SignedCycleType = body.parse()?;
        let split = match (family, split) {
            (ClassicalFamily::D, None) if ct.splits_in_d() => Some(DSplit::First),
            (_, s) => s,
        };
        TorusClassDescriptor::new(family, n, q, ct, split)
    }

    /// The characteristic of the defining field.
    pub fn characteristic(&self) -> u64 {
        prime_power(self.q).expect("validated at construction").0
    }

    /// Family with the characteristic-2 B-to-C identification applied.
    pub fn effective_family(&self) -> ClassicalFamily {
        if self.family == ClassicalFamily::B && self.characteristic() == 2 {
            ClassicalFamily::C
        } else {
            self.family
        }
    }
}

impl fmt::Display for TorusClassDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={} q={} {}",
            self.family.name(),
            self.n,
            self.q,
            self.class_string()
        )
    }
}

fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            let mut p = cur.clone();
            p.sort_unstable();
            out.push(p);
            return;
        }
        for part in (1..=max.min(n)).rev() {
            cur.push(part);
            rec(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Enumerates all torus class descriptors for a family at the given rank
/// parameter and field size, in canonical order.
///
/// With `simple_filter` set, `n` below the simple range is rejected; pass
/// `false` to reach the small-rank cases the lemmas still cover.
pub fn enumerate_torus_classes(
    family: ClassicalFamily,
    n: u32,
    q: u64,
    simple_filter: bool,
) -> Result<Vec<TorusClassDescriptor>> {
    if simple_filter && n < family.min_simple_n() {
        return Err(Error::parameter(format!(
            "n = {n} is below the simple range for family {} (minimum {}); \
             disable the simple filter to query it",
            family.name(),
            family.min_simple_n()
        )));
    }
    if n < family.min_n() {
        return Err(Error::parameter(format!(
            "n = {n} is too small for family {}",
            family.name()
        )));
    }
    let mut out = Vec::new();
    match family {
        ClassicalFamily::A | ClassicalFamily::TwistedA => {
            for p in partitions(n) {
                let ct = SignedCycleType::new(p, vec![])?;
                out.push(TorusClassDescriptor::new(family, n, q, ct, None)?);
            }
        }
        ClassicalFamily::B | ClassicalFamily::C => {
            for s in 0..=n {
                for pos in partitions(s) {
                    for neg in partitions(n - s) {
                        let ct = SignedCycleType::new(pos.clone(), neg)?;
                        out.push(TorusClassDescriptor::new(family, n, q, ct, None)?);
                    }
                }
            }
        }
        ClassicalFamily::D | ClassicalFamily::TwistedD => {
            let want_odd = family == ClassicalFamily::TwistedD;
            for s in 0..=n {
                for pos in partitions(s) {
                    for neg in partitions(n - s) {
                        if (neg.len() % 2 == 1) != want_odd {
                            continue;
                        }
                        let ct = SignedCycleType::new(pos.clone(), neg)?;
                        if family == ClassicalFamily::D && ct.splits_in_d() {
                            out.push(TorusClassDescriptor::new(
                                family,
                                n,
                                q,
                                ct.clone(),
                                Some(DSplit::First),
                            )?);
                            out.push(TorusClassDescriptor::new(
                                family,
                                n,
                                q,
                                ct,
                                Some(DSplit::Second),
                            )?);
                        } else {
                            out.push(TorusClassDescriptor::new(family, n, q, ct, None)?);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// A signed permutation on {1..n, -1..-n} with tau(-i) = -tau(i), stored as
/// the images of 1..n (signed, 1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: u32) -> Self {
        SignedPermutation {
            images: (1..=n as i32).collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    /// Image of a signed point i in {1..n} u {-1..-n}.
    pub fn image(&self, i: i32) -> i32 {
        if i > 0 {
            self.images[(i - 1) as usize]
        } else {
            -self.images[(-i - 1) as usize]
        }
    }

    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        // (self * other)(i) = self(other(i)).
        SignedPermutation {
            images: (1..=self.images.len() as i32)
                .map(|i| self.image(other.image(i)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.images.len();
        let mut images = vec![0i32; n];
        for i in 1..=n as i32 {
            let img = self.image(i);
            if img > 0 {
                images[(img - 1) as usize] = i;
            } else {
                images[(-img - 1) as usize] = -i;
            }
        }
        SignedPermutation { images }
    }

    pub fn negative_cycle_count(&self) -> usize {
        self.cycle_type().negative().len()
    }

    /// Decomposes into signed cycles.
    pub fn cycle_type(&self) -> SignedCycleType {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for start in 1..=n as i32 {
            if seen[(start - 1) as usize] {
                continue;
            }
            let mut len = 0u32;
            let mut cur = start;
            loop {
                seen[(cur.unsigned_abs() - 1) as usize] = true;
                len += 1;
                cur = self.image(cur);
                if cur.abs() == start {
                    break;
                }
            }
            if cur == start {
                pos.push(len);
            } else {
                neg.push(len);
            }
        }
        SignedCycleType::new(pos, neg).expect("cycle lengths are positive")
    }
}

/// The standard representative of a signed cycle type: consecutive blocks,
/// positive cycles first, each block cycling its points forward with the
/// sign flip (if any) at the wrap-around.
pub fn standard_representative(t: &SignedCycleType) -> SignedPermutation {
    let n = t.total();
    let mut images = vec![0i32; n as usize];
    let mut offset = 0i32;
    for (len, sign) in t.cycles() {
        let len = len as i32;
        for k in 0..len {
            let from = offset + k + 1;
            let to = if k + 1 < len {
                offset + k + 2
            } else {
                (offset + 1) * sign as i32
            };
            images[(from - 1) as usize] = to;
        }
        offset += len;
    }
    SignedPermutation { images }
}

/// Closed-form centralizer order in the Weyl group.
///
/// * A / 2A: centralizer in Sym(n), `prod_j j^{m_j} m_j!`.
/// * B / C: centralizer in the hyperoctahedral group,
///   `prod_j (2j)^{m_j} m_j!` taken over positive and negative parts
///   separately.
/// * D: the hyperoctahedral value, halved exactly when the class does not
///   split (some cycle is negative or some positive cycle has odd length).
///
/// Twisted-D sigma-centralizer orders are not given in closed form; use
/// [`brute_force_weyl_oracle`]. (For 2A the acting automorphism is inner on
/// the Weyl group, so the Sym(n) value applies and is returned.)
pub fn centralizer_order(
    family: ClassicalFamily,
    n: u32,
    t: &SignedCycleType,
    _split: Option<DSplit>,
) -> Result<u64> {
    if t.total() != n {
        return Err(Error::parameter("cycle type total does not match n"));
    }
    let mult = |parts: &[u32]| {
        let mut m: BTreeMap<u32, u64> = BTreeMap::new();
        for &p in parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    };
    let factorial = |k: u64| (1..=k).product::<u64>();
    match family {
        ClassicalFamily::A | ClassicalFamily::TwistedA => {
            if !t.negative().is_empty() {
                return Err(Error::parameter("type-A classes have no negative cycles"));
            }
            let mut c = 1u64;
            for (j, m) in mult(t.positive()) {
                c *= (j as u64).pow(m as u32) * factorial(m);
            }
            Ok(c)
        }
        ClassicalFamily::B | ClassicalFamily::C => {
            let mut c = 1u64;
            for parts in [t.positive(), t.negative()] {
                for (j, m) in mult(parts) {
                    c *= (2 * j as u64).pow(m as u32) * factorial(m);
                }
            }
            Ok(c)
        }
        ClassicalFamily::D => {
            let hyper = centralizer_order(ClassicalFamily::C, n, t, None)?;
            if t.splits_in_d() {
                Ok(hyper)
            } else {
                Ok(hyper / 2)
            }
        }
        ClassicalFamily::TwistedD => Err(Error::unsupported(
            "sigma-centralizer orders for twisted families are oracle-only; \
             use brute_force_weyl_oracle",
        )),
    }
}

/// Key identifying a class in the brute-force oracle output: cycle type plus
/// a disambiguating index for type-D split pairs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OracleClassKey {
    pub cycle_type: SignedCycleType,
    pub split_index: u8,
}

/// Class data measured by enumeration: exact class size and centralizer
/// order (for twisted D, the twisted centralizer |C_{W_H}(w0 w)|).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleClass {
    pub size: u64,
    pub centralizer_order: u64,
}

fn all_signed_permutations(n: u32) -> Vec<SignedPermutation> {
    let mut perms = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &perms {
            for v in 1..=n as i32 {
                if !p.iter().any(|&x: &i32| x.abs() == v) {
                    for s in [v, -v] {
                        let mut q = p.clone();
                        q.push(s);
                        next.push(q);
                    }
                }
            }
        }
        perms = next;
    }
    perms
        .into_iter()
        .map(|images| SignedPermutation { images })
        .collect()
}

fn all_unsigned_permutations(n: u32) -> Vec<SignedPermutation> {
    all_signed_permutations(n)
        .into_iter()
        .filter(|p| p.images.iter().all(|&v| v > 0))
        .collect()
}

/// Adjacent transpositions.
fn sym_generators(n: u32) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    for i in 1..n as i32 {
        let mut images: Vec<i32> = (1..=n as i32).collect();
        images.swap((i - 1) as usize, i as usize);
        out.push(SignedPermutation { images });
    }
    if out.is_empty() {
        out.push(SignedPermutation::identity(n));
    }
    out
}

/// Adjacent transpositions plus the sign flip on the last coordinate.
fn hyperoctahedral_generators(n: u32) -> Vec<SignedPermutation> {
    let mut out = sym_generators(n);
    let mut images: Vec<i32> = (1..=n as i32).collect();
    images[(n - 1) as usize] = -(n as i32);
    out.push(SignedPermutation { images });
    out
}

/// Adjacent transpositions plus the double sign flip on the last two
/// coordinates (the even-negative-count subgroup).
fn even_subgroup_generators(n: u32) -> Vec<SignedPermutation> {
    let mut out = sym_generators(n);
    if n >= 2 {
        let mut images: Vec<i32> = (1..=n as i32).collect();
        images[(n - 2) as usize] = -((n - 1) as i32);
        images[(n - 1) as usize] = -(n as i32);
        out.push(SignedPermutation { images });
    }
    out
}

/// Enumerates the Weyl group of the family at rank `n` and partitions it into
/// conjugacy classes, keyed by cycle type (with split indices where one type
/// covers two classes). Supported for n <= 7.
///
/// * A / 2A: Sym(n) under conjugacy.
/// * B / C: the full hyperoctahedral group.
/// * D: the even-negative-cycle subgroup W_H under its own conjugation.
/// * 2D: W_H-orbits on the odd coset, reported by the type of the coset
///   element; the centralizer order is the twisted one.
pub fn brute_force_weyl_oracle(
    family: ClassicalFamily,
    n: u32,
) -> Result<BTreeMap<OracleClassKey, OracleClass>> {
    if n > 7 {
        return Err(Error::budget(format!(
            "Weyl oracle enumerates at most rank 7, got {n}"
        )));
    }
    let (group_order, generators, domain): (u64, Vec<SignedPermutation>, Vec<SignedPermutation>) =
        match family {
            ClassicalFamily::A | ClassicalFamily::TwistedA => {
                let g = all_unsigned_permutations(n);
                (g.len() as u64, sym_generators(n), g)
            }
            ClassicalFamily::B | ClassicalFamily::C => {
                let g = all_signed_permutations(n);
                (g.len() as u64, hyperoctahedral_generators(n), g)
            }
            ClassicalFamily::D => {
                let g: Vec<_> = all_signed_permutations(n)
                    .into_iter()
                    .filter(|p| p.negative_cycle_count() % 2 == 0)
                    .collect();
                (g.len() as u64, even_subgroup_generators(n), g)
            }
            ClassicalFamily::TwistedD => {
                let all = all_signed_permutations(n);
                let order = all.len() as u64 / 2;
                let coset: Vec<_> = all
                    .into_iter()
                    .filter(|p| p.negative_cycle_count() % 2 == 1)
                    .collect();
                (order, even_subgroup_generators(n), coset)
            }
        };
    let index: HashMap<&SignedPermutation, usize> =
        domain.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let inverses: Vec<SignedPermutation> = generators.iter().map(|g| g.inverse()).collect();
    let mut assigned = vec![false; domain.len()];
    // Orbits of the conjugation action, generated by conjugation with the
    // group's generators.
    let mut per_type: BTreeMap<SignedCycleType, Vec<u64>> = BTreeMap::new();
    for start in 0..domain.len() {
        if assigned[start] {
            continue;
        }
        let mut orbit = HashSet::new();
        let mut frontier = vec![domain[start].clone()];
        assigned[start] = true;
        orbit.insert(domain[start].clone());
        while let Some(x) = frontier.pop() {
            for (g, gi) in generators.iter().zip(&inverses) {
                let y = g.compose(&x).compose(gi);
                if orbit.insert(y.clone()) {
                    if let Some(&i) = index.get(&y) {
                        assigned[i] = true;
                    }
                    frontier.push(y);
                }
            }
        }
        let ty = domain[start].cycle_type();
        per_type.entry(ty).or_default().push(orbit.len() as u64);
    }
    let mut out = BTreeMap::new();
    for (ty, mut sizes) in per_type {
        sizes.sort_unstable();
        for (i, size) in sizes.iter().enumerate() {
            out.insert(
                OracleClassKey {
                    cycle_type: ty.clone(),
                    split_index: i as u8,
                },
                OracleClass {
                    size: *size,
                    centralizer_order: group_order / size,
                },
            );
        }
    }
    Ok(out)
}

/// Order of the Weyl group itself.
pub fn weyl_group_order(family: ClassicalFamily, n: u32) -> u64 {
    let fact: u64 = (1..=n as u64).product();
    match family {
        ClassicalFamily::A | ClassicalFamily::TwistedA => fact,
        ClassicalFamily::B | ClassicalFamily::C => (1u64 << n) * fact,
        ClassicalFamily::D | ClassicalFamily::TwistedD => (1u64 << (n - 1)) * fact,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(pos: &[u32], neg: &[u32]) -> SignedCycleType {
        SignedCycleType::new(pos.to_vec(), neg.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_a3_gives_the_partitions_of_3() {
        let classes = enumerate_torus_classes(ClassicalFamily::A, 3, 2, true).unwrap();
        assert_eq!(classes.len(), 3);
        let strings: Vec<_> = classes.iter().map(|d| d.class_string()).collect();
        assert!(strings.contains(&"(1)(1)(1)".to_string()));
        assert!(strings.contains(&"(1)(2)".to_string()));
        assert!(strings.contains(&"(3)".to_string()));
    }

    #[test]
    fn enumerate_c3_gives_ten_classes() {
        let classes = enumerate_torus_classes(ClassicalFamily::C, 3, 2, true).unwrap();
        assert_eq!(classes.len(), 10);
    }

    #[test]
    fn enumerate_d4_gives_thirteen_descriptors_matching_the_oracle() {
        let classes = enumerate_torus_classes(ClassicalFamily::D, 4, 2, true).unwrap();
        assert_eq!(classes.len(), 13);
        let split: Vec<_> = classes
            .iter()
            .filter(|d| d.split == Some(DSplit::Second))
            .map(|d| d.cycle_type.to_string())
            .collect();
        assert_eq!(split, vec!["(2)(2)".to_string(), "(4)".to_string()]);

        let oracle = brute_force_weyl_oracle(ClassicalFamily::D, 4).unwrap();
        assert_eq!(oracle.len(), 13);
    }

    #[test]
    fn enumeration_counts_match_the_oracle_class_counts() {
        for (fam, n) in [
            (ClassicalFamily::A, 5),
            (ClassicalFamily::C, 4),
            (ClassicalFamily::D, 5),
            (ClassicalFamily::D, 6),
            (ClassicalFamily::TwistedD, 4),
            (ClassicalFamily::TwistedD, 5),
        ] {
            let classes = enumerate_torus_classes(fam, n, 2, false).unwrap();
            let oracle = brute_force_weyl_oracle(fam, n).unwrap();
            assert_eq!(classes.len(), oracle.len(), "{:?} n={}", fam, n);
        }
    }

    #[test]
    fn standard_representative_signs() {
        // (2-): 1 -> 2, 2 -> -1, so tau^2(1) = -1.
        let t = ct(&[], &[2]);
        let rep = standard_representative(&t);
        assert_eq!(rep.image(1), 2);
        assert_eq!(rep.image(2), -1);
        assert_eq!(rep.image(rep.image(1)), -1);
        // (1)(1): identity.
        assert_eq!(
            standard_representative(&ct(&[1, 1], &[])),
            SignedPermutation::identity(2)
        );
        // (2): a plain transposition block.
        let rep = standard_representative(&ct(&[2], &[]));
        assert_eq!(rep.image(1), 2);
        assert_eq!(rep.image(2), 1);
    }

    #[test]
    fn representative_has_the_type_it_came_from() {
        for (fam, n) in [(ClassicalFamily::C, 5), (ClassicalFamily::D, 4)] {
            for d in enumerate_torus_classes(fam, n, 2, false).unwrap() {
                let rep = standard_representative(&d.cycle_type);
                assert_eq!(rep.cycle_type(), d.cycle_type);
            }
        }
    }

    #[test]
    fn centralizer_orders_examples() {
        assert_eq!(
            centralizer_order(ClassicalFamily::A, 3, &ct(&[3], &[]), None).unwrap(),
            3
        );
        assert_eq!(
            centralizer_order(ClassicalFamily::C, 2, &ct(&[], &[1, 1]), None).unwrap(),
            8
        );
        assert_eq!(
            centralizer_order(ClassicalFamily::A, 4, &ct(&[1, 1, 2], &[]), None).unwrap(),
            4
        );
    }

    #[test]
    fn closed_formulas_match_the_oracle() {
        // Sym(n) and the hyperoctahedral group for n <= 5, W_H for n <= 6.
        for n in 2..=5u32 {
            for fam in [ClassicalFamily::A, ClassicalFamily::C] {
                let oracle = brute_force_weyl_oracle(fam, n).unwrap();
                for (key, data) in &oracle {
                    let formula = centralizer_order(fam, n, &key.cycle_type, None).unwrap();
                    assert_eq!(
                        formula, data.centralizer_order,
                        "{:?} n={} type {}",
                        fam, n, key.cycle_type
                    );
                }
            }
        }
        for n in 2..=6u32 {
            let oracle = brute_force_weyl_oracle(ClassicalFamily::D, n).unwrap();
            for (key, data) in &oracle {
                let split = if key.cycle_type.splits_in_d() {
                    Some(DSplit::First)
                } else {
                    None
                };
                let formula =
                    centralizer_order(ClassicalFamily::D, n, &key.cycle_type, split).unwrap();
                assert_eq!(
                    formula, data.centralizer_order,
                    "D n={} type {} split {}",
                    n, key.cycle_type, key.split_index
                );
            }
        }
    }

    #[test]
    fn class_equation_holds_up_to_rank_7() {
        for n in 2..=7u32 {
            for fam in [ClassicalFamily::A, ClassicalFamily::C, ClassicalFamily::D] {
                let order = weyl_group_order(fam, n);
                let mut sum = 0u64;
                for d in enumerate_torus_classes(fam, n, 2, false).unwrap() {
                    let split = d.split.map(|_| DSplit::First);
                    sum += order / centralizer_order(fam, n, &d.cycle_type, split).unwrap();
                }
                assert_eq!(sum, order, "{:?} n={}", fam, n);
            }
        }
    }

    #[test]
    fn oracle_class_sizes_examples() {
        let a3 = brute_force_weyl_oracle(ClassicalFamily::A, 3).unwrap();
        let mut sizes: Vec<u64> = a3.values().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);

        let c2 = brute_force_weyl_oracle(ClassicalFamily::C, 2).unwrap();
        assert_eq!(c2.len(), 5);
        assert_eq!(c2.values().map(|c| c.size).sum::<u64>(), 8);
    }

    #[test]
    fn twisted_d_centralizers_are_half_the_hyperoctahedral_value() {
        // Observed property of the twisted oracle: every coset class has
        // |C_{W_H}(w0 w)| equal to half the full hyperoctahedral centralizer.
        for n in 2..=5u32 {
            let oracle = brute_force_weyl_oracle(ClassicalFamily::TwistedD, n).unwrap();
            for (key, data) in &oracle {
                let hyper =
                    centralizer_order(ClassicalFamily::C, n, &key.cycle_type, None).unwrap();
                assert_eq!(data.centralizer_order, hyper / 2, "type {}", key.cycle_type);
            }
        }
    }

    #[test]
    fn class_string_grammar_round_trips() {
        let d = TorusClassDescriptor::new(
            ClassicalFamily::C,
            6,
            3,
            ct(&[3, 2], &[1]),
            None,
        )
        .unwrap();
        assert_eq!(d.class_string(), "(2)(3)(1-)");
        let back =
            TorusClassDescriptor::parse_class(ClassicalFamily::C, 6, 3, &d.class_string())
                .unwrap();
        assert_eq!(back, d);

        let split = TorusClassDescriptor::parse_class(ClassicalFamily::D, 4, 2, "(2)(2)#2")
            .unwrap();
        assert_eq!(split.split, Some(DSplit::Second));
        let first = TorusClassDescriptor::parse_class(ClassicalFamily::D, 4, 2, "(2)(2)")
            .unwrap();
        assert_eq!(first.split, Some(DSplit::First));
    }

    #[test]
    fn descriptor_validation() {
        // 2D requires odd negative count.
        assert!(TorusClassDescriptor::new(
            ClassicalFamily::TwistedD,
            4,
            2,
            ct(&[2], &[1, 1]),
            None
        )
        .is_err());
        assert!(TorusClassDescriptor::new(
            ClassicalFamily::TwistedD,
            4,
            2,
            ct(&[2], &[2]),
            None
        )
        .is_ok());
        // D requires even negative count.
        assert!(
            TorusClassDescriptor::new(ClassicalFamily::D, 4, 2, ct(&[1], &[3]), None).is_err()
        );
        // Non-prime-power q.
        assert!(
            TorusClassDescriptor::new(ClassicalFamily::A, 2, 6, ct(&[1, 1], &[]), None).is_err()
        );
        // Simple-range filter.
        assert!(enumerate_torus_classes(ClassicalFamily::TwistedA, 2, 2, true).is_err());
        assert!(enumerate_torus_classes(ClassicalFamily::TwistedA, 2, 2, false).is_ok());
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(32), Some((2, 5)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(12), None);
    }
}
