//! Symmetrized weight and support enumerators of linear codes, their
//! λ-tuple generalizations, and the multiset counting functions behind the
//! combinatorial identities.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::poly::{Coeff, MPoly};
use crate::poset::{ClassData, PosetData};
use crate::ring::{ElemSet, FiniteRing};
use crate::transform::q_matrix;

/// Symmetrized weight enumerator: a polynomial in one variable per associate
/// class, every term of total degree n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweEnum {
    pub classes: usize,
    pub length: usize,
    pub poly: MPoly,
}

/// Symmetrized support enumerator: one grid variable per (class, coordinate)
/// pair. Terms are keyed by the per-coordinate class choice, which is exactly
/// one variable per coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SseEnum {
    pub classes: usize,
    pub length: usize,
    pub terms: BTreeMap<Vec<u16>, Coeff>,
}

impl SweEnum {
    pub fn zero(classes: usize, length: usize) -> Self {
        SweEnum {
            classes,
            length,
            poly: MPoly::new(classes),
        }
    }

    pub fn coeff_sum(&self) -> Coeff {
        self.poly.coeff_sum()
    }

    /// Exact substitution of each class variable by a polynomial image.
    pub fn specialize(&self, images: &[MPoly]) -> Result<MPoly> {
        self.poly.substitute(images)
    }

    /// Hamming specialization x_0 -> x, all other classes -> y; class 0 must
    /// be the zero class.
    pub fn hamming(&self) -> MPoly {
        let images: Vec<MPoly> = (0..self.classes)
            .map(|i| MPoly::var(2, usize::from(i != 0)))
            .collect();
        self.poly.substitute(&images).expect("arity matches")
    }

    pub fn to_text(&self) -> String {
        self.poly.to_text(&|v| format!("x{v}"))
    }
}

impl SseEnum {
    pub fn zero(classes: usize, length: usize) -> Self {
        SseEnum {
            classes,
            length,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, key: Vec<u16>, c: Coeff) {
        debug_assert_eq!(key.len(), self.length);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff_sum(&self) -> Coeff {
        self.terms.values().fold(Coeff::zero(), |acc, c| acc + c)
    }

    /// Collapse the grid to the weight alphabet: x_{i,l} -> x_i.
    pub fn to_swe(&self) -> SweEnum {
        let mut out = SweEnum::zero(self.classes, self.length);
        for (key, c) in &self.terms {
            let mut exp = vec![0u16; self.classes];
            for &cls in key {
                exp[cls as usize] += 1;
            }
            out.poly.add_term(exp, c.clone());
        }
        out
    }

    /// Canonical text with grid variables printed `x{class}_{coordinate}`,
    /// coordinates 1-based.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        use num_traits::{One, Signed};
        let mut out = String::new();
        for (key, c) in &self.terms {
            let mut factors: Vec<(u16, usize)> =
                key.iter().enumerate().map(|(l, &i)| (i, l + 1)).collect();
            factors.sort_unstable();
            let body: Vec<String> = factors.iter().map(|(i, l)| format!("x{i}_{l}")).collect();
            let abs = c.abs();
            let mut term = String::new();
            if !abs.is_one() {
                term.push_str(&format!("{abs}*"));
            }
            term.push_str(&body.join("*"));
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&term);
        }
        out
    }
}

fn class_key(classes: &ClassData, word: &[usize]) -> Vec<u16> {
    word.iter().map(|&e| classes.class_of[e] as u16).collect()
}

/// The symmetrized weight enumerator of a code: each codeword contributes the
/// monomial counting its coordinates per associate class.
pub fn swe(code: &LinearCode, classes: &ClassData) -> SweEnum {
    let mut out = SweEnum::zero(classes.count(), code.length());
    for word in code.words() {
        let mut exp = vec![0u16; classes.count()];
        for &e in word {
            exp[classes.class_of[e]] += 1;
        }
        out.poly
            .add_term(exp, Coeff::from(num_bigint::BigInt::from(1)));
    }
    out
}

/// The symmetrized support enumerator: one term per codeword, selecting the
/// grid variable of its class at each coordinate.
pub fn sse(code: &LinearCode, classes: &ClassData) -> SseEnum {
    let mut out = SseEnum::zero(classes.count(), code.length());
    for word in code.words() {
        out.add_term(
            class_key(classes, word),
            Coeff::from(num_bigint::BigInt::from(1)),
        );
    }
    out
}

/// The λ-tuple symmetrized support enumerator: iterates all λ-tuples of
/// codewords and classifies each coordinate by the ideal generated by the λ
/// entries. Requires every such ideal to be principal, which holds on
/// principal ideal rings.
pub fn tuple_sse(
    code: &LinearCode,
    classes: &ClassData,
    poset: &PosetData,
    lambda: u32,
    cap: u64,
) -> Result<SseEnum> {
    if lambda == 0 {
        return Err(Error::Spec("lambda must be at least 1".into()));
    }
    let _ = poset; // principality is detected per coordinate below
    let ring = code.ring();
    if (code.size() as u64)
        .checked_pow(lambda)
        .is_none_or(|t| t > cap)
    {
        return Err(Error::Size(format!(
            "tuple enumeration needs {}^{} combinations, above the cap of {cap}",
            code.size(),
            lambda
        )));
    }

    let ideal_of_class: HashMap<ElemSet, usize> = classes
        .ideal
        .iter()
        .enumerate()
        .map(|(i, s)| (*s, i))
        .collect();
    let mut sum_cache: HashMap<(ElemSet, usize), ElemSet> = HashMap::new();

    let word_keys: Vec<Vec<u16>> = code.words().iter().map(|w| class_key(classes, w)).collect();

    let mut out = SseEnum::zero(classes.count(), code.length());
    let zero_ideal = ElemSet::singleton(ring.zero());
    let mut tuple = vec![0usize; lambda as usize];
    'outer: loop {
        let mut key = Vec::with_capacity(code.length());
        for l in 0..code.length() {
            let mut acc = zero_ideal;
            for &w in &tuple {
                let cls = word_keys[w][l] as usize;
                acc = *sum_cache
                    .entry((acc, cls))
                    .or_insert_with(|| ring.ideal_sum(acc, classes.ideal[cls]));
            }
            match ideal_of_class.get(&acc) {
                Some(&cls) => key.push(cls as u16),
                None => {
                    return Err(Error::NonPrincipal(format!(
                        "coordinate {} of tuple {:?} generates a non-principal ideal",
                        l + 1,
                        tuple
                    )))
                }
            }
        }
        out.add_term(key, Coeff::from(num_bigint::BigInt::from(1)));

        let mut pos = tuple.len();
        loop {
            if pos == 0 {
                break 'outer;
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < code.size() {
                break;
            }
            tuple[pos] = 0;
        }
    }
    Ok(out)
}

/// The λ-tuple symmetrized weight enumerator, the grid collapse of the tuple
/// support enumerator.
pub fn tuple_swe(
    code: &LinearCode,
    classes: &ClassData,
    poset: &PosetData,
    lambda: u32,
    cap: u64,
) -> Result<SweEnum> {
    Ok(tuple_sse(code, classes, poset, lambda, cap)?.to_swe())
}

/// Conventional bound on brute-force multiset enumeration; the identity
/// oracles are test-scale only.
pub const ORACLE_CAP: u64 = 100_000;

/// A submultiset X of t·[n], identified with its multiplicity function
/// m_X: [n] -> {0..t}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultisetX {
    pub m: Vec<usize>,
}

impl MultisetX {
    pub fn new(m: Vec<usize>) -> Self {
        MultisetX { m }
    }

    /// |M_i(X)| for each class level i.
    pub fn level_sizes(&self, classes: usize) -> Vec<usize> {
        let mut out = vec![0usize; classes];
        for &v in &self.m {
            out[v] += 1;
        }
        out
    }

    /// All (t+1)^n multiplicity functions in lexicographic order.
    pub fn enumerate_all(classes: usize, length: usize, cap: u64) -> Result<Vec<MultisetX>> {
        let total = (classes as u64)
            .checked_pow(length as u32)
            .filter(|&t| t <= cap)
            .ok_or_else(|| {
                Error::Size(format!(
                    "multiset enumeration needs {classes}^{length} entries, above the cap of {cap}"
                ))
            })?;
        let mut out = Vec::with_capacity(total as usize);
        let mut m = vec![0usize; length];
        loop {
            out.push(MultisetX::new(m.clone()));
            let mut pos = length;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                m[pos] += 1;
                if m[pos] < classes {
                    break;
                }
                m[pos] = 0;
            }
        }
    }
}

/// A_C(X): codewords whose symmetrized supports match the level sets of X
/// exactly, i.e. whose class vector equals the multiplicity function.
pub fn count_a(code: &LinearCode, classes: &ClassData, x: &MultisetX) -> u64 {
    code.words()
        .iter()
        .filter(|w| {
            w.iter()
                .zip(&x.m)
                .all(|(&e, &mx)| classes.class_of[e] == mx)
        })
        .count() as u64
}

/// B^F_C(X): codewords c with S_i(c) contained in the union of the level sets
/// M_j(X) over j in F_i, for every class i. Coordinatewise this reads
/// m_X(l) ∈ F_{class(c_l)}.
pub fn count_b(
    code: &LinearCode,
    classes: &ClassData,
    family: &[BTreeSet<usize>],
    x: &MultisetX,
) -> Result<u64> {
    if family.len() != classes.count() {
        return Err(Error::Family(format!(
            "family has {} members but there are {} classes",
            family.len(),
            classes.count()
        )));
    }
    if let Some(i) = family.iter().position(BTreeSet::is_empty) {
        return Err(Error::Family(format!("family member F_{i} is empty")));
    }
    Ok(code
        .words()
        .iter()
        .filter(|w| {
            w.iter()
                .zip(&x.m)
                .all(|(&e, &mx)| family[classes.class_of[e]].contains(&mx))
        })
        .count() as u64)
}

/// The 0/1 matrix of a subset family: row i marks the members of F_i.
pub fn family_matrix(family: &[BTreeSet<usize>], classes: usize) -> IntMatrix {
    use num_bigint::BigInt;
    use num_traits::One;
    IntMatrix::from_fn(family.len(), classes, |i, j| {
        if family[i].contains(&j) {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// The two canonical families behind the transform: I_i collects the classes
/// j with a_j a_k != 0 whenever a_i a_k != 0, and J_i the classes j with
/// a_k R not contained in a_j R whenever a_i a_k != 0. Their matrices must
/// reproduce the zeta matrix and Q respectively.
#[derive(Debug, Clone)]
pub struct CanonicalFamilies {
    pub i_family: Vec<BTreeSet<usize>>,
    pub j_family: Vec<BTreeSet<usize>>,
    pub p_i: IntMatrix,
    pub p_j: IntMatrix,
}

pub fn canonical_families(
    ring: &FiniteRing,
    classes: &ClassData,
    poset: &PosetData,
) -> Result<CanonicalFamilies> {
    let n = classes.count();
    let nonzero_product =
        |i: usize, k: usize| ring.mul(classes.reps[i], classes.reps[k]) != ring.zero();
    let mut i_family = Vec::with_capacity(n);
    let mut j_family = Vec::with_capacity(n);
    for i in 0..n {
        let ks: Vec<usize> = (0..n).filter(|&k| nonzero_product(i, k)).collect();
        let fi: BTreeSet<usize> = (0..n)
            .filter(|&j| ks.iter().all(|&k| nonzero_product(j, k)))
            .collect();
        let fj: BTreeSet<usize> = (0..n)
            .filter(|&j| {
                ks.iter()
                    .all(|&k| !classes.ideal[k].is_subset(&classes.ideal[j]))
            })
            .collect();
        i_family.push(fi);
        j_family.push(fj);
    }
    let p_i = family_matrix(&i_family, n);
    let p_j = family_matrix(&j_family, n);
    if p_i != crate::poset::zeta_matrix(poset) {
        return Err(Error::Internal(
            "the I-family matrix does not equal the zeta matrix".into(),
        ));
    }
    if p_j != q_matrix(ring, classes) {
        return Err(Error::Internal(
            "the J-family matrix does not equal Q".into(),
        ));
    }
    Ok(CanonicalFamilies {
        i_family,
        j_family,
        p_i,
        p_j,
    })
}
