//! Finite commutative rings with identity, constructed from explicit
//! specifications and validated exhaustively against the ring axioms.
//!
//! Elements are dense indices `0..size`. Everything downstream consumes only
//! the two Cayley tables, so modular, presented, product and raw-table rings
//! are handled uniformly.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub type Elem = usize;

/// Largest supported ring; every enumeration here is exhaustive, so sizes are
/// capped at desk scale.
pub const MAX_RING_SIZE: usize = 64;

/// Set of ring elements backed by a 128-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElemSet(u128);

impl ElemSet {
    pub fn empty() -> Self {
        ElemSet(0)
    }

    pub fn singleton(e: Elem) -> Self {
        ElemSet(1u128 << e)
    }

    pub fn insert(&mut self, e: Elem) {
        self.0 |= 1u128 << e;
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..128).filter(|&e| self.contains(e))
    }
}

impl FromIterator<Elem> for ElemSet {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        let mut s = ElemSet::empty();
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Construction recipe for a finite commutative ring.
///
/// The JSON form uses a `kind` discriminator: `modular`, `presentation`,
/// `product` or `tables`. Presentation basis products are keyed `"i*j"` with
/// `1 <= i <= j` (basis index 0 is the ring identity and its products are
/// implied).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum RingSpec {
    Modular {
        modulus: u64,
    },
    Presentation {
        basis: Vec<String>,
        moduli: Vec<u64>,
        products: BTreeMap<String, Vec<i64>>,
    },
    Product {
        factors: Vec<RingSpec>,
    },
    Tables {
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

/// A finite commutative ring with identity, given by total addition and
/// multiplication tables over element indices `0..size`.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    size: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    zero: Elem,
    one: Elem,
    units: ElemSet,
    labels: Vec<String>,
    label_index: HashMap<String, Elem>,
    spec: RingSpec,
    digest: String,
}

impl FiniteRing {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.size + b] as Elem
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.size + b] as Elem
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn units(&self) -> ElemSet {
        self.units
    }

    pub fn is_unit(&self, e: Elem) -> bool {
        self.units.contains(e)
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    /// Hex digest of the canonical serialized spec; identifies the ring in reports.
    pub fn digest(&self) -> &str {
        &self.digest
    }

    /// The principal ideal aR.
    pub fn principal_ideal(&self, a: Elem) -> ElemSet {
        self.elements().map(|b| self.mul(a, b)).collect()
    }

    /// The associate orbit aR^× = {au : u a unit}.
    pub fn unit_orbit(&self, a: Elem) -> ElemSet {
        self.units.iter().map(|u| self.mul(a, u)).collect()
    }

    /// Elementwise sum {x + y : x in s, y in t}; an ideal whenever s and t are.
    pub fn ideal_sum(&self, s: ElemSet, t: ElemSet) -> ElemSet {
        let mut out = ElemSet::empty();
        for x in s.iter() {
            for y in t.iter() {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    /// Every ideal of the ring: the closure of the principal ideals under
    /// ideal sums, computed as a fixpoint. Sorted by (cardinality, mask).
    pub fn all_ideals(&self) -> Vec<ElemSet> {
        let principals: Vec<ElemSet> = {
            let mut seen = std::collections::BTreeSet::new();
            self.elements()
                .map(|a| self.principal_ideal(a))
                .filter(|i| seen.insert(*i))
                .collect()
        };
        let mut known: std::collections::BTreeSet<ElemSet> = principals.iter().copied().collect();
        let mut frontier: Vec<ElemSet> = principals.clone();
        while let Some(i) = frontier.pop() {
            for p in &principals {
                let s = self.ideal_sum(i, *p);
                if known.insert(s) {
                    frontier.push(s);
                }
            }
        }
        let mut out: Vec<ElemSet> = known.into_iter().collect();
        out.sort_by_key(|i| i.len());
        out
    }

    /// Resolve an element from its display label, a bracketed coordinate
    /// tuple, or (for modular rings) any integer representative.
    pub fn parse_element(&self, text: &str) -> Result<Elem> {
        let text = text.trim();
        if let Some(&e) = self.label_index.get(text) {
            return Ok(e);
        }
        match &self.spec {
            RingSpec::Modular { modulus } => {
                let v: i64 = text
                    .parse()
                    .map_err(|_| Error::Spec(format!("unknown element '{text}'")))?;
                Ok(v.rem_euclid(*modulus as i64) as Elem)
            }
            RingSpec::Presentation { basis, moduli, .. } => {
                let coords = parse_presentation_coords(text, basis, moduli)?;
                Ok(coords_to_index(&coords, moduli))
            }
            _ => Err(Error::Spec(format!("unknown element '{text}'"))),
        }
    }
}

/// Outcome of the Frobenius test: for every ideal I the product
/// |I|·|Ann(I)| must equal |R|; failing ideals are reported as witnesses.
#[derive(Debug, Clone)]
pub struct FrobeniusReport {
    pub is_frobenius: bool,
    pub witnesses: Vec<FrobeniusWitness>,
}

#[derive(Debug, Clone)]
pub struct FrobeniusWitness {
    pub ideal: ElemSet,
    pub annihilator: ElemSet,
    pub product: u64,
}

/// Test the Frobenius property via the annihilator-cardinality criterion at
/// length 1: enumerate all ideals and require |I|·|Ann(I)| = |R| for each.
pub fn is_frobenius(ring: &FiniteRing) -> FrobeniusReport {
    let mut witnesses = Vec::new();
    for ideal in ring.all_ideals() {
        let ann: ElemSet = ring
            .elements()
            .filter(|&r| ideal.iter().all(|i| ring.mul(r, i) == ring.zero()))
            .collect();
        let product = (ideal.len() * ann.len()) as u64;
        if product != ring.size() as u64 {
            witnesses.push(FrobeniusWitness {
                ideal,
                annihilator: ann,
                product,
            });
        }
    }
    FrobeniusReport {
        is_frobenius: witnesses.is_empty(),
        witnesses,
    }
}

/// Build and exhaustively validate a ring from its specification.
pub fn build_ring(spec: &RingSpec) -> Result<FiniteRing> {
    let (size, add, mul, labels) = expand_spec(spec)?;
    if size == 0 {
        return Err(Error::Spec("ring must have at least one element".into()));
    }
    if size > MAX_RING_SIZE {
        return Err(Error::Spec(format!(
            "ring size {size} exceeds the supported maximum {MAX_RING_SIZE}"
        )));
    }

    let at = |t: &[u8], a: usize, b: usize| t[a * size + b] as usize;

    // Identities first, then the full axiom sweep.
    let zero = (0..size)
        .find(|&z| (0..size).all(|a| at(&add, z, a) == a && at(&add, a, z) == a))
        .ok_or_else(|| Error::Validation("no additive identity".into()))?;
    let one = (0..size)
        .find(|&u| (0..size).all(|a| at(&mul, u, a) == a && at(&mul, a, u) == a))
        .ok_or_else(|| Error::Validation("no multiplicative identity".into()))?;

    for a in 0..size {
        if !(0..size).any(|b| at(&add, a, b) == zero) {
            return Err(Error::Validation(format!(
                "element {} has no additive inverse",
                labels[a]
            )));
        }
    }
    for a in 0..size {
        for b in 0..size {
            if at(&add, a, b) != at(&add, b, a) {
                return Err(Error::Validation(format!(
                    "add not commutative at ({}, {})",
                    labels[a], labels[b]
                )));
            }
            if at(&mul, a, b) != at(&mul, b, a) {
                return Err(Error::Validation(format!(
                    "mul not commutative at ({}, {})",
                    labels[a], labels[b]
                )));
            }
        }
    }
    let triples =
        (0..size).flat_map(|a| (0..size).flat_map(move |b| (0..size).map(move |c| (a, b, c))));
    for (a, b, c) in triples.clone() {
        if at(&add, at(&add, a, b), c) != at(&add, a, at(&add, b, c)) {
            return Err(Error::Validation(format!(
                "add not associative at ({}, {}, {})",
                labels[a], labels[b], labels[c]
            )));
        }
    }
    for (a, b, c) in triples.clone() {
        if at(&mul, at(&mul, a, b), c) != at(&mul, a, at(&mul, b, c)) {
            return Err(Error::Validation(format!(
                "mul not associative at ({}, {}, {}): ({}*{})*{} = {} but {}*({}*{}) = {}",
                labels[a],
                labels[b],
                labels[c],
                labels[a],
                labels[b],
                labels[c],
                labels[at(&mul, at(&mul, a, b), c)],
                labels[a],
                labels[b],
                labels[c],
                labels[at(&mul, a, at(&mul, b, c))],
            )));
        }
    }
    for (a, b, c) in triples {
        if at(&mul, a, at(&add, b, c)) != at(&add, at(&mul, a, b), at(&mul, a, c)) {
            return Err(Error::Validation(format!(
                "mul does not distribute over add at ({}, {}, {})",
                labels[a], labels[b], labels[c]
            )));
        }
    }

    let units: ElemSet = (0..size)
        .filter(|&u| (0..size).any(|v| at(&mul, u, v) == one))
        .collect();

    let mut label_index = HashMap::new();
    for (e, l) in labels.iter().enumerate() {
        if label_index.insert(l.clone(), e).is_some() {
            return Err(Error::Spec(format!("duplicate element label '{l}'")));
        }
    }

    let digest = {
        let json = serde_json::to_string(spec).expect("spec serializes");
        let mut h = Sha256::new();
        h.update(json.as_bytes());
        hex_prefix(&h.finalize(), 16)
    };

    Ok(FiniteRing {
        size,
        add,
        mul,
        zero,
        one,
        units,
        labels,
        label_index,
        spec: spec.clone(),
        digest,
    })
}

fn hex_prefix(bytes: &[u8], len: usize) -> String {
    bytes
        .iter()
        .take(len / 2)
        .map(|b| format!("{b:02x}"))
        .collect()
}

type Expanded = (usize, Vec<u8>, Vec<u8>, Vec<String>);

fn expand_spec(spec: &RingSpec) -> Result<Expanded> {
    match spec {
        RingSpec::Modular { modulus } => expand_modular(*modulus),
        RingSpec::Presentation {
            basis,
            moduli,
            products,
        } => expand_presentation(basis, moduli, products),
        RingSpec::Product { factors } => expand_product(factors),
        RingSpec::Tables { add, mul, labels } => expand_tables(add, mul, labels.as_deref()),
    }
}

fn expand_modular(m: u64) -> Result<Expanded> {
    if m < 2 {
        return Err(Error::Spec("modulus must be at least 2".into()));
    }
    if m as usize > MAX_RING_SIZE {
        return Err(Error::Spec(format!(
            "modulus {m} exceeds the supported maximum {MAX_RING_SIZE}"
        )));
    }
    let size = m as usize;
    let mut add = vec![0u8; size * size];
    let mut mul = vec![0u8; size * size];
    for a in 0..size {
        for b in 0..size {
            add[a * size + b] = ((a + b) % size) as u8;
            mul[a * size + b] = ((a * b) % size) as u8;
        }
    }
    let labels = (0..size).map(|e| e.to_string()).collect();
    Ok((size, add, mul, labels))
}

fn coords_to_index(coords: &[u64], moduli: &[u64]) -> usize {
    // Coordinate 0 is the least significant digit.
    let mut idx = 0usize;
    for (c, m) in coords.iter().zip(moduli).rev() {
        idx = idx * *m as usize + *c as usize;
    }
    idx
}

fn index_to_coords(mut idx: usize, moduli: &[u64]) -> Vec<u64> {
    moduli
        .iter()
        .map(|&m| {
            let c = (idx % m as usize) as u64;
            idx /= m as usize;
            c
        })
        .collect()
}

fn presentation_label(coords: &[u64], basis: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if i == 0 {
            parts.push(c.to_string());
        } else if c == 1 {
            parts.push(basis[i].clone());
        } else {
            parts.push(format!("{c}{}", basis[i]));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

fn parse_presentation_coords(text: &str, basis: &[String], moduli: &[u64]) -> Result<Vec<u64>> {
    let k = basis.len();
    let err = || Error::Spec(format!("unknown element '{text}'"));
    if let Some(inner) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != k {
            return Err(err());
        }
        let mut coords = vec![0u64; k];
        for (i, p) in parts.iter().enumerate() {
            let v: i64 = p.parse().map_err(|_| err())?;
            coords[i] = v.rem_euclid(moduli[i] as i64) as u64;
        }
        return Ok(coords);
    }
    // Sum-of-terms form, e.g. "1+0u+1v", "u+v" or "3+x^2".
    let mut coords = vec![0u64; k];
    for raw in text.split('+') {
        let term = raw.trim();
        if term.is_empty() {
            return Err(err());
        }
        let digits: String = term.chars().take_while(|c| c.is_ascii_digit()).collect();
        let name = &term[digits.len()..];
        let coeff: u64 = if digits.is_empty() {
            1
        } else {
            digits.parse().map_err(|_| err())?
        };
        let pos = if name.is_empty() {
            if digits.is_empty() {
                return Err(err());
            }
            0
        } else {
            basis.iter().position(|b| b == name).ok_or_else(err)?
        };
        coords[pos] = (coords[pos] + coeff) % moduli[pos];
    }
    Ok(coords)
}

fn expand_presentation(
    basis: &[String],
    moduli: &[u64],
    products: &BTreeMap<String, Vec<i64>>,
) -> Result<Expanded> {
    let k = basis.len();
    if k == 0 {
        return Err(Error::Spec("presentation basis is empty".into()));
    }
    if moduli.len() != k {
        return Err(Error::Spec(format!(
            "moduli has {} entries but basis has {k}",
            moduli.len()
        )));
    }
    if moduli.contains(&0) {
        return Err(Error::Spec("moduli entries must be positive".into()));
    }
    let size: usize = moduli
        .iter()
        .try_fold(1usize, |acc, &m| {
            let s = acc.checked_mul(m as usize)?;
            (s <= MAX_RING_SIZE).then_some(s)
        })
        .ok_or_else(|| {
            Error::Spec(format!(
                "presentation size exceeds the supported maximum {MAX_RING_SIZE}"
            ))
        })?;

    // Basis product table; index 0 is the identity so only pairs 1 <= i <= j
    // may appear, and all of them must.
    let mut table = vec![vec![vec![0u64; k]; k]; k];
    for j in 0..k {
        table[0][j][j] = 1 % moduli[j];
        table[j][0][j] = 1 % moduli[j];
    }
    let mut seen = vec![vec![false; k]; k];
    for (key, tuple) in products {
        let (i, j) = parse_product_key(key, k)?;
        if tuple.len() != k {
            return Err(Error::Spec(format!(
                "products[\"{key}\"] must have {k} coordinates"
            )));
        }
        if seen[i][j] {
            return Err(Error::Spec(format!("products[\"{key}\"] given twice")));
        }
        seen[i][j] = true;
        for (c, &v) in tuple.iter().enumerate() {
            let r = v.rem_euclid(moduli[c] as i64) as u64;
            table[i][j][c] = r;
            table[j][i][c] = r;
        }
    }
    for i in 1..k {
        for j in i..k {
            if !seen[i][j] {
                return Err(Error::Spec(format!("products missing key \"{i}*{j}\"")));
            }
        }
    }

    let mut add = vec![0u8; size * size];
    let mut mul = vec![0u8; size * size];
    for a in 0..size {
        let ca = index_to_coords(a, moduli);
        for b in 0..size {
            let cb = index_to_coords(b, moduli);
            let sum: Vec<u64> = ca
                .iter()
                .zip(&cb)
                .zip(moduli)
                .map(|((&x, &y), &m)| (x + y) % m)
                .collect();
            add[a * size + b] = coords_to_index(&sum, moduli) as u8;

            let mut prod = vec![0u64; k];
            for (i, &ai) in ca.iter().enumerate() {
                if ai == 0 {
                    continue;
                }
                for (j, &bj) in cb.iter().enumerate() {
                    if bj == 0 {
                        continue;
                    }
                    for c in 0..k {
                        prod[c] = (prod[c] + ai * bj % moduli[c] * table[i][j][c]) % moduli[c];
                    }
                }
            }
            mul[a * size + b] = coords_to_index(&prod, moduli) as u8;
        }
    }

    let labels = (0..size)
        .map(|e| presentation_label(&index_to_coords(e, moduli), basis))
        .collect();
    Ok((size, add, mul, labels))
}

fn parse_product_key(key: &str, k: usize) -> Result<(usize, usize)> {
    let bad = |why: &str| Error::Spec(format!("products[\"{key}\"]: {why}"));
    let (i, j) = key
        .split_once('*')
        .ok_or_else(|| bad("key must look like \"i*j\""))?;
    let i: usize = i
        .trim()
        .parse()
        .map_err(|_| bad("indices must be integers"))?;
    let j: usize = j
        .trim()
        .parse()
        .map_err(|_| bad("indices must be integers"))?;
    if i == 0 || j == 0 {
        return Err(bad(
            "basis index 0 is the identity; its products are implied",
        ));
    }
    if i > j {
        return Err(bad("indices must satisfy i <= j"));
    }
    if j >= k {
        return Err(bad("basis index out of range"));
    }
    Ok((i, j))
}

fn expand_product(factors: &[RingSpec]) -> Result<Expanded> {
    if factors.is_empty() {
        return Err(Error::Spec("product needs at least one factor".into()));
    }
    let built: Vec<FiniteRing> = factors.iter().map(build_ring).collect::<Result<_>>()?;
    let size: usize = built
        .iter()
        .try_fold(1usize, |acc, r| {
            let s = acc.checked_mul(r.size())?;
            (s <= MAX_RING_SIZE).then_some(s)
        })
        .ok_or_else(|| {
            Error::Spec(format!(
                "product size exceeds the supported maximum {MAX_RING_SIZE}"
            ))
        })?;

    // Lexicographic indexing with the first factor most significant.
    let split = |mut idx: usize| -> Vec<usize> {
        let mut parts = vec![0usize; built.len()];
        for (slot, r) in parts.iter_mut().zip(&built).rev() {
            *slot = idx % r.size();
            idx /= r.size();
        }
        parts
    };
    let join = |parts: &[usize]| -> usize {
        parts
            .iter()
            .zip(&built)
            .fold(0usize, |acc, (&p, r)| acc * r.size() + p)
    };

    let mut add = vec![0u8; size * size];
    let mut mul = vec![0u8; size * size];
    for a in 0..size {
        let pa = split(a);
        for b in 0..size {
            let pb = split(b);
            let s: Vec<usize> = pa
                .iter()
                .zip(&pb)
                .zip(&built)
                .map(|((&x, &y), r)| r.add(x, y))
                .collect();
            let p: Vec<usize> = pa
                .iter()
                .zip(&pb)
                .zip(&built)
                .map(|((&x, &y), r)| r.mul(x, y))
                .collect();
            add[a * size + b] = join(&s) as u8;
            mul[a * size + b] = join(&p) as u8;
        }
    }

    let labels = (0..size)
        .map(|e| {
            let parts = split(e);
            let inner: Vec<&str> = parts.iter().zip(&built).map(|(&p, r)| r.label(p)).collect();
            format!("({})", inner.join(","))
        })
        .collect();
    Ok((size, add, mul, labels))
}

fn expand_tables(
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
    labels: Option<&[String]>,
) -> Result<Expanded> {
    let size = add.len();
    if size == 0 {
        return Err(Error::Spec("add table is empty".into()));
    }
    if mul.len() != size {
        return Err(Error::Spec("add and mul tables disagree on size".into()));
    }
    let mut flat_add = vec![0u8; size * size];
    let mut flat_mul = vec![0u8; size * size];
    for (name, table, flat) in [("add", add, &mut flat_add), ("mul", mul, &mut flat_mul)] {
        for (r, row) in table.iter().enumerate() {
            if row.len() != size {
                return Err(Error::Spec(format!("{name} row {r} has wrong length")));
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= size {
                    return Err(Error::Spec(format!("{name}[{r}][{c}] = {v} out of range")));
                }
                flat[r * size + c] = v as u8;
            }
        }
    }
    let labels = match labels {
        Some(ls) => {
            if ls.len() != size {
                return Err(Error::Spec(
                    "labels length does not match table size".into(),
                ));
            }
            ls.to_vec()
        }
        None => (0..size).map(|e| e.to_string()).collect(),
    };
    Ok((size, flat_add, flat_mul, labels))
}
