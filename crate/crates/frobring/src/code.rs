//! Linear codes over a finite ring: exhaustive span enumeration from a
//! generator matrix and duals by brute-force scan of the ambient space.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

/// Default bound on the number of enumerated coefficient combinations.
pub const DEFAULT_CAP: u64 = 1 << 24;

/// A linear code with its codeword set fully enumerated. Word lists are kept
/// sorted so set equality is plain structural equality.
#[derive(Debug, Clone)]
pub struct LinearCode {
    ring: Arc<FiniteRing>,
    length: usize,
    generators: Vec<Vec<Elem>>,
    words: Vec<Vec<Elem>>,
}

impl LinearCode {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn generators(&self) -> &[Vec<Elem>] {
        &self.generators
    }

    pub fn words(&self) -> &[Vec<Elem>] {
        &self.words
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }
}

fn check_cap(base: u64, exp: usize, cap: u64, what: &str) -> Result<()> {
    let mut total = 1u64;
    for _ in 0..exp {
        total = total
            .checked_mul(base)
            .filter(|&t| t <= cap)
            .ok_or_else(|| {
                Error::Size(format!(
                    "{what} needs {base}^{exp} combinations, above the cap of {cap}"
                ))
            })?;
    }
    Ok(())
}

/// Iterate all vectors in R^k through a mixed-radix odometer.
fn for_each_vector(size: usize, k: usize, mut f: impl FnMut(&[Elem])) {
    let mut v = vec![0usize; k];
    loop {
        f(&v);
        let mut pos = k;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            v[pos] += 1;
            if v[pos] < size {
                break;
            }
            v[pos] = 0;
        }
    }
}

/// The code spanned by the rows of a generator matrix: all R-linear
/// combinations, enumerated exhaustively and deduplicated.
pub fn span(ring: Arc<FiniteRing>, generators: Vec<Vec<Elem>>, cap: u64) -> Result<LinearCode> {
    let m = generators.len();
    let n = generators
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::Spec("generator matrix has no rows".into()))?;
    if n == 0 {
        return Err(Error::Spec("code length must be at least 1".into()));
    }
    for (r, row) in generators.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Spec(format!("generator row {r} has wrong length")));
        }
        if let Some(&e) = row.iter().find(|&&e| e >= ring.size()) {
            return Err(Error::Spec(format!(
                "generator row {r} holds element index {e} out of range"
            )));
        }
    }
    check_cap(ring.size() as u64, m, cap, "span enumeration")?;

    let mut words = BTreeSet::new();
    for_each_vector(ring.size(), m, |coeffs| {
        let mut w = vec![ring.zero(); n];
        for (c, g) in coeffs.iter().zip(&generators) {
            for (slot, &ge) in w.iter_mut().zip(g) {
                *slot = ring.add(*slot, ring.mul(*c, ge));
            }
        }
        words.insert(w);
    });

    Ok(LinearCode {
        ring,
        length: n,
        generators,
        words: words.into_iter().collect(),
    })
}

/// The dual code: every vector of R^n orthogonal to all generators. Checking
/// the generators suffices by linearity. The result's generator matrix is its
/// full word list.
pub fn dual(code: &LinearCode, cap: u64) -> Result<LinearCode> {
    let ring = &code.ring;
    check_cap(ring.size() as u64, code.length, cap, "dual enumeration")?;
    let mut words = Vec::new();
    for_each_vector(ring.size(), code.length, |v| {
        let orthogonal = code.generators.iter().all(|g| {
            let mut dot = ring.zero();
            for (&u, &w) in g.iter().zip(v) {
                dot = ring.add(dot, ring.mul(u, w));
            }
            dot == ring.zero()
        });
        if orthogonal {
            words.push(v.to_vec());
        }
    });
    // The odometer visits vectors in sorted order already.
    Ok(LinearCode {
        ring: Arc::clone(ring),
        length: code.length,
        generators: words.clone(),
        words,
    })
}

/// Cardinality of the span of the generator matrix's columns inside R^m.
pub fn column_span_size(code: &LinearCode, cap: u64) -> Result<u64> {
    let ring = &code.ring;
    let m = code.generators.len();
    check_cap(
        ring.size() as u64,
        code.length,
        cap,
        "column span enumeration",
    )?;
    let mut seen = BTreeSet::new();
    for_each_vector(ring.size(), code.length, |coeffs| {
        let mut img = vec![ring.zero(); m];
        for (l, &c) in coeffs.iter().enumerate() {
            for (slot, g) in img.iter_mut().zip(&code.generators) {
                *slot = ring.add(*slot, ring.mul(c, g[l]));
            }
        }
        seen.insert(img);
    });
    Ok(seen.len() as u64)
}
