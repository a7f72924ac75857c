//! Sparse multivariate polynomials over exact rational coefficients.
//!
//! Terms are keyed by dense exponent vectors; coefficients are
//! arbitrary-precision rationals so substitutions and transform scalings stay
//! exact. Zero coefficients are dropped eagerly, which makes structural
//! equality coincide with polynomial equality.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Coeff = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    vars: usize,
    terms: BTreeMap<Vec<u16>, Coeff>,
}

impl MPoly {
    pub fn new(vars: usize) -> Self {
        MPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Coeff) -> Self {
        let mut p = Self::new(vars);
        p.add_term(vec![0; vars], c);
        p
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, Coeff::one())
    }

    pub fn var(vars: usize, v: usize) -> Self {
        assert!(v < vars);
        let mut key = vec![0u16; vars];
        key[v] = 1;
        let mut p = Self::new(vars);
        p.add_term(key, Coeff::one());
        p
    }

    /// Σ coeffs[j]·x_j.
    pub fn linear_form(vars: usize, coeffs: &[BigInt]) -> Self {
        assert_eq!(coeffs.len(), vars);
        let mut p = Self::new(vars);
        for (j, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut key = vec![0u16; vars];
                key[j] = 1;
                p.add_term(key, Coeff::from(c.clone()));
            }
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u16>, Coeff> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: Vec<u16>, c: Coeff) {
        assert_eq!(key.len(), self.vars, "term key has wrong arity");
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

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = MPoly::new(self.vars);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let key: Vec<u16> = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                out.add_term(key, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut out = MPoly::one(self.vars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> MPoly {
        if c.is_zero() {
            return MPoly::new(self.vars);
        }
        let mut out = MPoly::new(self.vars);
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * c);
        }
        out
    }

    /// Sum of all coefficients, i.e. the evaluation at all-ones.
    pub fn coeff_sum(&self) -> Coeff {
        self.terms.values().fold(Coeff::zero(), |acc, c| acc + c)
    }

    /// Substitute every variable by its image and expand exactly. All images
    /// must share one target arity.
    pub fn substitute(&self, images: &[MPoly]) -> Result<MPoly> {
        if images.len() != self.vars {
            return Err(Error::Assignment(format!(
                "assignment covers {} variables but the polynomial has {}",
                images.len(),
                self.vars
            )));
        }
        let out_vars = match images.first() {
            Some(p) => p.vars,
            None => return Ok(MPoly::constant(0, self.coeff_sum())),
        };
        if images.iter().any(|p| p.vars != out_vars) {
            return Err(Error::Assignment(
                "assignment images disagree on the target alphabet".into(),
            ));
        }

        // Cache image powers per variable up to the max exponent in use.
        let mut powers: Vec<Vec<MPoly>> = images
            .iter()
            .map(|p| vec![MPoly::one(out_vars), p.clone()])
            .collect();
        let mut out = MPoly::new(out_vars);
        for (key, c) in &self.terms {
            let mut term = MPoly::constant(out_vars, c.clone());
            for (v, &e) in key.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[v].len() <= e as usize {
                    let next = powers[v].last().unwrap().mul(&images[v]);
                    powers[v].push(next);
                }
                term = term.mul(&powers[v][e as usize]);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Canonical text form: terms in descending exponent order, integer or
    /// rational coefficients, `*` between factors and `^` for powers.
    pub fn to_text(&self, namer: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (key, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (v, &e) in key.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(namer(v)),
                    _ => factors.push(format!("{}^{}", namer(v), e)),
                }
            }
            let abs = c.abs();
            let mut body = String::new();
            if factors.is_empty() {
                write!(body, "{abs}").unwrap();
            } else {
                if !abs.is_one() {
                    write!(body, "{abs}*").unwrap();
                }
                body.push_str(&factors.join("*"));
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&body);
        }
        out
    }
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64) -> Coeff {
    Coeff::from(BigInt::from(n))
}
