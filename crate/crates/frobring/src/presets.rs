//! Ready-made ring specifications used by the fuzz suites, the tests and the
//! documentation examples, together with the Lee-weight substitution data for
//! F2+uF2+vF2.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::poly::MPoly;
use crate::ring::RingSpec;

pub fn modular(m: u64) -> RingSpec {
    RingSpec::Modular { modulus: m }
}

/// F2+uF2+vF2 with u^2 = 0, v^2 = v, uv = 0. A non-local principal ideal ring
/// of 8 elements.
pub fn f2_u_v() -> RingSpec {
    let mut products = BTreeMap::new();
    products.insert("1*1".to_string(), vec![0, 0, 0]); // u*u = 0
    products.insert("1*2".to_string(), vec![0, 0, 0]); // u*v = 0
    products.insert("2*2".to_string(), vec![0, 0, 1]); // v*v = v
    RingSpec::Presentation {
        basis: vec!["1".into(), "u".into(), "v".into()],
        moduli: vec![2, 2, 2],
        products,
    }
}

/// F2[u,v]/(u^2, v^2): a local Frobenius ring of 16 elements that is not a
/// principal ideal ring.
pub fn f2_uv_16() -> RingSpec {
    let mut products = BTreeMap::new();
    products.insert("1*1".to_string(), vec![0, 0, 0, 0]); // u*u = 0
    products.insert("1*2".to_string(), vec![0, 0, 0, 1]); // u*v = uv
    products.insert("1*3".to_string(), vec![0, 0, 0, 0]); // u*uv = 0
    products.insert("2*2".to_string(), vec![0, 0, 0, 0]); // v*v = 0
    products.insert("2*3".to_string(), vec![0, 0, 0, 0]); // v*uv = 0
    products.insert("3*3".to_string(), vec![0, 0, 0, 0]); // uv*uv = 0
    RingSpec::Presentation {
        basis: vec!["1".into(), "u".into(), "v".into(), "uv".into()],
        moduli: vec![2, 2, 2, 2],
        products,
    }
}

/// Z4[x]/(x^3 - 2, 2x): a chain ring of 16 elements with residue field F2 and
/// nilpotency index 4.
pub fn z4_chain16() -> RingSpec {
    let mut products = BTreeMap::new();
    products.insert("1*1".to_string(), vec![0, 0, 1]); // x*x = x^2
    products.insert("1*2".to_string(), vec![2, 0, 0]); // x*x^2 = 2
    products.insert("2*2".to_string(), vec![0, 0, 0]); // x^2*x^2 = 2x = 0
    RingSpec::Presentation {
        basis: vec!["1".into(), "x".into(), "x^2".into()],
        moduli: vec![4, 2, 2],
        products,
    }
}

/// F2[u,v]/(u^2, uv, v^2): an 8-element local ring that is NOT Frobenius.
pub fn f2_uv_nonfrobenius() -> RingSpec {
    let mut products = BTreeMap::new();
    products.insert("1*1".to_string(), vec![0, 0, 0]);
    products.insert("1*2".to_string(), vec![0, 0, 0]);
    products.insert("2*2".to_string(), vec![0, 0, 0]);
    RingSpec::Presentation {
        basis: vec!["1".into(), "u".into(), "v".into()],
        moduli: vec![2, 2, 2],
        products,
    }
}

/// The ten built-in Frobenius rings exercised by the identity suites.
pub fn builtin_frobenius() -> Vec<(&'static str, RingSpec)> {
    vec![
        ("Z4", modular(4)),
        ("Z6", modular(6)),
        ("Z8", modular(8)),
        ("Z9", modular(9)),
        ("Z12", modular(12)),
        ("GF(2)", modular(2)),
        ("GF(3)", modular(3)),
        ("F2+uF2+vF2", f2_u_v()),
        ("F2[u,v]/(u2,v2)", f2_uv_16()),
        ("Z4[x]/(x3-2,2x)", z4_chain16()),
    ]
}

/// The principal-ideal-ring subset of the built-ins (everything except
/// F2[u,v]/(u^2, v^2)).
pub fn builtin_pirs() -> Vec<(&'static str, RingSpec)> {
    builtin_frobenius()
        .into_iter()
        .filter(|(name, _)| *name != "F2[u,v]/(u2,v2)")
        .collect()
}

/// Published class order for Z12: 0, 6, 4, 3, 2, 1.
pub fn z12_order() -> Vec<&'static str> {
    vec!["0", "6", "4", "3", "2", "1"]
}

/// Published class order for F2+uF2+vF2: 0, u, v, 1+v, u+v, 1.
pub fn f2_u_v_order() -> Vec<&'static str> {
    vec!["0", "u", "v", "1+v", "u+v", "1"]
}

/// Published class order for F2[u,v]/(u^2,v^2): 0, 1, u, v, u+v, uv.
pub fn f2_uv_16_order() -> Vec<&'static str> {
    vec!["0", "1", "u", "v", "u+v", "uv"]
}

/// Published class order for Z6: 0, 3, 2, 1.
pub fn z6_order() -> Vec<&'static str> {
    vec!["0", "3", "2", "1"]
}

fn bivariate(terms: &[(i64, u16, u16)]) -> MPoly {
    let mut p = MPoly::new(2);
    for &(c, ex, ey) in terms {
        p.add_term(vec![ex, ey], BigInt::from(c).into());
    }
    p
}

/// Per-class Lee weight monomials for F2+uF2+vF2 in the published class
/// order: substituting them into the symmetrized weight enumerator yields the
/// Lee weight enumerator Lee_C(x, y).
pub fn lee_substitution() -> Vec<MPoly> {
    vec![
        bivariate(&[(1, 3, 0)]), // class of 0:   x^3
        bivariate(&[(1, 1, 2)]), // class of u:   x y^2
        bivariate(&[(1, 0, 3)]), // class of v:   y^3
        bivariate(&[(1, 1, 2)]), // class of 1+v: x y^2
        bivariate(&[(1, 2, 1)]), // class of u+v: x^2 y
        bivariate(&[(1, 2, 1)]), // class of 1:   x^2 y
    ]
}

/// Variable images turning the symmetrized weight enumerator of a code over
/// F2+uF2+vF2 into the four-variable symmetrized Lee weight enumerator:
/// slwe_C(x0,x1,x2,x3) = swe_C(x0, x2, x3, x2, x1, x1).
pub fn symmetrized_lee_substitution() -> Vec<MPoly> {
    [0usize, 2, 3, 2, 1, 1]
        .into_iter()
        .map(|v| MPoly::var(4, v))
        .collect()
}
