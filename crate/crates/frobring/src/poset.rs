//! Associate classes, principal ideals, annihilators and the inclusion poset
//! of principal ideals with its zeta and Möbius matrices.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{poset_inverse, IntMatrix};
use crate::ring::{Elem, ElemSet, FiniteRing};

/// The associate-class decomposition of a ring: orbits under unit
/// multiplication, one principal ideal per class.
///
/// Under the default ordering (ideal size ascending, then smallest element)
/// class 0 is the zero class and the unit class comes last; explicit
/// representative orders override that layout.
#[derive(Debug, Clone)]
pub struct ClassData {
    pub reps: Vec<Elem>,
    pub class_of: Vec<usize>,
    pub ideal: Vec<ElemSet>,
    pub ideal_size: Vec<usize>,
}

impl ClassData {
    /// Number of classes, t+1.
    pub fn count(&self) -> usize {
        self.reps.len()
    }

    /// Index of the last class, t.
    pub fn top(&self) -> usize {
        self.reps.len() - 1
    }
}

/// Compute the associate classes of the ring as orbits rR^×.
///
/// `rep_order` pins an explicit class order by listing one element per class;
/// it is required to reproduce published matrix layouts that deviate from the
/// default order.
pub fn associate_classes(ring: &FiniteRing, rep_order: Option<&[Elem]>) -> Result<ClassData> {
    // Orbits, canonically keyed by their smallest member.
    let mut orbit_of = vec![usize::MAX; ring.size()];
    let mut orbits: Vec<ElemSet> = Vec::new();
    for e in ring.elements() {
        if orbit_of[e] != usize::MAX {
            continue;
        }
        let orbit = ring.unit_orbit(e);
        let idx = orbits.len();
        for m in orbit.iter() {
            orbit_of[m] = idx;
        }
        orbits.push(orbit);
    }

    let canonical_rep = |orbit: &ElemSet| orbit.iter().next().expect("orbit non-empty");
    let order: Vec<Elem> = match rep_order {
        Some(given) => {
            if given.len() != orbits.len() {
                return Err(Error::Order(format!(
                    "rep order lists {} elements but there are {} classes",
                    given.len(),
                    orbits.len()
                )));
            }
            let mut seen = vec![false; orbits.len()];
            for &e in given {
                if e >= ring.size() {
                    return Err(Error::Order(format!("element index {e} out of range")));
                }
                let o = orbit_of[e];
                if seen[o] {
                    return Err(Error::Order(format!(
                        "elements '{}' and earlier entries name the same class",
                        ring.label(e)
                    )));
                }
                seen[o] = true;
            }
            given.to_vec()
        }
        None => {
            let mut reps: Vec<Elem> = orbits.iter().map(canonical_rep).collect();
            reps.sort_by_key(|&r| (ring.principal_ideal(r).len(), r));
            reps
        }
    };

    let mut class_index = vec![usize::MAX; orbits.len()];
    for (c, &rep) in order.iter().enumerate() {
        class_index[orbit_of[rep]] = c;
    }
    let class_of: Vec<usize> = (0..ring.size()).map(|e| class_index[orbit_of[e]]).collect();
    let ideal: Vec<ElemSet> = order.iter().map(|&r| ring.principal_ideal(r)).collect();
    let ideal_size: Vec<usize> = ideal.iter().map(ElemSet::len).collect();

    Ok(ClassData {
        reps: order,
        class_of,
        ideal,
        ideal_size,
    })
}

/// The annihilator (cR)^⊥ = {r : cr = 0}; always an ideal.
pub fn annihilator(ring: &FiniteRing, c: Elem) -> ElemSet {
    ring.elements()
        .filter(|&r| ring.mul(c, r) == ring.zero())
        .collect()
}

/// The inclusion poset of the principal ideals, plus the annihilator map on
/// classes and the full ideal lattice.
#[derive(Debug, Clone)]
pub struct PosetData {
    /// leq[i][j] holds iff a_i R ⊆ a_j R.
    pub leq: Vec<Vec<bool>>,
    /// Class of (a_i R)^⊥ when that annihilator is principal, None otherwise.
    pub ann_class: Vec<Option<usize>>,
    pub all_ideals: Vec<ElemSet>,
    pub is_pir: bool,
}

pub fn poset(ring: &FiniteRing, classes: &ClassData) -> PosetData {
    let n = classes.count();
    let leq: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| classes.ideal[i].is_subset(&classes.ideal[j]))
                .collect()
        })
        .collect();
    let ann_class: Vec<Option<usize>> = (0..n)
        .map(|i| {
            let ann = annihilator(ring, classes.reps[i]);
            classes.ideal.iter().position(|id| *id == ann)
        })
        .collect();
    let all_ideals = ring.all_ideals();
    let is_pir = all_ideals.iter().all(|id| classes.ideal.contains(id));
    PosetData {
        leq,
        ann_class,
        all_ideals,
        is_pir,
    }
}

/// Adjacency (zeta) matrix of the poset: A[i][j] = 1 iff a_i R ⊆ a_j R.
pub fn zeta_matrix(poset: &PosetData) -> IntMatrix {
    let n = poset.leq.len();
    IntMatrix::from_fn(n, n, |i, j| {
        if poset.leq[i][j] {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// Exact inverse of a zeta matrix; its entries are the Möbius function values
/// of the poset.
pub fn mobius_matrix(zeta: &IntMatrix) -> Result<IntMatrix> {
    poset_inverse(zeta)
}

/// Cover relations of the poset: pairs (i, j) with a_i R ⊊ a_j R and nothing
/// strictly between.
pub fn hasse_covers(poset: &PosetData) -> Vec<(usize, usize)> {
    let n = poset.leq.len();
    let strict = |i: usize, j: usize| i != j && poset.leq[i][j];
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if strict(i, j) && !(0..n).any(|k| strict(i, k) && strict(k, j)) {
                covers.push((i, j));
            }
        }
    }
    covers.sort_unstable();
    covers
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntMatrix;
    use crate::presets;
    use crate::ring::build_ring;

    fn modular(m: u64) -> FiniteRing {
        build_ring(&presets::modular(m)).unwrap()
    }

    #[test]
    fn z12_default_classes() {
        let r = modular(12);
        let cd = associate_classes(&r, None).unwrap();
        assert_eq!(cd.reps, vec![0, 6, 4, 3, 2, 1]);
        assert_eq!(cd.ideal_size, vec![1, 2, 3, 4, 6, 12]);
        // Orbits computed by brute force.
        assert_eq!(r.unit_orbit(2), [2, 10].into_iter().collect());
        assert_eq!(r.unit_orbit(3), [3, 9].into_iter().collect());
        assert_eq!(r.unit_orbit(1), [1, 5, 7, 11].into_iter().collect());
    }

    #[test]
    fn z6_default_classes() {
        let r = modular(6);
        let cd = associate_classes(&r, None).unwrap();
        assert_eq!(cd.reps, vec![0, 3, 2, 1]);
        assert_eq!(cd.ideal_size, vec![1, 2, 3, 6]);
    }

    #[test]
    fn classes_agree_with_principal_ideals() {
        for (_, spec) in presets::builtin_frobenius() {
            let r = build_ring(&spec).unwrap();
            let cd = associate_classes(&r, None).unwrap();
            for a in r.elements() {
                for b in r.elements() {
                    let same_ideal = r.principal_ideal(a) == r.principal_ideal(b);
                    assert_eq!(cd.class_of[a] == cd.class_of[b], same_ideal);
                }
            }
            assert_eq!(cd.reps[0], r.zero());
            assert_eq!(cd.ideal_size[0], 1);
            assert_eq!(cd.ideal_size[cd.top()], r.size());
        }
    }

    #[test]
    fn rep_order_must_cover_all_classes() {
        let r = modular(6);
        assert!(matches!(
            associate_classes(&r, Some(&[0, 3, 2, 4])),
            Err(Error::Order(_))
        ));
        assert!(matches!(
            associate_classes(&r, Some(&[0, 3, 2])),
            Err(Error::Order(_))
        ));
    }

    #[test]
    fn annihilator_examples() {
        let r = modular(6);
        assert_eq!(annihilator(&r, 2), [0, 3].into_iter().collect());
        assert_eq!(annihilator(&r, 0), r.elements().collect());
        assert_eq!(annihilator(&r, 1), [0].into_iter().collect());
    }

    #[test]
    fn z12_hasse_covers() {
        let r = modular(12);
        let cd = associate_classes(&r, None).unwrap();
        let p = poset(&r, &cd);
        assert_eq!(
            hasse_covers(&p),
            vec![(0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (3, 5), (4, 5)]
        );
    }

    #[test]
    fn z6_annihilator_involution() {
        let r = modular(6);
        let cd = associate_classes(&r, None).unwrap();
        let p = poset(&r, &cd);
        assert_eq!(p.ann_class, vec![Some(3), Some(2), Some(1), Some(0)]);
        assert!(p.is_pir);
    }

    #[test]
    fn f2_uv_16_is_not_pir() {
        let r = build_ring(&presets::f2_uv_16()).unwrap();
        let cd = associate_classes(&r, None).unwrap();
        let p = poset(&r, &cd);
        assert!(!p.is_pir);
        // uR + vR is a non-principal ideal of 8 elements.
        let u = r.parse_element("u").unwrap();
        let v = r.parse_element("v").unwrap();
        let sum = r.ideal_sum(r.principal_ideal(u), r.principal_ideal(v));
        assert_eq!(sum.len(), 8);
        assert!(p.all_ideals.contains(&sum));
        assert!(!cd.ideal.contains(&sum));
    }

    #[test]
    fn zeta_matrix_shape() {
        for (_, spec) in presets::builtin_frobenius() {
            let r = build_ring(&spec).unwrap();
            let cd = associate_classes(&r, None).unwrap();
            let p = poset(&r, &cd);
            let a = zeta_matrix(&p);
            let n = cd.count();
            for i in 0..n {
                assert!(a.get(i, i).is_one());
                assert!(a.get(0, i).is_one(), "zero ideal below everything");
                assert!(a.get(i, n - 1).is_one(), "unit ideal above everything");
            }
        }
    }

    #[test]
    fn mobius_laws() {
        for (_, spec) in presets::builtin_frobenius() {
            let r = build_ring(&spec).unwrap();
            let cd = associate_classes(&r, None).unwrap();
            let p = poset(&r, &cd);
            let a = zeta_matrix(&p);
            let inv = mobius_matrix(&a).unwrap();
            let n = cd.count();
            assert_eq!(a.mul(&inv), IntMatrix::identity(n));
            for k in 0..n {
                // Column 0 of the inverse is the first unit vector.
                let expect = if k == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                assert_eq!(*inv.get(k, 0), expect);
                // Row sums vanish except in the top row.
                let sum: BigInt = (0..n).map(|j| inv.get(k, j).clone()).sum();
                let expect = if k == n - 1 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                assert_eq!(sum, expect);
            }
        }
    }

    #[test]
    fn inclusion_reverses_under_annihilators() {
        for (_, spec) in presets::builtin_frobenius() {
            let r = build_ring(&spec).unwrap();
            let cd = associate_classes(&r, None).unwrap();
            let n = cd.count();
            let anns: Vec<ElemSet> = cd.reps.iter().map(|&a| annihilator(&r, a)).collect();
            for i in 0..n {
                // Double annihilator restores the ideal.
                let back: ElemSet = r
                    .elements()
                    .filter(|&x| anns[i].iter().all(|y| r.mul(x, y) == r.zero()))
                    .collect();
                assert_eq!(back, cd.ideal[i]);
                for j in 0..n {
                    assert_eq!(
                        cd.ideal[i].is_subset(&cd.ideal[j]),
                        anns[j].is_subset(&anns[i])
                    );
                }
            }
        }
    }

    #[test]
    fn pir_annihilator_map_is_involution() {
        for (_, spec) in presets::builtin_pirs() {
            let r = build_ring(&spec).unwrap();
            let cd = associate_classes(&r, None).unwrap();
            let p = poset(&r, &cd);
            assert!(p.is_pir);
            let phi: Vec<usize> = p.ann_class.iter().map(|c| c.unwrap()).collect();
            let fixed = (0..cd.count()).filter(|&i| phi[i] == i).count();
            assert!(fixed <= 1);
            for i in 0..cd.count() {
                assert_eq!(phi[phi[i]], i);
            }
            // Annihilators of principal ideals are exactly the principal ideals.
            let mut anns: Vec<ElemSet> = cd.reps.iter().map(|&a| annihilator(&r, a)).collect();
            let mut ideals = cd.ideal.clone();
            anns.sort();
            ideals.sort();
            assert_eq!(anns, ideals);
        }
    }
}
