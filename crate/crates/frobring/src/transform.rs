//! The MacWilliams transform matrices derived from the principal-ideal poset:
//! S = QDA⁻¹ and its tuple variants S^[λ] = QD^λA⁻¹, together with the
//! principal-ideal-ring decomposition Q = AP and the chain-ring closed form.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::poset::{annihilator, mobius_matrix, zeta_matrix, ClassData, PosetData};
use crate::ring::{Elem, FiniteRing};

/// Exact integer matrices attached to one ring and class order.
#[derive(Debug, Clone)]
pub struct PosetMatrices {
    pub a: IntMatrix,
    pub a_inv: IntMatrix,
    pub d: IntMatrix,
    pub q: IntMatrix,
    pub s: IntMatrix,
}

impl PosetMatrices {
    pub fn classes(&self) -> usize {
        self.a.rows()
    }

    /// The λ-tuple transform Q·D^λ·A⁻¹; λ = 1 gives S itself.
    pub fn s_lambda(&self, lambda: u32) -> IntMatrix {
        let n = self.classes();
        let d_pow = IntMatrix::from_fn(n, n, |i, j| {
            if i == j {
                self.d.get(i, i).pow(lambda)
            } else {
                BigInt::zero()
            }
        });
        self.q.mul(&d_pow).mul(&self.a_inv)
    }
}

/// Q from the annihilator form: q[i][j] = 1 iff a_j R ⊆ (a_i R)^⊥.
pub(crate) fn q_matrix(ring: &FiniteRing, classes: &ClassData) -> IntMatrix {
    let n = classes.count();
    let anns: Vec<_> = classes.reps.iter().map(|&a| annihilator(ring, a)).collect();
    IntMatrix::from_fn(n, n, |i, j| {
        if classes.ideal[j].is_subset(&anns[i]) {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// Q from the containment form: q[i][j] = 0 iff a_i ≠ 0 and some class k with
/// a_i a_k ≠ 0 has a_k R ⊆ a_j R.
fn q_matrix_alt(ring: &FiniteRing, classes: &ClassData) -> IntMatrix {
    let n = classes.count();
    IntMatrix::from_fn(n, n, |i, j| {
        let ai = classes.reps[i];
        let zero_entry = ai != ring.zero()
            && (0..n).any(|k| {
                ring.mul(ai, classes.reps[k]) != ring.zero()
                    && classes.ideal[k].is_subset(&classes.ideal[j])
            });
        if zero_entry {
            BigInt::zero()
        } else {
            BigInt::one()
        }
    })
}

/// Assemble A, A⁻¹, D, Q and S = QDA⁻¹ for a ring under a fixed class order.
///
/// Both definitions of Q are evaluated and cross-checked; a mismatch means a
/// bug or a ring outside the Frobenius class and is reported as an internal
/// error.
pub fn build_matrices(
    ring: &FiniteRing,
    classes: &ClassData,
    poset: &PosetData,
) -> Result<PosetMatrices> {
    let a = zeta_matrix(poset);
    let a_inv = mobius_matrix(&a)?;
    let d = IntMatrix::diagonal(
        &classes
            .ideal_size
            .iter()
            .map(|&s| BigInt::from(s))
            .collect::<Vec<_>>(),
    );
    let q = q_matrix(ring, classes);
    let q_alt = q_matrix_alt(ring, classes);
    if q != q_alt {
        let (i, j) = (0..classes.count())
            .flat_map(|i| (0..classes.count()).map(move |j| (i, j)))
            .find(|&(i, j)| q.get(i, j) != q_alt.get(i, j))
            .unwrap();
        return Err(Error::Internal(format!(
            "the two definitions of Q disagree at ({i},{j}); \
             the ring is likely not Frobenius"
        )));
    }
    if !q.is_symmetric() {
        return Err(Error::Internal("Q is not symmetric".into()));
    }
    let s = q.mul(&d).mul(&a_inv);
    Ok(PosetMatrices { a, a_inv, d, q, s })
}

/// Outcome of factoring Q through the zeta matrix on a principal ideal ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PirDecomposition {
    NotPir,
    Pir {
        /// The annihilator involution on classes: (a_i R)^⊥ = a_{phi(i)} R.
        phi: Vec<usize>,
        /// Whether the current order already satisfies phi(i) = t - i, i.e.
        /// Q = AJ with J the anti-diagonal permutation.
        anti_diagonal: bool,
    },
}

/// For principal ideal rings, recover the permutation P with Q = AP and
/// report whether the current order realizes the anti-diagonal form Q = AJ.
pub fn pir_decomposition(matrices: &PosetMatrices, poset: &PosetData) -> Result<PirDecomposition> {
    if !poset.is_pir {
        return Ok(PirDecomposition::NotPir);
    }
    let n = matrices.classes();
    let phi: Vec<usize> = poset
        .ann_class
        .iter()
        .map(|c| {
            c.ok_or_else(|| Error::Internal("principal ideal without principal annihilator".into()))
        })
        .collect::<Result<_>>()?;
    // P has column j supported at row phi(j).
    let p = IntMatrix::from_fn(n, n, |i, j| {
        if phi[j] == i {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    });
    if matrices.a.mul(&p) != matrices.q {
        return Err(Error::Internal("Q does not factor as A*P".into()));
    }
    let anti_diagonal = (0..n).all(|i| phi[i] == n - 1 - i);
    Ok(PirDecomposition::Pir { phi, anti_diagonal })
}

/// A representative order realizing Q = AJ on a principal ideal ring: classes
/// are paired by the annihilator involution, the at most one self-paired
/// class sits in the middle, and pairs are mirrored around it.
pub fn aj_order(classes: &ClassData, poset: &PosetData) -> Option<Vec<Elem>> {
    if !poset.is_pir {
        return None;
    }
    let n = classes.count();
    let phi: Vec<usize> = poset.ann_class.iter().map(|c| c.unwrap()).collect();
    let mut lowers = Vec::new();
    let mut fixed = None;
    for i in 0..n {
        if phi[i] == i {
            fixed = Some(i);
        } else if (classes.ideal_size[i], classes.reps[i])
            < (classes.ideal_size[phi[i]], classes.reps[phi[i]])
        {
            lowers.push(i);
        }
    }
    lowers.sort_by_key(|&i| (classes.ideal_size[i], classes.reps[i]));
    let mut order: Vec<usize> = lowers.clone();
    order.extend(fixed);
    order.extend(lowers.iter().rev().map(|&i| phi[i]));
    debug_assert_eq!(order.len(), n);
    Some(order.into_iter().map(|i| classes.reps[i]).collect())
}

/// Closed-form transform for a chain ring with residue field size q and
/// nilpotency index ν, at tuple level λ: entry (i, j) is 1 when j = 0,
/// q^{λj} − q^{λ(j−1)} when 1 ≤ j ≤ ν−i, −q^{λ(ν−i)} when j = ν+1−i, and 0
/// otherwise.
pub fn chain_ring_closed_form(q: u64, nu: u32, lambda: u32) -> IntMatrix {
    let n = (nu + 1) as usize;
    let qp = |e: u32| BigInt::from(q).pow(lambda * e);
    IntMatrix::from_fn(n, n, |i, j| {
        let (i, j) = (i as u32, j as u32);
        if j == 0 {
            BigInt::one()
        } else if j <= nu - i {
            qp(j) - qp(j - 1)
        } else if j == nu + 1 - i {
            -qp(nu - i)
        } else {
            BigInt::zero()
        }
    })
}

/// Verify the Kronecker law A = ⊗A_i, D = ⊗D_i, Q = ⊗Q_i between factor
/// matrices and a product ring's matrices under lexicographic class order.
pub fn kronecker_check(factors: &[&PosetMatrices], product: &PosetMatrices) -> Result<bool> {
    if factors.is_empty() {
        return Err(Error::Order("no factor matrices given".into()));
    }
    let expected: usize = factors.iter().map(|f| f.classes()).product();
    if expected != product.classes() {
        return Err(Error::Order(format!(
            "product has {} classes but the factors multiply to {expected}",
            product.classes()
        )));
    }
    let kron = |pick: fn(&PosetMatrices) -> &IntMatrix| -> IntMatrix {
        let mut acc = pick(factors[0]).clone();
        for f in &factors[1..] {
            acc = acc.kronecker(pick(f));
        }
        acc
    };
    Ok(kron(|m| &m.a) == product.a && kron(|m| &m.d) == product.d && kron(|m| &m.q) == product.q)
}

/// Class representatives of a product ring ordered lexicographically by the
/// factor class indices, matching the Kronecker layout.
pub fn lexicographic_product_order(
    product_ring: &FiniteRing,
    factor_rings: &[&FiniteRing],
    factor_classes: &[&ClassData],
) -> Result<Vec<Elem>> {
    if factor_rings.len() != factor_classes.len() || factor_rings.is_empty() {
        return Err(Error::Order(
            "factor lists must be non-empty and aligned".into(),
        ));
    }
    let total: usize = factor_rings.iter().map(|r| r.size()).product();
    if total != product_ring.size() {
        return Err(Error::Order(format!(
            "product ring has {} elements but the factors multiply to {total}",
            product_ring.size()
        )));
    }
    let mut order = Vec::new();
    let counts: Vec<usize> = factor_classes.iter().map(|c| c.count()).collect();
    let mut idx = vec![0usize; counts.len()];
    loop {
        // Element with coordinates (a_{idx_0}, a_{idx_1}, ...), first factor
        // most significant, matching the product ring's element indexing.
        let mut e = 0usize;
        for ((&i, cd), r) in idx.iter().zip(factor_classes).zip(factor_rings) {
            e = e * r.size() + cd.reps[i];
        }
        order.push(e);
        // Odometer over class indices.
        let mut pos = idx.len();
        loop {
            if pos == 0 {
                return Ok(order);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < counts[pos] {
                break;
            }
            idx[pos] = 0;
        }
    }
}
