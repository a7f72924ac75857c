//! Exact-arithmetic engine for duality identities of linear codes over finite
//! commutative rings.
//!
//! The crate builds finite commutative rings from explicit specifications,
//! derives the combinatorial transform matrices S = QDA⁻¹ (and S^[λ] = QD^λA⁻¹)
//! from the inclusion poset of principal ideals, enumerates codes and their
//! brute-force duals, and verifies the weight- and support-enumerator duality
//! identities with exact integer and rational arithmetic throughout.

pub mod cli;
pub mod code;
pub mod enumerator;
pub mod error;
pub mod fuzz;
pub mod matrix;
pub mod poly;
pub mod poset;
pub mod presets;
pub mod ring;
pub mod transform;
pub mod verify;

use std::sync::Arc;

pub use error::{Error, Result};

use poset::{associate_classes, poset, ClassData, PosetData};
use ring::{is_frobenius, Elem, FiniteRing, FrobeniusReport};
use transform::{build_matrices, PosetMatrices};

/// A ring together with everything the identities need: its associate
/// classes under one fixed order, the principal-ideal poset, the transform
/// matrices and the Frobenius report.
#[derive(Debug, Clone)]
pub struct RingData {
    pub ring: Arc<FiniteRing>,
    pub classes: ClassData,
    pub poset: PosetData,
    pub matrices: PosetMatrices,
    pub frobenius: FrobeniusReport,
}

impl RingData {
    /// Analyze a ring under the default class order (ideal size ascending,
    /// then smallest element).
    pub fn new(ring: FiniteRing) -> Result<Self> {
        Self::with_order(ring, None)
    }

    /// Analyze a ring under an explicit class order given by one element per
    /// class.
    pub fn with_order(ring: FiniteRing, order: Option<&[Elem]>) -> Result<Self> {
        let classes = associate_classes(&ring, order)?;
        let poset_data = poset(&ring, &classes);
        let matrices = build_matrices(&ring, &classes, &poset_data)?;
        let frobenius = is_frobenius(&ring);
        Ok(RingData {
            ring: Arc::new(ring),
            classes,
            poset: poset_data,
            matrices,
            frobenius,
        })
    }

    /// Resolve a comma-separated list of element labels into an order vector,
    /// respecting brackets and parentheses inside labels.
    pub fn parse_order(ring: &FiniteRing, text: &str) -> Result<Vec<Elem>> {
        split_labels(text)
            .iter()
            .map(|l| ring.parse_element(l))
            .collect()
    }
}

/// Split a comma-separated label list, ignoring commas nested in () or [].
pub fn split_labels(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' | '[' => {
                depth += 1;
                cur.push(ch);
            }
            ')' | ']' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(ch),
        }
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}
