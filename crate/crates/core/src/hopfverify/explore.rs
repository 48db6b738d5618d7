//! The two routes from `A(a) ⊗ A(β)` to `A ⊗ A`, reported side by side.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::symfunc::literal::print_tensor;
use crate::symfunc::{big_coproduct, big_product, DirectSumElement, Partition, TensorElement};

/// One `(left shape, right shape)` component of an element of `A ⊗ A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeValue {
    pub left: String,
    pub right: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExploreReport {
    pub a: u32,
    pub beta: String,
    pub witness: String,
    pub upper: Vec<ShapeValue>,
    pub lower: Vec<ShapeValue>,
    pub differences: Vec<ShapeValue>,
}

impl ExploreReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "explore mixed a={} beta={}", self.a, self.beta);
        let _ = writeln!(out, "  witness: {}", self.witness);
        for (name, rows) in [("upper", &self.upper), ("lower", &self.lower), ("differences", &self.differences)] {
            let _ = writeln!(out, "  {name}: {}", rows.len());
            for r in rows {
                let _ = writeln!(out, "    {} | {}: {}", r.left, r.right, r.value);
            }
        }
        out
    }
}

/// Elements of `A ⊗ A`, keyed by the canonical shapes of the two sides.
type Bigraded = BTreeMap<(Composition, Composition), TensorElement>;

fn add_pure(acc: &mut Bigraded, left: &[Partition], right: &[Partition], c: &BigInt) {
    let l: Vec<Partition> = left.iter().filter(|p| !p.is_empty()).cloned().collect();
    let r: Vec<Partition> = right.iter().filter(|p| !p.is_empty()).cloned().collect();
    let key = (
        Composition::new(l.iter().map(Partition::weight)),
        Composition::new(r.iter().map(Partition::weight)),
    );
    let labels: Vec<Partition> = l.into_iter().chain(r).collect();
    let mut term = TensorElement::basis_vector(labels);
    term = term.scale(c);
    let slot = acc.entry(key.clone()).or_insert_with(|| TensorElement::zero(term.shape().to_vec()));
    slot.add_assign_unchecked(&term);
    if slot.is_zero() {
        acc.remove(&key);
    }
}

/// `Δ_A` cut at the split slot: each term as a pure `left ⊗ right` pair.
fn cut_coproduct(x: &TensorElement) -> Vec<(Vec<Partition>, Vec<Partition>, BigInt)> {
    let mut out = Vec::new();
    for ((i, _), t) in big_coproduct(x) {
        for (labels, c) in t.terms() {
            out.push((labels[..i].to_vec(), labels[i..].to_vec(), c.clone()));
        }
    }
    out
}

fn as_sum(labels: &[Partition]) -> DirectSumElement {
    DirectSumElement::from_tensor(&TensorElement::basis_vector(labels.to_vec()))
}

fn rows(map: &Bigraded) -> Vec<ShapeValue> {
    map.iter()
        .map(|((l, r), x)| ShapeValue {
            left: l.to_string(),
            right: r.to_string(),
            value: print_tensor(x),
        })
        .collect()
}

/// Evaluates both routes on `W ⊗ V = h_(a) ⊗ h_(b₁) ⊗ … ⊗ h_(b_k)`.
///
/// Upper: the big product `W·V`, then `Δ_A`, each component cut at its
/// split slot. Lower: `Δ_A(W) ⊗ Δ_A(V)`, middle factors swapped, then the
/// big product on each side. Components are keyed by the canonical shapes
/// of the two sides.
pub fn explore_mixed_bidegree(a: u32, beta: &Composition) -> Result<ExploreReport> {
    if beta.is_empty() {
        return Err(Error::InvalidInput("beta must be nonempty".into()));
    }
    let w = if a == 0 {
        TensorElement::unit()
    } else {
        TensorElement::h(&[&[a]])
    };
    let v_slots: Vec<Vec<u32>> = beta.parts().iter().map(|&b| vec![b]).collect();
    let v = TensorElement::h(&v_slots.iter().map(Vec::as_slice).collect::<Vec<_>>());
    let witness = print_tensor(&w.tensor(&v));

    let mut upper = Bigraded::new();
    let product = big_product(&DirectSumElement::from_tensor(&w), &DirectSumElement::from_tensor(&v));
    for t in product.components().values() {
        for (l, r, c) in cut_coproduct(t) {
            add_pure(&mut upper, &l, &r, &c);
        }
    }

    let mut lower = Bigraded::new();
    for (wl, wr, cw) in cut_coproduct(&w) {
        for (vl, vr, cv) in cut_coproduct(&v) {
            let left = big_product(&as_sum(&wl), &as_sum(&vl));
            let right = big_product(&as_sum(&wr), &as_sum(&vr));
            let c = &cw * &cv;
            for x in left.components().values() {
                for y in right.components().values() {
                    for (lx, ax) in x.terms() {
                        for (ly, ay) in y.terms() {
                            add_pure(&mut lower, lx, ly, &(&c * ax * ay));
                        }
                    }
                }
            }
        }
    }

    let mut differences = upper.clone();
    for ((l, _), x) in &lower {
        for (labels, c) in x.terms() {
            add_pure(&mut differences, &labels[..l.len()], &labels[l.len()..], &-c);
        }
    }

    Ok(ExploreReport {
        a,
        beta: beta.to_string(),
        witness,
        upper: rows(&upper),
        lower: rows(&lower),
        differences: rows(&differences),
    })
}
