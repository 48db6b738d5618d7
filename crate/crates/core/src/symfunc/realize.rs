//! The contravariant realization `α ↦ A(α)` and the big product and
//! coproduct on `A = ⊕_α A(α)`.

use std::collections::BTreeMap;
use std::fmt;

use super::{add_coeff, tensor_basis, TensorElement};
use crate::category::{apply_generator, Generator, Realization};
use crate::compositions::{BlockIntervals, Composition};
use crate::contingency::{kappa, sigma_k, ContingencyMatrix};
use crate::error::{Error, Result};

/// Realization in the tensor `h` basis.
///
/// * `∂^{t,i}` acts by the `(n_i, n_{i+1})` component of `Δ` at slot `i`.
/// * `σ^{t,i,a}` multiplies slots `i` and `i+1`.
/// * `τ(K)` moves slots from column order back to row order.
#[derive(Clone, Copy, Debug, Default)]
pub struct SymFuncRealization;

impl Realization for SymFuncRealization {
    type Element = TensorElement;

    fn basis(&self, object: &Composition) -> Vec<TensorElement> {
        tensor_basis(object.parts())
    }

    fn realize_generator(
        &self,
        g: &Generator,
        domain: &Composition,
        x: &TensorElement,
    ) -> Result<TensorElement> {
        let codomain = apply_generator(g, domain)?;
        if x.shape() != codomain.parts() {
            return Err(Error::Realization(format!(
                "{g} expects an element of A{codomain}, got shape {:?}",
                x.shape()
            )));
        }
        match *g {
            Generator::Merge { index, .. } => {
                Ok(x.comultiply_slot(index - 1, domain.parts()[index - 1]))
            }
            Generator::Split { index, .. } => x.multiply_slots(index - 1),
            Generator::Shuffle(ref k) => x.permute_slots(&shuffle_slots(k)),
        }
    }
}

/// For each nonzero entry in row order, the position of the same entry
/// among the nonzero entries in column order, read off `σ_K` at interval
/// starts.
pub fn shuffle_slots(k: &ContingencyMatrix) -> Vec<usize> {
    let kap = kappa(k);
    let sigma = sigma_k(k);
    let rows = BlockIntervals::of_raw(&kap.row_raw);
    let cols = BlockIntervals::of_raw(&kap.col_raw);
    let col_starts: BTreeMap<u32, usize> = cols
        .intervals()
        .iter()
        .filter(|r| !r.is_empty())
        .enumerate()
        .map(|(slot, r)| (r.start, slot))
        .collect();
    rows.intervals()
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| col_starts[&sigma.apply(r.start)])
        .collect()
}

/// Element of `A = ⊕_α A(α)`, one tensor per canonical composition.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct DirectSumElement {
    components: BTreeMap<Composition, TensorElement>,
}

impl DirectSumElement {
    pub fn new() -> Self {
        DirectSumElement::default()
    }

    /// Zero-degree slots are stripped to reach the canonical shape.
    pub fn from_tensor(x: &TensorElement) -> Self {
        let mut out = DirectSumElement::new();
        out.add_tensor(x);
        out
    }

    pub fn add_tensor(&mut self, x: &TensorElement) {
        let x = x.strip_units();
        if x.is_zero() {
            return;
        }
        let key = x.composition();
        let slot = self
            .components
            .entry(key)
            .or_insert_with(|| TensorElement::zero(x.shape().to_vec()));
        slot.add_assign_unchecked(&x);
        if slot.is_zero() {
            let key = x.composition();
            self.components.remove(&key);
        }
    }

    pub fn add(&self, other: &DirectSumElement) -> DirectSumElement {
        let mut out = self.clone();
        for x in other.components.values() {
            out.add_tensor(x);
        }
        out
    }

    pub fn components(&self) -> &BTreeMap<Composition, TensorElement> {
        &self.components
    }

    pub fn component(&self, shape: &Composition) -> Option<&TensorElement> {
        self.components.get(shape)
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }
}

impl fmt::Debug for DirectSumElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DirectSumElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(shape, x)| format!("{shape}: {x}"))
            .collect();
        f.write_str(&parts.join("; "))
    }
}

/// Slotwise product of two tensors with the same number of slots.
pub fn slotwise_product(x: &TensorElement, y: &TensorElement) -> TensorElement {
    assert_eq!(x.shape().len(), y.shape().len(), "slot counts differ");
    let shape = x.shape().iter().zip(y.shape()).map(|(a, b)| a + b).collect();
    let mut out = TensorElement::zero(shape);
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            let key = a.iter().zip(b).map(|(p, q)| p.union(q)).collect();
            add_coeff(&mut out.terms, key, ca * cb);
        }
    }
    out
}

/// `x` placed at the slot positions `at` (increasing) of a tensor with
/// `len` slots, unit slots elsewhere.
fn pad(x: &TensorElement, at: &[usize], len: usize) -> TensorElement {
    let mut out = x.clone();
    for pos in 0..len {
        if !at.contains(&pos) {
            out = out.insert_unit_slot(pos);
        }
    }
    out
}

/// Increasing `k`-subsets of `0..n`, lexicographic.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, buf: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if buf.len() == k {
            out.push(buf.clone());
            return;
        }
        for i in start..n {
            if n - i < k - buf.len() {
                break;
            }
            buf.push(i);
            go(i + 1, n, k, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Product on `A`: for each pair of components, pad the shorter shape with
/// zero parts in every possible way to the longer length and multiply
/// slotwise. Components of equal length multiply slotwise directly.
pub fn big_product(x: &DirectSumElement, y: &DirectSumElement) -> DirectSumElement {
    let mut out = DirectSumElement::new();
    for a in x.components.values() {
        for b in y.components.values() {
            let (p, q) = (a.shape().len(), b.shape().len());
            let len = p.max(q);
            if p <= q {
                for at in subsets(len, p) {
                    out.add_tensor(&slotwise_product(&pad(a, &at, len), b));
                }
            } else {
                for at in subsets(len, q) {
                    out.add_tensor(&slotwise_product(a, &pad(b, &at, len)));
                }
            }
        }
    }
    out
}

/// Coproduct on `A(n₁,…,n_t)`: for each slot `i` (1-based) and each
/// `0 ≤ a ≤ n_i`, the `(a, n_i - a)` component of `Δ` at slot `i`. Shapes
/// keep their zero parts. An element of empty shape has the single
/// component `((0, 0), x)`.
pub fn big_coproduct(x: &TensorElement) -> Vec<((usize, u32), TensorElement)> {
    if x.shape().is_empty() {
        return vec![((0, 0), x.clone())];
    }
    let mut out = Vec::new();
    for (i, &n) in x.shape().iter().enumerate() {
        for a in 0..=n {
            out.push(((i + 1, a), x.comultiply_slot(i, a)));
        }
    }
    out
}
