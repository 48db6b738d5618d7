//! Symmetric functions over the integers, in the complete homogeneous (`h`),
//! monomial (`m`) and Schur (`s`) bases, and their tensor powers.
//!
//! All structure maps are computed in the `h` basis, where they are purely
//! combinatorial:
//!
//! * `h_λ · h_μ = h_{λ ∪ μ}`,
//! * `Δ h_n = Σ_{i=0}^{n} h_i ⊗ h_{n-i}`, extended multiplicatively.
//!
//! The `m` basis is dual to `h` under the Hall inner product, which is
//! computed from margin counts (see [`hall`]). Schur functions come from the
//! Jacobi–Trudi determinant.
//!
//! [`TensorElement`] is an element of `A(α) = R(α₁) ⊗ … ⊗ R(α_t)` in the
//! tensor `h` basis. Zero-degree slots are allowed; they carry only the
//! empty partition.

pub mod hall;
pub mod literal;
mod realize;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::compositions::Composition;
use crate::error::{Error, Result};

pub use hall::{hall_inner, h_to_m, schur, to_schur, HallTables};
pub use realize::{big_coproduct, big_product, DirectSumElement, SymFuncRealization};

/// A weakly decreasing list of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "{parts:?} is not a partition (positive, weakly decreasing)"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut v: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Union of parts, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::from_unsorted(self.0.iter().chain(&other.0).copied())
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Partitions of `n` in decreasing lexicographic order: `[3], [2,1], [1,1,1]`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rest: u32, cap: u32, buf: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(buf.clone()));
            return;
        }
        for p in (1..=rest.min(cap)).rev() {
            buf.push(p);
            go(rest - p, p, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    H,
    M,
    S,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::H => "h",
            Basis::M => "m",
            Basis::S => "s",
        })
    }
}

/// A homogeneous symmetric function of fixed degree in one basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymElement {
    degree: u32,
    basis: Basis,
    terms: BTreeMap<Partition, BigInt>,
}

impl SymElement {
    pub fn zero(degree: u32, basis: Basis) -> Self {
        SymElement {
            degree,
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The single basis vector `b_λ`.
    pub fn basis_vector(basis: Basis, lambda: Partition) -> Self {
        let mut x = SymElement::zero(lambda.weight(), basis);
        x.terms.insert(lambda, BigInt::one());
        x
    }

    pub fn h(parts: &[u32]) -> Self {
        SymElement::basis_vector(Basis::H, Partition::from_unsorted(parts.iter().copied()))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) -> Result<()> {
        if lambda.weight() != self.degree {
            return Err(Error::InvalidInput(format!(
                "label {lambda} does not have degree {}",
                self.degree
            )));
        }
        add_coeff(&mut self.terms, lambda, coeff);
        Ok(())
    }

    pub fn add(&self, other: &SymElement) -> Result<SymElement> {
        if self.degree != other.degree || self.basis != other.basis {
            return Err(Error::Basis(format!(
                "cannot add degree {} in {} to degree {} in {}",
                self.degree, self.basis, other.degree, other.basis
            )));
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            add_coeff(&mut out.terms, k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> SymElement {
        let mut out = SymElement::zero(self.degree, self.basis);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        }
        out
    }

    fn require_h(&self, what: &str) -> Result<()> {
        if self.basis != Basis::H {
            return Err(Error::Basis(format!("{what} needs the h basis, got {}", self.basis)));
        }
        Ok(())
    }

    /// As a one-slot tensor of shape `(degree)`.
    pub fn to_tensor(&self) -> Result<TensorElement> {
        self.require_h("tensor embedding")?;
        let mut t = TensorElement::zero(vec![self.degree]);
        for (k, v) in &self.terms {
            add_coeff(&mut t.terms, vec![k.clone()], v.clone());
        }
        Ok(t)
    }
}

fn add_coeff<K: Ord>(terms: &mut BTreeMap<K, BigInt>, key: K, coeff: BigInt) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// `x · y` in the `h` basis.
pub fn h_mult(x: &SymElement, y: &SymElement) -> Result<SymElement> {
    x.require_h("multiplication")?;
    y.require_h("multiplication")?;
    let mut out = SymElement::zero(x.degree + y.degree, Basis::H);
    for (a, ca) in &x.terms {
        for (b, cb) in &y.terms {
            add_coeff(&mut out.terms, a.union(b), ca * cb);
        }
    }
    Ok(out)
}

/// All graded components `(u, a-u)` of `Δx`, as tensors of shape `(u, a-u)`
/// for `u = 0..=a`.
pub fn h_comult(x: &SymElement) -> Result<Vec<((u32, u32), TensorElement)>> {
    x.require_h("comultiplication")?;
    let t = x.to_tensor()?;
    Ok((0..=x.degree)
        .map(|u| ((u, x.degree - u), t.comultiply_slot(0, u)))
        .collect())
}

/// Components `(μ, ν)` of `Δh_λ` in bidegree `(u, |λ| - u)`: every way of
/// writing each part `λ_k = j_k + (λ_k - j_k)` with `Σ j_k = u`.
pub fn h_coproduct_terms(lambda: &Partition, u: u32) -> BTreeMap<(Partition, Partition), BigInt> {
    let parts = lambda.parts();
    let mut suffix = vec![0u32; parts.len() + 1];
    for k in (0..parts.len()).rev() {
        suffix[k] = suffix[k + 1] + parts[k];
    }
    let mut out = BTreeMap::new();
    if u > suffix[0] {
        return out;
    }
    let mut left = Vec::with_capacity(parts.len());
    fn go(
        k: usize,
        rest: u32,
        parts: &[u32],
        suffix: &[u32],
        left: &mut Vec<u32>,
        out: &mut BTreeMap<(Partition, Partition), BigInt>,
    ) {
        if k == parts.len() {
            let l = Partition::from_unsorted(left.iter().copied());
            let r = Partition::from_unsorted(parts.iter().zip(left.iter()).map(|(p, j)| p - j));
            add_coeff(out, (l, r), BigInt::one());
            return;
        }
        let lo = rest.saturating_sub(suffix[k + 1]);
        for j in lo..=rest.min(parts[k]) {
            left.push(j);
            go(k + 1, rest - j, parts, suffix, left, out);
            left.pop();
        }
    }
    go(0, u, parts, &suffix, &mut left, &mut out);
    out
}

/// Element of `A(shape)` in the tensor `h` basis. Labels are tuples of
/// partitions, one per slot, with weights matching the shape.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    shape: Vec<u32>,
    terms: BTreeMap<Vec<Partition>, BigInt>,
}

impl TensorElement {
    pub fn zero(shape: Vec<u32>) -> Self {
        TensorElement {
            shape,
            terms: BTreeMap::new(),
        }
    }

    /// The unit of `A(())`, i.e. the integer 1.
    pub fn unit() -> Self {
        TensorElement::scalar(BigInt::one())
    }

    pub fn scalar(c: BigInt) -> Self {
        let mut t = TensorElement::zero(Vec::new());
        add_coeff(&mut t.terms, Vec::new(), c);
        t
    }

    /// `h_{λ₁} ⊗ … ⊗ h_{λ_t}` with coefficient 1.
    pub fn basis_vector(labels: Vec<Partition>) -> Self {
        let shape = labels.iter().map(Partition::weight).collect();
        let mut t = TensorElement::zero(shape);
        t.terms.insert(labels, BigInt::one());
        t
    }

    /// Convenience constructor from raw part lists, one per slot.
    pub fn h(slots: &[&[u32]]) -> Self {
        TensorElement::basis_vector(
            slots
                .iter()
                .map(|s| Partition::from_unsorted(s.iter().copied()))
                .collect(),
        )
    }

    pub fn shape(&self) -> &[u32] {
        &self.shape
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Partition>, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, labels: &[Partition]) -> BigInt {
        self.terms.get(labels).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, labels: Vec<Partition>, coeff: BigInt) -> Result<()> {
        let weights: Vec<u32> = labels.iter().map(Partition::weight).collect();
        if weights != self.shape {
            return Err(Error::InvalidInput(format!(
                "label of degrees {weights:?} does not fit shape {:?}",
                self.shape
            )));
        }
        add_coeff(&mut self.terms, labels, coeff);
        Ok(())
    }

    fn same_shape(&self, other: &TensorElement) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::Realization(format!(
                "shapes {:?} and {:?} differ",
                self.shape, other.shape
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement> {
        self.same_shape(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn sub(&self, other: &TensorElement) -> Result<TensorElement> {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &TensorElement) {
        for (k, v) in &other.terms {
            add_coeff(&mut self.terms, k.clone(), v.clone());
        }
    }

    pub fn scale(&self, c: &BigInt) -> TensorElement {
        let mut out = TensorElement::zero(self.shape.clone());
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        }
        out
    }

    /// `self ⊗ other`, slots concatenated.
    pub fn tensor(&self, other: &TensorElement) -> TensorElement {
        let mut shape = self.shape.clone();
        shape.extend(&other.shape);
        let mut out = TensorElement::zero(shape);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut key = a.clone();
                key.extend(b.iter().cloned());
                add_coeff(&mut out.terms, key, ca * cb);
            }
        }
        out
    }

    /// Multiplies slots `i` and `i + 1` (0-based) into one slot.
    pub fn multiply_slots(&self, i: usize) -> Result<TensorElement> {
        if i + 1 >= self.shape.len() {
            return Err(Error::Realization(format!(
                "no slots {i},{} in shape {:?}",
                i + 1,
                self.shape
            )));
        }
        let mut shape = self.shape.clone();
        let right = shape.remove(i + 1);
        shape[i] += right;
        let mut out = TensorElement::zero(shape);
        for (k, v) in &self.terms {
            let mut key = k.clone();
            let right = key.remove(i + 1);
            key[i] = key[i].union(&right);
            add_coeff(&mut out.terms, key, v.clone());
        }
        Ok(out)
    }

    /// The `(u, n - u)` component of `Δ` applied at slot `i` (0-based),
    /// which becomes two slots.
    pub fn comultiply_slot(&self, i: usize, u: u32) -> TensorElement {
        let mut shape = self.shape.clone();
        let n = shape[i];
        assert!(u <= n, "component {u} exceeds slot degree {n}");
        shape[i] = u;
        shape.insert(i + 1, n - u);
        let mut out = TensorElement::zero(shape);
        for (k, v) in &self.terms {
            for ((l, r), c) in h_coproduct_terms(&k[i], u) {
                let mut key = k.clone();
                key[i] = l;
                key.insert(i + 1, r);
                add_coeff(&mut out.terms, key, v * c);
            }
        }
        out
    }

    /// Output slot `k` is input slot `from[k]`.
    pub fn permute_slots(&self, from: &[usize]) -> Result<TensorElement> {
        let t = self.shape.len();
        let mut seen = vec![false; t];
        if from.len() != t || from.iter().any(|&p| p >= t || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Realization(format!(
                "{from:?} is not a permutation of {t} slots"
            )));
        }
        let shape = from.iter().map(|&p| self.shape[p]).collect();
        let mut out = TensorElement::zero(shape);
        for (k, v) in &self.terms {
            add_coeff(&mut out.terms, from.iter().map(|&p| k[p].clone()).collect(), v.clone());
        }
        Ok(out)
    }

    /// Inserts a unit slot (degree 0) before position `i`.
    pub fn insert_unit_slot(&self, i: usize) -> TensorElement {
        let mut shape = self.shape.clone();
        shape.insert(i, 0);
        let mut out = TensorElement::zero(shape);
        for (k, v) in &self.terms {
            let mut key = k.clone();
            key.insert(i, Partition::empty());
            out.terms.insert(key, v.clone());
        }
        out
    }

    /// Drops zero-degree slots.
    pub fn strip_units(&self) -> TensorElement {
        let keep: Vec<usize> = (0..self.shape.len()).filter(|&i| self.shape[i] > 0).collect();
        let mut out = TensorElement::zero(keep.iter().map(|&i| self.shape[i]).collect());
        for (k, v) in &self.terms {
            out.terms
                .insert(keep.iter().map(|&i| k[i].clone()).collect(), v.clone());
        }
        out
    }

    /// The single slot of a shape-`(n)` tensor as a symmetric function.
    pub fn to_sym(&self) -> Result<SymElement> {
        match self.shape[..] {
            [n] => {
                let mut x = SymElement::zero(n, Basis::H);
                for (k, v) in &self.terms {
                    add_coeff(&mut x.terms, k[0].clone(), v.clone());
                }
                Ok(x)
            }
            [] => {
                let mut x = SymElement::zero(0, Basis::H);
                if let Some(c) = self.terms.get(&Vec::new()) {
                    add_coeff(&mut x.terms, Partition::empty(), c.clone());
                }
                Ok(x)
            }
            _ => Err(Error::Realization(format!(
                "shape {:?} has more than one slot",
                self.shape
            ))),
        }
    }

    /// Canonical composition of the shape.
    pub fn composition(&self) -> Composition {
        Composition::new(self.shape.iter().copied())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&literal::print_tensor(self))
    }
}

/// The tensor basis of `A(shape)`: every tuple of partitions of the parts,
/// slot by slot in the order of [`partitions_of`].
pub fn tensor_basis(shape: &[u32]) -> Vec<TensorElement> {
    let per_slot: Vec<Vec<Partition>> = shape.iter().map(|&n| partitions_of(n)).collect();
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(shape.len());
    fn go(slot: usize, per_slot: &[Vec<Partition>], buf: &mut Vec<Partition>, out: &mut Vec<TensorElement>) {
        if slot == per_slot.len() {
            out.push(TensorElement::basis_vector(buf.clone()));
            return;
        }
        for p in &per_slot[slot] {
            buf.push(p.clone());
            go(slot + 1, per_slot, buf, out);
            buf.pop();
        }
    }
    go(0, &per_slot, &mut buf, &mut out);
    out
}
