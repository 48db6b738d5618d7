//! The Hopflike category on compositions.
//!
//! Objects are canonical [`Composition`]s. Morphisms are words in three
//! generator families:
//!
//! * `Merge { len: t, index: i }` adds parts `i` and `i+1` of a length-`t`
//!   composition (`∂^{t,i}`).
//! * `Split { len: t, index: i, at: a }` cuts part `i` into `(a, n_i - a)`
//!   with `0 < a < n_i` (`σ^{t,i,a}`).
//! * `Shuffle(K)` goes from the row-order refinement `κ(α)` of a
//!   contingency matrix to its column-order refinement `κ(β)` (`τ(K)`).
//!
//! Indices are 1-based, as in the textual word syntax.
//!
//! Equality of words is decided semantically, by evaluating both sides
//! through a [`Realization`] on a spanning set; see [`semantic_equal`].

mod parse;
mod relations;

use std::fmt;

use crate::compositions::{refines, Composition};
use crate::contingency::{block_decompose, kappa, ContingencyMatrix};
use crate::error::{Error, Result};

pub use parse::parse_word;
pub use relations::{enumerate_relation_instances, mixed_instance, Family, RelationInstance};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    Merge { len: usize, index: usize },
    Split { len: usize, index: usize, at: u32 },
    Shuffle(ContingencyMatrix),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Merge { len, index } => write!(f, "d[{len},{index}]"),
            Generator::Split { len, index, at } => write!(f, "s[{len},{index},{at}]"),
            Generator::Shuffle(k) => write!(f, "tau[{k}]"),
        }
    }
}

/// Codomain of `g` on `domain`, or why `g` does not apply there.
pub fn apply_generator(g: &Generator, domain: &Composition) -> Result<Composition> {
    let bad = |reason: String| Error::GeneratorDomain {
        domain: domain.to_string(),
        reason,
    };
    let parts = domain.parts();
    match *g {
        Generator::Merge { len, index } => {
            if len != parts.len() {
                return Err(bad(format!("{g} needs a length-{len} domain")));
            }
            if index == 0 || index >= len {
                return Err(bad(format!("{g} needs 1 <= i <= {}", len.saturating_sub(1))));
            }
            let mut out = parts.to_vec();
            let right = out.remove(index);
            out[index - 1] += right;
            Ok(Composition::new(out))
        }
        Generator::Split { len, index, at } => {
            if len != parts.len() {
                return Err(bad(format!("{g} needs a length-{len} domain")));
            }
            if index == 0 || index > len {
                return Err(bad(format!("{g} needs 1 <= i <= {len}")));
            }
            let part = parts[index - 1];
            if at == 0 || at >= part {
                return Err(bad(format!("{g} needs 0 < a < {part}")));
            }
            let mut out = parts.to_vec();
            out[index - 1] = at;
            out.insert(index, part - at);
            Ok(Composition::new(out))
        }
        Generator::Shuffle(ref k) => {
            let kap = kappa(k);
            if kap.row_order() != *domain {
                return Err(bad(format!(
                    "{g} starts at the row order {}",
                    kap.row_order()
                )));
            }
            Ok(kap.col_order())
        }
    }
}

/// A source object and a chain of generator steps, applied left to right.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MorphismWord {
    source: Composition,
    steps: Vec<Generator>,
    objects: Vec<Composition>,
}

impl MorphismWord {
    pub fn identity(source: Composition) -> Self {
        MorphismWord {
            objects: vec![source.clone()],
            source,
            steps: Vec::new(),
        }
    }

    /// Validates the chain condition; errors name the 1-based failing step.
    pub fn new(source: Composition, steps: Vec<Generator>) -> Result<Self> {
        let mut objects = Vec::with_capacity(steps.len() + 1);
        objects.push(source.clone());
        for (k, g) in steps.iter().enumerate() {
            let next = apply_generator(g, objects.last().unwrap()).map_err(|e| Error::Chain {
                step: k + 1,
                message: e.to_string(),
            })?;
            objects.push(next);
        }
        Ok(MorphismWord {
            source,
            steps,
            objects,
        })
    }

    pub fn source(&self) -> &Composition {
        &self.source
    }

    pub fn target(&self) -> &Composition {
        self.objects.last().unwrap()
    }

    pub fn steps(&self) -> &[Generator] {
        &self.steps
    }

    /// `objects()[k]` is the domain of step `k`; the last entry is the target.
    pub fn objects(&self) -> &[Composition] {
        &self.objects
    }
}

impl fmt::Display for MorphismWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.source)?;
        for g in &self.steps {
            write!(f, " ; {g}")?;
        }
        Ok(())
    }
}

/// `first` followed by `second`.
pub fn compose(first: &MorphismWord, second: &MorphismWord) -> Result<MorphismWord> {
    if first.target() != second.source() {
        return Err(Error::Composition {
            left: first.target().to_string(),
            right: second.source().to_string(),
        });
    }
    let mut steps = first.steps.clone();
    steps.extend(second.steps.iter().cloned());
    let mut objects = first.objects.clone();
    objects.extend(second.objects.iter().skip(1).cloned());
    Ok(MorphismWord {
        source: first.source.clone(),
        steps,
        objects,
    })
}

/// Splits taking `coarse` to its refinement `fine`, left to right within
/// each part: each part sheds its first piece until one piece is left.
pub fn split_chain(coarse: &Composition, fine: &Composition) -> Result<Vec<Generator>> {
    let grouping = refines(coarse, fine)?
        .ok_or_else(|| Error::InvalidPair(format!("{fine} does not refine {coarse}")))?;
    let mut steps = Vec::new();
    let mut len = coarse.len();
    let mut index = 1;
    let mut pieces = fine.parts().iter();
    for run in grouping {
        for _ in 0..run - 1 {
            let at = *pieces.next().unwrap();
            steps.push(Generator::Split { len, index, at });
            len += 1;
            index += 1;
        }
        pieces.next();
        index += 1;
    }
    Ok(steps)
}

/// Merges taking `fine` to the recombination `coarse`, left to right.
pub fn merge_chain(fine: &Composition, coarse: &Composition) -> Result<Vec<Generator>> {
    let grouping = refines(coarse, fine)?
        .ok_or_else(|| Error::InvalidPair(format!("{coarse} is not a recombination of {fine}")))?;
    let mut steps = Vec::new();
    let mut len = fine.len();
    for (index, run) in grouping.into_iter().enumerate() {
        for _ in 0..run - 1 {
            steps.push(Generator::Merge {
                len,
                index: index + 1,
            });
            len -= 1;
        }
    }
    Ok(steps)
}

/// The intermediate object of the mixed relation for `k`: the totals of the
/// finest block-diagonal decomposition of `k`. Indecomposable matrices give
/// the one-part composition `(n)`.
pub fn gamma_of(k: &ContingencyMatrix) -> Composition {
    Composition::new(block_decompose(k).iter().map(ContingencyMatrix::total))
}

/// A contravariant functor out of the category: objects go to spaces with a
/// distinguished spanning set, a step `g: α -> β` goes to a linear map
/// `A(β) -> A(α)`.
pub trait Realization {
    type Element: Clone + PartialEq + fmt::Debug;

    /// Spanning set of `A(object)`, in a fixed order.
    fn basis(&self, object: &Composition) -> Vec<Self::Element>;

    /// `A(g)` applied to `x ∈ A(codomain)`; `domain` is the source of `g`.
    fn realize_generator(
        &self,
        g: &Generator,
        domain: &Composition,
        x: &Self::Element,
    ) -> Result<Self::Element>;

    /// `A(w): A(target) -> A(source)`, applying the steps in reverse.
    fn realize_word(&self, w: &MorphismWord, x: &Self::Element) -> Result<Self::Element> {
        let mut acc = x.clone();
        for (g, domain) in w.steps().iter().zip(w.objects()).rev() {
            acc = self.realize_generator(g, domain, &acc)?;
        }
        Ok(acc)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Comparison<E> {
    Equal {
        checked: usize,
    },
    /// The first spanning element (in basis order) on which the two sides
    /// differ, with both images.
    Differs {
        witness: E,
        left: E,
        right: E,
    },
}

impl<E> Comparison<E> {
    pub fn is_equal(&self) -> bool {
        matches!(self, Comparison::Equal { .. })
    }
}

/// Compares the realized maps of two parallel words on the spanning set of
/// `A(target)`.
pub fn semantic_equal<R: Realization>(
    left: &MorphismWord,
    right: &MorphismWord,
    realization: &R,
) -> Result<Comparison<R::Element>> {
    if left.source() != right.source() || left.target() != right.target() {
        return Err(Error::InvalidPair(format!(
            "{} -> {} and {} -> {} are not parallel",
            left.source(),
            left.target(),
            right.source(),
            right.target()
        )));
    }
    let basis = realization.basis(left.target());
    for x in &basis {
        let l = realization.realize_word(left, x)?;
        let r = realization.realize_word(right, x)?;
        if l != r {
            return Ok(Comparison::Differs {
                witness: x.clone(),
                left: l,
                right: r,
            });
        }
    }
    Ok(Comparison::Equal {
        checked: basis.len(),
    })
}
