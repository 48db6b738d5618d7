//! Enumerable instances of the relation families.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{gamma_of, merge_chain, split_chain, Generator, MorphismWord};
use crate::compositions::{compositions_up_to, enumerate_compositions, Composition};
use crate::contingency::{enumerate_matrices, kappa, sigma_k, ContingencyMatrix, EntryMode};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Merges against merges.
    Dd,
    /// Splits against splits.
    Ss,
    /// Shuffles against shuffles.
    Tt,
    /// Split chain, shuffle, merge chain against merge chain, split chain.
    Mixed,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Dd, Family::Ss, Family::Tt, Family::Mixed];

    pub fn name(self) -> &'static str {
        match self {
            Family::Dd => "dd",
            Family::Ss => "ss",
            Family::Tt => "tt",
            Family::Mixed => "mixed",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown relation family '{s}' (dd, ss, tt, mixed)")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationInstance {
    pub family: Family,
    pub left: MorphismWord,
    pub right: MorphismWord,
    /// The matrix of a mixed instance.
    pub matrix: Option<ContingencyMatrix>,
}

impl RelationInstance {
    fn new(family: Family, source: &Composition, left: Vec<Generator>, right: Vec<Generator>) -> Self {
        let left = MorphismWord::new(source.clone(), left).expect("admissible left side");
        let right = MorphismWord::new(source.clone(), right).expect("admissible right side");
        debug_assert_eq!(left.target(), right.target());
        RelationInstance {
            family,
            left,
            right,
            matrix: None,
        }
    }
}

impl fmt::Display for RelationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}  ==  {}", self.left, self.right)
    }
}

/// Every instance of `family` whose source has sum at most `max_sum` and at
/// most `max_len` parts. For `tt` the bound applies to both sides of each
/// shuffle; for `mixed` it applies to the margins `α` and `β`.
pub fn enumerate_relation_instances(
    family: Family,
    max_sum: u32,
    max_len: usize,
) -> Result<Vec<RelationInstance>> {
    if max_sum == 0 || max_len == 0 {
        return Err(Error::Usage("relation bounds must be at least 1".into()));
    }
    Ok(match family {
        Family::Dd => dd_instances(max_sum, max_len),
        Family::Ss => ss_instances(max_sum, max_len),
        Family::Tt => tt_instances(max_sum, max_len),
        Family::Mixed => mixed_instances(max_sum, max_len),
    })
}

fn merge(len: usize, index: usize) -> Generator {
    Generator::Merge { len, index }
}

fn split(len: usize, index: usize, at: u32) -> Generator {
    Generator::Split { len, index, at }
}

fn dd_instances(max_sum: u32, max_len: usize) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    for src in compositions_up_to(max_sum, max_len) {
        let t = src.len();
        if t < 3 {
            continue;
        }
        let mut push = |l: Vec<Generator>, r: Vec<Generator>| {
            out.push(RelationInstance::new(Family::Dd, &src, l, r));
        };
        for i in 1..t {
            for j in 1..=i.saturating_sub(2) {
                push(vec![merge(t, i), merge(t - 1, j)], vec![merge(t, j), merge(t - 1, i - 1)]);
            }
            if i >= 2 {
                push(
                    vec![merge(t, i), merge(t - 1, i - 1)],
                    vec![merge(t, i - 1), merge(t - 1, i - 1)],
                );
            }
            if i + 1 < t {
                push(vec![merge(t, i), merge(t - 1, i)], vec![merge(t, i + 1), merge(t - 1, i)]);
            }
            for j in i + 1..t {
                push(vec![merge(t, i), merge(t - 1, j - 1)], vec![merge(t, j), merge(t - 1, i)]);
            }
        }
    }
    out
}

fn ss_instances(max_sum: u32, max_len: usize) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    for src in compositions_up_to(max_sum, max_len) {
        let t = src.len();
        let n = |i: usize| src.parts()[i - 1];
        let mut push = |l: Vec<Generator>, r: Vec<Generator>| {
            out.push(RelationInstance::new(Family::Ss, &src, l, r));
        };
        for i in 1..=t {
            for a in 1..n(i) {
                for j in 1..i {
                    for b in 1..n(j) {
                        push(vec![split(t, i, a), split(t + 1, j, b)], vec![split(t, j, b), split(t + 1, i + 1, a)]);
                    }
                }
                for b in 1..a {
                    push(vec![split(t, i, a), split(t + 1, i, b)], vec![split(t, i, b), split(t + 1, i + 1, a - b)]);
                }
                for b in 1..n(i) - a {
                    push(vec![split(t, i, a), split(t + 1, i + 1, b)], vec![split(t, i, a + b), split(t + 1, i, a)]);
                }
                for j in i + 2..=t {
                    for b in 1..n(j) {
                        push(vec![split(t, i, a), split(t + 1, j + 1, b)], vec![split(t, j, b), split(t + 1, i, a)]);
                    }
                }
            }
        }
    }
    out
}

/// Matrices with at most `max_len` rows and columns, total at most
/// `max_sum`, and a row-order refinement of at most `max_len` parts.
fn bounded_matrices(max_sum: u32, max_len: usize) -> Vec<ContingencyMatrix> {
    let mut out = Vec::new();
    for alpha in compositions_up_to(max_sum, max_len) {
        for beta in enumerate_compositions(alpha.sum(), Some(max_len)) {
            for k in enumerate_matrices(&alpha, &beta, EntryMode::NonNegative).expect("equal sums") {
                if kappa(&k).row_order().len() <= max_len {
                    out.push(k);
                }
            }
        }
    }
    out
}

/// Composable pairs `τ(K1) ; τ(K2)`. The right side is a single `τ(K3)`
/// inducing the composite slot permutation between the same endpoints, or
/// the empty word when the composite is the identity. Pairs whose composite
/// is neither have no relation and are skipped.
fn tt_instances(max_sum: u32, max_len: usize) -> Vec<RelationInstance> {
    let matrices = bounded_matrices(max_sum, max_len);
    let mut by_source: BTreeMap<Composition, Vec<&ContingencyMatrix>> = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for k in &matrices {
        let kap = kappa(k);
        by_source.entry(kap.row_order()).or_default().push(k);
        witnesses
            .entry((kap.row_order(), kap.col_order(), sigma_k(k)))
            .or_insert(k);
    }
    let mut out = Vec::new();
    for k1 in &matrices {
        let kap1 = kappa(k1);
        let Some(nexts) = by_source.get(&kap1.col_order()) else {
            continue;
        };
        for k2 in nexts {
            let source = kap1.row_order();
            let target = kappa(k2).col_order();
            let composite = sigma_k(k2).after(&sigma_k(k1));
            let left = vec![Generator::Shuffle(k1.clone()), Generator::Shuffle((*k2).clone())];
            let right = if let Some(k3) = witnesses.get(&(source.clone(), target.clone(), composite.clone())) {
                vec![Generator::Shuffle((*k3).clone())]
            } else if source == target && composite.images().iter().enumerate().all(|(p, &q)| q as usize == p + 1) {
                Vec::new()
            } else {
                continue;
            };
            out.push(RelationInstance::new(Family::Tt, &source, left, right));
        }
    }
    out
}

fn mixed_instances(max_sum: u32, max_len: usize) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    for alpha in compositions_up_to(max_sum, max_len) {
        for beta in enumerate_compositions(alpha.sum(), Some(max_len)) {
            for k in enumerate_matrices(&alpha, &beta, EntryMode::NonNegative).expect("equal sums") {
                out.push(mixed_instance(&k));
            }
        }
    }
    out
}

/// The mixed relation for `k` with margins `α`, `β` and `γ = gamma_of(k)`:
/// `σ(α ≺ κ(α)) ; τ(K) ; ∂(κ(β) < β)` against `∂(α < γ) ; σ(γ ≺ β)`.
pub fn mixed_instance(k: &ContingencyMatrix) -> RelationInstance {
    let alpha = k.row_margins();
    let beta = k.col_margins();
    let kap = kappa(k);
    let gamma = gamma_of(k);
    let mut left = split_chain(&alpha, &kap.row_order()).expect("row order refines α");
    left.push(Generator::Shuffle(k.clone()));
    left.extend(merge_chain(&kap.col_order(), &beta).expect("β recombines the column order"));
    let mut right = merge_chain(&alpha, &gamma).expect("γ recombines α");
    right.extend(split_chain(&gamma, &beta).expect("β refines γ"));
    let mut inst = RelationInstance::new(Family::Mixed, &alpha, left, right);
    inst.matrix = Some(k.clone());
    inst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::parse_word;

    fn steps(w: &MorphismWord) -> String {
        w.steps().iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ; ")
    }

    #[test]
    fn dd_example_is_listed() {
        let all = enumerate_relation_instances(Family::Dd, 6, 3).unwrap();
        let want_l = parse_word("(1,2,3) ; d[3,2] ; d[2,1]").unwrap();
        let want_r = parse_word("(1,2,3) ; d[3,1] ; d[2,1]").unwrap();
        assert!(all.iter().any(|r| r.left == want_l && r.right == want_r));
        for r in &all {
            assert_eq!(r.left.target(), r.right.target());
            assert_eq!(r.left.target().len(), r.left.source().len() - 2);
        }
    }

    #[test]
    fn dd_count_matches_closed_form() {
        // Length-t source: (t-2)(t-3)/2 with j <= i-2, t-2 with j = i-1,
        // t-2 with j = i, (t-1)(t-2)/2 with j >= i+1.
        let t = 5usize;
        let src = Composition::new([1, 1, 1, 1, 1]);
        let n = enumerate_relation_instances(Family::Dd, 5, 5)
            .unwrap()
            .into_iter()
            .filter(|r| r.left.source() == &src)
            .count();
        let below = (t - 2) * (t - 3) / 2;
        assert_eq!(n, below + 2 * (t - 2) + (t - 1) * (t - 2) / 2);
    }

    #[test]
    fn ss_has_nothing_on_two() {
        let all = enumerate_relation_instances(Family::Ss, 2, 1).unwrap();
        assert!(all.is_empty());
        let three = enumerate_relation_instances(Family::Ss, 3, 1).unwrap();
        assert!(!three.is_empty());
        for r in &three {
            assert_eq!(r.left.target(), &Composition::new([1, 1, 1]));
        }
    }

    #[test]
    fn tt_pairs_chain_and_close() {
        let all = enumerate_relation_instances(Family::Tt, 4, 4).unwrap();
        for r in &all {
            assert_eq!(r.left.steps().len(), 2);
            assert!(r.right.steps().len() <= 1);
        }
        // The 2x2 all-ones shuffle is an involution on slots, so the pair
        // closes up to a shuffle with identity permutation.
        let k: ContingencyMatrix = "[[1,1],[1,1]]".parse().unwrap();
        let twice = vec![Generator::Shuffle(k.clone()), Generator::Shuffle(k)];
        let r = all.iter().find(|r| r.left.steps() == twice).unwrap();
        match r.right.steps() {
            [Generator::Shuffle(k3)] => assert_eq!(sigma_k(k3), crate::contingency::Permutation::identity(4)),
            [] => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn mixed_two_by_two_matches_the_worked_example() {
        let k: ContingencyMatrix = "[[1,2],[3,4]]".parse().unwrap();
        let r = mixed_instance(&k);
        assert_eq!(r.left.source(), &Composition::new([3, 7]));
        assert_eq!(steps(&r.left), "s[2,1,1] ; s[3,3,3] ; tau[[[1,2],[3,4]]] ; d[4,1] ; d[3,2]");
        assert_eq!(steps(&r.right), "d[2,1] ; s[1,1,4]");
        assert_eq!(r.left.target(), &Composition::new([4, 6]));
    }

    #[test]
    fn mixed_block_diagonal_goes_through_two_parts() {
        let k: ContingencyMatrix = "[[1,2,1,0,0],[1,1,2,0,0],[0,0,0,1,2],[0,0,0,2,1]]"
            .parse()
            .unwrap();
        let r = mixed_instance(&k);
        assert_eq!(r.right.objects()[2], Composition::new([8, 6]));
        assert_eq!(r.right.target(), &Composition::new([2, 3, 3, 3, 3]));
    }

    #[test]
    fn unknown_family_is_a_usage_error() {
        assert!(matches!("xy".parse::<Family>(), Err(Error::Usage(_))));
        assert!(enumerate_relation_instances(Family::Dd, 0, 3).is_err());
    }
}
