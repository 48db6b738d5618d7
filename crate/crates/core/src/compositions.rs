//! Compositions (ordered partitions) of a non-negative integer.
//!
//! A [`Composition`] is always stored in canonical form: zero parts are
//! erased on construction, so two compositions are equal exactly when their
//! canonical forms agree. Raw tuples that still carry zeros (the row and
//! column orders of a contingency matrix, padded tensor shapes) are plain
//! `&[u32]` slices.
//!
//! Parts and blocks are numbered from 1 in the textual forms and in the
//! generator indices of [`crate::category`]; slices are 0-based as usual.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::Cursor;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", from = "Vec<u32>")]
pub struct Composition(Vec<u32>);

impl Composition {
    /// Builds the canonical composition, dropping zero parts.
    pub fn new<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        Composition(parts.into_iter().filter(|&p| p != 0).collect())
    }

    /// Canonicalizes signed input; negative parts are rejected.
    pub fn canonicalize(parts: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(parts.len());
        for (i, &p) in parts.iter().enumerate() {
            if p < 0 {
                return Err(Error::InvalidInput(format!(
                    "part {} is negative ({p})",
                    i + 1
                )));
            }
            let p = u32::try_from(p)
                .map_err(|_| Error::InvalidInput(format!("part {} is too large ({p})", i + 1)))?;
            out.push(p);
        }
        Ok(Composition::new(out))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The abutting intervals of `1..=n` cut out by the parts.
    pub fn blocks(&self) -> BlockIntervals {
        BlockIntervals::of_raw(&self.0)
    }
}

impl From<Vec<u32>> for Composition {
    fn from(parts: Vec<u32>) -> Self {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let c = parse_composition(&mut cur)?;
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input".into()));
        }
        Ok(c)
    }
}

pub(crate) fn parse_composition(cur: &mut Cursor<'_>) -> Result<Composition> {
    Ok(Composition::new(cur.u32_list("(", ")")?))
}

pub(crate) fn write_tuple(f: &mut impl fmt::Write, parts: &[u32]) -> fmt::Result {
    f.write_char('(')?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_char(',')?;
        }
        write!(f, "{p}")?;
    }
    f.write_char(')')
}

/// Half-open ranges over the 1-based positions `1..=n`; interval `i` has
/// width equal to part `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockIntervals(Vec<Range<u32>>);

impl BlockIntervals {
    /// Intervals of a raw tuple; zero parts give empty intervals.
    pub fn of_raw(parts: &[u32]) -> Self {
        let mut start = 1;
        let mut out = Vec::with_capacity(parts.len());
        for &p in parts {
            out.push(start..start + p);
            start += p;
        }
        BlockIntervals(out)
    }

    pub fn intervals(&self) -> &[Range<u32>] {
        &self.0
    }

    pub fn widths(&self) -> Vec<u32> {
        self.0.iter().map(|r| r.end - r.start).collect()
    }
}

/// Run lengths grouping the parts of a finer composition into the parts of
/// a coarser one.
pub type Grouping = Vec<usize>;

/// Decides whether `fine` refines `coarse`: the parts of `fine` split into
/// consecutive runs whose totals are the parts of `coarse`, in order.
///
/// Returns the run lengths when it does. Read backwards this is also the
/// recombination test: `coarse` is obtained from `fine` by adding
/// consecutive parts.
pub fn refines(coarse: &Composition, fine: &Composition) -> Result<Option<Grouping>> {
    if coarse.sum() != fine.sum() {
        return Err(Error::InvalidPair(format!(
            "{coarse} and {fine} have different sums"
        )));
    }
    let mut grouping = Vec::with_capacity(coarse.len());
    let mut parts = fine.parts().iter();
    for &target in coarse.parts() {
        let mut total = 0;
        let mut run = 0;
        while total < target {
            match parts.next() {
                Some(&p) => {
                    total += p;
                    run += 1;
                }
                None => return Ok(None),
            }
        }
        if total != target {
            return Ok(None);
        }
        grouping.push(run);
    }
    Ok(Some(grouping))
}

/// All compositions of `n` with at most `max_len` parts, shortest first and
/// lexicographic within each length.
pub fn enumerate_compositions(n: u32, max_len: Option<usize>) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::default()];
    }
    let longest = max_len.unwrap_or(n as usize).min(n as usize);
    let mut out = Vec::new();
    for len in 1..=longest {
        let mut buf = Vec::with_capacity(len);
        fixed_length(n, len, &mut buf, &mut out);
    }
    out
}

fn fixed_length(remaining: u32, slots: usize, buf: &mut Vec<u32>, out: &mut Vec<Composition>) {
    if slots == 1 {
        buf.push(remaining);
        out.push(Composition(buf.clone()));
        buf.pop();
        return;
    }
    for first in 1..=remaining.saturating_sub(slots as u32 - 1) {
        buf.push(first);
        fixed_length(remaining - first, slots - 1, buf, out);
        buf.pop();
    }
}

/// Every composition with sum in `1..=max_sum` and at most `max_len` parts.
pub fn compositions_up_to(max_sum: u32, max_len: usize) -> Vec<Composition> {
    (1..=max_sum)
        .flat_map(|n| enumerate_compositions(n, Some(max_len)))
        .collect()
}

/// All coarsenings of `fine` (compositions it refines), ordered by length
/// and then lexicographically.
pub fn coarsenings(fine: &Composition) -> Vec<Composition> {
    let t = fine.len();
    if t == 0 {
        return vec![Composition::default()];
    }
    let cuts = t - 1;
    let mut out: Vec<Composition> = (0u64..1 << cuts)
        .map(|mask| {
            let mut parts = Vec::new();
            let mut acc = 0;
            for (k, &p) in fine.parts().iter().enumerate() {
                acc += p;
                if k == t - 1 || mask >> k & 1 == 1 {
                    parts.push(acc);
                    acc = 0;
                }
            }
            Composition(parts)
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.iter().copied())
    }

    /// Tries every way to cut `fine` into `coarse.len()` consecutive runs.
    fn brute_grouping(coarse: &Composition, fine: &Composition) -> Option<Grouping> {
        let t = fine.len();
        let r = coarse.len();
        if t == 0 {
            return (r == 0).then(Vec::new);
        }
        for mask in 0u32..1 << (t - 1) {
            if mask.count_ones() as usize + 1 != r {
                continue;
            }
            let mut runs = Vec::new();
            let mut sums = Vec::new();
            let (mut run, mut acc) = (0, 0);
            for k in 0..t {
                run += 1;
                acc += fine.parts()[k];
                if k == t - 1 || mask >> k & 1 == 1 {
                    runs.push(run);
                    sums.push(acc);
                    run = 0;
                    acc = 0;
                }
            }
            if sums == coarse.parts() {
                return Some(runs);
            }
        }
        None
    }

    /// Compositions of n from the subsets of the n-1 break points.
    fn breakpoint_oracle(n: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for mask in 0u32..1 << (n - 1) {
            let mut parts = Vec::new();
            let mut acc = 0;
            for k in 0..n {
                acc += 1;
                if k == n - 1 || mask >> k & 1 == 1 {
                    parts.push(acc);
                    acc = 0;
                }
            }
            out.push(parts);
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(Composition::canonicalize(&[2, 0, 3]).unwrap(), c(&[2, 3]));
        assert_eq!(Composition::canonicalize(&[0, 0]).unwrap(), c(&[]));
        assert_eq!(Composition::canonicalize(&[1, 2, 3]).unwrap(), c(&[1, 2, 3]));
        assert!(matches!(
            Composition::canonicalize(&[1, -1]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn blocks_examples() {
        assert_eq!(c(&[2, 3]).blocks().intervals(), &[1..3, 3..6]);
        assert_eq!(c(&[5]).blocks().intervals(), std::slice::from_ref(&(1..6)));
        assert_eq!(c(&[1, 1, 1]).blocks().intervals(), &[1..2, 2..3, 3..4]);
    }

    #[test]
    fn refines_examples() {
        assert_eq!(
            brute_grouping(&c(&[2, 2]), &c(&[1, 1, 2])),
            Some(vec![2, 1])
        );
        assert_eq!(refines(&c(&[2, 2]), &c(&[1, 1, 2])).unwrap(), Some(vec![2, 1]));
        assert_eq!(refines(&c(&[4]), &c(&[1, 3])).unwrap(), Some(vec![2]));
        assert_eq!(brute_grouping(&c(&[2, 2]), &c(&[3, 1])), None);
        assert_eq!(refines(&c(&[2, 2]), &c(&[3, 1])).unwrap(), None);
        assert!(matches!(
            refines(&c(&[2]), &c(&[1])),
            Err(Error::InvalidPair(_))
        ));
    }

    #[test]
    fn refines_agrees_with_brute_force() {
        for n in 1..=7 {
            let all = enumerate_compositions(n, None);
            for coarse in &all {
                for fine in &all {
                    assert_eq!(
                        refines(coarse, fine).unwrap(),
                        brute_grouping(coarse, fine),
                        "{coarse} vs {fine}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let three: Vec<String> = enumerate_compositions(3, None)
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(three, ["(3)", "(1,2)", "(2,1)", "(1,1,1)"]);
        assert_eq!(enumerate_compositions(0, None), vec![c(&[])]);
        assert_eq!(enumerate_compositions(4, None).len(), 8);
        assert_eq!(enumerate_compositions(4, Some(2)).len(), 4);
    }

    #[test]
    fn enumerate_matches_breakpoints() {
        for n in 1..=12 {
            let got: Vec<Vec<u32>> = enumerate_compositions(n, None)
                .into_iter()
                .map(Vec::from)
                .collect();
            assert_eq!(got.len(), 1 << (n - 1));
            assert_eq!(got, breakpoint_oracle(n));
        }
    }

    #[test]
    fn everything_refines_the_one_part_composition() {
        for n in 1..=10 {
            for k in enumerate_compositions(n, None) {
                assert!(refines(&c(&[n]), &k).unwrap().is_some());
            }
        }
    }

    #[test]
    fn coarsenings_are_exactly_the_refined_compositions() {
        let fine = c(&[1, 2, 1, 1]);
        let got = coarsenings(&fine);
        let expected: Vec<Composition> = enumerate_compositions(5, None)
            .into_iter()
            .filter(|k| refines(k, &fine).unwrap().is_some())
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("(2,3,4)".parse::<Composition>().unwrap(), c(&[2, 3, 4]));
        assert_eq!(" ( 2 , 0 ,3 )".parse::<Composition>().unwrap(), c(&[2, 3]));
        assert_eq!("()".parse::<Composition>().unwrap().to_string(), "()");
        assert!(matches!(
            "(2,3".parse::<Composition>(),
            Err(Error::Syntax { column: 5, .. })
        ));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn canonicalize_idempotent_and_sum_preserving(parts in prop::collection::vec(0i64..=12, 0..8)) {
                let once = Composition::canonicalize(&parts).unwrap();
                let raw: Vec<i64> = once.parts().iter().map(|&p| p as i64).collect();
                prop_assert_eq!(Composition::canonicalize(&raw).unwrap(), once.clone());
                prop_assert_eq!(once.sum() as i64, parts.iter().sum::<i64>());
                prop_assert!(once.parts().iter().all(|&p| p > 0));
            }

            #[test]
            fn block_widths_reproduce_parts(parts in prop::collection::vec(1u32..=6, 0..7)) {
                let comp = Composition::new(parts.clone());
                let blocks = comp.blocks();
                prop_assert_eq!(blocks.widths(), parts);
                let covered: Vec<u32> = blocks.intervals().iter().flat_map(|r| r.clone()).collect();
                prop_assert_eq!(covered, (1..=comp.sum()).collect::<Vec<_>>());
            }
        }
    }
}
