//! The simplex category as weakly increasing maps `[n] -> [m]`, its face and
//! degeneracy generators, and an exhaustive check of the simplicial
//! identities.
//!
//! The identities are stated for the face maps `d_i` and degeneracies `s_j`
//! of a simplicial set, which are contravariant images of the generators.
//! Each identity is therefore checked as the dual equation between composite
//! value tables in the simplex category itself.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::report::VerificationReport;

/// A weakly increasing map `{0..=n} -> {0..=m}` stored as its value table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonotoneMap {
    codomain_top: usize,
    values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(codomain_top: usize, values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidInput("domain [n] is never empty".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidInput(format!("{values:?} is not weakly increasing")));
        }
        if values.iter().any(|&v| v > codomain_top) {
            return Err(Error::InvalidInput(format!(
                "{values:?} leaves [{codomain_top}]"
            )));
        }
        Ok(MonotoneMap {
            codomain_top,
            values,
        })
    }

    pub fn identity(n: usize) -> Self {
        MonotoneMap {
            codomain_top: n,
            values: (0..=n).collect(),
        }
    }

    pub fn domain_top(&self) -> usize {
        self.values.len() - 1
    }

    pub fn codomain_top(&self) -> usize {
        self.codomain_top
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &MonotoneMap) -> Result<MonotoneMap> {
        if first.codomain_top != self.domain_top() {
            return Err(Error::Composition {
                left: format!("[{}]", first.codomain_top),
                right: format!("[{}]", self.domain_top()),
            });
        }
        Ok(MonotoneMap {
            codomain_top: self.codomain_top,
            values: first.values.iter().map(|&v| self.values[v]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && *self.values.last().unwrap() == self.codomain_top
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }
}

/// The injection `[n-1] -> [n]` that misses `i`.
pub fn face(n: usize, i: usize) -> Result<MonotoneMap> {
    if n == 0 || i > n {
        return Err(Error::Index(format!("face index {i} needs 0 <= i <= n, n >= 1 (n = {n})")));
    }
    let values = (0..n).map(|k| if k < i { k } else { k + 1 }).collect();
    Ok(MonotoneMap {
        codomain_top: n,
        values,
    })
}

/// The surjection `[n+1] -> [n]` that hits `i` twice.
pub fn degeneracy(n: usize, i: usize) -> Result<MonotoneMap> {
    if i > n {
        return Err(Error::Index(format!("degeneracy index {i} exceeds n = {n}")));
    }
    let values = (0..=n + 1).map(|k| if k <= i { k } else { k - 1 }).collect();
    Ok(MonotoneMap {
        codomain_top: n,
        values,
    })
}

/// Face and degeneracy constructors; swapped out by the mutation tests.
pub trait SimplexGenerators {
    fn face(&self, n: usize, i: usize) -> Result<MonotoneMap>;
    fn degeneracy(&self, n: usize, i: usize) -> Result<MonotoneMap>;
}

pub struct StandardGenerators;

impl SimplexGenerators for StandardGenerators {
    fn face(&self, n: usize, i: usize) -> Result<MonotoneMap> {
        face(n, i)
    }

    fn degeneracy(&self, n: usize, i: usize) -> Result<MonotoneMap> {
        degeneracy(n, i)
    }
}

pub const IDENTITY_NAMES: [&str; 5] = [
    "d_i d_j = d_{j-1} d_i (i < j)",
    "d_i s_j = s_{j-1} d_i (i < j)",
    "d_i s_j = 1 (i = j or i = j+1)",
    "d_i s_j = s_j d_{i-1} (i > j+1)",
    "s_i s_j = s_{j+1} s_i (i <= j)",
];

pub fn verify_simplicial_identities(max_n: usize) -> Result<VerificationReport> {
    verify_simplicial_identities_with(max_n, &StandardGenerators)
}

/// Checks all five identity families on `X_n` for every `n <= max_n` and
/// every admissible index pair.
pub fn verify_simplicial_identities_with(
    max_n: usize,
    gens: &dyn SimplexGenerators,
) -> Result<VerificationReport> {
    if max_n == 0 {
        return Err(Error::Usage("max_n must be at least 1".into()));
    }
    let started = Instant::now();
    let mut report = VerificationReport::new("simplicial").bound("max_n", max_n);
    let mut check = |family: usize, n: usize, i: usize, j: usize, lhs: MonotoneMap, rhs: MonotoneMap| {
        report.checked += 1;
        if lhs != rhs {
            report.fail(
                format!("{} on X_{n} with i={i} j={j}", IDENTITY_NAMES[family]),
                format!("[{}]", lhs.domain_top()),
                format!("{:?}", lhs.values()),
                format!("{:?}", rhs.values()),
            );
        }
    };
    let d = |n, i| gens.face(n, i);
    let s = |n, i| gens.degeneracy(n, i);

    for n in 0..=max_n {
        // d_i d_j on X_n, 0 <= i < j <= n.
        if n >= 2 {
            for j in 0..=n {
                for i in 0..j {
                    let lhs = d(n, j)?.after(&d(n - 1, i)?)?;
                    let rhs = d(n, i)?.after(&d(n - 1, j - 1)?)?;
                    check(0, n, i, j, lhs, rhs);
                }
            }
        }
        for j in 0..=n {
            for i in 0..=n + 1 {
                // d_i s_j on X_n is dual to σ^{n,j} ∘ ∂^{n+1,i}.
                let lhs = s(n, j)?.after(&d(n + 1, i)?)?;
                if i < j {
                    let rhs = d(n, i)?.after(&s(n - 1, j - 1)?)?;
                    check(1, n, i, j, lhs, rhs);
                } else if i == j || i == j + 1 {
                    check(2, n, i, j, lhs, MonotoneMap::identity(n));
                } else {
                    let rhs = d(n, i - 1)?.after(&s(n - 1, j)?)?;
                    check(3, n, i, j, lhs, rhs);
                }
            }
        }
        for j in 0..=n {
            for i in 0..=j {
                let lhs = s(n, j)?.after(&s(n + 1, i)?)?;
                let rhs = s(n, i)?.after(&s(n + 1, j + 1)?)?;
                check(4, n, i, j, lhs, rhs);
            }
        }
    }
    Ok(report.finish(started))
}

/// Every weakly increasing map `[n] -> [m]`.
pub fn monotone_maps(n: usize, m: usize) -> Vec<MonotoneMap> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(n + 1);
    fn rec(n: usize, m: usize, low: usize, buf: &mut Vec<usize>, out: &mut Vec<MonotoneMap>) {
        if buf.len() == n + 1 {
            out.push(MonotoneMap {
                codomain_top: m,
                values: buf.clone(),
            });
            return;
        }
        for v in low..=m {
            buf.push(v);
            rec(n, m, v, buf, out);
            buf.pop();
        }
    }
    rec(n, m, 0, &mut buf, &mut out);
    out
}

/// Generator steps as `(n, i)` pairs.
pub type Steps = Vec<(usize, usize)>;

/// Epi–mono factorization: returns `(degeneracies, faces)` as `(n, i)`
/// pairs in application order, so that applying the degeneracies and then
/// the faces reproduces `f`.
pub fn factor(f: &MonotoneMap) -> (Steps, Steps) {
    let mut degeneracies = Vec::new();
    let mut surj = f.values.clone();
    // Collapse repeated values from the left, one degeneracy at a time.
    let mut image: Vec<usize> = surj.clone();
    image.dedup();
    let rank: Vec<usize> = surj
        .iter()
        .map(|v| image.binary_search(v).unwrap())
        .collect();
    surj = rank;
    while let Some(j) = surj.windows(2).position(|w| w[0] == w[1]) {
        let top = surj.len() - 2;
        degeneracies.push((top, j));
        surj.remove(j + 1);
    }
    // The remaining injection [k] -> [m] misses `missing`, added from the
    // bottom up.
    let missing: Vec<usize> = (0..=f.codomain_top)
        .filter(|v| image.binary_search(v).is_err())
        .collect();
    let k = image.len() - 1;
    let faces = missing
        .iter()
        .enumerate()
        .map(|(step, &p)| (k + step + 1, p))
        .collect();
    (degeneracies, faces)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn face_examples() {
        assert_eq!(face(2, 0).unwrap().values(), &[1, 2]);
        assert_eq!(face(1, 1).unwrap().values(), &[0]);
        assert_eq!(face(3, 2).unwrap().values(), &[0, 1, 3]);
        assert!(matches!(face(2, 3), Err(Error::Index(_))));
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy(0, 0).unwrap().values(), &[0, 0]);
        assert_eq!(degeneracy(1, 0).unwrap().values(), &[0, 0, 1]);
        assert_eq!(degeneracy(2, 1).unwrap().values(), &[0, 1, 1, 2]);
        assert!(matches!(degeneracy(1, 2), Err(Error::Index(_))));
    }

    /// Direct construction: the unique injection whose image omits `i`.
    #[test]
    fn faces_are_the_injections_missing_one_value() {
        for n in 1..=6 {
            for i in 0..=n {
                let f = face(n, i).unwrap();
                assert!(f.is_injective());
                assert!(!f.values().contains(&i));
                let hits: Vec<_> = monotone_maps(n - 1, n)
                    .into_iter()
                    .filter(|g| g.is_injective() && !g.values().contains(&i))
                    .collect();
                assert_eq!(hits, vec![f]);
            }
        }
    }

    #[test]
    fn degeneracies_are_the_surjections_doubling_one_value() {
        for n in 0..=5 {
            for i in 0..=n {
                let s = degeneracy(n, i).unwrap();
                assert!(s.is_surjective());
                let hits: Vec<_> = monotone_maps(n + 1, n)
                    .into_iter()
                    .filter(|g| g.is_surjective() && g.values().iter().filter(|&&v| v == i).count() == 2)
                    .collect();
                assert_eq!(hits, vec![s]);
            }
        }
    }

    #[test]
    fn identities_hold() {
        let small = verify_simplicial_identities(1).unwrap();
        assert!(small.passed());
        assert!(small.checked > 0);
        let six = verify_simplicial_identities(6).unwrap();
        assert!(six.passed(), "{:?}", six.failures);
        // Instance counts per n: C(n+1,2) + (n+1)(n+2) + C(n+2,2), summed.
        let expected: u64 = (0..=6u64)
            .map(|n| {
                let dd = if n >= 2 { (n + 1) * n / 2 } else { 0 };
                dd + (n + 1) * (n + 2) + (n + 1) * (n + 2) / 2
            })
            .sum();
        assert_eq!(six.checked, expected);
        assert!(matches!(verify_simplicial_identities(0), Err(Error::Usage(_))));
    }

    struct CorruptFace;

    impl SimplexGenerators for CorruptFace {
        fn face(&self, n: usize, i: usize) -> Result<MonotoneMap> {
            let mut f = face(n, i)?;
            if n == 2 && i == 1 {
                // Misses 2 instead of 1.
                f.values = vec![0, 1];
            }
            Ok(f)
        }

        fn degeneracy(&self, n: usize, i: usize) -> Result<MonotoneMap> {
            degeneracy(n, i)
        }
    }

    #[test]
    fn corrupted_face_is_caught_and_named() {
        let report = verify_simplicial_identities_with(3, &CorruptFace).unwrap();
        assert!(!report.passed());
        let named: Vec<&str> = report
            .failures
            .iter()
            .map(|f| f.instance.as_str())
            .collect();
        assert!(named.iter().any(|s| s.starts_with(IDENTITY_NAMES[0])));
        assert!(named.iter().any(|s| s.starts_with(IDENTITY_NAMES[2])));
    }

    #[test]
    fn composition_is_associative_with_neutral_identities() {
        for a in 0..=5 {
            for b in 0..=5 {
                for f in monotone_maps(a, b) {
                    assert_eq!(MonotoneMap::identity(b).after(&f).unwrap(), f);
                    assert_eq!(f.after(&MonotoneMap::identity(a)).unwrap(), f);
                }
            }
        }
        for a in 0..=3 {
            for b in 0..=3 {
                for c in 0..=3 {
                    for d in 0..=3 {
                        for f in monotone_maps(a, b) {
                            for g in monotone_maps(b, c) {
                                let gf = g.after(&f).unwrap();
                                for h in monotone_maps(c, d) {
                                    assert_eq!(
                                        h.after(&gf).unwrap(),
                                        h.after(&g).unwrap().after(&f).unwrap()
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn every_map_factors_as_degeneracies_then_faces() {
        for n in 0..=4 {
            for m in 0..=4 {
                for f in monotone_maps(n, m) {
                    let (degs, faces) = factor(&f);
                    let mut acc = MonotoneMap::identity(n);
                    for &(k, i) in &degs {
                        acc = degeneracy(k, i).unwrap().after(&acc).unwrap();
                    }
                    assert!(acc.is_surjective());
                    for &(k, i) in &faces {
                        acc = face(k, i).unwrap().after(&acc).unwrap();
                    }
                    assert_eq!(acc, f, "{degs:?} then {faces:?}");
                }
            }
        }
    }
}
