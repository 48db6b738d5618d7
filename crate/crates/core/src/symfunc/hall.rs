//! The Hall inner product and the basis changes built on it.
//!
//! `⟨h_λ, h_μ⟩` is the number of nonnegative integer matrices with row sums
//! `λ` and column sums `μ`; this is also the coefficient of `m_μ` in `h_λ`.
//! Per-degree tables of these counts are memoized in a [`HallTables`] and
//! can be persisted to a JSON file:
//!
//! ```json
//! {
//!   "format": "hopflike-hall-cache",
//!   "version": 1,
//!   "degrees": [
//!     { "degree": 2, "partitions": [[2],[1,1]],
//!       "counts": [["1","1"],["1","2"]], "checksum": "<sha256 hex>" }
//!   ]
//! }
//! ```
//!
//! The checksum is SHA-256 of the compact JSON of `[partitions, counts]`
//! and is verified on load.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{add_coeff, partitions_of, Basis, Partition, SymElement, TensorElement};
use crate::contingency::count_matrices;
use crate::error::{Error, Result};

pub const CACHE_FORMAT: &str = "hopflike-hall-cache";
pub const CACHE_VERSION: u32 = 1;

/// `N(λ, μ)` for all partitions of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTable {
    degree: u32,
    partitions: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    counts: Vec<Vec<u128>>,
}

impl DegreeTable {
    fn compute(degree: u32) -> Self {
        let partitions = partitions_of(degree);
        let counts = partitions
            .iter()
            .map(|l| {
                partitions
                    .iter()
                    .map(|m| count_matrices(l.parts(), m.parts()))
                    .collect()
            })
            .collect();
        DegreeTable::assemble(degree, partitions, counts)
    }

    fn assemble(degree: u32, partitions: Vec<Partition>, counts: Vec<Vec<u128>>) -> Self {
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        DegreeTable {
            degree,
            partitions,
            index,
            counts,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn count(&self, lambda: &Partition, mu: &Partition) -> u128 {
        self.counts[self.index[lambda]][self.index[mu]]
    }

    fn checksum(partitions: &[Partition], counts: &[Vec<String>]) -> String {
        let body = serde_json::to_string(&(partitions, counts)).expect("table serializes");
        hex::encode(Sha256::digest(body.as_bytes()))
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: String,
    version: u32,
    degrees: Vec<CacheEntry>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    degree: u32,
    partitions: Vec<Partition>,
    counts: Vec<Vec<String>>,
    checksum: String,
}

/// Thread-safe memo of [`DegreeTable`]s keyed by degree. Filling is
/// idempotent: concurrent misses compute the same table and the first
/// insert wins.
#[derive(Default, Debug)]
pub struct HallTables {
    tables: RwLock<BTreeMap<u32, Arc<DegreeTable>>>,
}

impl HallTables {
    pub fn new() -> Self {
        HallTables::default()
    }

    /// Process-wide tables used by the free functions in this module.
    pub fn global() -> &'static HallTables {
        static GLOBAL: OnceLock<HallTables> = OnceLock::new();
        GLOBAL.get_or_init(HallTables::new)
    }

    pub fn table(&self, degree: u32) -> Arc<DegreeTable> {
        if let Some(t) = self.tables.read().unwrap().get(&degree) {
            return Arc::clone(t);
        }
        let fresh = Arc::new(DegreeTable::compute(degree));
        let mut w = self.tables.write().unwrap();
        Arc::clone(w.entry(degree).or_insert(fresh))
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.tables.read().unwrap().keys().copied().collect()
    }

    pub fn clear(&self) {
        self.tables.write().unwrap().clear();
    }

    /// Merges the tables stored at `path` into this memo.
    pub fn load(&self, path: &Path) -> Result<usize> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Cache(format!("cannot read {}: {e}", path.display())))?;
        let file: CacheFile = serde_json::from_str(&text)
            .map_err(|e| Error::Cache(format!("{} is not a cache file: {e}", path.display())))?;
        if file.format != CACHE_FORMAT || file.version != CACHE_VERSION {
            return Err(Error::Cache(format!(
                "unsupported cache format {} version {}",
                file.format, file.version
            )));
        }
        let mut loaded = Vec::new();
        for entry in file.degrees {
            if DegreeTable::checksum(&entry.partitions, &entry.counts) != entry.checksum {
                return Err(Error::Cache(format!(
                    "checksum mismatch for degree {}",
                    entry.degree
                )));
            }
            if entry.partitions != partitions_of(entry.degree) {
                return Err(Error::Cache(format!(
                    "degree {} lists the wrong partitions",
                    entry.degree
                )));
            }
            let n = entry.partitions.len();
            let counts = entry
                .counts
                .iter()
                .map(|row| row.iter().map(|c| c.parse::<u128>()).collect::<std::result::Result<Vec<_>, _>>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Cache(format!("bad count in degree {}: {e}", entry.degree)))?;
            if counts.len() != n || counts.iter().any(|r| r.len() != n) {
                return Err(Error::Cache(format!("degree {} table is not square", entry.degree)));
            }
            loaded.push(DegreeTable::assemble(entry.degree, entry.partitions, counts));
        }
        let count = loaded.len();
        let mut w = self.tables.write().unwrap();
        for t in loaded {
            w.entry(t.degree).or_insert_with(|| Arc::new(t));
        }
        Ok(count)
    }

    /// Writes every memoized table to `path`, replacing it.
    pub fn save(&self, path: &Path) -> Result<()> {
        let degrees = self
            .tables
            .read()
            .unwrap()
            .values()
            .map(|t| {
                let counts: Vec<Vec<String>> = t
                    .counts
                    .iter()
                    .map(|r| r.iter().map(u128::to_string).collect())
                    .collect();
                CacheEntry {
                    degree: t.degree,
                    checksum: DegreeTable::checksum(&t.partitions, &counts),
                    partitions: t.partitions.clone(),
                    counts,
                }
            })
            .collect();
        let file = CacheFile {
            format: CACHE_FORMAT.into(),
            version: CACHE_VERSION,
            degrees,
        };
        let body = serde_json::to_string_pretty(&file).expect("cache serializes");
        fs::write(path, body + "\n")
            .map_err(|e| Error::Cache(format!("cannot write {}: {e}", path.display())))
    }
}

/// `h_λ = Σ_μ N(λ, μ) m_μ`.
pub fn h_to_m(x: &SymElement) -> Result<SymElement> {
    let x = to_h(x)?;
    let table = HallTables::global().table(x.degree);
    let mut out = SymElement::zero(x.degree, Basis::M);
    for (lambda, c) in &x.terms {
        for mu in table.partitions() {
            let n = table.count(lambda, mu);
            if n != 0 {
                add_coeff(&mut out.terms, mu.clone(), c * BigInt::from(n));
            }
        }
    }
    Ok(out)
}

/// Rewrites an `s`-basis element in the `h` basis; `h` passes through.
pub fn to_h(x: &SymElement) -> Result<SymElement> {
    match x.basis {
        Basis::H => Ok(x.clone()),
        Basis::S => {
            let mut out = SymElement::zero(x.degree, Basis::H);
            for (lambda, c) in &x.terms {
                for (mu, d) in &schur(lambda).terms {
                    add_coeff(&mut out.terms, mu.clone(), c * d);
                }
            }
            Ok(out)
        }
        Basis::M => Err(Error::Basis("no conversion from the m basis to h".into())),
    }
}

/// The Hall inner product. `h` and `m` are dual bases; `s` is converted to
/// `h` first. Pairing two `m`-basis elements is not supported.
pub fn hall_inner(x: &SymElement, y: &SymElement) -> Result<BigInt> {
    if x.degree != y.degree {
        return Err(Error::Pairing(format!(
            "degrees {} and {} differ",
            x.degree, y.degree
        )));
    }
    let dual = |h: &SymElement, m: &SymElement| -> BigInt {
        h.terms
            .iter()
            .filter_map(|(l, c)| m.terms.get(l).map(|d| c * d))
            .sum()
    };
    match (x.basis, y.basis) {
        (Basis::M, Basis::M) => Err(Error::Pairing("cannot pair two m-basis elements".into())),
        (Basis::M, _) => Ok(dual(&to_h(y)?, x)),
        (_, Basis::M) => Ok(dual(&to_h(x)?, y)),
        _ => {
            let (x, y) = (to_h(x)?, to_h(y)?);
            let table = HallTables::global().table(x.degree);
            let mut total = BigInt::zero();
            for (l, c) in &x.terms {
                for (m, d) in &y.terms {
                    total += c * d * BigInt::from(table.count(l, m));
                }
            }
            Ok(total)
        }
    }
}

/// The induced pairing on `A(α)`: slotwise Hall products, multiplied.
pub fn tensor_inner(x: &TensorElement, y: &TensorElement) -> Result<BigInt> {
    if x.shape != y.shape {
        return Err(Error::Pairing(format!(
            "shapes {:?} and {:?} differ",
            x.shape, y.shape
        )));
    }
    let tables: Vec<Arc<DegreeTable>> = x.shape.iter().map(|&d| HallTables::global().table(d)).collect();
    let mut total = BigInt::zero();
    for (a, c) in &x.terms {
        for (b, d) in &y.terms {
            let mut prod = c * d;
            for (k, t) in tables.iter().enumerate() {
                prod *= BigInt::from(t.count(&a[k], &b[k]));
            }
            total += prod;
        }
    }
    Ok(total)
}

/// Jacobi–Trudi: `s_λ = det(h_{λ_i - i + j})`, expanded over permutations
/// with zero entries pruned.
pub fn schur(lambda: &Partition) -> SymElement {
    let l = lambda.len();
    let mut out = SymElement::zero(lambda.weight(), Basis::H);
    let mut used = vec![false; l];
    let mut picked = Vec::with_capacity(l);
    #[allow(clippy::too_many_arguments)]
    fn go(
        row: usize,
        lambda: &[u32],
        used: &mut [bool],
        picked: &mut Vec<u32>,
        inversions: usize,
        out: &mut SymElement,
    ) {
        let l = lambda.len();
        if row == l {
            let sign = if inversions.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
            add_coeff(&mut out.terms, Partition::from_unsorted(picked.iter().copied()), sign);
            return;
        }
        for col in 0..l {
            if used[col] {
                continue;
            }
            let k = lambda[row] as i64 - row as i64 + col as i64;
            if k < 0 {
                continue;
            }
            let new_inv = used[col + 1..].iter().filter(|&&u| u).count();
            used[col] = true;
            picked.push(k as u32);
            go(row + 1, lambda, used, picked, inversions + new_inv, out);
            picked.pop();
            used[col] = false;
        }
    }
    go(0, lambda.parts(), &mut used, &mut picked, 0, &mut out);
    out
}

/// Schur expansion of `x`: the coefficient of `s_λ` is `⟨x, s_λ⟩`.
pub fn to_schur(x: &SymElement) -> Result<SymElement> {
    let mut out = SymElement::zero(x.degree, Basis::S);
    for lambda in partitions_of(x.degree) {
        let c = hall_inner(x, &schur(&lambda))?;
        add_coeff(&mut out.terms, lambda, c);
    }
    Ok(out)
}
