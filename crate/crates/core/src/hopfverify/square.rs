//! The square condition `A(α) → A(β)` built from the two towers: through
//! the shuffle of a matrix `K`, and through the common coarsening `γ`.

use std::time::Instant;

use super::{common_coarsenings, matrices_under, Reading};
use crate::category::gamma_of;
use crate::compositions::{refines, Composition};
use crate::contingency::{enumerate_matrices, ContingencyMatrix, EntryMode};
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::symfunc::literal::print_tensor;
use crate::symfunc::{tensor_basis, TensorElement};

/// Splits every slot `i` of `x` by `Δ` into `pieces[i]` (zeros allowed).
fn iterated_split(x: &TensorElement, pieces: &[Vec<u32>]) -> TensorElement {
    let mut acc = x.clone();
    let mut slot = 0;
    for parts in pieces {
        for &p in &parts[..parts.len() - 1] {
            acc = acc.comultiply_slot(slot, p);
            slot += 1;
        }
        slot += 1;
    }
    acc
}

/// Multiplies consecutive runs of slots with the given lengths.
fn grouped_product(x: &TensorElement, runs: &[usize]) -> TensorElement {
    let mut acc = x.clone();
    for (slot, &run) in runs.iter().enumerate() {
        for _ in 1..run {
            acc = acc.multiply_slots(slot).expect("slot in range");
        }
    }
    acc
}

/// `A(α) → A(β)` through `K`: split each `α` slot into its row of `K`,
/// move entries from row order to column order, multiply each column.
pub fn square_left(k: &ContingencyMatrix, x: &TensorElement) -> TensorElement {
    let (r, s) = (k.rows(), k.cols());
    let rows: Vec<Vec<u32>> = (0..r).map(|i| k.row(i).to_vec()).collect();
    let split = iterated_split(x, &rows);
    let mut from = vec![0; r * s];
    for i in 0..r {
        for j in 0..s {
            from[j * r + i] = i * s + j;
        }
    }
    let moved = split.permute_slots(&from).expect("r*s slots");
    grouped_product(&moved, &vec![r; s])
}

/// `A(α) → A(β)` through `γ`: multiply `α` into `γ`, then split `γ` into `β`.
pub fn square_right(
    alpha: &Composition,
    gamma: &Composition,
    beta: &Composition,
    x: &TensorElement,
) -> Result<TensorElement> {
    let down = refines(gamma, alpha)?
        .ok_or_else(|| Error::InvalidPair(format!("{alpha} does not refine {gamma}")))?;
    let up = refines(gamma, beta)?
        .ok_or_else(|| Error::InvalidPair(format!("{beta} does not refine {gamma}")))?;
    let merged = grouped_product(x, &down);
    let mut pieces = Vec::with_capacity(up.len());
    let mut parts = beta.parts().iter().copied();
    for run in up {
        pieces.push(parts.by_ref().take(run).collect::<Vec<u32>>());
    }
    Ok(iterated_split(&merged, &pieces))
}

/// Compares the two towers on the basis of `A(α)`. In the per-K reading
/// each matrix with margins `α`, `β` is compared against its own `γ`; in
/// the summed reading, for each common coarsening `γ`, the sum over all
/// matrices compatible with `γ` is compared.
pub fn check_square_condition(
    alpha: &Composition,
    beta: &Composition,
    reading: Reading,
) -> Result<VerificationReport> {
    if alpha.sum() != beta.sum() {
        return Err(Error::InvalidPair(format!(
            "margins {alpha} and {beta} have different sums"
        )));
    }
    let started = Instant::now();
    let mut report = VerificationReport::new("square")
        .bound("alpha", alpha)
        .bound("beta", beta)
        .bound("reading", reading);
    let basis = tensor_basis(alpha.parts());
    match reading {
        Reading::PerK => {
            for k in enumerate_matrices(alpha, beta, EntryMode::NonNegative)? {
                let gamma = gamma_of(&k);
                report.checked += 1;
                for x in &basis {
                    let left = square_left(&k, x);
                    let right = square_right(alpha, &gamma, beta, x)?;
                    if left != right {
                        report.fail(format!("K={k} gamma={gamma}"), print_tensor(x), print_tensor(&left), print_tensor(&right));
                        break;
                    }
                }
            }
        }
        Reading::Summed => {
            for gamma in common_coarsenings(alpha, beta) {
                let ks = matrices_under(alpha, beta, &gamma)?;
                report.checked += 1;
                for x in &basis {
                    let mut left = TensorElement::zero(beta.parts().to_vec());
                    for k in &ks {
                        left.add_assign_unchecked(&square_left(k, x));
                    }
                    let right = square_right(alpha, &gamma, beta, x)?;
                    if left != right {
                        report.fail(format!("gamma={gamma}"), print_tensor(x), print_tensor(&left), print_tensor(&right));
                        break;
                    }
                }
            }
        }
    }
    Ok(report.finish(started))
}
