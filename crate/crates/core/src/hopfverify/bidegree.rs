//! Bidegree `(1,2)`: the modified multiplication on `R(a) ⊗ (R(b) ⊗ R(c))`,
//! its Hopf defect, and the six-formula expression for it.
//!
//! Inputs are tensors of raw shape `(a, b, c)`; zero parts are allowed.
//! Outputs live in `⊕ R(i) ⊗ R(j)` and are returned as [`GradedSum`]s.

use std::collections::BTreeSet;
use std::time::Instant;

use super::GradedSum;
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::symfunc::literal::print_tensor;
use crate::symfunc::{tensor_basis, SymElement, TensorElement};

fn tridegree(x: &TensorElement) -> Result<(u32, u32, u32)> {
    match *x.shape() {
        [a, b, c] => Ok((a, b, c)),
        ref s => Err(Error::Domain(format!("expected a tensor with three slots, got shape {s:?}"))),
    }
}

fn positive_tridegree(x: &TensorElement) -> Result<(u32, u32, u32)> {
    let (a, b, c) = tridegree(x)?;
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::Domain(format!(
            "tridegree ({a},{b},{c}) has a zero part; the Hopf axiom covers it"
        )));
    }
    Ok((a, b, c))
}

fn multiply_all(x: &TensorElement) -> TensorElement {
    let mut acc = x.clone();
    while acc.shape().len() > 1 {
        acc = acc.multiply_slots(0).expect("two or more slots");
    }
    acc
}

/// The modified multiplication: zero when all three degrees are positive,
/// otherwise the ordinary product of the three slots.
pub fn modified_mult_12(x: &TensorElement) -> Result<SymElement> {
    let (a, b, c) = tridegree(x)?;
    if a > 0 && b > 0 && c > 0 {
        return Ok(SymElement::zero(a + b + c, crate::symfunc::Basis::H));
    }
    multiply_all(x).to_sym()
}

/// `(Δ_u ⊗ Δ_v ⊗ Δ_w)(x)` regrouped as `(x' y' z') ⊗ (x'' y'' z'')`, with
/// each triple multiplied out.
fn shuffled_term(x: &TensorElement, u: u32, v: u32, w: u32) -> TensorElement {
    let t = x.comultiply_slot(2, w).comultiply_slot(1, v).comultiply_slot(0, u);
    let t = t.permute_slots(&[0, 2, 4, 1, 3, 5]).expect("six slots");
    let t = t.multiply_slots(0).and_then(|t| t.multiply_slots(0)).expect("six slots");
    t.multiply_slots(1).and_then(|t| t.multiply_slots(1)).expect("four slots")
}

/// `(m ⊗ m)(shuffle)(Δ ⊗ Δ ⊗ Δ)(x) − Δ(m(x))` with `m` the modified
/// multiplication on each side.
pub fn hopf_defect_12(x: &TensorElement) -> Result<GradedSum> {
    let (a, b, c) = tridegree(x)?;
    let mut out = GradedSum::new();
    for u in 0..=a {
        for v in 0..=b {
            for w in 0..=c {
                if u * v * w > 0 || (a - u) * (b - v) * (c - w) > 0 {
                    continue;
                }
                out.add_tensor(&shuffled_term(x, u, v, w));
            }
        }
    }
    let mx = modified_mult_12(x)?.to_tensor()?;
    let neg = num_bigint::BigInt::from(-1);
    for j in 0..=a + b + c {
        out.add_tensor(&mx.comultiply_slot(0, j).scale(&neg));
    }
    Ok(out)
}

/// Applies `pre`, comultiplies `slot` at every degree, permutes with `mid`
/// and multiplies adjacent pairs.
fn formula(x: &TensorElement, pre: &[usize], slot: usize, mid: &[usize]) -> GradedSum {
    let y = x.permute_slots(pre).expect("three slots");
    let mut out = GradedSum::new();
    for d in 0..=y.shape()[slot] {
        let t = y.comultiply_slot(slot, d).permute_slots(mid).expect("four slots");
        let t = t.multiply_slots(0).and_then(|t| t.multiply_slots(1)).expect("four slots");
        out.add_tensor(&t);
    }
    out
}

/// The six formulas, each with its slot permutation and full summation
/// range:
///
/// 1. `Σ_w (x z') ⊗ (y z'')`
/// 2. `Σ_w (y z') ⊗ (x z'')`
/// 3. `Σ_v (x y') ⊗ (z y'')`
/// 4. `Σ_v (z y'') ⊗ (y' x)`
/// 5. `Σ_u (x' y) ⊗ (x'' z)`
/// 6. `Σ_u (x' z) ⊗ (x'' y)`
pub fn six_term_12(x: &TensorElement) -> Result<GradedSum> {
    positive_tridegree(x)?;
    let id = [0, 1, 2];
    let parts = [
        formula(x, &id, 2, &[0, 2, 1, 3]),
        formula(x, &[1, 0, 2], 2, &[0, 2, 1, 3]),
        formula(x, &id, 1, &[0, 1, 3, 2]),
        formula(x, &[2, 1, 0], 1, &[0, 2, 1, 3]),
        formula(x, &id, 0, &[0, 2, 1, 3]),
        formula(x, &id, 0, &[0, 3, 1, 2]),
    ];
    Ok(parts.iter().fold(GradedSum::new(), |acc, p| acc.add(p)))
}

/// The commutative listing, evaluated through the regrouped triple
/// coproduct along each of the six lines.
pub fn six_term_12_commutative(x: &TensorElement) -> Result<GradedSum> {
    let (a, b, c) = positive_tridegree(x)?;
    let mut out = GradedSum::new();
    for (u, v, w) in line_points(a, b, c).into_iter().flatten() {
        out.add_tensor(&shuffled_term(x, u, v, w));
    }
    Ok(out)
}

/// Points of the six lines, in the order of the formulas.
fn line_points(a: u32, b: u32, c: u32) -> [Vec<(u32, u32, u32)>; 6] {
    [
        (0..=c).map(|w| (a, 0, w)).collect(),
        (0..=c).map(|w| (0, b, w)).collect(),
        (0..=b).map(|v| (a, v, 0)).collect(),
        (0..=b).map(|v| (0, v, c)).collect(),
        (0..=a).map(|u| (u, b, 0)).collect(),
        (0..=a).map(|u| (u, 0, c)).collect(),
    ]
}

/// Terms at the six points where two lines meet. Each is counted by two
/// formulas but occurs once in the defect.
pub fn hexagon_overlap_12(x: &TensorElement) -> Result<GradedSum> {
    let (a, b, c) = positive_tridegree(x)?;
    let mut out = GradedSum::new();
    for (u, v, w) in [(0, b, c), (0, 0, c), (a, 0, c), (a, 0, 0), (a, b, 0), (0, b, 0)] {
        out.add_tensor(&shuffled_term(x, u, v, w));
    }
    Ok(out)
}

/// Index triples `(u, v, w)` whose regrouped term survives both modified
/// multiplications.
pub fn surviving_patterns(a: u32, b: u32, c: u32) -> BTreeSet<(u32, u32, u32)> {
    let mut out = BTreeSet::new();
    for u in 0..=a {
        for v in 0..=b {
            for w in 0..=c {
                if u * v * w == 0 && (a - u) * (b - v) * (c - w) == 0 {
                    out.insert((u, v, w));
                }
            }
        }
    }
    out
}

/// The union of the six listed cases: `u=0,v=b`; `u=0,w=c`; `v=0,u=a`;
/// `v=0,w=c`; `w=0,u=a`; `w=0,v=b`.
pub fn expected_patterns(a: u32, b: u32, c: u32) -> BTreeSet<(u32, u32, u32)> {
    line_points(a, b, c).into_iter().flatten().collect()
}

fn pattern_list(set: &BTreeSet<(u32, u32, u32)>) -> String {
    let items: Vec<String> = set.iter().map(|(u, v, w)| format!("({u},{v},{w})")).collect();
    format!("{{{}}}", items.join(","))
}

/// Confirms that the surviving summands are exactly the six listed cases,
/// and that on every `h`-basis input the survivors are the only nonzero
/// contributions to the defect.
pub fn check_six_cases(a: u32, b: u32, c: u32) -> Result<VerificationReport> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::Domain(format!("tridegree ({a},{b},{c}) must be positive")));
    }
    let started = Instant::now();
    let mut report = VerificationReport::new("six-cases")
        .bound("a", a)
        .bound("b", b)
        .bound("c", c);
    let found = surviving_patterns(a, b, c);
    let listed = expected_patterns(a, b, c);
    report.checked += 1;
    if found != listed {
        report.fail(format!("tridegree ({a},{b},{c})"), "patterns".into(), pattern_list(&found), pattern_list(&listed));
    }
    for x in tensor_basis(&[a, b, c]) {
        report.checked += 1;
        let mut from_lines = GradedSum::new();
        for &(u, v, w) in &listed {
            from_lines.add_tensor(&shuffled_term(&x, u, v, w));
        }
        let defect = hopf_defect_12(&x)?;
        if defect != from_lines {
            report.fail(format!("tridegree ({a},{b},{c})"), print_tensor(&x), defect.to_string(), from_lines.to_string());
        }
    }
    Ok(report.finish(started))
}

fn tridegrees(max_total: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for n in 0..=max_total {
        for a in 0..=n {
            for b in 0..=n - a {
                out.push((a, b, n - a - b));
            }
        }
    }
    out
}

/// The defect identity as stated: on every `h`-basis input of tridegree
/// with `a + b + c ≤ max_total`, the defect equals the six-formula sum when
/// `abc > 0` and vanishes otherwise.
pub fn check_defect_theorem(max_total: u32) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("bidegree12-defect").bound("max_total", max_total);
    for (a, b, c) in tridegrees(max_total) {
        for x in tensor_basis(&[a, b, c]) {
            report.checked += 1;
            let defect = hopf_defect_12(&x)?;
            let instance = format!("tridegree ({a},{b},{c})");
            if a * b * c == 0 {
                if !defect.is_zero() {
                    report.fail(instance, print_tensor(&x), defect.to_string(), "0".into());
                }
            } else {
                let six = six_term_12(&x)?;
                if defect != six {
                    report.fail(instance, print_tensor(&x), defect.to_string(), six.to_string());
                }
            }
        }
    }
    Ok(report.finish(started))
}

/// The corrected identity: defect = six-formula sum − hexagon overlap, plus
/// agreement of the two listings, for every positive tridegree up to
/// `max_total`.
pub fn check_defect_overlap(max_total: u32) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("bidegree12-overlap").bound("max_total", max_total);
    for (a, b, c) in tridegrees(max_total).into_iter().filter(|&(a, b, c)| a * b * c > 0) {
        for x in tensor_basis(&[a, b, c]) {
            let instance = format!("tridegree ({a},{b},{c})");
            let six = six_term_12(&x)?;
            report.checked += 1;
            let comm = six_term_12_commutative(&x)?;
            if six != comm {
                report.fail(format!("{instance} listings"), print_tensor(&x), six.to_string(), comm.to_string());
            }
            report.checked += 1;
            let defect = hopf_defect_12(&x)?;
            let corrected = six.sub(&hexagon_overlap_12(&x)?);
            if defect != corrected {
                report.fail(instance, print_tensor(&x), defect.to_string(), corrected.to_string());
            }
        }
    }
    Ok(report.finish(started))
}

/// The three bidegree `(1,2)` suites: the defect identity as stated, the
/// overlap-corrected identity, and the six-case pattern for every positive
/// tridegree up to `max_total`.
pub fn check_bidegree12(max_total: u32) -> Result<Vec<VerificationReport>> {
    if max_total == 0 {
        return Err(Error::Usage("max total must be at least 1".into()));
    }
    let started = Instant::now();
    let mut cases = VerificationReport::new("six-cases").bound("max_total", max_total);
    for (a, b, c) in tridegrees(max_total).into_iter().filter(|&(a, b, c)| a * b * c > 0) {
        cases.absorb(check_six_cases(a, b, c)?);
    }
    Ok(vec![
        check_defect_theorem(max_total)?,
        check_defect_overlap(max_total)?,
        cases.finish(started),
    ])
}

fn reverse(x: &TensorElement) -> Result<TensorElement> {
    tridegree(x)?;
    x.permute_slots(&[2, 1, 0])
}

fn swap_factors(s: &GradedSum) -> GradedSum {
    let mut out = GradedSum::new();
    for t in s.parts().values() {
        out.add_tensor(&t.permute_slots(&[1, 0]).expect("two slots"));
    }
    out
}

/// Bidegree `(2,1)` on `(R(a) ⊗ R(b)) ⊗ R(c)`: the `(1,2)` defect with the
/// slot roles mirrored.
pub fn hopf_defect_21(x: &TensorElement) -> Result<GradedSum> {
    Ok(swap_factors(&hopf_defect_12(&reverse(x)?)?))
}

/// Mirrored six-formula sum.
pub fn six_term_21(x: &TensorElement) -> Result<GradedSum> {
    Ok(swap_factors(&six_term_12(&reverse(x)?)?))
}

/// The mirrored suite: `(2,1)` defect against the mirrored six-formula sum
/// corrected by the mirrored overlap.
pub fn check_bidegree21(max_total: u32) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("bidegree21-overlap").bound("max_total", max_total);
    for (a, b, c) in tridegrees(max_total) {
        for x in tensor_basis(&[a, b, c]) {
            report.checked += 1;
            let defect = hopf_defect_21(&x)?;
            let expected = if a * b * c == 0 {
                GradedSum::new()
            } else {
                six_term_21(&x)?.sub(&swap_factors(&hexagon_overlap_12(&reverse(&x)?)?))
            };
            if defect != expected {
                report.fail(format!("tridegree ({a},{b},{c})"), print_tensor(&x), defect.to_string(), expected.to_string());
            }
        }
    }
    Ok(report.finish(started))
}
