//! Element literals.
//!
//! ```text
//! element := ['-'] term (('+' | '-') term)*
//! term    := int | [int '*'] factor ('(x)' factor)*
//! factor  := 'h[' parts ']' | 's[' parts ']'
//! ```
//!
//! `h[]` is the unit of a zero-degree slot and a bare integer is a scalar
//! of empty shape. Schur factors are expanded into the `h` basis; `h` labels
//! may be given in any order. All terms of a sum must have the same shape.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{hall::schur, Partition, SymElement, TensorElement};
use crate::error::Result;
use crate::text::Cursor;

pub fn parse_element(text: &str) -> Result<TensorElement> {
    let mut cur = Cursor::new(text);
    let mut total: Option<TensorElement> = None;
    let mut negative = cur.eat("-");
    loop {
        cur.skip_ws();
        let start = cur.offset();
        let term = parse_term(&mut cur)?;
        let term = if negative { term.scale(&-BigInt::one()) } else { term };
        total = Some(match total {
            None => term,
            Some(acc) => acc.add(&term).map_err(|_| {
                cur.error_at_offset(
                    start,
                    format!("term of shape {:?} does not match shape {:?}", term.shape(), acc.shape()),
                )
            })?,
        });
        if cur.at_end() {
            break;
        }
        negative = if cur.eat("+") {
            false
        } else if cur.eat("-") {
            true
        } else {
            return Err(cur.error("expected '+', '-' or end of input".into()));
        };
    }
    Ok(total.expect("at least one term"))
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<TensorElement> {
    cur.skip_ws();
    let mut coeff = BigInt::one();
    if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        coeff = BigInt::from(cur.unsigned()?);
        if !cur.eat("*") {
            return Ok(TensorElement::scalar(coeff));
        }
    }
    let mut acc = parse_factor(cur)?;
    while cur.eat("(x)") {
        acc = acc.tensor(&parse_factor(cur)?);
    }
    Ok(acc.scale(&coeff))
}

fn parse_factor(cur: &mut Cursor<'_>) -> Result<TensorElement> {
    cur.skip_ws();
    let start = cur.offset();
    let tag = cur.peek();
    match tag {
        Some('h') | Some('s') => {
            cur.eat(if tag == Some('h') { "h" } else { "s" });
        }
        Some('m') => return Err(cur.error("m-basis literals are not supported; use h or s".into())),
        _ => return Err(cur.error("expected 'h[' or 's['".into())),
    }
    let parts = cur.u32_list("[", "]")?;
    if parts.contains(&0) {
        return Err(cur.error_at_offset(start, "partition parts must be positive".into()));
    }
    let lambda = if tag == Some('h') {
        Partition::from_unsorted(parts)
    } else {
        Partition::new(parts).map_err(|e| cur.error_at_offset(start, e.to_string()))?
    };
    let sym = if tag == Some('h') {
        SymElement::basis_vector(super::Basis::H, lambda)
    } else {
        schur(&lambda)
    };
    sym.to_tensor()
}

pub fn print_tensor(x: &TensorElement) -> String {
    print_terms(x.terms().iter().map(|(k, c)| (k.as_slice(), c)))
}

/// Prints a sum of tensor basis vectors; an empty sum is `0`.
pub fn print_terms<'a>(terms: impl IntoIterator<Item = (&'a [Partition], &'a BigInt)>) -> String {
    let mut out = String::new();
    for (k, (labels, c)) in terms.into_iter().enumerate() {
        if k == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mag = c.abs();
        if labels.is_empty() {
            out.push_str(&mag.to_string());
            continue;
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        let factors: Vec<String> = labels.iter().map(|p| format!("h{p}")).collect();
        out.push_str(&factors.join(" (x) "));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn print_sym(x: &SymElement) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (lambda, c)) in x.terms().iter().enumerate() {
        if k == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mag = c.abs();
        if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&format!("{}{lambda}", x.basis()));
    }
    out
}
