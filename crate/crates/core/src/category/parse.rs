//! Text form of morphism words: `(3,4) ; d[2,1] ; s[1,1,3] ; tau[[[1,0],[0,1]]]`.
//! Printing is `Display` on [`MorphismWord`].

use std::str::FromStr;

use super::{Generator, MorphismWord};
use crate::compositions::parse_composition;
use crate::contingency::parse_matrix;
use crate::error::{Error, Result};
use crate::text::Cursor;

pub fn parse_word(text: &str) -> Result<MorphismWord> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let source = parse_composition(&mut cur)?;
    let mut steps = Vec::new();
    while !cur.at_end() {
        cur.expect(";")?;
        steps.push(parse_step(&mut cur)?);
    }
    MorphismWord::new(source, steps)
}

fn parse_step(cur: &mut Cursor<'_>) -> Result<Generator> {
    cur.skip_ws();
    if cur.eat("tau[") {
        let k = parse_matrix(cur)?;
        cur.expect("]")?;
        return Ok(Generator::Shuffle(k));
    }
    let merge = cur.peek() == Some('d');
    if !merge && cur.peek() != Some('s') {
        return Err(cur.error("expected a step 'd[..]', 's[..]' or 'tau[..]'".into()));
    }
    cur.eat(if merge { "d" } else { "s" });
    let start = cur.offset();
    let args = cur.u32_list("[", "]")?;
    let arity = if merge { 2 } else { 3 };
    if args.len() != arity {
        return Err(cur.error_at_offset(
            start,
            format!("expected {arity} arguments, found {}", args.len()),
        ));
    }
    let (len, index) = (args[0] as usize, args[1] as usize);
    Ok(if merge {
        Generator::Merge { len, index }
    } else {
        Generator::Split {
            len,
            index,
            at: args[2],
        }
    })
}

impl FromStr for MorphismWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::Composition;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let w = parse_word("(3,4) ; d[2,1]").unwrap();
        assert_eq!(w.target(), &Composition::new([7]));
        let w = parse_word("(7) ; s[1,1,3] ; s[2,2,2]").unwrap();
        let objs: Vec<String> = w.objects().iter().map(|c| c.to_string()).collect();
        assert_eq!(objs, ["(7)", "(3,4)", "(3,2,2)"]);
        let w = parse_word("(1,1,1,1);tau[[[1,1],[1,1]]]").unwrap();
        assert_eq!(w.to_string(), "(1,1,1,1) ; tau[[[1,1],[1,1]]]");
        assert_eq!(parse_word(" (2) ").unwrap().steps().len(), 0);
    }

    #[test]
    fn chain_errors_name_the_step() {
        match parse_word("(3) ; d[2,1]") {
            Err(Error::Chain { step: 1, message }) => assert!(message.contains("length-2")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_word("(7) ; s[1,1,3] ; d[3,1]"),
            Err(Error::Chain { step: 2, .. })
        ));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let cases = [
            ("(3,4) ; x[2,1]", 9),
            ("(3,4) ; d[2]", 10),
            ("(3,4) d[2,1]", 7),
            ("(3,4) ; s[1,1,", 15),
            ("(1,1) ; tau[[[1,0],[0,1]]", 26),
        ];
        for (src, col) in cases {
            match parse_word(src) {
                Err(Error::Syntax { line: 1, column, .. }) => assert_eq!(column, col, "{src}"),
                other => panic!("{src}: {other:?}"),
            }
        }
        assert!(matches!(
            parse_word("(3,4)\n; q"),
            Err(Error::Syntax { line: 2, column: 3, .. })
        ));
    }

    fn arb_word() -> impl Strategy<Value = MorphismWord> {
        (proptest::collection::vec(1u32..5, 1..4), proptest::collection::vec(0u32..1000, 0..6))
            .prop_map(|(parts, choices)| {
                let mut w = MorphismWord::identity(Composition::new(parts));
                for c in choices {
                    let cur = w.target().clone();
                    let t = cur.len();
                    let mut options = Vec::new();
                    for i in 1..t {
                        options.push(Generator::Merge { len: t, index: i });
                    }
                    for i in 1..=t {
                        for a in 1..cur.parts()[i - 1] {
                            options.push(Generator::Split { len: t, index: i, at: a });
                        }
                    }
                    if options.is_empty() {
                        break;
                    }
                    let g = options[c as usize % options.len()].clone();
                    let mut steps = w.steps().to_vec();
                    steps.push(g);
                    w = MorphismWord::new(w.source().clone(), steps).unwrap();
                }
                w
            })
    }

    proptest! {
        #[test]
        fn print_then_parse_round_trips(w in arb_word()) {
            prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w);
        }
    }
}
