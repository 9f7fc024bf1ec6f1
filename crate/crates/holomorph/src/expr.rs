//! Group expressions.
//!
//! ```text
//! expr    := prod
//! prod    := atom ("x" atom)*
//! atom    := primary (":" primary "[" action "]")*
//! primary := "Z" int | "D" int | "Hol" int | "(" expr ")"
//! action  := "r^" int | "#" int
//! ```
//!
//! Whitespace between tokens is ignored. `:` binds tighter than `x`; both
//! associate to the left.

use std::fmt;

use holomorph_core::construct::{
    actions_with, cyclic_named, dihedral_with, holomorph_semidirect, semidirect_cyclic_with,
    Semidirect,
};
use holomorph_core::{Error, GroupTable, Limits};

/// Maximum parenthesis nesting.
pub const MAX_DEPTH: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(usize),
    Dihedral(usize),
    Holomorph(usize),
    Product(Box<GroupExpr>, Box<GroupExpr>),
    Semidirect(Box<GroupExpr>, Box<GroupExpr>, ActionSpec),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionSpec {
    /// The generator of a cyclic `H` acts on a cyclic `K` by `r -> r^i`.
    CyclicPower(u64),
    /// Position in the sorted enumeration of `hom(H, Aut(K))`, from 0.
    Index(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Unexpected {
        expected: Vec<&'static str>,
        found: String,
    },
    ZeroOrder,
    IntegerTooLarge,
    TooDeep,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn expected(&self) -> &[&'static str] {
        match &self.kind {
            ParseErrorKind::Unexpected { expected, .. } => expected,
            ParseErrorKind::ZeroOrder => &["positive integer"],
            ParseErrorKind::IntegerTooLarge => &["integer below 2^64"],
            ParseErrorKind::TooDeep => &[],
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: ", self.offset)?;
        match &self.kind {
            ParseErrorKind::Unexpected { expected, found } => {
                write!(f, "expected {}, found {found}", expected.join(" or "))
            }
            ParseErrorKind::ZeroOrder => f.write_str("group orders must be positive"),
            ParseErrorKind::IntegerTooLarge => f.write_str("integer too large"),
            ParseErrorKind::TooDeep => write!(f, "parentheses nested deeper than {MAX_DEPTH}"),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<GroupExpr, ParseError> {
    let mut p = Parser {
        src: text,
        pos: 0,
        depth: 0,
    };
    let e = p.prod()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.unexpected(&["x", ":", "end of input"]));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    depth: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn unexpected(&self, expected: &[&'static str]) -> ParseError {
        let found = match self.src[self.pos..].chars().next() {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        };
        ParseError {
            offset: self.pos,
            kind: ParseErrorKind::Unexpected {
                expected: expected.to_vec(),
                found,
            },
        }
    }

    fn expect(&mut self, tok: &'static str, expected: &[&'static str]) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(self.unexpected(&["integer"]));
        }
        self.pos += digits;
        self.src[start..self.pos].parse().map_err(|_| ParseError {
            offset: start,
            kind: ParseErrorKind::IntegerTooLarge,
        })
    }

    fn order(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let n = self.int()?;
        if n == 0 {
            return Err(ParseError {
                offset: start,
                kind: ParseErrorKind::ZeroOrder,
            });
        }
        usize::try_from(n).map_err(|_| ParseError {
            offset: start,
            kind: ParseErrorKind::IntegerTooLarge,
        })
    }

    fn prod(&mut self) -> Result<GroupExpr, ParseError> {
        let mut e = self.atom()?;
        while self.eat("x") {
            let rhs = self.atom()?;
            e = GroupExpr::Product(Box::new(e), Box::new(rhs));
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<GroupExpr, ParseError> {
        let mut e = self.primary()?;
        while self.eat(":") {
            let h = self.primary()?;
            self.expect("[", &["["])?;
            let act = self.action()?;
            self.expect("]", &["]"])?;
            e = GroupExpr::Semidirect(Box::new(e), Box::new(h), act);
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<GroupExpr, ParseError> {
        if self.eat("Hol") {
            return Ok(GroupExpr::Holomorph(self.order()?));
        }
        if self.eat("Z") {
            return Ok(GroupExpr::Cyclic(self.order()?));
        }
        if self.eat("D") {
            return Ok(GroupExpr::Dihedral(self.order()?));
        }
        if self.eat("(") {
            if self.depth == MAX_DEPTH {
                return Err(ParseError {
                    offset: self.pos - 1,
                    kind: ParseErrorKind::TooDeep,
                });
            }
            self.depth += 1;
            let e = self.prod()?;
            self.expect(")", &["x", ":", ")"])?;
            self.depth -= 1;
            return Ok(e);
        }
        Err(self.unexpected(&["Z", "D", "Hol", "("]))
    }

    fn action(&mut self) -> Result<ActionSpec, ParseError> {
        if self.eat("#") {
            let start = self.pos;
            let j = self.int()?;
            let j = usize::try_from(j).map_err(|_| ParseError {
                offset: start,
                kind: ParseErrorKind::IntegerTooLarge,
            })?;
            return Ok(ActionSpec::Index(j));
        }
        if self.eat("r") {
            self.expect("^", &["^"])?;
            return Ok(ActionSpec::CyclicPower(self.int()?));
        }
        Err(self.unexpected(&["r^", "#"]))
    }
}

impl fmt::Display for ActionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionSpec::CyclicPower(i) => write!(f, "r^{i}"),
            ActionSpec::Index(j) => write!(f, "#{j}"),
        }
    }
}

impl GroupExpr {
    fn is_leaf(&self) -> bool {
        matches!(
            self,
            GroupExpr::Cyclic(_) | GroupExpr::Dihedral(_) | GroupExpr::Holomorph(_)
        )
    }
}

/// Prints in the input syntax with the minimum of parentheses, so that
/// parsing the output gives back the same tree.
impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "Z{n}"),
            GroupExpr::Dihedral(n) => write!(f, "D{n}"),
            GroupExpr::Holomorph(n) => write!(f, "Hol{n}"),
            GroupExpr::Product(a, b) => {
                write!(f, "{a} x ")?;
                if matches!(**b, GroupExpr::Product(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            GroupExpr::Semidirect(k, h, act) => {
                if matches!(**k, GroupExpr::Product(..)) {
                    write!(f, "({k})")?;
                } else {
                    write!(f, "{k}")?;
                }
                if h.is_leaf() {
                    write!(f, " : {h} [{act}]")
                } else {
                    write!(f, " : ({h}) [{act}]")
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("r^i actions need cyclic groups on both sides of ':'")]
    NeedsCyclicOperands,
    #[error("action #{index} out of range: there are {count} actions")]
    ActionIndex { index: usize, count: usize },
    #[error(transparent)]
    Group(#[from] Error),
}

impl EvalError {
    pub fn is_cap(&self) -> bool {
        matches!(self, EvalError::Group(e) if e.is_cap())
    }
}

/// Builds the table. Plain cyclic leaves get generator symbols `r`, `s`,
/// `t`, ... in reading order.
pub fn eval_expr(e: &GroupExpr) -> Result<GroupTable, EvalError> {
    eval_expr_with(e, &Limits::default())
}

pub fn eval_expr_with(e: &GroupExpr, limits: &Limits) -> Result<GroupTable, EvalError> {
    Evaluator {
        limits,
        next_symbol: 0,
    }
    .eval(e)
}

struct Evaluator<'a> {
    limits: &'a Limits,
    next_symbol: usize,
}

impl Evaluator<'_> {
    fn symbol(&mut self) -> String {
        const LETTERS: &[u8] = b"rstuvwyz";
        let i = self.next_symbol;
        self.next_symbol += 1;
        match LETTERS.get(i) {
            Some(&c) => (c as char).to_string(),
            None => format!("g{i}"),
        }
    }

    fn eval(&mut self, e: &GroupExpr) -> Result<GroupTable, EvalError> {
        let limits = self.limits;
        Ok(match e {
            GroupExpr::Cyclic(n) => {
                let sym = self.symbol();
                cyclic_named(*n, &sym, limits)?
            }
            GroupExpr::Dihedral(n) => dihedral_with(*n, limits)?,
            GroupExpr::Holomorph(n) => holomorph_semidirect(*n, limits)?.into_table(),
            GroupExpr::Product(a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                holomorph_core::construct::direct_product_with(&a, &b, limits)?
            }
            GroupExpr::Semidirect(k, h, ActionSpec::CyclicPower(i)) => match (&**k, &**h) {
                (GroupExpr::Cyclic(m), GroupExpr::Cyclic(n)) => {
                    semidirect_cyclic_with(*m, *n, *i, limits)?.into_table()
                }
                _ => return Err(EvalError::NeedsCyclicOperands),
            },
            GroupExpr::Semidirect(k, h, ActionSpec::Index(j)) => {
                let (k, h) = (self.eval(k)?, self.eval(h)?);
                let acts = actions_with(&h, &k, limits)?;
                let psi = acts.get(*j).ok_or(EvalError::ActionIndex {
                    index: *j,
                    count: acts.len(),
                })?;
                Semidirect::new_with(&k, &h, psi, limits)?.into_table()
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use holomorph_core::construct::dihedral;
    use holomorph_core::iso::are_isomorphic;

    fn z(n: usize) -> Box<GroupExpr> {
        Box::new(GroupExpr::Cyclic(n))
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_expr("Z8 x Z2").unwrap(),
            GroupExpr::Product(z(8), z(2))
        );
        assert_eq!(
            parse_expr("Z8 : Z2 [r^3]").unwrap(),
            GroupExpr::Semidirect(z(8), z(2), ActionSpec::CyclicPower(3))
        );
        let e = parse_expr("(Z2 x D4) : Z2 [#1]").unwrap();
        assert_eq!(
            e,
            GroupExpr::Semidirect(
                Box::new(GroupExpr::Product(z(2), Box::new(GroupExpr::Dihedral(4)))),
                z(2),
                ActionSpec::Index(1)
            )
        );
        assert_eq!(parse_expr(" Hol 5 ").unwrap(), GroupExpr::Holomorph(5));
        assert_eq!(
            parse_expr("Z2xZ3xZ5").unwrap(),
            parse_expr("(Z2 x Z3) x Z5").unwrap()
        );
    }

    #[test]
    fn colon_binds_tighter() {
        let e = parse_expr("Z2 x Z3 : Z4 [r^2]").unwrap();
        assert_eq!(
            e,
            GroupExpr::Product(
                z(2),
                Box::new(GroupExpr::Semidirect(
                    z(3),
                    z(4),
                    ActionSpec::CyclicPower(2)
                ))
            )
        );
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let err = parse_expr("Z8 x").unwrap_err();
        assert_eq!(err.offset, 4);
        assert_eq!(err.expected(), &["Z", "D", "Hol", "("]);
        let err = parse_expr("Z8 : Z2 [q]").unwrap_err();
        assert_eq!(err.offset, 9);
        assert_eq!(err.expected(), &["r^", "#"]);
        assert_eq!(
            parse_expr("Z0").unwrap_err().kind,
            ParseErrorKind::ZeroOrder
        );
        assert_eq!(parse_expr("Z8 Z2").unwrap_err().offset, 3);
        assert_eq!(parse_expr("(Z2").unwrap_err().expected(), &["x", ":", ")"]);
        let deep = format!("{}Z2{}", "(".repeat(80), ")".repeat(80));
        assert_eq!(parse_expr(&deep).unwrap_err().kind, ParseErrorKind::TooDeep);
        assert!(parse_expr("Z99999999999999999999999").is_err());
    }

    #[test]
    fn eval_examples() {
        let d8 = eval_expr(&parse_expr("Z8 : Z2 [r^7]").unwrap()).unwrap();
        assert!(are_isomorphic(&d8, &dihedral(8).unwrap())
            .unwrap()
            .is_some());
        let err = eval_expr(&parse_expr("Z8 : Z2 [r^2]").unwrap()).unwrap_err();
        assert!(matches!(err, EvalError::Group(Error::NotUnit { .. })));
        let err = eval_expr(&parse_expr("Z9 : Z2 [r^2]").unwrap()).unwrap_err();
        assert!(matches!(
            err,
            EvalError::Group(Error::ActionOrder { order: 6, .. })
        ));
        let err = eval_expr(&parse_expr("D3 : Z2 [r^1]").unwrap()).unwrap_err();
        assert_eq!(err, EvalError::NeedsCyclicOperands);
        let err = eval_expr(&parse_expr("Z5 : Z4 [#9]").unwrap()).unwrap_err();
        assert_eq!(err, EvalError::ActionIndex { index: 9, count: 4 });
        let t = eval_expr(&parse_expr("Z3 x Z2").unwrap()).unwrap();
        assert_eq!(t.name(t.order() - 1), "r^2·s");
        let huge = eval_expr(&parse_expr("Z100 x Z100").unwrap()).unwrap_err();
        assert!(huge.is_cap());
    }

    #[test]
    fn index_actions_follow_enumeration_order() {
        let trivial = eval_expr(&parse_expr("Z5 : Z4 [#0]").unwrap()).unwrap();
        assert!(trivial.is_abelian());
        let a = eval_expr(&parse_expr("Z5 : Z4 [#1]").unwrap()).unwrap();
        let b = eval_expr(&parse_expr("Z5 : Z4 [r^2]").unwrap()).unwrap();
        assert!(are_isomorphic(&a, &b).unwrap().is_some());
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "Z8 x Z2",
            "Z2 x Z3 : Z4 [r^2]",
            "(Z2 x D4) : Z2 [#1]",
            "Z2 x (Z3 x Z5)",
            "Z3 : (Z2 x Z2) [#0]",
            "Hol7",
        ] {
            let e = parse_expr(s).unwrap();
            assert_eq!(e.to_string(), s);
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
        }
    }
}
