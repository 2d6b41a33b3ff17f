//! Value expressions: a small text syntax for short game values.
//!
//! ```text
//! expr  := unary (('+' | '-') unary)*
//! unary := '-' unary | atom
//! atom  := INT | INT '/' INT | '*' | '*' INT | 'up' | 'down' | 'up*' | 'down*'
//!        | '{' list '|' list '}' | '(' expr ')'
//! list  := (expr (',' expr)*)?
//! ```
//!
//! Denominators must be powers of two. A minus sign directly before a number
//! literal is folded into the literal.

use std::fmt;

use thiserror::Error;

use crate::value::{add, canonical, down, make_game, negate, nimber, number_game, star, up, Dyadic, Game};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValueExpr {
    Number(Dyadic),
    /// `*n`; `*` alone is `Nimber(1)`.
    Nimber(u32),
    Up,
    Down,
    UpStar,
    DownStar,
    Braces(Vec<ValueExpr>, Vec<ValueExpr>),
    Neg(Box<ValueExpr>),
    Add(Box<ValueExpr>, Box<ValueExpr>),
    Sub(Box<ValueExpr>, Box<ValueExpr>),
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ValueExpr {
    /// Canonical value of the expression.
    pub fn eval(&self) -> Game {
        match self {
            ValueExpr::Number(x) => number_game(*x),
            ValueExpr::Nimber(n) => nimber(*n),
            ValueExpr::Up => up(),
            ValueExpr::Down => down(),
            ValueExpr::UpStar => add(up(), star()),
            ValueExpr::DownStar => add(down(), star()),
            ValueExpr::Braces(l, r) => canonical(make_game(
                l.iter().map(ValueExpr::eval).collect::<Vec<_>>(),
                r.iter().map(ValueExpr::eval).collect::<Vec<_>>(),
            )),
            ValueExpr::Neg(e) => negate(e.eval()),
            ValueExpr::Add(a, b) => add(a.eval(), b.eval()),
            ValueExpr::Sub(a, b) => add(a.eval(), negate(b.eval())),
        }
    }

    fn is_sum(&self) -> bool {
        matches!(self, ValueExpr::Add(..) | ValueExpr::Sub(..))
    }
}

fn join(items: &[ValueExpr]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for ValueExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueExpr::Number(x) => write!(f, "{x}"),
            ValueExpr::Nimber(1) => write!(f, "*"),
            ValueExpr::Nimber(n) => write!(f, "*{n}"),
            ValueExpr::Up => write!(f, "up"),
            ValueExpr::Down => write!(f, "down"),
            ValueExpr::UpStar => write!(f, "up*"),
            ValueExpr::DownStar => write!(f, "down*"),
            ValueExpr::Braces(l, r) => write!(f, "{{{}|{}}}", join(l), join(r)),
            ValueExpr::Neg(e) if e.is_sum() => write!(f, "-({e})"),
            ValueExpr::Neg(e) => write!(f, "-{e}"),
            ValueExpr::Add(a, b) if b.is_sum() => write!(f, "{a} + ({b})"),
            ValueExpr::Add(a, b) => write!(f, "{a} + {b}"),
            ValueExpr::Sub(a, b) if b.is_sum() => write!(f, "{a} - ({b})"),
            ValueExpr::Sub(a, b) => write!(f, "{a} - {b}"),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<ValueExpr, ParseError> {
    let mut p = Parser { text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses and evaluates to a canonical form.
pub fn parse_value(text: &str) -> Result<Game, ParseError> {
    parse_expr(text).map(|e| e.eval())
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected {c:?}")))
        }
    }

    fn expr(&mut self) -> Result<ValueExpr, ParseError> {
        let mut e = self.unary()?;
        loop {
            if self.eat('+') {
                e = ValueExpr::Add(Box::new(e), Box::new(self.unary()?));
            } else if self.eat('-') {
                e = ValueExpr::Sub(Box::new(e), Box::new(self.unary()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn unary(&mut self) -> Result<ValueExpr, ParseError> {
        if self.eat('-') {
            self.skip_ws();
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                let q = self.number()?;
                // `-0` stays a negation so that it prints back unchanged.
                return Ok(if q == Dyadic::ZERO {
                    ValueExpr::Neg(Box::new(ValueExpr::Number(q)))
                } else {
                    ValueExpr::Number(-q)
                });
            }
            return Ok(ValueExpr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.text[start..self.pos].to_string())
    }

    fn number(&mut self) -> Result<Dyadic, ParseError> {
        let start = self.pos;
        let num = self.digits().ok_or_else(|| self.error("expected a number"))?;
        let num: i64 = num.parse().map_err(|_| ParseError {
            position: start,
            message: "integer too large".into(),
        })?;
        self.skip_ws();
        if self.peek() != Some('/') {
            return Ok(Dyadic::integer(num));
        }
        self.pos += 1;
        self.skip_ws();
        let den_start = self.pos;
        let den = self.digits().ok_or_else(|| self.error("expected a denominator"))?;
        let den: u64 = den.parse().map_err(|_| ParseError {
            position: den_start,
            message: "denominator too large".into(),
        })?;
        Dyadic::from_fraction(num, den).map_err(|e| ParseError { position: den_start, message: e.to_string() })
    }

    fn list(&mut self, close: char) -> Result<Vec<ValueExpr>, ParseError> {
        let mut items = Vec::new();
        self.skip_ws();
        if self.peek() == Some(close) {
            return Ok(items);
        }
        loop {
            items.push(self.expr()?);
            if !self.eat(',') {
                return Ok(items);
            }
        }
    }

    fn atom(&mut self) -> Result<ValueExpr, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(ValueExpr::Number(self.number()?)),
            Some('*') => {
                self.pos += 1;
                match self.digits() {
                    None => Ok(ValueExpr::Nimber(1)),
                    Some(d) => d
                        .parse()
                        .map(ValueExpr::Nimber)
                        .map_err(|_| self.error("nimber too large")),
                }
            }
            Some('{') => {
                self.pos += 1;
                let lefts = self.list('|')?;
                self.expect('|')?;
                let rights = self.list('}')?;
                self.expect('}')?;
                Ok(ValueExpr::Braces(lefts, rights))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                    self.pos += 1;
                }
                let word = &self.text[start..self.pos];
                let starred = self.peek() == Some('*')
                    && !self.text[self.pos + 1..].starts_with(|c: char| c.is_ascii_digit());
                match (word, starred) {
                    ("up", true) => {
                        self.pos += 1;
                        Ok(ValueExpr::UpStar)
                    }
                    ("down", true) => {
                        self.pos += 1;
                        Ok(ValueExpr::DownStar)
                    }
                    ("up", false) => Ok(ValueExpr::Up),
                    ("down", false) => Ok(ValueExpr::Down),
                    _ => Err(ParseError { position: start, message: format!("unknown name {word:?}") }),
                }
            }
            Some(c) => Err(self.error(format!("unexpected {c:?}"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::value::{integer, pretty, values_born_by_day};

    fn v(s: &str) -> Game {
        parse_value(s).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(v("2 + down + *"), add(add(integer(2), down()), star()));
        assert_eq!(v("{1|-1}"), make_game([integer(1)], [integer(-1)]));
        assert_eq!(v("1/2"), make_game([integer(0)], [integer(1)]));
        assert_eq!(v("0"), Game::ZERO);
        assert_eq!(v("*0"), Game::ZERO);
        assert_eq!(v("* + *"), Game::ZERO);
        assert_eq!(v("up*"), v("up + *"));
        assert_eq!(v("-(1 + *)"), v("-1 + *"));
        assert_eq!(v("3 - 1/2 - 1/2"), integer(2));
        assert_eq!(v("{0,*|0}"), v("up*"));
        assert_eq!(v("{|}"), Game::ZERO);
        assert_eq!(v("-down"), up());
    }

    #[test]
    fn folds_unary_minus_into_literals() {
        assert_eq!(parse_expr("-3/4").unwrap(), ValueExpr::Number(Dyadic::new(-3, 2)));
        assert_eq!(parse_expr("- 2").unwrap(), ValueExpr::Number(Dyadic::integer(-2)));
        assert_eq!(parse_expr("-*").unwrap(), ValueExpr::Neg(Box::new(ValueExpr::Nimber(1))));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_expr("1/3").unwrap_err().position, 2);
        assert_eq!(parse_expr("1 +").unwrap_err().position, 3);
        assert_eq!(parse_expr("{1|2").unwrap_err().position, 4);
        assert_eq!(parse_expr("upp").unwrap_err().position, 0);
        assert_eq!(parse_expr("1 2").unwrap_err().position, 2);
        assert!(parse_expr("").is_err());
    }

    #[test]
    fn pretty_output_parses_back() {
        for g in values_born_by_day(2) {
            assert_eq!(v(&pretty(g)), g, "{}", pretty(g));
        }
    }

    fn arb_expr() -> impl Strategy<Value = ValueExpr> {
        let leaf = prop_oneof![
            (-8i64..=8, 0u32..=3).prop_map(|(n, e)| ValueExpr::Number(Dyadic::new(n, e))),
            (0u32..=4).prop_map(ValueExpr::Nimber),
            Just(ValueExpr::Up),
            Just(ValueExpr::Down),
            Just(ValueExpr::UpStar),
            Just(ValueExpr::DownStar),
        ];
        leaf.prop_recursive(3, 12, 3, |inner| {
            prop_oneof![
                (prop::collection::vec(inner.clone(), 0..=2), prop::collection::vec(inner.clone(), 0..=2))
                    .prop_map(|(l, r)| ValueExpr::Braces(l, r)),
                inner.clone().prop_map(|e| ValueExpr::Neg(Box::new(e))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| ValueExpr::Add(Box::new(a), Box::new(b))),
                (inner.clone(), inner).prop_map(|(a, b)| ValueExpr::Sub(Box::new(a), Box::new(b))),
            ]
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn print_parse_round_trip(e in arb_expr()) {
            let printed = e.to_string();
            let reparsed = parse_expr(&printed).unwrap();
            prop_assert_eq!(reparsed.to_string(), printed.clone());
            prop_assert_eq!(reparsed.eval(), e.eval());
        }
    }
}
