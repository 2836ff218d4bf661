//! Text form of trees: `tree := "1" | leaf | "(" tree " " tree ")"`, with
//! `leaf := label ["'"] "@" weight`. The apostrophe marks a white leaf.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::tree::{graft, Color, SLTree};
use crate::error::{Error, Result};

impl fmt::Display for SLTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SLTree::Unit => f.write_str("1"),
            SLTree::Leaf(leaf) => {
                let mark = if leaf.color == Color::White { "'" } else { "" };
                write!(f, "{}{}@{}", leaf.label, mark, leaf.weight)
            }
            SLTree::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

impl FromStr for SLTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<SLTree> {
        parse_tree(s)
    }
}

/// Parse a tree. Units inside nodes are absorbed as by grafting.
pub fn parse_tree(s: &str) -> Result<SLTree> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
        text: s,
    };
    p.skip_ws();
    let t = p.tree()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("trailing input after tree"));
    }
    Ok(t)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        let before = &self.text[..self.pos.min(self.text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
        self.pos > start
    }

    fn tree(&mut self) -> Result<SLTree> {
        match self.peek() {
            None => Err(self.error("expected a tree, found end of input")),
            Some(b'1') => {
                self.pos += 1;
                Ok(SLTree::Unit)
            }
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let l = self.tree()?;
                if !self.skip_ws() {
                    return Err(self.error("expected whitespace between subtrees"));
                }
                let r = self.tree()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(graft(l, r))
            }
            Some(c) if c.is_ascii_alphabetic() => self.leaf(),
            Some(c) => Err(self.error(format!("unexpected character {:?}", c as char))),
        }
    }

    fn leaf(&mut self) -> Result<SLTree> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        let label = self.text[start..self.pos].to_string();
        let color = if self.peek() == Some(b'\'') {
            self.pos += 1;
            Color::White
        } else {
            Color::Black
        };
        if self.peek() != Some(b'@') {
            return Err(self.error("expected '@' before the weight"));
        }
        self.pos += 1;
        let wstart = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(self.error("expected digits in the weight"));
        }
        let weight: BigInt = self.text[wstart..self.pos]
            .parse()
            .map_err(|_| self.error("invalid weight"))?;
        Ok(SLTree::leaf(label, color, weight))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_example() {
        let s = "((g@0 (g'@2 g@5)) ((g'@5 g@2) g@1))";
        assert_eq!(parse_tree(s).unwrap().to_string(), s);
        assert_eq!(parse_tree("1").unwrap(), SLTree::Unit);
        assert_eq!(parse_tree("x_1'@-12").unwrap().to_string(), "x_1'@-12");
    }

    #[test]
    fn big_weights_survive() {
        let s = "(g@123456789012345678901234567890 g'@-98765432109876543210)";
        assert_eq!(parse_tree(s).unwrap().to_string(), s);
    }

    #[test]
    fn units_are_absorbed() {
        assert_eq!(parse_tree("(1 g@0)").unwrap().to_string(), "g@1");
    }

    #[test]
    fn errors_carry_positions() {
        match parse_tree("(g@0\n  g@)") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 5)),
            other => panic!("{other:?}"),
        }
        assert!(parse_tree("(g@0 g@1").is_err());
        assert!(parse_tree("g@0 g@1").is_err());
        assert!(parse_tree("(g@0g@1)").is_err());
        assert!(parse_tree("7@1").is_err());
    }
}
