use std::collections::BTreeSet;
use std::fmt;

use super::lexer::{tokenize, Token, TokenKind};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    Not(Box<Formula>),
    RootA(Box<Formula>),
    RootB(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(id: impl Into<String>) -> Self {
        Formula::Atom(id.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn root_a(f: Formula) -> Self {
        Formula::RootA(Box::new(f))
    }

    pub fn root_b(f: Formula) -> Self {
        Formula::RootB(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Self {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    /// Distinct atom ids in lexicographic order.
    pub fn atoms(&self) -> Vec<String> {
        let mut set = BTreeSet::new();
        self.collect_atoms(&mut set);
        set.into_iter().map(str::to_string).collect()
    }

    fn collect_atoms<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Atom(id) => {
                out.insert(id);
            }
            Formula::Not(x) | Formula::RootA(x) | Formula::RootB(x) => x.collect_atoms(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    pub fn has_roots(&self) -> bool {
        match self {
            Formula::Atom(_) => false,
            Formula::RootA(_) | Formula::RootB(_) => true,
            Formula::Not(x) => x.has_roots(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.has_roots() || r.has_roots()
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Not(x) | Formula::RootA(x) | Formula::RootB(x) => 1 + x.depth(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                1 + l.depth().max(r.depth())
            }
        }
    }

    fn is_binary(&self) -> bool {
        matches!(self, Formula::And(..) | Formula::Or(..) | Formula::Implies(..))
    }
}

/// Prints with binary subterms parenthesized, so the output reparses to the
/// same tree regardless of precedence.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        struct Operand<'a>(&'a Formula);

        impl fmt::Display for Operand<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_binary() {
                    write!(f, "({})", self.0)
                } else {
                    write!(f, "{}", self.0)
                }
            }
        }

        match self {
            Formula::Atom(id) => f.write_str(id),
            Formula::Not(x) => write!(f, "~{}", Operand(x)),
            Formula::RootA(x) => write!(f, "rootA {}", Operand(x)),
            Formula::RootB(x) => write!(f, "rootB {}", Operand(x)),
            Formula::And(l, r) => write!(f, "{} & {}", Operand(l), Operand(r)),
            Formula::Or(l, r) => write!(f, "{} | {}", Operand(l), Operand(r)),
            Formula::Implies(l, r) => write!(f, "{} -> {}", Operand(l), Operand(r)),
        }
    }
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    end_offset: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<&'a Token> {
        let tok = self.tokens.get(self.pos);
        self.pos += 1;
        tok
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek().map(|t| &t.kind) == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error_here(&self, expected: &str) -> Error {
        match self.peek() {
            Some(tok) => Error::Syntax {
                offset: tok.offset,
                message: format!("expected {expected}, found {}", tok.kind),
            },
            None => Error::Syntax {
                offset: self.end_offset,
                message: format!("expected {expected}, found end of input"),
            },
        }
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.disjunction()?;
        if self.eat(&TokenKind::Arrow) {
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut lhs = self.conjunction()?;
        while self.eat(&TokenKind::Pipe) {
            let rhs = self.conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while self.eat(&TokenKind::Amp) {
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        let Some(tok) = self.peek() else {
            return Err(self.error_here("a formula"));
        };
        match &tok.kind {
            TokenKind::Tilde => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            TokenKind::RootA => {
                self.bump();
                Ok(Formula::root_a(self.unary()?))
            }
            TokenKind::RootB => {
                self.bump();
                Ok(Formula::root_b(self.unary()?))
            }
            TokenKind::Ident(id) => {
                self.bump();
                Ok(Formula::Atom(id.clone()))
            }
            TokenKind::LParen => {
                self.bump();
                let inner = self.implication()?;
                if !self.eat(&TokenKind::RParen) {
                    return Err(self.error_here("`)`"));
                }
                Ok(inner)
            }
            _ => Err(self.error_here("a formula")),
        }
    }
}

pub fn parse(tokens: &[Token]) -> Result<Formula> {
    parse_to_end(tokens, tokens.last().map_or(0, |t| t.end))
}

pub fn parse_formula(src: &str) -> Result<Formula> {
    parse_to_end(&tokenize(src)?, src.len())
}

fn parse_to_end(tokens: &[Token], end_offset: usize) -> Result<Formula> {
    let mut parser = Parser {
        tokens,
        pos: 0,
        end_offset,
    };
    let formula = parser.implication()?;
    if parser.peek().is_some() {
        return Err(parser.error_here("end of input"));
    }
    Ok(formula)
}
