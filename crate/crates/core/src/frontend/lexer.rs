use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    Tilde,
    Amp,
    Pipe,
    Arrow,
    LParen,
    RParen,
    RootA,
    RootB,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(id) => write!(f, "identifier `{id}`"),
            TokenKind::Tilde => f.write_str("`~`"),
            TokenKind::Amp => f.write_str("`&`"),
            TokenKind::Pipe => f.write_str("`|`"),
            TokenKind::Arrow => f.write_str("`->`"),
            TokenKind::LParen => f.write_str("`(`"),
            TokenKind::RParen => f.write_str("`)`"),
            TokenKind::RootA => f.write_str("`rootA`"),
            TokenKind::RootB => f.write_str("`rootB`"),
        }
    }
}

/// A token and the byte range it covers in the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub offset: usize,
    pub end: usize,
}

fn is_ident_start(ch: char) -> bool {
    ch.is_ascii_alphabetic() || ch == '_'
}

fn is_ident_continue(ch: char) -> bool {
    ch.is_ascii_alphanumeric() || ch == '_'
}

pub fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = src.char_indices().peekable();

    while let Some((offset, ch)) = chars.next() {
        let single = match ch {
            _ if ch.is_whitespace() => continue,
            '~' => Some(TokenKind::Tilde),
            '&' => Some(TokenKind::Amp),
            '|' => Some(TokenKind::Pipe),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            _ => None,
        };
        if let Some(kind) = single {
            tokens.push(Token {
                kind,
                offset,
                end: offset + 1,
            });
            continue;
        }

        if ch == '-' {
            match chars.peek() {
                Some(&(_, '>')) => {
                    chars.next();
                    tokens.push(Token {
                        kind: TokenKind::Arrow,
                        offset,
                        end: offset + 2,
                    });
                    continue;
                }
                _ => return Err(Error::Lex { offset, ch }),
            }
        }

        if is_ident_start(ch) {
            let mut end = offset + ch.len_utf8();
            while let Some(&(i, next)) = chars.peek() {
                if !is_ident_continue(next) {
                    break;
                }
                end = i + next.len_utf8();
                chars.next();
            }
            let word = &src[offset..end];
            let kind = match word {
                "rootA" => TokenKind::RootA,
                "rootB" => TokenKind::RootB,
                _ => TokenKind::Ident(word.to_string()),
            };
            tokens.push(Token { kind, offset, end });
            continue;
        }

        return Err(Error::Lex { offset, ch });
    }
    Ok(tokens)
}
