//! A small propositional language compiled to matrix pipelines.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! formula := or ( "->" formula )?          right-associative
//! or      := and ( "|" and )*              left-associative
//! and     := unary ( "&" unary )*          left-associative
//! unary   := ( "~" | "rootA" | "rootB" ) unary | atom | "(" formula ")"
//! ```

mod eval;
mod lexer;
mod parser;

pub use eval::{
    classical_oracle, evaluate, truth_table, Assignment, AtomValue, Program, TruthRow, TruthTable,
    MAX_TABLE_ATOMS,
};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, parse_formula, Formula};
