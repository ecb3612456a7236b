//! The `.alg` algebra-definition language: lexer, parser, symbol
//! resolution, and the canonical printer.

pub mod ast;
pub mod builder;
pub mod lexer;
pub mod parser;
pub mod printer;

pub use builder::{build_algebra, expr_for_presentation};
pub use parser::parse_document;
pub use printer::{poly_string, render_algebra};
