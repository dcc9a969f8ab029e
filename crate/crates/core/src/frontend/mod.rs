//! Parsing and serialization entry points.

mod json;
mod parser;

pub use json::{module_from_json, module_to_json, module_to_value, SCHEMA_VERSION};
pub use parser::{parse, parse_element, parse_scalar, ExprKind, Expression, Symbol};
