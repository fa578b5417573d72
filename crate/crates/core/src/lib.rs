//! Short identities of the full transformation semigroup `T_k` and positive
//! identities of the symmetric group `S_k` over the alphabet `{x, y}`, and the
//! separation functions `Sep(n)` and `Sepp(n)` they determine.

pub mod algebra;
pub mod checker;
pub mod error;
pub mod families;
pub mod search;
pub mod separators;
pub mod words;

pub use algebra::{compose, power, PackedMap, Permutation, Transformation};
pub use checker::{
    eval, eval_expr, is_identity, is_identity_s, is_identity_t, is_irreducible, sep, sepp, Assignment, Mode,
    SepValue, Verdict, Witness,
};
pub use error::{Error, Result};
pub use words::{parse_expr, parse_word, Expr, Letter, Word};
