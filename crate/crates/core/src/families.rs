//! Closed-form identity families and the parameter conditions that make the
//! `(xy)/(yx)` block identities hold in `S_k`.

use serde::{Deserialize, Serialize};

use crate::algebra::{lcm_upto, maximal_orders, prime_power_product};
use crate::error::{Error, Result};
use crate::words::{parse_expr, Expr};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `x^{k-1} = x^{k-1+lcm(k)}`.
    Unary,
    /// `x^{k-2} y x^{k-1} = x^{k-2+lcm(k)} y x^{k-1}`.
    Nonuniform,
    /// `x^{k-1+lcm(k)} y^{k-1} = x^{k-1} y^{k-1+lcm(k)}`.
    Unbalanced,
    /// `x^{k-2+lcm(k)} y x^{k-1} = x^{k-2} y x^{k-1+lcm(k)}`.
    Balanced,
    /// `(xy)^{k-2+lcm(k-1)} (yx)^k (xy)^{k-1}` against the shifted exponent.
    ShortSemigroup,
    /// `(xy)^a (yx)^b = (yx)^b (xy)^a`.
    Ab,
    /// `(xy)^a (yx)^b (xy)^c (yx)^d = (yx)^d (xy)^c (yx)^b (xy)^a`.
    Abcd,
    /// A fixed pair from the catalog of computed identities.
    Catalog,
    /// Produced by a search.
    Found,
}

/// An identity candidate with its level and the length its family predicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityPair {
    pub u: Expr,
    pub v: Expr,
    pub k: usize,
    pub family: Family,
    pub claimed_length: u128,
}

impl IdentityPair {
    /// `max(|u|, |v|)` measured on the expressions.
    pub fn length(&self) -> u128 {
        self.u.len().unwrap_or(u128::MAX).max(self.v.len().unwrap_or(u128::MAX))
    }
}

fn xy() -> Expr {
    Expr::plain("xy")
}

fn yx() -> Expr {
    Expr::plain("yx")
}

fn lcm_k(k: usize) -> Result<u64> {
    lcm_upto(k as u64)
}

fn need_k(k: usize, min: usize) -> Result<()> {
    if k < min {
        return Err(Error::InvalidArgument(format!("this family needs k >= {min}, got {k}")));
    }
    Ok(())
}

pub fn unary_identity(k: usize) -> Result<IdentityPair> {
    need_k(k, 1)?;
    let l = lcm_k(k)?;
    let k1 = k as u64 - 1;
    Ok(IdentityPair {
        u: Expr::x().pow(k1),
        v: Expr::x().pow(k1 + l),
        k,
        family: Family::Unary,
        claimed_length: (l + k1) as u128,
    })
}

pub fn nonuniform_identity(k: usize) -> Result<IdentityPair> {
    need_k(k, 2)?;
    let l = lcm_k(k)?;
    let k = k as u64;
    Ok(IdentityPair {
        u: Expr::concat([Expr::x().pow(k - 2), Expr::y(), Expr::x().pow(k - 1)]),
        v: Expr::concat([Expr::x().pow(k - 2 + l), Expr::y(), Expr::x().pow(k - 1)]),
        k: k as usize,
        family: Family::Nonuniform,
        claimed_length: (l + 2 * k - 2) as u128,
    })
}

pub fn unbalanced_identity(k: usize) -> Result<IdentityPair> {
    need_k(k, 2)?;
    let l = lcm_k(k)?;
    let k = k as u64;
    Ok(IdentityPair {
        u: Expr::concat([Expr::x().pow(k - 1 + l), Expr::y().pow(k - 1)]),
        v: Expr::concat([Expr::x().pow(k - 1), Expr::y().pow(k - 1 + l)]),
        k: k as usize,
        family: Family::Unbalanced,
        claimed_length: (l + 2 * k - 2) as u128,
    })
}

pub fn balanced_identity(k: usize) -> Result<IdentityPair> {
    need_k(k, 2)?;
    let l = lcm_k(k)?;
    let k = k as u64;
    Ok(IdentityPair {
        u: Expr::concat([Expr::x().pow(k - 2 + l), Expr::y(), Expr::x().pow(k - 1)]),
        v: Expr::concat([Expr::x().pow(k - 2), Expr::y(), Expr::x().pow(k - 1 + l)]),
        k: k as usize,
        family: Family::Balanced,
        claimed_length: (l + 2 * k - 2) as u128,
    })
}

/// The `(xy)/(yx)` identity of length `2 lcm(k-1) + 6(k-1)`, shorter than the
/// unary one when `k >= 5` is a prime or an odd prime power.
pub fn theorem1_identity(k: usize) -> Result<IdentityPair> {
    need_k(k, 2)?;
    let l = lcm_k(k - 1)?;
    let k = k as u64;
    Ok(IdentityPair {
        u: Expr::concat([xy().pow(k - 2 + l), yx().pow(k), xy().pow(k - 1)]),
        v: Expr::concat([xy().pow(k - 2), yx().pow(k), xy().pow(k - 1 + l)]),
        k: k as usize,
        family: Family::ShortSemigroup,
        claimed_length: (2 * l + 6 * (k - 1)) as u128,
    })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbParams {
    pub k: usize,
    pub a: u64,
    pub b: u64,
}

impl AbParams {
    pub fn length(&self) -> u128 {
        2 * (self.a as u128 + self.b as u128)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbcdParams {
    pub k: usize,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl AbcdParams {
    pub fn length(&self) -> u128 {
        2 * [self.a, self.b, self.c, self.d].iter().map(|&n| n as u128).sum::<u128>()
    }

    /// The same identity read right to left: `(a, b, c, d) -> (d, c, b, a)`.
    pub fn mirrored(&self) -> Self {
        Self { k: self.k, a: self.d, b: self.c, c: self.b, d: self.a }
    }

    /// Lexicographically smaller of the tuple and its mirror.
    pub fn canonical(&self) -> Self {
        let m = self.mirrored();
        if (m.a, m.b, m.c, m.d) < (self.a, self.b, self.c, self.d) {
            m
        } else {
            *self
        }
    }
}

/// Every element order of `S_k` divides `a` or `b`. Divisors of an order
/// are orders too, so only the divisibility-maximal ones are tested.
pub fn check_ab_condition(k: usize, a: u64, b: u64) -> bool {
    maximal_orders(k).iter().all(|&q| a % q == 0 || b % q == 0)
}

/// Whether the order `q` passes one of the six conditions of the
/// four-block proposition (three conditions and their `b<->c`, `a<->d`
/// counterparts).
pub fn abcd_order_ok(q: u64, a: u64, b: u64, c: u64, d: u64) -> bool {
    let div = |n: u64| n % q == 0;
    (div(a) && div(c))
        || (div(a + c) && div(b))
        || (div(a) && b % q == d % q)
        || (div(d) && div(b))
        || (div(d + b) && div(c))
        || (div(d) && c % q == a % q)
}

pub fn check_abcd_condition(k: usize, a: u64, b: u64, c: u64, d: u64) -> bool {
    maximal_orders(k).iter().all(|&q| abcd_order_ok(q, a, b, c, d))
}

pub fn ab_identity(p: AbParams) -> Result<IdentityPair> {
    if p.a == 0 || p.b == 0 {
        return Err(Error::InvalidArgument("a and b must be positive".into()));
    }
    Ok(IdentityPair {
        u: Expr::concat([xy().pow(p.a), yx().pow(p.b)]),
        v: Expr::concat([yx().pow(p.b), xy().pow(p.a)]),
        k: p.k,
        family: Family::Ab,
        claimed_length: p.length(),
    })
}

pub fn abcd_identity(p: AbcdParams) -> Result<IdentityPair> {
    if [p.a, p.b, p.c, p.d].contains(&0) {
        return Err(Error::InvalidArgument("a, b, c, d must be positive".into()));
    }
    Ok(IdentityPair {
        u: Expr::concat([xy().pow(p.a), yx().pow(p.b), xy().pow(p.c), yx().pow(p.d)]),
        v: Expr::concat([yx().pow(p.d), xy().pow(p.c), yx().pow(p.b), xy().pow(p.a)]),
        k: p.k,
        family: Family::Abcd,
        claimed_length: p.length(),
    })
}

/// How `b` is built from the split point `m`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem2Variant {
    /// `b = lcm(k-m) * P(m)`.
    Plain,
    /// `b = lcm(lcm(k-m-1), P(m))`.
    Footnote,
}

/// Parameters `a = lcm(m)` and `b` from the split `m = floor(alpha * k)`,
/// `alpha = alpha_num / alpha_den`. `P(m)` is the product of the primes and
/// prime powers in `(m, k]`.
pub fn theorem2_params(k: usize, variant: Theorem2Variant, alpha_num: u64, alpha_den: u64) -> Result<AbParams> {
    if alpha_den == 0 || alpha_num >= alpha_den || alpha_num == 0 {
        return Err(Error::InvalidArgument(format!("alpha = {alpha_num}/{alpha_den} must lie in (0, 1)")));
    }
    let m = (k as u64 * alpha_num / alpha_den) as usize;
    theorem2_params_with_m(k, m, variant)
}

/// [`theorem2_params`] with the split point given directly.
pub fn theorem2_params_with_m(k: usize, m: usize, variant: Theorem2Variant) -> Result<AbParams> {
    need_k(k, 3)?;
    if m < 1 || m >= k {
        return Err(Error::InvalidArgument(format!("split m = {m} must satisfy 1 <= m < k = {k}")));
    }
    let (k64, m64) = (k as u64, m as u64);
    let a = lcm_upto(m64)?;
    let p = prime_power_product(m64, k64)?;
    let b = match variant {
        Theorem2Variant::Plain => lcm_upto(k64 - m64)?
            .checked_mul(p)
            .ok_or_else(|| Error::Overflow("b exceeds 64 bits".into()))?,
        Theorem2Variant::Footnote => {
            let l = lcm_upto(k64 - m64 - 1)?;
            num_integer::lcm(l, p)
        }
    };
    Ok(AbParams { k, a, b })
}

/// Symmetry shape of a catalog identity.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairShape {
    /// `v` is the reversal of `u`.
    Palindrome,
    /// Both sides are `{xy, yx}`-words and `v` reverses the blocks of `u`.
    XyyxPalindrome,
}

/// A computed positive identity of `S_5`, with its recorded properties.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownIdentity {
    pub name: &'static str,
    pub pair: IdentityPair,
    pub shape: PairShape,
    /// Whether it also holds in `S_6`, when recorded.
    pub holds_in_s6: Option<bool>,
}

const S5_IDENTITIES: [(&str, &str, &str, u128, PairShape, Option<bool>); 10] = [
    (
        "len32-palindrome",
        "(xy)(xyyx)^3(yxxy)^2(yx)(yxxy)^2",
        "(yxxy)^2(xy)(yxxy)^2(xyyx)^3(yx)",
        32,
        PairShape::Palindrome,
        None,
    ),
    ("len32-blocks", "(xy)^4(yx)^5(xy)^6(yx)", "(yx)(xy)^6(yx)^5(xy)^4", 32, PairShape::XyyxPalindrome, Some(true)),
    ("s5-1", "(xy)^{12}(yx)^5", "(yx)^5(xy)^{12}", 34, PairShape::XyyxPalindrome, Some(true)),
    (
        "s5-2",
        "(xy)^4(yx)^5(xy)^6(yx)(xy)^2(yx)",
        "(yx)(xy)^2(yx)(xy)^6(yx)^5(xy)^4",
        38,
        PairShape::XyyxPalindrome,
        Some(true),
    ),
    (
        "s5-3",
        "(xy)^2(yx)^3(xyyx)^2(xy)^2(yxxy)^2(xyyx)^2",
        "(yxxy)^2(xyyx)^2(xy)^2(yxxy)^2(yx)^3(xy)^2",
        38,
        PairShape::XyyxPalindrome,
        Some(false),
    ),
    (
        "s5-4",
        "(x^2y^2)^2y(x^2y^2)^4x^2y(x^2y^2)^2x^2y",
        "yx^2(y^2x^2)^2yx^2(y^2x^2)^4y(y^2x^2)^2",
        39,
        PairShape::Palindrome,
        Some(false),
    ),
    (
        "s5-5",
        "(x^2y^2)^3y(x^2y^2)^4x^2y(x^2y^2)x^2y",
        "yx^2(y^2x^2)yx^2(y^2x^2)^4y(y^2x^2)^3",
        39,
        PairShape::Palindrome,
        Some(false),
    ),
    ("s5-6", "(xyyx)^3(yxxy)^5(xyyx)^2", "(yxxy)^2(xyyx)^5(yxxy)^3", 40, PairShape::XyyxPalindrome, Some(false)),
    ("s5-7", "(xy)^6(yx)^{10}(xy)^4", "(yx)^4(xy)^{10}(yx)^6", 40, PairShape::Palindrome, Some(true)),
    ("s5-8", "(x^2y^2)^3(y^2x^2)^5(x^2y^2)^2", "(y^2x^2)^2(x^2y^2)^5(y^2x^2)^3", 40, PairShape::Palindrome, Some(false)),
];

/// The two length-32 identities of `S_5` followed by the eight longer ones
/// found by the restricted searches, in table order.
pub fn known_s5_identities() -> Vec<KnownIdentity> {
    S5_IDENTITIES
        .iter()
        .map(|&(name, u, v, len, shape, holds_in_s6)| KnownIdentity {
            name,
            pair: IdentityPair {
                u: parse_expr(u).expect("catalog entry parses"),
                v: parse_expr(v).expect("catalog entry parses"),
                k: 5,
                family: Family::Catalog,
                claimed_length: len,
            },
            shape,
            holds_in_s6,
        })
        .collect()
}
