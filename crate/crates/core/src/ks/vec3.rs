//! Vectors in Z[sqrt2]^3 and the canonical representative of the ray a
//! vector spans.

use super::KsError;
use crate::exact_arith::{QuadInt, Sign};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vec3(pub [QuadInt; 3]);

impl Vec3 {
    pub fn new(x: QuadInt, y: QuadInt, z: QuadInt) -> Vec3 {
        Vec3([x, y, z])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(QuadInt::is_zero)
    }

    pub fn dot(&self, other: &Vec3) -> QuadInt {
        let mut acc = QuadInt::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            acc = &acc + &(a * b);
        }
        acc
    }

    pub fn cross(&self, other: &Vec3) -> Vec3 {
        let [a, b, c] = &self.0;
        let [d, e, f] = &other.0;
        Vec3([
            &(b * f) - &(c * e),
            &(c * d) - &(a * f),
            &(a * e) - &(b * d),
        ])
    }

    /// Same ray: nonzero scalar multiples of one another.
    pub fn parallel(&self, other: &Vec3) -> bool {
        self.cross(other).is_zero()
    }

    /// Canonical representative of the spanned ray. Two vectors get the
    /// same representative exactly when their cross product vanishes.
    ///
    /// Construction: multiply through by the conjugate of the first
    /// nonzero component (making that slot the integer norm), strip the
    /// integer content, divide once by sqrt 2 if every rational part is
    /// even (at most one such division is ever possible afterwards), and
    /// fix the sign of the first nonzero component positive. Each move is
    /// scaling by a nonzero element, so the ray never changes; scaling the
    /// input rescales the intermediate vector by a rational factor, which
    /// the content strip and sign fix quotient away.
    pub fn canonical(&self) -> Result<Vec3, KsError> {
        let Some(pivot) = self.0.iter().find(|c| !c.is_zero()) else {
            return Err(KsError::ZeroVector { position: 0 });
        };
        let conj = pivot.conj();
        let mut u: Vec<QuadInt> = self.0.iter().map(|c| &conj * c).collect();

        let mut content = BigInt::zero();
        for c in &u {
            content = content.gcd(&c.a).gcd(&c.b);
        }
        debug_assert!(!content.is_zero());
        for c in &mut u {
            *c = QuadInt::new(&c.a / &content, &c.b / &content);
        }

        if u.iter().all(|c| c.a.is_even()) {
            // divide by sqrt 2: (a + b sqrt2)/sqrt2 = b + (a/2) sqrt2
            for c in &mut u {
                *c = QuadInt::new(c.b.clone(), &c.a / BigInt::from(2));
            }
        }

        let flip = u
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| c.sign() == Sign::Negative)
            .unwrap_or(false);
        if flip {
            for c in &mut u {
                *c = -&*c;
            }
        }
        let [x, y, z] = <[QuadInt; 3]>::try_from(u).expect("three components");
        Ok(Vec3([x, y, z]))
    }

    /// Parse one component token: either the compact digit form used for
    /// tabulating rays — `0`, `1`, `2` (meaning sqrt 2), with `!` for
    /// negation — or an explicit `a+b*s2` expression. An integer two must
    /// therefore be written `2+0*s2`.
    pub fn parse_component(token: &str) -> Result<QuadInt, String> {
        let (neg, body) = match token.strip_prefix('!') {
            Some(rest) => (true, rest),
            None => (false, token),
        };
        let compact = match body {
            "0" => Some(QuadInt::zero()),
            "1" => Some(QuadInt::one()),
            "2" => Some(QuadInt::sqrt2()),
            _ => None,
        };
        let value = match compact {
            Some(v) => v,
            None if neg => return Err(format!("`!` negates only compact digits, got {token:?}")),
            None => body
                .parse::<QuadInt>()
                .map_err(|e| format!("bad component {token:?}: {e}"))?,
        };
        Ok(if neg { -&value } else { value })
    }

    /// Parse the compact three-digit form, e.g. `!1!12` for (-1, -1, sqrt2).
    pub fn parse_compact(s: &str) -> Result<Vec3, String> {
        let mut comps = Vec::new();
        let mut chars = s.chars();
        while let Some(c) = chars.next() {
            let (neg, digit) = if c == '!' {
                match chars.next() {
                    Some(d) => (true, d),
                    None => return Err(format!("dangling `!` in {s:?}")),
                }
            } else {
                (false, c)
            };
            let value = match digit {
                '0' => QuadInt::zero(),
                '1' => QuadInt::one(),
                '2' => QuadInt::sqrt2(),
                other => return Err(format!("bad compact digit {other:?} in {s:?}")),
            };
            comps.push(if neg { -&value } else { value });
        }
        match <[QuadInt; 3]>::try_from(comps) {
            Ok(arr) => Ok(Vec3(arr)),
            Err(v) => Err(format!("expected 3 components in {s:?}, got {}", v.len())),
        }
    }

    /// Reconstruct the compact form when every component is 0, ±1 or
    /// ±sqrt2.
    pub fn compact_label(&self) -> Option<String> {
        let mut out = String::new();
        for c in &self.0 {
            let digit = match (i8::try_from(&c.a).ok()?, i8::try_from(&c.b).ok()?) {
                (0, 0) => "0",
                (1, 0) => "1",
                (-1, 0) => "!1",
                (0, 1) => "2",
                (0, -1) => "!2",
                _ => return None,
            };
            out.push_str(digit);
        }
        Some(out)
    }

    /// Human-oriented name: the compact form when available, otherwise the
    /// full component display.
    pub fn display_name(&self) -> String {
        self.compact_label().unwrap_or_else(|| self.to_string())
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}
