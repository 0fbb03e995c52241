//! Z_k edge colorings of complete hosts.
//!
//! Colors are stored in lexicographic pair order
//! `(0,1), (0,2), ..., (0,N-1), (1,2), ..., (N-2,N-1)`, which is also the
//! JSON wire order. Note this differs from the column order graph6 uses.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("expected {expected} colors for host order {n}, got {got}")]
    LengthMismatch {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("color {color} at index {index} not a residue mod {k}")]
    ColorOutOfRange { index: usize, color: u64, k: u64 },
}

/// Index of the unordered pair `{u, v}` in lexicographic pair order.
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u != v && u < n && v < n);
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Edge coloring of `K_N` with colors in `Z_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "RawColoring")]
pub struct ZkColoring {
    n: usize,
    k: u64,
    colors: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RawColoring {
    #[serde(rename = "N")]
    n: usize,
    k: u64,
    colors: Vec<u64>,
}

impl From<ZkColoring> for RawColoring {
    fn from(c: ZkColoring) -> Self {
        RawColoring {
            n: c.n,
            k: c.k,
            colors: c.colors,
        }
    }
}

impl TryFrom<RawColoring> for ZkColoring {
    type Error = ColoringError;

    fn try_from(raw: RawColoring) -> Result<Self, Self::Error> {
        ZkColoring::new(raw.n, raw.k, raw.colors)
    }
}

impl<'de> Deserialize<'de> for ZkColoring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawColoring::deserialize(d)?;
        ZkColoring::try_from(raw).map_err(serde::de::Error::custom)
    }
}

impl ZkColoring {
    pub fn new(n: usize, k: u64, colors: Vec<u64>) -> Result<Self, ColoringError> {
        if k < 2 {
            return Err(ColoringError::ModulusTooSmall(k));
        }
        let expected = n * n.saturating_sub(1) / 2;
        if colors.len() != expected {
            return Err(ColoringError::LengthMismatch {
                n,
                expected,
                got: colors.len(),
            });
        }
        if let Some((index, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= k) {
            return Err(ColoringError::ColorOutOfRange { index, color, k });
        }
        Ok(ZkColoring { n, k, colors })
    }

    /// All edges colored `color`.
    pub fn constant(n: usize, k: u64, color: u64) -> Result<Self, ColoringError> {
        if color >= k {
            return Err(ColoringError::ColorOutOfRange {
                index: 0,
                color,
                k,
            });
        }
        ZkColoring::new(n, k, vec![color; n * n.saturating_sub(1) / 2])
    }

    /// Colors each edge `{u, v}` (with `u < v`) by `f(u, v)`, reduced mod `k`.
    pub fn from_fn(
        n: usize,
        k: u64,
        mut f: impl FnMut(usize, usize) -> u64,
    ) -> Result<Self, ColoringError> {
        if k < 2 {
            return Err(ColoringError::ModulusTooSmall(k));
        }
        let mut colors = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                colors.push(f(u, v) % k);
            }
        }
        ZkColoring::new(n, k, colors)
    }

    /// Deterministic pseudo-random coloring: edge `i` of trial `t` gets color
    /// `splitmix64(splitmix64(splitmix64(seed) ^ t) ^ i) mod k`.
    /// This is the generator behind `stress` runs; identical `(seed, trial)`
    /// always reproduce the same coloring on every platform.
    pub fn seeded(n: usize, k: u64, seed: u64, trial: u64) -> Result<Self, ColoringError> {
        if k < 2 {
            return Err(ColoringError::ModulusTooSmall(k));
        }
        let per_trial = splitmix64(splitmix64(seed) ^ trial);
        let m = n * n.saturating_sub(1) / 2;
        let colors = (0..m as u64).map(|i| splitmix64(per_trial ^ i) % k).collect();
        ZkColoring::new(n, k, colors)
    }

    pub fn host_order(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.k
    }

    pub fn color(&self, u: usize, v: usize) -> u64 {
        self.colors[pair_index(self.n, u, v)]
    }

    pub fn set_color(&mut self, u: usize, v: usize, color: u64) {
        debug_assert!(color < self.k);
        let idx = pair_index(self.n, u, v);
        self.colors[idx] = color % self.k;
    }

    pub fn colors(&self) -> &[u64] {
        &self.colors
    }
}

pub(crate) fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pair_index_is_lexicographic() {
        let n = 5;
        let mut expected = 0;
        for u in 0..n {
            for v in u + 1..n {
                assert_eq!(pair_index(n, u, v), expected);
                assert_eq!(pair_index(n, v, u), expected);
                expected += 1;
            }
        }
        assert_eq!(expected, 10);
    }

    #[test]
    fn json_wire_format() {
        let c = ZkColoring::new(3, 2, vec![0, 1, 1]).unwrap();
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"N":3,"k":2,"colors":[0,1,1]}"#
        );
        assert_eq!(c.color(0, 1), 0);
        assert_eq!(c.color(0, 2), 1);
        assert_eq!(c.color(1, 2), 1);
    }

    #[test]
    fn deserialization_validates() {
        let short: Result<ZkColoring, _> = serde_json::from_str(r#"{"N":3,"k":2,"colors":[0,1]}"#);
        assert!(short.unwrap_err().to_string().contains("expected 3 colors"));
        let oob: Result<ZkColoring, _> = serde_json::from_str(r#"{"N":3,"k":2,"colors":[0,1,2]}"#);
        assert!(oob.unwrap_err().to_string().contains("not a residue"));
        let k1: Result<ZkColoring, _> = serde_json::from_str(r#"{"N":3,"k":1,"colors":[0,0,0]}"#);
        assert!(k1.is_err());
    }

    #[test]
    fn seeded_is_reproducible_and_trial_sensitive() {
        let a = ZkColoring::seeded(11, 3, 42, 7).unwrap();
        let b = ZkColoring::seeded(11, 3, 42, 7).unwrap();
        assert_eq!(a, b);
        let c = ZkColoring::seeded(11, 3, 42, 8).unwrap();
        assert_ne!(a, c);
        assert!(a.colors().iter().all(|&x| x < 3));
    }

    proptest! {
        #[test]
        fn json_round_trip(n in 0usize..9, k in 2u64..7, seed: u64) {
            let c = ZkColoring::seeded(n, k, seed, 0).unwrap();
            let json = serde_json::to_string(&c).unwrap();
            let back: ZkColoring = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(c, back);
        }

        #[test]
        fn from_fn_reduces_mod_k(n in 2usize..8, k in 2u64..9) {
            let c = ZkColoring::from_fn(n, k, |u, v| (u * 31 + v * 17) as u64).unwrap();
            for u in 0..n {
                for v in (u + 1)..n {
                    prop_assert_eq!(c.color(u, v), ((u * 31 + v * 17) as u64) % k);
                }
            }
        }
    }
}
