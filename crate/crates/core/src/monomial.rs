use crate::caps::EXPONENT_CAP;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Exponent vector of a monomial over a fixed ring.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, v: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.0[v] = 1;
        m
    }

    /// Squarefree monomial on the given variables.
    pub fn from_support(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Monomial {
        let mut m = Monomial::one(nvars);
        for v in vars {
            m.0[v] = 1;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// The single variable this monomial equals, if it is one.
    pub fn as_variable(&self) -> Option<usize> {
        let mut found = None;
        for (v, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 if found.is_none() => found = Some(v),
                _ => return None,
            }
        }
        found
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, _)| v)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            let s = a as u32 + b as u32;
            if s > EXPONENT_CAP {
                return Err(Error::Overflow { cap: EXPONENT_CAP });
            }
            out.push(s as u16);
        }
        Ok(Monomial(out))
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    /// `self / gcd(self, other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.saturating_sub(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn format(&self, ring: &Ring) -> String {
        ring.format(self)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Variable names of a polynomial ring. Paired rings have the layout
/// `x1..xn, y1..yn`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ring {
    names: Vec<String>,
    pairs: Option<usize>,
}

impl Ring {
    /// `K[x1..xn, y1..yn]`.
    pub fn paired(n: usize) -> Ring {
        let names = (1..=n)
            .map(|i| format!("x{i}"))
            .chain((1..=n).map(|i| format!("y{i}")))
            .collect();
        Ring { names, pairs: Some(n) }
    }

    /// Ring with variables `v1..vN`.
    pub fn plain(nvars: usize) -> Ring {
        Ring { names: (1..=nvars).map(|i| format!("v{i}")).collect(), pairs: None }
    }

    pub fn with_names(names: Vec<String>) -> Ring {
        Ring { names, pairs: None }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn pairs(&self) -> Option<usize> {
        self.pairs
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    /// Index of `x_i` (0-based `i`) in a paired ring.
    pub fn x(&self, i: usize) -> usize {
        debug_assert!(self.pairs.is_some_and(|n| i < n));
        i
    }

    /// Index of `y_i` (0-based `i`) in a paired ring.
    pub fn y(&self, i: usize) -> usize {
        let n = self.pairs.expect("paired ring");
        debug_assert!(i < n);
        n + i
    }

    /// For a paired ring: `Some(i)` when `v` is `x_i`.
    pub fn x_index(&self, v: usize) -> Option<usize> {
        self.pairs.filter(|&n| v < n).map(|_| v)
    }

    /// For a paired ring: `Some(i)` when `v` is `y_i`.
    pub fn y_index(&self, v: usize) -> Option<usize> {
        self.pairs.filter(|&n| v >= n && v < 2 * n).map(|n| v - n)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    /// `x1*x2^2*y3`; the constant monomial prints as `1`.
    pub fn format(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| {
                if e == 1 {
                    self.names[v].clone()
                } else {
                    format!("{}^{}", self.names[v], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Inverse of [`Ring::format`].
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let mut m = Monomial::one(self.nvars());
        let text = text.trim();
        if text == "1" {
            return Ok(m);
        }
        for factor in text.split('*').map(str::trim) {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim().parse::<u16>().map_err(|_| Error::Parse {
                        location: format!("monomial `{text}`"),
                        message: format!("bad exponent in `{factor}`"),
                    })?,
                ),
                None => (factor, 1),
            };
            let v = self.var_index(name).ok_or_else(|| Error::Parse {
                location: format!("monomial `{text}`"),
                message: format!("unknown variable `{name}`"),
            })?;
            m.0[v] += exp;
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Monomial(vec![2, 0, 1]);
        let b = Monomial(vec![1, 1, 0]);
        assert_eq!(a.gcd(&b), Monomial(vec![1, 0, 0]));
        assert_eq!(a.lcm(&b), Monomial(vec![2, 1, 1]));
        assert_eq!(a.colon(&b), Monomial(vec![1, 0, 1]));
        assert_eq!(b.colon(&a), Monomial(vec![0, 1, 0]));
        assert_eq!(b.colon(&a).as_variable(), Some(1));
        assert!(Monomial(vec![1, 0, 0]).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(a.mul(&b).unwrap(), Monomial(vec![3, 1, 1]));
        assert_eq!(a.degree(), 3);
    }

    #[test]
    fn overflow_guard() {
        let big = Monomial(vec![1 << 14]);
        assert!(big.mul(&big).is_ok());
        let bigger = Monomial(vec![(1 << 15) - 1]);
        assert_eq!(bigger.mul(&Monomial(vec![2])), Err(Error::Overflow { cap: EXPONENT_CAP }));
    }

    #[test]
    fn formatting_round_trip() {
        let ring = Ring::paired(3);
        let m = Monomial(vec![1, 0, 2, 0, 1, 0]);
        let s = ring.format(&m);
        assert_eq!(s, "x1*x3^2*y2");
        assert_eq!(ring.parse_monomial(&s).unwrap(), m);
        assert_eq!(ring.format(&Monomial::one(6)), "1");
        assert!(ring.parse_monomial("x9").is_err());
    }
}
