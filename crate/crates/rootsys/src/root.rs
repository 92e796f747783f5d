//! Roots as integer vectors in orthonormal `e_i` coordinates.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::RootError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i32>);

pub type RootSet = BTreeSet<Root>;

impl Root {
    pub fn zero(dim: usize) -> Root {
        Root(vec![0; dim])
    }

    /// The basis vector `e_{k+1}` (zero-based `k`).
    pub fn e(dim: usize, k: usize) -> Root {
        let mut v = vec![0; dim];
        v[k] = 1;
        Root(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i32) -> Root {
        Root(self.0.iter().map(|a| a * k).collect())
    }

    pub fn dot(&self, o: &Root) -> i64 {
        self.0.iter().zip(&o.0).map(|(a, b)| *a as i64 * *b as i64).sum()
    }

    /// Parses `e_i` literals such as `e1-e3`, `2e1`, `-e2+e4` in dimension `dim`.
    pub fn parse(s: &str, dim: usize) -> Result<Root, RootError> {
        let err = || RootError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        let mut v = vec![0i32; dim];
        let mut rest = t.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if rest.len() == t.len() => (1, rest),
                _ => return Err(err()),
            };
            let epos = body.find('e').ok_or_else(err)?;
            let coef: i32 = if epos == 0 { 1 } else { body[..epos].parse().map_err(|_| err())? };
            let after = &body[epos + 1..];
            let digits = after.find(|c: char| !c.is_ascii_digit()).unwrap_or(after.len());
            let idx: usize = after[..digits].parse().map_err(|_| err())?;
            if idx == 0 || idx > dim {
                return Err(err());
            }
            v[idx - 1] += sign * coef;
            rest = &after[digits..];
        }
        Ok(Root(v))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}e{}", k + 1)?;
            } else {
                write!(f, "{sign}{mag}e{}", k + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Root {
    type Err = RootError;

    /// Parses with the dimension inferred from the largest index used.
    fn from_str(s: &str) -> Result<Root, RootError> {
        let max = s
            .split(|c: char| !c.is_ascii_digit() && c != 'e')
            .filter_map(|t| t.split('e').nth(1).and_then(|d| d.parse::<usize>().ok()))
            .max()
            .ok_or_else(|| RootError::Parse(s.to_string()))?;
        Root::parse(s, max)
    }
}

/// Formats a root set as a sorted list of literals.
pub fn format_set(set: &RootSet) -> Vec<String> {
    set.iter().map(Root::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        for s in ["e1-e3", "2e1", "e2+e4", "-e1", "-2e3", "e1+e2"] {
            assert_eq!(Root::parse(s, 4).unwrap().to_string(), s);
        }
        assert_eq!(Root::parse("e1-e3", 3).unwrap(), Root(vec![1, 0, -1]));
        assert!(Root::parse("e5", 4).is_err());
        assert!(Root::parse("x1", 4).is_err());
        assert!(Root::parse("e1e2", 4).is_err());
    }
}
