use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

/// A self-inverse permutation of `{1, ..., n}`, stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Involution {
    images: Vec<usize>,
}

impl Involution {
    /// Validates one-line notation (1-based images).
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let ok = images.iter().all(|&v| (1..=n).contains(&v))
            && images.iter().enumerate().all(|(i, &v)| images[v - 1] == i + 1);
        if !ok {
            return Err(Error::NotAnInvolution(images));
        }
        Ok(Involution { images })
    }

    pub fn identity(n: usize) -> Self {
        Involution {
            images: (1..=n).collect(),
        }
    }

    /// Product of disjoint transpositions `(a b)`, 1-based.
    pub fn from_transpositions(n: usize, transpositions: &[(usize, usize)]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        for &(a, b) in transpositions {
            if a == 0 || b == 0 || a > n || b > n || images[a - 1] != a || images[b - 1] != b {
                return Err(Error::NotAnInvolution(images));
            }
            images[a - 1] = b;
            images[b - 1] = a;
        }
        Ok(Involution { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// The 2-cycles `(i, σ(i))` with `i < σ(i)`, in increasing order of `i`.
    pub fn two_cycles(&self) -> Vec<(usize, usize)> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i + 1 < v)
            .map(|(i, &v)| (i + 1, v))
            .collect()
    }

    /// Permutation matrix with a 1 at row `i`, column `σ(i)`. Symmetric for involutions.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        let n = self.len();
        let mut m = vec![vec![0u8; n]; n];
        for (i, &v) in self.images.iter().enumerate() {
            m[i][v - 1] = 1;
        }
        m
    }

    /// Concatenated one-line notation, e.g. `145236`. Images above 9 are
    /// separated by spaces.
    pub fn one_line(&self) -> String {
        if self.len() < 10 {
            self.images.iter().map(|v| v.to_string()).collect()
        } else {
            let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
            parts.join(" ")
        }
    }
}

/// Cycle notation; the identity prints as `()`.
impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.two_cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for (a, b) in cycles {
            write!(f, "({a} {b})")?;
        }
        Ok(())
    }
}
