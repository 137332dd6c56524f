//! Finite posets stored as a dense relation matrix plus their cover edges.

use crate::error::{Error, Result};
use rayon::prelude::*;
use std::collections::{HashSet, VecDeque};
use std::fmt::Display;
use std::hash::Hash;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset<T> {
    elements: Vec<T>,
    // row-major, leq[a * n + b] is true iff a <= b
    leq: Vec<bool>,
    covers: Vec<(usize, usize)>,
}

impl<T> Poset<T> {
    /// Builds the poset whose order is `le(i, j)` on element indices. The
    /// comparison grid is evaluated in parallel; `le` must be a partial order.
    pub fn from_fn<F>(elements: Vec<T>, le: F) -> Self
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        let n = elements.len();
        let leq: Vec<bool> = (0..n * n)
            .into_par_iter()
            .map(|k| {
                let (a, b) = (k / n, k % n);
                a == b || le(a, b)
            })
            .collect();
        let covers = transitive_reduction(&leq, n);
        Poset {
            elements,
            leq,
            covers,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le(a, b)
    }

    /// Cover edges `(lower, upper)` sorted by `(lower, upper)`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Checks reflexivity, antisymmetry and transitivity of the stored relation.
    pub fn is_partial_order(&self) -> bool {
        let n = self.len();
        for a in 0..n {
            if !self.le(a, a) {
                return false;
            }
            for b in 0..n {
                if a != b && self.le(a, b) && self.le(b, a) {
                    return false;
                }
                if !self.le(a, b) {
                    continue;
                }
                for c in 0..n {
                    if self.le(b, c) && !self.le(a, c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Indices of minimal and maximal elements.
    pub fn extremal_indices(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.len();
        let minimal = (0..n)
            .filter(|&a| !(0..n).any(|b| self.lt(b, a)))
            .collect();
        let maximal = (0..n)
            .filter(|&a| !(0..n).any(|b| self.lt(a, b)))
            .collect();
        (minimal, maximal)
    }

    /// True when the index set is closed upwards.
    pub fn is_upper_set(&self, members: &[usize]) -> bool {
        let inside: HashSet<usize> = members.iter().copied().collect();
        members
            .iter()
            .all(|&a| (0..self.len()).all(|b| !self.le(a, b) || inside.contains(&b)))
    }

    /// Rank function of a graded poset: every minimal element has rank 0,
    /// every cover raises rank by one, and all maximal elements share a rank.
    /// Returns `None` when no such function exists, i.e. when maximal chains
    /// have different lengths.
    pub fn rank_function(&self) -> Option<Vec<usize>> {
        let n = self.len();
        if n == 0 {
            return Some(Vec::new());
        }
        let (minimal, maximal) = self.extremal_indices();
        let mut up = vec![Vec::new(); n];
        for &(a, b) in &self.covers {
            up[a].push(b);
        }
        let mut rank: Vec<Option<usize>> = vec![None; n];
        let mut queue = VecDeque::new();
        for &m in &minimal {
            rank[m] = Some(0);
            queue.push_back(m);
        }
        while let Some(a) = queue.pop_front() {
            let r = rank[a]? + 1;
            for &b in &up[a] {
                match rank[b] {
                    None => {
                        rank[b] = Some(r);
                        queue.push_back(b);
                    }
                    Some(existing) if existing != r => return None,
                    Some(_) => {}
                }
            }
        }
        let rank: Vec<usize> = rank.into_iter().collect::<Option<_>>()?;
        let top = rank[maximal[0]];
        maximal.iter().all(|&m| rank[m] == top).then_some(rank)
    }

    /// Induced subposet on the given indices, in the given order.
    pub fn restrict(&self, indices: &[usize]) -> Poset<T>
    where
        T: Clone + Sync,
    {
        let elements = indices.iter().map(|&i| self.elements[i].clone()).collect();
        Poset::from_fn(elements, |a, b| self.le(indices[a], indices[b]))
    }
}

impl<T: Eq + Hash> Poset<T> {
    pub fn index_of(&self, element: &T) -> Option<usize> {
        self.elements.iter().position(|e| e == element)
    }
}

impl<T: Eq + Hash + Display> Poset<T> {
    /// Whether `set` is an upper order ideal: `x` in the set and `x <= y`
    /// imply `y` in the set.
    pub fn is_upper_order_ideal(&self, set: &[T]) -> Result<bool> {
        let indices = set
            .iter()
            .map(|x| {
                self.index_of(x)
                    .ok_or_else(|| Error::UnknownElement(x.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.is_upper_set(&indices))
    }
}

impl<T: Display> Poset<T> {
    /// `{"elements": [...], "covers": [[i, j], ...]}` with elements rendered by
    /// `Display`.
    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: self.elements.iter().map(|e| e.to_string()).collect(),
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub covers: Vec<[usize; 2]>,
}

/// Drops `(a, c)` whenever some `b` sits strictly between; O(n³).
fn transitive_reduction(leq: &[bool], n: usize) -> Vec<(usize, usize)> {
    let lt = |a: usize, b: usize| a != b && leq[a * n + b];
    let mut covers = Vec::new();
    for a in 0..n {
        for c in 0..n {
            if lt(a, c) && !(0..n).any(|b| lt(a, b) && lt(b, c)) {
                covers.push((a, c));
            }
        }
    }
    covers
}
