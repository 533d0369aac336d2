use std::fmt;

use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};

/// A permutation of `{1, ..., r}` in one-line notation `[p(1), ..., p(r)]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let r = one_line.len();
        let mut seen = vec![false; r + 1];
        for &v in &one_line {
            if v == 0 || v > r || seen[v] {
                return Err(Error::InvalidArgument(format!(
                    "{one_line:?} is not a permutation of 1..={r}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(r: usize) -> Self {
        Permutation {
            one_line: (1..=r).collect(),
        }
    }

    /// The transposition exchanging `i` and `j` (1-based) in `S_r`.
    pub fn transposition(r: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(r);
        p.one_line.swap(i - 1, j - 1);
        p
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn degree(&self) -> usize {
        self.one_line.len()
    }

    /// `p(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    /// The composition `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            one_line: other.one_line.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn fixed_points(&self) -> usize {
        self.one_line
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v == i + 1)
            .count()
    }

    /// Cycle lengths, including fixed points as 1-cycles.
    pub fn cycle_type(&self) -> Vec<usize> {
        let r = self.degree();
        let mut seen = vec![false; r + 1];
        let mut lengths = Vec::new();
        for start in 1..=r {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// All permutations of `{1..r}` in lexicographic order of one-line form.
    pub fn all(r: usize) -> Vec<Permutation> {
        let mut current: Vec<usize> = (1..=r).collect();
        let mut out = vec![Permutation {
            one_line: current.clone(),
        }];
        while next_permutation(&mut current) {
            out.push(Permutation {
                one_line: current.clone(),
            });
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.one_line.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line
    }
}

/// The standard element `s_λ = c_1 c_2 ... c_r` where `c_j` is the cycle
/// `(l_{j-1}+1 ... l_j)` on consecutive integers.
pub fn standard_element(lambda: &Partition) -> Permutation {
    let sums = lambda.partial_sums();
    let mut one_line = Vec::with_capacity(lambda.size());
    for w in sums.windows(2) {
        let (start, end) = (w[0] + 1, w[1]);
        for i in start..end {
            one_line.push(i + 1);
        }
        one_line.push(start);
    }
    Permutation { one_line }
}
