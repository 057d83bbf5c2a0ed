//! Staircases: interval families indexing the simplices of the staircase
//! triangulation of a product of two simplices.
//!
//! A staircase assigns to each position j in 0..=n an interval
//! I_j = [b(j), e(j)] in 0..=m so that consecutive intervals chain together:
//! b(0) = 0, b(j+1) = e(j), e(n) = m. Only the end array e is stored, so a
//! staircase is exactly a weakly increasing function from 0..=n to 0..=m
//! hitting m at the top.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::binomial;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Staircase {
    n: usize,
    m: usize,
    e: Vec<usize>,
}

impl Staircase {
    pub fn new(n: usize, m: usize, e: Vec<usize>) -> Result<Self> {
        if e.len() != n + 1 {
            return Err(Error::InvalidStaircase(format!(
                "need {} interval ends, got {}",
                n + 1,
                e.len()
            )));
        }
        if e[n] != m {
            return Err(Error::InvalidStaircase(format!(
                "last interval must end at {m}, ends at {}",
                e[n]
            )));
        }
        for j in 0..n {
            if e[j] > e[j + 1] {
                return Err(Error::InvalidStaircase(format!(
                    "interval ends decrease at position {j}"
                )));
            }
        }
        if e.iter().any(|&x| x > m) {
            return Err(Error::InvalidStaircase("interval end exceeds m".into()));
        }
        Ok(Staircase { n, m, e })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Start of the j-th interval: 0 at the bottom, then the previous end.
    pub fn begin(&self, j: usize) -> usize {
        if j == 0 {
            0
        } else {
            self.e[j - 1]
        }
    }

    pub fn end(&self, j: usize) -> usize {
        self.e[j]
    }

    pub fn ends(&self) -> &[usize] {
        &self.e
    }

    pub fn interval(&self, j: usize) -> std::ops::RangeInclusive<usize> {
        self.begin(j)..=self.end(j)
    }

    pub fn interval_len(&self, j: usize) -> usize {
        self.end(j) - self.begin(j) + 1
    }

    /// Number of vertices of the simplex this staircase spans: n+m+1.
    pub fn vertex_count(&self) -> usize {
        self.n + self.m + 1
    }

    /// The reverse staircase, read backwards through both factors.
    pub fn reversed(&self) -> Staircase {
        let e = (0..=self.n).map(|j| self.m - self.begin(self.n - j)).collect();
        Staircase::new(self.n, self.m, e).expect("reversal preserves validity")
    }

    /// The transposed staircase in the factor-swapped family: position i of
    /// the transpose collects the positions j whose interval contains i.
    pub fn transpose(&self) -> Staircase {
        let mut e = vec![0usize; self.m + 1];
        for (i, slot) in e.iter_mut().enumerate() {
            // largest j with begin(j) <= i; intervals chain, so this is the
            // last j with e[j-1] <= i
            let mut best = 0;
            for j in 0..=self.n {
                if self.begin(j) <= i {
                    best = j;
                }
            }
            *slot = best;
        }
        Staircase::new(self.m, self.n, e).expect("transpose preserves validity")
    }

    /// Whether position i belongs to the j-th interval.
    pub fn interval_contains(&self, j: usize, i: usize) -> bool {
        self.begin(j) <= i && i <= self.end(j)
    }
}

impl std::fmt::Display for Staircase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for j in 0..=self.n {
            if j > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}..{}", self.begin(j), self.end(j))?;
        }
        write!(f, "]")
    }
}

/// All staircases for the (n, m) product in lexicographic order of their end
/// arrays.
pub fn enumerate_staircases(n: usize, m: usize) -> Result<Vec<Staircase>> {
    let expected = staircase_count(n, m)?;
    let as_usize = usize::try_from(expected).map_err(|_| Error::Overflow)?;
    let mut out = Vec::with_capacity(as_usize);
    let mut e = vec![0usize; n + 1];
    e[n] = m;
    loop {
        out.push(Staircase::new(n, m, e.clone()).expect("enumeration stays valid"));
        // advance the rightmost free position that can still grow
        let mut j = n;
        loop {
            if j == 0 {
                return Ok(out);
            }
            j -= 1;
            let cap = e[j + 1];
            if e[j] < cap {
                e[j] += 1;
                for t in (j + 1)..n {
                    e[t] = e[j];
                }
                break;
            }
        }
        // reset of positions above j already done; e[n] stays m
    }
}

/// How many staircases (n, m) has: binom(n+m, n).
pub fn staircase_count(n: usize, m: usize) -> Result<i64> {
    binomial((n + m) as u64, n as u64)
}

/// Package a weakly increasing function 0..=n -> 0..=m with f(n) = m as a
/// staircase; the identity in the other direction is `Staircase::ends`.
pub fn staircase_from_function(n: usize, m: usize, f: &[usize]) -> Result<Staircase> {
    Staircase::new(n, m, f.to_vec())
}
