//! Weak compositions, strong compositions and partitions.
//!
//! All three are immutable value types compared componentwise, length
//! included: `(2,3)` and `(2,3,0)` are different indices. The text form used
//! across the crate is a comma separated list of decimal parts (`"0,0,3,2"`);
//! the empty composition is the empty string.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of nonnegative integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition(Vec<usize>);

/// A finite sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StrongComposition(Vec<usize>);

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (idx, part) in parts.iter().enumerate() {
        if idx > 0 {
            f.write_str(",")?;
        }
        write!(f, "{part}")?;
    }
    Ok(())
}

fn parse_parts(input: &str) -> Result<Vec<usize>> {
    let text = input.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .enumerate()
        .map(|(idx, field)| {
            if field.is_empty() {
                return Err(Error::Parse {
                    input: input.to_string(),
                    reason: format!("empty part at position {}", idx + 1),
                });
            }
            if !field.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse {
                    input: input.to_string(),
                    reason: format!("part {field:?} is not a nonnegative decimal integer"),
                });
            }
            field.parse::<usize>().map_err(|err| Error::Parse {
                input: input.to_string(),
                reason: err.to_string(),
            })
        })
        .collect()
}

macro_rules! composition_common {
    ($ty:ident) => {
        impl $ty {
            pub fn parts(&self) -> &[usize] {
                &self.0
            }

            pub fn into_parts(self) -> Vec<usize> {
                self.0
            }

            pub fn sum(&self) -> usize {
                self.0.iter().sum()
            }

            /// Parenthesized form, `(0,0,3,2)`.
            pub fn parenthesized(&self) -> String {
                format!("({self})")
            }
        }

        impl Deref for $ty {
            type Target = [usize];

            fn deref(&self) -> &[usize] {
                &self.0
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_parts(f, &self.0)
            }
        }

        impl From<$ty> for Vec<usize> {
            fn from(value: $ty) -> Vec<usize> {
                value.0
            }
        }
    };
}

composition_common!(WeakComposition);
composition_common!(StrongComposition);
composition_common!(Partition);

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Self {
        WeakComposition(parts)
    }

    pub fn zeros(len: usize) -> Self {
        WeakComposition(vec![0; len])
    }

    /// `flat(a)`: the nonzero parts in order.
    pub fn flatten(&self) -> StrongComposition {
        StrongComposition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    /// `sort(a)`: the nonzero parts rearranged into a partition.
    pub fn sort_to_partition(&self) -> Partition {
        let mut parts: Vec<usize> = self.0.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Partition(parts)
    }

    /// `sort₀(a)`: the parts of `sort(a)` written back into the nonzero
    /// positions of `a`, zeros left in place.
    pub fn sort0(&self) -> WeakComposition {
        let mut sorted = self.sort_to_partition().0.into_iter();
        let parts = self
            .0
            .iter()
            .map(|&p| if p == 0 { 0 } else { sorted.next().unwrap() })
            .collect();
        WeakComposition(parts)
    }

    /// Prefix-sum dominance `self ≥ other`.
    pub fn dominates(&self, other: &WeakComposition) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(dominates_parts(&self.0, &other.0))
    }

    /// `0^m × a`.
    pub fn with_leading_zeros(&self, m: usize) -> WeakComposition {
        let mut parts = vec![0; m];
        parts.extend_from_slice(&self.0);
        WeakComposition(parts)
    }

    pub fn leading_zeros(&self) -> usize {
        self.0.iter().take_while(|&&p| p == 0).count()
    }

    pub fn nonzero_count(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    /// The composition with trailing zeros removed. Trailing zeros index
    /// variables that never occur, so most predicates only see this part.
    pub fn trimmed(&self) -> &[usize] {
        let end = self.0.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        &self.0[..end]
    }

    pub fn is_strong(&self) -> bool {
        self.0.iter().all(|&p| p > 0)
    }

    /// Every weak composition of length `len` with parts in `0..=max_part`,
    /// in lexicographic order.
    pub fn all(len: usize, max_part: usize) -> impl Iterator<Item = WeakComposition> {
        let mut next = Some(vec![0; len]);
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut succ = current.clone();
            let mut pos = len;
            while pos > 0 {
                pos -= 1;
                if succ[pos] < max_part {
                    succ[pos] += 1;
                    next = Some(succ);
                    break;
                }
                succ[pos] = 0;
            }
            Some(WeakComposition(current))
        })
    }
}

pub(crate) fn dominates_parts(b: &[usize], a: &[usize]) -> bool {
    let (mut sb, mut sa) = (0usize, 0usize);
    b.iter().zip(a).all(|(&x, &y)| {
        sb += x;
        sa += y;
        sb >= sa
    })
}

impl From<Vec<usize>> for WeakComposition {
    fn from(parts: Vec<usize>) -> Self {
        WeakComposition(parts)
    }
}

impl From<&[usize]> for WeakComposition {
    fn from(parts: &[usize]) -> Self {
        WeakComposition(parts.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for WeakComposition {
    fn from(parts: [usize; N]) -> Self {
        WeakComposition(parts.to_vec())
    }
}

impl From<StrongComposition> for WeakComposition {
    fn from(alpha: StrongComposition) -> Self {
        WeakComposition(alpha.0)
    }
}

impl From<Partition> for WeakComposition {
    fn from(lambda: Partition) -> Self {
        WeakComposition(lambda.0)
    }
}

impl FromStr for WeakComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_parts(s).map(WeakComposition)
    }
}

impl StrongComposition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NotStrong(WeakComposition(parts).to_string()));
        }
        Ok(StrongComposition(parts))
    }

    pub fn as_weak(&self) -> WeakComposition {
        WeakComposition(self.0.clone())
    }

    /// Greedy prefix-sum scan: `self` refines `coarser` when consecutive
    /// blocks of `self` sum to the parts of `coarser`, in order.
    pub fn refines(&self, coarser: &StrongComposition) -> bool {
        let mut target = coarser.0.iter();
        let mut acc = 0;
        let mut current = match target.next() {
            Some(&p) => p,
            None => return self.0.is_empty(),
        };
        for &part in &self.0 {
            acc += part;
            if acc == current {
                acc = 0;
                current = match target.next() {
                    Some(&p) => p,
                    None => usize::MAX,
                };
            } else if acc > current {
                return false;
            }
        }
        acc == 0 && current == usize::MAX
    }

    /// Pairs `(i, j)`, 1-based with `i < j`, such that `α_i < α_j`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.0[i] < self.0[j] {
                    pairs.push((i + 1, j + 1));
                }
            }
        }
        pairs
    }

    pub fn inversion_count(&self) -> usize {
        let mut count = 0;
        for i in 0..self.len() {
            count += self.0[i + 1..].iter().filter(|&&x| self.0[i] < x).count();
        }
        count
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn sort_to_partition(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Partition(parts)
    }

    /// All strong compositions of `n`, in lexicographic order.
    pub fn all_of_sum(n: usize) -> Vec<StrongComposition> {
        fn rec(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<StrongComposition>) {
            if rest == 0 {
                out.push(StrongComposition(prefix.clone()));
                return;
            }
            for first in 1..=rest {
                prefix.push(first);
                rec(rest - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for StrongComposition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        StrongComposition::new(parts)
    }
}

impl TryFrom<WeakComposition> for StrongComposition {
    type Error = Error;

    fn try_from(a: WeakComposition) -> Result<Self> {
        StrongComposition::new(a.0)
    }
}

impl FromStr for StrongComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrongComposition::new(parse_parts(s)?)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NotStrong(WeakComposition(parts).to_string()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(WeakComposition(parts).to_string()));
        }
        Ok(Partition(parts))
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|col| self.0.iter().take_while(|&&p| p >= col).count())
            .collect();
        Partition(parts)
    }

    pub fn as_strong(&self) -> StrongComposition {
        StrongComposition(self.0.clone())
    }

    /// All partitions of `n`, in reverse lexicographic order starting at `(n)`.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for first in (1..=rest.min(max)).rev() {
                prefix.push(first);
                rec(rest - first, first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}
