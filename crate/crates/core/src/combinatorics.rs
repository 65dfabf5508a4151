//! Stirling numbers, set partitions and factorial helpers.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Largest `n` accepted by [`enumerate_set_partitions`]; Bell(10) = 115975.
pub const MAX_PARTITION_N: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("n = {n} exceeds the enumeration limit {limit}")]
    TooLarge { n: usize, limit: usize },
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `x (x-1) … (x-n+1)`.
pub fn falling_factorial(x: i64, n: usize) -> BigInt {
    let x = BigInt::from(x);
    (0..n).fold(BigInt::one(), |acc, i| acc * (&x - i))
}

/// `x (x+1) … (x+n-1)`.
pub fn rising_factorial(x: i64, n: usize) -> BigInt {
    let x = BigInt::from(x);
    (0..n).fold(BigInt::one(), |acc, i| acc * (&x + i))
}

/// Lower-triangular tables of Stirling numbers up to `max_n`.
///
/// `first_kind` holds the signed numbers `s(n, k)`, the coefficients of the
/// falling factorial; as matrices the two kinds are mutually inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingTable {
    max_n: usize,
    second_kind: Vec<Vec<BigInt>>,
    first_kind: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(max_n: usize) -> Self {
        let mut second = vec![vec![BigInt::zero(); max_n + 1]; max_n + 1];
        let mut first = vec![vec![BigInt::zero(); max_n + 1]; max_n + 1];
        second[0][0] = BigInt::one();
        first[0][0] = BigInt::one();
        for n in 1..=max_n {
            for k in 1..=n {
                second[n][k] = &second[n - 1][k] * k + &second[n - 1][k - 1];
                first[n][k] = &first[n - 1][k - 1] - &first[n - 1][k] * (n - 1);
            }
        }
        StirlingTable { max_n, second_kind: second, first_kind: first }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// `S(n, k)`; zero outside the table's triangle.
    pub fn second_kind(&self, n: usize, k: usize) -> BigInt {
        self.lookup(&self.second_kind, n, k)
    }

    /// Signed `s(n, k)`; zero outside the table's triangle.
    pub fn first_kind(&self, n: usize, k: usize) -> BigInt {
        self.lookup(&self.first_kind, n, k)
    }

    fn lookup(&self, table: &[Vec<BigInt>], n: usize, k: usize) -> BigInt {
        assert!(n <= self.max_n, "n = {n} beyond table size {}", self.max_n);
        table[n].get(k).cloned().unwrap_or_default()
    }

    /// `Σ_k S(n, k)`.
    pub fn bell(&self, n: usize) -> BigInt {
        (0..=n).map(|k| self.second_kind(n, k)).sum()
    }
}

pub fn stirling_tables(max_n: usize) -> StirlingTable {
    StirlingTable::new(max_n)
}

/// A set partition of `{1, …, n}`; blocks are sorted and listed by smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Size of the ground set.
    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    fn from_growth_string(rgs: &[usize]) -> Self {
        let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        SetPartition { blocks }
    }
}

/// Every set partition of `{1, …, n}` exactly once, via restricted growth strings.
pub fn enumerate_set_partitions(n: usize) -> Result<Vec<SetPartition>, CombinatoricsError> {
    if n > MAX_PARTITION_N {
        return Err(CombinatoricsError::TooLarge { n, limit: MAX_PARTITION_N });
    }
    let mut out = Vec::new();
    let mut rgs = Vec::with_capacity(n);
    grow(n, &mut rgs, 0, &mut out);
    Ok(out)
}

// rgs[i] <= 1 + max(rgs[..i]); `used` is the number of blocks opened so far.
fn grow(n: usize, rgs: &mut Vec<usize>, used: usize, out: &mut Vec<SetPartition>) {
    if rgs.len() == n {
        out.push(SetPartition::from_growth_string(rgs));
        return;
    }
    for b in 0..=used {
        rgs.push(b);
        grow(n, rgs, used.max(b + 1), out);
        rgs.pop();
    }
}
