//! Permutation arithmetic on one-line words over `{1..n}`.
//!
//! A permutation is stored as its one-line word `x_1 x_2 … x_n` with
//! `p(k) = x_k`. Composition is fixed as `(p·q)(k) = p(q(k))`, so that
//! right-multiplying by a generator word equals applying that generator
//! to the word: `compose(p, g_i) == prefix_reverse(p, i)`. Cayley edges
//! of the pancake and star networks are therefore right multiplications,
//! and left translations are graph automorphisms.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported dimension; keeps `n!` comfortably inside `u64`.
pub const MAX_N: usize = 20;

/// `n!` as `u64`. Panics if `n > MAX_N`.
pub fn factorial(n: usize) -> u64 {
    assert!(n <= MAX_N, "factorial({n}) exceeds u64 range");
    (1..=n as u64).product()
}

/// A permutation of `{1..n}` in one-line notation, 1-indexed positions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    /// The identity `1 2 … n`.
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidDimension(n, "expected 1 <= n <= 20"));
        }
        Ok(Self {
            word: (1..=n as u8).collect(),
        })
    }

    /// Builds a permutation from its one-line word, validating that it is
    /// a bijection on `{1..n}`.
    pub fn from_word(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidDimension(n, "expected 1 <= n <= 20"));
        }
        let mut seen = vec![false; n + 1];
        for &s in &word {
            if s == 0 || s as usize > n {
                return Err(Error::InvalidWord {
                    n,
                    reason: format!("symbol {s} out of range"),
                });
            }
            if seen[s as usize] {
                return Err(Error::InvalidWord {
                    n,
                    reason: format!("symbol {s} repeated"),
                });
            }
            seen[s as usize] = true;
        }
        Ok(Self { word })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// Symbol at 1-based position `pos`.
    pub fn symbol_at(&self, pos: usize) -> u8 {
        self.word[pos - 1]
    }

    /// 1-based position of `sym`.
    pub fn position_of(&self, sym: u8) -> usize {
        self.word
            .iter()
            .position(|&s| s == sym)
            .map(|i| i + 1)
            .expect("symbol not present")
    }

    pub fn last_symbol(&self) -> u8 {
        *self.word.last().expect("nonempty word")
    }

    pub fn is_identity(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(i, &s)| s as usize == i + 1)
    }

    /// Reverses the first `i` symbols (generator `g_i`), `2 <= i <= n`.
    /// Self-inverse.
    pub fn prefix_reverse(&self, i: usize) -> Result<Self> {
        let n = self.n();
        if i < 2 || i > n {
            return Err(Error::GeneratorIndex { index: i, n });
        }
        let mut word = self.word.clone();
        word[..i].reverse();
        Ok(Self { word })
    }

    /// Exchanges the symbols at positions 1 and `i` (star generator),
    /// `2 <= i <= n`. Self-inverse.
    pub fn star_swap(&self, i: usize) -> Result<Self> {
        let n = self.n();
        if i < 2 || i > n {
            return Err(Error::SwapPosition { index: i, n });
        }
        let mut word = self.word.clone();
        word.swap(0, i - 1);
        Ok(Self { word })
    }

    /// Composition under the convention `(p·q)(k) = p(q(k))`.
    pub fn compose(&self, q: &Self) -> Result<Self> {
        if self.n() != q.n() {
            return Err(Error::DimensionMismatch(self.n(), q.n()));
        }
        let word = q.word.iter().map(|&k| self.word[k as usize - 1]).collect();
        Ok(Self { word })
    }

    /// Inverse permutation: `compose(p, p.invert()) == identity`.
    pub fn invert(&self) -> Self {
        let mut word = vec![0u8; self.n()];
        for (i, &s) in self.word.iter().enumerate() {
            word[s as usize - 1] = i as u8 + 1;
        }
        Self { word }
    }

    /// The one-line word of `g_i` on `n` symbols.
    pub fn generator_word(n: usize, i: usize) -> Result<Self> {
        Self::identity(n)?.prefix_reverse(i)
    }

    /// Lexicographic rank of the word among all `n!` permutations of `{1..n}`.
    pub fn lex_rank(&self) -> u64 {
        let n = self.n();
        let mut rank = 0u64;
        for j in 0..n {
            let smaller_after = self.word[j + 1..]
                .iter()
                .filter(|&&s| s < self.word[j])
                .count() as u64;
            rank += smaller_after * factorial(n - 1 - j);
        }
        rank
    }

    /// Inverse of [`lex_rank`](Self::lex_rank).
    pub fn from_lex_rank(n: usize, rank: u64) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidDimension(n, "expected 1 <= n <= 20"));
        }
        if rank >= factorial(n) {
            return Err(Error::GraphParameter(format!(
                "rank {rank} out of range for n={n}"
            )));
        }
        let mut remaining: Vec<u8> = (1..=n as u8).collect();
        let mut word = Vec::with_capacity(n);
        let mut r = rank;
        for j in 0..n {
            let f = factorial(n - 1 - j);
            let idx = (r / f) as usize;
            r %= f;
            word.push(remaining.remove(idx));
        }
        Ok(Self { word })
    }
}

impl fmt::Display for Permutation {
    /// Compact digit string for `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &s in &self.word {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts the comma-separated form always, the contiguous digit form
    /// only for `n <= 9`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty permutation text".into()));
        }
        let word: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::Parse(format!("bad symbol {part:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            if s.len() > 9 {
                return Err(Error::Parse(
                    "contiguous digit form only valid for n <= 9; use commas".into(),
                ));
            }
            s.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d >= 1 => Ok(d as u8),
                    _ => Err(Error::Parse(format!("bad symbol {c:?}"))),
                })
                .collect::<Result<_>>()?
        };
        Self::from_word(word)
    }
}

/// An ordered list of prefix-reversal indices, each `>= 2`.
/// Upper bounds are validated against a concrete dimension when applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSeq {
    indices: Vec<usize>,
}

impl GenSeq {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| !(2..=MAX_N).contains(&i)) {
            return Err(Error::GeneratorIndex {
                index: bad,
                n: MAX_N,
            });
        }
        Ok(Self { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Applies a generator sequence, returning the full trajectory
/// `π_0 = start, π_1, …, π_k` with `π_j = prefix_reverse(π_{j-1}, s[j])`.
pub fn apply_gen_seq(start: &Permutation, seq: &GenSeq) -> Result<Vec<Permutation>> {
    let mut out = Vec::with_capacity(seq.len() + 1);
    out.push(start.clone());
    for &i in seq.indices() {
        let next = out.last().unwrap().prefix_reverse(i)?;
        out.push(next);
    }
    Ok(out)
}

/// The cyclic shift `σ(ℓ,m)`: rotates the first `ℓ` symbols by `m`
/// positions, fixing the rest. `σ(ℓ,0) = σ(ℓ,ℓ) = identity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicShift {
    ell: usize,
    m: usize,
}

impl CyclicShift {
    pub fn new(ell: usize, m: usize) -> Result<Self> {
        if !(1..=MAX_N).contains(&ell) || m > ell {
            return Err(Error::ShiftOutOfRange { ell, m, n: MAX_N });
        }
        Ok(Self { ell, m })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// One-line word of `σ(ℓ,m)` on `n` symbols:
    /// `(ℓ-m+1) … ℓ 1 … (ℓ-m) (ℓ+1) … n`.
    pub fn word(&self, n: usize) -> Result<Permutation> {
        if self.ell > n {
            return Err(Error::ShiftOutOfRange {
                ell: self.ell,
                m: self.m,
                n,
            });
        }
        let (ell, m) = (self.ell, self.m);
        let mut word = Vec::with_capacity(n);
        for j in 1..=m {
            word.push((ell - m + j) as u8);
        }
        for j in m + 1..=ell {
            word.push((j - m) as u8);
        }
        for j in ell + 1..=n {
            word.push(j as u8);
        }
        Permutation::from_word(word)
    }
}
