//! Mixed-radix codings of permutations.
//!
//! Two codings share the label space `a_2 a_3 … a_n` with `0 <= a_i <= i-1`:
//!
//! * the **left-smaller-count** coding, where `a_i` counts the symbols
//!   smaller than `i` appearing to the left of `i` in the one-line word;
//! * the **rule-R** coding, built by scanning positions `n` down to `2`,
//!   recording the symbol at position `k` minus one and then exchanging
//!   that symbol with `k`.
//!
//! Both are bijections between `S_n` and the label space. The same label
//! space doubles as the vertex set of the mixed-radix grid and of the
//! generalized hypercube.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A mixed-radix word `a_2 … a_n` with `0 <= a_i <= i-1`.
///
/// `digits()[j]` holds `a_{j+2}`; the label for dimension `n` has `n-1`
/// digits.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedRadixLabel {
    digits: Vec<u8>,
}

impl MixedRadixLabel {
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        for (j, &d) in digits.iter().enumerate() {
            let coord = j + 2;
            if d as usize > coord - 1 {
                return Err(Error::DigitOutOfRange {
                    coord,
                    digit: d,
                    max: (coord - 1) as u8,
                });
            }
        }
        Ok(Self { digits })
    }

    pub fn zero(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(n, "labels need n >= 2"));
        }
        Ok(Self {
            digits: vec![0; n - 1],
        })
    }

    /// Dimension `n` of the underlying permutation space.
    pub fn n(&self) -> usize {
        self.digits.len() + 1
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Digit `a_i`, indexed by symbol value `2 <= i <= n`.
    pub fn digit(&self, i: usize) -> u8 {
        self.digits[i - 2]
    }

    /// Copy with digit `a_i` replaced by `v`.
    pub fn with_digit(&self, i: usize, v: u8) -> Result<Self> {
        let mut digits = self.digits.clone();
        digits[i - 2] = v;
        Self::new(digits)
    }

    /// Indices `i` (by symbol value) where the two labels differ.
    pub fn differing_coords(&self, other: &Self) -> Vec<usize> {
        self.digits
            .iter()
            .zip(other.digits.iter())
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(j, _)| j + 2)
            .collect()
    }
}

impl fmt::Display for MixedRadixLabel {
    /// Digits concatenated for `n <= 10` (every digit is then `<= 9`),
    /// comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 10 {
            for &d in &self.digits {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for MixedRadixLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MixedRadixLabel({self})")
    }
}

impl FromStr for MixedRadixLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty label text".into()));
        }
        let digits: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::Parse(format!("bad digit {part:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Self::new(digits)
    }
}

/// Left-smaller-count coding: `a_i` is the number of symbols less than `i`
/// located to the left of `i` in the one-line word.
pub fn left_count_encode(p: &Permutation) -> Result<MixedRadixLabel> {
    let n = p.n();
    if n < 2 {
        return Err(Error::InvalidDimension(n, "coding needs n >= 2"));
    }
    let mut digits = Vec::with_capacity(n - 1);
    for i in 2..=n as u8 {
        let pos = p.position_of(i);
        let count = p.word()[..pos - 1].iter().filter(|&&s| s < i).count();
        digits.push(count as u8);
    }
    MixedRadixLabel::new(digits)
}

/// Inverse of [`left_count_encode`]: inserts symbols `2..n` in increasing
/// order so that symbol `i` has exactly `a_i` (necessarily smaller)
/// symbols before it.
pub fn left_count_decode(r: &MixedRadixLabel) -> Result<Permutation> {
    let n = r.n();
    let mut word: Vec<u8> = Vec::with_capacity(n);
    word.push(1);
    for i in 2..=n {
        word.insert(r.digit(i) as usize, i as u8);
    }
    Permutation::from_word(word)
}

/// Rule-R coding: for `k = n` down to `2`, record `a_k = x_k - 1` on a
/// working copy, then exchange symbols `x_k` and `k` within it.
pub fn rule_r_encode(p: &Permutation) -> Result<MixedRadixLabel> {
    let n = p.n();
    if n < 2 {
        return Err(Error::InvalidDimension(n, "coding needs n >= 2"));
    }
    let mut word: Vec<u8> = p.word().to_vec();
    // pos[s-1] = 0-based position of symbol s
    let mut pos = vec![0usize; n];
    for (i, &s) in word.iter().enumerate() {
        pos[s as usize - 1] = i;
    }
    let mut digits = vec![0u8; n - 1];
    for k in (2..=n).rev() {
        let s = word[k - 1];
        digits[k - 2] = s - 1;
        if s as usize != k {
            let j = pos[k - 1];
            word[k - 1] = k as u8;
            word[j] = s;
            pos[s as usize - 1] = j;
            pos[k - 1] = k - 1;
        }
    }
    MixedRadixLabel::new(digits)
}

/// Inverse of [`rule_r_encode`]: each forward step is an involution on
/// symbol values, so running the exchanges in reverse loop order from the
/// identity inverts the whole map.
pub fn rule_r_decode(r: &MixedRadixLabel) -> Result<Permutation> {
    let n = r.n();
    let mut word: Vec<u8> = (1..=n as u8).collect();
    let mut pos: Vec<usize> = (0..n).collect();
    for k in 2..=n {
        let s = r.digit(k) + 1;
        if s as usize != k {
            let i1 = pos[s as usize - 1];
            let i2 = pos[k - 1];
            word.swap(i1, i2);
            pos[s as usize - 1] = i2;
            pos[k - 1] = i1;
        }
    }
    Permutation::from_word(word)
}

/// Decomposition of two words differing in at most three positions, with
/// the differing symbols forming a single cycle: `X = AxByCzD` and
/// `Y = AzBxCyD`, or the two-position transposition degenerate form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diff3 {
    positions: Vec<usize>,
    symbols_x: Vec<u8>,
    symbols_y: Vec<u8>,
    n: usize,
}

impl Diff3 {
    /// Strictly increasing 1-based positions (length 2 or 3).
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn symbols_x(&self) -> &[u8] {
        &self.symbols_x
    }

    pub fn symbols_y(&self) -> &[u8] {
        &self.symbols_y
    }

    /// True for the two-position transposition form.
    pub fn is_degenerate(&self) -> bool {
        self.positions.len() == 2
    }

    /// For the 3-position case: true when the x-side plays the `AxByCzD`
    /// role, i.e. contents shift cyclically right (`y[p1]=x[p3]`,
    /// `y[p2]=x[p1]`, `y[p3]=x[p2]`).
    pub fn x_is_forward(&self) -> bool {
        if self.is_degenerate() {
            return true;
        }
        self.symbols_y[0] == self.symbols_x[2]
            && self.symbols_y[1] == self.symbols_x[0]
            && self.symbols_y[2] == self.symbols_x[1]
    }

    /// The fixed segments `A, B, C, D` as 1-based inclusive position
    /// ranges (empty ranges have `start > end`).
    pub fn segments(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.positions.len() + 1);
        let mut lo = 1;
        for &p in &self.positions {
            out.push((lo, p - 1));
            lo = p + 1;
        }
        out.push((lo, self.n));
        out
    }

    /// Rebuilds `y` from `x`, checking that `x` matches the recorded
    /// symbols at the listed positions.
    pub fn apply_to(&self, x: &Permutation) -> Result<Permutation> {
        if x.n() != self.n {
            return Err(Error::DimensionMismatch(x.n(), self.n));
        }
        let mut word = x.word().to_vec();
        for (idx, &p) in self.positions.iter().enumerate() {
            if word[p - 1] != self.symbols_x[idx] {
                return Err(Error::MalformedDocument(format!(
                    "word does not match decomposition at position {p}"
                )));
            }
            word[p - 1] = self.symbols_y[idx];
        }
        Permutation::from_word(word)
    }
}

/// Decomposes a pair of equal-length permutations differing in at most
/// three positions. For valid permutation pairs the symbols at the
/// differing positions always form a single cycle (a transposition for
/// two positions, a 3-cycle for three), either orientation.
pub fn diff3_decompose(x: &Permutation, y: &Permutation) -> Result<Diff3> {
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch(x.n(), y.n()));
    }
    let positions: Vec<usize> = (1..=x.n())
        .filter(|&p| x.symbol_at(p) != y.symbol_at(p))
        .collect();
    match positions.len() {
        0 => Err(Error::NotUnitDifference(0)),
        2 | 3 => {
            let symbols_x: Vec<u8> = positions.iter().map(|&p| x.symbol_at(p)).collect();
            let symbols_y: Vec<u8> = positions.iter().map(|&p| y.symbol_at(p)).collect();
            Ok(Diff3 {
                positions,
                symbols_x,
                symbols_y,
                n: x.n(),
            })
        }
        k => Err(Error::NotUnitDifference(k)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::factorial;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn lab(s: &str) -> MixedRadixLabel {
        s.parse().unwrap()
    }

    #[test]
    fn left_count_worked_examples() {
        assert_eq!(left_count_encode(&p("12345")).unwrap(), lab("1234"));
        assert_eq!(left_count_encode(&p("54321")).unwrap(), lab("0000"));
        assert_eq!(left_count_encode(&p("42153")).unwrap(), lab("0203"));
        assert_eq!(left_count_decode(&lab("1234")).unwrap(), p("12345"));
        assert_eq!(left_count_decode(&lab("0000")).unwrap(), p("54321"));
        assert_eq!(left_count_decode(&lab("0203")).unwrap(), p("42153"));
    }

    #[test]
    fn rule_r_worked_examples() {
        assert_eq!(rule_r_encode(&p("27351864")).unwrap(), lab("0200353"));
        assert_eq!(rule_r_decode(&lab("0200353")).unwrap(), p("27351864"));
        // Identity is fixed at every step, so a_k = k - 1 throughout.
        assert_eq!(
            rule_r_encode(&Permutation::identity(8).unwrap()).unwrap(),
            lab("1234567")
        );
        assert_eq!(
            rule_r_decode(&lab("1234567")).unwrap(),
            Permutation::identity(8).unwrap()
        );
        // Hand trace of the reversal 321.
        assert_eq!(rule_r_encode(&p("321")).unwrap(), lab("10"));
    }

    #[test]
    fn rule_r_bijective_n4() {
        let mut images = std::collections::HashSet::new();
        for a2 in 0..2u8 {
            for a3 in 0..3u8 {
                for a4 in 0..4u8 {
                    let label = MixedRadixLabel::new(vec![a2, a3, a4]).unwrap();
                    let q = rule_r_decode(&label).unwrap();
                    assert_eq!(rule_r_encode(&q).unwrap(), label);
                    images.insert(q);
                }
            }
        }
        assert_eq!(images.len(), 24);
    }

    #[test]
    fn codings_roundtrip_exhaustive_small() {
        for n in 2..=5 {
            for r in 0..factorial(n) {
                let q = Permutation::from_lex_rank(n, r).unwrap();
                assert_eq!(
                    left_count_decode(&left_count_encode(&q).unwrap()).unwrap(),
                    q
                );
                assert_eq!(rule_r_decode(&rule_r_encode(&q).unwrap()).unwrap(), q);
            }
        }
    }

    #[test]
    fn label_range_validation() {
        assert!(MixedRadixLabel::new(vec![2, 0, 0]).is_err());
        assert!(MixedRadixLabel::new(vec![1, 3, 0]).is_err());
        assert!(MixedRadixLabel::new(vec![1, 2, 3]).is_ok());
        assert!("04".parse::<MixedRadixLabel>().is_err());
    }

    #[test]
    fn label_text_forms() {
        assert_eq!(lab("0200353").to_string(), "0200353");
        assert_eq!(
            "0,2,0,0,3,5,3".parse::<MixedRadixLabel>().unwrap(),
            lab("0200353")
        );
        let wide = MixedRadixLabel::new((0..11).map(|j| j as u8).collect()).unwrap();
        assert_eq!(wide.n(), 12);
        assert!(wide.to_string().contains(','));
        assert_eq!(wide.to_string().parse::<MixedRadixLabel>().unwrap(), wide);
    }

    #[test]
    fn diff3_transposition() {
        let d = diff3_decompose(&p("12345"), &p("14325")).unwrap();
        assert_eq!(d.positions(), &[2, 4]);
        assert_eq!(d.symbols_x(), &[2, 4]);
        assert_eq!(d.symbols_y(), &[4, 2]);
        assert!(d.is_degenerate());
        assert_eq!(d.apply_to(&p("12345")).unwrap(), p("14325"));
    }

    #[test]
    fn diff3_three_positions() {
        // Constructed AxByCzD / AzBxCyD instance at positions {2,4,6}.
        let x = p("1234567");
        let y = p("1632547");
        let d = diff3_decompose(&x, &y).unwrap();
        assert_eq!(d.positions(), &[2, 4, 6]);
        assert!(d.x_is_forward());
        assert_eq!(d.apply_to(&x).unwrap(), y);
        assert_eq!(d.segments(), vec![(1, 1), (3, 3), (5, 5), (7, 7)]);

        // Another three-position cycle, at {2,5,6}.
        let y2 = p("1634257");
        let d2 = diff3_decompose(&x, &y2).unwrap();
        assert_eq!(d2.positions(), &[2, 5, 6]);
        assert_eq!(d2.apply_to(&x).unwrap(), y2);
    }

    #[test]
    fn diff3_rejects_wide_difference() {
        assert!(matches!(
            diff3_decompose(&p("1234"), &p("4321")),
            Err(Error::NotUnitDifference(4))
        ));
        assert!(diff3_decompose(&p("1234"), &p("1234")).is_err());
    }

    #[test]
    fn unit_rule_r_difference_spans_at_most_three_positions() {
        // Checkable form of the three-position difference property at n = 5.
        let n = 5;
        for r in 0..factorial(n) {
            let x = Permutation::from_lex_rank(n, r).unwrap();
            let rep = rule_r_encode(&x).unwrap();
            for i in 2..=n {
                for v in 0..i as u8 {
                    if v == rep.digit(i) {
                        continue;
                    }
                    let other = rep.with_digit(i, v).unwrap();
                    let y = rule_r_decode(&other).unwrap();
                    let d = diff3_decompose(&x, &y).unwrap();
                    assert!(d.positions().len() <= 3);
                    assert_eq!(d.apply_to(&x).unwrap(), y);
                }
            }
        }
    }

    #[test]
    fn unit_left_count_difference_is_block_swap() {
        // A unit change of digit a_i swaps i with the nearest smaller
        // symbol on its left, across a block of larger symbols.
        for n in 2..=5 {
            for r in 0..factorial(n) {
                let x = Permutation::from_lex_rank(n, r).unwrap();
                let rep = left_count_encode(&x).unwrap();
                for i in 2..=n {
                    let a = rep.digit(i);
                    if a == 0 {
                        continue;
                    }
                    let y = left_count_decode(&rep.with_digit(i, a - 1).unwrap()).unwrap();
                    let diff: Vec<usize> = (1..=n)
                        .filter(|&q| x.symbol_at(q) != y.symbol_at(q))
                        .collect();
                    assert_eq!(diff.len(), 2, "n={n} x={x} i={i}");
                    let (p1, p2) = (diff[0], diff[1]);
                    assert_eq!(x.symbol_at(p2), i as u8);
                    assert!(x.symbol_at(p1) < i as u8);
                    assert_eq!(y.symbol_at(p1), i as u8);
                    assert_eq!(y.symbol_at(p2), x.symbol_at(p1));
                    for q in p1 + 1..p2 {
                        assert!(x.symbol_at(q) > i as u8, "block between must exceed {i}");
                    }
                }
            }
        }
    }

    fn label_strategy(max_n: usize) -> impl Strategy<Value = MixedRadixLabel> {
        (2..=max_n).prop_flat_map(|n| {
            let parts: Vec<_> = (2..=n).map(|i| 0..=(i - 1) as u8).collect();
            parts.prop_map(|digits| MixedRadixLabel::new(digits).unwrap())
        })
    }

    proptest! {
        #[test]
        fn encode_decode_surjective(label in label_strategy(9)) {
            prop_assert_eq!(left_count_encode(&left_count_decode(&label).unwrap()).unwrap(), label.clone());
            prop_assert_eq!(rule_r_encode(&rule_r_decode(&label).unwrap()).unwrap(), label);
        }
    }
}
