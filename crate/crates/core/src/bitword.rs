//! Binary words, reversal, the one-run encoding and necklace periods.
//!
//! A [`BinaryWord`] is printed with index 0 leftmost, so `"1011110"` has
//! ones at indices 0, 2, 3, 4 and 5.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Longest word accepted by the constructors.
pub const MAX_WORD_LEN: usize = 1 << 16;

/// A non-empty word over `{0, 1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    bits: Vec<u8>,
}

impl BinaryWord {
    /// Builds a word from letters that must all be 0 or 1.
    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyWord);
        }
        if bits.len() > MAX_WORD_LEN {
            return Err(Error::TooLong {
                len: bits.len(),
                cap: MAX_WORD_LEN,
            });
        }
        if let Some(index) = bits.iter().position(|&b| b > 1) {
            return Err(Error::InvalidChar {
                index,
                found: char::from(b'0' + bits[index].min(9)),
            });
        }
        Ok(BinaryWord { bits })
    }

    /// Crate-internal constructor for letters already known to be valid.
    pub(crate) fn from_valid(bits: Vec<u8>) -> Self {
        debug_assert!(!bits.is_empty() && bits.iter().all(|&b| b <= 1));
        BinaryWord { bits }
    }

    /// Parses a string of `'0'`/`'1'` characters.
    pub fn parse(text: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(text.len());
        for (index, ch) in text.chars().enumerate() {
            match ch {
                '0' => bits.push(0),
                '1' => bits.push(1),
                found => return Err(Error::InvalidChar { index, found }),
            }
        }
        Self::from_bits(bits)
    }

    /// The word of length `n` whose letter `i` is bit `n - 1 - i` of `index`,
    /// so that increasing indices enumerate `{0,1}^n` lexicographically.
    pub fn from_index(index: u64, n: usize) -> Self {
        assert!((1..=64).contains(&n));
        let bits = (0..n).map(|i| ((index >> (n - 1 - i)) & 1) as u8).collect();
        BinaryWord { bits }
    }

    /// Inverse of [`BinaryWord::from_index`]; only defined for `len() <= 64`.
    pub fn to_index(&self) -> u64 {
        assert!(self.len() <= 64);
        self.bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64)
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::from_bits(vec![0; n])
    }

    pub fn ones(n: usize) -> Result<Self> {
        Self::from_bits(vec![1; n])
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.bits
    }

    /// Letter `i` of the output is letter `n - 1 - i` of the input.
    pub fn reverse(&self) -> BinaryWord {
        let mut bits = self.bits.clone();
        bits.reverse();
        BinaryWord { bits }
    }

    /// Number of ones, written `a(w)`.
    pub fn ones_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    pub fn zeros_count(&self) -> usize {
        self.len() - self.ones_count()
    }

    /// Length of the maximal run of ones at the start of the word.
    pub fn leading_ones(&self) -> usize {
        leading_ones(&self.bits)
    }

    /// Ordinary cyclic shift: letter `i` of the result is letter `i + k` of
    /// the input, indices modulo the length.
    pub fn rotate_left(&self, k: usize) -> BinaryWord {
        let mut bits = self.bits.clone();
        let k = k % bits.len();
        bits.rotate_left(k);
        BinaryWord { bits }
    }

    /// Sum of the first `j` letters.
    pub fn prefix_sum(&self, j: usize) -> usize {
        self.bits[..j].iter().map(|&b| b as usize).sum()
    }

    /// Sum of the last `j` letters.
    pub fn suffix_sum(&self, j: usize) -> usize {
        self.bits[self.len() - j..]
            .iter()
            .map(|&b| b as usize)
            .sum()
    }

    pub fn one_run_encoding(&self) -> Composition {
        one_run_encoding(&self.bits)
    }

    /// The word `1^{a_0} 0 1^{a_1} 0 ... 0 1^{a_k}`.
    ///
    /// Fails only for the composition `(0)`, whose word would be empty.
    pub fn from_one_run_encoding(c: &Composition) -> Result<BinaryWord> {
        Self::from_bits(from_one_run_encoding(c.parts()))
    }

    pub fn necklace_period(&self) -> usize {
        necklace_period(&self.bits)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// A finite sequence of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl From<Vec<usize>> for Composition {
    fn from(parts: Vec<usize>) -> Self {
        Composition(parts)
    }
}

/// Parts are concatenated when they are all single digits (`140`), and
/// comma-separated otherwise (`1,13,0`).
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().all(|&p| p < 10) {
            ""
        } else {
            ","
        };
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

pub(crate) fn leading_ones(bits: &[u8]) -> usize {
    bits.iter().take_while(|&&b| b == 1).count()
}

pub(crate) fn one_run_encoding(bits: &[u8]) -> Composition {
    let mut parts = Vec::with_capacity(bits.len() + 1);
    let mut run = 0;
    for &b in bits {
        if b == 1 {
            run += 1;
        } else {
            parts.push(run);
            run = 0;
        }
    }
    parts.push(run);
    Composition(parts)
}

pub(crate) fn from_one_run_encoding(parts: &[usize]) -> Vec<u8> {
    let len = parts.iter().sum::<usize>() + parts.len().saturating_sub(1);
    let mut bits = Vec::with_capacity(len);
    for (i, &a) in parts.iter().enumerate() {
        if i > 0 {
            bits.push(0);
        }
        bits.extend(std::iter::repeat_n(1, a));
    }
    bits
}

/// Smallest `s >= 1` such that rotating `w` left by `s` gives `w` back.
///
/// The result always divides `w.len()`. Returns 0 for an empty slice.
pub fn necklace_period<T: Eq>(w: &[T]) -> usize {
    let n = w.len();
    if n == 0 {
        return 0;
    }
    // Prefix function: the smallest period p of the word; the cyclic
    // period is p when p divides n, otherwise n.
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && w[i] != w[k] {
            k = fail[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let p = n - fail[n - 1];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        BinaryWord::parse(s).unwrap()
    }

    fn naive_period<T: Eq + Clone>(v: &[T]) -> usize {
        (1..=v.len())
            .find(|&s| {
                let mut r = v.to_vec();
                r.rotate_left(s);
                r == v
            })
            .unwrap()
    }

    #[test]
    fn parse_examples() {
        let x = w("1011110");
        assert_eq!(x.len(), 7);
        let ones: Vec<usize> = (0..7).filter(|&i| x.bit(i) == 1).collect();
        assert_eq!(ones, vec![0, 2, 3, 4, 5]);
        assert_eq!(w("0").len(), 1);
        assert_eq!(
            BinaryWord::parse("1021"),
            Err(Error::InvalidChar {
                index: 2,
                found: '2'
            })
        );
        assert_eq!(BinaryWord::parse(""), Err(Error::EmptyWord));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(w("1011110").reverse(), w("0111101"));
        assert_eq!(w("00100101").reverse(), w("10100100"));
        assert_eq!(w("1").reverse(), w("1"));
    }

    #[test]
    fn ones_count_examples() {
        assert_eq!(w("1011110").ones_count(), 5);
        assert_eq!(w("0000000").ones_count(), 0);
        assert_eq!(w("1111111").ones_count(), 7);
    }

    #[test]
    fn one_run_encoding_examples() {
        assert_eq!(w("1011110").one_run_encoding().parts(), &[1, 4, 0]);
        assert_eq!(w("0111101").one_run_encoding().parts(), &[0, 4, 1]);
        assert_eq!(w("1111111").one_run_encoding().parts(), &[7]);
        assert_eq!(w("1011110").one_run_encoding().to_string(), "140");
    }

    #[test]
    fn from_one_run_encoding_examples() {
        let dec = |p: Vec<usize>| BinaryWord::from_one_run_encoding(&Composition::new(p));
        assert_eq!(dec(vec![1, 4, 0]).unwrap(), w("1011110"));
        assert_eq!(dec(vec![0, 0, 0]).unwrap(), w("00"));
        assert_eq!(dec(vec![7]).unwrap(), w("1111111"));
        assert_eq!(dec(vec![0]), Err(Error::EmptyWord));
    }

    #[test]
    fn necklace_period_examples() {
        assert_eq!(necklace_period(w("110").bits()), 3);
        assert_eq!(necklace_period(w("0000").bits()), 1);
        assert_eq!(necklace_period(w("1010").bits()), 2);
        assert_eq!(necklace_period(&[2usize, 1, 2, 1]), 2);
        assert_eq!(necklace_period(&[1usize, 1, 0, 1, 1, 0]), 3);
    }

    #[test]
    fn ore_roundtrip_and_counts_exhaustive() {
        for n in 1..=12 {
            for idx in 0..(1u64 << n) {
                let x = BinaryWord::from_index(idx, n);
                let c = x.one_run_encoding();
                assert_eq!(BinaryWord::from_one_run_encoding(&c).unwrap(), x);
                assert_eq!(c.len() - 1, n - x.ones_count());
                assert_eq!(c.total(), x.ones_count());
                let p = x.necklace_period();
                assert_eq!(n % p, 0);
                assert_eq!(p, naive_period(x.bits()));
                assert_eq!(x.reverse().reverse(), x);
                assert_eq!(x.to_index(), idx);
            }
        }
    }

    #[test]
    fn index_order_is_lexicographic() {
        let words: Vec<BinaryWord> = (0..16).map(|i| BinaryWord::from_index(i, 4)).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert_eq!(words[5].to_string(), "0101");
    }

    #[test]
    fn composition_display() {
        assert_eq!(Composition::new(vec![1, 13, 0]).to_string(), "1,13,0");
        assert_eq!(Composition::new(vec![1, 4, 1]).to_string(), "141");
    }
}
