//! Fixed-width bit vectors spanning several machine words.
//!
//! A [`BitVec`] has a width chosen at construction. Words are stored least
//! significant first and the bits at positions `>= width` in the top word are
//! always zero. Only the operations needed by the automaton simulations are
//! provided: shift left by one, conjunction, disjunction and bit tests.

use std::fmt;

use crate::error::{Error, Result};

/// Bits per storage word.
pub const WORD_BITS: usize = u64::BITS as usize;

/// Initial contents for [`BitVec::new`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fill {
    Zeros,
    Ones,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    width: usize,
    words: Box<[u64]>,
}

/// Number of words needed to hold `width` bits.
#[inline]
pub fn words_for(width: usize) -> usize {
    width.div_ceil(WORD_BITS)
}

/// Mask of the valid bits in the top word of a vector of `width` bits.
#[inline]
fn top_mask(width: usize) -> u64 {
    match width % WORD_BITS {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

impl BitVec {
    pub fn new(width: usize, fill: Fill) -> Result<BitVec> {
        if width == 0 {
            return Err(Error::ZeroWidth);
        }
        let n = words_for(width);
        let mut words = vec![0u64; n].into_boxed_slice();
        if fill == Fill::Ones {
            words.fill(u64::MAX);
            words[n - 1] = top_mask(width);
        }
        Ok(BitVec { width, words })
    }

    /// All-zeros vector. Panics if `width == 0`.
    pub fn zeros(width: usize) -> BitVec {
        BitVec::new(width, Fill::Zeros).expect("bit vector width must be at least 1")
    }

    /// All-ones vector. Panics if `width == 0`.
    pub fn ones(width: usize) -> BitVec {
        BitVec::new(width, Fill::Ones).expect("bit vector width must be at least 1")
    }

    /// Builds a vector with the given bit positions set.
    pub fn from_bits<I: IntoIterator<Item = usize>>(width: usize, bits: I) -> Result<BitVec> {
        let mut v = BitVec::new(width, Fill::Zeros)?;
        for i in bits {
            v.set(i);
        }
        Ok(v)
    }

    /// Builds a vector from raw words, least significant first. Missing words
    /// are zero, extra words and bits past `width` are dropped.
    pub fn from_words(width: usize, words: &[u64]) -> Result<BitVec> {
        let mut v = BitVec::new(width, Fill::Zeros)?;
        for (dst, src) in v.words.iter_mut().zip(words) {
            *dst = *src;
        }
        v.mask_top();
        Ok(v)
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Shifts every bit up by one position, dropping bit `width - 1`, and
    /// sets bit 0 iff `inject_low`.
    #[must_use]
    pub fn shl1(&self, inject_low: bool) -> BitVec {
        let mut v = self.clone();
        v.shl1_assign(inject_low);
        v
    }

    #[inline]
    pub fn shl1_assign(&mut self, inject_low: bool) {
        let mut carry = inject_low as u64;
        for w in self.words.iter_mut() {
            let next = *w >> (WORD_BITS - 1);
            *w = (*w << 1) | carry;
            carry = next;
        }
        self.mask_top();
    }

    #[must_use]
    pub fn and(&self, other: &BitVec) -> BitVec {
        let mut v = self.clone();
        v.and_assign(other);
        v
    }

    #[inline]
    pub fn and_assign(&mut self, other: &BitVec) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= *b;
        }
    }

    #[must_use]
    pub fn or(&self, other: &BitVec) -> BitVec {
        let mut v = self.clone();
        v.or_assign(other);
        v
    }

    #[inline]
    pub fn or_assign(&mut self, other: &BitVec) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
    }

    /// Returns a copy with bit `i` set.
    #[must_use]
    pub fn set_bit(&self, i: usize) -> BitVec {
        let mut v = self.clone();
        v.set(i);
        v
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.check_index(i);
        self.words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
    }

    #[inline]
    pub fn test_bit(&self, i: usize) -> bool {
        self.check_index(i);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    /// Tests bit `width - 1`.
    #[inline]
    pub fn test_high(&self) -> bool {
        self.test_bit(self.width - 1)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Set bit positions in ascending order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD_BITS + b)
            })
        })
    }

    #[inline]
    fn mask_top(&mut self) {
        let last = self.words.len() - 1;
        self.words[last] &= top_mask(self.width);
    }

    #[inline]
    fn check_width(&self, other: &BitVec) {
        assert_eq!(self.width, other.width, "bit vector width mismatch");
    }

    #[inline]
    fn check_index(&self, i: usize) {
        assert!(i < self.width, "bit index {i} out of range for width {}", self.width);
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec<{}>", self.width)?;
        f.debug_set().entries(self.iter_ones()).finish()
    }
}

/// Configuration register used by the search loops.
///
/// Implemented by [`BitVec`] for any width and by [`OneWord`] for widths up
/// to [`WORD_BITS`]. Both must behave identically; the matchers pick
/// `OneWord` whenever a configuration fits in one word.
pub(crate) trait Register: Clone {
    fn filled(width: usize, fill: Fill) -> Self;
    fn shl1_assign(&mut self, inject_low: bool);
    fn and_row(&mut self, row: &BitVec);
    fn high(&self) -> bool;
    fn zero(&self) -> bool;
    fn to_bitvec(&self) -> BitVec;
}

impl Register for BitVec {
    fn filled(width: usize, fill: Fill) -> Self {
        BitVec::new(width, fill).expect("register width must be at least 1")
    }

    #[inline]
    fn shl1_assign(&mut self, inject_low: bool) {
        BitVec::shl1_assign(self, inject_low)
    }

    #[inline]
    fn and_row(&mut self, row: &BitVec) {
        self.and_assign(row)
    }

    #[inline]
    fn high(&self) -> bool {
        self.test_high()
    }

    #[inline]
    fn zero(&self) -> bool {
        self.is_zero()
    }

    fn to_bitvec(&self) -> BitVec {
        self.clone()
    }
}

/// Single-word register for widths `1..=64`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct OneWord {
    bits: u64,
    mask: u64,
    high: u64,
    width: usize,
}

impl Register for OneWord {
    fn filled(width: usize, fill: Fill) -> Self {
        assert!((1..=WORD_BITS).contains(&width), "OneWord width {width} out of range");
        let mask = top_mask(width);
        let bits = match fill {
            Fill::Zeros => 0,
            Fill::Ones => mask,
        };
        OneWord { bits, mask, high: 1u64 << (width - 1), width }
    }

    #[inline]
    fn shl1_assign(&mut self, inject_low: bool) {
        self.bits = ((self.bits << 1) | inject_low as u64) & self.mask;
    }

    #[inline]
    fn and_row(&mut self, row: &BitVec) {
        debug_assert_eq!(row.width, self.width);
        self.bits &= row.words[0];
    }

    #[inline]
    fn high(&self) -> bool {
        self.bits & self.high != 0
    }

    #[inline]
    fn zero(&self) -> bool {
        self.bits == 0
    }

    fn to_bitvec(&self) -> BitVec {
        let mut v = BitVec::zeros(self.width);
        v.words[0] = self.bits;
        v
    }
}
