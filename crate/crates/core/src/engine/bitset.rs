//! Compact bit sets for length DP tables.
//!
//! A `LengthBits` value records which factorization lengths are achievable
//! for one monoid element. The only nontrivial operation the dynamic
//! programs need is `self |= other << shift`, applied when one more atom
//! (of length weight `shift`) extends every factorization recorded in
//! `other`.

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LengthBits {
    words: Vec<u64>,
}

impl LengthBits {
    pub fn new() -> Self {
        LengthBits { words: Vec::new() }
    }

    pub fn singleton(bit: usize) -> Self {
        let mut b = LengthBits::new();
        b.set(bit);
        b
    }

    fn ensure_words(&mut self, len: usize) {
        if self.words.len() < len {
            self.words.resize(len, 0);
        }
    }

    pub fn set(&mut self, bit: usize) {
        self.ensure_words(bit / 64 + 1);
        self.words[bit / 64] |= 1u64 << (bit % 64);
    }

    pub fn get(&self, bit: usize) -> bool {
        match self.words.get(bit / 64) {
            Some(w) => (w >> (bit % 64)) & 1 == 1,
            None => false,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// In-place union with `other` shifted left by `shift` bits.
    pub fn or_shifted(&mut self, other: &LengthBits, shift: usize) {
        if other.words.is_empty() {
            return;
        }
        let word_shift = shift / 64;
        let bit_shift = shift % 64;
        self.ensure_words(other.words.len() + word_shift + 1);
        if bit_shift == 0 {
            for (i, &w) in other.words.iter().enumerate() {
                self.words[i + word_shift] |= w;
            }
        } else {
            let mut carry = 0u64;
            for (i, &w) in other.words.iter().enumerate() {
                self.words[i + word_shift] |= (w << bit_shift) | carry;
                carry = w >> (64 - bit_shift);
            }
            let last = other.words.len() + word_shift;
            self.words[last] |= carry;
        }
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = Vec::new();
            let mut word = w;
            while word != 0 {
                let b = word.trailing_zeros() as usize;
                bits.push(i * 64 + b);
                word &= word - 1;
            }
            bits
        })
    }

    pub fn min_one(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn max_one(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate().rev() {
            if w != 0 {
                return Some(i * 64 + 63 - w.leading_zeros() as usize);
            }
        }
        None
    }

    /// Approximate heap footprint in bits, for table size budgeting.
    pub fn capacity_bits(&self) -> usize {
        self.words.len() * 64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_roundtrip() {
        let mut b = LengthBits::new();
        b.set(0);
        b.set(63);
        b.set(64);
        b.set(1000);
        assert!(b.get(0) && b.get(63) && b.get(64) && b.get(1000));
        assert!(!b.get(1) && !b.get(999) && !b.get(1001));
        assert_eq!(b.count(), 4);
    }

    #[test]
    fn or_shifted_matches_naive_shift() {
        let mut b = LengthBits::new();
        for bit in [0usize, 5, 63, 64, 127, 130] {
            b.set(bit);
        }
        for shift in [0usize, 1, 63, 64, 65, 100, 129] {
            let mut shifted = LengthBits::new();
            shifted.or_shifted(&b, shift);
            let expect: Vec<usize> = [0usize, 5, 63, 64, 127, 130]
                .iter()
                .map(|&x| x + shift)
                .collect();
            assert_eq!(shifted.iter_ones().collect::<Vec<_>>(), expect, "shift {shift}");
        }
    }

    #[test]
    fn or_shifted_accumulates() {
        let mut acc = LengthBits::singleton(0);
        let one = LengthBits::singleton(0);
        acc.or_shifted(&one, 3);
        acc.or_shifted(&one, 5);
        assert_eq!(acc.iter_ones().collect::<Vec<_>>(), vec![0, 3, 5]);
    }

    #[test]
    fn min_max_ones() {
        let mut b = LengthBits::new();
        assert_eq!(b.min_one(), None);
        assert_eq!(b.max_one(), None);
        b.set(7);
        b.set(200);
        assert_eq!(b.min_one(), Some(7));
        assert_eq!(b.max_one(), Some(200));
    }
}
