//! Word-packed bitsets with the shift-or update used by subset-sum sweeps.

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bitset {
    len: usize,
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Bitset {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Resize to `len` bits and clear everything, keeping the allocation.
    pub fn reset(&mut self, len: usize) {
        self.len = len;
        self.words.clear();
        self.words.resize(len.div_ceil(WORD_BITS), 0);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for bitset of {} bits", self.len);
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        if i < self.len {
            self.words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
        }
    }

    pub fn none(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and_assign(&mut self, other: &Bitset) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn or_assign(&mut self, other: &Bitset) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    /// True if `self & other` has a set bit.
    pub fn intersects(&self, other: &Bitset) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + tz)
            })
        })
    }

    /// `self |= self << shift`, looking only at bits below `reach`.
    ///
    /// Bits at or above `reach` must be zero on entry; afterwards the set
    /// bits lie below `reach + shift` (truncated to `len`).
    pub fn shift_or(&mut self, shift: usize, reach: usize) {
        let top = self.top_word(reach + shift);
        let (ws, bs) = (shift / WORD_BITS, shift % WORD_BITS);
        let w = &mut self.words;
        for i in (ws..top).rev() {
            let incoming = shifted_word(w, i - ws, bs);
            w[i] |= incoming;
        }
        self.mask_tail();
    }

    /// Two-track update for a cycle of negative sign:
    /// `plus' = plus | minus << shift` and `minus' = minus | plus << shift`.
    pub fn cross_shift_or(plus: &mut Bitset, minus: &mut Bitset, shift: usize, reach: usize) {
        debug_assert_eq!(plus.len, minus.len);
        let top = plus.top_word(reach + shift);
        let (ws, bs) = (shift / WORD_BITS, shift % WORD_BITS);
        // Descending order reads only words that have not been written yet.
        for i in (ws..top).rev() {
            let from_minus = shifted_word(&minus.words, i - ws, bs);
            let from_plus = shifted_word(&plus.words, i - ws, bs);
            plus.words[i] |= from_minus;
            minus.words[i] |= from_plus;
        }
        plus.mask_tail();
        minus.mask_tail();
    }

    fn top_word(&self, bits: usize) -> usize {
        bits.min(self.len).div_ceil(WORD_BITS).min(self.words.len())
    }

    fn mask_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

/// Word `src` of the bitset shifted up by `bs` bits, pulling in the
/// high bits of word `src - 1`.
#[inline]
fn shifted_word(words: &[u64], src: usize, bs: usize) -> u64 {
    if bs == 0 {
        words[src]
    } else {
        let lo = if src > 0 { words[src - 1] >> (WORD_BITS - bs) } else { 0 };
        (words[src] << bs) | lo
    }
}

impl std::fmt::Debug for Bitset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter_ones()).finish()
    }
}
