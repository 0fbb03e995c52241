//! Fixed-capacity bitset over vertex indices, used for closed-neighborhood
//! disjointness tests during packing search.

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn new(capacity: usize) -> Self {
        Bits {
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn or_assign(&mut self, other: &Bits) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn disjoint_with(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_across_word_boundary() {
        let mut b = Bits::new(130);
        b.set(0);
        b.set(63);
        b.set(64);
        b.set(129);
        assert!(b.get(0) && b.get(63) && b.get(64) && b.get(129));
        assert!(!b.get(1) && !b.get(128));
    }

    #[test]
    fn disjointness_and_union() {
        let mut a = Bits::new(70);
        let mut b = Bits::new(70);
        a.set(3);
        a.set(65);
        b.set(4);
        assert!(a.disjoint_with(&b));
        b.set(65);
        assert!(!a.disjoint_with(&b));
        a.or_assign(&b);
        assert!(a.get(4) && a.get(65));
    }
}
