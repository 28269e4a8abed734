use std::fmt;

/// A basis blade of a Clifford algebra, stored as a bitmask over generator
/// indices. Bit i set means generator i participates; the blade is always
/// understood in canonical ascending index order, so `e013` is bits 0, 1, 3.
///
/// With at most 16 generators a `u16` covers every admissible algebra.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Blade(u16);

impl Blade {
    /// The empty blade, i.e. the scalar unit.
    pub const SCALAR: Blade = Blade(0);

    pub fn from_mask(mask: u16) -> Blade {
        Blade(mask)
    }

    /// Builds a blade from generator indices, which must be strictly
    /// ascending. Returns `None` on a repeated or descending index so the
    /// caller can report the malformed input precisely.
    pub fn from_indices(indices: &[usize]) -> Option<Blade> {
        let mut mask = 0u16;
        let mut last: Option<usize> = None;
        for &i in indices {
            if i >= 16 {
                return None;
            }
            if let Some(prev) = last {
                if i <= prev {
                    return None;
                }
            }
            mask |= 1 << i;
            last = Some(i);
        }
        Some(Blade(mask))
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, index: usize) -> bool {
        index < 16 && self.0 & (1 << index) != 0
    }

    /// Generator indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..16).filter(move |i| mask & (1 << i) != 0)
    }
}

// Indices 10..16 print as hex digits a..f so every admissible algebra keeps a
// bit-exact text round trip; the plain decimal form covers all dims <= 10.
pub(crate) fn index_char(i: usize) -> char {
    char::from_digit(i as u32, 16).expect("generator index below 16")
}

pub(crate) fn char_index(c: char) -> Option<usize> {
    c.to_digit(16).map(|d| d as usize)
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        write!(f, "e")?;
        for i in self.indices() {
            write!(f, "{}", index_char(i))?;
        }
        Ok(())
    }
}
