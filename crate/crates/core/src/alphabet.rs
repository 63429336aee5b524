//! Dense remapping of raw bytes.
//!
//! Every byte that occurs in a text receives a code in `1..=sigma`, in byte
//! order, so code order agrees with byte order. Code `0` is reserved for the
//! terminal sentinel, which therefore sorts before every real symbol.

/// Code of the terminal sentinel.
pub const SENTINEL: u32 = 0;

/// Order-preserving map from the bytes of a text to dense codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    codes: [u32; 256],
    bytes: Vec<u8>,
}

impl Alphabet {
    /// Builds the alphabet of the bytes occurring in `text`.
    pub fn from_text(text: &[u8]) -> Self {
        let mut seen = [false; 256];
        for &b in text {
            seen[b as usize] = true;
        }
        Self::from_flags(&seen)
    }

    /// Builds an alphabet from an explicit set of bytes (duplicates ignored).
    pub fn from_bytes(bytes: &[u8]) -> Self {
        Self::from_text(bytes)
    }

    fn from_flags(seen: &[bool; 256]) -> Self {
        let mut codes = [SENTINEL; 256];
        let mut bytes = Vec::new();
        for (b, _) in seen.iter().enumerate().filter(|(_, &s)| s) {
            bytes.push(b as u8);
            codes[b] = bytes.len() as u32;
        }
        Alphabet { codes, bytes }
    }

    /// Number of real symbols (the sentinel is not counted).
    pub fn sigma(&self) -> usize {
        self.bytes.len()
    }

    /// Dense code of `b`, or `None` if `b` is not in the alphabet.
    #[inline]
    pub fn code(&self, b: u8) -> Option<u32> {
        match self.codes[b as usize] {
            SENTINEL => None,
            c => Some(c),
        }
    }

    /// Byte for a non-sentinel code.
    pub fn byte(&self, code: u32) -> Option<u8> {
        if code == SENTINEL {
            return None;
        }
        self.bytes.get(code as usize - 1).copied()
    }

    pub fn contains(&self, b: u8) -> bool {
        self.code(b).is_some()
    }

    /// Encodes a pattern; `None` if any byte lies outside the alphabet.
    pub fn encode(&self, pattern: &[u8]) -> Option<Vec<u32>> {
        pattern.iter().map(|&b| self.code(b)).collect()
    }

    /// Encodes a text and appends the sentinel.
    pub(crate) fn encode_with_sentinel(&self, text: &[u8]) -> Vec<u32> {
        let mut out = Vec::with_capacity(text.len() + 1);
        out.extend(text.iter().map(|&b| self.codes[b as usize]));
        out.push(SENTINEL);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_are_dense_and_ordered() {
        let a = Alphabet::from_text(b"abracadabra");
        assert_eq!(a.sigma(), 5);
        assert_eq!(a.code(b'a'), Some(1));
        assert_eq!(a.code(b'r'), Some(5));
        assert_eq!(a.code(b'z'), None);
        assert_eq!(a.byte(3), Some(b'c'));
        assert_eq!(a.byte(SENTINEL), None);
        assert_eq!(a.encode(b"zz"), None);
        assert_eq!(a.encode_with_sentinel(b"ab"), vec![1, 2, SENTINEL]);
    }
}
