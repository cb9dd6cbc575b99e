use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A node of the infinite binary tree, i.e. a finite word over `{0, 1}`.
///
/// Letters are packed into a `u128`, so words are limited to
/// [`Address::MAX_LEN`] letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Address {
    len: u8,
    bits: u128,
}

impl Address {
    pub const MAX_LEN: usize = 128;

    pub const ROOT: Address = Address { len: 0, bits: 0 };

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_root(&self) -> bool {
        self.len == 0
    }

    /// Letter-packed representation; letter `i` is bit `len - 1 - i`.
    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn child(&self, letter: u8) -> Result<Address> {
        debug_assert!(letter < 2);
        if self.len() >= Self::MAX_LEN {
            return Err(Error::AddressOverflow(Self::MAX_LEN));
        }
        Ok(Address {
            len: self.len + 1,
            bits: (self.bits << 1) | letter as u128,
        })
    }

    pub fn letter(&self, i: usize) -> u8 {
        assert!(i < self.len());
        ((self.bits >> (self.len() - 1 - i)) & 1) as u8
    }

    /// Number of `1` letters: the number of chords separating the fragment
    /// from circle point 0.
    pub fn ones(&self) -> u32 {
        self.bits.count_ones()
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_root() {
            return f.write_str("root");
        }
        for i in 0..self.len() {
            f.write_str(if self.letter(i) == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl FromStr for Address {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "root" {
            return Ok(Address::ROOT);
        }
        s.bytes().try_fold(Address::ROOT, |addr, b| match b {
            b'0' => addr.child(0),
            b'1' => addr.child(1),
            _ => Err(Error::InvalidArgument(format!("bad address {s:?}"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trip() {
        let a = Address::ROOT.child(0).unwrap().child(1).unwrap().child(1).unwrap();
        assert_eq!(a.to_string(), "011");
        assert_eq!("011".parse::<Address>().unwrap(), a);
        assert_eq!("root".parse::<Address>().unwrap(), Address::ROOT);
        assert_eq!(a.ones(), 2);
        assert_ne!(Address::ROOT.child(0).unwrap(), Address::ROOT.child(0).unwrap().child(0).unwrap());
    }

    #[test]
    fn overflow() {
        let mut a = Address::ROOT;
        for _ in 0..Address::MAX_LEN {
            a = a.child(1).unwrap();
        }
        assert!(matches!(a.child(0), Err(Error::AddressOverflow(_))));
    }
}
