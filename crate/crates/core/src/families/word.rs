use std::fmt;
use std::str::FromStr;

use super::FamilyError;

/// One boundary edge of a `C_{n,k}^t` member: a flipped wedge (`Long`,
/// spanning `π/n`) or a single radial subtile (`Short`, spanning `π/(nk)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Edge {
    Long,
    Short,
}

impl Edge {
    pub fn letter(self) -> char {
        match self {
            Edge::Long => 'L',
            Edge::Short => 'S',
        }
    }
}

/// A cyclic word over `{L, S}` read counterclockwise along the disk
/// boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeWord(Vec<Edge>);

impl EdgeWord {
    pub fn new(edges: Vec<Edge>) -> Self {
        EdgeWord(edges)
    }

    /// The word with no flips: `2nk` short edges.
    pub fn all_short(n: u32, k: u32) -> Self {
        EdgeWord(vec![Edge::Short; (2 * n * k) as usize])
    }

    pub fn edges(&self) -> &[Edge] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn long_count(&self) -> usize {
        self.0.iter().filter(|e| **e == Edge::Long).count()
    }

    pub fn short_count(&self) -> usize {
        self.0.len() - self.long_count()
    }

    /// Checks `#L·k + #S = 2nk`, which also bounds `#L ≤ 2n`.
    pub fn validate(&self, n: u32, k: u32) -> Result<(), FamilyError> {
        let slots = self.long_count() * k as usize + self.short_count();
        let total = 2 * n as usize * k as usize;
        if slots != total {
            return Err(FamilyError::WordInvalid(format!(
                "{self} covers {slots} of {total} slots for n={n}, k={k}"
            )));
        }
        Ok(())
    }

    /// Least rotation in the order `L < S`.
    pub fn canonical(&self) -> EdgeWord {
        let n = self.0.len();
        let best = (0..n)
            .map(|s| (0..n).map(|i| self.0[(i + s) % n]).collect::<Vec<_>>())
            .min()
            .unwrap_or_default();
        EdgeWord(best)
    }

    pub fn cyclically_equal(&self, other: &EdgeWord) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }

    pub fn reversed(&self) -> EdgeWord {
        EdgeWord(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for EdgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|e| write!(f, "{}", e.letter()))
    }
}

impl FromStr for EdgeWord {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c.to_ascii_uppercase() {
                'L' => Ok(Edge::Long),
                'S' => Ok(Edge::Short),
                other => Err(FamilyError::WordInvalid(format!("unexpected letter {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(EdgeWord)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let w: EdgeWord = "LSSLSSSSSS".parse().unwrap();
        assert_eq!(w.to_string(), "LSSLSSSSSS");
        assert_eq!(w.long_count(), 2);
        assert!(w.validate(3, 2).is_ok());
        assert!("LSX".parse::<EdgeWord>().is_err());
    }

    #[test]
    fn slot_count_is_checked() {
        assert!("LLLLLLL".parse::<EdgeWord>().unwrap().validate(3, 2).is_err());
        assert!("SSSSSSSSSSS".parse::<EdgeWord>().unwrap().validate(3, 2).is_err());
        assert!(EdgeWord::all_short(3, 2).validate(3, 2).is_ok());
    }

    #[test]
    fn rotation_classes() {
        let a: EdgeWord = "SLSS".parse().unwrap();
        let b: EdgeWord = "SSSL".parse().unwrap();
        assert!(a.cyclically_equal(&b));
        assert_eq!(a.canonical().to_string(), "LSSS");
        assert!(!a.cyclically_equal(&"SSSS".parse().unwrap()));
    }
}
