use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::generator::{Generator, Parity};

pub(crate) type Word = SmallVec<[u16; 8]>;

/// A word over the generator symbols; the empty word is the identity.
///
/// Words with theta-degree two or more do not exist as monomials: every
/// constructor that could produce one returns `None`, and callers map that
/// to the zero polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    word: Word,
}

impl Monomial {
    pub fn identity() -> Self {
        Monomial { word: Word::new() }
    }

    pub fn generator(g: Generator) -> Self {
        let mut word = Word::new();
        word.push(g.code());
        Monomial { word }
    }

    /// Builds the word `letters[0] letters[1] …`, or `None` if it would
    /// contain two odd letters.
    pub fn new(letters: &[Generator]) -> Option<Self> {
        let odd = letters.iter().filter(|g| g.parity() == Parity::Odd).count();
        if odd >= 2 {
            return None;
        }
        Some(Monomial {
            word: letters.iter().map(|g| g.code()).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Number of odd letters; zero or one for any stored monomial.
    pub fn theta_degree(&self) -> usize {
        self.word.iter().filter(|&&c| c & 0x8000 == 0).count()
    }

    pub fn parity(&self) -> Parity {
        if self.theta_degree() == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Generator> + '_ {
        self.word.iter().map(|&c| Generator::from_code(c))
    }

    /// Concatenation; `None` when the product has theta-degree two.
    pub fn concat(&self, other: &Self) -> Option<Self> {
        if self.theta_degree() + other.theta_degree() >= 2 {
            return None;
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Some(Monomial { word })
    }

    /// Appends a single letter; `None` when that creates a second odd letter.
    pub fn append(&self, g: Generator) -> Option<Self> {
        if g.parity() == Parity::Odd && self.theta_degree() >= 1 {
            return None;
        }
        let mut word = self.word.clone();
        word.push(g.code());
        Some(Monomial { word })
    }

    /// The reversed word. Reversal preserves degree and theta-degree.
    pub fn reversed(&self) -> Self {
        let mut word = self.word.clone();
        word.reverse();
        Monomial { word }
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.word.len();
        (0..n / 2).all(|i| self.word[i] == self.word[n - 1 - i])
    }

    /// The smaller of the word and its reversal; canonical representative of
    /// the reversal orbit.
    pub fn orbit_representative(&self) -> Self {
        let rev = self.reversed();
        if rev < *self {
            rev
        } else {
            self.clone()
        }
    }

    pub(crate) fn codes(&self) -> &[u16] {
        &self.word
    }

    /// Rebuilds a monomial from letter codes known to have theta-degree at
    /// most one.
    pub(crate) fn from_codes_unchecked(word: Word) -> Self {
        let m = Monomial { word };
        debug_assert!(m.theta_degree() <= 1);
        m
    }
}

impl Ord for Monomial {
    /// Degree-lexicographic: by length first, then letter-by-letter in the
    /// generator order (odd symbols below even symbols).
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        for g in self.letters() {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        Ok(())
    }
}
