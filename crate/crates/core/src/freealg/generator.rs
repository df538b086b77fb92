use std::fmt;

use super::monomial::Monomial;

/// Z2-parity of a generator or of a monomial (its theta-degree mod 2).
///
/// `Odd` sorts before `Even`: the generator ordering puts every odd symbol
/// below every even symbol.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Parity {
    Odd,
    Even,
}

/// A generator symbol of the free algebra: `x<k>` (even) or `t<k>` (odd).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Generator {
    parity: Parity,
    index: u16,
}

impl Generator {
    /// Largest admissible index; indices are packed into 15 bits.
    pub const MAX_INDEX: u16 = 0x7fff;

    pub fn new(parity: Parity, index: u16) -> Self {
        assert!(
            (1..=Self::MAX_INDEX).contains(&index),
            "generator index must be in 1..={}",
            Self::MAX_INDEX
        );
        Generator { parity, index }
    }

    pub fn even(index: u16) -> Self {
        Generator::new(Parity::Even, index)
    }

    pub fn odd(index: u16) -> Self {
        Generator::new(Parity::Odd, index)
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn index(&self) -> u16 {
        self.index
    }

    /// Packed representation; numeric order equals the generator order
    /// (all odd symbols first, then all even symbols, by index within kind).
    pub(crate) fn code(&self) -> u16 {
        match self.parity {
            Parity::Odd => self.index,
            Parity::Even => 0x8000 | self.index,
        }
    }

    pub(crate) fn from_code(code: u16) -> Self {
        if code & 0x8000 != 0 {
            Generator {
                parity: Parity::Even,
                index: code & 0x7fff,
            }
        } else {
            Generator {
                parity: Parity::Odd,
                index: code,
            }
        }
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.code().cmp(&other.code())
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parity {
            Parity::Even => write!(f, "x{}", self.index),
            Parity::Odd => write!(f, "t{}", self.index),
        }
    }
}

/// The declared generator universe: `num_even` symbols `x1..` and `num_odd`
/// symbols `t1..`. Parsing and enumeration are bounded by it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Universe {
    num_even: u16,
    num_odd: u16,
}

impl Universe {
    pub fn new(num_even: u16, num_odd: u16) -> Self {
        assert!(num_even <= Generator::MAX_INDEX && num_odd <= Generator::MAX_INDEX);
        Universe { num_even, num_odd }
    }

    pub fn num_even(&self) -> u16 {
        self.num_even
    }

    pub fn num_odd(&self) -> u16 {
        self.num_odd
    }

    pub fn even_generators(&self) -> impl Iterator<Item = Generator> + '_ {
        (1..=self.num_even).map(Generator::even)
    }

    pub fn odd_generators(&self) -> impl Iterator<Item = Generator> + '_ {
        (1..=self.num_odd).map(Generator::odd)
    }

    /// All generators in their canonical order: odd symbols first.
    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.odd_generators().chain(self.even_generators())
    }

    pub fn contains(&self, g: Generator) -> bool {
        match g.parity() {
            Parity::Even => g.index() <= self.num_even,
            Parity::Odd => g.index() <= self.num_odd,
        }
    }

    /// Every monomial of degree at most `max_deg` with theta-degree at most
    /// one, in ascending degree-lexicographic order.
    pub fn monomials_up_to(&self, max_deg: usize) -> Vec<Monomial> {
        let gens: Vec<Generator> = self.generators().collect();
        let mut out = vec![Monomial::identity()];
        let mut level = vec![Monomial::identity()];
        for _ in 1..=max_deg {
            let mut next = Vec::new();
            for m in &level {
                for &g in &gens {
                    if let Some(ext) = m.append(g) {
                        next.push(ext);
                    }
                }
            }
            out.extend(next.iter().cloned());
            level = next;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_precedes_even() {
        assert!(Generator::odd(5) < Generator::even(1));
        assert!(Generator::odd(1) < Generator::odd(2));
        assert!(Generator::even(1) < Generator::even(2));
    }

    #[test]
    fn code_roundtrip() {
        for g in [Generator::odd(1), Generator::even(1), Generator::even(300)] {
            assert_eq!(Generator::from_code(g.code()), g);
        }
    }

    #[test]
    fn display() {
        assert_eq!(Generator::even(2).to_string(), "x2");
        assert_eq!(Generator::odd(1).to_string(), "t1");
    }

    #[test]
    fn monomial_enumeration_counts() {
        // degree <= 2 over 3 even + 2 odd: 1 + 5 + (25 - 4 theta-degree-2 words)
        let u = Universe::new(3, 2);
        let ms = u.monomials_up_to(2);
        assert_eq!(ms.len(), 1 + 5 + 21);
        // ascending deglex, no duplicates
        for w in ms.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn empty_universe() {
        let u = Universe::new(0, 1);
        let ms = u.monomials_up_to(2);
        // identity and t1 only: t1*t1 is killed
        assert_eq!(ms.len(), 2);
    }
}
