use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::generator::{Generator, Parity};
use super::monomial::Monomial;
pub use super::rational::Rational;

/// Convenience constructor for small rational constants.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// A sparse noncommutative polynomial: a finite map from monomials to
/// nonzero rational coefficients. The zero polynomial is the empty map, so
/// equality of maps is equality of polynomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FreePoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl FreePoly {
    pub fn zero() -> Self {
        FreePoly::default()
    }

    pub fn one() -> Self {
        FreePoly::monomial(Monomial::identity())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = FreePoly::zero();
        p.add_term(Monomial::identity(), c);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut p = FreePoly::zero();
        p.add_term(m, Rational::one());
        p
    }

    pub fn generator(g: Generator) -> Self {
        FreePoly::monomial(Monomial::generator(g))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = FreePoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms at or above `lo` in the monomial order; all terms when `None`.
    pub fn terms_from(&self, lo: Option<&Monomial>) -> impl Iterator<Item = (&Monomial, &Rational)> {
        use std::ops::Bound;
        let lower = match lo {
            Some(m) => Bound::Included(m),
            None => Bound::Unbounded,
        };
        self.terms.range::<Monomial, _>((lower, Bound::Unbounded))
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Maximum word length among the terms; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms
            .last_key_value()
            .map(|(m, _)| m.degree())
            .unwrap_or(0)
    }

    /// Smallest monomial in degree-lexicographic order, if any.
    pub fn min_monomial(&self) -> Option<&Monomial> {
        self.terms.first_key_value().map(|(m, _)| m)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return FreePoly::zero();
        }
        FreePoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    /// The associative product. Any product monomial of theta-degree two or
    /// more is dropped, which is exactly multiplication in the free
    /// associative Z2-algebra.
    pub fn mul(&self, other: &FreePoly) -> FreePoly {
        if self.is_zero() || other.is_zero() {
            return FreePoly::zero();
        }
        if self.degree() + other.degree() <= packed::MAX_DEG {
            return packed::mul(self, other);
        }
        let mut acc = rustc_hash::FxHashMap::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some(m) = m1.concat(m2) {
                    let c = c1 * c2;
                    acc.entry(m)
                        .and_modify(|v: &mut Rational| *v += &c)
                        .or_insert(c);
                }
            }
        }
        let mut entries: Vec<(Monomial, Rational)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        entries.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        FreePoly {
            terms: entries.into_iter().collect(),
        }
    }

    /// The sub-polynomial of terms with the given theta-parity.
    pub fn grade_component(&self, parity: Parity) -> FreePoly {
        FreePoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.parity() == parity)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn even_part(&self) -> FreePoly {
        self.grade_component(Parity::Even)
    }

    pub fn odd_part(&self) -> FreePoly {
        self.grade_component(Parity::Odd)
    }

    /// The reversal involution: linear, word-reversing. It is an
    /// antihomomorphism of the associative product and preserves the grading.
    pub fn involute(&self) -> FreePoly {
        FreePoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.reversed(), c.clone()))
                .collect(),
        }
    }

    /// True when the polynomial is fixed by the reversal involution.
    pub fn is_reversible(&self) -> bool {
        self.terms
            .iter()
            .all(|(m, c)| self.terms.get(&m.reversed()) == Some(c))
    }
}

impl Add for &FreePoly {
    type Output = FreePoly;
    fn add(self, rhs: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &FreePoly {
    type Output = FreePoly;
    fn sub(self, rhs: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &FreePoly {
    type Output = FreePoly;
    fn neg(self) -> FreePoly {
        FreePoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &FreePoly {
    type Output = FreePoly;
    fn mul(self, rhs: &FreePoly) -> FreePoly {
        FreePoly::mul(self, rhs)
    }
}

/// Product kernels for words of combined degree at most eight: a word packs
/// into a `u128` of right-aligned 16-bit letter lanes, so concatenation is a
/// shift-or, and accumulation runs over integer keys. Sorting by
/// `(length, packed)` reproduces the degree-lexicographic order exactly.
mod packed {
    use num_traits::Zero;
    use rustc_hash::FxHashMap;

    use super::{FreePoly, Monomial, Rational};
    use crate::freealg::monomial::Word;

    pub(crate) const MAX_DEG: usize = 8;

    struct Term {
        raw: u128,
        len: u8,
        theta: u8,
        coeff: Rational,
    }

    fn prepare<'a, I: Iterator<Item = (&'a Monomial, &'a Rational)>>(terms: I) -> Vec<Term> {
        terms
            .map(|(m, c)| {
                let mut raw = 0u128;
                for &code in m.codes() {
                    raw = (raw << 16) | code as u128;
                }
                Term {
                    raw,
                    len: m.degree() as u8,
                    theta: m.theta_degree() as u8,
                    coeff: c.clone(),
                }
            })
            .collect()
    }

    fn concat_raw(a: &Term, b: &Term) -> (u128, u8) {
        // shifting by 128 is undefined; it only arises against the identity
        let raw = if b.len == 8 {
            b.raw
        } else {
            (a.raw << (16 * b.len as u32)) | b.raw
        };
        (raw, a.len + b.len)
    }

    fn unpack(raw: u128, len: u8) -> Monomial {
        let mut word = Word::new();
        for i in (0..len).rev() {
            word.push(((raw >> (16 * i as u32)) & 0xffff) as u16);
        }
        Monomial::from_codes_unchecked(word)
    }

    fn build(acc: FxHashMap<(u128, u8), Rational>) -> FreePoly {
        let mut entries: Vec<((u128, u8), Rational)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        entries.sort_unstable_by_key(|&((raw, len), _)| (len, raw));
        FreePoly {
            terms: entries
                .into_iter()
                .map(|((raw, len), c)| (unpack(raw, len), c))
                .collect(),
        }
    }

    pub(crate) fn mul(p: &FreePoly, q: &FreePoly) -> FreePoly {
        let a = prepare(p.terms());
        let b = prepare(q.terms());
        let mut acc = FxHashMap::default();
        for ta in &a {
            for tb in &b {
                if ta.theta + tb.theta >= 2 {
                    continue;
                }
                let c = &ta.coeff * &tb.coeff;
                acc.entry(concat_raw(ta, tb))
                    .and_modify(|v: &mut Rational| *v += &c)
                    .or_insert(c);
            }
        }
        build(acc)
    }

    /// `(p q0 + q0 p) / 2` with `q0` the even component of `q`; the half is
    /// folded into the prepared right-hand coefficients.
    pub(crate) fn symmetrized_half(p: &FreePoly, q: &FreePoly) -> FreePoly {
        let half = Rational::new(1, 2);
        let a = prepare(p.terms());
        let mut b = prepare(q.terms().filter(|(m, _)| m.theta_degree() == 0));
        for tb in &mut b {
            tb.coeff = &tb.coeff * &half;
        }
        let mut acc = FxHashMap::default();
        for tb in &b {
            for ta in &a {
                let c = &ta.coeff * &tb.coeff;
                acc.entry(concat_raw(ta, tb))
                    .and_modify(|v: &mut Rational| *v += &c)
                    .or_insert_with(|| c.clone());
                acc.entry(concat_raw(tb, ta))
                    .and_modify(|v: &mut Rational| *v += &c)
                    .or_insert(c);
            }
        }
        build(acc)
    }
}

/// `(p q0 + q0 p) / 2` where `q0` is the even component of `q`: the bullet
/// product kernel shared by the identity checkers and the closure.
pub(crate) fn symmetrized_half_product(p: &FreePoly, q: &FreePoly) -> FreePoly {
    if p.is_zero() || q.is_zero() {
        return FreePoly::zero();
    }
    if p.degree() + q.degree() <= packed::MAX_DEG {
        return packed::symmetrized_half(p, q);
    }
    let q0 = q.even_part();
    let half = Rational::new(1, 2);
    let mut acc = rustc_hash::FxHashMap::default();
    for (m2, c2) in q0.terms() {
        for (m1, c1) in p.terms() {
            // m2 is even, so neither concatenation can reach theta-degree 2
            let c = c1 * c2;
            let fwd = m1.concat(m2).expect("even right factor");
            let bwd = m2.concat(m1).expect("even left factor");
            acc.entry(fwd)
                .and_modify(|v: &mut Rational| *v += &c)
                .or_insert_with(|| c.clone());
            acc.entry(bwd)
                .and_modify(|v: &mut Rational| *v += &c)
                .or_insert(c);
        }
    }
    let mut entries: Vec<(Monomial, Rational)> =
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    entries.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    FreePoly {
        terms: entries.into_iter().map(|(m, c)| (m, &c * &half)).collect(),
    }
}

/// The word `letters[0]…letters[n-1]` as a polynomial; zero when the word has
/// theta-degree two or more.
pub fn word(letters: &[Generator]) -> FreePoly {
    match Monomial::new(letters) {
        Some(m) => FreePoly::monomial(m),
        None => FreePoly::zero(),
    }
}

/// The brace `{y1,…,yn} = (y1…yn + yn…y1) / 2`, a reversible element.
/// Sequences of theta-degree two or more give zero.
pub fn brace(letters: &[Generator]) -> FreePoly {
    let m = match Monomial::new(letters) {
        Some(m) => m,
        None => return FreePoly::zero(),
    };
    let half = Rational::new(1, 2);
    let mut p = FreePoly::zero();
    p.add_term(m.reversed(), half.clone());
    p.add_term(m, half);
    p
}

impl fmt::Display for FreePoly {
    /// Canonical text form: terms in ascending degree-lexicographic order,
    /// joined by ` + ` / ` - `, coefficients as integers or `p/q`, monomial
    /// letters separated by `*`, the empty word printed as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if m.is_identity() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u16) -> Generator {
        Generator::even(i)
    }
    fn t(i: u16) -> Generator {
        Generator::odd(i)
    }

    #[test]
    fn multiply_kills_double_odd() {
        // t1 * t2 = 0
        let p = FreePoly::generator(t(1));
        let q = FreePoly::generator(t(2));
        assert!(p.mul(&q).is_zero());
    }

    #[test]
    fn multiply_juxtaposes() {
        // x1 * (x2 x3) = x1 x2 x3
        let p = FreePoly::generator(x(1));
        let q = word(&[x(2), x(3)]);
        assert_eq!(p.mul(&q), word(&[x(1), x(2), x(3)]));
    }

    #[test]
    fn multiply_drops_truncated_terms() {
        // (x1 t1 + 1) * t1 = t1
        let p = &word(&[x(1), t(1)]) + &FreePoly::one();
        let q = FreePoly::generator(t(1));
        assert_eq!(p.mul(&q), q);
    }

    #[test]
    fn multiply_is_associative_on_samples() {
        let a = &word(&[x(1), t(1)]) + &FreePoly::constant(rat(2));
        let b = &word(&[x(2)]) - &word(&[x(1), x(1)]);
        let c = &FreePoly::generator(t(1)) + &FreePoly::generator(x(3));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn grading_partition() {
        let p = &(&word(&[x(1)]) + &word(&[x(1), t(1), x(2)])) + &word(&[x(1), x(2)]);
        assert_eq!(p.even_part().to_string(), "x1 + x1*x2");
        assert_eq!(p.odd_part().to_string(), "x1*t1*x2");
        assert_eq!(&p.even_part() + &p.odd_part(), p);
        assert!(FreePoly::zero().even_part().is_zero());
    }

    #[test]
    fn involution() {
        assert_eq!(word(&[x(1), x(2), x(3)]).involute(), word(&[x(3), x(2), x(1)]));
        assert_eq!(FreePoly::one().involute(), FreePoly::one());
        assert_eq!(word(&[x(1), t(1)]).involute(), word(&[t(1), x(1)]));
        let p = &word(&[x(1), x(2)]) - &word(&[t(1), x(2)]).scale(&rat(3));
        assert_eq!(p.involute().involute(), p);
    }

    #[test]
    fn involution_antihomomorphism() {
        let p = &word(&[x(1), x(2)]) + &FreePoly::generator(t(1));
        let q = &word(&[x(3)]) + &FreePoly::one();
        assert_eq!(p.mul(&q).involute(), q.involute().mul(&p.involute()));
    }

    #[test]
    fn brace_basics() {
        // {t1} = t1
        assert_eq!(brace(&[t(1)]), FreePoly::generator(t(1)));
        // {x1,x2} = (x1x2 + x2x1)/2
        let b = brace(&[x(1), x(2)]);
        assert_eq!(b.to_string(), "1/2*x1*x2 + 1/2*x2*x1");
        // reversible and reversal-symmetric in the sequence
        assert!(b.is_reversible());
        assert_eq!(b, brace(&[x(2), x(1)]));
        // two odd letters give zero
        assert!(brace(&[t(1), x(1), t(2)]).is_zero());
        // palindromic words: {x1 t1 x1} = x1 t1 x1
        assert_eq!(brace(&[x(1), t(1), x(1)]), word(&[x(1), t(1), x(1)]));
    }

    #[test]
    fn brace_matches_definition() {
        let seq = [t(1), x(1), x(2)];
        let rev = [x(2), x(1), t(1)];
        let direct = (&word(&seq) + &word(&rev)).scale(&Rational::new(1, 2));
        assert_eq!(brace(&seq), direct);
    }

    #[test]
    fn display_canonical() {
        assert_eq!(FreePoly::zero().to_string(), "0");
        assert_eq!(FreePoly::one().to_string(), "1");
        let p = &(&FreePoly::generator(x(1)).scale(&Rational::new(-1, 2))
            + &word(&[x(1), t(1), x(2)]))
            + &FreePoly::constant(rat(3));
        assert_eq!(p.to_string(), "3 - 1/2*x1 + x1*t1*x2");
    }

    #[test]
    fn canonical_form_no_zero_terms() {
        let p = &word(&[x(1)]) - &word(&[x(1)]);
        assert!(p.is_zero());
        assert_eq!(p, FreePoly::zero());
    }
}
