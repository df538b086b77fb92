use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::scalg::SCAlgebra;

use super::generator::{Generator, Parity};
use super::poly::{FreePoly, Rational};

/// An assignment of generator symbols to elements of a target
/// structure-constant algebra. Odd symbols must land in the odd part.
#[derive(Clone, Debug, Default)]
pub struct HomMap {
    images: BTreeMap<Generator, Vec<Rational>>,
}

impl HomMap {
    pub fn new() -> Self {
        HomMap::default()
    }

    pub fn assign(&mut self, g: Generator, image: Vec<Rational>) {
        self.images.insert(g, image);
    }

    pub fn image(&self, g: Generator) -> Option<&Vec<Rational>> {
        self.images.get(&g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomError {
    UnassignedGenerator(Generator),
    OddImageViolation(Generator),
    TargetNotGraded,
    TargetNotUnital,
    DimensionMismatch { expected: usize, got: usize },
}

impl fmt::Display for HomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomError::UnassignedGenerator(g) => write!(f, "generator {g} has no assigned image"),
            HomError::OddImageViolation(g) => {
                write!(f, "odd generator {g} maps outside the odd part of the target")
            }
            HomError::TargetNotGraded => write!(f, "target algebra declares no Z2-grading"),
            HomError::TargetNotUnital => write!(f, "target algebra has no identity element"),
            HomError::DimensionMismatch { expected, got } => {
                write!(f, "image has dimension {got}, target has dimension {expected}")
            }
        }
    }
}

impl std::error::Error for HomError {}

/// Extends a generator assignment to the unique associative-algebra
/// homomorphism on the free associative Z2-algebra and evaluates it on `p`.
///
/// The extension sends a monomial to the ordered product of the letter
/// images (the empty word to the target identity) and is linear in the
/// coefficients. When the target is associative with `odd • odd = 0`, the
/// result is multiplicative and kills every word of theta-degree two.
pub fn extend_hom(
    phi: &HomMap,
    target: &SCAlgebra,
    p: &FreePoly,
) -> Result<Vec<Rational>, HomError> {
    if target.grading().is_none() {
        return Err(HomError::TargetNotGraded);
    }
    for (g, image) in &phi.images {
        if image.len() != target.dim() {
            return Err(HomError::DimensionMismatch {
                expected: target.dim(),
                got: image.len(),
            });
        }
        if g.parity() == Parity::Odd && !target.in_odd_part(image) {
            return Err(HomError::OddImageViolation(*g));
        }
    }
    let identity = target
        .identity_element()
        .ok_or(HomError::TargetNotUnital)?;
    let mut out = vec![Rational::zero(); target.dim()];
    for (m, c) in p.terms() {
        let mut value = identity.clone();
        for g in m.letters() {
            let image = phi
                .images
                .get(&g)
                .ok_or(HomError::UnassignedGenerator(g))?;
            value = target
                .sc_mul(&value, image)
                .expect("dimensions validated above");
        }
        for (o, v) in out.iter_mut().zip(value) {
            *o += c * &v;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{rat, word};
    use crate::scalg::SCAlgebra;

    fn r(n: i64) -> Rational {
        rat(n)
    }

    /// Two-dimensional target: basis (1, m) with m odd, m*m = 0.
    fn dual_numbers_odd() -> SCAlgebra {
        let table = vec![
            vec![r(1), r(0)],
            vec![r(0), r(1)],
            vec![r(0), r(1)],
            vec![r(0), r(0)],
        ];
        SCAlgebra::new(
            "dual",
            vec!["one".into(), "m".into()],
            table,
            Some(vec![Parity::Even, Parity::Odd]),
        )
    }

    #[test]
    fn restriction_and_unit() {
        let a = dual_numbers_odd();
        let mut phi = HomMap::new();
        phi.assign(Generator::even(1), vec![r(2), r(0)]);
        phi.assign(Generator::odd(1), vec![r(0), r(3)]);
        let x1 = FreePoly::generator(Generator::even(1));
        assert_eq!(extend_hom(&phi, &a, &x1).unwrap(), vec![r(2), r(0)]);
        assert_eq!(extend_hom(&phi, &a, &FreePoly::one()).unwrap(), vec![r(1), r(0)]);
    }

    #[test]
    fn double_odd_word_maps_to_zero() {
        let a = dual_numbers_odd();
        let mut phi = HomMap::new();
        phi.assign(Generator::odd(1), vec![r(0), r(1)]);
        phi.assign(Generator::odd(2), vec![r(0), r(5)]);
        // t1 * t2 is already the zero polynomial, so its image is zero
        let p = FreePoly::generator(Generator::odd(1)).mul(&FreePoly::generator(Generator::odd(2)));
        assert!(p.is_zero());
        assert_eq!(extend_hom(&phi, &a, &p).unwrap(), vec![r(0), r(0)]);
    }

    #[test]
    fn errors() {
        let a = dual_numbers_odd();
        let phi = HomMap::new();
        let p = word(&[Generator::even(1)]);
        assert_eq!(
            extend_hom(&phi, &a, &p),
            Err(HomError::UnassignedGenerator(Generator::even(1)))
        );
        let mut phi = HomMap::new();
        phi.assign(Generator::odd(1), vec![r(1), r(0)]);
        assert_eq!(
            extend_hom(&phi, &a, &FreePoly::generator(Generator::odd(1))),
            Err(HomError::OddImageViolation(Generator::odd(1)))
        );
    }
}
