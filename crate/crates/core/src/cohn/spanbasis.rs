use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::One;

use crate::freealg::{FreePoly, Monomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohnError {
    DegreeExceedsCap { degree: usize, cap: usize },
    InsufficientGenerators { needed: usize, have: usize },
    InvalidIndices { n: usize, h: usize, m: usize },
}

impl fmt::Display for CohnError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohnError::DegreeExceedsCap { degree, cap } => {
                write!(f, "degree {degree} exceeds the span cap {cap}")
            }
            CohnError::InsufficientGenerators { needed, have } => {
                write!(f, "need {needed} even generators, universe has {have}")
            }
            CohnError::InvalidIndices { n, h, m } => {
                write!(f, "invalid index arrangement (n={n}, h={h}, m={m})")
            }
        }
    }
}

impl std::error::Error for CohnError {}

/// A subspace of the degree-capped free algebra in reduced echelon form.
///
/// Rows are polynomials keyed by their pivot, the smallest monomial in
/// degree-lexicographic order; pivots are pairwise distinct, pivot
/// coefficients are one, and no row contains another row's pivot. Membership
/// is exact reduction to zero.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    cap: usize,
    rows: BTreeMap<Monomial, FreePoly>,
    /// monomial -> pivots of the rows whose support contains it
    occurs: HashMap<Monomial, BTreeSet<Monomial>>,
}

impl SpanBasis {
    pub fn new(cap: usize) -> Self {
        SpanBasis {
            cap,
            rows: BTreeMap::new(),
            occurs: HashMap::new(),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Rows in ascending pivot order; a canonical listing of the basis.
    pub fn rows(&self) -> impl Iterator<Item = &FreePoly> {
        self.rows.values()
    }

    pub fn pivot_row(&self, pivot: &Monomial) -> Option<&FreePoly> {
        self.rows.get(pivot)
    }

    /// Number of basis rows whose pivot has the given degree.
    pub fn dim_at_degree(&self, degree: usize) -> usize {
        self.rows.keys().filter(|m| m.degree() == degree).count()
    }

    /// Full normal form of `p` against the basis.
    pub fn reduce(&self, p: &FreePoly) -> FreePoly {
        let mut work = p.clone();
        let mut floor: Option<Monomial> = None;
        loop {
            // rows only add monomials above their pivot, so everything below
            // `floor` is already irreducible
            let hit = work
                .terms_from(floor.as_ref())
                .find(|(m, _)| self.rows.contains_key(*m))
                .map(|(m, c)| (m.clone(), c.clone()));
            match hit {
                None => return work,
                Some((m, c)) => {
                    let row = &self.rows[&m];
                    work = &work - &row.scale(&c);
                    floor = Some(m);
                }
            }
        }
    }

    pub fn contains(&self, p: &FreePoly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Exact membership test; rejects polynomials above the degree cap.
    pub fn membership(&self, p: &FreePoly) -> Result<bool, CohnError> {
        if p.degree() > self.cap {
            return Err(CohnError::DegreeExceedsCap {
                degree: p.degree(),
                cap: self.cap,
            });
        }
        Ok(self.contains(p))
    }

    fn register(&mut self, pivot: &Monomial, row: &FreePoly) {
        for (m, _) in row.terms() {
            self.occurs
                .entry(m.clone())
                .or_default()
                .insert(pivot.clone());
        }
    }

    fn unregister(&mut self, pivot: &Monomial, row: &FreePoly) {
        for (m, _) in row.terms() {
            if let Some(set) = self.occurs.get_mut(m) {
                set.remove(pivot);
                if set.is_empty() {
                    self.occurs.remove(m);
                }
            }
        }
    }

    /// Inserts `p`, keeping reduced echelon form. Returns the new pivot when
    /// the subspace grew.
    pub fn insert(&mut self, p: &FreePoly) -> Option<Monomial> {
        let mut v = self.reduce(p);
        if v.is_zero() {
            return None;
        }
        assert!(
            v.degree() <= self.cap,
            "inserted vector exceeds the degree cap"
        );
        let pivot = v.min_monomial().expect("nonzero").clone();
        let lead = v.coeff(&pivot);
        if !lead.is_one() {
            v = v.scale(&lead.recip());
        }
        // clear the new pivot from rows that contain it
        if let Some(holders) = self.occurs.get(&pivot).cloned() {
            for hp in holders {
                let row = self.rows.get(&hp).expect("indexed row exists").clone();
                let c = row.coeff(&pivot);
                let updated = &row - &v.scale(&c);
                self.unregister(&hp, &row);
                self.register(&hp, &updated);
                self.rows.insert(hp, updated);
            }
        }
        self.register(&pivot.clone(), &v);
        self.rows.insert(pivot.clone(), v);
        Some(pivot)
    }
}
