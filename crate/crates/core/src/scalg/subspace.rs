use num_traits::Zero;

use crate::freealg::Rational;

/// A subspace of coordinate space, stored as a reduced row-echelon basis with
/// strictly increasing pivot columns. The representation is canonical, so two
/// `Subspace` values are equal iff they describe the same subspace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<I: IntoIterator<Item = Vec<Rational>>>(ambient: usize, vecs: I) -> Self {
        let mut s = Subspace::new(ambient);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot, in ascending order; their coordinate images
    /// form a basis of the quotient by this subspace.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Reduces `v` against the basis, returning the canonical residual.
    pub fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient, "vector/ambient dimension mismatch");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi -= &c * ri;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Inserts a vector, returning `true` when it enlarged the subspace.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        let mut v = self.reduce(v);
        let pivot = match v.iter().position(|c| !c.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        let lead = v[pivot].clone();
        for c in v.iter_mut() {
            *c /= &lead;
        }
        // clear the new pivot column from existing rows
        for row in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let c = row[pivot].clone();
                for (ri, vi) in row.iter_mut().zip(&v) {
                    *ri -= &c * vi;
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        true
    }

    /// True when `other` is a subspace of `self`.
    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }
}

/// Solves `M u = rhs` exactly, where `rows` are the rows of `M`. Returns a
/// particular solution together with the kernel, or `None` when inconsistent.
pub fn solve_affine(
    unknowns: usize,
    rows: &[Vec<Rational>],
    rhs: &[Rational],
) -> Option<(Vec<Rational>, Subspace)> {
    assert_eq!(rows.len(), rhs.len());
    // reduced echelon form of the augmented matrix [M | rhs]
    let mut aug = Subspace::new(unknowns + 1);
    for (row, b) in rows.iter().zip(rhs) {
        let mut v = row.clone();
        v.push(b.clone());
        aug.insert(v);
    }
    // a pivot in the last column means 0 = 1
    if aug.pivots().contains(&unknowns) {
        return None;
    }
    let mut particular = vec![Rational::zero(); unknowns];
    for (row, &p) in aug.basis().iter().zip(aug.pivots()) {
        particular[p] = row[unknowns].clone();
    }
    // kernel: for each free column f, the vector with 1 at f and -coeff at pivots
    let mut kernel = Subspace::new(unknowns);
    for f in 0..unknowns {
        if aug.pivots().contains(&f) {
            continue;
        }
        let mut v = vec![Rational::zero(); unknowns];
        v[f] = Rational::new(1, 1);
        for (row, &p) in aug.basis().iter().zip(aug.pivots()) {
            v[p] = -row[f].clone();
        }
        kernel.insert(v);
    }
    Some((particular, kernel))
}
