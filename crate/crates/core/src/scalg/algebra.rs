use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::freealg::{rat, Parity, Rational};
use crate::report::IdentityReport;

use super::subspace::{solve_affine, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScError {
    DimensionMismatch { expected: usize, got: usize },
    NotAnIdeal,
    BaseMismatch,
}

impl fmt::Display for ScError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            ScError::NotAnIdeal => write!(f, "subspace is not an ideal"),
            ScError::BaseMismatch => write!(f, "bimodule base does not match the algebra"),
        }
    }
}

impl std::error::Error for ScError {}

/// How identity residuals are sampled.
///
/// `Multilinear` fully linearizes the cubic identities and evaluates on all
/// basis tuples, which is complete over a field of characteristic zero.
/// `Random` draws vectors with coordinates uniform in {-3,…,3}.
#[derive(Clone, Copy, Debug)]
pub enum CheckMode {
    Random { trials: usize, seed: u64 },
    Multilinear,
}

/// A finite-dimensional algebra presented by structure constants: for every
/// basis pair `(i, j)` the table stores the coordinate vector of `e_i • e_j`.
/// The grading, when present, marks each basis vector even or odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SCAlgebra {
    name: String,
    dim: usize,
    labels: Vec<String>,
    /// `table[i * dim + j]` = coordinates of `e_i • e_j`.
    table: Vec<Vec<Rational>>,
    grading: Option<Vec<Parity>>,
}

impl SCAlgebra {
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<Rational>>,
        grading: Option<Vec<Parity>>,
    ) -> Self {
        let dim = labels.len();
        assert_eq!(table.len(), dim * dim, "product table must be complete");
        for v in &table {
            assert_eq!(v.len(), dim, "product vectors must have length dim");
        }
        if let Some(g) = &grading {
            assert_eq!(g.len(), dim);
        }
        SCAlgebra {
            name: name.into(),
            dim,
            labels,
            table,
            grading,
        }
    }

    /// Builds the table entry-wise from a closure on basis pairs.
    pub fn from_fn(
        name: impl Into<String>,
        labels: Vec<String>,
        grading: Option<Vec<Parity>>,
        mut f: impl FnMut(usize, usize) -> Vec<Rational>,
    ) -> Self {
        let dim = labels.len();
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                table.push(f(i, j));
            }
        }
        SCAlgebra::new(name, labels, table, grading)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn grading(&self) -> Option<&[Parity]> {
        self.grading.as_deref()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i * self.dim + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::one();
        v
    }

    /// Bilinear extension of the table.
    pub fn sc_mul(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>, ScError> {
        if u.len() != self.dim {
            return Err(ScError::DimensionMismatch {
                expected: self.dim,
                got: u.len(),
            });
        }
        if v.len() != self.dim {
            return Err(ScError::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let c = ui * vj;
                for (o, t) in out.iter_mut().zip(self.basis_product(i, j)) {
                    *o += &c * t;
                }
            }
        }
        Ok(out)
    }

    fn mul(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        self.sc_mul(u, v).expect("internal vectors have dim length")
    }

    /// True when the table is associative on all basis triples.
    pub fn is_associative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..self.dim {
                    let jk = self.basis_product(j, k).to_vec();
                    let left = self.mul(&ij, &self.basis_vector(k));
                    let right = self.mul(&self.basis_vector(i), &jk);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// For a graded algebra: products respect the Z2-grading and odd•odd = 0.
    /// Returns `false` when no grading is declared.
    pub fn grading_is_z2(&self) -> bool {
        let grading = match &self.grading {
            Some(g) => g,
            None => return false,
        };
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = self.basis_product(i, j);
                match (grading[i], grading[j]) {
                    (Parity::Odd, Parity::Odd) => {
                        if p.iter().any(|c| !c.is_zero()) {
                            return false;
                        }
                    }
                    (gi, gj) => {
                        let want = if gi == gj { Parity::Even } else { Parity::Odd };
                        for (k, c) in p.iter().enumerate() {
                            if !c.is_zero() && grading[k] != want {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Coordinates outside the odd part must vanish for an odd element.
    pub fn in_odd_part(&self, v: &[Rational]) -> bool {
        match &self.grading {
            Some(g) => v
                .iter()
                .enumerate()
                .all(|(k, c)| c.is_zero() || g[k] == Parity::Odd),
            None => false,
        }
    }

    /// Solves for a two-sided identity element, if one exists.
    pub fn identity_element(&self) -> Option<Vec<Rational>> {
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        // e_i * u = e_i and u * e_i = e_i for all i
        for i in 0..self.dim {
            for k in 0..self.dim {
                let mut row = Vec::with_capacity(self.dim);
                for j in 0..self.dim {
                    row.push(self.basis_product(i, j)[k].clone());
                }
                rows.push(row);
                rhs.push(if i == k { Rational::one() } else { Rational::zero() });
                let mut row = Vec::with_capacity(self.dim);
                for j in 0..self.dim {
                    row.push(self.basis_product(j, i)[k].clone());
                }
                rows.push(row);
                rhs.push(if i == k { Rational::one() } else { Rational::zero() });
            }
        }
        solve_affine(self.dim, &rows, &rhs).map(|(p, _)| p)
    }

    /// Span of all commutator differences `e_i • e_j - e_j • e_i`.
    pub fn annihilator(&self) -> Subspace {
        let mut s = Subspace::new(self.dim);
        for i in 0..self.dim {
            for j in 0..i {
                let mut v = self.basis_product(i, j).to_vec();
                for (vk, w) in v.iter_mut().zip(self.basis_product(j, i)) {
                    *vk -= w;
                }
                s.insert(v);
            }
        }
        s
    }

    /// Ideal test: products of the subspace with the whole algebra on both
    /// sides reduce back into the subspace.
    pub fn is_ideal(&self, ideal: &Subspace) -> Result<bool, ScError> {
        if ideal.ambient_dim() != self.dim {
            return Err(ScError::DimensionMismatch {
                expected: self.dim,
                got: ideal.ambient_dim(),
            });
        }
        for row in ideal.basis() {
            for j in 0..self.dim {
                let e = self.basis_vector(j);
                if !ideal.contains(&self.mul(row, &e)) || !ideal.contains(&self.mul(&e, row)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Quotient by an ideal, on the basis of cosets of the non-pivot
    /// coordinates of the ideal's echelon form.
    pub fn quotient(&self, ideal: &Subspace) -> Result<SCAlgebra, ScError> {
        if !self.is_ideal(ideal)? {
            return Err(ScError::NotAnIdeal);
        }
        Ok(self.quotient_unchecked(ideal))
    }

    /// The projected table on coset representatives, without the ideal test.
    /// Only a genuine ideal makes the result an algebra.
    pub(crate) fn quotient_unchecked(&self, ideal: &Subspace) -> SCAlgebra {
        let free = ideal.non_pivots();
        let project = |v: Vec<Rational>| -> Vec<Rational> {
            let r = ideal.reduce(v);
            free.iter().map(|&c| r[c].clone()).collect()
        };
        let labels: Vec<String> = free.iter().map(|&c| format!("[{}]", self.labels[c])).collect();
        let grading = self
            .grading
            .as_ref()
            .map(|g| free.iter().map(|&c| g[c]).collect::<Vec<_>>());
        let mut table = Vec::with_capacity(free.len() * free.len());
        for &i in &free {
            for &j in &free {
                table.push(project(self.basis_product(i, j).to_vec()));
            }
        }
        SCAlgebra::new(format!("{} mod ideal", self.name), labels, table, grading)
    }

    /// Solves `x • u = x` for all basis `x`: the affine set of right units.
    pub fn find_right_units(&self) -> RightUnits {
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..self.dim {
            for k in 0..self.dim {
                let mut row = Vec::with_capacity(self.dim);
                for j in 0..self.dim {
                    row.push(self.basis_product(i, j)[k].clone());
                }
                rows.push(row);
                rhs.push(if i == k { Rational::one() } else { Rational::zero() });
            }
        }
        match solve_affine(self.dim, &rows, &rhs) {
            Some((particular, homogeneous)) => RightUnits {
                particular: Some(particular),
                homogeneous,
            },
            None => RightUnits {
                particular: None,
                homogeneous: Subspace::new(self.dim),
            },
        }
    }

    /// Checks right commutativity, the Jordan identity, and the Hu-Liu
    /// identity on the table, one report per identity.
    pub fn check_gja_axioms(&self, mode: CheckMode) -> Vec<IdentityReport> {
        match mode {
            CheckMode::Multilinear => self.check_axioms_multilinear(),
            CheckMode::Random { trials, seed } => self.check_axioms_random(trials, seed),
        }
    }

    fn format_vec(&self, v: &[Rational]) -> String {
        let mut parts = Vec::new();
        for (c, l) in v.iter().zip(&self.labels) {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(l.clone());
            } else {
                parts.push(format!("{c}*{l}"));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    fn residual_right_commutative(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let yz = self.mul(y, z);
        let zy = self.mul(z, y);
        let mut r = self.mul(x, &yz);
        for (a, b) in r.iter_mut().zip(self.mul(x, &zy)) {
            *a -= b;
        }
        r
    }

    fn residual_jordan(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let xx = self.mul(x, x);
        let yx = self.mul(y, x);
        let mut r = self.mul(&yx, &xx);
        let yxx = self.mul(y, &xx);
        for (a, b) in r.iter_mut().zip(self.mul(&yxx, x)) {
            *a -= b;
        }
        r
    }

    fn residual_hu_liu(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let xx = self.mul(x, x);
        let two = rat(2);
        let mut r = self.mul(x, &self.mul(y, &xx));
        for (a, b) in r.iter_mut().zip(self.mul(&self.mul(x, y), &xx)) {
            *a -= b;
        }
        for (a, b) in r.iter_mut().zip(self.mul(&xx, &self.mul(y, x))) {
            *a -= &two * b;
        }
        for (a, b) in r.iter_mut().zip(self.mul(&self.mul(&xx, y), x)) {
            *a += &two * b;
        }
        r
    }

    fn check_axioms_random(&self, trials: usize, seed: u64) -> Vec<IdentityReport> {
        let mut rc = IdentityReport::new("right_commutativity");
        let mut jordan = IdentityReport::new("jordan_identity");
        let mut hu_liu = IdentityReport::new("hu_liu_identity");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sample = |rng: &mut ChaCha8Rng| -> Vec<Rational> {
            (0..self.dim).map(|_| rat(rng.random_range(-3..=3))).collect()
        };
        for _ in 0..trials {
            let x = sample(&mut rng);
            let y = sample(&mut rng);
            let z = sample(&mut rng);
            rc.trials += 1;
            let r = self.residual_right_commutative(&x, &y, &z);
            if r.iter().any(|c| !c.is_zero()) {
                rc.record(
                    vec![
                        ("x".into(), self.format_vec(&x)),
                        ("y".into(), self.format_vec(&y)),
                        ("z".into(), self.format_vec(&z)),
                    ],
                    self.format_vec(&r),
                );
            }
            jordan.trials += 1;
            let r = self.residual_jordan(&x, &y);
            if r.iter().any(|c| !c.is_zero()) {
                jordan.record(
                    vec![
                        ("x".into(), self.format_vec(&x)),
                        ("y".into(), self.format_vec(&y)),
                    ],
                    self.format_vec(&r),
                );
            }
            hu_liu.trials += 1;
            let r = self.residual_hu_liu(&x, &y);
            if r.iter().any(|c| !c.is_zero()) {
                hu_liu.record(
                    vec![
                        ("x".into(), self.format_vec(&x)),
                        ("y".into(), self.format_vec(&y)),
                    ],
                    self.format_vec(&r),
                );
            }
        }
        vec![rc, jordan, hu_liu]
    }

    /// Full linearization of an identity that is cubic in `x`: sum the
    /// residual over all assignments of `(a, b, c)` to the three `x` slots.
    /// Over characteristic zero the identity holds for all `x` iff the
    /// linearized form vanishes on all basis tuples.
    fn check_axioms_multilinear(&self) -> Vec<IdentityReport> {
        let mut rc = IdentityReport::new("right_commutativity");
        let mut jordan = IdentityReport::new("jordan_identity");
        let mut hu_liu = IdentityReport::new("hu_liu_identity");
        let basis: Vec<Vec<Rational>> = (0..self.dim).map(|i| self.basis_vector(i)).collect();
        let label = |i: usize| self.labels[i].clone();

        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                for (k, z) in basis.iter().enumerate() {
                    rc.trials += 1;
                    let r = self.residual_right_commutative(x, y, z);
                    if r.iter().any(|c| !c.is_zero()) {
                        rc.record(
                            vec![("x".into(), label(i)), ("y".into(), label(j)), ("z".into(), label(k))],
                            self.format_vec(&r),
                        );
                    }
                }
            }
        }

        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let slots = [&basis[i], &basis[j], &basis[k]];
                    for (l, y) in basis.iter().enumerate() {
                        let mut rj = vec![Rational::zero(); self.dim];
                        let mut rh = vec![Rational::zero(); self.dim];
                        for p in &perms {
                            let (a, b, c) = (slots[p[0]], slots[p[1]], slots[p[2]]);
                            let bc = self.mul(b, c);
                            // Jordan: (y a)(b c) - (y (b c)) a
                            let ya = self.mul(y, a);
                            for (r, v) in rj.iter_mut().zip(self.mul(&ya, &bc)) {
                                *r += v;
                            }
                            let ybc = self.mul(y, &bc);
                            for (r, v) in rj.iter_mut().zip(self.mul(&ybc, a)) {
                                *r -= v;
                            }
                            // Hu-Liu: a(y(bc)) - (ay)(bc) - 2(bc)(ya) + 2((bc)y)a
                            let two = rat(2);
                            for (r, v) in rh.iter_mut().zip(self.mul(a, &ybc)) {
                                *r += v;
                            }
                            let ay = self.mul(a, y);
                            for (r, v) in rh.iter_mut().zip(self.mul(&ay, &bc)) {
                                *r -= v;
                            }
                            for (r, v) in rh.iter_mut().zip(self.mul(&bc, &ya)) {
                                *r -= &two * v;
                            }
                            let bcy = self.mul(&bc, y);
                            for (r, v) in rh.iter_mut().zip(self.mul(&bcy, a)) {
                                *r += &two * v;
                            }
                        }
                        let inputs = || {
                            vec![
                                ("x1".into(), label(i)),
                                ("x2".into(), label(j)),
                                ("x3".into(), label(k)),
                                ("y".into(), label(l)),
                            ]
                        };
                        jordan.trials += 1;
                        if rj.iter().any(|c| !c.is_zero()) {
                            jordan.record(inputs(), self.format_vec(&rj));
                        }
                        hu_liu.trials += 1;
                        if rh.iter().any(|c| !c.is_zero()) {
                            hu_liu.record(inputs(), self.format_vec(&rh));
                        }
                    }
                }
            }
        }
        vec![rc, jordan, hu_liu]
    }
}

/// The solution set of `x • u = x` for all `x`, as a particular solution plus
/// the homogeneous solution space; `particular = None` means no right unit.
#[derive(Clone, Debug)]
pub struct RightUnits {
    pub particular: Option<Vec<Rational>>,
    pub homogeneous: Subspace,
}

impl RightUnits {
    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }
}
