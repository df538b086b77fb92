use num_traits::{One, Zero};

use crate::freealg::{rat, Parity, Rational};
use crate::report::{all_pass, IdentityReport};

use super::algebra::{SCAlgebra, ScError};
use super::subspace::Subspace;

/// A structure-constant algebra whose product is commutative and satisfies
/// the Jordan identity (validated on construction by [`JordanSC::try_new`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanSC {
    alg: SCAlgebra,
}

impl JordanSC {
    /// Validates commutativity and the fully linearized Jordan identity on
    /// all basis tuples; returns the failing reports otherwise.
    pub fn try_new(alg: SCAlgebra) -> Result<JordanSC, Vec<IdentityReport>> {
        let reports = jordan_algebra_reports(&alg);
        if all_pass(&reports) {
            Ok(JordanSC { alg })
        } else {
            Err(reports)
        }
    }

    pub(crate) fn new_unchecked(alg: SCAlgebra) -> JordanSC {
        JordanSC { alg }
    }

    pub fn algebra(&self) -> &SCAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn mul(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>, ScError> {
        self.alg.sc_mul(u, v)
    }
}

/// Reports for "the table is a Jordan algebra": symmetry of the product and
/// the linearized Jordan identity on all basis tuples.
pub fn jordan_algebra_reports(alg: &SCAlgebra) -> Vec<IdentityReport> {
    let mut sym = IdentityReport::new("product_commutative");
    let dim = alg.dim();
    for i in 0..dim {
        for j in 0..=i {
            sym.trials += 1;
            if alg.basis_product(i, j) != alg.basis_product(j, i) {
                sym.record(
                    vec![
                        ("a".into(), alg.labels()[i].clone()),
                        ("b".into(), alg.labels()[j].clone()),
                    ],
                    "a*b - b*a != 0".into(),
                );
            }
        }
    }
    let axioms = alg.check_gja_axioms(super::algebra::CheckMode::Multilinear);
    // For a commutative product the Jordan identity is the interesting axiom;
    // keep all three reports for completeness.
    let mut out = vec![sym];
    out.extend(axioms);
    out
}

/// A Jordan bimodule over a [`JordanSC`]: a bilinear right action
/// `(v, a) -> v a` subject to the two Jordan bimodule axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleSC {
    base: JordanSC,
    dim: usize,
    labels: Vec<String>,
    /// `action[t * base.dim() + j]` = coordinates of `v_t * e_j` in the
    /// module basis.
    action: Vec<Vec<Rational>>,
}

impl BimoduleSC {
    pub fn new(
        base: JordanSC,
        labels: Vec<String>,
        action: Vec<Vec<Rational>>,
    ) -> Self {
        let dim = labels.len();
        assert_eq!(action.len(), dim * base.dim(), "action table must be complete");
        for v in &action {
            assert_eq!(v.len(), dim);
        }
        BimoduleSC {
            base,
            dim,
            labels,
            action,
        }
    }

    pub fn base(&self) -> &JordanSC {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis_action(&self, t: usize, j: usize) -> &[Rational] {
        &self.action[t * self.base.dim() + j]
    }

    /// Bilinear extension of the action table.
    pub fn act(&self, v: &[Rational], a: &[Rational]) -> Result<Vec<Rational>, ScError> {
        if v.len() != self.dim {
            return Err(ScError::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        if a.len() != self.base.dim() {
            return Err(ScError::DimensionMismatch {
                expected: self.base.dim(),
                got: a.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.dim];
        for (t, vt) in v.iter().enumerate() {
            if vt.is_zero() {
                continue;
            }
            for (j, aj) in a.iter().enumerate() {
                if aj.is_zero() {
                    continue;
                }
                let c = vt * aj;
                for (o, w) in out.iter_mut().zip(self.basis_action(t, j)) {
                    *o += &c * w;
                }
            }
        }
        Ok(out)
    }

    fn acted(&self, v: &[Rational], a: &[Rational]) -> Vec<Rational> {
        self.act(v, a).expect("internal dimensions agree")
    }

    /// Verifies both bimodule axioms, fully linearized in the quadratic/cubic
    /// slots and evaluated on all basis tuples.
    pub fn check_bimodule(&self) -> Vec<IdentityReport> {
        let jalg = self.base.algebra();
        let jdim = jalg.dim();
        let mdim = self.dim;
        let jmul = |a: &[Rational], b: &[Rational]| jalg.sc_mul(a, b).expect("dims agree");
        let jbasis: Vec<Vec<Rational>> = (0..jdim).map(|i| jalg.basis_vector(i)).collect();
        let mbasis: Vec<Vec<Rational>> = (0..mdim)
            .map(|t| {
                let mut v = vec![Rational::zero(); mdim];
                v[t] = Rational::one();
                v
            })
            .collect();

        // axiom 1: (v (a ⊙ a)) a = (v a)(a ⊙ a); cubic in a.
        let mut ax1 = IdentityReport::new("bimodule_square_action");
        let perms3: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for (ti, v) in mbasis.iter().enumerate() {
            for i in 0..jdim {
                for j in 0..jdim {
                    for k in 0..jdim {
                        let slots = [&jbasis[i], &jbasis[j], &jbasis[k]];
                        let mut r = vec![Rational::zero(); mdim];
                        for p in &perms3 {
                            let (a, b, c) = (slots[p[0]], slots[p[1]], slots[p[2]]);
                            let bc = jmul(b, c);
                            for (x, w) in r.iter_mut().zip(self.acted(&self.acted(v, &bc), a)) {
                                *x += w;
                            }
                            for (x, w) in r.iter_mut().zip(self.acted(&self.acted(v, a), &bc)) {
                                *x -= w;
                            }
                        }
                        ax1.trials += 1;
                        if r.iter().any(|c| !c.is_zero()) {
                            ax1.record(
                                vec![
                                    ("v".into(), self.labels[ti].clone()),
                                    ("a1".into(), jalg.labels()[i].clone()),
                                    ("a2".into(), jalg.labels()[j].clone()),
                                    ("a3".into(), jalg.labels()[k].clone()),
                                ],
                                format!("{r:?}"),
                            );
                        }
                    }
                }
            }
        }

        // axiom 2: 2((v a) b) a + v((a ⊙ a) ⊙ b) = 2(v a)(a ⊙ b) + (v b)(a ⊙ a);
        // quadratic in a.
        let mut ax2 = IdentityReport::new("bimodule_linearized_action");
        let two = rat(2);
        for (ti, v) in mbasis.iter().enumerate() {
            for i in 0..jdim {
                for j in 0..jdim {
                    for (bl, b) in jbasis.iter().enumerate() {
                        let mut r = vec![Rational::zero(); mdim];
                        for (a1, a2) in [(&jbasis[i], &jbasis[j]), (&jbasis[j], &jbasis[i])] {
                            let a12 = jmul(a1, a2);
                            for (x, w) in r
                                .iter_mut()
                                .zip(self.acted(&self.acted(&self.acted(v, a1), b), a2))
                            {
                                *x += &two * w;
                            }
                            for (x, w) in r.iter_mut().zip(self.acted(v, &jmul(&a12, b))) {
                                *x += w;
                            }
                            for (x, w) in r
                                .iter_mut()
                                .zip(self.acted(&self.acted(v, a1), &jmul(a2, b)))
                            {
                                *x -= &two * w;
                            }
                            for (x, w) in r.iter_mut().zip(self.acted(&self.acted(v, b), &a12)) {
                                *x -= w;
                            }
                        }
                        ax2.trials += 1;
                        if r.iter().any(|c| !c.is_zero()) {
                            ax2.record(
                                vec![
                                    ("v".into(), self.labels[ti].clone()),
                                    ("a1".into(), jalg.labels()[i].clone()),
                                    ("a2".into(), jalg.labels()[j].clone()),
                                    ("b".into(), jalg.labels()[bl].clone()),
                                ],
                                format!("{r:?}"),
                            );
                        }
                    }
                }
            }
        }
        vec![ax1, ax2]
    }
}

/// The split extension of a Jordan algebra by a Jordan bimodule:
/// `(a, v) • (b, u) = (a ⊙ b, v b)` on the direct sum. The result is graded
/// with the algebra part even and the module part odd.
pub fn split_extension(j: &JordanSC, v: &BimoduleSC) -> Result<SCAlgebra, ScError> {
    if v.base() != j {
        return Err(ScError::BaseMismatch);
    }
    let jd = j.dim();
    let md = v.dim();
    let dim = jd + md;
    let mut labels: Vec<String> = j.algebra().labels().to_vec();
    labels.extend(v.labels().iter().cloned());
    let grading: Vec<Parity> = (0..dim)
        .map(|k| if k < jd { Parity::Even } else { Parity::Odd })
        .collect();
    let table_entry = |i: usize, jj: usize| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); dim];
        if i < jd && jj < jd {
            for (k, c) in j.algebra().basis_product(i, jj).iter().enumerate() {
                out[k] = c.clone();
            }
        } else if i >= jd && jj < jd {
            // (0, v_t) • (e_j, 0) = (0, v_t e_j)
            for (k, c) in v.basis_action(i - jd, jj).iter().enumerate() {
                out[jd + k] = c.clone();
            }
        }
        // even•odd and odd•odd vanish: the module slot of the product only
        // sees the algebra component of the right factor
        out
    };
    Ok(SCAlgebra::from_fn(
        format!("split({})", j.algebra().name()),
        labels,
        Some(grading),
        table_entry,
    ))
}

/// The bimodule induced on the annihilator: the quotient by the annihilator
/// acts on the annihilator by right multiplication.
#[derive(Debug)]
pub struct InducedBimodule {
    pub bimodule: BimoduleSC,
    pub annihilator: Subspace,
    /// Well-definedness of the action, the ideal property, the Jordan checks
    /// on the quotient, and both bimodule axioms.
    pub reports: Vec<IdentityReport>,
}

/// Builds the annihilator-as-bimodule over the quotient algebra. All
/// verification outcomes are returned as reports rather than errors.
pub fn induced_bimodule(alg: &SCAlgebra) -> InducedBimodule {
    let ann = alg.annihilator();
    let mut reports = Vec::new();

    let mut ideal_rep = IdentityReport::new("annihilator_is_ideal");
    ideal_rep.trials = 1;
    if !alg.is_ideal(&ann).unwrap_or(false) {
        ideal_rep.record(vec![], "annihilator is not an ideal".into());
    }
    reports.push(ideal_rep);

    // action u * (x + ann) := u • x is well defined iff u • a = 0 for all
    // u, a in the annihilator
    let mut wd = IdentityReport::new("action_well_defined");
    for u in ann.basis() {
        for a in ann.basis() {
            wd.trials += 1;
            let p = alg.sc_mul(u, a).expect("ambient dims agree");
            if p.iter().any(|c| !c.is_zero()) {
                wd.record(vec![], "u • a != 0 for annihilator elements".into());
            }
        }
    }
    reports.push(wd);

    let quotient = alg.quotient_unchecked(&ann);
    reports.extend(jordan_algebra_reports(&quotient));
    let jordan = JordanSC::new_unchecked(quotient);

    // module basis: the echelon rows of the annihilator; coordinates of an
    // annihilator element in that basis can be read off at the pivot columns
    let free = ann.non_pivots();
    let mdim = ann.dim();
    let mut action = Vec::with_capacity(mdim * free.len());
    let mut closed = IdentityReport::new("module_closed_under_action");
    for t in 0..mdim {
        for &c in &free {
            let w = alg
                .sc_mul(&ann.basis()[t], &alg.basis_vector(c))
                .expect("ambient dims agree");
            closed.trials += 1;
            if !ann.contains(&w) {
                closed.record(vec![], format!("row {t} acted by basis {c} leaves the annihilator"));
            }
            let coords: Vec<Rational> = ann.pivots().iter().map(|&p| w[p].clone()).collect();
            action.push(coords);
        }
    }
    reports.push(closed);

    let labels: Vec<String> = (0..mdim).map(|t| format!("u{}", t + 1)).collect();
    let bimodule = BimoduleSC::new(jordan, labels, action);
    reports.extend(bimodule.check_bimodule());

    InducedBimodule {
        bimodule,
        annihilator: ann,
        reports,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_pass;
    use crate::scalg::CheckMode;

    fn r(n: i64) -> Rational {
        rat(n)
    }
    fn rr(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    /// The 2x2 symmetric matrices under the symmetrized product, on the basis
    /// (E11, E22, E12 + E21).
    pub(crate) fn sym2() -> JordanSC {
        let z = || vec![r(0), r(0), r(0)];
        let e1 = || vec![r(1), r(0), r(0)];
        let e2 = || vec![r(0), r(1), r(0)];
        let h3 = || vec![r(0), r(0), rr(1, 2)];
        let table = vec![
            e1(),
            z(),
            h3(), // e1*e1, e1*e2, e1*e3
            z(),
            e2(),
            h3(), // e2*...
            h3(),
            h3(),
            vec![r(1), r(1), r(0)], // e3*e3 = e1 + e2
        ];
        let alg = SCAlgebra::new(
            "sym2",
            vec!["s11".into(), "s22".into(), "s12".into()],
            table,
            None,
        );
        JordanSC::try_new(alg).expect("symmetric 2x2 matrices form a Jordan algebra")
    }

    /// The regular bimodule: the algebra acting on itself.
    pub(crate) fn regular_bimodule(j: &JordanSC) -> BimoduleSC {
        let dim = j.dim();
        let mut action = Vec::with_capacity(dim * dim);
        for t in 0..dim {
            for a in 0..dim {
                action.push(j.algebra().basis_product(t, a).to_vec());
            }
        }
        let labels = (0..dim).map(|t| format!("v{}", t + 1)).collect();
        BimoduleSC::new(j.clone(), labels, action)
    }

    #[test]
    fn sym2_is_jordan_and_regular_bimodule_valid() {
        let j = sym2();
        let v = regular_bimodule(&j);
        assert!(all_pass(&v.check_bimodule()));
    }

    #[test]
    fn split_extension_is_gja() {
        let j = sym2();
        let v = regular_bimodule(&j);
        let a = split_extension(&j, &v).unwrap();
        assert_eq!(a.dim(), 6);
        assert!(all_pass(&a.check_gja_axioms(CheckMode::Multilinear)));
        assert!(a.grading_is_z2());
    }

    #[test]
    fn split_extension_one_dim_example() {
        // J = field (e⊙e = e), V one-dimensional with v·e = v
        let j = JordanSC::try_new(SCAlgebra::new(
            "line",
            vec!["e".into()],
            vec![vec![r(1)]],
            None,
        ))
        .unwrap();
        let v = BimoduleSC::new(j.clone(), vec!["v".into()], vec![vec![r(1)]]);
        let a = split_extension(&j, &v).unwrap();
        assert_eq!(a.basis_product(0, 0), &[r(1), r(0)]);
        assert_eq!(a.basis_product(1, 0), &[r(0), r(1)]);
        assert_eq!(a.basis_product(0, 1), &[r(0), r(0)]);
        assert_eq!(a.basis_product(1, 1), &[r(0), r(0)]);
    }

    #[test]
    fn split_extension_zero_module_is_base() {
        let j = sym2();
        let v = BimoduleSC::new(j.clone(), vec![], vec![]);
        let a = split_extension(&j, &v).unwrap();
        assert_eq!(a.dim(), 3);
        for i in 0..3 {
            for k in 0..3 {
                assert_eq!(a.basis_product(i, k), j.algebra().basis_product(i, k));
            }
        }
    }

    #[test]
    fn base_mismatch_detected() {
        let j = sym2();
        let other = JordanSC::try_new(SCAlgebra::new(
            "line",
            vec!["e".into()],
            vec![vec![r(1)]],
            None,
        ))
        .unwrap();
        let v = BimoduleSC::new(other, vec!["v".into()], vec![vec![r(1)]]);
        assert_eq!(split_extension(&j, &v), Err(ScError::BaseMismatch));
    }

    #[test]
    fn annihilator_of_split_extension_is_module_summand() {
        let j = sym2();
        let v = regular_bimodule(&j);
        let a = split_extension(&j, &v).unwrap();
        let ann = a.annihilator();
        // 0 ⊕ V: unit vectors on the module coordinates
        let mut expected = Subspace::new(6);
        for t in 3..6 {
            expected.insert(a.basis_vector(t));
        }
        assert_eq!(ann, expected);
        assert!(a.is_ideal(&ann).unwrap());
    }

    #[test]
    fn induced_bimodule_recovers_regular_action() {
        let j = sym2();
        let v = regular_bimodule(&j);
        let a = split_extension(&j, &v).unwrap();
        let induced = induced_bimodule(&a);
        assert!(all_pass(&induced.reports));
        assert_eq!(induced.bimodule.dim(), v.dim());
        for t in 0..3 {
            for c in 0..3 {
                assert_eq!(induced.bimodule.basis_action(t, c), v.basis_action(t, c));
            }
        }
    }

    #[test]
    fn induced_bimodule_of_commutative_algebra_is_zero() {
        let j = sym2();
        let induced = induced_bimodule(j.algebra());
        assert_eq!(induced.bimodule.dim(), 0);
        assert!(all_pass(&induced.reports));
    }

    #[test]
    fn quotient_of_split_extension_recovers_base() {
        let j = sym2();
        let v = regular_bimodule(&j);
        let a = split_extension(&j, &v).unwrap();
        let q = a.quotient(&a.annihilator()).unwrap();
        assert_eq!(q.dim(), 3);
        for i in 0..3 {
            for k in 0..3 {
                assert_eq!(q.basis_product(i, k), j.algebra().basis_product(i, k));
            }
        }
        assert!(q.is_commutative());
    }

    #[test]
    fn right_units_are_unit_plus_annihilator() {
        let j = sym2();
        let v = regular_bimodule(&j);
        let a = split_extension(&j, &v).unwrap();
        let units = a.find_right_units();
        let u = units.particular.expect("right unital");
        // particular + homogeneous solves the unit equations; homogeneous
        // part equals the annihilator
        assert_eq!(units.homogeneous, a.annihilator());
        // (1_J, 0) is a right unit: u reduced by the annihilator gives it
        let reduced = a.annihilator().reduce(u);
        assert_eq!(reduced, vec![r(1), r(1), r(0), r(0), r(0), r(0)]);
    }
}
