//! The bullet-product layer on the free algebra.
//!
//! `bullet(x, y) = (x y0 + y0 x) / 2` with `y0` the even component of `y`
//! turns the free associative Z2-algebra into a right unital generalized
//! Jordan algebra. This module provides the product, the long associator,
//! the multiplication operators, and exact checkers for the defining and
//! derived identities.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::freealg::{rat, FreePoly, Monomial, Universe};
use crate::report::IdentityReport;

/// The bullet product: bilinear, with the right operand contributing only its
/// even component. The identity monomial is a right unit.
pub fn bullet(p: &FreePoly, q: &FreePoly) -> FreePoly {
    crate::freealg::symmetrized_half_product(p, q)
}

/// The long associator
/// `x•(y•z) - (x•y)•z - 2 z•(y•x) + 2 (z•y)•x`.
pub fn long_associator(x: &FreePoly, y: &FreePoly, z: &FreePoly) -> FreePoly {
    let two = rat(2);
    let a = bullet(x, &bullet(y, z));
    let b = bullet(&bullet(x, y), z);
    let c = bullet(z, &bullet(y, x));
    let d = bullet(&bullet(z, y), x);
    &(&a - &b) + &(&d.scale(&two) - &c.scale(&two))
}

/// A multiplication operator: left or right bullet multiplication by an
/// anchor element, or their sum.
#[derive(Clone, Debug)]
pub enum MultOp {
    Left(FreePoly),
    Right(FreePoly),
    Sym(FreePoly),
}

impl MultOp {
    pub fn apply(&self, x: &FreePoly) -> FreePoly {
        match self {
            MultOp::Left(a) => bullet(a, x),
            MultOp::Right(a) => bullet(x, a),
            MultOp::Sym(a) => &bullet(a, x) + &bullet(x, a),
        }
    }
}

/// Deterministic random elements of the degree-truncated free algebra:
/// rational coefficients drawn uniformly from {-3,…,3} on every monomial of
/// degree at most `max_deg`. Each stream index yields an independent,
/// reproducible element, so trials can run in parallel.
#[derive(Clone, Debug)]
pub struct Sampler {
    universe: Universe,
    seed: u64,
    monomials: Vec<Monomial>,
}

impl Sampler {
    pub fn new(universe: Universe, max_deg: usize, seed: u64) -> Self {
        Sampler {
            universe,
            seed,
            monomials: universe.monomials_up_to(max_deg),
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn poly(&self, stream: u64) -> FreePoly {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        FreePoly::from_terms(self.monomials.iter().filter_map(|m| {
            let c: i64 = rng.random_range(-3..=3);
            if c == 0 {
                None
            } else {
                Some((m.clone(), rat(c)))
            }
        }))
    }
}

/// Streams reserved per trial; keeps sampling deterministic and independent
/// of how trials are scheduled across threads.
const STREAMS_PER_TRIAL: u64 = 8;

fn residual_right_commutative(x: &FreePoly, y: &FreePoly, z: &FreePoly) -> FreePoly {
    let inner = &bullet(y, z) - &bullet(z, y);
    bullet(x, &inner)
}

fn residual_jordan(x: &FreePoly, y: &FreePoly) -> FreePoly {
    let xx = bullet(x, x);
    &bullet(&bullet(y, x), &xx) - &bullet(&bullet(y, &xx), x)
}

fn residual_hu_liu(x: &FreePoly, y: &FreePoly) -> FreePoly {
    let two = rat(2);
    let xx = bullet(x, x);
    let lhs = &bullet(x, &bullet(y, &xx)) - &bullet(&bullet(x, y), &xx);
    let rhs = &bullet(&xx, &bullet(y, x)).scale(&two) - &bullet(&bullet(&xx, y), x).scale(&two);
    &lhs - &rhs
}

struct Check {
    name: &'static str,
    vars: &'static [&'static str],
    eval: fn(&[FreePoly]) -> FreePoly,
}

fn run_trials(sampler: &Sampler, trials: usize, threads: usize, checks: &[Check]) -> Vec<IdentityReport> {
    let threads = threads.max(1);
    let mut reports: Vec<IdentityReport> = checks
        .iter()
        .map(|c| {
            let mut r = IdentityReport::new(c.name);
            r.trials = trials;
            r
        })
        .collect();
    // each worker handles a contiguous chunk of trial indices; failures carry
    // the trial index so the merged order is deterministic
    let chunk = trials.div_ceil(threads);
    let mut failures: Vec<(usize, usize, Vec<(String, String)>, String)> = std::thread::scope(|s| {
        let mut handles = Vec::new();
        for w in 0..threads {
            let lo = w * chunk;
            let hi = ((w + 1) * chunk).min(trials);
            let handle = s.spawn(move || {
                let mut local = Vec::new();
                for trial in lo..hi {
                    let base = trial as u64 * STREAMS_PER_TRIAL;
                    let args: Vec<FreePoly> =
                        (0..5).map(|k| sampler.poly(base + k)).collect();
                    for (ci, check) in checks.iter().enumerate() {
                        let r = (check.eval)(&args);
                        if !r.is_zero() {
                            let inputs = check
                                .vars
                                .iter()
                                .enumerate()
                                .map(|(vi, v)| (v.to_string(), args[vi].to_string()))
                                .collect();
                            local.push((trial, ci, inputs, r.to_string()));
                        }
                    }
                }
                local
            });
            handles.push(handle);
        }
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("trial worker panicked"))
            .collect()
    });
    failures.sort_by_key(|(trial, ci, _, _)| (*trial, *ci));
    for (_, ci, inputs, residual) in failures {
        reports[ci].record(inputs, residual);
    }
    reports
}

/// Checks the three defining identities (right commutativity, Jordan,
/// Hu-Liu) on random elements; one report per identity, residuals exact.
pub fn check_core_identities(sampler: &Sampler, trials: usize, threads: usize) -> Vec<IdentityReport> {
    const CHECKS: &[Check] = &[
        Check {
            name: "right_commutativity",
            vars: &["x", "y", "z"],
            eval: |a| residual_right_commutative(&a[0], &a[1], &a[2]),
        },
        Check {
            name: "jordan_identity",
            vars: &["x", "y"],
            eval: |a| residual_jordan(&a[0], &a[1]),
        },
        Check {
            name: "hu_liu_identity",
            vars: &["x", "y"],
            eval: |a| residual_hu_liu(&a[0], &a[1]),
        },
    ];
    run_trials(sampler, trials, threads, CHECKS)
}

/// Checks the derived consequences: vanishing of the long associator on
/// squares, its two linearizations, the multiplication-operator identities
/// evaluated pointwise, and the three operator forms of the long associator.
pub fn check_derived_identities(sampler: &Sampler, trials: usize, threads: usize) -> Vec<IdentityReport> {
    const CHECKS: &[Check] = &[
        Check {
            name: "long_assoc_square_vanishes",
            vars: &["x", "y"],
            eval: |a| long_associator(&a[0], &a[1], &bullet(&a[0], &a[0])),
        },
        Check {
            name: "long_assoc_linearized_pair",
            vars: &["x", "y", "z"],
            eval: |a| {
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                let s = &long_associator(x, y, &bullet(x, z)) + &long_associator(x, y, &bullet(z, x));
                &s + &long_associator(z, y, &bullet(x, x))
            },
        },
        Check {
            name: "long_assoc_linearized_full",
            vars: &["x", "y", "z", "w"],
            eval: |a| {
                let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
                let s1 = long_associator(x, y, &(&bullet(w, z) + &bullet(z, w)));
                let s2 = long_associator(w, y, &(&bullet(z, x) + &bullet(x, z)));
                let s3 = long_associator(z, y, &(&bullet(x, w) + &bullet(w, x)));
                &(&s1 + &s2) + &s3
            },
        },
        Check {
            name: "left_mult_right_exchange",
            vars: &["x", "y", "z", "w", "u"],
            eval: |a| {
                let (x, y, u) = (&a[0], &a[1], &a[4]);
                &bullet(x, &bullet(y, u)) - &bullet(x, &bullet(u, y))
            },
        },
        Check {
            name: "right_mult_anchor_flip",
            vars: &["x", "y", "z", "w", "u"],
            eval: |a| {
                let (x, y, u) = (&a[0], &a[1], &a[4]);
                &bullet(u, &bullet(x, y)) - &bullet(u, &bullet(y, x))
            },
        },
        Check {
            name: "right_mult_square_commutes",
            vars: &["x", "y", "z", "w", "u"],
            eval: |a| {
                let (x, u) = (&a[0], &a[4]);
                let xx = bullet(x, x);
                &bullet(&bullet(u, &xx), x) - &bullet(&bullet(u, x), &xx)
            },
        },
        Check {
            name: "mixed_mult_square_exchange",
            vars: &["x", "y", "z", "w", "u"],
            eval: |a| {
                let (x, u) = (&a[0], &a[4]);
                let two = rat(2);
                let xx = bullet(x, x);
                let lhs = &bullet(x, &bullet(u, &xx)) - &bullet(&bullet(x, u), &xx);
                let rhs =
                    &bullet(&xx, &bullet(u, x)).scale(&two) - &bullet(&bullet(&xx, u), x).scale(&two);
                &lhs - &rhs
            },
        },
        Check {
            name: "long_assoc_operator_forms",
            vars: &["x", "y", "z"],
            eval: |a| {
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                let two = rat(2);
                let la = long_associator(x, y, z);
                // (R_{y•z} - R_z R_y - 2 L_z L_y + 2 L_{z•y})(x)
                let f1 = {
                    let t = &MultOp::Right(bullet(y, z)).apply(x)
                        - &MultOp::Right(z.clone()).apply(&MultOp::Right(y.clone()).apply(x));
                    let u = &MultOp::Left(z.clone())
                        .apply(&MultOp::Left(y.clone()).apply(x))
                        .scale(&two)
                        - &MultOp::Left(bullet(z, y)).apply(x).scale(&two);
                    &t - &u
                };
                // (L_x R_z - R_z L_x - 2 L_z R_x + 2 R_x L_z)(y)
                let f2 = {
                    let l_x = MultOp::Left(x.clone());
                    let r_z = MultOp::Right(z.clone());
                    let l_z = MultOp::Left(z.clone());
                    let r_x = MultOp::Right(x.clone());
                    let t = &l_x.apply(&r_z.apply(y)) - &r_z.apply(&l_x.apply(y));
                    let u = &l_z.apply(&r_x.apply(y)).scale(&two) - &r_x.apply(&l_z.apply(y)).scale(&two);
                    &t - &u
                };
                // (L_x L_y - L_{x•y} - 2 R_{y•x} + 2 R_x R_y)(z)
                let f3 = {
                    let t = &MultOp::Left(x.clone()).apply(&MultOp::Left(y.clone()).apply(z))
                        - &MultOp::Left(bullet(x, y)).apply(z);
                    let u = &MultOp::Right(bullet(y, x)).apply(z).scale(&two)
                        - &MultOp::Right(x.clone())
                            .apply(&MultOp::Right(y.clone()).apply(z))
                            .scale(&two);
                    &t - &u
                };
                &(&(&f1 - &la) + &(&f2 - &la)) + &(&f3 - &la)
            },
        },
        Check {
            name: "operator_linearized_sum",
            vars: &["x", "y", "z", "w", "u"],
            eval: |a| {
                let (x, y, z, u) = (&a[0], &a[1], &a[2], &a[4]);
                operator_linearized_sum(x, y, z, u)
            },
        },
        Check {
            name: "operator_linearized_diag",
            vars: &["x", "y", "z", "w", "u"],
            eval: |a| {
                let (x, y, u) = (&a[0], &a[1], &a[4]);
                operator_linearized_diag(x, y, u)
            },
        },
    ];
    run_trials(sampler, trials, threads, CHECKS)
}

/// `(L_x L_y - L_{x•y} - 2 R_{y•x} + 2 R_x R_y)(v)`.
fn long_assoc_operator_third(x: &FreePoly, y: &FreePoly, v: &FreePoly) -> FreePoly {
    let two = rat(2);
    let t = &bullet(x, &bullet(y, v)) - &bullet(&bullet(x, y), v);
    let u = &bullet(v, &bullet(y, x)).scale(&two) - &bullet(&bullet(v, y), x).scale(&two);
    &t - &u
}

/// The linearized operator identity applied pointwise to `u`.
fn operator_linearized_sum(x: &FreePoly, y: &FreePoly, z: &FreePoly, u: &FreePoly) -> FreePoly {
    let two = rat(2);
    let s_z = &bullet(z, u) + &bullet(u, z);
    let s_x = &bullet(x, u) + &bullet(u, x);
    let part1 = long_assoc_operator_third(x, y, &s_z);
    let part3 = long_assoc_operator_third(z, y, &s_x);
    let zx = bullet(z, x);
    let mix = &zx + &bullet(x, z);
    let part2 = {
        let t1 = bullet(u, &bullet(y, &zx));
        let t2 = bullet(&bullet(u, y), &zx);
        let t3 = bullet(&mix, &bullet(y, u));
        let t4 = bullet(&bullet(&mix, y), u);
        (&(&t1 - &t2) + &(&t4 - &t3)).scale(&two)
    };
    &(&part1 + &part2) + &part3
}

/// The specialized operator identity applied pointwise to `u`.
fn operator_linearized_diag(x: &FreePoly, y: &FreePoly, u: &FreePoly) -> FreePoly {
    let two = rat(2);
    let xx = bullet(x, x);
    let s_x = &bullet(x, u) + &bullet(u, x);
    let part1 = long_assoc_operator_third(x, y, &s_x);
    let t1 = bullet(u, &bullet(&xx, y));
    let t2 = bullet(&bullet(u, y), &xx);
    let t3 = bullet(&xx, &bullet(y, u)).scale(&two);
    let t4 = bullet(&bullet(&xx, y), u).scale(&two);
    &part1 + &(&(&t1 - &t2) + &(&t4 - &t3))
}

/// Exhaustive substitution of all triples of distinct generator symbols,
/// sufficient for the multilinear identities.
pub fn check_core_identities_exhaustive(universe: &Universe) -> Vec<IdentityReport> {
    let gens: Vec<FreePoly> = universe.generators().map(FreePoly::generator).collect();
    let mut rc = IdentityReport::new("right_commutativity");
    let mut jordan = IdentityReport::new("jordan_identity");
    let mut hu_liu = IdentityReport::new("hu_liu_identity");
    let names: Vec<String> = universe.generators().map(|g| g.to_string()).collect();
    for (i, x) in gens.iter().enumerate() {
        for (j, y) in gens.iter().enumerate() {
            if j == i {
                continue;
            }
            jordan.trials += 1;
            let r = residual_jordan(x, y);
            if !r.is_zero() {
                jordan.record(
                    vec![("x".into(), names[i].clone()), ("y".into(), names[j].clone())],
                    r.to_string(),
                );
            }
            hu_liu.trials += 1;
            let r = residual_hu_liu(x, y);
            if !r.is_zero() {
                hu_liu.record(
                    vec![("x".into(), names[i].clone()), ("y".into(), names[j].clone())],
                    r.to_string(),
                );
            }
            for (k, z) in gens.iter().enumerate() {
                if k == i || k == j {
                    continue;
                }
                rc.trials += 1;
                let r = residual_right_commutative(x, y, z);
                if !r.is_zero() {
                    rc.record(
                        vec![
                            ("x".into(), names[i].clone()),
                            ("y".into(), names[j].clone()),
                            ("z".into(), names[k].clone()),
                        ],
                        r.to_string(),
                    );
                }
            }
        }
    }
    vec![rc, jordan, hu_liu]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{brace, word, Generator, Rational};
    use crate::report::all_pass;

    fn x(i: u16) -> Generator {
        Generator::even(i)
    }
    fn t(i: u16) -> Generator {
        Generator::odd(i)
    }

    #[test]
    fn bullet_examples() {
        // t1 • x1 = (t1 x1 + x1 t1)/2 = {t1, x1}
        let b = bullet(&FreePoly::generator(t(1)), &FreePoly::generator(x(1)));
        assert_eq!(b, brace(&[t(1), x(1)]));
        // x1 • t1 = 0: odd right operand has no even component
        assert!(bullet(&FreePoly::generator(x(1)), &FreePoly::generator(t(1))).is_zero());
    }

    #[test]
    fn right_unit() {
        let s = Sampler::new(Universe::new(2, 1), 2, 5);
        for k in 0..10 {
            let p = s.poly(k);
            assert_eq!(bullet(&p, &FreePoly::one()), p);
        }
    }

    #[test]
    fn left_unit_projects_to_even_part() {
        let s = Sampler::new(Universe::new(2, 1), 2, 6);
        for k in 0..10 {
            let p = s.poly(k);
            assert_eq!(bullet(&FreePoly::one(), &p), p.even_part());
        }
    }

    #[test]
    fn bullet_sees_only_even_right_component() {
        let s = Sampler::new(Universe::new(2, 1), 2, 7);
        for k in 0..5 {
            let p = s.poly(3 * k);
            let q = s.poly(3 * k + 1);
            let noise = s.poly(3 * k + 2).odd_part();
            let q_noisy = &q + &noise;
            assert_eq!(bullet(&p, &q), bullet(&p, &q_noisy));
        }
    }

    #[test]
    fn bullet_matches_naive_expansion() {
        // independent oracle: expand (p q0 + q0 p)/2 with raw word arithmetic
        fn naive(p: &FreePoly, q: &FreePoly) -> FreePoly {
            let mut out = FreePoly::zero();
            let half = Rational::new(1, 2);
            for (m1, c1) in p.terms() {
                for (m2, c2) in q.terms() {
                    if m2.theta_degree() > 0 {
                        continue;
                    }
                    let letters1: Vec<Generator> = m1.letters().collect();
                    let letters2: Vec<Generator> = m2.letters().collect();
                    let mut fwd = letters1.clone();
                    fwd.extend(&letters2);
                    let mut bwd = letters2.clone();
                    bwd.extend(&letters1);
                    out = &out + &word(&fwd).scale(&(c1 * c2 * &half));
                    out = &out + &word(&bwd).scale(&(c1 * c2 * &half));
                }
            }
            out
        }
        let s = Sampler::new(Universe::new(2, 2), 2, 9);
        for k in 0..8 {
            let p = s.poly(2 * k);
            let q = s.poly(2 * k + 1);
            assert_eq!(bullet(&p, &q), naive(&p, &q));
        }
    }

    #[test]
    fn bullet_homogeneity() {
        // products of monomials are homogeneous of the combined degree
        let u = word(&[x(1), t(1)]);
        let v = word(&[x(2), x(1)]);
        let b = bullet(&u, &v);
        assert!(b.is_homogeneous());
        assert_eq!(b.degree(), 4);
    }

    #[test]
    fn bullet_of_reversibles_is_reversible() {
        let p = brace(&[t(1), x(1), x(2)]);
        let q = brace(&[x(1), x(2)]);
        let b = bullet(&p, &q);
        assert!(b.is_reversible());
        assert_eq!(b.involute(), b);
    }

    #[test]
    fn long_associator_trivial_and_oracle() {
        let one = FreePoly::one();
        assert!(long_associator(&one, &one, &one).is_zero());
        // term-by-term expansion as an independent oracle
        let s = Sampler::new(Universe::new(2, 1), 2, 13);
        for k in 0..5 {
            let (a, b, c) = (s.poly(3 * k), s.poly(3 * k + 1), s.poly(3 * k + 2));
            let direct = {
                let two = rat(2);
                let t1 = bullet(&a, &bullet(&b, &c));
                let t2 = bullet(&bullet(&a, &b), &c);
                let t3 = bullet(&c, &bullet(&b, &a)).scale(&two);
                let t4 = bullet(&bullet(&c, &b), &a).scale(&two);
                &(&t1 - &t2) - &(&t3 - &t4)
            };
            assert_eq!(long_associator(&a, &b, &c), direct);
        }
    }

    #[test]
    fn long_associator_square_vanishes() {
        let s = Sampler::new(Universe::new(2, 1), 2, 17);
        for k in 0..5 {
            let (a, b) = (s.poly(2 * k), s.poly(2 * k + 1));
            assert!(long_associator(&a, &b, &bullet(&a, &a)).is_zero());
        }
    }

    #[test]
    fn mult_op_examples() {
        // left multiplication by the unit projects to the even part: 1•t1 = 0
        let l1 = MultOp::Left(FreePoly::one());
        assert!(l1.apply(&FreePoly::generator(t(1))).is_zero());
        // right multiplication by the unit is the identity map
        let r1 = MultOp::Right(FreePoly::one());
        let p = &word(&[x(1), t(1)]) + &FreePoly::generator(x(2));
        assert_eq!(r1.apply(&p), p);
        // S_a = L_a + R_a pointwise
        let a = brace(&[x(1), x(2)]);
        let s = MultOp::Sym(a.clone());
        assert_eq!(
            s.apply(&p),
            &MultOp::Left(a.clone()).apply(&p) + &MultOp::Right(a).apply(&p)
        );
    }

    #[test]
    fn left_mult_exchange_on_randoms() {
        let s = Sampler::new(Universe::new(2, 1), 2, 19);
        for k in 0..5 {
            let (a, b, c) = (s.poly(3 * k), s.poly(3 * k + 1), s.poly(3 * k + 2));
            assert_eq!(bullet(&a, &bullet(&b, &c)), bullet(&a, &bullet(&c, &b)));
        }
    }

    #[test]
    fn core_identities_pass() {
        let s = Sampler::new(Universe::new(2, 1), 2, 23);
        let reports = check_core_identities(&s, 12, 2);
        assert!(all_pass(&reports));
        assert!(reports.iter().all(|r| r.trials == 12));
    }

    #[test]
    fn core_identities_zero_inputs() {
        assert!(residual_right_commutative(&FreePoly::zero(), &FreePoly::zero(), &FreePoly::zero()).is_zero());
        assert!(residual_jordan(&FreePoly::zero(), &FreePoly::zero()).is_zero());
        assert!(residual_hu_liu(&FreePoly::zero(), &FreePoly::zero()).is_zero());
    }

    #[test]
    fn negative_control_commutativity_fails() {
        // the false identity x•y = y•x at x = t1, y = x1 leaves (t1x1+x1t1)/2
        let t1 = FreePoly::generator(t(1));
        let x1 = FreePoly::generator(x(1));
        let residual = &bullet(&t1, &x1) - &bullet(&x1, &t1);
        assert_eq!(residual, brace(&[t(1), x(1)]));
        assert!(!residual.is_zero());
    }

    #[test]
    fn derived_identities_pass() {
        let s = Sampler::new(Universe::new(2, 1), 2, 29);
        let reports = check_derived_identities(&s, 6, 2);
        assert!(all_pass(&reports));
    }

    #[test]
    fn linearized_pair_specializes_to_square_case() {
        // substituting z = x turns the pairwise linearization into three
        // copies of the square case
        let s = Sampler::new(Universe::new(2, 1), 2, 31);
        for k in 0..4 {
            let (a, b) = (s.poly(2 * k), s.poly(2 * k + 1));
            let lhs = {
                let s1 = &long_associator(&a, &b, &bullet(&a, &a))
                    + &long_associator(&a, &b, &bullet(&a, &a));
                &s1 + &long_associator(&a, &b, &bullet(&a, &a))
            };
            let direct = long_associator(&a, &b, &bullet(&a, &a)).scale(&rat(3));
            assert_eq!(lhs, direct);
            assert!(lhs.is_zero());
        }
    }

    #[test]
    fn exhaustive_generator_mode_passes() {
        let reports = check_core_identities_exhaustive(&Universe::new(3, 1));
        assert!(all_pass(&reports));
        // 4 generators: 4*3*2 ordered distinct triples
        assert_eq!(reports[0].trials, 24);
    }

    #[test]
    fn sampler_is_deterministic() {
        let s1 = Sampler::new(Universe::new(3, 2), 2, 7);
        let s2 = Sampler::new(Universe::new(3, 2), 2, 7);
        assert_eq!(s1.poly(0), s2.poly(0));
        assert_eq!(s1.poly(41), s2.poly(41));
        assert_ne!(s1.poly(0), s1.poly(1));
    }

    #[test]
    fn annihilator_of_free_algebra_is_odd_part() {
        // commutator differences stay inside the odd part, and every odd
        // generator appears: t = t•1 - 1•t
        let s = Sampler::new(Universe::new(2, 1), 2, 37);
        for k in 0..5 {
            let (p, q) = (s.poly(2 * k), s.poly(2 * k + 1));
            let d = &bullet(&p, &q) - &bullet(&q, &p);
            assert_eq!(d.even_part(), FreePoly::zero());
        }
        let t1 = FreePoly::generator(t(1));
        let d = &bullet(&t1, &FreePoly::one()) - &bullet(&FreePoly::one(), &t1);
        assert_eq!(d, t1);
    }
}
