//! The congruence ladder supporting the generalized Cohn theorem.
//!
//! Each step asserts that a signed combination of braces lies in the
//! tetrad-generated subalgebra. The membership targets for word length m+1
//! live at degree m+1, so a closure capped there suffices; the product
//! expansion identity is exact and needs no cap at all.

use rand::seq::SliceRandom;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::freealg::{brace, rat, FreePoly, Generator, Universe};
use crate::gja::bullet;
use crate::report::IdentityReport;

use super::spanbasis::{CohnError, SpanBasis};
use super::{closure, cohn_generators};

/// Expands `8 {x_1,…,x_n, θ, x_{n+1},…,x_{n+h}} • {x_{n+h+1},…,x_m}` minus
/// twice the four braces of its word expansion and returns the residual,
/// which is exactly zero. Valid for `0 <= h < m - n`; repeated letters are
/// allowed since the identity is multilinear in the positions.
pub fn identity15_exact(
    n: usize,
    h: usize,
    letters: &[Generator],
    theta: Generator,
) -> Result<FreePoly, CohnError> {
    let m = letters.len();
    if m == 0 || n + h >= m {
        return Err(CohnError::InvalidIndices { n, h, m });
    }
    let prefix = &letters[..n];
    let mid = &letters[n..n + h];
    let tail = &letters[n + h..];

    let mixed: Vec<Generator> = prefix
        .iter()
        .chain(std::iter::once(&theta))
        .chain(mid.iter())
        .copied()
        .collect();
    let lhs = bullet(&brace(&mixed), &brace(tail)).scale(&rat(8));

    let rev = |s: &[Generator]| -> Vec<Generator> { s.iter().rev().copied().collect() };
    let seq = |a: &[Generator], b: &[Generator], c: &[Generator]| -> Vec<Generator> {
        a.iter()
            .chain(std::iter::once(&theta))
            .chain(b.iter())
            .chain(c.iter())
            .copied()
            .collect()
    };
    let s1 = seq(prefix, mid, tail);
    let s2 = seq(prefix, mid, &rev(tail));
    let s3 = seq(&rev(mid), &rev(prefix), tail);
    let s4 = seq(&rev(mid), &rev(prefix), &rev(tail));
    let rhs = (&(&brace(&s1) + &brace(&s2)) + &(&brace(&s3) + &brace(&s4))).scale(&rat(2));
    Ok(&lhs - &rhs)
}

/// Tuning for the permutation-sign checks.
#[derive(Clone, Copy, Debug)]
pub struct CongruenceOptions {
    /// Random permutations tested per word length, besides the transposition
    /// and the long cycle.
    pub random_perms: usize,
    pub seed: u64,
}

impl Default for CongruenceOptions {
    fn default() -> Self {
        CongruenceOptions {
            random_perms: 20,
            seed: 0,
        }
    }
}

fn perm_sign(perm: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Runs the congruence ladder for each word parameter in `m_values`,
/// computing the tetrad closure internally at the needed cap.
pub fn congruence_suite(
    universe: &Universe,
    m_values: &[usize],
    opts: CongruenceOptions,
) -> Result<Vec<IdentityReport>, CohnError> {
    let max_m = m_values.iter().copied().max().unwrap_or(0);
    let span = closure(&cohn_generators(universe, max_m + 1), max_m + 1);
    congruence_suite_with_closure(&span, universe, m_values, opts)
}

/// As [`congruence_suite`], but reusing an already-computed closure whose cap
/// covers every tested word length.
pub fn congruence_suite_with_closure(
    span: &SpanBasis,
    universe: &Universe,
    m_values: &[usize],
    opts: CongruenceOptions,
) -> Result<Vec<IdentityReport>, CohnError> {
    let max_m = m_values.iter().copied().max().unwrap_or(0);
    if usize::from(universe.num_even()) < max_m {
        return Err(CohnError::InsufficientGenerators {
            needed: max_m,
            have: universe.num_even().into(),
        });
    }
    if universe.num_odd() == 0 {
        return Err(CohnError::InsufficientGenerators { needed: 1, have: 0 });
    }
    if span.cap() < max_m + 1 {
        return Err(CohnError::DegreeExceedsCap {
            degree: max_m + 1,
            cap: span.cap(),
        });
    }

    let mut suite = Suite {
        span,
        reports: Vec::new(),
    };
    let theta = Generator::odd(1);

    for &m in m_values {
        let xs: Vec<Generator> = (1..=m as u16).map(Generator::even).collect();
        let rev = |s: &[Generator]| -> Vec<Generator> { s.iter().rev().copied().collect() };
        // the mixed brace {x_1,…,x_n, θ, x_{n+1},…,x_m}
        let mixed = |n: usize| -> Vec<Generator> {
            xs[..n]
                .iter()
                .chain(std::iter::once(&theta))
                .chain(xs[n..].iter())
                .copied()
                .collect()
        };
        let theta_brace = brace(&mixed(0));
        let ctx = format!("m={m}");

        // product expansion: the four-brace sum is 4 (mixed • even), a member
        for n in 0..m {
            for h in 0..m - n {
                let prefix = &xs[..n];
                let mid = &xs[n..n + h];
                let tail = &xs[n + h..];
                let seq = |a: &[Generator], b: &[Generator], c: &[Generator]| -> Vec<Generator> {
                    a.iter()
                        .chain(std::iter::once(&theta))
                        .chain(b.iter())
                        .chain(c.iter())
                        .copied()
                        .collect()
                };
                let sum = &(&brace(&seq(prefix, mid, tail)) + &brace(&seq(prefix, mid, &rev(tail))))
                    + &(&brace(&seq(&rev(mid), &rev(prefix), tail))
                        + &brace(&seq(&rev(mid), &rev(prefix), &rev(tail))));
                suite.check(
                    "product_expansion_congruence",
                    format!("{ctx}, n={n}, h={h}"),
                    &sum,
                )?;
            }
        }

        // reversing the even letters flips the sign
        {
            let mut rseq = vec![theta];
            rseq.extend(rev(&xs));
            suite.check(
                "reversal_sign_flip",
                ctx.clone(),
                &(&theta_brace + &brace(&rseq)),
            )?;
        }

        // pulling the last letter to the front flips the sign
        for n in 0..m {
            let a = brace(&mixed(n));
            let mut s1: Vec<Generator> = rev(&xs[n..m - 1]);
            s1.push(theta);
            s1.extend(rev(&xs[..n]));
            s1.push(xs[m - 1]);
            suite.check(
                "front_rotation_sign",
                format!("{ctx}, n={n}"),
                &(&a + &brace(&s1)),
            )?;
            let mut s2: Vec<Generator> = vec![xs[m - 1]];
            s2.extend(&xs[..n]);
            s2.push(theta);
            s2.extend(&xs[n..m - 1]);
            suite.check(
                "front_rotation_sign",
                format!("{ctx}, n={n}, rotated"),
                &(&a + &brace(&s2)),
            )?;
        }

        // iterating the rotation: sign (-1)^(m-n) with the tail cycled ahead
        for n in 0..=m {
            let a = brace(&mixed(n));
            let mut s: Vec<Generator> = xs[n..].to_vec();
            s.extend(&xs[..n]);
            s.push(theta);
            let sign = if (m - n) % 2 == 0 { rat(1) } else { rat(-1) };
            suite.check(
                "cycle_power_sign",
                format!("{ctx}, n={n}"),
                &(&a - &brace(&s).scale(&sign)),
            )?;
        }

        // normal form with theta in front: sign (-1)^(m-n)
        for n in 0..=m {
            let a = brace(&mixed(n));
            let mut s: Vec<Generator> = vec![theta];
            s.extend(rev(&xs[..n]));
            s.extend(rev(&xs[n..]));
            let sign = if (m - n) % 2 == 0 { rat(1) } else { rat(-1) };
            suite.check(
                "theta_front_normal_form",
                format!("{ctx}, n={n}"),
                &(&a - &brace(&s).scale(&sign)),
            )?;
        }

        // the brace equals (-1)^(m+1) times itself: for even m it is a member
        for n in 0..=m {
            let a = brace(&mixed(n));
            let sign = if (m + 1) % 2 == 0 { rat(1) } else { rat(-1) };
            suite.check(
                "self_sign_consistency",
                format!("{ctx}, n={n}"),
                &(&a - &a.scale(&sign)),
            )?;
        }

        if m >= 2 {
            // swapping the last two letters inside the four-brace expansion
            let mut s2: Vec<Generator> = vec![theta];
            s2.extend(&xs[..m - 2]);
            s2.push(xs[m - 1]);
            s2.push(xs[m - 2]);
            let mut s3: Vec<Generator> = rev(&xs[..m - 2]);
            s3.push(theta);
            s3.push(xs[m - 2]);
            s3.push(xs[m - 1]);
            let mut s4: Vec<Generator> = rev(&xs[..m - 2]);
            s4.push(theta);
            s4.push(xs[m - 1]);
            s4.push(xs[m - 2]);
            let sum = &(&theta_brace + &brace(&s2)) + &(&brace(&s3) + &brace(&s4));
            suite.check("tail_shuffle_congruence", ctx.clone(), &sum)?;

            // the transposition of the last two letters flips the sign
            suite.check(
                "last_transposition_sign",
                ctx.clone(),
                &(&theta_brace + &brace(&s2)),
            )?;
        }

        // moving theta from front to back flips the sign
        {
            let mut s: Vec<Generator> = xs.clone();
            s.push(theta);
            suite.check("theta_to_end_sign", ctx.clone(), &(&theta_brace + &brace(&s)))?;
        }

        // the full sign rule over the symmetric group on {θ, x_1,…,x_m}
        {
            let symbols: Vec<Generator> = std::iter::once(theta).chain(xs.iter().copied()).collect();
            let mut perms: Vec<(String, Vec<usize>)> = Vec::new();
            if m >= 2 {
                let mut tr: Vec<usize> = (0..=m).collect();
                tr.swap(m - 1, m);
                perms.push(("transposition".into(), tr));
            }
            let mut cycle: Vec<usize> = (1..=m).collect();
            cycle.push(0);
            perms.push(("long cycle".into(), cycle));
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(m as u64);
            for k in 0..opts.random_perms {
                let mut p: Vec<usize> = (0..=m).collect();
                p.shuffle(&mut rng);
                perms.push((format!("random #{k}"), p));
            }
            for (label, perm) in perms {
                let permuted: Vec<Generator> = perm.iter().map(|&i| symbols[i]).collect();
                let sign = rat(perm_sign(&perm));
                suite.check(
                    "permutation_sign_rule",
                    format!("{ctx}, {label}"),
                    &(&theta_brace - &brace(&permuted).scale(&sign)),
                )?;
            }
        }

        // the closing step: four times the theta brace is a member
        suite.check(
            "theta_brace_membership",
            ctx.clone(),
            &theta_brace.scale(&rat(4)),
        )?;
    }

    Ok(suite.reports)
}

struct Suite<'a> {
    span: &'a SpanBasis,
    reports: Vec<IdentityReport>,
}

// reports keyed by name, appended in first-use order so output is stable

impl Suite<'_> {
    fn check(&mut self, name: &str, context: String, target: &FreePoly) -> Result<(), CohnError> {
        let ok = self.span.membership(target)?;
        let report = match self.reports.iter_mut().find(|r| r.name == name) {
            Some(r) => r,
            None => {
                self.reports.push(IdentityReport::new(name));
                self.reports.last_mut().expect("just pushed")
            }
        };
        report.trials += 1;
        if !ok {
            let residual = self.span.reduce(target);
            report.record(vec![("case".into(), context)], residual.to_string());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::word;
    use crate::report::all_pass;

    fn x(i: u16) -> Generator {
        Generator::even(i)
    }
    fn t(i: u16) -> Generator {
        Generator::odd(i)
    }

    #[test]
    fn identity15_base_case() {
        // 8 ({t1} • {x1}) = 8 {t1, x1}: both sides equal 4(t1 x1 + x1 t1)
        let r = identity15_exact(0, 0, &[x(1)], t(1)).unwrap();
        assert!(r.is_zero());
        let lhs = bullet(&brace(&[t(1)]), &brace(&[x(1)])).scale(&rat(8));
        let direct = (&word(&[t(1), x(1)]) + &word(&[x(1), t(1)])).scale(&rat(4));
        assert_eq!(lhs, direct);
    }

    #[test]
    fn identity15_all_small_cases() {
        for m in 1..=3usize {
            let letters: Vec<Generator> = (1..=m as u16).map(x).collect();
            for n in 0..m {
                for h in 0..m - n {
                    let r = identity15_exact(n, h, &letters, t(1)).unwrap();
                    assert!(r.is_zero(), "residual nonzero at n={n}, h={h}, m={m}");
                }
            }
        }
    }

    #[test]
    fn identity15_repeated_letters() {
        let r = identity15_exact(1, 0, &[x(1), x(1)], t(1)).unwrap();
        assert!(r.is_zero());
        let r = identity15_exact(0, 1, &[x(2), x(2), x(1)], t(1)).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn identity15_invalid_indices() {
        assert!(identity15_exact(0, 0, &[], t(1)).is_err());
        assert!(identity15_exact(1, 1, &[x(1), x(2)], t(1)).is_err());
        assert!(identity15_exact(2, 0, &[x(1), x(2)], t(1)).is_err());
    }

    #[test]
    fn perm_sign_basics() {
        assert_eq!(perm_sign(&[0, 1, 2]), 1);
        assert_eq!(perm_sign(&[1, 0, 2]), -1);
        assert_eq!(perm_sign(&[1, 2, 0]), 1);
        assert_eq!(perm_sign(&[2, 1, 0]), -1);
    }

    #[test]
    fn congruence_suite_small() {
        let u = Universe::new(3, 1);
        let reports = congruence_suite(
            &u,
            &[3],
            CongruenceOptions {
                random_perms: 5,
                seed: 7,
            },
        )
        .unwrap();
        assert!(all_pass(&reports), "failing reports: {reports:?}");
        assert!(reports.iter().any(|r| r.name == "permutation_sign_rule"));
    }

    #[test]
    fn congruence_specific_examples() {
        // {t1,x1,x2,x3} + {t1,x3,x2,x1} and the transposed variant are members
        let u = Universe::new(3, 1);
        let span = closure(&cohn_generators(&u, 4), 4);
        let a = brace(&[t(1), x(1), x(2), x(3)]);
        let b = brace(&[t(1), x(3), x(2), x(1)]);
        assert_eq!(span.membership(&(&a + &b)), Ok(true));
        let c = brace(&[t(1), x(2), x(1), x(3)]);
        assert_eq!(span.membership(&(&a + &c)), Ok(true));
        // for even word count the brace itself is a member
        let u4 = Universe::new(4, 1);
        let span4 = closure(&cohn_generators(&u4, 5), 5);
        let even_brace = brace(&[t(1), x(1), x(2), x(3), x(4)]).scale(&rat(2));
        assert_eq!(span4.membership(&even_brace), Ok(true));
    }

    #[test]
    fn congruence_requires_enough_generators() {
        let u = Universe::new(2, 1);
        assert!(matches!(
            congruence_suite(&u, &[3], CongruenceOptions::default()),
            Err(CohnError::InsufficientGenerators { .. })
        ));
    }
}
