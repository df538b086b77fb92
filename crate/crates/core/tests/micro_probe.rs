use std::collections::BTreeMap;
use std::time::Instant;

use gjalg::freealg::{rat, Monomial, Rational};
use gjalg::gja::{bullet, Sampler};
use gjalg::Universe;

#[test]
#[ignore]
fn probe_parts() {
    let s = Sampler::new(Universe::new(3, 2), 2, 7);
    let x = s.poly(0);
    let y = s.poly(1);

    // one heavy product pattern: (x•y)•(x•x)
    let xy = bullet(&x, &y);
    let xx = bullet(&x, &x);
    println!("|x|={} |xy|={} |xx|={}", x.num_terms(), xy.num_terms(), xx.num_terms());
    let start = Instant::now();
    for _ in 0..20 {
        let _ = bullet(&xy, &xx);
    }
    println!("20x bullet(350x150-ish): {:?}", start.elapsed());

    // raw BigRational multiply-add loop for comparison
    let a = Rational::new(3.into(), 2.into());
    let b = Rational::new((-5).into(), 4.into());
    let start = Instant::now();
    let mut acc = rat(0);
    for _ in 0..1_000_000 {
        acc += &a * &b;
    }
    println!("1M bigrational mul+add: {:?} ({acc})", start.elapsed());

    // BTreeMap insert loop with monomial keys
    let monos: Vec<Monomial> = Universe::new(3, 2).monomials_up_to(4);
    println!("monos: {}", monos.len());
    let start = Instant::now();
    let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
    for _ in 0..10 {
        for m in &monos {
            *map.entry(m.clone()).or_insert_with(|| rat(0)) += &a;
        }
    }
    println!(
        "10x {} btreemap entry+add: {:?}",
        monos.len(),
        start.elapsed()
    );
}
