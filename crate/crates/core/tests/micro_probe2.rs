use std::time::Instant;

use gjalg::freealg::rat;
use gjalg::gja::{bullet, Sampler};
use gjalg::Universe;

#[test]
#[ignore]
fn probe_identity_parts() {
    let s = Sampler::new(Universe::new(3, 2), 2, 7);
    let x = s.poly(0);
    let y = s.poly(1);
    let z = s.poly(2);

    let start = Instant::now();
    let xx = bullet(&x, &x);
    println!("xx ({} terms): {:?}", xx.num_terms(), start.elapsed());

    let start = Instant::now();
    let yx = bullet(&y, &x);
    println!("yx ({} terms): {:?}", yx.num_terms(), start.elapsed());

    let start = Instant::now();
    let a = bullet(&yx, &xx);
    println!("(yx)xx ({} terms): {:?}", a.num_terms(), start.elapsed());

    let start = Instant::now();
    let yxx = bullet(&y, &xx);
    println!("y(xx) ({} terms): {:?}", yxx.num_terms(), start.elapsed());

    let start = Instant::now();
    let b = bullet(&yxx, &x);
    println!("(y(xx))x ({} terms): {:?}", b.num_terms(), start.elapsed());

    let start = Instant::now();
    let r = &a - &b;
    println!("sub ({} terms): {:?}", r.num_terms(), start.elapsed());

    let start = Instant::now();
    let _s = r.to_string();
    println!("to_string: {:?}", start.elapsed());

    let start = Instant::now();
    let w = &bullet(&y, &z) - &bullet(&z, &y);
    let rc = bullet(&x, &w);
    println!("rc part ({} terms): {:?}", rc.num_terms(), start.elapsed());

    let start = Instant::now();
    let big = bullet(&xx, &yx);
    println!("xx(yx) ({} terms): {:?}", big.num_terms(), start.elapsed());

    let start = Instant::now();
    let _e = big.even_part();
    println!("even_part of big: {:?}", start.elapsed());

    let start = Instant::now();
    let _sc = big.scale(&rat(2));
    println!("scale of big: {:?}", start.elapsed());
}
