// Temporary probe for timings and values on the larger rings.

use std::time::Instant;
use torsion_core::*;

fn ring(defs: &[&str], vars: &[&str]) -> RingDescriptor {
    let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    let f = PrimeField::new(32003).unwrap();
    let ideal = defs
        .iter()
        .map(|s| Polynomial::parse(s, &vars, &f).unwrap())
        .collect();
    RingDescriptor::new(32003, vars, ideal).unwrap()
}

#[test]
fn probe() {
    let t0 = Instant::now();
    let r3 = ring(&["x*y", "x*z"], &["x", "y", "z"]);
    let p3 = ring_profile(&r3);
    println!("R3 profile: {:?} ({:?})", p3, t0.elapsed());

    let t0 = Instant::now();
    let r4 = ring(&["x^2", "x*y", "y^2*z"], &["x", "y", "z"]);
    let p4 = ring_profile(&r4);
    println!("R4 profile: {:?} ({:?})", p4, t0.elapsed());

    let t0 = Instant::now();
    let r6 = ring(&["x^2", "y^2", "y*z", "z^2*w"], &["x", "y", "z", "w"]);
    let p6 = ring_profile(&r6);
    println!("R6 profile: {:?} ({:?})", p6, t0.elapsed());

    let t0 = Instant::now();
    let k3 = residue_field(&r3);
    let b = betti_table(&resolve(&k3, 4));
    println!("R3 betti k: {:?} ({:?})", b.totals(), t0.elapsed());

    let t0 = Instant::now();
    let om1 = syzygy(&k3, 1);
    let v = tf_index(&om1, 4);
    println!("R3 tf(omega^1 k, cap4): {:?} {:?} ({:?})", v.index, v.witness, t0.elapsed());

    let t0 = Instant::now();
    let om2 = syzygy(&k3, 2);
    let v = tf_index(&om2, 4);
    println!("R3 tf(omega^2 k, cap4): {:?} {:?} ({:?})", v.index, v.witness, t0.elapsed());

    let t0 = Instant::now();
    let v = syzygy_order(&syzygy(&k3, 1), 3);
    println!("R3 syzygy_order(omega^1 k, 3): {:?} ({:?})", v.order, t0.elapsed());

    let t0 = Instant::now();
    let x6 = r6.parse_poly("x").unwrap();
    let w = cyclic_quotient(&r6, &[x6]);
    let g = gab_membership(&w, 4, 4);
    println!("R6/(x) gab(4,4): {} ({:?})", g, t0.elapsed());

    let t0 = Instant::now();
    let k6 = residue_field(&r6);
    let b6 = betti_table(&resolve(&k6, 4));
    println!("R6 betti k: {:?} ({:?})", b6.totals(), t0.elapsed());

    let t0 = Instant::now();
    let k6tt = totally_reflexive_up_to(&residue_field(&r6), 4);
    println!("R6 k ttr4: {} ({:?})", k6tt, t0.elapsed());
}
