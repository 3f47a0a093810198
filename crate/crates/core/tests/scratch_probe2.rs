// Temporary probe: acceptance-shaped workloads on the two largest rings.

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
fn probe2() {
    for (name, r, t) in [
        ("R4", ring(&["x^2", "x*y", "y^2*z"], &["x", "y", "z"]), 1usize),
        ("R6", ring(&["x^2", "y^2", "y*z", "z^2*w"], &["x", "y", "z", "w"]), 1usize),
    ] {
        let k = residue_field(&r);
        // criterion 2 shape: tf_index(syz^n k, t+2) for n = 0..=t+3
        for n in 0..=(t + 3) {
            let t0 = Instant::now();
            let om = syzygy(&k, n);
            let v = tf_index(&om, t + 2);
            println!(
                "{name} tf(syz^{n} k, {}): {:?} witness {:?}  [{:?}]",
                t + 2,
                v.index,
                v.witness,
                t0.elapsed()
            );
        }
        // criterion 3 shape
        let t0 = Instant::now();
        let omt = syzygy(&k, t);
        let v = syzygy_order(&omt, t + 2);
        println!("{name} syzygy_order(syz^{t} k, {}): {:?}  [{:?}]", t + 2, v.order, t0.elapsed());
        let t0 = Instant::now();
        let p = ring_profile(&r);
        let block = direct_power(&omt, p.cm_type);
        let v = syzygy_order(&block, t + 2);
        println!(
            "{name} syzygy_order((syz^{t} k)^{}, {}): {:?}  [{:?}]",
            p.cm_type,
            t + 2,
            v.order,
            t0.elapsed()
        );
    }
}
