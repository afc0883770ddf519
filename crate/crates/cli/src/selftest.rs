//! Small-scale run of the library's invariant suite.

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use gdet::{
    achieve, classify, det_oracle, det_via_reduction, factor_profile, families,
    family_element, family_value, EisensteinInt, GroupId, GroupRingElement,
};

type Suite = fn() -> Result<(), String>;

pub fn run() -> Result<(), String> {
    let suites: &[(&str, Suite)] = &[
        ("group-tables", group_tables),
        ("eisenstein-ring", eisenstein_ring),
        ("family-round-trips", family_round_trips),
        ("three-way-agreement", three_way_agreement),
        ("swap-antisymmetry", swap_antisymmetry),
        ("classify-achieve-window", classify_achieve_window),
    ];
    let mut failed = 0;
    for (name, suite) in suites {
        match suite() {
            Ok(()) => println!("PASS {name}"),
            Err(msg) => {
                println!("FAIL {name}: {msg}");
                failed += 1;
            }
        }
    }
    if failed == 0 {
        println!("selftest: all {} suites passed", suites.len());
        Ok(())
    } else {
        Err(format!("selftest: {failed} suite(s) failed"))
    }
}

fn check(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn group_tables() -> Result<(), String> {
    for id in GroupId::ALL {
        let t = id.table();
        for a in 0..18 {
            check(t.mul(0, a) == a && t.mul(a, 0) == a, "identity law")?;
            check(t.mul(a, t.inv(a)) == 0, "inverse law")?;
            for b in 0..18 {
                for c in 0..18 {
                    check(
                        t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c)),
                        &format!("associativity in {id}"),
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn eisenstein_ring() -> Result<(), String> {
    let w = EisensteinInt::omega();
    let w2 = &w * &w;
    check(&w2 * &w == EisensteinInt::one(), "omega cubed")?;
    check((&(&EisensteinInt::one() + &w) + &w2).is_zero(), "1+w+w^2")?;
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..2_000 {
        let x = EisensteinInt::new(rng.gen_range(-50i64..=50), rng.gen_range(-50i64..=50));
        let y = EisensteinInt::new(rng.gen_range(-50i64..=50), rng.gen_range(-50i64..=50));
        check((&x * &y).norm() == x.norm() * y.norm(), "norm multiplicativity")?;
        check((&x * &x.conj()).b == BigInt::from(0), "z*conj(z) real")?;
    }
    Ok(())
}

fn family_round_trips() -> Result<(), String> {
    for g in [GroupId::G18_4, GroupId::Z3xD6] {
        let t = g.table();
        for fam in families(g).map_err(|e| e.to_string())? {
            for m in -3..=3i64 {
                let m = BigInt::from(m);
                let e = family_element(&t, fam.id, &m).map_err(|e| e.to_string())?;
                let d = det_via_reduction(&t, &e);
                let want = family_value(g, fam.id, &m).map_err(|e| e.to_string())?;
                check(d == want, &format!("{g} family {} at m={m}: {d} != {want}", fam.id))?;
            }
        }
    }
    Ok(())
}

fn three_way_agreement() -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(77);
    for g in [GroupId::G18_4, GroupId::Z3xD6] {
        let t = g.table();
        for _ in 0..200 {
            let c: Vec<i64> = (0..18).map(|_| rng.gen_range(-3..=3)).collect();
            let e = GroupRingElement::from_i64(&t, &c).unwrap();
            let oracle = det_oracle(&t, &e);
            check(det_via_reduction(&t, &e) == oracle, "reduction path")?;
            let p = factor_profile(&t, &e).map_err(|e| e.to_string())?;
            check(p.product() == oracle, "profile path")?;
        }
    }
    let t = GroupId::D18.table();
    for _ in 0..200 {
        let c: Vec<i64> = (0..18).map(|_| rng.gen_range(-3..=3)).collect();
        let e = GroupRingElement::from_i64(&t, &c).unwrap();
        check(det_via_reduction(&t, &e) == det_oracle(&t, &e), "d18 reduction path")?;
    }
    Ok(())
}

fn swap_antisymmetry() -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(5);
    for g in [GroupId::G18_4, GroupId::Z3xD6] {
        let t = g.table();
        for _ in 0..100 {
            let c: Vec<i64> = (0..18).map(|_| rng.gen_range(-3..=3)).collect();
            let e = GroupRingElement::from_i64(&t, &c).unwrap();
            check(
                det_via_reduction(&t, &e.swap_blocks()) == -det_via_reduction(&t, &e),
                "swap negates determinant",
            )?;
        }
    }
    Ok(())
}

fn classify_achieve_window() -> Result<(), String> {
    for g in [GroupId::G18_4, GroupId::Z3xD6] {
        let t = g.table();
        for d in -3_000..=3_000i64 {
            let d = BigInt::from(d);
            let form = classify(&d, g);
            if form.is_member() {
                let w = achieve(&t, &d).map_err(|e| e.to_string())?;
                check(
                    det_via_reduction(&t, &w) == d,
                    &format!("witness for {d} on {g}"),
                )?;
            } else {
                check(achieve(&t, &d).is_err(), "achieve must reject non-members")?;
            }
        }
    }
    Ok(())
}
