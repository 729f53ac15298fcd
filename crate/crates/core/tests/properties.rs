use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use cayley_pst::cayley::{enumerate_oriented_class_unions, make_connection_set, spectrum, OrientedCayleyGraph};
use cayley_pst::group::{subgroup_closure, GroupSpec};
use cayley_pst::pst::{check_pst_at, compute_s_e, nonexistence_witness, oracle_for, solve_pst_time};
use cayley_pst::{GroupContext, RunConfig};

const SPECS: &[&str] = &["z:6", "z:8", "z3^2", "z4^2", "extraspecial3:1", "extraspecial3:1:9", "m2:5", "wreath:2:z:3", "z:7"];

fn contexts() -> &'static Vec<GroupContext> {
    static CTX: OnceLock<Vec<GroupContext>> = OnceLock::new();
    CTX.get_or_init(|| {
        SPECS
            .iter()
            .map(|s| GroupContext::from_spec(&s.parse::<GroupSpec>().unwrap(), &RunConfig::default()).unwrap())
            .collect()
    })
}

/// Oriented class union from a bitmask over the `{C, C^-1}` pairs: bit pair
/// `(2i, 2i+1)` picks nothing, `C` or `C^-1`.
fn union_from_mask(ctx: &GroupContext, mask: u64) -> Vec<usize> {
    let pairs: Vec<(usize, usize)> = (1..ctx.conj.num_classes())
        .filter(|&j| j < ctx.conj.class_inv(j))
        .map(|j| (j, ctx.conj.class_inv(j)))
        .collect();
    let mut out = Vec::new();
    for (i, (c, ci)) in pairs.iter().enumerate() {
        match (mask >> (2 * (i % 32))) & 3 {
            1 => out.push(*c),
            2 => out.push(*ci),
            _ => {}
        }
    }
    if out.is_empty() {
        out.push(pairs[0].0);
    }
    out
}

fn cfg() -> RunConfig {
    RunConfig::default()
}

#[test]
fn group_axioms_and_center_count() {
    for ctx in contexts() {
        let g = &ctx.group;
        let n = g.order();
        for a in 0..n {
            let row: BTreeSet<usize> = (0..n).map(|b| g.mul(a, b)).collect();
            let col: BTreeSet<usize> = (0..n).map(|b| g.mul(b, a)).collect();
            assert_eq!(row.len(), n, "{} row {a}", g.tag());
            assert_eq!(col.len(), n);
            assert_eq!(g.mul(a, g.inv(a)), g.identity());
            assert_eq!(g.mul(g.identity(), a), a);
        }
        let noncentral: usize = (0..ctx.conj.num_classes())
            .filter(|&j| ctx.conj.class_size(j) > 1)
            .map(|j| ctx.conj.class_size(j))
            .sum();
        assert_eq!(ctx.conj.center().len() + noncentral, n);
        for j in 0..ctx.conj.num_classes() {
            for &x in ctx.conj.class(j) {
                for h in 0..n {
                    assert_eq!(ctx.conj.class_of(g.conjugate(x, h)), j);
                }
            }
        }
    }
}

#[test]
fn oriented_validator_matches_element_check() {
    for ctx in contexts() {
        let r = ctx.conj.num_classes();
        if r > 16 {
            continue;
        }
        for mask in 1u32..(1 << r) {
            let classes: Vec<usize> = (0..r).filter(|j| mask >> j & 1 == 1).collect();
            let elements: BTreeSet<usize> = classes.iter().flat_map(|&j| ctx.conj.class(j).iter().copied()).collect();
            let brute = elements.iter().all(|&x| !elements.contains(&ctx.group.inv(x)));
            assert_eq!(make_connection_set(&ctx.conj, &classes).is_ok(), brute, "{} {classes:?}", ctx.group.tag());
        }
    }
}

#[test]
fn witness_soundness_by_sweep() {
    for spec in ["z:6", "z:8", "z4^2", "z3^2", "z:12"] {
        let ctx = GroupContext::from_spec(&spec.parse().unwrap(), &cfg()).unwrap();
        let galois = ctx.galois().unwrap();
        let e = ctx.group.identity();
        let witnessed: Vec<usize> = ctx
            .conj
            .center()
            .iter()
            .copied()
            .filter(|&z| z != e && nonexistence_witness(&ctx.conj, &ctx.table, &galois, z).unwrap().is_some())
            .collect();
        for cs in enumerate_oriented_class_unions(&ctx.conj, ctx.conj.num_classes()) {
            let graph = OrientedCayleyGraph::new(&ctx.group, &ctx.conj, cs).unwrap();
            for &z in &witnessed {
                let out = solve_pst_time(&graph, &ctx.table, z, false, &cfg()).unwrap();
                assert!(out.certificate.is_none(), "{spec}: witness for {z} but PST found");
            }
        }
    }
}

#[test]
fn galois_stabilizers_are_unit_subgroups() {
    for ctx in contexts() {
        let galois = ctx.galois().unwrap();
        let m = galois.exponent;
        for chi in 0..ctx.table.num_characters() {
            let s = galois.stabilizer(chi);
            assert!(s.contains(&1));
            for &a in s {
                assert!(galois.units.contains(&a));
                for &b in s {
                    assert!(s.contains(&(a * b % m)), "{} chi {chi}", ctx.group.tag());
                }
            }
        }
    }
}

#[test]
fn numerical_tables_are_seed_deterministic() {
    let spec: GroupSpec = "extraspecial3:1".parse().unwrap();
    let a = GroupContext::from_spec(&spec, &cfg()).unwrap();
    let b = GroupContext::from_spec(&spec, &cfg()).unwrap();
    assert_eq!(a.table.rows(), b.table.rows());
    let other = RunConfig { seed: 7, ..cfg() };
    let c = GroupContext::from_spec(&spec, &other).unwrap();
    assert!(a.table.match_rows(&c.table, 1e-8).is_some(), "tables agree up to row order");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn class_power_composes(which in 0..SPECS.len(), j in 1i64..40, k in 1i64..40) {
        let ctx = &contexts()[which];
        let m = ctx.conj.exponent() as i64;
        let pj = ctx.conj.class_power(j);
        let pk = ctx.conj.class_power(k);
        let pjk = ctx.conj.class_power((j * k) % m);
        for c in 0..ctx.conj.num_classes() {
            prop_assert_eq!(pk[pj[c]], pjk[c]);
        }
    }

    #[test]
    fn character_values_bounded(which in 0..SPECS.len()) {
        let ctx = &contexts()[which];
        let t = &ctx.table;
        for chi in 0..t.num_characters() {
            let d = t.degree(chi) as f64;
            for c in 0..t.num_classes() {
                let v = t.value(chi, c).norm();
                prop_assert!(v <= d + 1e-8);
                if ctx.conj.is_central(ctx.conj.representative(c)) {
                    prop_assert!((v - d).abs() < 1e-8);
                }
            }
        }
    }

    #[test]
    fn criterion_agrees_with_oracle(which in 0..SPECS.len(), mask in any::<u64>(), k in 1usize..6, t in 0.05f64..6.0) {
        let ctx = &contexts()[which];
        let classes = union_from_mask(ctx, mask);
        let graph = ctx.graph(&classes).unwrap();
        let op = oracle_for(&graph, &cfg()).unwrap();
        let mst = compute_s_e(&graph, &ctx.table, &cfg()).unwrap();
        let mut times = vec![t];
        if let Some(t0) = mst.minimal_time {
            times.push(t0 * k as f64);
        }
        for &z in ctx.conj.center() {
            for &tau in &times {
                let c = check_pst_at(&graph, &ctx.table, z, tau, &cfg()).unwrap();
                let f = op.fidelity(tau, ctx.group.identity(), z);
                let oracle = f.value > 1.0 - cfg().oracle_tol && f.phase > 0.0;
                prop_assert_eq!(c.accepted, oracle, "z={} tau={} residual={} fidelity={}", z, tau, c.residual, f.value);
            }
        }
    }

    #[test]
    fn s_e_is_a_cyclic_central_subgroup(which in 0..SPECS.len(), mask in any::<u64>()) {
        let ctx = &contexts()[which];
        let graph = ctx.graph(&union_from_mask(ctx, mask)).unwrap();
        let mst = compute_s_e(&graph, &ctx.table, &cfg()).unwrap();
        let g = &ctx.group;
        for &a in &mst.s_e {
            prop_assert!(ctx.conj.is_central(a));
            prop_assert!(mst.s_e.binary_search(&g.inv(a)).is_ok());
            for &b in &mst.s_e {
                prop_assert!(mst.s_e.binary_search(&g.mul(a, b)).is_ok());
            }
        }
        if let (Some(z), Some(tau)) = (mst.generator, mst.minimal_time) {
            prop_assert!([2, 3, 4, 6].contains(&mst.size));
            prop_assert_eq!(&mst.s_e, &subgroup_closure(g, &[z]));
            let mut zk = z;
            for k in 1..=mst.size {
                let c = check_pst_at(&graph, &ctx.table, zk, k as f64 * tau, &cfg()).unwrap();
                prop_assert!(c.residual < 10.0 * cfg().criterion_tol);
                zk = g.mul(zk, z);
            }
        } else {
            prop_assert_eq!(mst.size, 1);
        }
    }

    #[test]
    fn transfer_is_translation_invariant(which in 0..SPECS.len(), mask in any::<u64>(), a in any::<prop::sample::Index>(), t in 0.05f64..4.0) {
        let ctx = &contexts()[which];
        let graph = ctx.graph(&union_from_mask(ctx, mask)).unwrap();
        let op = oracle_for(&graph, &cfg()).unwrap();
        let g = &ctx.group;
        let a = a.index(g.order());
        for &z in ctx.conj.center() {
            let b = g.mul(z, a);
            let f1 = op.fidelity(t, a, b);
            let f0 = op.fidelity(t, g.identity(), g.mul(b, g.inv(a)));
            prop_assert!((f1.value - f0.value).abs() < 1e-9);
        }
    }

    #[test]
    fn walk_is_real_orthogonal(which in 0..SPECS.len(), mask in any::<u64>(), t in -5.0f64..5.0) {
        let ctx = &contexts()[which];
        let graph = ctx.graph(&union_from_mask(ctx, mask)).unwrap();
        let op = oracle_for(&graph, &cfg()).unwrap();
        let u = op.evolve(t).unwrap();
        let n = g_order(ctx);
        prop_assert!((u.transpose() * &u - nalgebra::DMatrix::<f64>::identity(n, n)).amax() < 1e-9);
        let mut ev = op.eigenvalues();
        ev.sort_by(f64::total_cmp);
        let want = spectrum(&graph, &ctx.table).unwrap().hermitian_eigenvalues();
        prop_assert_eq!(ev.len(), want.len());
        for (x, y) in ev.iter().zip(&want) {
            prop_assert!((x - y).abs() < 1e-7, "{} vs {}", x, y);
        }
    }
}

fn g_order(ctx: &GroupContext) -> usize {
    ctx.group.order()
}
