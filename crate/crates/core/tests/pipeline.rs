mod common;

use common::*;
use num_traits::Zero;
use reftype::costrat::{d_coeffs, k_block, norm_ratio, vanishing_system, HbarConfig};
use reftype::lattice::{pq_map, ExpKernel, PQRatio};
use reftype::relcoeff::{coeff_table, coeff_table_for, complement, straighten, subset_sums, symmetrize};
use reftype::repthy::{tensor_decomposition, weyl_dim};
use reftype::rootsys::{Family, RootSystem};
use reftype::subsys::{build_poset, enumerate_classes, find_class};
use reftype::weyl::WeylGroup;
use reftype::Q;

fn setup(f: Family, n: usize) -> (RootSystem, WeylGroup, Vec<PQRatio>) {
    let rs = system(f, n);
    let wg = WeylGroup::generate(&rs);
    let pq = pq_map(&rs, &ExpKernel::simply_connected(n)).unwrap();
    (rs, wg, pq)
}

#[test]
fn tables_do_not_depend_on_the_representative() {
    for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::C, 3)] {
        let (rs, wg, pq) = setup(f, n);
        let w = wg.order() / 3;
        for c in enumerate_classes(&rs, &wg) {
            let moved: Vec<usize> = c.representative.roots.iter().map(|&r| wg.act_root(w, r)).collect();
            let a = coeff_table(&rs, &wg, &c, &pq).unwrap();
            let b = coeff_table_for(&rs, &wg, &moved, &c.label, &pq).unwrap();
            assert_eq!(a, b, "{f:?}{n} class {}", c.label);
        }
    }
}

#[test]
fn type_a_tables_are_reversal_symmetric() {
    for n in [3, 4] {
        let (rs, wg, pq) = setup(Family::A, n);
        for c in enumerate_classes(&rs, &wg) {
            let t = coeff_table(&rs, &wg, &c, &pq).unwrap();
            for (l, v) in &t.entries {
                let rev: Vec<i64> = l.0.iter().rev().copied().collect();
                assert_eq!(t.get(&rev), *v, "A{n} class {} at {l}", c.label);
            }
        }
    }
}

#[test]
fn subset_sums_are_symmetric_and_balanced() {
    for (f, n) in [(Family::B, 3), (Family::C, 3), (Family::D, 4)] {
        let (rs, wg, pq) = setup(f, n);
        for c in enumerate_classes(&rs, &wg) {
            let v = subset_sums(&rs, &pq, &complement(&rs, &c.representative.roots)).unwrap();
            let want = i64::from(c.is_full(&rs));
            assert_eq!(v.total(), want, "{f:?}{n} class {}", c.label);
            for (k, x) in v.iter() {
                let neg: Vec<i64> = k.iter().map(|y| -y).collect();
                assert_eq!(v.get(&neg), *x);
            }
        }
    }
}

#[test]
fn straightening_matches_the_sweep() {
    for (f, n) in [(Family::B, 2), (Family::C, 3), (Family::A, 3)] {
        let (rs, wg, pq) = setup(f, n);
        for c in enumerate_classes(&rs, &wg) {
            let stab = wg.setwise_stabilizer(&c.representative.roots);
            let reps = wg.coset_representatives(&stab).unwrap();
            let v = subset_sums(&rs, &pq, &complement(&rs, &c.representative.roots)).unwrap();
            let vt = symmetrize(&wg, &reps, &v);
            let t = coeff_table(&rs, &wg, &c, &pq).unwrap();
            let s = straighten(&wg, &vt);
            assert_eq!(s.len(), t.entries.len(), "{f:?}{n} class {}", c.label);
            for (l, x) in s {
                assert_eq!(t.get(&l), Q::from_integer(x));
            }
        }
    }
}

#[test]
fn tensor_products_preserve_dimension() {
    for (f, n, a, b) in [
        (Family::B, 2, vec![1, 1], vec![0, 2]),
        (Family::C, 3, vec![1, 0, 1], vec![0, 1, 0]),
        (Family::D, 4, vec![1, 0, 0, 0], vec![0, 0, 1, 1]),
    ] {
        let (rs, wg, _) = setup(f, n);
        let dec = tensor_decomposition(&rs, &wg, &a, &b).unwrap();
        let total: i64 = dec.iter().map(|(l, m)| m * weyl_dim(&rs, &l.0)).sum();
        assert_eq!(total, weyl_dim(&rs, &a) * weyl_dim(&rs, &b));
        assert!(dec.values().all(|&m| m > 0));
    }
}

#[test]
fn su2_block_row() {
    let (rs, wg, pq) = setup(Family::A, 1);
    let classes = enumerate_classes(&rs, &wg);
    let c = find_class(&rs, &classes, "0").unwrap();
    let d = d_coeffs(&rs, &wg, c, &coeff_table(&rs, &wg, c, &pq).unwrap()).unwrap();
    let cutoff2 = rs.norm2_labels(&[9]);
    let block = k_block(&rs, &wg, &d, cutoff2);
    assert_eq!(block.rows.len(), 9);
    let row: Vec<(i64, Q)> = block.row(&[4]).into_iter().map(|(l, v)| (l.0[0], v)).collect();
    assert_eq!(row, vec![(2, Q::from(-1)), (4, Q::from(2)), (6, Q::from(-1))]);
    assert!(block.incomplete_rows.iter().all(|l| l.0[0] >= 7));
}

#[test]
fn norm_ratios_invert() {
    let (rs, _, _) = setup(Family::C, 2);
    let cfg = HbarConfig { hbar: 0.25, dim_g: 10 };
    let a = norm_ratio(&rs, cfg, &[2, 1], &[0, 3]).unwrap();
    let b = norm_ratio(&rs, cfg, &[0, 3], &[2, 1]).unwrap();
    assert_eq!(a.exponent, -b.exponent);
    assert!((a.value * b.value - 1.0).abs() < 1e-12);
    assert!(norm_ratio(&rs, HbarConfig { hbar: 0.0, dim_g: 10 }, &[0, 0], &[0, 0]).is_err());
}

#[test]
fn vanishing_system_skips_larger_classes() {
    let (rs, wg, pq) = setup(Family::B, 2);
    let poset = build_poset(&wg, enumerate_classes(&rs, &wg));
    let r0 = poset.index_of("D2").unwrap();
    let rows = vanishing_system(&rs, &wg, &poset, r0, &pq, Q::from_integer(30)).unwrap();
    let labels: std::collections::BTreeSet<&str> = rows.iter().map(|c| c.class_label.as_str()).collect();
    assert_eq!(labels, ["0", "A1", "B1", "B1+B1"].into_iter().collect());
    assert!(rows.iter().any(|c| c.row.values().any(|v| !v.is_zero())));
    assert!(vanishing_system(&rs, &wg, &poset, 99, &pq, Q::from_integer(30)).is_err());
}

#[test]
fn d4_tuple_classes_are_pairwise_distinct() {
    let (rs, wg, _) = setup(Family::D, 4);
    let classes = enumerate_classes(&rs, &wg);
    assert_eq!(classes.len(), 10);
    let keys: std::collections::BTreeSet<_> = classes.iter().map(|c| c.canonical_key.clone()).collect();
    assert_eq!(keys.len(), 10);
    // exhaustion also finds the outer-automorphism images of A1+A1 and A3
    assert_eq!(brute_class_count(&rs), 12);
}
