use alexq_core::abelian::{EndoMatrix, FinAbGroup};
use alexq_core::catalog::CATALOG;
use alexq_core::oracle;
use alexq_core::Error;
use num_integer::Integer;

fn small_groups() -> Vec<FinAbGroup> {
    [&[2][..], &[4], &[6], &[2, 2], &[2, 4], &[6, 2], &[3, 3], &[4, 4], &[2, 2, 2], &[2, 6], &[3, 9], &[8]]
        .iter()
        .map(|o| FinAbGroup::new(o).unwrap())
        .collect()
}

/// Every valid endomorphism, by trying all reduced entry matrices that pass
/// the generator-order test.
fn all_endos(g: &FinAbGroup) -> Vec<EndoMatrix> {
    let r = g.rank();
    let d = g.orders();
    let mut out = Vec::new();
    let total: u64 = (0..r * r).map(|idx| d[idx / r]).product();
    for mut code in 0..total {
        let mut rows = vec![vec![0i64; r]; r];
        for (idx, slot) in (0..r * r).map(|idx| (idx, idx)) {
            let o = d[slot / r];
            rows[idx / r][idx % r] = (code % o) as i64;
            code /= o;
        }
        if let Ok(t) = g.endo(&rows) {
            out.push(t);
        }
    }
    out
}

#[test]
fn endos_are_additive() {
    for g in small_groups().into_iter().filter(|g| g.cardinality() <= 64) {
        let elems: Vec<_> = g.elements().collect();
        let endos = all_endos(&g);
        // check a spread of endomorphisms; (Z/4)^2 alone has thousands
        for t in endos.iter().step_by((endos.len() / 40).max(1)) {
            for a in &elems {
                for b in &elems {
                    let lhs = g.apply(t, &g.add(a, b).unwrap());
                    let rhs = g.add(&g.apply(t, a), &g.apply(t, b)).unwrap();
                    assert_eq!(lhs, rhs, "{:?} on {:?}", t, g.orders());
                }
            }
        }
    }
}

#[test]
fn make_endo_rejects_exactly_ill_defined() {
    for g in small_groups().into_iter().filter(|g| g.rank() <= 2) {
        let r = g.rank();
        let d = g.orders().to_vec();
        let total: u64 = (0..r * r).map(|idx| d[idx / r]).product();
        for mut code in 0..total {
            let mut rows = vec![vec![0i64; r]; r];
            for idx in 0..r * r {
                let o = d[idx / r];
                rows[idx / r][idx % r] = (code % o) as i64;
                code /= o;
            }
            // oracle: generator j's image has order dividing d_j
            let well_defined = (0..r).all(|j| {
                let img = g.element(&(0..r).map(|i| rows[i][j]).collect::<Vec<_>>()).unwrap();
                d[j] % g.element_order(&img) == 0
            });
            let res = g.endo(&rows);
            assert_eq!(res.is_ok(), well_defined, "{rows:?} on {d:?}");
            if !well_defined {
                assert!(matches!(res, Err(Error::IllDefinedHom { .. })));
            }
        }
    }
}

#[test]
fn automorphism_test_matches_image_enumeration() {
    for g in small_groups().into_iter().filter(|g| g.cardinality() <= 64) {
        let n = g.cardinality() as usize;
        for t in all_endos(&g).iter().step_by(3) {
            let bijective = oracle::image_size(&g, t, 64).unwrap() == n;
            assert_eq!(g.is_automorphism(t), bijective, "{:?} on {:?}", t, g.orders());
        }
    }
}

#[test]
fn powers_compose() {
    for entry in CATALOG {
        let (g, t) = entry.build().unwrap();
        let pows: Vec<EndoMatrix> = (-3..=3).map(|m| g.endo_pow(&t, m).unwrap()).collect();
        for m in -3i64..=3 {
            for n in -3i64..=3 {
                if (m + n).abs() > 3 {
                    continue;
                }
                let lhs = g.compose(&pows[(m + 3) as usize], &pows[(n + 3) as usize]);
                assert_eq!(lhs, pows[(m + n + 3) as usize], "{}: m={m} n={n}", entry.name);
            }
        }
        let id = g.endo_pow(&t, 0).unwrap();
        assert_eq!(id, g.identity_endo());
    }
}

#[test]
fn inverse_by_brute_force() {
    // Z/n with unit t: the inverse is the unit s with s t = 1
    for n in 2i64..=30 {
        let g = FinAbGroup::new(&[n]).unwrap();
        for t in 1..n {
            let endo = g.endo(&[vec![t]]).unwrap();
            let inv = g.endo_pow(&endo, -1);
            if t.gcd(&n) == 1 {
                let s = (1..n).find(|s| (s * t) % n == 1).unwrap();
                assert_eq!(inv.unwrap().entries()[0][0], s as u64);
            } else {
                assert_eq!(inv, Err(Error::NotInvertible));
            }
        }
    }
}
