use alexq_core::exactalg::{cokernel, smith_normal_form, IntMatrix};
use alexq_core::oracle;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix_strategy() -> impl Strategy<Value = IntMatrix> {
    (1usize..=8, 1usize..=8).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-99i64..=99, r * c)
            .prop_map(move |v| IntMatrix::from_fn(r, c, |i, j| BigInt::from(v[i * c + j])))
    })
}

/// Sparse-ish matrices hit rank deficiency and repeated factors more often.
fn structured_strategy() -> impl Strategy<Value = IntMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(prop_oneof![3 => Just(0i64), 1 => -6i64..=6], r * c)
            .prop_map(move |v| IntMatrix::from_fn(r, c, |i, j| BigInt::from(v[i * c + j] * 2)))
    })
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// k-th determinantal divisor: gcd of all k x k minors.
fn determinantal_divisor(a: &IntMatrix, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rows in subsets(a.rows(), k) {
        for cols in subsets(a.cols(), k) {
            let minor = IntMatrix::from_fn(k, k, |i, j| a.get(rows[i], cols[j]).clone());
            g = g.gcd(&minor.determinant());
        }
    }
    g
}

fn check_snf(a: &IntMatrix) -> Result<(), TestCaseError> {
    let s = smith_normal_form(a);
    prop_assert_eq!(&(&s.u * a) * &s.v, s.d.clone());
    prop_assert!(s.u.determinant().abs().is_one());
    prop_assert!(s.v.determinant().abs().is_one());
    prop_assert_eq!(&s.u * &s.u_inv, IntMatrix::identity(a.rows()));
    for i in 0..s.d.rows() {
        for j in 0..s.d.cols() {
            if i != j {
                prop_assert!(s.d.get(i, j).is_zero());
            }
        }
    }
    let diag = s.diagonal();
    for w in diag.windows(2) {
        prop_assert!(!w[0].is_negative());
        if !w[1].is_zero() {
            prop_assert!(!w[0].is_zero() && w[1].is_multiple_of(&w[0]));
        }
    }
    // same input, same output
    prop_assert_eq!(smith_normal_form(a), s);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn snf_invariants(a in matrix_strategy()) {
        check_snf(&a)?;
    }

    #[test]
    fn snf_structured(a in structured_strategy()) {
        check_snf(&a)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Products of the first k diagonal entries equal the determinantal divisors.
    #[test]
    fn snf_matches_determinantal_divisors(a in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-20i64..=20, r * c)
            .prop_map(move |v| IntMatrix::from_fn(r, c, |i, j| BigInt::from(v[i * c + j])))
    })) {
        let diag = smith_normal_form(&a).diagonal();
        let mut prod = BigInt::one();
        for (k, d) in diag.iter().enumerate() {
            prod *= d;
            prop_assert_eq!(prod.clone(), determinantal_divisor(&a, k + 1));
        }
    }

    #[test]
    fn cokernel_matches_enumeration(
        orders in proptest::collection::vec(1u64..=6, 1..=3),
        rels in proptest::collection::vec(-7i64..=7, 0..=9),
    ) {
        let n = orders.len();
        let c = rels.len() / n;
        let relations = IntMatrix::from_fn(n, c, |i, j| BigInt::from(rels[j * n + i]));
        let coker = cokernel(&orders, &relations).unwrap();
        let census = oracle::quotient_census(&orders, &relations, 256).unwrap();
        prop_assert_eq!(census, oracle::census_of_factors(&coker.invariant_factors));
        prop_assert!(coker.invariant_factors.iter().all(|&f| f >= 2));
        for w in coker.invariant_factors.windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
        // relations die in the quotient, and projection o lift = id
        for j in 0..c {
            let col: Vec<u64> = relations.column(j).iter().zip(&orders)
                .map(|(v, &o)| v.mod_floor(&BigInt::from(o)).try_into().unwrap()).collect();
            prop_assert!(coker.project(&col).iter().all(|&v| v == 0));
        }
        let q = alexq_core::FinAbGroup::from_orders(coker.invariant_factors.clone()).unwrap();
        for alpha in q.elements() {
            prop_assert_eq!(coker.project(&coker.lift(alpha.coords())), alpha.coords().to_vec());
        }
    }
}
