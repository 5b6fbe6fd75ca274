use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use pa_core::exactarith::{pochhammer, PochhammerLength, Quad5, Series};
use pa_core::genfunc::heine_check;
use pa_core::monotone::{classify_case, matching_cases, phi, witness};
use pa_core::partitions::{conjugate, is_pa, is_postar, Partition};
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u64..20, 0..14).prop_map(|v| Partition::from_unsorted(v).unwrap())
}

/// PA partitions of at least 13, built from alternating-parity distinct values.
fn pa_partition() -> impl Strategy<Value = Partition> {
    (
        1u64..12,
        prop::collection::vec((1u64..4, 1u64..4), 1..5),
        1u64..5,
    )
        .prop_map(|(start, steps, extra)| {
            let mut value = start;
            let mut parts = Vec::new();
            for (gap, mult) in steps {
                for _ in 0..mult {
                    parts.push(value);
                }
                value += 2 * gap - 1;
            }
            while parts.iter().sum::<u64>() < 13 {
                parts.push(start);
            }
            for _ in 0..extra {
                parts.push(start);
            }
            Partition::from_unsorted(parts).unwrap()
        })
}

fn small_quad() -> impl Strategy<Value = Quad5> {
    (-6i64..7, -6i64..7, 1i64..5).prop_map(|(a, b, d)| {
        Quad5::new(
            BigRational::new(BigInt::from(a), BigInt::from(d)),
            BigRational::new(BigInt::from(b), BigInt::from(d)),
        )
    })
}

proptest! {
    #[test]
    fn conjugation_swaps_pa_and_postar(q in partition()) {
        prop_assert_eq!(is_pa(&q), is_postar(&conjugate(&q)));
    }

    #[test]
    fn phi_lands_in_pa_of_n_plus_one(q in pa_partition()) {
        prop_assert!(is_pa(&q));
        let case = classify_case(&q).unwrap();
        prop_assert_eq!(matching_cases(&q), vec![case]);
        let image = phi(&q).unwrap();
        prop_assert_eq!(image.n(), q.n() + 1);
        prop_assert!(is_pa(&image));
        prop_assert_ne!(image, witness(q.n() + 1));
    }

    #[test]
    fn heine_holds_for_generic_parameters(a in small_quad(), b in small_quad(), c in small_quad()) {
        let one = Quad5::one();
        prop_assume!(b != Quad5::from_int(0) && c != Quad5::from_int(0) && c != one);
        prop_assume!(c.checked_div(&b).map(|r| r != one).unwrap_or(false));
        prop_assert!(heine_check(&a, &b, &c, 8).unwrap());
    }

    #[test]
    fn finite_pochhammer_is_a_polynomial(a in small_quad(), n in 0usize..6) {
        let order = 40;
        let p: Series<Quad5> = pochhammer(&a, PochhammerLength::Finite(n), order);
        let degree = n * n.saturating_sub(1) / 2;
        prop_assert!(p.coeffs().iter().skip(degree + 1).all(|c| *c == Quad5::from_int(0)));
    }
}
