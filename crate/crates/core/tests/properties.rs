mod support;

use kummer_core::algebra::rational::int;
use proptest::prelude::*;
use support::laws::{self, nonzero_poly, poly, rat};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        laws::ring_laws(a, b, c)?;
    }

    #[test]
    fn leibniz_and_mixed_partials(a in poly(), b in poly()) {
        laws::leibniz_and_mixed_partials(a, b)?;
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), x in rat(), y in rat(), l in rat()) {
        laws::evaluation_is_a_homomorphism(a, b, x, y, l)?;
    }

    #[test]
    fn product_order_is_sound(a in poly(), b in poly(), pa in poly(), pb in poly(), k1 in 0i64..5, k2 in 0i64..5) {
        laws::product_order_is_sound(a, b, pa, pb, k1, k2)?;
    }

    #[test]
    fn division_round_trip(a in poly(), d in nonzero_poly()) {
        laws::division_round_trip(a, d)?;
    }

    #[test]
    fn quadext_laws(c1 in rat().prop_filter("c1", |c| *c != int(0)), c2 in rat(),
                    x in prop::array::uniform4(rat()), y in prop::array::uniform4(rat()), z in prop::array::uniform4(rat())) {
        laws::quadext_laws(c1, c2, x, y, z)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sigma_and_wp_parity(l in prop::array::uniform5(-3i64..=3), level in 0usize..3) {
        laws::sigma_and_wp_parity(l, level)?;
    }

    #[test]
    fn chart_b_swap_symmetry(x1 in (-6i64..=6, 1i64..=4), x2 in (-6i64..=6, 1i64..=4),
                             l in prop::array::uniform5(-3i64..=3), s1 in prop::bool::ANY, s2 in prop::bool::ANY) {
        laws::chart_b_swap_symmetry(x1, x2, l, s1, s2)?;
    }

    #[test]
    fn lowered_riemann_is_antisymmetric(c in prop::collection::vec(-0.5f64..0.5, 30)) {
        laws::lowered_riemann_is_antisymmetric(c)?;
    }

    #[test]
    fn christoffel_matches_finite_differences(u in -2.0f64..2.0, v in -2.0f64..2.0) {
        laws::christoffel_matches_finite_differences(u, v)?;
    }
}
