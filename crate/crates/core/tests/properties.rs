use multifan::arith::{int, rat, rat_int};
use multifan::cyclotomic::{root_of_unity, Cyclotomic};
use multifan::document::FanDocument;
use multifan::equivariant::SupportClass;
use multifan::fan::random_complete_fan;
use multifan::lattice::{smith_normal_form, IntMatrix};
use multifan::morelli::{mu_paths, spanning_family, GenericPlane, Orientation};
use multifan::polytope::{count_bruteforce, count_formula, MultiPolytope};
use multifan::todd::{ehrhart_coefficients, ehrhart_value, todd_genus};
use multifan::Rat;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(-9i64..=9, r * c)
            .prop_map(move |xs| IntMatrix::from_rows(xs.chunks(c).map(|row| row.iter().map(|&x| int(x)).collect()).collect(), c))
    })
}

fn cyclotomic(conductor: u64) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-5i64..=5, 1i64..=4), 1..=6).prop_map(move |terms| {
        terms
            .iter()
            .enumerate()
            .fold(Cyclotomic::zero_in(conductor), |acc, (k, &(a, b))| &acc + &Cyclotomic::zeta_power(k as u64, conductor).scale(&rat(a, b)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn smith_form_is_a_unimodular_reduction(a in small_matrix()) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.p.mul(&a).mul(&s.q), s.d.clone());
        prop_assert!(s.p.determinant().abs() == int(1) && s.q.determinant().abs() == int(1));
        let diag = s.diagonal();
        for w in diag.windows(2) {
            prop_assert!(w[0].is_zero() && w[1].is_zero() || !w[0].is_zero() && (&w[1] % &w[0]).is_zero());
        }
        prop_assert!(diag.iter().all(|d| !d.is_negative()));
    }

    #[test]
    fn cyclotomic_field_axioms((a, b, c) in (1u64..=24).prop_flat_map(|n| (cyclotomic(n), cyclotomic(n), cyclotomic(n)))) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn roots_of_unity_sum_to_zero(d in 2i64..=24) {
        let total = (0..d).fold(Cyclotomic::zero_in(d as u64), |acc, j| &acc + &root_of_unity(&rat(j, d), d as u64).unwrap());
        prop_assert!(total.is_zero());
    }

    #[test]
    fn counting_routes_agree_on_random_fans(seed in 0u64..500, d in prop::collection::vec(-4i64..=4, 12)) {
        let f = random_complete_fan(seed, 2, 3);
        let xi = SupportClass::from_ints(&d[..f.ray_count()]);
        let p = MultiPolytope::new(&f, xi).unwrap();
        prop_assert_eq!(count_formula(&p).unwrap(), count_bruteforce(&p).unwrap());
    }

    #[test]
    fn random_fans_have_todd_genus_one(seed in 0u64..500, dim in 2usize..=3) {
        prop_assert_eq!(todd_genus(&random_complete_fan(seed, dim, 3)).unwrap(), rat(1, 1));
    }

    #[test]
    fn ehrhart_polynomial_counts_dilates(seed in 0u64..200, d in prop::collection::vec(0i64..=3, 12), nu in 1i64..=3) {
        let f = random_complete_fan(seed, 2, 2);
        let xi = SupportClass::from_ints(&d[..f.ray_count()]);
        prop_assume!(multifan::equivariant::is_t_cartier(&f, &xi));
        let a = ehrhart_coefficients(&f, &xi).unwrap();
        let p = MultiPolytope::new(&f, xi.scaled(&rat(nu, 1))).unwrap();
        prop_assert_eq!(ehrhart_value(&a, nu), rat_int(&count_bruteforce(&p).unwrap()));
    }

    #[test]
    fn mu_paths_agree_on_random_fans(seed in 0u64..200, plane_seed in any::<u64>(), k in 1usize..=2) {
        let f = random_complete_fan(seed, 2, 2);
        let plane = &GenericPlane::sample_many(&f, k, 1, plane_seed).unwrap()[0];
        for (_, x) in spanning_family(&f, k) {
            for face in f.faces(k) {
                let (a, b) = mu_paths(&f, &x, face, plane, Orientation { flip_line: true, flip_omega: false }).unwrap();
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn documents_round_trip(seed in 0u64..200, d in prop::collection::vec((-9i64..=9, 1i64..=5), 12)) {
        let f = random_complete_fan(seed, 2, 3);
        let xi = SupportClass::new(d[..f.ray_count()].iter().map(|&(a, b)| rat(a, b)).collect::<Vec<Rat>>());
        let doc = FanDocument::from_fan(&f, vec![("xi".into(), xi)]);
        prop_assert_eq!(FanDocument::parse(&doc.to_json()).unwrap(), doc);
    }
}
