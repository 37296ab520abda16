use proptest::prelude::*;
use sesqui::formats::{parse_certificate, parse_schedule, parse_scx, print_certificate, print_schedule, print_scx};
use sesqui_core::generators::{generate, random_schedule, GeneratorSpec, Lcg};
use sesqui_core::search::{Kind, SearchCaps, Searcher};
use sesqui_core::{Face, SimplicialComplex};

fn token() -> impl Strategy<Value = String> {
    "[A-Za-z0-9_-][A-Za-z0-9_.-]{0,4}"
}

fn complex() -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::vec(token(), 0..5), 0..6).prop_map(|facets| {
        SimplicialComplex::from_faces(
            facets.into_iter().map(|f| Face::parse(f.iter().map(String::as_str)).unwrap()),
        )
    })
}

proptest! {
    #[test]
    fn scx_round_trip(c in complex()) {
        let text = print_scx(&c);
        let back = parse_scx(&text).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(print_scx(&back), text);
    }

    #[test]
    fn schedule_round_trip(seed in any::<u64>()) {
        let c = generate(&GeneratorSpec::StackedSphere(3, 2, seed)).unwrap();
        let s = random_schedule(&c, &mut Lcg::new(seed));
        prop_assert_eq!(parse_schedule(&print_schedule(&s)).unwrap(), s);
    }

    #[test]
    fn certificate_round_trip(seed in 0u64..40, kind_index in 0usize..3) {
        let kind = Kind::ALL[kind_index];
        let c = generate(&GeneratorSpec::StackedSphere(2, 2, seed)).unwrap();
        let cert = Searcher::new(SearchCaps::default()).check(kind, &c).unwrap().unwrap();
        prop_assert_eq!(parse_certificate(&print_certificate(kind, &cert)).unwrap(), (kind, cert));
    }
}
