//! Closed-form invariants against brute-force walk enumeration, exhaustively.

use graphzeta::iso::{generate_g6, Filter};
use graphzeta::verify::{bass_hashimoto, series_oracle, trace_oracle};
use graphzeta::zeta::{bartholdi_census_from_series, bartholdi_series, geodesic_census_from_traces};
use graphzeta::{graph6, Exec};

#[test]
fn bass_equals_hashimoto_up_to_seven() {
    let r = bass_hashimoto(7, Exec::Parallel);
    assert_eq!(r.checked, 1 + 2 + 4 + 11 + 34 + 156 + 1044);
    assert!(r.passed(), "{:?}", r.failures);
}

#[test]
fn traces_equal_enumerated_geodesics() {
    let r = trace_oracle(6, 10, Exec::Parallel);
    assert!(r.passed(), "{:?}", r.failures);
}

#[test]
fn series_equals_enumerated_bump_counts() {
    let r = series_oracle(5, 6, Exec::Parallel);
    assert_eq!(r.checked, 52);
    assert!(r.passed(), "{:?}", r.failures);
}

#[test]
fn series_diagonal_is_the_ihara_census() {
    for n in 1..=5 {
        for s in generate_g6(n, Filter::All, None, Exec::Parallel) {
            let g = graph6::decode(&s).unwrap();
            let b = bartholdi_census_from_series(&bartholdi_series(&g, 8).unwrap());
            let a = geodesic_census_from_traces(&g, 8);
            for l in 1..=8 {
                assert_eq!(b.get(l, 0), a.get(l), "{s} length {l}");
            }
        }
    }
}
