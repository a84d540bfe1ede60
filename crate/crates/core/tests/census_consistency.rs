//! Census results against each other and against the switching module.

use std::collections::HashSet;

use graphzeta::census::{fingerprint, invariant_key, run_census, CensusConfig, MethodSpec, MethodTag};
use graphzeta::graph6::decode;
use graphzeta::iso::{canonical_g6, generate_all, Filter};
use graphzeta::switching::{even_block_sizes, find_gm_pairs};
use graphzeta::verify::THREE_BLOCK_STAR_PAIR;
use graphzeta::Exec;

fn specs(tags: &str) -> Vec<MethodSpec> {
    tags.split(',').map(|t| t.parse().unwrap()).collect()
}

fn members(r: &graphzeta::census::ClassReport) -> HashSet<String> {
    r.classes.iter().flatten().cloned().collect()
}

#[test]
fn m1_m2_m4_coincide_up_to_eight() {
    for n in 2..=8 {
        let reports = run_census(&CensusConfig::new(n, specs("Zstar,TTbar,PhiADJ"))).unwrap();
        assert_eq!(reports[0].classes, reports[1].classes, "n = {n}");
        assert_eq!(reports[1].classes, reports[2].classes, "n = {n}");
    }
}

#[test]
fn dominance_up_to_eight() {
    let reports = run_census(&CensusConfig::new(8, specs("PhiADJ,PhiAD,A,L,Q,Z"))).unwrap();
    let sets: Vec<HashSet<String>> = reports.iter().map(members).collect();
    assert!(sets[0].is_subset(&sets[1]));
    for s in &sets[2..] {
        assert!(sets[1].is_subset(s));
    }
}

#[test]
fn shard_counts_agree_at_eight() {
    let methods = specs("Z,T,A,PhiAD,Q@md2");
    let dir = tempfile::tempdir().unwrap();
    let mut base = CensusConfig::new(8, methods);
    let one = run_census(&base).unwrap();
    for shards in [2, 8] {
        base.shards = shards;
        base.workdir = (shards == 8).then(|| dir.path().to_path_buf());
        base.exec = if shards == 2 { Exec::Sequential } else { Exec::Parallel };
        assert_eq!(run_census(&base).unwrap(), one);
    }
}

#[test]
fn gm_partners_share_the_adjacency_class() {
    let reports = run_census(&CensusConfig::new(7, specs("A,GM"))).unwrap();
    let in_classes = members(&reports[0]);
    let mut with_partner = 0;
    for g in generate_all(7, Filter::All, None) {
        let pairs = find_gm_pairs(&g, &even_block_sizes(7), false, 1);
        if pairs.is_empty() {
            continue;
        }
        with_partner += 1;
        let s = canonical_g6(&g);
        assert!(in_classes.contains(&s));
        for (_, h) in pairs {
            assert_eq!(invariant_key(&g, MethodTag::A), invariant_key(&h, MethodTag::A));
            assert!(in_classes.contains(&canonical_g6(&h)));
        }
    }
    assert_eq!(with_partner, reports[1].undetermined);
}

#[test]
fn star_partners_share_the_phi_adj_key() {
    let g = decode(THREE_BLOCK_STAR_PAIR.0).unwrap();
    let pairs = find_gm_pairs(&g, &even_block_sizes(11), true, 2);
    assert!(!pairs.is_empty());
    for (_, h) in pairs {
        assert_eq!(invariant_key(&g, MethodTag::PhiADJ), invariant_key(&h, MethodTag::PhiADJ));
        assert_eq!(fingerprint(&g, MethodTag::PhiADJ), fingerprint(&h, MethodTag::PhiADJ));
    }
}

#[test]
fn md2_scope_matches_the_md2_catalog() {
    let reports = run_census(&CensusConfig::new(7, specs("A@md2,Z@md2"))).unwrap();
    assert_eq!(reports[0].total, generate_all(7, Filter::Md2, None).len());
    assert_eq!(reports[1].undetermined, 0);
}
