//! Self-check suites: each formula against its brute-force oracle over every
//! graph of small order, and the fixed example graphs.

use std::fmt;

use crate::exec::Exec;
use crate::graph::Graph;
use crate::graph6::decode;
use crate::iso::{generate_g6, is_isomorphic, Filter};
use crate::linalg::{IntMatrix, IntPoly};
use crate::switching::{
    even_block_sizes, find_gm_pairs, has_gm_partner, join_family, new_construction,
    nine_vertex_spec, uniform_intertwiner_exists,
};
use crate::walks::{enumerate_closed_walks_cbc, enumerate_geodesics};
use crate::zeta::{
    bartholdi_census_from_series, bartholdi_series, geodesic_census_from_traces,
    ihara_reciprocal_bass, ihara_reciprocal_hashimoto, phi_adj,
};

/// Nine-vertex pair with equal `φ_ADJ`, each the complement of the other.
pub const NINE_VERTEX_PAIR: (&str, &str) = ("HheadXZ", "Hhf@eS|");
/// Twelve-vertex pair with equal `R` and different degree sequences.
pub const CRAB: &str = "K??CA?_FEcdk";
pub const SQUID: &str = "K??CA?_ccWNk";
/// Eleven-vertex GM* pair needing two switching blocks.
pub const THREE_BLOCK_STAR_PAIR: (&str, &str) = ("J?BD?oX[F[?", "J?`CP``LE{?");
/// Six-vertex Laplacian-cospectral pair used for the join family.
pub const JOIN_PAIR: (&str, &str) = ("ECZo", "EEr_");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    /// One line per failed check.
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn from_results(suite: &str, results: Vec<Option<String>>) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            checked: results.len(),
            failures: results.into_iter().flatten().collect(),
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{}\t{verdict}\tchecked={}\tfailed={}",
            self.suite,
            self.checked,
            self.failures.len()
        )
    }
}

fn catalog(n_max: usize, exec: Exec) -> Vec<String> {
    (1..=n_max)
        .flat_map(|n| generate_g6(n, Filter::All, None, exec))
        .collect()
}

/// Bass reciprocal = Hashimoto reciprocal on every graph of order `<= n_max`.
pub fn bass_hashimoto(n_max: usize, exec: Exec) -> SuiteReport {
    let g6s = catalog(n_max, exec);
    let res = exec.map(&g6s, |s| {
        let g = decode(s).ok()?;
        let bass = ihara_reciprocal_bass(&g).reciprocal;
        (bass != ihara_reciprocal_hashimoto(&g)).then(|| format!("{s}: Bass and Hashimoto differ"))
    });
    SuiteReport::from_results("bass-hashimoto", res)
}

/// Trace-inversion geodesic census = brute-force enumeration up to length
/// `max_len` on every graph of order `<= n_max`.
pub fn trace_oracle(n_max: usize, max_len: usize, exec: Exec) -> SuiteReport {
    let g6s = catalog(n_max, exec);
    let res = exec.map(&g6s, |s| {
        let g = decode(s).ok()?;
        match enumerate_geodesics(&g, max_len) {
            Ok(b) if b == geodesic_census_from_traces(&g, max_len) => None,
            Ok(_) => Some(format!("{s}: geodesic census differs")),
            Err(e) => Some(format!("{s}: {e}")),
        }
    });
    SuiteReport::from_results("oracle-geodesics", res)
}

/// Bartholdi series = brute-force cyclic-bump census to total degree
/// `degree` on every graph of order `<= n_max`.
pub fn series_oracle(n_max: usize, degree: usize, exec: Exec) -> SuiteReport {
    let g6s = catalog(n_max, exec);
    let res = exec.map(&g6s, |s| {
        let g = decode(s).ok()?;
        let series = match bartholdi_series(&g, degree) {
            Ok(x) => bartholdi_census_from_series(&x),
            Err(e) => return Some(format!("{s}: {e}")),
        };
        match enumerate_closed_walks_cbc(&g, degree) {
            Ok(b) if b.truncated(degree) == series.truncated(degree) => None,
            Ok(_) => Some(format!("{s}: cyclic-bump census differs")),
            Err(e) => Some(format!("{s}: {e}")),
        }
    });
    SuiteReport::from_results("oracle-series", res)
}

/// `charpoly(A + xD)`.
pub fn charpoly_a_plus_xd(g: &Graph, x: i64) -> IntPoly {
    let n = g.order();
    let mut m = g.adjacency_matrix();
    for v in 0..n {
        m[v * n + v] = x * g.degree(v) as i64;
    }
    IntMatrix::from_i64(n, &m).charpoly()
}

fn check(name: &str, ok: bool) -> Option<String> {
    (!ok).then(|| name.to_string())
}

fn g(s: &str) -> Graph {
    decode(s).expect("fixture graph6")
}

/// Individual fixture checks, `(name, passed)`.
pub fn example_checks() -> Vec<(String, bool)> {
    let mut out: Vec<(String, bool)> = Vec::new();
    let mut push = |name: &str, ok: bool| out.push((name.to_string(), ok));

    let (a, b) = (g(NINE_VERTEX_PAIR.0), g(NINE_VERTEX_PAIR.1));
    push("nine-vertex pair non-isomorphic", !is_isomorphic(&a, &b));
    push(
        "nine-vertex pair equal R",
        ihara_reciprocal_bass(&a).reciprocal == ihara_reciprocal_bass(&b).reciprocal,
    );
    push("nine-vertex pair equal phi_ADJ", phi_adj(&a) == phi_adj(&b));
    let six = |h: &Graph| h.count_short_cycles(6).map(|c| c[3]).ok();
    push("nine-vertex pair 6-cycles 46 vs 50", (six(&a), six(&b)) == (Some(46), Some(50)));
    push("nine-vertex pair complementary", is_isomorphic(&a, &b.complement()));
    push(
        "nine-vertex pair no uniform intertwiner",
        !uniform_intertwiner_exists(&a, &b),
    );
    push(
        "nine-vertex pair charpoly(A + xD) equal for x in -3..3",
        (-3..=3).all(|x| charpoly_a_plus_xd(&a, x) == charpoly_a_plus_xd(&b, x)),
    );
    let built = new_construction(&nine_vertex_spec());
    push(
        "construction gives the nine-vertex pair",
        built.is_ok_and(|(x, y)| {
            (is_isomorphic(&x, &a) && is_isomorphic(&y, &b))
                || (is_isomorphic(&x, &b) && is_isomorphic(&y, &a))
        }),
    );

    let (crab, squid) = (g(CRAB), g(SQUID));
    push("crab/squid non-isomorphic", !is_isomorphic(&crab, &squid));
    push(
        "crab/squid equal R",
        ihara_reciprocal_bass(&crab).reciprocal == ihara_reciprocal_bass(&squid).reciprocal,
    );
    push(
        "crab/squid degree sequences",
        crab.degree_sequence().as_slice().starts_with(&[5, 5, 4, 2])
            && squid.degree_sequence().as_slice().starts_with(&[7, 3, 3, 3]),
    );

    let (s1, s2) = (g(THREE_BLOCK_STAR_PAIR.0), g(THREE_BLOCK_STAR_PAIR.1));
    let sizes = even_block_sizes(s1.order());
    push("eleven-vertex graph has no one-block GM* partner", !has_gm_partner(&s1, &sizes, true, 1));
    let partners = find_gm_pairs(&s1, &sizes, true, 2);
    push(
        "eleven-vertex graph has its two-block GM* partner",
        partners.iter().any(|(_, h)| is_isomorphic(h, &s2)),
    );

    let (j1, j2) = (g(JOIN_PAIR.0), g(JOIN_PAIR.1));
    let expected = &IntPoly::from_i64s(&[2, 1]).pow(2) * &IntPoly::from_i64s(&[5, 2]);
    push(
        "join family f(x) = (2+x)^2(2x+5)",
        join_family(&j1, &j2, &Graph::complete(3)).is_ok_and(|f| f.f == expected),
    );
    out
}

pub fn examples() -> SuiteReport {
    let res = example_checks()
        .into_iter()
        .map(|(name, ok)| check(&name, ok))
        .collect();
    SuiteReport::from_results("paper-examples", res)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for r in [
            bass_hashimoto(5, Exec::Parallel),
            trace_oracle(4, 8, Exec::Parallel),
            series_oracle(4, 5, Exec::Parallel),
        ] {
            assert!(r.passed(), "{r}: {:?}", r.failures);
        }
        assert_eq!(bass_hashimoto(4, Exec::Sequential).checked, 1 + 2 + 4 + 11);
    }

    #[test]
    fn fixtures_hold() {
        for (name, ok) in example_checks() {
            assert!(ok, "{name}");
        }
        assert_eq!(examples().to_string(), "paper-examples\tPASS\tchecked=14\tfailed=0");
    }
}
