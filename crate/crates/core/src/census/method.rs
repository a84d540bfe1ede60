//! Invariant extractors: for every method an exact key and a cheap
//! fingerprint that is a function of that key.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{charpoly_i64, det_i128, IntPoly};
use crate::zeta::{core_fingerprint, ihara_reciprocal_bass, phi_ad, phi_adj};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MethodTag {
    /// Adjacency spectrum.
    A,
    /// Laplacian `D - A` spectrum.
    L,
    /// Signless Laplacian `D + A` spectrum.
    Q,
    /// Ihara reciprocal `R`.
    Z,
    /// `R` of the graph and of its complement.
    ZZbar,
    /// Size and `R`.
    T,
    /// Order, size, `R` and `R` of the complement.
    TTbar,
    /// Order and `R` of the cone.
    Zstar,
    /// Order and `φ_AD`.
    PhiAD,
    /// Order and `φ_ADJ`.
    PhiADJ,
    /// Adjacency spectrum of the cone.
    Astar,
    /// Adjacency spectra of the graph and its complement.
    AAbar,
    /// Signless Laplacian spectrum of the cone.
    Qstar,
    /// Signless Laplacian spectra of the graph and its complement.
    QQbar,
    AL,
    ALQ,
    ALQZ,
    /// Has a non-isomorphic GM switch with one block of any even size.
    GM,
    /// As [`MethodTag::GM`] with the block restricted to size four.
    GM4,
    /// Has a non-isomorphic GM* switch with one block.
    GMstar,
}

const ALL_TAGS: [MethodTag; 20] = [
    MethodTag::A,
    MethodTag::L,
    MethodTag::Q,
    MethodTag::Z,
    MethodTag::ZZbar,
    MethodTag::T,
    MethodTag::TTbar,
    MethodTag::Zstar,
    MethodTag::PhiAD,
    MethodTag::PhiADJ,
    MethodTag::Astar,
    MethodTag::AAbar,
    MethodTag::Qstar,
    MethodTag::QQbar,
    MethodTag::AL,
    MethodTag::ALQ,
    MethodTag::ALQZ,
    MethodTag::GM,
    MethodTag::GM4,
    MethodTag::GMstar,
];

impl MethodTag {
    pub fn all() -> &'static [MethodTag] {
        &ALL_TAGS
    }

    pub fn name(self) -> &'static str {
        match self {
            MethodTag::A => "A",
            MethodTag::L => "L",
            MethodTag::Q => "Q",
            MethodTag::Z => "Z",
            MethodTag::ZZbar => "ZZbar",
            MethodTag::T => "T",
            MethodTag::TTbar => "TTbar",
            MethodTag::Zstar => "Zstar",
            MethodTag::PhiAD => "PhiAD",
            MethodTag::PhiADJ => "PhiADJ",
            MethodTag::Astar => "Astar",
            MethodTag::AAbar => "AAbar",
            MethodTag::Qstar => "Qstar",
            MethodTag::QQbar => "QQbar",
            MethodTag::AL => "AL",
            MethodTag::ALQ => "ALQ",
            MethodTag::ALQZ => "ALQZ",
            MethodTag::GM => "GM",
            MethodTag::GM4 => "GM4",
            MethodTag::GMstar => "GMstar",
        }
    }

    /// Switching-based tags count graphs with a partner instead of grouping
    /// by an invariant.
    pub fn is_switching(self) -> bool {
        matches!(self, MethodTag::GM | MethodTag::GM4 | MethodTag::GMstar)
    }

    pub(crate) fn components(self) -> &'static [Component] {
        use Component::*;
        match self {
            MethodTag::A => &[CharA],
            MethodTag::L => &[CharL],
            MethodTag::Q => &[CharQ],
            MethodTag::Z => &[Zeta],
            MethodTag::ZZbar => &[Zeta, ZetaComp],
            MethodTag::T => &[Size, Zeta],
            MethodTag::TTbar => &[Order, Size, Zeta, ZetaComp],
            MethodTag::Zstar => &[Order, ZetaCone],
            MethodTag::PhiAD => &[Order, PhiAd],
            MethodTag::PhiADJ => &[Order, PhiAdj],
            MethodTag::Astar => &[CharACone],
            MethodTag::AAbar => &[CharA, CharAComp],
            MethodTag::Qstar => &[CharQCone],
            MethodTag::QQbar => &[CharQ, CharQComp],
            MethodTag::AL => &[CharA, CharL],
            MethodTag::ALQ => &[CharA, CharL, CharQ],
            MethodTag::ALQZ => &[CharA, CharL, CharQ, Zeta],
            MethodTag::GM | MethodTag::GM4 | MethodTag::GMstar => &[],
        }
    }
}

impl FromStr for MethodTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "|L|" => "Q",
            "Zbarth" | "M3" => "PhiAD",
            "M4" => "PhiADJ",
            "M1" => "Zstar",
            "M2" => "TTbar",
            "A*" => "Astar",
            "|L|*" => "Qstar",
            "GM*" => "GMstar",
            other => other,
        };
        ALL_TAGS
            .iter()
            .copied()
            .find(|t| t.name().eq_ignore_ascii_case(alias))
            .ok_or_else(|| Error::UnknownMethod(s.to_string()))
    }
}

impl fmt::Display for MethodTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A method applied either to every graph of the order or to md2 graphs only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MethodSpec {
    pub tag: MethodTag,
    pub md2_only: bool,
}

impl MethodSpec {
    pub fn all(tag: MethodTag) -> Self {
        MethodSpec {
            tag,
            md2_only: false,
        }
    }

    pub fn md2(tag: MethodTag) -> Self {
        MethodSpec { tag, md2_only: true }
    }
}

/// `TAG` or `TAG@md2`.
impl FromStr for MethodSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.strip_suffix("@md2") {
            Some(t) => Ok(MethodSpec::md2(t.parse()?)),
            None => Ok(MethodSpec::all(s.parse()?)),
        }
    }
}

impl fmt::Display for MethodSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.md2_only {
            write!(f, "{}@md2", self.tag)
        } else {
            write!(f, "{}", self.tag)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Component {
    Order,
    Size,
    CharA,
    CharL,
    CharQ,
    CharAComp,
    CharQComp,
    CharACone,
    CharQCone,
    Zeta,
    ZetaComp,
    ZetaCone,
    PhiAd,
    PhiAdj,
}

/// Evaluation points of the fingerprints.
const CHAR_POINTS: [i64; 2] = [3, -2];
const PHI_POINTS: [(i64, i64, i64); 2] = [(3, 2, 1), (-2, 5, -3)];

#[derive(Clone, Copy)]
enum Kind {
    A,
    L,
    Q,
}

fn matrix(g: &Graph, kind: Kind) -> Vec<i64> {
    let n = g.order();
    let sign = if matches!(kind, Kind::L) { -1 } else { 1 };
    let mut m: Vec<i64> = g.adjacency_matrix().iter().map(|v| sign * v).collect();
    if !matches!(kind, Kind::A) {
        for v in 0..n {
            m[v * n + v] = g.degree(v) as i64;
        }
    }
    m
}

/// `det(cI - M)`.
fn char_at(n: usize, m: &[i64], c: i64) -> BigInt {
    let mut e: Vec<i128> = m.iter().map(|&v| -(v as i128)).collect();
    for v in 0..n {
        e[v * n + v] += c as i128;
    }
    det_i128(n, e)
}

/// `det(λI - A + xD + yJ)`.
fn phi_at(g: &Graph, (l, x, y): (i64, i64, i64)) -> BigInt {
    let n = g.order();
    let mut e: Vec<i128> = g
        .adjacency_matrix()
        .iter()
        .map(|&v| y as i128 - v as i128)
        .collect();
    for v in 0..n {
        e[v * n + v] += l as i128 + x as i128 * g.degree(v) as i128;
    }
    det_i128(n, e)
}

fn zeta_fp(g: &Graph) -> String {
    let f = core_fingerprint(&g.prune().graph);
    format!("{},{},{}", f.twice_m_pruned, f.at_minus_one, f.at_minus_two)
}

fn char_fp(g: &Graph, kind: Kind) -> String {
    let m = matrix(g, kind);
    let v: Vec<String> = CHAR_POINTS
        .iter()
        .map(|&c| char_at(g.order(), &m, c).to_string())
        .collect();
    v.join(",")
}

fn char_exact(g: &Graph, kind: Kind) -> IntPoly {
    charpoly_i64(g.order(), &matrix(g, kind))
}

impl Component {
    pub(crate) fn fingerprint(self, g: &Graph) -> String {
        use Component::*;
        match self {
            Order => g.order().to_string(),
            Size => g.size().to_string(),
            CharA => char_fp(g, Kind::A),
            CharL => char_fp(g, Kind::L),
            CharQ => char_fp(g, Kind::Q),
            CharAComp => char_fp(&g.complement(), Kind::A),
            CharQComp => char_fp(&g.complement(), Kind::Q),
            CharACone => char_fp(&g.cone(1), Kind::A),
            CharQCone => char_fp(&g.cone(1), Kind::Q),
            Zeta => zeta_fp(g),
            ZetaComp => zeta_fp(&g.complement()),
            ZetaCone => zeta_fp(&g.cone(1)),
            PhiAd => PHI_POINTS
                .iter()
                .map(|&(l, x, _)| phi_at(g, (l, x, 0)).to_string())
                .collect::<Vec<_>>()
                .join(","),
            PhiAdj => PHI_POINTS
                .iter()
                .map(|&p| phi_at(g, p).to_string())
                .collect::<Vec<_>>()
                .join(","),
        }
    }

    /// The exact invariant and the fingerprint recomputed from it alone.
    fn exact(self, g: &Graph) -> (String, String) {
        use Component::*;
        let from_char = |p: IntPoly| {
            let fp: Vec<String> = CHAR_POINTS.iter().map(|&c| p.eval_i64(c).to_string()).collect();
            (p.to_coeff_string(), fp.join(","))
        };
        let from_zeta = |g: &Graph| {
            let r = ihara_reciprocal_bass(g).reciprocal;
            let fp = format!(
                "{},{},{}",
                r.degree().unwrap_or(0),
                r.eval_i64(-1),
                r.eval_i64(-2)
            );
            (r.to_coeff_string(), fp)
        };
        match self {
            Order | Size => {
                let v = self.fingerprint(g);
                (v.clone(), v)
            }
            CharA => from_char(char_exact(g, Kind::A)),
            CharL => from_char(char_exact(g, Kind::L)),
            CharQ => from_char(char_exact(g, Kind::Q)),
            CharAComp => from_char(char_exact(&g.complement(), Kind::A)),
            CharQComp => from_char(char_exact(&g.complement(), Kind::Q)),
            CharACone => from_char(char_exact(&g.cone(1), Kind::A)),
            CharQCone => from_char(char_exact(&g.cone(1), Kind::Q)),
            Zeta => from_zeta(g),
            ZetaComp => from_zeta(&g.complement()),
            ZetaCone => from_zeta(&g.cone(1)),
            PhiAd => {
                let p = phi_ad(g);
                let fp: Vec<String> = PHI_POINTS
                    .iter()
                    .map(|&(l, x, _)| p.eval(&l.into(), &x.into()).to_string())
                    .collect();
                (p.to_coeff_string(), fp.join(","))
            }
            PhiAdj => {
                let p = phi_adj(g);
                let fp: Vec<String> = PHI_POINTS
                    .iter()
                    .map(|&(l, x, y)| p.eval(&l.into(), &x.into(), &y.into()).to_string())
                    .collect();
                (p.to_coeff_string(), fp.join(","))
            }
        }
    }
}

/// Cheap sieve key: exact decimal integers, a function of the exact key.
pub fn fingerprint(g: &Graph, tag: MethodTag) -> String {
    let parts: Vec<String> = tag.components().iter().map(|c| c.fingerprint(g)).collect();
    parts.join(";")
}

/// Exact invariant serialization: equal keys iff equal invariants.
pub fn invariant_key(g: &Graph, tag: MethodTag) -> String {
    exact_with_fingerprint(g, tag).0
}

/// Exact key plus the fingerprint re-derived from the exact invariants, for
/// the sieve soundness check.
pub(crate) fn exact_with_fingerprint(g: &Graph, tag: MethodTag) -> (String, String) {
    let (keys, fps): (Vec<String>, Vec<String>) =
        tag.components().iter().map(|c| c.exact(g)).unzip();
    (keys.join(";"), fps.join(";"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::decode;
    use crate::iso::{generate_all, Filter};

    #[test]
    fn tags_round_trip() {
        for &t in MethodTag::all() {
            assert_eq!(t.name().parse::<MethodTag>().unwrap(), t);
        }
        assert_eq!("|L|".parse::<MethodTag>().unwrap(), MethodTag::Q);
        assert!("nope".parse::<MethodTag>().is_err());
        let s: MethodSpec = "Z@md2".parse().unwrap();
        assert_eq!(s, MethodSpec::md2(MethodTag::Z));
        assert_eq!(s.to_string(), "Z@md2");
    }

    #[test]
    fn fingerprint_is_a_function_of_the_key() {
        for g in generate_all(6, Filter::All, None) {
            for &t in MethodTag::all().iter().filter(|t| !t.is_switching()) {
                let (_, derived) = exact_with_fingerprint(&g, t);
                assert_eq!(derived, fingerprint(&g, t), "{t} on {g:?}");
            }
        }
    }

    #[test]
    fn key_examples() {
        let (g1, g2) = (decode("HheadXZ").unwrap(), decode("Hhf@eS|").unwrap());
        assert_eq!(
            invariant_key(&g1, MethodTag::PhiADJ),
            invariant_key(&g2, MethodTag::PhiADJ)
        );
        let crab = decode("K??CA?_FEcdk").unwrap();
        let squid = decode("K??CA?_ccWNk").unwrap();
        assert_eq!(
            invariant_key(&crab, MethodTag::T),
            invariant_key(&squid, MethodTag::T)
        );
        // the complements already differ
        assert_ne!(
            invariant_key(&crab, MethodTag::TTbar),
            invariant_key(&squid, MethodTag::TTbar)
        );
        assert_eq!(
            invariant_key(&g1.complement(), MethodTag::Z),
            invariant_key(&g2, MethodTag::Z)
        );
        let k3 = Graph::complete(3);
        let k3p = k3.disjoint_union(&Graph::empty(1));
        let z = |g: &Graph| invariant_key(g, MethodTag::Z);
        assert_eq!(z(&k3), z(&k3p));
        assert_ne!(
            invariant_key(&k3, MethodTag::Zstar),
            invariant_key(&k3p, MethodTag::Zstar)
        );
    }
}
